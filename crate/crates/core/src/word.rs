//! Word algebra: shuffles, deconcatenation, the signed fold that models
//! classical induction, and single-coefficient extraction that never
//! materialises a full shuffle product.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exec::Exec;
use crate::linear::WordSum;
use crate::seg::{Exponent, Word};

/// All interleavings of `a` and `b`, with multiplicity.
pub fn shuffle_words(a: &Word, b: &Word) -> WordSum {
    let mut out = WordSum::zero();
    let mut buf = Vec::with_capacity(a.len() + b.len());
    fn rec(a: &[Exponent], b: &[Exponent], buf: &mut Vec<Exponent>, out: &mut WordSum) {
        if a.is_empty() || b.is_empty() {
            let mut w = buf.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.add_term(Word(w), BigInt::one());
            return;
        }
        buf.push(a[0]);
        rec(&a[1..], b, buf, out);
        buf.pop();
        buf.push(b[0]);
        rec(a, &b[1..], buf, out);
        buf.pop();
    }
    rec(a.letters(), b.letters(), &mut buf, &mut out);
    out
}

/// Bilinear shuffle product of word sums.
pub fn shuffle(x: &WordSum, y: &WordSum) -> WordSum {
    shuffle_exec(x, y, Exec::Sequential)
}

/// Shuffle product with the outer loop spread according to `exec`.
pub fn shuffle_exec(x: &WordSum, y: &WordSum, exec: Exec) -> WordSum {
    let (x, y) = if x.len() >= y.len() { (x, y) } else { (y, x) };
    let left: Vec<(&Word, &BigInt)> = x.iter().collect();
    exec.map_fold(
        &left,
        WordSum::zero(),
        |(u, c)| {
            let mut part = WordSum::zero();
            for (v, d) in y.iter() {
                part.add_assign_scaled(&shuffle_words(u, v), &(*c * d));
            }
            part
        },
        |acc, part| acc.add(&part),
    )
}

pub fn shuffle_all<'a>(xs: impl IntoIterator<Item = &'a WordSum>, exec: Exec) -> WordSum {
    xs.into_iter()
        .fold(WordSum::basis(Word::empty()), |acc, x| shuffle_exec(&acc, x, exec))
}

pub fn concat(x: &WordSum, y: &WordSum) -> WordSum {
    x.bilinear(y, |u, v| WordSum::basis(u.concat(v)))
}

/// `w ↦ Σ_p w[..p] ⊗ w[p..]`.
pub fn deconcatenate(w: &Word) -> Vec<(Word, Word)> {
    (0..=w.len())
        .map(|p| (Word(w.0[..p].to_vec()), Word(w.0[p..].to_vec())))
        .collect()
}

/// The signed fold `Φ(w) = Σ_p w[..p] ⧢ revneg(w[p..])`.
///
/// Classical induction sends a GL word `w` to `Φ(w)`; `Φ` is a shuffle
/// homomorphism and `Φ ∘ revneg = Φ`.
pub fn signed_fold(w: &Word) -> WordSum {
    let mut out = WordSum::zero();
    for (head, tail) in deconcatenate(w) {
        out = out.add(&shuffle_words(&head, &tail.reverse_negate()));
    }
    out
}

pub fn signed_fold_sum(x: &WordSum) -> WordSum {
    x.map_linear(signed_fold)
}

pub fn reverse_negate_sum(x: &WordSum) -> WordSum {
    x.map_keys(Word::reverse_negate)
}

pub fn reverse_sum(x: &WordSum) -> WordSum {
    x.map_keys(Word::reverse)
}

/// Multiset of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LetterCount(BTreeMap<Exponent, i32>);

impl LetterCount {
    pub fn of(letters: &[Exponent]) -> Self {
        let mut m = BTreeMap::new();
        for x in letters {
            *m.entry(*x).or_insert(0) += 1;
        }
        LetterCount(m)
    }

    /// Remove `other`; `false` (and no change) if it is not contained.
    pub fn try_remove(&mut self, other: &LetterCount) -> bool {
        if other.0.iter().any(|(x, n)| self.0.get(x).copied().unwrap_or(0) < *n) {
            return false;
        }
        for (x, n) in &other.0 {
            let e = self.0.get_mut(x).unwrap();
            *e -= n;
            if *e == 0 {
                self.0.remove(x);
            }
        }
        true
    }

    pub fn restore(&mut self, other: &LetterCount) {
        for (x, n) in &other.0 {
            *self.0.entry(*x).or_insert(0) += n;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Number of ways to read `target` as an interleaving of `parts`
/// (each part used exactly once, in order).
pub fn count_interleavings(target: &[Exponent], parts: &[&[Exponent]]) -> BigInt {
    if parts.iter().map(|p| p.len()).sum::<usize>() != target.len() {
        return BigInt::zero();
    }
    let parts: Vec<&[Exponent]> = parts.iter().copied().filter(|p| !p.is_empty()).collect();
    // Layer t holds the progress vectors that consumed target[..t].
    let mut layer: HashMap<Vec<u8>, BigInt> = HashMap::new();
    layer.insert(vec![0; parts.len()], BigInt::one());
    for &letter in target {
        let mut next: HashMap<Vec<u8>, BigInt> = HashMap::with_capacity(layer.len());
        for (state, count) in &layer {
            for (i, part) in parts.iter().enumerate() {
                let pos = state[i] as usize;
                if pos < part.len() && part[pos] == letter {
                    let mut s = state.clone();
                    s[i] += 1;
                    *next.entry(s).or_insert_with(BigInt::zero) += count;
                }
            }
        }
        if next.is_empty() {
            return BigInt::zero();
        }
        layer = next;
    }
    layer.into_values().sum()
}

/// Coefficient of `target` in the shuffle product of `factors`, computed
/// without expanding the product.
pub fn shuffle_coefficient(target: &Word, factors: &[WordSum]) -> BigInt {
    let prepared: Vec<Vec<(&Word, &BigInt, LetterCount)>> = factors
        .iter()
        .map(|f| f.iter().map(|(w, c)| (w, c, LetterCount::of(w.letters()))).collect())
        .collect();
    let mut remaining = LetterCount::of(target.letters());
    let mut chosen: Vec<&[Exponent]> = Vec::with_capacity(factors.len());
    let mut total = BigInt::zero();
    dfs(
        target,
        &prepared,
        &mut remaining,
        &mut chosen,
        BigInt::one(),
        &mut total,
    );
    total
}

fn dfs<'a>(
    target: &Word,
    factors: &'a [Vec<(&'a Word, &'a BigInt, LetterCount)>],
    remaining: &mut LetterCount,
    chosen: &mut Vec<&'a [Exponent]>,
    weight: BigInt,
    total: &mut BigInt,
) {
    let depth = chosen.len();
    if depth == factors.len() {
        if remaining.is_empty() {
            let n = count_interleavings(target.letters(), chosen);
            if !n.is_zero() {
                *total += weight * n;
            }
        }
        return;
    }
    for (w, c, letters) in &factors[depth] {
        if !remaining.try_remove(letters) {
            continue;
        }
        chosen.push(w.letters());
        dfs(target, factors, remaining, chosen, &weight * *c, total);
        chosen.pop();
        remaining.restore(letters);
    }
}
