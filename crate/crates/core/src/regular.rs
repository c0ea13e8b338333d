//! Regular (multiplicity-free) supports, where irreducible constituents are
//! read off from relative letter positions.
//!
//! On a GL support of distinct points, the irreducible `L(d)` has as word
//! model every arrangement of the support in which, for each pair of
//! consecutive points `x, x+1`, the letter `x+1` comes first exactly when both
//! points lie in one segment of `d`. On the classical side the same rule runs
//! on signed letters, plus one bit for the sign of the lowest point `α`.
//! Reversing words (GL) or negating letters (classical) complements every
//! relation, which is how both involutions act on regular supports.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::langlands::SubquotientParam;
use crate::linear::WordSum;
use crate::seg::{CuspidalContext, Exponent, Multisegment, Segment, Word};

fn permutations(items: &[Exponent]) -> Vec<Vec<Exponent>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn distinct_support(d: &Multisegment) -> Result<Vec<Exponent>> {
    let pts = d.support();
    if pts.windows(2).any(|w| w[0] == w[1]) {
        return Err(precondition("regular support", format!("{d} repeats a point")));
    }
    Ok(pts)
}

fn same_segment(d: &Multisegment, x: Exponent, y: Exponent) -> bool {
    d.segments().iter().any(|s| s.contains(x) && s.contains(y))
}

/// Word model of the irreducible `L(d)` for `d` with distinct points.
pub fn gl_irreducible_words(d: &Multisegment) -> Result<WordSum> {
    let pts = distinct_support(d)?;
    let adjacent: Vec<(Exponent, Exponent, bool)> = pts
        .windows(2)
        .filter(|w| w[0].shift(1) == w[1])
        .map(|w| (w[0], w[1], same_segment(d, w[0], w[1])))
        .collect();
    let mut out = WordSum::zero();
    for p in permutations(&pts) {
        let pos = |x: Exponent| p.iter().position(|y| *y == x).unwrap();
        if adjacent.iter().all(|&(x, y, same)| (pos(y) < pos(x)) == same) {
            out.add_term(Word(p), BigInt::one());
        }
    }
    Ok(out)
}

/// Dual of `L(d)` on a regular support: complement the same-segment relation.
pub fn gl_complement_dual(d: &Multisegment) -> Result<Multisegment> {
    let pts = distinct_support(d)?;
    let mut segs = Vec::new();
    let mut start = 0;
    for i in 1..=pts.len() {
        let joined = i < pts.len() && pts[i - 1].shift(1) == pts[i] && !same_segment(d, pts[i - 1], pts[i]);
        if !joined {
            segs.push(Segment::new(pts[start], pts[i - 1])?);
            start = i;
        }
    }
    Ok(Multisegment::new(segs))
}

/// The Mœglin–Waldspurger algorithm for `L(d) ↦ L(d)^t` on any multisegment.
pub fn mw_dual(d: &Multisegment) -> Multisegment {
    let mut rest: Vec<Segment> = d.segments().to_vec();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let top = rest.iter().map(Segment::hi).max().unwrap();
        // Start from the shortest segment ending at `top`, then walk down
        // one end at a time, each time taking the shortest segment that
        // strictly precedes the previous one.
        let mut chain: Vec<usize> = Vec::new();
        let mut end = top;
        let mut prev_lo: Option<Exponent> = None;
        loop {
            let pick = rest
                .iter()
                .enumerate()
                .filter(|(i, s)| !chain.contains(i) && s.hi() == end && prev_lo.is_none_or(|lo| s.lo() < lo))
                .max_by_key(|(_, s)| s.lo())
                .map(|(i, _)| i);
            match pick {
                Some(i) => {
                    prev_lo = Some(rest[i].lo());
                    chain.push(i);
                    end = end.shift(-1);
                }
                None => break,
            }
        }
        out.push(Segment::new(end.shift(1), top).expect("chain is consecutive"));
        for &i in &chain {
            rest[i] = rest[i].minus().expect("non-empty");
        }
        rest.retain(|s| !s.is_empty());
    }
    Multisegment::new(out)
}

/// One bit per pair of consecutive points `α+i, α+i+1` (`true` = same
/// segment) and one bit for the lowest point (`true` = it sits in the
/// tempered segment).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignVector {
    pub same: Vec<bool>,
    pub tempered: bool,
}

impl SignVector {
    pub fn negate(&self) -> SignVector {
        SignVector {
            same: self.same.iter().map(|b| !b).collect(),
            tempered: !self.tempered,
        }
    }
}

pub fn signs_of_param(p: &SubquotientParam, ctx: &CuspidalContext) -> SignVector {
    let n = p.n();
    let all: Vec<Segment> = p.segs().iter().copied().chain([p.temp_seg()]).collect();
    let same = (0..n)
        .map(|i| {
            let (x, y) = (ctx.alpha.shift(i as i64), ctx.alpha.shift(i as i64 + 1));
            all.iter().any(|s| s.contains(x) && s.contains(y))
        })
        .collect();
    SignVector {
        same,
        tempered: p.temp_seg().contains(ctx.alpha),
    }
}

pub fn param_of_signs(s: &SignVector, ctx: &CuspidalContext) -> SubquotientParam {
    let mut blocks: Vec<Segment> = Vec::new();
    let mut start = 0i64;
    for i in 0..=s.same.len() {
        if i == s.same.len() || !s.same[i] {
            blocks.push(Segment::new(ctx.alpha.shift(start), ctx.alpha.shift(i as i64)).expect("block"));
            start = i as i64 + 1;
        }
    }
    let temp = if s.tempered { blocks.remove(0) } else { Segment::EMPTY };
    blocks.reverse();
    SubquotientParam::new_unchecked(blocks, temp)
}

/// Sign vector read from one signed arrangement of `{α, …, α+n}`.
pub fn signs_of_word(w: &Word, ctx: &CuspidalContext) -> Result<SignVector> {
    let n = w.len() as i64 - 1;
    let abs: BTreeSet<Exponent> = w.letters().iter().map(|x| x.abs()).collect();
    let expected: BTreeSet<Exponent> = (0..=n).map(|i| ctx.alpha.shift(i)).collect();
    if n < 0 || abs != expected {
        return Err(precondition(
            "signs_of_word",
            format!("{w} is not a signed arrangement of the support"),
        ));
    }
    let pos = |x: Exponent| w.letters().iter().position(|y| y.abs() == x).unwrap();
    let same = (0..n)
        .map(|i| {
            let (p, q) = {
                let (a, b) = (pos(ctx.alpha.shift(i)), pos(ctx.alpha.shift(i + 1)));
                (a.min(b), a.max(b))
            };
            let (yp, yq) = (w.letters()[p], w.letters()[q]);
            let v = if (yp.twice() > 0) == (yq.twice() > 0) {
                yp.twice() - yq.twice()
            } else {
                yp.twice() + yq.twice()
            };
            v > 0
        })
        .collect();
    let tempered = w.letters()[pos(ctx.alpha)].twice() > 0;
    Ok(SignVector { same, tempered })
}

/// The Aubert dual of a subquotient of `ν^{α+n}ρ × … × ν^αρ ⋊ σ`.
pub fn aubert_dual_param(p: &SubquotientParam, ctx: &CuspidalContext) -> SubquotientParam {
    param_of_signs(&signs_of_param(p, ctx).negate(), ctx)
}

/// Every signed arrangement with the given sign vector: the word model of
/// the corresponding irreducible subquotient.
pub fn classical_irreducible_words(s: &SignVector, ctx: &CuspidalContext) -> WordSum {
    let n = s.same.len() as i64;
    let pts: Vec<Exponent> = (0..=n).map(|i| ctx.alpha.shift(i)).collect();
    let mut out = WordSum::zero();
    for p in permutations(&pts) {
        for mask in 0u64..(1 << pts.len()) {
            let w = Word(
                p.iter()
                    .enumerate()
                    .map(|(i, x)| if mask >> i & 1 == 1 { -*x } else { *x })
                    .collect(),
            );
            if signs_of_word(&w, ctx).is_ok_and(|t| t == *s) {
                out.add_term(w, BigInt::one());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl;
    use crate::linalg::solve_integral;

    fn seg(s: &str) -> Segment {
        Segment::parse(s).unwrap()
    }

    fn ms(v: &[&str]) -> Multisegment {
        Multisegment::new(v.iter().map(|s| seg(s)))
    }

    #[test]
    fn regular_words_of_small_cases() {
        let d = gl_irreducible_words(&ms(&["[0,1]"])).unwrap();
        assert_eq!(d, WordSum::basis(Word::parse("(1,0)").unwrap()));
        let z = gl_irreducible_words(&ms(&["[0,0]", "[1,1]"])).unwrap();
        assert_eq!(z, WordSum::basis(Word::parse("(0,1)").unwrap()));
        // λ([0,1],[2]) = L([0,1],[2]) + δ([0,2])
        let l = gl_irreducible_words(&ms(&["[0,1]", "[2,2]"])).unwrap();
        let std = gl::word_model(&gl::standard(&ms(&["[0,1]", "[2,2]"])));
        assert_eq!(l.add(&gl::word_model(&gl::delta(seg("[0,2]")))), std);
        assert!(gl_irreducible_words(&ms(&["[0,1]", "[1,1]"])).is_err());
    }

    #[test]
    fn mw_examples() {
        assert_eq!(mw_dual(&ms(&["[0,1]"])), ms(&["[0,0]", "[1,1]"]));
        assert_eq!(mw_dual(&ms(&["[0,0]", "[1,1]"])), ms(&["[0,1]"]));
        assert_eq!(mw_dual(&ms(&["[1,1]", "[1,1]"])), ms(&["[1,1]", "[1,1]"]));
        let d = ms(&["[0,1]", "[1,2]"]);
        assert_eq!(mw_dual(&mw_dual(&d)), d);
    }

    /// All multisegments with the given distinct points, as interval partitions.
    fn partitions_of(points: &[Exponent]) -> Vec<Multisegment> {
        let mut out = vec![Vec::<Segment>::new()];
        for (i, &x) in points.iter().enumerate() {
            let mut next = Vec::new();
            for segs in out {
                let mut fresh = segs.clone();
                fresh.push(Segment::point(x));
                next.push(fresh);
                if i > 0 && points[i - 1].shift(1) == x {
                    let mut ext = segs.clone();
                    let last = ext.pop().unwrap();
                    ext.push(Segment::new(last.lo(), x).unwrap());
                    next.push(ext);
                }
            }
            out = next;
        }
        out.into_iter().map(Multisegment::new).collect()
    }

    #[test]
    fn duals_agree_with_involution_ring_on_small_regular_supports() {
        let supports: Vec<Vec<i64>> = vec![
            vec![0],
            vec![0, 1],
            vec![0, 1, 2],
            vec![-1, 0, 2],
            vec![0, 1, 2, 3],
            vec![-3, -2, 0, 1],
            vec![-1, 0, 1, 3],
        ];
        for pts in supports {
            let pts: Vec<Exponent> = pts.into_iter().map(Exponent::int).collect();
            let basis = partitions_of(&pts);
            let columns: Vec<WordSum> = basis.iter().map(gl::word_model_standard).collect();
            let expand = |d: &Multisegment| {
                let words = gl_irreducible_words(d).unwrap();
                let x = solve_integral(&columns, &words).expect("irreducible lies in the standard span");
                crate::GlElement::from_terms(basis.iter().cloned().zip(x))
            };
            for d in &basis {
                let dual = gl_complement_dual(d).unwrap();
                assert_eq!(mw_dual(d), dual, "MW vs complement on {d}");
                let image = gl::involution_ring(&expand(d)).unwrap();
                assert_eq!(image, expand(&dual), "involution on L({d})");
            }
        }
    }

    #[test]
    fn sign_vectors_biject_with_params() {
        let ctx = CuspidalContext::new(Exponent::int(1)).unwrap();
        for n in 1..=3usize {
            let mut seen = BTreeSet::new();
            for mask in 0u32..(1 << (n + 1)) {
                let s = SignVector {
                    same: (0..n).map(|i| mask >> i & 1 == 1).collect(),
                    tempered: mask >> n & 1 == 1,
                };
                let p = param_of_signs(&s, &ctx);
                assert_eq!(signs_of_param(&p, &ctx), s);
                assert!(seen.insert(p.to_string()));
                let dual = aubert_dual_param(&p, &ctx);
                assert_eq!(aubert_dual_param(&dual, &ctx), p);
            }
        }
    }

    #[test]
    fn classical_words_partition_the_full_induced_class() {
        let ctx = CuspidalContext::new(Exponent::from_twice(1)).unwrap();
        let n = 2;
        let mut total = WordSum::zero();
        for mask in 0u32..(1 << (n + 1)) {
            let s = SignVector {
                same: (0..n).map(|i| mask >> i & 1 == 1).collect(),
                tempered: mask >> n & 1 == 1,
            };
            total = total.add(&classical_irreducible_words(&s, &ctx));
        }
        let full = crate::classical::word_model_classical(
            &crate::classical::induced(
                Multisegment::new((0..=n as i64).map(|i| Segment::point(ctx.alpha.shift(i)))),
                crate::classical::TemperedSymbol::Cuspidal,
            ),
            &ctx,
        )
        .unwrap();
        assert_eq!(total, full);
    }
}
