//! Langlands data, detection words, multiplicity upper bounds and the
//! two-term decomposition rules used by the case verifiers.
//!
//! A detection word of an irreducible `Π` is a word that is guaranteed to
//! occur (with coefficient at least one) in the minimal Jacquet module of
//! `Π`, by Frobenius reciprocity applied to an embedding of `Π`. Its
//! coefficient in the word model of any class `x ≥ Π` then bounds the
//! multiplicity of `Π` in `x`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::classical::{self, classical_word_coefficient, induced, ClassicalElement, Induced, TemperedSymbol};
use crate::error::{precondition, Error, Result};
use crate::gl;
use crate::linear::{GlElement, Tensor};
use crate::seg::{is_decreasing, langlands_sort, CuspidalContext, Exponent, Multisegment, Segment, Word};
use crate::word::LetterCount;

/// `L(δ_1, …, δ_k; T)` with every `δ_i` of positive center, in
/// standard-module order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LanglandsDatum {
    gl_part: Vec<Segment>,
    temp: TemperedSymbol,
}

impl LanglandsDatum {
    pub fn new(segs: Vec<Segment>, temp: TemperedSymbol) -> Result<Self> {
        let gl_part = langlands_sort(&segs)?;
        if let Some(s) = gl_part.iter().find(|s| s.center() <= Exponent::ZERO) {
            return Err(precondition(
                "LanglandsDatum",
                format!("segment {s} has non-positive center"),
            ));
        }
        Ok(LanglandsDatum { gl_part, temp })
    }

    pub fn gl_part(&self) -> &[Segment] {
        &self.gl_part
    }

    pub fn temp(&self) -> &TemperedSymbol {
        &self.temp
    }

    /// Total GL degree including the tempered part.
    pub fn degree(&self) -> usize {
        self.gl_part.iter().map(Segment::len).sum::<usize>() + self.temp.degree()
    }

    /// Multiset of absolute values of the cuspidal support.
    pub fn abs_support(&self, ctx: &CuspidalContext) -> Vec<Exponent> {
        let mut pts: Vec<Exponent> = self.gl_part.iter().flat_map(|s| s.points()).collect();
        match &self.temp {
            TemperedSymbol::TauPm(s, _) | TemperedSymbol::DeltaPm(s, _) => pts.extend(s.points()),
            t => pts.extend(t.steinberg_segment(ctx).expect("non-opaque").points()),
        }
        let mut abs: Vec<Exponent> = pts.into_iter().map(Exponent::abs).collect();
        abs.sort();
        abs
    }

    /// The standard module `δ_1 × … × δ_k ⋊ T` containing `L` as quotient.
    pub fn standard_class(&self) -> Result<ClassicalElement> {
        if self.temp.is_opaque() {
            return Err(Error::OpaqueSymbol(self.temp.to_string()));
        }
        Ok(induced(Multisegment::new(self.gl_part.clone()), self.temp.clone()))
    }

    pub fn render(&self, ctx: &CuspidalContext) -> String {
        let segs: Vec<String> = self.gl_part.iter().map(|s| short_segment(*s)).collect();
        format!("L({};{})", segs.join(","), self.temp.render_in(ctx))
    }
}

/// `[x]` for a single point, `[lo,hi]` otherwise.
pub fn short_segment(s: Segment) -> String {
    if s.len() == 1 {
        format!("[{}]", s.lo())
    } else {
        s.to_string()
    }
}

/// An irreducible subquotient `L(Δ_1, …, Δ_k; δ(Δ_{k+1}; σ))` of
/// `ν^{α+n}ρ × … × ν^αρ ⋊ σ`. `temp_seg` is empty for `σ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubquotientParam {
    segs: Vec<Segment>,
    temp_seg: Segment,
}

impl SubquotientParam {
    /// Validates against `α`: the segments partition `{α, …, α+n}`, the GL
    /// part is non-empty segments in decreasing order, and a non-empty
    /// tempered segment starts at `α`.
    pub fn new(segs: Vec<Segment>, temp_seg: Segment, ctx: &CuspidalContext) -> Result<Self> {
        let p = SubquotientParam { segs, temp_seg };
        p.validate(ctx)?;
        Ok(p)
    }

    pub(crate) fn new_unchecked(segs: Vec<Segment>, temp_seg: Segment) -> Self {
        SubquotientParam { segs, temp_seg }
    }

    pub fn validate(&self, ctx: &CuspidalContext) -> Result<()> {
        let bad = |c: String| Err(precondition("SubquotientParam", c));
        if self.segs.iter().any(Segment::is_empty) {
            return bad("GL segments must be non-empty".into());
        }
        if !is_decreasing(&self.segs) {
            return bad("GL segments must be decreasing".into());
        }
        if !self.temp_seg.is_empty() && self.temp_seg.lo() != ctx.alpha {
            return bad(format!(
                "tempered segment {} must start at {}",
                self.temp_seg, ctx.alpha
            ));
        }
        let mut pts: Vec<Exponent> = self.all_segments().flat_map(|s| s.points()).collect();
        pts.sort();
        let expect: Vec<Exponent> = (0..pts.len() as i64).map(|i| ctx.alpha.shift(i)).collect();
        if pts.is_empty() || pts != expect {
            return bad(format!("segments of {self} must cover alpha..alpha+n exactly once"));
        }
        Ok(())
    }

    pub fn segs(&self) -> &[Segment] {
        &self.segs
    }

    pub fn temp_seg(&self) -> Segment {
        self.temp_seg
    }

    fn all_segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.segs
            .iter()
            .copied()
            .chain((!self.temp_seg.is_empty()).then_some(self.temp_seg))
    }

    /// `n` with support `{α, …, α+n}`.
    pub fn n(&self) -> usize {
        self.all_segments().map(|s| s.len()).sum::<usize>() - 1
    }

    pub fn temp_symbol(&self) -> TemperedSymbol {
        TemperedSymbol::steinberg(self.temp_seg.len() as i64 - 1)
    }

    pub fn to_datum(&self) -> Result<LanglandsDatum> {
        LanglandsDatum::new(self.segs.clone(), self.temp_symbol())
    }
}

impl fmt::Display for SubquotientParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let segs: Vec<String> = self.segs.iter().map(|s| short_segment(*s)).collect();
        let temp = if self.temp_seg.is_empty() {
            "sigma".to_string()
        } else {
            format!("d({};sigma)", short_segment(self.temp_seg))
        };
        if segs.is_empty() {
            write!(f, "{temp}")
        } else {
            write!(f, "L({};{temp})", segs.join(","))
        }
    }
}

fn gl_prefix(segs: &[Segment]) -> Word {
    segs.iter()
        .fold(Word::empty(), |w, s| w.concat(&s.contragredient().descending_word()))
}

/// Detection word of `L(δ_1, …, δ_k; T)`: the contragredient segments'
/// descending words in standard-module order, then the leading word of `T`.
pub fn detection_word(l: &LanglandsDatum, ctx: &CuspidalContext) -> Result<Word> {
    let tail = classical::word_model_tempered(l.temp(), ctx)?;
    let lead = tail.keys().next().cloned().unwrap_or_default();
    Ok(gl_prefix(l.gl_part()).concat(&lead))
}

/// Detection word, with an opaque `±` part replaced by the descending word
/// of its segment. Such a word detects the pair sum, not each member.
pub fn surrogate_word(l: &LanglandsDatum, ctx: &CuspidalContext) -> Word {
    match l.temp() {
        TemperedSymbol::TauPm(s, _) | TemperedSymbol::DeltaPm(s, _) => {
            gl_prefix(l.gl_part()).concat(&s.descending_word())
        }
        _ => detection_word(l, ctx).expect("non-opaque"),
    }
}

/// Detection word of the GL irreducible `L(a)`: descending words in
/// increasing-center order.
pub fn gl_detection_word(a: &[Segment]) -> Result<Word> {
    let mut order = langlands_sort(a)?;
    order.reverse();
    Ok(order.iter().fold(Word::empty(), |w, s| w.concat(&s.descending_word())))
}

/// Detection word of the Zelevinsky irreducible `Z(a)`: ascending words in
/// decreasing-center order.
pub fn zelevinsky_detection_word(a: &[Segment]) -> Result<Word> {
    let order = langlands_sort(a)?;
    Ok(order.iter().fold(Word::empty(), |w, s| w.concat(&s.ascending_word())))
}

/// Coefficient of `target` in the word model of `x`: an upper bound for the
/// multiplicity in `x` of any irreducible detected by `target`.
pub fn mult_upper_bound(target: &Word, x: &ClassicalElement, ctx: &CuspidalContext) -> Result<BigInt> {
    classical_word_coefficient(target, x, ctx)
}

pub fn mult_upper_bound_gl(target: &Word, x: &GlElement) -> BigInt {
    gl::word_coefficient(target, x)
}

/// The bound for a tensor pattern read directly as the coefficient of the
/// concatenated word `left ‖ right` in the word model of `x`.
pub fn concatenated_bound(left: &Word, right: &Word, x: &ClassicalElement, ctx: &CuspidalContext) -> Result<BigInt> {
    classical_word_coefficient(&left.concat(right), x, ctx)
}

struct SplitTerm {
    left: Multisegment,
    right_gl: Multisegment,
    right_temp: Option<TemperedSymbol>,
    coeff: BigInt,
    left_letters: LetterCount,
    right_abs: LetterCount,
}

fn abs_letters(pts: &[Exponent]) -> LetterCount {
    let v: Vec<Exponent> = pts.iter().map(|x| x.abs()).collect();
    LetterCount::of(&v)
}

fn split_terms_of_segment(s: Segment) -> Vec<SplitTerm> {
    gl::twisted_mstar(&gl::delta(s))
        .iter()
        .map(|(Tensor(l, r), c)| SplitTerm {
            left_letters: LetterCount::of(&l.support()),
            right_abs: abs_letters(&r.support()),
            left: l.clone(),
            right_gl: r.clone(),
            right_temp: None,
            coeff: c.clone(),
        })
        .collect()
}

fn split_terms_of_tempered(t: &TemperedSymbol, ctx: &CuspidalContext) -> Result<Vec<SplitTerm>> {
    Ok(classical::mu_star_tempered(t, ctx)?
        .iter()
        .map(|(Tensor(l, Induced { gl: v, temp }), c)| {
            let mut right_pts = v.support();
            right_pts.extend(temp.steinberg_segment(ctx).expect("non-opaque").points());
            SplitTerm {
                left_letters: LetterCount::of(&l.support()),
                right_abs: abs_letters(&right_pts),
                left: l.clone(),
                right_gl: v.clone(),
                right_temp: Some(temp.clone()),
                coeff: c.clone(),
            }
        })
        .collect())
}

/// `Σ_{u ⊗ v ∈ μ*(x), deg u = |left|} coeff_left(u) · coeff_right(v)`.
///
/// Bounds the multiplicity of `Π_1 ⊗ Π_2` in `μ*(x)` whenever `left`
/// detects `Π_1` and `right` detects `Π_2`. `μ*` is expanded one factor at
/// a time and pruned by support, so the full product is never formed.
pub fn tensor_mult_upper_bound(
    left: &Word,
    right: &Word,
    x: &ClassicalElement,
    ctx: &CuspidalContext,
) -> Result<BigInt> {
    let mut total = BigInt::zero();
    let left_target = LetterCount::of(left.letters());
    let right_target = abs_letters(right.letters());
    for (b, c) in x.iter() {
        if b.degree() != left.len() + right.len() {
            continue;
        }
        let mut factors: Vec<Vec<SplitTerm>> = b.gl.segments().iter().map(|s| split_terms_of_segment(*s)).collect();
        factors.push(split_terms_of_tempered(&b.temp, ctx)?);
        let mut search = SplitSearch {
            left,
            right,
            ctx,
            factors: &factors,
            left_rest: left_target.clone(),
            right_rest: right_target.clone(),
            total: BigInt::zero(),
        };
        search.run(0, Vec::new(), BigInt::one())?;
        total += c * search.total;
    }
    Ok(total)
}

struct SplitSearch<'a> {
    left: &'a Word,
    right: &'a Word,
    ctx: &'a CuspidalContext,
    factors: &'a [Vec<SplitTerm>],
    left_rest: LetterCount,
    right_rest: LetterCount,
    total: BigInt,
}

impl<'a> SplitSearch<'a> {
    fn run(&mut self, depth: usize, picked: Vec<&'a SplitTerm>, weight: BigInt) -> Result<()> {
        if depth == self.factors.len() {
            if !(self.left_rest.is_empty() && self.right_rest.is_empty()) {
                return Ok(());
            }
            let u = picked.iter().fold(Multisegment::unit(), |m, t| m.add(&t.left));
            let v = picked.iter().fold(Multisegment::unit(), |m, t| m.add(&t.right_gl));
            let temp = picked
                .iter()
                .find_map(|t| t.right_temp.clone())
                .unwrap_or(TemperedSymbol::Cuspidal);
            let cl = gl::word_coefficient(self.left, &gl::standard(&u));
            if cl.is_zero() {
                return Ok(());
            }
            let cr = classical_word_coefficient(self.right, &induced(v, temp), self.ctx)?;
            self.total += weight * cl * cr;
            return Ok(());
        }
        for t in &self.factors[depth] {
            if !self.left_rest.try_remove(&t.left_letters) {
                continue;
            }
            if self.right_rest.try_remove(&t.right_abs) {
                let mut next = picked.clone();
                next.push(t);
                let r = self.run(depth + 1, next, &weight * &t.coeff);
                self.right_rest.restore(&t.right_abs);
                r?;
            }
            self.left_rest.restore(&t.left_letters);
        }
        Ok(())
    }
}

/// `L(a) × δ(Δ_k) = L(a, Δ_k) + L(a_1, Δ_{k-1} ∪ Δ_k)` for pairwise
/// disjoint segments where only the last segment of `a` is linked to `Δ_k`;
/// returns the GL parameters on the right (one of them when unlinked).
pub fn two_term_gl(a: &[Segment], dk: Segment) -> Result<Vec<Vec<Segment>>> {
    let fail = |c: &str| Err(precondition("two_term_gl", c.to_string()));
    if a.is_empty() {
        return fail("a must be non-empty");
    }
    if dk.is_empty() || a.iter().any(Segment::is_empty) {
        return fail("segments must be non-empty");
    }
    let mut all = a.to_vec();
    all.push(dk);
    if !is_decreasing(&all) {
        return fail("(a, dk) must be decreasing");
    }
    for (i, s) in all.iter().enumerate() {
        if all[i + 1..].iter().any(|t| !s.intersection(t).is_empty()) {
            return fail("segments must be pairwise disjoint");
        }
    }
    let (last, head) = a.split_last().unwrap();
    if head.iter().any(|s| s.linked(&dk)) {
        return fail("only the last segment of a may be linked to dk");
    }
    let mut out = vec![langlands_sort(&all)?];
    if last.linked(&dk) {
        let mut other = head.to_vec();
        other.push(last.union(&dk).expect("linked segments have a segment union"));
        out.push(langlands_sort(&other)?);
    }
    Ok(out)
}

/// Input of the two-constituent rule for `L(a + (Δ_k)) ⋊ …`.
///
/// `upper = a + (Δ_k)` covers `{α+cut+1, …, α+n}`; the lower part covers
/// `{α, …, α+cut}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoConstituent {
    /// `L(a+(Δ_k)) ⋊ L((Δ_{k+1}) + tail; δ(Δ_l; σ))`, lower part
    /// `Δ_{k+1}, tail…, Δ_l`.
    WithTail {
        upper: Vec<Segment>,
        next: Segment,
        tail: Vec<Segment>,
        last: Segment,
    },
    /// `L(a+(Δ_k)) ⋊ δ(Δ_{k+1}; σ)`.
    Tempered { upper: Vec<Segment>, next: Segment },
}

/// The two irreducible constituents of the product described by `input`.
pub fn two_constituent_decompose(
    input: &TwoConstituent,
    n: usize,
    cut: usize,
    ctx: &CuspidalContext,
) -> Result<[SubquotientParam; 2]> {
    let fail = |c: String| Err(precondition("two_constituent_decompose", c));
    if n < 1 || cut > n - 1 {
        return fail(format!("need n >= 1 and 0 <= cut <= n-1, got n={n}, cut={cut}"));
    }
    let (upper, lower, last) = match input {
        TwoConstituent::WithTail {
            upper,
            next,
            tail,
            last,
        } => {
            if next.is_empty() || tail.iter().any(Segment::is_empty) {
                return fail("Δ_{k+1} and the tail must be non-empty".into());
            }
            let mut lower = vec![*next];
            lower.extend(tail.iter().copied());
            (upper, lower, *last)
        }
        TwoConstituent::Tempered { upper, next } => (upper, Vec::new(), *next),
    };
    if upper.is_empty() || upper.iter().any(Segment::is_empty) || !is_decreasing(upper) {
        return fail("a + (Δ_k) must be non-empty, decreasing, non-empty segments".into());
    }
    let covers = |segs: &[Segment], from: usize, to: usize| {
        let mut pts: Vec<Exponent> = segs.iter().flat_map(|s| s.points()).collect();
        pts.sort();
        pts == (from..=to).map(|i| ctx.alpha.shift(i as i64)).collect::<Vec<_>>()
    };
    if !covers(upper, cut + 1, n) {
        return fail(format!(
            "a + (Δ_k) must cover alpha+{}..alpha+{n} exactly once",
            cut + 1
        ));
    }
    let mut lower_all = lower.clone();
    if !last.is_empty() {
        lower_all.push(last);
    }
    if !covers(&lower_all, 0, cut) || !is_decreasing(&lower_all) {
        return fail(format!(
            "lower segments must be decreasing and cover alpha..alpha+{cut} exactly once"
        ));
    }
    let (a, dk) = upper.split_at(upper.len() - 1);
    let dk = dk[0];
    match input {
        TwoConstituent::WithTail { next, tail, .. } => {
            let mut first = upper.clone();
            first.extend(lower.iter().copied());
            let mut second = a.to_vec();
            second.push(
                dk.union(next)
                    .ok_or_else(|| precondition("two_constituent_decompose", "Δ_k ∪ Δ_{k+1} is not a segment"))?,
            );
            second.extend(tail.iter().copied());
            Ok([
                SubquotientParam::new(first, last, ctx)?,
                SubquotientParam::new(second, last, ctx)?,
            ])
        }
        TwoConstituent::Tempered { next, .. } => {
            if next.is_empty() {
                return fail("Δ_{k+1} must be non-empty".into());
            }
            let union = dk
                .union(next)
                .ok_or_else(|| precondition("two_constituent_decompose", "Δ_k ∪ Δ_{k+1} is not a segment"))?;
            Ok([
                SubquotientParam::new(upper.clone(), *next, ctx)?,
                SubquotientParam::new(a.to_vec(), union, ctx)?,
            ])
        }
    }
}

/// `L(a, Δ_k) ⋊ σ = L(a + (Δ_k); σ) + L(a; δ(Δ_k; σ))` for `Δ_k` starting at `α`.
pub fn quotient_rewrite_decompose(a: &[Segment], dk: Segment, ctx: &CuspidalContext) -> Result<[SubquotientParam; 2]> {
    if dk.is_empty() || dk.lo() != ctx.alpha {
        return Err(precondition(
            "quotient_rewrite_decompose",
            format!("Δ_k must start at {}", ctx.alpha),
        ));
    }
    let mut first = a.to_vec();
    first.push(dk);
    Ok([
        SubquotientParam::new(first, Segment::EMPTY, ctx)?,
        SubquotientParam::new(a.to_vec(), dk, ctx)?,
    ])
}

/// All irreducible subquotients of `ν^{α+n}ρ × … × ν^αρ ⋊ σ`, sorted by
/// their text form.
pub fn subquotient_enumerate(n: usize, ctx: &CuspidalContext) -> Vec<SubquotientParam> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        // bit i set: α+i and α+i+1 lie in one segment
        let mut blocks = Vec::new();
        let mut start = 0i64;
        for i in 0..=n {
            if i == n || mask >> i & 1 == 0 {
                blocks.push(Segment::new(ctx.alpha.shift(start), ctx.alpha.shift(i as i64)).expect("block"));
                start = i as i64 + 1;
            }
        }
        blocks.reverse();
        let lowest = *blocks.last().unwrap();
        out.push(SubquotientParam::new(blocks.clone(), Segment::EMPTY, ctx).expect("valid by construction"));
        blocks.pop();
        out.push(SubquotientParam::new(blocks, lowest, ctx).expect("valid by construction"));
    }
    out.sort_by_key(|p| p.to_string());
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Case {
    A,
    B,
    C,
    Exception,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::A => "A",
            Case::B => "B",
            Case::C => "C",
            Case::Exception => "EXCEPTION",
        };
        f.pad(s)
    }
}

/// `EXCEPTION` for the generalized Steinberg and its Aubert dual; `A`/`B`
/// for `Δ_{k+1} = ∅` with `card(Δ_k) > 1` / `= 1`; `C` for `Δ_{k+1} ≠ ∅`.
pub fn classify_case(g: &SubquotientParam) -> Case {
    let steinberg = g.segs().is_empty();
    let dual_steinberg = g.temp_seg().is_empty() && g.segs().iter().all(|s| s.len() == 1);
    if steinberg || dual_steinberg {
        Case::Exception
    } else if !g.temp_seg().is_empty() {
        Case::C
    } else if g.segs().last().unwrap().len() > 1 {
        Case::A
    } else {
        Case::B
    }
}

/// An imported fact the verifier relies on but does not recompute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Axiom {
    pub id: &'static str,
    pub statement: &'static str,
}

pub const AXIOMS: &[Axiom] = &[
    Axiom {
        id: "tau-split",
        statement: "for a symmetric segment [-b,b] with b in alpha+Z>=0, delta([-b,b]) |x sigma is the sum of two inequivalent irreducibles tau(+) and tau(-)",
    },
    Axiom {
        id: "delta-pm",
        statement: "for [-b,c] with b in alpha+Z>=0 and b < c, delta([-b,c]) |x sigma has exactly two irreducible subrepresentations delta(+) and delta(-), inequivalent and square integrable",
    },
    Axiom {
        id: "langlands-containment",
        statement: "if T is an irreducible subquotient of pi |x sigma with pi tempered, then L(a;T) is a subquotient of L(a) x pi |x sigma",
    },
    Axiom {
        id: "standard-exponents",
        statement: "every irreducible subquotient of a standard module other than its Langlands quotient has strictly smaller sum of GL exponents",
    },
    Axiom {
        id: "frobenius-embedding",
        statement: "an irreducible embedded in an induced representation has the inducing datum in its Jacquet module, so its detection word occurs with coefficient >= 1",
    },
    Axiom {
        id: "derivative-determines",
        statement: "an irreducible GL representation is determined by its cuspidal support together with its highest derivative",
    },
    Axiom {
        id: "two-constituent-rules",
        statement: "the two-term GL product rule and the classical two-constituent rules list every irreducible constituent of the products they decompose, each once",
    },
    Axiom {
        id: "aubert-duality",
        statement: "the Aubert involution sends irreducibles to irreducibles up to sign, commutes with induction up to the involution on the GL side, and is compatible with mu* after contragredient on the GL factor",
    },
];

pub fn axiom(id: &str) -> Option<&'static Axiom> {
    AXIOMS.iter().find(|a| a.id == id)
}
