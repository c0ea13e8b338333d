//! The `R`-comodule `R(S)` of a classical tower: induced classes
//! `λ(d) ⋊ T`, the comultiplication `μ*`, and the signed-shuffle word model.
//!
//! `μ*(π ⋊ T) = M*(π) ⋊ μ*(T)`. On words, classical induction from a GL
//! word `w` produces the signed fold `Φ(w)` shuffled with the word model of
//! `T`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::gl;
use crate::linear::{Basis, Combination, GlElement, Tensor, WordSum};
use crate::seg::{CuspidalContext, Exponent, Multisegment, Segment, Word};
use crate::word::{concat, shuffle, shuffle_coefficient, signed_fold};

/// Sign of an opaque `±` constituent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Tempered (or, for the dual Steinberg, Aubert-dual) classes on the
/// classical side. Indices are relative to `α` of the ambient context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TemperedSymbol {
    /// The cuspidal `σ`.
    Cuspidal,
    /// `δ([α, α+k]; σ)`.
    GenSteinberg(u32),
    /// `L(ν^{α+k}ρ, …, ν^αρ; σ)`, the Aubert dual of `GenSteinberg(k)`.
    DualSteinberg(u32),
    /// `τ((Δ_u)_±; σ)` for a symmetric `Δ_u`; only the pair sum is known.
    TauPm(Segment, Sign),
    /// `δ(Δ_±; σ)`; only an upper bound for the pair sum is known.
    DeltaPm(Segment, Sign),
}

impl TemperedSymbol {
    /// `δ([α, α+k]; σ)` with `k = -1` meaning `σ`.
    pub fn steinberg(k: i64) -> Self {
        if k < 0 {
            TemperedSymbol::Cuspidal
        } else {
            TemperedSymbol::GenSteinberg(k as u32)
        }
    }

    pub fn dual_steinberg(k: i64) -> Self {
        if k < 0 {
            TemperedSymbol::Cuspidal
        } else {
            TemperedSymbol::DualSteinberg(k as u32)
        }
    }

    pub fn is_opaque(&self) -> bool {
        matches!(self, TemperedSymbol::TauPm(..) | TemperedSymbol::DeltaPm(..))
    }

    /// GL degree of the cuspidal support (the `σ` part excluded).
    pub fn degree(&self) -> usize {
        match self {
            TemperedSymbol::Cuspidal => 0,
            TemperedSymbol::GenSteinberg(k) | TemperedSymbol::DualSteinberg(k) => *k as usize + 1,
            TemperedSymbol::TauPm(s, _) | TemperedSymbol::DeltaPm(s, _) => s.len(),
        }
    }

    /// Checks the shape constraints that depend on `α`.
    pub fn validate(&self, ctx: &CuspidalContext) -> Result<()> {
        let alpha = ctx.alpha;
        match self {
            TemperedSymbol::TauPm(s, _) => {
                let ok = !s.is_empty() && s.lo() == -s.hi() && alpha.steps_to(s.hi()).is_some_and(|k| k >= 0);
                if !ok {
                    return Err(precondition(
                        "tempered symbol",
                        format!("tau needs [-b,b] with b in {alpha}+Z>=0, got {s}"),
                    ));
                }
            }
            TemperedSymbol::DeltaPm(s, _) => {
                let ok = !s.is_empty()
                    && s.lo() < Exponent::ZERO
                    && alpha.steps_to(-s.lo()).is_some_and(|k| k >= 0)
                    && -s.lo() < s.hi();
                if !ok {
                    return Err(precondition(
                        "tempered symbol",
                        format!("delta(+-) needs [-b,c] with b in {alpha}+Z>=0 and b < c, got {s}"),
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// The segment of a generalized Steinberg (or its dual), if any.
    pub fn steinberg_segment(&self, ctx: &CuspidalContext) -> Option<Segment> {
        match self {
            TemperedSymbol::Cuspidal => Some(Segment::EMPTY),
            TemperedSymbol::GenSteinberg(k) | TemperedSymbol::DualSteinberg(k) => {
                Some(Segment::new(ctx.alpha, ctx.alpha.shift(*k as i64)).expect("valid"))
            }
            _ => None,
        }
    }

    /// Rendering with segments spelled out, e.g. `d([1,2];sigma)`.
    pub fn render_in(&self, ctx: &CuspidalContext) -> String {
        match self {
            TemperedSymbol::Cuspidal => "sigma".into(),
            TemperedSymbol::GenSteinberg(_) => {
                format!("d({};sigma)", self.steinberg_segment(ctx).unwrap())
            }
            TemperedSymbol::DualSteinberg(_) => {
                let s = self.steinberg_segment(ctx).unwrap();
                let pts: Vec<String> = s.points().rev().map(|x| format!("[{x}]")).collect();
                format!("L({};sigma)", pts.join(","))
            }
            TemperedSymbol::TauPm(s, e) => format!("tau({s}{};sigma)", e.symbol()),
            TemperedSymbol::DeltaPm(s, e) => format!("d({s}{};sigma)", e.symbol()),
        }
    }
}

impl fmt::Display for TemperedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemperedSymbol::Cuspidal => write!(f, "sigma"),
            TemperedSymbol::GenSteinberg(k) => write!(f, "st({k})"),
            TemperedSymbol::DualSteinberg(k) => write!(f, "dst({k})"),
            TemperedSymbol::TauPm(s, e) => write!(f, "tau({s},{})", e.symbol()),
            TemperedSymbol::DeltaPm(s, e) => write!(f, "dpm({s},{})", e.symbol()),
        }
    }
}

/// Basis element `λ(d) ⋊ T` of `R(S)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Induced {
    pub gl: Multisegment,
    pub temp: TemperedSymbol,
}

impl Induced {
    pub fn new(gl: Multisegment, temp: TemperedSymbol) -> Self {
        Induced { gl, temp }
    }

    pub fn cuspidal() -> Self {
        Induced::new(Multisegment::unit(), TemperedSymbol::Cuspidal)
    }

    pub fn degree(&self) -> usize {
        self.gl.degree() + self.temp.degree()
    }
}

impl Basis for Induced {
    fn render(&self) -> String {
        if self.gl.is_unit() {
            self.temp.to_string()
        } else {
            format!("{} |x {}", self.gl, self.temp)
        }
    }
}

pub type ClassicalElement = Combination<Induced>;
/// An element of `R ⊗ R(S)`.
pub type MuSum = Combination<Tensor<Multisegment, Induced>>;

pub fn induced(gl: Multisegment, temp: TemperedSymbol) -> ClassicalElement {
    ClassicalElement::basis(Induced::new(gl, temp))
}

/// `x ⋊ y`, bilinear.
pub fn rtimes(x: &GlElement, y: &ClassicalElement) -> ClassicalElement {
    x.bilinear(y, |c, Induced { gl, temp }| {
        ClassicalElement::basis(Induced::new(c.add(gl), temp.clone()))
    })
}

/// `(A ⊗ B) ⋊ (u ⊗ v) = (A × u) ⊗ (B ⋊ v)`.
fn act(m: &crate::linear::GlTensor, mu: &MuSum) -> MuSum {
    m.bilinear(mu, |Tensor(a, b), Tensor(u, Induced { gl, temp })| {
        MuSum::basis(Tensor(a.add(u), Induced::new(b.add(gl), temp.clone())))
    })
}

/// `Σ_{k=-1}^{n} δ([α+k+1, α+n]) ⊗ δ([α, α+k]; σ)`.
pub fn mu_star_gen_steinberg(n: u32, ctx: &CuspidalContext) -> MuSum {
    let top = ctx.alpha.shift(n as i64);
    let mut out = MuSum::zero();
    for k in -1..=n as i64 {
        let left = Segment::new(ctx.alpha.shift(k + 1), top).expect("valid");
        out.add_term(
            Tensor(
                Multisegment::single(left),
                Induced::new(Multisegment::unit(), TemperedSymbol::steinberg(k)),
            ),
            BigInt::one(),
        );
    }
    out
}

/// `Σ_{k=-1}^{n} L(ν^{-(α+n)}ρ, …, ν^{-(α+k+1)}ρ) ⊗ L(ν^{α+k}ρ, …, ν^αρ; σ)`,
/// each left factor being `𝔰([-(α+n), -(α+k+1)])` in the standard basis.
pub fn mu_star_aubert_dual_l(n: u32, ctx: &CuspidalContext) -> Result<MuSum> {
    let mut out = MuSum::zero();
    for k in -1..=n as i64 {
        let seg = Segment::new(-ctx.alpha.shift(n as i64), -ctx.alpha.shift(k + 1))?;
        let left = if seg.is_empty() {
            gl::unit()
        } else {
            gl::expand_s_in_standard(seg)?
        };
        let right = Induced::new(Multisegment::unit(), TemperedSymbol::dual_steinberg(k));
        for (l, c) in left.iter() {
            out.add_term(Tensor(l.clone(), right.clone()), c.clone());
        }
    }
    Ok(out)
}

/// Number of summands of a closed `μ*` formula: one per distinct right
/// factor, however many standard modules the left factor expands into.
pub fn summand_count(m: &MuSum) -> usize {
    m.keys()
        .map(|Tensor(_, r)| r)
        .collect::<std::collections::BTreeSet<_>>()
        .len()
}

/// `μ*` of a tempered symbol.
pub fn mu_star_tempered(t: &TemperedSymbol, ctx: &CuspidalContext) -> Result<MuSum> {
    match t {
        TemperedSymbol::Cuspidal => Ok(MuSum::basis(Tensor(Multisegment::unit(), Induced::cuspidal()))),
        TemperedSymbol::GenSteinberg(n) => Ok(mu_star_gen_steinberg(*n, ctx)),
        TemperedSymbol::DualSteinberg(n) => mu_star_aubert_dual_l(*n, ctx),
        opaque => Err(Error::OpaqueSymbol(opaque.to_string())),
    }
}

/// `μ*(λ(d) ⋊ T) = M*(λ(d)) ⋊ μ*(T)`, extended linearly.
pub fn mu_star(x: &ClassicalElement, ctx: &CuspidalContext) -> Result<MuSum> {
    x.try_map_linear(|Induced { gl, temp }| {
        let m = gl::twisted_mstar(&gl::standard(gl));
        Ok(act(&m, &mu_star_tempered(temp, ctx)?))
    })
}

/// A `±` pair addressed jointly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PmPair {
    /// `τ((Δ_u)_+; σ) + τ((Δ_u)_-; σ) = δ(Δ_u) ⋊ σ`.
    Tau(Segment),
    /// `δ(Δ_+; σ) + δ(Δ_-; σ) ≤ δ(Δ) ⋊ σ`.
    Delta(Segment),
}

impl PmPair {
    pub fn segment(&self) -> Segment {
        match self {
            PmPair::Tau(s) | PmPair::Delta(s) => *s,
        }
    }

    pub fn members(&self) -> [TemperedSymbol; 2] {
        match *self {
            PmPair::Tau(s) => [
                TemperedSymbol::TauPm(s, Sign::Plus),
                TemperedSymbol::TauPm(s, Sign::Minus),
            ],
            PmPair::Delta(s) => [
                TemperedSymbol::DeltaPm(s, Sign::Plus),
                TemperedSymbol::DeltaPm(s, Sign::Minus),
            ],
        }
    }

    /// The induced class bounding (for `Tau`: equal to) the pair sum.
    pub fn bounding_class(&self) -> ClassicalElement {
        induced(Multisegment::single(self.segment()), TemperedSymbol::Cuspidal)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, PmPair::Tau(_))
    }

    pub fn validate(&self, ctx: &CuspidalContext) -> Result<()> {
        self.members()[0].validate(ctx)
    }
}

/// `μ*` of a pair sum, flagged exact or upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSum {
    pub mu: MuSum,
    pub exact: bool,
}

pub fn mu_star_pair_sum(pair: PmPair, ctx: &CuspidalContext) -> Result<PairSum> {
    pair.validate(ctx)?;
    Ok(PairSum {
        mu: mu_star(&pair.bounding_class(), ctx)?,
        exact: pair.is_exact(),
    })
}

/// Word model of a tempered symbol (the `σ` letter is implicit).
pub fn word_model_tempered(t: &TemperedSymbol, ctx: &CuspidalContext) -> Result<WordSum> {
    match t {
        TemperedSymbol::Cuspidal => Ok(WordSum::basis(Word::empty())),
        TemperedSymbol::GenSteinberg(_) => Ok(WordSum::basis(t.steinberg_segment(ctx).unwrap().descending_word())),
        TemperedSymbol::DualSteinberg(_) => Ok(WordSum::basis(
            t.steinberg_segment(ctx).unwrap().contragredient().ascending_word(),
        )),
        opaque => Err(Error::OpaqueSymbol(opaque.to_string())),
    }
}

/// The shuffle factors whose product is the word model of `λ(d) ⋊ T`.
pub fn classical_factors(b: &Induced, ctx: &CuspidalContext) -> Result<Vec<WordSum>> {
    let mut out: Vec<WordSum> =
        b.gl.segments()
            .iter()
            .map(|s| signed_fold(&s.descending_word()))
            .collect();
    out.push(word_model_tempered(&b.temp, ctx)?);
    Ok(out)
}

/// The minimal Jacquet module of `x`.
pub fn word_model_classical(x: &ClassicalElement, ctx: &CuspidalContext) -> Result<WordSum> {
    x.try_map_linear(|b| {
        let factors = classical_factors(b, ctx)?;
        Ok(factors
            .iter()
            .fold(WordSum::basis(Word::empty()), |acc, f| shuffle(&acc, f)))
    })
}

/// Word model read off the degree-`m` slice of a `μ*` value: the GL word
/// model of each left factor followed by the word model of the right one.
/// For `μ*(x)` this equals `word_model_classical(x)` for every `m` up to
/// the degree of `x`, by transitivity of Jacquet modules.
pub fn split_word_model(mu: &MuSum, m: usize, ctx: &CuspidalContext) -> Result<WordSum> {
    let mut out = WordSum::zero();
    for (Tensor(l, r), c) in mu.iter() {
        if l.degree() != m {
            continue;
        }
        let right = word_model_classical(&ClassicalElement::basis(r.clone()), ctx)?;
        out.add_assign_scaled(&concat(&gl::word_model_standard(l), &right), c);
    }
    Ok(out)
}

/// Coefficient of `target` in `word_model_classical(x)`, without expansion.
pub fn classical_word_coefficient(target: &Word, x: &ClassicalElement, ctx: &CuspidalContext) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (b, c) in x.iter() {
        if b.degree() != target.len() {
            continue;
        }
        total += c * shuffle_coefficient(target, &classical_factors(b, ctx)?);
    }
    Ok(total)
}

/// GL-type Jacquet module: left factors of the `μ*` terms whose right
/// factor is exactly `σ`.
pub fn s_gl(x: &ClassicalElement, ctx: &CuspidalContext) -> Result<GlElement> {
    let mut out = GlElement::zero();
    for (Tensor(l, r), c) in mu_star(x, ctx)?.iter() {
        if *r == Induced::cuspidal() {
            out.add_term(l.clone(), c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seg::Exponent;

    fn ctx(twice: i64) -> CuspidalContext {
        CuspidalContext::new(Exponent::from_twice(twice)).unwrap()
    }

    fn seg(s: &str) -> Segment {
        Segment::parse(s).unwrap()
    }

    fn ms(v: &[&str]) -> Multisegment {
        Multisegment::new(v.iter().map(|s| seg(s)))
    }

    fn w(v: &[i64]) -> Word {
        Word(v.iter().map(|&k| Exponent::int(k)).collect())
    }

    fn sigma_at(d: &[&str]) -> ClassicalElement {
        induced(ms(d), TemperedSymbol::Cuspidal)
    }

    #[test]
    fn rtimes_examples() {
        let s = sigma_at(&[]);
        assert_eq!(rtimes(&gl::delta(seg("[-1,1]")), &s), sigma_at(&["[-1,1]"]));
        assert_eq!(rtimes(&gl::unit(), &sigma_at(&["[1,1]"])), sigma_at(&["[1,1]"]));
        let x = gl::delta(seg("[0,0]")).add(&gl::delta(seg("[1,1]")));
        assert_eq!(rtimes(&x, &s), sigma_at(&["[0,0]"]).add(&sigma_at(&["[1,1]"])));
    }

    #[test]
    fn mu_star_examples() {
        let c = ctx(2);
        let m = mu_star(&sigma_at(&["[1,1]"]), &c).unwrap();
        let expect = MuSum::from_terms([
            (
                Tensor(ms(&[]), Induced::new(ms(&["[1,1]"]), TemperedSymbol::Cuspidal)),
                BigInt::one(),
            ),
            (Tensor(ms(&["[1,1]"]), Induced::cuspidal()), BigInt::one()),
            (Tensor(ms(&["[-1,-1]"]), Induced::cuspidal()), BigInt::one()),
        ]);
        assert_eq!(m, expect);
        assert_eq!(mu_star(&sigma_at(&[]), &c).unwrap().len(), 1);
        let two = mu_star(&sigma_at(&["[1,1]", "[2,2]"]), &c).unwrap();
        assert_eq!(two.mass(), BigInt::from(9));
    }

    #[test]
    fn opaque_symbols_are_rejected() {
        let c = ctx(2);
        let tau = induced(ms(&[]), TemperedSymbol::TauPm(seg("[-1,1]"), Sign::Plus));
        assert!(matches!(mu_star(&tau, &c), Err(Error::OpaqueSymbol(_))));
        assert!(matches!(word_model_classical(&tau, &c), Err(Error::OpaqueSymbol(_))));
    }

    #[test]
    fn gen_steinberg_examples() {
        let c = ctx(2);
        let m = mu_star_gen_steinberg(1, &c);
        let st = |k| Induced::new(ms(&[]), TemperedSymbol::steinberg(k));
        let expect = MuSum::from_terms([
            (Tensor(ms(&["[1,2]"]), st(-1)), BigInt::one()),
            (Tensor(ms(&["[2,2]"]), st(0)), BigInt::one()),
            (Tensor(ms(&[]), st(1)), BigInt::one()),
        ]);
        assert_eq!(m, expect);
        assert_eq!(mu_star_gen_steinberg(0, &c).len(), 2);
        for n in 0..5 {
            assert_eq!(mu_star_gen_steinberg(n, &ctx(3)).len(), n as usize + 2);
        }
    }

    #[test]
    fn aubert_dual_examples() {
        let c = ctx(2);
        let m0 = mu_star_aubert_dual_l(0, &c).unwrap();
        let dst = |k| Induced::new(ms(&[]), TemperedSymbol::dual_steinberg(k));
        let expect = MuSum::from_terms([
            (Tensor(ms(&["[-1,-1]"]), dst(-1)), BigInt::one()),
            (Tensor(ms(&[]), dst(0)), BigInt::one()),
        ]);
        assert_eq!(m0, expect);
        let m1 = mu_star_aubert_dual_l(1, &c).unwrap();
        // 1 ⊗ dst(1), [-2] ⊗ dst(0), 𝔰([-2,-1]) ⊗ σ (two standard terms)
        assert_eq!(m1.len(), 4);
        assert_eq!(summand_count(&m1), 3);
        assert_eq!(m1.coeff(&Tensor(ms(&["[-2,-1]"]), dst(-1))), BigInt::from(-1));
    }

    #[test]
    fn word_model_examples() {
        let c = ctx(2);
        let one = word_model_classical(&sigma_at(&["[1,1]"]), &c).unwrap();
        assert_eq!(one, WordSum::basis(w(&[1])).add(&WordSum::basis(w(&[-1]))));
        let two = word_model_classical(&sigma_at(&["[1,1]", "[2,2]"]), &c).unwrap();
        assert_eq!(two.len(), 8);
        let st = word_model_classical(&induced(ms(&[]), TemperedSymbol::GenSteinberg(1)), &c).unwrap();
        assert_eq!(st, WordSum::basis(w(&[2, 1])));
    }

    #[test]
    fn pair_sums() {
        let c = ctx(2);
        let tau = mu_star_pair_sum(PmPair::Tau(seg("[-1,1]")), &c).unwrap();
        assert!(tau.exact);
        assert_eq!(tau.mu, mu_star(&sigma_at(&["[-1,1]"]), &c).unwrap());
        let del = mu_star_pair_sum(PmPair::Delta(seg("[-1,2]")), &c).unwrap();
        assert!(!del.exact);
        let half = ctx(1);
        let words = word_model_classical(&PmPair::Tau(seg("[-1/2,1/2]")).bounding_class(), &half).unwrap();
        // Φ of the two-letter word (1/2,-1/2): a segment, not two free letters.
        assert_eq!(words.mass(), BigInt::from(4));
        assert_eq!(words.coeff(&Word::parse("(1/2,-1/2)").unwrap()), BigInt::from(2));
        assert!(mu_star_pair_sum(PmPair::Tau(seg("[-1,2]")), &c).is_err());
        assert!(mu_star_pair_sum(PmPair::Delta(seg("[-1,1]")), &c).is_err());
    }

    #[test]
    fn s_gl_examples() {
        let c = ctx(2);
        assert_eq!(
            s_gl(&sigma_at(&["[1,1]"]), &c).unwrap(),
            gl::delta(seg("[1,1]")).add(&gl::delta(seg("[-1,-1]")))
        );
        assert_eq!(s_gl(&sigma_at(&[]), &c).unwrap(), gl::unit());
        let st = induced(ms(&[]), TemperedSymbol::GenSteinberg(1));
        assert_eq!(s_gl(&st, &c).unwrap(), gl::delta(seg("[1,2]")));
    }

    #[test]
    fn coefficient_matches_word_model() {
        let c = ctx(1);
        let x =
            sigma_at(&["[1/2,3/2]", "[-1/2,1/2]"]).add(&induced(ms(&["[3/2,3/2]"]), TemperedSymbol::GenSteinberg(1)));
        let full = word_model_classical(&x, &c).unwrap();
        for (word, k) in full.iter() {
            assert_eq!(&classical_word_coefficient(word, &x, &c).unwrap(), k);
        }
    }

    #[test]
    fn every_split_level_recovers_the_word_model() {
        let c = ctx(2);
        let xs = [
            sigma_at(&["[1,2]", "[-1,0]"]),
            induced(ms(&["[2,2]"]), TemperedSymbol::GenSteinberg(1)),
            induced(ms(&[]), TemperedSymbol::DualSteinberg(2)),
        ];
        for x in &xs {
            let whole = word_model_classical(x, &c).unwrap();
            let mu = mu_star(x, &c).unwrap();
            let deg = x.keys().next().unwrap().degree();
            for m in 0..=deg {
                assert_eq!(split_word_model(&mu, m, &c).unwrap(), whole, "{x} at m={m}");
            }
        }
    }
}
