//! The graded ring `R` of a general linear tower in the standard-module
//! basis: products, the comultiplications `m*` and `M*`, derivatives, the
//! word model and the ring involution `δ(Δ) ↦ 𝔰(Δ)`.
//!
//! A multisegment `d` stands for the standard module `λ(d)`; the empty
//! multisegment is the unit.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{precondition, Error, Result};
use crate::exec::Exec;
use crate::linear::{GlElement, GlTensor, Tensor, WordSum};
use crate::memo::Memo;
use crate::seg::{Exponent, Multisegment, Segment, Word};
use crate::word::{count_interleavings, shuffle, shuffle_coefficient, shuffle_exec};

pub fn unit() -> GlElement {
    GlElement::basis(Multisegment::unit())
}

/// `δ(Δ)`; the empty segment gives the unit.
pub fn delta(d: Segment) -> GlElement {
    GlElement::basis(Multisegment::single(d))
}

pub fn standard(d: &Multisegment) -> GlElement {
    GlElement::basis(d.clone())
}

pub fn gl_mul(x: &GlElement, y: &GlElement) -> GlElement {
    x.bilinear(y, |c, d| GlElement::basis(c.add(d)))
}

pub fn tensor_unit() -> GlTensor {
    GlTensor::basis(Tensor(Multisegment::unit(), Multisegment::unit()))
}

/// Componentwise product in `R ⊗ R`.
pub fn tensor_mul(x: &GlTensor, y: &GlTensor) -> GlTensor {
    x.bilinear(y, |Tensor(a, b), Tensor(c, d)| {
        GlTensor::basis(Tensor(a.add(c), b.add(d)))
    })
}

pub fn tensor(x: &GlElement, y: &GlElement) -> GlTensor {
    x.bilinear(y, |a, b| GlTensor::basis(Tensor(a.clone(), b.clone())))
}

/// `m*(δ([lo,hi])) = Σ_{i=lo-1}^{hi} δ([i+1,hi]) ⊗ δ([lo,i])`.
pub fn mstar_delta(d: Segment) -> GlTensor {
    if d.is_empty() {
        return tensor_unit();
    }
    let mut out = GlTensor::zero();
    for cut in -1..d.len() as i64 {
        let i = d.lo().shift(cut);
        let left = Segment::new(i.shift(1), d.hi()).expect("sub-segment");
        let right = Segment::new(d.lo(), i).expect("sub-segment");
        out.add_term(
            Tensor(Multisegment::single(left), Multisegment::single(right)),
            BigInt::one(),
        );
    }
    out
}

fn mstar_basis(d: &Multisegment) -> GlTensor {
    d.segments()
        .iter()
        .fold(tensor_unit(), |acc, s| tensor_mul(&acc, &mstar_delta(*s)))
}

/// `m*` extended multiplicatively from segments.
pub fn mstar(x: &GlElement) -> GlTensor {
    x.map_linear(mstar_basis)
}

/// `m*(𝔰(Δ)) = Σ_i 𝔰([lo,i]) ⊗ 𝔰([i+1,hi])`, factors expanded in the
/// standard basis.
pub fn mstar_s(d: Segment) -> Result<GlTensor> {
    if d.is_empty() {
        return Ok(tensor_unit());
    }
    let mut out = GlTensor::zero();
    for cut in -1..d.len() as i64 {
        let i = d.lo().shift(cut);
        let left = Segment::new(d.lo(), i)?;
        let right = Segment::new(i.shift(1), d.hi())?;
        out = out.add(&tensor(&s_class(left)?, &s_class(right)?));
    }
    Ok(out)
}

/// `𝔰(Δ)` in the standard basis, with `𝔰(∅) = 1`.
fn s_class(d: Segment) -> Result<GlElement> {
    if d.is_empty() {
        Ok(unit())
    } else {
        expand_s_in_standard(d)
    }
}

/// The contragredient: a ring automorphism with `δ(Δ)~ = δ(Δ̃)`.
pub fn contragredient(x: &GlElement) -> GlElement {
    x.map_keys(Multisegment::contragredient)
}

/// `M* = (m ⊗ id) ∘ (~ ⊗ m*) ∘ κ ∘ m*`, evaluated literally.
pub fn twisted_mstar(x: &GlElement) -> GlTensor {
    let mut out = GlTensor::zero();
    for (Tensor(x1, x2), c) in mstar(x).iter() {
        let x2t = x2.contragredient();
        for (Tensor(x11, x12), e) in mstar_basis(x1).iter() {
            out.add_term(Tensor(x2t.add(x11), x12.clone()), c * e);
        }
    }
    out
}

/// The double-sum closed form for `M*(δ([a,c]))`:
/// `Σ_{s=a-1}^{c} Σ_{t=s}^{c} δ([-s,-a]) × δ([t+1,c]) ⊗ δ([s+1,t])`.
pub fn twisted_mstar_closed_form(d: Segment) -> Result<GlTensor> {
    if d.is_empty() {
        return Err(Error::EmptySegment("twisted_mstar_closed_form"));
    }
    let (a, c) = (d.lo(), d.hi());
    let n = d.len() as i64;
    let mut out = GlTensor::zero();
    for si in -1..n {
        let s = a.shift(si);
        for ti in si..n {
            let t = a.shift(ti);
            let left = Multisegment::new([Segment::new(-s, -a)?, Segment::new(t.shift(1), c)?]);
            let right = Multisegment::single(Segment::new(s.shift(1), t)?);
            out.add_term(Tensor(left, right), BigInt::one());
        }
    }
    Ok(out)
}

/// The part of `M*(x)` of the form `* ⊗ 1`, as an element of `R`.
pub fn twisted_gl_part(x: &GlElement) -> GlElement {
    let mut out = GlElement::zero();
    for (Tensor(l, r), c) in twisted_mstar(x).iter() {
        if r.is_unit() {
            out.add_term(l.clone(), c.clone());
        }
    }
    out
}

/// Collapse the right (`left = false`) or left tensor factor with the counit.
pub fn counit_collapse(x: &GlTensor, keep_left: bool) -> GlElement {
    let mut out = GlElement::zero();
    for (Tensor(l, r), c) in x.iter() {
        let (keep, drop) = if keep_left { (l, r) } else { (r, l) };
        if drop.is_unit() {
            out.add_term(keep.clone(), c.clone());
        }
    }
    out
}

/// `D`: the ring endomorphism `δ(Δ) ↦ δ(Δ) + δ(Δ⁻)`.
pub fn derivative(x: &GlElement) -> GlElement {
    x.map_linear(|d| {
        d.segments().iter().fold(unit(), |acc, s| {
            let minus = s.minus().expect("stored segments are non-empty");
            gl_mul(&acc, &delta(*s).add(&delta(minus)))
        })
    })
}

/// Homogeneous component of degree `k`.
pub fn graded_part(x: &GlElement, k: usize) -> GlElement {
    x.filter(|d| d.degree() == k)
}

/// Lowest-degree non-zero component of `D(x)`.
pub fn highest_derivative(x: &GlElement) -> GlElement {
    let dx = derivative(x);
    match dx.keys().map(Multisegment::degree).min() {
        Some(k) => graded_part(&dx, k),
        None => GlElement::zero(),
    }
}

fn word_memo() -> &'static Memo<Multisegment, WordSum> {
    static MEMO: OnceLock<Memo<Multisegment, WordSum>> = OnceLock::new();
    MEMO.get_or_init(Memo::with_configured_capacity)
}

/// Word model of one standard module: shuffle of descending words.
pub fn word_model_standard(d: &Multisegment) -> WordSum {
    word_memo().get_or_compute(d, || {
        d.segments().iter().fold(WordSum::basis(Word::empty()), |acc, s| {
            shuffle(&acc, &WordSum::basis(s.descending_word()))
        })
    })
}

/// The minimal Jacquet module of `x`, as a combination of words.
pub fn word_model(x: &GlElement) -> WordSum {
    x.map_linear(word_model_standard)
}

/// Word model with the outer shuffle loop spread according to `exec`.
pub fn word_model_exec(x: &GlElement, exec: Exec) -> WordSum {
    let terms: Vec<(&Multisegment, &BigInt)> = x.iter().collect();
    exec.map_fold(
        &terms,
        WordSum::zero(),
        |(d, c)| {
            let w = d.segments().iter().fold(WordSum::basis(Word::empty()), |acc, s| {
                shuffle_exec(&acc, &WordSum::basis(s.descending_word()), Exec::Sequential)
            });
            w.scale(c)
        },
        |acc, part| acc.add(&part),
    )
}

/// Coefficient of `target` in the word model of `x`, without expanding it.
pub fn word_coefficient(target: &Word, x: &GlElement) -> BigInt {
    let mut total = BigInt::zero();
    for (d, c) in x.iter() {
        if d.degree() != target.len() {
            continue;
        }
        let factors: Vec<WordSum> = d
            .segments()
            .iter()
            .map(|s| WordSum::basis(s.descending_word()))
            .collect();
        total += c * shuffle_coefficient(target, &factors);
    }
    total
}

/// Compositions of `0..len` into consecutive blocks, as block lengths.
fn compositions(len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (len - 1)) {
        let mut blocks = Vec::new();
        let mut cur = 1;
        for i in 0..len - 1 {
            if mask >> i & 1 == 1 {
                blocks.push(cur);
                cur = 1;
            } else {
                cur += 1;
            }
        }
        blocks.push(cur);
        out.push(blocks);
    }
    out
}

fn blocks_to_segments(lo: Exponent, blocks: &[usize]) -> Vec<Segment> {
    let mut start = 0i64;
    blocks
        .iter()
        .map(|&b| {
            let s = Segment::new(lo.shift(start), lo.shift(start + b as i64 - 1)).expect("block");
            start += b as i64;
            s
        })
        .collect()
}

fn s_memo() -> &'static Memo<usize, GlElement> {
    static MEMO: OnceLock<Memo<usize, GlElement>> = OnceLock::new();
    MEMO.get_or_init(Memo::with_configured_capacity)
}

/// Expansion of `𝔰([0, len-1])` by a unitriangular solve over compositions.
fn s_expansion_at_origin(len: usize) -> Result<GlElement> {
    let comps = compositions(len);
    let segs: Vec<Vec<Segment>> = comps.iter().map(|b| blocks_to_segments(Exponent::ZERO, b)).collect();
    // The leading word of a composition concatenates its blocks' descending
    // words, lowest block first. It occurs once in its own standard module
    // and only in the modules of its refinements.
    let leading: Vec<Word> = segs
        .iter()
        .map(|ss| ss.iter().fold(Word::empty(), |w, s| w.concat(&s.descending_word())))
        .collect();
    let descending: Vec<Vec<Word>> = segs
        .iter()
        .map(|ss| ss.iter().map(Segment::descending_word).collect())
        .collect();
    let refines = |fine: usize, coarse: usize| -> bool {
        let cuts = |b: &[usize]| {
            b.iter()
                .scan(0, |acc, x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect::<Vec<_>>()
        };
        let cf = cuts(&comps[fine]);
        cuts(&comps[coarse]).iter().all(|c| cf.contains(c))
    };
    let mut order: Vec<usize> = (0..comps.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(comps[i].len()));
    let mut coeff: Vec<BigInt> = vec![BigInt::zero(); comps.len()];
    for (pos, &b) in order.iter().enumerate() {
        let mut c = if comps[b].len() == len {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        for &f in &order[..pos] {
            if comps[f].len() > comps[b].len() && refines(f, b) && !coeff[f].is_zero() {
                let parts: Vec<&[Exponent]> = descending[f].iter().map(|w| w.letters()).collect();
                c -= &coeff[f] * count_interleavings(leading[b].letters(), &parts);
            }
        }
        let own_parts: Vec<&[Exponent]> = descending[b].iter().map(|w| w.letters()).collect();
        if !count_interleavings(leading[b].letters(), &own_parts).is_one() {
            return Err(Error::Singular(format!("s-expansion of length {len}")));
        }
        coeff[b] = c;
    }
    Ok(GlElement::from_terms(
        segs.into_iter().zip(coeff).map(|(ss, c)| (Multisegment::new(ss), c)),
    ))
}

/// `𝔰(Δ)` in the standard basis: the unique combination of standard
/// modules on refinements of `Δ` whose word model is the ascending word.
pub fn expand_s_in_standard(d: Segment) -> Result<GlElement> {
    if d.is_empty() {
        return Err(precondition("expand_s_in_standard", "segment must be non-empty"));
    }
    let base = s_memo().get_or_compute(&d.len(), || s_expansion_at_origin(d.len()).unwrap_or_default());
    if base.is_zero() {
        return Err(Error::Singular(d.to_string()));
    }
    let shift = d.lo().twice();
    Ok(base.map_keys(|m| m.translate(shift)))
}

/// The ring involution determined by `δ(Δ) ↦ 𝔰(Δ)`.
pub fn involution_ring(x: &GlElement) -> Result<GlElement> {
    x.try_map_linear(zelevinsky_standard)
}

/// `ζ(d) = Π 𝔰(Δ)` in the standard basis.
pub fn zelevinsky_standard(d: &Multisegment) -> Result<GlElement> {
    d.segments()
        .iter()
        .try_fold(unit(), |acc, s| Ok(gl_mul(&acc, &expand_s_in_standard(*s)?)))
}

/// The highest derivative on the Zelevinsky side, `t ∘ h.d. ∘ t`.
pub fn zelevinsky_highest_derivative(x: &GlElement) -> Result<GlElement> {
    involution_ring(&highest_derivative(&involution_ring(x)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(s: &str) -> Segment {
        Segment::parse(s).unwrap()
    }

    fn ms(v: &[&str]) -> Multisegment {
        Multisegment::new(v.iter().map(|s| seg(s)))
    }

    fn t(l: &[&str], r: &[&str]) -> Tensor<Multisegment, Multisegment> {
        Tensor(ms(l), ms(r))
    }

    fn w(v: &[i64]) -> Word {
        Word(v.iter().map(|&k| Exponent::int(k)).collect())
    }

    #[test]
    fn products() {
        let x = standard(&ms(&["[0,1]"]));
        let y = standard(&ms(&["[2,2]"]));
        assert_eq!(gl_mul(&x, &y), standard(&ms(&["[0,1]", "[2,2]"])));
        assert_eq!(gl_mul(&unit(), &y), y);
        let two = standard(&ms(&["[1,1]"])).scale(&2.into());
        assert_eq!(
            gl_mul(&two, &standard(&ms(&["[1,1]"]))),
            GlElement::term(ms(&["[1,1]", "[1,1]"]), 2)
        );
    }

    #[test]
    fn mstar_delta_examples() {
        let m = mstar_delta(seg("[0,1]"));
        let expect = GlTensor::from_terms([
            (t(&["[0,1]"], &[]), BigInt::one()),
            (t(&["[1,1]"], &["[0,0]"]), BigInt::one()),
            (t(&[], &["[0,1]"]), BigInt::one()),
        ]);
        assert_eq!(m, expect);
        assert_eq!(mstar_delta(seg("[0,0]")).len(), 2);
        assert_eq!(mstar_delta(Segment::EMPTY), tensor_unit());
    }

    #[test]
    fn mstar_of_two_cuspidals() {
        let m = mstar(&standard(&ms(&["[0,0]", "[1,1]"])));
        assert_eq!(m.len(), 4);
        assert_eq!(m.coeff(&t(&["[0,0]"], &["[1,1]"])), BigInt::one());
        assert_eq!(m.coeff(&t(&["[1,1]"], &["[0,0]"])), BigInt::one());
    }

    #[test]
    fn mstar_s_example() {
        let m = mstar_s(seg("[0,1]")).unwrap();
        let s01 = expand_s_in_standard(seg("[0,1]")).unwrap();
        let expect = tensor(&unit(), &s01)
            .add(&tensor(&standard(&ms(&["[0,0]"])), &standard(&ms(&["[1,1]"]))))
            .add(&tensor(&s01, &unit()));
        assert_eq!(m, expect);
    }

    #[test]
    fn twisted_mstar_on_cuspidal() {
        for x in ["[1,1]", "[1/2,1/2]", "[-2,-2]"] {
            let d = seg(x);
            let m = twisted_mstar(&delta(d));
            let neg = d.contragredient().to_string();
            let expect = GlTensor::from_terms([
                (t(&[], &[x]), BigInt::one()),
                (t(&[x], &[]), BigInt::one()),
                (t(&[neg.as_str()], &[]), BigInt::one()),
            ]);
            assert_eq!(m, expect);
        }
        assert_eq!(twisted_mstar(&unit()), tensor_unit());
    }

    #[test]
    fn twisted_mstar_at_zero_doubles() {
        let m = twisted_mstar(&delta(seg("[0,0]")));
        assert_eq!(m.coeff(&t(&["[0,0]"], &[])), BigInt::from(2));
        assert_eq!(m.coeff(&t(&[], &["[0,0]"])), BigInt::one());
        assert_eq!(twisted_mstar_closed_form(seg("[0,0]")).unwrap(), m);
    }

    #[test]
    fn symmetric_segment_has_doubled_top_term() {
        let m = twisted_mstar(&delta(seg("[-1,1]")));
        assert_eq!(m.coeff(&t(&["[-1,1]"], &[])), BigInt::from(2));
        assert_eq!(twisted_mstar_closed_form(seg("[-1,1]")).unwrap(), m);
        let gl = twisted_gl_part(&delta(seg("[-1,1]")));
        assert_eq!(gl.coeff(&ms(&["[-1,1]"])), BigInt::from(2));
        // x = 0 and x = -1 both give δ([0,1]) × δ([1,1])
        assert_eq!(gl.coeff(&ms(&["[0,1]", "[1,1]"])), BigInt::from(2));
        assert_eq!(twisted_gl_part(&unit()), unit());
    }

    #[test]
    fn gl_part_of_symmetric_segment_is_a_single_sum() {
        // M*_GL(δ([-b,b])) = Σ_{x=-b-1}^{b} δ([-x,b]) × δ([x+1,b])
        for twice in [1i64, 2, 3, 4] {
            let b = Exponent::from_twice(twice);
            let d = Segment::new(-b, b).unwrap();
            let mut expect = GlElement::zero();
            for k in -1..=d.len() as i64 - 1 {
                let x = (-b).shift(k);
                let l = Segment::new(-x, b).unwrap();
                let r = Segment::new(x.shift(1), b).unwrap();
                expect.add_term(Multisegment::new([l, r]), BigInt::one());
            }
            assert_eq!(twisted_gl_part(&delta(d)), expect);
        }
    }

    #[test]
    fn derivative_examples() {
        let x = delta(seg("[0,1]"));
        assert_eq!(derivative(&x), x.add(&delta(seg("[0,0]"))));
        assert_eq!(highest_derivative(&x), delta(seg("[0,0]")));
        assert_eq!(highest_derivative(&standard(&ms(&["[0,0]", "[1,1]"]))), unit());
    }

    #[test]
    fn word_model_examples() {
        assert_eq!(word_model(&delta(seg("[0,1]"))), WordSum::basis(w(&[1, 0])));
        let two = word_model(&standard(&ms(&["[0,0]", "[1,1]"])));
        assert_eq!(two, WordSum::basis(w(&[0, 1])).add(&WordSum::basis(w(&[1, 0]))));
        let s = expand_s_in_standard(seg("[0,1]")).unwrap();
        assert_eq!(word_model(&s), WordSum::basis(w(&[0, 1])));
    }

    #[test]
    fn s_expansions() {
        assert_eq!(
            expand_s_in_standard(seg("[0,1]")).unwrap(),
            standard(&ms(&["[0,0]", "[1,1]"])).sub(&delta(seg("[0,1]")))
        );
        assert_eq!(expand_s_in_standard(seg("[0,0]")).unwrap(), delta(seg("[0,0]")));
        let s02 = expand_s_in_standard(seg("[0,2]")).unwrap();
        let expect = standard(&ms(&["[0,0]", "[1,1]", "[2,2]"]))
            .sub(&standard(&ms(&["[0,1]", "[2,2]"])))
            .sub(&standard(&ms(&["[0,0]", "[1,2]"])))
            .add(&delta(seg("[0,2]")));
        assert_eq!(s02, expect);
        assert!(expand_s_in_standard(Segment::EMPTY).is_err());
    }

    /// Independent closed form: the coefficient of a composition with
    /// `m` blocks is `(-1)^(len - m)`.
    fn s_oracle(d: Segment) -> GlElement {
        let len = d.len();
        GlElement::from_terms(compositions(len).into_iter().map(|b| {
            let sign = if (len - b.len()).is_multiple_of(2) { 1 } else { -1 };
            (Multisegment::new(blocks_to_segments(d.lo(), &b)), BigInt::from(sign))
        }))
    }

    #[test]
    fn s_expansion_matches_sign_oracle_and_ascending_word() {
        for len in 1..=6 {
            for lo in [Exponent::int(-2), Exponent::from_twice(1)] {
                let d = Segment::new(lo, lo.shift(len - 1)).unwrap();
                let s = expand_s_in_standard(d).unwrap();
                assert_eq!(s, s_oracle(d));
                assert_eq!(word_model(&s), WordSum::basis(d.ascending_word()));
            }
        }
    }

    #[test]
    fn involution_examples() {
        let x = delta(seg("[0,1]"));
        assert_eq!(
            involution_ring(&x).unwrap(),
            expand_s_in_standard(seg("[0,1]")).unwrap()
        );
        assert_eq!(involution_ring(&delta(seg("[0,0]"))).unwrap(), delta(seg("[0,0]")));
        let y = delta(seg("[0,2]"));
        assert_eq!(involution_ring(&involution_ring(&y).unwrap()).unwrap(), y);
    }

    #[test]
    fn word_coefficient_matches_expansion() {
        let x = standard(&ms(&["[0,1]", "[1,2]", "[0,0]"])).sub(&standard(&ms(&["[0,2]", "[0,1]"])));
        let full = word_model(&x);
        for (word, c) in full.iter() {
            assert_eq!(&word_coefficient(word, &x), c);
        }
        assert_eq!(word_model_exec(&x, Exec::Parallel), full);
    }
}
