//! Finite `Z`-linear combinations over an ordered basis.
//!
//! Zero coefficients are never stored, so structural equality of two
//! combinations is equality of the elements they denote.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::seg::{Multisegment, Word};

/// A basis element that knows how to print itself inside a sum.
pub trait Basis: Ord + Clone {
    fn render(&self) -> String;
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, BigInt::one())
    }

    pub fn term(k: K, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c.into());
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, k: K, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-BigInt::one());
        out
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    pub fn coeff(&self, k: &K) -> BigInt {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with non-zero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `self <= other` coefficientwise.
    pub fn le(&self, other: &Self) -> bool {
        self.terms.iter().all(|(k, c)| *c <= other.coeff(k))
            && other
                .terms
                .iter()
                .all(|(k, c)| self.terms.contains_key(k) || !c.is_negative())
    }

    /// Keep only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Combination {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<L>) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_assign_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a map on basis elements that may fail.
    pub fn try_map_linear<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<Combination<L>, E>,
    ) -> Result<Combination<L>, E> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_assign_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// Relabel basis elements (coefficients of colliding keys add up).
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Bilinear extension of a map on pairs of basis elements.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &Combination<L>,
        mut f: impl FnMut(&K, &L) -> Combination<M>,
    ) -> Combination<M> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            for (l, d) in &other.terms {
                out.add_assign_scaled(&f(k, l), &(c * d));
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Basis> Combination<K> {
    /// Canonical text: terms in basis order, `c*` prefix when `|c| != 1`,
    /// `0` for the zero element.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            s.push_str(&k.render());
        }
        s
    }
}

impl<K: Basis> fmt::Display for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<K: Basis> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Basis for Multisegment {
    fn render(&self) -> String {
        if self.is_unit() {
            "1".into()
        } else {
            self.to_string()
        }
    }
}

impl Basis for Word {
    fn render(&self) -> String {
        self.to_string()
    }
}

/// Basis element `a ⊗ b` of a tensor product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: Basis, B: Basis> Basis for Tensor<A, B> {
    fn render(&self) -> String {
        format!("{} (x) {}", self.0.render(), self.1.render())
    }
}

/// An element of the graded ring `R`, written in the standard-module basis.
pub type GlElement = Combination<Multisegment>;
/// An element of `R ⊗ R`.
pub type GlTensor = Combination<Tensor<Multisegment, Multisegment>>;
/// A combination of words (a minimal Jacquet module).
pub type WordSum = Combination<Word>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seg::Segment;

    #[test]
    fn zero_coefficients_vanish() {
        let m = Multisegment::single(Segment::ints(0, 1));
        let mut x = GlElement::basis(m.clone());
        x.add_term(m, BigInt::from(-1));
        assert!(x.is_zero());
        assert_eq!(x.render(), "0");
    }

    #[test]
    fn render_is_canonical() {
        let a = Multisegment::single(Segment::ints(0, 1));
        let b = Multisegment::new([Segment::ints(0, 0), Segment::ints(1, 1)]);
        let x = GlElement::from_terms([(a, BigInt::from(-1)), (b, BigInt::from(1))]);
        assert_eq!(x.render(), "{[0,0],[1,1]} - {[0,1]}");
        let y = GlElement::term(Multisegment::unit(), 3);
        assert_eq!(y.render(), "3*1");
    }

    #[test]
    fn coefficientwise_order() {
        let w = |v: &[i64]| Word(v.iter().map(|&k| crate::seg::Exponent::int(k)).collect());
        let small = WordSum::basis(w(&[1]));
        let big = WordSum::from_terms([(w(&[1]), BigInt::from(2)), (w(&[2]), BigInt::from(1))]);
        assert!(small.le(&big));
        assert!(!big.le(&small));
    }
}
