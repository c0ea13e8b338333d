//! Exponents, segments, multisegments and words on one self-dual cuspidal line.
//!
//! Every exponent is a half-integer and is stored doubled, so all arithmetic
//! stays in the integers. The segment `[lo,hi]` stands for
//! `{ν^lo ρ, ν^(lo+1) ρ, …, ν^hi ρ}`; `hi = lo - 1` is the empty segment,
//! which acts as the multiplicative unit.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

/// A half-integer exponent of `ν`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Exponent(i64);

impl Exponent {
    pub const ZERO: Exponent = Exponent(0);

    pub const fn from_twice(twice: i64) -> Self {
        Exponent(twice)
    }

    pub const fn int(k: i64) -> Self {
        Exponent(2 * k)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    /// Move by `steps` whole units along the line.
    pub const fn shift(self, steps: i64) -> Self {
        Exponent(self.0 + 2 * steps)
    }

    pub const fn abs(self) -> Self {
        Exponent(self.0.abs())
    }

    /// Whole number of steps from `self` up to `other` (`None` if they lie
    /// on different integral cosets).
    pub fn steps_to(self, other: Exponent) -> Option<i64> {
        let d = other.0 - self.0;
        (d % 2 == 0).then_some(d / 2)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("invalid exponent `{s}`"),
        };
        match s.split_once('/') {
            Some((num, den)) => {
                if den.trim() != "2" {
                    return Err(bad());
                }
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                Ok(Exponent(num))
            }
            None => {
                let k: i64 = s.parse().map_err(|_| bad())?;
                Ok(Exponent::int(k))
            }
        }
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The fixed data of a computation: ρ, σ and the reducibility point α.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalContext {
    pub rho: String,
    pub sigma: String,
    pub alpha: Exponent,
    pub rho_self_dual: bool,
}

impl CuspidalContext {
    pub fn new(alpha: Exponent) -> Result<Self> {
        if alpha.twice() <= 0 {
            return Err(Error::BadAlpha(alpha.to_string()));
        }
        Ok(CuspidalContext {
            rho: "rho".into(),
            sigma: "sigma".into(),
            alpha,
            rho_self_dual: true,
        })
    }

    pub fn from_str_alpha(s: &str) -> Result<Self> {
        Self::new(Exponent::parse(s)?)
    }
}

/// A segment `[lo,hi]` of the cuspidal line, possibly empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    lo: Exponent,
    hi: Exponent,
}

impl Segment {
    /// The canonical empty segment.
    pub const EMPTY: Segment = Segment {
        lo: Exponent(0),
        hi: Exponent(-2),
    };

    /// `hi - lo` must be an integer `>= -1`; `hi = lo - 1` yields [`Segment::EMPTY`].
    pub fn new(lo: Exponent, hi: Exponent) -> Result<Self> {
        let bad = |reason| Error::BadSegment {
            lo: lo.to_string(),
            hi: hi.to_string(),
            reason,
        };
        match lo.steps_to(hi) {
            None => Err(bad("endpoints differ by a non-integer")),
            Some(d) if d < -1 => Err(bad("hi is below lo - 1")),
            Some(-1) => Ok(Segment::EMPTY),
            Some(_) => Ok(Segment { lo, hi }),
        }
    }

    pub fn ints(lo: i64, hi: i64) -> Self {
        Segment::new(Exponent::int(lo), Exponent::int(hi)).expect("valid integral segment")
    }

    pub fn point(x: Exponent) -> Self {
        Segment { lo: x, hi: x }
    }

    pub fn is_empty(&self) -> bool {
        *self == Segment::EMPTY
    }

    pub fn lo(&self) -> Exponent {
        self.lo
    }

    pub fn hi(&self) -> Exponent {
        self.hi
    }

    /// Number of cuspidal points.
    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.lo.steps_to(self.hi).unwrap() + 1) as usize
        }
    }

    pub fn points(&self) -> impl DoubleEndedIterator<Item = Exponent> + Clone {
        let lo = self.lo;
        (0..self.len() as i64).map(move |i| lo.shift(i))
    }

    pub fn contains(&self, x: Exponent) -> bool {
        !self.is_empty() && self.lo <= x && x <= self.hi && self.lo.steps_to(x).is_some()
    }

    /// The center `(lo + hi) / 2`; always a half-integer.
    pub fn center(&self) -> Exponent {
        Exponent((self.lo.0 + self.hi.0) / 2)
    }

    /// `Δ⁻`: drop the top point.
    pub fn minus(&self) -> Result<Segment> {
        if self.is_empty() {
            return Err(Error::EmptySegment("seg_minus"));
        }
        Segment::new(self.lo, self.hi.shift(-1))
    }

    /// Shift both endpoints by `twice / 2`.
    pub fn translate(&self, twice: i64) -> Segment {
        if self.is_empty() {
            return Segment::EMPTY;
        }
        Segment {
            lo: Exponent(self.lo.0 + twice),
            hi: Exponent(self.hi.0 + twice),
        }
    }

    /// `Δ̃ = [-hi, -lo]` (ρ is self-dual).
    pub fn contragredient(&self) -> Segment {
        if self.is_empty() {
            return Segment::EMPTY;
        }
        Segment {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    /// Union, when it is again a segment.
    pub fn union(&self, other: &Segment) -> Option<Segment> {
        if self.is_empty() {
            return Some(*other);
        }
        if other.is_empty() {
            return Some(*self);
        }
        self.lo.steps_to(other.lo)?;
        let lo = self.lo.min(other.lo);
        let hi = self.hi.max(other.hi);
        let gap_ok = self.lo.max(other.lo) <= self.hi.min(other.hi).shift(1);
        gap_ok.then_some(Segment { lo, hi })
    }

    pub fn intersection(&self, other: &Segment) -> Segment {
        if self.is_empty() || other.is_empty() || self.lo.steps_to(other.lo).is_none() {
            return Segment::EMPTY;
        }
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo > hi {
            Segment::EMPTY
        } else {
            Segment { lo, hi }
        }
    }

    /// Linked: the union is a segment different from both.
    pub fn linked(&self, other: &Segment) -> bool {
        if self.is_empty() || other.is_empty() {
            return false;
        }
        match self.union(other) {
            Some(u) => u != *self && u != *other,
            None => false,
        }
    }

    /// `hi, hi-1, …, lo`: the minimal Jacquet module of `δ(Δ)`.
    pub fn descending_word(&self) -> Word {
        Word(self.points().rev().collect())
    }

    /// `lo, lo+1, …, hi`: the minimal Jacquet module of `𝔰(Δ)`.
    pub fn ascending_word(&self) -> Word {
        Word(self.points().collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("segment `{t}` must look like [lo,hi]"),
            })?;
        if inner.trim().is_empty() {
            return Ok(Segment::EMPTY);
        }
        match inner.split_once(',') {
            Some((lo, hi)) => Segment::new(Exponent::parse(lo)?, Exponent::parse(hi)?),
            None => Ok(Segment::point(Exponent::parse(inner)?)),
        }
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lo, self.hi).cmp(&(other.lo, other.hi))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "[]")
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sort key for the standard-module order: decreasing center, then
/// decreasing `hi`, then decreasing `lo`.
fn langlands_key(d: &Segment) -> (Reverse<Exponent>, Reverse<Exponent>, Reverse<Exponent>) {
    (Reverse(d.center()), Reverse(d.hi), Reverse(d.lo))
}

/// Arrange segments in standard-module order.
pub fn langlands_sort(segs: &[Segment]) -> Result<Vec<Segment>> {
    if segs.iter().any(Segment::is_empty) {
        return Err(precondition("langlands_sort", "all segments must be non-empty"));
    }
    let mut out = segs.to_vec();
    out.sort_by_key(langlands_key);
    Ok(out)
}

/// Whether `segs` is decreasing in the sense used by Langlands data
/// (centers weakly decreasing).
pub fn is_decreasing(segs: &[Segment]) -> bool {
    segs.windows(2).all(|w| w[0].center() >= w[1].center())
}

/// A finite multiset of non-empty segments, stored sorted by `(lo, hi)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Multisegment(Vec<Segment>);

impl Multisegment {
    pub fn unit() -> Self {
        Multisegment(Vec::new())
    }

    pub fn new(segs: impl IntoIterator<Item = Segment>) -> Self {
        let mut v: Vec<Segment> = segs.into_iter().filter(|s| !s.is_empty()).collect();
        v.sort();
        Multisegment(v)
    }

    pub fn single(d: Segment) -> Self {
        Multisegment::new([d])
    }

    pub fn segments(&self) -> &[Segment] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total cardinality: the grading of `λ(d)` in `R`.
    pub fn degree(&self) -> usize {
        self.0.iter().map(Segment::len).sum()
    }

    pub fn add(&self, other: &Multisegment) -> Multisegment {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort();
        Multisegment(v)
    }

    pub fn with(&self, d: Segment) -> Multisegment {
        self.add(&Multisegment::single(d))
    }

    pub fn contragredient(&self) -> Multisegment {
        Multisegment::new(self.0.iter().map(Segment::contragredient))
    }

    pub fn translate(&self, twice: i64) -> Multisegment {
        Multisegment(self.0.iter().map(|s| s.translate(twice)).collect())
    }

    /// `d⁻`: every segment loses its top point; singletons disappear.
    pub fn minus(&self) -> Multisegment {
        Multisegment::new(self.0.iter().map(|s| s.minus().expect("stored segments are non-empty")))
    }

    /// Cuspidal support as a sorted list of exponents (with multiplicity).
    pub fn support(&self) -> Vec<Exponent> {
        let mut v: Vec<Exponent> = self.0.iter().flat_map(|s| s.points()).collect();
        v.sort();
        v
    }

    /// Segments in standard-module order.
    pub fn langlands_order(&self) -> Vec<Segment> {
        langlands_sort(&self.0).expect("stored segments are non-empty")
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sequence of exponents; the leftmost letter is the outermost Jacquet layer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<Exponent>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Exponent] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverse and negate: the word of the contragredient.
    pub fn reverse_negate(&self) -> Word {
        Word(self.0.iter().rev().map(|x| -*x).collect())
    }

    pub fn negate(&self) -> Word {
        Word(self.0.iter().map(|x| -*x).collect())
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        if inner.trim().is_empty() {
            return Ok(Word::empty());
        }
        inner
            .split(',')
            .map(Exponent::parse)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl FromIterator<Exponent> for Word {
    fn from_iter<I: IntoIterator<Item = Exponent>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
