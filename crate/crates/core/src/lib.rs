//! Symbolic Grothendieck-group calculus for smooth representations of
//! p-adic general linear and classical groups supported on one
//! self-dual cuspidal line.
//!
//! Layers, bottom up: [`seg`] (exponents, segments, words), [`gl`] (the
//! ring `R` with `m*`, `M*`, derivatives and the involution),
//! [`classical`] (the comodule `R(S)` and its word model), [`langlands`]
//! (parameters, detection words, multiplicity bounds) and [`verifier`]
//! (the case arguments and sweeps). [`syntax`] parses the text forms.

pub mod classical;
pub mod error;
pub mod exec;
pub mod gl;
pub mod langlands;
pub mod linalg;
pub mod linear;
pub mod memo;
pub mod regular;
pub mod seg;
pub mod syntax;
pub mod verifier;
pub mod word;

pub use classical::{ClassicalElement, Induced, MuSum, TemperedSymbol};
pub use error::{Error, Result};
pub use exec::Exec;
pub use langlands::{Case, LanglandsDatum, SubquotientParam};
pub use linear::{Basis, Combination, GlElement, GlTensor, Tensor, WordSum};
pub use seg::{CuspidalContext, Exponent, Multisegment, Segment, Word};
pub use verifier::{Sweep, VerificationReport};
