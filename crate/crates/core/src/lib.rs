//! Exact symbolic calculus for double β-polynomials, generalized divided
//! differences over formal group laws, Bott-Samelson classes, the nil-Hecke
//! style algebra with `u_i² = βu_i`, and Thom-Porteous polynomials.
//!
//! Everything is exact: coefficients are rationals with arbitrary-precision
//! numerators and denominators, and formal power series are explicit
//! truncations whose bound is part of the value.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod divdiff;
pub mod error;
pub mod families;
pub mod fgl;
pub mod flag;
pub mod hecke;
pub mod perm;
pub mod poly;
pub mod porteous;
pub mod ring;
pub mod scalar;
pub mod series;

pub use divdiff::{Mode, OperatorContext};
pub use error::{Error, Result};
pub use fgl::{FormalGroupLaw, LawKind};
pub use flag::FlagRingPresentation;
pub use hecke::HeckeElement;
pub use perm::{Permutation, Word};
pub use poly::{Monomial, Poly, Var};
pub use porteous::{DPoly, RankTriple, Theory};
pub use ring::CoefficientRing;
pub use scalar::Scalar;
pub use series::TruncatedSeries;
