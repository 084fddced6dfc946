//! Coefficient-ring descriptors.
//!
//! Every polynomial is stored over ℚ; a [`CoefficientRing`] is a membership
//! predicate saying which coefficients and which generator variables
//! (`b`, `m_k`) are admissible.

use alloc::string::{String, ToString};
use core::fmt;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientRing {
    Integers,
    Rationals,
    /// ℤ[β].
    BetaRing,
    /// ℚ[m_1, …, m_K].
    LazardRational { generators: u8 },
}

impl CoefficientRing {
    /// Whether every coefficient of `p` (viewed as a polynomial in the
    /// non-generator variables) lies in this ring.
    pub fn contains(&self, p: &Poly) -> bool {
        p.terms().iter().all(|(m, c)| {
            let coeff_ok = match self {
                CoefficientRing::Integers | CoefficientRing::BetaRing => c.is_integer(),
                _ => true,
            };
            coeff_ok
                && m.vars().all(|v| match (self, v) {
                    (_, v) if !v.is_generator() => true,
                    (CoefficientRing::BetaRing, Var::Beta) => true,
                    (CoefficientRing::LazardRational { generators }, Var::M(k)) => {
                        k >= 1 && k <= *generators
                    }
                    _ => false,
                })
        })
    }

    /// Units of the ring among the scalars.
    pub fn is_unit(&self, c: &Scalar) -> bool {
        match self {
            CoefficientRing::Integers | CoefficientRing::BetaRing => {
                matches!(c, Scalar::Small(1) | Scalar::Small(-1))
            }
            _ => !c.is_zero(),
        }
    }

    pub fn check(&self, p: &Poly) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::RingMismatch { ring: self.to_string() })
        }
    }

    /// Smallest of the standard rings containing `p`.
    pub fn infer(p: &Poly) -> CoefficientRing {
        let vars = p.vars();
        let max_m = vars
            .iter()
            .filter_map(|v| if let Var::M(k) = v { Some(*k) } else { None })
            .max();
        let integral = p.terms().iter().all(|(_, c)| c.is_integer());
        match (max_m, vars.contains(&Var::Beta)) {
            (Some(k), false) => CoefficientRing::LazardRational { generators: k },
            (None, true) if integral => CoefficientRing::BetaRing,
            (None, false) if integral => CoefficientRing::Integers,
            (None, false) => CoefficientRing::Rationals,
            // No standard ring holds both β and m_k, or β with fractions.
            _ => CoefficientRing::Rationals,
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => f.write_str("Z"),
            CoefficientRing::Rationals => f.write_str("Q"),
            CoefficientRing::BetaRing => f.write_str("Z[b]"),
            CoefficientRing::LazardRational { generators } => {
                let s: String = (1..=*generators)
                    .map(|k| alloc::format!("m{k}"))
                    .collect::<alloc::vec::Vec<_>>()
                    .join(",");
                write!(f, "Q[{s}]")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring-checked arithmetic: both operands must belong to `ring`.
pub fn poly_arith(ring: CoefficientRing, a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    ring.check(a)?;
    ring.check(b)?;
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}
