//! Formal group laws truncated at a total degree `D`.
//!
//! A law is stored as its sum series `F(u, v)` and formal inverse `χ(u)`,
//! both polynomials in the series variables `u = U(1)`, `v = U(2)` with
//! every term of degree at most `D`. Coefficients are ordinary polynomials in
//! `b` or `m_k`, which never count towards truncation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

pub const U: Var = Var::U(1);
pub const V: Var = Var::U(2);
pub const W: Var = Var::U(3);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawKind {
    /// `F = u + v`.
    Additive,
    /// `F = u + v - b·uv` for a parameter `b` free of graded variables.
    Multiplicative { b: Poly },
    /// The rational model of the universal law with log generators
    /// `m_1, …, m_K`.
    UniversalRational { generators: u8 },
}

impl LawKind {
    /// The multiplicative law with `b = β`.
    pub fn multiplicative_beta() -> Self {
        LawKind::Multiplicative { b: Poly::beta() }
    }

    /// Builds the law at bound `bound` without the `K ≥ D` check.
    pub(crate) fn law_unchecked(&self, bound: u32) -> Result<FormalGroupLaw> {
        match self {
            LawKind::Additive => Ok(FormalGroupLaw::additive(bound)),
            LawKind::Multiplicative { b } => FormalGroupLaw::multiplicative(b.clone(), bound),
            LawKind::UniversalRational { generators } => {
                Ok(FormalGroupLaw::universal_unchecked(*generators, bound))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalGroupLaw {
    kind: LawKind,
    bound: u32,
    sum: Poly,
    inverse: Poly,
    logarithm: Option<Poly>,
}

impl FormalGroupLaw {
    pub fn additive(bound: u32) -> Self {
        FormalGroupLaw {
            kind: LawKind::Additive,
            bound,
            sum: (Poly::var(U) + Poly::var(V)).truncate(bound),
            inverse: (-Poly::var(U)).truncate(bound),
            logarithm: Some(Poly::var(U).truncate(bound)),
        }
    }

    pub fn multiplicative(b: Poly, bound: u32) -> Result<Self> {
        if b.has_graded_vars() {
            return Err(Error::GradedParameter);
        }
        let uv = Poly::var(U) * Poly::var(V);
        let sum = (Poly::var(U) + Poly::var(V) - &b * &uv).truncate(bound);
        let inverse = solve_inverse(&sum, bound);
        Ok(FormalGroupLaw {
            kind: LawKind::Multiplicative { b },
            bound,
            sum,
            inverse,
            logarithm: None,
        })
    }

    /// `log(u) = u + Σ_{k ≤ K} m_k u^{k+1}`, `F = exp(log u + log v)`,
    /// `χ = exp(-log u)`. Requires `K ≥ D`.
    pub fn universal_rational(generators: u8, bound: u32) -> Result<Self> {
        if u32::from(generators) < bound {
            return Err(Error::TooFewGenerators { needed: bound, got: u32::from(generators) });
        }
        Ok(Self::universal_unchecked(generators, bound))
    }

    fn universal_unchecked(generators: u8, bound: u32) -> Self {
        let mut log = Poly::var(U);
        for k in 1..=generators {
            log = &log + &(Poly::var(Var::M(k)) * Poly::var(U).pow(u32::from(k) + 1));
        }
        let log = TruncatedSeries::new(log, bound);
        let exp = log.compositional_inverse().expect("log starts with u");
        let log_v = log.body().rename(|v| if v == U { V } else { v });
        let sum = exp.compose(U, &(log.body() + &log_v)).into_body();
        let inverse = exp.compose(U, &(-log.body())).into_body();
        FormalGroupLaw {
            kind: LawKind::UniversalRational { generators },
            bound,
            sum,
            inverse,
            logarithm: Some(log.into_body()),
        }
    }

    pub fn kind(&self) -> &LawKind {
        &self.kind
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `F(u, v)`.
    pub fn sum_series(&self) -> &Poly {
        &self.sum
    }

    /// `χ(u)`.
    pub fn inverse_series(&self) -> &Poly {
        &self.inverse
    }

    pub fn logarithm(&self) -> Option<&Poly> {
        self.logarithm.as_ref()
    }

    /// The same law at another truncation bound.
    pub fn with_bound(&self, bound: u32) -> Result<Self> {
        self.kind.law_unchecked(bound)
    }

    /// `F(a, b)` truncated at `D`; `a` and `b` must have no constant term.
    pub fn sum(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        check_no_constant(a)?;
        check_no_constant(b)?;
        let map = BTreeMap::from([(U, a.clone()), (V, b.clone())]);
        Ok(self.sum.substitute_truncated(&map, self.bound))
    }

    /// `χ(a)` truncated at `D`.
    pub fn inverse(&self, a: &Poly) -> Result<Poly> {
        check_no_constant(a)?;
        let map = BTreeMap::from([(U, a.clone())]);
        Ok(self.inverse.substitute_truncated(&map, self.bound))
    }

    /// Chern polynomial and top Chern class of `E^∨ ⊗ F`, where `E` has
    /// roots `y_roots` and `F` has roots `x_roots`:
    /// `Π (1 + F(x_i, χ(y_j))·t)` and `Π F(x_i, χ(y_j))`.
    pub fn chern_tensor_dual(&self, x_roots: &[Poly], y_roots: &[Poly]) -> Result<(Poly, Poly)> {
        let duals: Vec<Poly> = y_roots.iter().map(|y| self.inverse(y)).collect::<Result<_>>()?;
        let t = Poly::var(Var::T);
        let mut chern = Poly::one();
        let mut top = Poly::one();
        for x in x_roots {
            for yd in &duals {
                let root = self.sum(x, yd)?;
                chern = chern.mul_truncated(&(Poly::one() + &root * &t), self.bound);
                top = top.mul_truncated(&root, self.bound);
            }
        }
        Ok((chern, top))
    }
}

fn check_no_constant(a: &Poly) -> Result<()> {
    if a.graded_part(0).is_zero() {
        Ok(())
    } else {
        Err(Error::ConstantTerm)
    }
}

/// Solves `F(u, χ(u)) = 0` one degree at a time. `∂F/∂v = 1 + …`, so
/// correcting `χ` by `-c·u^k` removes a defect `c·u^k` at degree `k`.
pub fn solve_inverse(sum: &Poly, bound: u32) -> Poly {
    let mut chi = (-Poly::var(U)).truncate(bound);
    for k in 2..=bound {
        let map = BTreeMap::from([(V, chi.clone())]);
        let defect = sum.substitute_truncated(&map, k).graded_part(k);
        chi = &chi - &defect;
    }
    chi
}

/// The substitution `m_k ↦ b^k/(k+1)` turning the universal log into the
/// multiplicative one, `-log(1 - bu)/b`.
pub fn multiplicative_specialization(generators: u8, b: &Poly) -> BTreeMap<Var, Poly> {
    (1..=generators)
        .map(|k| {
            let c = Scalar::ratio(1, i64::from(k) + 1);
            (Var::M(k), b.pow(u32::from(k)).scale(&c))
        })
        .collect()
}

/// `m_k ↦ 0` for every generator.
pub fn additive_specialization(generators: u8) -> BTreeMap<Var, Poly> {
    (1..=generators).map(|k| (Var::M(k), Poly::zero())).collect()
}
