//! Divided-difference operators.
//!
//! `φ_i^{(β)} P = ((1 + βx_{i+1})P - (1 + βx_i)σ_i P) / (x_i - x_{i+1})` is
//! computed directly from its definition. The law-dependent operator
//! `A_i = (1 + σ_i)(· / F(x_i, χ(x_{i+1})))` is computed separately by
//! splitting `F(u, χ(v)) = (u - v)·g(u, v)` symbolically, so the two routes
//! stay independent and can check each other.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fgl::{LawKind, U, V};
use crate::poly::{exact_divide_linear, Poly, Var};
use crate::ring::CoefficientRing;
use crate::series::TruncatedSeries;

/// `σ_i`: exchanges `x_i` and `x_{i+1}`.
pub fn swap(i: usize, p: &Poly) -> Poly {
    p.swap_vars(Var::x(i), Var::x(i + 1))
}

/// `φ_i^{(β)}` for an arbitrary parameter `β` free of `x`-variables.
pub fn phi(beta: &Poly, i: usize, p: &Poly) -> Result<Poly> {
    let sp = swap(i, p);
    let mut numerator = p - &sp;
    if !beta.is_zero() {
        let (xi, xj) = (Poly::x(i), Poly::x(i + 1));
        numerator = &numerator + &(beta * &(&(&xj * p) - &(&xi * &sp)));
    }
    exact_divide_linear(&numerator, i)
}

/// `∂_i = φ_i^{(0)}`.
pub fn partial(i: usize, p: &Poly) -> Result<Poly> {
    phi(&Poly::zero(), i, p)
}

/// `π_i = φ_i^{(-1)}`.
pub fn pi(i: usize, p: &Poly) -> Result<Poly> {
    phi(&Poly::constant(-1), i, p)
}

/// Precomputed data for `A_i` under a formal group law.
///
/// Holds `g(u, v)^{-1}` where `F(u, χ(v)) = (u - v)·g(u, v)`, valid modulo
/// degree above `max_bound + 1`.
#[derive(Clone, Debug)]
pub struct FglOperators {
    kind: LawKind,
    max_bound: u32,
    denominator_inverse: Poly,
}

impl FglOperators {
    /// Operators whose outputs are exact modulo degree above `max_bound`.
    pub fn new(kind: &LawKind, max_bound: u32) -> Result<Self> {
        let law = kind.law_unchecked(max_bound + 2)?;
        let diff = law.sum(&Poly::var(U), &law.inverse(&Poly::var(V))?)?;
        let g = diff.divide_by_difference(U, V).map_err(|_| Error::Factorization)?;
        let ring = match kind {
            LawKind::UniversalRational { .. } => CoefficientRing::Rationals,
            _ => CoefficientRing::Integers,
        };
        let g = TruncatedSeries::new(g, max_bound + 1);
        let denominator_inverse = g.reciprocal(ring).map_err(|_| Error::Factorization)?.into_body();
        Ok(FglOperators { kind: kind.clone(), max_bound, denominator_inverse })
    }

    pub fn kind(&self) -> &LawKind {
        &self.kind
    }

    pub fn max_bound(&self) -> u32 {
        self.max_bound
    }

    /// `A_i(p)` modulo degree above `out_bound`; `p` must be known modulo
    /// degree above `out_bound + 1`.
    pub fn apply(&self, i: usize, p: &Poly, out_bound: u32) -> Result<Poly> {
        if out_bound > self.max_bound {
            return Err(Error::BoundTooSmall { min: out_bound });
        }
        let inv = self
            .denominator_inverse
            .truncate(out_bound + 1)
            .rename(|v| match v {
                U => Var::x(i),
                V => Var::x(i + 1),
                other => other,
            });
        let h = p.mul_truncated(&inv, out_bound + 1);
        exact_divide_linear(&(&h - &swap(i, &h)), i)
    }
}

/// Which operator family a context applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `φ_i^{(β)}` with the given parameter; exact.
    Beta(Poly),
    /// `A_i` for a formal group law; results are reported modulo degree
    /// above the context bound.
    Law(LawKind),
}

#[derive(Clone, Debug)]
pub struct OperatorContext {
    n: usize,
    mode: Mode,
    bound: u32,
    ops: Option<FglOperators>,
}

/// Result of a braid-relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidReport {
    pub holds: bool,
    /// The first sample where the relation fails and the difference
    /// `O_i O_{i+1} O_i p - O_{i+1} O_i O_{i+1} p`.
    pub witness: Option<(Poly, Poly)>,
}

impl OperatorContext {
    /// A context over `x_1..x_n`. In law mode the operators are prepared for
    /// words up to length 3; longer words rebuild them on demand.
    pub fn new(n: usize, mode: Mode, bound: u32) -> Result<Self> {
        let ops = match &mode {
            Mode::Beta(beta) => {
                if beta.has_graded_vars() {
                    return Err(Error::GradedParameter);
                }
                None
            }
            Mode::Law(kind) => {
                if let LawKind::UniversalRational { generators } = kind {
                    if u32::from(*generators) < bound {
                        return Err(Error::TooFewGenerators {
                            needed: bound,
                            got: u32::from(*generators),
                        });
                    }
                }
                Some(FglOperators::new(kind, bound + 2)?)
            }
        };
        Ok(OperatorContext { n, mode, bound, ops })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            Err(Error::IndexOutOfRange { index: i, max: self.n.saturating_sub(1) })
        } else {
            Ok(())
        }
    }

    /// A single operator `O_i`.
    pub fn apply(&self, i: usize, p: &Poly) -> Result<Poly> {
        self.compose_word(&[i], p)
    }

    /// `O_{i_l} ∘ ⋯ ∘ O_{i_1}` applied to `p`: the first letter acts first.
    ///
    /// In law mode `p` is taken as exact and the result is exact modulo
    /// degree above the context bound.
    pub fn compose_word(&self, word: &[usize], p: &Poly) -> Result<Poly> {
        for &i in word {
            self.check_index(i)?;
        }
        match &self.mode {
            Mode::Beta(beta) => word.iter().try_fold(p.clone(), |acc, &i| phi(beta, i, &acc)),
            Mode::Law(kind) => {
                let l = word.len() as u32;
                if l == 0 {
                    return Ok(p.truncate(self.bound));
                }
                let top = self.bound + l - 1;
                let rebuilt;
                let ops = match &self.ops {
                    Some(ops) if ops.max_bound() >= top => ops,
                    _ => {
                        rebuilt = FglOperators::new(kind, top)?;
                        &rebuilt
                    }
                };
                let mut acc = p.truncate(top + 1);
                for (k, &i) in word.iter().enumerate() {
                    acc = ops.apply(i, &acc, top - k as u32)?;
                }
                Ok(acc)
            }
        }
    }

    /// Compares `O_i O_{i+1} O_i` with `O_{i+1} O_i O_{i+1}` on each sample.
    pub fn braid_check(&self, i: usize, samples: &[Poly]) -> Result<BraidReport> {
        self.check_index(i + 1)?;
        for p in samples {
            let a = self.compose_word(&[i, i + 1, i], p)?;
            let b = self.compose_word(&[i + 1, i, i + 1], p)?;
            if a != b {
                return Ok(BraidReport { holds: false, witness: Some((p.clone(), &a - &b)) });
            }
        }
        Ok(BraidReport { holds: true, witness: None })
    }

    /// Checks `O_i O_j = O_j O_i` on each sample, returning a failing one.
    pub fn commutation_check(&self, i: usize, j: usize, samples: &[Poly]) -> Result<Option<Poly>> {
        for p in samples {
            if self.compose_word(&[i, j], p)? != self.compose_word(&[j, i], p)? {
                return Ok(Some(p.clone()));
            }
        }
        Ok(None)
    }
}

/// Applies `φ` along every letter of `word` (first letter first).
pub fn phi_word(beta: &Poly, word: &[usize], p: &Poly) -> Result<Poly> {
    word.iter().try_fold(p.clone(), |acc, &i| phi(beta, i, &acc))
}

/// Polynomials in `x_1..x_n` symmetric in `x_i, x_{i+1}`, built from
/// elementary pieces; used as left scalars in linearity checks.
pub fn symmetric_pair_samples(i: usize) -> Vec<Poly> {
    let (a, b) = (Poly::x(i), Poly::x(i + 1));
    alloc::vec![&a + &b, &a * &b, Poly::y(1) + &a * &b, (&a + &b).pow(2) - Poly::beta()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::scalar::Scalar;
    use proptest::prelude::*;

    fn x(i: usize) -> Poly {
        Poly::x(i)
    }

    #[test]
    fn swap_examples() {
        assert_eq!(swap(1, &x(1)), x(2));
        assert_eq!(swap(1, &(x(1) * x(2))), x(1) * x(2));
        let p = x(1) + Poly::y(2);
        assert_eq!(swap(2, &p), p);
    }

    #[test]
    fn phi_examples() {
        let b = Poly::beta();
        let h = x(1) + Poly::y(1) + &b * &(x(1) * Poly::y(1));
        assert_eq!(phi(&b, 1, &h).unwrap(), Poly::one());
        assert_eq!(phi(&b, 1, &Poly::one()).unwrap(), -b.clone());
        assert_eq!(phi(&b, 1, &(x(1) * x(2))).unwrap(), -(&b * &(x(1) * x(2))));
        assert_eq!(partial(1, &x(1)).unwrap(), Poly::one());
        assert_eq!(partial(1, &x(1).pow(2)).unwrap(), x(1) + x(2));
        assert_eq!(pi(1, &Poly::one()).unwrap(), Poly::one());
    }

    #[test]
    fn law_operator_examples() {
        let add = OperatorContext::new(2, Mode::Law(LawKind::Additive), 3).unwrap();
        assert_eq!(add.apply(1, &x(1)).unwrap(), Poly::one());
        let empty = OperatorContext::new(3, Mode::Beta(Poly::beta()), 0).unwrap();
        assert_eq!(empty.compose_word(&[], &x(1)).unwrap(), x(1));
        assert_eq!(empty.apply(3, &x(1)), Err(Error::IndexOutOfRange { index: 3, max: 2 }));
    }

    /// Independent oracle for the universal `A_1(x_1^2)`: with
    /// `D_1 = F(x_1, χ(x_2))`, `D_2 = F(x_2, χ(x_1))`, the result `r` solves
    /// `r·D_1·D_2 = x_1^2·D_2 + x_2^2·D_1`, solved degree by degree.
    #[test]
    fn universal_a1_matches_series_division() {
        let d = 3;
        let kind = LawKind::UniversalRational { generators: d as u8 };
        let ctx = OperatorContext::new(2, Mode::Law(kind), d).unwrap();
        let got = ctx.apply(1, &x(1).pow(2)).unwrap();

        let law = crate::fgl::FormalGroupLaw::universal_rational(8, 8).unwrap();
        let d1 = law.sum(&x(1), &law.inverse(&x(2)).unwrap()).unwrap();
        let d2 = law.sum(&x(2), &law.inverse(&x(1)).unwrap()).unwrap();
        let rhs = &x(1).pow(2) * &d2 + &x(2).pow(2) * &d1;
        let prod = d1.mul_truncated(&d2, 8);
        // prod = -(x1-x2)^2 + higher; solve for r degree by degree.
        let lead = prod.graded_part(2);
        let mut r = Poly::zero();
        for k in 0..=d {
            let residual = (&rhs - &r.mul_truncated(&prod, k + 2)).graded_part(k + 2);
            let q = divide_exact_by(&residual, &lead);
            r = &r + &q;
        }
        assert_eq!(got, r.truncate(d));
        assert_eq!(got.graded_part(1), x(1) + x(2));
        assert!(got.contains_var(Var::M(1)));
    }

    /// Exact division of `a` by `b` in ℚ[x, m] by repeated leading-term
    /// cancellation; panics if not exact.
    fn divide_exact_by(a: &Poly, b: &Poly) -> Poly {
        let mut rem = a.clone();
        let mut q = Poly::zero();
        let (lm, lc) = b.leading_term().unwrap().clone();
        while let Some((m, c)) = rem.leading_term().cloned() {
            assert!(lm.divides(&m), "inexact division");
            let factors = m.factors().iter().map(|&(v, e)| (v, e - lm.exponent(v)));
            let t = Poly::term(Monomial::from_factors(factors), &c / &lc);
            rem = &rem - &(&t * b);
            q = &q + &t;
        }
        q
    }

    #[test]
    fn universal_braid_failure() {
        let kind = LawKind::UniversalRational { generators: 4 };
        let ctx = OperatorContext::new(3, Mode::Law(kind), 4).unwrap();
        let p = x(1).pow(2) * x(2);
        let report = ctx.braid_check(1, &[p]).unwrap();
        assert!(!report.holds);
        let (_, diff) = report.witness.unwrap();
        assert!(diff.contains_var(Var::M(1)));

        let beta = OperatorContext::new(3, Mode::Beta(Poly::beta()), 6).unwrap();
        assert!(beta.braid_check(1, &[x(1).pow(2) * x(2), x(1).pow(3)]).unwrap().holds);
        let add = OperatorContext::new(3, Mode::Law(LawKind::Additive), 6).unwrap();
        assert!(add.braid_check(1, &[x(1).pow(2) * x(2), x(1).pow(3)]).unwrap().holds);
    }

    fn poly_strategy(n: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (-4i64..=4, prop::collection::vec(0u32..=3, n), 0u32..=1, 0u32..=1),
            0..6,
        )
        .prop_map(move |terms| {
            Poly::from_terms(terms.into_iter().map(|(c, exps, b, y)| {
                let mut f: Vec<(Var, u32)> =
                    exps.iter().enumerate().map(|(k, &e)| (Var::x(k + 1), e)).collect();
                f.push((Var::Beta, b));
                f.push((Var::Y(1), y));
                (Monomial::from_factors(f), Scalar::from(c))
            }))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn phi_squares_to_minus_beta_phi(p in poly_strategy(4), i in 1usize..4) {
            let b = Poly::beta();
            let once = phi(&b, i, &p).unwrap();
            prop_assert_eq!(phi(&b, i, &once).unwrap(), -(&b * &once));
            let d = partial(i, &p).unwrap();
            prop_assert!(partial(i, &d).unwrap().is_zero());
            let q = pi(i, &p).unwrap();
            prop_assert_eq!(pi(i, &q).unwrap(), q);
        }

        #[test]
        fn antisymmetric_numerators_divide(p in poly_strategy(3), i in 1usize..3) {
            prop_assert!(exact_divide_linear(&(&p - &swap(i, &p)), i).is_ok());
        }

        #[test]
        fn phi_output_symmetric_and_linear(p in poly_strategy(3), i in 1usize..3) {
            let b = Poly::beta();
            let out = phi(&b, i, &p).unwrap();
            prop_assert_eq!(swap(i, &out), out.clone());
            for s in symmetric_pair_samples(i) {
                prop_assert_eq!(phi(&b, i, &(&s * &p)).unwrap(), &s * &out);
            }
        }

        #[test]
        fn multiplicative_law_is_phi_of_minus_b(p in poly_strategy(3), i in 1usize..3) {
            let d = p.weight().unwrap_or(0) + 1;
            let ctx = OperatorContext::new(3, Mode::Law(LawKind::multiplicative_beta()), d).unwrap();
            let minus_b = -Poly::beta();
            prop_assert_eq!(ctx.apply(i, &p).unwrap(), phi(&minus_b, i, &p).unwrap());
            let law_mode_phi = OperatorContext::new(
                3,
                Mode::Law(LawKind::Multiplicative { b: minus_b }),
                d,
            ).unwrap();
            prop_assert_eq!(law_mode_phi.apply(i, &p).unwrap(), phi(&Poly::beta(), i, &p).unwrap());
        }

        #[test]
        fn law_operator_symmetric_and_linear(p in poly_strategy(3)) {
            let d = 4;
            let kind = LawKind::UniversalRational { generators: 4 };
            let ctx = OperatorContext::new(3, Mode::Law(kind), d).unwrap();
            let out = ctx.apply(1, &p).unwrap();
            prop_assert_eq!(swap(1, &out), out.clone());
            let s = x(1) * x(2);
            prop_assert_eq!(ctx.apply(1, &(&s * &p)).unwrap(), (&s * &out).truncate(d));
        }

        #[test]
        fn distant_operators_commute(p in poly_strategy(4)) {
            let beta = OperatorContext::new(4, Mode::Beta(Poly::beta()), 0).unwrap();
            prop_assert!(beta.commutation_check(1, 3, std::slice::from_ref(&p)).unwrap().is_none());
            let kind = LawKind::UniversalRational { generators: 4 };
            let uni = OperatorContext::new(4, Mode::Law(kind), 4).unwrap();
            prop_assert!(uni.commutation_check(1, 3, &[p]).unwrap().is_none());
        }
    }
}
