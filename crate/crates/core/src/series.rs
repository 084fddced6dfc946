//! Truncated power series in the graded variables.
//!
//! A series is a polynomial body plus a bound `D`; every term of the body has
//! graded degree at most `D`, and every operation truncates its result.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::ring::CoefficientRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    body: Poly,
    bound: u32,
}

impl TruncatedSeries {
    pub fn new(body: Poly, bound: u32) -> Self {
        TruncatedSeries { body: body.truncate(bound), bound }
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn into_body(self) -> Poly {
        self.body
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.bound.min(rhs.bound);
        TruncatedSeries::new(&self.body + &rhs.body, bound)
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.bound.min(rhs.bound);
        TruncatedSeries::new(&self.body - &rhs.body, bound)
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.bound.min(rhs.bound);
        TruncatedSeries { body: self.body.mul_truncated(&rhs.body, bound), bound }
    }

    /// Multiplicative inverse.
    ///
    /// With `s = c(1 - r)`, `r` of positive order, `1/s = c⁻¹ Σ_{k≤D} r^k`,
    /// evaluated by Horner's rule.
    pub fn reciprocal(&self, ring: CoefficientRing) -> Result<TruncatedSeries> {
        let d = self.bound;
        let c = self.body.graded_part(0);
        let c = c.as_constant().filter(|c| ring.is_unit(c)).ok_or(Error::NonUnitConstant)?;
        let inv = c.recip().expect("unit is nonzero");
        // r = 1 - s/c
        let r = &Poly::one() - &self.body.scale(&inv);
        let mut acc = Poly::one();
        for _ in 0..d {
            acc = &Poly::one() + &r.mul_truncated(&acc, d);
        }
        Ok(TruncatedSeries { body: acc.scale(&inv), bound: d })
    }

    /// Composition `self(t ↦ g)` where `t` is the single graded variable of
    /// `self`; `g` must have no constant term.
    pub fn compose(&self, t: Var, g: &Poly) -> TruncatedSeries {
        let map = BTreeMap::from([(t, g.clone())]);
        TruncatedSeries { body: self.body.substitute_truncated(&map, self.bound), bound: self.bound }
    }

    /// The series `r` with `s(r(t)) = t`.
    ///
    /// `s` must be univariate in its graded variable, with linear coefficient
    /// exactly 1 and no constant term. Each coefficient follows from the
    /// previous ones: `r_k = -[t^k] s(r_{<k})`.
    pub fn compositional_inverse(&self) -> Result<TruncatedSeries> {
        let t = self.single_graded_var()?;
        let d = self.bound;
        if !self.body.graded_part(0).is_zero()
            || self.body.graded_part(1) != Poly::var(t)
        {
            return Err(Error::LinearCoefficient);
        }
        let mut r = Poly::var(t);
        for k in 2..=d {
            let s_of_r = self.compose(t, &r);
            let defect = s_of_r.body.graded_part(k);
            r = &r - &defect;
        }
        Ok(TruncatedSeries { body: r, bound: d })
    }

    fn single_graded_var(&self) -> Result<Var> {
        let graded: Vec<Var> = self.body.vars().into_iter().filter(|v| v.is_graded()).collect();
        match graded.as_slice() {
            [v] => Ok(*v),
            [] => Err(Error::LinearCoefficient),
            _ => Err(Error::NotUnivariate),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use proptest::prelude::*;

    fn t() -> Poly {
        Poly::var(Var::U(1))
    }

    #[test]
    fn reciprocal_geometric() {
        let s = TruncatedSeries::new(&Poly::one() - &(Poly::beta() * Poly::x(1)), 3);
        let r = s.reciprocal(CoefficientRing::BetaRing).unwrap();
        let bx = Poly::beta() * Poly::x(1);
        let expected = Poly::one() + bx.clone() + bx.pow(2) + bx.pow(3);
        assert_eq!(r.body(), &expected);
        let one = TruncatedSeries::new(Poly::one(), 5);
        assert_eq!(one.reciprocal(CoefficientRing::Integers).unwrap().body(), &Poly::one());
        let x = TruncatedSeries::new(Poly::x(1), 3);
        assert_eq!(x.reciprocal(CoefficientRing::Integers), Err(Error::NonUnitConstant));
    }

    #[test]
    fn compositional_inverse_examples() {
        let id = TruncatedSeries::new(t(), 4);
        assert_eq!(id.compositional_inverse().unwrap().body(), &t());

        let m1 = Poly::var(Var::M(1));
        let s = TruncatedSeries::new(t() + &m1 * &t().pow(2), 3);
        let expected = t() - &m1 * &t().pow(2) + (&m1 * &m1).scale(&Scalar::from(2)) * t().pow(3);
        assert_eq!(s.compositional_inverse().unwrap().body(), &expected);

        let c = TruncatedSeries::new(t() + t().pow(2), 4);
        let expected = t() - t().pow(2) + t().pow(3).scale(&Scalar::from(2))
            - t().pow(4).scale(&Scalar::from(5));
        assert_eq!(c.compositional_inverse().unwrap().body(), &expected);

        let bad = TruncatedSeries::new(t().scale(&Scalar::from(2)), 3);
        assert_eq!(bad.compositional_inverse(), Err(Error::LinearCoefficient));
    }

    #[test]
    fn catalan_oracle() {
        // The inverse of t + t^2 has coefficients (-1)^{k-1} C_{k-1}.
        let d = 8;
        let inv = TruncatedSeries::new(t() + t().pow(2), d).compositional_inverse().unwrap();
        let mut catalan = alloc::vec![1i64];
        for k in 1..d as usize {
            let next: i64 = (0..k).map(|j| catalan[j] * catalan[k - 1 - j]).sum();
            catalan.push(next);
        }
        for k in 1..=d {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let expected = Scalar::from(sign * catalan[(k - 1) as usize]);
            assert_eq!(inv.body().coefficient_of_power(Var::U(1), k).as_constant(), Some(expected));
        }
    }

    fn unit_series() -> impl Strategy<Value = (TruncatedSeries, CoefficientRing)> {
        (
            prop::bool::ANY,
            prop::collection::vec((-3i64..=3, 0u32..=3, 0u32..=3, 0u32..=1), 0..6),
            1u32..=8,
        )
            .prop_map(|(neg, terms, d)| {
                let mut body = Poly::constant(if neg { -1 } else { 1 });
                for (c, a, b, beta) in terms {
                    if a + b == 0 {
                        continue;
                    }
                    let m = crate::poly::Monomial::from_factors([
                        (Var::X(1), a),
                        (Var::X(2), b),
                        (Var::Beta, beta),
                    ]);
                    body = &body + &Poly::term(m, c);
                }
                (TruncatedSeries::new(body, d), CoefficientRing::BetaRing)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn reciprocal_roundtrip((s, ring) in unit_series()) {
            let r = s.reciprocal(ring).unwrap();
            prop_assert_eq!(s.mul(&r).into_body(), Poly::one());
        }

        #[test]
        fn inverse_roundtrip(coeffs in prop::collection::vec(-3i64..=3, 1..5), d in 2u32..=6) {
            let mut body = t();
            for (k, c) in coeffs.into_iter().enumerate() {
                body = &body + &t().pow(k as u32 + 2).scale(&Scalar::from(c));
            }
            let s = TruncatedSeries::new(body, d);
            let r = s.compositional_inverse().unwrap();
            prop_assert_eq!(s.compose(Var::U(1), r.body()).into_body(), t());
            prop_assert_eq!(r.compose(Var::U(1), s.body()).into_body(), t());
        }

        #[test]
        fn truncation_idempotent((s, _ring) in unit_series(), d in 0u32..6) {
            let once = s.body().truncate(d);
            prop_assert_eq!(once.truncate(d), once);
        }
    }
}
