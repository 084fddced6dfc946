//! The quotient `B[x_1, …, x_n] / (e_i(x) - c_i)`.
//!
//! The ideal has the explicit basis
//! `g_i = Σ_{j=0}^{n-i+1} (-1)^j c_j h_{n-i+1-j}(x_1, …, x_i)`, `i = 1..n`,
//! which is the vanishing of the `t^{n-i+1}` coefficient of
//! `C(t) / Π_{k≤i}(1 + x_k t)`. Under lex with `x_n > ⋯ > x_1` the leading
//! term of `g_i` is `x_i^{n-i+1}`; leading terms are pairwise coprime, so the
//! `g_i` form a Gröbner basis and normal forms are spanned by the `n!`
//! monomials with `a_i ≤ n - i`. Every non-`x` variable is a coefficient.

use alloc::vec::Vec;

use crate::poly::{complete_homogeneous, elementary_symmetric, Monomial, Poly, Var};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagRingPresentation {
    n: usize,
    chern: Vec<Poly>,
    /// `x_i^{n-i+1} ↦ tails[i-1]`.
    tails: Vec<Poly>,
}

impl FlagRingPresentation {
    /// Presentation with base Chern classes `c_1, …, c_n` (missing entries
    /// are zero).
    pub fn new(n: usize, chern: Vec<Poly>) -> Self {
        let mut c: Vec<Poly> = alloc::vec![Poly::one()];
        c.extend((0..n).map(|k| chern.get(k).cloned().unwrap_or_default()));
        let mut tails = Vec::with_capacity(n);
        for i in 1..=n {
            let top = (n - i + 1) as u32;
            let vars: Vec<Var> = (1..=i).map(Var::x).collect();
            let mut g = Poly::zero();
            for (j, cj) in c.iter().enumerate().take(top as usize + 1) {
                let sign = Scalar::from(if j % 2 == 0 { 1 } else { -1 });
                let h = complete_homogeneous(top - j as u32, &vars);
                g = &g + &(cj * &h).scale(&sign);
            }
            let lead = Poly::x(i).pow(top);
            tails.push(&lead - &g);
        }
        FlagRingPresentation { n, chern: c.split_off(1), tails }
    }

    /// Trivial base bundle: every `c_i = 0`.
    pub fn trivial(n: usize) -> Self {
        Self::new(n, Vec::new())
    }

    /// Symbolic base Chern classes `cV_1, …, cV_n`.
    pub fn symbolic(n: usize) -> Self {
        Self::new(n, (1..=n).map(|i| Poly::var(Var::V(i as u8))).collect())
    }

    /// Base bundle split with the given Chern roots.
    pub fn with_roots(roots: &[Poly]) -> Self {
        let n = roots.len();
        Self::new(n, (1..=n).map(|i| elementary_symmetric(i, roots)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chern(&self) -> &[Poly] {
        &self.chern
    }

    fn reducible(&self, m: &Monomial) -> Option<usize> {
        (1..=self.n).rev().find(|&i| m.exponent(Var::x(i)) as usize > self.n - i)
    }

    /// The normal form of `p`.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut done: Vec<(Monomial, Scalar)> = Vec::new();
        let mut todo = p.clone();
        while !todo.is_zero() {
            let mut next = Vec::new();
            for (m, c) in todo.into_terms() {
                match self.reducible(&m) {
                    None => done.push((m, c)),
                    Some(i) => {
                        let v = Var::x(i);
                        let rest = m.with_exponent(v, m.exponent(v) - (self.n - i + 1) as u32);
                        next.extend(self.tails[i - 1].mul_term(&rest, &c).into_terms());
                    }
                }
            }
            todo = Poly::from_terms(next);
        }
        Poly::from_terms(done)
    }

    pub fn equal_in_ring(&self, p: &Poly, q: &Poly) -> bool {
        self.reduce(&(p - q)).is_zero()
    }

    /// The monomials `x_1^{a_1} ⋯ x_n^{a_n}` with `a_i ≤ n - i`.
    pub fn normal_monomials(&self) -> Vec<Monomial> {
        let mut out = alloc::vec![Monomial::one()];
        for i in 1..=self.n {
            let mut next = Vec::new();
            for m in &out {
                for a in 0..=(self.n - i) as u32 {
                    next.push(m.with_exponent(Var::x(i), a));
                }
            }
            out = next;
        }
        out
    }
}
