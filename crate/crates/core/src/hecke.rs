//! The algebra on `u_1, …, u_{n-1}` with `u_i² = βu_i`, braid and distant
//! commutation relations, over ℤ[β][x, y].
//!
//! Elements are kept in the basis `{u_ω}`; multiplication on the right by a
//! generator is `u_ω u_i = u_{ωs_i}` if `ω(i) < ω(i+1)` and `β u_ω`
//! otherwise.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::divdiff::phi;
use crate::error::{Error, Result};
use crate::families::{oplus, BetaFamily};
use crate::fgl::FormalGroupLaw;
use crate::perm::{lex_smallest_reduced_word, Permutation};
use crate::poly::{Poly, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    coeffs: BTreeMap<Permutation, Poly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, coeffs: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n), Poly::one())
    }

    /// `c · u_ω`.
    pub fn basis(w: Permutation, c: Poly) -> Self {
        let n = w.n();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(w, c);
        }
        HeckeElement { n, coeffs }
    }

    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Self::identity(n).mul_by_generator(i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Poly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `u_ω`; zero outside the support (including any
    /// `ω` not in `S_n`).
    pub fn coefficient(&self, w: &Permutation) -> Poly {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, w: Permutation, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(w).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            Err(Error::IndexOutOfRange { index: i, max: self.n.saturating_sub(1) })
        } else {
            Ok(())
        }
    }

    /// `self · u_i`.
    pub fn mul_by_generator(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let beta = Poly::beta();
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            if w.has_right_descent(i) {
                out.add_term(w.clone(), &beta * c);
            } else {
                out.add_term(w.mul_simple_right(i).expect("checked"), c.clone());
            }
        }
        Ok(out)
    }

    /// `self · h_i(c) = self + c · (self · u_i)`.
    pub fn mul_h(&self, i: usize, c: &Poly) -> Result<Self> {
        let shifted = self.mul_by_generator(i)?;
        let mut out = self.clone();
        for (w, d) in shifted.coeffs {
            out.add_term(w, c * &d);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = HeckeElement::zero(self.n);
        for (w, d) in &self.coeffs {
            out.add_term(w.clone(), c * d);
        }
        out
    }

    pub fn add(&self, rhs: &HeckeElement) -> Result<Self> {
        self.check_rank(rhs)?;
        let mut out = self.clone();
        for (w, c) in &rhs.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &HeckeElement) -> Result<Self> {
        self.add(&rhs.scale(&Poly::constant(-1)))
    }

    fn check_rank(&self, rhs: &HeckeElement) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::RankMismatch { left: self.n, right: rhs.n });
        }
        Ok(())
    }

    /// The product `self · rhs`. `self · u_τ` is built once per `τ` in the
    /// support of `rhs` by extending shorter prefixes.
    pub fn mul(&self, rhs: &HeckeElement) -> Result<Self> {
        self.check_rank(rhs)?;
        let mut prefix: BTreeMap<Permutation, HeckeElement> = BTreeMap::new();
        let mut out = HeckeElement::zero(self.n);
        for (tau, d) in &rhs.coeffs {
            let word = lex_smallest_reduced_word(tau);
            let mut cur = Permutation::identity(self.n);
            let mut acc = self.clone();
            for &i in &word {
                cur = cur.mul_simple_right(i).expect("in range");
                acc = match prefix.get(&cur) {
                    Some(e) => e.clone(),
                    None => {
                        let e = acc.mul_by_generator(i)?;
                        prefix.insert(cur.clone(), e.clone());
                        e
                    }
                };
            }
            for (w, c) in acc.coeffs {
                out.add_term(w, d * &c);
            }
        }
        Ok(out)
    }

    /// Applies a map to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Self> {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Drops coefficient terms of graded degree above `bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        self.map_coefficients(|c| Ok(c.truncate(bound))).expect("infallible")
    }
}

/// `h_i(c) = 1 + c·u_i`.
pub fn h_factor(n: usize, i: usize, c: &Poly) -> Result<HeckeElement> {
    HeckeElement::identity(n).mul_h(i, c)
}

/// `α_i(x) = h_{n-1}(x) ⋯ h_i(x)`.
pub fn alpha(n: usize, i: usize, x: &Poly) -> Result<HeckeElement> {
    right_mul_factors(HeckeElement::identity(n), (i..n).rev().map(|k| (k, x.clone())))
}

/// `α̃_i(y) = h_i(y) ⋯ h_{n-1}(y)`.
pub fn alpha_tilde(n: usize, i: usize, y: &Poly) -> Result<HeckeElement> {
    right_mul_factors(HeckeElement::identity(n), (i..n).map(|k| (k, y.clone())))
}

fn right_mul_factors(
    start: HeckeElement,
    factors: impl IntoIterator<Item = (usize, Poly)>,
) -> Result<HeckeElement> {
    factors.into_iter().try_fold(start, |acc, (i, c)| acc.mul_h(i, &c))
}

/// `H(x) = α_1(x_1) ⋯ α_{n-1}(x_{n-1})`.
pub fn build_h(n: usize) -> Result<HeckeElement> {
    let factors = (1..n).flat_map(|i| (i..n).rev().map(move |k| (k, Poly::x(i))));
    right_mul_factors(HeckeElement::identity(n), factors)
}

/// `H̃(y) = α̃_{n-1}(y_{n-1}) ⋯ α̃_1(y_1)`.
pub fn build_htilde(n: usize) -> Result<HeckeElement> {
    let factors = (1..n).rev().flat_map(|i| (i..n).map(move |k| (k, Poly::y(i))));
    right_mul_factors(HeckeElement::identity(n), factors)
}

/// `H(x, y) = H̃(y) H(x)`.
pub fn build_hxy(n: usize) -> Result<HeckeElement> {
    let factors = (1..n).flat_map(|i| (i..n).rev().map(move |k| (k, Poly::x(i))));
    right_mul_factors(build_htilde(n)?, factors)
}

/// `Π_{i=1}^{n-1} Π_{j=n-i}^{1} h_{i+j-1}(x_i ⊕ y_j)`, left to right.
pub fn alternative_product(n: usize) -> Result<HeckeElement> {
    let beta = Poly::beta();
    let factors = (1..n).flat_map(|i| {
        let beta = beta.clone();
        (1..=n - i).rev().map(move |j| (i + j - 1, oplus(&beta, &Poly::x(i), &Poly::y(j))))
    });
    right_mul_factors(HeckeElement::identity(n), factors)
}

/// `φ_i` applied to every coefficient.
pub fn phi_element(i: usize, e: &HeckeElement) -> Result<HeckeElement> {
    let beta = Poly::beta();
    e.map_coefficients(|c| phi(&beta, i, c))
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

fn cert(statement: &str, failures: Vec<String>) -> Certificate {
    Certificate {
        statement: statement.to_string(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "ok".to_string()
        } else {
            failures.join("; ")
        },
    }
}

/// Checks every structural identity of the algebra and its canonical element
/// in rank `n`, one certificate per statement.
pub fn verify(n: usize) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let beta = Poly::beta();
    let (a, b) = (Poly::var(Var::U(1)), Poly::var(Var::U(2)));
    let ab = oplus(&beta, &a, &b);
    let eq = |l: &HeckeElement, r: &HeckeElement| l == r;

    // Defining relations, on every basis element.
    let mut fails = Vec::new();
    for w in Permutation::all(n) {
        let e = HeckeElement::basis(w.clone(), Poly::one());
        let word = |e: &HeckeElement, letters: &[usize]| -> Result<HeckeElement> {
            letters.iter().try_fold(e.clone(), |acc, &i| acc.mul_by_generator(i))
        };
        for i in 1..n {
            if word(&e, &[i, i])? != word(&e, &[i])?.scale(&beta) {
                fails.push(alloc::format!("u_i^2 at {w}, i={i}"));
            }
            if i + 1 < n && word(&e, &[i, i + 1, i])? != word(&e, &[i + 1, i, i + 1])? {
                fails.push(alloc::format!("braid at {w}, i={i}"));
            }
            for j in i + 2..n {
                if word(&e, &[i, j])? != word(&e, &[j, i])? {
                    fails.push(alloc::format!("commutation at {w}, i={i}, j={j}"));
                }
            }
        }
    }
    out.push(cert("defining relations", fails));

    let mut fails = Vec::new();
    for i in 1..n {
        let lhs = h_factor(n, i, &a)?.mul(&h_factor(n, i, &b)?)?;
        if !eq(&lhs, &h_factor(n, i, &ab)?) {
            fails.push(alloc::format!("h_i(x)h_i(y) at i={i}"));
        }
        for j in i + 2..n {
            let l = h_factor(n, i, &a)?.mul(&h_factor(n, j, &b)?)?;
            let r = h_factor(n, j, &b)?.mul(&h_factor(n, i, &a)?)?;
            if !eq(&l, &r) {
                fails.push(alloc::format!("distant h commute at i={i}, j={j}"));
            }
        }
    }
    out.push(cert("h_i(x)h_i(y) = h_i(x+y+bxy); distant h_i commute", fails));

    let mut fails = Vec::new();
    for i in 1..n.saturating_sub(1) {
        let lhs = right_mul_factors(h_factor(n, i, &a)?, [(i + 1, ab.clone()), (i, b.clone())])?;
        let rhs = right_mul_factors(h_factor(n, i + 1, &b)?, [(i, ab.clone()), (i + 1, a.clone())])?;
        if !eq(&lhs, &rhs) {
            fails.push(alloc::format!("i={i}"));
        }
    }
    out.push(cert("h_i(x)h_(i+1)(x+y)h_i(y) = h_(i+1)(y)h_i(x+y)h_(i+1)(x)", fails));

    let mut fails = Vec::new();
    for i in 1..n {
        let (ax, ay) = (alpha(n, i, &a)?, alpha(n, i, &b)?);
        if ax.mul(&ay)? != ay.mul(&ax)? {
            fails.push(alloc::format!("alpha commute i={i}"));
        }
        let aty = alpha_tilde(n, i, &b)?;
        if ax.mul(&aty)? != aty.mul(&ax)? {
            fails.push(alloc::format!("alpha/alpha-tilde commute i={i}"));
        }
    }
    out.push(cert("alpha_i(x), alpha_i(y) and alpha-tilde_i(y) commute", fails));

    let mut fails = Vec::new();
    for i in 1..n {
        let x = Poly::var(Var::U(1));
        let mut lhs = HeckeElement::identity(n);
        for k in (i..n).rev() {
            lhs = lhs.mul(&alpha_tilde(n, k, &Poly::y(k))?)?;
        }
        lhs = lhs.mul(&alpha(n, i, &x)?)?;
        let mut rhs = right_mul_factors(
            HeckeElement::identity(n),
            (i..n).rev().map(|k| (k, oplus(&beta, &x, &Poly::y(k)))),
        )?;
        for k in (i + 1..n).rev() {
            rhs = rhs.mul(&alpha_tilde(n, k, &Poly::y(k - 1))?)?;
        }
        if lhs != rhs {
            fails.push(alloc::format!("i={i}"));
        }
    }
    out.push(cert("exchange of alpha-tilde products past alpha_i(x)", fails));

    let hxy = build_hxy(n)?;
    let alt = alternative_product(n)?;
    out.push(cert(
        "H(x,y) equals the ordered product of h_(i+j-1)(x_i+y_j+b x_i y_j)",
        if hxy == alt { Vec::new() } else { alloc::vec!["elements differ".to_string()] },
    ));

    let hx = build_h(n)?;
    let mut fails = Vec::new();
    for i in 1..n {
        for (name, e) in [("H(x)", &hx), ("H(x,y)", &hxy)] {
            let lhs = phi_element(i, e)?;
            let rhs = e.mul_by_generator(i)?.sub(&e.scale(&beta))?;
            if lhs != rhs {
                fails.push(alloc::format!("{name}, i={i}"));
            }
        }
    }
    out.push(cert("phi_i H = H u_i - b H for H(x) and H(x,y)", fails));

    let family = BetaFamily::compute(n);
    let mut fails = Vec::new();
    for (w, p) in family.iter() {
        if &hxy.coefficient(w) != p {
            fails.push(alloc::format!("coefficient at {w}"));
        }
    }
    out.push(cert("coefficients of H(x,y) are the beta-polynomials", fails));

    let swap_xy = |p: &Poly| {
        p.rename(|v| match v {
            Var::X(i) => Var::Y(i),
            Var::Y(i) => Var::X(i),
            other => other,
        })
    };
    let mut fails = Vec::new();
    for (w, p) in family.iter() {
        let inv = family.get(&w.inverse()).expect("all of S_n");
        if inv != &swap_xy(p) {
            fails.push(alloc::format!("duality at {w}"));
        }
    }
    out.push(cert("h_(w^-1)(x,y) = h_w(y,x)", fails));

    let mut fails = Vec::new();
    for (w, p) in family.iter() {
        let winv = w.inverse();
        for i in 1..n {
            if !w.has_right_descent(i) && p.swap_vars(Var::x(i), Var::x(i + 1)) != *p {
                fails.push(alloc::format!("x-symmetry at {w}, i={i}"));
            }
            if !winv.has_right_descent(i) && p.swap_vars(Var::y(i), Var::y(i + 1)) != *p {
                fails.push(alloc::format!("y-symmetry at {w}, i={i}"));
            }
        }
    }
    out.push(cert("symmetry of h_w in x_i,x_(i+1) and y_i,y_(i+1) at ascents", fails));

    let bound = 4;
    let minus_law = FormalGroupLaw::multiplicative(-beta.clone(), bound)?;
    let mut fails = Vec::new();
    for i in 1..n {
        let y = Poly::y(1);
        let lhs = alpha(n, i, &minus_law.inverse(&y)?)?.mul(&alpha_tilde(n, i, &y)?)?;
        if lhs.truncate(bound) != HeckeElement::identity(n) {
            fails.push(alloc::format!("i={i}"));
        }
    }
    out.push(cert("alpha_i(-y/(1+by)) alpha-tilde_i(y) = 1 modulo degree > 4", fails));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::h_top;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generator_rules() {
        let u1 = HeckeElement::generator(2, 1).unwrap();
        assert_eq!(u1, HeckeElement::basis(p(&[2, 1]), Poly::one()));
        assert_eq!(u1.mul_by_generator(1).unwrap(), u1.scale(&Poly::beta()));
        let scaled = HeckeElement::basis(Permutation::identity(2), Poly::x(1));
        assert_eq!(
            scaled.mul_by_generator(1).unwrap(),
            HeckeElement::basis(p(&[2, 1]), Poly::x(1))
        );
        assert_eq!(h_factor(2, 1, &Poly::zero()).unwrap(), HeckeElement::identity(2));
    }

    #[test]
    fn small_canonical_elements() {
        let h2 = build_hxy(2).unwrap();
        assert_eq!(h2.coefficient(&Permutation::identity(2)), Poly::one());
        assert_eq!(h2.coefficient(&p(&[2, 1])), h_top(2));
        assert_eq!(build_hxy(1).unwrap(), HeckeElement::identity(1));
        let h3 = build_hxy(3).unwrap();
        assert_eq!(h3.coefficient(&Permutation::longest(3)), h_top(3));
        assert!(h3.coefficient(&Permutation::identity(4)).is_zero());
        assert_eq!(alternative_product(2).unwrap(), h_factor(2, 1, &h_top(2)).unwrap());
    }

    #[test]
    fn all_statements_hold_up_to_rank_four() {
        for n in 1..=4 {
            for c in verify(n).unwrap() {
                assert!(c.passed, "n={n}: {} ({})", c.statement, c.detail);
            }
        }
    }
}
