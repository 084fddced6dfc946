//! Degeneracy-locus polynomials.
//!
//! For a rank triple `(e, f, r)` the permutation `ν = nu(e, f, r)` lives in
//! `S_{e+f-r}`, and `𝔥_ν` with `x_{f+1}, … = 0` and `y_{e+1}, … = 0` is
//! separately symmetric in `x_1..x_f` and `y_1..y_e`. Rewriting it in
//! elementary symmetric functions gives a polynomial in the Chern classes
//! `c_i(F)` (x-block) and `c_j(E^∨)` (y-block).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::beta_poly_specialized;
use crate::perm::{nu, Permutation};
use crate::poly::{elementary_symmetric, Monomial, Poly, Var};
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankTriple {
    pub e: usize,
    pub f: usize,
    pub r: usize,
}

impl RankTriple {
    pub fn new(e: usize, f: usize, r: usize) -> Result<Self> {
        if r > e.min(f) {
            return Err(Error::InvalidTriple { e, f, r });
        }
        Ok(RankTriple { e, f, r })
    }

    /// `ν` with slots `s = e` (y-block), `t = f` (x-block), `u = r`.
    pub fn nu(&self) -> Permutation {
        nu(self.e, self.f, self.r).expect("validated")
    }

    pub fn codimension(&self) -> usize {
        (self.e - self.r) * (self.f - self.r)
    }

    /// Every valid triple with `e, f ≤ max`.
    pub fn all_up_to(max: usize) -> Vec<RankTriple> {
        let mut out = Vec::new();
        for e in 0..=max {
            for f in 0..=max {
                for r in 0..=e.min(f) {
                    out.push(RankTriple { e, f, r });
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    /// Symbolic β; slots `c_i(F)`, `c_j(E^∨)`.
    CK,
    /// β = -1; slots `c_i(F)`, `c_j(E^∨)`.
    K0,
    /// β = 0; slots `c_i(F)` and `-c_j(E)`.
    CH,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPoly {
    pub triple: RankTriple,
    pub theory: Theory,
    /// Polynomial in `cF_i` (`Var::C`) and `cEdual_j` (`Var::D`), or `cE_j`
    /// (`Var::E`) for [`Theory::CH`].
    pub body: Poly,
}

/// `𝔥_ν` restricted to `x_1..x_f`, `y_1..y_e`.
pub fn specialize_nu(t: RankTriple) -> Poly {
    specialize_nu_padded(t, 0)
}

/// As [`specialize_nu`], computing `ν` inside `S_{e+f-r+pad}`.
pub fn specialize_nu_padded(t: RankTriple, pad: usize) -> Poly {
    let w = t.nu();
    let w = w.embed(w.n() + pad);
    beta_poly_specialized(&w, t.f, t.e)
}

/// Whether `p` is invariant under every adjacent swap in `x_1..x_f` and in
/// `y_1..y_e`.
pub fn check_rect_symmetry(p: &Poly, x_block: usize, y_block: usize) -> bool {
    (1..x_block).all(|i| p.swap_vars(Var::x(i), Var::x(i + 1)) == *p)
        && (1..y_block).all(|j| p.swap_vars(Var::y(j), Var::y(j + 1)) == *p)
}

/// Rewrites `p`, symmetric in `x_1..x_f` and in `y_1..y_e`, as a polynomial
/// in `C(i) = e_i(x)` and `D(j) = e_j(y)`.
pub fn to_elementary(p: &Poly, x_block: usize, y_block: usize) -> Result<Poly> {
    let xs: Vec<Var> = (1..=x_block).map(Var::x).collect();
    let ys: Vec<Var> = (1..=y_block).map(Var::y).collect();
    let step = gauss(p, &xs, Var::C, 'x')?;
    gauss(&step, &ys, Var::D, 'y')
}

/// Leading-term elimination in one block: the lex-largest exponent vector
/// `λ` of a symmetric polynomial is a partition, and
/// `e_1^{λ_1-λ_2} ⋯ e_k^{λ_k}` has the same leading term.
fn gauss(p: &Poly, block: &[Var], slot: fn(u8) -> Var, name: char) -> Result<Poly> {
    let k = block.len();
    let gens: Vec<Poly> = block.iter().map(|&v| Poly::var(v)).collect();
    let elementary: Vec<Poly> = (0..=k).map(|j| elementary_symmetric(j, &gens)).collect();
    let mut rem: BTreeMap<Vec<u32>, Poly> = p.group_by_exponents(block);
    let mut out = Vec::new();
    while let Some((lambda, coeff)) = rem.pop_last() {
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric { block: name });
        }
        let mut mono = Vec::new();
        let mut product = Poly::one();
        for j in 0..k {
            let next = lambda.get(j + 1).copied().unwrap_or(0);
            let power = lambda[j] - next;
            if power > 0 {
                mono.push((slot((j + 1) as u8), power));
                product = &product * &elementary[j + 1].pow(power);
            }
        }
        out.push((Monomial::from_factors(mono), coeff.clone()));
        for (exps, c) in product.group_by_exponents(block) {
            let scalar = c.as_constant().expect("integer coefficients");
            if exps == lambda {
                continue;
            }
            let updated = rem.get(&exps).cloned().unwrap_or_default() - coeff.scale(&scalar);
            if updated.is_zero() {
                rem.remove(&exps);
            } else {
                rem.insert(exps, updated);
            }
        }
    }
    Ok(Poly::from_terms(
        out.into_iter()
            .flat_map(|(m, c)| c.into_terms().into_iter().map(move |(k, s)| (&k * &m, s))),
    ))
}

/// Substitutes `C(i) ↦ e_i(x_1..x_f)` and `D(j) ↦ e_j(y_1..y_e)`.
pub fn from_elementary(p: &Poly, x_block: usize, y_block: usize) -> Poly {
    let xs: Vec<Poly> = (1..=x_block).map(Poly::x).collect();
    let ys: Vec<Poly> = (1..=y_block).map(Poly::y).collect();
    let mut map = BTreeMap::new();
    for i in 1..=x_block {
        map.insert(Var::C(i as u8), elementary_symmetric(i, &xs));
    }
    for j in 1..=y_block {
        map.insert(Var::D(j as u8), elementary_symmetric(j, &ys));
    }
    p.substitute(&map)
}

/// Converts a symbolic-β body to another theory.
pub fn specialize_theory(body: &Poly, t: RankTriple, theory: Theory) -> Poly {
    match theory {
        Theory::CK => body.clone(),
        Theory::K0 => body.substitute(&BTreeMap::from([(Var::Beta, Poly::constant(-1))])),
        Theory::CH => {
            let mut map = BTreeMap::from([(Var::Beta, Poly::zero())]);
            for j in 1..=t.e {
                map.insert(Var::D(j as u8), -Poly::var(Var::E(j as u8)));
            }
            body.substitute(&map)
        }
    }
}

/// `𝔇_t` for the chosen theory.
pub fn thom_porteous(t: RankTriple, theory: Theory) -> Result<DPoly> {
    let ck = to_elementary(&specialize_nu(t), t.f, t.e)?;
    Ok(DPoly { triple: t, theory, body: specialize_theory(&ck, t, theory) })
}

/// Degree with `deg C_i = deg D_i = deg E_i = i`, `deg β = -1`, and every
/// other variable of degree one; `None` if not homogeneous.
pub fn weighted_degree(p: &Poly) -> Option<i64> {
    let deg = |m: &Monomial| -> i64 {
        m.factors()
            .iter()
            .map(|&(v, e)| {
                let w = match v {
                    Var::C(i) | Var::D(i) | Var::E(i) => i64::from(i),
                    Var::Beta => -1,
                    _ => 1,
                };
                w * i64::from(e)
            })
            .sum()
    };
    let mut degrees = p.terms().iter().map(|(m, _)| deg(m));
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use alloc::string::ToString;

    fn triple(e: usize, f: usize, r: usize) -> RankTriple {
        RankTriple::new(e, f, r).unwrap()
    }

    #[test]
    fn specialization_examples() {
        let h = Poly::x(1) + Poly::y(1) + Poly::beta() * Poly::x(1) * Poly::y(1);
        assert_eq!(specialize_nu(triple(1, 1, 0)), h);
        assert_eq!(specialize_nu(triple(1, 1, 1)), Poly::one());
        let p = specialize_nu(triple(2, 1, 1));
        assert_eq!(triple(2, 1, 1).nu().n(), 2);
        assert!(check_rect_symmetry(&p, 1, 2));
    }

    #[test]
    fn symmetry_examples() {
        assert!(check_rect_symmetry(&specialize_nu(triple(1, 1, 0)), 1, 1));
        assert!(check_rect_symmetry(&specialize_nu(triple(2, 2, 1)), 2, 2));
        assert!(!check_rect_symmetry(&Poly::x(1), 2, 0));
    }

    #[test]
    fn elementary_examples() {
        let b = Poly::beta();
        let h = Poly::x(1) + Poly::y(1) + &b * &(Poly::x(1) * Poly::y(1));
        let c1 = Poly::var(Var::C(1));
        let d1 = Poly::var(Var::D(1));
        assert_eq!(to_elementary(&h, 1, 1).unwrap(), &c1 + &d1 + &b * &(&c1 * &d1));
        assert_eq!(to_elementary(&(Poly::x(1) * Poly::x(2)), 2, 0).unwrap(), Poly::var(Var::C(2)));
        let newton = to_elementary(&(Poly::x(1).pow(2) + Poly::x(2).pow(2)), 2, 0).unwrap();
        assert_eq!(newton, c1.pow(2) - Poly::var(Var::C(2)).scale(&Scalar::from(2)));
        assert_eq!(to_elementary(&Poly::x(1), 2, 0), Err(Error::NotSymmetric { block: 'x' }));
        assert_eq!(to_elementary(&Poly::y(2), 0, 2), Err(Error::NotSymmetric { block: 'y' }));
    }

    #[test]
    fn porteous_examples() {
        let ch = thom_porteous(triple(1, 1, 0), Theory::CH).unwrap();
        assert_eq!(ch.body.to_string(), "cF1 - cE1");
        let ck = thom_porteous(triple(1, 1, 0), Theory::CK).unwrap();
        assert_eq!(ck.body.to_string(), "b*cF1*cEdual1 + cF1 + cEdual1");
        for (e, f) in [(1, 1), (2, 3), (3, 2)] {
            let r = e.min(f);
            for theory in [Theory::CK, Theory::K0, Theory::CH] {
                assert_eq!(thom_porteous(triple(e, f, r), theory).unwrap().body, Poly::one());
            }
        }
        assert_eq!(RankTriple::new(1, 1, 2), Err(Error::InvalidTriple { e: 1, f: 1, r: 2 }));
    }

    #[test]
    fn coherence_up_to_three() {
        for t in RankTriple::all_up_to(3) {
            assert_eq!(t.nu().length(), t.codimension());
            let p = specialize_nu(t);
            assert!(check_rect_symmetry(&p, t.f, t.e), "{t:?}");
            let ck = thom_porteous(t, Theory::CK).unwrap();
            assert_eq!(from_elementary(&ck.body, t.f, t.e), p, "{t:?}");
            assert_eq!(weighted_degree(&ck.body), Some(t.codimension() as i64), "{t:?}");
            let ch = thom_porteous(t, Theory::CH).unwrap();
            let k0 = thom_porteous(t, Theory::K0).unwrap();
            assert_eq!(specialize_theory(&ck.body, t, Theory::CH), ch.body);
            assert_eq!(specialize_theory(&ck.body, t, Theory::K0), k0.body);
        }
    }
}
