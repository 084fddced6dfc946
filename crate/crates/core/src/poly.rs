//! Sparse multivariate polynomials over ℚ.
//!
//! A [`Poly`] is a list of `(Monomial, Scalar)` pairs kept strictly
//! decreasing in the term order, with no zero coefficients. The term order is
//! graded lexicographic: total degree first, then lexicographic with
//! `x1 > x2 > … > y1 > … > u > v > w > b > m1 > …`. Canonical text output,
//! equality and hashing all follow from that normal form.
//!
//! Coefficient rings such as ℤ[β] or ℚ[m_1, …, m_K] are modelled by letting
//! their generators (`b`, `m_k`) appear as ordinary variables; see
//! [`crate::ring::CoefficientRing`] for the membership rules. Truncation only
//! ever looks at the *graded* variables (`x`, `y`, and the formal series
//! variables `u`, `v`, `w`).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial variable.
///
/// The declaration order of the variants is the lexicographic priority of the
/// term order (earlier = more significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Chern roots of the quotient flag, `x1, x2, …`.
    X(u8),
    /// Chern roots of the sub-bundle flag, `y1, y2, …`.
    Y(u8),
    /// Formal variables of power series: `u`, `v`, `w`.
    U(u8),
    /// The parameter β (also the multiplicative-law parameter `b`).
    Beta,
    /// Log-generators `m1, m2, …` of the rational Lazard model.
    M(u8),
    /// Chern classes of the target bundle F, `cF1, cF2, …`.
    C(u8),
    /// Chern classes of the dual source bundle E^∨, `cEdual1, …`.
    D(u8),
    /// Chern classes of the source bundle E, `cE1, …`.
    E(u8),
    /// Chern classes of a base bundle V in a flag-ring presentation.
    V(u8),
    /// The formal variable of a Chern polynomial.
    T,
}

impl Var {
    /// Whether the variable counts towards the truncation degree.
    pub fn is_graded(self) -> bool {
        matches!(self, Var::X(_) | Var::Y(_) | Var::U(_))
    }

    /// Coefficient-ring generators (`b`, `m_k`).
    pub fn is_generator(self) -> bool {
        matches!(self, Var::Beta | Var::M(_))
    }

    pub fn x(i: usize) -> Var {
        Var::X(index_u8(i))
    }

    pub fn y(j: usize) -> Var {
        Var::Y(index_u8(j))
    }
}

fn index_u8(i: usize) -> u8 {
    u8::try_from(i).expect("variable index exceeds 255")
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::U(1) => f.write_str("u"),
            Var::U(2) => f.write_str("v"),
            Var::U(3) => f.write_str("w"),
            Var::U(i) => write!(f, "u{i}"),
            Var::Beta => f.write_str("b"),
            Var::M(k) => write!(f, "m{k}"),
            Var::C(i) => write!(f, "cF{i}"),
            Var::D(j) => write!(f, "cEdual{j}"),
            Var::E(j) => write!(f, "cE{j}"),
            Var::V(i) => write!(f, "cV{i}"),
            Var::T => f.write_str("t"),
        }
    }
}

type Factors = SmallVec<[(Var, u32); 6]>;

/// A power product; factors sorted by variable, exponents nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    factors: Factors,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, e: u32) -> Self {
        let mut factors = Factors::new();
        if e > 0 {
            factors.push((v, e));
        }
        Monomial { degree: e, factors }
    }

    /// Builds a monomial from unsorted, possibly repeated factors.
    pub fn from_factors<I: IntoIterator<Item = (Var, u32)>>(iter: I) -> Self {
        let mut raw: Factors = iter.into_iter().filter(|&(_, e)| e > 0).collect();
        raw.sort_unstable_by_key(|&(v, _)| v);
        let mut factors = Factors::new();
        for (v, e) in raw {
            match factors.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => factors.push((v, e)),
            }
        }
        let degree = factors.iter().map(|&(_, e)| e).sum();
        Monomial { degree, factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree in all variables.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Degree in the graded variables only.
    pub fn weight(&self) -> u32 {
        self.factors
            .iter()
            .filter(|(v, _)| v.is_graded())
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.factors.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    /// Copy with the exponent of `v` replaced.
    pub fn with_exponent(&self, v: Var, e: u32) -> Monomial {
        let mut factors = Factors::new();
        let mut placed = false;
        for &(w, f) in &self.factors {
            if !placed && w >= v {
                if e > 0 {
                    factors.push((v, e));
                }
                placed = true;
                if w == v {
                    continue;
                }
            }
            factors.push((w, f));
        }
        if !placed && e > 0 {
            factors.push((v, e));
        }
        let degree = factors.iter().map(|&(_, e)| e).sum();
        Monomial { degree, factors }
    }

    /// Applies a variable renaming; the result is re-normalized.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|&(v, e)| other.exponent(v) >= e)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut factors = Factors::with_capacity(self.factors.len() + rhs.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &rhs.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial { degree: self.degree + rhs.degree, factors }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (a, b) = (&self.factors, &other.factors);
            let mut i = 0;
            while i < a.len() && i < b.len() {
                let ((va, ea), (vb, eb)) = (a[i], b[i]);
                if va != vb {
                    // The side holding the more significant variable is larger.
                    return if va < vb { Ordering::Greater } else { Ordering::Less };
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
                i += 1;
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::ONE)
    }

    pub fn constant(c: impl Into<Scalar>) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::var(v), Scalar::ONE)
    }

    pub fn x(i: usize) -> Self {
        Poly::var(Var::x(i))
    }

    pub fn y(j: usize) -> Self {
        Poly::var(Var::y(j))
    }

    pub fn beta() -> Self {
        Poly::var(Var::Beta)
    }

    pub fn term(m: Monomial, c: impl Into<Scalar>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: alloc::vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms: sorts, merges equal monomials, drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut raw: Vec<(Monomial, Scalar)> = iter.into_iter().collect();
        raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(Monomial, Scalar)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == m => *acc = &*acc + &c,
                _ => {
                    if let Some((_, acc)) = terms.last() {
                        if acc.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((m, c));
                }
            }
        }
        if let Some((_, acc)) = terms.last() {
            if acc.is_zero() {
                terms.pop();
            }
        }
        Poly { terms }
    }

    /// Terms in decreasing term order.
    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        match self.terms.binary_search_by(|(k, _)| m.cmp(k)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Largest graded degree of a term (`None` for zero).
    pub fn weight(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.weight()).max()
    }

    /// Smallest graded degree of a term (`None` for zero).
    pub fn min_weight(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.weight()).min()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.iter().flat_map(|(m, _)| m.vars()).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    pub fn has_graded_vars(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.weight() > 0)
    }

    /// Drops every term of graded degree above `bound`.
    pub fn truncate(&self, bound: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() <= bound)
                .cloned()
                .collect(),
        }
    }

    /// The homogeneous component of graded degree `w`.
    pub fn graded_part(&self, w: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .cloned()
                .collect(),
        }
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of_power(&self, v: Var, k: u32) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == k)
                .map(|(m, c)| (m.with_exponent(v, 0), c.clone())),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by a monomial preserves the (monomial) term order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k * m, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product truncated to graded degree `bound`, skipping the work for
    /// dropped terms.
    pub fn mul_truncated(&self, rhs: &Poly, bound: u32) -> Poly {
        let mut raw = Vec::with_capacity(self.len() * rhs.len());
        for (a, ca) in &self.terms {
            let wa = a.weight();
            if wa > bound {
                continue;
            }
            for (b, cb) in &rhs.terms {
                if wa + b.weight() <= bound {
                    raw.push((a * b, ca * cb));
                }
            }
        }
        Poly::from_terms(raw)
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())))
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        self.rename(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// Simultaneous substitution `v ↦ image` for every entry of `map`;
    /// unmapped variables are kept.
    pub fn substitute(&self, map: &BTreeMap<Var, Poly>) -> Poly {
        self.substitute_impl(map, None)
    }

    /// Like [`Poly::substitute`] but discarding graded degree above `bound`
    /// along the way. Only meaningful when the images have no negative
    /// graded degree, which is always the case here.
    pub fn substitute_truncated(&self, map: &BTreeMap<Var, Poly>, bound: u32) -> Poly {
        self.substitute_impl(map, Some(bound))
    }

    fn substitute_impl(&self, map: &BTreeMap<Var, Poly>, bound: Option<u32>) -> Poly {
        let mut powers: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut raw: Vec<(Monomial, Scalar)> = Vec::new();
        for (m, c) in &self.terms {
            let mut kept = Factors::new();
            let mut acc = Poly::one();
            for &(v, e) in m.factors() {
                match map.get(&v) {
                    Some(image) => {
                        let p = power_cached(&mut powers, v, e, image, bound);
                        acc = match bound {
                            Some(d) => acc.mul_truncated(&p, d),
                            None => &acc * &p,
                        };
                    }
                    None => kept.push((v, e)),
                }
            }
            let kept = Monomial::from_factors(kept);
            for (k, a) in acc.terms {
                let mono = &k * &kept;
                if bound.is_some_and(|d| mono.weight() > d) {
                    continue;
                }
                raw.push((mono, &a * c));
            }
        }
        Poly::from_terms(raw)
    }

    /// Evaluates `x ↦ 0` for every variable in `vars`.
    pub fn set_zero(&self, vars: impl Fn(Var) -> bool) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.vars().any(&vars))
                .cloned()
                .collect(),
        }
    }

    /// Exact quotient by `a - b`.
    ///
    /// Uses `a^k = (a - b)·Σ_{j<k} a^{k-1-j} b^j + b^k`: the remainder is the
    /// image under `a ↦ b` and must vanish.
    pub fn divide_by_difference(&self, a: Var, b: Var) -> Result<Poly> {
        let remainder = Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let ea = m.exponent(a);
            let eb = m.exponent(b);
            (m.with_exponent(a, 0).with_exponent(b, ea + eb), c.clone())
        }));
        if !remainder.is_zero() {
            return Err(Error::Division { a, b });
        }
        let mut raw = Vec::new();
        for (m, c) in &self.terms {
            let ea = m.exponent(a);
            let eb = m.exponent(b);
            if ea == 0 {
                continue;
            }
            let rest = m.with_exponent(a, 0).with_exponent(b, 0);
            for j in 0..ea {
                let mono = &rest
                    * &Monomial::from_factors([(a, ea - 1 - j), (b, eb + j)]);
                raw.push((mono, c.clone()));
            }
        }
        Ok(Poly::from_terms(raw))
    }

    /// Terms grouped by their exponents in `vars`; the key lists those
    /// exponents in the order of `vars`, the value is the cofactor.
    pub fn group_by_exponents(&self, vars: &[Var]) -> BTreeMap<Vec<u32>, Poly> {
        let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, Scalar)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&v| m.exponent(v)).collect();
            let rest = Monomial::from_factors(
                m.factors().iter().copied().filter(|(v, _)| !vars.contains(v)),
            );
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, t)| (k, Poly::from_terms(t)))
            .collect()
    }

    fn merge(&self, rhs: &Poly, negate_rhs: bool) -> Poly {
        let mut terms = Vec::with_capacity(self.len() + rhs.len());
        let (a, b) = (&self.terms, &rhs.terms);
        let (mut i, mut j) = (0, 0);
        let take_b = |c: &Scalar| if negate_rhs { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        terms.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(a[i..].iter().cloned());
        terms.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
        Poly { terms }
    }
}

fn power_cached(
    cache: &mut BTreeMap<(Var, u32), Poly>,
    v: Var,
    e: u32,
    image: &Poly,
    bound: Option<u32>,
) -> Poly {
    if let Some(p) = cache.get(&(v, e)) {
        return p.clone();
    }
    let p = if e == 1 {
        match bound {
            Some(d) => image.truncate(d),
            None => image.clone(),
        }
    } else {
        let prev = power_cached(cache, v, e - 1, image, bound);
        match bound {
            Some(d) => prev.mul_truncated(image, d),
            None => &prev * image,
        }
    };
    cache.insert((v, e), p.clone());
    p
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl From<Scalar> for Poly {
    fn from(c: Scalar) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut raw = Vec::with_capacity(self.len() * rhs.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                raw.push((a * b, ca * cb));
            }
        }
        Poly::from_terms(raw)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &'a Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl core::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        Poly::from_terms(iter.flat_map(|p| p.terms))
    }
}

impl core::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

/// Canonical text form: terms in decreasing order, `*` between factors,
/// rational coefficients as `p/q`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact quotient of `p` by `x_i - x_{i+1}`.
pub fn exact_divide_linear(p: &Poly, i: usize) -> Result<Poly> {
    p.divide_by_difference(Var::x(i), Var::x(i + 1))
}

/// The elementary symmetric polynomial `e_k` of the given polynomials.
pub fn elementary_symmetric(k: usize, args: &[Poly]) -> Poly {
    // Coefficients of Π (1 + a t), built up one factor at a time.
    let mut e: Vec<Poly> = alloc::vec![Poly::one()];
    for a in args {
        let mut next = e.clone();
        next.push(Poly::zero());
        for j in 1..next.len() {
            next[j] = &next[j] + &(&e[j - 1] * a);
        }
        e = next;
    }
    e.get(k).cloned().unwrap_or_default()
}

/// The complete homogeneous symmetric polynomial `h_k` in the given variables.
pub fn complete_homogeneous(k: u32, vars: &[Var]) -> Poly {
    fn rec(k: u32, vars: &[Var], prefix: &mut Vec<(Var, u32)>, out: &mut Vec<(Monomial, Scalar)>) {
        match vars.split_first() {
            None => {
                if k == 0 {
                    out.push((Monomial::from_factors(prefix.iter().copied()), Scalar::ONE));
                }
            }
            Some((&v, rest)) => {
                for e in 0..=k {
                    prefix.push((v, e));
                    rec(k - e, rest, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(k, vars, &mut Vec::new(), &mut out);
    Poly::from_terms(out)
}
