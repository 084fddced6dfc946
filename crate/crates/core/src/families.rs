//! Polynomial families indexed by permutations and words.
//!
//! `𝔥_{ω_0} = Π_{i+j≤n}(x_i + y_j + βx_iy_j)` and `𝔥_ω = φ_i 𝔥_{ωs_i}`
//! whenever `ω(i) < ω(i+1)`. Unwinding the recursion, `𝔥_ω` is
//! `φ_{i_l} ⋯ φ_{i_1} 𝔥_{ω_0}` for any reduced word `(i_1, …, i_l)` of
//! `ω_0 ω`.
//!
//! Bott-Samelson classes replace `φ` by the law operators `A_i` and the
//! initial class by `Π_{k+j≤n} F(x_k, y_j)`; there the `y_j` stand for the
//! already-inverted roots `χ(c_1(L_j))`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::divdiff::{phi, phi_word, FglOperators};
use crate::error::{Error, Result};
use crate::fgl::{FormalGroupLaw, LawKind};
use crate::perm::{lex_largest_reduced_word, lex_smallest_reduced_word, Permutation, Word};
use crate::poly::{Poly, Var};

/// `x_i + y_j + β x_i y_j` for a given parameter.
pub fn oplus(beta: &Poly, a: &Poly, b: &Poly) -> Poly {
    a + b + beta * &(a * b)
}

/// `Π_{i+j≤n}(x_i ⊕ y_j)` with `⊕` at parameter `beta`.
pub fn h_top_with(n: usize, beta: &Poly) -> Poly {
    let mut acc = Poly::one();
    for i in 1..n {
        for j in 1..=n - i {
            acc = &acc * &oplus(beta, &Poly::x(i), &Poly::y(j));
        }
    }
    acc
}

/// `𝔥_{ω_0}` in `S_n`.
pub fn h_top(n: usize) -> Poly {
    h_top_with(n, &Poly::beta())
}

/// The word `(i_1, …, i_l)` used to reach `ω` from `ω_0`.
fn word_from_top(w: &Permutation, largest: bool) -> Word {
    let start = Permutation::longest(w.n()).compose(w).expect("same rank");
    if largest {
        lex_largest_reduced_word(&start)
    } else {
        lex_smallest_reduced_word(&start)
    }
}

/// `𝔥_ω` with parameter `beta`, via the lexicographically smallest reduced
/// word of `ω_0 ω`. Debug builds re-derive it along the largest word.
pub fn beta_poly_with(w: &Permutation, beta: &Poly) -> Poly {
    let word = word_from_top(w, false);
    let out = phi_word(beta, &word, &h_top_with(w.n(), beta)).expect("φ numerators are antisymmetric");
    #[cfg(debug_assertions)]
    {
        let other = word_from_top(w, true);
        if other != word {
            let check = phi_word(beta, &other, &h_top_with(w.n(), beta)).expect("antisymmetric");
            debug_assert_eq!(out, check, "β-polynomial depends on the reduced word");
        }
    }
    out
}

/// `𝔥^{(β)}_ω` with symbolic `β`.
pub fn beta_poly(w: &Permutation) -> Poly {
    beta_poly_with(w, &Poly::beta())
}

/// `φ_{i_l} ⋯ φ_{i_1} 𝔥_{ω_0}` for an arbitrary word; when the word is a
/// reduced word of `ω_0 ω` this is `𝔥_ω`.
pub fn beta_poly_along(n: usize, word: &[usize]) -> Result<Poly> {
    for &i in word {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
    }
    phi_word(&Poly::beta(), word, &h_top(n))
}

fn negate_y(p: &Poly) -> Poly {
    let map: BTreeMap<Var, Poly> =
        p.vars().into_iter().filter(|v| matches!(v, Var::Y(_))).map(|v| (v, -Poly::var(v))).collect();
    p.substitute(&map)
}

/// `𝔖_ω(x, y) = 𝔥^{(0)}_ω(x, -y)`.
pub fn double_schubert(w: &Permutation) -> Poly {
    negate_y(&beta_poly_with(w, &Poly::zero()))
}

/// `𝔊_ω = 𝔥^{(-1)}_ω`.
pub fn double_grothendieck(w: &Permutation) -> Poly {
    beta_poly_with(w, &Poly::constant(-1))
}

/// `𝔥_ω` with `x_m = 0` for `m > x_keep` and `y_m = 0` for `m > y_keep`.
///
/// Variables are zeroed as early as possible: `y` is never touched by `φ`,
/// and `x_m` can be dropped once no remaining letter involves it. The word
/// starts with large indices so high `x` variables retire early.
pub fn beta_poly_specialized(w: &Permutation, x_keep: usize, y_keep: usize) -> Poly {
    let n = w.n();
    let word = word_from_top(w, true);
    let beta = Poly::beta();
    let mut last_use = alloc::vec![0usize; n + 2];
    for (k, &i) in word.iter().enumerate() {
        last_use[i] = k + 1;
        last_use[i + 1] = k + 1;
    }
    let retired = |m: usize, step: usize| m > x_keep && last_use[m] <= step;
    let mut acc = Poly::one();
    for i in 1..n {
        for j in 1..=(n - i).min(y_keep) {
            acc = &acc * &oplus(&beta, &Poly::x(i), &Poly::y(j));
        }
        if y_keep < n - i {
            // Factors x_i ⊕ 0 = x_i.
            acc = &acc * &Poly::x(i).pow((n - i - y_keep) as u32);
        }
        if retired(i, 0) {
            acc = acc.set_zero(|v| v == Var::x(i));
        }
    }
    for (k, &i) in word.iter().enumerate() {
        acc = phi(&beta, i, &acc).expect("φ numerators are antisymmetric");
        let step = k + 1;
        acc = acc.set_zero(|v| matches!(v, Var::X(m) if retired(usize::from(m), step)));
    }
    acc.set_zero(|v| matches!(v, Var::X(m) if usize::from(m) > x_keep))
}

/// Every `𝔥_ω`, `ω ∈ S_n`, computed once each by descending from `ω_0`.
#[derive(Clone, Debug)]
pub struct BetaFamily {
    n: usize,
    polys: BTreeMap<Permutation, Poly>,
}

impl BetaFamily {
    pub fn compute(n: usize) -> Self {
        Self::compute_with(n, &Poly::beta())
    }

    pub fn compute_with(n: usize, beta: &Poly) -> Self {
        let mut polys = BTreeMap::new();
        let top = Permutation::longest(n);
        polys.insert(top.clone(), h_top_with(n, beta));
        let mut queue = VecDeque::from([top]);
        while let Some(w) = queue.pop_front() {
            let p = polys[&w].clone();
            for i in w.right_descents() {
                let next = w.mul_simple_right(i).expect("descent in range");
                if !polys.contains_key(&next) {
                    polys.insert(next.clone(), phi(beta, i, &p).expect("antisymmetric"));
                    queue.push_back(next);
                }
            }
        }
        BetaFamily { n, polys }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &Permutation) -> Option<&Poly> {
        self.polys.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Poly)> {
        self.polys.iter()
    }
}

/// `Π_{k+j≤n} F(x_k, y_j)`, exact modulo degree above `bound`.
pub fn bott_samelson_initial(law: &FormalGroupLaw, n: usize) -> Result<Poly> {
    let mut acc = Poly::one();
    for k in 1..n {
        for j in 1..=n - k {
            let f = law.sum(&Poly::x(k), &Poly::y(j))?;
            acc = acc.mul_truncated(&f, law.bound());
        }
    }
    Ok(acc)
}

/// Initial class for trivial flags (`y = 0`): `Π_k x_k^{n-k}`.
pub fn trivial_initial(n: usize) -> Poly {
    (1..n).map(|k| Poly::x(k).pow((n - k) as u32)).product()
}

fn check_word(word: &[usize], n: usize) -> Result<()> {
    for &i in word {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
    }
    Ok(())
}

fn check_generators(kind: &LawKind, bound: u32) -> Result<()> {
    if let LawKind::UniversalRational { generators } = kind {
        if u32::from(*generators) < bound {
            return Err(Error::TooFewGenerators { needed: bound, got: u32::from(*generators) });
        }
    }
    Ok(())
}

/// `𝔅_I = A_{i_l} ⋯ A_{i_1} 𝔅_∅`, exact modulo degree above `bound`.
pub fn bott_samelson_class(kind: &LawKind, word: &[usize], n: usize, bound: u32) -> Result<Poly> {
    bott_samelson_from(kind, word, n, bound, |law| bott_samelson_initial(law, n))
}

/// `𝔅_I` for trivial flags, i.e. with every `y_j = 0`.
pub fn bott_samelson_trivial(kind: &LawKind, word: &[usize], n: usize, bound: u32) -> Result<Poly> {
    bott_samelson_from(kind, word, n, bound, |law| Ok(trivial_initial(n).truncate(law.bound())))
}

fn bott_samelson_from(
    kind: &LawKind,
    word: &[usize],
    n: usize,
    bound: u32,
    initial: impl Fn(&FormalGroupLaw) -> Result<Poly>,
) -> Result<Poly> {
    check_word(word, n)?;
    check_generators(kind, bound)?;
    let l = word.len() as u32;
    let law = kind.law_unchecked(bound + l)?;
    let mut acc = initial(&law)?;
    if l == 0 {
        return Ok(acc);
    }
    let ops = FglOperators::new(kind, bound + l - 1)?;
    for (k, &i) in word.iter().enumerate() {
        acc = ops.apply(i, &acc, bound + l - 1 - k as u32)?;
    }
    Ok(acc)
}

/// `𝔅_I` evaluated at un-inverted roots: `y_j ↦ χ(y_j)`.
pub fn bott_samelson_class_uninverted(
    kind: &LawKind,
    word: &[usize],
    n: usize,
    bound: u32,
) -> Result<Poly> {
    let class = bott_samelson_class(kind, word, n, bound)?;
    let law = kind.law_unchecked(bound)?;
    let map: BTreeMap<Var, Poly> = (1..n)
        .map(|j| Ok((Var::y(j), law.inverse(&Poly::y(j))?)))
        .collect::<Result<_>>()?;
    Ok(class.substitute_truncated(&map, bound))
}

/// Which family a cached value belongs to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyKey {
    Beta { w: Permutation },
    Schubert { w: Permutation },
    Grothendieck { w: Permutation },
    BottSamelson { kind: LawKind, n: usize, word: Word, bound: u32 },
}

/// Memo table for family values. Insertion is idempotent: every key maps to
/// a single well-defined polynomial.
#[derive(Clone, Debug, Default)]
pub struct FamilyCache {
    entries: BTreeMap<FamilyKey, Poly>,
}

impl FamilyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &FamilyKey) -> Option<&Poly> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: FamilyKey, value: Poly) {
        self.entries.insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Computes `key` unless it is already present.
    pub fn get_or_compute(&mut self, key: FamilyKey) -> Result<Poly> {
        if let Some(p) = self.entries.get(&key) {
            return Ok(p.clone());
        }
        let value = compute_key(&key)?;
        self.entries.insert(key, value.clone());
        Ok(value)
    }
}

/// Evaluates a key without any caching.
pub fn compute_key(key: &FamilyKey) -> Result<Poly> {
    Ok(match key {
        FamilyKey::Beta { w } => beta_poly(w),
        FamilyKey::Schubert { w } => double_schubert(w),
        FamilyKey::Grothendieck { w } => double_grothendieck(w),
        FamilyKey::BottSamelson { kind, n, word, bound } => {
            bott_samelson_class(kind, word, *n, *bound)?
        }
    })
}

/// All `ω` in `S_n` paired with their reduced words from `ω_0`.
pub fn words_from_top(w: &Permutation) -> Vec<Word> {
    let start = Permutation::longest(w.n()).compose(w).expect("same rank");
    crate::perm::all_reduced_words(&start)
}
