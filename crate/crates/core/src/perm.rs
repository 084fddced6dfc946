//! Symmetric-group combinatorics.
//!
//! Permutations are stored in one-line notation with 1-based values.
//! Right multiplication by `s_i` swaps *positions* `i, i+1`; left
//! multiplication swaps *values* `i, i+1`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

/// A word `(i_1, …, i_l)` naming the product `s_{i_1} ⋯ s_{i_l}`.
pub type Word = Vec<usize>;

impl Permutation {
    /// Validates one-line notation.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation { n });
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// ω_0: `i ↦ n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `ω(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.n()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ rhs)(i) = self(rhs(i))`.
    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.n() != rhs.n() {
            return Err(Error::RankMismatch { left: self.n(), right: rhs.n() });
        }
        Ok(Permutation(rhs.0.iter().map(|&j| self.at(j)).collect()))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, max: self.n().saturating_sub(1) });
        }
        Ok(())
    }

    /// `ω s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Result<Permutation> {
        self.check_index(i)?;
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Ok(Permutation(w))
    }

    /// `s_i ω`.
    pub fn mul_simple_left(&self, i: usize) -> Result<Permutation> {
        self.check_index(i)?;
        Ok(Permutation(
            self.0
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect(),
        ))
    }

    /// `ω(i) > ω(i+1)`, i.e. `l(ω s_i) < l(ω)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.at(i) > self.at(i + 1)
    }

    /// `l(s_i ω) < l(ω)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// The same permutation in `S_m`, `m ≥ n`, fixing `n+1..=m`.
    pub fn embed(&self, m: usize) -> Permutation {
        let mut w = self.0.clone();
        w.extend(self.n() + 1..=m);
        Permutation(w)
    }

    /// `r_ω(i, j) = |{l ≤ j : ω(l) ≤ i}|`.
    pub fn rank(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.n();
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, max: n });
            }
        }
        Ok(self.0[..j].iter().filter(|&&v| v <= i).count())
    }

    /// Every permutation of `S_n`, in lexicographic order of one-line form.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = alloc::vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `s_{i_1} ⋯ s_{i_l}` in `S_n`.
pub fn apply_word(word: &[usize], n: usize) -> Result<Permutation> {
    word.iter().try_fold(Permutation::identity(n), |w, &i| w.mul_simple_right(i))
}

/// Whether the word is reduced.
pub fn is_minimal(word: &[usize], n: usize) -> Result<bool> {
    Ok(apply_word(word, n)?.length() == word.len())
}

/// Every reduced word of `w`, sorted lexicographically.
///
/// A reduced word of `w` ends in `i` exactly when `i` is a right descent, so
/// the words are enumerated by peeling descents off the right.
pub fn all_reduced_words(w: &Permutation) -> Vec<Word> {
    let mut memo = BTreeMap::new();
    reduced_words_memo(w, &mut memo).into_iter().collect()
}

fn reduced_words_memo(
    w: &Permutation,
    memo: &mut BTreeMap<Permutation, BTreeSet<Word>>,
) -> BTreeSet<Word> {
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let mut words = BTreeSet::new();
    if w.is_identity() {
        words.insert(Word::new());
    }
    for i in w.right_descents() {
        let shorter = w.mul_simple_right(i).expect("descent index in range");
        for mut prefix in reduced_words_memo(&shorter, memo) {
            prefix.push(i);
            words.insert(prefix);
        }
    }
    memo.insert(w.clone(), words.clone());
    words
}

/// The lexicographically smallest reduced word: repeatedly strip the
/// smallest left descent.
pub fn lex_smallest_reduced_word(w: &Permutation) -> Word {
    greedy_left(w, |ds| ds.first().copied())
}

/// The lexicographically largest reduced word.
pub fn lex_largest_reduced_word(w: &Permutation) -> Word {
    greedy_left(w, |ds| ds.last().copied())
}

fn greedy_left(w: &Permutation, pick: impl Fn(&[usize]) -> Option<usize>) -> Word {
    let mut word = Word::new();
    let mut cur = w.clone();
    loop {
        let descents: Vec<usize> = (1..cur.n()).filter(|&i| cur.has_left_descent(i)).collect();
        match pick(&descents) {
            Some(i) => {
                word.push(i);
                cur = cur.mul_simple_left(i).expect("descent index in range");
            }
            None => return word,
        }
    }
}

/// The Grassmannian-type permutation `ν` of the triple `(s, t, u)`, in
/// `S_{s+t-u}`:
/// positions `1..=u` are fixed, `u+1..=t` go to `s+1..=s+t-u`, and
/// `t+1..=s+t-u` go to `u+1..=s`. Its length is `(s-u)(t-u)`.
pub fn nu(s: usize, t: usize, u: usize) -> Result<Permutation> {
    if u > s.min(t) {
        return Err(Error::InvalidTriple { e: s, f: t, r: u });
    }
    let mut images: Vec<usize> = (1..=u).collect();
    images.extend(s + 1..=s + t - u);
    images.extend(u + 1..=s);
    Ok(Permutation(images))
}
