use alloc::string::String;

use crate::poly::Var;

/// Everything that can go wrong in the library.
///
/// The variants split into two families: malformed requests (bad indices,
/// invalid permutations, inconsistent parameters) and violations of a
/// mathematical contract (a division that should have been exact, a
/// polynomial that should have been symmetric). [`Error::is_contract_violation`]
/// tells them apart.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial does not belong to the coefficient ring {ring}")]
    RingMismatch { ring: String },

    #[error("polynomial is not divisible by {a} - {b}")]
    Division { a: Var, b: Var },

    #[error("constant term of the series is not a unit")]
    NonUnitConstant,

    #[error("series must start with the bare variable (linear coefficient 1, no constant term)")]
    LinearCoefficient,

    #[error("series must involve exactly one graded variable")]
    NotUnivariate,

    #[error("argument of a formal group law must have zero constant term")]
    ConstantTerm,

    #[error("parameter must not involve graded variables")]
    GradedParameter,

    #[error("F(x_i, chi(x_i+1)) does not factor as (x_i - x_i+1) times a unit")]
    Factorization,

    #[error("not a permutation of 1..={n}")]
    NotPermutation { n: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid rank triple ({e}, {f}, {r}): need r <= min(e, f)")]
    InvalidTriple { e: usize, f: usize, r: usize },

    #[error("polynomial is not symmetric in the {block}-block")]
    NotSymmetric { block: char },

    #[error("universal law needs at least {needed} log generators, got {got}")]
    TooFewGenerators { needed: u32, got: u32 },

    #[error("truncation bound must be at least {min}")]
    BoundTooSmall { min: u32 },

    #[error("permutations live in different symmetric groups (S_{left} vs S_{right})")]
    RankMismatch { left: usize, right: usize },
}

impl Error {
    /// `true` for broken mathematical invariants, `false` for bad input.
    pub fn is_contract_violation(&self) -> bool {
        matches!(
            self,
            Error::RingMismatch { .. }
                | Error::Division { .. }
                | Error::NonUnitConstant
                | Error::LinearCoefficient
                | Error::NotUnivariate
                | Error::ConstantTerm
                | Error::Factorization
                | Error::NotSymmetric { .. }
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
