//! Command-line grammar and its translation into a [`JobSpec`].

use clap::{Parser, Subcommand};

use crate::job::{Command, FamilyTheory, JobError, JobSpec, LawSelector, OperatorMode, TheorySelector};
use crate::parse::{parse_perm, parse_poly, parse_poly_list, parse_word};
use crate::render::Format;
use betapoly_core::porteous::RankTriple;

#[derive(Debug, Parser)]
#[command(name = "betapoly", version, about = "Exact double beta-polynomial and formal group law calculus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
    /// Truncation degree D (default n(n-1)/2 + 2).
    #[arg(long, global = true)]
    pub trunc: Option<u32>,
    /// Number K of log generators for the universal law (default D).
    #[arg(long, global = true)]
    pub loggen: Option<u8>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized samples.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// A beta, Schubert or Grothendieck polynomial.
    Family {
        #[arg(long, value_enum)]
        theory: FamilyTheory,
        /// One-line notation, e.g. "3 1 2".
        #[arg(long)]
        perm: String,
        /// Rank; the permutation is embedded in S_n if n is larger.
        #[arg(long)]
        n: Option<usize>,
    },
    /// A Bott-Samelson class A_I applied to the initial product class.
    BottSamelson {
        #[arg(long, value_enum)]
        law: LawSelector,
        /// Comma-separated word, e.g. "1,2,1".
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        n: usize,
        /// Trivial flags: every y_j = 0.
        #[arg(long)]
        trivial: bool,
        /// Treat y_j as un-inverted roots (substitute chi(y_j)).
        #[arg(long)]
        uninverted: bool,
    },
    /// A Thom-Porteous polynomial in Chern classes.
    Porteous {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = TheorySelector::Ck)]
        theory: TheorySelector,
    },
    /// Hecke algebra checks.
    Hecke {
        #[command(subcommand)]
        action: HeckeCmd,
    },
    /// Check braid relations of the divided-difference operators.
    Braid {
        #[arg(long, value_enum)]
        law: OperatorMode,
        #[arg(long)]
        n: usize,
        /// Random samples in addition to x1^2*x2.
        #[arg(long, default_value_t = 4)]
        samples: usize,
    },
    /// Flag-ring normal forms.
    Flagring {
        #[command(subcommand)]
        action: FlagCmd,
    },
    /// Chern polynomial and top Chern class of E^dual tensor F.
    ChernTensor {
        #[arg(long, value_enum)]
        law: LawSelector,
        /// Comma-separated Chern roots of F.
        #[arg(long)]
        x_roots: String,
        /// Comma-separated Chern roots of E.
        #[arg(long)]
        y_roots: String,
    },
    /// Apply a word of divided-difference operators.
    Divdiff {
        #[arg(long, value_enum)]
        mode: OperatorMode,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        input: String,
        /// Number of x variables (default: inferred).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeckeCmd {
    /// Emit a pass/fail certificate per statement.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlagCmd {
    Reduce {
        #[arg(long)]
        n: usize,
        /// Trivial base bundle (all Chern classes zero); otherwise symbolic cV_i.
        #[arg(long)]
        trivial: bool,
        #[arg(long)]
        input: String,
    },
}

fn usage(e: impl std::fmt::Display) -> JobError {
    JobError::Usage(e.to_string())
}

impl Cli {
    pub fn into_spec(self) -> Result<JobSpec, JobError> {
        let command = match self.command {
            Cmd::Family { theory, perm, n } => {
                let perm = parse_perm(&perm).map_err(usage)?;
                let perm = match n {
                    Some(n) if n < perm.n() => {
                        return Err(usage(format!("permutation does not fit in S_{n}")))
                    }
                    Some(n) => perm.embed(n),
                    None => perm,
                };
                Command::Family { theory, perm }
            }
            Cmd::BottSamelson { law, word, n, trivial, uninverted } => Command::BottSamelson {
                law,
                word: parse_word(&word).map_err(usage)?,
                n,
                trivial,
                uninverted,
            },
            Cmd::Porteous { e, f, r, theory } => Command::Porteous {
                triple: RankTriple::new(e, f, r).map_err(usage)?,
                theory,
            },
            Cmd::Hecke { action: HeckeCmd::Verify { n } } => Command::HeckeVerify { n },
            Cmd::Braid { law, n, samples } => Command::Braid { law, n, samples },
            Cmd::Flagring { action: FlagCmd::Reduce { n, trivial, input } } => {
                Command::FlagReduce { n, trivial, input: parse_poly(&input).map_err(usage)? }
            }
            Cmd::ChernTensor { law, x_roots, y_roots } => Command::ChernTensor {
                law,
                x_roots: parse_poly_list(&x_roots).map_err(usage)?,
                y_roots: parse_poly_list(&y_roots).map_err(usage)?,
            },
            Cmd::Divdiff { mode, word, input, n } => {
                let word = parse_word(&word).map_err(usage)?;
                let input = parse_poly(&input).map_err(usage)?;
                let max_x = input
                    .vars()
                    .into_iter()
                    .filter_map(|v| match v {
                        betapoly_core::Var::X(i) => Some(usize::from(i)),
                        _ => None,
                    })
                    .max()
                    .unwrap_or(0);
                let inferred = word.iter().map(|i| i + 1).max().unwrap_or(0).max(max_x).max(2);
                Command::DivDiff { mode, n: n.unwrap_or(inferred), word, input }
            }
        };
        Ok(JobSpec {
            command,
            trunc: self.trunc,
            loggen: self.loggen,
            format: self.format,
            seed: self.seed,
        })
    }
}
