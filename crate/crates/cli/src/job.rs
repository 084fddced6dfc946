//! Validated job descriptions and their execution.
//!
//! `run` is a pure function of its [`JobSpec`]: every collection it walks is
//! ordered and all randomness comes from the explicit seed, so identical
//! specs produce byte-identical documents.

use std::collections::BTreeMap;

use betapoly_core::divdiff::{Mode, OperatorContext};
use betapoly_core::families::{
    bott_samelson_class_uninverted, bott_samelson_trivial, FamilyKey,
};
use betapoly_core::hecke;
use betapoly_core::porteous::{thom_porteous, RankTriple, Theory};
use betapoly_core::{
    Error, FlagRingPresentation, FormalGroupLaw, LawKind, Monomial, Permutation, Poly, Scalar, Var,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::cache::SharedCache;
use crate::render::{latex, render_poly, Format, JsonPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilyTheory {
    Beta,
    Schubert,
    Grothendieck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LawSelector {
    Additive,
    /// `F = u + v - b·uv` with `b` symbolic.
    Multiplicative,
    Universal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OperatorMode {
    /// `φ_i` with symbolic β.
    Beta,
    Additive,
    Multiplicative,
    Universal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TheorySelector {
    Ck,
    K0,
    Ch,
}

impl From<TheorySelector> for Theory {
    fn from(t: TheorySelector) -> Theory {
        match t {
            TheorySelector::Ck => Theory::CK,
            TheorySelector::K0 => Theory::K0,
            TheorySelector::Ch => Theory::CH,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Family { theory: FamilyTheory, perm: Permutation },
    BottSamelson { law: LawSelector, word: Vec<usize>, n: usize, trivial: bool, uninverted: bool },
    Porteous { triple: RankTriple, theory: TheorySelector },
    HeckeVerify { n: usize },
    Braid { law: OperatorMode, n: usize, samples: usize },
    FlagReduce { n: usize, trivial: bool, input: Poly },
    ChernTensor { law: LawSelector, x_roots: Vec<Poly>, y_roots: Vec<Poly> },
    DivDiff { mode: OperatorMode, n: usize, word: Vec<usize>, input: Poly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    /// Truncation bound `D`; defaults to `n(n-1)/2 + 2`.
    pub trunc: Option<u32>,
    /// Log-generator count `K` of the universal law; defaults to `D`.
    pub loggen: Option<u8>,
    pub format: Format,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum JobError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] Error),
    /// A verification ran to completion but some statement failed; the
    /// document is still produced.
    #[error("verification failed")]
    Failed(String),
}

impl JobError {
    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Usage(_) => 2,
            JobError::Math(e) if !e.is_contract_violation() => 2,
            JobError::Math(_) | JobError::Failed(_) => 3,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, JobError> {
    Err(JobError::Usage(msg.into()))
}

fn default_bound(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2 + 2) as u32
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec { command, trunc: None, loggen: None, format: Format::Text, seed: 0 }
    }

    fn bound(&self, n: usize) -> u32 {
        self.trunc.unwrap_or_else(|| default_bound(n))
    }

    fn generators(&self, bound: u32) -> Result<u8, JobError> {
        match self.loggen {
            Some(k) => Ok(k),
            None => u8::try_from(bound).or_else(|_| usage("truncation bound too large")),
        }
    }

    fn law(&self, law: LawSelector, bound: u32) -> Result<LawKind, JobError> {
        Ok(match law {
            LawSelector::Additive => LawKind::Additive,
            LawSelector::Multiplicative => LawKind::multiplicative_beta(),
            LawSelector::Universal => {
                LawKind::UniversalRational { generators: self.generators(bound)? }
            }
        })
    }

    fn mode(&self, mode: OperatorMode, bound: u32) -> Result<Mode, JobError> {
        Ok(match mode {
            OperatorMode::Beta => Mode::Beta(Poly::beta()),
            OperatorMode::Additive => Mode::Law(self.law(LawSelector::Additive, bound)?),
            OperatorMode::Multiplicative => Mode::Law(self.law(LawSelector::Multiplicative, bound)?),
            OperatorMode::Universal => Mode::Law(self.law(LawSelector::Universal, bound)?),
        })
    }

    /// Rejects inconsistent specs before any computation.
    pub fn validate(&self) -> Result<(), JobError> {
        let check_word = |word: &[usize], n: usize| -> Result<(), JobError> {
            if n == 0 {
                return usage("n must be at least 1");
            }
            match word.iter().find(|&&i| i == 0 || i >= n) {
                Some(i) => usage(format!("word index {i} out of range 1..={}", n - 1)),
                None => Ok(()),
            }
        };
        match &self.command {
            Command::Family { perm, .. } if perm.n() == 0 => usage("empty permutation"),
            Command::BottSamelson { word, n, .. } | Command::DivDiff { word, n, .. } => {
                check_word(word, *n)
            }
            Command::HeckeVerify { n } | Command::FlagReduce { n, .. } if *n == 0 => {
                usage("n must be at least 1")
            }
            Command::Braid { n, .. } if *n < 3 => usage("braid relations need n >= 3"),
            _ => Ok(()),
        }
    }
}

/// Executes a job and returns the output document.
pub fn run(spec: &JobSpec) -> Result<String, JobError> {
    run_with_cache(spec, &SharedCache::new())
}

pub fn run_with_cache(spec: &JobSpec, cache: &SharedCache) -> Result<String, JobError> {
    spec.validate()?;
    let fmt = spec.format;
    match &spec.command {
        Command::Family { theory, perm } => {
            let key = match theory {
                FamilyTheory::Beta => FamilyKey::Beta { w: perm.clone() },
                FamilyTheory::Schubert => FamilyKey::Schubert { w: perm.clone() },
                FamilyTheory::Grothendieck => FamilyKey::Grothendieck { w: perm.clone() },
            };
            Ok(render_poly(&cache.get_or_compute(key)?, fmt))
        }
        Command::BottSamelson { law, word, n, trivial, uninverted } => {
            let bound = spec.bound(*n);
            let kind = spec.law(*law, bound)?;
            let p = match (trivial, uninverted) {
                (true, _) => bott_samelson_trivial(&kind, word, *n, bound)?,
                (false, true) => bott_samelson_class_uninverted(&kind, word, *n, bound)?,
                (false, false) => cache.get_or_compute(FamilyKey::BottSamelson {
                    kind,
                    n: *n,
                    word: word.clone(),
                    bound,
                })?,
            };
            Ok(render_poly(&p, fmt))
        }
        Command::Porteous { triple, theory } => {
            let d = thom_porteous(*triple, (*theory).into())?;
            Ok(match fmt {
                Format::Json => {
                    let mut slots: Vec<String> = (1..=triple.f).map(|i| format!("cF{i}")).collect();
                    let dual = if matches!(theory, TheorySelector::Ch) { "cE" } else { "cEdual" };
                    slots.extend((1..=triple.e).map(|j| format!("{dual}{j}")));
                    let doc = json!({
                        "triple": { "e": triple.e, "f": triple.f, "r": triple.r },
                        "theory": format!("{:?}", d.theory),
                        "slots": slots,
                        "polynomial": JsonPoly::new(&d.body),
                    });
                    pretty(&doc)
                }
                _ => render_poly(&d.body, fmt),
            })
        }
        Command::HeckeVerify { n } => {
            let certs = hecke::verify(*n)?;
            let doc = match fmt {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row<'a> {
                        statement: &'a str,
                        passed: bool,
                        detail: &'a str,
                    }
                    let rows: Vec<Row> = certs
                        .iter()
                        .map(|c| Row { statement: &c.statement, passed: c.passed, detail: &c.detail })
                        .collect();
                    pretty(&rows)
                }
                _ => certs
                    .iter()
                    .map(|c| {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        format!("{tag}: {} ({})\n", c.statement, c.detail)
                    })
                    .collect(),
            };
            if certs.iter().all(|c| c.passed) {
                Ok(doc)
            } else {
                Err(JobError::Failed(doc))
            }
        }
        Command::Braid { law, n, samples } => braid(spec, *law, *n, *samples),
        Command::FlagReduce { n, trivial, input } => {
            let ring = if *trivial {
                FlagRingPresentation::trivial(*n)
            } else {
                FlagRingPresentation::symbolic(*n)
            };
            Ok(render_poly(&ring.reduce(input), fmt))
        }
        Command::ChernTensor { law, x_roots, y_roots } => {
            let bound = spec.trunc.unwrap_or((x_roots.len() * y_roots.len()) as u32 + 2);
            let kind = spec.law(*law, bound)?;
            let fgl = match kind {
                LawKind::UniversalRational { generators } => {
                    FormalGroupLaw::universal_rational(generators, bound)?
                }
                LawKind::Multiplicative { b } => FormalGroupLaw::multiplicative(b, bound)?,
                LawKind::Additive => FormalGroupLaw::additive(bound),
            };
            let (chern, top) = fgl.chern_tensor_dual(x_roots, y_roots)?;
            Ok(match fmt {
                Format::Json => pretty(&json!({
                    "bound": bound,
                    "chern_polynomial": JsonPoly::new(&chern),
                    "top": JsonPoly::new(&top),
                })),
                Format::Text => format!("chern: {chern}\ntop: {top}\n"),
                Format::Latex => format!("chern: {}\ntop: {}\n", latex(&chern), latex(&top)),
            })
        }
        Command::DivDiff { mode, n, word, input } => {
            let bound = spec.bound(*n);
            let ctx = OperatorContext::new(*n, spec.mode(*mode, bound)?, bound)?;
            Ok(render_poly(&ctx.compose_word(word, input)?, fmt))
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// `x_1^2 x_2` followed by `count` seeded random polynomials in `x_1..x_n`.
pub fn braid_samples(n: usize, count: usize, seed: u64) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Poly::x(1).pow(2) * Poly::x(2)];
    for _ in 0..count {
        let terms = (0..rng.gen_range(1..=3)).map(|_| {
            let factors: Vec<(Var, u32)> = (1..=n).map(|i| (Var::x(i), rng.gen_range(0..=2))).collect();
            (Monomial::from_factors(factors), Scalar::from(rng.gen_range(-3i64..=3)))
        });
        out.push(Poly::from_terms(terms.collect::<Vec<_>>()));
    }
    out
}

fn braid(spec: &JobSpec, law: OperatorMode, n: usize, samples: usize) -> Result<String, JobError> {
    let bound = spec.bound(n);
    let mode = spec.mode(law, bound)?;
    let ctx = OperatorContext::new(n, mode, bound)?;
    let sample_polys = braid_samples(n, samples, spec.seed);
    let mut checks = Vec::new();
    for i in 1..n - 1 {
        let report = ctx.braid_check(i, &sample_polys)?;
        checks.push((i, report));
    }
    let law_name = format!("{law:?}").to_lowercase();
    let generators = match ctx.mode() {
        Mode::Law(LawKind::UniversalRational { generators }) => Some(*generators),
        _ => None,
    };
    Ok(match spec.format {
        Format::Json => {
            let rows: Vec<_> = checks
                .iter()
                .map(|(i, r)| {
                    let mut row = BTreeMap::new();
                    row.insert("i", json!(i));
                    row.insert("holds", json!(r.holds));
                    if let Some((p, w)) = &r.witness {
                        row.insert("sample", json!(p.to_string()));
                        row.insert("witness", serde_json::to_value(JsonPoly::new(w)).expect("json"));
                    }
                    row
                })
                .collect();
            pretty(&json!({
                "law": law_name,
                "bound": bound,
                "generators": generators,
                "samples": sample_polys.len(),
                "checks": rows,
            }))
        }
        _ => {
            let mut out = format!("law: {law_name}, bound: {bound}");
            if let Some(k) = generators {
                out.push_str(&format!(", generators: {k}"));
            }
            out.push('\n');
            for (i, r) in &checks {
                match &r.witness {
                    None => out.push_str(&format!("i={i}: braid relation holds on all samples\n")),
                    Some((p, w)) => {
                        let w = if spec.format == Format::Latex { latex(w) } else { w.to_string() };
                        out.push_str(&format!("i={i}: braid relation fails\n  sample: {p}\n  witness: {w}\n"));
                    }
                }
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_perm;

    #[test]
    fn schubert_family_text() {
        let spec = JobSpec::new(Command::Family {
            theory: FamilyTheory::Schubert,
            perm: parse_perm("2 1").unwrap(),
        });
        assert_eq!(run(&spec).unwrap(), "x1 - y1\n");
    }

    #[test]
    fn inconsistent_spec_is_rejected() {
        let spec = JobSpec::new(Command::BottSamelson {
            law: LawSelector::Additive,
            word: vec![3],
            n: 3,
            trivial: false,
            uninverted: false,
        });
        let err = run(&spec).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn universal_braid_reports_failure() {
        let mut spec = JobSpec::new(Command::Braid { law: OperatorMode::Universal, n: 3, samples: 0 });
        spec.trunc = Some(4);
        let out = run(&spec).unwrap();
        assert!(out.contains("fails"), "{out}");
        assert!(out.contains("m1"), "{out}");
    }

    #[test]
    fn division_failure_is_contract_violation() {
        let e = JobError::Math(Error::Division { a: Var::X(1), b: Var::X(2) });
        assert_eq!(e.exit_code(), 3);
    }
}
