//! Output formats: canonical text, JSON, LaTeX.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use betapoly_core::{Poly, Scalar, Var};
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Debug, Serialize)]
pub struct JsonTerm {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// A polynomial as `{variables, terms}`; `exponents[k]` belongs to
/// `variables[k]`.
#[derive(Debug, Serialize)]
pub struct JsonPoly {
    pub variables: Vec<String>,
    pub terms: Vec<JsonTerm>,
}

impl JsonPoly {
    pub fn new(p: &Poly) -> Self {
        let vars: BTreeSet<Var> = p.vars();
        let variables = vars.iter().map(|v| v.to_string()).collect();
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| JsonTerm {
                exponents: vars.iter().map(|&v| m.exponent(v)).collect(),
                coeff: c.to_string(),
            })
            .collect();
        JsonPoly { variables, terms }
    }
}

pub fn latex_var(v: Var) -> String {
    match v {
        Var::X(i) => format!("x_{{{i}}}"),
        Var::Y(i) => format!("y_{{{i}}}"),
        Var::U(1) => "u".into(),
        Var::U(2) => "v".into(),
        Var::U(3) => "w".into(),
        Var::U(i) => format!("u_{{{i}}}"),
        Var::Beta => "\\beta".into(),
        Var::M(k) => format!("m_{{{k}}}"),
        Var::C(i) => format!("c_{{{i}}}(F)"),
        Var::D(j) => format!("c_{{{j}}}(E^\\vee)"),
        Var::E(j) => format!("c_{{{j}}}(E)"),
        Var::V(i) => format!("c_{{{i}}}(V)"),
        Var::T => "t".into(),
    }
}

fn latex_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let mag = c.abs();
        let mut body = String::new();
        for &(v, e) in m.factors() {
            if !body.is_empty() {
                body.push(' ');
            }
            body.push_str(&latex_var(v));
            if e > 1 {
                let _ = write!(body, "^{{{e}}}");
            }
        }
        if body.is_empty() {
            out.push_str(&latex_scalar(&mag));
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            let _ = write!(out, "{} {}", latex_scalar(&mag), body);
        }
    }
    out
}

/// Renders one polynomial in the requested format, newline-terminated.
pub fn render_poly(p: &Poly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&JsonPoly::new(p)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Latex => format!("{}\n", latex(p)),
    }
}
