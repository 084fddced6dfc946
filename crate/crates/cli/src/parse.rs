//! Parsers for the textual forms accepted on the command line.
//!
//! Polynomials use the canonical output syntax: `+ - * ^`, parentheses,
//! integer or `p/q` literals, and the variable names `x1`, `y2`, `b` (also
//! `beta`), `m1`, `u`, `v`, `w`, `t`, `cF1`, `cEdual1`, `cE1`, `cV1`.
//! Anything printed by the text renderer parses back to the same value.

use betapoly_core::{Permutation, Poly, Scalar, Var};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at offset {offset}")]
    Unexpected { found: char, offset: usize },
    #[error("unexpected end of input")]
    Eof,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("invalid number {0:?}")]
    Number(String),
    #[error("division by zero")]
    ZeroDenominator,
    #[error("invalid permutation {0:?}")]
    Permutation(String),
    #[error("invalid word {0:?}")]
    Word(String),
}

pub fn parse_poly(input: &str) -> Result<Poly, ParseError> {
    let mut p = Parser { chars: input.char_indices().collect(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(out),
        Some((offset, found)) => Err(ParseError::Unexpected { found, offset }),
    }
}

/// One-line notation, whitespace- or comma-separated: `"3 1 2"`.
pub fn parse_perm(input: &str) -> Result<Permutation, ParseError> {
    let images = input
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| ParseError::Permutation(input.to_string()))?;
    Permutation::new(images).map_err(|_| ParseError::Permutation(input.to_string()))
}

/// Comma-separated indices: `"1,2,1"`; the empty string is the empty word.
pub fn parse_word(input: &str) -> Result<Vec<usize>, ParseError> {
    input
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| ParseError::Word(input.to_string())))
        .collect()
}

/// Comma-separated polynomials (no nested commas in the grammar).
pub fn parse_poly_list(input: &str) -> Result<Vec<Poly>, ParseError> {
    input.split(',').filter(|s| !s.trim().is_empty()).map(parse_poly).collect()
}

pub fn parse_var(name: &str) -> Result<Var, ParseError> {
    let unknown = || ParseError::UnknownVariable(name.to_string());
    let index = |rest: &str| -> Result<u8, ParseError> {
        match rest.parse::<u8>() {
            Ok(k) if k >= 1 => Ok(k),
            _ => Err(unknown()),
        }
    };
    Ok(match name {
        "b" | "beta" => Var::Beta,
        "u" => Var::U(1),
        "v" => Var::U(2),
        "w" => Var::U(3),
        "t" => Var::T,
        _ => {
            if let Some(rest) = name.strip_prefix("cEdual") {
                Var::D(index(rest)?)
            } else if let Some(rest) = name.strip_prefix("cF") {
                Var::C(index(rest)?)
            } else if let Some(rest) = name.strip_prefix("cE") {
                Var::E(index(rest)?)
            } else if let Some(rest) = name.strip_prefix("cV") {
                Var::V(index(rest)?)
            } else if let Some(rest) = name.strip_prefix('x') {
                Var::X(index(rest)?)
            } else if let Some(rest) = name.strip_prefix('y') {
                Var::Y(index(rest)?)
            } else if let Some(rest) = name.strip_prefix('m') {
                Var::M(index(rest)?)
            } else if let Some(rest) = name.strip_prefix('u') {
                Var::U(index(rest)?)
            } else {
                return Err(unknown());
            }
        }
    })
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if matches!(self.peek(), Some((_, c)) if c == want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            let e = digits.parse::<u32>().map_err(|_| ParseError::Number(digits.clone()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some((_, c)) = self.peek() {
            if !f(c) {
                break;
            }
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let (offset, c) = self.peek().ok_or(ParseError::Eof)?;
        if c == '(' {
            self.pos += 1;
            let inner = self.expr()?;
            if !self.eat(')') {
                return match self.peek() {
                    Some((offset, found)) => Err(ParseError::Unexpected { found, offset }),
                    None => Err(ParseError::Eof),
                };
            }
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let numer = self.take_while(|c| c.is_ascii_digit());
            let n = numer.parse::<i64>().map_err(|_| ParseError::Number(numer.clone()))?;
            let save = self.pos;
            if self.eat('/') {
                self.skip_ws();
                let denom = self.take_while(|c| c.is_ascii_digit());
                if denom.is_empty() {
                    self.pos = save;
                    return Ok(Poly::constant(n));
                }
                let d = denom.parse::<i64>().map_err(|_| ParseError::Number(denom.clone()))?;
                if d == 0 {
                    return Err(ParseError::ZeroDenominator);
                }
                return Ok(Poly::constant(Scalar::ratio(n, d)));
            }
            return Ok(Poly::constant(n));
        }
        if c.is_ascii_alphabetic() {
            let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            return Ok(Poly::var(parse_var(&name.replace('_', ""))?));
        }
        Err(ParseError::Unexpected { found: c, offset })
    }
}
