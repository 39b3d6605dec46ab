//! Text grammar for exact inputs.
//!
//! Scalars: sums of terms like `3`, `-1/2`, `z`, `2*z^3`, `(1 + z)*z^-1`, where
//! `z` is the primitive root of unity of the declared level.
//! Matrices: rows separated by `;`, entries by `,`, e.g. `0, 1; 1, 0`.
//! Weights: variables separated by `,`, components by `:`, e.g. `1:0,0:1`.
//!
//! Session files hold `key = value` lines; `#` starts a comment.
//!
//! ```text
//! level = 4
//! generator = -1, 0; 0, z
//! rho = det                 # or trivial(m), sign, natural, regular, none, product(a, b)
//! rho_image = z             # alternatively one image per generator
//! ```

use crate::error::{invalid, CliError};
use invar_core::arith::{CycMatrix, CycNum, Rational};
use invar_core::group::{close_group, MatrixGroup, Representation, DEFAULT_GROUP_CAP};
use num_bigint::BigInt;
use std::sync::Arc;

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    level: u32,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, CliError> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&c) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.chars.next();
        }
        digits.parse().map_err(|_| invalid("expected an integer"))
    }

    fn expr(&mut self) -> Result<CycNum, CliError> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
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

    fn term(&mut self) -> Result<CycNum, CliError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CycNum, CliError> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(invalid("unbalanced parenthesis"));
                }
                Ok(v)
            }
            Some('z') => {
                self.chars.next();
                let mut e = 1i64;
                if self.eat('^') {
                    let neg = self.eat('-');
                    let n: i64 = self.integer()?.try_into().map_err(|_| invalid("exponent too large"))?;
                    e = if neg { -n } else { n };
                }
                Ok(CycNum::zeta(self.level, e))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat('/') { self.integer()? } else { BigInt::from(1) };
                if den == BigInt::from(0) {
                    return Err(invalid("zero denominator"));
                }
                Ok(CycNum::from_rational(self.level, Rational::new(num, den)))
            }
            other => Err(invalid(format!("unexpected {:?} in scalar", other))),
        }
    }
}

pub fn parse_cyc(s: &str, level: u32) -> Result<CycNum, CliError> {
    let mut lex = Lexer { chars: s.chars().peekable(), level };
    let v = lex.expr()?;
    if lex.peek().is_some() {
        return Err(invalid(format!("trailing input in scalar {:?}", s)));
    }
    Ok(v)
}

pub fn parse_vector(s: &str, level: u32) -> Result<Vec<CycNum>, CliError> {
    s.split(',').map(|e| parse_cyc(e, level)).collect()
}

pub fn parse_matrix(s: &str, level: u32) -> Result<CycMatrix, CliError> {
    let rows: Vec<Vec<CycNum>> = s.split(';').map(|r| parse_vector(r, level)).collect::<Result<_, _>>()?;
    Ok(CycMatrix::from_rows(rows)?)
}

/// Weights of each variable as a tuple with one component per invariant factor.
pub fn parse_weights(s: &str, factors: usize) -> Result<Vec<Vec<i64>>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|var| {
            let w: Vec<i64> = var
                .split(':')
                .map(|c| c.trim().parse::<i64>().map_err(|_| invalid(format!("bad weight {:?}", var))))
                .collect::<Result<_, _>>()?;
            if w.len() != factors {
                return Err(invalid(format!("weight {:?} needs {} components", var, factors)));
            }
            Ok(w)
        })
        .collect()
}

/// Splits `a, b` at top-level commas.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// A named representation of the group of `beta`; `None` for `none`.
pub fn parse_construction(s: &str, beta: &Representation) -> Result<Option<Representation>, CliError> {
    let s = s.trim();
    let group = beta.group().clone();
    let (head, args) = match s.find('(') {
        Some(i) if s.ends_with(')') => (s[..i].trim(), Some(&s[i + 1..s.len() - 1])),
        _ => (s, None),
    };
    let rep = match (head, args) {
        ("none", None) => return Ok(None),
        ("trivial", None) => Representation::trivial(group, 1),
        ("trivial", Some(m)) => {
            let m: usize = m.trim().parse().map_err(|_| invalid(format!("bad dimension in {:?}", s)))?;
            if m == 0 {
                return Err(invalid("trivial(m) needs m >= 1"));
            }
            Representation::trivial(group, m)
        }
        ("det", None) => Representation::det(beta)?,
        ("sign", None) => Representation::sign(group)?,
        ("natural", None) => beta.clone(),
        ("regular", None) => Representation::regular(group),
        ("product", Some(inner)) => {
            let parts = split_args(inner);
            if parts.len() != 2 {
                return Err(invalid("product takes two arguments"));
            }
            let a = parse_construction(parts[0], beta)?.ok_or_else(|| invalid("product of none"))?;
            let b = parse_construction(parts[1], beta)?.ok_or_else(|| invalid("product of none"))?;
            Representation::product(&a, &b)?
        }
        _ => return Err(invalid(format!("unknown representation {:?}", s))),
    };
    Ok(Some(rep))
}

pub struct FileSession {
    pub name: String,
    pub beta: Representation,
    pub rho: Option<Representation>,
}

pub fn parse_session_file(text: &str) -> Result<FileSession, CliError> {
    let mut level = None;
    let mut name = None;
    let mut generators = Vec::new();
    let mut rho_images = Vec::new();
    let mut rho = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| invalid(format!("line {}: expected key = value", lineno + 1)))?;
        let value = value.trim().to_string();
        match key.trim() {
            "level" => {
                let n: u32 = value.parse().map_err(|_| invalid(format!("line {}: bad level", lineno + 1)))?;
                if n == 0 {
                    return Err(invalid("level must be positive"));
                }
                level = Some(n);
            }
            "name" => name = Some(value),
            "generator" => generators.push(value),
            "rho" => rho = Some(value),
            "rho_image" => rho_images.push(value),
            other => return Err(invalid(format!("line {}: unknown key {:?}", lineno + 1, other))),
        }
    }
    let level = level.ok_or_else(|| invalid("missing `level = n`"))?;
    if generators.is_empty() {
        return Err(invalid("at least one `generator = ...` line is required"));
    }
    let mats: Vec<CycMatrix> = generators.iter().map(|g| parse_matrix(g, level)).collect::<Result<_, _>>()?;
    let group: Arc<MatrixGroup> = Arc::new(close_group(&mats, DEFAULT_GROUP_CAP)?);
    let beta = Representation::natural(group.clone());
    let rho = match (rho, rho_images.is_empty()) {
        (Some(_), false) => return Err(invalid("give either `rho` or `rho_image` lines, not both")),
        (Some(c), true) => parse_construction(&c, &beta)?,
        (None, false) => {
            if rho_images.len() != mats.len() {
                return Err(invalid(format!("{} rho_image lines for {} generators", rho_images.len(), mats.len())));
            }
            let imgs: Vec<CycMatrix> = rho_images.iter().map(|g| parse_matrix(g, level)).collect::<Result<_, _>>()?;
            Some(Representation::from_generator_images(group, &imgs)?)
        }
        (None, true) => None,
    };
    Ok(FileSession {
        name: name.unwrap_or_else(|| "file".into()),
        beta,
        rho,
    })
}
