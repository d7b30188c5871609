//! Code files.
//!
//! Text form:
//!
//! ```text
//! # comment
//! 2 6 1,3,5
//! 1 0 0 0 0 0
//! 0 1 0 0 0 0
//! ...
//!
//! 0 0 0 1 0 0
//! ...
//! ```
//!
//! The header is `q n type` where `type` is a comma list of dimensions or
//! `full`. Each flag is a block of generator rows; blocks are separated by
//! blank lines. Entries may be any integers and are reduced mod `q`.
//!
//! JSON form: `{"q": 2, "n": 6, "type": [1,3,5] | "full", "flags": [[[...], ...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::{flag_from_matrix, Flag, FlagCode, TypeVector};
use crate::gfq::{MatGFq, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TypeSpec {
    Named(String),
    Dims(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u32,
    pub n: usize,
    #[serde(rename = "type")]
    pub ty: TypeSpec,
    pub flags: Vec<Vec<Vec<i64>>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_type(token: &str, line: usize) -> Result<TypeSpec> {
    if token.eq_ignore_ascii_case("full") {
        return Ok(TypeSpec::Named("full".into()));
    }
    let inner = token.trim_start_matches('(').trim_end_matches(')');
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad dimension {t:?} in type {token:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(TypeSpec::Dims)
}

impl CodeFile {
    pub fn type_vector(&self) -> Result<TypeVector> {
        match &self.ty {
            TypeSpec::Named(s) if s.eq_ignore_ascii_case("full") => TypeVector::full(self.n),
            TypeSpec::Named(s) => Err(parse_err(0, format!("unknown type {s:?}"))),
            TypeSpec::Dims(d) => TypeVector::new(self.n, d.clone()),
        }
    }

    /// Builds the flag code; flag indices in errors are 1-based.
    pub fn to_code(&self) -> Result<FlagCode> {
        let field = PrimeField::new(self.q)?;
        let ty = self.type_vector()?;
        let flags = self
            .flags
            .iter()
            .enumerate()
            .map(|(idx, rows)| {
                MatGFq::from_integer_rows(field, self.n, rows)
                    .and_then(|m| flag_from_matrix(self.q, &ty, &m))
                    .map_err(|e| Error::InvalidFlag {
                        flag: idx + 1,
                        source: Box::new(e),
                    })
            })
            .collect::<Result<Vec<Flag>>>()?;
        FlagCode::new(flags)
    }

    pub fn from_code(c: &FlagCode) -> Self {
        let ty = if c.is_full() {
            TypeSpec::Named("full".into())
        } else {
            TypeSpec::Dims(c.type_vector().dims().to_vec())
        };
        CodeFile {
            q: c.q(),
            n: c.n(),
            ty,
            flags: c.flags().iter().map(flag_rows).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let ty = match &self.ty {
            TypeSpec::Named(s) => s.clone(),
            TypeSpec::Dims(d) => d.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
        };
        let mut out = format!("{} {} {}\n", self.q, self.n, ty);
        for (k, block) in self.flags.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            for row in block {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code files serialize")
    }
}

fn flag_rows(f: &Flag) -> Vec<Vec<i64>> {
    let g = f.generator();
    let used = if f.is_full() {
        g.rows()
    } else {
        *f.type_vector().dims().last().expect("non-empty type")
    };
    g.top_rows(used)
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

/// Parses the text form. Lines starting with `#` are comments.
pub fn parse_text(input: &str) -> Result<CodeFile> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .skip_while(|(_, l)| l.is_empty())
        .peekable();
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_err(hline, "header must be \"q n type\""));
    }
    let q = fields[0]
        .parse::<u32>()
        .map_err(|_| parse_err(hline, format!("bad field size {:?}", fields[0])))?;
    let n = fields[1]
        .parse::<usize>()
        .map_err(|_| parse_err(hline, format!("bad ambient dimension {:?}", fields[1])))?;
    let ty = parse_type(fields[2], hline)?;

    let mut flags: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut current: Vec<Vec<i64>> = Vec::new();
    for (lno, line) in lines {
        if line.is_empty() {
            if !current.is_empty() {
                flags.push(std::mem::take(&mut current));
            }
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| parse_err(lno, format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(
                lno,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        current.push(row);
    }
    if !current.is_empty() {
        flags.push(current);
    }
    if flags.is_empty() {
        return Err(parse_err(hline, "no flags"));
    }
    Ok(CodeFile { q, n, ty, flags })
}

pub fn parse_json(input: &str) -> Result<CodeFile> {
    serde_json::from_str(input).map_err(|e| parse_err(e.line(), e.to_string()))
}

/// JSON if the first non-blank character is `{`, text otherwise.
pub fn parse_code_file(input: &str) -> Result<CodeFile> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_code(input: &str) -> Result<FlagCode> {
    parse_code_file(input)?.to_code()
}

pub fn write_text(c: &FlagCode) -> String {
    CodeFile::from_code(c).to_text()
}

pub fn write_json(c: &FlagCode) -> String {
    CodeFile::from_code(c).to_json()
}
