//! Line-based text formats for algebras and simplicial complexes.
//!
//! ```text
//! # k[X^5, XY^4, Y^5]
//! ambient 2
//! generators
//! 5 0
//! 1 4
//! 0 5
//! end
//! ```
//!
//! Complexes use `vertices <n>`, `facets`, one row of 1-based labels per
//! facet, then `end`. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialAlgebra};
use crate::stanley_reisner::SimplicialComplex;

/// A parsed algebra file before minimization; `rees` and `build` need the
/// rows exactly as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub ambient_dim: usize,
    pub rows: Vec<ExponentVector>,
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<MonomialAlgebra> {
        MonomialAlgebra::from_generators(self.ambient_dim, self.rows.iter().cloned())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub n_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::new(self.n_vertices, &self.facets)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Parses `<keyword> <n>`, `<section>`, rows..., `end`.
fn parse_blocks<T>(
    text: &str,
    keyword: &str,
    section: &str,
    mut row: impl FnMut(usize, &[&str], usize) -> Result<T>,
) -> Result<(usize, Vec<T>)> {
    let mut lines = content_lines(text);
    let last_line = text.lines().count().max(1);

    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, format!("expected `{keyword} <n>`")))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        [k, n] if k == keyword => n
            .parse::<usize>()
            .map_err(|_| parse_err(ln, format!("`{n}` is not a nonnegative integer")))?,
        _ => return Err(parse_err(ln, format!("expected `{keyword} <n>`, found `{header}`"))),
    };
    match lines.next() {
        Some((_, l)) if l == section => {}
        Some((ln, l)) => return Err(parse_err(ln, format!("expected `{section}`, found `{l}`"))),
        None => return Err(parse_err(last_line, format!("expected `{section}`"))),
    }
    let mut rows = Vec::new();
    for (ln, l) in lines.by_ref() {
        if l == "end" {
            if let Some((ln, l)) = lines.next() {
                return Err(parse_err(ln, format!("unexpected `{l}` after `end`")));
            }
            return Ok((n, rows));
        }
        let tokens: Vec<&str> = l.split_whitespace().collect();
        rows.push(row(ln, &tokens, n)?);
    }
    Err(parse_err(last_line, "missing `end`"))
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let (ambient_dim, rows) = parse_blocks(text, "ambient", "generators", |ln, tokens, d| {
        if tokens.len() != d {
            return Err(parse_err(ln, format!("expected {d} entries, found {}", tokens.len())));
        }
        let coords = tokens
            .iter()
            .map(|t| {
                t.parse::<u32>().map_err(|_| {
                    let what = if t.starts_with('-') { "negative entry" } else { "not a nonnegative integer" };
                    parse_err(ln, format!("`{t}`: {what}"))
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(ExponentVector::new(coords))
    })?;
    if ambient_dim == 0 {
        return Err(parse_err(1, "ambient dimension must be positive"));
    }
    Ok(AlgebraFile { ambient_dim, rows })
}

pub fn parse_algebra(text: &str) -> Result<MonomialAlgebra> {
    parse_algebra_file(text)?.to_algebra()
}

pub fn parse_complex_file(text: &str) -> Result<ComplexFile> {
    let (n_vertices, facets) = parse_blocks(text, "vertices", "facets", |ln, tokens, _| {
        tokens
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("`{t}` is not a vertex label"))))
            .collect::<Result<Vec<usize>>>()
    })?;
    Ok(ComplexFile { n_vertices, facets })
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    parse_complex_file(text)?.to_complex()
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_vectors(ambient_dim: usize, rows: &[ExponentVector]) -> String {
    let mut out = format!("ambient {ambient_dim}\ngenerators\n");
    for r in rows {
        writeln!(out, "{}", join(r.coords())).unwrap();
    }
    out.push_str("end\n");
    out
}

pub fn write_algebra(r: &MonomialAlgebra) -> String {
    write_vectors(r.dim(), r.generators())
}

pub fn write_complex(delta: &SimplicialComplex) -> String {
    let mut out = format!("vertices {}\nfacets\n", delta.n_vertices());
    for f in delta.facets() {
        writeln!(out, "{}", join(&f)).unwrap();
    }
    out.push_str("end\n");
    out
}
