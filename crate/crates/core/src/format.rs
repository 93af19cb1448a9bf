//! TOML files for algebras and bilinear maps.
//!
//! ```toml
//! dim = 3
//! labels = ["x", "y", "v"]     # optional
//! orientation = "left"         # optional, "left" or "right"
//!
//! [[brackets]]                 # [e_i, e_j] = sum of coeff * e_k
//! i = 1
//! j = 2
//! terms = [{ k = 2, coeff = "1" }]
//! ```
//!
//! Indices are 1-based. Coefficients are strings `"p"` or `"p/q"`. Unlisted
//! brackets are zero. A right-oriented table is converted to the opposite
//! (left) product when loaded. Bilinear maps use the same layout with
//! `[[entries]]` in place of `[[brackets]]` and no orientation.
//!
//! Fixture files may add a `name`, a `[params]` table and `[[expected]]`
//! facts; plain algebra parsing ignores them.

use std::collections::BTreeSet;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use toml::Spanned;

use crate::algebra::{check_left_leibniz, BilinearTensor, LeibnizAlgebra, StructureTensor};
use crate::linalg::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatErrorKind {
    Syntax,
    IndexOutOfRange,
    DuplicateEntry,
    BadCoefficient,
    BadLabels,
    NotLeibniz,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub kind: FormatErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermEntry {
    pub k: Spanned<i64>,
    pub coeff: Spanned<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableEntry {
    pub i: Spanned<i64>,
    pub j: Spanned<i64>,
    #[serde(default)]
    pub terms: Vec<TermEntry>,
}

/// A pinned fact about a fixture, with where the expected value comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedFact {
    pub key: String,
    pub value: String,
    pub source: Source,
}

/// `reference`: stated in the literature the fixture reproduces.
/// `trivial`: immediate from definitions. `computed`: produced by an
/// independent computation and frozen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Reference,
    Trivial,
    Computed,
}

/// Raw deserialized algebra file. Use [`parse_algebra`] for a validated
/// algebra.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: Spanned<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Spanned<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Orientation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<toml::Table>,
    #[serde(default)]
    pub brackets: Vec<TableEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<ExpectedFact>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BilinearFile {
    dim: Spanned<i64>,
    #[serde(default)]
    entries: Vec<TableEntry>,
}

struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn position(&self, offset: usize) -> (usize, usize) {
        let before = &self.text[..offset.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.len(), |p| before.len() - p - 1) + 1;
        (line, column)
    }

    fn error(&self, kind: FormatErrorKind, span: Range<usize>, message: String) -> FormatError {
        let (line, column) = self.position(span.start);
        FormatError {
            kind,
            line,
            column,
            message,
        }
    }
}

fn syntax_error(text: &str, e: toml::de::Error) -> FormatError {
    let loc = Locator { text };
    let span = e.span().unwrap_or(0..0);
    loc.error(FormatErrorKind::Syntax, span, e.message().to_string())
}

fn dimension(loc: &Locator, dim: &Spanned<i64>) -> Result<usize, FormatError> {
    usize::try_from(*dim.get_ref()).map_err(|_| {
        loc.error(
            FormatErrorKind::IndexOutOfRange,
            dim.span(),
            format!("dimension must be nonnegative, got {}", dim.get_ref()),
        )
    })
}

fn index(loc: &Locator, v: &Spanned<i64>, n: usize, what: &str) -> Result<usize, FormatError> {
    let raw = *v.get_ref();
    if raw < 1 || raw as u64 > n as u64 {
        return Err(loc.error(
            FormatErrorKind::IndexOutOfRange,
            v.span(),
            format!("{what} index {raw} outside 1..={n}"),
        ));
    }
    Ok(raw as usize - 1)
}

type Entry = (usize, usize, Vec<(usize, Rational)>);

fn read_entries(loc: &Locator, n: usize, entries: &[TableEntry]) -> Result<Vec<Entry>, FormatError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        let i = index(loc, &e.i, n, "i")?;
        let j = index(loc, &e.j, n, "j")?;
        if !seen.insert((i, j)) {
            return Err(loc.error(
                FormatErrorKind::DuplicateEntry,
                e.i.span(),
                format!("duplicate entry for ({}, {})", i + 1, j + 1),
            ));
        }
        let mut terms: Vec<(usize, Rational)> = Vec::with_capacity(e.terms.len());
        for t in &e.terms {
            let k = index(loc, &t.k, n, "k")?;
            let c: Rational = t.coeff.get_ref().parse().map_err(|err| {
                loc.error(FormatErrorKind::BadCoefficient, t.coeff.span(), format!("{err}"))
            })?;
            if terms.iter().any(|(k2, _)| *k2 == k) {
                return Err(loc.error(
                    FormatErrorKind::DuplicateEntry,
                    t.k.span(),
                    format!("term e{} listed twice in ({}, {})", k + 1, i + 1, j + 1),
                ));
            }
            terms.push((k, c));
        }
        out.push((i, j, terms));
    }
    Ok(out)
}

/// Reads the raw file without validating indices or the Leibniz identity.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FormatError> {
    toml::from_str(text).map_err(|e| syntax_error(text, e))
}

/// Builds the table described by `file`, in the file's own orientation.
fn file_tensor(text: &str, file: &AlgebraFile) -> Result<StructureTensor, FormatError> {
    let loc = Locator { text };
    let n = dimension(&loc, &file.dim)?;
    let entries = read_entries(&loc, n, &file.brackets)?;
    let mut t = StructureTensor::from_brackets(n, entries);
    if let Some(labels) = &file.labels {
        if labels.get_ref().len() != n {
            return Err(loc.error(
                FormatErrorKind::BadLabels,
                labels.span(),
                format!("{} labels for dimension {n}", labels.get_ref().len()),
            ));
        }
        t = t.with_labels(labels.get_ref().clone());
    }
    Ok(t)
}

/// Parses an algebra file into a left-normalized structure tensor. The
/// Leibniz identity is not checked; see [`parse_algebra`].
pub fn parse_structure(text: &str) -> Result<StructureTensor, FormatError> {
    let file = parse_algebra_file(text)?;
    let t = file_tensor(text, &file)?;
    Ok(match file.orientation.unwrap_or_default() {
        Orientation::Left => t,
        Orientation::Right => t.opposite(),
    })
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<LeibnizAlgebra, FormatError> {
    let t = parse_structure(text)?;
    let violations = check_left_leibniz(&t);
    if let Some(v) = violations.first() {
        return Err(FormatError {
            kind: FormatErrorKind::NotLeibniz,
            line: 1,
            column: 1,
            message: format!(
                "left Leibniz identity fails on {} triples, first at (e{}, e{}, e{})",
                violations.len(),
                v.i + 1,
                v.j + 1,
                v.k + 1
            ),
        });
    }
    Ok(LeibnizAlgebra::new(t).expect("checked above"))
}

pub fn parse_bilinear(text: &str) -> Result<BilinearTensor, FormatError> {
    let file: BilinearFile = toml::from_str(text).map_err(|e| syntax_error(text, e))?;
    let loc = Locator { text };
    let n = dimension(&loc, &file.dim)?;
    Ok(BilinearTensor::from_values(n, read_entries(&loc, n, &file.entries)?))
}

fn entries(values: Vec<Entry>) -> Vec<TableEntry> {
    values
        .into_iter()
        .map(|(i, j, terms)| TableEntry {
            i: Spanned::new(0..0, i as i64 + 1),
            j: Spanned::new(0..0, j as i64 + 1),
            terms: terms
                .into_iter()
                .map(|(k, c)| TermEntry {
                    k: Spanned::new(0..0, k as i64 + 1),
                    coeff: Spanned::new(0..0, c.to_string()),
                })
                .collect(),
        })
        .collect()
}

/// The file form of a (left) structure tensor.
pub fn algebra_file(t: &StructureTensor) -> AlgebraFile {
    AlgebraFile {
        name: None,
        dim: Spanned::new(0..0, t.dim() as i64),
        labels: t.labels().map(|l| Spanned::new(0..0, l.to_vec())),
        orientation: Some(Orientation::Left),
        params: None,
        brackets: entries(t.nonzero_brackets()),
        expected: Vec::new(),
    }
}

/// Table entries as `[[key]]` blocks with inline term arrays.
fn emit_entries(out: &mut String, key: &str, entries: &[TableEntry]) {
    for e in entries {
        let terms: Vec<String> = e
            .terms
            .iter()
            .map(|t| format!("{{ k = {}, coeff = \"{}\" }}", t.k.get_ref(), t.coeff.get_ref()))
            .collect();
        out.push_str(&format!(
            "\n[[{key}]]\ni = {}\nj = {}\nterms = [{}]\n",
            e.i.get_ref(),
            e.j.get_ref(),
            terms.join(", ")
        ));
    }
}

pub fn emit_file(file: &AlgebraFile) -> String {
    #[derive(Serialize)]
    struct Expected<'a> {
        expected: &'a [ExpectedFact],
    }
    let header = AlgebraFile {
        brackets: Vec::new(),
        expected: Vec::new(),
        ..file.clone()
    };
    let mut out = toml::to_string(&header).expect("algebra files serialize");
    // the serializer writes an empty `brackets = []`
    out = out.replace("brackets = []\n", "");
    emit_entries(&mut out, "brackets", &file.brackets);
    if !file.expected.is_empty() {
        out.push('\n');
        out.push_str(&toml::to_string(&Expected { expected: &file.expected }).expect("facts serialize"));
    }
    out
}

pub fn emit_algebra(t: &StructureTensor) -> String {
    emit_file(&algebra_file(t))
}

pub fn emit_bilinear(b: &BilinearTensor) -> String {
    let mut out = format!("dim = {}\n", b.dim());
    emit_entries(&mut out, "entries", &entries(b.nonzero_values()));
    out
}
