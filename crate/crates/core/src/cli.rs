//! Command dispatch for the `leibniz` binary. Each command produces a
//! [`Report`]; the exit code is 0 exactly when the report passed.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::{check_left_leibniz, BilinearTensor, LeibnizAlgebra, LinearMapMatrix, StructureTensor};
use crate::biderivations::{
    biderivation_space, biderivation_space_stacked, commuting_map_space, factor_left_modulo,
    factor_right_modulo, is_biderivation, left_biderivation_space, loday_biderivation_space,
    right_biderivation_space, skew_commuting_map_space, symmetric_biderivations, FactorizationResult,
    Side,
};
use crate::catalog;
use crate::derivations::{
    derivation_space, inner_derivation_space, is_complete_def1, is_complete_def2, CompletenessReport,
};
use crate::error::Error;
use crate::format::{self, FormatError};
use crate::linalg::{Rational, Subspace};
use crate::report::{Report, Section};
use crate::verify;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    File(PathBuf),
    Catalog(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorSource {
    File(PathBuf),
    /// `bracket`, `zero`, `sec4_one_f` or `sec4_two_f`.
    Named(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulo {
    Zero,
    Leib,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sides {
    Left,
    Right,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate(AlgebraSource),
    Invariants(AlgebraSource),
    Derivations(AlgebraSource),
    Biderivations(AlgebraSource),
    Completeness(AlgebraSource),
    Factor {
        algebra: AlgebraSource,
        tensor: TensorSource,
        modulo: Modulo,
        sides: Sides,
    },
    VerifyPaper,
    /// Emits a catalog algebra as a file; lists the catalog when `None`.
    Catalog(Option<String>),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Exit code for errors that prevent a report from being produced.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn load_structure(src: &AlgebraSource) -> Result<StructureTensor, CliError> {
    match src {
        AlgebraSource::File(p) => format::parse_structure(&read(p)?).map_err(|source| CliError::Format {
            path: p.clone(),
            source,
        }),
        AlgebraSource::Catalog(name) => Ok(catalog::by_name(name)?.into_tensor()),
    }
}

pub fn load_algebra(src: &AlgebraSource) -> Result<LeibnizAlgebra, CliError> {
    Ok(LeibnizAlgebra::new(load_structure(src)?)?)
}

fn load_tensor(src: &TensorSource, l: &LeibnizAlgebra) -> Result<BilinearTensor, CliError> {
    let b = match src {
        TensorSource::File(p) => format::parse_bilinear(&read(p)?).map_err(|source| CliError::Format {
            path: p.clone(),
            source,
        })?,
        TensorSource::Named(name) => match name.as_str() {
            "bracket" => l.tensor().as_bilinear(),
            "zero" => BilinearTensor::zeros(l.dim()),
            "sec4_one_f" => catalog::sec4_one_f(),
            "sec4_two_f" => catalog::sec4_two_f(),
            other => return Err(CliError::Usage(format!("unknown tensor {other:?}"))),
        },
    };
    if b.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            context: "bilinear map over algebra",
            expected: l.dim(),
            found: b.dim(),
        }
        .into());
    }
    Ok(b)
}

/// `2*x - y + 1/2*v`, or `0`.
pub fn fmt_vector(t: &StructureTensor, v: &[Rational]) -> String {
    let mut s = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            s.push_str(&format!("{a}*"));
        }
        s.push_str(&t.label(k));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Nonzero images, e.g. `x -> y, v -> 2*v`.
pub fn fmt_map(t: &StructureTensor, m: &LinearMapMatrix) -> String {
    let parts: Vec<String> = (0..m.dim())
        .filter_map(|j| {
            let img = m.image(j);
            img.iter()
                .any(|c| !c.is_zero())
                .then(|| format!("{} -> {}", t.label(j), fmt_vector(t, &img)))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

fn fmt_bilinear(t: &StructureTensor, b: &BilinearTensor) -> Vec<String> {
    let n = b.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = b.value(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                out.push(format!("B({},{}) = {}", t.label(i), t.label(j), fmt_vector(t, &v)));
            }
        }
    }
    out
}

fn basis_notes(t: &StructureTensor, s: &Subspace) -> Vec<String> {
    s.vectors().map(|v| format!("basis: {}", fmt_vector(t, v))).collect()
}

fn validate(src: &AlgebraSource) -> Result<Report, CliError> {
    let t = load_structure(src)?;
    let mut r = Report::new("validate");
    let mut s = Section::new("left Leibniz identity");
    s.value("dim", t.dim());
    let violations = check_left_leibniz(&t);
    let notes = violations
        .iter()
        .map(|v| {
            format!(
                "[{a},[{b},{c}]] - [{b},[{a},{c}]] - [[{a},{b}],{c}] = {}",
                fmt_vector(&t, &v.defect),
                a = t.label(v.i),
                b = t.label(v.j),
                c = t.label(v.k)
            )
        })
        .collect::<Vec<_>>();
    s.check("violations", violations.is_empty(), violations.len()).notes(notes);
    r.push(s);
    Ok(r.finish())
}

fn invariants(src: &AlgebraSource) -> Result<Report, CliError> {
    let l = load_algebra(src)?;
    let t = l.tensor();
    let mut r = Report::new("invariants");
    let mut s = Section::new("invariants");
    s.value("dim", l.dim());
    s.value("is_lie", l.is_lie());
    let leib = l.leibniz_kernel();
    s.value("Leib(L)", leib.dim()).notes(basis_notes(t, &leib));
    let zl = l.left_center();
    s.value("Z^l(L)", zl.dim()).notes(basis_notes(t, &zl));
    let z = l.center();
    s.value("Z(L)", z.dim()).notes(basis_notes(t, &z));
    s.check("Leib(L) is an ideal", l.is_ideal(&leib)?, true);
    s.check("Z^l(L) is an ideal", l.is_ideal(&zl)?, true);
    r.push(s);

    let q = l.quotient(&leib)?;
    let mut s = Section::new("L/Leib(L)");
    s.value("dim", q.tensor.dim());
    s.value(
        "complement",
        q.complement.iter().map(|&i| t.label(i)).collect::<Vec<_>>(),
    );
    let brackets = q
        .tensor
        .nonzero_brackets()
        .into_iter()
        .map(|(i, j, terms)| {
            let mut v = vec![Rational::zero(); q.tensor.dim()];
            for (k, c) in terms {
                v[k] = c;
            }
            format!("[{},{}] = {}", q.tensor.label(i), q.tensor.label(j), fmt_vector(&q.tensor, &v))
        })
        .collect::<Vec<_>>();
    let is_lie = LeibnizAlgebra::new(q.tensor.clone()).map(|a| a.is_lie()).unwrap_or(false);
    s.check("is_lie", is_lie, is_lie).notes(brackets);
    r.push(s);
    Ok(r.finish())
}

fn derivations(src: &AlgebraSource) -> Result<Report, CliError> {
    let l = load_algebra(src)?;
    let t = l.tensor();
    let n = l.dim();
    let der = derivation_space(&l);
    let inner = inner_derivation_space(&l);
    let mut r = Report::new("derivations");
    let mut s = Section::new("derivations");
    s.value("dim Der(L)", der.dim()).notes(
        der.vectors()
            .map(|v| fmt_map(t, &LinearMapMatrix::from_flat(n, v).expect("dims"))),
    );
    s.value("dim Inner(L)", inner.dim());
    s.check("Inner(L) ⊆ Der(L)", inner.is_subspace_of(&der)?, true);
    r.push(s);
    Ok(r.finish())
}

fn biderivations(src: &AlgebraSource) -> Result<Report, CliError> {
    let l = load_algebra(src)?;
    let t = l.tensor();
    let left = left_biderivation_space(&l);
    let right = right_biderivation_space(&l);
    let full = biderivation_space(&l);
    let stacked = biderivation_space_stacked(&l);
    let mut r = Report::new("biderivations");
    let mut s = Section::new("biderivation spaces");
    s.value("left", left.dim());
    s.value("right", right.dim());
    s.value("biderivations", full.dim());
    s.check("left ∩ right = stacked system", full == stacked, stacked.dim());
    s.value("loday", loday_biderivation_space(&l).dim());
    s.value("symmetric", symmetric_biderivations(&l, true).dim());
    s.value("skew-symmetric", symmetric_biderivations(&l, false).dim());
    let notes: Vec<String> = crate::biderivations::basis_tensors(&full, l.dim())
        .iter()
        .enumerate()
        .flat_map(|(i, b)| {
            fmt_bilinear(t, b)
                .into_iter()
                .map(move |line| format!("#{i}: {line}"))
        })
        .collect();
    s.value("basis", full.dim()).notes(notes);
    r.push(s);
    let mut s = Section::new("maps");
    s.value("commuting", commuting_map_space(&l).dim());
    s.value("skew-commuting", skew_commuting_map_space(&l).dim());
    r.push(s);
    Ok(r.finish())
}

fn completeness_section(t: &StructureTensor, title: &str, c: &CompletenessReport) -> Section {
    let mut s = Section::new(title);
    let item = s.value("verdict", c.verdict);
    if let Some(z) = &c.center_obstruction {
        item.notes(z.vectors().map(|v| format!("central obstruction: {}", fmt_vector(t, v))));
    }
    if let Some(d) = &c.derivation_obstruction {
        item.note(format!("derivation obstruction: {}", fmt_map(t, d)));
    }
    for w in &c.witnesses {
        s.value("witness", fmt_vector(t, &w.x))
            .note(format!("for D: {}", fmt_map(t, &w.derivation)));
    }
    s
}

fn completeness(src: &AlgebraSource) -> Result<Report, CliError> {
    let l = load_algebra(src)?;
    let mut r = Report::new("completeness");
    r.push(completeness_section(
        l.tensor(),
        "first sense: Z(L/Leib(L)) = 0, derivations inner modulo Leib(L)",
        &is_complete_def1(&l),
    ));
    r.push(completeness_section(
        l.tensor(),
        "second sense: Z(L) = 0, all derivations inner",
        &is_complete_def2(&l),
    ));
    Ok(r.finish())
}

fn factor_section(t: &StructureTensor, res: &FactorizationResult, modulo: Modulo) -> Section {
    let (title, map) = match res.side {
        Side::Left => ("left: B(x,y) = [phi(x),y] + p(x,y)", "phi"),
        Side::Right => ("right: B(x,y) = [psi(y),x] + q(x,y)", "psi"),
    };
    let mut s = Section::new(title);
    let verdict = if res.feasible { "feasible" } else { "infeasible" };
    s.check("factorization", res.feasible, verdict).notes(res.explain(t));
    if let Some(m) = &res.map {
        s.value(map, fmt_map(t, m));
    }
    if let Some(p) = &res.residual {
        let name = if res.side == Side::Left { "p" } else { "q" };
        s.value(format!("residual {name}"), if p.is_zero() { "0".to_string() } else { "nonzero".into() })
            .notes(fmt_bilinear(t, p));
    }
    if let (Some(ok), Modulo::Leib) = (res.residual_biderivation, modulo) {
        let (name, kind) = match res.side {
            Side::Left => ("p", "left"),
            Side::Right => ("q", "right"),
        };
        s.check(format!("{name} is a {kind} biderivation"), ok, ok);
    }
    s
}

fn factor(algebra: &AlgebraSource, tensor: &TensorSource, modulo: Modulo, sides: Sides) -> Result<Report, CliError> {
    let l = load_algebra(algebra)?;
    let t = l.tensor();
    let b = load_tensor(tensor, &l)?;
    let s_space = match modulo {
        Modulo::Zero => Subspace::zero(l.dim()),
        Modulo::Leib => l.leibniz_kernel(),
    };
    let mut r = Report::new("factor");
    let mut s = Section::new("input");
    s.value("modulo", if modulo == Modulo::Zero { "0" } else { "Leib(L)" });
    s.value("biderivation", is_biderivation(&l, &b)?).notes(fmt_bilinear(t, &b));
    r.push(s);
    if sides != Sides::Right {
        r.push(factor_section(t, &factor_left_modulo(&l, &b, &s_space)?, modulo));
    }
    if sides != Sides::Left {
        r.push(factor_section(t, &factor_right_modulo(&l, &b, &s_space)?, modulo));
    }
    Ok(r.finish())
}

fn verify_paper() -> Report {
    let mut r = Report::new("verify-paper");
    let mut s = Section::new("reproduction checks");
    for c in verify::verify_all() {
        s.check(format!("{} {}", c.id, c.title), c.passed, if c.passed { "PASS" } else { "FAIL" })
            .notes(c.details);
    }
    r.push(s);
    r.finish()
}

fn emit_catalog(name: Option<&str>) -> Result<Report, CliError> {
    let mut r = Report::new("catalog");
    match name {
        None => {
            let mut s = Section::new("catalog");
            s.value("algebras", catalog::NAMES);
            r.raw = Some(catalog::NAMES.join("\n") + "\n");
            r.push(s);
        }
        Some(name) => {
            let l = catalog::by_name(name)?;
            let mut file = format::algebra_file(l.tensor());
            file.name = Some(name.to_string());
            let text = format::emit_file(&file);
            let mut s = Section::new("catalog");
            s.value("name", name);
            s.value("file", &text);
            r.push(s);
            r.raw = Some(text);
        }
    }
    Ok(r.finish())
}

pub fn run(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Validate(src) => validate(src),
        Command::Invariants(src) => invariants(src),
        Command::Derivations(src) => derivations(src),
        Command::Biderivations(src) => biderivations(src),
        Command::Completeness(src) => completeness(src),
        Command::Factor {
            algebra,
            tensor,
            modulo,
            sides,
        } => factor(algebra, tensor, *modulo, *sides),
        Command::VerifyPaper => Ok(verify_paper()),
        Command::Catalog(name) => emit_catalog(name.as_deref()),
    }
}
