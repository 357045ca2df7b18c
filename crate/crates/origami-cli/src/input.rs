//! Loading surfaces and parsing flag values.

use origami::catalog::{self, appendix_b, eierlegende_wollmilchsau, ornithorynque};
use origami::{Origami, Perm, Sl2z};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Lib(#[from] origami::Error),
    #[error("verification failed: {0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Lib(origami::Error::NotPermutation(_) | origami::Error::NotTransitive)
            | CliError::Lib(origami::Error::UnknownName(_) | origami::Error::EvenQ(_))
            | CliError::Lib(origami::Error::NotSl2z | origami::Error::BadDirection) => 2,
            CliError::Lib(_) | CliError::Failed(_) => 1,
        }
    }
}

/// Which catalog surface a loaded origami is, label for label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Ew,
    Orn(usize),
    Decagon,
    Other,
}

pub struct Surface {
    pub origami: Origami,
    pub kind: Kind,
    pub label: String,
}

fn same_labels(a: &Origami, b: &Origami) -> bool {
    a.n == b.n && a.r == b.r && a.u == b.u
}

pub fn identify(o: &Origami) -> Kind {
    if same_labels(o, &eierlegende_wollmilchsau()) {
        return Kind::Ew;
    }
    if same_labels(o, &appendix_b()) {
        return Kind::Decagon;
    }
    if o.n.is_multiple_of(4) && (o.n / 4) % 2 == 1 && o.n >= 12 {
        let qn = o.n / 4;
        if ornithorynque(qn as i64).is_ok_and(|m| same_labels(o, &m)) {
            return Kind::Orn(qn);
        }
    }
    Kind::Other
}

pub fn parse_origami_json(text: &str) -> Result<Origami, CliError> {
    let raw: Origami = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(raw.validated()?)
}

pub fn load(path: Option<&Path>, name: Option<&str>, q: Option<i64>) -> Result<Surface, CliError> {
    let origami = match (path, name) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --origami or --name, not both".into())),
        (None, None) => return Err(CliError::Usage("one of --origami PATH or --name NAME is required".into())),
        (Some(p), None) => {
            let text =
                std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
            parse_origami_json(&text)?
        }
        (None, Some(n)) => catalog::catalog(n, q)?.origami,
    };
    let kind = identify(&origami);
    let label = match (kind, name, path) {
        (Kind::Orn(qn), _, _) => format!("ornithorynque(q={qn})"),
        (_, Some(n), _) => n.to_string(),
        (_, None, Some(p)) => p.display().to_string(),
        _ => "origami".into(),
    };
    Ok(Surface { origami, kind, label })
}

pub fn parse_matrix(s: &str) -> Result<Sl2z, CliError> {
    let m: [[i64; 2]; 2] = serde_json::from_str(s).map_err(|e| CliError::Parse(format!("matrix `{s}`: {e}")))?;
    Ok(Sl2z::new(m[0][0], m[0][1], m[1][0], m[1][1])?)
}

pub fn parse_dir(s: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::Parse(format!("direction `{s}` is not of the form p,q"));
    if parts.len() != 2 {
        return Err(bad());
    }
    Ok((parts[0].parse().map_err(|_| bad())?, parts[1].parse().map_err(|_| bad())?))
}

pub fn parse_perm(s: &str) -> Result<Perm, CliError> {
    let v: Vec<usize> = serde_json::from_str(s).map_err(|e| CliError::Parse(format!("permutation `{s}`: {e}")))?;
    Ok(Perm::new(v)?)
}

/// Named probe directions for `supplement`.
pub fn parse_probe(s: &str) -> Result<(i64, i64), CliError> {
    match s.trim() {
        "vert" => Ok((0, 1)),
        "hor" => Ok((1, 0)),
        "diag" => Ok((1, 1)),
        other => parse_dir(&other.replace(':', ",")),
    }
}
