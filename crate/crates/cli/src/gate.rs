//! Named two-qubit gates.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use kaksynth::matrix_io::parse_unitary4;
use kaksynth::{gates, Unitary4};

use crate::angle::parse_angle;
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum NamedGate {
    Cnot,
    Cz,
    Swap,
    SqrtSwap,
    B,
    Cphase(f64),
    Zz(f64),
    Matrix(PathBuf),
}

fn argument<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    let head = text.get(..name.len())?;
    if !head.eq_ignore_ascii_case(name) {
        return None;
    }
    text[name.len()..]
        .trim()
        .strip_prefix('(')?
        .strip_suffix(')')
        .map(str::trim)
}

impl FromStr for NamedGate {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if let Some(arg) = argument(s, "CPHASE") {
            return Ok(NamedGate::Cphase(parse_angle(arg)?));
        }
        if let Some(arg) = argument(s, "ZZ") {
            return Ok(NamedGate::Zz(parse_angle(arg)?));
        }
        if let Some(arg) = argument(s, "MATRIX") {
            if arg.is_empty() {
                return Err(CliError::Parse("MATRIX() needs a path".into()));
            }
            return Ok(NamedGate::Matrix(PathBuf::from(arg)));
        }
        match s.to_ascii_uppercase().as_str() {
            "CNOT" => Ok(NamedGate::Cnot),
            "CZ" => Ok(NamedGate::Cz),
            "SWAP" => Ok(NamedGate::Swap),
            "SQRT_SWAP" => Ok(NamedGate::SqrtSwap),
            "B" => Ok(NamedGate::B),
            _ => Err(CliError::Parse(format!("unknown gate `{s}`"))),
        }
    }
}

impl fmt::Display for NamedGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGate::Cnot => f.write_str("CNOT"),
            NamedGate::Cz => f.write_str("CZ"),
            NamedGate::Swap => f.write_str("SWAP"),
            NamedGate::SqrtSwap => f.write_str("SQRT_SWAP"),
            NamedGate::B => f.write_str("B"),
            NamedGate::Cphase(p) => write!(f, "CPHASE({p:?})"),
            NamedGate::Zz(g) => write!(f, "ZZ({g:?})"),
            NamedGate::Matrix(p) => write!(f, "MATRIX({})", p.display()),
        }
    }
}

impl NamedGate {
    pub fn resolve(&self, unitarity_tol: f64) -> Result<Unitary4, CliError> {
        Ok(match self {
            NamedGate::Cnot => gates::cnot(),
            NamedGate::Cz => gates::cz(),
            NamedGate::Swap => gates::swap(),
            NamedGate::SqrtSwap => gates::sqrt_swap(),
            NamedGate::B => gates::b_gate(),
            NamedGate::Cphase(p) => gates::cphase(*p),
            NamedGate::Zz(g) => gates::zz(*g),
            NamedGate::Matrix(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_unitary4(&text, unitarity_tol)?
            }
        })
    }
}
