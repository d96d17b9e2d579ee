//! JSON circuit documents.

use kaksynth::matrix_io::{unitary2_from_value, unitary2_to_value, unitary4_from_value, unitary4_to_value};
use kaksynth::{Circuit, CircuitElement, Complex64, LocalPair, SynthesisReport, ToleranceConfig, Unitary4};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const FORMAT: &str = "kaksynth-circuit/1";

/// Gate given by the user, with its matrix embedded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateRecord {
    pub name: String,
    pub matrix: Value,
}

impl GateRecord {
    pub fn new(name: &str, u: &Unitary4) -> Self {
        Self {
            name: name.to_string(),
            matrix: unitary4_to_value(u),
        }
    }

    pub fn unitary(&self, unitarity_tol: f64) -> Result<Unitary4, CliError> {
        Ok(unitary4_from_value(&self.matrix, unitarity_tol)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub unitarity_tol: f64,
    pub snap_tol: f64,
    pub verify_tol: f64,
}

impl From<ToleranceConfig> for Tolerances {
    fn from(t: ToleranceConfig) -> Self {
        Self {
            unitarity_tol: t.unitarity_tol,
            snap_tol: t.snap_tol,
            verify_tol: t.verify_tol,
        }
    }
}

impl Tolerances {
    pub fn config(&self) -> Result<ToleranceConfig, CliError> {
        Ok(ToleranceConfig::new(self.unitarity_tol, self.snap_tol, self.verify_tol)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub entangler: GateRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<GateRecord>,
    pub tolerances: Tolerances,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ElementRecord {
    Local { a: Value, b: Value },
    Entangler,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub gamma: f64,
    pub apps_per_unit: usize,
    pub n: usize,
    pub entangler_count: usize,
    pub local_count: usize,
    pub residual: f64,
    pub bound: usize,
}

impl From<SynthesisReport> for ReportRecord {
    fn from(r: SynthesisReport) -> Self {
        Self {
            gamma: r.gamma,
            apps_per_unit: r.apps_per_unit,
            n: r.n,
            entangler_count: r.entangler_count,
            local_count: r.local_count,
            residual: r.residual,
            bound: r.bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircuitDocument {
    pub format: String,
    pub header: Header,
    pub elements: Vec<ElementRecord>,
    pub phase: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportRecord>,
}

impl CircuitDocument {
    pub fn new(header: Header, circuit: &Circuit, report: Option<SynthesisReport>) -> Self {
        let elements = circuit
            .elements()
            .iter()
            .map(|el| match el {
                CircuitElement::Local(p) => ElementRecord::Local {
                    a: unitary2_to_value(&p.a),
                    b: unitary2_to_value(&p.b),
                },
                CircuitElement::Entangler => ElementRecord::Entangler,
            })
            .collect();
        let phase = circuit.phase();
        Self {
            format: FORMAT.to_string(),
            header,
            elements,
            phase: [phase.re, phase.im],
            report: report.map(ReportRecord::from),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: Self = serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("circuit document: {e}")))?;
        if doc.format != FORMAT {
            return Err(CliError::Parse(format!("unsupported format `{}`", doc.format)));
        }
        Ok(doc)
    }

    pub fn emit(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn circuit(&self) -> Result<Circuit, CliError> {
        let tol = self.header.tolerances.unitarity_tol;
        let elements = self
            .elements
            .iter()
            .map(|el| {
                Ok(match el {
                    ElementRecord::Local { a, b } => CircuitElement::Local(LocalPair::new(
                        unitary2_from_value(a, tol)?,
                        unitary2_from_value(b, tol)?,
                    )),
                    ElementRecord::Entangler => CircuitElement::Entangler,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let phase = Complex64::new(self.phase[0], self.phase[1]);
        Ok(Circuit::from_parts(elements, phase)?)
    }
}
