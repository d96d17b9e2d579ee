//! Command-line front end: named gates, circuit documents and the `synth`,
//! `classify` and `verify` commands.

pub mod angle;
pub mod document;
pub mod error;
pub mod gate;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use kaksynth::batch::{map, Execution};
use kaksynth::{classify, kak_decompose, phase_distance, synthesize, upper_bound, GateClass};
use kaksynth::{ToleranceConfig, Unitary4};
use serde::Deserialize;

pub use document::CircuitDocument;
pub use error::CliError;
pub use gate::NamedGate;

use document::{GateRecord, Header};

#[derive(Debug, Parser)]
#[command(name = "kaksynth", version, about = "Exact two-qubit gate synthesis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a target into local layers and entangler applications.
    Synth(SynthArgs),
    /// Print a gate's canonical vector, class and entangler bound.
    Classify {
        #[arg(long)]
        gate: String,
    },
    /// Check a circuit document against a target gate.
    Verify {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        target: String,
    },
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Target gate, e.g. `SQRT_SWAP` or `MATRIX(u.json)`.
    #[arg(long, required_unless_present = "batch", conflicts_with = "batch")]
    pub target: Option<String>,
    /// Entangling gate, e.g. `CPHASE(2pi/3)`.
    #[arg(long, required_unless_present = "batch", conflicts_with = "batch")]
    pub entangler: Option<String>,
    /// Verification tolerance on the phase-insensitive residual.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the document here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON array of `{"target": ..., "entangler": ...}` jobs.
    #[arg(long)]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
struct Job {
    target: String,
    entangler: String,
}

/// Seventeen significant digits.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn resolve(name: &str, tol: &ToleranceConfig) -> Result<Unitary4, CliError> {
    name.parse::<NamedGate>()?.resolve(tol.unitarity_tol)
}

fn synth_one(target: &str, entangler: &str, tol: &ToleranceConfig) -> Result<CircuitDocument, CliError> {
    let t = resolve(target, tol)?;
    let e = resolve(entangler, tol)?;
    let (circuit, report) = synthesize(&t, &e, tol)?;
    let header = Header {
        entangler: GateRecord::new(entangler, &e),
        target: Some(GateRecord::new(target, &t)),
        tolerances: (*tol).into(),
    };
    Ok(CircuitDocument::new(header, &circuit, Some(report)))
}

fn report_lines(doc: &CircuitDocument) -> String {
    let Some(r) = doc.report else {
        return String::new();
    };
    format!(
        "entangler_count = {}\nlocal_count = {}\nbound = {}\ngamma = {}\napps_per_unit = {}\nn = {}\nresidual = {}\n",
        r.entangler_count,
        r.local_count,
        r.bound,
        fmt17(r.gamma),
        r.apps_per_unit,
        r.n,
        fmt17(r.residual)
    )
}

fn run_synth(args: &SynthArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let mut tol = ToleranceConfig::default();
    if let Some(v) = args.tol {
        tol.verify_tol = v;
    }
    tol.validate()?;

    let text = if let Some(batch) = &args.batch {
        let jobs: Vec<Job> = serde_json::from_str(&read(batch)?)
            .map_err(|e| CliError::Parse(format!("batch file: {e}")))?;
        let docs = map(&jobs, Execution::default(), |j| synth_one(&j.target, &j.entangler, &tol));
        let docs = docs
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                d.map_err(|e| match e {
                    CliError::Parse(m) => CliError::Parse(format!("job {i}: {m}")),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        serde_json::to_string_pretty(&docs).expect("documents serialize")
    } else {
        let (Some(t), Some(e)) = (&args.target, &args.entangler) else {
            return Err(CliError::Usage("--target and --entangler are required".into()));
        };
        let doc = synth_one(t, e, &tol)?;
        if args.out.is_some() {
            out.write_all(report_lines(&doc).as_bytes()).map_err(stdout_err)?;
        }
        doc.emit()
    };

    match &args.out {
        Some(path) => write_file(path, &(text + "\n")),
        None => writeln!(out, "{text}").map_err(stdout_err),
    }
}

fn run_classify(gate: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let tol = ToleranceConfig::default();
    let u = resolve(gate, &tol)?;
    let kak = kak_decompose(&u, &tol)?;
    let class = classify(&kak.c, &tol);
    let mut text = format!(
        "gate = {gate}\ncanonical = ({}, {}, {})\nclass = {class}\n",
        fmt17(kak.c.c1),
        fmt17(kak.c.c2),
        fmt17(kak.c.c3)
    );
    if class == GateClass::Entangling {
        let b = upper_bound(&u, &tol)?;
        text += &format!(
            "gamma = {}\napps_per_unit = {}\nn = {}\nbound = {}\n",
            fmt17(b.gamma),
            b.apps_per_unit,
            b.n,
            b.bound
        );
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn run_verify(circuit: &Path, target: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = CircuitDocument::parse(&read(circuit)?)?;
    let tol = doc.header.tolerances.config()?;
    let entangler = doc.header.entangler.unitary(tol.unitarity_tol)?;
    let circ = doc.circuit()?;
    let t = resolve(target, &tol)?;
    let residual = phase_distance(&circ.evaluate(&entangler), &t);
    let pass = residual < tol.verify_tol;
    writeln!(
        out,
        "residual = {}\nverify_tol = {}\nresult = {}",
        fmt17(residual),
        fmt17(tol.verify_tol),
        if pass { "PASS" } else { "FAIL" }
    )
    .map_err(stdout_err)?;
    if pass {
        Ok(())
    } else {
        Err(CliError::Verification {
            residual,
            tol: tol.verify_tol,
        })
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Synth(args) => run_synth(args, out),
        Command::Classify { gate } => run_classify(gate, out),
        Command::Verify { circuit, target } => run_verify(circuit, target, out),
    }
}
