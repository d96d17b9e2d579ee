use std::path::Path;
use std::process::{Command, Output};

use kaksynth_cli::CircuitDocument;
use tempfile::TempDir;

fn kaksynth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kaksynth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn synth_doc(target: &str, entangler: &str) -> CircuitDocument {
    let o = kaksynth(&["synth", "--target", target, "--entangler", entangler]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    CircuitDocument::parse(&stdout(&o)).unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no `{key}` in {text}"))
        .to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn synth_reports_known_counts() {
    let r = synth_doc("CNOT", "ZZ(pi/3)").report.unwrap();
    assert_eq!(r.entangler_count, 2);
    let r = synth_doc("SQRT_SWAP", "CPHASE(2pi/3)").report.unwrap();
    assert_eq!((r.entangler_count, r.local_count), (6, 7));
    assert!(r.residual < 1e-8);
}

#[test]
fn identity_matrix_target_needs_no_entangler() {
    let dir = TempDir::new().unwrap();
    let id = "[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],\
              [[0,0],[0,0],[1,0],[0,0]],[[0,0],[0,0],[0,0],[1,0]]]";
    let path = write(dir.path(), "id.json", id);
    let r = synth_doc(&format!("MATRIX({path})"), "CNOT").report.unwrap();
    assert_eq!(r.entangler_count, 0);
}

#[test]
fn out_file_then_verify() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("c.json");
    let out_s = out.to_string_lossy().into_owned();
    let o = kaksynth(&["synth", "--target", "SQRT_SWAP", "--entangler", "B", "--out", &out_s]);
    assert!(o.status.success());
    assert!(field(&stdout(&o), "entangler_count").parse::<usize>().unwrap() <= 12);

    let o = kaksynth(&["verify", "--circuit", &out_s, "--target", "SQRT_SWAP"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "result"), "PASS");
    assert!(field(&stdout(&o), "residual").parse::<f64>().unwrap() < 1e-8);

    for wrong in ["SWAP", "CNOT"] {
        let o = kaksynth(&["verify", "--circuit", &out_s, "--target", wrong]);
        assert_eq!(o.status.code(), Some(6));
        assert_eq!(field(&stdout(&o), "result"), "FAIL");
        assert!(field(&stdout(&o), "residual").parse::<f64>().unwrap() > 0.1);
    }
}

#[test]
fn emitted_documents_round_trip() {
    let doc = synth_doc("CZ", "CPHASE(pi/5)");
    let text = doc.emit();
    assert_eq!(CircuitDocument::parse(&text).unwrap(), doc);
    assert_eq!(CircuitDocument::parse(&text).unwrap().emit(), text);
}

#[test]
fn classify_landmarks() {
    let o = kaksynth(&["classify", "--gate", "CNOT"]);
    let s = stdout(&o);
    assert_eq!(field(&s, "class"), "Entangling");
    assert_eq!(field(&s, "bound"), "6");
    assert!(field(&s, "canonical").starts_with("(1.5707963267948966e0, "));

    let s = stdout(&kaksynth(&["classify", "--gate", "SWAP"]));
    assert_eq!(field(&s, "class"), "SwapClass");
    assert!(!s.contains("bound"));

    let s = stdout(&kaksynth(&["classify", "--gate", "CPHASE(pi/5)"]));
    let c1: f64 = field(&s, "canonical")[1..].split(',').next().unwrap().parse().unwrap();
    assert!((c1 - std::f64::consts::PI / 10.0).abs() < 1e-12);
    assert_eq!(field(&s, "n"), "3");
    assert_eq!(field(&s, "bound"), "18");
}

#[test]
fn batch_mode_keeps_order() {
    let dir = TempDir::new().unwrap();
    let jobs = r#"[{"target": "CNOT", "entangler": "ZZ(pi/3)"},
                   {"target": "CNOT", "entangler": "ZZ(pi/5)"},
                   {"target": "SQRT_SWAP", "entangler": "CPHASE(2pi/3)"}]"#;
    let path = write(dir.path(), "jobs.json", jobs);
    let o = kaksynth(&["synth", "--batch", &path]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let docs: Vec<CircuitDocument> = serde_json::from_str(&stdout(&o)).unwrap();
    let counts: Vec<_> = docs.iter().map(|d| d.report.unwrap().entangler_count).collect();
    assert_eq!(counts, [2, 4, 6]);
}

#[test]
fn exit_codes_are_distinct() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.json").to_string_lossy().into_owned();
    let o = kaksynth(&["synth", "--target", &format!("MATRIX({missing})"), "--entangler", "CNOT"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(kaksynth(&["synth", "--target", "CNOT"]).status.code(), Some(2));
    assert_eq!(
        kaksynth(&["synth", "--target", "CNOT", "--entangler", "CNOT", "--tol", "-1"]).status.code(),
        Some(2)
    );

    let o = kaksynth(&["synth", "--target", "TOFFOLI", "--entangler", "CNOT"]);
    assert_eq!(o.status.code(), Some(3));
    let garbled = write(dir.path(), "bad.json", "[[1, 2], [3");
    let o = kaksynth(&["synth", "--target", &format!("MATRIX({garbled})"), "--entangler", "CNOT"]);
    assert_eq!(o.status.code(), Some(3));
    let o = kaksynth(&["verify", "--circuit", &garbled, "--target", "CNOT"]);
    assert_eq!(o.status.code(), Some(3));

    let scaled = write(dir.path(), "scaled.json", "[2,0,0,0, 0,2,0,0, 0,0,2,0, 0,0,0,2]");
    let o = kaksynth(&["synth", "--target", &format!("MATRIX({scaled})"), "--entangler", "CNOT"]);
    assert_eq!(o.status.code(), Some(4));

    let o = kaksynth(&["synth", "--target", "CNOT", "--entangler", "SWAP"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not entangling"));
}
