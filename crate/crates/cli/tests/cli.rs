//! End-to-end checks of the gdscert binary: determinism, exit codes, format
//! switching, and the documented example outputs.

use std::path::Path;
use std::process::{Command, Output};

fn gdscert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdscert")).args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = gdscert(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn corpus_list_is_deterministic() {
    let a = stdout_of(&["corpus-list"]);
    let b = stdout_of(&["corpus-list"]);
    assert_eq!(a, b);
    assert!(a.contains("rp2"));
    assert!(a.contains("9-vertex complex projective plane"));
}

#[test]
fn complex_info_reads_corpus_and_files() {
    let text = stdout_of(&["complex-info", "corpus:rp2"]);
    assert!(text.contains("euler characteristic: 1"));
    assert!(text.contains("manifold: yes"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.facets");
    std::fs::write(&path, "1 2 3\n1 3 4\n").unwrap();
    let text = stdout_of(&["complex-info", path.to_str().unwrap()]);
    assert!(text.contains("f-vector: 4 5 2"));
    assert!(text.contains("manifold: no"));
}

#[test]
fn commutator_gds_example() {
    let text = stdout_of(&["commutator", "--gds", "corpus:rp2"]);
    assert_eq!(text, "flip commutator: constant phase π\nχ(L) = 1\n");
    let text = stdout_of(&["commutator", "--gds", "corpus:t2"]);
    assert_eq!(text, "flip commutator: zero (flip-symmetric)\nχ(L) = 0\n");
}

#[test]
fn sw_chains_example() {
    let text = stdout_of(&["sw-chains", "corpus:rp2"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("C_0:") && lines[0].ends_with("nontrivial"));
    assert!(lines[1].starts_with("C_1:") && lines[1].ends_with("nontrivial"));
    assert!(lines[2].ends_with("fundamental (nontrivial)"));
}

#[test]
fn certify_wotr_s3_passes_with_identity_residual() {
    let out = gdscert(&["certify", "wotr", "corpus:s3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: PASS"));
    assert!(text.contains("residual: identity"));
}

#[test]
fn failing_certificate_exits_nonzero_but_prints() {
    let out = gdscert(&["certify", "cochain-eq", "corpus:tri"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: FAIL"));
    assert!(text.contains("odd link Euler characteristic"));
}

#[test]
fn unknown_corpus_name_is_a_diagnostic() {
    let out = gdscert(&["complex-info", "corpus:klein"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("klein"));
}

#[test]
fn json_output_parses() {
    let text = stdout_of(&["--format", "json", "corpus-list"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);

    let text = stdout_of(&["--format", "json", "certify", "omega", "4"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["verdict"], serde_json::Value::Bool(true));
    assert!(v["inputs_digest"].as_str().unwrap().len() == 64);
}

#[test]
fn out_dir_receives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let stdout = stdout_of(&["--out", dir.path().to_str().unwrap(), "homology", "corpus:t2"]);
    let file = std::fs::read_to_string(dir.path().join("homology.txt")).unwrap();
    assert_eq!(stdout, file);
    assert_eq!(stdout, "betti (mod 2): 1 2 1\n");
}

#[test]
fn homology_cycle_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycle.chain");
    // an empty triangle of the torus (123 is not a facet): essential
    std::fs::write(&path, "1 1 2\n1 2 3\n1 1 3\n").unwrap();
    let text = stdout_of(&["homology", "corpus:t2", "--cycle", path.to_str().unwrap()]);
    assert!(text.contains("class: essential"), "{text}");

    // the boundary of the facet 124 bounds
    std::fs::write(&path, "1 1 2\n1 2 4\n1 1 4\n").unwrap();
    let text2 = stdout_of(&["homology", "corpus:t2", "--cycle", path.to_str().unwrap()]);
    assert!(text2.contains("class: trivial (bounds)"), "{text2}");
    assert!(text2.contains("witness:"), "{text2}");
}

#[test]
fn subdivide_roundtrips_through_the_parser() {
    let text = stdout_of(&["subdivide", "corpus:s2tet"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bary.facets");
    std::fs::write(&path, &text).unwrap();
    let info = stdout_of(&["complex-info", path.to_str().unwrap()]);
    assert!(info.contains("f-vector: 14 36 24"));
    assert!(info.contains("euler characteristic: 2"));
}

#[test]
fn gauge_amplitudes_tetrahedron_boundary() {
    let text = stdout_of(&["gauge-amplitudes", "corpus:s2tet"]);
    assert!(text.starts_with("trivial-sector edge configurations: 8\n"));
    assert!(text.contains("+2  .\n"));
    // every non-empty coboundary flips the sign
    assert_eq!(text.matches("-2  ").count(), 7);
}

#[test]
fn disentangler_poly_parses_back() {
    let text = stdout_of(&["disentangler", "corpus:s2tet", "--precision", "2"]);
    // 14 simplices, all with the half-turn coefficient 2
    assert_eq!(text.lines().count(), 14);
    assert!(text.lines().all(|l| l.starts_with("2 : ")));
    assert!(Path::new(env!("CARGO_BIN_EXE_gdscert")).exists());
}

#[test]
fn certify_rg_on_projective_plane() {
    let out = gdscert(&["certify", "rg", "corpus:rp2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("equals barycentric subdivision: true"));
}
