use gsym::output::{report_json, to_json_string};
use gsym::{compute, exit, list, parse_generic, table, Format};
use gsym_core::homotopy::{ranks_via_theorem, report, symmetric_instances, Method};
use serde_json::Value;

fn json(spec: &str) -> Value {
    let out = compute(spec, Method::Both, Format::Json);
    assert_eq!(out.status, exit::OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn degrees(v: &Value) -> Vec<(u64, u64)> {
    v["ranks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["q"].as_u64().unwrap(), r["dim"].as_u64().unwrap()))
        .collect()
}

#[test]
fn e6_over_f4() {
    let v = json("E6/F4");
    assert_eq!(degrees(&v), vec![(9, 1), (17, 1)]);
    assert_eq!(v["agreement"], Value::Bool(true));
    assert_eq!(v["space"], "E6/F4");
}

#[test]
fn parametrised_family() {
    let v = json("SO(2n+1)/SO(2n)(n=3)");
    assert_eq!(degrees(&v), vec![(6, 1), (11, 1)]);
}

#[test]
fn generic_flag_manifold() {
    let v = json("g=A2; cat=1; torus=2; summands=[]");
    assert_eq!(degrees(&v), vec![(2, 2), (3, 1), (5, 1)]);
}

#[test]
fn text_output() {
    let out = compute("SU(4)/Sp(2)", Method::Both, Format::Text);
    assert_eq!(out.status, exit::OK);
    assert!(
        out.stdout.starts_with("SU(4)/Sp(2): q=5 (dim 1)  [theorem = cartan]"),
        "{}",
        out.stdout
    );
}

#[test]
fn exit_statuses() {
    assert_eq!(
        compute("g=A2; cat=7; torus=0; summands=[]", Method::Both, Format::Text).status,
        exit::INPUT
    );
    assert_eq!(compute("SU(4)/Nope", Method::Both, Format::Text).status, exit::INPUT);
    assert_eq!(
        compute("SO(2n+1)/SO(2n)(n=0)", Method::Both, Format::Text).status,
        exit::INPUT
    );
    let bad = compute("SO(8)/U(4)", Method::Both, Format::Text);
    assert_eq!(bad.status, exit::DISAGREEMENT);
    assert!(bad.stdout.contains("DISAGREEMENT"));
    assert_eq!(compute("SO(8)/U(4)", Method::Theorem, Format::Text).status, exit::OK);
    assert_eq!(table(1, Format::Text).status, exit::INPUT);
}

#[test]
fn listing() {
    let out = list();
    assert_eq!(out.status, exit::OK);
    for line in ["E8/SO(16) [theorem only]", "SO(2n)/U(n) (n≥4)", "E6/F4", "G2/SO(4)"] {
        assert!(out.stdout.lines().any(|l| l == line), "missing {line}");
    }
}

#[test]
fn small_table() {
    let out = table(4, Format::Text);
    assert!(out.stdout.contains("  SU(4)/Sp(2): q=5 (dim 1)  [theorem = cartan]\n"));
    assert!(out.stdout.lines().any(|l| l == "SU(2n)/Sp(n)"));
}

#[test]
fn generic_round_trip() {
    for row in symmetric_instances(6) {
        let form = row.space.generic_form();
        let back = parse_generic(&form).unwrap();
        assert_eq!(back.generic_form(), form);
        assert_eq!(
            ranks_via_theorem(&back).unwrap(),
            ranks_via_theorem(&row.space).unwrap(),
            "{form}"
        );
    }
}

#[test]
fn json_is_stable() {
    let r = report(&gsym::parse_space("F4/Spin(9)").unwrap(), Method::Both).unwrap();
    let a = to_json_string(&report_json(&r));
    let b = to_json_string(&report_json(
        &report(&gsym::parse_space("F4/Spin(9)").unwrap(), Method::Both).unwrap(),
    ));
    assert_eq!(a, b);
    let reparsed: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(to_json_string(&reparsed), a);
}

#[test]
fn golden_table() {
    let out = table(8, Format::Json);
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/table_rank8.json");
    if std::env::var_os("GSYM_BLESS").is_some() {
        std::fs::write(path, &out.stdout).unwrap();
    }
    let golden = std::fs::read_to_string(path).unwrap();
    assert_eq!(out.stdout, golden);
    // SO(4n)/U(2n) rows disagree.
    assert_eq!(out.status, exit::DISAGREEMENT);
}

#[test]
fn binary_exit_codes() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_gsym");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = run(&["compute", "E6/F4", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"agreement\": true"));
    assert_eq!(run(&["compute", "SO(8)/U(4)"]).status.code(), Some(1));
    let bad = run(&["compute", "g=A2; cat=7; torus=0; summands=[]"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
