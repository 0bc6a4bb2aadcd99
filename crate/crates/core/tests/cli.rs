use std::path::PathBuf;
use std::process::Command;

use semiconj::cli::run;
use semiconj::format::{parse_json, TableDoc};
use semiconj::{EqPartition, PairRelation, Semigroup};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("semiconj").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against `tests/golden/<name>`; `BLESS=1` rewrites the file.
fn golden(name: &str, args: &[&str]) {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    let path = golden_path(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out, want, "output of {args:?} differs from {}", path.display());
}

#[test]
fn golden_c_partition_of_seven_element_fixture() {
    golden("conjugacy_f7_c.txt", &["conjugacy", "--fixture", "F7_542155", "--relation", "c"]);
    let (_, out, _) = invoke(&["conjugacy", "--fixture", "F7_542155", "--relation", "c"]);
    assert_eq!(out, "{0,1,2,3,6} {4} {5}\n");
}

#[test]
fn golden_full_conjugacy_report_with_conjugator_sets() {
    golden("conjugacy_f7_all.txt", &["conjugacy", "--fixture", "F7_542155", "--conjugators"]);
}

#[test]
fn golden_labelled_report() {
    golden("conjugacy_f7_e2b_labels.txt", &["conjugacy", "--fixture", "F7_E2B", "--labels"]);
}

#[test]
fn golden_green_and_epigroup() {
    golden("green_f4_56.txt", &["green", "--fixture", "F4_56"]);
    golden("epigroup_f6_strongc.txt", &["epigroup", "--fixture", "F6_STRONGC"]);
}

#[test]
fn golden_table1_rows() {
    golden("table1_max5.txt", &["table1", "--max", "5"]);
}

#[test]
fn golden_partial_injection_and_symbolic() {
    golden("pinj_decompose.txt", &["pinj", "decompose", "9; 2 5 - 4 8 7 - 1 -"]);
    golden("symbolic_known.txt", &["symbolic", "known"]);
}

#[test]
fn golden_variant_and_suite() {
    golden("variant_f6_414_s.txt", &["variant", "--fixture", "F6_414_S", "--element", "1"]);
    golden("suite_f6_e2a.txt", &["suite", "--fixture", "F6_E2A"]);
}

#[test]
fn all_fixtures_give_complete_reports() {
    for id in semiconj::constructors::FIXTURE_IDS {
        let (code, out, err) = invoke(&["conjugacy", "--fixture", id]);
        assert_eq!(code, 0, "{id}: {err}");
        assert!(out.contains("inclusions hold: true"), "{id}");
    }
}

#[test]
fn validate_reports_failing_triple_with_exit_one() {
    let dir = std::env::temp_dir().join(format!("semiconj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.tbl");
    std::fs::write(&bad, "2\n0 0\n1 0\n").unwrap();
    let (code, _, err) = invoke(&["validate", "--file", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("(1·0)·1"), "{err}");

    let good = dir.join("good.tbl");
    std::fs::write(&good, "# left zero\n2\n0 0\n1 1\n").unwrap();
    let (code, out, _) = invoke(&["validate", "--file", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid semigroup of order 2"));

    let ragged = dir.join("ragged.tbl");
    std::fs::write(&ragged, "2\n0 0\n1\n").unwrap();
    let (code, _, err) = invoke(&["validate", "--file", ragged.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(invoke(&["conjugacy"]).0, 2);
    assert_eq!(invoke(&["conjugacy", "--fixture", "F4_22", "--file", "x"]).0, 2);
    assert_eq!(invoke(&["conjugacy", "--fixture", "F4_22", "--relation", "q"]).0, 2);
    assert_eq!(invoke(&["frobnicate"]).0, 2);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(invoke(&["green", "--fixture", "NOPE"]).0, 1);
    assert_eq!(invoke(&["construct", "sym:9"]).0, 1);
    assert_eq!(invoke(&["enumerate", "--order", "7", "--count"]).0, 1);
    assert_eq!(invoke(&["pinj", "decompose", "3; 0 0 -"]).0, 1);
    assert_eq!(invoke(&["symbolic", "inspect", "cycles{1:x;0}"]).0, 1);
}

#[test]
fn json_tables_round_trip() {
    for spec in ["band:2x3", "cyclic:5", "antichain:3", "sym:3", "rees0:7", "fixture:F7_E2B"] {
        let (code, out, _) = invoke(&["--json", "construct", spec]);
        assert_eq!(code, 0);
        let s = parse_json(&out).unwrap();
        assert_eq!(s, semiconj::cli::construct_spec(spec).unwrap(), "{spec}");
    }
    let (_, out, _) = invoke(&["--json", "enumerate", "--order", "3", "--monoid"]);
    let docs: Vec<TableDoc> = serde_json::from_str(&out).unwrap();
    assert!(docs.iter().all(|d| Semigroup::from_rows(&d.table).unwrap().is_monoid()));
}

#[test]
fn json_relations_round_trip() {
    let (_, out, _) = invoke(&["--json", "conjugacy", "--fixture", "F7_542155", "--relation", "c"]);
    let c: EqPartition = serde_json::from_str(&out).unwrap();
    assert_eq!(c.to_string(), "{0,1,2,3,6} {4} {5}");
    let (_, out, _) = invoke(&["--json", "conjugacy", "--fixture", "F7_542155", "--relation", "p"]);
    let p: PairRelation = serde_json::from_str(&out).unwrap();
    assert_eq!(p.edges(), vec![(0, 2), (0, 3), (4, 5)]);
    let (code, out, _) = invoke(&["--json", "table1", "--max", "4"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows[1]["equivalence"]["monoids"], 7);
}

#[test]
fn pinj_compose_and_conjugate() {
    let (_, out, _) = invoke(&["pinj", "compose", "9; 2 5 - 4 8 7 - 1 -", "9; 2 5 - 4 8 7 - 1 -"]);
    assert_eq!(out, "9; - 7 - 8 - 1 - 5 -\n");
    let (_, out, _) = invoke(&["pinj", "conjugate", "3; 1 - -", "3; - - 0"]);
    assert!(out.starts_with("c-conjugate: true"), "{out}");
    let (_, out, _) = invoke(&["pinj", "conjugate", "3; 1 - -", "3; - - -"]);
    assert!(out.starts_with("c-conjugate: false"), "{out}");
}

#[test]
fn symbolic_compare_reports_each_relation() {
    let (code, out, _) = invoke(&["symbolic", "compare", "omega=w upsilon=1", "omega=w"]);
    assert_eq!(code, 0);
    assert!(out.contains("Gamma(X): p=false c=true j=false"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_semiconj");
    let ok = Command::new(bin)
        .args(["conjugacy", "--fixture", "F7_542155", "--relation", "c"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "{0,1,2,3,6} {4} {5}\n");
    let usage = Command::new(bin).arg("conjugacy").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let domain = Command::new(bin).args(["green", "--fixture", "NOPE"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(1));
}

#[test]
fn thread_cap_does_not_change_counts() {
    let bin = env!("CARGO_BIN_EXE_semiconj");
    let count = |threads: &str| {
        let out = Command::new(bin)
            .env("CONJ_THREADS", threads)
            .args(["enumerate", "--order", "4", "--count"])
            .output()
            .unwrap();
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(count("1"), "126\n");
    assert_eq!(count("3"), "126\n");
}
