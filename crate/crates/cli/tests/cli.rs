use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use semikit::derived::{bundled_metrics, CandidatePreserver};
use semikit::fuzzy::{admissible_cmp, LnVector, Permutation};
use semikit::semialgebra::BracketStructure;
use semikit::semimodule::SemiVector;
use semikit::NonnegScalar;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semikit")).args(args).output().expect("binary runs")
}

fn report(args: &[&str], code: i32) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn check<'a>(r: &'a Value, name: &str) -> &'a Value {
    r["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

fn scalar(v: &Value) -> NonnegScalar {
    v.as_str().unwrap().parse().unwrap()
}

fn vector(v: &Value) -> SemiVector {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn diagonal_eigenpairs() {
    let r = report(&["eigen", "--matrix", &data("diag25.json"), "--exact-2x2"], 0);
    let pairs: Vec<(String, Vec<String>)> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let d = &c["detail"];
            let v = d["vector"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_owned()).collect();
            (d["value"].as_str().unwrap().to_owned(), v)
        })
        .collect();
    assert_eq!(
        pairs,
        vec![("2/1".into(), vec!["1/1".into(), "0/1".into()]), ("5/1".into(), vec!["0/1".into(), "1/1".into()])]
    );
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["provenance"] == "closed-form"));
}

#[test]
fn report_header_fields() {
    let r = report(&["axioms", "--space", "rn", "--dim", "3", "--seed", "7"], 0);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["seed"], 7);
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(r["status"], "pass");
    assert_eq!(r["checks"].as_array().unwrap().len(), 10);
}

#[test]
fn squaring_preserver_is_falsified_with_a_triple() {
    let r = report(&["audit", "--family", "preserver", "--fn", &data("square.json")], 1);
    let c = check(&r, "preserver[0]");
    assert!(!c["passed"].as_bool().unwrap());
    let w = &c["detail"]["violation"];
    assert_eq!(w["axiom"], "triangle");
    // Fed back through the library: the composed table breaks the same triple.
    let f: CandidatePreserver = serde_json::from_str(&std::fs::read_to_string(data("square.json")).unwrap()).unwrap();
    let table = f.compose(&bundled_metrics()[c["detail"]["metric"].as_u64().unwrap() as usize]).unwrap();
    let ix = |k: &str| w[k].as_u64().unwrap() as usize;
    let (i, j, k) = (ix("i"), ix("j"), ix("k"));
    assert_eq!(table[i][k], scalar(&w["lhs"]));
    assert_eq!(&table[i][j] + &table[j][k], scalar(&w["rhs"]));
}

#[test]
fn default_preservers_pass() {
    let r = report(&["audit", "--family", "preserver"], 0);
    assert_eq!(r["status"], "pass");
}

#[test]
fn lie_witness_revalidates() {
    let r = report(&["algebra", "lie-audit", &data("lie_single.json")], 1);
    let d = &check(&r, "zero_bracket")["detail"];
    assert_eq!(d["verdict"], "alternating_fails");
    let b: BracketStructure =
        serde_json::from_str(&std::fs::read_to_string(data("lie_single.json")).unwrap()).unwrap();
    let v = vector(&d["v"]);
    assert_eq!(b.bracket(&v, &v).unwrap(), vector(&d["bracket"]));
    report(&["algebra", "lie-audit", &data("lie_zero.json")], 0);
}

#[test]
fn homomorphism_recipes() {
    report(&["algebra", "check-hom", &data("conjugation.json"), "--unital"], 0);
    let r = report(&["algebra", "check-hom", &data("entrywise_square.json")], 1);
    assert_eq!(check(&r, "additive")["passed"], false);
    report(&["algebra", "embed", &data("m12_34.json")], 0);
}

#[test]
fn metrics_on_every_carrier() {
    let r = report(&["metric", "--kind", "l2", &data("origin.json"), &data("p34.json")], 0);
    assert_eq!(check(&r, "metric")["detail"]["display"], "5");
    let r = report(&["metric", "--kind", "l1", &data("seq_a.json"), &data("seq_b.json")], 0);
    assert_eq!(check(&r, "sequence_metric")["detail"]["display"], "7/4");
    let r = report(&["metric", "--kind", "linf", &data("fn_f.json"), &data("fn_g.json")], 0);
    assert_eq!(check(&r, "function_metric")["detail"]["value"], "2/1");
}

#[test]
fn operator_norms_from_csv() {
    let r = report(&["opnorm", "--kind", "linf", &data("m23.csv")], 0);
    assert_eq!(check(&r, "operator_norm")["detail"]["value"]["exact"], "17/4");
    assert_eq!(check(&r, "attained")["passed"], true);
    let r = report(&["opnorm", "--kind", "l1", &data("m23.csv")], 0);
    assert_eq!(check(&r, "operator_norm")["detail"]["value"]["exact"], "7/2");
    let r = report(&["opnorm", "--kind", "l2", &data("m23.csv")], 0);
    let (lo, hi) = {
        let b = &check(&r, "operator_norm")["detail"]["bracket"];
        (b[0].as_f64().unwrap(), b[1].as_f64().unwrap())
    };
    // Largest singular value of [[2, 1/2, 0], [1, 3, 1/4]], by hand from the 2x2 Gram matrix.
    let (a, b, c) = (4.25f64, 3.5f64, 10.0625f64);
    let top = ((a + c) / 2.0 + (((a - c) / 2.0).powi(2) + b * b).sqrt()).sqrt();
    assert!(lo <= top + 1e-12 && top <= hi + 1e-12, "{lo} {top} {hi}");
}

#[test]
fn mcdm_ranking_is_sorted_under_the_permutation() {
    let r = report(
        &["mcdm", "rank", "--alts", &data("alts.json"), "--weights", &data("weights.json"), "--perm", "2,1,3"],
        0,
    );
    let d = &check(&r, "ranking")["detail"];
    let f: Permutation = "2,1,3".parse().unwrap();
    let scores: Vec<LnVector> =
        d["ranking"].as_array().unwrap().iter().map(|x| serde_json::from_value(x["score"].clone()).unwrap()).collect();
    for w in scores.windows(2) {
        assert!(admissible_cmp(&w[0], &w[1], &f).unwrap().is_ge());
    }
    let order: Vec<u64> = d["ranking"].as_array().unwrap().iter().map(|x| x["index"].as_u64().unwrap()).collect();
    assert_eq!(order, vec![2, 0, 1]);
    assert!(d["method"].as_str().unwrap().contains("ties keep input order"));
}

#[test]
fn ln_axioms_report_without_failing() {
    let r = report(&["axioms", "--space", "ln", "--dim", "2", "--samples", "200"], 0);
    assert_eq!(r["status"], "report");
    assert_eq!(check(&r, "ln_cancellation")["passed"], false);
    assert_eq!(check(&r, "ln_add_associative")["passed"], true);
    assert_eq!(check(&r, "admissible_total")["passed"], true);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["eigen", "--matrix", &data("m12_34.json"), "--exact-2x2"],
        vec!["eigen", "--matrix", "/nonexistent.json", "--perron"],
        vec!["eigen", "--matrix", &data("diag25.json")],
        vec!["frobnicate"],
        vec!["metric", "--kind", "l2", &data("fn_f.json"), &data("fn_g.json")],
        vec!["axioms", "--space", "rn", "--dim", "20"],
        vec!["mcdm", "rank", "--alts", &data("alts.json"), "--weights", &data("weights.json"), "--perm", "1,1,2"],
        vec!["--max-dim", "17", "suite"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dimension_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_semikit"))
        .args(["axioms", "--space", "rn", "--dim", "3"])
        .env("SEMIKIT_MAX_DIM", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limited to dimension 2"));
}

#[test]
fn out_flag_and_table_format() {
    let dir = std::env::temp_dir().join(format!("semikit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out = run(&["eigen", "--matrix", &data("diag25.json"), "--exact-2x2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["status"], "pass");
    let out = run(&["eigen", "--matrix", &data("diag25.json"), "--exact-2x2", "--format", "table"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("eigenpair[1]  closed-form  pass"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn seeds_change_random_audits() {
    let a = run(&["audit", "--family", "semimetric", "--seed", "1"]).stdout;
    let b = run(&["audit", "--family", "semimetric", "--seed", "1"]).stdout;
    let c = run(&["audit", "--family", "semimetric", "--seed", "2"]).stdout;
    assert_eq!(a, b);
    assert_ne!(a, c);
}
