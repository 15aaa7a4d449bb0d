use qtangle::qsymbols::{BiLaurent, LaurentPoly4, QLaurent, StablePoly};
use qtangle::tangle::{BoundaryConfig, TangleDesc};
use qtangle::twist::poincare_polynomial;
use qtangle_cli::grid::{default_mutation, hopf_formula};
use qtangle_cli::{run, Grid, Outcome};
use serde_json::Value;
use std::process::Command;

fn cli(args: &str) -> Outcome {
    run(std::iter::once("qtangle").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = cli(&format!("{args} --format json"));
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qtangle"))
}

#[test]
fn poincare_json_example() {
    let v = json("poincare --cf 3,2 --j 2 --start UP");
    assert_eq!(v["tangle"]["p"], 7);
    assert_eq!(v["tangle"]["q"], 2);
    assert_eq!(v["state"]["config"], "OP");
    let (st, _) = poincare_polynomial(&TangleDesc::from_fraction(7, 2).unwrap(), 2, BoundaryConfig::UP);
    let weights = v["state"]["weights"].as_array().unwrap();
    assert_eq!(weights.len(), 3);
    for (w, c) in weights.iter().zip(&st.coeffs) {
        assert_eq!(&LaurentPoly4::from_json(w).unwrap(), c);
    }
    assert_eq!(v["generators"], serde_json::json!(["49", "14", "4"]));
}

#[test]
fn poincare_text_reports_the_shift() {
    let out = cli("poincare --frac 3/1 --j 2");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("shift 1\n"), "{}", out.stdout);
    assert!(out.stdout.contains("generators 1 3 9"), "{}", out.stdout);
}

#[test]
fn homfly_hopf_example() {
    let v = json("homfly --frac 2/1 --colors 3,2 --rank 5 --reduced");
    let value = QLaurent::from_json(&v["value"]["terms"]).unwrap();
    let raw = QLaurent::from_json(&v["raw"]["terms"]).unwrap();
    assert_eq!(value.to_string(), v["value"]["text"].as_str().unwrap());
    assert!(value.equal_up_to_monomial(&hopf_formula(5, 3, 2), true));
    let shift = v["shift"].as_i64().unwrap();
    let sign = v["sign"].as_i64().unwrap();
    assert_eq!(value.mul_monomial(shift).scale(&sign.into()), raw);
}

#[test]
fn stable_json_round_trips() {
    let v = json("stable --frac 4/1 --j 2");
    let p = StablePoly::from_json(&v["value"]["terms"]).unwrap();
    assert_eq!(p.to_string(), v["value"]["text"].as_str().unwrap());
    assert!(!p.is_s_free());
}

#[test]
fn alexander_routes_and_specialization() {
    let v = json("alexander --frac 4/1 --check-specialization");
    assert_eq!(v["routes_agree"], true);
    assert_eq!(v["specialization"]["pass"], true);
    let fox = BiLaurent::from_json(&v["fox"]["terms"]).unwrap();
    let geo = BiLaurent::from_json(&v["geometric"]["terms"]).unwrap();
    assert!(fox.equal_up_to_monomial(&geo, true));
    assert_eq!(fox.to_string(), "1 + u^2*v^2");
    let out = cli("alexander --cf 1,3 --start OP --method fox");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("fox ") && !out.stdout.contains("geometric "));
}

#[test]
fn validate_example_passes() {
    let v = json("validate --frac 3/1 --j 2");
    assert_eq!(v["pass"], true);
    assert_eq!(v["per_weight"].as_array().unwrap().len(), 3);
    let v = json("validate --frac 5/2 --dump-diagram");
    assert!(v["diagram"].is_object());
    let out = cli("validate --cf 2,2 --j 3 --start OP");
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("pass\n"), "{}", out.stdout);
}

#[test]
fn input_errors_exit_two_with_one_line() {
    for (args, needle) in [
        ("poincare --frac 3-1", "expected P/Q"),
        ("poincare --frac 4/2", "coprime"),
        ("poincare --frac 3/1 --j 0", "at least 1"),
        ("alexander --frac 3/1", "odd"),
        ("homfly --frac 3/1 --colors 2,1 --rank 4", "closure unavailable"),
        ("homfly --frac 2/1 --colors 1 --rank 4", "colors"),
        ("poincare --frac 3/1 --bogus", "--bogus"),
        ("poincare --frac 3/1 --cf 3", "cannot be used"),
        ("poincare --frac 3/1 --start XX", "unknown configuration"),
        ("nope", "unrecognized subcommand"),
    ] {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args}");
        assert!(out.stdout.is_empty(), "{args}");
        assert_eq!(out.stderr.lines().count(), 1, "{args}: {}", out.stderr);
        assert!(out.stderr.contains(needle), "{args}: {}", out.stderr);
    }
}

#[test]
fn help_exits_zero() {
    let out = cli("--help");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("selftest"));
}

#[test]
fn binary_exit_codes_and_env_format() {
    let ok = bin().args(["poincare", "--frac", "5/2"]).env("QTANGLE_FORMAT", "json").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["tangle"]["cf"], "[2,2]");
    let text =
        bin().args(["poincare", "--frac", "5/2", "--format", "text"]).env("QTANGLE_FORMAT", "json").output().unwrap();
    assert!(String::from_utf8(text.stdout).unwrap().starts_with("tangle T(5,2)"));
    let bad = bin().args(["poincare", "--frac", "5/2"]).env("QTANGLE_FORMAT", "yaml").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let err = bin().args(["alexander", "--frac", "9/4"]).output().unwrap();
    assert_eq!(err.status.code(), Some(2));
    assert_eq!(String::from_utf8(err.stderr).unwrap().lines().count(), 1);
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("qtangle-out-{}.json", std::process::id()));
    let out = cli(&format!("poincare --frac 7/3 --j 2 --format json --out {}", path.display()));
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, cli("poincare --frac 7/3 --j 2 --format json").stdout);
}

#[test]
fn output_is_deterministic() {
    for args in [
        "poincare --cf 3,2 --j 3 --format json",
        "stable --frac 8/3 --j 2",
        "alexander --frac 10/3",
        "validate --frac 11/4 --j 2",
    ] {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a, b, "{args}");
        let c = bin().args(args.split_whitespace()).output().unwrap();
        assert_eq!(String::from_utf8(c.stdout).unwrap(), a.stdout, "{args}");
    }
}

/// Sequential and threaded self-tests produce byte-identical reports, the exit
/// code reflects the matrix, and the corrupted rule breaks at least one criterion.
#[test]
fn selftest_matrix() {
    let seq = cli("selftest");
    let par = cli("selftest --parallel 4");
    assert_eq!(seq, par);
    let lines: Vec<&str> = seq.stdout.lines().collect();
    assert_eq!(lines.len(), 10);
    let passed = lines[..9].iter().filter(|l| l.contains(" PASS ")).count();
    assert_eq!(seq.code, if passed == 9 { 0 } else { 1 });

    let mutated = Grid::mutated(default_mutation()).run_all(4);
    let mutated_passed = mutated.iter().filter(|r| r.pass).count();
    assert!(mutated_passed < passed, "mutation went unnoticed");
    let out = cli("selftest --mutate --parallel 4 --format json");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], mutated_passed);
    assert_eq!(out.code, 1);
}
