use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn kfermat(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_kfermat"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{e}: {}", run.stdout))
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_owned())
        .collect()
}

#[test]
fn ktilde_json_and_csv() {
    let run = kfermat(&["ktilde", "--n", "13"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = json(&run);
    assert_eq!(
        strings(&doc["coefficients"]),
        ["1", "-3", "8", "-11", "8", "-3", "1"]
    );
    assert_eq!(doc["d_n"], 6);
    assert_eq!(doc["ledger"]["mult_cyc"], 2);

    let csv = kfermat(&["ktilde", "--n", "13", "--format", "csv"]);
    let lines: Vec<&str> = csv.stdout.lines().collect();
    assert_eq!(lines[0], "n,power,coefficient");
    assert_eq!(lines[4], "13,3,-11");
    assert_eq!(lines.len(), 8);
}

#[test]
fn constant_reduction_has_no_galois_bound() {
    let doc = json(&kfermat(&["ktilde", "--n", "7"]));
    assert_eq!(doc["d_n"], 0);
    assert!(doc["galois_bound"].is_null());
}

#[test]
fn scan_csv_marks_the_exception() {
    let run = kfermat(&["scan", "--bound", "200", "--format", "csv", "--jobs", "2"]);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "p,status,alpha,residue");
    assert!(lines.contains(&"19,exception,4,0"));
    assert!(lines.contains(&"11,certified,2,11"));
    assert!(lines.contains(&"5,skipped,,"));
}

#[test]
fn scan_is_independent_of_worker_count() {
    let one = kfermat(&["scan", "--bound", "3000", "--jobs", "1"]).stdout;
    let many = kfermat(&["scan", "--bound", "3000", "--jobs", "6"]).stdout;
    assert_eq!(one, many);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["localize", "--a", "-1", "--n", "30", "--format", "csv"][..],
        &["symmetry", "--n", "24"],
        &["disc", "--m", "2"],
    ] {
        assert_eq!(kfermat(args).stdout, kfermat(args).stdout, "{args:?}");
    }
}

#[test]
fn certify_p_power_eleven() {
    let run = kfermat(&[
        "certify", "--family", "p-power", "--param", "11", "--e", "3",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = json(&run);
    let ev = &doc["certificate"]["evidence"];
    assert_eq!(ev["alpha"], 2);
    assert_eq!(ev["exact_value"], "73786976294838206466");
    assert_eq!(doc["certificate"]["verdict"], true);
    assert_eq!(doc["splitting"]["splits"], true);
}

#[test]
fn negative_certificates_are_consistent() {
    let run = kfermat(&["certify", "--family", "two-power", "--param", "3"]);
    assert_eq!(run.code, 0);
    let doc = json(&run);
    assert_eq!(doc["certificate"]["verdict"], false);
    assert_eq!(doc["recheck"], false);

    let run = kfermat(&["certify", "--family", "p-power", "--param", "19"]);
    assert_eq!(run.code, 0);
    assert_eq!(json(&run)["certificate"]["evidence"]["residue"], 0);
}

#[test]
fn certify_half_and_eisenstein() {
    let doc = json(&kfermat(&[
        "certify", "--family", "half", "--param", "-1/2", "--n", "9",
    ]));
    assert_eq!(doc["certificate"]["verdict"], true);
    let doc = json(&kfermat(&["certify", "--family", "eis3", "--param", "15"]));
    assert_eq!(
        doc["certificate"]["evidence"]["decomposition"],
        serde_json::json!([2, 4])
    );
    assert_eq!(doc["certificate"]["verdict"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["certify", "--family", "p-power", "--param", "12"][..],
        &["certify", "--family", "half", "--param", "1/3", "--n", "5"],
        &["certify", "--family", "half", "--param", "1/2"],
        &["ktilde", "--n", "1"],
        &["localize", "--a", "1/0", "--n", "5"],
        &["localize", "--a", "1/2", "--n", "5", "--tol", "-1"],
        &["symmetry", "--n", "12", "--format", "csv"],
        &["disc", "--m", "0"],
        &["frobnicate"],
        &["ktilde"],
    ] {
        let run = kfermat(args);
        assert_eq!(run.code, 2, "{args:?}: {}", run.stderr);
        assert!(!run.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let run = kfermat(&["--help"]);
    assert_eq!(run.code, 0);
    for sub in [
        "ktilde",
        "localize",
        "symmetry",
        "certify",
        "scan",
        "disc",
        "flt-check",
    ] {
        assert!(run.stdout.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn unreachable_tolerance_is_a_numerical_failure() {
    let run = kfermat(&["localize", "--a", "-1", "--n", "40", "--tol", "1e-300"]);
    assert_eq!(run.code, 1, "{}", run.stdout);
}

#[test]
fn localize_writes_the_root_table() {
    let path = std::env::temp_dir().join(format!("kfermat-roots-{}.csv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let run = kfermat(&[
        "localize",
        "--a",
        "-1",
        "--n",
        "12",
        "--emit-roots",
        path_str,
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = json(&run);
    assert_eq!(doc["claim"], "RaysAndArcs");
    assert_eq!(doc["verdict"], true);
    let table = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let mut lines = table.lines();
    assert_eq!(
        lines.next(),
        Some("n,a_num,a_den,re,im,label,residual,distance")
    );
    let roots: Vec<&str> = lines.take_while(|l| !l.contains("curve:")).collect();
    assert_eq!(roots.len(), 12);
    assert!(roots.iter().all(|l| l.starts_with("12,-1,1,")));
}

#[test]
fn localize_midline_csv() {
    let run = kfermat(&["localize", "--a", "-2/5", "--n", "9", "--format", "csv"]);
    assert_eq!(run.code, 0);
    let rows: Vec<&str> = run
        .stdout
        .lines()
        .skip(1)
        .filter(|l| l.contains(",MidLine,"))
        .collect();
    assert_eq!(rows.len(), 8);
}

#[test]
fn unclaimed_parameter_is_vacuous() {
    let run = kfermat(&["localize", "--a", "3", "--n", "7"]);
    assert_eq!(run.code, 0);
    assert_eq!(json(&run)["claim"], "Unclaimed");
}

#[test]
fn symmetry_report() {
    let run = kfermat(&["symmetry", "--n", "12"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = json(&run);
    for key in [
        "h_group",
        "functional_equation_kn",
        "invariance_under_h",
        "cyclotomic_coprime",
        "phi_homog_identities",
    ] {
        assert_eq!(doc[key], true, "{key}");
    }
    assert_eq!(doc["gcd_with_derivative"], "1");

    let doc = json(&kfermat(&["symmetry", "--n", "13"]));
    assert_eq!(doc["gcd_with_derivative"], "x^2 - x + 1");
    assert_eq!(doc["gcd_exponent"], 1);
}

#[test]
fn disc_m_one() {
    let doc = json(&kfermat(&["disc", "--m", "1"]));
    assert_eq!(doc["disc"], "-186297408");
    assert_eq!(doc["s_abs"], "11");
    assert_eq!(doc["odd_permutation"], true);
}

#[test]
fn flt_check() {
    let doc = json(&kfermat(&["flt-check", "--a", "3/4", "--n", "5"]));
    assert!(doc["rational_roots"].as_array().unwrap().is_empty());
    assert_eq!(doc["consistent"], true);

    let run = kfermat(&["flt-check", "--a", "-1", "--n", "9"]);
    assert_eq!(run.code, 0);
    assert_eq!(strings(&json(&run)["rational_roots"]), ["0", "1"]);
}
