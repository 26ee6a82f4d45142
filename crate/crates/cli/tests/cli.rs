use std::fs;
use std::process::{Command, Output};

use hyperwave_core::discrete::DiscreteSpec;
use hyperwave_core::{EvalOptions, SeriesSpec};
use serde_json::Value;

fn hyperwave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperwave")).args(args).env_remove("HYPERWAVE_MAX_TERMS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data_rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect()
}

#[test]
fn eval_lowest_weight() {
    let o = hyperwave(&["eval", "--series", "dplus", "--k", "0", "--m", "1", "--tau", "0", "--phi", "0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let s = stdout(&o);
    assert_eq!(s.lines().next().unwrap(), "tau,phi,re,im,abs");
    let rows = data_rows(&s);
    assert_eq!(rows.len(), 1);
    assert!((rows[0][2] - 0.2250791).abs() < 1e-7);
    assert_eq!(rows[0][3], 0.0);
}

#[test]
fn eval_principal_half_weight() {
    let o = hyperwave(&["eval", "--series", "principal", "--seq", "1", "--lambda", "1", "--m-half", "1", "--tau", "0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = data_rows(&stdout(&o));
    assert!((rows[0][2] - 0.2250791).abs() < 1e-7);
}

#[test]
fn eval_newclass_constant() {
    let o = hyperwave(&[
        "eval", "--series", "newclass", "--k", "0", "--alpha", "1", "--beta", "0", "--tau", "2", "--phi", "1",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = data_rows(&stdout(&o));
    assert_eq!((rows[0][2], rows[0][3]), (1.0, 0.0));
}

#[test]
fn eval_rows_are_tau_major_and_match_the_library() {
    let o = hyperwave(&[
        "eval", "--series", "dplus", "--k", "1/2", "--m", "5/2", "--tau-range", "-1:1:5", "--phi", "0,0.5,2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = data_rows(&stdout(&o));
    assert_eq!(rows.len(), 15);
    let spec: SeriesSpec = DiscreteSpec::dplus(0.5, 2.5).unwrap().into();
    let opts = EvalOptions::default();
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r[0], [-1.0, -0.5, 0.0, 0.5, 1.0][i / 3]);
        assert_eq!(r[1], [0.0, 0.5, 2.0][i % 3]);
        let v = spec.evaluate(r[0], r[1], &opts).unwrap();
        assert_eq!((r[2], r[3]), (v.re, v.im));
    }
}

#[test]
fn eval_json_carries_the_spec() {
    let o = hyperwave(&["eval", "--series", "supplementary", "--gamma", "0.25", "--parity", "even", "--m", "0", "--tau", "0,2", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["metadata"]["spec"]["kind"], "supplementary");
    assert_eq!(v["metadata"]["spec"]["gamma"], 0.25);
    assert!(v["metadata"].get("version").is_none());
    assert_eq!(v["data"].as_array().unwrap().len(), 2);
    assert_eq!(v["data"][0]["re"], 1.0);
}

#[test]
fn output_is_deterministic() {
    let args = ["eval", "--series", "principal", "--seq", "2", "--lambda", "0.7", "--m", "3/2", "--tau-range", "-4:4:33", "--phi-range", "0:3:4"];
    let a = hyperwave(&args);
    let b = hyperwave(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let mut with = args.to_vec();
    with.push("--with-version");
    let v = stdout(&hyperwave(&with));
    assert!(v.starts_with(&format!("# hyperwave {}\n", env!("CARGO_PKG_VERSION"))));
}

#[test]
fn validation_errors_exit_2_and_name_the_constraint() {
    let o = hyperwave(&["eval", "--series", "dplus", "--k", "1", "--m", "1", "--tau", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("D+ requires m >= k+1"), "{}", stderr(&o));

    let o = hyperwave(&["eval", "--series", "dminus", "--k", "0", "--m", "1/2", "--tau", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("m - k must be an integer"), "{}", stderr(&o));

    let o = hyperwave(&["eval", "--series", "supplementary", "--gamma", "0.7", "--parity", "odd", "--m", "0", "--tau", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("0 < gamma < 1/2"), "{}", stderr(&o));

    let o = hyperwave(&["eval", "--series", "principal", "--lambda", "1", "--m", "1/2", "--tau", "0"]);
    assert_eq!(o.status.code(), Some(2));

    for bad in [["--tau-range", "0:1:0"], ["--tau-range", "0:inf:3"], ["--tau", "nan"]] {
        let mut args = vec!["eval", "--series", "dplus", "--k", "0", "--m", "1"];
        args.extend(bad);
        assert_eq!(hyperwave(&args).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn max_terms_from_the_environment() {
    let args = ["eval", "--series", "principal", "--parity", "even", "--lambda", "1", "--m", "2", "--tau", "0.3"];
    let o = Command::new(env!("CARGO_BIN_EXE_hyperwave")).args(args).env("HYPERWAVE_MAX_TERMS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("max_terms"));
    let o = Command::new(env!("CARGO_BIN_EXE_hyperwave")).args(args).env("HYPERWAVE_MAX_TERMS", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("did not converge"), "{}", stderr(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_hyperwave")).args(args).env("HYPERWAVE_MAX_TERMS", "5000").output().unwrap();
    assert!(o.status.success());
}

#[test]
fn table_long_format_shape_and_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dplus.csv");
    let p = path.to_str().unwrap();
    let o = hyperwave(&["table", "--series", "dplus", "--k", "0", "--m-range", "1:4", "--tau-range", "-3:3:121", "--phi", "0", "--output", p]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "k,m,tau,phi,re,im,abs");
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 4 * 121);

    // each row equals `eval` at the same point, byte for byte
    for m in 1..=4 {
        let m_s = m.to_string();
        let e = hyperwave(&["eval", "--series", "dplus", "--k", "0", "--m", &m_s, "--tau-range", "-3:3:121", "--phi", "0"]);
        let eval_rows: Vec<String> = stdout(&e).lines().skip(1).map(|l| format!("0,{m},{l}")).collect();
        assert_eq!(&body[(m - 1) * 121..m * 121], eval_rows.as_slice());
    }
}

#[test]
fn table_json_round_trips_and_split_writes_one_file_each() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nc.json");
    let o = hyperwave(&[
        "table", "--series", "newclass", "--k-range", "0:3", "--tau", "-1,0.25,2", "--format", "json", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let functions = v["functions"].as_array().unwrap();
    assert_eq!(functions.len(), 4);
    for (k, f) in functions.iter().enumerate() {
        assert_eq!(f["metadata"]["spec"]["k"], k);
        let spec: SeriesSpec = serde_json::from_value(f["metadata"]["spec"].clone()).unwrap();
        for row in f["data"].as_array().unwrap() {
            let val = spec.evaluate(row["tau"].as_f64().unwrap(), row["phi"].as_f64().unwrap(), &EvalOptions::default()).unwrap();
            assert_eq!(row["re"].as_f64().unwrap(), val.re);
            assert_eq!(row["im"].as_f64().unwrap(), val.im);
        }
    }

    let out = dir.path().join("split");
    let o = hyperwave(&[
        "table", "--series", "principal", "--seq", "1", "--lambda", "1", "--m-range", "1/2:7/2", "--tau", "0,1",
        "--split", "--output", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let mut names: Vec<String> = fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 4);
    for n in &names {
        let t = fs::read_to_string(out.join(n)).unwrap();
        assert_eq!(t.lines().count(), 3, "{n}");
    }
}

#[test]
fn table_io_error_names_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("t.csv");
    let p = path.to_str().unwrap();
    let o = hyperwave(&["table", "--series", "dplus", "--k", "0", "--m-range", "1:2", "--tau", "0", "--output", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(p), "{}", stderr(&o));
}

#[test]
fn verify_numerics_passes() {
    let o = hyperwave(&["verify", "--suite", "numerics"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn verify_discrete_with_looser_eigen_tolerance() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = hyperwave(&["verify", "--suite", "discrete", "--tol-eigen", "1e-3", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["tolerances"]["eigen"], 1e-3);
    assert_eq!(v["exit_code"], 0);
    let total = v["summary"]["total"].as_u64().unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len() as u64, total);
    assert_eq!(v["summary"]["passed"].as_u64().unwrap(), total);
}

#[test]
fn verify_failures_exit_1() {
    let o = hyperwave(&["verify", "--suite", "numerics", "--tol-hyp2f1", "1e-300", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exit_code"], 1);
    assert!(v["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn verify_configuration_errors_exit_2() {
    assert_eq!(hyperwave(&["verify", "--suite", "everything"]).status.code(), Some(2));
    assert_eq!(hyperwave(&["verify", "--tol-eigen", "-1"]).status.code(), Some(2));
    assert_eq!(hyperwave(&["verify", "--tol-eigen", "abc"]).status.code(), Some(2));
}
