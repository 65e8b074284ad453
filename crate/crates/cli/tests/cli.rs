use std::process::{Command, Output};

fn kabelian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kabelian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_prints_prefix() {
    let o = kabelian(&["generate", "--word", "thue-morse", "--length", "16"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0110100110010110\n");
    let o = kabelian(&["generate", "--word", "fixed-point:0=01,1=00;seed=0", "--length", "16"]);
    assert_eq!(stdout(&o), "0100010101000100\n");
    let o = kabelian(&["generate", "--word", "fibonacci", "--length", "0"]);
    assert_eq!(stdout(&o), "\n");
}

#[test]
fn complexity_csv_rows() {
    let o = kabelian(&["complexity", "--word", "thue-morse", "--k", "2", "--n-max", "20", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,value,converged"));
    let values: Vec<usize> = lines
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            assert_eq!(cols[2], "true");
            cols[1].parse().unwrap()
        })
        .collect();
    assert_eq!(values, [2, 4, 6, 8, 6, 8, 10, 8, 6, 8, 8, 10, 10, 10, 8, 8, 6, 8, 10, 10]);
    assert!(text.ends_with('\n') && !text.contains(" \n"));

    let again = kabelian(&["complexity", "--word", "thue-morse", "--k", "2", "--n-max", "20", "--format", "csv"]);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn complexity_json_shape() {
    let o = kabelian(&["complexity", "--word", "period-doubling", "--k", "inf", "--n-max", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["spec"], "period-doubling");
    assert_eq!(v["k"], "inf");
    assert_eq!(v["horizon"], 3);
    assert_eq!(v["values"][0], serde_json::json!({"n": 1, "value": 2, "converged": true}));
}

#[test]
fn unconverged_profile_exits_3() {
    let o = kabelian(&[
        "complexity", "--word", "champernowne", "--k", "inf", "--n-max", "40",
        "--window-start", "64", "--window-cap", "128",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains(",false"));
}

#[test]
fn equivalence_verdicts() {
    let o = kabelian(&["equiv", "--k", "2", "--u", "0101", "--v", "0110"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "not equivalent\n"));
    let o = kabelian(&["equiv", "--k", "1", "--u", "0101", "--v", "1010"]);
    assert_eq!(stdout(&o), "equivalent\n");
    let o = kabelian(&["equiv", "--k", "2", "--u", "0110", "--v", "0x10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_statuses() {
    let o = kabelian(&["verify", "phi-identity", "--n-max", "16"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("phi-identity: pass"));

    let o = kabelian(&["verify", "sturmian-profile", "--word", "thue-morse", "--k-max", "2", "--n-max", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(!v["witnesses"].as_array().unwrap().is_empty());

    let o = kabelian(&["verify", "tm-sandwich", "--n-max", "100", "--window-start", "64", "--window-cap", "128"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_with_overrides() {
    let o = kabelian(&["verify", "u-bounds", "--blocks", "2,3", "--j-max", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = kabelian(&["verify", "uniform-scaling", "--word", "period-doubling", "--k", "2", "--n-max", "16", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["fitted_constants"]["C"].as_f64().unwrap() >= 1.0);
    let o = kabelian(&["verify", "uniform-scaling", "--word", "fibonacci"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn witness_search() {
    let o = kabelian(&["witness", "--word", "ult-periodic:pre=;per=0110", "--k-max", "3", "--n-max", "16"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("k=1 n=4"));
    let o = kabelian(&["witness", "--word", "fibonacci", "--k-max", "3", "--n-max", "64", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"result\":\"none\"}\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["generate", "--word", "bogus", "--length", "3"][..],
        &["complexity", "--word", "thue-morse", "--k", "0", "--n-max", "3"],
        &["verify", "no-such-check"],
        &["frobnicate"],
        &[],
    ] {
        let o = kabelian(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn run_in_process() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = kabelian_cli::run(["kabelian", "generate", "--word", "champernowne", "--length", "26"], &mut out, &mut err);
    assert_eq!(code, kabelian_cli::EXIT_PASS);
    assert_eq!(out, b"01101110010111011110001001\n");
    let code = kabelian_cli::run(["kabelian", "--help"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert!(err.is_empty());
}
