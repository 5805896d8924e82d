use std::path::PathBuf;
use std::process::{Command, Output};

fn ptrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptrig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Compare against tests/golden/<name>; PTRIG_BLESS=1 rewrites the file.
fn golden(name: &str, args: &[&str]) {
    let out = ptrig(args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    let actual = stdout(&out);
    if std::env::var_os("PTRIG_BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn golden_table_p3() {
    golden("table_p3.txt", &["table", "--p", "3"]);
    golden("table_p3.csv", &["table", "--p", "3", "--format", "csv"]);
    golden("table_p3.json", &["table", "--p", "3", "--format", "json"]);
}

#[test]
fn golden_table_p2() {
    golden("table_p2.csv", &["table", "--p", "2", "--grid", "0,0.5,1", "--format", "csv"]);
}

#[test]
fn golden_single_row() {
    golden("table_p3_x03.txt", &["table", "--p", "3", "--grid", "0.3"]);
}

#[test]
fn golden_constants() {
    golden("constants.csv", &["constants", "--p", "2,3", "--format", "csv"]);
    golden("constants.json", &["constants", "--p", "2,3", "--format", "json", "--precision", "12"]);
}

#[test]
fn golden_eval() {
    golden(
        "eval_arcsin_p3.csv",
        &["eval", "arcsin_p", "--p", "3", "--x", "0,0.5,0.99,1", "--format", "csv", "--precision", "10"],
    );
}

#[test]
fn golden_check() {
    golden("check_thm1.1.1.json", &["check", "--ids", "thm1.1.1", "--seed", "7", "--format", "json"]);
}

#[test]
fn reference_table_rows() {
    let out = stdout(&ptrig(&["table", "--p", "3"]));
    let rows = [
        "0.00000\t0.00000\t1.20920\t0.00000\t0.00000\t0.00000",
        "0.25000\t0.25033\t1.17782\t0.24903\t0.24968\t0.25099",
        "0.50000\t0.50547\t1.07974\t0.48540\t0.49502\t0.51685",
        "0.75000\t0.78196\t0.88660\t0.68570\t0.72710\t0.85661",
        "1.00000\t1.20920\t0.00000\t0.83565\t0.93771\t∞",
        "0.00000\t0.00000\t1.00000\t0.00000\t0.00000\t0.00000",
        "0.25000\t0.24967\t0.99478\t0.25098\t0.25033\t0.24903",
        "0.50000\t0.49476\t0.95788\t0.51652\t0.50518\t0.48517",
        "0.75000\t0.72304\t0.85362\t0.84704\t0.77588\t0.68283",
        "1.00000\t0.91139\t0.62399\t1.46058\t1.08009\t0.82304",
    ];
    for line in rows {
        assert!(out.lines().any(|l| l == line), "missing {line:?}");
    }
}

#[test]
fn infinity_encodings() {
    let csv = stdout(&ptrig(&["table", "--p", "3", "--grid", "1", "--format", "csv"]));
    let row = csv.lines().nth(1).unwrap();
    assert_eq!(row.split(',').nth(5), Some(""));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&ptrig(&["table", "--p", "3", "--grid", "1", "--format", "json"]))).unwrap();
    assert!(json["rows"][0]["artanh_p"].is_null());
    assert_eq!(json["rows"][0]["tan_p"], serde_json::json!(1.46058));
}

#[test]
fn eval_examples() {
    let out = ptrig(&["eval", "arcsin_p", "--p", "3", "--x", "0.5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(",0.50547,"));
    let out = ptrig(&["eval", "sin_p", "--p", "2", "--x", "0", "--format", "csv"]);
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("sin_p,2.00000,0.00000,0.00000,"));
    let out = ptrig(&["eval", "artanh_p", "--p", "3", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("x must be < 1"), "{}", stderr(&out));
}

#[test]
fn classical_constants() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&ptrig(&[
        "constants", "--p", "2", "--format", "json", "--precision", "15",
    ])))
    .unwrap();
    let row = &json["rows"][0];
    let pi = std::f64::consts::PI;
    for (key, want) in [
        ("pi_p", pi),
        ("a_p", pi / 2.0),
        ("b_p", pi / 4.0),
        ("c_p", 2f64.sqrt().ln_1p()),
        ("lambda_1", pi * pi),
    ] {
        assert!((row[key].as_f64().unwrap() - want).abs() < 1e-13, "{key}");
    }
}

#[test]
fn usage_and_domain_errors_exit_2() {
    for args in [
        &["constants", "--p", "1"][..],
        &["check", "--ids", "nosuch"],
        &["verify-eigen", "--p", "0.5"],
        &["eval", "nosuch_p", "--p", "3", "--x", "0.5"],
        &["eval", "sin_p", "--p", "3", "--x", "-1"],
        &["table", "--p", "3", "--grid", "1.5"],
        &["table", "--p", "3", "--precision", "18"],
        &["explore-conjecture", "--x", "1"],
        &["table", "--p", "3", "--config", "/nonexistent/ptrig.toml"],
    ] {
        let out = ptrig(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn check_exit_codes() {
    let out = ptrig(&["check", "--ids", "thm1.1.1", "--seed", "7", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let row = stdout(&out).lines().nth(1).unwrap().to_string();
    assert!(row.starts_with("thm1.1.1,") && row.ends_with(",PASS"), "{row}");
    let out = ptrig(&["check", "--ids", "thm1.1.1.reversed", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json["rows"][0]["violations"].as_u64().unwrap() > 0);
}

#[test]
fn verify_eigen_examples() {
    let out = ptrig(&["verify-eigen", "--p", "2", "--n", "1", "--grid", "4096", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json["rows"][0]["max_rel_residual"].as_f64().unwrap() <= 1e-6);
    let out = ptrig(&["verify-eigen", "--p", "3", "--n", "2", "--grid", "4096"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = ptrig(&["verify-eigen", "--p", "3", "--n", "2", "--tolerance", "1e-6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn explore_never_fails() {
    let out = ptrig(&["explore-conjecture", "--p", "1.5,2,3,5", "--x", "0.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 4);
    let out = ptrig(&["explore-conjecture", "--p", "3", "--x", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn config_file_and_flag_override() {
    let dir = std::env::temp_dir().join(format!("ptrig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("ptrig.toml");
    std::fs::write(&cfg, "seed = 5\n[table]\ngrid = [0.5]\n[check]\nper_free_var = [8, 8, 4, 2]\nrandom_factor = 1\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let out = stdout(&ptrig(&["table", "--p", "3", "--config", cfg, "--format", "csv"]));
    assert_eq!(out.lines().count(), 2);
    let out = stdout(&ptrig(&["table", "--p", "3", "--config", cfg, "--grid", "0.25,0.75", "--format", "csv"]));
    assert_eq!(out.lines().count(), 3);

    let run = |extra: &[&str]| -> serde_json::Value {
        let mut args = vec!["check", "--ids", "thm1.1.1", "--config", cfg, "--format", "json"];
        args.extend_from_slice(extra);
        serde_json::from_str(&stdout(&ptrig(&args))).unwrap()
    };
    let j = run(&[]);
    assert_eq!(j["meta"]["seed"], 5);
    // one free variable: 8 points × 8 exponents, plus as many random points
    assert_eq!(j["rows"][0]["samples"], 128);
    assert_eq!(run(&["--seed", "9"])["meta"]["seed"], 9);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("ptrig-out-{}.csv", std::process::id()));
    let out = ptrig(&["constants", "--p", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("p,pi_p,a_p,b_p,c_p,lambda_1\n3.00000,2.41840,1.20920,0.83565,0.93771,"));
    std::fs::remove_file(&path).ok();
}
