use std::process::{Command, Output};

use serde_json::Value;

fn pfl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfl")).args(args).env_remove("PFL_PRECISION_BITS").output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn dec(v: &Value) -> f64 {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn pisot_examples() {
    let v = json(&pfl(&["pisot", "x^2-x-1"]));
    assert_eq!(v["is_pisot"], true);
    assert!((dec(&v["theta"][0]) - 1.6180339887).abs() < 1e-9);
    let v = json(&pfl(&["pisot", "x^2-3"]));
    assert_eq!(v["is_pisot"], false);
    assert!(dec(&v["max_conjugate_modulus"][0]) > 1.0);
    assert_eq!(json(&pfl(&["pisot", "[-5,1]"]))["is_pisot"], true);
}

#[test]
fn height_of_half() {
    let v = json(&pfl(&["height", "1/2"]));
    assert_eq!(v["exact"], "2");
    assert_eq!(v["multiplicative"], serde_json::json!(["2", "2"]));
    assert_eq!(v["value"], "1/2");
}

#[test]
fn dependence_and_minkowski() {
    let v = json(&pfl(&["mult-dep", "1/4", "1/8", "--bound", "10"]));
    assert_eq!(v["exponents"], serde_json::json!([3, -2]));
    assert_eq!(json(&pfl(&["mult-dep", "1/5", "1/7", "--bound", "50"]))["dependent"], false);
    // 1/phi = phi - 1 and 1/phi^2 = 2 - phi
    let v = json(&pfl(&["mult-dep", "x^2-x-1@[-1,1]", "x^2-x-1@[2,-1]", "--bound", "10"]));
    assert_eq!(v["exponents"], serde_json::json!([2, -1]));
    let out = pfl(&["minkowski", "1/4", "1/8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DependentInputs"));
}

#[test]
fn exit_codes() {
    assert_eq!(pfl(&["pisot", "x^2+"]).status.code(), Some(2));
    assert_eq!(pfl(&["nonsense"]).status.code(), Some(2));
    assert_eq!(pfl(&["height", "1/0"]).status.code(), Some(2));
    assert_eq!(pfl(&["erdos", "--theta", "x^2-3"]).status.code(), Some(1));
    assert_eq!(pfl(&["height", "0"]).status.code(), Some(0));
}

#[test]
fn geval_sinc_point() {
    let v = json(&pfl(&["geval", "--lambda", "1/2", "--u", "3/10"]));
    let (lo, hi) = (dec(&v["value"][0]), dec(&v["value"][1]));
    assert!(lo <= 0.5045511524271047 && 0.5045511524271046 <= hi);
}

#[test]
fn approx_certificate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = pfl(&[
        "approx", "--theta1", "x^2-x-1", "--u1", "pow:x^2-x-1:100", "--theta2", "x-5", "--u2", "pow:5:100", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["certified"], true);
    assert_eq!(v["alpha"], serde_json::json!(["1", "0"]));
    for key in ["err_alpha", "err_beta", "H_alpha", "H_beta"] {
        let lo: f64 = dec(&v[key][0]);
        let hi: f64 = dec(&v[key][1]);
        assert!(lo <= hi);
    }
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn roth_demo_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = pfl(&[
            "roth-demo", "--lambda1", "1/5", "--lambda2", "1/7", "--f1", "identity", "--f2", "identity", "--useq",
            "pow:5:4..12", "--out", p.to_str().unwrap(),
        ]);
        let v = json(&out);
        assert_eq!(v["rows"], 9);
        assert_eq!(v["monotone_violation"], Value::Null);
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    assert!(text.starts_with("n,u,e1,e2,k,ell,t_num,t_den,H_t,arch_err_hi,S_product,kappa_lo,kappa_hi,partition,status\n"));
    assert!(text.contains("\n4,625,4,3,1,1,625,637,637,"));
}

#[test]
fn scan_writes_csv_and_maxima() {
    let dir = tempfile::tempdir().unwrap();
    let rows = dir.path().join("rows.csv");
    let max = dir.path().join("max.csv");
    let out = pfl(&[
        "scan", "--lambda1", "1/5", "--lambda2", "1/7", "--grid", "decades:1..2:2", "--out", rows.to_str().unwrap(),
        "--maxima", max.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&rows).unwrap();
    assert!(text.starts_with("u,g1_lo,g1_hi,g2_lo,g2_hi,prod_lo,prod_hi\n"));
    assert_eq!(text.lines().count(), 1 + 10);
    let m = std::fs::read_to_string(&max).unwrap();
    assert_eq!(m.lines().count(), 3);
}

#[test]
fn precision_sources() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("pfl.toml");
    std::fs::write(&cfg, "N = 4\nc2 = 2\n").unwrap();
    let args = ["approx", "--theta1", "x^2-x-1", "--u1", "pow:x^2-x-1:100", "--theta2", "x-5", "--u2", "pow:5:100"];
    let mut with_cfg = vec!["--config", cfg.to_str().unwrap()];
    with_cfg.extend(args);
    assert_eq!(json(&pfl(&with_cfg))["N"], 4);
    with_cfg.extend(["--N", "3"]);
    assert_eq!(json(&pfl(&with_cfg))["N"], 3);
    let out = Command::new(env!("CARGO_BIN_EXE_pfl")).args(["height", "1/3"]).env("PFL_PRECISION_BITS", "8").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_pfl")).args(["height", "1/3"]).env("PFL_PRECISION_BITS", "512").output().unwrap();
    assert!(out.status.success());
}
