use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use wba_core::algebra::{jm_element, AlgebraElement};
use wba_core::arith::parse_scalar;
use wba_core::diagram::{Generator, Shape};

const GOLDEN: &str = "L+1,1;L+2,1;L-2,1;L-1,1";

fn wba(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wba"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden() -> AlgebraElement {
    let shape = Shape::new(2, 2);
    let g = |x| AlgebraElement::generator(shape, x).unwrap();
    let left = &AlgebraElement::one(shape) - &g(Generator::S(1));
    let middle =
        &(&(&g(Generator::D) * &g(Generator::S(1))) * &g(Generator::S(3))) * &g(Generator::D);
    (&(&left * &middle) * &left).scale(&parse_scalar("1/(2*d*(d-1))").unwrap())
}

#[test]
fn tableau_count() {
    let o = wba(&["tableaux", "2", "2", "--count"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "10");
    let o = wba(&["tableaux", "2", "2", "--final", "[]|[]", "--count"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn golden_idempotent_with_certification() {
    for method in ["first", "second", "interp"] {
        let o = wba(&[
            "idempotent",
            "2",
            "2",
            "--tableau",
            GOLDEN,
            "--method",
            method,
            "--check",
        ]);
        assert!(o.status.success(), "{method}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["certification"]["passed"], Value::Bool(true));
        let e = AlgebraElement::from_json_str(&v["element"].to_string()).unwrap();
        assert_eq!(e, golden(), "{method}");
    }
}

#[test]
fn mirror_variant_and_custom_h() {
    let o = wba(&[
        "idempotent",
        "2",
        "2",
        "--tableau",
        GOLDEN,
        "--method",
        "second",
        "--variant",
        "mirror",
        "--h",
        "5*d-7/2",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["variant"], "mirror");
    let e = AlgebraElement::from_json_str(&v["element"].to_string()).unwrap();
    assert_eq!(e, golden());
}

#[test]
fn bratteli_dot_has_thirteen_nodes() {
    let o = wba(&["bratteli", "2", "2", "--format", "dot"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let nodes = text
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains("->"))
        .count();
    assert_eq!(nodes, 13);
    assert!(text.contains("label=\"d\""));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "idempotent",
        "2",
        "1",
        "--tableau",
        "L+1,1;L+1,2;L-1,2",
        "--check",
    ];
    assert_eq!(wba(&args).stdout, wba(&args).stdout);
}

#[test]
fn mul_matches_in_process_product() {
    let shape = Shape::new(2, 2);
    let dir = std::env::temp_dir().join(format!("wba-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("x3.json");
    let o = wba(&["jm", "2", "2", "3"]);
    std::fs::write(&a, &o.stdout).unwrap();
    let x4 = jm_element(shape, 4).unwrap();

    let mut child = Command::new(env!("CARGO_BIN_EXE_wba"))
        .args(["mul", a.to_str().unwrap(), "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(x4.to_json_string().as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let product = AlgebraElement::from_json_str(&stdout(&out)).unwrap();
    assert_eq!(product, &jm_element(shape, 3).unwrap() * &x4);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(wba(&["tableaux", "2"]).status.code(), Some(2));
    let o = wba(&["idempotent", "1", "1", "--tableau", "L+1,1;L+1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "IllegalMove");
    assert_eq!(
        wba(&["verify", "2", "2", "--suite", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn computation_failures_exit_one() {
    let o = wba(&[
        "idempotent",
        "1",
        "1",
        "--tableau",
        "L+1,1;L-1,1",
        "--delta-rational",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(err["error"]["kind"], "Unsupported");
    // h = 0 makes a modified factor singular at the last step
    let o = wba(&[
        "idempotent",
        "1",
        "1",
        "--tableau",
        "L+1,1;L-1,1",
        "--method",
        "second",
        "--h",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(err["error"]["kind"], "NonGenericH");
}

#[test]
fn specialization_at_semisimple_delta() {
    let o = wba(&[
        "idempotent",
        "1",
        "1",
        "--tableau",
        "L+1,1;L-1,1",
        "--delta-rational",
        "2",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = v["specialization"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["coeff"], "1/2");
}

#[test]
fn verify_suites_pass_and_honour_seed() {
    let o = wba(&["verify", "1", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = Command::new(env!("CARGO_BIN_EXE_wba"))
        .args(["verify", "2", "1", "--suite", "yang-baxter", "--json"])
        .env("WBA_SEED", "99")
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 99);
    assert_eq!(v["passed"], true);
}
