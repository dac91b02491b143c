use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metaplectic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_metaplectic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("valid JSON")
}

fn tmp(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn hilbert_examples() {
    let o = run(&["hilbert", "pi", "pi", "--p", "3"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "-1\n"));
    let o = run(&["hilbert", "1", "pi", "--p", "5"]);
    assert_eq!(stdout(&o), "1\n");
    let o = run(&["hilbert", "u", "pi", "--p", "3", "--verify"]);
    assert_eq!(stdout(&o), "-1\noracle: agree\n");
    let o = run(&["hilbert", "u", "pi", "--p", "3", "--verify", "--emit", "json"]);
    assert_eq!(stdout(&o), "{\"x\":\"u\",\"y\":\"pi\",\"p\":3,\"f\":1,\"symbol\":-1,\"oracle\":-1}\n");
    let o = run(&["hilbert", "w", "pi"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn satake_examples() {
    let o = run(&["satake", "--i", "2", "--n", "2"]);
    assert_eq!(stdout(&o), "{\"terms\":[{\"mu\":[-2,-2],\"c\":1}]}\n");
    let o = run(&["satake", "--i", "1", "--n", "2", "--emit", "json"]);
    let mut cs: Vec<i64> = json(&o)["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["c"].as_i64().unwrap())
        .collect();
    cs.sort_unstable();
    assert_eq!(cs, vec![-1, 1]);
    let o = run(&["satake", "--i", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn satake_with_oracle() {
    let o = run(&["satake", "--i", "1", "--n", "2", "--oracle", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let plain = stdout(&run(&["satake", "--i", "1", "--n", "2", "--p", "3"]));
    assert_eq!(text, format!("{plain}oracle: agree\n"));
    // too shallow to stabilize: a verification failure, not a usage error
    let o = run(&["satake", "--i", "2", "--n", "2", "--oracle", "--depth", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_rows() {
    let o = run(&["oracle", "satake", "--group", "sp4", "--i", "2", "--p", "3", "--depth", "4", "--emit", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["stabilized"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let raw = |mu: Value| rows.iter().find(|r| r["mu"] == mu).unwrap()["raw"].as_u64().unwrap();
    assert_eq!(raw(serde_json::json!([-2, -2])), 1);
    assert_eq!(raw(serde_json::json!([0, 0])), 1188);
    for r in rows {
        assert_eq!(r["mod_p"].as_u64().unwrap(), r["raw"].as_u64().unwrap() % 3);
    }
    let o = run(&["oracle", "satake", "--group", "sl2", "--i", "1", "--f", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "--trivial", "--n", "3", "--emit", "json"]);
    let v = json(&o);
    assert_eq!(v["triples"].as_array().unwrap().len(), 4);
    assert_eq!(v["length"], 4);
    assert_eq!(v["irreducible"], false);

    let generic = r#"{"torus_character":{"xi":[{"unit":1,"pi":0},{"unit":0,"pi":1},{"unit":0,"pi":0}],"psi":"1"}}"#;
    let v = json(&run_stdin(&["classify", "--emit", "json"], generic));
    assert_eq!(v["triples"].as_array().unwrap().len(), 1);
    assert_eq!(v["irreducible"], true);

    let path = tmp("siegel.json", r#"{"levi":[],"flags":{"1":true},"Q":[1],"label":"rho"}"#);
    let o = run(&["classify", "--siegel", "--input", path.to_str().unwrap(), "--emit", "json"]);
    let v = json(&o);
    assert_eq!(v["triples"].as_array().unwrap().len(), 1);
    assert_eq!(v["triples"][0]["sigma"]["label"], "rho");

    let o = run(&["classify", "--trivial", "--n", "2", "--emit", "csv"]);
    assert_eq!(
        stdout(&o),
        "P,Q,levi,flags,torus_character,label\n,,,1=1 2=0,0:0 0:0 psi=1,trivial\n,1,,1=1 2=0,0:0 0:0 psi=1,trivial\n"
    );
}

#[test]
fn schema_violations_exit_2() {
    for bad in ["[]", "{\"levi\":[1,\"x\"]}", "{\"flag\":{}}", "{"] {
        let o = run_stdin(&["classify"], bad);
        assert_eq!(o.status.code(), Some(2), "{bad}");
    }
    let o = run(&["satake", "--i", "1", "--emit", "csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_and_precedence() {
    let path = tmp("run.conf", "# run\np = 5\nn = 1\ndepth = 3\n");
    let p = path.to_str().unwrap();
    let o = run(&["hilbert", "u", "u", "--config", p, "--emit", "json"]);
    assert_eq!(json(&o)["p"], 5);
    let o = run(&["hilbert", "u", "u", "--config", p, "--p", "7", "--emit", "json"]);
    assert_eq!(json(&o)["p"], 7);
    let o = run(&["oracle", "satake", "--group", "sl2", "--i", "1", "--config", p, "--emit", "json"]);
    assert_eq!(json(&o)["depth"], 3);
    let bad = tmp("bad.conf", "p = 4\n");
    assert_eq!(run(&["hilbert", "1", "1", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["hilbert", "1", "1", "--order", "5"]).status.code(), Some(2));
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &["cover", "--n", "3", "--lambda", "1,-1,2", "--emit", "json"][..],
        &["aset", "--i", "1", "--n", "3", "--emit", "json"],
        &["weights", "--nu", "1,0", "--emit", "json"],
        &["selftest", "--seed", "5", "--emit", "json"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
