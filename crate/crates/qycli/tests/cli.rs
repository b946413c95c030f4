use std::fs;

use qycli::{run, Report, Status};

fn report(args: &[&str]) -> (i32, Report) {
    let mut argv = vec!["qycli"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

#[test]
fn ybe_example() {
    let (code, r) = report(&["ybe", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r.schema, "qyw/1");
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.result["residual"], 0);
    assert!(r.timing_ms.is_some());
}

#[test]
fn straighten_example() {
    let (_, r) = report(&["straighten", "--algebra", "uqgl:2", "--expr", "t[1,1;0]*t[2,1;0]"]);
    assert_eq!(r.result, "(1/q)*t[2,1;0]*t[1,1;0]");
}

#[test]
fn drinfeld_example() {
    let (_, r) = report(&["drinfeld", "eval-sp", "--p", "1", "--mu", "+q^0"]);
    assert_eq!(r.result["polys"][0], "(1+q u)(1+q^-3 u)");
    assert_eq!(r.result["gauge"][0], "q^-1");
}

#[test]
fn usage_errors_exit_2() {
    for args in [vec!["qycli", "ybe", "--bogus"], vec!["qycli", "frobnicate"], vec!["qycli", "ybe", "--n", "0"]] {
        let out = run(args);
        assert_eq!(out.code, 2);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("error"));
    }
    let out = run(["qycli", "--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("confluence"));
}

#[test]
fn reports_are_reproducible_and_round_trip() {
    let args = ["qycli", "confluence", "--algebra", "uqgl:2", "--trials", "20", "--seed", "7", "--no-timing"];
    let a = run(args);
    let b = run(args);
    assert_eq!(a.stdout, b.stdout);
    let r: Report = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(r.seed, Some(7));
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.to_json_string(), a.stdout);
}

#[test]
fn spiral_and_classify() {
    let (_, r) = report(&["spiral", "gp", "--pair1", "q^2,1", "--pair2", "q^3,q"]);
    assert_eq!(r.result["general_position"], false);
    let (_, r) = report(&["classify", "--kind", "gl2", "--pairs", "q^2,1;q^3,q"]);
    assert_eq!(r.result["irreducible"], false);
    assert_eq!(r.result["drinfeld"]["factored"], "(1+u)(1+q^2 u)(1+q^2 u)(1+q^4 u)");
    let (_, r) = report(&["classify", "--kind", "glN", "--m", "2,1,0"]);
    assert_eq!(r.result["drinfeld"][0]["factored"], "(1+q^2 u)");
    let (_, r) = report(&["classify", "--kind", "sp2", "--pairs", "q,1"]);
    assert_eq!(r.result["symmetric"], true);
    assert_eq!(r.result["drinfeld"]["factored"], "(1+u)(1+q^-2 u)");
    let (code, r) = report(&["classify", "--kind", "sp2n", "--mu", "1", "--mup", "q"]);
    assert_eq!((code, r.status), (0, Status::NotFinite));
}

#[test]
fn module_pipeline_verifies() {
    let dir = std::env::temp_dir().join(format!("qycli-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let f = |n: &str| dir.join(n).display().to_string();
    let (code, r) = report(&["module", "build", "--kind", "gl2", "--alpha", "q", "--beta", "1", "--out", &f("l.json")]);
    assert_eq!((code, r.result["dim"].clone()), (0, 2.into()));
    report(&["module", "eval", "--module", &f("l.json"), "--cap", "4", "--out", &f("e.json")]);
    report(&["module", "tensor", "--a", &f("e.json"), "--b", &f("e.json"), "--out", &f("t.json")]);
    report(&["module", "restrict", "--module", &f("t.json"), "--out", &f("r.json")]);
    report(&["module", "build", "--kind", "uqsp2", "--mu", "1", "--mup", "-q^3", "--out", &f("v.json")]);
    report(&["module", "eval", "--module", &f("v.json"), "--cap", "6", "--out", &f("w.json")]);
    for m in ["l.json", "e.json", "t.json", "r.json", "v.json", "w.json"] {
        let (code, r) = report(&["verify", "--module", &f(m)]);
        assert_eq!((code, r.status), (0, Status::Ok), "{}", m);
    }
    let (_, r) = report(&["classify", "--kind", "sp2n", "--module", &f("w.json")]);
    assert_eq!(r.result["drinfeld"]["polys"][0], "(1+q u)(1+q^-3 u)");
    // a corrupted module fails verification with a witness
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(f("e.json")).unwrap()).unwrap();
    v["actions"]["t[2,1;0]"]["entries"][0][2] = "5".into();
    fs::write(f("bad.json"), v.to_string()).unwrap();
    let (code, r) = report(&["verify", "--module", &f("bad.json")]);
    assert_eq!((code, r.status), (1, Status::Fail));
    assert!(r.witness.unwrap()["relation"].is_string());
    let (code, r) = report(&["module", "build", "--kind", "gl2", "--alpha", "1", "--beta", "q"]);
    assert_eq!((code, r.status), (0, Status::NotFinite));
    fs::remove_dir_all(&dir).unwrap();
}
