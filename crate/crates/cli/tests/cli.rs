use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_colorful-assoc");

fn spec(dir: &Path, name: &str, nodes: &[&str], edges: &[(&str, &str)], palette: &[&str]) -> PathBuf {
    let v = serde_json::json!({"nodes": nodes, "edges": edges, "palette": palette});
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("COLORFUL_ASSOC_MAX_FACES")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

struct Specs {
    _dir: tempfile::TempDir,
    root: PathBuf,
    p3: PathBuf,
    c3: PathBuf,
    k4: PathBuf,
}

fn specs() -> Specs {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().to_path_buf();
    let p3 = spec(
        &root,
        "p3",
        &["a", "b", "c"],
        &[("a", "b"), ("b", "c")],
        &["red", "blue"],
    );
    let c3 = spec(
        &root,
        "c3",
        &["a", "b", "c"],
        &[("a", "b"), ("b", "c"), ("a", "c")],
        &["red", "blue"],
    );
    let k4_edges = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")];
    let k4 = spec(&root, "k4", &["a", "b", "c", "d"], &k4_edges, &["r", "g", "b"]);
    Specs {
        _dir: dir,
        root,
        p3,
        c3,
        k4,
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn tubes_are_classified() {
    let s = specs();
    let count = |path: &Path| {
        let o = run(&["tubes", p(path), "--format", "json"]);
        assert!(o.status.success());
        let v = json(&o);
        let tubes = v["tubes"].as_array().unwrap().clone();
        let inner = tubes.iter().filter(|t| t["kind"] == "inner").count();
        (tubes.len(), inner)
    };
    assert_eq!(count(&s.p3), (5, 5));
    assert_eq!(count(&s.c3), (6, 3));
    assert_eq!(count(&s.k4), (14, 4));
}

#[test]
fn build_summaries() {
    let s = specs();
    let o = run(&["build", p(&s.p3)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "component 0: root chain [], f-vector (10,10,1)\n");
    let o = run(&["build", p(&s.c3), "--format", "json"]);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 2);
    for c in v.as_array().unwrap() {
        assert_eq!(c["f_vector"], serde_json::json!([6, 6, 1]));
    }
    let c4 = spec(
        &s.root,
        "c4",
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")],
        &["r", "g", "b"],
    );
    assert_eq!(stdout(&run(&["build", p(&c4)])).lines().count(), 3);
}

#[test]
fn dumps_verify_and_are_deterministic() {
    let s = specs();
    let out = s.root.join("dumps");
    let o = run(&["build", p(&s.c3), "--out", p(&out)]);
    assert!(o.status.success());
    let first = std::fs::read_to_string(out.join("component-1.json")).unwrap();
    let again = s.root.join("again");
    run(&["build", p(&s.c3), "--out", p(&again)]);
    assert_eq!(first, std::fs::read_to_string(again.join("component-1.json")).unwrap());

    let o = run(&["verify", p(&out.join("component-1.json"))]);
    assert!(o.status.success());
    assert_eq!(json(&o)["components"][0]["component"], 1);

    // Dropping one covering pair must fail verification with exit code 4.
    let mut v: Value = serde_json::from_str(&first).unwrap();
    v["covers"].as_array_mut().unwrap().remove(3);
    let broken = s.root.join("broken.json");
    std::fs::write(&broken, v.to_string()).unwrap();
    let o = run(&["verify", p(&broken)]);
    assert_eq!(o.status.code(), Some(4));
    assert!(!json(&o)["components"][0]["axioms"]["witnesses"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn verify_reports_surfaces() {
    let s = specs();
    let p4 = spec(
        &s.root,
        "p4",
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("c", "d")],
        &["r", "g", "b"],
    );
    let o = run(&["verify", p(&p4)]);
    assert!(o.status.success());
    assert_eq!(json(&o)["components"][0]["surface"]["euler"], -6);

    let claw = spec(
        &s.root,
        "claw",
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("a", "d")],
        &["x", "x", "y"],
    );
    let v = json(&run(&["verify", p(&claw)]));
    assert_eq!(
        v["components"][0]["surface"]["census"],
        serde_json::json!({"4": 9, "5": 6, "6": 3, "10": 6})
    );

    let g4 = spec(&s.root, "g4", &["a", "b", "c", "d"], &[], &["r", "g", "b"]);
    let v = json(&run(&["verify", p(&g4)]));
    let surf = &v["components"][0]["surface"];
    assert_eq!(surf["census"], serde_json::json!({"6": 12}));
    assert_eq!(surf["euler"], 0);
}

#[test]
fn oracle_verdicts() {
    let s = specs();
    let v = json(&run(&["oracle", p(&s.c3)]));
    assert_eq!(v["monochrome_ok"], true);
    assert_eq!(v["exchange_ok"], true);
    assert_eq!(v["product_ok"], true);
    assert!(v["regularity"].as_array().unwrap().iter().all(|r| r["regular"] == true));

    let p4 = spec(
        &s.root,
        "p4",
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("c", "d")],
        &["r", "g", "b"],
    );
    let o = run(&["oracle", p(&p4)]);
    assert!(o.status.success());
    assert_eq!(json(&o)["regularity"][0]["regular"], false);

    let two = spec(
        &s.root,
        "two",
        &["a", "b", "x", "y"],
        &[("a", "b"), ("x", "y")],
        &["r", "g", "b"],
    );
    let v = json(&run(&["oracle", p(&two)]));
    assert_eq!(v["product_ok"], true);
    assert_eq!(v["regularity"].as_array().unwrap().len(), 6);
}

#[test]
fn dot_exports() {
    let s = specs();
    let o = run(&["export", p(&s.p3), "--skeleton"]);
    let text = stdout(&o);
    assert_eq!(text.matches("[label=").count(), 10);
    assert_eq!(text.matches(" -- ").count(), 10);
    assert!(text.contains("{a}:blue {a,b}:red"));

    let o = run(&["export", p(&s.p3), "--skeleton", "--palette", "x,x"]);
    let text = stdout(&o);
    assert_eq!(text.matches("[label=").count(), 5);
    assert_eq!(text.matches(" -- ").count(), 5);

    let g3 = spec(&s.root, "g3", &["a", "b", "c"], &[], &["r", "g"]);
    let text = stdout(&run(&["export", p(&g3), "--hasse"]));
    assert_eq!(text.matches("[label=").count(), 14);
    assert_eq!(text, stdout(&run(&["export", p(&g3), "--hasse"])));
}

#[test]
fn exit_codes() {
    let s = specs();
    let bad = s.root.join("bad.json");
    std::fs::write(
        &bad,
        "{\"nodes\": [\"a\"], \"edges\": [[\"a\", \"z\"]], \"palette\": []}",
    )
    .unwrap();
    assert_eq!(run(&["build", p(&bad)]).status.code(), Some(2));
    assert_eq!(run(&["build", p(&s.p3), "--palette", "r,g,b"]).status.code(), Some(2));
    assert_eq!(run(&["build", p(&s.p3), "--component", "7"]).status.code(), Some(2));
    assert_eq!(run(&["build", p(&s.p3), "--max-faces", "5"]).status.code(), Some(3));
    let o = Command::new(BIN)
        .args(["build", p(&s.p3)])
        .env("COLORFUL_ASSOC_MAX_FACES", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
