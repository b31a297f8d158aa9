use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_k3cr3"))
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&run(&a))).unwrap()
}

#[test]
fn classify_verdicts() {
    assert_eq!(json(&["classify", "--group", "4,4,4,4"])["verdict"], "K3Exceptional");
    assert_eq!(json(&["classify", "--group", "2,2,2,2,2,2"])["verdict"], "ProductType");
    assert_eq!(json(&["classify", "--group", "1"])["verdict"], "ProductType");
    let v = json(&["classify", "--group", "8,8,4,2"]);
    let ws = v["witnesses"].as_array().unwrap();
    assert!(ws.iter().any(|w| w["m"] == 8 && w["h"] == "2,4,8"));
}

#[test]
fn extensions_and_baskets() {
    let v = json(&["extensions", "--sub", "2", "--quot", "4,4,4"]);
    assert_eq!(v["extensions"], serde_json::json!(["2,4,4,4", "4,4,8"]));
    let v = json(&["extensions", "--sub", "1", "--quot", "6"]);
    assert_eq!(v["extensions"], serde_json::json!(["6"]));
    let v = json(&["baskets", "--h0", "1"]);
    assert_eq!(v["count"], 5250);
    assert_eq!(run(&["baskets", "--index", "2"]).status.code(), Some(2));
}

#[test]
fn filter_baskets_reads_json() {
    let dir = std::env::temp_dir().join(format!("k3cr3-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("baskets.json");
    std::fs::write(&input, r#"[[{"r":2,"b":1,"n":4},{"r":3,"b":1,"n":4}], [{"r":3,"b":1,"n":8}], [{"r":2,"b":1,"n":9}]]"#).unwrap();
    let p = input.to_str().unwrap();
    let v = json(&["filter-baskets", "--group", "2,2,2,4", "--input", p]);
    assert_eq!(v["kept"].as_array().unwrap().len(), 2);
    let v = json(&["filter-baskets", "--group", "2,4,8", "--input", p]);
    assert_eq!(v["kept"].as_array().unwrap().len(), 1);
    let v = json(&["filter-baskets", "--group", "2,4,8", "--input", p, "--hypothesis", "general"]);
    assert_eq!(v["kept"].as_array().unwrap().len(), 1);
    assert_eq!(run(&["filter-baskets", "--group", "2,2", "--input", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn reproduce_exit_codes() {
    let d = data_dir();
    let d = d.to_str().unwrap();
    let o = run(&["reproduce", "--target", "prop1_4", "--data-dir", d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 of 20"));
    assert_eq!(run(&["reproduce", "--target", "prop8_1", "--data-dir", d]).status.code(), Some(0));
    assert_eq!(run(&["reproduce", "--target", "lemma6_2", "--data-dir", d]).status.code(), Some(1));
    assert_eq!(run(&["reproduce", "--target", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--group", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reproduce_is_deterministic_and_matches_snapshots() {
    let d = data_dir();
    let d = d.to_str().unwrap();
    for t in ["table6", "table10", "table11", "thm6_3", "appendix", "table2"] {
        let a = run(&["reproduce", "--target", t, "--format", "json", "--data-dir", d]);
        let b = run(&["reproduce", "--target", t, "--format", "json", "--data-dir", d, "--sequential"]);
        assert_eq!(a.stdout, b.stdout, "{t}");
        assert_eq!(a.status.code(), Some(0), "{t}");
        let snap = std::fs::read(data_dir().join("expected").join(format!("{t}.json"))).unwrap();
        assert_eq!(a.stdout, snap, "{t}");
    }
}

#[test]
fn catalog_dump_matches_file() {
    let o = run(&["catalog", "dump"]);
    assert_eq!(o.stdout, std::fs::read(data_dir().join("catalog.json")).unwrap());
}
