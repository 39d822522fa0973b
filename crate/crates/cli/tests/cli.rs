use std::process::{Command, Output};

use serde_json::Value;

fn forgot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forgot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = forgot(&all);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn class_of_reference_class() {
    let out = forgot(&["class-of", "12543"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "key (5,3,true)\ncanonical 12543\nsize 15\n");

    let v = json(&["class-of", "12543", "--members"]);
    assert_eq!(v["key"], serde_json::json!({"n": 5, "inv": 3, "oneBeforeN": true}));
    assert_eq!(v["canonical"], serde_json::json!([1, 2, 5, 4, 3]));
    assert_eq!(v["members"].as_array().unwrap().len(), 15);
}

#[test]
fn classes_listing() {
    let out = forgot(&["classes", "3"]);
    assert_eq!(
        stdout(&out),
        "(3,0,true) 123 1\n(3,1,true) 132 2\n(3,2,false) 231 2\n(3,3,false) 321 1\n"
    );
    let out = forgot(&["classes", "2", "--members"]);
    assert_eq!(stdout(&out), "(2,0,true) 12 1 12\n(2,1,false) 21 1 21\n");
    let v = json(&["classes", "4"]);
    let sizes: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes.iter().sum::<u64>(), 24);
    assert_eq!(sizes.len(), 8);

    let v = json(&["classes", "12"]);
    assert_eq!(v.as_array().unwrap().len(), 12 * 12 - 36 + 4);
    assert!(v[0].get("size").is_none());
}

#[test]
fn canonical_insert_and_ribbons() {
    let out = forgot(&["canonical", "--key", "7,13,1n"]);
    assert_eq!(stdout(&out), "1576432\nform sigma(1,5;n=7)\n");
    let out = forgot(&["insert", "136542", "0"]);
    assert_eq!(stdout(&out), "2476531\n");
    let out = forgot(&["insert", "136542", "4"]);
    assert_eq!(stdout(&out), "1267543\n");
    let out = forgot(&["ribbons", "--key", "8,10,n1"]);
    assert_eq!(stdout(&out), "r[1,1,5,1] + r[3,4,1]\n");
    let out = forgot(&["ribbons", "12543"]);
    assert_eq!(stdout(&out), "r[1,1,3] + r[3,2]\n");
    let v = json(&["ribbons", "12543", "--vars", "5"]);
    assert_eq!(v["sum"]["m"], 5);
    assert_eq!(v["sum"]["degree"], 5);
}

#[test]
fn phi_and_ns() {
    assert_eq!(stdout(&forgot(&["phi", "132"])), "312\n");
    assert_eq!(stdout(&forgot(&["ns", "132"])), "231\n");
    let v = json(&["phi", "1,3,2"]);
    assert_eq!(v["result"], serde_json::json!([3, 1, 2]));
}

#[test]
fn verify_suites() {
    let out = forgot(&["verify", "classes", "--max-n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n=7: 32 forgotten classes"), "{text}");
    assert!(!text.contains("FAIL"));

    let out = forgot(&["verify", "ribbon", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(5,3,true): r[1,1,3] + r[3,2]"));

    let out = forgot(&["verify", "commutation", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));

    let v = json(&["verify", "foata", "--max-n", "4"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["failed"] == 0));
}

#[test]
fn exit_codes() {
    // parse errors
    assert_eq!(forgot(&["class-of", "12x"]).status.code(), Some(2));
    assert_eq!(forgot(&["class-of", "1223"]).status.code(), Some(2));
    assert_eq!(forgot(&["canonical", "--key", "5,3"]).status.code(), Some(2));
    assert_eq!(forgot(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(forgot(&["nonsense"]).status.code(), Some(2));
    // domain errors
    assert_eq!(forgot(&["canonical", "--key", "5,1,n1"]).status.code(), Some(3));
    assert_eq!(forgot(&["insert", "2143", "0"]).status.code(), Some(3));
    assert_eq!(forgot(&["insert", "1243", "9"]).status.code(), Some(3));
    assert_eq!(forgot(&["classes", "1"]).status.code(), Some(3));
    assert_eq!(forgot(&["classes", "51"]).status.code(), Some(3));
    assert_eq!(forgot(&["class-of", "1,2,3,4,5,6,7,8,9,10"]).status.code(), Some(3));
    assert_eq!(forgot(&["verify", "all", "--max-n", "12"]).status.code(), Some(3));
    let out = forgot(&["classes", "1"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn printed_values_reparse() {
    for p in ["2476531", "1,2,3,4,5,6,7,8,9,10,12,11"] {
        let out = forgot(&["phi", p]);
        let printed = stdout(&out).trim().to_string();
        let again = forgot(&["ns", &printed]);
        assert_eq!(again.status.code(), Some(0));
    }
    let v = json(&["class-of", "3142"]);
    let reparsed: Value = serde_json::from_str(&v.to_string()).unwrap();
    assert_eq!(reparsed.to_string(), v.to_string());
}
