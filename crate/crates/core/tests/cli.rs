use std::process::Command;

fn seaweed(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_seaweed"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn index_examples() {
    assert_eq!(
        seaweed(&["index", "111,13,79", "--dual", "165,18,20"]),
        (0, "4\n".into())
    );
    assert_eq!(seaweed(&["index", "7"]), (0, "7\n".into()));
    assert_eq!(seaweed(&["index", "1, 1, 4", "--sl"]), (0, "0\n".into()));
}

#[test]
fn index_json_schema() {
    let (code, out) = seaweed(&["index", "2,4,3", "--dual", "5,2,2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["a"], "2,4,3");
    assert_eq!(v["b"], "5,2,2");
    assert_eq!(v["index"], 3);
    assert_eq!(v["sl_index"], 2);
    assert_eq!(v["cycles"], 1);
    assert_eq!(v["segments"], 1);
    assert!(v["trace"]["steps"].is_array());
}

#[test]
fn reduce_trace_ends_at_one() {
    let (code, out) = seaweed(&["reduce", "5,1,2,4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["index"], 1);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps[0]["before"], "5,1,2,4");
    assert!(steps.iter().all(|s| s["rule"].is_string()));

    let (code, text) = seaweed(&["reduce", "5,1,2,4"]);
    assert_eq!(code, 0);
    assert!(text.ends_with("index 1\n"));
}

#[test]
fn meander_outputs() {
    let (code, out) = seaweed(&["meander", "2,4,3", "--dual", "5,2,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 2 3 4 5 6 7 8 9"));
    assert!(out.contains("index 3"));

    let (code, svg) = seaweed(&["meander", "5,4", "--svg"]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("<path").count(), 8);

    let (code, json) = seaweed(&["meander", "2,2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
    assert_eq!(v["maximal_cycles"][0]["dimension"], 2);
}

#[test]
fn frobenius_listing() {
    let (code, out) = seaweed(&["frobenius", "--n", "3", "--sl", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let count = v["count"].as_u64().unwrap();
    assert_eq!(v["seaweeds"].as_array().unwrap().len() as u64, count);
    assert!(count > 0);
}

#[test]
fn verify_small() {
    let (code, out) = seaweed(&["verify", "--max-n", "5", "--oracle", "--oracle-max-n", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    assert!(out.contains("kirillov-oracle"));

    let (code, out) = seaweed(&["verify", "--max-n", "4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn table_families() {
    for family in ["two", "three", "aaab", "four", "run", "geometric"] {
        let (code, out) = seaweed(&["table", "--family", family, "--bound", "6"]);
        assert_eq!(code, 0, "{family}");
        assert!(out.starts_with("family,parameters,formula,engine,agree\n"));
        assert!(
            out.lines().skip(1).all(|l| l.ends_with(",true")),
            "{family}"
        );
    }
    let (code, out) = seaweed(&["table", "--family", "two", "--bound", "5", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
}

#[test]
fn exit_codes() {
    assert_eq!(seaweed(&["index", "0,0"]).0, 2);
    assert_eq!(seaweed(&["index", "3", "--dual", "2"]).0, 2);
    assert_eq!(seaweed(&["meander", "201", "--dual", "201"]).0, 2);
    assert_eq!(seaweed(&["table", "--family", "five", "--bound", "3"]).0, 2);
    assert_eq!(seaweed(&["check", "swap-symmetry", "--bound", "4"]).0, 0);
    assert_eq!(seaweed(&["check", "--list"]).0, 0);
}
