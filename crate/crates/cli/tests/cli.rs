use std::fs;
use std::process::{Command, Output};

fn ribbon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbon"))
        .args(args)
        .output()
        .expect("run ribbon binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn cf_eval_and_expand() {
    let out = ribbon(&["cf", "eval", "[2,-2,2,2,-2,2]"]);
    assert_eq!((stdout(&out).trim(), code(&out)), ("25/18", 0));
    let out = ribbon(&["cf", "eval", "[]"]);
    assert_eq!(stdout(&out).trim(), "inf");
    let out = ribbon(&["cf", "expand", "25/18"]);
    assert_eq!(stdout(&out).trim(), "[1,2,1,1,3]");
}

#[test]
fn cf_json_is_exact() {
    let out = ribbon(&["cf", "eval", "[1,2,1,1,2,1]", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["num"].to_string(), "25");
    assert_eq!(v["den"].to_string(), "18");
    assert_eq!(v["infinite"], false);
}

#[test]
fn invalid_input_exits_one() {
    assert_eq!(code(&ribbon(&["cf", "eval", "[1,0,2]"])), 1);
    assert_eq!(code(&ribbon(&["cf", "eval", "1,2"])), 1);
    assert_eq!(code(&ribbon(&["classify", "K(9,3)"])), 1);
    assert_eq!(code(&ribbon(&["no-such-command"])), 1);
    assert_eq!(code(&ribbon(&["--help"])), 0);
}

#[test]
fn classify_exit_codes() {
    let out = ribbon(&["classify", "K(9,2)"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("F1(m=3, k=1"));
    let out = ribbon(&["classify", "K(9,1)"]);
    assert_eq!((stdout(&out).trim(), code(&out)), ("K(9,1): not ribbon", 0));
    assert_eq!(code(&ribbon(&["classify", "K(8,3)"])), 2);
    let out = ribbon(&["classify", "K(1,0)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["knot"], "unknot");
}

#[test]
fn present_verify_render_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("k.json");
    let svg = dir.path().join("k.svg");
    let out = ribbon(&["symun", "present", "K(25,18)"]);
    assert_eq!(code(&out), 0);
    fs::write(&doc, stdout(&out)).unwrap();
    let out = ribbon(&["symun", "verify", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = ribbon(&["render", doc.to_str().unwrap(), svg.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(fs::read_to_string(&svg).unwrap().contains("<svg"));

    // A document whose result no longer matches its continued fraction.
    let tampered = fs::read_to_string(&doc)
        .unwrap()
        .replace("\"q\": 18", "\"q\": 19");
    fs::write(&doc, tampered).unwrap();
    assert_eq!(
        code(&ribbon(&["symun", "verify", doc.to_str().unwrap()])),
        4
    );

    fs::write(&doc, "{ not json").unwrap();
    assert_eq!(
        code(&ribbon(&["symun", "verify", doc.to_str().unwrap()])),
        1
    );
}

#[test]
fn present_from_family_parameters() {
    let out = ribbon(&[
        "symun", "present", "--family", "F1", "--m", "3", "--k", "1", "--sign", "-1",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["p"].to_string(), "9");
    let out = ribbon(&[
        "symun", "present", "--family", "F3+", "--s", "0", "--t", "0",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&ribbon(&["symun", "present", "K(9,1)"])), 3);
    assert_eq!(
        code(&ribbon(&[
            "symun", "present", "--family", "F2-", "--s", "0", "--t", "0"
        ])),
        1
    );
}

#[test]
fn list_ribbon_text_and_json_agree() {
    let text = stdout(&ribbon(&["list", "ribbon", "--pmax", "50"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 30);
    assert_eq!(lines[0], "K(9,2)");
    let json = stdout(&ribbon(&["list", "ribbon", "--pmax", "50", "--json"]));
    let v: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(v.len(), lines.len());
    for (item, line) in v.iter().zip(&lines) {
        assert_eq!(format!("K({},{})", item["p"], item["q"]), *line);
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_ribbon"))
            .args(["list", "ribbon", "--pmax", "961"])
            .env("SYMUN_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("0"));
}
