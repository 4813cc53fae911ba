use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn abmc(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_abmc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut input = child.stdin.take().expect("stdin");
        if let Some(s) = stdin {
            input.write_all(s.as_bytes()).expect("write stdin");
        }
    }
    child.wait_with_output().expect("binary exits")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf8")
}

fn z2_ext() -> Value {
    json!({
        "format": 1,
        "algebra": "Z",
        "args": {"m": {"kind": "abelian", "orders": [2]}, "n": {"kind": "abelian", "orders": [2]}}
    })
}

fn spec_error(command: &str, spec: &Value, pointer: &str) {
    let o = abmc(&[command, "-"], Some(&spec.to_string()));
    assert_eq!(code(&o), 2, "{}", stderr(&o));
    let err = stderr(&o);
    assert!(err.contains(&format!("spec error at {pointer}:")), "{err}");
}

#[test]
fn ext_over_integers_from_file() {
    let dir = std::env::temp_dir().join(format!("abmc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ext.json");
    std::fs::write(&path, z2_ext().to_string()).unwrap();
    let o = abmc(&["ext", path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Ext¹ = Z/2"), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn stdin_and_json_output() {
    let o = abmc(&["ext", "-", "--json"], Some(&z2_ext().to_string()));
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "ext");
    assert_eq!(v["pass"], true);
    assert_eq!(v["algebra"], "Z");
}

#[test]
fn check_pair_preset_passes() {
    let o = abmc(&["check-pair", "--preset", "qf-f2c2", "--json"], None);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["preset"], "qf-f2c2");
    assert_eq!(v["pass"], true);
}

#[test]
fn certified_failure_exits_one() {
    let spec = json!({
        "format": 1,
        "algebra": "Z",
        "args": {"sequences": [{
            "mono": {"src": {"kind": "free", "rank": 1}, "dst": {"kind": "free", "rank": 1}, "matrix": [[2]]},
            "expect_pure": true
        }]}
    });
    let o = abmc(&["purity", "-"], Some(&spec.to_string()));
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("tensor witness Z/2"), "{}", stdout(&o));
}

#[test]
fn bad_scalar_points_at_element() {
    let mut s = z2_ext();
    s["args"]["m"]["orders"] = json!(["x"]);
    spec_error("ext", &s, "/args/m/orders/0");
}

#[test]
fn unknown_kind_points_at_kind() {
    let mut s = z2_ext();
    s["args"]["n"] = json!({"kind": "nope"});
    spec_error("ext", &s, "/args/n/kind");
}

#[test]
fn unknown_top_level_key() {
    let mut s = z2_ext();
    s["bogus"] = json!(1);
    spec_error("ext", &s, "/bogus");
}

#[test]
fn missing_argument() {
    let mut s = z2_ext();
    s["args"].as_object_mut().unwrap().remove("n");
    spec_error("ext", &s, "/args");
}

#[test]
fn mismatched_command_field() {
    let mut s = z2_ext();
    s["command"] = json!("hom");
    spec_error("ext", &s, "/command");
}

#[test]
fn invalid_json_and_usage_errors() {
    let o = abmc(&["ext", "-"], Some("{\"format\": 1,"));
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("invalid JSON"));

    let o = abmc(&["ext", "--preset", "nope"], None);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("unknown preset"));

    let o = abmc(&["ext"], None);
    assert_eq!(code(&o), 2);

    let o = abmc(&["no-such-command"], None);
    assert_eq!(code(&o), 2);
}

#[test]
fn show_spec_merges_overrides() {
    let o = abmc(&["hom", "--preset", "purity-z", "--seed", "9", "--bounds", "2", "--show-spec"], None);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "hom");
    assert_eq!(v["seed"], 9);
    assert_eq!(v["bounds"], 2);
    assert_eq!(v["args"]["n"]["orders"], json!([4]));
}

#[test]
fn spec_args_override_preset_args() {
    let spec = json!({"args": {"n": {"kind": "abelian", "orders": [2]}}});
    let o = abmc(&["hom", "-", "--preset", "purity-z", "--show-spec"], Some(&spec.to_string()));
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["args"]["n"]["orders"], json!([2]));
    assert_eq!(v["args"]["m"]["orders"], json!([2]));
}

#[test]
fn json_reports_are_deterministic() {
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        v["timing_ms"] = json!(0);
        v.to_string()
    };
    // Projectives are not thick over Z, a certified failure.
    for (cmd, expect) in [("hereditary", 0), ("thick", 1), ("catalog", 0)] {
        let a = abmc(&[cmd, "--preset", "purity-z", "--json", "--seed", "5"], None);
        let b = abmc(&[cmd, "--preset", "purity-z", "--json", "--seed", "5"], None);
        assert_eq!(code(&a), expect, "{cmd}: {}", stdout(&a));
        assert_eq!(strip(&a), strip(&b), "{cmd}");
    }
}
