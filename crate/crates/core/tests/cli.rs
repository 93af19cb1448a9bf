//! The `leibniz` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("leibniz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn validate_abelian_file() {
    let p = scratch("abelian.toml", "dim = 3\n");
    let o = leibniz(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS violations: 0"));
}

#[test]
fn validate_lists_violations() {
    // [a,[a,a]] with [a,a] = b, [a,b] = a breaks the identity
    let text = "dim = 2\n\n[[brackets]]\ni = 1\nj = 1\nterms = [{ k = 2, coeff = \"1\" }]\n\n[[brackets]]\ni = 1\nj = 2\nterms = [{ k = 1, coeff = \"1\" }]\n";
    let p = scratch("broken.toml", text);
    let o = leibniz(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL violations"));
}

#[test]
fn parse_errors_carry_positions() {
    let p = scratch("bad.toml", "dim = 2\n\n[[brackets]]\ni = 5\nj = 1\nterms = []\n");
    let o = leibniz(&["invariants", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn catalog_then_completeness() {
    let o = leibniz(&["catalog", "example_sec4_one"]);
    assert_eq!(o.status.code(), Some(0));
    let p = scratch("sec4_one.toml", &stdout(&o));
    let o = leibniz(&["--json", "completeness", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sections"][0]["items"][0]["value"], true);
    assert_eq!(v["sections"][1]["items"][0]["value"], false);
}

#[test]
fn factor_infeasible_is_nonzero() {
    let o = leibniz(&["factor", "example_sec4_one", "--tensor", "sec4_one_f", "--modulo", "zero"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL factorization: infeasible"));
    assert!(text.contains("0 = 1"));
}

#[test]
fn factor_modulo_leib_succeeds() {
    let o = leibniz(&["factor", "example_sec4_two", "--tensor", "sec4_two_f", "--modulo", "leib"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_and_text_carry_the_same_facts() {
    for cmd in ["invariants", "derivations", "biderivations"] {
        let text = stdout(&leibniz(&[cmd, "heisenberg"]));
        let json: serde_json::Value = serde_json::from_str(&stdout(&leibniz(&["--json", cmd, "heisenberg"]))).unwrap();
        for s in json["sections"].as_array().unwrap() {
            assert!(text.contains(s["title"].as_str().unwrap()));
            for item in s["items"].as_array().unwrap() {
                let value = match &item["value"] {
                    serde_json::Value::String(s) => s.clone(),
                    v => v.to_string(),
                };
                let line = format!("{}: {}", item["label"].as_str().unwrap(), value);
                assert!(text.contains(&line), "{cmd}: missing {line}");
                for n in item["notes"].as_array().into_iter().flatten() {
                    assert!(text.contains(n.as_str().unwrap()));
                }
            }
        }
    }
}

#[test]
fn unknown_catalog_name_is_a_usage_error() {
    let o = leibniz(&["invariants", "no_such_algebra"]);
    assert_eq!(o.status.code(), Some(2));
}
