use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn spc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spc")).args(args).output().expect("spawn spc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn encode_to(dir: &Path, word: &str, extra: &[&str]) -> std::path::PathBuf {
    let path = dir.join("ledger.json");
    let mut args = vec!["encode", "--word", word, "--out", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = spc(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    path
}

fn ledger_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn encode_single_letter() {
    let o = spc(&["encode", "--word", "a"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["code"], "1");
    assert_eq!(v["sequence_head"], "1");
    assert_eq!(v["realized"][2], "1");
    assert_eq!(v["realized"][0], "0");
    assert_eq!(v["realized"][1], "0");
    assert_eq!(v["decoded"], "a");
    assert_eq!(v["lambda"], serde_json::json!([[1, "1", "1"]]));
    assert_eq!(v["intermediate"][2], serde_json::json!([[0, "1", "1"]]));
}

#[test]
fn encode_empty_word() {
    let o = spc(&["encode", "--word", ""]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["code"], "0");
    assert_eq!(v["lambda_degenerate"], true);
    assert_eq!(v["decoded"], "");
}

#[test]
fn encode_invalid_symbol() {
    let o = spc(&["encode", "--word", "Ω"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("symbol not in alphabet at position 0"));
}

#[test]
fn encode_config_violations() {
    for args in [
        &["--base", "1"][..],
        &["--dims", "2"],
        &["--coord", "9"],
        &["--alphabet", "abca"],
        &["--signs", "++"],
        &["--config", "/nonexistent/config.json"],
    ] {
        let mut full = vec!["encode", "--word", "a"];
        full.extend_from_slice(args);
        assert_eq!(spc(&full).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn config_file_with_flag_override() {
    let dir = TempDir::new().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"base": 2, "dims": 5, "alphabet": "xyz"}"#).unwrap();
    let path = encode_to(dir.path(), "zyx", &["--config", cfg.to_str().unwrap(), "--dims", "4"]);
    let v = ledger_json(&path);
    assert_eq!(v["config"]["base"], 2);
    assert_eq!(v["config"]["dims"], 4);
    assert_eq!(v["config"]["signs"], "+-");
    assert_eq!(v["decoded"], "zyx");
}

#[test]
fn realize_recovers_word() {
    let dir = TempDir::new().unwrap();
    for word in ["a", "", "hello world", "zz top"] {
        let path = encode_to(dir.path(), word, &[]);
        let o = spc(&["realize", "--ledger", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), format!("{word}\n"));
    }
}

#[test]
fn realize_on_negative_coordinate_and_binary_base() {
    let dir = TempDir::new().unwrap();
    let path = encode_to(dir.path(), "quanta", &["--coord", "4", "--base", "2"]);
    let o = spc(&["realize", "--ledger", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "quanta\n");
}

#[test]
fn realize_detects_tampering() {
    let dir = TempDir::new().unwrap();
    let path = encode_to(dir.path(), "abc", &[]);
    let mut v = ledger_json(&path);
    v["intermediate"][2] = serde_json::json!([[0, "12", "1"]]);
    fs::write(&path, v.to_string()).unwrap();
    let o = spc(&["realize", "--ledger", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5), "{}", stderr(&o));

    let path = encode_to(dir.path(), "abc", &[]);
    let mut v = ledger_json(&path);
    v["decoded"] = "abd".into();
    fs::write(&path, v.to_string()).unwrap();
    assert_eq!(spc(&["realize", "--ledger", path.to_str().unwrap()]).status.code(), Some(5));

    let path = encode_to(dir.path(), "abc", &[]);
    let mut v = ledger_json(&path);
    v["intermediate"][4] = serde_json::json!([[2, "1", "1"]]);
    fs::write(&path, v.to_string()).unwrap();
    assert_eq!(spc(&["realize", "--ledger", path.to_str().unwrap()]).status.code(), Some(6));
}

#[test]
fn realize_malformed_ledgers() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(spc(&["realize", "--ledger", missing.to_str().unwrap()]).status.code(), Some(4));

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(spc(&["realize", "--ledger", garbage.to_str().unwrap()]).status.code(), Some(4));

    let path = encode_to(dir.path(), "abc", &[]);
    let mut v = ledger_json(&path);
    v["intermediate"][2] = serde_json::json!([[0, "2", "4"]]);
    fs::write(&path, v.to_string()).unwrap();
    assert_eq!(spc(&["realize", "--ledger", path.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn eval_outputs() {
    let o = spc(&["eval", "st(5 + 3*eps)"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "5\n"));
    let o = spc(&["eval", "42*H*eps"]);
    assert_eq!(stdout(&o), "42 (FiniteAppreciable, st=42)\n");
    let o = spc(&["eval", "-eps", "--base", "2"]);
    assert_eq!(stdout(&o), "-eps (Infinitesimal, st=0)\n");
}

#[test]
fn eval_errors() {
    let o = spc(&["eval", "st(H)"]);
    assert_eq!(o.status.code(), Some(6));
    assert!(stderr(&o).contains("standard part undefined: infinite value"));

    let o = spc(&["eval", "st(H"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "error at column 5: expected ')'\n  st(H\n      ^\n");

    assert_eq!(spc(&["eval", "(1+eps)^-1"]).status.code(), Some(2));
    assert_eq!(spc(&["eval", "1", "--base", "1"]).status.code(), Some(3));
}

#[test]
fn roundtrip_corpus() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("words.txt");
    let words: Vec<String> = (0..100).map(|i| format!("word {}", &"abcdefghij".repeat(i % 3 + 1)[..i % 10 + 1])).collect();
    fs::write(&corpus, words.join("\n")).unwrap();
    let o = spc(&["roundtrip", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o), "100/100 ok\n");

    let o = spc(&["roundtrip", "--corpus", corpus.to_str().unwrap(), "--base", "2", "--coord", "6"]);
    assert_eq!(stdout(&o), "100/100 ok\n");
}

#[test]
fn roundtrip_reports_invalid_words() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("words.txt");
    fs::write(&corpus, "good\nBad\nalso good\n").unwrap();
    let o = spc(&["roundtrip", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "FAIL \"Bad\": symbol not in alphabet at position 0\n2/3 ok\n"
    );
}

#[test]
fn roundtrip_empty_corpus() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("empty.txt");
    fs::write(&corpus, "").unwrap();
    let o = spc(&["roundtrip", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "0/0 ok\n"));
}

#[test]
fn base_two_and_ten_ledgers_agree() {
    let dir = TempDir::new().unwrap();
    let a = ledger_json(&encode_to(dir.path(), "specific information", &["--base", "2"]));
    let b = ledger_json(&encode_to(dir.path(), "specific information", &["--base", "10"]));
    for field in ["code", "realized", "decoded", "intermediate"] {
        assert_eq!(a[field], b[field], "{field}");
    }
}
