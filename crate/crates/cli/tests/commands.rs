use std::process::Command;

use serde_json::Value;

fn rsumset(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rsumset")).args(args).output().unwrap();
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = rsumset(args);
    assert!(!out.is_empty(), "no output for {args:?}: {err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn bound_example() {
    let (code, v) = json(&["bound", "--field", "7", "--poly", "x-y", "--na", "3", "--nb", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["bound"], 3);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["bound", "d", "effective", "field", "hypothesis", "m_neg1", "nA", "nB", "n_pstar", "poly", "term_char", "term_size"]
    );
    let hyp: Vec<&str> = v["hypothesis"].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(hyp, ["col_witness", "row_witness"]);
}

#[test]
fn infinite_term_is_a_string() {
    let (code, v) = json(&["bound", "--field", "Q", "--poly", "x-y", "--na", "4", "--nb", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["term_char"], "inf");
    assert_eq!(v["bound"], 5);
}

#[test]
fn verify_example() {
    let (code, v) = json(&["verify", "--field", "7", "--poly", "x-y", "--A", "{0,1,2}", "--B", "{0,1,2}"]);
    assert_eq!(code, 0);
    assert_eq!(v["cardC"], 3);
    assert_eq!(v["ok"], true);
    assert_eq!(v["slack"], 0);
    assert_eq!(v["C"], "{1,2,3}");
}

#[test]
fn lemma1_example() {
    let (code, v) = json(&["lemma1", "--field", "2", "--upoly", "x^4+1", "--k", "0", "--l", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "NqWitness");
    assert_eq!(v["q"], 4);
}

#[test]
fn extension_fields() {
    let (code, v) = json(&["verify", "--field", "2^2", "--poly", "(x-y-t)*(x-y-t-1)*(x-y-1)", "--A", "{0,1,t,t+1}", "--B", "{0,1,t,1+t}"]);
    assert_eq!(code, 0);
    assert_eq!(v["cardC"], 1);
    assert_eq!(v["A"], "{0,1,t,1+t}");
    let (code, v) = json(&["profile", "--field", "3^2/x^2+1", "--upoly", "x^2+1"]);
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["1"], 2);
}

#[test]
fn sweep_csv_columns() {
    let (code, out, _) =
        rsumset(&["sweep", "--field", "5", "--poly", "x-y", "--na", "1..3", "--nb", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("field,nA,nB,poly,A,B,cardC,bound,slack,ok"));
    // C(5,1)C(5,2) + C(5,2)C(5,2) + C(5,3)C(5,2)
    assert_eq!(lines.count(), 50 + 100 + 100);
}

#[test]
fn sweep_json_summary() {
    let (code, v) = json(&["sweep", "--field", "7", "--poly", "x*y", "--poly", "x-y", "--na", "1..3", "--pairing", "diagonal"]);
    assert_eq!(code, 0);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["skipped"]["hypothesis not met"], 7);
    assert_eq!(v["instances"], 2 * (7 + 21 + 35));
    assert_eq!(v["records"].as_array().unwrap().len(), 2 * (7 + 21 + 35) - 7);
    let (_, a) = json(&["sweep", "--field", "7", "--poly", "x-y", "--na", "1..7", "--nb", "1..7", "--samples", "300", "--seed", "3"]);
    let (_, b) = json(&["sweep", "--field", "7", "--poly", "x-y", "--na", "1..7", "--nb", "1..7", "--samples", "300", "--seed", "3"]);
    assert_eq!(a, b);
    assert_eq!(a["instances"], 300);
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("rsumset-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bound.json");
    let (code, out, _) =
        rsumset(&["bound", "--field", "5", "--poly", "1", "--na", "2", "--nb", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["bound"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["bound", "--field", "7", "--poly", "x-y", "--na", "3", "--nb", "3"], 0),
        (&["bound", "--field", "2^3", "--poly", "t*x + y^2", "--na", "2", "--nb", "3"], 0),
        (&["verify", "--field", "Q", "--poly", "x - 1/2*y", "--A", "{0,1}", "--B", "{1/2, 2}"], 0),
        (&["profile", "--field", "5", "--upoly", "(x+1)^5*x"], 0),
        (&["lemma1", "--field", "3", "--upoly", "x^9 + 2", "--k", "0", "--l", "9"], 0),
        (&["sweep", "--field", "3", "--poly", "x-y", "--na", "1..3", "--nb", "1..3"], 0),
        (&["bound", "--field", "6", "--poly", "x", "--na", "1", "--nb", "1"], 2),
        (&["bound", "--field", "2^2/x^2+1", "--poly", "x", "--na", "1", "--nb", "1"], 2),
        (&["bound", "--field", "7", "--poly", "x^", "--na", "1", "--nb", "1"], 2),
        (&["bound", "--field", "7", "--poly", "2x", "--na", "1", "--nb", "1"], 2),
        (&["bound", "--field", "5", "--poly", "1/2*x", "--na", "1", "--nb", "1"], 2),
        (&["bound", "--field", "7", "--poly", "t", "--na", "1", "--nb", "1"], 2),
        (&["bound", "--field", "7", "--poly", "0", "--na", "1", "--nb", "1"], 2),
        (&["bound", "--field", "7", "--poly", "x", "--na", "0", "--nb", "1"], 2),
        (&["verify", "--field", "7", "--poly", "x-y", "--A", "{1,1}", "--B", "{0}"], 2),
        (&["verify", "--field", "7", "--poly", "x-y", "--A", "{}", "--B", "{0}"], 2),
        (&["lemma1", "--field", "3", "--upoly", "x^4+x^2+1", "--k", "0", "--l", "4"], 2),
        (&["lemma1", "--field", "3", "--upoly", "x^4+1", "--k", "2", "--l", "1"], 2),
        (&["profile", "--field", "3", "--upoly", "x*y"], 2),
        (&["sweep", "--field", "Q", "--poly", "x-y", "--na", "1", "--nb", "1"], 2),
        (&["sweep", "--field", "11", "--poly", "x-y", "--na", "5", "--nb", "5", "--budget", "100"], 2),
        (&["sweep", "--field", "5", "--poly", "x-y", "--na", "1..2"], 2),
        (&["bound", "--poly", "x"], 2),
        (&["frobnicate"], 2),
        (&["bound", "--field", "7", "--poly", "x*y", "--na", "1", "--nb", "3"], 3),
        (&["verify", "--field", "5", "--poly", "x^2*y", "--A", "{1,2}", "--B", "{1,2,3}"], 3),
        (&["bound", "--field", "Q", "--poly", "x^3", "--na", "3", "--nb", "3"], 3),
    ];
    for (args, want) in cases {
        let (code, out, err) = rsumset(args);
        assert_eq!(code, *want, "{args:?}\nstdout: {out}\nstderr: {err}");
        if *want != 0 {
            assert!(!err.is_empty(), "{args:?}: no diagnostic");
        }
    }
}

#[test]
fn help_exits_cleanly() {
    let (code, out, _) = rsumset(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("sweep"));
}
