mod common;

use std::fs;

use common::{catmon, data_dir, golden_path, run_case, CASES};

/// Compares every case with its golden file. Set `CATMON_BLESS=1` to
/// rewrite the golden files from the current output.
#[test]
fn golden_outputs() {
    let bless = std::env::var_os("CATMON_BLESS").is_some();
    let mut failures = Vec::new();
    for c in CASES {
        let (out, code) = run_case(c);
        assert_eq!(code, c.exit, "exit status of `{}`:\n{out}", c.name);
        let path = golden_path(c.name);
        if bless {
            fs::write(&path, &out).unwrap();
            continue;
        }
        let expected = fs::read_to_string(&path).unwrap_or_default();
        if expected != out {
            failures.push(format!("{}:\n--- expected\n{expected}--- got\n{out}", c.name));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn spec_examples_verbatim() {
    let d = |f: &str| data_dir().join(f).to_string_lossy().into_owned();
    let (out, _, code) = catmon(&["check".into(), "gcd-monoid".into(), d("diamond.poset")]);
    assert_eq!((out.as_str(), code), ("left: OK  right: OK  gcd-monoid: YES\n", 0));
    let (out, _, code) = catmon(&["homotopy".into(), d("square.complex")]);
    assert_eq!((out.as_str(), code), ("tree edges: 3  pi1: free rank 1  HG free rank: 4\n", 0));
    let (out, _, code) = catmon(&["nf".into(), d("c6.category"), "a a'".into()]);
    assert_eq!((out.as_str(), code), ("aa'\n", 0));
}

fn tmp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("catmon-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn emitted_files_are_accepted() {
    let d = |f: &str| data_dir().join(f).to_string_lossy().into_owned();

    let (poset, _, _) = catmon(&["barycentric", &d("square.complex")]);
    let p = tmp_file("sd.poset", &poset);
    let (out, _, code) = catmon(&["check", "gcd-monoid", &p]);
    assert_eq!((out.as_str(), code), ("left: OK  right: OK  gcd-monoid: YES\n", 0));
    let (out, _, code) = catmon(&["validate", &p]);
    assert_eq!((out.as_str(), code), ("poset: 8 elements, 8 covers\n", 0));

    let (complex, _, _) = catmon(&["chain-complex", &d("diamond.poset")]);
    let k = tmp_file("diamond.complex", &complex);
    let (out, _, code) = catmon(&["homotopy", &k]);
    assert_eq!(code, 0);
    assert!(out.starts_with("tree edges: 3  pi1: free rank 0  HG free rank: 3"), "{out}");

    let (cat, _, _) = catmon(&["spindle", "category", &d("diamond.poset"), "0", "1"]);
    let c = tmp_file("spindle.category", &cat);
    let (out, _, code) = catmon(&["nf", &c, "[0,a] [a,1]"]);
    assert_eq!((out.as_str(), code), ("chain:a\n", 0));
    let (_, _, code) = catmon(&["check", "category", &c]);
    assert_eq!(code, 0);

    let (pres, _, _) = catmon(&["spindle", "presentation", &d("long_chain.poset"), "0", "1"]);
    let m = tmp_file("spindle.monoid", &pres);
    let (out, _, code) = catmon(&["validate", &m]);
    assert_eq!((out.as_str(), code), ("monoid: 7 generators, 2 relations, homogeneous: NO\n", 0));

    let (group, _, _) = catmon(&["present", "universal-group", &d("c6.category")]);
    let g = tmp_file("c6.presentation", &group);
    let (out, _, code) = catmon(&["validate", &g]);
    assert_eq!((out.as_str(), code), ("presentation: 12 generators, 9 relators\n", 0));

    let (cat, _, _) = catmon(&["spindle", "category", &d("long_chain.poset"), "0", "1"]);
    let c2 = tmp_file("long.category", &cat);
    let (cat_again, _, _) = catmon(&["present", "universal-group", &c2]);
    assert!(cat_again.starts_with("presentation\n"));
}

#[test]
fn input_errors_exit_with_two() {
    let d = |f: &str| data_dir().join(f).to_string_lossy().into_owned();
    let (_, err, code) = catmon(&["homotopy", "/nonexistent/file.complex"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: cannot read"), "{err}");

    let bad = tmp_file("bad.poset", "poset\nelem x y z\ncover x y\ncover y z\ncover x z\n");
    let (_, err, code) = catmon(&["check", "gcd-monoid", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.poset"), "{err}");

    let assoc = tmp_file("bad.category", "category\nobj o\narrow g o o\ncomp g g g\narrow h o o\n");
    let (_, _, code) = catmon(&["validate", &assoc]);
    assert_eq!(code, 2);

    let (_, err, code) = catmon(&["nf", &d("c6.category"), "a zz"]);
    assert_eq!(code, 2);
    assert!(err.contains("zz"), "{err}");

    let (_, _, code) = catmon(&["spindle", "detect", &d("diamond.poset"), "a", "b"]);
    assert_eq!(code, 2);
    let (_, _, code) = catmon(&["frobnicate"]);
    assert_eq!(code, 2);
    let (_, _, code) = catmon(&["monoid", "class", &d("c6.monoid"), "a q"]);
    assert_eq!(code, 2);
}

#[test]
fn arrow_limit_from_environment() {
    let c6 = data_dir().join("c6.category");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_catmon"))
        .args(["validate".as_ref(), c6.as_os_str()])
        .env("CATMON_MAX_ARROWS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("above the limit of 10"), "{err}");

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_catmon"))
        .args(["validate".as_ref(), c6.as_os_str()])
        .env("CATMON_MAX_ARROWS", "15")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_mirrors_text() {
    let d = |f: &str| data_dir().join(f).to_string_lossy().into_owned();
    let (out, _, code) = catmon(&["--format", "json", "check", "gcd-monoid", &d("opqrs.poset")]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["left_ok"], false);
    assert_eq!(v["right_ok"], true);
    assert_eq!(v["gcd_monoid"], false);
    assert_eq!(v["left_witness"], serde_json::json!(["o", "r", "s"]));

    let (out, _, _) =
        catmon(&["--format", "json", "monoid", "crm", &d("c6.monoid"), "a", "b", "c", "--max-len", "6"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["max_len"], 6);
    assert_eq!(v["global"], serde_json::Value::Null);
}
