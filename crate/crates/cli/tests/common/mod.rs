//! Golden cases shared by the CLI tests and the acceptance suite.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

/// Arguments starting with `@` are files under `tests/data`.
pub const CASES: &[Case] = &[
    case("check_gcd_monoid_diamond", &["check", "gcd-monoid", "@diamond.poset"], 0),
    case("check_gcd_monoid_opqrs", &["check", "gcd-monoid", "@opqrs.poset"], 1),
    case("check_category_c6", &["check", "category", "@c6.category"], 0),
    case("check_category_equalized", &["check", "category", "@equalized.category"], 1),
    case("check_category_cyclic", &["check", "category", "@cyclic.category"], 1),
    case("homotopy_square", &["homotopy", "@square.complex"], 0),
    case("homotopy_square_json", &["--format", "json", "homotopy", "@square.complex"], 0),
    case("homotopy_triangle", &["homotopy", "@triangle.complex"], 0),
    case("nf_c6", &["nf", "@c6.category", "a a'"], 0),
    case("nf_c6_trace", &["nf", "--trace", "@c6.category", "id:0 a a' id:2"], 0),
    case("mult_c6", &["mult", "@c6.category", "a", "b'"], 0),
    case("gcd_c6", &["gcd", "@c6.category", "aa'", "cbar"], 0),
    case("gcd_c6_right", &["gcd", "--side", "right", "@c6.category", "aa'", "bbar"], 0),
    case("lcm_c6", &["lcm", "@c6.category", "a", "b"], 0),
    case("greedy_c6", &["greedy", "@c6.category", "aa'"], 0),
    case("barycentric_triangle", &["barycentric", "@triangle.complex"], 0),
    case("chain_complex_diamond", &["chain-complex", "@diamond.poset"], 0),
    case("cross_check_seven", &["cross-check", "@seven.poset"], 0),
    case("cross_check_seven_json", &["--format", "json", "cross-check", "@seven.poset"], 0),
    case("spindle_detect_long_chain", &["spindle", "detect", "@long_chain.poset", "0", "1"], 0),
    case("spindle_category_diamond", &["spindle", "category", "@diamond.poset", "0", "1"], 0),
    case("spindle_presentation_long_chain", &["spindle", "presentation", "@long_chain.poset", "0", "1"], 0),
    case("embed_check_c6", &["embed-check", "@c6.category", "--functor", "@c6.functor"], 0),
    case("embed_check_c6_trivial", &["embed-check", "@c6.category"], 1),
    case("monoid_crm_c6", &["monoid", "crm", "@c6.monoid", "a", "b", "c"], 0),
    case("monoid_equal_b3", &["monoid", "equal", "@b3.monoid", "aba", "bab"], 0),
    case("monoid_class_b3", &["monoid", "class", "@b3.monoid", "abab"], 0),
    case("monoid_atoms_c6", &["monoid", "atoms", "@c6.monoid"], 0),
    case("monoid_m6", &["monoid", "m6", "--max-len", "5"], 0),
    case("present_universal_group_cyclic", &["present", "universal-group", "@cyclic.category"], 0),
    case("validate_c6", &["validate", "@c6.category"], 0),
];

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(format!("{name}.txt"))
}

pub fn expand(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => data_dir().join(f).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect()
}

/// Runs the binary; returns (stdout, stderr, exit code).
pub fn catmon<S: AsRef<str>>(args: &[S]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_catmon"))
        .args(args.iter().map(|a| a.as_ref()))
        .env_remove("CATMON_MAX_ARROWS")
        .output()
        .expect("catmon runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        String::from_utf8(out.stderr).expect("utf-8 output"),
        out.status.code().unwrap_or(-1),
    )
}

/// Output paths are printed relative to the data directory so golden files
/// do not depend on where the repository lives.
pub fn run_case(c: &Case) -> (String, i32) {
    let (out, _, code) = catmon(&expand(c.args));
    let dir = format!("{}/", data_dir().to_string_lossy());
    (out.replace(&dir, ""), code)
}
