//! Small named examples used throughout the documentation, tests and the
//! command-line tool.

use crate::category::{FiniteCategory, RawCategory};
use crate::complex::SimplicialComplex;
use crate::group::{CategoryFunctor, GroupKind, GroupWord};
use crate::interval::cat_of_poset;
use crate::poset::Poset;
use crate::presented::MonoidPresentation;

fn poset(elements: &[&str], covers: &[(&str, &str)]) -> Poset {
    Poset::from_covers(elements, covers).expect("catalog posets are valid")
}

/// `0 < a, b < 1`.
pub fn diamond_poset() -> Poset {
    poset(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
}

pub fn diamond_category() -> FiniteCategory {
    cat_of_poset(&diamond_poset())
}

/// `o < p`, `o < q`.
pub fn vee_poset() -> Poset {
    poset(&["o", "p", "q"], &[("o", "p"), ("o", "q")])
}

pub fn vee_category() -> FiniteCategory {
    cat_of_poset(&vee_poset())
}

/// The chain `0 < 1 < ... < n-1`.
pub fn chain_poset(n: usize) -> Poset {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (1..n).map(|i| (names[i - 1].clone(), names[i].clone())).collect();
    Poset::from_covers(&names, &covers).expect("chains are valid")
}

/// `o < p, q < r, s` with both `r` and `s` above both `p` and `q`; `↑o`
/// is not a meet-semilattice.
pub fn opqrs_poset() -> Poset {
    poset(
        &["o", "p", "q", "r", "s"],
        &[("o", "p"), ("o", "q"), ("p", "r"), ("p", "s"), ("q", "r"), ("q", "s")],
    )
}

/// A seven-element poset with least element `p`.
pub fn seven_element_bounded_below() -> Poset {
    poset(
        &["p", "q", "r", "s", "t", "u", "v"],
        &[
            ("p", "q"),
            ("p", "r"),
            ("p", "s"),
            ("q", "t"),
            ("r", "t"),
            ("r", "u"),
            ("s", "u"),
            ("t", "v"),
            ("u", "v"),
        ],
    )
}

/// `0 < x < y < 1` and `0 < w < 1`: a spindle whose chains have
/// different lengths.
pub fn spindle_with_long_chain() -> Poset {
    poset(&["0", "x", "y", "w", "1"], &[("0", "x"), ("x", "y"), ("y", "1"), ("0", "w"), ("w", "1")])
}

/// The boundary of a square: four vertices, four edges, no triangles.
pub fn square_complex() -> SimplicialComplex {
    SimplicialComplex::from_maximal(&[vec!["a", "b"], vec!["b", "c"], vec!["c", "d"], vec!["a", "d"]])
        .expect("valid complex")
}

/// One object and an arrow `g` with `g·g = 1`.
pub fn cyclic_two() -> FiniteCategory {
    RawCategory::new()
        .object("o")
        .arrow("g", "o", "o")
        .comp("g", "g", "id:o")
        .validate()
        .expect("valid category")
}

/// `e0 → e1` by `a` or `b`, then `c: e1 → e2`, with `a·c = b·c`. Left
/// cancellative but not right cancellative, since `c` cannot be cancelled
/// on the right; both divisibility preorders are orders.
pub fn equalized_pair() -> FiniteCategory {
    RawCategory::new()
        .object("e0")
        .object("e1")
        .object("e2")
        .arrow("a", "e0", "e1")
        .arrow("b", "e0", "e1")
        .arrow("c", "e1", "e2")
        .arrow("ac", "e0", "e2")
        .comp("a", "c", "ac")
        .comp("b", "c", "ac")
        .validate()
        .expect("valid category")
}

/// The mirror image of [`equalized_pair`]: `c: e0 → e1`, then `a, b: e1 →
/// e2` with `c·a = c·b`. Right cancellative but not left cancellative.
pub fn split_pair() -> FiniteCategory {
    RawCategory::new()
        .object("e0")
        .object("e1")
        .object("e2")
        .arrow("c", "e0", "e1")
        .arrow("a", "e1", "e2")
        .arrow("b", "e1", "e2")
        .arrow("ca", "e0", "e2")
        .comp("c", "a", "ca")
        .comp("c", "b", "ca")
        .validate()
        .expect("valid category")
}

/// Objects `0, 1, 2`; arrows `a, b, c: 0 → 1` and `a', b', c': 1 → 2`.
/// The nine composites fall into six arrows `0 → 2`: `aa'`, `bb'`, `cc'`
/// and `cbar = ab' = ba'`, `abar = bc' = cb'`, `bbar = ac' = ca'`.
pub fn c6_category() -> FiniteCategory {
    let mut raw = RawCategory::new();
    raw.object("0").object("1").object("2");
    for x in ["a", "b", "c"] {
        raw.arrow(x, "0", "1");
    }
    for x in ["a'", "b'", "c'"] {
        raw.arrow(x, "1", "2");
    }
    for x in ["aa'", "bb'", "cc'", "abar", "bbar", "cbar"] {
        raw.arrow(x, "0", "2");
    }
    for (f, g, h) in [
        ("a", "a'", "aa'"),
        ("b", "b'", "bb'"),
        ("c", "c'", "cc'"),
        ("a", "b'", "cbar"),
        ("b", "a'", "cbar"),
        ("b", "c'", "abar"),
        ("c", "b'", "abar"),
        ("a", "c'", "bbar"),
        ("c", "a'", "bbar"),
    ] {
        raw.comp(f, g, h);
    }
    raw.validate().expect("valid category")
}

/// The functor from [`c6_category`] to `Z^3` sending `a, a'` to `(1,0,0)`,
/// `b, b'` to `(0,1,0)` and `c, c'` to `(0,0,1)`.
pub fn c6_functor(cat: &FiniteCategory) -> CategoryFunctor {
    let table: [(&str, [i64; 3]); 12] = [
        ("a", [1, 0, 0]),
        ("a'", [1, 0, 0]),
        ("b", [0, 1, 0]),
        ("b'", [0, 1, 0]),
        ("c", [0, 0, 1]),
        ("c'", [0, 0, 1]),
        ("aa'", [2, 0, 0]),
        ("bb'", [0, 2, 0]),
        ("cc'", [0, 0, 2]),
        ("abar", [0, 1, 1]),
        ("bbar", [1, 0, 1]),
        ("cbar", [1, 1, 0]),
    ];
    let images =
        table.iter().map(|(n, v)| (cat.arrow_by_name(n).expect("C6 arrow"), GroupWord::Abelian(v.to_vec())));
    CategoryFunctor::new(cat, GroupKind::Abelian { rank: 3 }, images).expect("complete images")
}

fn presentation(generators: &[&str], relations: &[(&str, &str)]) -> MonoidPresentation {
    fn split(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }
    let rels: Vec<(Vec<&str>, Vec<&str>)> = relations.iter().map(|(l, r)| (split(l), split(r))).collect();
    MonoidPresentation::new(generators, &rels).expect("catalog presentations are valid")
}

/// `⟨a, b, c, a', b', c' | ab' = ba', bc' = cb', ac' = ca'⟩`.
pub fn c6_presentation() -> MonoidPresentation {
    presentation(&["a", "b", "c", "a'", "b'", "c'"], &[("a b'", "b a'"), ("b c'", "c b'"), ("a c'", "c a'")])
}

/// `⟨a, b, c, d, e, f | ae = cb, da = bf⟩`.
pub fn m6_presentation() -> MonoidPresentation {
    presentation(&["a", "b", "c", "d", "e", "f"], &[("a e", "c b"), ("d a", "b f")])
}

/// The positive braid monoid on three strands, `⟨a, b | aba = bab⟩`.
pub fn b3_plus_presentation() -> MonoidPresentation {
    presentation(&["a", "b"], &[("a b a", "b a b")])
}
