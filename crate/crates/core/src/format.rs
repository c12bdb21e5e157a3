//! Line-oriented text formats for posets, complexes, categories, isotone
//! maps, group and monoid presentations, and functors.
//!
//! Every file starts with a header word naming its kind. Blank lines are
//! ignored and `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::category::{CategoryError, FiniteCategory, RawCategory, DEFAULT_MAX_ARROWS};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::group::{CategoryFunctor, FreeWord, GroupError, GroupKind, GroupWord, Letter};
use crate::homotopy::{GroupPresentation, HomotopyError};
use crate::interval::{IntervalError, IsotoneMap};
use crate::poset::{Poset, PosetError};
use crate::presented::{MonoidPresentation, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("expected a `{0}` file")]
    MissingHeader(&'static str),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-blank lines with comments stripped, as `(line number, tokens)`,
/// after checking the header.
fn body<'a>(text: &'a str, header: &'static str) -> Result<Vec<(usize, Vec<&'a str>)>, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .map(|(i, l)| (i, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty());
    match lines.next() {
        Some((_, t)) if t == [header] => Ok(lines.collect()),
        _ => Err(FormatError::MissingHeader(header)),
    }
}

fn unknown(line: usize, directive: &str) -> FormatError {
    syntax(line, format!("unknown directive `{directive}`"))
}

pub fn parse_poset(text: &str) -> Result<Poset, FormatError> {
    let mut elems = Vec::new();
    let mut covers = Vec::new();
    for (line, t) in body(text, "poset")? {
        match t[0] {
            "elem" => elems.extend(t[1..].iter().map(|s| s.to_string())),
            "cover" if t.len() == 3 => covers.push((t[1].to_string(), t[2].to_string())),
            "cover" => return Err(syntax(line, "`cover` takes two elements")),
            d => return Err(unknown(line, d)),
        }
    }
    Ok(Poset::from_covers(&elems, &covers)?)
}

pub fn write_poset(p: &Poset) -> String {
    let mut s = String::from("poset\n");
    if !p.is_empty() {
        writeln!(s, "elem {}", p.names().join(" ")).expect("write to string");
    }
    for &(x, y) in p.covers() {
        writeln!(s, "cover {} {}", p.name(x), p.name(y)).expect("write to string");
    }
    s
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut simplices = Vec::new();
    for (line, t) in body(text, "complex")? {
        match t[0] {
            "simplex" if t.len() > 1 => simplices.push(t[1..].to_vec()),
            "simplex" => return Err(syntax(line, "`simplex` needs at least one vertex")),
            d => return Err(unknown(line, d)),
        }
    }
    Ok(SimplicialComplex::from_maximal(&simplices)?)
}

pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut s = String::from("complex\n");
    for m in k.maximal_simplices() {
        let names: Vec<&str> = m.iter().map(|&v| k.vertex_name(v)).collect();
        writeln!(s, "simplex {}", names.join(" ")).expect("write to string");
    }
    s
}

pub fn parse_category(text: &str) -> Result<FiniteCategory, FormatError> {
    parse_category_with_limit(text, DEFAULT_MAX_ARROWS)
}

/// Identities are implicit and named `id:<object>`.
pub fn parse_category_with_limit(text: &str, limit: usize) -> Result<FiniteCategory, FormatError> {
    let mut raw = RawCategory::new();
    for (line, t) in body(text, "category")? {
        match (t[0], t.len()) {
            ("obj", _) => {
                for o in &t[1..] {
                    raw.object(*o);
                }
            }
            ("arrow", 4) => {
                raw.arrow(t[1], t[2], t[3]);
            }
            ("comp", 4) => {
                raw.comp(t[1], t[2], t[3]);
            }
            ("arrow", _) => return Err(syntax(line, "`arrow` takes a name, a source and a target")),
            ("comp", _) => return Err(syntax(line, "`comp` takes three arrows")),
            (d, _) => return Err(unknown(line, d)),
        }
    }
    Ok(raw.validate_with_limit(limit)?)
}

/// Writes objects, non-identity arrows and the composites of pairs of
/// non-identities. Identities are written under their implicit names.
pub fn write_category(cat: &FiniteCategory) -> String {
    let name = |a| {
        if cat.is_identity(a) {
            format!("id:{}", cat.object_name(cat.src(a)))
        } else {
            cat.name(a).to_string()
        }
    };
    let mut s = String::from("category\n");
    let objs: Vec<&str> = cat.object_ids().map(|o| cat.object_name(o)).collect();
    if !objs.is_empty() {
        writeln!(s, "obj {}", objs.join(" ")).expect("write to string");
    }
    for a in cat.proper_arrows() {
        writeln!(s, "arrow {} {} {}", name(a), cat.object_name(cat.src(a)), cat.object_name(cat.tgt(a)))
            .expect("write to string");
    }
    for f in cat.proper_arrows() {
        for &g in cat.outgoing(cat.tgt(f)) {
            if !cat.is_identity(g) {
                let h = cat.compose(f, g).expect("composable");
                writeln!(s, "comp {} {} {}", name(f), name(g), name(h)).expect("write to string");
            }
        }
    }
    s
}

pub fn parse_map(text: &str, p: &Poset, q: &Poset) -> Result<IsotoneMap, FormatError> {
    let mut pairs = Vec::new();
    for (line, t) in body(text, "map")? {
        match (t[0], t.len()) {
            ("send", 3) => pairs.push((t[1], t[2])),
            ("send", _) => return Err(syntax(line, "`send` takes two elements")),
            (d, _) => return Err(unknown(line, d)),
        }
    }
    Ok(IsotoneMap::new(p, q, &pairs)?)
}

fn parse_free_word(tokens: &[&str], alphabet: &[String], line: usize) -> Result<FreeWord, FormatError> {
    if tokens == ["1"] && !alphabet.iter().any(|a| a == "1") {
        return Ok(FreeWord::identity());
    }
    let mut letters = Vec::new();
    for tok in tokens {
        let (name, inverse) = match tok.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (*tok, false),
        };
        let g = alphabet
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| syntax(line, format!("unknown generator `{name}`")))?;
        letters.push(Letter::new(g, inverse));
    }
    Ok(FreeWord::from_letters(letters))
}

pub fn parse_group_presentation(text: &str) -> Result<GroupPresentation, FormatError> {
    let mut generators: Vec<String> = Vec::new();
    let mut rels = Vec::new();
    for (line, t) in body(text, "presentation")? {
        match t[0] {
            "gen" => generators.extend(t[1..].iter().map(|s| s.to_string())),
            "rel" => rels.push((line, t[1..].to_vec())),
            d => return Err(unknown(line, d)),
        }
    }
    let relators =
        rels.into_iter().map(|(line, t)| parse_free_word(&t, &generators, line)).collect::<Result<_, _>>()?;
    Ok(GroupPresentation::new(generators, relators)?)
}

pub fn write_group_presentation(p: &GroupPresentation) -> String {
    let mut s = String::from("presentation\n");
    if !p.generators().is_empty() {
        writeln!(s, "gen {}", p.generators().join(" ")).expect("write to string");
    }
    for r in p.relator_strings() {
        writeln!(s, "rel {r}").expect("write to string");
    }
    s
}

pub fn parse_monoid_presentation(text: &str) -> Result<MonoidPresentation, FormatError> {
    let mut generators: Vec<String> = Vec::new();
    let mut relations: Vec<(Vec<String>, Vec<String>)> = Vec::new();
    for (line, t) in body(text, "monoid")? {
        match t[0] {
            "gen" => generators.extend(t[1..].iter().map(|s| s.to_string())),
            "rel" => {
                let eq = t
                    .iter()
                    .position(|&x| x == "=")
                    .ok_or_else(|| syntax(line, "`rel` needs `=` between two words"))?;
                let side = |w: &[&str]| -> Vec<String> {
                    if w == ["1"] {
                        Vec::new()
                    } else {
                        w.iter().map(|s| s.to_string()).collect()
                    }
                };
                relations.push((side(&t[1..eq]), side(&t[eq + 1..])));
            }
            d => return Err(unknown(line, d)),
        }
    }
    Ok(MonoidPresentation::new(&generators, &relations)?)
}

pub fn write_monoid_presentation(p: &MonoidPresentation) -> String {
    let word = |w: &[usize]| -> String {
        if w.is_empty() {
            "1".to_string()
        } else {
            let parts: Vec<&str> = w.iter().map(|&g| p.generators()[g].as_str()).collect();
            parts.join(" ")
        }
    };
    let mut s = String::from("monoid\n");
    if !p.generators().is_empty() {
        writeln!(s, "gen {}", p.generators().join(" ")).expect("write to string");
    }
    for (l, r) in p.relations() {
        writeln!(s, "rel {} = {}", word(l), word(r)).expect("write to string");
    }
    s
}

/// Parses `(1,0,-2)`; `()` is the zero vector of dimension 0.
fn parse_vector(s: &str, line: usize) -> Result<Vec<i64>, FormatError> {
    let inner = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| syntax(line, format!("expected a vector like (1,0,0), got `{s}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| syntax(line, format!("bad integer `{x}`"))))
        .collect()
}

/// Reads a functor on `cat`. Images of identities may be omitted.
pub fn parse_functor(text: &str, cat: &FiniteCategory) -> Result<CategoryFunctor, FormatError> {
    let mut target: Option<GroupKind> = None;
    let mut images = Vec::new();
    for (line, t) in body(text, "functor")? {
        match t[0] {
            "target" => {
                target = Some(match t.get(1) {
                    Some(&"zn") if t.len() == 3 => {
                        GroupKind::Abelian { rank: t[2].parse().map_err(|_| syntax(line, "bad dimension"))? }
                    }
                    Some(&"free") => {
                        GroupKind::Free { alphabet: t[2..].iter().map(|s| s.to_string()).collect() }
                    }
                    _ => return Err(syntax(line, "expected `target zn <n>` or `target free <letters>`")),
                });
            }
            "image" if t.len() >= 3 => {
                let kind = target.as_ref().ok_or_else(|| syntax(line, "`image` before `target`"))?;
                let a = cat
                    .arrow_by_name(t[1])
                    .ok_or_else(|| syntax(line, format!("unknown arrow `{}`", t[1])))?;
                let w = match kind {
                    GroupKind::Abelian { .. } => GroupWord::Abelian(parse_vector(&t[2..].concat(), line)?),
                    GroupKind::Free { alphabet } => {
                        GroupWord::Free(parse_free_word(&t[2..], alphabet, line)?)
                    }
                    GroupKind::FreeProduct { .. } => unreachable!("not parsed"),
                };
                images.push((a, w));
            }
            "image" => return Err(syntax(line, "`image` takes an arrow and a value")),
            d => return Err(unknown(line, d)),
        }
    }
    let target = target.ok_or(FormatError::MissingHeader("target"))?;
    Ok(CategoryFunctor::new(cat, target, images)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn poset_round_trip() {
        let p = catalog::diamond_poset();
        let text = write_poset(&p);
        assert_eq!(text, "poset\nelem 0 a b 1\ncover 0 a\ncover 0 b\ncover a 1\ncover b 1\n");
        assert_eq!(parse_poset(&text).unwrap(), p);
        let err = parse_poset("poset\nelem x y z\ncover x y\ncover y z\ncover x z\n").unwrap_err();
        assert!(matches!(err, FormatError::Poset(PosetError::RedundantCover(..))));
        assert_eq!(parse_poset("complex\n"), Err(FormatError::MissingHeader("poset")));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_poset("# a chain\n\nposet\nelem 0 1 # two\ncover 0 1\n").unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn complex_round_trip() {
        let k = catalog::square_complex();
        assert_eq!(parse_complex(&write_complex(&k)).unwrap(), k);
    }

    #[test]
    fn category_round_trip() {
        for cat in [catalog::c6_category(), catalog::cyclic_two(), catalog::equalized_pair()] {
            let text = write_category(&cat);
            let back = parse_category(&text).unwrap();
            assert_eq!(write_category(&back), text);
            assert_eq!(back.arrow_count(), cat.arrow_count());
        }
        let text = write_category(&catalog::diamond_category());
        assert!(text.contains("comp [0,a] [a,1] [0,1]"));
        assert_eq!(parse_category(&text).unwrap().arrow_count(), 9);
    }

    #[test]
    fn category_errors() {
        let err = parse_category("category\nobj x y\narrow f x y\narrow g x y\ncomp f g f\n").unwrap_err();
        assert!(matches!(err, FormatError::Category(CategoryError::BadComposability { .. })));
        let err = parse_category("category\nobj x\nfrob\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }));
    }

    #[test]
    fn presentations_round_trip() {
        let p = parse_group_presentation("presentation\ngen x y\nrel x y x^-1 y^-1\n").unwrap();
        assert_eq!(p.relator_strings(), vec!["x y x^-1 y^-1"]);
        assert_eq!(parse_group_presentation(&write_group_presentation(&p)).unwrap(), p);
        let m = catalog::c6_presentation();
        assert_eq!(parse_monoid_presentation(&write_monoid_presentation(&m)).unwrap(), m);
    }

    #[test]
    fn functor_file() {
        let cat = catalog::c6_category();
        let text = "functor\ntarget zn 3\nimage a (1,0,0)\nimage a' (1,0,0)\nimage b (0,1,0)\n\
            image b' (0,1,0)\nimage c (0,0,1)\nimage c' (0,0,1)\nimage aa' (2,0,0)\n\
            image bb' (0,2,0)\nimage cc' (0,0,2)\nimage abar (0,1,1)\nimage bbar (1,0,1)\n\
            image cbar (1,1,0)\n";
        let f = parse_functor(text, &cat).unwrap();
        assert_eq!(f, catalog::c6_functor(&cat));
        let err = parse_functor("functor\ntarget zn 3\nimage a (1,0,0)\n", &cat).unwrap_err();
        assert!(matches!(err, FormatError::Group(GroupError::MissingImage(_))));
    }

    #[test]
    fn map_file() {
        let p = catalog::chain_poset(3);
        let q = catalog::diamond_poset();
        let f = parse_map("map\nsend 0 0\nsend 1 a\nsend 2 1\n", &p, &q).unwrap();
        assert!(f.is_injective());
        let err = parse_map("map\nsend 0 1\nsend 1 a\nsend 2 1\n", &p, &q).unwrap_err();
        assert!(matches!(err, FormatError::Interval(IntervalError::NotIsotone(..))));
    }
}
