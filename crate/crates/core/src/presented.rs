//! Monoids given by generators and relations. The word problem is solved
//! for homogeneous presentations (both sides of every relation have the
//! same length), where each congruence class is a finite orbit.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::catalog;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator in `{0}`")]
    UnknownGenerator(String),
    #[error("relation {0} has sides of different lengths")]
    NotHomogeneous(usize),
    #[error("empty family of words")]
    EmptyFamily,
}

/// A generator-index word.
pub type Word = Vec<usize>;

/// A monoid presentation. Relations need not be homogeneous, but the
/// word-problem operations refuse presentations that are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidPresentation {
    generators: Vec<String>,
    relations: Vec<(Word, Word)>,
    index: HashMap<String, usize>,
}

impl MonoidPresentation {
    pub fn new<S: AsRef<str>>(
        generators: &[S],
        relations: &[(Vec<S>, Vec<S>)],
    ) -> Result<Self, PresentationError> {
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.as_ref().to_string(), i).is_some() {
                return Err(PresentationError::DuplicateGenerator(g.as_ref().to_string()));
            }
        }
        let lookup = |w: &[S]| -> Result<Word, PresentationError> {
            w.iter()
                .map(|g| {
                    index
                        .get(g.as_ref())
                        .copied()
                        .ok_or_else(|| PresentationError::UnknownGenerator(g.as_ref().to_string()))
                })
                .collect()
        };
        let relations = relations
            .iter()
            .map(|(l, r)| Ok((lookup(l)?, lookup(r)?)))
            .collect::<Result<_, PresentationError>>()?;
        Ok(MonoidPresentation {
            generators: generators.iter().map(|g| g.as_ref().to_string()).collect(),
            relations,
            index,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn is_homogeneous(&self) -> bool {
        self.require_homogeneous().is_ok()
    }

    fn require_homogeneous(&self) -> Result<(), PresentationError> {
        match self.relations.iter().position(|(l, r)| l.len() != r.len()) {
            Some(i) => Err(PresentationError::NotHomogeneous(i)),
            None => Ok(()),
        }
    }

    /// Parses a word. Tokens are separated by whitespace; a token that is
    /// not a generator is split by longest match, so `ab'` reads as `a b'`.
    /// `1` or an empty string is the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word, PresentationError> {
        if s.trim() == "1" && !self.index.contains_key("1") {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if let Some(&g) = self.index.get(tok) {
                out.push(g);
                continue;
            }
            let mut rest = tok;
            while !rest.is_empty() {
                let (g, len) = self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|(_, name)| !name.is_empty() && rest.starts_with(name.as_str()))
                    .map(|(g, name)| (g, name.len()))
                    .max_by_key(|&(_, len)| len)
                    .ok_or_else(|| PresentationError::UnknownGenerator(tok.to_string()))?;
                out.push(g);
                rest = &rest[len..];
            }
        }
        Ok(out)
    }

    /// Generator names concatenated when that reads back unambiguously,
    /// otherwise separated by spaces; `1` for the empty word.
    pub fn display(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let compact: String = w.iter().map(|&g| self.generators[g].as_str()).collect();
        if self.parse_word(&compact).ok().as_deref() == Some(w) {
            compact
        } else {
            let parts: Vec<&str> = w.iter().map(|&g| self.generators[g].as_str()).collect();
            parts.join(" ")
        }
    }

    /// All words equal to `w`, found by applying relations in both
    /// directions at every position until nothing new appears.
    pub fn congruence_class(&self, w: &[usize]) -> Result<BTreeSet<Word>, PresentationError> {
        self.require_homogeneous()?;
        Ok(self.orbit(w))
    }

    fn orbit(&self, w: &[usize]) -> BTreeSet<Word> {
        let mut seen = BTreeSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(u) = queue.pop_front() {
            for (l, r) in &self.relations {
                for (from, to) in [(l, r), (r, l)] {
                    if from.len() > u.len() {
                        continue;
                    }
                    for i in 0..=u.len() - from.len() {
                        if u[i..i + from.len()] == from[..] {
                            let mut v = u.clone();
                            v.splice(i..i + from.len(), to.iter().copied());
                            if seen.insert(v.clone()) {
                                queue.push_back(v);
                            }
                        }
                    }
                }
            }
        }
        seen
    }

    /// The least word of the class of `w`.
    pub fn canonical(&self, w: &[usize]) -> Result<Word, PresentationError> {
        self.require_homogeneous()?;
        Ok(self.orbit(w).into_iter().next().expect("orbit contains w"))
    }

    pub fn equal(&self, u: &[usize], v: &[usize]) -> Result<bool, PresentationError> {
        self.require_homogeneous()?;
        Ok(u.len() == v.len() && self.orbit(u).contains(v))
    }

    /// Every generator of a homogeneous presentation is an atom; this
    /// confirms that and lists generators equal to one another.
    pub fn atoms(&self) -> Result<AtomsReport, PresentationError> {
        self.require_homogeneous()?;
        let mut classes: Vec<Vec<String>> = Vec::new();
        let mut placed = vec![false; self.generators.len()];
        let mut atoms = Vec::new();
        for g in 0..self.generators.len() {
            let class = self.orbit(&[g]);
            if class.iter().any(|w| w.len() != 1) {
                continue;
            }
            atoms.push(self.generators[g].clone());
            if placed[g] {
                continue;
            }
            let members: Vec<usize> = class.iter().map(|w| w[0]).collect();
            for &m in &members {
                placed[m] = true;
            }
            classes.push(members.iter().map(|&m| self.generators[m].clone()).collect());
        }
        let identified = classes.into_iter().filter(|c| c.len() > 1).collect();
        Ok(AtomsReport { atoms, identified })
    }

    /// A shortest common right multiple of the family with length at most
    /// `max_len`, as the least word of its class; `None` if there is none
    /// within the bound.
    pub fn common_right_multiple(
        &self,
        xs: &[Word],
        max_len: usize,
    ) -> Result<Option<Word>, PresentationError> {
        self.require_homogeneous()?;
        let Some(first) = xs.first() else {
            return Err(PresentationError::EmptyFamily);
        };
        let start = xs.iter().map(Vec::len).max().unwrap_or(0);
        if start > max_len {
            return Ok(None);
        }
        let prefix_classes: Vec<BTreeSet<Word>> = xs[1..].iter().map(|x| self.orbit(x)).collect();
        // Right multiples of the first word, one class (by least member) per
        // entry, grown one generator at a time.
        let mut layer: BTreeSet<Word> = BTreeSet::from([self.canonical(first)?]);
        for _ in first.len()..start {
            layer = self.extend_layer(&layer);
        }
        for len in start..=max_len {
            for c in &layer {
                let class = self.orbit(c);
                let ok = xs[1..]
                    .iter()
                    .zip(&prefix_classes)
                    .all(|(x, pc)| class.iter().any(|m| pc.contains(&m[..x.len()])));
                if ok {
                    return Ok(Some(c.clone()));
                }
            }
            if len < max_len {
                layer = self.extend_layer(&layer);
            }
        }
        Ok(None)
    }

    fn extend_layer(&self, layer: &BTreeSet<Word>) -> BTreeSet<Word> {
        let mut next = BTreeSet::new();
        for c in layer {
            for g in 0..self.generators.len() {
                let mut w = c.clone();
                w.push(g);
                next.insert(self.orbit(&w).into_iter().next().expect("nonempty orbit"));
            }
        }
        next
    }

    /// Checks the 3-Ore condition on a triple: each pair has a common right
    /// multiple, and whether the triple has one, within `max_len`.
    pub fn three_ore(&self, xs: [&Word; 3], max_len: usize) -> Result<ThreeOreReport, PresentationError> {
        let mut pairwise = Vec::new();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let m = self.common_right_multiple(&[xs[i].clone(), xs[j].clone()], max_len)?;
            pairwise.push(PairMultiple {
                left: self.display(xs[i]),
                right: self.display(xs[j]),
                multiple: m.map(|w| self.display(&w)),
            });
        }
        let global = self
            .common_right_multiple(&[xs[0].clone(), xs[1].clone(), xs[2].clone()], max_len)?
            .map(|w| self.display(&w));
        let fails = pairwise.iter().all(|p| p.multiple.is_some()) && global.is_none();
        Ok(ThreeOreReport { max_len, pairwise, global, fails_within_bound: fails })
    }

    /// Words of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.generators.len());
            for w in &layer {
                for g in 0..self.generators.len() {
                    let mut v: Word = w.clone();
                    v.push(g);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomsReport {
    pub atoms: Vec<String>,
    /// Classes of generators that are equal in the monoid.
    pub identified: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairMultiple {
    pub left: String,
    pub right: String,
    pub multiple: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeOreReport {
    pub max_len: usize,
    pub pairwise: Vec<PairMultiple>,
    pub global: Option<String>,
    /// Every pair has a common right multiple but the triple has none
    /// within the bound.
    pub fails_within_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub left_image: String,
    pub right_image: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct M6Report {
    pub max_len: usize,
    pub relations: Vec<RelationCheck>,
    pub classes: usize,
    pub injective: bool,
    /// Two distinct classes with the same image, if any.
    pub collision: Option<(String, String)>,
}

impl M6Report {
    pub fn passed(&self) -> bool {
        self.injective && self.relations.iter().all(|r| r.holds)
    }
}

/// The map `a ↦ a, b ↦ b, c ↦ ax, d ↦ by, e ↦ xb, f ↦ ya` from the
/// monoid `⟨a,…,f | ae = cb, da = bf⟩` into the free monoid on
/// `a, b, x, y`: checks that it respects both relations and is injective
/// on classes of words of length at most `max_len`.
pub fn verify_m6_embedding(max_len: usize) -> M6Report {
    let pres = catalog::m6_presentation();
    let images: [&str; 6] = ["a", "b", "ax", "by", "xb", "ya"];
    let image = |w: &[usize]| -> String { w.iter().map(|&g| images[g]).collect() };
    let relations = pres
        .relations()
        .iter()
        .map(|(l, r)| {
            let (li, ri) = (image(l), image(r));
            RelationCheck {
                relation: format!("{} = {}", pres.display(l), pres.display(r)),
                holds: li == ri,
                left_image: li,
                right_image: ri,
            }
        })
        .collect();
    let mut class_image: HashMap<Word, String> = HashMap::new();
    for w in pres.words_up_to(max_len) {
        let canon = pres.orbit(&w).into_iter().next().expect("nonempty orbit");
        class_image.entry(canon).or_insert_with(|| image(&w));
    }
    let mut by_image: HashMap<&str, &Word> = HashMap::new();
    let mut sorted: Vec<(&Word, &String)> = class_image.iter().collect();
    sorted.sort();
    let mut collision = None;
    for (c, img) in sorted {
        if let Some(prev) = by_image.insert(img.as_str(), c) {
            collision = Some((pres.display(prev), pres.display(c)));
            break;
        }
    }
    M6Report { max_len, relations, classes: class_image.len(), injective: collision.is_none(), collision }
}
