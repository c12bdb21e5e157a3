//! Interval categories and interval monoids of finite posets: the gcd
//! criterion, barycentric subdivisions, functoriality, and the embeddings
//! into a free group and into a free monoid.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::category::{ArrowId, FiniteCategory, RawCategory};
use crate::complex::SimplicialComplex;
use crate::group::{FreeWord, Letter};
use crate::monoid::{ReducedSeq, UniversalMonoid};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element `{0}` has no image")]
    MissingImage(String),
    #[error("element `{0}` is sent twice")]
    DuplicateImage(String),
    #[error("map is not isotone: {0} ≤ {1} but their images are not ordered")]
    NotIsotone(String, String),
}

/// Name of the interval arrow from `x` to `y`.
pub fn interval_name(x: &str, y: &str) -> String {
    format!("[{x},{y}]")
}

/// The category of closed intervals of `p`: one arrow `[x,y]` per pair
/// `x ≤ y`, with `[x,y]·[y,z] = [x,z]` and identities `[x,x]`.
pub fn cat_of_poset(p: &Poset) -> FiniteCategory {
    build(p).0
}

fn build(p: &Poset) -> (FiniteCategory, Vec<(usize, usize)>) {
    let n = p.len();
    let mut raw = RawCategory::new();
    let mut ends = Vec::new();
    for x in 0..n {
        raw.object_with_identity(p.name(x), interval_name(p.name(x), p.name(x)));
        ends.push((x, x));
    }
    for x in 0..n {
        for y in 0..n {
            if p.lt(x, y) {
                raw.arrow(interval_name(p.name(x), p.name(y)), p.name(x), p.name(y));
                ends.push((x, y));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if p.lt(x, y) && p.lt(y, z) {
                    raw.comp(
                        interval_name(p.name(x), p.name(y)),
                        interval_name(p.name(y), p.name(z)),
                        interval_name(p.name(x), p.name(z)),
                    );
                }
            }
        }
    }
    let cat = raw.validate_with_limit(usize::MAX).expect("interval categories are valid");
    (cat, ends)
}

/// `HM(P)`: the universal monoid of the interval category, together with
/// the endpoints of every arrow.
#[derive(Clone, Debug)]
pub struct IntervalMonoid {
    poset: Poset,
    cat: FiniteCategory,
    ends: Vec<(usize, usize)>,
    arrow_of: HashMap<(usize, usize), ArrowId>,
}

impl IntervalMonoid {
    pub fn new(p: &Poset) -> Self {
        let (cat, ends) = build(p);
        let arrow_of = ends.iter().enumerate().map(|(i, &e)| (e, ArrowId(i as u32))).collect();
        IntervalMonoid { poset: p.clone(), cat, ends, arrow_of }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.cat
    }

    pub fn monoid(&self) -> UniversalMonoid<'_> {
        UniversalMonoid::new(&self.cat)
    }

    /// The arrow `[x,y]`, when `x ≤ y`.
    pub fn arrow(&self, x: usize, y: usize) -> Option<ArrowId> {
        self.arrow_of.get(&(x, y)).copied()
    }

    pub fn ends(&self, a: ArrowId) -> (usize, usize) {
        self.ends[a.index()]
    }
}

/// Outcome of [`gcd_criterion`]. Witnesses are `(a, y1, y2)` where `y1`
/// and `y2` have no meet in `↑a` (left) or no join in `↓a` (right).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdCriterionReport {
    pub left_ok: bool,
    pub right_ok: bool,
    pub left_witness: Option<(String, String, String)>,
    pub right_witness: Option<(String, String, String)>,
}

impl GcdCriterionReport {
    pub fn is_gcd(&self) -> bool {
        self.left_ok && self.right_ok
    }
}

/// Left: every up-set `↑a` is a meet-semilattice. Right: every down-set
/// `↓a` is a join-semilattice.
pub fn gcd_criterion(p: &Poset) -> GcdCriterionReport {
    let names = |(a, y1, y2): (usize, usize, usize)| {
        (p.name(a).to_string(), p.name(y1).to_string(), p.name(y2).to_string())
    };
    let find = |left: bool| {
        for a in 0..p.len() {
            let set = if left { p.up_set(a) } else { p.down_set(a) };
            for (i, &y1) in set.iter().enumerate() {
                for &y2 in &set[i + 1..] {
                    let ok = if left {
                        p.meet_within(&set, y1, y2).is_some()
                    } else {
                        p.join_within(&set, y1, y2).is_some()
                    };
                    if !ok {
                        return Some((a, y1, y2));
                    }
                }
            }
        }
        None
    };
    let left = find(true);
    let right = find(false);
    GcdCriterionReport {
        left_ok: left.is_none(),
        right_ok: right.is_none(),
        left_witness: left.map(names),
        right_witness: right.map(names),
    }
}

/// The poset of simplices of `k` ordered by inclusion; elements are
/// labelled `{x,y,...}`.
pub fn barycentric(k: &SimplicialComplex) -> Poset {
    let simplices = k.simplices();
    let labels: Vec<String> = simplices.iter().map(|s| k.simplex_label(s)).collect();
    let index: HashMap<&[usize], usize> =
        simplices.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut covers = Vec::new();
    for (j, t) in simplices.iter().enumerate() {
        if t.len() < 2 {
            continue;
        }
        for skip in 0..t.len() {
            let face: Vec<usize> =
                t.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            covers.push((index[face.as_slice()], j));
        }
    }
    Poset::from_relation(&labels, &covers).expect("inclusion is a partial order")
}

/// An isotone map between two posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotoneMap {
    images: Vec<usize>,
}

impl IsotoneMap {
    /// Builds the map from `(x, f(x))` name pairs covering every element
    /// of `p`.
    pub fn new<S: AsRef<str>>(p: &Poset, q: &Poset, pairs: &[(S, S)]) -> Result<Self, IntervalError> {
        let mut images = vec![None; p.len()];
        for (x, y) in pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let i = p.index_of(x).ok_or_else(|| IntervalError::UnknownElement(x.to_string()))?;
            let j = q.index_of(y).ok_or_else(|| IntervalError::UnknownElement(y.to_string()))?;
            if images[i].replace(j).is_some() {
                return Err(IntervalError::DuplicateImage(x.to_string()));
            }
        }
        let images: Vec<usize> = images
            .into_iter()
            .enumerate()
            .map(|(i, f)| f.ok_or_else(|| IntervalError::MissingImage(p.name(i).to_string())))
            .collect::<Result<_, _>>()?;
        Self::from_indices(p, q, images)
    }

    pub fn from_indices(p: &Poset, q: &Poset, images: Vec<usize>) -> Result<Self, IntervalError> {
        for &(x, y) in p.covers() {
            if !q.leq(images[x], images[y]) {
                return Err(IntervalError::NotIsotone(p.name(x).to_string(), p.name(y).to_string()));
            }
        }
        Ok(IsotoneMap { images })
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.images.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// `HM(f)`: `[x,y] ↦ [f(x),f(y)]`, extended multiplicatively and
    /// reduced.
    pub fn apply(&self, src: &IntervalMonoid, dst: &IntervalMonoid, x: &ReducedSeq) -> ReducedSeq {
        let raw: Vec<ArrowId> = x
            .arrows()
            .iter()
            .map(|&a| {
                let (lo, hi) = src.ends(a);
                dst.arrow(self.images[lo], self.images[hi]).expect("isotone images are ordered")
            })
            .collect();
        dst.monoid().reduce(&raw)
    }
}

/// `[x1,y1]···[xn,yn] ↦ x1^-1 y1 ··· xn^-1 yn` in the free group on the
/// elements of the poset (generator `i` is element `i`).
pub fn embed_free_group(im: &IntervalMonoid, x: &ReducedSeq) -> FreeWord {
    FreeWord::from_letters(x.arrows().iter().flat_map(|&a| {
        let (lo, hi) = im.ends(a);
        [Letter::new(lo, true), Letter::new(hi, false)]
    }))
}

/// The embedding of `HM(P)` into the free monoid on the consecutive steps
/// of a linear extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMonoidEmbedding {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl FreeMonoidEmbedding {
    pub fn new(p: &Poset) -> Self {
        let order = p.linear_extension();
        let mut position = vec![0; p.len()];
        for (i, &x) in order.iter().enumerate() {
            position[x] = i;
        }
        FreeMonoidEmbedding { order, position }
    }

    /// Elements in linear-extension order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    /// Letter `i` is the step from position `i` to `i + 1`.
    pub fn alphabet(&self) -> Vec<String> {
        (0..self.order.len().saturating_sub(1)).map(|i| format!("s{}{}", i, i + 1)).collect()
    }

    pub fn image(&self, im: &IntervalMonoid, x: &ReducedSeq) -> Vec<usize> {
        let mut out = Vec::new();
        for &a in x.arrows() {
            let (lo, hi) = im.ends(a);
            out.extend(self.position[lo]..self.position[hi]);
        }
        out
    }

    pub fn display(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = word.iter().map(|&i| format!("s{}{}", i, i + 1)).collect();
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn interval_category_sizes() {
        let chain = cat_of_poset(&catalog::chain_poset(3));
        assert_eq!(chain.arrow_count(), 6);
        assert_eq!(chain.proper_composite_count(), 1);
        let anti = Poset::from_covers(&["a", "b"], &[] as &[(&str, &str)]).unwrap();
        let c = cat_of_poset(&anti);
        assert_eq!(c.arrow_count(), 2);
        assert!(c.arrow_ids().all(|a| c.is_identity(a)));
        let d = cat_of_poset(&catalog::diamond_poset());
        assert_eq!(d.arrow_count(), 9);
        assert_eq!(d.proper_composite_count(), 2);
        assert!(d.is_conical() && d.is_left_cancellative() && d.is_right_cancellative());
    }

    #[test]
    fn gcd_criterion_examples() {
        assert!(gcd_criterion(&catalog::diamond_poset()).is_gcd());
        let r = gcd_criterion(&catalog::opqrs_poset());
        assert!(!r.left_ok);
        assert_eq!(r.left_witness, Some(("o".into(), "r".into(), "s".into())));
        assert!(r.right_ok);
        let one = Poset::from_covers(&["x"], &[] as &[(&str, &str)]).unwrap();
        assert!(gcd_criterion(&one).is_gcd());
    }

    #[test]
    fn barycentric_examples() {
        let edge = SimplicialComplex::from_maximal(&[vec!["x", "y"]]).unwrap();
        let p = barycentric(&edge);
        assert_eq!(p.len(), 3);
        assert_eq!(p.covers().len(), 2);
        let top = p.index_of("{x,y}").unwrap();
        assert!(p.lt(p.index_of("{x}").unwrap(), top));
        let tri = SimplicialComplex::from_maximal(&[vec!["x", "y", "z"]]).unwrap();
        let p = barycentric(&tri);
        assert_eq!(p.len(), 7);
        assert_eq!(p.covers().len(), 9);
        assert!(gcd_criterion(&p).is_gcd());
    }

    #[test]
    fn functor_examples() {
        let p = catalog::diamond_poset();
        let im = IntervalMonoid::new(&p);
        let m = im.monoid();
        let id = IsotoneMap::from_indices(&p, &p, (0..p.len()).collect()).unwrap();
        let x = m.parse_word("[0,a] [0,b] [b,1]").unwrap();
        assert_eq!(id.apply(&im, &im, &x), x);
        let one = Poset::from_covers(&["*"], &[] as &[(&str, &str)]).unwrap();
        let pt = IntervalMonoid::new(&one);
        let c = IsotoneMap::from_indices(&p, &one, vec![0; 4]).unwrap();
        assert!(c.apply(&im, &pt, &x).is_empty());
        let a = p.index_of("a").unwrap();
        let zero = p.index_of("0").unwrap();
        let mut swap: Vec<usize> = (0..4).collect();
        swap.swap(a, zero);
        assert_eq!(
            IsotoneMap::from_indices(&p, &p, swap),
            Err(IntervalError::NotIsotone("0".into(), "a".into()))
        );
    }

    #[test]
    fn free_group_embedding() {
        let p = catalog::diamond_poset();
        let im = IntervalMonoid::new(&p);
        let m = im.monoid();
        let x = m.parse_word("[0,a]").unwrap();
        assert_eq!(embed_free_group(&im, &x).display(p.names()), "0^-1 a");
        let y = m.parse_word("[0,a] [0,b]").unwrap();
        assert_eq!(embed_free_group(&im, &y).display(p.names()), "0^-1 a 0^-1 b");
        assert!(embed_free_group(&im, &m.one()).is_identity());
        let z = m.parse_word("[0,a] [a,1]").unwrap();
        assert_eq!(embed_free_group(&im, &z).display(p.names()), "0^-1 1");
    }

    #[test]
    fn free_monoid_embedding() {
        let p = catalog::chain_poset(3);
        let im = IntervalMonoid::new(&p);
        let e = FreeMonoidEmbedding::new(&p);
        let x = im.monoid().parse_word("[0,2]").unwrap();
        assert_eq!(e.display(&e.image(&im, &x)), "s01 s12");
        let d = catalog::diamond_poset();
        let im = IntervalMonoid::new(&d);
        let e = FreeMonoidEmbedding::new(&d);
        let m = im.monoid();
        let (u, v) = (m.parse_word("[0,a] [a,1]").unwrap(), m.parse_word("[0,b] [b,1]").unwrap());
        assert_eq!(e.image(&im, &u), e.image(&im, &v));
        assert_eq!(e.alphabet(), vec!["s01", "s12", "s23"]);
    }
}
