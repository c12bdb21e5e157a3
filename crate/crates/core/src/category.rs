//! Finite categories in the arrow-only view: a partial composition with
//! identities, plus the exhaustive category-level checks (conicality,
//! cancellativity, divisibility and gcds).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Default size guard for exhaustive algorithms.
pub const DEFAULT_MAX_ARROWS: usize = 10_000;

/// Index of an object of a [`FiniteCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub u32);

/// Index of an arrow of a [`FiniteCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub u32);

impl ObjectId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Left divisibility (`b = a·x`) or right divisibility (`b = x·a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate object id `{0}`")]
    DuplicateObject(String),
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("composite {f}·{g} listed but tgt({f}) ≠ src({g})")]
    BadComposability { f: String, g: String },
    #[error("composite {f}·{g} = {h} has the wrong source or target")]
    BadCompositeEndpoints { f: String, g: String, h: String },
    #[error("conflicting composites for {f}·{g}: `{first}` and `{second}`")]
    ConflictingComposite { f: String, g: String, first: String, second: String },
    #[error("composable pair {f}·{g} has no composite")]
    MissingComposite { f: String, g: String },
    #[error("associativity fails on ({f}, {g}, {h})")]
    AssociativityViolation { f: String, g: String, h: String },
    #[error("identity `{identity}` is not a unit for `{arrow}`")]
    BadIdentity { identity: String, arrow: String },
    #[error("category has {arrows} arrows, above the limit of {limit}")]
    TooLarge { arrows: usize, limit: usize },
    #[error("arrows `{a}` and `{b}` do not share a source")]
    SourceMismatch { a: String, b: String },
    #[error("arrows `{a}` and `{b}` do not share a target")]
    TargetMismatch { a: String, b: String },
}

/// Unvalidated category description: objects, non-identity arrows and
/// composition entries, all referenced by name.
///
/// Identities are added implicitly, one per object. Composition entries
/// involving an identity are optional; when given they must agree with the
/// unit laws.
#[derive(Clone, Debug, Default)]
pub struct RawCategory {
    objects: Vec<(String, String)>,
    arrows: Vec<(String, String, String)>,
    comps: Vec<(String, String, String)>,
}

impl RawCategory {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an object whose identity arrow is named `id:<name>`.
    pub fn object(&mut self, name: impl Into<String>) -> &mut Self {
        let name = name.into();
        let id = format!("id:{name}");
        self.objects.push((name, id));
        self
    }

    /// Adds an object with an explicitly named identity arrow.
    pub fn object_with_identity(
        &mut self,
        name: impl Into<String>,
        identity: impl Into<String>,
    ) -> &mut Self {
        self.objects.push((name.into(), identity.into()));
        self
    }

    pub fn arrow(
        &mut self,
        name: impl Into<String>,
        src: impl Into<String>,
        tgt: impl Into<String>,
    ) -> &mut Self {
        self.arrows.push((name.into(), src.into(), tgt.into()));
        self
    }

    /// Records `f·g = h` (diagrammatic order: `f` first, then `g`).
    pub fn comp(&mut self, f: impl Into<String>, g: impl Into<String>, h: impl Into<String>) -> &mut Self {
        self.comps.push((f.into(), g.into(), h.into()));
        self
    }

    pub fn validate(&self) -> Result<FiniteCategory, CategoryError> {
        self.validate_with_limit(DEFAULT_MAX_ARROWS)
    }

    pub fn validate_with_limit(&self, limit: usize) -> Result<FiniteCategory, CategoryError> {
        FiniteCategory::build(self, limit)
    }
}

#[derive(Clone, Debug)]
struct ArrowData {
    name: String,
    src: ObjectId,
    tgt: ObjectId,
}

/// A validated finite category.
///
/// Composition is stored per arrow `f` as a row indexed by the position of
/// `g` among the arrows leaving `tgt(f)`, so only composable pairs take
/// space.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    arrows: Vec<ArrowData>,
    identities: Vec<ArrowId>,
    is_identity: Vec<bool>,
    outgoing: Vec<Vec<ArrowId>>,
    incoming: Vec<Vec<ArrowId>>,
    out_pos: Vec<u32>,
    comp: Vec<Vec<ArrowId>>,
    object_index: HashMap<String, ObjectId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl FiniteCategory {
    fn build(raw: &RawCategory, limit: usize) -> Result<Self, CategoryError> {
        let total = raw.objects.len() + raw.arrows.len();
        if total > limit {
            return Err(CategoryError::TooLarge { arrows: total, limit });
        }
        let mut object_index = HashMap::new();
        let mut objects = Vec::new();
        for (name, _) in &raw.objects {
            let id = ObjectId(objects.len() as u32);
            if object_index.insert(name.clone(), id).is_some() {
                return Err(CategoryError::DuplicateObject(name.clone()));
            }
            objects.push(name.clone());
        }
        let lookup_obj = |name: &str| {
            object_index.get(name).copied().ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
        };

        let mut arrows = Vec::with_capacity(total);
        let mut arrow_index = HashMap::new();
        let mut identities = Vec::with_capacity(objects.len());
        for (i, (_, id_name)) in raw.objects.iter().enumerate() {
            let id = ArrowId(arrows.len() as u32);
            if arrow_index.insert(id_name.clone(), id).is_some() {
                return Err(CategoryError::DuplicateArrow(id_name.clone()));
            }
            arrows.push(ArrowData {
                name: id_name.clone(),
                src: ObjectId(i as u32),
                tgt: ObjectId(i as u32),
            });
            identities.push(id);
        }
        for (name, src, tgt) in &raw.arrows {
            let id = ArrowId(arrows.len() as u32);
            if arrow_index.insert(name.clone(), id).is_some() {
                return Err(CategoryError::DuplicateArrow(name.clone()));
            }
            arrows.push(ArrowData { name: name.clone(), src: lookup_obj(src)?, tgt: lookup_obj(tgt)? });
        }
        let mut is_identity = vec![false; arrows.len()];
        for id in &identities {
            is_identity[id.index()] = true;
        }

        let mut outgoing = vec![Vec::new(); objects.len()];
        let mut incoming = vec![Vec::new(); objects.len()];
        let mut out_pos = vec![0u32; arrows.len()];
        for (i, a) in arrows.iter().enumerate() {
            let o = &mut outgoing[a.src.index()];
            out_pos[i] = o.len() as u32;
            o.push(ArrowId(i as u32));
            incoming[a.tgt.index()].push(ArrowId(i as u32));
        }

        // NONE marks a composable pair without a recorded composite.
        const NONE: ArrowId = ArrowId(u32::MAX);
        let mut comp: Vec<Vec<ArrowId>> =
            arrows.iter().map(|a| vec![NONE; outgoing[a.tgt.index()].len()]).collect();

        let lookup_arrow = |name: &str| {
            arrow_index.get(name).copied().ok_or_else(|| CategoryError::UnknownArrow(name.to_string()))
        };
        for (f, g, h) in &raw.comps {
            let (fi, gi, hi) = (lookup_arrow(f)?, lookup_arrow(g)?, lookup_arrow(h)?);
            let (fa, ga, ha) = (&arrows[fi.index()], &arrows[gi.index()], &arrows[hi.index()]);
            if fa.tgt != ga.src {
                return Err(CategoryError::BadComposability { f: f.clone(), g: g.clone() });
            }
            if ha.src != fa.src || ha.tgt != ga.tgt {
                return Err(CategoryError::BadCompositeEndpoints {
                    f: f.clone(),
                    g: g.clone(),
                    h: h.clone(),
                });
            }
            let slot = &mut comp[fi.index()][out_pos[gi.index()] as usize];
            if *slot != NONE && *slot != hi {
                return Err(CategoryError::ConflictingComposite {
                    f: f.clone(),
                    g: g.clone(),
                    first: arrows[slot.index()].name.clone(),
                    second: h.clone(),
                });
            }
            *slot = hi;
        }

        // Unit laws: fill in identity composites, reject contradicting entries.
        for (fi, f) in arrows.iter().enumerate() {
            let id_t = identities[f.tgt.index()];
            let slot = &mut comp[fi][out_pos[id_t.index()] as usize];
            if *slot != NONE && slot.index() != fi {
                return Err(CategoryError::BadIdentity {
                    identity: arrows[id_t.index()].name.clone(),
                    arrow: f.name.clone(),
                });
            }
            *slot = ArrowId(fi as u32);
            let id_s = identities[f.src.index()];
            let slot = &mut comp[id_s.index()][out_pos[fi] as usize];
            if *slot != NONE && slot.index() != fi {
                return Err(CategoryError::BadIdentity {
                    identity: arrows[id_s.index()].name.clone(),
                    arrow: f.name.clone(),
                });
            }
            *slot = ArrowId(fi as u32);
        }

        for (fi, row) in comp.iter().enumerate() {
            for (pos, h) in row.iter().enumerate() {
                if *h == NONE {
                    let g = outgoing[arrows[fi].tgt.index()][pos];
                    return Err(CategoryError::MissingComposite {
                        f: arrows[fi].name.clone(),
                        g: arrows[g.index()].name.clone(),
                    });
                }
            }
        }

        let cat = FiniteCategory {
            objects,
            arrows,
            identities,
            is_identity,
            outgoing,
            incoming,
            out_pos,
            comp,
            object_index,
            arrow_index,
        };
        cat.check_associativity()?;
        Ok(cat)
    }

    fn check_associativity(&self) -> Result<(), CategoryError> {
        for f in self.arrow_ids() {
            for &g in self.outgoing(self.tgt(f)) {
                let fg = self.comp_unchecked(f, g);
                for &h in self.outgoing(self.tgt(g)) {
                    let left = self.comp_unchecked(fg, h);
                    let right = self.comp_unchecked(f, self.comp_unchecked(g, h));
                    if left != right {
                        return Err(CategoryError::AssociativityViolation {
                            f: self.name(f).to_string(),
                            g: self.name(g).to_string(),
                            h: self.name(h).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjectId> + '_ {
        (0..self.objects.len() as u32).map(ObjectId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len() as u32).map(ArrowId)
    }

    /// Non-identity arrows, in declaration order.
    pub fn proper_arrows(&self) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |a| !self.is_identity(*a))
    }

    pub fn object_name(&self, o: ObjectId) -> &str {
        &self.objects[o.index()]
    }

    pub fn name(&self, a: ArrowId) -> &str {
        &self.arrows[a.index()].name
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjectId> {
        self.object_index.get(name).copied()
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn src(&self, a: ArrowId) -> ObjectId {
        self.arrows[a.index()].src
    }

    pub fn tgt(&self, a: ArrowId) -> ObjectId {
        self.arrows[a.index()].tgt
    }

    pub fn identity(&self, o: ObjectId) -> ArrowId {
        self.identities[o.index()]
    }

    pub fn is_identity(&self, a: ArrowId) -> bool {
        self.is_identity[a.index()]
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        a.index() < self.arrows.len()
    }

    /// Arrows with source `o`, in declaration order.
    pub fn outgoing(&self, o: ObjectId) -> &[ArrowId] {
        &self.outgoing[o.index()]
    }

    /// Arrows with target `o`, in declaration order.
    pub fn incoming(&self, o: ObjectId) -> &[ArrowId] {
        &self.incoming[o.index()]
    }

    /// The hom-set `S(a, b)`.
    pub fn hom(&self, a: ObjectId, b: ObjectId) -> impl Iterator<Item = ArrowId> + '_ {
        self.outgoing(a).iter().copied().filter(move |x| self.tgt(*x) == b)
    }

    /// `f·g`, defined iff `tgt(f) = src(g)`.
    #[inline]
    pub fn compose(&self, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        if self.tgt(f) == self.src(g) {
            Some(self.comp_unchecked(f, g))
        } else {
            None
        }
    }

    #[inline]
    fn comp_unchecked(&self, f: ArrowId, g: ArrowId) -> ArrowId {
        self.comp[f.index()][self.out_pos[g.index()] as usize]
    }

    /// Number of composable pairs of non-identity arrows.
    pub fn proper_composite_count(&self) -> usize {
        self.proper_arrows()
            .map(|f| self.outgoing(self.tgt(f)).iter().filter(|g| !self.is_identity(**g)).count())
            .sum()
    }

    /// True iff no composable pair of non-identities composes to an identity.
    pub fn is_conical(&self) -> bool {
        self.conicality_failure().is_none()
    }

    /// A pair of non-identities whose composite is an identity, if any.
    pub fn conicality_failure(&self) -> Option<(ArrowId, ArrowId)> {
        for f in self.proper_arrows() {
            for &g in self.outgoing(self.tgt(f)) {
                if !self.is_identity(g) && self.is_identity(self.comp_unchecked(f, g)) {
                    return Some((f, g));
                }
            }
        }
        None
    }

    pub fn is_left_cancellative(&self) -> bool {
        self.left_cancellation_failure().is_none()
    }

    pub fn is_right_cancellative(&self) -> bool {
        self.right_cancellation_failure().is_none()
    }

    /// A triple `(a, x, y)` with `x ≠ y` and `a·x = a·y`.
    pub fn left_cancellation_failure(&self) -> Option<(ArrowId, ArrowId, ArrowId)> {
        let mut seen: HashMap<ArrowId, ArrowId> = HashMap::new();
        for a in self.arrow_ids() {
            seen.clear();
            for &x in self.outgoing(self.tgt(a)) {
                if let Some(&y) = seen.get(&self.comp_unchecked(a, x)) {
                    return Some((a, y, x));
                }
                seen.insert(self.comp_unchecked(a, x), x);
            }
        }
        None
    }

    /// A triple `(a, x, y)` with `x ≠ y` and `x·a = y·a`.
    pub fn right_cancellation_failure(&self) -> Option<(ArrowId, ArrowId, ArrowId)> {
        let mut seen: HashMap<ArrowId, ArrowId> = HashMap::new();
        for a in self.arrow_ids() {
            seen.clear();
            for &x in self.incoming(self.src(a)) {
                if let Some(&y) = seen.get(&self.comp_unchecked(x, a)) {
                    return Some((a, y, x));
                }
                seen.insert(self.comp_unchecked(x, a), x);
            }
        }
        None
    }

    /// A witness `x` with `b = a·x` (left) or `b = x·a` (right).
    pub fn divides(&self, side: Side, a: ArrowId, b: ArrowId) -> Option<ArrowId> {
        match side {
            Side::Left => {
                if self.src(a) != self.src(b) {
                    return None;
                }
                self.outgoing(self.tgt(a)).iter().copied().find(|&x| self.comp_unchecked(a, x) == b)
            }
            Side::Right => {
                if self.tgt(a) != self.tgt(b) {
                    return None;
                }
                self.incoming(self.src(a)).iter().copied().find(|&x| self.comp_unchecked(x, a) == b)
            }
        }
    }

    fn check_same_end(&self, side: Side, a: ArrowId, b: ArrowId) -> Result<(), CategoryError> {
        match side {
            Side::Left if self.src(a) != self.src(b) => Err(CategoryError::SourceMismatch {
                a: self.name(a).to_string(),
                b: self.name(b).to_string(),
            }),
            Side::Right if self.tgt(a) != self.tgt(b) => Err(CategoryError::TargetMismatch {
                a: self.name(a).to_string(),
                b: self.name(b).to_string(),
            }),
            _ => Ok(()),
        }
    }

    /// Arrows sharing the relevant endpoint with `a`: the candidates for
    /// divisors and multiples of `a` on `side`.
    fn fiber(&self, side: Side, a: ArrowId) -> &[ArrowId] {
        match side {
            Side::Left => self.outgoing(self.src(a)),
            Side::Right => self.incoming(self.tgt(a)),
        }
    }

    /// Greatest common divisor of a pair under the divisibility of `side`.
    pub fn gcd(&self, side: Side, a: ArrowId, b: ArrowId) -> Result<Option<ArrowId>, CategoryError> {
        self.gcd_family(side, &[a, b])
    }

    /// Greatest common divisor of a nonempty family, found by exhaustive
    /// scan. When divisibility is only a preorder the first greatest element
    /// in declaration order is returned.
    pub fn gcd_family(&self, side: Side, family: &[ArrowId]) -> Result<Option<ArrowId>, CategoryError> {
        let Some((&first, rest)) = family.split_first() else {
            return Ok(None);
        };
        for &b in rest {
            self.check_same_end(side, first, b)?;
        }
        let common: Vec<ArrowId> = self
            .fiber(side, first)
            .iter()
            .copied()
            .filter(|&d| family.iter().all(|&x| self.divides(side, d, x).is_some()))
            .collect();
        Ok(common.iter().copied().find(|&g| common.iter().all(|&d| self.divides(side, d, g).is_some())))
    }

    /// Least common multiple of a pair: the right lcm for [`Side::Left`]
    /// divisibility, the left lcm for [`Side::Right`].
    pub fn lcm(&self, side: Side, a: ArrowId, b: ArrowId) -> Result<Option<ArrowId>, CategoryError> {
        self.check_same_end(side, a, b)?;
        let common: Vec<ArrowId> = self
            .fiber(side, a)
            .iter()
            .copied()
            .filter(|&m| self.divides(side, a, m).is_some() && self.divides(side, b, m).is_some())
            .collect();
        Ok(common.iter().copied().find(|&l| common.iter().all(|&m| self.divides(side, l, m).is_some())))
    }

    fn gcd_failure(&self, side: Side) -> Option<(ArrowId, ArrowId)> {
        for o in self.object_ids() {
            let fiber = match side {
                Side::Left => self.outgoing(o),
                Side::Right => self.incoming(o),
            };
            for (i, &a) in fiber.iter().enumerate() {
                for &b in &fiber[i + 1..] {
                    if self.gcd(side, a, b).ok().flatten().is_none() {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    /// Checks the five defining conditions of a gcd-category.
    pub fn gcd_report(&self) -> GcdCategoryReport {
        let conical = self.is_conical();
        let left_cancellative = self.is_left_cancellative();
        let right_cancellative = self.is_right_cancellative();
        let left_failure = self.gcd_failure(Side::Left);
        let right_failure = self.gcd_failure(Side::Right);
        let names = |p: Option<(ArrowId, ArrowId)>| {
            p.map(|(a, b)| (self.name(a).to_string(), self.name(b).to_string()))
        };
        GcdCategoryReport {
            conical,
            left_cancellative,
            right_cancellative,
            left_gcds: left_failure.is_none(),
            right_gcds: right_failure.is_none(),
            left_gcd_failure: names(left_failure),
            right_gcd_failure: names(right_failure),
        }
    }
}

/// Outcome of [`FiniteCategory::gcd_report`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdCategoryReport {
    pub conical: bool,
    pub left_cancellative: bool,
    pub right_cancellative: bool,
    pub left_gcds: bool,
    pub right_gcds: bool,
    pub left_gcd_failure: Option<(String, String)>,
    pub right_gcd_failure: Option<(String, String)>,
}

impl GcdCategoryReport {
    pub fn is_left_gcd_category(&self) -> bool {
        self.conical && self.left_cancellative && self.left_gcds
    }

    pub fn is_right_gcd_category(&self) -> bool {
        self.conical && self.right_cancellative && self.right_gcds
    }

    pub fn is_gcd_category(&self) -> bool {
        self.is_left_gcd_category() && self.is_right_gcd_category()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn arrow(cat: &FiniteCategory, name: &str) -> ArrowId {
        cat.arrow_by_name(name).unwrap()
    }

    #[test]
    fn trivial_category_is_valid_and_gcd() {
        let cat = RawCategory::new().object("o").validate().unwrap();
        assert_eq!(cat.arrow_count(), 1);
        assert!(cat.is_conical());
        assert!(cat.is_left_cancellative() && cat.is_right_cancellative());
        assert!(cat.gcd_report().is_gcd_category());
    }

    #[test]
    fn diamond_interval_category_validates() {
        let cat = catalog::diamond_category();
        assert_eq!(cat.arrow_count(), 9);
        let (a0, a1, b0, b1, top) = (
            arrow(&cat, "[0,a]"),
            arrow(&cat, "[a,1]"),
            arrow(&cat, "[0,b]"),
            arrow(&cat, "[b,1]"),
            arrow(&cat, "[0,1]"),
        );
        assert_eq!(cat.compose(a0, a1), Some(top));
        assert_eq!(cat.compose(b0, b1), Some(top));
        assert_eq!(cat.compose(a0, b0), None);
    }

    #[test]
    fn composite_with_mismatched_endpoints_is_rejected() {
        let err = RawCategory::new()
            .object("x")
            .object("y")
            .arrow("f", "x", "y")
            .arrow("g", "x", "y")
            .comp("f", "g", "f")
            .validate()
            .unwrap_err();
        assert!(matches!(err, CategoryError::BadComposability { .. }));
    }

    #[test]
    fn missing_composite_is_rejected() {
        let err = RawCategory::new()
            .object("x")
            .object("y")
            .object("z")
            .arrow("f", "x", "y")
            .arrow("g", "y", "z")
            .validate()
            .unwrap_err();
        assert_eq!(err, CategoryError::MissingComposite { f: "f".into(), g: "g".into() });
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // (f·e)·e = e·e = f but f·(e·e) = f·f = e.
        let err = RawCategory::new()
            .object("o")
            .arrow("e", "o", "o")
            .arrow("f", "o", "o")
            .comp("e", "e", "f")
            .comp("e", "f", "e")
            .comp("f", "e", "e")
            .comp("f", "f", "e")
            .validate()
            .unwrap_err();
        assert!(matches!(err, CategoryError::AssociativityViolation { .. }));
    }

    #[test]
    fn identity_entry_must_be_a_unit() {
        let err = RawCategory::new()
            .object("o")
            .arrow("g", "o", "o")
            .comp("g", "g", "id:o")
            .comp("g", "id:o", "id:o")
            .validate()
            .unwrap_err();
        assert!(matches!(err, CategoryError::BadIdentity { .. }));
    }

    #[test]
    fn size_guard() {
        let err = RawCategory::new()
            .object("a")
            .object("b")
            .arrow("f", "a", "b")
            .validate_with_limit(2)
            .unwrap_err();
        assert_eq!(err, CategoryError::TooLarge { arrows: 3, limit: 2 });
    }

    #[test]
    fn cyclic_group_of_order_two_is_not_conical() {
        let cat = catalog::cyclic_two();
        assert!(!cat.is_conical());
        let (f, g) = cat.conicality_failure().unwrap();
        assert_eq!((cat.name(f), cat.name(g)), ("g", "g"));
        assert!(cat.is_left_cancellative());
    }

    #[test]
    fn equalized_pair_cancellation() {
        // a·c = b·c cancels c on the right.
        let cat = catalog::equalized_pair();
        assert!(cat.is_left_cancellative());
        assert!(!cat.is_right_cancellative());
        let (c, x, y) = cat.right_cancellation_failure().unwrap();
        assert_eq!((cat.name(c), cat.name(x), cat.name(y)), ("c", "a", "b"));
        let report = cat.gcd_report();
        assert!(!report.right_cancellative);
        assert!(!report.is_gcd_category());
        // Both divisibility preorders are still antisymmetric here.
        for a in cat.arrow_ids() {
            for b in cat.arrow_ids() {
                for side in [Side::Left, Side::Right] {
                    if a != b && cat.divides(side, a, b).is_some() {
                        assert!(cat.divides(side, b, a).is_none());
                    }
                }
            }
        }
        let split = catalog::split_pair();
        assert!(!split.is_left_cancellative());
        assert!(split.is_right_cancellative());
    }

    #[test]
    fn divisibility_in_diamond() {
        let cat = catalog::diamond_category();
        let (a0, b0, top) = (arrow(&cat, "[0,a]"), arrow(&cat, "[0,b]"), arrow(&cat, "[0,1]"));
        assert_eq!(cat.divides(Side::Left, a0, top), Some(arrow(&cat, "[a,1]")));
        assert_eq!(cat.divides(Side::Left, a0, a0), Some(arrow(&cat, "[a,a]")));
        assert_eq!(cat.divides(Side::Left, a0, b0), None);
        assert_eq!(cat.divides(Side::Right, arrow(&cat, "[a,1]"), top), Some(a0));
    }

    #[test]
    fn gcds_in_diamond_and_vee() {
        let cat = catalog::diamond_category();
        let (a0, top) = (arrow(&cat, "[0,a]"), arrow(&cat, "[0,1]"));
        assert_eq!(cat.gcd(Side::Left, top, a0).unwrap(), Some(a0));
        assert_eq!(cat.gcd(Side::Left, a0, a0).unwrap(), Some(a0));
        assert!(matches!(
            cat.gcd(Side::Left, a0, arrow(&cat, "[a,1]")),
            Err(CategoryError::SourceMismatch { .. })
        ));
        assert!(matches!(cat.gcd(Side::Right, a0, top), Err(CategoryError::TargetMismatch { .. })));

        let vee = catalog::vee_category();
        let g = vee.gcd(Side::Left, arrow(&vee, "[o,p]"), arrow(&vee, "[o,q]")).unwrap();
        assert_eq!(g, Some(arrow(&vee, "[o,o]")));
    }

    #[test]
    fn gcd_reports() {
        assert!(catalog::diamond_category().gcd_report().is_gcd_category());
        assert!(catalog::c6_category().gcd_report().is_gcd_category());
        let r = catalog::equalized_pair().gcd_report();
        assert!(!r.right_cancellative && !r.is_gcd_category());
        let r = catalog::split_pair().gcd_report();
        assert!(!r.left_cancellative && !r.is_gcd_category());
    }

    #[test]
    fn lcm_in_diamond() {
        let cat = catalog::diamond_category();
        let l = cat.lcm(Side::Left, arrow(&cat, "[0,a]"), arrow(&cat, "[0,b]")).unwrap();
        assert_eq!(l, Some(arrow(&cat, "[0,1]")));
        let vee = catalog::vee_category();
        let l = vee.lcm(Side::Left, arrow(&vee, "[o,p]"), arrow(&vee, "[o,q]")).unwrap();
        assert_eq!(l, None);
    }
}
