//! Groups with a solvable word problem (free groups, free abelian groups and
//! free products with a free group on the identities of a category),
//! group-valued functors on finite categories, and the hom-set separation
//! test for embedding a universal monoid into a group.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::category::{ArrowId, FiniteCategory};
use crate::monoid::{ReducedSeq, UniversalMonoid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group elements belong to different groups")]
    GroupMismatch,
    #[error("arrow `{0}` has no image")]
    MissingImage(String),
    #[error("functor is not functorial or not one-to-one on some hom-set")]
    SeparationRequired,
}

/// A generator or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator: generator as u32, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn index(self) -> usize {
        self.generator as usize
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        FreeWord(vec![Letter::new(g, false)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a letter, cancelling against the last one when inverse.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Strips matching inverse letters from both ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let mut s = 0;
        let mut e = self.0.len();
        while e - s >= 2 && self.0[s] == self.0[e - 1].inv() {
            s += 1;
            e -= 1;
        }
        FreeWord(self.0[s..e].to_vec())
    }

    /// Number of occurrences of generator `g` (either sign).
    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|l| l.index() == g).count()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.index() == g).map(|l| l.exponent()).sum()
    }

    /// Rewrites every letter through `f`, which returns the replacement
    /// word for a positive generator.
    pub fn substitute(&self, mut f: impl FnMut(usize) -> FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in &self.0 {
            let w = f(l.index());
            let w = if l.inverse { w.inverse() } else { w };
            for &m in &w.0 {
                out.push(m);
            }
        }
        out
    }

    /// `a b^-1 c`, or `1` for the empty word.
    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                let n = names.get(l.index()).map(String::as_str).unwrap_or("?");
                if l.inverse {
                    format!("{n}^-1")
                } else {
                    n.to_string()
                }
            })
            .collect();
        parts.join(" ")
    }
}

/// Descriptor of a group with solvable word problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    /// Free group on the named generators.
    Free { alphabet: Vec<String> },
    /// `Z^rank`.
    Abelian { rank: usize },
    /// `F(identities) * base`, the free group on the identities of a
    /// category first and the base group second.
    FreeProduct { identities: Vec<String>, base: Box<GroupKind> },
}

impl GroupKind {
    pub fn identity(&self) -> GroupWord {
        match self {
            GroupKind::Free { .. } => GroupWord::Free(FreeWord::identity()),
            GroupKind::Abelian { rank } => GroupWord::Abelian(vec![0; *rank]),
            GroupKind::FreeProduct { .. } => GroupWord::Product(ProductWord::default()),
        }
    }

    /// Whether `w` is a well-formed element of this group.
    pub fn contains(&self, w: &GroupWord) -> bool {
        match (self, w) {
            (GroupKind::Free { alphabet }, GroupWord::Free(f)) => {
                f.letters().iter().all(|l| l.index() < alphabet.len())
            }
            (GroupKind::Abelian { rank }, GroupWord::Abelian(v)) => v.len() == *rank,
            (GroupKind::FreeProduct { identities, base }, GroupWord::Product(p)) => {
                p.syllables.iter().all(|s| match s {
                    Syllable::Ident(f) => f.letters().iter().all(|l| l.index() < identities.len()),
                    Syllable::Base(b) => base.contains(b),
                })
            }
            _ => false,
        }
    }

    pub fn display(&self, w: &GroupWord) -> String {
        match (self, w) {
            (GroupKind::Free { alphabet }, GroupWord::Free(f)) => f.display(alphabet),
            (_, GroupWord::Abelian(v)) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                format!("({})", parts.join(","))
            }
            (GroupKind::FreeProduct { identities, base }, GroupWord::Product(p)) => {
                if p.syllables.is_empty() {
                    return "1".to_string();
                }
                let mut s = String::new();
                for syl in &p.syllables {
                    match syl {
                        Syllable::Ident(f) => write!(s, "({})", f.display(identities)),
                        Syllable::Base(b) => write!(s, "({})", base.display(b)),
                    }
                    .expect("write to string");
                }
                s
            }
            _ => "<mismatched>".to_string(),
        }
    }
}

/// One syllable of a free-product normal form: a nontrivial element of a
/// single factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    Ident(FreeWord),
    Base(GroupWord),
}

/// Normal form in `F(identities) * base`: consecutive syllables come from
/// different factors and none is trivial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ProductWord {
    syllables: Vec<Syllable>,
}

impl ProductWord {
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn ident(w: FreeWord) -> Self {
        let mut p = ProductWord::default();
        p.push(Syllable::Ident(w)).expect("identity factor is always compatible");
        p
    }

    pub fn base(w: GroupWord) -> Self {
        let mut p = ProductWord::default();
        p.push(Syllable::Base(w)).expect("first syllable never mismatches");
        p
    }

    fn push(&mut self, syl: Syllable) -> Result<(), GroupError> {
        if syllable_is_trivial(&syl) {
            return Ok(());
        }
        let merged = match (self.syllables.last(), &syl) {
            (Some(Syllable::Ident(a)), Syllable::Ident(b)) => Some(Syllable::Ident(a.mul(b))),
            (Some(Syllable::Base(a)), Syllable::Base(b)) => Some(Syllable::Base(a.multiply(b)?)),
            _ => None,
        };
        match merged {
            Some(m) => {
                self.syllables.pop();
                if !syllable_is_trivial(&m) {
                    self.syllables.push(m);
                }
            }
            None => self.syllables.push(syl),
        }
        Ok(())
    }

    pub fn mul(&self, other: &ProductWord) -> Result<ProductWord, GroupError> {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.clone())?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> ProductWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| match s {
                Syllable::Ident(f) => Syllable::Ident(f.inverse()),
                Syllable::Base(b) => Syllable::Base(b.inverse()),
            })
            .collect();
        ProductWord { syllables }
    }
}

fn syllable_is_trivial(s: &Syllable) -> bool {
    match s {
        Syllable::Ident(f) => f.is_identity(),
        Syllable::Base(b) => b.is_identity(),
    }
}

/// An element of a group described by a [`GroupKind`], in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupWord {
    Free(FreeWord),
    Abelian(Vec<i64>),
    Product(ProductWord),
}

impl GroupWord {
    pub fn is_identity(&self) -> bool {
        match self {
            GroupWord::Free(f) => f.is_identity(),
            GroupWord::Abelian(v) => v.iter().all(|&x| x == 0),
            GroupWord::Product(p) => p.syllables.is_empty(),
        }
    }

    /// Normal-form product: free reduction, vector addition or syllable
    /// merging.
    pub fn multiply(&self, other: &GroupWord) -> Result<GroupWord, GroupError> {
        match (self, other) {
            (GroupWord::Free(a), GroupWord::Free(b)) => Ok(GroupWord::Free(a.mul(b))),
            (GroupWord::Abelian(a), GroupWord::Abelian(b)) if a.len() == b.len() => {
                Ok(GroupWord::Abelian(a.iter().zip(b).map(|(x, y)| x + y).collect()))
            }
            (GroupWord::Product(a), GroupWord::Product(b)) => Ok(GroupWord::Product(a.mul(b)?)),
            _ => Err(GroupError::GroupMismatch),
        }
    }

    pub fn inverse(&self) -> GroupWord {
        match self {
            GroupWord::Free(f) => GroupWord::Free(f.inverse()),
            GroupWord::Abelian(v) => GroupWord::Abelian(v.iter().map(|x| -x).collect()),
            GroupWord::Product(p) => GroupWord::Product(p.inverse()),
        }
    }
}

/// A group-valued functor on a finite category, given by the image of
/// every arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryFunctor {
    target: GroupKind,
    images: Vec<GroupWord>,
}

impl CategoryFunctor {
    /// Images of identity arrows may be omitted (they default to the group
    /// identity); every other arrow needs one.
    pub fn new(
        cat: &FiniteCategory,
        target: GroupKind,
        images: impl IntoIterator<Item = (ArrowId, GroupWord)>,
    ) -> Result<Self, GroupError> {
        let mut slots: Vec<Option<GroupWord>> = vec![None; cat.arrow_count()];
        for (a, w) in images {
            if !target.contains(&w) {
                return Err(GroupError::GroupMismatch);
            }
            slots[a.index()] = Some(w);
        }
        let mut out = Vec::with_capacity(slots.len());
        for (a, slot) in cat.arrow_ids().zip(slots) {
            match slot {
                Some(w) => out.push(w),
                None if cat.is_identity(a) => out.push(target.identity()),
                None => return Err(GroupError::MissingImage(cat.name(a).to_string())),
            }
        }
        Ok(CategoryFunctor { target, images: out })
    }

    /// The functor sending everything to the identity of the trivial group.
    pub fn trivial(cat: &FiniteCategory) -> Self {
        let target = GroupKind::Abelian { rank: 0 };
        let images = vec![target.identity(); cat.arrow_count()];
        CategoryFunctor { target, images }
    }

    pub fn target(&self) -> &GroupKind {
        &self.target
    }

    pub fn image(&self, a: ArrowId) -> &GroupWord {
        &self.images[a.index()]
    }

    /// First non-identity arrow sent to the group identity, if any.
    pub fn kernel_witness(&self, cat: &FiniteCategory) -> Option<ArrowId> {
        cat.proper_arrows().find(|&a| self.image(a).is_identity())
    }

    /// Image of a sequence of arrows (the product of their images).
    pub fn image_of_seq(&self, arrows: &[ArrowId]) -> GroupWord {
        let mut acc = self.target.identity();
        for &a in arrows {
            acc = acc.multiply(self.image(a)).expect("images share the target group");
        }
        acc
    }
}

/// Outcome of [`check_separation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub functorial: bool,
    pub functoriality_violation: Option<(String, String)>,
    pub separating: bool,
    pub violating_pair: Option<(String, String)>,
}

impl SeparationReport {
    pub fn passed(&self) -> bool {
        self.functorial && self.separating
    }
}

/// Verifies functoriality and that the functor is one-to-one on every
/// hom-set; reports the first violation in declaration order.
pub fn check_separation(cat: &FiniteCategory, psi: &CategoryFunctor) -> SeparationReport {
    let mut functoriality_violation = None;
    'outer: for f in cat.arrow_ids() {
        if cat.is_identity(f) && !psi.image(f).is_identity() {
            functoriality_violation = Some((cat.name(f).to_string(), cat.name(f).to_string()));
            break;
        }
        for &g in cat.outgoing(cat.tgt(f)) {
            let h = cat.compose(f, g).expect("composable");
            let prod = psi.image(f).multiply(psi.image(g)).expect("same target");
            if &prod != psi.image(h) {
                functoriality_violation = Some((cat.name(f).to_string(), cat.name(g).to_string()));
                break 'outer;
            }
        }
    }
    let mut violating_pair = None;
    'hom: for a in cat.object_ids() {
        for b in cat.object_ids() {
            let mut seen: HashMap<&GroupWord, ArrowId> = HashMap::new();
            for x in cat.hom(a, b) {
                if let Some(&y) = seen.get(psi.image(x)) {
                    violating_pair = Some((cat.name(y).to_string(), cat.name(x).to_string()));
                    break 'hom;
                }
                seen.insert(psi.image(x), x);
            }
        }
    }
    SeparationReport {
        functorial: functoriality_violation.is_none(),
        functoriality_violation,
        separating: violating_pair.is_none(),
        violating_pair,
    }
}

/// `x ↦ sr(x)^-1 · ψ(x) · tg(x)` in `F(Idt S) * G`.
pub fn highlighting_expansion(cat: &FiniteCategory, psi: &CategoryFunctor) -> CategoryFunctor {
    let identities: Vec<String> = cat.object_ids().map(|o| cat.object_name(o).to_string()).collect();
    let target = GroupKind::FreeProduct { identities, base: Box::new(psi.target.clone()) };
    let images = cat
        .arrow_ids()
        .map(|x| {
            let src = ProductWord::ident(FreeWord::from_letters([Letter::new(cat.src(x).index(), true)]));
            let mid = ProductWord::base(psi.image(x).clone());
            let tgt = ProductWord::ident(FreeWord::generator(cat.tgt(x).index()));
            let w = src.mul(&mid).and_then(|p| p.mul(&tgt)).expect("same factors");
            GroupWord::Product(w)
        })
        .collect();
    CategoryFunctor { target, images }
}

/// The map `σ` from the universal monoid into a free product, built from a
/// separating functor as in the embedding criterion: expand once if some
/// non-identity arrow has trivial image, then expand again and multiply
/// images along reduced sequences.
#[derive(Clone, Debug)]
pub struct Sigma {
    expanded: CategoryFunctor,
}

impl Sigma {
    pub fn new(cat: &FiniteCategory, psi: &CategoryFunctor) -> Result<Self, GroupError> {
        if !check_separation(cat, psi).passed() {
            return Err(GroupError::SeparationRequired);
        }
        let base =
            if psi.kernel_witness(cat).is_some() { highlighting_expansion(cat, psi) } else { psi.clone() };
        Ok(Sigma { expanded: highlighting_expansion(cat, &base) })
    }

    pub fn target(&self) -> &GroupKind {
        self.expanded.target()
    }

    pub fn image(&self, x: &ReducedSeq) -> GroupWord {
        self.expanded.image_of_seq(x.arrows())
    }
}

/// Convenience wrapper over [`Sigma`].
pub fn sigma_image(
    cat: &FiniteCategory,
    psi: &CategoryFunctor,
    x: &ReducedSeq,
) -> Result<GroupWord, GroupError> {
    Ok(Sigma::new(cat, psi)?.image(x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The universal monoid embeds into a group.
    Embeds,
    /// This functor does not witness the criterion; nothing is claimed
    /// about embeddability itself.
    CriterionNotSatisfied,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddabilityReport {
    pub separation: SeparationReport,
    pub verdict: Verdict,
    /// Length bound of the sampled injectivity check.
    pub sample_bound: usize,
    pub sampled_elements: usize,
    /// `Some(true)` when σ was injective on every sampled element.
    pub sigma_injective_sampled: Option<bool>,
}

/// Runs the separation criterion and, when it holds, samples injectivity
/// of `σ` on all elements of length at most `max_len`.
pub fn embeddability_verdict(
    cat: &FiniteCategory,
    psi: &CategoryFunctor,
    max_len: usize,
) -> EmbeddabilityReport {
    let separation = check_separation(cat, psi);
    if !separation.passed() {
        return EmbeddabilityReport {
            separation,
            verdict: Verdict::CriterionNotSatisfied,
            sample_bound: max_len,
            sampled_elements: 0,
            sigma_injective_sampled: None,
        };
    }
    let sigma = Sigma::new(cat, psi).expect("separation checked");
    let elements = UniversalMonoid::new(cat).elements_up_to(max_len);
    let mut images = HashSet::with_capacity(elements.len());
    let injective = elements.iter().all(|x| images.insert(sigma.image(x)));
    EmbeddabilityReport {
        separation,
        verdict: Verdict::Embeds,
        sample_bound: max_len,
        sampled_elements: elements.len(),
        sigma_injective_sampled: Some(injective),
    }
}
