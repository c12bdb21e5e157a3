//! The universal monoid `Um(S)` of a finite category, with elements stored
//! as reduced sequences: finite sequences of non-identity arrows in which no
//! two consecutive entries are composable.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::category::{ArrowId, CategoryError, FiniteCategory, Side};
use crate::group::{FreeWord, Letter};
use crate::homotopy::GroupPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("sequence is not reduced at position {0}")]
    NotReduced(usize),
    #[error("the empty element has no first or last arrow")]
    EmptyElement,
    #[error("empty family")]
    EmptyFamily,
    #[error("the category is not conical")]
    NotConical,
    #[error("`{0}` is not a standard generator (a single arrow)")]
    NotStandardGenerator(String),
    #[error("greedy property fails at position {position}: `{divisor}` divides the suffix but not its head")]
    GreedyViolation { position: usize, divisor: String },
    #[error(transparent)]
    Category(#[from] CategoryError),
}

/// An element of `Um(S)`. The empty sequence is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedSeq(Vec<ArrowId>);

impl ReducedSeq {
    pub fn arrows(&self) -> &[ArrowId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<ArrowId> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<ArrowId> {
        self.0.last().copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RewriteKind {
    /// Remove the identity at `position`.
    DropIdentity,
    /// Replace the entries at `position` and `position + 1` by their
    /// composite.
    Compose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RewriteStep {
    pub position: usize,
    pub kind: RewriteKind,
}

/// The one-step reductions performed by [`UniversalMonoid::reduce_traced`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

/// Result of a divisibility test: a quotient, and whether cancellation on
/// the relevant side makes it the only one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotient: ReducedSeq,
    pub unique: bool,
}

/// `Um(S)` for a borrowed finite category.
#[derive(Clone, Copy, Debug)]
pub struct UniversalMonoid<'a> {
    cat: &'a FiniteCategory,
    conical: bool,
    left_cancellative: bool,
    right_cancellative: bool,
}

impl<'a> UniversalMonoid<'a> {
    pub fn new(cat: &'a FiniteCategory) -> Self {
        UniversalMonoid {
            cat,
            conical: cat.is_conical(),
            left_cancellative: cat.is_left_cancellative(),
            right_cancellative: cat.is_right_cancellative(),
        }
    }

    pub fn category(&self) -> &'a FiniteCategory {
        self.cat
    }

    pub fn is_conical(&self) -> bool {
        self.conical
    }

    pub fn one(&self) -> ReducedSeq {
        ReducedSeq::default()
    }

    /// The canonical map `ε`: identities go to 1, other arrows to
    /// one-entry sequences.
    pub fn epsilon(&self, a: ArrowId) -> ReducedSeq {
        if self.cat.is_identity(a) {
            ReducedSeq::default()
        } else {
            ReducedSeq(vec![a])
        }
    }

    /// Wraps a sequence that is already reduced.
    pub fn element(&self, arrows: &[ArrowId]) -> Result<ReducedSeq, MonoidError> {
        for (i, &a) in arrows.iter().enumerate() {
            if self.cat.is_identity(a) {
                return Err(MonoidError::NotReduced(i));
            }
            if i + 1 < arrows.len() && self.cat.tgt(a) == self.cat.src(arrows[i + 1]) {
                return Err(MonoidError::NotReduced(i));
            }
        }
        Ok(ReducedSeq(arrows.to_vec()))
    }

    /// Looks up whitespace-separated arrow names. A lone `1` denotes the
    /// empty sequence unless some arrow is called `1`.
    pub fn parse_raw(&self, word: &str) -> Result<Vec<ArrowId>, MonoidError> {
        if word.trim() == "1" && self.cat.arrow_by_name("1").is_none() {
            return Ok(Vec::new());
        }
        word.split_whitespace()
            .map(|t| self.cat.arrow_by_name(t).ok_or_else(|| MonoidError::UnknownArrow(t.to_string())))
            .collect()
    }

    /// Parses and reduces a word.
    pub fn parse_word(&self, word: &str) -> Result<ReducedSeq, MonoidError> {
        Ok(self.reduce(&self.parse_raw(word)?))
    }

    /// Space-separated arrow names, or `1` for the unit.
    pub fn display(&self, x: &ReducedSeq) -> String {
        if x.is_empty() {
            return "1".to_string();
        }
        let names: Vec<&str> = x.0.iter().map(|&a| self.cat.name(a)).collect();
        names.join(" ")
    }

    pub fn names(&self, x: &ReducedSeq) -> Vec<String> {
        x.0.iter().map(|&a| self.cat.name(a).to_string()).collect()
    }

    pub fn reduce(&self, raw: &[ArrowId]) -> ReducedSeq {
        self.reduce_inner(raw, None)
    }

    /// Reduces with the leftmost-redex strategy, preferring an identity
    /// drop over a composition at the same position, and records each step.
    pub fn reduce_traced(&self, raw: &[ArrowId]) -> (ReducedSeq, RewriteTrace) {
        let mut trace = RewriteTrace::default();
        let r = self.reduce_inner(raw, Some(&mut trace));
        (r, trace)
    }

    // The prefix held on the stack is always reduced, so the leftmost redex
    // sits at the stack top or at the incoming arrow. A composite of the
    // top with the incoming arrow cannot compose with the entry below the
    // top, because that entry already failed to compose with the old top.
    fn reduce_inner(&self, raw: &[ArrowId], mut trace: Option<&mut RewriteTrace>) -> ReducedSeq {
        let mut stack: Vec<ArrowId> = Vec::with_capacity(raw.len());
        for &a in raw {
            let mut x = a;
            loop {
                if let Some(&top) = stack.last() {
                    if let Some(h) = self.cat.compose(top, x) {
                        if let Some(t) = trace.as_deref_mut() {
                            t.steps
                                .push(RewriteStep { position: stack.len() - 1, kind: RewriteKind::Compose });
                        }
                        stack.pop();
                        x = h;
                        continue;
                    }
                }
                if self.cat.is_identity(x) {
                    if let Some(t) = trace.as_deref_mut() {
                        t.steps.push(RewriteStep { position: stack.len(), kind: RewriteKind::DropIdentity });
                    }
                } else {
                    stack.push(x);
                }
                break;
            }
        }
        ReducedSeq(stack)
    }

    /// Every redex of a raw sequence.
    pub fn redexes(&self, raw: &[ArrowId]) -> Vec<RewriteStep> {
        let mut out = Vec::new();
        for (i, &a) in raw.iter().enumerate() {
            if self.cat.is_identity(a) {
                out.push(RewriteStep { position: i, kind: RewriteKind::DropIdentity });
            }
            if i + 1 < raw.len() && self.cat.compose(a, raw[i + 1]).is_some() {
                out.push(RewriteStep { position: i, kind: RewriteKind::Compose });
            }
        }
        out
    }

    /// Applies one rewrite step. Panics if the step is not a redex.
    pub fn rewrite_step(&self, raw: &[ArrowId], step: RewriteStep) -> Vec<ArrowId> {
        let i = step.position;
        let mut out = raw.to_vec();
        match step.kind {
            RewriteKind::DropIdentity => {
                assert!(self.cat.is_identity(raw[i]), "no identity at {i}");
                out.remove(i);
            }
            RewriteKind::Compose => {
                let h = self.cat.compose(raw[i], raw[i + 1]).expect("composable pair");
                out.splice(i..i + 2, [h]);
            }
        }
        out
    }

    /// Replays a trace; the result equals the reduced form when the trace
    /// came from [`Self::reduce_traced`] on the same input.
    pub fn replay(&self, raw: &[ArrowId], trace: &RewriteTrace) -> Vec<ArrowId> {
        trace.steps.iter().fold(raw.to_vec(), |w, &s| self.rewrite_step(&w, s))
    }

    pub fn multiply(&self, x: &ReducedSeq, y: &ReducedSeq) -> ReducedSeq {
        if !self.conical {
            let mut raw = x.0.clone();
            raw.extend_from_slice(&y.0);
            return self.reduce(&raw);
        }
        // Conical: at most one composition, at the boundary, and it never
        // yields an identity.
        let mut out = Vec::with_capacity(x.len() + y.len());
        match (x.last(), y.first()) {
            (Some(l), Some(f)) if self.cat.tgt(l) == self.cat.src(f) => {
                out.extend_from_slice(&x.0[..x.len() - 1]);
                out.push(self.cat.compose(l, f).expect("composable"));
                out.extend_from_slice(&y.0[1..]);
            }
            _ => {
                out.extend_from_slice(&x.0);
                out.extend_from_slice(&y.0);
            }
        }
        ReducedSeq(out)
    }

    /// `(∇0(x), ∇1(x))`, the first and last entries.
    pub fn components(&self, x: &ReducedSeq) -> Result<(ArrowId, ArrowId), MonoidError> {
        match (x.first(), x.last()) {
            (Some(f), Some(l)) => Ok((f, l)),
            _ => Err(MonoidError::EmptyElement),
        }
    }

    /// Left: is there `z` with `y = x·z`? Right: with `y = z·x`?
    ///
    /// For left divisibility either `x` is a prefix of `y`, or the two agree
    /// except at the last entry of `x`, where the entry of `x` left-divides
    /// the entry of `y` in the category.
    pub fn divides(
        &self,
        side: Side,
        x: &ReducedSeq,
        y: &ReducedSeq,
    ) -> Result<Option<Division>, MonoidError> {
        if !self.conical {
            return Err(MonoidError::NotConical);
        }
        let (n, m) = (x.len(), y.len());
        if n > m {
            return Ok(None);
        }
        if n == 0 {
            return Ok(Some(Division { quotient: y.clone(), unique: true }));
        }
        let quotient = match side {
            Side::Left => {
                if x.0[..n - 1] != y.0[..n - 1] {
                    return Ok(None);
                }
                let Some(w) = self.cat.divides(Side::Left, x.0[n - 1], y.0[n - 1]) else {
                    return Ok(None);
                };
                let mut q = self.epsilon(w).0;
                q.extend_from_slice(&y.0[n..]);
                q
            }
            Side::Right => {
                if x.0[1..] != y.0[m - n + 1..] {
                    return Ok(None);
                }
                let Some(w) = self.cat.divides(Side::Right, x.0[0], y.0[m - n]) else {
                    return Ok(None);
                };
                let mut q = y.0[..m - n].to_vec();
                q.extend(self.epsilon(w).0);
                q
            }
        };
        let unique = match side {
            Side::Left => self.left_cancellative,
            Side::Right => self.right_cancellative,
        };
        Ok(Some(Division { quotient: ReducedSeq(quotient), unique }))
    }

    /// Greatest common divisor of a finite nonempty family.
    ///
    /// For the left side: take the longest common prefix; if it exhausts
    /// some member, or the next entries start at different objects, it is
    /// the gcd. Otherwise append the category gcd of the next entries
    /// (nothing if that gcd is an identity); absent when the category gcd
    /// does not exist.
    pub fn gcd_family(&self, side: Side, xs: &[ReducedSeq]) -> Result<Option<ReducedSeq>, MonoidError> {
        if xs.is_empty() {
            return Err(MonoidError::EmptyFamily);
        }
        if !self.conical {
            return Err(MonoidError::NotConical);
        }
        let min_len = xs.iter().map(ReducedSeq::len).min().unwrap_or(0);
        // Entry of x at distance k from the relevant end.
        let at = |x: &ReducedSeq, k: usize| match side {
            Side::Left => x.0[k],
            Side::Right => x.0[x.len() - 1 - k],
        };
        let mut k = 0;
        while k < min_len && xs.iter().all(|x| at(x, k) == at(&xs[0], k)) {
            k += 1;
        }
        let common = |extra: Option<ArrowId>| {
            let mut v: Vec<ArrowId> = match side {
                Side::Left => xs[0].0[..k].to_vec(),
                Side::Right => xs[0].0[xs[0].len() - k..].to_vec(),
            };
            if let Some(c) = extra {
                match side {
                    Side::Left => v.push(c),
                    Side::Right => v.insert(0, c),
                }
            }
            ReducedSeq(v)
        };
        if k == min_len {
            return Ok(Some(common(None)));
        }
        let residuals: Vec<ArrowId> = xs.iter().map(|x| at(x, k)).collect();
        let end = |a: ArrowId| match side {
            Side::Left => self.cat.src(a),
            Side::Right => self.cat.tgt(a),
        };
        if residuals.iter().any(|&r| end(r) != end(residuals[0])) {
            return Ok(Some(common(None)));
        }
        Ok(match self.cat.gcd_family(side, &residuals)? {
            None => None,
            Some(c) if self.cat.is_identity(c) => Some(common(None)),
            Some(c) => Some(common(Some(c))),
        })
    }

    /// The lcm of two standard generators `ε(a)`, `ε(b)`: `ε(a ∨ b)` when
    /// the category has that lcm. `1` is accepted as `ε` of an identity.
    pub fn lcm_pair(
        &self,
        side: Side,
        x: &ReducedSeq,
        y: &ReducedSeq,
    ) -> Result<Option<ReducedSeq>, MonoidError> {
        for s in [x, y] {
            if s.len() > 1 {
                return Err(MonoidError::NotStandardGenerator(self.display(s)));
            }
        }
        match (x.first(), y.first()) {
            (None, _) => Ok(Some(y.clone())),
            (_, None) => Ok(Some(x.clone())),
            (Some(a), Some(b)) => Ok(self.cat.lcm(side, a, b)?.map(|l| self.epsilon(l))),
        }
    }

    /// The entries of `x`, after confirming that each is the largest arrow
    /// whose image left-divides the remaining suffix.
    pub fn greedy_normal_form(&self, x: &ReducedSeq) -> Result<Vec<ArrowId>, MonoidError> {
        if !self.conical {
            return Err(MonoidError::NotConical);
        }
        for i in 0..x.len() {
            let suffix = ReducedSeq(x.0[i..].to_vec());
            let head = x.0[i];
            for &a in self.cat.outgoing(self.cat.src(head)) {
                if self.cat.is_identity(a) {
                    continue;
                }
                let divides_suffix = self.divides(Side::Left, &self.epsilon(a), &suffix)?.is_some();
                if divides_suffix && self.cat.divides(Side::Left, a, head).is_none() {
                    return Err(MonoidError::GreedyViolation {
                        position: i,
                        divisor: self.cat.name(a).to_string(),
                    });
                }
            }
        }
        Ok(x.0.clone())
    }

    /// Generators are the non-identity arrows; each composable pair of
    /// non-identities `f·g = h` contributes `f g h^-1`, or `f g` when `h` is
    /// an identity.
    pub fn universal_group_presentation(&self) -> GroupPresentation {
        let proper: Vec<ArrowId> = self.cat.proper_arrows().collect();
        let mut gen_of = vec![usize::MAX; self.cat.arrow_count()];
        for (i, &a) in proper.iter().enumerate() {
            gen_of[a.index()] = i;
        }
        let mut relators = Vec::new();
        for &f in &proper {
            for &g in self.cat.outgoing(self.cat.tgt(f)) {
                if self.cat.is_identity(g) {
                    continue;
                }
                let h = self.cat.compose(f, g).expect("composable");
                let mut letters =
                    vec![Letter::new(gen_of[f.index()], false), Letter::new(gen_of[g.index()], false)];
                if !self.cat.is_identity(h) {
                    letters.push(Letter::new(gen_of[h.index()], true));
                }
                relators.push(FreeWord::from_letters(letters));
            }
        }
        let names = proper.iter().map(|&a| self.cat.name(a).to_string()).collect();
        GroupPresentation::new(names, relators).expect("letters index listed generators")
    }

    /// All elements of length at most `max_len`, by length and then in
    /// lexicographic order of arrow indices.
    pub fn elements_up_to(&self, max_len: usize) -> Vec<ReducedSeq> {
        let proper: Vec<ArrowId> = self.cat.proper_arrows().collect();
        let mut out = vec![ReducedSeq::default()];
        let mut layer = vec![ReducedSeq::default()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &layer {
                for &a in &proper {
                    if x.last().is_none_or(|l| self.cat.tgt(l) != self.cat.src(a)) {
                        let mut v = x.0.clone();
                        v.push(a);
                        next.push(ReducedSeq(v));
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for RewriteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RewriteKind::DropIdentity => "drop-identity",
            RewriteKind::Compose => "compose",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn reduce_examples() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        let raw = m.parse_raw("[0,a] [a,1] [1,1]").unwrap();
        let (r, trace) = m.reduce_traced(&raw);
        assert_eq!(m.display(&r), "[0,1]");
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(m.replay(&raw, &trace), r.arrows());
        assert_eq!(m.reduce(&[]), m.one());
        let raw = m.parse_raw("[0,a] [0,b]").unwrap();
        let (r, trace) = m.reduce_traced(&raw);
        assert_eq!(r.arrows(), &raw[..]);
        assert!(trace.steps.is_empty());
        assert!(m.redexes(&raw).is_empty());
    }

    #[test]
    fn trace_prefers_leftmost_redex() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        let raw = m.parse_raw("[0,0] [0,a] [a,1]").unwrap();
        let (_, trace) = m.reduce_traced(&raw);
        assert_eq!(
            trace.steps,
            vec![
                RewriteStep { position: 0, kind: RewriteKind::DropIdentity },
                RewriteStep { position: 0, kind: RewriteKind::Compose },
            ]
        );
        let raw = m.parse_raw("[0,a] [b,b] [a,1]").unwrap();
        let (r, trace) = m.reduce_traced(&raw);
        assert_eq!(trace.steps[0], RewriteStep { position: 1, kind: RewriteKind::DropIdentity });
        assert_eq!(m.display(&r), "[0,1]");
    }

    #[test]
    fn non_conical_reduction_cascades() {
        let cat = catalog::cyclic_two();
        let m = UniversalMonoid::new(&cat);
        let g = m.parse_word("g").unwrap();
        assert_eq!(m.multiply(&g, &g), m.one());
        assert_eq!(m.parse_word("g g g").unwrap(), g);
        assert_eq!(m.divides(Side::Left, &g, &g), Err(MonoidError::NotConical));
        let p = m.universal_group_presentation();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 2);
    }

    #[test]
    fn multiply_examples() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        let x = m.parse_word("[0,a]").unwrap();
        let y = m.parse_word("[a,1]").unwrap();
        let z = m.parse_word("[0,b]").unwrap();
        assert_eq!(m.display(&m.multiply(&x, &y)), "[0,1]");
        assert_eq!(m.multiply(&x, &m.one()), x);
        assert_eq!(m.display(&m.multiply(&x, &z)), "[0,a] [0,b]");
    }

    #[test]
    fn components_examples() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        let x = m.parse_word("[0,a] [0,b]").unwrap();
        let (f, l) = m.components(&x).unwrap();
        assert_eq!((cat.name(f), cat.name(l)), ("[0,a]", "[0,b]"));
        assert_eq!(m.components(&m.one()), Err(MonoidError::EmptyElement));
    }

    #[test]
    fn divides_examples() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        let x = m.parse_word("[0,a]").unwrap();
        let y = m.parse_word("[0,1]").unwrap();
        let d = m.divides(Side::Left, &x, &y).unwrap().unwrap();
        assert_eq!(m.display(&d.quotient), "[a,1]");
        assert!(d.unique);
        let d = m.divides(Side::Left, &m.one(), &y).unwrap().unwrap();
        assert_eq!(d.quotient, y);
        let long = m.parse_word("[0,a] [0,b]").unwrap();
        assert_eq!(m.divides(Side::Left, &long, &x).unwrap(), None);
        let r = m.parse_word("[b,1]").unwrap();
        let d = m.divides(Side::Right, &r, &y).unwrap().unwrap();
        assert_eq!(m.display(&d.quotient), "[0,b]");
        let w = m.parse_word("[0,a] [0,b] [b,1] [0,a]").unwrap();
        let pre = m.parse_word("[0,a] [0,1]").unwrap();
        assert_eq!(m.display(&w), "[0,a] [0,1] [0,a]");
        let d = m.divides(Side::Left, &pre, &w).unwrap().unwrap();
        assert_eq!(m.display(&d.quotient), "[0,a]");
    }

    #[test]
    fn gcd_family_examples() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        let fam = [m.parse_word("[0,1]").unwrap(), m.parse_word("[0,a]").unwrap()];
        let g = m.gcd_family(Side::Left, &fam).unwrap().unwrap();
        assert_eq!(m.display(&g), "[0,a]");
        assert_eq!(m.gcd_family(Side::Left, &fam[..1]).unwrap().unwrap(), fam[0]);
        assert_eq!(m.gcd_family(Side::Left, &[]), Err(MonoidError::EmptyFamily));
        let r = m.gcd_family(Side::Right, &fam).unwrap().unwrap();
        assert_eq!(r, m.one());

        let vee = catalog::vee_category();
        let m = UniversalMonoid::new(&vee);
        let fam = [m.parse_word("[o,p]").unwrap(), m.parse_word("[o,q]").unwrap()];
        assert_eq!(m.gcd_family(Side::Left, &fam).unwrap(), Some(m.one()));
    }

    #[test]
    fn lcm_examples() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        let (a, b) = (m.parse_word("[0,a]").unwrap(), m.parse_word("[0,b]").unwrap());
        let l = m.lcm_pair(Side::Left, &a, &b).unwrap().unwrap();
        assert_eq!(m.display(&l), "[0,1]");
        assert_eq!(m.lcm_pair(Side::Left, &a, &a).unwrap(), Some(a.clone()));
        let ab = m.multiply(&a, &b);
        assert!(matches!(m.lcm_pair(Side::Left, &ab, &a), Err(MonoidError::NotStandardGenerator(_))));
        let vee = catalog::vee_category();
        let m = UniversalMonoid::new(&vee);
        let (p, q) = (m.parse_word("[o,p]").unwrap(), m.parse_word("[o,q]").unwrap());
        assert_eq!(m.lcm_pair(Side::Left, &p, &q).unwrap(), None);
    }

    #[test]
    fn greedy_examples() {
        let cat = catalog::diamond_category();
        let m = UniversalMonoid::new(&cat);
        for w in ["[0,1]", "[0,a] [0,b]", "1", "[a,1] [0,a] [0,1]"] {
            let x = m.parse_word(w).unwrap();
            assert_eq!(m.greedy_normal_form(&x).unwrap(), x.arrows());
        }
    }

    #[test]
    fn universal_group_presentations() {
        let vee = catalog::vee_category();
        let p = UniversalMonoid::new(&vee).universal_group_presentation();
        assert_eq!(p.generators().len(), 2);
        assert!(p.relators().is_empty());
        let d = catalog::diamond_category();
        let p = UniversalMonoid::new(&d).universal_group_presentation();
        assert_eq!((p.generators().len(), p.relators().len()), (5, 2));
        assert_eq!(p.abelianization_rank(), 3);
        let t = crate::category::RawCategory::new().object("o").validate().unwrap();
        let p = UniversalMonoid::new(&t).universal_group_presentation();
        assert!(p.generators().is_empty() && p.relators().is_empty());
    }

    #[test]
    fn element_enumeration_counts() {
        let vee = catalog::vee_category();
        let m = UniversalMonoid::new(&vee);
        // Both arrows start and end at different objects, so every word in
        // the two generators is reduced.
        assert_eq!(m.elements_up_to(3).len(), 1 + 2 + 4 + 8);
        assert!(m.element(&[vee.arrow_by_name("[o,o]").unwrap()]).is_err());
    }
}
