//! Finite posets given by their Hasse diagram.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cover `{0} {0}` relates an element to itself")]
    SelfCover(String),
    #[error("duplicate cover `{0} {1}`")]
    DuplicateCover(String, String),
    #[error("covers contain a cycle through `{0}`")]
    Cycle(String),
    #[error("cover `{0} {1}` is implied by other covers")]
    RedundantCover(String, String),
}

/// A finite poset. Elements are indexed `0..len()` in declaration order;
/// the order relation is the reflexive-transitive closure of the covers and
/// is cached as a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    leq: Vec<bool>,
}

impl Poset {
    /// Builds a poset from its Hasse diagram. Covers implied by other covers
    /// are rejected.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self, PosetError> {
        let (names, index) = Self::index_names(elements)?;
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| PosetError::UnknownElement(s.to_string()));
        let mut pairs = Vec::with_capacity(covers.len());
        let mut seen = BTreeSet::new();
        for (x, y) in covers {
            let (i, j) = (lookup(x.as_ref())?, lookup(y.as_ref())?);
            if i == j {
                return Err(PosetError::SelfCover(names[i].clone()));
            }
            if !seen.insert((i, j)) {
                return Err(PosetError::DuplicateCover(names[i].clone(), names[j].clone()));
            }
            pairs.push((i, j));
        }
        let leq = closure(names.len(), &pairs).map_err(|i| PosetError::Cycle(names[i].clone()))?;
        let n = names.len();
        for &(i, j) in &pairs {
            if (0..n).any(|z| z != i && z != j && leq[i * n + z] && leq[z * n + j]) {
                return Err(PosetError::RedundantCover(names[i].clone(), names[j].clone()));
            }
        }
        Ok(Poset { names, index, covers: pairs, leq })
    }

    /// Builds a poset from any relation whose transitive closure is a strict
    /// order; the Hasse diagram is computed.
    pub fn from_relation<S: AsRef<str>>(
        elements: &[S],
        relation: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let (names, index) = Self::index_names(elements)?;
        let n = names.len();
        if let Some(&(i, _)) = relation.iter().find(|(i, j)| i == j) {
            return Err(PosetError::SelfCover(names[i].clone()));
        }
        let leq = closure(n, relation).map_err(|i| PosetError::Cycle(names[i].clone()))?;
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j
                    && leq[i * n + j]
                    && !(0..n).any(|z| z != i && z != j && leq[i * n + z] && leq[z * n + j])
                {
                    covers.push((i, j));
                }
            }
        }
        Ok(Poset { names, index, covers, leq })
    }

    fn index_names<S: AsRef<str>>(
        elements: &[S],
    ) -> Result<(Vec<String>, HashMap<String, usize>), PosetError> {
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(elements.len());
        for e in elements {
            let e = e.as_ref().to_string();
            if index.insert(e.clone(), names.len()).is_some() {
                return Err(PosetError::DuplicateElement(e));
            }
            names.push(e);
        }
        Ok((names, index))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Covering pairs `(x, y)` with `x ≺ y`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.names.len() + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.0 == x).map(|c| c.1)
    }

    /// `↑a = {x : x ≥ a}`.
    pub fn up_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.leq(a, x)).collect()
    }

    /// `↓a = {x : x ≤ a}`.
    pub fn down_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.leq(x, a)).collect()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        (0..self.len()).all(|y| !self.lt(y, x))
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        (0..self.len()).all(|y| !self.lt(x, y))
    }

    pub fn least_element(&self) -> Option<usize> {
        (0..self.len()).find(|&x| (0..self.len()).all(|y| self.leq(x, y)))
    }

    /// Greatest element of `{z ∈ within : z ≤ y1, z ≤ y2}`, if any.
    pub fn meet_within(&self, within: &[usize], y1: usize, y2: usize) -> Option<usize> {
        let lower: Vec<usize> =
            within.iter().copied().filter(|&z| self.leq(z, y1) && self.leq(z, y2)).collect();
        lower.iter().copied().find(|&g| lower.iter().all(|&z| self.leq(z, g)))
    }

    /// Least element of `{z ∈ within : z ≥ y1, z ≥ y2}`, if any.
    pub fn join_within(&self, within: &[usize], y1: usize, y2: usize) -> Option<usize> {
        let upper: Vec<usize> =
            within.iter().copied().filter(|&z| self.leq(y1, z) && self.leq(y2, z)).collect();
        upper.iter().copied().find(|&l| upper.iter().all(|&z| self.leq(l, z)))
    }

    /// Kahn's topological sort, breaking ties by the lexicographically
    /// smallest element name.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut indegree = vec![0usize; n];
        for &(_, y) in &self.covers {
            indegree[y] += 1;
        }
        let mut ready: BTreeSet<(&str, usize)> =
            (0..n).filter(|&i| indegree[i] == 0).map(|i| (self.names[i].as_str(), i)).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(first) = ready.pop_first() {
            let x = first.1;
            order.push(x);
            for y in self.upper_covers(x) {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.insert((self.names[y].as_str(), y));
                }
            }
        }
        order
    }

    /// Maximal chains of the closed interval `[u, v]`, each listed from `u`
    /// to `v`, found by depth-first search along covers. Empty if `u ≰ v`.
    pub fn maximal_chains(&self, u: usize, v: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if !self.leq(u, v) {
            return out;
        }
        let mut path = vec![u];
        self.chains_from(v, &mut path, &mut out);
        out.sort_by(|a, b| self.chain_key(a).cmp(&self.chain_key(b)));
        out
    }

    fn chains_from(&self, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().expect("nonempty path");
        if x == v {
            out.push(path.clone());
            return;
        }
        for y in self.upper_covers(x) {
            if self.leq(y, v) {
                path.push(y);
                self.chains_from(v, path, out);
                path.pop();
            }
        }
    }

    fn chain_key<'a>(&'a self, chain: &[usize]) -> Vec<&'a str> {
        chain.iter().map(|&i| self.names[i].as_str()).collect()
    }

    /// All maximal chains of the poset, from minimal to maximal elements.
    pub fn all_maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for x in (0..self.len()).filter(|&x| self.is_minimal(x)) {
            let mut path = vec![x];
            self.chains_to_top(&mut path, &mut out);
        }
        out.sort_by(|a, b| self.chain_key(a).cmp(&self.chain_key(b)));
        out
    }

    fn chains_to_top(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().expect("nonempty path");
        let ups: Vec<usize> = self.upper_covers(x).collect();
        if ups.is_empty() {
            out.push(path.clone());
            return;
        }
        for y in ups {
            path.push(y);
            self.chains_to_top(path, out);
            path.pop();
        }
    }
}

/// Reflexive-transitive closure as a dense matrix; on a cycle returns an
/// element on it.
fn closure(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<bool>, usize> {
    let mut m = vec![false; n * n];
    for i in 0..n {
        m[i * n + i] = true;
    }
    for &(i, j) in pairs {
        m[i * n + j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if m[i * n + k] {
                for j in 0..n {
                    if m[k * n + j] {
                        m[i * n + j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && m[i * n + j] && m[j * n + i] {
                return Err(i);
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        Poset::from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap()
    }

    #[test]
    fn closure_and_covers() {
        let p = diamond();
        let (z, a, b, one) = (0, 1, 2, 3);
        assert!(p.leq(z, one) && p.lt(a, one) && !p.comparable(a, b));
        assert_eq!(p.covers().len(), 4);
        assert_eq!(p.up_set(a), vec![a, one]);
        assert_eq!(p.down_set(one), vec![z, a, b, one]);
        assert_eq!(p.least_element(), Some(z));
    }

    #[test]
    fn redundant_cover_rejected() {
        let err = Poset::from_covers(&["0", "1", "2"], &[("0", "1"), ("1", "2"), ("0", "2")]).unwrap_err();
        assert_eq!(err, PosetError::RedundantCover("0".into(), "2".into()));
    }

    #[test]
    fn cycle_rejected() {
        let err = Poset::from_covers(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap_err();
        assert!(matches!(err, PosetError::Cycle(_)));
        assert!(matches!(Poset::from_covers(&["x"], &[("x", "x")]), Err(PosetError::SelfCover(_))));
        assert!(matches!(Poset::from_covers(&["x"], &[("x", "z")]), Err(PosetError::UnknownElement(_))));
    }

    #[test]
    fn relation_builder_drops_implied_pairs() {
        let p = Poset::from_relation(&["0", "1", "2"], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn linear_extension_breaks_ties_by_name() {
        let p = Poset::from_covers(&["z", "b", "a"], &[("z", "a")]).unwrap();
        let names: Vec<&str> = p.linear_extension().iter().map(|&i| p.name(i)).collect();
        assert_eq!(names, ["b", "z", "a"]);
    }

    #[test]
    fn chains() {
        let p = diamond();
        assert_eq!(p.maximal_chains(0, 3), vec![vec![0, 1, 3], vec![0, 2, 3]]);
        assert_eq!(p.all_maximal_chains().len(), 2);
        assert!(p.maximal_chains(1, 2).is_empty());
        assert_eq!(p.meet_within(&p.up_set(0), 1, 2), Some(0));
        assert_eq!(p.join_within(&p.down_set(3), 1, 2), Some(3));
    }
}
