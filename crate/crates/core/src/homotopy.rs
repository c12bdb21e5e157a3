//! Floating homotopy groups of simplicial complexes and posets: group
//! presentations, spanning-tree collapse to a fundamental group, and the
//! comparison with the universal group of the interval category.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::group::{FreeWord, Letter};
use crate::interval::cat_of_poset;
use crate::monoid::UniversalMonoid;
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("the complex is not connected")]
    Disconnected,
    #[error("the complex has no vertices")]
    EmptyComplex,
    #[error("relator uses generator index {0}, which is not declared")]
    UnknownGenerator(usize),
}

/// A finite group presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self, HomotopyError> {
        for r in &relators {
            if let Some(l) = r.letters().iter().find(|l| l.index() >= generators.len()) {
                return Err(HomotopyError::UnknownGenerator(l.index()));
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn relator_strings(&self) -> Vec<String> {
        self.relators.iter().map(|r| r.display(&self.generators)).collect()
    }

    /// Rank of the free group presented, when there are no relators.
    pub fn free_rank(&self) -> Option<usize> {
        self.relators.is_empty().then_some(self.generators.len())
    }

    /// Torsion-free rank of the abelianization: generators minus the rank
    /// of the exponent-sum matrix.
    pub fn abelianization_rank(&self) -> usize {
        let rows: Vec<Vec<i128>> = self
            .relators
            .iter()
            .map(|r| (0..self.generators.len()).map(|g| r.exponent_sum(g) as i128).collect())
            .collect();
        self.generators.len() - integer_rank(rows)
    }

    /// Sets the named generators to 1 and simplifies.
    pub fn kill(&self, names: &BTreeSet<String>) -> GroupPresentation {
        let keep: Vec<usize> =
            (0..self.generators.len()).filter(|&g| !names.contains(&self.generators[g])).collect();
        let mut new_index = vec![None; self.generators.len()];
        for (i, &g) in keep.iter().enumerate() {
            new_index[g] = Some(i);
        }
        let relators = self
            .relators
            .iter()
            .map(|r| {
                r.substitute(|g| match new_index[g] {
                    Some(i) => FreeWord::generator(i),
                    None => FreeWord::identity(),
                })
            })
            .collect();
        let generators = keep.iter().map(|&g| self.generators[g].clone()).collect();
        GroupPresentation { generators, relators }.simplify()
    }

    /// Tietze simplification: cyclic reduction, removal of trivial and
    /// repeated relators (up to rotation and inversion), then repeated
    /// elimination of a generator occurring exactly once in some relator.
    pub fn simplify(&self) -> GroupPresentation {
        let mut generators = self.generators.clone();
        let mut relators = self.relators.clone();
        loop {
            relators = tidy_relators(&relators);
            let Some((ri, g)) = relators
                .iter()
                .enumerate()
                .find_map(|(i, r)| (0..generators.len()).find(|&g| r.occurrences(g) == 1).map(|g| (i, g)))
            else {
                break;
            };
            let r = relators.remove(ri);
            let pos = r.letters().iter().position(|l| l.index() == g).expect("occurs once");
            let letters = r.letters();
            // r = u g^e v, cyclically g^e (v u) = 1.
            let rest = FreeWord::from_letters(letters[pos + 1..].iter().chain(&letters[..pos]).copied());
            let value = if letters[pos].inverse { rest } else { rest.inverse() };
            relators = relators
                .iter()
                .map(|w| {
                    w.substitute(|h| match h.cmp(&g) {
                        std::cmp::Ordering::Less => FreeWord::generator(h),
                        std::cmp::Ordering::Equal => shift_down(&value, g),
                        std::cmp::Ordering::Greater => FreeWord::generator(h - 1),
                    })
                })
                .collect();
            generators.remove(g);
        }
        GroupPresentation { generators, relators }
    }
}

/// Renumbers a word that avoids generator `g` for the presentation
/// with `g` removed.
fn shift_down(w: &FreeWord, g: usize) -> FreeWord {
    FreeWord::from_letters(w.letters().iter().map(|l| {
        let i = if l.index() > g { l.index() - 1 } else { l.index() };
        Letter::new(i, l.inverse)
    }))
}

fn tidy_relators(relators: &[FreeWord]) -> Vec<FreeWord> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let c = r.cyclically_reduced();
        if c.is_identity() {
            continue;
        }
        if seen.insert(cyclic_key(&c)) {
            out.push(c);
        }
    }
    out
}

/// Least rotation of the word or its inverse.
fn cyclic_key(w: &FreeWord) -> Vec<Letter> {
    let mut best: Option<Vec<Letter>> = None;
    for v in [w.clone(), w.inverse()] {
        let l = v.letters();
        for k in 0..l.len() {
            let rot: Vec<Letter> = l[k..].iter().chain(&l[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Rank over the rationals, by fraction-free elimination with rows kept
/// primitive.
fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &q) in row.iter_mut().zip(&pivot) {
                *x = *x * pivot[c] - q * f;
            }
            let g = row.iter().fold(0i128, |a, &b| gcd(a, b));
            if g > 1 {
                for x in row.iter_mut() {
                    *x /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The name of the generator for the edge `{x, y}`, smaller name first.
pub fn edge_name(x: &str, y: &str) -> String {
    if x <= y {
        format!("[{x},{y}]")
    } else {
        format!("[{y},{x}]")
    }
}

/// One generator per edge and one relator `[x,y][y,z][x,z]^-1` per
/// triangle `x < y < z`. The relations `[x,x] = 1` and `[y,x] = [x,y]^-1`
/// are applied up front.
pub fn floating_presentation(k: &SimplicialComplex) -> GroupPresentation {
    let edges = k.edges();
    let generators = edges.iter().map(|&(x, y)| edge_name(k.vertex_name(x), k.vertex_name(y))).collect();
    let index = |x: usize, y: usize| edges.binary_search(&(x, y)).expect("face of a triangle");
    let relators = k
        .triangles()
        .into_iter()
        .map(|(x, y, z)| {
            FreeWord::from_letters([
                Letter::new(index(x, y), false),
                Letter::new(index(y, z), false),
                Letter::new(index(x, z), true),
            ])
        })
        .collect();
    GroupPresentation { generators, relators }
}

/// A spanning tree of the 1-skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningTree {
    pub root: String,
    /// Edges as `(parent, child)` in discovery order.
    pub edges: Vec<(String, String)>,
}

impl SpanningTree {
    pub fn edge_names(&self) -> BTreeSet<String> {
        self.edges.iter().map(|(x, y)| edge_name(x, y)).collect()
    }
}

/// Breadth-first tree from the least vertex, visiting neighbours in name
/// order.
pub fn spanning_tree(k: &SimplicialComplex) -> Result<SpanningTree, HomotopyError> {
    if k.vertex_count() == 0 {
        return Err(HomotopyError::EmptyComplex);
    }
    let adj = k.adjacency();
    let mut seen = vec![false; k.vertex_count()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut edges = Vec::new();
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                edges.push((k.vertex_name(x).to_string(), k.vertex_name(y).to_string()));
                queue.push_back(y);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(HomotopyError::Disconnected);
    }
    Ok(SpanningTree { root: k.vertex_name(0).to_string(), edges })
}

/// Kills the tree-edge generators and simplifies, leaving a presentation of
/// the fundamental group at the root.
pub fn tietze_collapse(pres: &GroupPresentation, tree: &SpanningTree) -> GroupPresentation {
    pres.kill(&tree.edge_names())
}

/// `HG(K) ≅ F(E) * π1(K)` where `E` is the edge set of a spanning tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FloatingDecomposition {
    pub tree: SpanningTree,
    pub tree_edges: usize,
    pub pi1_generators: Vec<String>,
    pub pi1_relators: Vec<String>,
    /// Set only when the collapsed presentation has no relators.
    pub pi1_free_rank: Option<usize>,
    pub total_free_rank: Option<usize>,
    pub abelianization_rank: usize,
}

pub fn floating_decomposition(k: &SimplicialComplex) -> Result<FloatingDecomposition, HomotopyError> {
    let tree = spanning_tree(k)?;
    let pres = floating_presentation(k);
    let pi1 = tietze_collapse(&pres, &tree);
    let tree_edges = tree.edges.len();
    let pi1_free_rank = pi1.free_rank();
    Ok(FloatingDecomposition {
        tree_edges,
        pi1_generators: pi1.generators().to_vec(),
        pi1_relators: pi1.relator_strings(),
        pi1_free_rank,
        total_free_rank: pi1_free_rank.map(|r| r + tree_edges),
        abelianization_rank: pres.abelianization_rank(),
        tree,
    })
}

/// The complex of nonempty chains of a poset.
pub fn chain_complex(p: &Poset) -> SimplicialComplex {
    let chains: Vec<Vec<&str>> =
        p.all_maximal_chains().into_iter().map(|c| c.into_iter().map(|i| p.name(i)).collect()).collect();
    SimplicialComplex::from_faces(&chains).expect("chains are nonempty and repetition-free")
}

/// The two computations of the free rank of `HG(P)`: through the chain
/// complex and a spanning tree, and through the universal group of the
/// interval category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub floating: FloatingDecomposition,
    pub universal_generators: usize,
    pub universal_relators: usize,
    /// Free rank after Tietze simplification, when no relators remain.
    pub universal_free_rank: Option<usize>,
    pub universal_abelianization_rank: usize,
    /// Whether both routes certified a free group of the same rank.
    pub free_ranks_agree: Option<bool>,
    pub abelianization_ranks_agree: bool,
}

impl CrossCheckReport {
    pub fn agree(&self) -> bool {
        self.abelianization_ranks_agree && self.free_ranks_agree != Some(false)
    }
}

pub fn cross_check(p: &Poset) -> Result<CrossCheckReport, HomotopyError> {
    let floating = floating_decomposition(&chain_complex(p))?;
    let cat = cat_of_poset(p);
    let pres = UniversalMonoid::new(&cat).universal_group_presentation();
    let simplified = pres.simplify();
    let universal_free_rank = simplified.free_rank();
    let universal_abelianization_rank = pres.abelianization_rank();
    let free_ranks_agree = match (floating.total_free_rank, universal_free_rank) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok(CrossCheckReport {
        universal_generators: pres.generators().len(),
        universal_relators: pres.relators().len(),
        universal_free_rank,
        universal_abelianization_rank,
        free_ranks_agree,
        abelianization_ranks_agree: universal_abelianization_rank == floating.abelianization_rank,
        floating,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn complex(simplices: &[&[&str]]) -> SimplicialComplex {
        let v: Vec<Vec<&str>> = simplices.iter().map(|s| s.to_vec()).collect();
        SimplicialComplex::from_maximal(&v).unwrap()
    }

    #[test]
    fn square_is_free_of_rank_four() {
        let k = catalog::square_complex();
        let p = floating_presentation(&k);
        assert_eq!(p.free_rank(), Some(4));
        let t = spanning_tree(&k).unwrap();
        assert_eq!(t.edges.len(), 3);
        let pi1 = tietze_collapse(&p, &t);
        assert_eq!((pi1.generators().len(), pi1.relators().len()), (1, 0));
        let d = floating_decomposition(&k).unwrap();
        assert_eq!((d.tree_edges, d.pi1_free_rank, d.total_free_rank), (3, Some(1), Some(4)));
    }

    #[test]
    fn single_edge_and_vertex() {
        assert_eq!(floating_presentation(&complex(&[&["x", "y"]])).free_rank(), Some(1));
        let d = floating_decomposition(&complex(&[&["v"]])).unwrap();
        assert_eq!((d.tree_edges, d.total_free_rank), (0, Some(0)));
    }

    #[test]
    fn triangle_collapses_to_trivial_group() {
        let k = complex(&[&["x", "y", "z"]]);
        let p = floating_presentation(&k);
        assert_eq!((p.generators().len(), p.relators().len()), (3, 1));
        assert_eq!(p.relator_strings(), vec!["[x,y] [y,z] [x,z]^-1"]);
        assert_eq!(p.simplify().free_rank(), Some(2));
        let pi1 = tietze_collapse(&p, &spanning_tree(&k).unwrap());
        assert_eq!(pi1.free_rank(), Some(0));
    }

    #[test]
    fn path_tree() {
        let k = complex(&[&["a", "b"], &["b", "c"]]);
        let t = spanning_tree(&k).unwrap();
        assert_eq!(t.edges.len(), 2);
        assert_eq!(tietze_collapse(&floating_presentation(&k), &t).free_rank(), Some(0));
    }

    #[test]
    fn disconnected_complex() {
        let k = complex(&[&["a"], &["b"]]);
        assert_eq!(spanning_tree(&k), Err(HomotopyError::Disconnected));
    }

    #[test]
    fn chain_complexes() {
        let chain = catalog::chain_poset(3);
        let k = chain_complex(&chain);
        assert_eq!(k.maximal_simplices().len(), 1);
        let anti = Poset::from_covers(&["a", "b"], &[] as &[(&str, &str)]).unwrap();
        let k = chain_complex(&anti);
        assert_eq!((k.vertex_count(), k.edges().len()), (2, 0));
        let k = chain_complex(&catalog::diamond_poset());
        assert_eq!(k.maximal_simplices().len(), 2);
        assert!(k.maximal_simplices().iter().all(|s| s.len() == 3));
    }

    #[test]
    fn cross_checks() {
        for (p, rank) in [
            (catalog::diamond_poset(), 3),
            (catalog::chain_poset(3), 2),
            (catalog::seven_element_bounded_below(), 6),
        ] {
            let r = cross_check(&p).unwrap();
            assert_eq!(r.floating.total_free_rank, Some(rank));
            assert_eq!(r.universal_free_rank, Some(rank));
            assert!(r.agree());
        }
    }

    #[test]
    fn abelianization_bookkeeping() {
        let k = catalog::square_complex();
        let p = floating_presentation(&k);
        let t = spanning_tree(&k).unwrap();
        let pi1 = tietze_collapse(&p, &t);
        assert_eq!(p.abelianization_rank(), pi1.abelianization_rank() + t.edges.len());
        // ⟨a, b | a b a^-1 b^-1⟩ has abelianization Z^2 and is not free.
        let torus = GroupPresentation::new(
            vec!["a".into(), "b".into()],
            vec![FreeWord::from_letters([
                Letter::new(0, false),
                Letter::new(1, false),
                Letter::new(0, true),
                Letter::new(1, true),
            ])],
        )
        .unwrap();
        assert_eq!(torus.abelianization_rank(), 2);
        assert_eq!(torus.simplify().free_rank(), None);
        assert_eq!(integer_rank(vec![vec![2, 4], vec![1, 2]]), 1);
    }
}
