//! Finite abstract simplicial complexes stored by their maximal simplices.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

/// Largest simplex whose faces may be enumerated.
const MAX_SIMPLEX_SIZE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("empty simplex")]
    EmptySimplex,
    #[error("vertex `{0}` repeated within a simplex")]
    RepeatedVertex(String),
    #[error("simplex {{{0}}} is a face of another listed simplex")]
    NonMaximalSimplex(String),
    #[error("simplex with {0} vertices is too large to expand")]
    TooLarge(usize),
}

/// A simplicial complex. Vertices are sorted by name and indexed by
/// position; each maximal simplex is a sorted list of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    maximal: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds a complex from its maximal simplices; a listed simplex
    /// contained in another is an error.
    pub fn from_maximal<S: AsRef<str>>(simplices: &[Vec<S>]) -> Result<Self, ComplexError> {
        let k = Self::from_faces(simplices)?;
        if k.maximal.len() != Self::distinct(simplices).len() {
            let kept: BTreeSet<Vec<&str>> =
                k.maximal.iter().map(|s| s.iter().map(|&v| k.vertices[v].as_str()).collect()).collect();
            let bad = Self::distinct(simplices)
                .into_iter()
                .find(|s| !kept.contains(&s.iter().map(String::as_str).collect::<Vec<_>>()))
                .unwrap_or_default();
            return Err(ComplexError::NonMaximalSimplex(bad.join(",")));
        }
        Ok(k)
    }

    fn distinct<S: AsRef<str>>(simplices: &[Vec<S>]) -> BTreeSet<Vec<String>> {
        simplices
            .iter()
            .map(|s| {
                let mut v: Vec<String> = s.iter().map(|x| x.as_ref().to_string()).collect();
                v.sort();
                v
            })
            .collect()
    }

    /// Builds the complex generated by arbitrary simplices, keeping only
    /// the maximal ones.
    pub fn from_faces<S: AsRef<str>>(simplices: &[Vec<S>]) -> Result<Self, ComplexError> {
        let mut verts = BTreeSet::new();
        for s in simplices {
            if s.is_empty() {
                return Err(ComplexError::EmptySimplex);
            }
            let mut seen = BTreeSet::new();
            for v in s {
                if !seen.insert(v.as_ref()) {
                    return Err(ComplexError::RepeatedVertex(v.as_ref().to_string()));
                }
                verts.insert(v.as_ref().to_string());
            }
            if s.len() > MAX_SIMPLEX_SIZE {
                return Err(ComplexError::TooLarge(s.len()));
            }
        }
        let vertices: Vec<String> = verts.into_iter().collect();
        let idx = |v: &str| vertices.binary_search_by(|x| x.as_str().cmp(v)).unwrap();
        let mut sets: Vec<Vec<usize>> = simplices
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s.iter().map(|x| idx(x.as_ref())).collect();
                v.sort_unstable();
                v
            })
            .collect();
        sets.sort();
        sets.dedup();
        let maximal: Vec<Vec<usize>> = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| t.len() > s.len() && is_subset(s, t)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { vertices, maximal })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub fn maximal_simplices(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    /// Largest simplex size minus one; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.maximal.iter().map(|s| s.len() as isize - 1).max().unwrap_or(-1)
    }

    /// Every simplex of the complex, ordered by size and then
    /// lexicographically by vertex index.
    pub fn simplices(&self) -> Vec<Vec<usize>> {
        self.skeleton(usize::MAX)
    }

    /// Simplices with at most `n + 1` vertices.
    pub fn skeleton(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for s in &self.maximal {
            let k = s.len();
            for mask in 1u32..(1u32 << k) {
                if (mask.count_ones() as usize) <= n.saturating_add(1) {
                    let face: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
                    out.insert((face.len(), face));
                }
            }
        }
        out.into_iter().map(|(_, f)| f).collect()
    }

    /// Edges `(x, y)` with `x < y`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.skeleton(1).into_iter().filter(|f| f.len() == 2).map(|f| (f[0], f[1])).collect()
    }

    /// Two-dimensional faces `(x, y, z)` with `x < y < z`.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        self.skeleton(2).into_iter().filter(|f| f.len() == 3).map(|f| (f[0], f[1], f[2])).collect()
    }

    /// Sorted neighbour lists of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (x, y) in self.edges() {
            adj[x].push(y);
            adj[y].push(x);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Human-readable label `{x,y,...}` for a simplex.
    pub fn simplex_label(&self, s: &[usize]) -> String {
        let parts: Vec<&str> = s.iter().map(|&v| self.vertices[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_of_a_triangle() {
        let k = SimplicialComplex::from_maximal(&[vec!["x", "y", "z"]]).unwrap();
        assert_eq!(k.simplices().len(), 7);
        assert_eq!(k.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(k.triangles(), vec![(0, 1, 2)]);
        assert_eq!(k.dimension(), 2);
    }

    #[test]
    fn non_maximal_input_rejected() {
        let err = SimplicialComplex::from_maximal(&[vec!["x", "y"], vec!["x"]]).unwrap_err();
        assert_eq!(err, ComplexError::NonMaximalSimplex("x".into()));
        let k = SimplicialComplex::from_faces(&[vec!["x", "y"], vec!["x"]]).unwrap();
        assert_eq!(k.maximal_simplices(), &[vec![0, 1]]);
    }

    #[test]
    fn connectivity() {
        let square = SimplicialComplex::from_maximal(&[
            vec!["a", "b"],
            vec!["b", "c"],
            vec!["c", "d"],
            vec!["a", "d"],
        ])
        .unwrap();
        assert!(square.is_connected());
        let two = SimplicialComplex::from_maximal(&[vec!["a"], vec!["b"]]).unwrap();
        assert!(!two.is_connected());
        assert!(two.edges().is_empty());
    }

    #[test]
    fn bad_simplices() {
        let empty: Vec<&str> = vec![];
        assert_eq!(SimplicialComplex::from_faces(&[empty]).unwrap_err(), ComplexError::EmptySimplex);
        assert_eq!(
            SimplicialComplex::from_faces(&[vec!["a", "a"]]).unwrap_err(),
            ComplexError::RepeatedVertex("a".into())
        );
    }
}
