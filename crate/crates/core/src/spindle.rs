//! Spindles `[u,v]` of a poset and the category obtained from the
//! interval category by splitting `[u,v]` into one arrow per maximal chain.

use thiserror::Error;

use crate::category::{FiniteCategory, RawCategory};
use crate::interval::interval_name;
use crate::poset::Poset;
use crate::presented::MonoidPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpindleError {
    #[error("`{0}` is not strictly below `{1}`")]
    NotComparable(String, String),
    #[error("the interval [{0},{1}] has no element strictly inside")]
    HeightTooSmall(String, String),
    #[error("the spindle is not extreme: `{0}` must be minimal and `{1}` maximal")]
    NotExtreme(String, String),
}

/// A spindle together with the maximal chains of its interval, each listed
/// from `u` to `v` and sorted by element names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spindle {
    pub u: usize,
    pub v: usize,
    pub chains: Vec<Vec<usize>>,
}

impl Spindle {
    /// Arrow name of the chain: `chain:` then the inner elements, sorted
    /// and comma-separated.
    pub fn chain_name(&self, p: &Poset, chain: &[usize]) -> String {
        let mut inner: Vec<&str> = chain[1..chain.len() - 1].iter().map(|&i| p.name(i)).collect();
        inner.sort_unstable();
        format!("chain:{}", inner.join(","))
    }

    /// The chain through an inner element `z`.
    pub fn chain_of(&self, z: usize) -> Option<&[usize]> {
        self.chains.iter().find(|c| c.contains(&z)).map(Vec::as_slice)
    }
}

fn open_interval(p: &Poset, u: usize, v: usize) -> Vec<usize> {
    (0..p.len()).filter(|&z| p.lt(u, z) && p.lt(z, v)).collect()
}

fn check_pair(p: &Poset, u: usize, v: usize) -> Result<Vec<usize>, SpindleError> {
    if !p.lt(u, v) {
        return Err(SpindleError::NotComparable(p.name(u).to_string(), p.name(v).to_string()));
    }
    let open = open_interval(p, u, v);
    if open.is_empty() {
        return Err(SpindleError::HeightTooSmall(p.name(u).to_string(), p.name(v).to_string()));
    }
    Ok(open)
}

/// Comparability on `]u,v[` is transitive (hence an equivalence).
pub fn comparability_criterion(p: &Poset, u: usize, v: usize) -> Result<bool, SpindleError> {
    let open = check_pair(p, u, v)?;
    for &x in &open {
        for &y in &open {
            for &z in &open {
                if p.comparable(x, y) && p.comparable(y, z) && !p.comparable(x, z) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Any two distinct maximal chains of `[u,v]` meet exactly in `{u,v}`.
pub fn chain_criterion(p: &Poset, u: usize, v: usize) -> Result<bool, SpindleError> {
    check_pair(p, u, v)?;
    let chains = p.maximal_chains(u, v);
    for (i, a) in chains.iter().enumerate() {
        for b in &chains[i + 1..] {
            if a[1..a.len() - 1].iter().any(|z| b.contains(z)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Some` when `[u,v]` is a spindle.
pub fn detect_spindle(p: &Poset, u: usize, v: usize) -> Result<Option<Spindle>, SpindleError> {
    if !comparability_criterion(p, u, v)? {
        return Ok(None);
    }
    Ok(Some(Spindle { u, v, chains: p.maximal_chains(u, v) }))
}

pub fn is_extreme_spindle(p: &Poset, sp: &Spindle) -> bool {
    p.is_minimal(sp.u) && p.is_maximal(sp.v)
}

fn require_extreme(p: &Poset, sp: &Spindle) -> Result<(), SpindleError> {
    if is_extreme_spindle(p, sp) {
        Ok(())
    } else {
        Err(SpindleError::NotExtreme(p.name(sp.u).to_string(), p.name(sp.v).to_string()))
    }
}

/// The interval category with `[u,v]` replaced by one arrow per maximal
/// chain `Z`, and `[u,z]·[z,v] = Z` for `z` on `Z`.
pub fn spindle_category(p: &Poset, sp: &Spindle) -> Result<FiniteCategory, SpindleError> {
    require_extreme(p, sp)?;
    let n = p.len();
    let (u, v) = (sp.u, sp.v);
    let name = |x: usize, y: usize| interval_name(p.name(x), p.name(y));
    let mut raw = RawCategory::new();
    for x in 0..n {
        raw.object_with_identity(p.name(x), name(x, x));
    }
    for x in 0..n {
        for y in 0..n {
            if p.lt(x, y) && (x, y) != (u, v) {
                raw.arrow(name(x, y), p.name(x), p.name(y));
            }
        }
    }
    for c in &sp.chains {
        raw.arrow(sp.chain_name(p, c), p.name(u), p.name(v));
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !(p.lt(x, y) && p.lt(y, z)) {
                    continue;
                }
                let h = if (x, z) == (u, v) {
                    sp.chain_name(p, sp.chain_of(y).expect("inner elements lie on a chain"))
                } else {
                    name(x, z)
                };
                raw.comp(name(x, y), name(y, z), h);
            }
        }
    }
    Ok(raw.validate_with_limit(usize::MAX).expect("spindle categories are valid"))
}

/// Generators `[x,y]` for `x < y` other than `[u,v]`; relations
/// `[x,z] = [x,y][y,z]` for `x < y < z` with `(x,z) ≠ (u,v)`. The
/// relations are not length-preserving.
pub fn spindle_presentation(p: &Poset, sp: &Spindle) -> Result<MonoidPresentation, SpindleError> {
    require_extreme(p, sp)?;
    let n = p.len();
    let name = |x: usize, y: usize| interval_name(p.name(x), p.name(y));
    let mut generators = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if p.lt(x, y) && (x, y) != (sp.u, sp.v) {
                generators.push(name(x, y));
            }
        }
    }
    let mut relations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if p.lt(x, y) && p.lt(y, z) && (x, z) != (sp.u, sp.v) {
                    relations.push((vec![name(x, z)], vec![name(x, y), name(y, z)]));
                }
            }
        }
    }
    Ok(MonoidPresentation::new(&generators, &relations).expect("generators are listed"))
}
