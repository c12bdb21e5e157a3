//! Workloads shared by the benchmarks.

use catmon_core::{catalog, ArrowId, FiniteCategory, Poset};

/// A chain poset with `n` elements, whose interval category has a dense
/// composition table.
pub fn long_chain(n: usize) -> Poset {
    catalog::chain_poset(n)
}

/// A deterministic raw word of length `len` over all arrows of `cat`,
/// identities included, produced by a linear congruential walk.
pub fn raw_word(cat: &FiniteCategory, len: usize, seed: u64) -> Vec<ArrowId> {
    let n = cat.arrow_count() as u64;
    let mut state = seed;
    (0..len)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ArrowId(((state >> 33) % n) as u32)
        })
        .collect()
}
