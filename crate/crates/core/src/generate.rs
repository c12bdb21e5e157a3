//! Exhaustive and random generators of small inputs: posets, simplicial
//! complexes and finite categories.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;

use crate::category::{FiniteCategory, RawCategory};
use crate::complex::SimplicialComplex;
use crate::poset::Poset;

fn element_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Strict down-sets (as bitmasks) of every naturally labelled order on
/// `n` elements: element `k` is only ever above elements `< k`.
fn natural_down_sets(n: usize) -> Vec<Vec<u32>> {
    fn extend(down: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        let k = down.len();
        if k == n {
            out.push(down.clone());
            return;
        }
        for mask in 0u32..(1 << k) {
            let closed = (0..k).all(|i| mask & (1 << i) == 0 || down[i] & !mask == 0);
            if closed {
                down.push(mask);
                extend(down, n, out);
                down.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out
}

fn poset_from_down_sets(names: &[String], down: &[u32]) -> Poset {
    let mut rel = Vec::new();
    for (k, &mask) in down.iter().enumerate() {
        for i in 0..k.max(down.len()) {
            if mask & (1 << i) != 0 {
                rel.push((i, k));
            }
        }
    }
    Poset::from_relation(names, &rel).expect("down-sets define an order")
}

/// Every poset on `0..n` in which `i < j` in the order implies `i < j` as
/// numbers. Each isomorphism type occurs at least once.
pub fn naturally_labeled_posets(n: usize) -> Vec<Poset> {
    let names = element_names(n);
    natural_down_sets(n).iter().map(|d| poset_from_down_sets(&names, d)).collect()
}

/// Every partial order on the labelled set `0..n`.
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    let names = element_names(n);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let perms = permutations(n);
    for down in natural_down_sets(n) {
        for perm in &perms {
            let mut relabeled = vec![0u32; n];
            for (k, &mask) in down.iter().enumerate() {
                let m = perm
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .fold(0u32, |m, (_, &j)| m | 1 << j);
                relabeled[perm[k]] = m;
            }
            seen.insert(relabeled);
        }
    }
    seen.iter().map(|d| poset_from_down_sets(&names, d)).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Naturally labelled posets on `n ≥ 1` elements in which `0` is below
/// everything.
pub fn posets_with_least_element(n: usize) -> Vec<Poset> {
    if n == 0 {
        return Vec::new();
    }
    let names = element_names(n);
    natural_down_sets(n)
        .into_iter()
        .filter(|d| d.iter().skip(1).all(|&m| m & 1 != 0))
        .map(|d| poset_from_down_sets(&names, &d))
        .collect()
}

/// Every simplicial complex whose vertex set is exactly `v0, …, v{n-1}`,
/// as an antichain of nonempty faces covering all vertices.
pub fn complexes_on(n: usize) -> Vec<SimplicialComplex> {
    let subsets: Vec<u32> = (1u32..(1 << n)).collect();
    let mut out = Vec::new();
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let full = (1u32 << n) - 1;
    fn walk(subsets: &[u32], start: usize, chosen: &mut Vec<u32>, full: u32, out: &mut Vec<Vec<u32>>) {
        if chosen.iter().fold(0, |a, &s| a | s) == full {
            out.push(chosen.clone());
        }
        for i in start..subsets.len() {
            let s = subsets[i];
            if chosen.iter().all(|&c| c & s != c && c & s != s) {
                chosen.push(s);
                walk(subsets, i + 1, chosen, full, out);
                chosen.pop();
            }
        }
    }
    let mut antichains = Vec::new();
    walk(&subsets, 0, &mut Vec::new(), full, &mut antichains);
    for a in antichains {
        let simplices: Vec<Vec<&str>> = a
            .iter()
            .map(|&s| (0..n).filter(|i| s & (1 << i) != 0).map(|i| names[i].as_str()).collect())
            .collect();
        out.push(SimplicialComplex::from_maximal(&simplices).expect("antichains are maximal"));
    }
    out
}

/// A random concrete category: objects are sets of size 1 to 3, arrows
/// are functions between them, closed under composition. Arrows are named
/// `f0, f1, …` and objects `o0, o1, …`; sampling is retried until the
/// closure has at most `max_arrows` arrows (identities included).
pub fn random_category<R: Rng + ?Sized>(
    rng: &mut R,
    max_objects: usize,
    max_arrows: usize,
) -> FiniteCategory {
    loop {
        if let Some(c) = try_random_category(rng, max_objects, max_arrows) {
            return c;
        }
    }
}

type Function = (usize, usize, Vec<u8>);

fn try_random_category<R: Rng + ?Sized>(
    rng: &mut R,
    max_objects: usize,
    max_arrows: usize,
) -> Option<FiniteCategory> {
    let k = rng.gen_range(1..=max_objects.max(1));
    let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
    let mut arrows: Vec<Function> = (0..k).map(|o| (o, o, (0..sizes[o] as u8).collect())).collect();
    let mut index: HashMap<Function, usize> =
        arrows.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let generators = rng.gen_range(1..=k + 2);
    for _ in 0..generators {
        let (s, t) = (rng.gen_range(0..k), rng.gen_range(0..k));
        let f: Function = (s, t, (0..sizes[s]).map(|_| rng.gen_range(0..sizes[t] as u8)).collect());
        if !index.contains_key(&f) {
            index.insert(f.clone(), arrows.len());
            arrows.push(f);
        }
    }
    let mut comps: Vec<(usize, usize, usize)> = Vec::new();
    let mut done = 0;
    // Close under composition; `done` counts arrows whose products with all
    // earlier arrows have been formed.
    while done < arrows.len() {
        let n = arrows.len();
        for i in 0..n {
            for j in 0..n {
                if i < done && j < done {
                    continue;
                }
                let (f, g) = (&arrows[i], &arrows[j]);
                if f.1 != g.0 {
                    continue;
                }
                let h: Function = (f.0, g.1, f.2.iter().map(|&x| g.2[x as usize]).collect());
                let hi = match index.get(&h) {
                    Some(&hi) => hi,
                    None => {
                        index.insert(h.clone(), arrows.len());
                        arrows.push(h);
                        arrows.len() - 1
                    }
                };
                comps.push((i, j, hi));
            }
        }
        if arrows.len() > max_arrows {
            return None;
        }
        done = n;
    }
    let name = |i: usize| {
        if i < k {
            format!("id:o{i}")
        } else {
            format!("f{}", i - k)
        }
    };
    let mut raw = RawCategory::new();
    for o in 0..k {
        raw.object(format!("o{o}"));
    }
    for (i, f) in arrows.iter().enumerate().skip(k) {
        raw.arrow(name(i), format!("o{}", f.0), format!("o{}", f.1));
    }
    for (i, j, h) in comps {
        raw.comp(name(i), name(j), name(h));
    }
    Some(raw.validate().expect("concrete categories are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn poset_counts() {
        let natural: Vec<usize> = (0..=5).map(|n| naturally_labeled_posets(n).len()).collect();
        assert_eq!(natural, vec![1, 1, 2, 7, 40, 357]);
        let labeled: Vec<usize> = (0..=4).map(|n| labeled_posets(n).len()).collect();
        assert_eq!(labeled, vec![1, 1, 3, 19, 219]);
        assert_eq!(posets_with_least_element(3).len(), 2);
    }

    #[test]
    fn complex_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| complexes_on(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 9, 114]);
    }

    #[test]
    fn random_categories_are_small_and_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let c = random_category(&mut rng, 6, 20);
            assert!(c.arrow_count() <= 20);
        }
    }
}
