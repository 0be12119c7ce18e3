//! Brute-force oracles shared by the integration suites. Nothing here calls
//! the solvers it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use poset_cert::hall::{BipartiteGraph, SetFamily};
use poset_cert::{FinitePoset, Label};
use rand::Rng;

pub fn set<T: Ord + Clone>(xs: &[T]) -> BTreeSet<T> {
    xs.iter().cloned().collect()
}

/// Every non-empty subset of the carrier.
pub fn subsets<T: Label>(p: &FinitePoset<T>) -> Vec<BTreeSet<T>> {
    let elems = p.elements();
    (1u32..(1 << elems.len()))
        .map(|mask| {
            elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Size of the largest antichain / chain by scanning all subsets.
pub fn scan_width<T: Label>(p: &FinitePoset<T>) -> usize {
    subsets(p)
        .into_iter()
        .filter(|s| p.is_antichain(s))
        .map(|s| s.len())
        .max()
        .unwrap()
}

pub fn scan_height<T: Label>(p: &FinitePoset<T>) -> usize {
    subsets(p)
        .into_iter()
        .filter(|s| p.is_chain(s))
        .map(|s| s.len())
        .max()
        .unwrap()
}

/// Whether some injective choice of right neighbours covers the left side.
pub fn brute_l_perfect_exists<T: Label>(g: &BipartiteGraph<T>) -> bool {
    fn go<T: Label>(g: &BipartiteGraph<T>, left: &[T], used: &mut BTreeSet<T>) -> bool {
        let Some((u, rest)) = left.split_first() else {
            return true;
        };
        for v in g.right() {
            if g.edges().contains(&(u.clone(), v.clone())) && !used.contains(v) {
                used.insert(v.clone());
                if go(g, rest, used) {
                    return true;
                }
                used.remove(v);
            }
        }
        false
    }
    let left: Vec<T> = g.left().iter().cloned().collect();
    go(g, &left, &mut BTreeSet::new())
}

/// Whether any choice function over the family picks pairwise distinct elements.
pub fn brute_sdr_exists<N: Ord + Clone, E: Ord + Clone>(f: &SetFamily<N, E>) -> bool {
    fn go<E: Ord + Clone>(sets: &[&BTreeSet<E>], used: &mut Vec<E>) -> bool {
        let Some((s, rest)) = sets.split_first() else {
            return true;
        };
        for e in s.iter() {
            if !used.contains(e) {
                used.push(e.clone());
                if go(rest, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    let sets: Vec<&BTreeSet<E>> = f.members.values().collect();
    go(&sets, &mut Vec::new())
}

/// Longest strictly increasing and strictly decreasing subsequence lengths,
/// by scanning all index subsets.
pub fn brute_monotone(xs: &[i64]) -> (usize, usize) {
    let n = xs.len();
    let mut inc = 0;
    let mut dec = 0;
    for mask in 1u32..(1 << n) {
        let sub: Vec<i64> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| xs[i])
            .collect();
        if sub.windows(2).all(|w| w[0] < w[1]) {
            inc = inc.max(sub.len());
        }
        if sub.windows(2).all(|w| w[0] > w[1]) {
            dec = dec.max(sub.len());
        }
    }
    (inc, dec)
}

pub fn permutations(n: i64) -> Vec<Vec<i64>> {
    use itertools::Itertools;
    (1..=n).permutations(n as usize).collect()
}

pub fn random_bigraph<R: Rng>(rng: &mut R, max_side: usize) -> BipartiteGraph<String> {
    let nl = rng.gen_range(1..=max_side);
    let nr = rng.gen_range(1..=max_side);
    let density = rng.gen_range(0.1..0.8);
    let left: Vec<String> = (1..=nl).map(|i| format!("l{i}")).collect();
    let right: Vec<String> = (1..=nr).map(|i| format!("r{i}")).collect();
    let mut edges = Vec::new();
    for u in &left {
        for v in &right {
            if rng.gen_bool(density) {
                edges.push((u.clone(), v.clone()));
            }
        }
    }
    BipartiteGraph::new(left, right, edges).unwrap()
}

pub fn random_family<R: Rng>(
    rng: &mut R,
    max_members: usize,
    max_size: usize,
    universe: usize,
) -> SetFamily<String, u32> {
    let k = rng.gen_range(1..=max_members);
    let members: BTreeMap<String, BTreeSet<u32>> = (1..=k)
        .map(|i| {
            let size = rng.gen_range(0..=max_size);
            let s = (0..size)
                .map(|_| rng.gen_range(1..=universe as u32))
                .collect();
            (format!("S{i}"), s)
        })
        .collect();
    SetFamily { members }
}
