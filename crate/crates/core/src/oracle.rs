//! Exhaustive ground truth for small posets.
//!
//! Everything here is exponential. The solvers in [`crate::dilworth`] and
//! [`crate::mirsky`] use the extremum searches as subroutines, and the test
//! suites use the cover searches to check those solvers; the cover searches
//! never call back into the solvers.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::poset::{AntichainCover, ChainCover, FinitePoset, Label};
use crate::Caps;

/// A witness set together with its cardinality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizedWitness<T: Ord> {
    pub witness: BTreeSet<T>,
    pub size: usize,
}

impl<T: Ord> SizedWitness<T> {
    pub fn new(witness: BTreeSet<T>) -> Self {
        SizedWitness {
            size: witness.len(),
            witness,
        }
    }
}

/// Largest antichain; among those, the lexicographically smallest id sequence.
pub fn max_antichain<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<SizedWitness<T>> {
    Caps::check(p.len(), caps.oracle, "oracle")?;
    let best = max_clique(p.len(), |i, j| !p.comparable_idx(i, j));
    Ok(SizedWitness::new(p.set_of(best)))
}

/// Largest chain, same tie-break as [`max_antichain`].
pub fn max_chain<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<SizedWitness<T>> {
    Caps::check(p.len(), caps.oracle, "oracle")?;
    let best = max_clique(p.len(), |i, j| p.comparable_idx(i, j));
    Ok(SizedWitness::new(p.set_of(best)))
}

/// Minimum chain cover by search over partitions of the carrier into chains.
pub fn min_chain_cover<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<ChainCover<T>> {
    Caps::check(p.len(), caps.cover, "cover")?;
    let lower = max_antichain(p, caps)?.size;
    let blocks = min_partition(p.len(), lower, |i, j| p.comparable_idx(i, j));
    Ok(ChainCover::new(
        blocks.into_iter().map(|b| p.set_of(b)).collect(),
    ))
}

/// Minimum antichain cover by search over partitions into antichains.
pub fn min_antichain_cover<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<AntichainCover<T>> {
    Caps::check(p.len(), caps.cover, "cover")?;
    let lower = max_chain(p, caps)?.size;
    let blocks = min_partition(p.len(), lower, |i, j| !p.comparable_idx(i, j));
    Ok(AntichainCover::new(
        blocks.into_iter().map(|b| p.set_of(b)).collect(),
    ))
}

/// Visits every antichain of exactly `size` elements in lexicographic order of
/// sorted ids until `visit` breaks; returns the set it broke on.
pub fn find_antichain_of_size<T, F>(
    p: &FinitePoset<T>,
    size: usize,
    caps: &Caps,
    mut visit: F,
) -> Result<Option<BTreeSet<T>>>
where
    T: Label,
    F: FnMut(&BTreeSet<T>) -> bool,
{
    Caps::check(p.len(), caps.oracle, "oracle")?;
    let mut found = None;
    cliques_of_size(p.len(), size, |i, j| !p.comparable_idx(i, j), &mut |idx| {
        let s = p.set_of(idx.iter().copied());
        if visit(&s) {
            found = Some(s);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// Every antichain of exactly `size` elements, in lexicographic order.
pub fn antichains_of_size<T: Label>(
    p: &FinitePoset<T>,
    size: usize,
    caps: &Caps,
) -> Result<Vec<BTreeSet<T>>> {
    let mut all = Vec::new();
    find_antichain_of_size(p, size, caps, |s| {
        all.push(s.clone());
        false
    })?;
    Ok(all)
}

/// Every chain of exactly `size` elements, in lexicographic order.
pub fn chains_of_size<T: Label>(
    p: &FinitePoset<T>,
    size: usize,
    caps: &Caps,
) -> Result<Vec<BTreeSet<T>>> {
    Caps::check(p.len(), caps.oracle, "oracle")?;
    let mut all = Vec::new();
    cliques_of_size(p.len(), size, |i, j| p.comparable_idx(i, j), &mut |idx| {
        all.push(p.set_of(idx.iter().copied()));
        ControlFlow::Continue(())
    });
    Ok(all)
}

/// Largest set of pairwise `compat` indices; include-first depth-first
/// search, so the first maximum found is the lexicographically smallest.
fn max_clique<F: Fn(usize, usize) -> bool>(n: usize, compat: F) -> Vec<usize> {
    fn go<F: Fn(usize, usize) -> bool>(
        compat: &F,
        cur: &mut Vec<usize>,
        cand: &[usize],
        best: &mut Vec<usize>,
    ) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        for (k, &v) in cand.iter().enumerate() {
            // the remaining candidates cannot beat the incumbent
            if cur.len() + (cand.len() - k) <= best.len() {
                return;
            }
            let next: Vec<usize> = cand[k + 1..]
                .iter()
                .copied()
                .filter(|&w| compat(v, w))
                .collect();
            cur.push(v);
            go(compat, cur, &next, best);
            cur.pop();
        }
    }
    let mut best = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    go(&compat, &mut Vec::new(), &all, &mut best);
    best
}

fn cliques_of_size<F, V>(n: usize, size: usize, compat: F, visit: &mut V)
where
    F: Fn(usize, usize) -> bool,
    V: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn go<F, V>(
        compat: &F,
        size: usize,
        cur: &mut Vec<usize>,
        cand: &[usize],
        visit: &mut V,
    ) -> ControlFlow<()>
    where
        F: Fn(usize, usize) -> bool,
        V: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if cur.len() == size {
            return visit(cur);
        }
        for (k, &v) in cand.iter().enumerate() {
            if cur.len() + (cand.len() - k) < size {
                break;
            }
            let next: Vec<usize> = cand[k + 1..]
                .iter()
                .copied()
                .filter(|&w| compat(v, w))
                .collect();
            cur.push(v);
            let flow = go(compat, size, cur, &next, visit);
            cur.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    if size == 0 || size > n {
        return;
    }
    let all: Vec<usize> = (0..n).collect();
    let _ = go(&compat, size, &mut Vec::new(), &all, visit);
}

/// Fewest blocks of pairwise `compat` indices partitioning `0..n`, trying
/// block counts upward from `lower`. Element `i` joins the first block that
/// accepts it before a new block is opened, so blocks come out ordered by
/// their smallest member.
fn min_partition<F: Fn(usize, usize) -> bool>(
    n: usize,
    lower: usize,
    compat: F,
) -> Vec<Vec<usize>> {
    fn go<F: Fn(usize, usize) -> bool>(
        compat: &F,
        i: usize,
        n: usize,
        limit: usize,
        blocks: &mut Vec<Vec<usize>>,
    ) -> bool {
        if i == n {
            return true;
        }
        for b in 0..blocks.len() {
            if blocks[b].iter().all(|&j| compat(i, j)) {
                blocks[b].push(i);
                if go(compat, i + 1, n, limit, blocks) {
                    return true;
                }
                blocks[b].pop();
            }
        }
        if blocks.len() < limit {
            blocks.push(vec![i]);
            if go(compat, i + 1, n, limit, blocks) {
                return true;
            }
            blocks.pop();
        }
        false
    }
    for limit in lower.max(1)..=n.max(1) {
        let mut blocks = Vec::new();
        if go(&compat, 0, n, limit, &mut blocks) {
            return blocks;
        }
    }
    unreachable!("singletons always partition the carrier")
}

/// Largest `n` accepted by [`enumerate_posets`].
pub const ENUMERATE_CAP: usize = 5;

/// Every labeled partial order on `{1..=n}`, each exactly once.
///
/// Each unordered pair is assigned one of incomparable / `i < j` / `j < i`
/// and only transitively closed assignments are kept.
pub fn enumerate_posets(n: usize) -> Result<PosetEnumerator> {
    Caps::check(n, ENUMERATE_CAP, "enumeration")?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    Ok(PosetEnumerator {
        n,
        total: 3u64.pow(pairs.len() as u32),
        pairs,
        next_code: 0,
    })
}

pub struct PosetEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_code: u64,
    total: u64,
}

impl Iterator for PosetEnumerator {
    type Item = FinitePoset<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.n;
        if n == 0 {
            return None;
        }
        while self.next_code < self.total {
            let mut code = self.next_code;
            self.next_code += 1;
            let mut le = vec![false; n * n];
            for i in 0..n {
                le[i * n + i] = true;
            }
            for &(i, j) in &self.pairs {
                match code % 3 {
                    1 => le[i * n + j] = true,
                    2 => le[j * n + i] = true,
                    _ => {}
                }
                code /= 3;
            }
            let transitive = (0..n).all(|i| {
                (0..n).all(|j| !le[i * n + j] || (0..n).all(|k| !le[j * n + k] || le[i * n + k]))
            });
            if transitive {
                return Some(FinitePoset::from_closed((1..=n).collect(), le));
            }
        }
        None
    }
}

/// A random poset on `{1..=n}`: a random linear extension, each forward pair
/// related with probability `density`, then closed transitively.
pub fn random_poset<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> FinitePoset<usize> {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(density) {
                edges.push((order[i], order[j]));
            }
        }
    }
    FinitePoset::build(1..=n, edges).expect("edges follow a linear order")
}
