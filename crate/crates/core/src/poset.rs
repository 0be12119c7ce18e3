//! Finite partial orders and the chain/antichain predicates.

use std::collections::BTreeSet;
use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::error::{label, Error, Result};

/// Element labels: anything totally ordered, so every iteration order is
/// sorted by id.
pub trait Label: Ord + Clone + Debug {}

impl<T: Ord + Clone + Debug> Label for T {}

/// An immutable, validated finite partial order.
///
/// The carrier is kept sorted and the order relation is stored fully
/// materialized (reflexive and transitive) as a row-major boolean matrix
/// over carrier indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset<T> {
    elems: Vec<T>,
    le: Vec<bool>,
}

impl<T: Label> FinitePoset<T> {
    /// Builds the poset whose order is the reflexive-transitive closure of
    /// `strict_edges` over `elements`.
    pub fn build<E, R>(elements: E, strict_edges: R) -> Result<Self>
    where
        E: IntoIterator<Item = T>,
        R: IntoIterator<Item = (T, T)>,
    {
        let mut elems: Vec<T> = elements.into_iter().collect();
        if elems.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        elems.sort();
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(label(&w[0])));
        }
        let n = elems.len();
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (x, y) in strict_edges {
            let i = elems
                .binary_search(&x)
                .map_err(|_| Error::UnknownElement(label(&x)))?;
            let j = elems
                .binary_search(&y)
                .map_err(|_| Error::UnknownElement(label(&y)))?;
            le[i * n + j] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if le[i * n + j] && le[j * n + i] {
                    return Err(Error::CycleDetected(label(&elems[i]), label(&elems[j])));
                }
            }
        }
        Ok(FinitePoset { elems, le })
    }

    /// Wraps an already reflexive, transitive, antisymmetric matrix.
    pub(crate) fn from_closed(elems: Vec<T>, le: Vec<bool>) -> Self {
        debug_assert_eq!(le.len(), elems.len() * elems.len());
        FinitePoset { elems, le }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Always false: carriers are inhabited.
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The carrier in ascending id order.
    pub fn elements(&self) -> &[T] {
        &self.elems
    }

    pub fn carrier(&self) -> BTreeSet<T> {
        self.elems.iter().cloned().collect()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index_of(x).is_some()
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elems.binary_search(x).ok()
    }

    /// `x ≤ y`; false when either is outside the carrier.
    pub fn le(&self, x: &T, y: &T) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.le_idx(i, j),
            _ => false,
        }
    }

    pub fn lt(&self, x: &T, y: &T) -> bool {
        x != y && self.le(x, y)
    }

    pub fn comparable(&self, x: &T, y: &T) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    #[inline]
    pub(crate) fn le_idx(&self, i: usize, j: usize) -> bool {
        self.le[i * self.elems.len() + j]
    }

    #[inline]
    pub(crate) fn comparable_idx(&self, i: usize, j: usize) -> bool {
        self.le_idx(i, j) || self.le_idx(j, i)
    }

    pub(crate) fn set_of<I: IntoIterator<Item = usize>>(&self, idx: I) -> BTreeSet<T> {
        idx.into_iter().map(|i| self.elems[i].clone()).collect()
    }

    /// Sorted carrier indices of `s`, or `None` if `s` leaves the carrier.
    pub(crate) fn indices_of(&self, s: &BTreeSet<T>) -> Option<Vec<usize>> {
        s.iter().map(|x| self.index_of(x)).collect()
    }

    /// Every pair `(x, y)` with `x ≤ y`, including the diagonal.
    pub fn relation(&self) -> Vec<(T, T)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.le_idx(i, j) {
                    out.push((self.elems[i].clone(), self.elems[j].clone()));
                }
            }
        }
        out
    }

    /// Every pair `(x, y)` with `x < y`.
    pub fn strict_pairs(&self) -> Vec<(T, T)> {
        self.relation()
            .into_iter()
            .filter(|(x, y)| x != y)
            .collect()
    }

    /// Non-empty, inside the carrier, and pairwise comparable.
    pub fn is_chain(&self, s: &BTreeSet<T>) -> bool {
        match self.indices_of(s) {
            Some(idx) if !idx.is_empty() => self.is_chain_idx(&idx),
            _ => false,
        }
    }

    /// Non-empty, inside the carrier, and no two distinct members comparable.
    pub fn is_antichain(&self, s: &BTreeSet<T>) -> bool {
        match self.indices_of(s) {
            Some(idx) if !idx.is_empty() => self.is_antichain_idx(&idx),
            _ => false,
        }
    }

    pub(crate) fn is_chain_idx(&self, idx: &[usize]) -> bool {
        idx.iter()
            .enumerate()
            .all(|(k, &i)| idx[k + 1..].iter().all(|&j| self.comparable_idx(i, j)))
    }

    pub(crate) fn is_antichain_idx(&self, idx: &[usize]) -> bool {
        idx.iter()
            .enumerate()
            .all(|(k, &i)| idx[k + 1..].iter().all(|&j| !self.comparable_idx(i, j)))
    }

    pub(crate) fn minimal_idx(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&a| (0..n).all(|b| b == a || !self.le_idx(b, a)))
            .collect()
    }

    pub(crate) fn maximal_idx(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&a| (0..n).all(|b| b == a || !self.le_idx(a, b)))
            .collect()
    }

    /// Elements with nothing strictly below them.
    pub fn minimal_elements(&self) -> BTreeSet<T> {
        self.set_of(self.minimal_idx())
    }

    /// Elements with nothing strictly above them.
    pub fn maximal_elements(&self) -> BTreeSet<T> {
        self.set_of(self.maximal_idx())
    }

    /// The smallest-id minimal element below `y`.
    pub fn minimal_below(&self, y: &T) -> Result<T> {
        let j = self
            .index_of(y)
            .ok_or_else(|| Error::ElementNotInCarrier(label(y)))?;
        Ok(self.elems[self.minimal_below_idx(j)].clone())
    }

    /// The smallest-id maximal element above `x`.
    pub fn maximal_above(&self, x: &T) -> Result<T> {
        let i = self
            .index_of(x)
            .ok_or_else(|| Error::ElementNotInCarrier(label(x)))?;
        Ok(self.elems[self.maximal_above_idx(i)].clone())
    }

    pub(crate) fn minimal_below_idx(&self, j: usize) -> usize {
        self.minimal_idx()
            .into_iter()
            .find(|&m| self.le_idx(m, j))
            .expect("every element of a finite poset lies above a minimal element")
    }

    pub(crate) fn maximal_above_idx(&self, i: usize) -> usize {
        self.maximal_idx()
            .into_iter()
            .find(|&m| self.le_idx(i, m))
            .expect("every element of a finite poset lies below a maximal element")
    }

    /// The sub-poset on `s` with the inherited order.
    pub fn restrict(&self, s: &BTreeSet<T>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut idx = Vec::with_capacity(s.len());
        for x in s {
            idx.push(
                self.index_of(x)
                    .ok_or_else(|| Error::NotASubset(label(x)))?,
            );
        }
        Ok(self.restrict_idx(&idx))
    }

    /// `idx` must be sorted and non-empty.
    pub(crate) fn restrict_idx(&self, idx: &[usize]) -> Self {
        let m = idx.len();
        let mut le = vec![false; m * m];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                le[a * m + b] = self.le_idx(i, j);
            }
        }
        FinitePoset {
            elems: idx.iter().map(|&i| self.elems[i].clone()).collect(),
            le,
        }
    }

    pub fn verify_chain_cover(&self, cv: &ChainCover<T>) -> bool {
        cv.chains.iter().all(|c| self.is_chain(c)) && self.covers(&cv.chains)
    }

    pub fn verify_antichain_cover(&self, cv: &AntichainCover<T>) -> bool {
        cv.antichains.iter().all(|a| self.is_antichain(a)) && self.covers(&cv.antichains)
    }

    fn covers(&self, sets: &[BTreeSet<T>]) -> bool {
        self.elems
            .iter()
            .all(|x| sets.iter().any(|s| s.contains(x)))
    }
}

/// A collection of chains whose union is the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChainCover<T: Ord> {
    pub chains: Vec<BTreeSet<T>>,
}

/// A collection of antichains whose union is the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AntichainCover<T: Ord> {
    pub antichains: Vec<BTreeSet<T>>,
}

/// Sorts members by their smallest element (then by the full sequence).
pub(crate) fn canonical_sets<T: Ord>(sets: &mut [BTreeSet<T>]) {
    sets.sort_by(|a, b| a.iter().cmp(b.iter()));
}

impl<T: Ord> ChainCover<T> {
    pub fn new(chains: Vec<BTreeSet<T>>) -> Self {
        ChainCover { chains }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn canonical(mut self) -> Self {
        canonical_sets(&mut self.chains);
        self
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        pairwise_disjoint(&self.chains)
    }
}

impl<T: Ord> AntichainCover<T> {
    pub fn new(antichains: Vec<BTreeSet<T>>) -> Self {
        AntichainCover { antichains }
    }

    pub fn len(&self) -> usize {
        self.antichains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.antichains.is_empty()
    }

    pub fn canonical(mut self) -> Self {
        canonical_sets(&mut self.antichains);
        self
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        pairwise_disjoint(&self.antichains)
    }
}

fn pairwise_disjoint<T: Ord>(sets: &[BTreeSet<T>]) -> bool {
    sets.iter()
        .enumerate()
        .all(|(k, a)| sets[k + 1..].iter().all(|b| a.is_disjoint(b)))
}
