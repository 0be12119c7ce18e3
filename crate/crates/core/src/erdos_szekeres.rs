//! Monotone subsequences via Dilworth.
//!
//! A sequence of distinct integers becomes a poset in which `x ≤ y` when `x`
//! comes no later than `y` and is no larger. Chains are then the increasing
//! subsequences and antichains the decreasing ones, so a poset on `r·s + 1`
//! elements with width at most `s` has a Perles cover of at most `s` chains,
//! one of which must hold `r + 1` elements.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::dilworth;
use crate::error::{Error, Result};
use crate::poset::{FinitePoset, Label};
use crate::Caps;

/// A non-empty sequence of pairwise distinct integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntSeq {
    values: Vec<i64>,
    position: HashMap<i64, usize>,
}

impl IntSeq {
    pub fn from_list(xs: Vec<i64>) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut position = HashMap::with_capacity(xs.len());
        for (i, &x) in xs.iter().enumerate() {
            if position.insert(x, i).is_some() {
                return Err(Error::DuplicateValue(x));
            }
        }
        Ok(IntSeq {
            values: xs,
            position,
        })
    }

    /// Values in positional order.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value_set(&self) -> BTreeSet<i64> {
        self.values.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn position(&self, x: i64) -> Option<usize> {
        self.position.get(&x).copied()
    }

    /// Strict positional order: `x` occurs before `y`.
    pub fn precedes(&self, x: i64, y: i64) -> bool {
        matches!((self.position(x), self.position(y)), (Some(i), Some(j)) if i < j)
    }

    /// All pairs `(x, y)` with `x` before `y`.
    pub fn precedence_pairs(&self) -> Vec<(i64, i64)> {
        let v = &self.values;
        (0..v.len())
            .flat_map(|i| ((i + 1)..v.len()).map(move |j| (v[i], v[j])))
            .collect()
    }

    pub fn is_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] > w[1])
    }
}

impl TryFrom<Vec<i64>> for IntSeq {
    type Error = Error;

    fn try_from(xs: Vec<i64>) -> Result<Self> {
        IntSeq::from_list(xs)
    }
}

impl From<IntSeq> for Vec<i64> {
    fn from(s: IntSeq) -> Self {
        s.values
    }
}

pub fn seq_from_list(xs: Vec<i64>) -> Result<IntSeq> {
    IntSeq::from_list(xs)
}

/// `x ≤ y` iff `x` is not after `y` and not larger than `y`.
pub fn seq_to_poset(s: &IntSeq) -> FinitePoset<i64> {
    let edges = s.precedence_pairs().into_iter().filter(|(x, y)| x < y);
    FinitePoset::build(s.values.iter().copied(), edges)
        .expect("intersection of two total orders is a partial order")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EsWitness<T: Ord> {
    Chain(BTreeSet<T>),
    Antichain(BTreeSet<T>),
}

/// A chain of at least `r + 1` or an antichain of at least `s + 1` elements
/// in a poset of exactly `r·s + 1` elements.
pub fn pre_es<T: Label>(
    p: &FinitePoset<T>,
    r: usize,
    s: usize,
    caps: &Caps,
) -> Result<EsWitness<T>> {
    let expected = r * s + 1;
    if p.len() != expected {
        return Err(Error::WrongCardinality {
            expected,
            found: p.len(),
        });
    }
    let width = dilworth::width(p, caps)?;
    if width.size > s {
        return Ok(EsWitness::Antichain(width.witness));
    }
    // at most s chains over r·s + 1 elements
    let cert = dilworth::perles_chain_cover(p, caps)?;
    let chain = cert
        .cover
        .chains
        .into_iter()
        .find(|c| c.len() > r)
        .expect("pigeonhole: some chain has more than r elements");
    Ok(EsWitness::Chain(chain))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Monotone {
    Increasing,
    Decreasing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubseqWitness {
    pub kind: Monotone,
    pub subsequence: IntSeq,
}

/// An increasing subsequence of length `m + 1` or a decreasing one of
/// length `n + 1`, from a sequence of exactly `m·n + 1` values.
///
/// Longer witnesses are cut to the advertised length, keeping the earliest
/// positions.
pub fn es_subsequence(s: &IntSeq, m: usize, n: usize, caps: &Caps) -> Result<SubseqWitness> {
    let p = seq_to_poset(s);
    let (kind, set, keep) = match pre_es(&p, m, n, caps)? {
        EsWitness::Chain(c) => (Monotone::Increasing, c, m + 1),
        EsWitness::Antichain(a) => (Monotone::Decreasing, a, n + 1),
    };
    let mut picked: Vec<i64> = set.into_iter().collect();
    picked.sort_by_key(|&x| s.position(x));
    picked.truncate(keep);
    Ok(SubseqWitness {
        kind,
        subsequence: IntSeq::from_list(picked)?,
    })
}

/// Values drawn from `parent`, in the parent's order, and monotone per kind.
pub fn verify_subseq(parent: &IntSeq, w: &SubseqWitness) -> bool {
    let sub = &w.subsequence;
    let included = sub.values.iter().all(|&x| parent.position(x).is_some());
    let ordered = sub
        .precedence_pairs()
        .into_iter()
        .all(|(x, y)| parent.precedes(x, y));
    let monotone = match w.kind {
        Monotone::Increasing => sub.is_increasing(),
        Monotone::Decreasing => sub.is_decreasing(),
    };
    included && ordered && monotone
}
