//! Mirsky's theorem: peeling off maximal elements layer by layer gives an
//! antichain cover whose size equals the height.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{self, SizedWitness};
use crate::poset::{AntichainCover, FinitePoset, Label};
use crate::Caps;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirskyCertificate<T: Ord> {
    pub height: usize,
    pub chain_witness: BTreeSet<T>,
    /// Layer `k` holds the maximal elements left after removing layers `0..k`.
    pub layers: AntichainCover<T>,
}

/// Size of a largest chain, with the oracle's witness.
pub fn height<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<SizedWitness<T>> {
    oracle::max_chain(p, caps)
}

/// Maximal-element layers, top first.
pub fn peel_layers<T: Label>(p: &FinitePoset<T>) -> Vec<BTreeSet<T>> {
    let mut remaining: Vec<usize> = (0..p.len()).collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let (top, rest): (Vec<usize>, Vec<usize>) = remaining
            .iter()
            .partition(|&&i| remaining.iter().all(|&j| j == i || !p.le_idx(i, j)));
        layers.push(p.set_of(top));
        remaining = rest;
    }
    layers
}

/// A chain with one element per layer: start from the smallest id of the last
/// layer and climb, each time taking the smallest-id element of the next
/// layer up that lies above the previous pick.
pub fn chain_through_layers<T: Label>(p: &FinitePoset<T>, layers: &[BTreeSet<T>]) -> BTreeSet<T> {
    let mut chain = BTreeSet::new();
    let mut prev: Option<&T> = None;
    for layer in layers.iter().rev() {
        let pick = layer
            .iter()
            .find(|x| prev.is_none_or(|below| p.le(below, x)))
            .expect("each layer has an element above the pick from the layer below");
        chain.insert(pick.clone());
        prev = Some(pick);
    }
    chain
}

/// Antichain cover by layer peeling, with a chain of the same length.
///
/// Within the oracle cap the chain witness is the oracle's largest chain;
/// above it the chain is rebuilt from the layers.
pub fn mirsky_antichain_cover<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> MirskyCertificate<T> {
    let layers = peel_layers(p);
    let chain_witness = if p.len() <= caps.oracle {
        oracle::max_chain(p, caps)
            .expect("within the oracle cap")
            .witness
    } else {
        chain_through_layers(p, &layers)
    };
    MirskyCertificate {
        height: layers.len(),
        chain_witness,
        layers: AntichainCover::new(layers),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirskyReport {
    pub height: usize,
    pub cover_size: usize,
    pub equal: bool,
}

pub fn check_mirsky<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<MirskyReport> {
    let height = height(p, caps)?.size;
    let cert = mirsky_antichain_cover(p, caps);
    let cover_size = if p.verify_antichain_cover(&cert.layers) {
        cert.layers.len()
    } else {
        usize::MAX
    };
    Ok(MirskyReport {
        height,
        cover_size,
        equal: height == cover_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<T: Ord + Clone>(xs: &[T]) -> BTreeSet<T> {
        xs.iter().cloned().collect()
    }

    fn p3() -> FinitePoset<&'static str> {
        FinitePoset::build(["a", "b", "c"], [("a", "b")]).unwrap()
    }

    #[test]
    fn height_examples() {
        let caps = Caps::default();
        assert_eq!(height(&p3(), &caps).unwrap().witness, set(&["a", "b"]));
        let chain = FinitePoset::build(1..=4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(height(&chain, &caps).unwrap().witness, set(&[1, 2, 3, 4]));
        let anti = FinitePoset::build(1..=4, []).unwrap();
        assert_eq!(height(&anti, &caps).unwrap().size, 1);
    }

    #[test]
    fn peel_examples() {
        let caps = Caps::default();
        let cert = mirsky_antichain_cover(&p3(), &caps);
        assert_eq!(cert.layers.antichains, vec![set(&["b", "c"]), set(&["a"])]);
        assert_eq!(cert.height, 2);

        let chain = FinitePoset::build(1..=3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(
            mirsky_antichain_cover(&chain, &caps).layers.antichains,
            vec![set(&[3]), set(&[2]), set(&[1])]
        );
        let anti = FinitePoset::build(1..=3, []).unwrap();
        assert_eq!(
            mirsky_antichain_cover(&anti, &caps).layers.antichains,
            vec![set(&[1, 2, 3])]
        );
    }

    #[test]
    fn reconstructed_chain_above_cap() {
        let caps = Caps {
            oracle: 2,
            ..Caps::default()
        };
        let cert = mirsky_antichain_cover(&p3(), &caps);
        assert_eq!(cert.chain_witness, set(&["a", "b"]));
        assert!(p3().is_chain(&cert.chain_witness));
    }

    #[test]
    fn check_mirsky_examples() {
        let caps = Caps::default();
        let r = check_mirsky(&p3(), &caps).unwrap();
        assert_eq!((r.height, r.cover_size, r.equal), (2, 2, true));
        let single = FinitePoset::build(["a"], []).unwrap();
        let r = check_mirsky(&single, &caps).unwrap();
        assert_eq!((r.height, r.cover_size, r.equal), (1, 1, true));
    }
}
