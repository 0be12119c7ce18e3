//! Dilworth's theorem, constructively: Perles' recursion produces a chain
//! cover whose size equals the width.
//!
//! At each level a maximum antichain `A` is looked for that is neither the
//! set of minimal nor the set of maximal elements. If one exists, the poset
//! splits into the part above `A` and the part below `A`, both strictly
//! smaller; their covers are glued through the elements of `A`. Otherwise a
//! minimal element and a maximal element above it are removed as one chain
//! and the rest is covered with one chain fewer. Every recursive call is on a
//! strict subset of the carrier, which bounds the depth by the carrier size.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{self, SizedWitness};
use crate::poset::{canonical_sets, ChainCover, FinitePoset, Label};
use crate::Caps;

/// Width, a maximum antichain, and a chain cover of the same size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilworthCertificate<T: Ord> {
    pub width: usize,
    pub antichain_witness: BTreeSet<T>,
    pub cover: ChainCover<T>,
    pub trace: PerlesTrace,
}

/// Which branches the recursion took.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PerlesTrace {
    /// Splits through a non-extremal maximum antichain.
    pub splits: usize,
    /// Removals of a minimal/maximal two-element (or one-element) chain.
    pub removals: usize,
    /// Deepest recursion level reached; the top call is level 1.
    pub max_depth: usize,
}

/// Size of a largest antichain, with the oracle's witness.
pub fn width<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<SizedWitness<T>> {
    oracle::max_antichain(p, caps)
}

pub fn perles_chain_cover<T: Label>(
    p: &FinitePoset<T>,
    caps: &Caps,
) -> Result<DilworthCertificate<T>> {
    let top = width(p, caps)?;
    let mut trace = PerlesTrace::default();
    let mut chains = perles(p, caps, 1, &mut trace)?;
    canonical_sets(&mut chains);
    Ok(DilworthCertificate {
        width: top.size,
        antichain_witness: top.witness,
        cover: ChainCover::new(chains),
        trace,
    })
}

fn perles<T: Label>(
    p: &FinitePoset<T>,
    caps: &Caps,
    depth: usize,
    trace: &mut PerlesTrace,
) -> Result<Vec<BTreeSet<T>>> {
    trace.max_depth = trace.max_depth.max(depth);
    let m = width(p, caps)?.size;
    let minimal = p.minimal_elements();
    let maximal = p.maximal_elements();
    let inner = oracle::find_antichain_of_size(p, m, caps, |a| *a != minimal && *a != maximal)?;

    let chains = match inner {
        Some(a) => {
            trace.splits += 1;
            split_through(p, &a, caps, depth, trace)?
        }
        None => {
            trace.removals += 1;
            let x = minimal
                .first()
                .expect("minimal elements are non-empty")
                .clone();
            let y = p.maximal_above(&x)?;
            let removed: BTreeSet<T> = [x, y].into_iter().collect();
            let rest: BTreeSet<T> = p.carrier().difference(&removed).cloned().collect();
            let mut chains = if rest.is_empty() {
                Vec::new()
            } else {
                perles(&p.restrict(&rest)?, caps, depth + 1, trace)?
            };
            chains.push(removed);
            chains
        }
    };
    assert_eq!(chains.len(), m, "Perles cover size must equal the width");
    Ok(chains)
}

/// Case of a maximum antichain `a` that is neither extremal set.
fn split_through<T: Label>(
    p: &FinitePoset<T>,
    a: &BTreeSet<T>,
    caps: &Caps,
    depth: usize,
    trace: &mut PerlesTrace,
) -> Result<Vec<BTreeSet<T>>> {
    let carrier = p.carrier();
    let above: BTreeSet<T> = carrier
        .iter()
        .filter(|x| a.iter().any(|y| p.le(y, x)))
        .cloned()
        .collect();
    let below: BTreeSet<T> = carrier
        .iter()
        .filter(|x| a.iter().any(|y| p.le(x, y)))
        .cloned()
        .collect();
    assert!(
        above.union(&below).eq(carrier.iter()),
        "every element is above or below a maximum antichain"
    );
    assert!(a.is_subset(&above) && a.is_subset(&below));
    assert!(above.len() < carrier.len() && below.len() < carrier.len());

    let upper = perles(&p.restrict(&above)?, caps, depth + 1, trace)?;
    let lower = perles(&p.restrict(&below)?, caps, depth + 1, trace)?;

    Ok(a.iter()
        .map(|pivot| {
            let up = chain_through(&upper, a, pivot);
            let down = chain_through(&lower, a, pivot);
            up.union(down).cloned().collect()
        })
        .collect())
}

/// The unique chain of `cover` containing `pivot`; it meets `a` only there.
fn chain_through<'c, T: Label>(
    cover: &'c [BTreeSet<T>],
    a: &BTreeSet<T>,
    pivot: &T,
) -> &'c BTreeSet<T> {
    let mut hits = cover.iter().filter(|c| c.contains(pivot));
    let chain = hits.next().expect("cover reaches every antichain element");
    assert!(hits.next().is_none(), "antichain element in two chains");
    assert_eq!(
        chain.intersection(a).count(),
        1,
        "chain meets antichain twice"
    );
    chain
}

/// Whether the smallest-cover precondition of [`disjointify_cover`] was
/// checked against the oracle or taken on trust (carrier above the cover cap).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PreconditionCheck {
    Checked,
    Trusted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointCover<T: Ord> {
    pub cover: ChainCover<T>,
    pub check: PreconditionCheck,
}

/// Turns a smallest chain cover into a pairwise-disjoint one of the same size.
///
/// Chains are processed in canonical order and each element stays in the
/// first chain that holds it. A chain emptied by this means the input was not
/// a smallest cover, so that is reported even when the precondition was not
/// checked up front.
pub fn disjointify_cover<T: Label>(
    p: &FinitePoset<T>,
    cv: &ChainCover<T>,
    caps: &Caps,
) -> Result<DisjointCover<T>> {
    if !p.verify_chain_cover(cv) {
        return Err(Error::InvalidCover);
    }
    let check = if p.len() <= caps.cover {
        let minimum = oracle::min_chain_cover(p, caps)?.len();
        if cv.len() > minimum {
            return Err(Error::NotASmallestCover {
                given: cv.len(),
                minimum,
            });
        }
        PreconditionCheck::Checked
    } else {
        PreconditionCheck::Trusted
    };

    let sorted = cv.clone().canonical();
    let mut taken = BTreeSet::new();
    let mut out = Vec::with_capacity(sorted.len());
    for chain in &sorted.chains {
        let fresh: BTreeSet<T> = chain.difference(&taken).cloned().collect();
        taken.extend(fresh.iter().cloned());
        out.push(fresh);
    }
    if out.iter().any(|c| c.is_empty()) {
        return Err(Error::NotASmallestCover {
            given: cv.len(),
            minimum: out.iter().filter(|c| !c.is_empty()).count(),
        });
    }
    canonical_sets(&mut out);
    Ok(DisjointCover {
        cover: ChainCover::new(out),
        check,
    })
}

/// The two sides of Dilworth's equality, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilworthReport {
    pub width: usize,
    pub cover_size: usize,
    pub equal: bool,
}

pub fn check_dilworth<T: Label>(p: &FinitePoset<T>, caps: &Caps) -> Result<DilworthReport> {
    let width = width(p, caps)?.size;
    let cert = perles_chain_cover(p, caps)?;
    let cover_size = if p.verify_chain_cover(&cert.cover) {
        cert.cover.len()
    } else {
        usize::MAX
    };
    Ok(DilworthReport {
        width,
        cover_size,
        equal: width == cover_size,
    })
}
