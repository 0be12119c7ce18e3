//! Hall's theorem through Dilworth: a bipartite graph is read as a height-two
//! poset (left vertices below their neighbours). When Hall's condition holds
//! the right side is a maximum antichain, so a smallest chain cover has
//! `|right|` chains; made disjoint, its two-element chains are an L-perfect
//! matching. Set families reduce to graphs whose left vertices are the
//! members and whose right vertices are the ground elements.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::dilworth::{self, PreconditionCheck};
use crate::error::{label, Error, Result};
use crate::poset::{FinitePoset, Label};
use crate::Caps;

/// Two disjoint, non-empty vertex sets with edges from left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph<T: Ord> {
    left: BTreeSet<T>,
    right: BTreeSet<T>,
    edges: BTreeSet<(T, T)>,
}

impl<T: Label> BipartiteGraph<T> {
    pub fn new<L, R, E>(left: L, right: R, edges: E) -> Result<Self>
    where
        L: IntoIterator<Item = T>,
        R: IntoIterator<Item = T>,
        E: IntoIterator<Item = (T, T)>,
    {
        let left: BTreeSet<T> = left.into_iter().collect();
        let right: BTreeSet<T> = right.into_iter().collect();
        if left.is_empty() {
            return Err(Error::EmptySide("left"));
        }
        if right.is_empty() {
            return Err(Error::EmptySide("right"));
        }
        if let Some(shared) = left.intersection(&right).next() {
            return Err(Error::SidesOverlap(label(shared)));
        }
        let edges: BTreeSet<(T, T)> = edges.into_iter().collect();
        if let Some((u, v)) = edges
            .iter()
            .find(|(u, v)| !left.contains(u) || !right.contains(v))
        {
            return Err(Error::BadEdge(label(u), label(v)));
        }
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn left(&self) -> &BTreeSet<T> {
        &self.left
    }

    pub fn right(&self) -> &BTreeSet<T> {
        &self.right
    }

    pub fn edges(&self) -> &BTreeSet<(T, T)> {
        &self.edges
    }

    pub fn has_edge(&self, u: &T, v: &T) -> bool {
        self.edges.contains(&(u.clone(), v.clone()))
    }

    fn neighbors_of<'g>(&'g self, u: &'g T) -> impl Iterator<Item = &'g T> + 'g {
        self.edges
            .iter()
            .filter(move |(a, _)| a == u)
            .map(|(_, b)| b)
    }
}

/// `N(S)`: right vertices adjacent to some vertex of `s`.
pub fn neighborhood<T: Label>(g: &BipartiteGraph<T>, s: &BTreeSet<T>) -> Result<BTreeSet<T>> {
    if let Some(x) = s.iter().find(|x| !g.left.contains(x)) {
        return Err(Error::NotASubsetOfLeft(label(x)));
    }
    Ok(s.iter().flat_map(|u| g.neighbors_of(u)).cloned().collect())
}

/// A left vertex set with fewer neighbours than members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallViolation<T: Ord> {
    pub set: BTreeSet<T>,
    pub deficiency: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallCondition<T: Ord> {
    Satisfied,
    Violated(HallViolation<T>),
}

/// Checks `|N(S)| ≥ |S|` for every `S ⊆ left`, smallest sets first and
/// lexicographically within a size, so the reported violation is canonical.
pub fn hall_condition<T: Label>(g: &BipartiteGraph<T>, caps: &Caps) -> Result<HallCondition<T>> {
    Caps::check(g.left.len(), caps.subset, "subset")?;
    for k in 1..=g.left.len() {
        for s in g.left.iter().cloned().combinations(k) {
            let s: BTreeSet<T> = s.into_iter().collect();
            let n = neighborhood(g, &s)?.len();
            if n < k {
                return Ok(HallCondition::Violated(HallViolation {
                    set: s,
                    deficiency: k - n,
                }));
            }
        }
    }
    Ok(HallCondition::Satisfied)
}

/// Carrier `left ∪ right`, order the reflexive closure of the edges.
pub fn graph_to_poset<T: Label>(g: &BipartiteGraph<T>) -> FinitePoset<T> {
    FinitePoset::build(
        g.left.iter().chain(g.right.iter()).cloned(),
        g.edges.iter().cloned(),
    )
    .expect("edges between disjoint sides are already transitive and antisymmetric")
}

/// Edges `(left, right)` with no shared endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching<T: Ord> {
    pub pairs: BTreeSet<(T, T)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingOutcome<T: Ord> {
    Matched {
        matching: Matching<T>,
        check: PreconditionCheck,
    },
    Violated(HallViolation<T>),
}

/// An L-perfect matching read off a disjoint minimum chain cover of the
/// graph's poset, or the canonical Hall violation.
pub fn find_l_perfect_matching<T: Label>(
    g: &BipartiteGraph<T>,
    caps: &Caps,
) -> Result<MatchingOutcome<T>> {
    if let HallCondition::Violated(v) = hall_condition(g, caps)? {
        return Ok(MatchingOutcome::Violated(v));
    }
    let p = graph_to_poset(g);
    let cert = dilworth::perles_chain_cover(&p, caps)?;
    assert_eq!(
        cert.cover.len(),
        g.right.len(),
        "under Hall's condition the right side is a maximum antichain"
    );
    let disjoint = dilworth::disjointify_cover(&p, &cert.cover, caps)?;
    let pairs = disjoint
        .cover
        .chains
        .iter()
        .filter(|c| c.len() == 2)
        .map(|c| {
            let (a, b) = c.iter().cloned().collect_tuple().expect("two elements");
            if g.left.contains(&a) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let matching = Matching { pairs };
    assert!(verify_matching(g, &matching, true));
    Ok(MatchingOutcome::Matched {
        matching,
        check: disjoint.check,
    })
}

/// Pairs are edges, endpoints are not shared, and (optionally) every left
/// vertex is matched.
pub fn verify_matching<T: Label>(
    g: &BipartiteGraph<T>,
    m: &Matching<T>,
    require_l_perfect: bool,
) -> bool {
    let mut lefts = BTreeSet::new();
    let mut rights = BTreeSet::new();
    for (u, v) in &m.pairs {
        if !g.has_edge(u, v) || !lefts.insert(u) || !rights.insert(v) {
            return false;
        }
    }
    !require_l_perfect || lefts.len() == g.left.len()
}

/// Named finite sets. Members may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SetFamily<N: Ord, E: Ord> {
    pub members: BTreeMap<N, BTreeSet<E>>,
}

impl<N: Label, E: Label> SetFamily<N, E> {
    pub fn new<I, S>(members: I) -> Self
    where
        I: IntoIterator<Item = (N, S)>,
        S: IntoIterator<Item = E>,
    {
        SetFamily {
            members: members
                .into_iter()
                .map(|(n, s)| (n, s.into_iter().collect()))
                .collect(),
        }
    }

    pub fn union(&self) -> BTreeSet<E> {
        self.members.values().flatten().cloned().collect()
    }
}

/// Vertex namespace for the family graph: member names on the left, ground
/// elements on the right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyVertex<N, E> {
    Member(N),
    Item(E),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SdrAssignment<N: Ord, E> {
    pub choice: BTreeMap<N, E>,
}

/// A subfamily whose union is smaller than its number of members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdrViolation<N: Ord> {
    pub subfamily: BTreeSet<N>,
    pub union_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SdrOutcome<N: Ord, E> {
    Assigned(SdrAssignment<N, E>),
    Violated(SdrViolation<N>),
}

pub fn family_graph<N: Label, E: Label>(
    f: &SetFamily<N, E>,
) -> Result<BipartiteGraph<FamilyVertex<N, E>>> {
    BipartiteGraph::new(
        f.members.keys().cloned().map(FamilyVertex::Member),
        f.union().into_iter().map(FamilyVertex::Item),
        f.members.iter().flat_map(|(n, s)| {
            s.iter().map(move |e| {
                (
                    FamilyVertex::Member(n.clone()),
                    FamilyVertex::Item(e.clone()),
                )
            })
        }),
    )
}

/// A system of distinct representatives via the family graph's L-perfect
/// matching, or the smallest subfamily with too small a union.
pub fn find_sdr<N: Label, E: Label>(f: &SetFamily<N, E>, caps: &Caps) -> Result<SdrOutcome<N, E>> {
    if f.members.is_empty() {
        return Ok(SdrOutcome::Assigned(SdrAssignment {
            choice: BTreeMap::new(),
        }));
    }
    if f.union().is_empty() {
        // no right side to build a graph on; every member is empty
        let first = f.members.keys().next().expect("non-empty family").clone();
        return Ok(SdrOutcome::Violated(SdrViolation {
            subfamily: [first].into_iter().collect(),
            union_size: 0,
        }));
    }
    let g = family_graph(f)?;
    match find_l_perfect_matching(&g, caps)? {
        MatchingOutcome::Matched { matching, .. } => {
            let choice = matching
                .pairs
                .into_iter()
                .map(|pair| match pair {
                    (FamilyVertex::Member(n), FamilyVertex::Item(e)) => (n, e),
                    _ => unreachable!("family edges run member to item"),
                })
                .collect();
            Ok(SdrOutcome::Assigned(SdrAssignment { choice }))
        }
        MatchingOutcome::Violated(v) => {
            let subfamily: BTreeSet<N> = v
                .set
                .into_iter()
                .map(|x| match x {
                    FamilyVertex::Member(n) => n,
                    FamilyVertex::Item(_) => unreachable!("violations are left-side sets"),
                })
                .collect();
            let union_size = union_of(f, &subfamily).len();
            Ok(SdrOutcome::Violated(SdrViolation {
                subfamily,
                union_size,
            }))
        }
    }
}

pub fn union_of<N: Label, E: Label>(f: &SetFamily<N, E>, names: &BTreeSet<N>) -> BTreeSet<E> {
    names
        .iter()
        .filter_map(|n| f.members.get(n))
        .flatten()
        .cloned()
        .collect()
}

/// Every member gets exactly one representative from itself, all distinct.
pub fn verify_sdr<N: Label, E: Label>(f: &SetFamily<N, E>, a: &SdrAssignment<N, E>) -> bool {
    let keys_match = a.choice.keys().eq(f.members.keys());
    let members_ok = a
        .choice
        .iter()
        .all(|(n, e)| f.members.get(n).is_some_and(|s| s.contains(e)));
    let distinct = a.choice.values().collect::<BTreeSet<_>>().len() == a.choice.len();
    keys_match && members_ok && distinct
}
