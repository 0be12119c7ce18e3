mod common;

use std::collections::BTreeSet;

use common::*;
use poset_cert::dilworth;
use poset_cert::erdos_szekeres::{self, IntSeq, Monotone};
use poset_cert::hall::{self, HallCondition, SdrOutcome};
use poset_cert::mirsky;
use poset_cert::oracle::{self, enumerate_posets, random_poset};
use poset_cert::{Caps, Error, FinitePoset};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn edge_lists() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=8).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..12)))
}

/// Reachability by repeated relaxation, independent of the closure in `build`.
fn reaches(n: usize, edges: &[(usize, usize)], from: usize, to: usize) -> bool {
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in edges {
            if seen[a] && !seen[b] {
                seen[b] = true;
                changed = true;
            }
        }
    }
    seen[to]
}

proptest! {
    #[test]
    fn build_yields_order_axioms_or_a_real_cycle((n, edges) in edge_lists()) {
        let cyclic = (0..n).any(|a| (0..n).any(|b| a != b && reaches(n, &edges, a, b) && reaches(n, &edges, b, a)));
        match FinitePoset::build(0..n, edges.clone()) {
            Ok(p) => {
                prop_assert!(!cyclic);
                for x in 0..n {
                    prop_assert!(p.le(&x, &x));
                    for y in 0..n {
                        prop_assert_eq!(p.le(&x, &y), reaches(n, &edges, x, y));
                        if x != y {
                            prop_assert!(!(p.le(&x, &y) && p.le(&y, &x)));
                        }
                        for z in 0..n {
                            if p.le(&x, &y) && p.le(&y, &z) {
                                prop_assert!(p.le(&x, &z));
                            }
                        }
                    }
                }
            }
            Err(e) => {
                prop_assert!(matches!(e, Error::CycleDetected(..)));
                prop_assert!(cyclic);
            }
        }
    }

    #[test]
    fn restriction_is_monotone(seed in any::<u64>(), n in 2usize..=8, m1 in any::<u32>(), m2 in any::<u32>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(n, 0.4, &mut rng);
        let big: BTreeSet<usize> = (1..=n).filter(|i| (m1 | m2) >> i & 1 == 1).collect();
        let small: BTreeSet<usize> = big.iter().copied().filter(|i| m2 >> i & 1 == 1).collect();
        prop_assume!(!small.is_empty());
        let twice = p.restrict(&big).unwrap().restrict(&small).unwrap();
        prop_assert_eq!(twice, p.restrict(&small).unwrap());
    }

    #[test]
    fn sequence_chains_are_increasing_subsequences(xs in Just((1..=8i64).collect::<Vec<_>>()).prop_shuffle()) {
        let s = IntSeq::from_list(xs.clone()).unwrap();
        let p = erdos_szekeres::seq_to_poset(&s);
        for sub in subsets(&p) {
            let mut ordered: Vec<i64> = sub.iter().copied().collect();
            ordered.sort_by_key(|&x| s.position(x));
            let inc = ordered.windows(2).all(|w| w[0] < w[1]);
            let dec = ordered.windows(2).all(|w| w[0] > w[1]);
            prop_assert_eq!(p.is_chain(&sub), inc);
            prop_assert_eq!(p.is_antichain(&sub), dec);
        }
    }
}

fn random_instances(
    sizes: std::ops::RangeInclusive<usize>,
    per_size: usize,
    seed: u64,
) -> Vec<FinitePoset<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in sizes {
        for _ in 0..per_size {
            let density = rng.gen_range(0.05..0.7);
            out.push(random_poset(n, density, &mut rng));
        }
    }
    out
}

#[test]
fn perles_matches_oracles_on_all_five_element_posets() {
    let caps = Caps::default();
    for p in enumerate_posets(5).unwrap() {
        let cert = dilworth::perles_chain_cover(&p, &caps).unwrap();
        assert!(p.verify_chain_cover(&cert.cover));
        assert!(p.is_antichain(&cert.antichain_witness));
        assert_eq!(cert.antichain_witness.len(), cert.width);
        assert_eq!(cert.cover.len(), cert.width);
        assert_eq!(
            cert.width,
            oracle::min_chain_cover(&p, &caps).unwrap().len()
        );
        assert_eq!(cert.width, scan_width(&p));
        assert!(cert.trace.max_depth <= p.len());
    }
}

#[test]
fn perles_on_random_posets_up_to_nine() {
    let caps = Caps::default();
    for p in random_instances(6..=9, 200, 11) {
        let cert = dilworth::perles_chain_cover(&p, &caps).unwrap();
        assert!(p.verify_chain_cover(&cert.cover));
        assert_eq!(
            cert.cover.len(),
            oracle::max_antichain(&p, &caps).unwrap().size
        );
        assert_eq!(
            cert.cover.len(),
            oracle::min_chain_cover(&p, &caps).unwrap().len()
        );
        assert!(cert.trace.max_depth <= p.len());
        let report = dilworth::check_dilworth(&p, &caps).unwrap();
        assert!(report.equal);
    }
}

#[test]
fn both_recursion_branches_are_exercised() {
    let caps = Caps::default();
    let (mut splits, mut removals) = (0, 0);
    for p in enumerate_posets(5).unwrap() {
        let t = dilworth::perles_chain_cover(&p, &caps).unwrap().trace;
        splits += t.splits;
        removals += t.removals;
    }
    assert!(splits > 0 && removals > 0);
}

#[test]
fn largest_antichain_survives_restriction() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for p in random_instances(3..=8, 60, 13) {
        let a = oracle::max_antichain(&p, &caps).unwrap();
        let extra: BTreeSet<usize> = p
            .elements()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let s: BTreeSet<usize> = a.witness.union(&extra).copied().collect();
        let q = p.restrict(&s).unwrap();
        assert!(q.is_antichain(&a.witness));
        assert_eq!(oracle::max_antichain(&q, &caps).unwrap().size, a.size);
    }
}

#[test]
fn disjointify_on_overlapping_covers_from_oracle_chains() {
    // widen each chain of a minimum cover to a maximal chain through it,
    // producing overlapping smallest covers
    let caps = Caps::default();
    for p in random_instances(4..=8, 40, 14) {
        let base = oracle::min_chain_cover(&p, &caps).unwrap();
        let widened: Vec<BTreeSet<usize>> = base
            .chains
            .iter()
            .map(|c| {
                let mut c = c.clone();
                for x in p.elements() {
                    if c.iter().all(|y| p.comparable(x, y)) {
                        c.insert(*x);
                    }
                }
                c
            })
            .collect();
        let cv = poset_cert::ChainCover::new(widened);
        assert!(p.verify_chain_cover(&cv));
        let out = dilworth::disjointify_cover(&p, &cv, &caps).unwrap();
        assert!(out.cover.is_pairwise_disjoint());
        assert_eq!(out.cover.len(), cv.len());
        assert!(p.verify_chain_cover(&out.cover));
        assert!(out
            .cover
            .chains
            .iter()
            .all(|c| cv.chains.iter().any(|d| c.is_subset(d))));
    }
}

#[test]
fn mirsky_layers_and_chain_reconstruction() {
    let caps = Caps::default();
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            let layers = mirsky::peel_layers(&p);
            assert!(layers.len() <= p.len());
            for (k, layer) in layers.iter().enumerate() {
                assert!(p.is_antichain(layer));
                for other in &layers[k + 1..] {
                    assert!(layer.is_disjoint(other));
                }
                // layer k is the maximal set of what remains
                let rest: BTreeSet<usize> = layers[k..].iter().flatten().copied().collect();
                assert_eq!(&p.restrict(&rest).unwrap().maximal_elements(), layer);
            }
            let chain = mirsky::chain_through_layers(&p, &layers);
            assert!(p.is_chain(&chain));
            assert_eq!(chain.len(), layers.len());
            assert_eq!(layers.len(), scan_height(&p));
            assert_eq!(
                layers.len(),
                oracle::min_antichain_cover(&p, &caps).unwrap().len()
            );
            assert!(mirsky::check_mirsky(&p, &caps).unwrap().equal);
        }
    }
}

#[test]
fn chains_have_a_greatest_element() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            for c in subsets(&p).into_iter().filter(|s| p.is_chain(s)) {
                let q = p.restrict(&c).unwrap();
                assert_eq!(q.maximal_elements().len(), 1);
                let top = q.maximal_elements().into_iter().next().unwrap();
                assert!(c.iter().all(|x| p.le(x, &top)));
            }
        }
    }
}

#[test]
fn graph_poset_shape_and_width() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..300 {
        let g = random_bigraph(&mut rng, 6);
        let p = hall::graph_to_poset(&g);
        assert!(mirsky::height(&p, &caps).unwrap().size <= 2);
        if hall::hall_condition(&g, &caps).unwrap() == HallCondition::Satisfied {
            assert_eq!(dilworth::width(&p, &caps).unwrap().size, g.right().len());
        }
    }
}

#[test]
fn sdr_agrees_with_choice_functions() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..400 {
        let f = random_family(&mut rng, 6, 4, 6);
        let found = matches!(hall::find_sdr(&f, &caps).unwrap(), SdrOutcome::Assigned(_));
        assert_eq!(found, brute_sdr_exists(&f), "{f:?}");
    }
}

#[test]
fn es_on_all_permutations_of_seven() {
    let caps = Caps::default();
    for xs in permutations(7) {
        let s = IntSeq::from_list(xs.clone()).unwrap();
        let (inc, dec) = brute_monotone(&xs);
        for (m, n) in [(2, 3), (3, 2), (6, 1), (1, 6)] {
            let w = erdos_szekeres::es_subsequence(&s, m, n, &caps).unwrap();
            assert!(erdos_szekeres::verify_subseq(&s, &w));
            match w.kind {
                Monotone::Increasing => assert!(w.subsequence.len() == m + 1 && inc > m),
                Monotone::Decreasing => assert!(w.subsequence.len() == n + 1 && dec > n),
            }
        }
    }
}

#[test]
fn es_length_precondition_is_necessary() {
    // [2,1,4,3]: 4 = 2*2 values, no monotone run of 3 either way
    assert_eq!(brute_monotone(&[2, 1, 4, 3]), (2, 2));
    let count = permutations(4)
        .into_iter()
        .filter(|xs| brute_monotone(xs) == (2, 2))
        .count();
    assert!(count > 0);
}
