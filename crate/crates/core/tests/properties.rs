use hpfold::folding::{canonicalize, embed_steps};
use hpfold::{contacts, enumerate_optimal, max_contact_bound, missing_bonds, Chain, Dir, Folding, Label, Point};
use hpfold::{SearchOptions, Topology};
use proptest::prelude::*;
use std::collections::HashSet;

/// Turns arbitrary choices into a self-avoiding walk: each choice picks one of
/// the currently free directions, and the walk stops early if it is trapped.
fn walk_from(choices: &[u8]) -> Folding {
    let mut at = Point::ORIGIN;
    let mut seen = HashSet::from([at]);
    let mut steps = Vec::new();
    for &c in choices {
        let free: Vec<Dir> = Dir::ALL.into_iter().filter(|&d| !seen.contains(&at.step(d))).collect();
        if free.is_empty() {
            break;
        }
        let d = free[c as usize % free.len()];
        at = at.step(d);
        seen.insert(at);
        steps.push(d);
    }
    Folding::new(steps)
}

fn chain_of(bits: &[bool]) -> Chain {
    let labels = bits.iter().map(|&h| if h { Label::H } else { Label::P }).collect();
    Chain::new(labels, Topology::Open).unwrap()
}

fn folded_chain() -> impl Strategy<Value = (Chain, Folding)> {
    prop::collection::vec(any::<u8>(), 0..24).prop_flat_map(|choices| {
        let folding = walk_from(&choices);
        let n = folding.len() + 1;
        prop::collection::vec(any::<bool>(), n).prop_map(move |bits| (chain_of(&bits), folding.clone()))
    })
}

fn small_chain(max: usize) -> impl Strategy<Value = Chain> {
    prop::collection::vec(any::<bool>(), 1..=max).prop_map(|bits| chain_of(&bits))
}

fn pairs(chain: &Chain, f: &Folding) -> Vec<(usize, usize)> {
    let mut p = contacts(chain, f).unwrap().contacts;
    p.sort_unstable();
    p
}

proptest! {
    #[test]
    fn canonical_form_is_constant_on_orbits(choices in prop::collection::vec(any::<u8>(), 0..30)) {
        let f = walk_from(&choices);
        let canon = canonicalize(&f, Topology::Open).unwrap();
        prop_assert_eq!(canonicalize(&canon, Topology::Open).unwrap(), canon.clone());
        for image in f.images() {
            prop_assert_eq!(canonicalize(&image, Topology::Open).unwrap(), canon.clone());
        }
        prop_assert!(canon <= f);
    }

    #[test]
    fn contacts_are_isometry_invariant((chain, f) in folded_chain()) {
        let base = pairs(&chain, &f);
        for image in f.images() {
            prop_assert_eq!(pairs(&chain, &image), base.clone());
        }
    }

    #[test]
    fn contacts_respect_bounds_and_parity((chain, f) in folded_chain()) {
        let bonds = contacts(&chain, &f).unwrap();
        prop_assert!(bonds.len() <= max_contact_bound(&chain));
        let points = embed_steps(&f, chain.len(), Topology::Open).unwrap().points;
        for &(i, j) in &bonds.contacts {
            prop_assert!(chain.is_h(i) && chain.is_h(j));
            prop_assert!(points[i].is_adjacent(points[j]));
            prop_assert_eq!((i + j) % 2, 1);
            prop_assert!(j.abs_diff(i) >= 3);
        }
    }

    #[test]
    fn missing_bond_degree_identity((chain, f) in folded_chain()) {
        let n = chain.len();
        let report = missing_bonds(&chain, &f).unwrap();
        prop_assert_eq!(report.nodes.len(), chain.h_count());
        for node in &report.nodes {
            let expected = match (n, node.node) {
                (1, _) => 4,
                (_, i) if i == 0 || i == n - 1 => 3,
                _ => 2,
            };
            prop_assert_eq!(node.bond_degree + node.missing(), expected);
            prop_assert_eq!(node.external_missing, node.external_walls.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pruning_does_not_change_results(chain in small_chain(12)) {
        let pruned = enumerate_optimal(&chain, &SearchOptions::default()).unwrap();
        let full = enumerate_optimal(&chain, &SearchOptions { use_pruning: false, ..SearchOptions::default() }).unwrap();
        prop_assert_eq!(pruned.optimum, full.optimum);
        prop_assert_eq!(pruned.class_count, full.class_count);
        prop_assert_eq!(pruned.representatives, full.representatives);
    }

    #[test]
    fn split_depth_is_deterministic(chain in small_chain(13), depth in 1usize..6) {
        let seq = enumerate_optimal(&chain, &SearchOptions::default()).unwrap();
        let par = enumerate_optimal(&chain, &SearchOptions { parallel_split_depth: depth, ..SearchOptions::default() }).unwrap();
        prop_assert_eq!(seq.optimum, par.optimum);
        prop_assert_eq!(seq.class_count, par.class_count);
        prop_assert_eq!(seq.representatives, par.representatives);
    }

    #[test]
    fn appending_p_never_lowers_the_optimum(chain in small_chain(12)) {
        let mut labels = chain.labels().to_vec();
        labels.push(Label::P);
        let longer = Chain::new(labels, Topology::Open).unwrap();
        let a = enumerate_optimal(&chain, &SearchOptions::default()).unwrap();
        let b = enumerate_optimal(&longer, &SearchOptions::default()).unwrap();
        prop_assert!(b.optimum >= a.optimum);
        prop_assert!(a.optimum <= max_contact_bound(&chain));
    }

    #[test]
    fn representatives_are_canonical_optimal_foldings(chain in small_chain(12)) {
        let r = enumerate_optimal(&chain, &SearchOptions::default()).unwrap();
        prop_assert!(!r.representatives.is_empty());
        for f in &r.representatives {
            prop_assert_eq!(&canonicalize(f, Topology::Open).unwrap(), f);
            prop_assert_eq!(contacts(&chain, f).unwrap().len(), r.optimum);
        }
    }

    #[test]
    fn json_round_trips(chain in small_chain(16), choices in prop::collection::vec(any::<u8>(), 0..16)) {
        let f = walk_from(&choices);
        let back: Chain = serde_json::from_str(&serde_json::to_string(&chain).unwrap()).unwrap();
        prop_assert_eq!(back, chain);
        let back: Folding = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }
}
