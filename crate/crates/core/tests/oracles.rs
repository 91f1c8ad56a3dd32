//! Library results against brute-force oracles.

mod common;

use std::collections::BTreeSet;

use common::*;
use turan2d::canon::canonical_form;
use turan2d::density::{m2_value, reduce_to_strictly_2_balanced};
use turan2d::enumerate::{count_classes, enumerate_alpha_bounded, generate, Constraints};
use turan2d::graph6::{parse_graph6, to_graph6};
use turan2d::invariants::{clique_number, independence_number, local_independence_number};
use turan2d::subgraph::contains_subgraph;

fn brute_classes(n: usize, keep: impl Fn(&turan2d::Graph) -> bool) -> BTreeSet<Vec<bool>> {
    labelled(n).filter(|g| keep(g)).map(|g| brute_canon(&g)).collect()
}

#[test]
fn class_counts_match_labelled_dedup() {
    for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
        assert_eq!(brute_classes(n, |_| true).len(), want, "n={n}");
        assert_eq!(count_classes(n).unwrap(), want as u64, "n={n}");
    }
    assert_eq!(count_classes(7).unwrap(), 1044);
}

#[test]
fn generator_is_complete_and_isomorph_free() {
    for n in 1..=6 {
        let got: Vec<Vec<bool>> = generate(n, &Constraints::default())
            .unwrap()
            .graphs
            .iter()
            .map(brute_canon)
            .collect();
        let distinct: BTreeSet<Vec<bool>> = got.iter().cloned().collect();
        assert_eq!(distinct.len(), got.len(), "duplicate class at n={n}");
        assert_eq!(distinct, brute_classes(n, |_| true), "n={n}");
    }
}

#[test]
fn alpha_bounded_classes_match_brute_force() {
    for (n, a) in [(5, 2), (6, 2), (6, 3), (6, 1)] {
        let want = brute_classes(n, |g| alpha(g) <= a);
        let got: BTreeSet<Vec<bool>> = enumerate_alpha_bounded(n, a).unwrap().iter().map(brute_canon).collect();
        assert_eq!(got, want, "n={n} a={a}");
    }
    assert_eq!(enumerate_alpha_bounded(5, 2).unwrap().len(), 14);
}

#[test]
fn constrained_generation_matches_filtering() {
    let tri = Constraints {
        clique_max: Some(2),
        ..Default::default()
    };
    let got: BTreeSet<Vec<bool>> = generate(6, &tri).unwrap().graphs.iter().map(brute_canon).collect();
    assert_eq!(got, brute_classes(6, |g| omega(g) <= 2));
    let c4 = parse_graph6("Cr").unwrap();
    let no_c4 = Constraints {
        forbidden: vec![c4.clone()],
        ..Default::default()
    };
    let got: BTreeSet<Vec<bool>> = generate(6, &no_c4).unwrap().graphs.iter().map(brute_canon).collect();
    assert_eq!(got, brute_classes(6, |g| !contains_subgraph(g, &c4)));
}

#[test]
fn graph6_round_trips_on_small_classes() {
    for n in 0..=6 {
        for g in generate(n, &Constraints::default()).unwrap().graphs {
            let key = to_graph6(&g);
            assert_eq!(parse_graph6(&key).unwrap(), g);
            assert_eq!(to_graph6(&parse_graph6(&key).unwrap()), key);
        }
    }
}

#[test]
fn invariants_match_brute_force_on_random_graphs() {
    let mut state = 17;
    for i in 0..300 {
        let n = 3 + i % 10;
        let g = lcg_graph(n, &mut state, 40 + (i as u64 * 37) % 180);
        assert_eq!(independence_number(&g), alpha(&g));
        assert_eq!(clique_number(&g), omega(&g));
        if n <= 9 {
            for m in 1..=n {
                assert_eq!(local_independence_number(&g, m).unwrap(), local_alpha(&g, m));
            }
        }
    }
}

#[test]
fn m2_matches_all_subgraph_oracle() {
    let mut state = 3;
    for i in 0..150 {
        let n = 3 + i % 4;
        let g = lcg_graph(n, &mut state, 60 + (i as u64 * 53) % 160);
        if g.edge_count() > 10 {
            continue;
        }
        assert_eq!(m2_value(&g).unwrap(), m2_all_subgraphs(&g), "{}", to_graph6(&g));
    }
}

#[test]
fn reduction_is_a_subgraph_of_equal_density() {
    for g in generate(6, &Constraints::default()).unwrap().graphs {
        let h = reduce_to_strictly_2_balanced(&g).unwrap();
        assert!(contains_subgraph(&g, &h));
        assert_eq!(m2_value(&h).unwrap(), m2_value(&g).unwrap());
        let again = reduce_to_strictly_2_balanced(&h).unwrap();
        assert_eq!(canonical_form(&again), canonical_form(&h));
    }
}
