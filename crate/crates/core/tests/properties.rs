mod common;

use std::collections::BTreeSet;

use common::*;
use leapfrog::engine::Strategy as SwapStrategy;
use leapfrog::oracle::all_arrangements;
use leapfrog::workbench::{gen_random_arrangement, gen_random_poset, parse_poset, write_poset};
use leapfrog::{
    check_confluence, classify_pair, critical_pairs, enumerate_labeled_posets, fence_exists,
    is_terminal, predict_swap_count, predict_terminal, reachable_set, run_to_terminal, Arrangement,
    PairOutcome, Poset, DEFAULT_NODE_LIMIT,
};
use proptest::prelude::*;

fn strategies() -> [SwapStrategy; 5] {
    [
        SwapStrategy::Leftmost,
        SwapStrategy::Rightmost,
        SwapStrategy::Random(1),
        SwapStrategy::Random(2),
        SwapStrategy::Random(3),
    ]
}

fn small_posets() -> Vec<Poset> {
    (0..=4)
        .flat_map(|n| enumerate_labeled_posets(n).unwrap())
        .collect()
}

#[test]
fn enumeration_matches_matrix_filter() {
    // Every n×n boolean matrix, kept when it is a strict partial order.
    for n in 0..=4usize {
        let mut oracle = BTreeSet::new();
        for bits in 0u32..1 << (n * n) {
            let rel = |i: usize, j: usize| bits >> (i * n + j) & 1 == 1;
            let irreflexive = (0..n).all(|i| !rel(i, i));
            let antisymmetric = (0..n).all(|i| (0..n).all(|j| !(rel(i, j) && rel(j, i))));
            let transitive = (0..n)
                .all(|i| (0..n).all(|j| (0..n).all(|k| !(rel(i, j) && rel(j, k)) || rel(i, k))));
            if irreflexive && antisymmetric && transitive {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| rel(i, j))
                    .collect();
                oracle.insert(pairs);
            }
        }
        let enumerated: BTreeSet<Vec<(usize, usize)>> = enumerate_labeled_posets(n)
            .unwrap()
            .map(|p| p.relation_pairs())
            .collect();
        assert_eq!(enumerated, oracle, "n = {n}");
    }
}

#[test]
fn poset_invariants_on_all_small_posets() {
    for p in small_posets() {
        let n = p.len();
        for x in 0..n {
            for y in 0..n {
                let cases = [
                    p.less_idx(x, y),
                    p.less_idx(y, x),
                    p.incomparable_idx(x, y),
                    x == y,
                ];
                assert_eq!(cases.iter().filter(|&&c| c).count(), 1);
            }
        }
        let covers = p.covers_labeled();
        let rebuilt = Poset::build(p.elements().iter().map(|e| e.to_string()), covers).unwrap();
        assert_eq!(rebuilt, p);
        // no cover is implied by the others
        let reduction = p.transitive_reduction();
        for skip in 0..reduction.len() {
            let rest = reduction
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &(a, b))| (p.label(a), p.label(b)));
            let smaller = Poset::build(p.elements().iter().map(|e| e.to_string()), rest).unwrap();
            assert_ne!(smaller, p);
        }
        assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
    }
}

#[test]
fn build_is_deterministic() {
    let a = poset(&["b", "a", "c"], &[("b", "c"), ("a", "c")]);
    let b = poset(&["b", "a", "c"], &[("b", "c"), ("a", "c")]);
    assert_eq!(a, b);
    assert_eq!(a.elements()[0].as_str(), "b");
}

#[test]
fn runs_predictions_and_brute_force_agree_on_all_small_instances() {
    for p in small_posets() {
        let n = p.len();
        for start in all_arrangements(&p) {
            let (terminals, lengths) = brute_force_outcomes(&p, &owned_labels(&p, &start));
            assert_eq!(terminals.len(), 1);
            assert_eq!(lengths.len(), 1);
            let predicted = predict_terminal(&p, &start).unwrap();
            let count = predict_swap_count(&p, &start).unwrap();
            assert_eq!(terminals.first().unwrap(), &owned_labels(&p, &predicted));
            assert_eq!(lengths.first(), Some(&count));

            for s in strategies() {
                let t = run_to_terminal(&p, &start, s).unwrap();
                assert_eq!(t.terminal, predicted);
                assert_eq!(t.len(), count);
                assert!(t.pairs_swapped_at_most_once());
                assert!(t.len() <= n * n.saturating_sub(1) / 2);
                assert_eq!(t.replay(&p).unwrap(), t.terminal);
                let before = start.positions();
                let after = t.terminal.positions();
                for x in 0..n {
                    for y in 0..n {
                        if p.incomparable_idx(x, y) {
                            assert_eq!(before[x] < before[y], after[x] < after[y]);
                        }
                    }
                }
            }

            let idem = run_to_terminal(&p, &predicted, SwapStrategy::Leftmost).unwrap();
            assert!(idem.is_empty());
            assert_eq!(idem.terminal, predicted);

            assert_eq!(
                is_terminal(&p, &start).unwrap(),
                critical_pairs(&p, &start).unwrap().is_empty()
            );
        }
    }
}

#[test]
fn fence_search_matches_subsequence_enumeration() {
    for p in small_posets() {
        for a in all_arrangements(&p) {
            let order = a.order();
            let final_pos = predict_terminal(&p, &a).unwrap().positions();
            for px in 0..order.len() {
                for py in px + 1..order.len() {
                    let (x, y) = (order[px], order[py]);
                    let expected = fence_by_subsets(&p, &a, px, py);
                    assert_eq!(fence_exists(&p, &a, x, y).unwrap(), expected);
                    let outcome = classify_pair(&p, &a, x, y).unwrap();
                    if let PairOutcome::PreservedByFence(cert) = &outcome {
                        assert!(cert.is_valid(&p, &a));
                        assert_eq!((cert.chain[0], *cert.chain.last().unwrap()), (x, y));
                    }
                    // relative order in the prediction follows the verdict
                    assert_eq!(outcome.is_reversed(), final_pos[x] > final_pos[y]);
                    assert_eq!(
                        outcome.is_reversed(),
                        critical_pairs(&p, &a).unwrap().contains(&(x, y))
                    );
                }
            }
        }
    }
}

#[test]
fn ascending_chain_reaches_every_arrangement() {
    for n in 1..=5 {
        let c = chain(n);
        let reach = reachable_set(&c, &Arrangement::identity(&c), DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(reach.len(), factorial(n));
    }
}

fn fence_status(p: &Poset, a: &Arrangement) -> Vec<Vec<Option<bool>>> {
    let n = a.len();
    let pos = a.positions();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| (pos[x] < pos[y]).then(|| fence_exists(p, a, x, y).unwrap()))
                .collect()
        })
        .collect()
}

fn instance() -> impl Strategy<Value = (usize, f64, u64, u64)> {
    (
        0usize..=7,
        prop::sample::select(vec![0.0, 0.15, 0.3, 0.6, 1.0]),
        any::<u64>(),
        any::<u64>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_instances_are_confluent((n, prob, pseed, aseed) in instance()) {
        let p = gen_random_poset(n, prob, pseed).unwrap();
        let a = gen_random_arrangement(&p, aseed);
        let report = check_confluence(&p, &a, DEFAULT_NODE_LIMIT).unwrap();
        prop_assert!(report.confluent && report.agrees);
        prop_assert!(report.reachable_count <= factorial(n));
        for s in strategies() {
            let t = run_to_terminal(&p, &a, s).unwrap();
            prop_assert!(report.terminals.contains(&t.terminal));
            prop_assert_eq!(t.len(), report.predicted_count);
        }
    }

    #[test]
    fn fences_survive_every_swap((n, prob, pseed, aseed) in instance(), seed in any::<u64>()) {
        let p = gen_random_poset(n, prob, pseed).unwrap();
        let a = gen_random_arrangement(&p, aseed);
        let t = run_to_terminal(&p, &a, SwapStrategy::Random(seed)).unwrap();
        let states = t.states();
        for (ev, pair) in t.events.iter().zip(states.windows(2)) {
            let (before, after) = (fence_status(&p, &pair[0]), fence_status(&p, &pair[1]));
            for x in 0..n {
                for y in 0..n {
                    if (x, y) == (ev.left, ev.right) {
                        prop_assert_eq!(before[x][y], Some(false));
                        prop_assert_eq!(after[y][x], Some(false));
                        continue;
                    }
                    if (x, y) == (ev.right, ev.left) {
                        continue;
                    }
                    prop_assert_eq!(before[x][y], after[x][y]);
                }
            }
        }
    }

    #[test]
    fn documents_round_trip((n, prob, pseed, _a) in instance()) {
        let p = gen_random_poset(n, prob, pseed).unwrap();
        let text = write_poset(&p);
        prop_assert_eq!(parse_poset(&text).unwrap(), p.clone());
        prop_assert_eq!(write_poset(&parse_poset(&text).unwrap()), text);
    }
}
