#![allow(dead_code)]

use std::collections::BTreeSet;

use leapfrog::{Arrangement, Poset};

pub fn poset(elems: &[&str], rel: &[(&str, &str)]) -> Poset {
    Poset::build(elems.iter().copied(), rel.iter().copied()).unwrap()
}

pub fn arr(p: &Poset, labels: &str) -> Arrangement {
    leapfrog::cli::parse_arrangement(p, labels).unwrap()
}

pub fn diamond() -> Poset {
    poset(
        &["0", "x", "y", "1"],
        &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
    )
}

pub fn chain(n: usize) -> Poset {
    leapfrog::workbench::gen_named_poset(&leapfrog::workbench::GeneratorSpec::Chain(n)).unwrap()
}

pub fn antichain(n: usize) -> Poset {
    leapfrog::workbench::gen_named_poset(&leapfrog::workbench::GeneratorSpec::Antichain(n)).unwrap()
}

/// Depth-first walk over every maximal swap sequence, with the order
/// relation read from the labels through `Poset::less` only. Returns the
/// terminal arrangements and the lengths of all maximal sequences.
pub fn brute_force_outcomes(
    p: &Poset,
    start: &[String],
) -> (BTreeSet<Vec<String>>, BTreeSet<usize>) {
    fn walk(
        p: &Poset,
        cur: &mut Vec<String>,
        depth: usize,
        terminals: &mut BTreeSet<Vec<String>>,
        lengths: &mut BTreeSet<usize>,
    ) {
        let mut moved = false;
        for i in 0..cur.len().saturating_sub(1) {
            if p.less(&cur[i], &cur[i + 1]).unwrap() {
                moved = true;
                cur.swap(i, i + 1);
                walk(p, cur, depth + 1, terminals, lengths);
                cur.swap(i, i + 1);
            }
        }
        if !moved {
            terminals.insert(cur.clone());
            lengths.insert(depth);
        }
    }
    let mut terminals = BTreeSet::new();
    let mut lengths = BTreeSet::new();
    walk(p, &mut start.to_vec(), 0, &mut terminals, &mut lengths);
    (terminals, lengths)
}

pub fn owned_labels(p: &Poset, a: &Arrangement) -> Vec<String> {
    a.labels(p).into_iter().map(String::from).collect()
}

/// Fence existence by enumerating every subsequence between the two
/// positions (exponential; small n only).
pub fn fence_by_subsets(p: &Poset, a: &Arrangement, px: usize, py: usize) -> bool {
    let order = a.order();
    let inner: Vec<usize> = (px + 1..py).collect();
    (0u64..1 << inner.len()).any(|mask| {
        let mut chain = vec![order[px]];
        chain.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &q)| order[q]),
        );
        chain.push(order[py]);
        chain.windows(2).all(|w| p.incomparable_idx(w[0], w[1]))
    })
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
