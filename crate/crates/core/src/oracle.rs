//! Ground truth by exhaustive search.
//!
//! Breadth-first exploration of every arrangement reachable from a start,
//! plus enumeration of all labeled posets on up to four points, for
//! sweeping the whole instance space at small sizes.

use std::collections::{BTreeSet, HashMap, VecDeque};

use itertools::Itertools;

use crate::analysis::{predict_swap_count, predict_terminal};
use crate::engine::{permissible_unchecked, Arrangement};
use crate::error::{Error, Result};
use crate::poset::Poset;

pub const DEFAULT_NODE_LIMIT: usize = 50_000;

/// Largest `n` accepted by [`enumerate_labeled_posets`].
pub const MAX_ENUMERATION_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub reachable_count: usize,
    pub terminals: BTreeSet<Arrangement>,
    /// Lengths of all maximal swap sequences from the start.
    pub swap_count_set: BTreeSet<usize>,
    pub predicted_terminal: Arrangement,
    pub predicted_count: usize,
    /// Exactly one terminal arrangement is reachable.
    pub confluent: bool,
    /// The unique terminal and its depth match the analytic prediction.
    pub agrees: bool,
}

/// Reachable arrangements with their swap distance from the start.
///
/// Every swap reverses one pair that was never reversed before, so all
/// paths to a given arrangement have the same length. This is checked on
/// every edge; a mismatch is reported as an internal inconsistency.
pub fn explore(
    poset: &Poset,
    arr: &Arrangement,
    node_limit: usize,
) -> Result<HashMap<Arrangement, usize>> {
    arr.validate(poset)?;
    let mut depth = HashMap::from([(arr.clone(), 0usize)]);
    let mut queue = VecDeque::from([arr.clone()]);
    if depth.len() > node_limit {
        return Err(Error::LimitExceeded(node_limit));
    }
    while let Some(cur) = queue.pop_front() {
        let d = depth[&cur];
        for i in permissible_unchecked(poset, &cur) {
            let mut next = cur.order().to_vec();
            next.swap(i, i + 1);
            let next = Arrangement::new(next);
            match depth.get(&next) {
                Some(&seen) if seen != d + 1 => {
                    return Err(Error::InternalInconsistency(format!(
                        "arrangement {} reached at depths {seen} and {}",
                        next.render(poset),
                        d + 1
                    )));
                }
                Some(_) => {}
                None => {
                    if depth.len() >= node_limit {
                        return Err(Error::LimitExceeded(node_limit));
                    }
                    depth.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(depth)
}

/// Every arrangement reachable from `arr`, including `arr` itself.
pub fn reachable_set(
    poset: &Poset,
    arr: &Arrangement,
    node_limit: usize,
) -> Result<BTreeSet<Arrangement>> {
    Ok(explore(poset, arr, node_limit)?.into_keys().collect())
}

pub fn check_confluence(
    poset: &Poset,
    arr: &Arrangement,
    node_limit: usize,
) -> Result<ConfluenceReport> {
    let depth = explore(poset, arr, node_limit)?;
    let mut terminals = BTreeSet::new();
    let mut swap_count_set = BTreeSet::new();
    for (a, &d) in &depth {
        if permissible_unchecked(poset, a).is_empty() {
            terminals.insert(a.clone());
            swap_count_set.insert(d);
        }
    }
    let predicted_terminal = predict_terminal(poset, arr)?;
    let predicted_count = predict_swap_count(poset, arr)?;
    let confluent = terminals.len() == 1;
    let agrees = confluent
        && terminals.contains(&predicted_terminal)
        && swap_count_set.len() == 1
        && swap_count_set.contains(&predicted_count);
    Ok(ConfluenceReport {
        reachable_count: depth.len(),
        terminals,
        swap_count_set,
        predicted_terminal,
        predicted_count,
        confluent,
        agrees,
    })
}

/// All strict partial orders on the labels `e1..en`, each exactly once.
///
/// Each unordered pair `{i, j}` takes one of three states (unrelated,
/// `i ≺ j`, `j ≺ i`); every assignment is a base-3 code, visited in
/// ascending order, and kept when the relation is transitive.
pub fn enumerate_labeled_posets(n: usize) -> Result<impl Iterator<Item = Poset>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::UnsupportedSize(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let codes = 3usize.pow(pairs.len() as u32);
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    Ok((0..codes).filter_map(move |code| {
        let mut rel = vec![false; n * n];
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => rel[i * n + j] = true,
                2 => rel[j * n + i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| !rel[i * n + j] || (0..n).all(|k| !rel[j * n + k] || rel[i * n + k]))
        });
        if !transitive {
            return None;
        }
        let relations = (0..n)
            .cartesian_product(0..n)
            .filter(|&(i, j)| rel[i * n + j])
            .map(|(i, j)| (labels[i].as_str(), labels[j].as_str()));
        Some(Poset::build(labels.clone(), relations).expect("transitive antisymmetric relation"))
    }))
}

/// All `n!` arrangements of the poset, in lexicographic index order.
pub fn all_arrangements(poset: &Poset) -> impl Iterator<Item = Arrangement> {
    let n = poset.len();
    (0..n).permutations(n).map(Arrangement::new)
}
