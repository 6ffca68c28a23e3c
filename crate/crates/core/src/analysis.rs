//! Simulation-free prediction of the terminal arrangement.
//!
//! An `(x, y)`-fence in an arrangement is a subsequence `x = z1, ..., zk = y`
//! (k ≥ 2, not necessarily contiguous) whose consecutive members are
//! incomparable. Swaps only ever exchange comparable neighbours, so they can
//! neither reorder the ends of a fence nor create or destroy one. For `x`
//! before `y` the final relative order is therefore:
//!
//! - kept, when `y ≺ x`;
//! - kept, when an `(x, y)`-fence exists;
//! - reversed otherwise. Such `(x, y)` is a *critical pair*.
//!
//! Every swap reverses exactly one critical pair and no pair is swapped
//! twice, so the swap count of any complete run equals the number of
//! critical pairs.
//!
//! Fences are found by reachability on the position DAG with an edge
//! `i -> j` whenever `i < j` and the elements at those positions are
//! incomparable.

use std::collections::{BTreeSet, VecDeque};

use crate::engine::{permissible_unchecked, Arrangement};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// A witness chain `z1, ..., zk` of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FenceCertificate {
    pub chain: Vec<usize>,
}

impl FenceCertificate {
    /// Checks the chain against `arr`: at least two members, strictly
    /// increasing positions, consecutive members incomparable.
    pub fn is_valid(&self, poset: &Poset, arr: &Arrangement) -> bool {
        if self.chain.len() < 2 || self.chain.iter().any(|&e| e >= arr.len()) {
            return false;
        }
        let pos = arr.positions();
        self.chain
            .windows(2)
            .all(|w| pos[w[0]] < pos[w[1]] && poset.incomparable_idx(w[0], w[1]))
    }

    pub fn labels<'p>(&self, poset: &'p Poset) -> Vec<&'p str> {
        self.chain.iter().map(|&e| poset.label(e)).collect()
    }
}

/// Verdict for a pair `(x, y)` with `x` before `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    /// `y ≺ x`: already descending, never swapped.
    PreservedByOrder,
    /// A fence pins the pair. Incomparable pairs carry the chain `(x, y)`.
    PreservedByFence(FenceCertificate),
    /// Critical pair: `x ≺ y` with no fence.
    Reversed,
}

impl PairOutcome {
    pub fn is_reversed(&self) -> bool {
        matches!(self, PairOutcome::Reversed)
    }
}

// Fence reachability between every pair of positions, for one arrangement.
struct FenceIndex {
    n: usize,
    reach: Vec<bool>,
}

impl FenceIndex {
    fn new(poset: &Poset, arr: &Arrangement) -> Self {
        let order = arr.order();
        let n = order.len();
        let mut reach = vec![false; n * n];
        for i in (0..n).rev() {
            for j in i + 1..n {
                if poset.incomparable_idx(order[i], order[j]) {
                    reach[i * n + j] = true;
                    for k in j + 1..n {
                        if reach[j * n + k] {
                            reach[i * n + k] = true;
                        }
                    }
                }
            }
        }
        FenceIndex { n, reach }
    }

    fn connected(&self, from: usize, to: usize) -> bool {
        self.reach[from * self.n + to]
    }
}

fn check_pair(poset: &Poset, arr: &Arrangement, x: usize, y: usize) -> Result<(usize, usize)> {
    arr.validate(poset)?;
    for e in [x, y] {
        if e >= poset.len() {
            return Err(Error::UnknownElement(format!("#{e}")));
        }
    }
    let pos = arr.positions();
    if pos[x] >= pos[y] {
        return Err(Error::OrderViolation {
            x: poset.label(x).to_string(),
            y: poset.label(y).to_string(),
        });
    }
    Ok((pos[x], pos[y]))
}

/// Whether an `(x, y)`-fence exists. Requires `x` to precede `y`.
pub fn fence_exists(poset: &Poset, arr: &Arrangement, x: usize, y: usize) -> Result<bool> {
    Ok(find_fence(poset, arr, x, y)?.is_some())
}

/// A shortest `(x, y)`-fence, if any.
///
/// Breadth-first from `x`'s position, expanding successors in ascending
/// position order; the first path to reach `y` is returned.
pub fn find_fence(
    poset: &Poset,
    arr: &Arrangement,
    x: usize,
    y: usize,
) -> Result<Option<FenceCertificate>> {
    let (px, py) = check_pair(poset, arr, x, y)?;
    let order = arr.order();
    let mut parent = vec![usize::MAX; order.len()];
    let mut queue = VecDeque::from([px]);
    while let Some(p) = queue.pop_front() {
        // positions past y can never lead back to it
        for q in p + 1..=py {
            if parent[q] != usize::MAX || !poset.incomparable_idx(order[p], order[q]) {
                continue;
            }
            parent[q] = p;
            if q == py {
                let mut chain = vec![order[py]];
                let mut cur = py;
                while cur != px {
                    cur = parent[cur];
                    chain.push(order[cur]);
                }
                chain.reverse();
                return Ok(Some(FenceCertificate { chain }));
            }
            queue.push_back(q);
        }
    }
    Ok(None)
}

/// Applies the three-case criterion to `x` before `y`, in order.
pub fn classify_pair(poset: &Poset, arr: &Arrangement, x: usize, y: usize) -> Result<PairOutcome> {
    check_pair(poset, arr, x, y)?;
    if poset.less_idx(y, x) {
        return Ok(PairOutcome::PreservedByOrder);
    }
    Ok(match find_fence(poset, arr, x, y)? {
        Some(cert) => PairOutcome::PreservedByFence(cert),
        None => PairOutcome::Reversed,
    })
}

/// Every `(x, y)` with `x ≺ y`, `x` before `y`, and no `(x, y)`-fence.
pub fn critical_pairs(poset: &Poset, arr: &Arrangement) -> Result<BTreeSet<(usize, usize)>> {
    arr.validate(poset)?;
    Ok(critical_positions(poset, arr)
        .map(|(i, j)| (arr.order()[i], arr.order()[j]))
        .collect())
}

fn critical_positions<'a>(
    poset: &'a Poset,
    arr: &'a Arrangement,
) -> impl Iterator<Item = (usize, usize)> + 'a {
    let order = arr.order();
    let fences = FenceIndex::new(poset, arr);
    let n = order.len();
    (0..n)
        .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
        .filter(move |&(i, j)| poset.less_idx(order[i], order[j]) && !fences.connected(i, j))
}

/// The unique terminal arrangement reachable from `arr`, without simulating.
///
/// Each element is placed at the number of elements that end up before it.
/// If those ranks fail to form a permutation, or the result is not
/// terminal, the pairwise verdicts were inconsistent and an
/// [`Error::InternalInconsistency`] is returned.
pub fn predict_terminal(poset: &Poset, arr: &Arrangement) -> Result<Arrangement> {
    arr.validate(poset)?;
    let order = arr.order();
    let n = order.len();
    let mut reversed = vec![false; n * n];
    for (i, j) in critical_positions(poset, arr) {
        reversed[i * n + j] = true;
    }
    // rank[p]: how many elements finish ahead of the one at position p
    let mut rank = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            if reversed[i * n + j] {
                rank[i] += 1;
            } else {
                rank[j] += 1;
            }
        }
    }
    let mut terminal = vec![usize::MAX; n];
    for (p, &r) in rank.iter().enumerate() {
        if r >= n || terminal[r] != usize::MAX {
            return Err(Error::InternalInconsistency(format!(
                "predicted ranks are not a permutation (rank {r} repeated)"
            )));
        }
        terminal[r] = order[p];
    }
    let terminal = Arrangement::new(terminal);
    if !permissible_unchecked(poset, &terminal).is_empty() {
        return Err(Error::InternalInconsistency(
            "predicted arrangement admits a swap".into(),
        ));
    }
    Ok(terminal)
}

/// Number of swaps any complete run from `arr` performs.
pub fn predict_swap_count(poset: &Poset, arr: &Arrangement) -> Result<usize> {
    arr.validate(poset)?;
    Ok(critical_positions(poset, arr).count())
}
