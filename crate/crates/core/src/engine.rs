//! The rewriting system: adjacent swaps of an ascending comparable pair,
//! applied until none remain.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A total ordering of a poset's elements, stored as element indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrangement(Vec<usize>);

impl Arrangement {
    /// Wraps raw element indices. Validity against a poset is checked by
    /// [`Arrangement::validate`] and by every operation that takes one.
    pub fn new(order: Vec<usize>) -> Self {
        Arrangement(order)
    }

    /// The poset's own element order.
    pub fn identity(poset: &Poset) -> Self {
        Arrangement((0..poset.len()).collect())
    }

    pub fn from_labels<S: AsRef<str>>(poset: &Poset, labels: &[S]) -> Result<Self> {
        let order = labels
            .iter()
            .map(|l| {
                poset.index_of(l.as_ref()).map_err(|_| {
                    Error::ArrangementMismatch(format!("unknown element {:?}", l.as_ref()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let arr = Arrangement(order);
        arr.validate(poset)?;
        Ok(arr)
    }

    pub fn validate(&self, poset: &Poset) -> Result<()> {
        if self.0.len() != poset.len() {
            return Err(Error::ArrangementMismatch(format!(
                "expected {} elements, got {}",
                poset.len(),
                self.0.len()
            )));
        }
        let mut seen = vec![false; poset.len()];
        for &e in &self.0 {
            if e >= poset.len() {
                return Err(Error::ArrangementMismatch(format!("no element #{e}")));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::ArrangementMismatch(format!(
                    "element {:?} listed twice",
                    poset.label(e)
                )));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `pos[e]` is the position of element `e`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (p, &e) in self.0.iter().enumerate() {
            pos[e] = p;
        }
        pos
    }

    pub fn labels<'p>(&self, poset: &'p Poset) -> Vec<&'p str> {
        self.0.iter().map(|&e| poset.label(e)).collect()
    }

    /// Comma-separated labels, the CLI's arrangement syntax.
    pub fn render(&self, poset: &Poset) -> String {
        self.labels(poset).join(",")
    }

    fn swapped(&self, i: usize) -> Arrangement {
        let mut next = self.0.clone();
        next.swap(i, i + 1);
        Arrangement(next)
    }
}

/// One permissible swap. `left` and `right` are the elements at `index` and
/// `index + 1` before the swap, so `left ≺ right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwapEvent {
    pub step: usize,
    pub index: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapTrace {
    pub initial: Arrangement,
    pub events: Vec<SwapEvent>,
    pub terminal: Arrangement,
}

impl SwapTrace {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Re-applies every event from `initial`, checking permissibility and
    /// that each event's recorded elements match the arrangement.
    pub fn replay(&self, poset: &Poset) -> Result<Arrangement> {
        let mut arr = self.initial.clone();
        for ev in &self.events {
            let found = (arr.0.get(ev.index), arr.0.get(ev.index + 1));
            if found != (Some(&ev.left), Some(&ev.right)) {
                return Err(Error::InternalInconsistency(format!(
                    "event {} does not match the arrangement",
                    ev.step
                )));
            }
            arr = apply_swap(poset, &arr, ev.index)?;
        }
        Ok(arr)
    }

    /// Arrangements before and after every event, starting with `initial`.
    pub fn states(&self) -> Vec<Arrangement> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut arr = self.initial.clone();
        out.push(arr.clone());
        for ev in &self.events {
            arr = arr.swapped(ev.index);
            out.push(arr.clone());
        }
        out
    }

    /// True iff no unordered pair of elements is swapped twice.
    pub fn pairs_swapped_at_most_once(&self) -> bool {
        let mut seen = HashSet::new();
        self.events
            .iter()
            .all(|ev| seen.insert((ev.left.min(ev.right), ev.left.max(ev.right))))
    }
}

/// How to pick the next swap when several are permissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
    /// Uniform choice among the current permissible swaps, driven by a
    /// ChaCha8 generator seeded with `seed_from_u64(seed)`.
    Random(u64),
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Leftmost => f.write_str("leftmost"),
            Strategy::Rightmost => f.write_str("rightmost"),
            Strategy::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    /// Accepts `leftmost`, `rightmost` or `random:<seed>`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "leftmost" => Ok(Strategy::Leftmost),
            "rightmost" => Ok(Strategy::Rightmost),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(Strategy::Random)
                .ok_or_else(|| format!("unknown strategy {s:?}")),
        }
    }
}

/// Ascending indices `i` with `arr[i] ≺ arr[i + 1]`.
pub fn permissible_swaps(poset: &Poset, arr: &Arrangement) -> Result<Vec<usize>> {
    arr.validate(poset)?;
    Ok(permissible_unchecked(poset, arr))
}

pub(crate) fn permissible_unchecked(poset: &Poset, arr: &Arrangement) -> Vec<usize> {
    arr.0
        .windows(2)
        .enumerate()
        .filter(|(_, w)| poset.less_idx(w[0], w[1]))
        .map(|(i, _)| i)
        .collect()
}

pub fn apply_swap(poset: &Poset, arr: &Arrangement, i: usize) -> Result<Arrangement> {
    arr.validate(poset)?;
    if i + 1 >= arr.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: arr.len(),
        });
    }
    if !poset.less_idx(arr.0[i], arr.0[i + 1]) {
        return Err(Error::NotPermissible(i));
    }
    Ok(arr.swapped(i))
}

pub fn is_terminal(poset: &Poset, arr: &Arrangement) -> Result<bool> {
    Ok(permissible_swaps(poset, arr)?.is_empty())
}

/// Swaps until no swap is permissible, choosing among candidates by `strategy`.
pub fn run_to_terminal(poset: &Poset, arr: &Arrangement, strategy: Strategy) -> Result<SwapTrace> {
    arr.validate(poset)?;
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut current = arr.clone();
    let mut events = Vec::new();
    loop {
        let candidates = permissible_unchecked(poset, &current);
        let index = match (strategy, candidates.as_slice()) {
            (_, []) => break,
            (Strategy::Leftmost, [first, ..]) => *first,
            (Strategy::Rightmost, [.., last]) => *last,
            (Strategy::Random(_), c) => {
                let rng = rng.as_mut().expect("seeded for random strategy");
                c[rng.random_range(0..c.len())]
            }
        };
        events.push(SwapEvent {
            step: events.len(),
            index,
            left: current.0[index],
            right: current.0[index + 1],
        });
        current.0.swap(index, index + 1);
    }
    Ok(SwapTrace {
        initial: arr.clone(),
        events,
        terminal: current,
    })
}
