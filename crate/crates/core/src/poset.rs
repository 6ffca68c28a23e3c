//! Finite strict partial orders.
//!
//! A [`Poset`] is built from a list of element labels and any generating set
//! of strict relations; the transitive closure is computed once at
//! construction so that `≺` and `∥` queries are table lookups.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Label of a poset element. Identity is exact text match.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(String);

impl ElementId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        Ok(ElementId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for ElementId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A finite strict partial order with its transitive closure precomputed.
///
/// Elements are addressed either by label or by their index in
/// [`Poset::elements`]; the index form is what the rest of the crate uses
/// internally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<ElementId>,
    index: HashMap<String, usize>,
    // row-major n×n closure matrix
    less: Vec<bool>,
}

impl Poset {
    /// Builds a poset from labels and strict relation pairs `(a, b)` meaning `a ≺ b`.
    ///
    /// The relation pairs may be covers, the full order, or anything in
    /// between; the closure is taken internally. Element order is preserved.
    pub fn build<E, R, S>(elements: E, relations: R) -> Result<Poset>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        R: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut ids = Vec::new();
        let mut index = HashMap::new();
        for label in elements {
            let id = ElementId::new(label)?;
            if index.insert(id.0.clone(), ids.len()).is_some() {
                return Err(Error::DuplicateElement(id.0));
            }
            ids.push(id);
        }

        let n = ids.len();
        let lookup = |label: &str| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| Error::UnknownElement(label.to_string()))
        };
        let mut direct = vec![Vec::new(); n];
        for (a, b) in relations {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if a == b {
                return Err(Error::ReflexivePair(ids[a].0.clone()));
            }
            direct[a].push(b);
        }
        for succ in &mut direct {
            succ.sort_unstable();
            succ.dedup();
        }

        let mut less = vec![false; n * n];
        for (a, succ) in direct.iter().enumerate() {
            for &b in succ {
                less[a * n + b] = true;
            }
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !less[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if less[k * n + j] {
                        less[i * n + j] = true;
                    }
                }
            }
        }

        if let Some(start) = (0..n).find(|&i| less[i * n + i]) {
            let path = shortest_cycle(&direct, start);
            return Err(Error::CycleDetected(
                path.into_iter().map(|i| ids[i].0.clone()).collect(),
            ));
        }

        Ok(Poset {
            elements: ids,
            index,
            less,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        self.elements[i].as_str()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// `x ≺ y`, by label.
    pub fn less(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.less_idx(self.index_of(x)?, self.index_of(y)?))
    }

    /// `x ∥ y`, by label. An element is never incomparable to itself.
    pub fn incomparable(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.incomparable_idx(self.index_of(x)?, self.index_of(y)?))
    }

    #[inline]
    pub fn less_idx(&self, x: usize, y: usize) -> bool {
        self.less[x * self.len() + y]
    }

    #[inline]
    pub fn incomparable_idx(&self, x: usize, y: usize) -> bool {
        x != y && !self.less_idx(x, y) && !self.less_idx(y, x)
    }

    /// All pairs of the closed relation, in element-list order.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.less_idx(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    /// Cover relations: the unique minimal relation whose closure is this order.
    pub fn transitive_reduction(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.relation_pairs()
            .into_iter()
            .filter(|&(i, j)| !(0..n).any(|k| self.less_idx(i, k) && self.less_idx(k, j)))
            .collect()
    }

    pub fn covers_labeled(&self) -> Vec<(&str, &str)> {
        self.transitive_reduction()
            .into_iter()
            .map(|(i, j)| (self.label(i), self.label(j)))
            .collect()
    }
}

// BFS over the input relation from `start` back to itself. Returns the closed
// walk with `start` at both ends.
fn shortest_cycle(direct: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; direct.len()];
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for &w in &direct[v] {
            if w == start {
                let mut walk = vec![v];
                let mut cur = v;
                while cur != start {
                    cur = parent[cur];
                    walk.push(cur);
                }
                walk.reverse();
                walk.push(start);
                return walk;
            }
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("start lies on a cycle of the closure")
}
