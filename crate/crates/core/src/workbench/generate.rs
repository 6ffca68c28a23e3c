//! Named and random instance generators.
//!
//! Element naming:
//! - `chain(n)`, `antichain(n)`, `random(..)`: `e1` .. `en`
//! - `boolean(k)`: the `2^k` bitstrings of length `k` in numeric order
//!   (`"00"`, `"01"`, `"10"`, `"11"` for `k = 2`)
//! - `grid(a, b)`: `"i_j"` for `1 <= i <= a`, `1 <= j <= b`, row-major
//!
//! Random generation uses ChaCha8 seeded with `seed_from_u64`, so outputs are
//! reproducible for a given seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::Arrangement;
use crate::error::{Error, Result};
use crate::poset::Poset;

pub const MAX_BOOLEAN_RANK: usize = 5;
pub const MAX_GRID_CELLS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorSpec {
    Chain(usize),
    Antichain(usize),
    /// Subsets of a `k`-set under strict inclusion.
    Boolean(usize),
    /// Product of an `a`-chain and a `b`-chain.
    Grid(usize, usize),
    Random {
        n: usize,
        edge_prob: f64,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));
        match *self {
            GeneratorSpec::Chain(0) | GeneratorSpec::Antichain(0) => {
                invalid("size must be positive".into())
            }
            GeneratorSpec::Boolean(k) if k == 0 || k > MAX_BOOLEAN_RANK => invalid(format!(
                "boolean rank must be in 1..={MAX_BOOLEAN_RANK}, got {k}"
            )),
            GeneratorSpec::Grid(a, b) if a == 0 || b == 0 || a * b > MAX_GRID_CELLS => {
                invalid(format!(
                    "grid sides must be positive with at most {MAX_GRID_CELLS} cells, got {a}x{b}"
                ))
            }
            GeneratorSpec::Random { edge_prob, .. } if !(0.0..=1.0).contains(&edge_prob) => {
                invalid(format!(
                    "edge probability must be in [0, 1], got {edge_prob}"
                ))
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Poset> {
        match *self {
            GeneratorSpec::Random { n, edge_prob, seed } => gen_random_poset(n, edge_prob, seed),
            _ => gen_named_poset(self),
        }
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn from_predicate<T>(items: &[T], labels: Vec<String>, less: impl Fn(&T, &T) -> bool) -> Poset {
    let mut rel = Vec::new();
    for (i, a) in items.iter().enumerate() {
        for (j, b) in items.iter().enumerate() {
            if less(a, b) {
                rel.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Poset::build(labels, rel).expect("generated relation is a strict order")
}

pub fn gen_named_poset(spec: &GeneratorSpec) -> Result<Poset> {
    spec.validate()?;
    Ok(match *spec {
        GeneratorSpec::Chain(n) => {
            let labels = numbered(n);
            let rel: Vec<_> = labels
                .windows(2)
                .map(|w| (w[0].clone(), w[1].clone()))
                .collect();
            Poset::build(labels, rel)?
        }
        GeneratorSpec::Antichain(n) => Poset::build(numbered(n), Vec::<(String, String)>::new())?,
        GeneratorSpec::Boolean(k) => {
            let sets: Vec<u32> = (0..1u32 << k).collect();
            let labels = sets.iter().map(|s| format!("{s:0k$b}")).collect();
            from_predicate(&sets, labels, |a, b| a != b && a & b == *a)
        }
        GeneratorSpec::Grid(a, b) => {
            let cells: Vec<(usize, usize)> =
                (1..=a).flat_map(|i| (1..=b).map(move |j| (i, j))).collect();
            let labels = cells.iter().map(|(i, j)| format!("{i}_{j}")).collect();
            from_predicate(&cells, labels, |p, q| p != q && p.0 <= q.0 && p.1 <= q.1)
        }
        GeneratorSpec::Random { .. } => {
            return Err(Error::InvalidSpec(
                "random posets come from gen_random_poset".into(),
            ))
        }
    })
}

/// Samples a hidden linear ranking of `e1..en`, keeps each forward pair of
/// the ranking with probability `edge_prob`, and closes the result.
pub fn gen_random_poset(n: usize, edge_prob: f64, seed: u64) -> Result<Poset> {
    GeneratorSpec::Random { n, edge_prob, seed }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = numbered(n);
    let mut ranking: Vec<usize> = (0..n).collect();
    ranking.shuffle(&mut rng);
    let mut rel = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            if rng.random_bool(edge_prob) {
                rel.push((labels[ranking[p]].clone(), labels[ranking[q]].clone()));
            }
        }
    }
    Poset::build(labels, rel)
}

/// Seeded uniform shuffle of the poset's elements.
pub fn gen_random_arrangement(poset: &Poset, seed: u64) -> Arrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..poset.len()).collect();
    order.shuffle(&mut rng);
    Arrangement::new(order)
}
