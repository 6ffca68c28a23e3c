//! Leapfrog on finite posets.
//!
//! Start from any ordering of a poset's elements and repeatedly swap an
//! adjacent pair `x, y` with `x ≺ y` until no such pair remains. Whatever
//! swaps are chosen, the run ends in the same arrangement after the same
//! number of swaps. This crate runs the system ([`engine`]), predicts its
//! outcome from fences and critical pairs ([`analysis`]), checks both
//! against exhaustive search ([`oracle`]), and provides file formats,
//! generators and a command line front end ([`workbench`], [`cli`]).

pub mod analysis;
pub mod cli;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod poset;
pub mod workbench;

pub use analysis::{
    classify_pair, critical_pairs, fence_exists, find_fence, predict_swap_count, predict_terminal,
    FenceCertificate, PairOutcome,
};
pub use engine::{
    apply_swap, is_terminal, permissible_swaps, run_to_terminal, Arrangement, Strategy, SwapEvent,
    SwapTrace,
};
pub use error::{Error, Result};
pub use oracle::{
    check_confluence, enumerate_labeled_posets, reachable_set, ConfluenceReport, DEFAULT_NODE_LIMIT,
};
pub use poset::{ElementId, Poset};
