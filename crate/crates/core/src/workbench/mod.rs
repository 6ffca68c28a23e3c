//! Serialization, instance generators, Graphviz export and trace output.

mod document;
mod dot;
mod generate;
mod trace;

pub use document::{parse_poset, write_poset, PosetDocument};
pub use dot::export_dot;
pub use generate::{gen_named_poset, gen_random_arrangement, gen_random_poset, GeneratorSpec};
pub use trace::{write_trace, TraceRecord, TraceSummary};
