use std::fmt::Write;

use crate::poset::Poset;

/// Hasse diagram as a Graphviz `digraph`: one node per element, one edge per
/// cover pair, both in element order.
pub fn export_dot(poset: &Poset) -> String {
    let mut out = String::from("digraph poset {\n    rankdir=BT;\n");
    for e in poset.elements() {
        writeln!(out, "    {};", quote(e.as_str())).unwrap();
    }
    for (a, b) in poset.covers_labeled() {
        writeln!(out, "    {} -> {};", quote(a), quote(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}
