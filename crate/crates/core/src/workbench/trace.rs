use serde::{Deserialize, Serialize};

use crate::engine::SwapTrace;
use crate::poset::Poset;

/// One line of the trace stream per swap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: usize,
    pub index: usize,
    pub left: String,
    pub right: String,
    /// Full arrangement after the swap; only written in verbose mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub after: Option<Vec<String>>,
}

/// Closing line of the trace stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub terminal: Vec<String>,
    pub count: usize,
}

/// Line-delimited JSON: one [`TraceRecord`] per event, then a [`TraceSummary`].
pub fn write_trace(poset: &Poset, trace: &SwapTrace, verbose: bool) -> String {
    let owned = |labels: Vec<&str>| labels.into_iter().map(String::from).collect::<Vec<_>>();
    let states = if verbose { trace.states() } else { Vec::new() };
    let mut out = String::new();
    for ev in &trace.events {
        let record = TraceRecord {
            step: ev.step,
            index: ev.index,
            left: poset.label(ev.left).to_string(),
            right: poset.label(ev.right).to_string(),
            after: states.get(ev.step + 1).map(|a| owned(a.labels(poset))),
        };
        out.push_str(&serde_json::to_string(&record).expect("record serializes"));
        out.push('\n');
    }
    let summary = TraceSummary {
        terminal: owned(trace.terminal.labels(poset)),
        count: trace.len(),
    };
    out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
    out.push('\n');
    out
}
