// Check every arrangement of every labeled poset on up to four points.
//
// cargo run --release --example exhaustive_sweep

use leapfrog::oracle::all_arrangements;
use leapfrog::{check_confluence, enumerate_labeled_posets, DEFAULT_NODE_LIMIT};

pub fn run_example() -> leapfrog::Result<()> {
    for n in 0..=4 {
        let mut posets = 0;
        let mut instances = 0;
        let mut max_swaps = 0;
        for poset in enumerate_labeled_posets(n)? {
            posets += 1;
            for start in all_arrangements(&poset) {
                let report = check_confluence(&poset, &start, DEFAULT_NODE_LIMIT)?;
                assert!(report.confluent && report.agrees);
                instances += 1;
                max_swaps = max_swaps.max(report.predicted_count);
            }
        }
        println!(
            "n={n}: {posets} posets, {instances} instances confluent, at most {max_swaps} swaps"
        );
    }
    Ok(())
}

fn main() -> leapfrog::Result<()> {
    run_example()
}
