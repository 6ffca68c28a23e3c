// Run the diamond under every strategy and compare where each run ends.
//
// cargo run --example run_strategies

use leapfrog::{run_to_terminal, Arrangement, Poset, Strategy};

pub fn run_example() -> leapfrog::Result<()> {
    let diamond = Poset::build(
        ["0", "x", "y", "1"],
        [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
    )?;
    let start = Arrangement::from_labels(&diamond, &["0", "x", "y", "1"])?;

    let mut ends = Vec::new();
    for strategy in [
        Strategy::Leftmost,
        Strategy::Rightmost,
        Strategy::Random(7),
        Strategy::Random(8),
    ] {
        let trace = run_to_terminal(&diamond, &start, strategy)?;
        let swaps: Vec<String> = trace
            .events
            .iter()
            .map(|ev| format!("{}<->{}", diamond.label(ev.left), diamond.label(ev.right)))
            .collect();
        println!(
            "{strategy:>10}: {} after {} swaps [{}]",
            trace.terminal.render(&diamond),
            trace.len(),
            swaps.join(" ")
        );
        let swaps_done = trace.len();
        ends.push((trace.terminal, swaps_done));
    }
    assert!(ends.windows(2).all(|w| w[0] == w[1]));
    Ok(())
}

fn main() -> leapfrog::Result<()> {
    run_example()
}
