// Predict the terminal arrangement and swap count from critical pairs,
// then confirm by running.
//
// cargo run --example predict_terminal

use leapfrog::workbench::{gen_random_arrangement, GeneratorSpec};
use leapfrog::{critical_pairs, predict_swap_count, predict_terminal, run_to_terminal, Strategy};

pub fn run_example() -> leapfrog::Result<()> {
    let grid = GeneratorSpec::Grid(3, 3).generate()?;
    let start = gen_random_arrangement(&grid, 2024);
    println!("start:     {}", start.render(&grid));

    let critical = critical_pairs(&grid, &start)?;
    let pairs: Vec<String> = critical
        .iter()
        .map(|&(x, y)| format!("({},{})", grid.label(x), grid.label(y)))
        .collect();
    println!("critical:  {}", pairs.join(" "));

    let predicted = predict_terminal(&grid, &start)?;
    let count = predict_swap_count(&grid, &start)?;
    println!("predicted: {} in {count} swaps", predicted.render(&grid));

    let trace = run_to_terminal(&grid, &start, Strategy::Leftmost)?;
    println!(
        "simulated: {} in {} swaps",
        trace.terminal.render(&grid),
        trace.len()
    );
    assert_eq!(trace.terminal, predicted);
    assert_eq!(trace.len(), count);
    Ok(())
}

fn main() -> leapfrog::Result<()> {
    run_example()
}
