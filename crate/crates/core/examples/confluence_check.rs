// Explore every reachable arrangement of a boolean lattice instance and
// check there is exactly one terminal.
//
// cargo run --example confluence_check

use leapfrog::workbench::GeneratorSpec;
use leapfrog::{check_confluence, Arrangement, DEFAULT_NODE_LIMIT};

pub fn run_example() -> leapfrog::Result<()> {
    let cube = GeneratorSpec::Boolean(3).generate()?;
    // bottom-up listing: the most swaps possible
    let start = Arrangement::identity(&cube);
    let report = check_confluence(&cube, &start, DEFAULT_NODE_LIMIT)?;
    println!("start:      {}", start.render(&cube));
    println!("reachable:  {}", report.reachable_count);
    for t in &report.terminals {
        println!("terminal:   {}", t.render(&cube));
    }
    println!("path lengths: {:?}", report.swap_count_set);
    println!(
        "confluent: {}  agrees with prediction: {}",
        report.confluent, report.agrees
    );
    assert!(report.confluent && report.agrees);
    Ok(())
}

fn main() -> leapfrog::Result<()> {
    run_example()
}
