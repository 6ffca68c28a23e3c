// Emit the line-delimited trace of a run.
//
// cargo run --example trace_stream

use leapfrog::workbench::{write_trace, GeneratorSpec};
use leapfrog::{run_to_terminal, Arrangement, Strategy};

pub fn run_example() -> leapfrog::Result<()> {
    let chain = GeneratorSpec::Chain(3).generate()?;
    let trace = run_to_terminal(&chain, &Arrangement::identity(&chain), Strategy::Rightmost)?;
    print!("{}", write_trace(&chain, &trace, true));
    Ok(())
}

fn main() -> leapfrog::Result<()> {
    run_example()
}
