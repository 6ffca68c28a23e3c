// Generate named and random posets, write them as documents and as DOT.
//
// cargo run --example generators

use leapfrog::workbench::{export_dot, gen_random_poset, parse_poset, write_poset, GeneratorSpec};

pub fn run_example() -> leapfrog::Result<()> {
    for spec in [
        GeneratorSpec::Chain(4),
        GeneratorSpec::Antichain(3),
        GeneratorSpec::Boolean(2),
        GeneratorSpec::Grid(2, 3),
    ] {
        let poset = spec.generate()?;
        println!(
            "{spec:?}: {} elements, {} relations, {} covers",
            poset.len(),
            poset.relation_pairs().len(),
            poset.transitive_reduction().len()
        );
    }

    let random = gen_random_poset(6, 0.3, 42)?;
    let doc = write_poset(&random);
    print!("{doc}");
    assert_eq!(parse_poset(&doc)?, random);
    print!("{}", export_dot(&random));
    Ok(())
}

fn main() -> leapfrog::Result<()> {
    run_example()
}
