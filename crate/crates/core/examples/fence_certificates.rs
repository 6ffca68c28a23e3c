// Classify every pair of an arrangement and print fence witnesses.
//
// cargo run --example fence_certificates

use leapfrog::{classify_pair, Arrangement, PairOutcome, Poset};

pub fn run_example() -> leapfrog::Result<()> {
    // a ≺ b ≺ d, c incomparable to a and b
    let poset = Poset::build(["a", "b", "c", "d"], [("a", "b"), ("b", "d"), ("c", "d")])?;
    let arr = Arrangement::from_labels(&poset, &["a", "c", "b", "d"])?;
    let order = arr.order();
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[i + 1..] {
            let outcome = classify_pair(&poset, &arr, x, y)?;
            let verdict = match &outcome {
                PairOutcome::PreservedByOrder => "kept (already descending)".to_string(),
                PairOutcome::PreservedByFence(cert) => {
                    assert!(cert.is_valid(&poset, &arr));
                    format!("kept by fence {}", cert.labels(&poset).join(" ∥ "))
                }
                PairOutcome::Reversed => "reversed (critical)".to_string(),
            };
            println!("{} before {}: {verdict}", poset.label(x), poset.label(y));
        }
    }
    Ok(())
}

fn main() -> leapfrog::Result<()> {
    run_example()
}
