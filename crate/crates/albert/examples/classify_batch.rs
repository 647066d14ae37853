//! Batch classification with certificates: stream generated points through
//! both strong-isotropy procedures and tally the verdicts, as the
//! `classify` subcommand does for a single point.
//!
//! Run with: `cargo run --example classify_batch`

use albert::veronese::{classify, generate_nonisotropic_points, generate_weak_points};
use albert::wire::herm3_to_wire;

fn main() {
    let weak = generate_weak_points(40, 20260807);
    let controls = generate_nonisotropic_points(10, 20260807);

    let mut strong = 0usize;
    let mut weak_only = 0usize;
    let mut disagreements = 0usize;
    for p in weak.iter() {
        let c = classify(p.rep()).unwrap();
        if !c.agreement() {
            disagreements += 1;
        }
        match c.strong_defining {
            Some(true) => strong += 1,
            Some(false) => weak_only += 1,
            None => {}
        }
    }
    println!(
        "{} weakly isotropic points: {strong} strong, {weak_only} weak-only, {disagreements} procedure disagreements",
        weak.len()
    );

    for p in controls.iter() {
        let c = classify(p.rep()).unwrap();
        assert_eq!(c.weak, Some(false));
    }
    println!("{} non-isotropic controls classified", controls.len());

    // wire form of one certificate, as consumed by the CLI
    let sample = classify(weak[0].rep()).unwrap();
    println!(
        "\nfirst point (wire JSON): {}",
        serde_json::to_string(&herm3_to_wire(weak[0].rep())).unwrap()
    );
    println!(
        "verdict: veronese {} weak {:?} strong {:?}",
        sample.veronese, sample.weak, sample.strong_defining
    );
}
