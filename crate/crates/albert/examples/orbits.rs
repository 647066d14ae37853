//! Orbit enumeration: push the frozen strongly isotropic point through
//! words of group generators and watch the isotropy class travel with it.
//!
//! Run with: `cargo run --example orbits`

use albert::spin::{orbit, standard_generators};
use albert::veronese::{collinear, is_strongly_isotropic, strong_fixture};

fn main() {
    let seed = strong_fixture();
    let gens = standard_generators();

    for depth in 0..=2 {
        let points = orbit(&seed, &gens[..4], depth);
        println!("depth {depth}: {} distinct projective points", points.len());
    }

    let points = orbit(&seed, &gens[..4], 2);
    let strong = points
        .iter()
        .all(|p| is_strongly_isotropic(p) == Ok(true));
    println!("\nevery orbit point is strongly isotropic: {strong}");

    // collinearity inside the orbit
    let mut collinear_pairs = 0usize;
    for (i, p) in points.iter().enumerate() {
        for q in points.iter().skip(i + 1) {
            if collinear(p, q) == Ok(true) {
                collinear_pairs += 1;
            }
        }
    }
    println!(
        "collinear pairs among the first {} points: {collinear_pairs}",
        points.len()
    );
    println!("\nfirst few points:");
    for p in points.iter().take(4) {
        println!("  {p}");
    }
}
