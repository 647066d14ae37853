//! Exact invariance certification of the spin-group generators: the
//! determinant and hermitian form are preserved by every generator; the
//! bilinear-form and H-commutation properties single out the subgroup that
//! fixes the real form.
//!
//! Run with: `cargo run --example spin_generators`

use albert::scalar::{Field, GScalar};
use albert::spin::{certify, standard_generators, DetMode, GroupWord};
use albert::veronese::HermC;

fn main() {
    let mode = DetMode::Fast {
        samples: 400,
        seed: 9,
    };
    println!("generator certification (det sampled on 400 basis triples):\n");
    for g in standard_generators() {
        let cert = certify(&GroupWord(vec![g]), mode);
        println!("  {}", cert.label);
        println!(
            "    det {}  h {}  (.,.) {}  commutes-with-H {}",
            cert.det, cert.h, cert.bilinear, cert.commutes_h
        );
        if let Some(w) = cert.witness {
            println!("    witness: {w}");
        }
    }

    // the scaling map is not determinant invariant: det(2X) = 8 det X
    let double = HermC::identity().scale(&GScalar::from_int(2));
    println!("\ndet(2 I) = {} (the scaling map is excluded)", double.det());

    // words compose into exact 27x27 matrices
    let gens = standard_generators();
    let word = GroupWord(vec![gens[0].clone(), gens[2].clone()]);
    let m = word.to_matrix();
    println!(
        "word {} as a matrix: {}x{}, |det|^2 = {}",
        word.label(),
        27,
        27,
        m.det().abs2_rat()
    );
}
