//! Veronese vectors and isotropy: the hermitian form h, weak and strong
//! isotropy, and the agreement of the two strong-isotropy decision
//! procedures, with the violated-equation certificate for a rejected point.
//!
//! Run with: `cargo run --example veronese_points`

use albert::veronese::{
    classify, form_h, is_veronese, map_h, strong_fixture, symplecton, weak_not_strong_witness,
    HermC,
};

fn main() {
    let e1 = HermC::diag_unit(0);
    println!("E1 is Veronese: {}", is_veronese(&e1));
    println!("I  is Veronese: {}", is_veronese(&HermC::identity()));
    println!("h(E1, E1) = {}", form_h(&e1, &e1));

    // the frozen strongly isotropic point
    let p = strong_fixture();
    println!("\nstrong fixture X = {p}");
    println!("H(X) = {}", map_h(p.rep()));
    let c = classify(p.rep()).unwrap();
    println!(
        "veronese {} / weak {:?} / strong {:?} / procedures agree {}",
        c.veronese,
        c.weak,
        c.strong_defining,
        c.agreement()
    );

    // a weakly isotropic point that is not strongly isotropic, with the
    // coordinate equation that rejects it
    let w = weak_not_strong_witness();
    println!("\nweak witness Y = {w}");
    let c = classify(w.rep()).unwrap();
    println!(
        "veronese {} / weak {:?} / strong {:?} / agree {}",
        c.veronese,
        c.weak,
        c.strong_defining,
        c.agreement()
    );
    if let Some(eq) = c.failed_equation {
        println!("rejected by {eq}");
    }

    // symplecta are linear data: the span X x H3
    let s = symplecton(&e1).unwrap();
    println!("\nsymplecton of E1 has complex dimension {}", s.dim());
}
