//! The toy model: the wedge square of a 6-dimensional hermitian space,
//! Pluecker embedding, confluence, the induced form h2 and the Witt
//! indices 2 and 7.
//!
//! Run with: `cargo run --example toy_model`

use albert::plucker::{
    confluent, cross6, form_h2, form_h6, gram_h2, gram_h6, inverse_plucker, is_decomposable,
    is_strongly_isotropic_biv, plucker_embed, wedge2, witt_index, Bivector, Subspace, Vec6,
};

fn main() {
    let e = Vec6::basis;

    // h6 has signature (-,-,+,+,+,+)
    println!("h6(e1,e1) = {}", form_h6(&e(0), &e(0)));
    println!("h6(e3,e3) = {}", form_h6(&e(2), &e(2)));
    let iso = &e(0) + &e(2);
    println!("h6(e1+e3, e1+e3) = {}", form_h6(&iso, &iso));

    // planes embed as decomposable rays
    let l = Subspace::from_spanning(&[iso.clone(), &e(1) + &e(3)]);
    let u = plucker_embed(&l).unwrap();
    println!("\np(L) decomposable: {}", is_decomposable(&u));
    println!("round trip recovers L: {}", inverse_plucker(&u).unwrap() == l);
    let nd = &wedge2(&e(0), &e(1)) + &wedge2(&e(2), &e(3));
    println!("e1^e2 + e3^e4 decomposable: {}", is_decomposable(&nd));

    // confluence is a wedge-vanishing condition, equivalently a cross one
    let v = plucker_embed(&Subspace::from_spanning(&[e(1), e(2)])).unwrap();
    let w = plucker_embed(&Subspace::from_spanning(&[e(3), e(4)])).unwrap();
    println!("\nplanes <e2,e3> and <e4,e5> meet: {}", confluent(&v, &w).unwrap());
    println!("cross6(v, w) = 0: {}", cross6(&v, &w).is_zero());

    // the wedge of two orthogonal isotropic vectors is a point of the dual
    // quadrangle
    println!(
        "\nwedge of orthogonal isotropic vectors strongly isotropic: {}",
        is_strongly_isotropic_biv(&u).unwrap()
    );
    println!(
        "h2 of a positive wedge: h2(e3^e4, e3^e4) = {}",
        form_h2(
            &Bivector::wedge_basis(albert::plucker::pair_index(2, 3)),
            &Bivector::wedge_basis(albert::plucker::pair_index(2, 3))
        )
    );

    // Witt indices of the base form and the induced wedge form
    println!("\nwitt(h6) = {}", witt_index(&gram_h6()));
    println!("witt(h2) = {}  (on the 15-dimensional wedge space)", witt_index(&gram_h2()));
}
