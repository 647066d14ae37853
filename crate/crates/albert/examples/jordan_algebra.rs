//! The 27-dimensional exceptional Jordan algebra: product, trace forms,
//! determinant and the Freudenthal cross product, each computed by two
//! independent routes.
//!
//! Run with: `cargo run --example jordan_algebra`

use albert::jordan::Herm3;
use albert::scalar::{rat, Rational};

fn main() {
    let i = Herm3::<Rational>::identity();
    println!("tr(I) = {}, det(I) = {}", i.trace(), i.det());

    // an element with all slots occupied
    let coords: Vec<Rational> = (0..27).map(|k| rat(k as i64 % 7 - 3, 2)).collect();
    let x = Herm3::from_coords(&coords);
    let y = {
        let coords: Vec<Rational> = (0..27).map(|k| rat((k as i64 % 5) - 2, 3)).collect();
        Herm3::from_coords(&coords)
    };

    println!("\nX = {x}");
    println!("X o Y = {}", x.jordan_mul(&y));

    // the determinant two ways: closed form and trilinear trace form
    println!("\ndet X (closed form)    = {}", x.det());
    println!("det X (trace form)     = {}", x.det_via_trilinear());

    // the cross product two ways
    let c1 = x.cross(&y);
    let c2 = x.cross_via_jordan(&y);
    println!("cross routes agree     = {}", c1 == c2);

    // duality against the trilinear form, complete on the basis
    let dual = Herm3::<Rational>::basis27()
        .iter()
        .all(|z| c1.bilinear(z) == x.trilinear(&y, z) * rat(3, 1));
    println!("(X x Y, Z) = 3(X,Y,Z)  = {dual}");

    // the adjoint identity
    let xx = x.cross(&x);
    println!(
        "X det X = (XxX)x(XxX)  = {}",
        x.scale(&x.det()) == xx.cross(&xx)
    );
}
