//! Tour of the Cayley-Dickson tower: complex numbers, quaternions and
//! octonions over the rationals and the Gaussian rationals.
//!
//! Run with: `cargo run --example octonions`

use albert::cayley::{cd_table, CDNum};
use albert::scalar::{rat_int, Field, GScalar, Rational};

fn main() {
    // e1 squares to -1 one level up from the base field
    let e1 = CDNum::<Rational>::unit(1, 1).unwrap();
    println!("e1 * e1 = {}", &e1 * &e1);

    // the full level-3 multiplication table is derived from the doubling
    // recursion once; products of basis units are signed units
    let t = cd_table();
    println!("\nlevel-3 unit products e_a e_b (sign * index):");
    for a in 0..8 {
        let row: Vec<String> = (0..8)
            .map(|b| {
                let s = if t.sign[a][b] > 0 { '+' } else { '-' };
                format!("{s}{}", t.idx[a][b])
            })
            .collect();
        println!("  e{a}: {}", row.join(" "));
    }

    // norms compose
    let x = CDNum::new(3, (1..=8).map(rat_int).collect()).unwrap();
    let y = CDNum::new(3, (2..=9).map(rat_int).collect()).unwrap();
    println!("\nN(x)      = {}", x.norm_form());
    println!("N(y)      = {}", y.norm_form());
    println!("N(xy)     = {}", (&x * &y).norm_form());
    println!("N(x)N(y)  = {}", x.norm_form() * y.norm_form());

    // octonions stop being associative
    let (ea, eb, ec) = (
        CDNum::<Rational>::unit(3, 1).unwrap(),
        CDNum::<Rational>::unit(3, 2).unwrap(),
        CDNum::<Rational>::unit(3, 4).unwrap(),
    );
    println!("\n(e1 e2) e4 = {}", &(&ea * &eb) * &ec);
    println!("e1 (e2 e4) = {}", &ea * &(&eb * &ec));

    // over the Gaussian rationals the tower splits: null octonions appear
    let mut c = vec![GScalar::zero(); 8];
    c[0] = GScalar::one();
    c[1] = GScalar::i();
    let null = CDNum::new(3, c).unwrap();
    println!("\nnull octonion u = {null}");
    println!("N(u) = {}", null.norm_form());
    println!("invert(u) -> {:?}", null.invert().unwrap_err());
}
