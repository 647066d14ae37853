//! Property tests for the algebraic invariants, with exact arithmetic
//! throughout: whatever holds on random rational samples here holds over
//! the real and complex fields, because every identity is polynomial in
//! the coordinates.

use albert::cayley::CDNum;
use albert::jordan::Herm3;
use albert::plucker::{inverse_plucker, plucker_embed, wedge2, Subspace, Vec6};
use albert::scalar::{rat, Field, GScalar, Rational};
use albert::veronese::ProjPoint;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn arb_gscalar() -> impl Strategy<Value = GScalar> {
    (arb_rational(), arb_rational()).prop_map(|(re, im)| GScalar::new(re, im))
}

fn arb_octonion() -> impl Strategy<Value = CDNum<GScalar>> {
    proptest::collection::vec(arb_gscalar(), 8)
        .prop_map(|coeffs| CDNum::new(3, coeffs).unwrap())
}

fn arb_herm3() -> impl Strategy<Value = Herm3<GScalar>> {
    proptest::collection::vec(arb_gscalar(), 27).prop_map(|c| Herm3::from_coords(&c))
}

fn arb_vec6() -> impl Strategy<Value = Vec6> {
    proptest::collection::vec(arb_gscalar(), 6)
        .prop_map(|c| Vec6(std::array::from_fn(|k| c[k].clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_field_axioms(a in arb_gscalar(), b in arb_gscalar(), c in arb_gscalar()) {
        prop_assert_eq!(Field::mul(&Field::mul(&a, &b), &c), Field::mul(&a, &Field::mul(&b, &c)));
        prop_assert_eq!(Field::mul(&a, &b.add(&c)), Field::mul(&a, &b).add(&Field::mul(&a, &c)));
        prop_assert_eq!(Field::mul(&a, &b), Field::mul(&b, &a));
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(Field::mul(&a, &inv), GScalar::one());
        }
    }

    #[test]
    fn sigma_is_an_involutive_automorphism(a in arb_gscalar(), b in arb_gscalar()) {
        prop_assert_eq!(a.conj_sigma().conj_sigma(), a.clone());
        prop_assert_eq!(
            Field::mul(&a, &b).conj_sigma(),
            Field::mul(&a.conj_sigma(), &b.conj_sigma())
        );
        prop_assert_eq!(a.add(&b).conj_sigma(), a.conj_sigma().add(&b.conj_sigma()));
    }

    #[test]
    fn abs2_is_multiplicative_and_definite(a in arb_gscalar(), b in arb_gscalar()) {
        prop_assert_eq!(Field::mul(&a, &b).abs2(), Field::mul(&a.abs2(), &b.abs2()));
        prop_assert_eq!(a.abs2().is_zero(), a.is_zero());
    }

    #[test]
    fn octonion_norm_composes(x in arb_octonion(), y in arb_octonion()) {
        let xy = &x * &y;
        prop_assert_eq!(xy.norm_form(), Field::mul(&x.norm_form(), &y.norm_form()));
    }

    #[test]
    fn octonions_are_alternative_and_flexible(x in arb_octonion(), y in arb_octonion()) {
        let sq = &x * &x;
        prop_assert_eq!(&sq * &y, &x * &(&x * &y));
        prop_assert_eq!(&y * &sq, &(&y * &x) * &x);
        prop_assert_eq!(&x * &(&y * &x), &(&x * &y) * &x);
    }

    #[test]
    fn conjugation_is_an_anti_automorphism(x in arb_octonion(), y in arb_octonion()) {
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
    }

    #[test]
    fn jordan_product_is_commutative_with_symmetric_forms(
        x in arb_herm3(),
        y in arb_herm3(),
    ) {
        prop_assert_eq!(x.jordan_mul(&y), y.jordan_mul(&x));
        prop_assert_eq!(x.bilinear(&y), y.bilinear(&x));
        prop_assert_eq!(x.cross(&y), y.cross(&x));
    }

    #[test]
    fn determinant_routes_agree(x in arb_herm3()) {
        prop_assert_eq!(x.det(), x.det_via_trilinear());
        let xx = x.cross(&x);
        prop_assert_eq!(x.scale(&x.det()), xx.cross(&xx));
    }

    #[test]
    fn wedge_is_alternating_and_embedding_round_trips(x in arb_vec6(), y in arb_vec6()) {
        let u = wedge2(&x, &y);
        prop_assert!(wedge2(&x, &x).is_zero());
        prop_assert_eq!(&u, &-&wedge2(&y, &x));
        let l = Subspace::from_spanning(&[x, y]);
        if l.dim() == 2 {
            let ray = plucker_embed(&l).unwrap();
            prop_assert_eq!(inverse_plucker(&ray).unwrap(), l);
        }
    }

    #[test]
    fn projective_normalization_is_canonical(x in arb_herm3(), s in arb_gscalar()) {
        if let Ok(p) = ProjPoint::new(x.clone()) {
            if !s.is_zero() {
                let q = ProjPoint::new(x.scale(&s)).unwrap();
                prop_assert_eq!(p, q);
            }
        }
    }
}
