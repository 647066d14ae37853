//! The exceptional Jordan algebra: hermitian 3x3 matrices over the level-3
//! Cayley-Dickson algebra, with the Jordan product, trace and bilinear form,
//! the symmetric trilinear form, the determinant and the Freudenthal cross
//! product.
//!
//! An element is stored as three diagonal scalars and three octonion entries,
//! `X = (xi_1, xi_2, xi_3; x_1, x_2, x_3)`, the off-diagonal entry `x_i`
//! sitting opposite the diagonal slot `i`. All products are computed by the
//! componentwise closed formulas; full 3x3 octonion matrix multiplication is
//! deliberately not part of the public surface (it invites non-associativity
//! mistakes), though the test suite uses it as an oracle.
//!
//! The determinant and the cross product each have two independent
//! implementations - a trace-based one and a componentwise one - and the
//! suites cross-check them against each other.

use crate::cayley::CDNum;
use crate::scalar::Field;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Cyclic index triple; only `(1,2,3)`, `(2,3,1)`, `(3,1,2)` exist
/// (0-indexed internally).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CyclicTriple {
    i: usize,
    j: usize,
    k: usize,
}

pub const CYCLIC_TRIPLES: [CyclicTriple; 3] = [
    CyclicTriple { i: 0, j: 1, k: 2 },
    CyclicTriple { i: 1, j: 2, k: 0 },
    CyclicTriple { i: 2, j: 0, k: 1 },
];

impl CyclicTriple {
    pub fn i(&self) -> usize {
        self.i
    }
    pub fn j(&self) -> usize {
        self.j
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// One-based label, e.g. `(1,2,3)`.
    pub fn label(&self) -> String {
        format!("({},{},{})", self.i + 1, self.j + 1, self.k + 1)
    }
}

pub const DIM: usize = 27;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Herm3<K> {
    pub xi: [K; 3],
    pub x: [CDNum<K>; 3],
}

fn br<K: Field>(a: &CDNum<K>, b: &CDNum<K>) -> K {
    a.bracket(b).expect("entries share level 3")
}

impl<K: Field> Herm3<K> {
    pub fn new(xi: [K; 3], x: [CDNum<K>; 3]) -> Self {
        assert!(x.iter().all(|e| e.level() == 3), "entries must be octonions");
        Herm3 { xi, x }
    }

    pub fn zero() -> Self {
        Herm3 {
            xi: [K::zero(), K::zero(), K::zero()],
            x: [CDNum::zero(3), CDNum::zero(3), CDNum::zero(3)],
        }
    }

    /// The unit matrix `I`.
    pub fn identity() -> Self {
        let mut z = Self::zero();
        for i in 0..3 {
            z.xi[i] = K::one();
        }
        z
    }

    /// Diagonal idempotent `E_{i+1}` (0-indexed slot).
    pub fn diag_unit(i: usize) -> Self {
        let mut z = Self::zero();
        z.xi[i] = K::one();
        z
    }

    /// Element with a single octonion basis unit `e_a` in slot `s`.
    pub fn oct_unit(s: usize, a: usize) -> Self {
        let mut z = Self::zero();
        z.x[s] = CDNum::unit(3, a).expect("octonion unit");
        z
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(|c| c.is_zero()) && self.x.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, s: &K) -> Self {
        Herm3 {
            xi: [self.xi[0].mul(s), self.xi[1].mul(s), self.xi[2].mul(s)],
            x: [self.x[0].scale(s), self.x[1].scale(s), self.x[2].scale(s)],
        }
    }

    fn half(&self) -> Self {
        Herm3 {
            xi: [self.xi[0].half(), self.xi[1].half(), self.xi[2].half()],
            x: [
                self.x[0].scale(&K::one().half()),
                self.x[1].scale(&K::one().half()),
                self.x[2].scale(&K::one().half()),
            ],
        }
    }

    /// Jordan product `X o Y = (XY + YX)/2` by the componentwise formula.
    pub fn jordan_mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for t in CYCLIC_TRIPLES {
            let (i, j, k) = (t.i, t.j, t.k);
            // zeta_i = xi_i eta_i + <x_j|y_j>/2 + <x_k|y_k>/2
            out.xi[i] = self.xi[i]
                .mul(&rhs.xi[i])
                .add(&br(&self.x[j], &rhs.x[j]).half())
                .add(&br(&self.x[k], &rhs.x[k]).half());
            // z_i = ((xi_j+xi_k) y_i + (eta_j+eta_k) x_i
            //        + conj(y_j x_k) + conj(x_j y_k)) / 2
            let lhs_diag = self.xi[j].add(&self.xi[k]);
            let rhs_diag = rhs.xi[j].add(&rhs.xi[k]);
            let mut z = &rhs.x[i].scale(&lhs_diag) + &self.x[i].scale(&rhs_diag);
            z = &z + &(&rhs.x[j] * &self.x[k]).conj();
            z = &z + &(&self.x[j] * &rhs.x[k]).conj();
            out.x[i] = z.scale(&K::one().half());
        }
        out
    }

    pub fn trace(&self) -> K {
        self.xi[0].add(&self.xi[1]).add(&self.xi[2])
    }

    /// Bilinear form `(X,Y)` by the closed formula
    /// `sum xi_i eta_i + sum <x_i|y_i>`.
    pub fn bilinear(&self, rhs: &Self) -> K {
        let mut acc = K::zero();
        for i in 0..3 {
            acc = acc.add(&self.xi[i].mul(&rhs.xi[i]));
            acc = acc.add(&br(&self.x[i], &rhs.x[i]));
        }
        acc
    }

    /// Bilinear form computed as `tr(X o Y)`; must agree with [`bilinear`].
    ///
    /// [`bilinear`]: Herm3::bilinear
    pub fn bilinear_via_trace(&self, rhs: &Self) -> K {
        self.jordan_mul(rhs).trace()
    }

    /// Symmetric trilinear form `(X,Y,Z)` from the trace expansion.
    pub fn trilinear(&self, y: &Self, z: &Self) -> K {
        let txy = self.bilinear(y);
        let txz = self.bilinear(z);
        let tyz = y.bilinear(z);
        let (tx, ty, tz) = (self.trace(), y.trace(), z.trace());
        // 3(X,Y,Z) = tr(XoYoZ) - tr(X)tr(YoZ)/2 - tr(Y)tr(XoZ)/2
        //            - tr(Z)tr(XoY)/2 + tr(X)tr(Y)tr(Z)/2
        let mut acc = self.jordan_mul(y).bilinear(z);
        acc = acc.sub(&tx.mul(&tyz).half());
        acc = acc.sub(&ty.mul(&txz).half());
        acc = acc.sub(&tz.mul(&txy).half());
        acc = acc.add(&tx.mul(&ty).mul(&tz).half());
        acc.mul(&K::from_int(3).inv().expect("3 invertible"))
    }

    /// Determinant by the closed formula
    /// `xi_1 xi_2 xi_3 - sum xi_i N(x_i) + 2 Re(x_1 x_2 x_3)`.
    pub fn det(&self) -> K {
        let mut acc = self.xi[0].mul(&self.xi[1]).mul(&self.xi[2]);
        for i in 0..3 {
            acc = acc.sub(&self.xi[i].mul(&self.x[i].norm_form()));
        }
        let re = (&(&self.x[0] * &self.x[1]) * &self.x[2]).re_part();
        acc.add(&re).add(&re)
    }

    /// Determinant as `(X,X,X)`; must agree with [`det`].
    ///
    /// [`det`]: Herm3::det
    pub fn det_via_trilinear(&self) -> K {
        self.trilinear(self, self)
    }

    /// Freudenthal cross product by the componentwise formula (fast path).
    pub fn cross(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for t in CYCLIC_TRIPLES {
            let (i, j, k) = (t.i, t.j, t.k);
            // 2 zeta_i = xi_j eta_k + xi_k eta_j - <x_i|y_i>
            out.xi[i] = self.xi[j]
                .mul(&rhs.xi[k])
                .add(&self.xi[k].mul(&rhs.xi[j]))
                .sub(&br(&self.x[i], &rhs.x[i]))
                .half();
            // 2 z_i = conj(y_j x_k) + conj(x_j y_k) - xi_i y_i - eta_i x_i
            let mut z = &(&rhs.x[j] * &self.x[k]).conj() + &(&self.x[j] * &rhs.x[k]).conj();
            z = &z - &rhs.x[i].scale(&self.xi[i]);
            z = &z - &self.x[i].scale(&rhs.xi[i]);
            out.x[i] = z.scale(&K::one().half());
        }
        out
    }

    /// Cross product through the Jordan-product expression
    /// `X o Y - (Y,I)X/2 - (X,I)Y/2 - (X,Y)I/2 + (X,I)(Y,I)I/2`;
    /// must agree with [`cross`].
    ///
    /// [`cross`]: Herm3::cross
    pub fn cross_via_jordan(&self, rhs: &Self) -> Self {
        let mut out = self.jordan_mul(rhs);
        out = &out - &self.scale(&rhs.trace()).half();
        out = &out - &rhs.scale(&self.trace()).half();
        let c = self
            .trace()
            .mul(&rhs.trace())
            .sub(&self.bilinear(rhs))
            .half();
        &out + &Self::identity().scale(&c)
    }

    /// The canonical 27-element basis: `E_1, E_2, E_3`, then for each
    /// octonion slot `s = 1,2,3` the units `e_0..e_7`.
    pub fn basis27() -> Vec<Self> {
        let mut out = Vec::with_capacity(DIM);
        for i in 0..3 {
            out.push(Self::diag_unit(i));
        }
        for s in 0..3 {
            for a in 0..8 {
                out.push(Self::oct_unit(s, a));
            }
        }
        out
    }

    /// Coordinates in the [`basis27`] ordering.
    ///
    /// [`basis27`]: Herm3::basis27
    pub fn coords(&self) -> Vec<K> {
        let mut out = Vec::with_capacity(DIM);
        out.extend(self.xi.iter().cloned());
        for s in 0..3 {
            out.extend(self.x[s].coeffs().iter().cloned());
        }
        out
    }

    pub fn from_coords(c: &[K]) -> Self {
        assert_eq!(c.len(), DIM);
        Herm3 {
            xi: [c[0].clone(), c[1].clone(), c[2].clone()],
            x: [
                CDNum::new(3, c[3..11].to_vec()).unwrap(),
                CDNum::new(3, c[11..19].to_vec()).unwrap(),
                CDNum::new(3, c[19..27].to_vec()).unwrap(),
            ],
        }
    }

    /// Gram diagonal of `(.,.)` on the canonical basis: 1 on the diagonal
    /// slots, 2 on the octonion slots.
    pub fn gram_diag() -> Vec<K> {
        let mut g = vec![K::one(); 3];
        g.extend(std::iter::repeat_n(K::from_int(2), 24));
        g
    }

    /// Coefficientwise application of the field involution sigma.
    pub fn apply_sigma(&self) -> Self {
        Herm3 {
            xi: [
                self.xi[0].conj_sigma(),
                self.xi[1].conj_sigma(),
                self.xi[2].conj_sigma(),
            ],
            x: [
                self.x[0].apply_sigma(),
                self.x[1].apply_sigma(),
                self.x[2].apply_sigma(),
            ],
        }
    }

    pub fn close_to(&self, rhs: &Self) -> bool {
        self.xi
            .iter()
            .zip(&rhs.xi)
            .all(|(a, b)| a.close_to(b))
            && self.x.iter().zip(&rhs.x).all(|(a, b)| a.close_to(b))
    }
}

impl<K: Field> Add for &Herm3<K> {
    type Output = Herm3<K>;
    fn add(self, rhs: &Herm3<K>) -> Herm3<K> {
        Herm3 {
            xi: [
                self.xi[0].add(&rhs.xi[0]),
                self.xi[1].add(&rhs.xi[1]),
                self.xi[2].add(&rhs.xi[2]),
            ],
            x: [
                &self.x[0] + &rhs.x[0],
                &self.x[1] + &rhs.x[1],
                &self.x[2] + &rhs.x[2],
            ],
        }
    }
}

impl<K: Field> Sub for &Herm3<K> {
    type Output = Herm3<K>;
    fn sub(self, rhs: &Herm3<K>) -> Herm3<K> {
        Herm3 {
            xi: [
                self.xi[0].sub(&rhs.xi[0]),
                self.xi[1].sub(&rhs.xi[1]),
                self.xi[2].sub(&rhs.xi[2]),
            ],
            x: [
                &self.x[0] - &rhs.x[0],
                &self.x[1] - &rhs.x[1],
                &self.x[2] - &rhs.x[2],
            ],
        }
    }
}

impl<K: Field> Neg for &Herm3<K> {
    type Output = Herm3<K>;
    fn neg(self) -> Herm3<K> {
        Herm3 {
            xi: [self.xi[0].neg(), self.xi[1].neg(), self.xi[2].neg()],
            x: [-&self.x[0], -&self.x[1], -&self.x[2]],
        }
    }
}

impl<K: Field> fmt::Display for Herm3<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}; {}, {}, {})",
            self.xi[0], self.xi[1], self.xi[2], self.x[0], self.x[1], self.x[2]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::scalar::{rat, rat_int, Rational};

    fn sample(rng: &mut SplitMix64) -> Herm3<Rational> {
        let c: Vec<Rational> = (0..DIM)
            .map(|_| rat(rng.int_in(-5, 5), *rng.pick(&[1, 2, 3, 5])))
            .collect();
        Herm3::from_coords(&c)
    }

    #[test]
    fn unit_element() {
        let mut rng = SplitMix64::new(3);
        let x = sample(&mut rng);
        let i = Herm3::identity();
        assert_eq!(i.jordan_mul(&x), x);
    }

    #[test]
    fn orthogonal_idempotents() {
        let e1 = Herm3::<Rational>::diag_unit(0);
        let e2 = Herm3::<Rational>::diag_unit(1);
        assert!(e1.jordan_mul(&e2).is_zero());
        assert_eq!(e1.jordan_mul(&e1), e1);
    }

    #[test]
    fn square_matches_closed_formula() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..20 {
            let x = sample(&mut rng);
            let sq = x.jordan_mul(&x);
            for t in CYCLIC_TRIPLES {
                let (i, j, k) = (t.i(), t.j(), t.k());
                // zeta_i = xi_i^2 + N(x_j) + N(x_k)
                let want = &x.xi[i] * &x.xi[i] + x.x[j].norm_form() + x.x[k].norm_form();
                assert_eq!(sq.xi[i], want);
                // z_i = (xi_j + xi_k) x_i + conj(x_j x_k)
                let want_z =
                    &x.x[i].scale(&(&x.xi[j] + &x.xi[k])) + &(&x.x[j] * &x.x[k]).conj();
                assert_eq!(sq.x[i], want_z);
            }
        }
    }

    #[test]
    fn trace_examples() {
        assert_eq!(Herm3::<Rational>::identity().trace(), rat_int(3));
        assert_eq!(Herm3::<Rational>::diag_unit(0).trace(), rat_int(1));
    }

    #[test]
    fn bilinear_routes_agree_and_examples() {
        let e1 = Herm3::<Rational>::diag_unit(0);
        let e2 = Herm3::<Rational>::diag_unit(1);
        assert_eq!(e1.bilinear(&e1), rat_int(1));
        assert_eq!(e1.bilinear(&e2), rat_int(0));
        let mut rng = SplitMix64::new(21);
        for _ in 0..15 {
            let (x, y) = (sample(&mut rng), sample(&mut rng));
            assert_eq!(x.bilinear(&y), x.bilinear_via_trace(&y));
            assert_eq!(x.bilinear(&y), y.bilinear(&x));
        }
    }

    #[test]
    fn bilinear_is_associative_for_the_jordan_product() {
        let mut rng = SplitMix64::new(33);
        for _ in 0..15 {
            let (x, y, z) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            assert_eq!(
                x.bilinear(&y.jordan_mul(&z)),
                x.jordan_mul(&y).bilinear(&z)
            );
        }
    }

    #[test]
    fn trilinear_examples() {
        let i = Herm3::<Rational>::identity();
        assert_eq!(i.trilinear(&i, &i), rat_int(1));
        let e1 = Herm3::<Rational>::diag_unit(0);
        let e2 = Herm3::<Rational>::diag_unit(1);
        let e3 = Herm3::<Rational>::diag_unit(2);
        assert_eq!(e1.trilinear(&e2, &e3), rat(1, 6));
    }

    #[test]
    fn trilinear_is_fully_symmetric() {
        let mut rng = SplitMix64::new(41);
        for _ in 0..10 {
            let (x, y, z) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            let v = x.trilinear(&y, &z);
            assert_eq!(v, x.trilinear(&z, &y));
            assert_eq!(v, y.trilinear(&x, &z));
            assert_eq!(v, y.trilinear(&z, &x));
            assert_eq!(v, z.trilinear(&x, &y));
            assert_eq!(v, z.trilinear(&y, &x));
        }
    }

    #[test]
    fn det_examples_and_route_agreement() {
        assert_eq!(Herm3::<Rational>::identity().det(), rat_int(1));
        assert_eq!(Herm3::<Rational>::diag_unit(0).det(), rat_int(0));
        let mut rng = SplitMix64::new(55);
        for _ in 0..15 {
            let x = sample(&mut rng);
            assert_eq!(x.det(), x.det_via_trilinear());
        }
    }

    #[test]
    fn six_term_polarization() {
        let mut rng = SplitMix64::new(60);
        for _ in 0..10 {
            let (x, y, z) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            let mut six = (&(&x + &y) + &z).det();
            six = six.sub(&(&x + &y).det());
            six = six.sub(&(&x + &z).det());
            six = six.sub(&(&y + &z).det());
            six = six.add(&x.det()).add(&y.det()).add(&z.det());
            assert_eq!(x.trilinear(&y, &z) * rat_int(6), six);
        }
    }

    #[test]
    fn cross_examples() {
        let e1 = Herm3::<Rational>::diag_unit(0);
        let e2 = Herm3::<Rational>::diag_unit(1);
        let e3 = Herm3::<Rational>::diag_unit(2);
        assert_eq!(e1.cross(&e2), e3.scale(&rat(1, 2)));
    }

    #[test]
    fn cross_square_matches_closed_formula() {
        let mut rng = SplitMix64::new(71);
        for _ in 0..15 {
            let x = sample(&mut rng);
            let c = x.cross(&x);
            for t in CYCLIC_TRIPLES {
                let (i, j, k) = (t.i(), t.j(), t.k());
                // zeta_i = xi_j xi_k - N(x_i)
                assert_eq!(
                    c.xi[i],
                    x.xi[j].mul(&x.xi[k]).sub(&x.x[i].norm_form())
                );
                // z_i = conj(x_j x_k) - xi_i x_i
                assert_eq!(
                    c.x[i],
                    &(&x.x[j] * &x.x[k]).conj() - &x.x[i].scale(&x.xi[i])
                );
            }
        }
    }

    #[test]
    fn cross_routes_agree() {
        let mut rng = SplitMix64::new(77);
        for _ in 0..10 {
            let (x, y) = (sample(&mut rng), sample(&mut rng));
            assert_eq!(x.cross(&y), x.cross_via_jordan(&y));
            assert_eq!(x.cross(&y), y.cross(&x));
        }
    }

    #[test]
    fn cross_is_dual_to_the_trilinear_form() {
        // (X x Y, Z) = 3 (X,Y,Z) on every basis Z; complete by bilinearity.
        let mut rng = SplitMix64::new(81);
        let basis = Herm3::<Rational>::basis27();
        let (x, y) = (sample(&mut rng), sample(&mut rng));
        let c = x.cross(&y);
        for z in &basis {
            assert_eq!(c.bilinear(z), x.trilinear(&y, z) * rat_int(3));
        }
    }

    #[test]
    fn jordan_identity() {
        let mut rng = SplitMix64::new(90);
        for _ in 0..10 {
            let (x, y) = (sample(&mut rng), sample(&mut rng));
            let sq = x.jordan_mul(&x);
            assert_eq!(
                sq.jordan_mul(&y).jordan_mul(&x),
                sq.jordan_mul(&y.jordan_mul(&x))
            );
            assert_eq!(x.jordan_mul(&y), y.jordan_mul(&x));
        }
    }

    #[test]
    fn adjoint_identity() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..10 {
            let x = sample(&mut rng);
            let xx = x.cross(&x);
            assert_eq!(x.scale(&x.det()), xx.cross(&xx));
        }
    }

    #[test]
    fn basis_has_27_elements_with_the_expected_gram() {
        let basis = Herm3::<Rational>::basis27();
        assert_eq!(basis.len(), 27);
        let g = Herm3::<Rational>::gram_diag();
        for (a, ba) in basis.iter().enumerate() {
            for (b, bb) in basis.iter().enumerate() {
                let want = if a == b { g[a].clone() } else { rat_int(0) };
                assert_eq!(ba.bilinear(bb), want);
            }
        }
        // the identity is spanned exactly by the three diagonal units
        let i = &(&basis[0] + &basis[1]) + &basis[2];
        assert_eq!(i, Herm3::identity());
    }

    #[test]
    fn coords_round_trip() {
        let mut rng = SplitMix64::new(101);
        let x = sample(&mut rng);
        assert_eq!(Herm3::from_coords(&x.coords()), x);
    }
}
