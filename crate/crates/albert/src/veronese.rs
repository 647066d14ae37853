//! Veronese vectors and the projective geometry living on them: the
//! semilinear map `H` and hermitian form `h` (with their real restrictions
//! `B` and `beta`), weak and strong isotropy of points, V-incidence with
//! symplecta, and collinearity.
//!
//! Strong isotropy is the condition `4 H(X) x (X x T) = h(T,X) X` for all
//! `T`. Both sides are complex-linear in `T`, so checking the 27 basis
//! matrices decides the condition exactly - no sampling involved. The same
//! argument reduces the `t`-dependent coordinate equation families to the 8
//! basis octonions. The coordinate equation system is an independent second
//! route and the two verdicts are cross-checked wherever points are
//! classified.

use crate::cayley::CDNum;
use crate::jordan::{Herm3, CYCLIC_TRIPLES};
use crate::linalg::Mat;
use crate::rng::SplitMix64;
use crate::scalar::{Field, GScalar, Rational};
use std::fmt;

pub type HermC = Herm3<GScalar>;
pub type OctC = CDNum<GScalar>;

/// Fixed sign vector `(sigma_1, sigma_2, sigma_3) = (-1, -1, 1)` of the
/// coordinate equations; mirrors the sign pattern of `H` on the slots.
pub const SIGNS: [i64; 3] = [-1, -1, 1];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsotropyError {
    ZeroVector,
    NotVeronese,
    NotWeaklyIsotropic,
}

impl fmt::Display for IsotropyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsotropyError::ZeroVector => write!(f, "zero vector rejected"),
            IsotropyError::NotVeronese => write!(f, "representative is not a Veronese vector"),
            IsotropyError::NotWeaklyIsotropic => write!(f, "point is not weakly isotropic"),
        }
    }
}

impl std::error::Error for IsotropyError {}

/// A projective point with a canonically normalized Veronese-algebra
/// representative: the first nonzero coordinate (diagonal scalars first,
/// then the octonion slots coefficientwise) is scaled to 1, so structural
/// equality is projective equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    rep: HermC,
}

impl ProjPoint {
    pub fn new(rep: HermC) -> Result<Self, IsotropyError> {
        let coords = rep.coords();
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(IsotropyError::ZeroVector)?;
        let inv = lead.inv().expect("nonzero leading coordinate");
        Ok(ProjPoint {
            rep: rep.scale(&inv),
        })
    }

    pub fn rep(&self) -> &HermC {
        &self.rep
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

/// The six Veronese conditions `N(x_i) = xi_j xi_k`, `xi_i conj(x_i) = x_j x_k`.
fn veronese_conditions<K: Field>(x: &Herm3<K>) -> bool {
    for t in CYCLIC_TRIPLES {
        let (i, j, k) = (t.i(), t.j(), t.k());
        if x.x[i].norm_form() != x.xi[j].mul(&x.xi[k]) {
            return false;
        }
        if x.x[i].conj().scale(&x.xi[i]) != &x.x[j] * &x.x[k] {
            return false;
        }
    }
    true
}

/// True iff `x` is a nonzero element with `x cross x = 0`. Decided through
/// the six coordinate conditions and through the cross product; the two
/// must agree.
pub fn is_veronese<K: Field>(x: &Herm3<K>) -> bool {
    if x.is_zero() {
        return false;
    }
    let by_conditions = veronese_conditions(x);
    let by_cross = x.cross(x).is_zero();
    assert_eq!(
        by_conditions, by_cross,
        "Veronese conditions and the cross-product square disagree"
    );
    by_conditions
}

/// The semilinear involution `H(xi; x) = (conj xi; -conj x_1, -conj x_2, conj x_3)`
/// (complex conjugation on every coefficient, then the slot sign pattern).
pub fn map_h(x: &HermC) -> HermC {
    slot_signed(&x.apply_sigma())
}

/// Restriction of `H` to the real subalgebra.
pub fn map_b(x: &Herm3<Rational>) -> Herm3<Rational> {
    slot_signed(x)
}

fn slot_signed<K: Field>(x: &Herm3<K>) -> Herm3<K> {
    Herm3 {
        xi: x.xi.clone(),
        x: [-&x.x[0], -&x.x[1], x.x[2].clone()],
    }
}

/// The sigma-hermitian form
/// `h(X,Y) = sum xi_i conj(eta_i) - <x_1|conj y_1> - <x_2|conj y_2> + <x_3|conj y_3>`,
/// equal to `(X, H(Y))`. Linear in the first argument.
pub fn form_h(x: &HermC, y: &HermC) -> GScalar {
    let mut acc = GScalar::zero();
    for i in 0..3 {
        acc = acc.add(&Field::mul(&x.xi[i], &y.xi[i].conj_sigma()));
        let term = x.x[i]
            .bracket(&y.x[i].apply_sigma())
            .expect("entries share level 3");
        acc = if SIGNS[i] < 0 {
            acc.sub(&term)
        } else {
            acc.add(&term)
        };
    }
    debug_assert_eq!(acc, x.bilinear(&map_h(y)), "h route disagreement");
    acc
}

/// The symmetric bilinear form `beta(X,Y) = (X, B(Y))` on the real subalgebra.
pub fn form_beta(x: &Herm3<Rational>, y: &Herm3<Rational>) -> Rational {
    x.bilinear(&map_b(y))
}

fn require_veronese(p: &ProjPoint) -> Result<(), IsotropyError> {
    if is_veronese(&p.rep) {
        Ok(())
    } else {
        Err(IsotropyError::NotVeronese)
    }
}

/// Weak isotropy: `h(X,X) = 0`. Requires a Veronese representative.
pub fn is_weakly_isotropic(p: &ProjPoint) -> Result<bool, IsotropyError> {
    require_veronese(p)?;
    Ok(form_h(&p.rep, &p.rep).is_zero())
}

fn require_weak(p: &ProjPoint) -> Result<(), IsotropyError> {
    if is_weakly_isotropic(p)? {
        Ok(())
    } else {
        Err(IsotropyError::NotWeaklyIsotropic)
    }
}

/// Strong isotropy by the defining identity: `4 H(X) x (X x T) = h(T,X) X`
/// for all 27 basis matrices `T` (complete by complex-linearity in `T`).
/// Requires a weakly isotropic Veronese point.
pub fn is_strongly_isotropic(p: &ProjPoint) -> Result<bool, IsotropyError> {
    require_weak(p)?;
    let x = &p.rep;
    let h = map_h(x);
    let four = GScalar::from_int(4);
    for t in HermC::basis27() {
        let lhs = h.cross(&x.cross(&t)).scale(&four);
        let rhs = x.scale(&form_h(&t, x));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reference to a violated coordinate equation: family `1..=9`, cyclic
/// triple index `0..3`, and for the `t`-dependent families `7..=9` the basis
/// octonion index `0..8`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EquationRef {
    pub family: u8,
    pub triple: u8,
    pub basis_t: Option<u8>,
}

impl fmt::Display for EquationRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family {} at triple {}",
            self.family,
            CYCLIC_TRIPLES[self.triple as usize].label()
        )?;
        if let Some(b) = self.basis_t {
            write!(f, " with t = e{b}")?;
        }
        Ok(())
    }
}

fn sgn(i: usize, v: &OctC) -> OctC {
    if SIGNS[i] < 0 {
        -v
    } else {
        v.clone()
    }
}

fn sgn_s(i: usize, v: &GScalar) -> GScalar {
    if SIGNS[i] < 0 {
        v.neg()
    } else {
        v.clone()
    }
}

/// First violated coordinate equation, or `None` when all hold.
pub fn appendix_violation(x: &HermC) -> Option<EquationRef> {
    appendix_violations(x, true).pop()
}

/// Mechanical evaluation of the nine coordinate equation families; returns
/// the violated equations (all, or just the first when `first_only` is
/// set). Family 1 is the weak-isotropy equation, family 2 the diagonal norm
/// balance, families 3-6 the octonion-linear equations, and families 7-9
/// the `t`-dependent ones, decided on the 8 basis octonions `t` (complete
/// by linearity in `t`).
pub fn appendix_violations(x: &HermC, first_only: bool) -> Vec<EquationRef> {
    let mut found = Vec::new();
    let abs2 = |i: usize| -> GScalar {
        let xi = &x.xi[i];
        Field::mul(xi, &xi.conj_sigma())
    };
    let bar = |i: usize| -> OctC { x.x[i].apply_sigma() };
    let bk = |a: &OctC, b: &OctC| -> GScalar { a.bracket(b).expect("level 3") };

    // family 1: |xi_1|^2+|xi_2|^2+|xi_3|^2 = <x_1|xbar_1> + <x_2|xbar_2> - <x_3|xbar_3>
    {
        let lhs = abs2(0).add(&abs2(1)).add(&abs2(2));
        let rhs = bk(&x.x[0], &bar(0))
            .add(&bk(&x.x[1], &bar(1)))
            .sub(&bk(&x.x[2], &bar(2)));
        if lhs != rhs {
            found.push(EquationRef {
                family: 1,
                triple: 0,
                basis_t: None,
            });
            if first_only {
                return found;
            }
        }
    }

    for (tix, t) in CYCLIC_TRIPLES.iter().enumerate() {
        let (i, j, k) = (t.i(), t.j(), t.k());
        let eqref = |family: u8, basis_t: Option<u8>| EquationRef {
            family,
            triple: tix as u8,
            basis_t,
        };
        let xibar = |m: usize| x.xi[m].conj_sigma();

        // family 2: |xi_j|^2 + |xi_k|^2 + sigma_i <x_i|xbar_i> = |xi_i|^2
        let lhs = abs2(j).add(&abs2(k)).add(&sgn_s(i, &bk(&x.x[i], &bar(i))));
        if lhs != abs2(i) {
            found.push(eqref(2, None));
            if first_only {
                return found;
            }
        }

        // family 3: xibar_k x_j + sigma_i conj(x_k xbar_i) = -sigma_j xi_i xbar_j
        let lhs = &x.x[j].scale(&xibar(k)) + &sgn(i, &(&x.x[k] * &bar(i)).conj());
        let rhs = -&sgn(j, &bar(j).scale(&x.xi[i]));
        if lhs != rhs {
            found.push(eqref(3, None));
            if first_only {
                return found;
            }
        }

        // family 4: xibar_j x_k + sigma_i conj(xbar_i x_j) = -sigma_k xi_i xbar_k
        let lhs = &x.x[k].scale(&xibar(j)) + &sgn(i, &(&bar(i) * &x.x[j]).conj());
        let rhs = -&sgn(k, &bar(k).scale(&x.xi[i]));
        if lhs != rhs {
            found.push(eqref(4, None));
            if first_only {
                return found;
            }
        }

        // family 5: sigma_i xi_k xbar_i + sigma_k conj(x_j xbar_k) = -xibar_j x_i
        let lhs = &sgn(i, &bar(i).scale(&x.xi[k])) + &sgn(k, &(&x.x[j] * &bar(k)).conj());
        let rhs = -&x.x[i].scale(&xibar(j));
        if lhs != rhs {
            found.push(eqref(5, None));
            if first_only {
                return found;
            }
        }

        // family 6: sigma_i xi_j xbar_i + sigma_j conj(xbar_j x_k) = -xibar_k x_i
        let lhs = &sgn(i, &bar(i).scale(&x.xi[j])) + &sgn(j, &(&bar(j) * &x.x[k]).conj());
        let rhs = -&x.x[i].scale(&xibar(k));
        if lhs != rhs {
            found.push(eqref(6, None));
            if first_only {
                return found;
            }
        }

        for b in 0..8u8 {
            let tb: OctC = CDNum::unit(3, b as usize).expect("octonion unit");

            // family 7: sigma_j (t x_j) conj(xbar_j) + sigma_k conj(xbar_k)(x_k t)
            //           + |xi_i|^2 t + sigma_i <x_i|t> xbar_i = sigma_i <xbar_i|t> x_i
            let mut lhs = sgn(j, &(&(&tb * &x.x[j]) * &bar(j).conj()));
            lhs = &lhs + &sgn(k, &(&bar(k).conj() * &(&x.x[k] * &tb)));
            lhs = &lhs + &tb.scale(&abs2(i));
            lhs = &lhs + &sgn(i, &bar(i).scale(&bk(&x.x[i], &tb)));
            let rhs = sgn(i, &x.x[i].scale(&bk(&bar(i), &tb)));
            if lhs != rhs {
                found.push(eqref(7, Some(b)));
                if first_only {
                    return found;
                }
            }

            // family 8: sigma_j (x_i t) conj(xbar_j) - sigma_k xi_j conj(t xbar_k)
            //           - xibar_i conj(t x_k) = sigma_j <xbar_j|t> x_i
            let mut lhs = sgn(j, &(&(&x.x[i] * &tb) * &bar(j).conj()));
            lhs = &lhs - &sgn(k, &(&tb * &bar(k)).conj().scale(&x.xi[j]));
            lhs = &lhs - &(&tb * &x.x[k]).conj().scale(&xibar(i));
            let rhs = sgn(j, &x.x[i].scale(&bk(&bar(j), &tb)));
            if lhs != rhs {
                found.push(eqref(8, Some(b)));
                if first_only {
                    return found;
                }
            }

            // family 9: -sigma_j xi_k conj(xbar_j t) + sigma_k conj(xbar_k)(t x_i)
            //           - xibar_i conj(x_j t) = sigma_k <xbar_k|t> x_i
            let mut lhs = -&sgn(j, &(&bar(j) * &tb).conj().scale(&x.xi[k]));
            lhs = &lhs + &sgn(k, &(&bar(k).conj() * &(&tb * &x.x[i])));
            lhs = &lhs - &(&x.x[j] * &tb).conj().scale(&xibar(i));
            let rhs = sgn(k, &x.x[i].scale(&bk(&bar(k), &tb)));
            if lhs != rhs {
                found.push(eqref(9, Some(b)));
                if first_only {
                    return found;
                }
            }
        }
    }
    found
}

/// Strong isotropy by the coordinate equation system. Same preconditions as
/// [`is_strongly_isotropic`]; the two procedures must agree on every input.
pub fn is_strongly_isotropic_appendix(p: &ProjPoint) -> Result<bool, IsotropyError> {
    require_weak(p)?;
    Ok(appendix_violation(&p.rep).is_none())
}

/// Full classification certificate for one point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub veronese: bool,
    pub weak: Option<bool>,
    pub strong_defining: Option<bool>,
    pub strong_appendix: Option<bool>,
    pub failed_equation: Option<EquationRef>,
}

impl Classification {
    /// Whether the two strong-isotropy procedures agree (vacuously true when
    /// the preconditions ruled them out).
    pub fn agreement(&self) -> bool {
        self.strong_defining == self.strong_appendix
    }
}

/// Classify a nonzero element: Veronese, weakly isotropic, strongly
/// isotropic by both procedures plus the violated-equation certificate.
pub fn classify(x: &HermC) -> Result<Classification, IsotropyError> {
    let p = ProjPoint::new(x.clone())?;
    if !is_veronese(&p.rep) {
        return Ok(Classification {
            veronese: false,
            weak: None,
            strong_defining: None,
            strong_appendix: None,
            failed_equation: None,
        });
    }
    let weak = is_weakly_isotropic(&p)?;
    if !weak {
        return Ok(Classification {
            veronese: true,
            weak: Some(false),
            strong_defining: None,
            strong_appendix: None,
            failed_equation: None,
        });
    }
    let strong = is_strongly_isotropic(&p)?;
    let violation = appendix_violation(&p.rep);
    Ok(Classification {
        veronese: true,
        weak: Some(true),
        strong_defining: Some(strong),
        strong_appendix: Some(violation.is_none()),
        failed_equation: violation,
    })
}

/// V-incidence of the point `CX` with the symplecton generated by `Y`:
/// `(X,Y) = 0` and `4 Y x (X x T) = (T,Y) X` on all 27 basis `T` (complete
/// by linearity). Both generators must be Veronese.
pub fn v_incident(p: &ProjPoint, symplecton_gen: &HermC) -> Result<bool, IsotropyError> {
    require_veronese(p)?;
    if !is_veronese(symplecton_gen) {
        return Err(IsotropyError::NotVeronese);
    }
    let x = &p.rep;
    if !x.bilinear(symplecton_gen).is_zero() {
        return Ok(false);
    }
    let four = GScalar::from_int(4);
    for t in HermC::basis27() {
        let lhs = symplecton_gen.cross(&x.cross(&t)).scale(&four);
        let rhs = x.scale(&t.bilinear(symplecton_gen));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The linear span `X x H3` attached to a Veronese vector, with an exact
/// echelon basis obtained from the images of the 27 basis matrices.
#[derive(Clone, Debug)]
pub struct SymplectonSpace {
    pub generator: HermC,
    pub basis: Vec<HermC>,
}

impl SymplectonSpace {
    /// Complex dimension of the span.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &HermC) -> bool {
        let rows: Vec<Vec<GScalar>> = self.basis.iter().map(|b| b.coords()).collect();
        crate::linalg::in_span(&rows, &v.coords())
    }
}

pub fn symplecton(x: &HermC) -> Result<SymplectonSpace, IsotropyError> {
    if !is_veronese(x) {
        return Err(IsotropyError::NotVeronese);
    }
    let rows: Vec<Vec<GScalar>> = HermC::basis27()
        .iter()
        .map(|t| x.cross(t).coords())
        .collect();
    let basis = Mat::from_rows(rows)
        .row_space_basis()
        .into_iter()
        .map(|r| Herm3::from_coords(&r))
        .collect();
    Ok(SymplectonSpace {
        generator: x.clone(),
        basis,
    })
}

/// Collinearity of points: `X x Y = 0`. Scale-independent; requires
/// Veronese representatives.
pub fn collinear(p: &ProjPoint, q: &ProjPoint) -> Result<bool, IsotropyError> {
    require_veronese(p)?;
    require_veronese(q)?;
    Ok(p.rep.cross(&q.rep).is_zero())
}

// ---------------------------------------------------------------------------
// generator families and frozen fixtures
// ---------------------------------------------------------------------------

fn gauss(re: i64, im: i64) -> GScalar {
    GScalar::from_ints(re, im)
}

fn octc(parts: [(i64, i64); 8]) -> OctC {
    CDNum::new(3, parts.map(|(r, i)| gauss(r, i)).to_vec()).unwrap()
}

/// Gaussian-rational points on the unit circle, used as exact phases.
pub fn unit_phases() -> Vec<GScalar> {
    let mk = |a: i64, b: i64, d: i64| GScalar::new(crate::scalar::rat(a, d), crate::scalar::rat(b, d));
    vec![
        gauss(1, 0),
        gauss(-1, 0),
        gauss(0, 1),
        gauss(0, -1),
        mk(3, 4, 5),
        mk(3, -4, 5),
        mk(4, 3, 5),
        mk(5, 12, 13),
    ]
}

/// The frozen strongly isotropic regression point
/// `(0, 0, 1; u, u, v)` with `u = (1 + i e_1)/2`, `v = (1 - i e_1)/2`.
///
/// `u` and `v` are the orthogonal split idempotents of the complexified
/// level-1 subalgebra: `u^2 = u`, `v^2 = v`, `uv = 0`, `conj(u) = v`, and
/// complex conjugation also swaps them. These relations make every Veronese
/// condition and every coordinate equation collapse, which is how the point
/// was found; both strong-isotropy procedures certify it.
pub fn strong_fixture() -> ProjPoint {
    let u = octc([(1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)]);
    let v = u.apply_sigma();
    let x = Herm3::new(
        [GScalar::zero(), GScalar::zero(), gauss(2, 0)],
        [u.clone(), u, v],
    );
    ProjPoint::new(x).expect("fixture is nonzero")
}

/// A family of pairwise collinear strongly isotropic points through the
/// fixture: `(0, 0, 1; a u, u, a v)` for unit phases `a`.
pub fn collinear_strong_family() -> Vec<ProjPoint> {
    let u = octc([(1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)]);
    let v = u.apply_sigma();
    unit_phases()
        .into_iter()
        .map(|a| {
            // entries are twice the split idempotents, so the diagonal
            // Veronese condition xi_3 conj(x_3) = x_1 x_2 forces xi_3 = 2
            let x = Herm3::new(
                [GScalar::zero(), GScalar::zero(), gauss(2, 0)],
                [u.scale(&a), u.clone(), v.scale(&a)],
            );
            ProjPoint::new(x).expect("family member is nonzero")
        })
        .collect()
}

/// Weakly-but-not-strongly isotropic witness `(2, 0, 0; 0, 1 + i e_1, 0)`.
pub fn weak_not_strong_witness() -> ProjPoint {
    let x2 = octc([(1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)]);
    let x = Herm3::new(
        [gauss(2, 0), GScalar::zero(), GScalar::zero()],
        [CDNum::zero(3), x2, CDNum::zero(3)],
    );
    ProjPoint::new(x).expect("witness is nonzero")
}

/// Deterministic stream of Veronese, weakly isotropic points.
///
/// Base family: `(xi_1, 0, 0; 0, p + i q, 0)` with real octonions `p`, `q`
/// satisfying `N(p) = N(q)` and `<p|q> = 0` (so the slot-2 entry is null)
/// and `|xi_1|^2 = <x_2|conj x_2>`. Slot 3 alone cannot carry a weakly
/// isotropic point because `h` is positive on it; slots 1 and 2 carry the
/// minus signs of `h`. Half of the outputs are additionally pushed through
/// short random words of the built-in group generators, which preserve both
/// properties. Every output is checked before it is returned.
pub fn generate_weak_points(count: usize, seed: u64) -> Vec<ProjPoint> {
    let mut rng = SplitMix64::new(seed);
    let phases = unit_phases();
    let gens = crate::spin::standard_generators();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = rng.int_in(1, 3);
        let a = rng.below(8) as usize;
        let b = {
            let mut b = rng.below(8) as usize;
            while b == a {
                b = rng.below(8) as usize;
            }
            b
        };
        let sign = if rng.chance(1, 2) { 1 } else { -1 };
        // x_2 = c e_a + i (sign c) e_b: null with <x_2|conj x_2> = 4c^2
        let mut parts = [(0i64, 0i64); 8];
        parts[a].0 = c;
        parts[b].1 = sign * c;
        let x2 = octc(parts);
        let phase = rng.pick(&phases);
        let xi1 = Field::mul(&gauss(2 * c, 0), phase);
        let x = Herm3::new(
            [xi1, GScalar::zero(), GScalar::zero()],
            [CDNum::zero(3), x2, CDNum::zero(3)],
        );
        let mut rep = x;
        if rng.chance(1, 2) {
            for _ in 0..rng.int_in(1, 3) {
                rep = rng.pick(&gens).apply(&rep);
            }
        }
        let p = ProjPoint::new(rep).expect("family representative is nonzero");
        assert!(is_veronese(&p.rep), "weak-point generator emitted non-Veronese");
        assert!(
            is_weakly_isotropic(&p).expect("checked Veronese"),
            "weak-point generator emitted non-isotropic point"
        );
        out.push(p);
    }
    out
}

/// Deterministic stream of Veronese points that are not weakly isotropic
/// (controls for the classifier suites), shaped `(0, xi_2, xi_3; x_1, 0, 0)`
/// with `N(x_1) = xi_2 xi_3`.
pub fn generate_nonisotropic_points(count: usize, seed: u64) -> Vec<ProjPoint> {
    let mut rng = SplitMix64::new(seed ^ 0x9e3779b97f4a7c15);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut parts = [(0i64, 0i64); 8];
        for p in parts.iter_mut().take(4) {
            *p = (rng.int_in(-3, 3), rng.int_in(-3, 3));
        }
        let x1 = octc(parts);
        let n = x1.norm_form();
        let xi2 = gauss(rng.int_in(1, 5), rng.int_in(0, 2));
        let xi3 = Field::mul(&n, &xi2.inv().expect("nonzero"));
        let x = Herm3::new(
            [GScalar::zero(), xi2, xi3],
            [x1, CDNum::zero(3), CDNum::zero(3)],
        );
        let Ok(p) = ProjPoint::new(x) else { continue };
        if !is_veronese(&p.rep) {
            continue;
        }
        if is_weakly_isotropic(&p).expect("checked Veronese") {
            continue;
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn e(i: usize) -> HermC {
        Herm3::diag_unit(i)
    }

    #[test]
    fn veronese_examples() {
        assert!(is_veronese(&e(0)));
        assert!(!is_veronese(&HermC::identity()));
        assert!(is_veronese(weak_not_strong_witness().rep()));
        assert!(!is_veronese(&HermC::zero()));
    }

    #[test]
    fn map_h_examples() {
        assert_eq!(map_h(&e(0)), e(0));
        let ie1 = e(0).scale(&GScalar::i());
        assert_eq!(map_h(&ie1), -&ie1);
        let slot1 = HermC::oct_unit(0, 1);
        assert_eq!(map_h(&slot1), -&slot1);
        // involutive on a mixed element
        let z = &(&e(1).scale(&GScalar::from_ints(2, 3)) + &HermC::oct_unit(2, 5)) + &slot1;
        assert_eq!(map_h(&map_h(&z)), z);
    }

    #[test]
    fn form_h_examples() {
        assert_eq!(form_h(&e(2), &e(2)), GScalar::one());
        assert!(form_h(&e(0), &e(1)).is_zero());
        let w = weak_not_strong_witness();
        assert!(form_h(w.rep(), w.rep()).is_zero());
    }

    #[test]
    fn form_h_is_hermitian_and_linear_in_the_first_slot() {
        let a = weak_not_strong_witness().rep().clone();
        let b = &e(1).scale(&GScalar::from_ints(1, 2)) + &HermC::oct_unit(1, 3);
        assert_eq!(form_h(&a, &b), form_h(&b, &a).conj_sigma());
        let lam = GScalar::from_ints(2, -1);
        assert_eq!(
            form_h(&a.scale(&lam), &b),
            Field::mul(&lam, &form_h(&a, &b))
        );
    }

    #[test]
    fn map_b_and_beta_examples() {
        let e1r = Herm3::<Rational>::diag_unit(0);
        let e3r = Herm3::<Rational>::diag_unit(2);
        assert_eq!(map_b(&e1r), e1r);
        assert_eq!(form_beta(&e3r, &e3r), rat_int(1));
        let slot1 = Herm3::<Rational>::oct_unit(0, 4);
        assert_eq!(form_beta(&slot1, &slot1), rat_int(-2));
        let slot3 = Herm3::<Rational>::oct_unit(2, 4);
        assert_eq!(form_beta(&slot3, &slot3), rat_int(2));
    }

    #[test]
    fn weak_isotropy_examples() {
        let p1 = ProjPoint::new(e(0)).unwrap();
        assert_eq!(is_weakly_isotropic(&p1), Ok(false));
        let w = weak_not_strong_witness();
        assert_eq!(is_weakly_isotropic(&w), Ok(true));
        // rescaling the representative does not change the verdict
        let scaled = ProjPoint::new(w.rep().scale(&GScalar::from_ints(3, 5))).unwrap();
        assert_eq!(scaled, w);
        let not_veronese = ProjPoint::new(HermC::identity()).unwrap();
        assert_eq!(
            is_weakly_isotropic(&not_veronese),
            Err(IsotropyError::NotVeronese)
        );
    }

    #[test]
    fn strong_isotropy_preconditions() {
        let p1 = ProjPoint::new(e(0)).unwrap();
        assert_eq!(
            is_strongly_isotropic(&p1),
            Err(IsotropyError::NotWeaklyIsotropic)
        );
        assert_eq!(
            is_strongly_isotropic_appendix(&p1),
            Err(IsotropyError::NotWeaklyIsotropic)
        );
    }

    #[test]
    fn frozen_fixture_is_strongly_isotropic_by_both_procedures() {
        let p = strong_fixture();
        assert_eq!(is_strongly_isotropic(&p), Ok(true));
        assert_eq!(is_strongly_isotropic_appendix(&p), Ok(true));
    }

    #[test]
    fn weak_witness_is_not_strong_and_both_procedures_agree() {
        let w = weak_not_strong_witness();
        assert_eq!(is_strongly_isotropic(&w), Ok(false));
        assert_eq!(is_strongly_isotropic_appendix(&w), Ok(false));
        let c = classify(w.rep()).unwrap();
        assert!(c.agreement());
        assert!(c.failed_equation.is_some());
    }

    #[test]
    fn appendix_rejects_the_pure_slot3_point() {
        // (0,0,1; 0,0,0): family 1 reads 1 = 0, consistent with h(X,X) = 1
        let x = e(2);
        let violation = appendix_violation(&x).expect("must be violated");
        assert!(violation.family <= 2);
        let p = ProjPoint::new(x).unwrap();
        assert_eq!(is_weakly_isotropic(&p), Ok(false));
    }

    #[test]
    fn diagonal_pairs_without_octonion_parts_fail_family_two() {
        // xi = (1,1,0), x = 0 is not even Veronese; the equations reject it
        // via the norm-balance family as well.
        let x = &e(0) + &e(1);
        assert!(!is_veronese(&x));
        let violations = appendix_violations(&x, false);
        assert!(!violations.is_empty());
        assert!(violations.iter().any(|v| v.family == 2));
    }

    #[test]
    fn collinearity_examples() {
        let p = strong_fixture();
        assert_eq!(collinear(&p, &p), Ok(true));
        let p1 = ProjPoint::new(e(0)).unwrap();
        let p2 = ProjPoint::new(e(1)).unwrap();
        assert_eq!(collinear(&p1, &p2), Ok(false));
    }

    #[test]
    fn strong_family_is_pairwise_collinear_and_strong() {
        let fam = collinear_strong_family();
        assert!(fam.len() >= 5);
        for p in &fam {
            assert_eq!(is_strongly_isotropic(p), Ok(true));
            assert_eq!(is_strongly_isotropic_appendix(p), Ok(true));
        }
        for p in &fam {
            for q in &fam {
                assert_eq!(collinear(p, q), Ok(true));
            }
        }
    }

    #[test]
    fn symplecton_of_the_first_diagonal_unit() {
        let s = symplecton(&e(0)).unwrap();
        assert_eq!(s.dim(), 10);
        // image description: { (0, xi_2, xi_3; x_1, 0, 0) }
        assert!(s.contains(&e(1)));
        assert!(s.contains(&e(2)));
        assert!(s.contains(&HermC::oct_unit(0, 6)));
        assert!(!s.contains(&e(0)));
        assert!(!s.contains(&HermC::oct_unit(1, 0)));
    }

    #[test]
    fn symplecton_contains_images_with_orbit_invariant_dimension() {
        let mut rng = crate::rng::SplitMix64::new(61);
        let x = strong_fixture().rep().clone();
        let s = symplecton(&x).unwrap();
        for _ in 0..5 {
            let coords: Vec<GScalar> = (0..27)
                .map(|_| GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3)))
                .collect();
            let t = Herm3::from_coords(&coords);
            assert!(s.contains(&x.cross(&t)));
        }
        // the dimension is an orbit invariant of the linear group action
        for g in crate::spin::standard_generators().iter().take(3) {
            let image = symplecton(&g.apply(&x)).unwrap();
            assert_eq!(image.dim(), s.dim());
        }
        assert_eq!(s.dim(), 10);
    }

    #[test]
    fn v_incidence_examples() {
        let u = e(0);
        // E2 lies in the symplecton of U and E2 o U = 0
        let p2 = ProjPoint::new(e(1)).unwrap();
        assert!(e(1).jordan_mul(&u).is_zero());
        assert_eq!(v_incident(&p2, &u), Ok(true));
        // a random Veronese element of the symplecton shape with X o U = 0
        let x1 = octc([(1, 2), (0, 1), (3, 0), (0, 0), (1, 1), (0, 0), (0, 0), (2, 0)]);
        let n = x1.norm_form();
        let xi2 = gauss(3, 1);
        let xi3 = Field::mul(&n, &xi2.inv().unwrap());
        let x = Herm3::new(
            [GScalar::zero(), xi2, xi3],
            [x1, CDNum::zero(3), CDNum::zero(3)],
        );
        assert!(is_veronese(&x));
        assert!(x.jordan_mul(&u).is_zero());
        assert_eq!(v_incident(&ProjPoint::new(x).unwrap(), &u), Ok(true));
        // E1 itself is not V-incident with its own symplecton
        let p1 = ProjPoint::new(e(0)).unwrap();
        assert_eq!(v_incident(&p1, &u), Ok(false));
        // strong isotropy is V-incidence with the symplecton of H(X)
        let s = strong_fixture();
        assert_eq!(v_incident(&s, &map_h(s.rep())), Ok(true));
    }

    #[test]
    fn cross_vanishing_transfers_through_h() {
        let fam = collinear_strong_family();
        let (p, q) = (&fam[0], &fam[1]);
        assert!(p.rep().cross(q.rep()).is_zero());
        assert!(map_h(p.rep()).cross(&map_h(q.rep())).is_zero());
        let w = weak_not_strong_witness();
        assert!(!p.rep().cross(w.rep()).is_zero());
        assert!(!map_h(p.rep()).cross(&map_h(w.rep())).is_zero());
    }

    #[test]
    fn generated_weak_points_are_deterministic_and_verified() {
        let a = generate_weak_points(20, 7);
        let b = generate_weak_points(20, 7);
        assert_eq!(a, b);
        let c = generate_weak_points(5, 8);
        assert_ne!(a[..5], c[..]);
        // construction example from the family
        let w = weak_not_strong_witness();
        assert!(is_weakly_isotropic(&w).unwrap());
    }

    #[test]
    fn nonisotropic_controls_are_veronese_but_not_weak() {
        for p in generate_nonisotropic_points(10, 3) {
            assert!(is_veronese(p.rep()));
            assert_eq!(is_weakly_isotropic(&p), Ok(false));
        }
    }

    #[test]
    fn zero_vector_is_rejected() {
        assert_eq!(
            ProjPoint::new(HermC::zero()).unwrap_err(),
            IsotropyError::ZeroVector
        );
    }
}
