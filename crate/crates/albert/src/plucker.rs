//! The toy model: bivectors on a 6-dimensional hermitian space.
//!
//! `Vec6` carries the sigma-hermitian form `h6` of signature
//! `(-,-,+,+,+,+)` (Witt index 2) and the symmetric bilinear dot form.
//! Two-dimensional subspaces embed into the 15-dimensional wedge space by
//! `L -> x wedge y`; the decomposable rays are cut out by `u wedge u = 0`.
//! The wedge space carries the induced hermitian form `h2`, the trilinear
//! form `phi(u wedge v wedge w)` (normalized by `phi(e1...e6) = 1`), and
//! the cross product dual to it; together they describe the dual classical
//! quadrangle: points are strongly isotropic decomposable rays, and
//! collinearity is the vanishing of the cross product.
//!
//! Wedge basis order is lexicographic, `(1,2), (1,3), ..., (5,6)`; signs
//! come from sorting-permutation parity.

use crate::linalg::Mat;
use crate::scalar::{Field, GScalar};
use std::fmt;
use std::ops::{Add, Neg, Sub};

pub const DIM_V: usize = 6;
pub const DIM_WEDGE: usize = 15;

/// Lexicographic pairs indexing the wedge basis.
pub const PAIRS: [(usize, usize); DIM_WEDGE] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

/// Lexicographic 4-subsets indexing the degree-4 wedge components.
pub const QUADS: [[usize; 4]; 15] = [
    [0, 1, 2, 3],
    [0, 1, 2, 4],
    [0, 1, 2, 5],
    [0, 1, 3, 4],
    [0, 1, 3, 5],
    [0, 1, 4, 5],
    [0, 2, 3, 4],
    [0, 2, 3, 5],
    [0, 2, 4, 5],
    [0, 3, 4, 5],
    [1, 2, 3, 4],
    [1, 2, 3, 5],
    [1, 2, 4, 5],
    [1, 3, 4, 5],
    [2, 3, 4, 5],
];

pub fn pair_index(i: usize, j: usize) -> usize {
    assert!(i < j && j < DIM_V);
    PAIRS.iter().position(|&p| p == (i, j)).expect("valid pair")
}

fn quad_index(q: &[usize; 4]) -> usize {
    QUADS.iter().position(|x| x == q).expect("valid quad")
}

/// Parity sign of the permutation sorting `perm` (entries distinct).
fn sort_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PluckerError {
    WrongDimension { expected: usize, got: usize },
    NotDecomposable,
    ZeroBivector,
}

impl fmt::Display for PluckerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PluckerError::WrongDimension { expected, got } => {
                write!(f, "expected a {expected}-dimensional subspace, got {got}")
            }
            PluckerError::NotDecomposable => write!(f, "bivector is not decomposable"),
            PluckerError::ZeroBivector => write!(f, "zero bivector rejected"),
        }
    }
}

impl std::error::Error for PluckerError {}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vec6(pub [GScalar; 6]);

impl Vec6 {
    pub fn zero() -> Self {
        Vec6(std::array::from_fn(|_| GScalar::zero()))
    }

    pub fn basis(k: usize) -> Self {
        let mut v = Self::zero();
        v.0[k] = GScalar::one();
        v
    }

    pub fn from_ints(v: [i64; 6]) -> Self {
        Vec6(v.map(GScalar::from_int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &GScalar) -> Self {
        Vec6(std::array::from_fn(|k| Field::mul(&self.0[k], s)))
    }
}

impl Add for &Vec6 {
    type Output = Vec6;
    fn add(self, rhs: &Vec6) -> Vec6 {
        Vec6(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

/// Diagonal of `h6`: `(-1, -1, 1, 1, 1, 1)`.
pub const H6_SIGNS: [i64; 6] = [-1, -1, 1, 1, 1, 1];

/// The sigma-hermitian form of Witt index 2 on `Vec6`:
/// `h6(x,y) = -x_1 conj(y_1) - x_2 conj(y_2) + x_3 conj(y_3) + ... + x_6 conj(y_6)`.
pub fn form_h6(x: &Vec6, y: &Vec6) -> GScalar {
    let mut acc = GScalar::zero();
    for k in 0..DIM_V {
        let t = Field::mul(&x.0[k], &y.0[k].conj_sigma());
        acc = if H6_SIGNS[k] < 0 { &acc - &t } else { &acc + &t };
    }
    acc
}

/// The symmetric bilinear dot form `(x,y) = sum x_i y_i`.
pub fn dot6(x: &Vec6, y: &Vec6) -> GScalar {
    let mut acc = GScalar::zero();
    for k in 0..DIM_V {
        acc = &acc + &(&x.0[k] * &y.0[k]);
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bivector(pub [GScalar; DIM_WEDGE]);

impl Bivector {
    pub fn zero() -> Self {
        Bivector(std::array::from_fn(|_| GScalar::zero()))
    }

    pub fn wedge_basis(m: usize) -> Self {
        let mut b = Self::zero();
        b.0[m] = GScalar::one();
        b
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &GScalar) -> Self {
        Bivector(std::array::from_fn(|k| Field::mul(&self.0[k], s)))
    }

    /// Canonical projective representative: first nonzero coordinate is 1.
    pub fn normalize_ray(&self) -> Result<Self, PluckerError> {
        let lead = self
            .0
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(PluckerError::ZeroBivector)?;
        Ok(self.scale(&lead.inv().expect("nonzero lead")))
    }
}

impl Add for &Bivector {
    type Output = Bivector;
    fn add(self, rhs: &Bivector) -> Bivector {
        Bivector(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Sub for &Bivector {
    type Output = Bivector;
    fn sub(self, rhs: &Bivector) -> Bivector {
        Bivector(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl Neg for &Bivector {
    type Output = Bivector;
    fn neg(self) -> Bivector {
        Bivector(std::array::from_fn(|k| -&self.0[k]))
    }
}

pub fn wedge2(x: &Vec6, y: &Vec6) -> Bivector {
    let mut out = Bivector::zero();
    for (m, &(i, j)) in PAIRS.iter().enumerate() {
        out.0[m] = &(&x.0[i] * &y.0[j]) - &(&x.0[j] * &y.0[i]);
    }
    out
}

/// A linear subspace of `Vec6` in canonical reduced echelon form;
/// structural equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    rows: Vec<Vec<GScalar>>,
}

impl Subspace {
    pub fn from_spanning(vectors: &[Vec6]) -> Self {
        let rows: Vec<Vec<GScalar>> = vectors.iter().map(|v| v.0.to_vec()).collect();
        Subspace {
            rows: Mat::from_rows(rows).row_space_basis(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vec6> {
        self.rows
            .iter()
            .map(|r| Vec6(std::array::from_fn(|k| r[k].clone())))
            .collect()
    }

    pub fn contains(&self, v: &Vec6) -> bool {
        crate::linalg::in_span(&self.rows, v.0.as_ref())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // kernel of the stacked orthogonality conditions against both
        //WRT the plain dot form would not give the intersection; instead
        // intersect via the kernel trick on coordinates: v in both spans.
        // dim(A cap B) basis: solve a^T A = v = b^T B.
        let (ra, rb) = (self.rows.len(), other.rows.len());
        if ra == 0 || rb == 0 {
            return Subspace { rows: Vec::new() };
        }
        // columns: coefficients on A-basis then B-basis; rows: 6 coordinate
        // equations  sum a_i A_i - sum b_j B_j = 0.
        let mut sys = Mat::zero(DIM_V, ra + rb);
        for c in 0..DIM_V {
            for (i, row) in self.rows.iter().enumerate() {
                *sys.at_mut(c, i) = row[c].clone();
            }
            for (j, row) in other.rows.iter().enumerate() {
                *sys.at_mut(c, ra + j) = -&row[c];
            }
        }
        let vectors: Vec<Vec6> = sys
            .kernel_basis()
            .into_iter()
            .map(|coeffs| {
                let mut v = Vec6::zero();
                for (i, row) in self.rows.iter().enumerate() {
                    for c in 0..DIM_V {
                        v.0[c] = &v.0[c] + &(&coeffs[i] * &row[c]);
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(&vectors)
    }

    /// `h6`-orthogonal complement.
    pub fn perp_h6(&self) -> Subspace {
        // h6(b, v) = 0 for each basis row b is semilinear in v; conjugate
        // the conditions to make them linear.
        let rows: Vec<Vec<GScalar>> = self
            .rows
            .iter()
            .map(|b| {
                (0..DIM_V)
                    .map(|k| {
                        let s = Field::mul(&b[k], &GScalar::from_int(H6_SIGNS[k]));
                        s.conj_sigma()
                    })
                    .collect()
            })
            .collect();
        let vectors: Vec<Vec6> = Mat::from_rows(rows)
            .kernel_basis()
            .into_iter()
            .map(|r| Vec6(std::array::from_fn(|k| r[k].clone())))
            .collect();
        Subspace::from_spanning(&vectors)
    }

    /// True if `h6` vanishes identically on the subspace.
    pub fn totally_isotropic_h6(&self) -> bool {
        let b = self.basis();
        b.iter()
            .all(|x| b.iter().all(|y| form_h6(x, y).is_zero()))
    }
}

/// Pluecker embedding of a 2-dimensional subspace, as a normalized ray
/// representative. Well-defined: a basis change scales the wedge by its
/// determinant.
pub fn plucker_embed(l: &Subspace) -> Result<Bivector, PluckerError> {
    if l.dim() != 2 {
        return Err(PluckerError::WrongDimension {
            expected: 2,
            got: l.dim(),
        });
    }
    let b = l.basis();
    wedge2(&b[0], &b[1]).normalize_ray()
}

/// Degree-4 wedge `u wedge v`, 15 components over the lexicographic
/// 4-subsets.
pub fn wedge4(u: &Bivector, v: &Bivector) -> [GScalar; 15] {
    let mut out: [GScalar; 15] = std::array::from_fn(|_| GScalar::zero());
    for (m, &(a, b)) in PAIRS.iter().enumerate() {
        if u.0[m].is_zero() {
            continue;
        }
        for (n, &(c, d)) in PAIRS.iter().enumerate() {
            if a == c || a == d || b == c || b == d || v.0[n].is_zero() {
                continue;
            }
            let perm = [a, b, c, d];
            let mut sorted = perm;
            sorted.sort_unstable();
            let q = quad_index(&sorted);
            let term = Field::mul(&u.0[m], &v.0[n]);
            out[q] = if sort_sign(&perm) > 0 {
                &out[q] + &term
            } else {
                &out[q] - &term
            };
        }
    }
    out
}

/// `u wedge u = 0`: the 15 quadratic Pluecker relations.
pub fn is_decomposable(u: &Bivector) -> bool {
    wedge4(u, u).iter().all(|c| c.is_zero())
}

/// The unique plane with `p(L) = ray(u)`, recovered as `{x | x wedge u = 0}`.
pub fn inverse_plucker(u: &Bivector) -> Result<Subspace, PluckerError> {
    if u.is_zero() {
        return Err(PluckerError::ZeroBivector);
    }
    if !is_decomposable(u) {
        return Err(PluckerError::NotDecomposable);
    }
    // x wedge u lives in degree 3: 20 components (i<j<k), each a linear
    // functional of x.
    let mut triples = Vec::with_capacity(20);
    for i in 0..DIM_V {
        for j in i + 1..DIM_V {
            for k in j + 1..DIM_V {
                triples.push([i, j, k]);
            }
        }
    }
    let mut sys = Mat::zero(triples.len(), DIM_V);
    for (row, t) in triples.iter().enumerate() {
        // coefficient of x_c: sign of (c, rest) where rest = t minus {c}
        for (pos, &c) in t.iter().enumerate() {
            let (a, b) = match pos {
                0 => (t[1], t[2]),
                1 => (t[0], t[2]),
                _ => (t[0], t[1]),
            };
            let sign = sort_sign(&[c, a, b]);
            let coeff = &u.0[pair_index(a.min(b), a.max(b))];
            *sys.at_mut(row, c) = if sign > 0 { coeff.clone() } else { -coeff };
        }
    }
    let kernel = sys.kernel_basis();
    assert_eq!(kernel.len(), 2, "decomposable bivector has a 2-dim kernel");
    let vectors: Vec<Vec6> = kernel
        .into_iter()
        .map(|r| Vec6(std::array::from_fn(|k| r[k].clone())))
        .collect();
    Ok(Subspace::from_spanning(&vectors))
}

/// Confluence of two decomposable bivectors: `u wedge v = 0` iff the planes
/// intersect nontrivially. Both routes are computed and compared.
pub fn confluent(u: &Bivector, v: &Bivector) -> Result<bool, PluckerError> {
    let lu = inverse_plucker(u)?;
    let lv = inverse_plucker(v)?;
    let by_wedge = wedge4(u, v).iter().all(|c| c.is_zero());
    let by_rank = lu.intersect(&lv).dim() > 0;
    assert_eq!(by_wedge, by_rank, "confluence routes disagree");
    Ok(by_wedge)
}

/// Gram matrix of the induced hermitian form `h2` on the wedge basis:
/// `h2(e_i^e_j, e_k^e_l) = h(e_i,e_k)h(e_j,e_l) - h(e_i,e_l)h(e_j,e_k)`.
pub fn gram_h2() -> Mat<GScalar> {
    let mut g = Mat::zero(DIM_WEDGE, DIM_WEDGE);
    let e: Vec<Vec6> = (0..DIM_V).map(Vec6::basis).collect();
    for (m, &(i, j)) in PAIRS.iter().enumerate() {
        for (n, &(k, l)) in PAIRS.iter().enumerate() {
            let v = &(&form_h6(&e[i], &e[k]) * &form_h6(&e[j], &e[l]))
                - &(&form_h6(&e[i], &e[l]) * &form_h6(&e[j], &e[k]));
            *g.at_mut(m, n) = v;
        }
    }
    g
}

/// Gram matrix of `h6` itself.
pub fn gram_h6() -> Mat<GScalar> {
    let mut g = Mat::zero(DIM_V, DIM_V);
    for k in 0..DIM_V {
        *g.at_mut(k, k) = GScalar::from_int(H6_SIGNS[k]);
    }
    g
}

/// The induced sigma-hermitian form on the wedge space, extended from the
/// determinant formula by sesquilinearity in the wedge basis.
pub fn form_h2(u: &Bivector, v: &Bivector) -> GScalar {
    let g = gram_h2();
    gram_value(&g, &u.0, &v.0)
}

fn gram_value(g: &Mat<GScalar>, u: &[GScalar], v: &[GScalar]) -> GScalar {
    let mut acc = GScalar::zero();
    for m in 0..u.len() {
        if u[m].is_zero() {
            continue;
        }
        for n in 0..v.len() {
            if g.at(m, n).is_zero() || v[n].is_zero() {
                continue;
            }
            acc = &acc + &(&(&u[m] * &v[n].conj_sigma()) * g.at(m, n));
        }
    }
    acc
}

/// Fully symmetric trilinear form `(u,v,w) = phi(u wedge v wedge w)` with
/// the normalization `phi(e_1 ^ ... ^ e_6) = 1`.
pub fn triple6(u: &Bivector, v: &Bivector, w: &Bivector) -> GScalar {
    let uv = wedge4(u, v);
    let mut acc = GScalar::zero();
    for (q, quad) in QUADS.iter().enumerate() {
        if uv[q].is_zero() {
            continue;
        }
        let comp: Vec<usize> = (0..DIM_V).filter(|c| !quad.contains(c)).collect();
        let m = pair_index(comp[0], comp[1]);
        if w.0[m].is_zero() {
            continue;
        }
        let perm = [quad[0], quad[1], quad[2], quad[3], comp[0], comp[1]];
        let term = Field::mul(&uv[q], &w.0[m]);
        acc = if sort_sign(&perm) > 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// The symmetric cross product dual to the trilinear form:
/// `(u x v, w) = (u,v,w)` against the induced dot form, whose Gram matrix
/// is the identity in the wedge basis.
pub fn cross6(u: &Bivector, v: &Bivector) -> Bivector {
    let mut out = Bivector::zero();
    for m in 0..DIM_WEDGE {
        out.0[m] = triple6(u, v, &Bivector::wedge_basis(m));
    }
    out
}

/// Weak isotropy of a decomposable ray: `h2(u,u) = 0`.
pub fn is_weakly_isotropic_biv(u: &Bivector) -> Result<bool, PluckerError> {
    inverse_plucker(u)?;
    Ok(form_h2(u, u).is_zero())
}

/// Strong isotropy: the plane behind the ray is totally `h6`-isotropic.
/// Cross-checked against the incidence characterization: `h2(u, v) = 0` for
/// the spanning family `v = x wedge z` (`x` in the plane, `z` a basis
/// vector), which spans every decomposable `v` with `u wedge v = 0`.
pub fn is_strongly_isotropic_biv(u: &Bivector) -> Result<bool, PluckerError> {
    let plane = inverse_plucker(u)?;
    let by_gram = plane.totally_isotropic_h6();
    let mut by_family = true;
    'outer: for x in plane.basis() {
        for k in 0..DIM_V {
            let v = wedge2(&x, &Vec6::basis(k));
            if v.is_zero() {
                continue;
            }
            if !form_h2(u, &v).is_zero() {
                by_family = false;
                break 'outer;
            }
        }
    }
    assert_eq!(
        by_gram, by_family,
        "strong-isotropy routes disagree on {u:?}"
    );
    if by_gram {
        debug_assert!(form_h2(u, u).is_zero(), "strong must imply weak");
    }
    Ok(by_gram)
}

// ---------------------------------------------------------------------------
// Witt index
// ---------------------------------------------------------------------------

/// Positive-definite test form (Witt index 0) for exercising the splitter.
pub fn gram_positive_test(n: usize) -> Mat<GScalar> {
    Mat::identity(n)
}

/// Witt index of a non-degenerate sigma-hermitian form over the Gaussian
/// rationals, by iterated hyperbolic-plane splitting: find an isotropic
/// vector, pick a dual partner, pass to the orthogonal complement, recurse.
/// Deterministic. Terminates with a definiteness certificate once the
/// residual form has a single diagonal sign.
pub fn witt_index(gram: &Mat<GScalar>) -> usize {
    assert_eq!(gram.rows(), gram.cols());
    let mut g = gram.clone();
    let mut count = 0usize;
    loop {
        if g.rows() == 0 {
            return count;
        }
        let Some(u) = isotropic_vector(&g) else {
            return count;
        };
        // dual partner: any w with h(u, w) != 0 (exists: non-degenerate)
        let n = g.rows();
        let r: Vec<GScalar> = (0..n)
            .map(|b| {
                let mut acc = GScalar::zero();
                for (a, ua) in u.iter().enumerate() {
                    acc = &acc + &(ua * g.at(a, b));
                }
                acc
            })
            .collect();
        assert!(
            r.iter().any(|c| !c.is_zero()),
            "degenerate form handed to witt_index"
        );
        // complement of the hyperbolic plane span(u, w): solve
        // h(u, v) = 0 and h(w, v) = 0; both are linear in sigma(v).
        let w: Vec<GScalar> = {
            let k = r.iter().position(|c| !c.is_zero()).expect("nonzero row");
            (0..n)
                .map(|b| {
                    if b == k {
                        GScalar::one()
                    } else {
                        GScalar::zero()
                    }
                })
                .collect()
        };
        let rw: Vec<GScalar> = (0..n)
            .map(|b| {
                let mut acc = GScalar::zero();
                for (a, wa) in w.iter().enumerate() {
                    acc = &acc + &(wa * g.at(a, b));
                }
                acc
            })
            .collect();
        let sys = Mat::from_rows(vec![
            r.iter().map(GScalar::conj_sigma).collect::<Vec<_>>(),
            rw.iter().map(GScalar::conj_sigma).collect::<Vec<_>>(),
        ]);
        let comp = sys.kernel_basis();
        assert_eq!(comp.len(), n - 2, "hyperbolic plane splits off cleanly");
        let mut restricted = Mat::zero(n - 2, n - 2);
        for (i, vi) in comp.iter().enumerate() {
            for (j, vj) in comp.iter().enumerate() {
                *restricted.at_mut(i, j) = gram_value(&g, vi, vj);
            }
        }
        g = restricted;
        count += 1;
    }
}

/// An exact isotropic vector of the form, or `None` if the form is
/// anisotropic. Diagonalizes first; a residual with a single diagonal sign
/// is definite over the Gaussian rationals (sums of `|.|^2` cannot cancel),
/// which is the termination certificate.
fn isotropic_vector(g: &Mat<GScalar>) -> Option<Vec<GScalar>> {
    let n = g.rows();
    // diagonalize: basis change P with h(p_i, p_j) = 0 for i != j
    let mut basis: Vec<Vec<GScalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        GScalar::one()
                    } else {
                        GScalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut diag: Vec<GScalar> = Vec::with_capacity(n);
    let mut pivots: Vec<Vec<GScalar>> = Vec::with_capacity(n);
    while !basis.is_empty() {
        // find a vector with h(v,v) != 0 among the basis, possibly mixing two
        let self_val = |v: &Vec<GScalar>| gram_value(g, v, v);
        let mut pivot = basis.iter().position(|v| !self_val(v).is_zero());
        if pivot.is_none() {
            'mix: for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    for lam in [GScalar::one(), GScalar::i()] {
                        let mixed: Vec<GScalar> = basis[a]
                            .iter()
                            .zip(&basis[b])
                            .map(|(x, y)| x + &(&lam * y))
                            .collect();
                        if !self_val(&mixed).is_zero() {
                            basis[a] = mixed;
                            pivot = Some(a);
                            break 'mix;
                        }
                    }
                }
            }
        }
        let Some(p) = pivot else {
            // every vector of the residual space is isotropic; with the form
            // non-degenerate this only happens for the zero space
            break;
        };
        let v = basis.remove(p);
        let d = gram_value(g, &v, &v);
        let d_inv = d.inv().expect("pivot nonzero");
        for b in basis.iter_mut() {
            // b <- b - (h(b,v)/d) v
            let coeff = &gram_value(g, b, &v) * &d_inv;
            for (bc, vc) in b.iter_mut().zip(&v) {
                *bc = &*bc - &(&coeff * vc);
            }
        }
        diag.push(d);
        pivots.push(v);
    }
    // diagonal entries are sigma-fixed, i.e. rational
    let rat: Vec<crate::scalar::Rational> = diag.iter().map(GScalar::expect_real).collect();
    // direct hits: a zero diagonal entry cannot occur (non-degenerate), so
    // look for an opposite-sign pair whose ratio is a norm of Q(i)
    use num_traits::Signed;
    for i in 0..rat.len() {
        for j in 0..rat.len() {
            if i == j || rat[i].is_negative() == rat[j].is_negative() {
                continue;
            }
            let ratio = -(&rat[i] / &rat[j]);
            if let Some(q) = gaussian_norm_sqrt(&ratio) {
                // h(p_i + q p_j, same) = d_i + |q|^2 d_j = 0
                let v: Vec<GScalar> = pivots[i]
                    .iter()
                    .zip(&pivots[j])
                    .map(|(x, y)| x + &(&q * y))
                    .collect();
                debug_assert!(gram_value(g, &v, &v).is_zero());
                return Some(v);
            }
        }
    }
    let mixed_signs = rat.iter().any(|d| d.is_positive()) && rat.iter().any(|d| d.is_negative());
    if !mixed_signs {
        return None; // definite: anisotropic over Q(i)
    }
    if rat.len() == 2 {
        // diag(a, -b) is isotropic iff b/a is a norm, which the pair scan
        // above already decided
        return None;
    }
    // Mixed signs with no norm-ratio pair: isotropic vectors still exist in
    // dimension >= 3 (the associated rational quadratic form is indefinite
    // in >= 6 variables); find one by bounded search over three slots.
    for height in 1..=24i64 {
        for i in 0..rat.len() {
            for j in 0..rat.len() {
                for k in 0..rat.len() {
                    if i == j || i == k || j == k {
                        continue;
                    }
                    for (s1, q1) in norms_up_to(height) {
                        for (s2, q2) in norms_up_to(height) {
                            let total = &rat[i] + &rat[j] * &s1 + &rat[k] * &s2;
                            if !num_traits::Zero::is_zero(&total) {
                                continue;
                            }
                            let v: Vec<GScalar> = (0..n)
                                .map(|c| {
                                    &(&pivots[i][c] + &(&q1 * &pivots[j][c]))
                                        + &(&q2 * &pivots[k][c])
                                })
                                .collect();
                            debug_assert!(gram_value(g, &v, &v).is_zero());
                            return Some(v);
                        }
                    }
                }
            }
        }
    }
    panic!("witt_index: isotropic vector search exhausted its height bound");
}

/// Gaussian rationals `q` with `|q|^2 <= height`, paired with `|q|^2`, with
/// small integer coordinates.
fn norms_up_to(height: i64) -> Vec<(crate::scalar::Rational, GScalar)> {
    let mut out = Vec::new();
    for a in 0..=height {
        for b in 0..=height {
            let n = a * a + b * b;
            if n == 0 || n > height * height {
                continue;
            }
            let q = GScalar::from_ints(a, b);
            out.push((q.abs2_rat(), q));
        }
    }
    out
}

/// If the positive rational is a norm from `Q(i)` (equivalently, a sum of
/// two rational squares), return some `q` with `|q|^2 = r`. Criterion: every
/// prime `p = 3 (mod 4)` divides numerator and denominator to even powers.
fn gaussian_norm_sqrt(r: &crate::scalar::Rational) -> Option<GScalar> {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, ToPrimitive, Zero};
    if !r.is_positive() {
        return None;
    }
    // q = x/d with |x|^2 = r d^2 for d the denominator: reduces to the
    // integer case n = numer * denom.
    let n = (r.numer() * r.denom()).to_u64()?;
    // factor and check the 3 (mod 4) condition
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if p % 4 == 3 && e % 2 == 1 {
                return None;
            }
        }
        p += 1;
    }
    if m > 1 && m % 4 == 3 {
        return None;
    }
    // representable: find a two-square representation by brute force
    let mut a = 0u64;
    while a * a <= n {
        let rest = n - a * a;
        let b = (rest as f64).sqrt().round() as u64;
        for bb in b.saturating_sub(1)..=b + 1 {
            if bb * bb == rest {
                let num = GScalar::from_ints(a as i64, bb as i64);
                let den = GScalar::new(
                    crate::scalar::Rational::new(BigInt::one(), r.denom().clone()),
                    <crate::scalar::Rational as Zero>::zero(),
                );
                return Some(Field::mul(&num, &den));
            }
        }
        a += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::scalar::rat_int;

    fn e(k: usize) -> Vec6 {
        Vec6::basis(k)
    }

    fn wedge_eij(i: usize, j: usize) -> Bivector {
        wedge2(&e(i), &e(j))
    }

    #[test]
    fn h6_examples() {
        assert_eq!(form_h6(&e(0), &e(0)), GScalar::from_int(-1));
        assert_eq!(form_h6(&e(2), &e(2)), GScalar::one());
        let iso = &e(0) + &e(2);
        assert!(form_h6(&iso, &iso).is_zero());
    }

    #[test]
    fn wedge_and_embedding() {
        let l = Subspace::from_spanning(&[e(0), e(1)]);
        let u = plucker_embed(&l).unwrap();
        assert_eq!(u, wedge_eij(0, 1));
        // basis change scales by the determinant (-1), same ray
        let l2 = Subspace::from_spanning(&[e(1), &e(0) + &e(1)]);
        assert_eq!(l, l2);
        let v = wedge2(&e(1), &(&e(0) + &e(1)));
        assert_eq!(v.normalize_ray().unwrap(), u.normalize_ray().unwrap());
        assert_eq!(&v, &-&wedge_eij(0, 1));
    }

    #[test]
    fn embedding_is_injective_on_random_planes() {
        let mut rng = SplitMix64::new(31);
        let rand_plane = |rng: &mut SplitMix64| loop {
            let a = Vec6(std::array::from_fn(|_| {
                GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
            }));
            let b = Vec6(std::array::from_fn(|_| {
                GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
            }));
            let s = Subspace::from_spanning(&[a, b]);
            if s.dim() == 2 {
                return s;
            }
        };
        for _ in 0..25 {
            let l1 = rand_plane(&mut rng);
            let l2 = rand_plane(&mut rng);
            let (u1, u2) = (plucker_embed(&l1).unwrap(), plucker_embed(&l2).unwrap());
            assert_eq!(l1 == l2, u1 == u2);
            // round trip
            assert_eq!(inverse_plucker(&u1).unwrap(), l1);
        }
    }

    #[test]
    fn decomposability_examples() {
        assert!(is_decomposable(&wedge_eij(0, 1)));
        let nd = &wedge_eij(0, 1) + &wedge_eij(2, 3);
        assert!(!is_decomposable(&nd));
        // the (1,2,3,4) component of u wedge u is 2
        let w4 = wedge4(&nd, &nd);
        assert_eq!(w4[0], GScalar::from_int(2));
        assert_eq!(
            inverse_plucker(&nd).unwrap_err(),
            PluckerError::NotDecomposable
        );
        assert_eq!(
            inverse_plucker(&Bivector::zero()).unwrap_err(),
            PluckerError::ZeroBivector
        );
    }

    #[test]
    fn confluence_examples() {
        assert_eq!(confluent(&wedge_eij(0, 1), &wedge_eij(1, 2)), Ok(true));
        assert_eq!(confluent(&wedge_eij(0, 1), &wedge_eij(2, 3)), Ok(false));
    }

    #[test]
    fn h2_examples() {
        let u13 = wedge_eij(0, 2);
        assert_eq!(form_h2(&u13, &u13), GScalar::from_int(-1));
        let u34 = wedge_eij(2, 3);
        assert_eq!(form_h2(&u34, &u34), GScalar::one());
        let u12 = wedge_eij(0, 1);
        assert_eq!(form_h2(&u12, &u12), GScalar::one());
        // determinant formula on decomposables
        let x = &e(0) + &e(2);
        let y = &e(1) + &e(3);
        let u = wedge2(&x, &y);
        let det = &(&form_h6(&x, &x) * &form_h6(&y, &y))
            - &(&form_h6(&x, &y) * &form_h6(&y, &x));
        assert_eq!(form_h2(&u, &u), det);
    }

    #[test]
    fn h2_is_hermitian_and_nondegenerate() {
        let g = gram_h2();
        assert!(!g.det().is_zero());
        let mut rng = SplitMix64::new(44);
        for _ in 0..10 {
            let u = Bivector(std::array::from_fn(|_| {
                GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
            }));
            let v = Bivector(std::array::from_fn(|_| {
                GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
            }));
            assert_eq!(form_h2(&u, &v), form_h2(&v, &u).conj_sigma());
        }
    }

    #[test]
    fn triple_normalization_and_symmetry() {
        let (a, b, c) = (wedge_eij(0, 1), wedge_eij(2, 3), wedge_eij(4, 5));
        assert_eq!(triple6(&a, &b, &c), GScalar::one());
        let mut rng = SplitMix64::new(47);
        let r = |rng: &mut SplitMix64| {
            Bivector(std::array::from_fn(|_| {
                GScalar::from_ints(rng.int_in(-2, 2), rng.int_in(-2, 2))
            }))
        };
        for _ in 0..8 {
            let (u, v, w) = (r(&mut rng), r(&mut rng), r(&mut rng));
            let t = triple6(&u, &v, &w);
            assert_eq!(t, triple6(&v, &u, &w));
            assert_eq!(t, triple6(&w, &v, &u));
            assert_eq!(t, triple6(&u, &w, &v));
        }
    }

    #[test]
    fn cross_examples_and_equivalences() {
        let u = wedge_eij(0, 1);
        assert!(cross6(&u, &u).is_zero());
        let mut rng = SplitMix64::new(53);
        let r = |rng: &mut SplitMix64| {
            Bivector(std::array::from_fn(|_| {
                GScalar::from_ints(rng.int_in(-2, 2), rng.int_in(-2, 2))
            }))
        };
        for _ in 0..8 {
            let (u, v) = (r(&mut rng), r(&mut rng));
            let zero_cross = cross6(&u, &v).is_zero();
            let zero_wedge = wedge4(&u, &v).iter().all(|c| c.is_zero());
            assert_eq!(zero_cross, zero_wedge);
        }
    }

    #[test]
    fn isotropy_examples() {
        // wedge of two h6-isotropic, mutually orthogonal vectors is strong
        let x = &e(0) + &e(2);
        let y = &e(1) + &e(3);
        assert!(form_h6(&x, &y).is_zero());
        let u = wedge2(&x, &y);
        assert_eq!(is_strongly_isotropic_biv(&u), Ok(true));
        assert_eq!(is_weakly_isotropic_biv(&u), Ok(true));
        // e3 ^ e4 and e1 ^ e2 have h2 = 1: not even weakly isotropic
        assert_eq!(is_weakly_isotropic_biv(&wedge_eij(2, 3)), Ok(false));
        assert_eq!(is_weakly_isotropic_biv(&wedge_eij(0, 1)), Ok(false));
        assert_eq!(is_strongly_isotropic_biv(&wedge_eij(0, 1)), Ok(false));
        // weak but not strong: a degenerate but not totally isotropic plane
        let w = wedge2(&x, &e(1));
        assert_eq!(is_weakly_isotropic_biv(&w), Ok(true));
        assert_eq!(is_strongly_isotropic_biv(&w), Ok(false));
    }

    #[test]
    fn witt_indices() {
        assert_eq!(witt_index(&gram_h6()), 2);
        assert_eq!(witt_index(&gram_h2()), 7);
        assert_eq!(witt_index(&gram_positive_test(5)), 0);
    }

    #[test]
    fn witt_handles_norm_ratios_beyond_units() {
        // diag(2, -1): ratio 2 = |1+i|^2, one hyperbolic plane
        let mut g = Mat::zero(2, 2);
        *g.at_mut(0, 0) = GScalar::from_int(2);
        *g.at_mut(1, 1) = GScalar::from_int(-1);
        assert_eq!(witt_index(&g), 1);
        // diag(3, -1): 3 is not a sum of two rational squares; anisotropic
        let mut g = Mat::zero(2, 2);
        *g.at_mut(0, 0) = GScalar::from_int(3);
        *g.at_mut(1, 1) = GScalar::from_int(-1);
        assert_eq!(witt_index(&g), 0);
        // diag(3, -1, -1): 3 = 1 + 2 as a two-norm sum; one plane splits
        let mut g = Mat::zero(3, 3);
        *g.at_mut(0, 0) = GScalar::from_int(3);
        *g.at_mut(1, 1) = GScalar::from_int(-1);
        *g.at_mut(2, 2) = GScalar::from_int(-1);
        assert_eq!(witt_index(&g), 1);
    }

    #[test]
    fn gaussian_norm_recognition() {
        use crate::scalar::rat;
        let q = gaussian_norm_sqrt(&rat_int(5)).unwrap();
        assert_eq!(q.abs2_rat(), rat_int(5));
        assert!(gaussian_norm_sqrt(&rat_int(3)).is_none());
        assert!(gaussian_norm_sqrt(&rat_int(7)).is_none());
        let q = gaussian_norm_sqrt(&rat(9, 2)).unwrap();
        assert_eq!(q.abs2_rat(), rat(9, 2));
    }
}
