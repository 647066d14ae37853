//! The Cayley-Dickson tower over a scalar field: complexification at level 1,
//! quaternions at level 2, octonions at level 3.
//!
//! Multiplication is defined by the recursive doubling formula
//! `(x1,x2)(y1,y2) = (x1 y1 - conj(y2) x2, x1 y2 + x2 conj(y1))`, which is the
//! single source of truth. An 8x8 structure-constant table is derived from
//! that recursion once at startup and used as the fast path; basis-labeling
//! conventions in the literature vary, so deriving the table removes any
//! ambiguity. `e0 = 1` and the generator adjoined at level `m+1` is
//! `e_{2^m}`.

use crate::scalar::Field;
use crate::scalar::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

pub const MAX_LEVEL: u8 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CayleyError {
    LevelMismatch { left: u8, right: u8 },
    NotInvertible,
    BadLevel(u8),
}

impl fmt::Display for CayleyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyError::LevelMismatch { left, right } => {
                write!(f, "level mismatch: {left} vs {right}")
            }
            CayleyError::NotInvertible => write!(f, "null element has no inverse"),
            CayleyError::BadLevel(l) => write!(f, "level {l} out of range 0..={MAX_LEVEL}"),
        }
    }
}

impl std::error::Error for CayleyError {}

/// A Cayley-Dickson number: `2^level` coordinates in the doubling basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CDNum<K> {
    level: u8,
    coeffs: Vec<K>,
}

/// Structure constants of the level-3 algebra: `e_a * e_b = sign * e_idx`.
/// Lower levels are subalgebras, so the same table serves all levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdTable {
    pub idx: [[u8; 8]; 8],
    pub sign: [[i8; 8]; 8],
}

fn build_table() -> CdTable {
    let mut idx = [[0u8; 8]; 8];
    let mut sign = [[0i8; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let ea = CDNum::<Rational>::unit(3, a).unwrap();
            let eb = CDNum::<Rational>::unit(3, b).unwrap();
            let prod = ea.mul_recursive(&eb).unwrap();
            let mut found = None;
            for (k, c) in prod.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    assert!(found.is_none(), "unit product not a signed unit");
                    let s = if *c == Field::one() {
                        1i8
                    } else if *c == Field::neg(&Field::one()) {
                        -1i8
                    } else {
                        panic!("unit product coefficient is not +-1");
                    };
                    found = Some((k as u8, s));
                }
            }
            let (k, s) = found.expect("unit product vanished");
            idx[a][b] = k;
            sign[a][b] = s;
        }
    }
    CdTable { idx, sign }
}

static TABLE: OnceLock<CdTable> = OnceLock::new();

/// The memoized structure-constant table, derived from the recursion.
pub fn cd_table() -> &'static CdTable {
    TABLE.get_or_init(build_table)
}

impl<K: Field> CDNum<K> {
    pub fn new(level: u8, coeffs: Vec<K>) -> Result<Self, CayleyError> {
        if level > MAX_LEVEL {
            return Err(CayleyError::BadLevel(level));
        }
        if coeffs.len() != 1usize << level {
            return Err(CayleyError::LevelMismatch {
                left: level,
                right: coeffs.len() as u8,
            });
        }
        Ok(CDNum { level, coeffs })
    }

    pub fn zero(level: u8) -> Self {
        CDNum {
            level,
            coeffs: vec![K::zero(); 1 << level],
        }
    }

    pub fn one(level: u8) -> Self {
        Self::scalar(level, K::one())
    }

    pub fn scalar(level: u8, s: K) -> Self {
        let mut c = vec![K::zero(); 1 << level];
        c[0] = s;
        CDNum { level, coeffs: c }
    }

    /// Basis unit `e_k` at the given level.
    pub fn unit(level: u8, k: usize) -> Result<Self, CayleyError> {
        if level > MAX_LEVEL {
            return Err(CayleyError::BadLevel(level));
        }
        let n = 1usize << level;
        if k >= n {
            return Err(CayleyError::LevelMismatch {
                left: level,
                right: k as u8,
            });
        }
        let mut c = vec![K::zero(); n];
        c[k] = K::one();
        Ok(CDNum { level, coeffs: c })
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &K {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Embed into a higher level by zero-padding.
    pub fn lift_to(&self, level: u8) -> Result<Self, CayleyError> {
        if level > MAX_LEVEL || level < self.level {
            return Err(CayleyError::BadLevel(level));
        }
        let mut c = self.coeffs.clone();
        c.resize(1 << level, K::zero());
        Ok(CDNum { level, coeffs: c })
    }

    fn split(&self) -> (Self, Self) {
        let n = self.coeffs.len() / 2;
        (
            CDNum {
                level: self.level - 1,
                coeffs: self.coeffs[..n].to_vec(),
            },
            CDNum {
                level: self.level - 1,
                coeffs: self.coeffs[n..].to_vec(),
            },
        )
    }

    fn join(lo: Self, hi: Self) -> Self {
        let mut coeffs = lo.coeffs;
        coeffs.extend(hi.coeffs);
        CDNum {
            level: lo.level + 1,
            coeffs,
        }
    }

    /// Product by the doubling recursion. Source of truth for the table.
    pub fn mul_recursive(&self, rhs: &Self) -> Result<Self, CayleyError> {
        if self.level != rhs.level {
            return Err(CayleyError::LevelMismatch {
                left: self.level,
                right: rhs.level,
            });
        }
        if self.level == 0 {
            return Ok(CDNum {
                level: 0,
                coeffs: vec![self.coeffs[0].mul(&rhs.coeffs[0])],
            });
        }
        let (x1, x2) = self.split();
        let (y1, y2) = rhs.split();
        // Schafer's convention (ac - conj(d) b, d a + b conj(c)). The factor
        // order in the second slot matters from the quaternion level up; it
        // is what makes x conj(x) = N(x) and the composition law hold.
        let lo = &x1.mul_recursive(&y1)? - &y2.conj().mul_recursive(&x2)?;
        let hi = &y2.mul_recursive(&x1)? + &x2.mul_recursive(&y1.conj())?;
        Ok(Self::join(lo, hi))
    }

    /// Product via the structure-constant table (fast path).
    pub fn mul_with_table(&self, rhs: &Self, table: &CdTable) -> Result<Self, CayleyError> {
        if self.level != rhs.level {
            return Err(CayleyError::LevelMismatch {
                left: self.level,
                right: rhs.level,
            });
        }
        let n = self.coeffs.len();
        let mut out = vec![K::zero(); n];
        for a in 0..n {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if rhs.coeffs[b].is_zero() {
                    continue;
                }
                let term = self.coeffs[a].mul(&rhs.coeffs[b]);
                let k = table.idx[a][b] as usize;
                debug_assert!(k < n, "subalgebra closure violated");
                out[k] = if table.sign[a][b] > 0 {
                    out[k].add(&term)
                } else {
                    out[k].sub(&term)
                };
            }
        }
        Ok(CDNum {
            level: self.level,
            coeffs: out,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, CayleyError> {
        self.mul_with_table(rhs, cd_table())
    }

    /// Canonical involution: fixes `e0`, negates the imaginary units.
    pub fn conj(&self) -> Self {
        let mut c: Vec<K> = self.coeffs.iter().map(|x| x.neg()).collect();
        c[0] = self.coeffs[0].clone();
        CDNum {
            level: self.level,
            coeffs: c,
        }
    }

    /// `Re(x) = (x + conj(x))/2`, the `e0` coordinate.
    pub fn re_part(&self) -> K {
        self.coeffs[0].clone()
    }

    /// Norm form `N(x) = x conj(x)`, equal to the coordinate sum of squares.
    pub fn norm_form(&self) -> K {
        let mut acc = K::zero();
        for c in &self.coeffs {
            acc = acc.add(&c.mul(c));
        }
        acc
    }

    /// Polarized norm `<x|y> = N(x+y) - N(x) - N(y) = 2 Re(x conj(y))`.
    pub fn bracket(&self, rhs: &Self) -> Result<K, CayleyError> {
        if self.level != rhs.level {
            return Err(CayleyError::LevelMismatch {
                left: self.level,
                right: rhs.level,
            });
        }
        let mut acc = K::zero();
        for (a, b) in self.coeffs.iter().zip(&rhs.coeffs) {
            acc = acc.add(&a.mul(b));
        }
        Ok(acc.add(&acc.clone()))
    }

    /// `conj(x)/N(x)`; a null element is reported as non-invertible.
    pub fn invert(&self) -> Result<Self, CayleyError> {
        let n = self.norm_form();
        let n_inv = n.inv().ok_or(CayleyError::NotInvertible)?;
        Ok(self.conj().scale(&n_inv))
    }

    /// Coefficientwise application of the field involution sigma. For a
    /// complex scalar field this is the ring automorphism of the
    /// complexified algebra; over the rationals it is the identity.
    pub fn apply_sigma(&self) -> Self {
        CDNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c.conj_sigma()).collect(),
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        CDNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn close_to(&self, rhs: &Self) -> bool {
        self.level == rhs.level
            && self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .all(|(a, b)| a.close_to(b))
    }
}

impl<K: Field> Add for &CDNum<K> {
    type Output = CDNum<K>;
    fn add(self, rhs: &CDNum<K>) -> CDNum<K> {
        assert_eq!(self.level, rhs.level, "level mismatch in addition");
        CDNum {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

impl<K: Field> Sub for &CDNum<K> {
    type Output = CDNum<K>;
    fn sub(self, rhs: &CDNum<K>) -> CDNum<K> {
        assert_eq!(self.level, rhs.level, "level mismatch in subtraction");
        CDNum {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

impl<K: Field> Neg for &CDNum<K> {
    type Output = CDNum<K>;
    fn neg(self) -> CDNum<K> {
        CDNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

/// Equal-level product via the fast path; panics on level mismatch (use
/// [`CDNum::checked_mul`] where mixed input is possible).
impl<K: Field> Mul for &CDNum<K> {
    type Output = CDNum<K>;
    fn mul(self, rhs: &CDNum<K>) -> CDNum<K> {
        self.checked_mul(rhs)
            .unwrap_or_else(|e| panic!("cayley product: {e}"))
    }
}

impl<K: Field> fmt::Display for CDNum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})e{k}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
