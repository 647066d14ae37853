//! Ground fields: exact rationals, Gaussian rationals with their involution,
//! and a double-precision backend for performance experiments.
//!
//! Every algebraic identity in this crate is polynomial or rational in
//! coordinates, so verifying it exactly over Q or Q(i) establishes it over
//! R or C. The exact types are therefore the default everywhere; the float
//! backend is opt-in and never used by the verification suites' assertions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator, which makes equality and hashing canonical.
pub type Rational = BigRational;

/// Shorthand for building a rational from an integer pair.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A scalar field with an involution `sigma` satisfying `sigma^2 = id`.
///
/// Implemented by [`Rational`] (`sigma = id`), [`GScalar`] (complex
/// conjugation) and the float backend [`C64`].
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The field involution sigma.
    fn conj_sigma(&self) -> Self;

    fn is_zero(&self) -> bool;

    /// Exact halving (the formulas of this crate constantly divide by two).
    fn half(&self) -> Self;

    /// `s * sigma(s)`, always fixed by sigma.
    fn abs2(&self) -> Self {
        self.mul(&self.conj_sigma())
    }

    /// Equality test used by the verification suites: exact for the exact
    /// fields, tolerance `1e-9` for the float backend.
    fn close_to(&self, rhs: &Self) -> bool {
        self == rhs
    }
}

impl Field for Rational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_int(n: i64) -> Self {
        rat_int(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj_sigma(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn half(&self) -> Self {
        self / rat_int(2)
    }
}

/// Gaussian rational `re + i*im`, the desk-scale model of C. The involution
/// sigma is complex conjugation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GScalar {
    pub re: Rational,
    pub im: Rational,
}

impl GScalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        GScalar { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GScalar {
            re,
            im: <Rational as Zero>::zero(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GScalar {
            re: rat_int(re),
            im: rat_int(im),
        }
    }

    pub fn i() -> Self {
        GScalar::from_ints(0, 1)
    }

    /// `s * sigma(s)` as a rational; nonnegative, zero iff `s = 0`.
    pub fn abs2_rat(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    /// The rational value of a sigma-fixed scalar.
    ///
    /// Panics if the imaginary part is nonzero.
    pub fn expect_real(&self) -> Rational {
        assert!(self.is_real(), "expected a real scalar, got {self}");
        self.re.clone()
    }
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &GScalar {
    type Output = GScalar;
    fn add(self, rhs: &GScalar) -> GScalar {
        GScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GScalar {
    type Output = GScalar;
    fn sub(self, rhs: &GScalar) -> GScalar {
        GScalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GScalar {
    type Output = GScalar;
    fn mul(self, rhs: &GScalar) -> GScalar {
        GScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Field for GScalar {
    fn zero() -> Self {
        GScalar::from_ints(0, 0)
    }
    fn one() -> Self {
        GScalar::from_ints(1, 0)
    }
    fn from_int(n: i64) -> Self {
        GScalar::from_ints(n, 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        let n = self.abs2_rat();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(GScalar {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
    fn conj_sigma(&self) -> Self {
        GScalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn half(&self) -> Self {
        GScalar {
            re: Field::half(&self.re),
            im: Field::half(&self.im),
        }
    }
}

/// Double-precision complex scalar for performance experiments. Comparisons
/// use the fixed tolerance `1e-9`; never used by the acceptance suites.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

pub const FLOAT_TOLERANCE: f64 = 1e-9;

impl fmt::Display for C64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

impl Field for C64 {
    fn zero() -> Self {
        C64 { re: 0.0, im: 0.0 }
    }
    fn one() -> Self {
        C64 { re: 1.0, im: 0.0 }
    }
    fn from_int(n: i64) -> Self {
        C64 {
            re: n as f64,
            im: 0.0,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        C64 {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        C64 {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        C64 {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
    fn neg(&self) -> Self {
        C64 {
            re: -self.re,
            im: -self.im,
        }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.re * self.re + self.im * self.im;
        if n == 0.0 {
            return None;
        }
        Some(C64 {
            re: self.re / n,
            im: -self.im / n,
        })
    }
    fn conj_sigma(&self) -> Self {
        C64 {
            re: self.re,
            im: -self.im,
        }
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn half(&self) -> Self {
        C64 {
            re: self.re / 2.0,
            im: self.im / 2.0,
        }
    }
    fn close_to(&self, rhs: &Self) -> bool {
        (self.re - rhs.re).abs() <= FLOAT_TOLERANCE && (self.im - rhs.im).abs() <= FLOAT_TOLERANCE
    }
}
