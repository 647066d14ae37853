//! JSON wire formats.
//!
//! Scalars travel as exact strings: a rational is `"p/q"` (or `"p"` when
//! the denominator is 1), a Gaussian rational is a two-element array
//! `[re, im]` of rational strings. A Cayley-Dickson number is
//! `{"level": m, "coeffs": [...]}`; an Albert-algebra element is
//! `{"xi": [...; 3], "x": [...; 3]}`. Every top-level document carries
//! `"schema": 1`.

use crate::cayley::CDNum;
use crate::jordan::Herm3;
use crate::scalar::{GScalar, Rational};
use crate::spin::Generator;
use crate::veronese::HermC;
use serde::{Deserialize, Serialize};
use std::fmt;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WireError(pub String);

impl fmt::Display for WireError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed input: {}", self.0)
    }
}

impl std::error::Error for WireError {}

fn bad<T>(what: impl Into<String>) -> Result<T, WireError> {
    Err(WireError(what.into()))
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_from_str(s: &str) -> Result<Rational, WireError> {
    s.trim()
        .parse::<Rational>()
        .or_else(|_| bad(format!("not a rational: {s:?}")))
}

pub fn gscalar_to_wire(s: &GScalar) -> [String; 2] {
    [rational_to_string(&s.re), rational_to_string(&s.im)]
}

pub fn gscalar_from_wire(w: &[String; 2]) -> Result<GScalar, WireError> {
    Ok(GScalar::new(
        rational_from_str(&w[0])?,
        rational_from_str(&w[1])?,
    ))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireCDNumC {
    pub level: u8,
    pub coeffs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireCDNumR {
    pub level: u8,
    pub coeffs: Vec<String>,
}

pub fn cdnum_to_wire(x: &CDNum<GScalar>) -> WireCDNumC {
    WireCDNumC {
        level: x.level(),
        coeffs: x.coeffs().iter().map(gscalar_to_wire).collect(),
    }
}

pub fn cdnum_from_wire(w: &WireCDNumC) -> Result<CDNum<GScalar>, WireError> {
    let coeffs = w
        .coeffs
        .iter()
        .map(gscalar_from_wire)
        .collect::<Result<Vec<_>, _>>()?;
    CDNum::new(w.level, coeffs).or_else(|e| bad(e.to_string()))
}

pub fn cdnum_rational_from_wire(w: &WireCDNumR) -> Result<CDNum<Rational>, WireError> {
    let coeffs = w
        .coeffs
        .iter()
        .map(|s| rational_from_str(s))
        .collect::<Result<Vec<_>, _>>()?;
    CDNum::new(w.level, coeffs).or_else(|e| bad(e.to_string()))
}

pub fn cdnum_rational_to_wire(x: &CDNum<Rational>) -> WireCDNumR {
    WireCDNumR {
        level: x.level(),
        coeffs: x.coeffs().iter().map(rational_to_string).collect(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireHerm3 {
    pub xi: Vec<[String; 2]>,
    pub x: Vec<WireCDNumC>,
}

pub fn herm3_to_wire(x: &HermC) -> WireHerm3 {
    WireHerm3 {
        xi: x.xi.iter().map(gscalar_to_wire).collect(),
        x: x.x.iter().map(cdnum_to_wire).collect(),
    }
}

pub fn herm3_from_wire(w: &WireHerm3) -> Result<HermC, WireError> {
    if w.xi.len() != 3 || w.x.len() != 3 {
        return bad("an element needs 3 diagonal scalars and 3 octonion entries");
    }
    let xi = [
        gscalar_from_wire(&w.xi[0])?,
        gscalar_from_wire(&w.xi[1])?,
        gscalar_from_wire(&w.xi[2])?,
    ];
    let x = [
        cdnum_from_wire(&w.x[0])?,
        cdnum_from_wire(&w.x[1])?,
        cdnum_from_wire(&w.x[2])?,
    ];
    if x.iter().any(|e| e.level() != 3) {
        return bad("octonion entries must have level 3");
    }
    Ok(Herm3::new(xi, x))
}

/// Generator descriptor: `{"tag": "Ta"|"Rcs"|"Somega", "param": ...}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "tag", content = "param")]
pub enum WireGenerator {
    Ta(WireCDNumR),
    Rcs([String; 2]),
    Somega([String; 2]),
}

pub fn generator_to_wire(g: &Generator) -> WireGenerator {
    match g {
        Generator::Ta(a) => WireGenerator::Ta(cdnum_rational_to_wire(a)),
        Generator::Rcs(c, s) => {
            WireGenerator::Rcs([rational_to_string(c), rational_to_string(s)])
        }
        Generator::Somega(w) => WireGenerator::Somega(gscalar_to_wire(w)),
    }
}

pub fn generator_from_wire(w: &WireGenerator) -> Result<Generator, WireError> {
    match w {
        WireGenerator::Ta(a) => Generator::ta(cdnum_rational_from_wire(a)?),
        WireGenerator::Rcs([c, s]) => {
            Generator::rcs(rational_from_str(c)?, rational_from_str(s)?)
        }
        WireGenerator::Somega(om) => Generator::somega(gscalar_from_wire(om)?),
    }
    .or_else(|e| bad(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Field};
    use crate::veronese::strong_fixture;

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rat(3, 5)), "3/5");
        assert_eq!(rational_to_string(&rat(7, 1)), "7");
        assert_eq!(rational_from_str("3/5").unwrap(), rat(3, 5));
        assert_eq!(rational_from_str("-9/6").unwrap(), rat(-3, 2));
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x").is_err());
    }

    #[test]
    fn herm3_round_trip() {
        let x = strong_fixture().rep().clone();
        let w = herm3_to_wire(&x);
        let back = herm3_from_wire(&w).unwrap();
        assert_eq!(back, x);
        let json = serde_json::to_string(&w).unwrap();
        let w2: WireHerm3 = serde_json::from_str(&json).unwrap();
        assert_eq!(herm3_from_wire(&w2).unwrap(), x);
    }

    #[test]
    fn generator_round_trip() {
        for g in crate::spin::standard_generators() {
            let w = generator_to_wire(&g);
            let json = serde_json::to_string(&w).unwrap();
            let w2: WireGenerator = serde_json::from_str(&json).unwrap();
            assert_eq!(generator_from_wire(&w2).unwrap(), g);
        }
        // malformed parameter is rejected with the constraint message
        let bad = WireGenerator::Rcs(["1/2".into(), "1/2".into()]);
        assert!(generator_from_wire(&bad).is_err());
    }

    #[test]
    fn wire_rejects_bad_shapes() {
        let w = WireHerm3 {
            xi: vec![gscalar_to_wire(&GScalar::one())],
            x: vec![],
        };
        assert!(herm3_from_wire(&w).is_err());
        let c = WireCDNumC {
            level: 3,
            coeffs: vec![gscalar_to_wire(&GScalar::one()); 4],
        };
        assert!(cdnum_from_wire(&c).is_err());
    }
}
