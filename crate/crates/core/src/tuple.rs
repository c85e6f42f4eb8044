//! Tuples of weights: points and rays of the tensor cone.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::Ray;
use crate::error::{Error, Result};
use crate::rootdata::{Coweight, RootSystem, Weight};
use crate::scalar::{clear_denominators, Field};

/// Where a tuple came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Basic,
    Induced,
    Dd,
    User,
}

/// An `s`-tuple of weights `(lambda_1, ..., lambda_s)` with exact rational
/// fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RayTuple {
    pub weights: Vec<Weight<BigRational>>,
    pub tag: Tag,
}

#[derive(Serialize, Deserialize)]
struct RayTupleJson {
    weights: Vec<Vec<i64>>,
    tag: Tag,
}

impl RayTuple {
    pub fn new(weights: Vec<Weight<BigRational>>, tag: Tag) -> Self {
        RayTuple { weights, tag }
    }

    pub fn zero(s: usize, rank: usize, tag: Tag) -> Self {
        RayTuple { weights: vec![Weight::zero(rank); s], tag }
    }

    pub fn from_ints(rows: &[&[i64]], tag: Tag) -> Self {
        RayTuple { weights: rows.iter().map(|r| Weight::from_ints(r)).collect(), tag }
    }

    pub fn s(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.weights.first().map_or(0, Weight::rank)
    }

    pub fn with_tag(mut self, tag: Tag) -> Self {
        self.tag = tag;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(Weight::is_zero)
    }

    pub fn is_dominant(&self) -> bool {
        self.weights.iter().all(Weight::is_dominant)
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(Weight::is_integral)
    }

    /// Concatenated coordinates.
    pub fn flatten(&self) -> Vec<BigRational> {
        self.weights.iter().flat_map(|w| w.coords.iter().cloned()).collect()
    }

    pub fn from_flat(v: &[BigRational], s: usize, tag: Tag) -> Self {
        let r = if s == 0 { 0 } else { v.len() / s };
        RayTuple {
            weights: v.chunks(r.max(1)).take(s).map(|c| Weight { coords: c.to_vec() }).collect(),
            tag,
        }
    }

    pub fn from_ray(ray: &Ray<BigInt>, s: usize, tag: Tag) -> Self {
        let q: Vec<BigRational> = ray.coords.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        Self::from_flat(&q, s, tag)
    }

    /// The primitive integer point on the same ray.
    pub fn primitive(&self) -> RayTuple {
        let ints = clear_denominators(&self.flatten());
        let q: Vec<BigRational> = ints.into_iter().map(BigRational::from_integer).collect();
        Self::from_flat(&q, self.s(), self.tag)
    }

    pub fn to_ray(&self) -> Ray<BigInt> {
        Ray { coords: clear_denominators(&self.flatten()) }
    }

    /// Same ray, ignoring tags.
    pub fn same_ray(&self, other: &RayTuple) -> bool {
        self.to_ray() == other.to_ray()
    }

    pub fn scale(&self, c: &BigRational) -> RayTuple {
        RayTuple { weights: self.weights.iter().map(|w| w.scale(c)).collect(), tag: self.tag }
    }

    pub fn add(&self, other: &RayTuple) -> RayTuple {
        RayTuple {
            weights: self.weights.iter().zip(&other.weights).map(|(a, b)| a + b).collect(),
            tag: self.tag,
        }
    }

    pub fn sub(&self, other: &RayTuple) -> RayTuple {
        RayTuple {
            weights: self.weights.iter().zip(&other.weights).map(|(a, b)| a - b).collect(),
            tag: self.tag,
        }
    }

    /// Coweight form `(kappa(lambda_1), ..., kappa(lambda_s))`.
    pub fn kappa(&self, rs: &RootSystem) -> Vec<Coweight<BigRational>> {
        self.weights.iter().map(|w| rs.kappa(w)).collect()
    }

    pub fn from_coweights(rs: &RootSystem, hs: &[Coweight<BigRational>], tag: Tag) -> Self {
        RayTuple { weights: hs.iter().map(|h| rs.kappa_inv(h)).collect(), tag }
    }

    /// JSON with primitive integer coordinates.
    pub fn to_json_value(&self) -> Result<serde_json::Value> {
        let p = self.primitive();
        let weights = p
            .weights
            .iter()
            .map(|w| {
                w.coords
                    .iter()
                    .map(|c| c.to_integer().to_i64().ok_or(Error::Overflow("JSON coordinates")))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(serde_json::to_value(RayTupleJson { weights, tag: self.tag })?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(self.to_json_value()?.to_string())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: RayTupleJson = serde_json::from_str(s)?;
        Self::from_json_parts(j)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        Self::from_json_parts(serde_json::from_value(v)?)
    }

    fn from_json_parts(j: RayTupleJson) -> Result<Self> {
        let rank = j.weights.first().map_or(0, Vec::len);
        if j.weights.iter().any(|w| w.len() != rank) {
            return Err(Error::Parse("weights of different lengths".into()));
        }
        Ok(RayTuple {
            weights: j
                .weights
                .into_iter()
                .map(|w| Weight { coords: w.into_iter().map(BigRational::from_int).collect() })
                .collect(),
            tag: j.tag,
        })
    }

    /// Parses `s` weights of the given rank written as `1 0 0 0; 0 0 1 0; ...`
    /// (coordinates may be fractions like `-1/2`).
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let weights = text
            .split(';')
            .map(|part| {
                let coords = part
                    .split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?;
                if coords.len() != rank {
                    return Err(Error::DimensionMismatch { expected: rank, got: coords.len() });
                }
                Ok(Weight { coords })
            })
            .collect::<Result<_>>()?;
        Ok(RayTuple { weights, tag: Tag::User })
    }
}

/// Parses a combination of fundamental weights as printed by `Display`:
/// `ω1+2ω4`, `-(1/2)ω2+ω3`, `0`. `w` may stand in for `ω`.
pub fn parse_weight(text: &str, rank: usize) -> Result<Weight<BigRational>> {
    let bad = || Error::Parse(format!("bad weight `{text}`"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).map(|c| if c == 'w' { 'ω' } else { c }).collect();
    let mut w = Weight::zero(rank);
    if t == "0" {
        return Ok(w);
    }
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, rest.strip_prefix('+').unwrap_or(rest)),
        };
        let first = body.chars().next().ok_or_else(bad)?.len_utf8();
        let end = body[first..].find(['+', '-']).map_or(body.len(), |i| i + first);
        let term = &body[..end];
        rest = &body[end..];
        let (coef, idx) = term.split_once('ω').ok_or_else(bad)?;
        let coef = coef.trim_start_matches('(').trim_end_matches(')');
        let c = if coef.is_empty() { BigRational::from_int(1) } else { parse_rational(coef)? };
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 || i > rank {
            return Err(Error::NodeOutOfRange { node: i, rank });
        }
        w.coords[i - 1] += c * BigRational::from_int(sign);
    }
    Ok(w)
}

impl RayTuple {
    /// Parses `(ω2, ω1+ω4, ω3)`, the `Display` form.
    pub fn parse_display(text: &str, rank: usize) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let weights = inner
            .split(',')
            .map(|part| parse_weight(part, rank))
            .collect::<Result<_>>()?;
        Ok(RayTuple { weights, tag: Tag::User })
    }
}

fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coordinate `{t}`"));
    match t.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(t.trim().parse().map_err(|_| bad())?)),
    }
}

/// `(ω2, ω3, ω3)`.
impl fmt::Display for RayTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `sum c omega_i` from 0-based `(i, c)` pairs.
pub fn weight_from_terms(rank: usize, terms: &[(usize, i64)]) -> Weight<BigRational> {
    let mut w = Weight::zero(rank);
    for &(i, c) in terms {
        w.coords[i] += BigRational::from_int(c);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_primitive() {
        let t = RayTuple::parse("1/2 0; 0 1/2; 0 0", 2).unwrap();
        let j = t.to_json().unwrap();
        assert_eq!(j, r#"{"tag":"user","weights":[[1,0],[0,1],[0,0]]}"#);
        let back = RayTuple::from_json(&j).unwrap();
        assert!(back.same_ray(&t));
        assert_eq!(back.primitive(), back);
    }

    #[test]
    fn display() {
        let t = RayTuple::from_ints(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 1]], Tag::User);
        assert_eq!(t.to_string(), "(ω2, ω3, ω1+ω4)");
    }

    #[test]
    fn display_round_trip() {
        for text in ["(ω2, ω1+ω4, ω3)", "(0, -(1/2)ω2+ω4, 2ω3)"] {
            let t = RayTuple::parse_display(text, 4).unwrap();
            assert_eq!(t.to_string(), text);
        }
        assert_eq!(parse_weight("w1 + 2w4", 4).unwrap(), Weight::from_ints(&[1, 0, 0, 2]));
        assert!(parse_weight("ω5", 4).is_err());
        assert!(parse_weight("x1", 4).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(RayTuple::parse("1 0; 1", 2).is_err());
        assert!(RayTuple::parse("1 x", 2).is_err());
        assert!(RayTuple::parse("1/0 0", 2).is_err());
    }
}
