//! Plain text form of H- and V-representations.
//!
//! One row per line, integers separated by whitespace, `#` starts a comment.
//! In an H-representation a row is an inequality `a . x >= 0`, or an
//! equality `a . x = 0` when prefixed by `=`; an optional `dim N` line fixes
//! the ambient dimension (needed when there are no rows).

use std::fmt::Write;

use super::{HRep, Ray};
use crate::error::{Error, Result};
use crate::scalar::Integral;

fn parse_row<I: Integral>(line: &str, lineno: usize) -> Result<Vec<I>> {
    line.split_whitespace()
        .map(|t| {
            I::from_str_radix(t, 10).map_err(|_| Error::Parse(format!("line {lineno}: bad integer `{t}`")))
        })
        .collect()
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

impl<I: Integral> HRep<I> {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "dim {}", self.dim).unwrap();
        for row in &self.inequalities {
            writeln!(s, "{}", join(row)).unwrap();
        }
        for row in &self.equalities {
            writeln!(s, "= {}", join(row)).unwrap();
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut dim: Option<usize> = None;
        let mut ineqs: Vec<Vec<I>> = Vec::new();
        let mut eqs: Vec<Vec<I>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = content(line);
            if line.is_empty() {
                continue;
            }
            if let Some(d) = line.strip_prefix("dim") {
                let d = d.trim().parse().map_err(|_| Error::Parse(format!("line {}: bad dim", i + 1)))?;
                dim = Some(d);
            } else if let Some(rest) = line.strip_prefix('=') {
                eqs.push(parse_row(rest, i + 1)?);
            } else {
                ineqs.push(parse_row(line, i + 1)?);
            }
        }
        let dim = dim
            .or_else(|| ineqs.iter().chain(&eqs).map(Vec::len).next())
            .ok_or_else(|| Error::Parse("empty H-representation without `dim`".into()))?;
        let mut h = HRep::new(dim);
        for r in ineqs {
            h.add_inequality(r)?;
        }
        for r in eqs {
            h.add_equality(r)?;
        }
        Ok(h)
    }
}

fn join<I: Integral>(row: &[I]) -> String {
    row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn rays_to_text<I: Integral>(rays: &[Ray<I>]) -> String {
    rays.iter().map(|r| join(&r.coords) + "\n").collect()
}

pub fn parse_rays<I: Integral>(text: &str) -> Result<Vec<Ray<I>>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !content(l).is_empty())
        .map(|(i, l)| Ok(Ray::new(parse_row(content(l), i + 1)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn h_text_round_trip() {
        let text = "# a face\ndim 3\n1 0 0\n0 2 0  # scaled\n= 1 -1 0\n";
        let h: HRep<BigInt> = HRep::parse_text(text).unwrap();
        assert_eq!(h.inequalities().len(), 2);
        assert_eq!(h.inequalities()[1], vec![BigInt::from(0), BigInt::from(1), BigInt::from(0)]);
        assert_eq!(h.equalities().len(), 1);
        let again: HRep<BigInt> = HRep::parse_text(&h.to_text()).unwrap();
        assert_eq!(again, h);
        assert!(HRep::<BigInt>::parse_text("1 x 2").is_err());
    }

    #[test]
    fn v_text_round_trip() {
        let rays: Vec<Ray<BigInt>> = parse_rays("1 1 0\n# skip\n0 2 2\n").unwrap();
        assert_eq!(rays[1].coords, vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)]);
        assert_eq!(parse_rays::<BigInt>(&rays_to_text(&rays)).unwrap(), rays);
    }
}
