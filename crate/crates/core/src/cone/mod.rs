//! Exact polyhedral cones: H-representations, extremal rays by double
//! description, extremality and face restriction.
//!
//! Cones are `{x : A x >= 0, E x = 0}` with integer rows. Only pointed cones
//! are supported.

mod text;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{clear_denominators, primitive, Field, Integral};

pub use text::{parse_rays, rays_to_text};

/// A primitive integer vector spanning a ray.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray<I = BigInt> {
    pub coords: Vec<I>,
}

impl<I: Integral> Ray<I> {
    pub fn new(coords: Vec<I>) -> Self {
        Ray { coords: primitive(&coords) }
    }

    /// The primitive integer vector on the ray through a rational vector.
    pub fn from_rational<F: Field>(v: &[F]) -> Result<Self> {
        let coords = clear_denominators(v)
            .iter()
            .map(|x| I::from_bigint(x).ok_or(Error::Overflow("ray coordinates")))
            .collect::<Result<_>>()?;
        Ok(Ray { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep<I = BigInt> {
    dim: usize,
    inequalities: Vec<Vec<I>>,
    equalities: Vec<Vec<I>>,
}

fn dot<I: Integral>(a: &[I], x: &[I]) -> I {
    a.iter()
        .zip(x)
        .fold(I::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
}

fn normalize_equality<I: Integral>(row: &[I]) -> Vec<I> {
    let p = primitive(row);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => p.iter().map(|y| -y.clone()).collect(),
        _ => p,
    }
}

impl<I: Integral> HRep<I> {
    pub fn new(dim: usize) -> Self {
        HRep { dim, inequalities: Vec::new(), equalities: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Vec<I>] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[Vec<I>] {
        &self.equalities
    }

    fn check_len(&self, row: &[I]) -> Result<()> {
        if row.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, got: row.len() })
        }
    }

    /// Adds `row . x >= 0`. Rows are stored primitive; zero rows and
    /// duplicates are dropped. Returns the row's index.
    pub fn add_inequality(&mut self, row: Vec<I>) -> Result<Option<usize>> {
        self.check_len(&row)?;
        let p = primitive(&row);
        if p.iter().all(|x| x.is_zero()) {
            return Ok(None);
        }
        if let Some(i) = self.inequalities.iter().position(|r| *r == p) {
            return Ok(Some(i));
        }
        self.inequalities.push(p);
        Ok(Some(self.inequalities.len() - 1))
    }

    /// Adds `row . x = 0`.
    pub fn add_equality(&mut self, row: Vec<I>) -> Result<()> {
        self.check_len(&row)?;
        let p = normalize_equality(&row);
        if p.iter().any(|x| !x.is_zero()) && !self.equalities.contains(&p) {
            self.equalities.push(p);
        }
        Ok(())
    }

    pub fn add_inequality_rational<F: Field>(&mut self, row: &[F]) -> Result<Option<usize>> {
        self.add_inequality(to_integral(row)?)
    }

    pub fn add_equality_rational<F: Field>(&mut self, row: &[F]) -> Result<()> {
        self.add_equality(to_integral(row)?)
    }

    /// The first violated constraint, if any. Inequalities are numbered
    /// first, then equalities.
    pub fn check(&self, x: &[I]) -> Result<()> {
        self.check_len(x)?;
        for (i, a) in self.inequalities.iter().enumerate() {
            if dot(a, x).is_negative() {
                return Err(Error::ViolatesConstraint { row: i });
            }
        }
        for (i, e) in self.equalities.iter().enumerate() {
            if !dot(e, x).is_zero() {
                return Err(Error::ViolatesConstraint { row: self.inequalities.len() + i });
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &[I]) -> bool {
        self.check(x).is_ok()
    }

    /// Indices of the inequalities tight at `x`.
    pub fn tight_set(&self, x: &[I]) -> Vec<usize> {
        (0..self.inequalities.len())
            .filter(|&i| dot(&self.inequalities[i], x).is_zero())
            .collect()
    }

    /// Turns the chosen inequalities into equalities.
    pub fn restrict_to_face(&self, tight: &[usize]) -> Result<HRep<I>> {
        let mut out = HRep::new(self.dim);
        for &t in tight {
            if t >= self.inequalities.len() {
                return Err(Error::InvalidFace(format!("no inequality {t}")));
            }
        }
        for (i, row) in self.inequalities.iter().enumerate() {
            if tight.contains(&i) {
                out.add_equality(row.clone())?;
            } else {
                out.add_inequality(row.clone())?;
            }
        }
        for e in &self.equalities {
            out.add_equality(e.clone())?;
        }
        Ok(out)
    }

    fn rank_of(&self, rows: &[&Vec<I>]) -> usize {
        let owned: Vec<Vec<I>> = rows.iter().map(|r| (*r).clone()).collect();
        linalg::int_rank(&owned, self.dim)
    }

    /// Dimension of the linear span of the cone, computed from its rays.
    pub fn cone_dim(&self) -> Result<usize> {
        let rays = self.extremal_rays()?;
        Ok(linalg::int_rank(&rays.into_iter().map(|r| r.coords).collect::<Vec<_>>(), self.dim))
    }

    /// Whether `r` spans an extremal ray: the constraints tight at `r` cut
    /// out a line.
    pub fn is_extremal(&self, r: &[I]) -> Result<bool> {
        self.check(r)?;
        if r.iter().all(|x| x.is_zero()) {
            return Ok(false);
        }
        let tight = self.tight_set(r);
        let rows: Vec<&Vec<I>> = self
            .equalities
            .iter()
            .chain(tight.iter().map(|&i| &self.inequalities[i]))
            .collect();
        Ok(self.rank_of(&rows) + 1 == self.dim)
    }

    /// The extremal rays of a pointed cone, sorted, by the double
    /// description method with rows inserted in index order.
    pub fn extremal_rays(&self) -> Result<Vec<Ray<I>>> {
        let n = self.dim;
        let m = self.inequalities.len();
        let to_q = |row: &Vec<I>| -> Vec<num_rational::BigRational> {
            row.iter().map(|x| num_rational::BigRational::from_integer(x.to_bigint())).collect()
        };
        // independent equalities first, then inequalities, up to full rank
        let mut basis: Vec<Vec<num_rational::BigRational>> = Vec::new();
        let mut picked_eq = Vec::new();
        for e in &self.equalities {
            let mut trial = basis.clone();
            trial.push(to_q(e));
            if linalg::rank(&trial, n) == trial.len() {
                basis = trial;
                picked_eq.push(e.clone());
            }
        }
        let eq_rank = basis.len();
        let mut picked_ineq = Vec::new();
        for (i, a) in self.inequalities.iter().enumerate() {
            if basis.len() == n {
                break;
            }
            let mut trial = basis.clone();
            trial.push(to_q(a));
            if linalg::rank(&trial, n) == trial.len() {
                basis = trial;
                picked_ineq.push(i);
            }
        }
        if basis.len() < n {
            let k = linalg::kernel(&basis, n);
            return Err(Error::NotPointed(clear_denominators(&k[0])));
        }
        let cone_dim = n - eq_rank;
        if cone_dim == 0 {
            return Ok(Vec::new());
        }
        let inv = linalg::inverse(&basis).ok_or_else(|| Error::Inconsistent("singular basis".into()))?;
        let words = m.div_ceil(64).max(1);
        let mut rays: Vec<(Vec<I>, Vec<u64>)> = Vec::with_capacity(cone_dim);
        for (slot, &row) in picked_ineq.iter().enumerate() {
            // column of the inverse: tight on every picked row but this one
            let col: Vec<num_rational::BigRational> = inv.iter().map(|r| r[eq_rank + slot].clone()).collect();
            let v: Vec<I> = clear_denominators(&col)
                .iter()
                .map(|x| I::from_bigint(x).ok_or(Error::Overflow("double description")))
                .collect::<Result<_>>()?;
            let mut z = vec![0u64; words];
            for &other in &picked_ineq {
                if other != row {
                    z[other / 64] |= 1 << (other % 64);
                }
            }
            rays.push((v, z));
        }
        let picked: BTreeSet<usize> = picked_ineq.iter().copied().collect();
        for (i, a) in self.inequalities.iter().enumerate() {
            if picked.contains(&i) {
                continue;
            }
            let vals: Vec<I> = rays.iter().map(|(r, _)| dot(a, r)).collect();
            let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
            if neg.is_empty() {
                for (k, (_, z)) in rays.iter_mut().enumerate() {
                    if vals[k].is_zero() {
                        z[i / 64] |= 1 << (i % 64);
                    }
                }
                continue;
            }
            let need = cone_dim.saturating_sub(2);
            let pairs: Vec<(usize, usize)> = pos
                .iter()
                .flat_map(|&p| neg.iter().map(move |&q| (p, q)))
                .collect();
            let adjacent: Vec<(usize, usize, Vec<u64>)> = pairs
                .par_iter()
                .filter_map(|&(p, q)| {
                    let common: Vec<u64> = rays[p].1.iter().zip(&rays[q].1).map(|(x, y)| x & y).collect();
                    let count: u32 = common.iter().map(|w| w.count_ones()).sum();
                    if (count as usize) < need {
                        return None;
                    }
                    let blocked = rays.iter().enumerate().any(|(k, (_, z))| {
                        k != p && k != q && common.iter().zip(z).all(|(c, zz)| c & !zz == 0)
                    });
                    (!blocked).then_some((p, q, common))
                })
                .collect();
            let mut next: Vec<(Vec<I>, Vec<u64>)> = Vec::new();
            for (k, (r, z)) in rays.iter().enumerate() {
                if vals[k].is_positive() {
                    next.push((r.clone(), z.clone()));
                } else if vals[k].is_zero() {
                    let mut z = z.clone();
                    z[i / 64] |= 1 << (i % 64);
                    next.push((r.clone(), z));
                }
            }
            for (p, q, mut common) in adjacent {
                let ap = vals[p].clone();
                let aq = -vals[q].clone();
                let v: Vec<I> = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(x, y)| ap.clone() * x.clone() + aq.clone() * y.clone())
                    .collect();
                common[i / 64] |= 1 << (i % 64);
                next.push((primitive(&v), common));
            }
            rays = next;
        }
        let mut out: Vec<Ray<I>> = rays.into_iter().map(|(r, _)| Ray { coords: r }).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }
}

fn to_integral<F: Field, I: Integral>(row: &[F]) -> Result<Vec<I>> {
    clear_denominators(row)
        .iter()
        .map(|x| I::from_bigint(x).ok_or(Error::Overflow("constraint row")))
        .collect()
}
