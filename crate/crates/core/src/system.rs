//! The tensor cone `Gamma(s, G)` of one root system as an exact
//! H-representation: dominance of every entry plus one inequality per
//! regular facet.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cone::{HRep, Ray};
use crate::error::{Error, Result};
use crate::faces::{enumerate_regular_facets, FaceSpec, LinearForm};
use crate::rootdata::RootSystem;
use crate::schubert::ProductTable;
use crate::tuple::{RayTuple, Tag};

#[derive(Debug, Clone)]
pub struct EigenconeSystem {
    table: ProductTable,
    s: usize,
    facets: Vec<FaceSpec>,
    /// `(omitted node, form)` per facet
    forms: Vec<LinearForm>,
    hrep: HRep<BigInt>,
}

impl EigenconeSystem {
    pub fn new(table: ProductTable, s: usize) -> Result<Self> {
        if s < 2 {
            return Err(Error::ArityMismatch { expected: 3, got: s });
        }
        let facets = enumerate_regular_facets(&table, s, false)?;
        let rs = table.root_system();
        let r = rs.rank();
        let mut hrep = HRep::new(s * r);
        for i in 0..s * r {
            let mut row = vec![BigInt::zero(); s * r];
            row[i] = BigInt::from(1);
            hrep.add_inequality(row)?;
        }
        let mut forms = Vec::with_capacity(facets.len());
        for f in &facets {
            let (k, form) = f.inequality_forms(rs).remove(0);
            debug_assert!(!f.parabolic.contains(k));
            // sum_j (w_j^{-1} lambda_j)(x_k) <= 0
            let row: Vec<BigRational> = form.flatten().into_iter().map(|c| -c).collect();
            hrep.add_inequality_rational(&row)?;
            forms.push(form);
        }
        Ok(EigenconeSystem { table, s, facets, forms, hrep })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.table.root_system()
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn facets(&self) -> &[FaceSpec] {
        &self.facets
    }

    /// Inequality form of the `i`-th facet.
    pub fn facet_form(&self, i: usize) -> &LinearForm {
        &self.forms[i]
    }

    pub fn hrep(&self) -> &HRep<BigInt> {
        &self.hrep
    }

    /// Membership in the tensor cone: every entry dominant and every facet
    /// inequality satisfied.
    pub fn tens_membership(&self, x: &RayTuple) -> Result<bool> {
        self.check(x)?;
        if !x.is_dominant() {
            return Ok(false);
        }
        Ok(self.forms.iter().all(|f| !f.eval(x).is_positive()))
    }

    fn check(&self, x: &RayTuple) -> Result<()> {
        if x.s() != self.s {
            return Err(Error::ArityMismatch { expected: self.s, got: x.s() });
        }
        if x.rank() != self.root_system().rank() {
            return Err(Error::DimensionMismatch { expected: self.root_system().rank(), got: x.rank() });
        }
        Ok(())
    }

    /// Indices of the facets whose inequality is tight at `x`.
    pub fn tight_facets(&self, x: &RayTuple) -> Vec<usize> {
        (0..self.facets.len()).filter(|&i| self.forms[i].eval(x).is_zero()).collect()
    }

    /// H-representation of a face: the cone plus its defining equalities.
    pub fn face_hrep(&self, face: &FaceSpec) -> Result<HRep<BigInt>> {
        let rs = self.root_system();
        if face.s() != self.s {
            return Err(Error::ArityMismatch { expected: self.s, got: face.s() });
        }
        let mut h = self.hrep.clone();
        for (_, form) in face.inequality_forms(rs) {
            h.add_equality_rational(&form.flatten())?;
        }
        Ok(h)
    }

    /// Extremal rays of the whole cone.
    pub fn extremal_rays(&self) -> Result<Vec<RayTuple>> {
        Ok(self.hrep.extremal_rays()?.iter().map(|r| RayTuple::from_ray(r, self.s, Tag::Dd)).collect())
    }

    pub fn face_rays(&self, face: &FaceSpec) -> Result<Vec<RayTuple>> {
        Ok(self
            .face_hrep(face)?
            .extremal_rays()?
            .iter()
            .map(|r| RayTuple::from_ray(r, self.s, Tag::Dd))
            .collect())
    }

    /// Whether `x` spans an extremal ray of the cone.
    pub fn is_extremal(&self, x: &RayTuple) -> Result<bool> {
        self.check(x)?;
        let r: Ray<BigInt> = x.to_ray();
        match self.hrep.is_extremal(&r.coords) {
            Err(Error::ViolatesConstraint { .. }) => Ok(false),
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_system() {
        let rs = RootSystem::parse("A1").unwrap();
        let sys = EigenconeSystem::new(ProductTable::build(&rs).unwrap(), 3).unwrap();
        assert_eq!(sys.facets().len(), 3);
        let rays = sys.extremal_rays().unwrap();
        let expect = [[0, 1, 1], [1, 0, 1], [1, 1, 0]];
        assert_eq!(rays.len(), 3);
        for (r, e) in rays.iter().zip(expect) {
            let t = RayTuple::from_ints(&[&[e[0]], &[e[1]], &[e[2]]], Tag::User);
            assert!(r.same_ray(&t));
        }
        assert!(sys.tens_membership(&RayTuple::zero(3, 1, Tag::User)).unwrap());
        assert!(!sys.tens_membership(&RayTuple::from_ints(&[&[2], &[1], &[0]], Tag::User)).unwrap());
    }
}
