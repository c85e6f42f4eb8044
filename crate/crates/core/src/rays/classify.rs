use num_rational::BigRational;
use num_traits::Zero;

use super::{basic_classes, induct, levi_cone_rays, shift_to_degree0};
use crate::error::{Error, Result};
use crate::faces::{FaceSpec, TypeIPair};
use crate::system::EigenconeSystem;
use crate::tuple::{RayTuple, Tag};

/// A Levi ray and what induction does to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviImage {
    pub levi: RayTuple,
    pub image: RayTuple,
    /// index into [`FaceReport::face_rays`] when the image spans an extremal
    /// ray of the face
    pub face_ray: Option<usize>,
}

impl LeviImage {
    pub fn is_zero(&self) -> bool {
        self.image.is_zero()
    }

    /// Nonzero but not extremal on the face.
    pub fn is_exotic(&self) -> bool {
        !self.is_zero() && self.face_ray.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct FaceReport {
    pub face: FaceSpec,
    /// number of type I pairs
    pub q: usize,
    pub basic_rays: Vec<(TypeIPair, RayTuple)>,
    /// all extremal rays of the face, from double description
    pub face_rays: Vec<RayTuple>,
    pub type2_rays: Vec<RayTuple>,
    pub levi_rays: Vec<LeviImage>,
    /// Levi rays inducing to zero
    pub zero_count: usize,
    pub exotic: Vec<LeviImage>,
    pub total: usize,
}

impl FaceReport {
    /// `q - (s - 1) |Delta - Delta(P)|`, the predicted number of Levi rays
    /// inducing to zero.
    pub fn predicted_zero_count(&self, rank: usize) -> i64 {
        let omitted = rank - self.face.parabolic.levi_nodes().len();
        self.q as i64 - (self.face.s() as i64 - 1) * omitted as i64
    }
}

fn pair_value(sys: &EigenconeSystem, x: &RayTuple, pr: &TypeIPair) -> BigRational {
    let rs = sys.root_system();
    rs.pair_positive(&x.weights[pr.j], rs.simple_root_index(pr.l))
}

/// Splits a point of the face as `sum a_b delta_b + residual`, with one
/// coefficient `a_b = lambda_j(alpha_l^vee)` per type I pair `b = (j, v, l)`
/// and a residual vanishing at every pair.
pub fn decompose_on_face(
    sys: &EigenconeSystem,
    face: &FaceSpec,
    x: &RayTuple,
) -> Result<(Vec<(TypeIPair, BigRational)>, RayTuple)> {
    let rs = sys.root_system();
    if !face.on_face(rs, x)? || !sys.tens_membership(x)? {
        return Err(Error::NotOnFace(x.to_string()));
    }
    let basics = basic_classes(sys.table(), face)?;
    let mut residual = x.clone();
    let mut coeffs = Vec::with_capacity(basics.len());
    for (pr, d) in basics {
        let a = pair_value(sys, x, &pr);
        residual = residual.sub(&d.scale(&a));
        coeffs.push((pr, a));
    }
    for (pr, _) in &coeffs {
        if !pair_value(sys, &residual, pr).is_zero() {
            return Err(Error::Inconsistent("basic classes are not dual to the pairs".into()));
        }
    }
    if !sys.tens_membership(&residual)? {
        return Err(Error::Inconsistent(format!("residual {residual} left the cone")));
    }
    Ok((coeffs, residual.with_tag(x.tag)))
}

/// Full analysis of one face: basic rays, all extremal rays, their type,
/// and the induction of every Levi ray.
pub fn classify_face(sys: &EigenconeSystem, face: &FaceSpec) -> Result<FaceReport> {
    let rs = sys.root_system();
    let basic_rays = basic_classes(sys.table(), face)?;
    let q = basic_rays.len();
    let face_rays = sys.face_rays(face)?;

    for (_, d) in &basic_rays {
        if !face_rays.iter().any(|r| r.same_ray(d)) {
            return Err(Error::Inconsistent(format!("basic class {d} is not a face ray")));
        }
    }
    let mut type2_rays = Vec::new();
    for r in &face_rays {
        let is_basic = basic_rays.iter().any(|(_, d)| d.same_ray(r));
        let vanishes = basic_rays.iter().all(|(pr, _)| pair_value(sys, r, pr).is_zero());
        match (is_basic, vanishes) {
            (true, _) => {}
            (false, true) => type2_rays.push(r.clone()),
            (false, false) => {
                return Err(Error::Inconsistent(format!("face ray {r} is neither type I nor type II")))
            }
        }
    }

    let mut levi_rays = Vec::new();
    for levi in levi_cone_rays(rs, &face.parabolic, face.s())? {
        let shifted = shift_to_degree0(rs, &levi, &face.parabolic);
        let image = induct(sys.table(), face, &shifted)?;
        let face_ray = if image.is_zero() {
            None
        } else {
            face_rays.iter().position(|r| r.same_ray(&image))
        };
        levi_rays.push(LeviImage { levi, image, face_ray });
    }
    for t in &type2_rays {
        if !levi_rays.iter().any(|l| !l.is_zero() && l.image.same_ray(t)) {
            return Err(Error::Inconsistent(format!("type II ray {t} is not induced")));
        }
    }
    let zero_count = levi_rays.iter().filter(|l| l.is_zero()).count();
    let exotic = levi_rays.iter().filter(|l| l.is_exotic()).cloned().collect();
    let total = face_rays.len();
    Ok(FaceReport {
        face: face.clone(),
        q,
        basic_rays,
        face_rays: face_rays.into_iter().map(|r| r.with_tag(Tag::Dd)).collect(),
        type2_rays,
        levi_rays,
        zero_count,
        exotic,
        total,
    })
}
