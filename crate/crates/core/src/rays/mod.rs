//! Rays of regular faces: basic divisor classes from simple covers, induction
//! from the Levi subgroup, and the decomposition of face points into the two.
//!
//! Pairs and entries are 0-based in this API: the pair `(j, v)` refers to
//! `words[j]`.

mod classify;
mod levi;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::faces::{FaceSpec, TypeIPair};
use crate::linalg;
use crate::rootdata::{Coweight, ParabolicSpec, RootSystem, Weight};
use crate::scalar::Field;
use crate::schubert::{self, ProductTable};
use crate::tuple::{RayTuple, Tag};
use crate::weyl::{self, WeylElem};

pub use classify::{classify_face, decompose_on_face, FaceReport, LeviImage};
pub use levi::levi_cone_rays;

/// The coefficients `c_{k,l}` of the class of `D(j, v)` for the tuple
/// `u = (w_1, ..., v, ..., w_s)`: `c_{k,l}` is the intersection number of
/// `u` with `u_k` replaced by `s_l u_k` when that is a cover inside `W^P`,
/// and 0 otherwise.
fn divisor_tuple(table: &ProductTable, face: &FaceSpec, j: usize, v: &WeylElem) -> Result<RayTuple> {
    let rs = table.root_system();
    let p = &face.parabolic;
    let r = rs.rank();
    let mut u = face.words.clone();
    u[j] = v.clone();
    let mut weights = Vec::with_capacity(u.len());
    for k in 0..u.len() {
        let mut lambda = Weight::<BigRational>::zero(r);
        for l in 0..r {
            if weyl::cover_test(rs, &u[k], l, p) {
                let mut uhat = u.clone();
                uhat[k] = weyl::compose(rs, &weyl::simple_reflection(rs, l), &u[k]);
                let c = table.multi_coeff(&uhat, p)?;
                lambda.coords[l] = BigRational::from_int(c);
            }
        }
        weights.push(lambda);
    }
    Ok(RayTuple::new(weights, Tag::Basic))
}

fn check_entry(face: &FaceSpec, j: usize) -> Result<()> {
    if j >= face.s() {
        return Err(Error::ArityMismatch { expected: face.s(), got: j + 1 });
    }
    Ok(())
}

/// The class of the divisor `D(j, v)` for a simple cover `v -> w_j`.
pub fn basic_divisor_class(table: &ProductTable, face: &FaceSpec, j: usize, v: &WeylElem) -> Result<RayTuple> {
    check_entry(face, j)?;
    let rs = table.root_system();
    let simple = face.type_i_pairs(rs).iter().any(|pr| pr.j == j && pr.v == *v);
    if !simple {
        return Err(Error::NotSimpleCover { j: j + 1, v: weyl::word_string(rs, v) });
    }
    divisor_tuple(table, face, j, v)
}

/// The same formula for a cover `v -> w_j` by a non-simple root. The result
/// is always zero; exposed as a consistency check.
pub fn classify_nonsimple(table: &ProductTable, face: &FaceSpec, j: usize, v: &WeylElem) -> Result<RayTuple> {
    check_entry(face, j)?;
    let rs = table.root_system();
    let covers = weyl::covers(rs, &face.words[j], &face.parabolic)?;
    match covers.iter().find(|c| c.lower == *v) {
        None => Err(Error::NotACover { j: j + 1, v: weyl::word_string(rs, v) }),
        Some(c) if c.simple => Err(Error::SimpleCover { j: j + 1, v: weyl::word_string(rs, v) }),
        Some(_) => divisor_tuple(table, face, j, v),
    }
}

/// All basic classes of a face, in the order of [`FaceSpec::type_i_pairs`].
pub fn basic_classes(table: &ProductTable, face: &FaceSpec) -> Result<Vec<(TypeIPair, RayTuple)>> {
    let rs = table.root_system();
    face.type_i_pairs(rs)
        .into_iter()
        .map(|pr| {
            let d = divisor_tuple(table, face, pr.j, &pr.v)?;
            Ok((pr, d))
        })
        .collect()
}

/// Subtracts multiples of `omega_k`, `k` outside `Delta(P)`, from every
/// entry so that it vanishes on every such `x_k`.
pub fn shift_to_degree0(rs: &RootSystem, mu: &RayTuple, p: &ParabolicSpec) -> RayTuple {
    let omitted = p.omitted(rs);
    if omitted.is_empty() {
        return mu.clone();
    }
    let r = rs.rank();
    // m[a][b] = omega_{omitted[b]}(x_{omitted[a]})
    let m: Vec<Vec<BigRational>> = omitted
        .iter()
        .map(|&ka| {
            omitted
                .iter()
                .map(|&kb| rs.eval_x(&Weight::<BigRational>::fundamental(r, kb), ka))
                .collect()
        })
        .collect();
    let weights = mu
        .weights
        .iter()
        .map(|w| {
            let rhs: Vec<BigRational> = omitted.iter().map(|&k| rs.eval_x(w, k)).collect();
            let t = linalg::solve(&m, &rhs).expect("fundamental weights are independent");
            let mut out = w.clone();
            for (&k, tk) in omitted.iter().zip(t) {
                out.coords[k] -= tk;
            }
            out
        })
        .collect();
    RayTuple::new(weights, mu.tag)
}

/// First entry and node where `mu` is not of degree 0.
pub fn degree_zero_violation(rs: &RootSystem, mu: &RayTuple, p: &ParabolicSpec) -> Option<(usize, usize, BigRational)> {
    for (j, w) in mu.weights.iter().enumerate() {
        for k in p.omitted(rs) {
            let v = rs.eval_x(w, k);
            if !v.is_zero() {
                return Some((j, k, v));
            }
        }
    }
    None
}

/// Induction from the Levi without the degree-0 check:
/// `(w_1 mu_1, ..., w_s mu_s) - sum over type I pairs (j, v, l) of
/// (w_j mu_j)(alpha_l^vee) [D(j, v)]`.
pub fn induct_raw(table: &ProductTable, face: &FaceSpec, mu: &RayTuple) -> Result<RayTuple> {
    let rs = table.root_system();
    if mu.s() != face.s() {
        return Err(Error::ArityMismatch { expected: face.s(), got: mu.s() });
    }
    let moved: Vec<Weight<BigRational>> = face
        .words
        .iter()
        .zip(&mu.weights)
        .map(|(w, m)| weyl::act(rs, w, m))
        .collect();
    let mut out = RayTuple::new(moved.clone(), Tag::Induced);
    for (pr, d) in basic_classes(table, face)? {
        let c = rs.pair_positive(&moved[pr.j], rs.simple_root_index(pr.l));
        if !c.is_zero() {
            out = out.sub(&d.scale(&c));
        }
    }
    Ok(out.with_tag(Tag::Induced))
}

/// Induction of a degree-0 tuple of Levi weights to a point of the face.
pub fn induct(table: &ProductTable, face: &FaceSpec, mu: &RayTuple) -> Result<RayTuple> {
    let rs = table.root_system();
    if let Some((j, k, value)) = degree_zero_violation(rs, mu, &face.parabolic) {
        return Err(Error::NotDegreeZero { j: j + 1, k: k + 1, value: value.to_string() });
    }
    induct_raw(table, face, mu)
}

/// [`induct`] on the coweight side: `(y_1, ..., y_s) - sum (2 / (alpha_l,
/// alpha_l)) alpha_l(y_j) kappa[D(j, v)]` with `y_j = w_j h_j`.
pub fn induct_coweight(
    table: &ProductTable,
    face: &FaceSpec,
    hs: &[Coweight<BigRational>],
) -> Result<Vec<Coweight<BigRational>>> {
    let rs = table.root_system();
    if hs.len() != face.s() {
        return Err(Error::ArityMismatch { expected: face.s(), got: hs.len() });
    }
    for (j, h) in hs.iter().enumerate() {
        for k in face.parabolic.omitted(rs) {
            // omega_k(h) = 0 iff h lies in the span of the Levi coroots
            let v = rs.evaluate(&Weight::<BigRational>::fundamental(rs.rank(), k), h);
            if !v.is_zero() {
                return Err(Error::NotDegreeZero { j: j + 1, k: k + 1, value: v.to_string() });
            }
        }
    }
    let ys: Vec<Coweight<BigRational>> = face
        .words
        .iter()
        .zip(hs)
        .map(|(w, h)| rs.kappa(&weyl::act(rs, w, &rs.kappa_inv(h))))
        .collect();
    let mut out = ys.clone();
    for (pr, d) in basic_classes(table, face)? {
        let d_l = rs.half_norm(pr.l).to_big_rational();
        let c = ys[pr.j].alpha(pr.l) / d_l;
        if c.is_zero() {
            continue;
        }
        for (o, dk) in out.iter_mut().zip(d.kappa(rs)) {
            *o -= &(&dk * c.clone());
        }
    }
    Ok(out)
}

/// The tuple `(chi_{w_1} - chi_e, chi_{w_2}, ..., chi_{w_s})`.
pub fn chi_tuple(rs: &RootSystem, face: &FaceSpec) -> Result<RayTuple> {
    let p = &face.parabolic;
    let mut weights = face
        .words
        .iter()
        .map(|w| schubert::chi::<BigRational>(rs, w, p))
        .collect::<Result<Vec<_>>>()?;
    let chi_e = schubert::chi::<BigRational>(rs, &weyl::identity(rs), p)?;
    weights[0] -= &chi_e;
    Ok(RayTuple::new(weights, Tag::User))
}

/// Single-entry tuple `(0, ..., omega_k, ..., 0)` with `omega_k` in entry `j`.
pub fn unit_tuple(rs: &RootSystem, s: usize, j: usize, k: usize) -> RayTuple {
    let mut t = RayTuple::zero(s, rs.rank(), Tag::User);
    t.weights[j] = Weight::fundamental(rs.rank(), k);
    t
}
