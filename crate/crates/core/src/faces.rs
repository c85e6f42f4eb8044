//! Regular faces of the tensor cone and the inequalities that cut them out.
//!
//! A face is given by a standard parabolic `P` and `w_1, ..., w_s in W^P`
//! whose deformed product is the point class. For every simple root `alpha_k`
//! outside `Delta(P)` it contributes the inequality
//! `sum_j (w_j^{-1} lambda_j)(x_k) <= 0`, tight on the face.

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{Coweight, ParabolicSpec, RootSystem, Weight};
use crate::schubert::{self, ProductTable};
use crate::tuple::RayTuple;
use crate::weyl::{self, WeylElem};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceSpec {
    pub parabolic: ParabolicSpec,
    pub words: Vec<WeylElem>,
}

/// A simple cover `v -> w_j` by `alpha_l` (0-based `j` and `l`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeIPair {
    pub j: usize,
    pub v: WeylElem,
    pub l: usize,
}

/// A linear functional on `s`-tuples of weights: `coeffs[j][i]` multiplies
/// the `omega_i` coordinate of `lambda_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<Vec<BigRational>>,
}

impl LinearForm {
    pub fn eval(&self, x: &RayTuple) -> BigRational {
        self.coeffs
            .iter()
            .zip(&x.weights)
            .flat_map(|(c, w)| c.iter().zip(&w.coords))
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Concatenated coefficients.
    pub fn flatten(&self) -> Vec<BigRational> {
        self.coeffs.iter().flatten().cloned().collect()
    }
}

/// Serialized form: `{"type":"D4","s":3,"parabolic":[2],"words":[...]}`,
/// where `parabolic` lists the 1-based simple roots NOT in `Delta(P)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSpecJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub s: usize,
    pub parabolic: Vec<usize>,
    pub words: Vec<String>,
}

impl FaceSpec {
    /// Checks that the words are minimal representatives with the right
    /// total codimension. Levi-movability is checked by [`FaceSpec::validate`].
    pub fn new(rs: &RootSystem, parabolic: ParabolicSpec, words: Vec<WeylElem>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::ArityMismatch { expected: 1, got: 0 });
        }
        for w in &words {
            if !weyl::is_minimal(rs, w, &parabolic) {
                return Err(Error::NotMinimal(weyl::word_string(rs, w)));
            }
        }
        let dim = parabolic.dim(rs);
        let total: usize = words.iter().map(|w| dim - w.length()).sum();
        if total != dim {
            return Err(Error::CodimensionMismatch { expected: dim, got: total });
        }
        Ok(FaceSpec { parabolic, words })
    }

    /// Parses words (`;`-separated) for the parabolic omitting the given
    /// 1-based nodes.
    pub fn parse(rs: &RootSystem, omitted: &str, words: &str) -> Result<Self> {
        let p = ParabolicSpec::parse_omitted(rs, omitted)?;
        let ws = words
            .split(';')
            .map(|w| weyl::parse_word(rs, w.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rs, p, ws)
    }

    pub fn s(&self) -> usize {
        self.words.len()
    }

    /// Errors unless the deformed product of the classes is exactly the point
    /// class.
    pub fn validate(&self, table: &ProductTable) -> Result<()> {
        match table.levi_movable(&self.words, &self.parabolic)? {
            (true, 1) => Ok(()),
            (movable, c) => Err(Error::InvalidFace(format!(
                "intersection number {c}, Levi-movable: {movable}"
            ))),
        }
    }

    pub fn to_json(&self, rs: &RootSystem) -> FaceSpecJson {
        FaceSpecJson {
            cartan_type: rs.label().to_string(),
            s: self.s(),
            parabolic: self.parabolic.omitted(rs).iter().map(|k| k + 1).collect(),
            words: self.words.iter().map(|w| weyl::word_string(rs, w)).collect(),
        }
    }

    pub fn from_json(j: &FaceSpecJson) -> Result<(RootSystem, FaceSpec)> {
        let rs = RootSystem::parse(&j.cartan_type)?;
        if j.words.len() != j.s {
            return Err(Error::ArityMismatch { expected: j.s, got: j.words.len() });
        }
        let omitted = j
            .parabolic
            .iter()
            .map(|&n| if n == 0 { Err(Error::NodeOutOfRange { node: 0, rank: rs.rank() }) } else { Ok(n - 1) })
            .collect::<Result<Vec<_>>>()?;
        let p = ParabolicSpec::omitting(&rs, &omitted)?;
        let words = j.words.iter().map(|w| weyl::parse_word(&rs, w)).collect::<Result<_>>()?;
        let face = FaceSpec::new(&rs, p, words)?;
        Ok((rs, face))
    }

    /// `"1; s4 s2; ..."`, words joined by `;`.
    pub fn words_string(&self, rs: &RootSystem) -> String {
        self.words.iter().map(|w| weyl::word_string(rs, w)).collect::<Vec<_>>().join("; ")
    }

    /// The functional `lambda -> sum_j (w_j^{-1} lambda_j)(x_k)`.
    pub fn inequality_form(&self, rs: &RootSystem, k: usize) -> Result<LinearForm> {
        rs.check_node(k)?;
        if self.parabolic.contains(k) {
            return Err(Error::IndexInLevi(k + 1));
        }
        let r = rs.rank();
        let coeffs = self
            .words
            .iter()
            .map(|w| {
                let winv = weyl::inverse(rs, w);
                (0..r)
                    .map(|i| {
                        let img = weyl::act(rs, &winv, &Weight::<BigRational>::fundamental(r, i));
                        rs.eval_x(&img, k)
                    })
                    .collect()
            })
            .collect();
        Ok(LinearForm { coeffs })
    }

    /// One functional per simple root outside `Delta(P)`.
    pub fn inequality_forms(&self, rs: &RootSystem) -> Vec<(usize, LinearForm)> {
        self.parabolic
            .omitted(rs)
            .into_iter()
            .map(|k| (k, self.inequality_form(rs, k).expect("omitted node")))
            .collect()
    }

    /// `sum_j (w_j^{-1} lambda_j)(x_k)`: at most 0 on the cone, 0 on the face.
    pub fn eval_inequality(&self, rs: &RootSystem, x: &RayTuple, k: usize) -> Result<BigRational> {
        self.check_arity(x)?;
        Ok(self.inequality_form(rs, k)?.eval(x))
    }

    /// The same inequality on the coweight side, `sum_j omega_k(w_j^{-1} h_j)`;
    /// it equals `(alpha_k, alpha_k)/2` times the weight-side value at
    /// `lambda = kappa^{-1}(h)`.
    pub fn eval_inequality_coweight(
        &self,
        rs: &RootSystem,
        hs: &[Coweight<BigRational>],
        k: usize,
    ) -> Result<BigRational> {
        rs.check_node(k)?;
        if self.parabolic.contains(k) {
            return Err(Error::IndexInLevi(k + 1));
        }
        if hs.len() != self.s() {
            return Err(Error::ArityMismatch { expected: self.s(), got: hs.len() });
        }
        let omega_k = Weight::<BigRational>::fundamental(rs.rank(), k);
        let mut total = BigRational::zero();
        for (w, h) in self.words.iter().zip(hs) {
            // the action on the Cartan subalgebra commutes with kappa
            let winv = weyl::inverse(rs, w);
            let moved = rs.kappa(&weyl::act(rs, &winv, &rs.kappa_inv(h)));
            total += rs.evaluate(&omega_k, &moved);
        }
        Ok(total)
    }

    pub fn on_face(&self, rs: &RootSystem, x: &RayTuple) -> Result<bool> {
        self.check_arity(x)?;
        Ok(self.inequality_forms(rs).iter().all(|(_, f)| f.eval(x).is_zero()))
    }

    fn check_arity(&self, x: &RayTuple) -> Result<()> {
        if x.s() != self.s() {
            return Err(Error::ArityMismatch { expected: self.s(), got: x.s() });
        }
        Ok(())
    }

    /// All `(j, v, l)` with `v -> w_j` by the simple root `alpha_l`.
    pub fn type_i_pairs(&self, rs: &RootSystem) -> Vec<TypeIPair> {
        let mut out = Vec::new();
        for (j, w) in self.words.iter().enumerate() {
            for l in 0..rs.rank() {
                if weyl::is_left_descent(rs, w, l) {
                    let v = weyl::compose(rs, &weyl::simple_reflection(rs, l), w);
                    if weyl::is_minimal(rs, &v, &self.parabolic) {
                        out.push(TypeIPair { j, v, l });
                    }
                }
            }
        }
        out
    }
}

/// All regular facets for `s` factors: maximal `P` and tuples in `W^P` of
/// total codimension `dim G/P` with deformed product equal to the point
/// class. Ordered by omitted node, then lexicographically by the position
/// of the words in the enumeration of `W^P`. With `quotient`, only the
/// lexicographically least member of each orbit under permuting the factors
/// is kept.
pub fn enumerate_regular_facets(table: &ProductTable, s: usize, quotient: bool) -> Result<Vec<FaceSpec>> {
    let rs = table.root_system();
    let mut out = Vec::new();
    for k in 0..rs.rank() {
        let p = ParabolicSpec::maximal(rs, k)?;
        let reps = weyl::minimal_reps(rs, &p)?;
        let dim = p.dim(rs);
        let codims: Vec<usize> = reps.iter().map(|w| dim - w.length()).collect();
        // chi_{w}(x_k) for each representative, and chi_e(x_k)
        let chis: Vec<BigRational> = reps
            .iter()
            .map(|w| Ok(rs.eval_x(&schubert::chi::<BigRational>(rs, w, &p)?, k)))
            .collect::<Result<_>>()?;
        let chi_e = rs.eval_x(&schubert::chi::<BigRational>(rs, &weyl::identity(rs), &p)?, k);
        let tuples = index_tuples(&codims, s, dim, quotient);
        let found: Vec<Vec<usize>> = tuples
            .into_par_iter()
            .filter(|t| {
                let gap = t.iter().fold(chi_e.clone(), |acc, &i| acc - &chis[i]);
                if !gap.is_zero() {
                    return false;
                }
                let ws: Vec<WeylElem> = t.iter().map(|&i| reps[i].clone()).collect();
                table.multi_coeff_unchecked(&ws, &p) == 1
            })
            .collect();
        for t in found {
            out.push(FaceSpec { parabolic: p.clone(), words: t.iter().map(|&i| reps[i].clone()).collect() });
        }
    }
    Ok(out)
}

/// Index tuples of length `s` whose codimensions add up to `dim`, in
/// lexicographic order; nondecreasing tuples only when `sorted`.
fn index_tuples(codims: &[usize], s: usize, dim: usize, sorted: bool) -> Vec<Vec<usize>> {
    fn rec(codims: &[usize], s: usize, left: usize, sorted: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let start = if sorted { cur.last().copied().unwrap_or(0) } else { 0 };
        for i in start..codims.len() {
            if codims[i] <= left {
                cur.push(i);
                rec(codims, s, left - codims[i], sorted, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(codims, s, dim, sorted, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use crate::tuple::Tag;
    use num_traits::Signed;
    use std::sync::OnceLock;

    fn d4_table() -> &'static ProductTable {
        static T: OnceLock<ProductTable> = OnceLock::new();
        T.get_or_init(|| ProductTable::build(&RootSystem::parse("D4").unwrap()).unwrap())
    }

    fn ex1(rs: &RootSystem) -> FaceSpec {
        FaceSpec::parse(rs, "2", "s4 s3 s1 s2; s3 s1 s2 s4 s3 s1 s2; s1 s2 s4 s2 s3 s1 s2").unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_int(n)
    }

    #[test]
    fn a1_triangle_facets() {
        let rs = RootSystem::parse("A1").unwrap();
        let t = ProductTable::build(&rs).unwrap();
        let facets = enumerate_regular_facets(&t, 3, false).unwrap();
        let words: Vec<Vec<usize>> = facets.iter().map(|f| f.words.iter().map(|w| w.length()).collect()).collect();
        assert_eq!(words, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(enumerate_regular_facets(&t, 3, true).unwrap().len(), 1);
        let x = RayTuple::from_ints(&[&[1], &[1], &[0]], Tag::User);
        assert_eq!(facets[0].eval_inequality(&rs, &x, 0).unwrap(), q(0));
        assert_eq!(facets[0].type_i_pairs(&rs).len(), 2);
    }

    #[test]
    fn ex1_face_values() {
        let t = d4_table();
        let rs = t.root_system();
        let f = ex1(rs);
        f.validate(t).unwrap();
        let apples = RayTuple::from_ints(&[&[0, 2, 0, 0], &[0, 0, 0, 2], &[0, 0, 2, 0]], Tag::User);
        assert_eq!(f.eval_inequality(rs, &apples, 1).unwrap(), q(2));
        let ray = RayTuple::from_ints(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 1, 0]], Tag::User);
        assert_eq!(f.eval_inequality(rs, &ray, 1).unwrap(), q(0));
        assert!(matches!(f.eval_inequality(rs, &ray, 0), Err(Error::IndexInLevi(1))));
        let hs = apples.kappa(rs);
        assert_eq!(f.eval_inequality_coweight(rs, &hs, 1).unwrap(), q(2));
    }

    #[test]
    fn json_round_trip() {
        let t = d4_table();
        let rs = t.root_system();
        let f = ex1(rs);
        let j = f.to_json(rs);
        assert_eq!(j.parabolic, vec![2]);
        let text = serde_json::to_string(&j).unwrap();
        let parsed: FaceSpecJson = serde_json::from_str(&text).unwrap();
        let (rs2, f2) = FaceSpec::from_json(&parsed).unwrap();
        assert_eq!(rs2.label(), rs.label());
        assert_eq!(f2, f);
    }

    #[test]
    fn facet_enumeration_contains_ex1_and_counts_pairs() {
        let t = d4_table();
        let rs = t.root_system();
        let facets = enumerate_regular_facets(t, 3, false).unwrap();
        assert!(facets.contains(&ex1(rs)));
        for f in &facets {
            assert_eq!(t.levi_movable(&f.words, &f.parabolic).unwrap(), (true, 1));
        }
        assert_eq!(ex1(rs).type_i_pairs(rs).len(), 7);
        let p4 = FaceSpec::parse(rs, "4", "1; s4 s2 s3 s1 s2 s4; s4 s2 s3 s1 s2 s4").unwrap();
        assert!(facets.contains(&p4));
        assert_eq!(p4.type_i_pairs(rs).len(), 2);
        let sorted = enumerate_regular_facets(t, 3, true).unwrap();
        assert!(sorted.len() * 6 >= facets.len() && sorted.len() < facets.len());
    }

    #[test]
    fn weight_and_coweight_sides_agree() {
        for label in ["B2", "G2", "A2"] {
            let rs = RootSystem::parse(label).unwrap();
            let t = ProductTable::build(&rs).unwrap();
            let facets = enumerate_regular_facets(&t, 3, false).unwrap();
            assert!(!facets.is_empty());
            let x = RayTuple::from_ints(&[&[1, 2], &[3, 0], &[1, 1]], Tag::User);
            for f in &facets {
                for (k, form) in f.inequality_forms(&rs) {
                    let a = form.eval(&x);
                    let b = f.eval_inequality_coweight(&rs, &x.kappa(&rs), k).unwrap();
                    assert_eq!(a.signum(), b.signum());
                    assert_eq!(b, a * rs.half_norm(k).to_big_rational());
                }
            }
        }
    }
}
