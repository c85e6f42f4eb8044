//! Schubert calculus on `G/P`: ordinary cup products, intersection numbers
//! and the Levi-movability test for the deformed product.
//!
//! The public API uses the classes `[X_w]`, `w in W^P`, of codimension
//! `dim G/P - l(w)`. Internally everything is computed in `H*(G/B)` in the
//! basis `sigma^x = [X_{w0 x}]` (codimension `l(x)`), where the Chevalley
//! formula reads
//!
//! `sigma^{s_i} sigma^x = sum_{beta > 0, l(x s_beta) = l(x) + 1} <omega_i, beta^vee> sigma^{x s_beta}`.
//!
//! `[X_w]` on `G/P` pulls back to `sigma^{w0 w w0P}`.

mod cache;

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootdata::{ParabolicSpec, RootSystem, Weight};
use crate::scalar::Field;
use crate::weyl::{self, Enumeration, WeylElem};

pub use cache::{CACHE_ENV, CONVENTION_VERSION};

type Sparse = Vec<(u32, i64)>;

/// An element of `H*(G/P)` in the basis `[X_w]`, `w in W^P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    pub parabolic: ParabolicSpec,
    pub coeffs: BTreeMap<WeylElem, i64>,
    /// codimension, when homogeneous
    pub grade: usize,
}

impl SchubertClass {
    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| *c == 0)
    }

    pub fn coeff(&self, w: &WeylElem) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }
}

/// All structure constants of `H*(G/B)` for one root system.
#[derive(Debug, Clone)]
pub struct ProductTable {
    rs: RootSystem,
    elems: Enumeration,
    lengths: Vec<usize>,
    w0: WeylElem,
    /// `products[u * n + v]` = `sigma^u sigma^v`, for `l(u) + l(v) <= N`
    products: Vec<Sparse>,
}

impl ProductTable {
    /// Builds the table from scratch.
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let elems = Enumeration::new(weyl::elements(rs)?);
        let n = elems.len();
        let lengths: Vec<usize> = elems.elements.iter().map(WeylElem::length).collect();
        let top = rs.num_positive_roots();
        let chev = chevalley_table(rs, &elems);

        let mut products: Vec<Sparse> = vec![Vec::new(); n * n];
        // sigma^e is the unit
        for v in 0..n {
            products[v] = vec![(v as u32, 1)];
        }
        let mut by_length: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
        for (i, &l) in lengths.iter().enumerate() {
            by_length[l].push(i);
        }
        for d in 1..=top {
            let recipes = layer_recipes(rs, &elems, &chev, &by_length[d - 1], &by_length[d])?;
            for (u, recipe) in by_length[d].iter().zip(recipes) {
                let rows: Vec<(usize, Sparse)> = (0..n)
                    .into_par_iter()
                    .filter(|&v| lengths[v] + d <= top)
                    .map(|v| {
                        let mut acc: BTreeMap<u32, i128> = BTreeMap::new();
                        for &(i, up, c) in &recipe.terms {
                            for &(z, pc) in &products[up * n + v] {
                                for &(y, cc) in &chev[i][z as usize] {
                                    *acc.entry(y).or_insert(0) += c * i128::from(pc) * i128::from(cc);
                                }
                            }
                        }
                        let row = acc
                            .into_iter()
                            .filter(|(_, c)| *c != 0)
                            .map(|(y, c)| {
                                if c % recipe.denom != 0 {
                                    return Err(Error::Inconsistent(
                                        "non-integral Schubert structure constant".into(),
                                    ));
                                }
                                let q = i64::try_from(c / recipe.denom)
                                    .map_err(|_| Error::Overflow("Schubert structure constants"))?;
                                Ok((y, q))
                            })
                            .collect::<Result<Sparse>>()?;
                        Ok((v, row))
                    })
                    .collect::<Result<_>>()?;
                for (v, row) in rows {
                    products[u * n + v] = row;
                }
            }
        }
        let w0 = weyl::longest_element(rs);
        Ok(ProductTable { rs: rs.clone(), elems, lengths, w0, products })
    }

    /// Loads the table from `dir` when a valid cache file is present,
    /// otherwise builds it and writes the cache. `None` skips the disk.
    pub fn load_or_build(rs: &RootSystem, dir: Option<&Path>) -> Result<Self> {
        let Some(dir) = dir else {
            return Self::build(rs);
        };
        let path = cache::path_for(dir, rs);
        if let Some(t) = cache::load(rs, &path)? {
            return Ok(t);
        }
        let t = Self::build(rs)?;
        cache::store(&t, &path)?;
        Ok(t)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn elements(&self) -> &[WeylElem] {
        &self.elems.elements
    }

    pub fn num_elements(&self) -> usize {
        self.elems.len()
    }

    /// `sigma^u sigma^v` in `H*(G/B)`, by ids into [`Self::elements`].
    pub fn product_ids(&self, u: usize, v: usize) -> &[(u32, i64)] {
        &self.products[u * self.elems.len() + v]
    }

    fn id(&self, w: &WeylElem) -> usize {
        self.elems.id(w).expect("element of W")
    }

    fn check_minimal(&self, w: &WeylElem, p: &ParabolicSpec) -> Result<()> {
        if weyl::is_minimal(&self.rs, w, p) {
            Ok(())
        } else {
            Err(Error::NotMinimal(weyl::word_string(&self.rs, w)))
        }
    }

    /// Id of `sigma^{w0 w w0P}`, the pull-back of `[X_w]`.
    fn pullback_id(&self, w: &WeylElem, p: &ParabolicSpec) -> usize {
        let w0p = weyl::longest_in_levi(&self.rs, p);
        let x = weyl::compose(&self.rs, &weyl::compose(&self.rs, &self.w0, w), &w0p);
        self.id(&x)
    }

    /// Codimension of `[X_w]` in `G/P`.
    pub fn codim(&self, w: &WeylElem, p: &ParabolicSpec) -> usize {
        p.dim(&self.rs) - w.length()
    }

    fn multiply(&self, vec: &BTreeMap<usize, i64>, x: usize) -> Result<BTreeMap<usize, i64>> {
        let mut out: BTreeMap<usize, i64> = BTreeMap::new();
        for (&z, &c) in vec {
            if self.lengths[z] + self.lengths[x] > self.rs.num_positive_roots() {
                continue;
            }
            for &(y, pc) in self.product_ids(z, x) {
                let e = out.entry(y as usize).or_insert(0);
                *e = c
                    .checked_mul(pc)
                    .and_then(|t| e.checked_add(t))
                    .ok_or(Error::Overflow("Schubert products"))?;
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Ordinary cup product `[X_u] . [X_v]` in `H*(G/P)`.
    pub fn cup(&self, u: &WeylElem, v: &WeylElem, p: &ParabolicSpec) -> Result<SchubertClass> {
        self.check_minimal(u, p)?;
        self.check_minimal(v, p)?;
        let start = BTreeMap::from([(self.pullback_id(u, p), 1)]);
        let prod = self.multiply(&start, self.pullback_id(v, p))?;
        let w0p = weyl::longest_in_levi(&self.rs, p);
        let mut coeffs = BTreeMap::new();
        for (z, c) in prod {
            // sigma^z = pull-back of [X_w] with w = w0 z w0P
            let zz = &self.elems.elements[z];
            let w = weyl::compose(&self.rs, &weyl::compose(&self.rs, &self.w0, zz), &w0p);
            if !weyl::is_minimal(&self.rs, &w, p) {
                return Err(Error::Inconsistent("product left the image of H*(G/P)".into()));
            }
            coeffs.insert(w, c);
        }
        Ok(SchubertClass {
            parabolic: p.clone(),
            coeffs,
            grade: self.codim(u, p) + self.codim(v, p),
        })
    }

    /// The integer `c` with `prod_i [X_{w_i}] = c [X_e]` in `H*(G/P)`.
    pub fn multi_coeff(&self, ws: &[WeylElem], p: &ParabolicSpec) -> Result<i64> {
        if ws.is_empty() {
            return Err(Error::ArityMismatch { expected: 1, got: 0 });
        }
        for w in ws {
            self.check_minimal(w, p)?;
        }
        let dim = p.dim(&self.rs);
        let total: usize = ws.iter().map(|w| self.codim(w, p)).sum();
        if total != dim {
            return Err(Error::CodimensionMismatch { expected: dim, got: total });
        }
        Ok(self.multi_coeff_unchecked(ws, p))
    }

    /// [`Self::multi_coeff`] without validation, for enumeration loops.
    pub(crate) fn multi_coeff_unchecked(&self, ws: &[WeylElem], p: &ParabolicSpec) -> i64 {
        let ids: Vec<usize> = ws.iter().map(|w| self.pullback_id(w, p)).collect();
        let w0p = weyl::longest_in_levi(&self.rs, p);
        let target = self.id(&weyl::compose(&self.rs, &self.w0, &w0p));
        self.coeff_of(&ids, target)
    }

    /// Coefficient of `sigma^target` in `prod sigma^{ids[i]}`.
    pub(crate) fn coeff_of(&self, ids: &[usize], target: usize) -> i64 {
        let mut vec = BTreeMap::from([(ids[0], 1i64)]);
        for &x in &ids[1..] {
            vec = self.multiply(&vec, x).expect("structure constants fit in i64");
        }
        vec.get(&target).copied().unwrap_or(0)
    }

    /// Same as [`Self::multi_coeff`], with the degree gaps; see [`levi_movable`].
    pub fn levi_movable(&self, ws: &[WeylElem], p: &ParabolicSpec) -> Result<(bool, i64)> {
        let c = self.multi_coeff(ws, p)?;
        let gaps = degree_gaps(&self.rs, ws, p)?;
        Ok((c != 0 && gaps.iter().all(|(_, g)| g.is_zero()), c))
    }
}

/// `chi_w = rho - 2 rho^L + w^{-1} rho`.
pub fn chi<T: Field>(rs: &RootSystem, w: &WeylElem, p: &ParabolicSpec) -> Result<Weight<T>> {
    if !weyl::is_minimal(rs, w, p) {
        return Err(Error::NotMinimal(weyl::word_string(rs, w)));
    }
    let rho: Weight<T> = rs.rho();
    let rho_l: Weight<T> = rs.rho_l(p);
    let winv_rho = weyl::act(rs, &weyl::inverse(rs, w), &rho);
    Ok(&(&rho - &rho_l.scale(&T::from_int(2))) + &winv_rho)
}

/// The degree gaps `g_k = (chi_e - sum_j chi_{w_j})(x_k)` for the nodes `k`
/// outside `Delta(P)`. They are the exponents of the deformation parameters
/// in the deformed product, hence nonnegative whenever the intersection
/// number is nonzero, and such a tuple survives in the deformed product
/// exactly when every gap vanishes.
pub fn degree_gaps(rs: &RootSystem, ws: &[WeylElem], p: &ParabolicSpec) -> Result<Vec<(usize, BigRational)>> {
    let mut sum: Weight<BigRational> = chi(rs, &weyl::identity(rs), p)?;
    for w in ws {
        sum -= &chi(rs, w, p)?;
    }
    Ok(p.omitted(rs).into_iter().map(|k| (k, rs.eval_x(&sum, k))).collect())
}

/// `chev[i][z]` = `sigma^{s_i} sigma^z` as sparse ids.
fn chevalley_table(rs: &RootSystem, elems: &Enumeration) -> Vec<Vec<Vec<(u32, i64)>>> {
    let reflections: Vec<WeylElem> = (0..rs.num_positive_roots())
        .map(|b| weyl::reflection(rs, b))
        .collect();
    (0..rs.rank())
        .map(|i| {
            elems
                .elements
                .par_iter()
                .map(|x| {
                    let mut out = Vec::new();
                    for (b, sb) in reflections.iter().enumerate() {
                        // <omega_i, beta^vee> is the alpha_i^vee coefficient of beta^vee
                        let c = rs.coroot(b)[i];
                        if c == 0 {
                            continue;
                        }
                        let y = weyl::compose(rs, x, sb);
                        if y.length() == x.length() + 1 {
                            out.push((elems.id(&y).unwrap() as u32, c));
                        }
                    }
                    out.sort_unstable();
                    out
                })
                .collect()
        })
        .collect()
}

/// `D sigma^u = sum c sigma^{s_i} sigma^{u'}`, with `l(u') = l(u) - 1`.
struct Recipe {
    denom: i128,
    /// `(i, id of u', c)`
    terms: Vec<(usize, usize, i128)>,
}

fn layer_recipes(
    rs: &RootSystem,
    elems: &Enumeration,
    chev: &[Vec<Vec<(u32, i64)>>],
    lower: &[usize],
    upper: &[usize],
) -> Result<Vec<Recipe>> {
    let col: BTreeMap<usize, usize> = upper.iter().enumerate().map(|(c, &u)| (u, c)).collect();
    let m = upper.len();
    let row_of = |i: usize, up: usize| -> Vec<BigRational> {
        let mut row = vec![BigRational::zero(); m];
        for &(y, c) in &chev[i][up] {
            row[col[&(y as usize)]] = BigRational::from_int(c);
        }
        row
    };
    // leading rows first: sigma^{s_i} sigma^{u s_i} contains sigma^u
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for &u in upper {
        let ue = &elems.elements[u];
        let i = (0..rs.rank())
            .find(|&i| weyl::is_right_descent(rs, ue, i))
            .expect("nontrivial element");
        let up = weyl::compose(rs, ue, &weyl::simple_reflection(rs, i));
        candidates.push((i, elems.id(&up).unwrap()));
    }
    for &up in lower {
        for i in 0..rs.rank() {
            if !candidates.contains(&(i, up)) {
                candidates.push((i, up));
            }
        }
    }
    let rows: Vec<Vec<BigRational>> = candidates.iter().map(|&(i, up)| row_of(i, up)).collect();
    let chosen = linalg::independent_rows(&rows, m);
    if chosen.len() != m {
        return Err(Error::Inconsistent("degree-two classes do not generate".into()));
    }
    let square: Vec<Vec<BigRational>> = chosen.iter().map(|&r| rows[r].clone()).collect();
    let inv = linalg::inverse(&square).ok_or_else(|| Error::Inconsistent("singular layer".into()))?;
    // inv * square = I, so row c of inv expresses e_c through the chosen rows
    inv.into_iter()
        .map(|coeffs| {
            let den = coeffs
                .iter()
                .fold(BigInt::from(1), |l, q| num_integer::Integer::lcm(&l, q.denom()));
            let terms = coeffs
                .iter()
                .zip(&chosen)
                .filter(|(q, _)| !q.is_zero())
                .map(|(q, &r)| {
                    let (i, up) = candidates[r];
                    let c = (q.numer() * (&den / q.denom()))
                        .to_i128()
                        .ok_or(Error::Overflow("Schubert recursion"))?;
                    Ok((i, up, c))
                })
                .collect::<Result<_>>()?;
            Ok(Recipe {
                denom: den.to_i128().ok_or(Error::Overflow("Schubert recursion"))?,
                terms,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use num_traits::Signed;
    use std::sync::OnceLock;

    type Q = Ratio<i64>;

    fn d4_table() -> &'static ProductTable {
        static T: OnceLock<ProductTable> = OnceLock::new();
        T.get_or_init(|| ProductTable::build(&RootSystem::parse("D4").unwrap()).unwrap())
    }

    fn words(rs: &RootSystem, ws: &[&str]) -> Vec<WeylElem> {
        ws.iter().map(|w| weyl::parse_word(rs, w).unwrap()).collect()
    }

    const U: &str = "s4 s3 s1 s2";
    const V: &str = "s3 s1 s2 s4 s3 s1 s2";
    const W: &str = "s1 s2 s4 s2 s3 s1 s2";

    #[test]
    fn ex1_intersection_numbers() {
        let t = d4_table();
        let rs = t.root_system();
        let p2 = ParabolicSpec::maximal(rs, 1).unwrap();
        let names: Vec<(String, WeylElem)> = vec![
            ("u".into(), weyl::parse_word(rs, U).unwrap()),
            ("v".into(), weyl::parse_word(rs, V).unwrap()),
            ("w".into(), weyl::parse_word(rs, W).unwrap()),
        ];
        let tuple = |a: &str, b: &str, c: &str| -> Vec<WeylElem> {
            [a, b, c].iter().map(|s| weyl::parse_word_with(rs, s, &names).unwrap()).collect()
        };
        assert_eq!(t.levi_movable(&tuple("u", "v", "w"), &p2).unwrap(), (true, 1));
        assert_eq!(t.levi_movable(&tuple("s2u", "s3v", "w"), &p2).unwrap(), (false, 1));
        assert_eq!(t.multi_coeff(&tuple("u", "s3v", "s3w"), &p2).unwrap(), 1);
        assert_eq!(t.multi_coeff(&tuple("u", "s4s3v", "w"), &p2).unwrap(), 0);
        assert!(matches!(
            t.multi_coeff(&tuple("u", "u", "v"), &p2),
            Err(Error::CodimensionMismatch { expected: 9, got: 12 })
        ));
    }

    #[test]
    fn a1_point_count() {
        let rs = RootSystem::parse("A1").unwrap();
        let t = ProductTable::build(&rs).unwrap();
        let b = ParabolicSpec::borel();
        let e = weyl::identity(&rs);
        let s = weyl::simple_reflection(&rs, 0);
        assert_eq!(t.levi_movable(&[e.clone(), s.clone(), s.clone()], &b).unwrap(), (true, 1));
        assert!(t.cup(&e, &e, &b).unwrap().is_zero());
        assert_eq!(t.cup(&s, &e, &b).unwrap().coeff(&e), 1);
    }

    #[test]
    fn grassmannian_pieri() {
        let rs = RootSystem::parse("A3").unwrap();
        let t = ProductTable::build(&rs).unwrap();
        let p = ParabolicSpec::new(&rs, vec![0, 2]).unwrap();
        let reps = weyl::minimal_reps(&rs, &p).unwrap();
        assert_eq!(reps.len(), 6);
        let dim = p.dim(&rs);
        let codim1 = reps.iter().find(|w| w.length() == dim - 1).unwrap();
        let sq = t.cup(codim1, codim1, &p).unwrap();
        assert_eq!(sq.grade, 2);
        let codim2: Vec<&WeylElem> = reps.iter().filter(|w| w.length() == dim - 2).collect();
        assert_eq!(codim2.len(), 2);
        assert_eq!(sq.coeffs.len(), 2);
        for w in codim2 {
            assert_eq!(sq.coeff(w), 1);
        }
    }

    #[test]
    fn fundamental_class_is_unit() {
        let t = d4_table();
        let rs = t.root_system();
        for p in [ParabolicSpec::maximal(rs, 1).unwrap(), ParabolicSpec::maximal(rs, 3).unwrap()] {
            let reps = weyl::minimal_reps(rs, &p).unwrap();
            let top = reps.last().unwrap();
            assert_eq!(top.length(), p.dim(rs));
            for x in &reps {
                let c = t.cup(top, x, &p).unwrap();
                assert_eq!(c.coeffs, BTreeMap::from([(x.clone(), 1)]));
            }
        }
    }

    fn duality_and_positivity(t: &ProductTable, p: &ParabolicSpec) {
        let rs = t.root_system();
        let reps = weyl::minimal_reps(rs, p).unwrap();
        let dim = p.dim(rs);
        for a in &reps {
            let partners: Vec<i64> = reps
                .iter()
                .filter(|b| t.codim(a, p) + t.codim(b, p) == dim)
                .map(|b| t.multi_coeff(&[a.clone(), b.clone()], p).unwrap())
                .collect();
            assert_eq!(partners.iter().filter(|&&c| c == 1).count(), 1);
            assert!(partners.iter().all(|&c| c == 0 || c == 1));
            for b in &reps {
                let ab = t.cup(a, b, p).unwrap();
                assert_eq!(ab, t.cup(b, a, p).unwrap());
                assert!(ab.coeffs.values().all(|&c| c > 0));
            }
        }
    }

    #[test]
    fn d4_duality_positivity_commutativity() {
        let t = d4_table();
        let rs = t.root_system();
        for p in [ParabolicSpec::borel(), ParabolicSpec::maximal(rs, 1).unwrap(), ParabolicSpec::maximal(rs, 3).unwrap()] {
            duality_and_positivity(t, &p);
        }
    }

    #[test]
    fn a3_duality_positivity_associativity() {
        let rs = RootSystem::parse("A3").unwrap();
        let t = ProductTable::build(&rs).unwrap();
        let b = ParabolicSpec::borel();
        duality_and_positivity(&t, &b);
        let all = weyl::elements(&rs).unwrap();
        for (i, a) in all.iter().enumerate().step_by(3) {
            for (j, bb) in all.iter().enumerate().step_by(2) {
                for c in all.iter().skip((i + j) % 5).step_by(5) {
                    let ab: BTreeMap<usize, i64> = t.cup(a, bb, &b).unwrap().coeffs.iter()
                        .map(|(w, c)| (t.pullback_id(w, &b), *c)).collect();
                    let left = t.multiply(&ab, t.pullback_id(c, &b)).unwrap();
                    let bc: BTreeMap<usize, i64> = t.cup(bb, c, &b).unwrap().coeffs.iter()
                        .map(|(w, c)| (t.pullback_id(w, &b), *c)).collect();
                    let right = t.multiply(&bc, t.pullback_id(a, &b)).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn chi_examples() {
        let rs = RootSystem::parse("D4").unwrap();
        let b = ParabolicSpec::borel();
        let p2 = ParabolicSpec::maximal(&rs, 1).unwrap();
        let e = weyl::identity(&rs);
        let expect = (&rs.rho::<Q>() - &rs.rho_l::<Q>(&p2)).scale(&Q::from_integer(2));
        assert_eq!(chi::<Q>(&rs, &e, &p2).unwrap(), expect);
        assert!(chi::<Q>(&rs, &weyl::longest_element(&rs), &b).unwrap().is_zero());
        let a1 = RootSystem::parse("A1").unwrap();
        assert!(chi::<Q>(&a1, &weyl::simple_reflection(&a1, 0), &b).unwrap().is_zero());
    }

    #[test]
    fn degree_gaps_nonnegative_on_nonzero_tuples() {
        let t = d4_table();
        let rs = t.root_system();
        for k in [1, 3] {
            let p = ParabolicSpec::maximal(rs, k).unwrap();
            let reps = weyl::minimal_reps(rs, &p).unwrap();
            let dim = p.dim(rs);
            for a in &reps {
                for b in &reps {
                    for c in &reps {
                        if t.codim(a, &p) + t.codim(b, &p) + t.codim(c, &p) != dim {
                            continue;
                        }
                        let ws = [a.clone(), b.clone(), c.clone()];
                        if t.multi_coeff(&ws, &p).unwrap() == 0 {
                            continue;
                        }
                        for (_, g) in degree_gaps(rs, &ws, &p).unwrap() {
                            assert!(!g.is_negative(), "{g}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn words_check() {
        let rs = RootSystem::parse("D4").unwrap();
        assert_eq!(words(&rs, &[U, V, W]).iter().map(|w| w.length()).collect::<Vec<_>>(), vec![4, 7, 7]);
    }
}
