//! Dimensions of tensor invariants `(V_{lambda_1} ⊗ ... ⊗ V_{lambda_s})^G`,
//! computed independently of the Schubert calculus: Freudenthal's formula for
//! weight multiplicities and the Brauer–Klimyk rule for tensor products.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::tuple::RayTuple;

/// Default bound on the coordinate sum of a single highest weight.
pub const DEFAULT_MAX_HEIGHT: i64 = 20;

type W = Vec<i64>;

/// Representation data for one root system, with the invariant form scaled
/// to integers.
pub struct Oracle<'a> {
    rs: &'a RootSystem,
    gram: Vec<Vec<i64>>,
    /// `alpha_i` in the fundamental-weight basis.
    simple: Vec<W>,
    /// Positive roots in the fundamental-weight basis.
    roots: Vec<W>,
    max_height: i64,
}

impl<'a> Oracle<'a> {
    pub fn new(rs: &'a RootSystem, max_height: i64) -> Self {
        let r = rs.rank();
        let fracs: Vec<Vec<Ratio<i64>>> =
            (0..r).map(|i| (0..r).map(|j| rs.form_fundamental(i, j)).collect()).collect();
        let denom = fracs.iter().flatten().fold(1i64, |acc, x| acc.lcm(x.denom()));
        let gram = fracs
            .iter()
            .map(|row| row.iter().map(|x| x.numer() * (denom / x.denom())).collect())
            .collect();
        let simple = (0..r).map(|i| (0..r).map(|k| rs.cartan_matrix()[k][i]).collect()).collect();
        let roots = (0..rs.num_positive_roots()).map(|b| rs.root_weight(b).to_vec()).collect();
        Oracle { rs, gram, simple, roots, max_height }
    }

    fn form(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut s = 0i128;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                s += i128::from(*x) * i128::from(self.gram[i][j]) * i128::from(*y);
            }
        }
        s
    }

    fn reflect(&self, x: &mut W, i: usize) {
        let c = x[i];
        for (xk, ak) in x.iter_mut().zip(&self.simple[i]) {
            *xk -= c * ak;
        }
    }

    /// The dominant conjugate of `x` and the parity of the number of simple
    /// reflections used.
    fn dominant(&self, mut x: W) -> (W, bool) {
        let mut odd = false;
        while let Some(i) = x.iter().position(|&c| c < 0) {
            self.reflect(&mut x, i);
            odd = !odd;
        }
        (x, odd)
    }

    fn check(&self, w: &[i64]) -> Result<()> {
        if w.iter().any(|&c| c < 0) {
            return Err(Error::Parse(format!("weight {w:?} is not dominant")));
        }
        let h: i64 = w.iter().sum();
        if h > self.max_height {
            return Err(Error::ResourceLimit(format!(
                "weight {} has height {h}, bound is {}",
                Weight::<Ratio<i64>>::from_ints(w),
                self.max_height
            )));
        }
        Ok(())
    }

    /// Multiplicities of the dominant weights of `V_top`.
    pub fn dominant_multiplicities(&self, top: &[i64]) -> Result<BTreeMap<W, u64>> {
        self.check(top)?;
        // dominant weights below `top`, by depth
        let mut found: HashSet<W> = HashSet::from([top.to_vec()]);
        let mut frontier = vec![top.to_vec()];
        while let Some(mu) = frontier.pop() {
            for root in &self.roots {
                let nu: W = mu.iter().zip(root).map(|(a, b)| a - b).collect();
                if nu.iter().all(|&c| c >= 0) && found.insert(nu.clone()) {
                    frontier.push(nu);
                }
            }
        }
        // order by the height of top - mu so that higher weights come first
        let rho = vec![1i64; top.len()];
        let mut dom: Vec<W> = found.into_iter().collect();
        let root_height = |mu: &W| -> i128 {
            let diff: Vec<i64> = top.iter().zip(mu).map(|(a, b)| a - b).collect();
            self.form(&diff, &rho)
        };
        dom.sort_by_key(|mu| (root_height(mu), mu.clone()));
        let shifted: W = top.iter().map(|x| x + 1).collect();
        let norm_top = self.form(&shifted, &shifted);
        let mut mult: HashMap<W, i128> = HashMap::new();
        mult.insert(top.to_vec(), 1);
        for mu in dom.iter().skip(1) {
            let mut num = 0i128;
            for root in &self.roots {
                let mut x = mu.clone();
                loop {
                    for (xk, rk) in x.iter_mut().zip(root) {
                        *xk += rk;
                    }
                    let (d, _) = self.dominant(x.clone());
                    match mult.get(&d) {
                        Some(&m) => num += m * self.form(&x, root),
                        None => break,
                    }
                }
            }
            let mu_shift: W = mu.iter().map(|x| x + 1).collect();
            let den = norm_top - self.form(&mu_shift, &mu_shift);
            let m = 2 * num / den;
            if 2 * num % den != 0 || m < 0 {
                return Err(Error::Inconsistent(format!("Freudenthal multiplicity of {mu:?} is not integral")));
            }
            mult.insert(mu.clone(), m);
        }
        Ok(mult
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|(w, m)| (w, m as u64))
            .collect())
    }

    /// All weights of `V_top` with multiplicities.
    pub fn weight_diagram(&self, top: &[i64]) -> Result<Vec<(W, u64)>> {
        let mut out = Vec::new();
        for (mu, m) in self.dominant_multiplicities(top)? {
            let mut seen: HashSet<W> = HashSet::from([mu.clone()]);
            let mut stack = vec![mu];
            while let Some(x) = stack.pop() {
                for i in 0..x.len() {
                    if x[i] > 0 {
                        let mut y = x.clone();
                        self.reflect(&mut y, i);
                        if seen.insert(y.clone()) {
                            stack.push(y);
                        }
                    }
                }
            }
            out.extend(seen.into_iter().map(|w| (w, m)));
        }
        out.sort();
        Ok(out)
    }

    /// Decomposes `(sum_l m_l V_l) ⊗ V_mu` into irreducibles.
    pub fn tensor(&self, left: &BTreeMap<W, u64>, mu: &[i64]) -> Result<BTreeMap<W, u64>> {
        let diagram = self.weight_diagram(mu)?;
        let mut acc: BTreeMap<W, i128> = BTreeMap::new();
        for (lambda, &m) in left {
            for (nu, k) in &diagram {
                let x: W = lambda.iter().zip(nu).map(|(a, b)| a + b + 1).collect();
                let (d, odd) = self.dominant(x);
                if d.iter().any(|&c| c == 0) {
                    continue;
                }
                let hw: W = d.iter().map(|c| c - 1).collect();
                let c = i128::from(m) * i128::from(*k);
                *acc.entry(hw).or_default() += if odd { -c } else { c };
            }
        }
        let mut out = BTreeMap::new();
        for (w, c) in acc {
            if c < 0 {
                return Err(Error::Inconsistent(format!("negative tensor multiplicity at {w:?}")));
            }
            if c > 0 {
                out.insert(w, c as u64);
            }
        }
        Ok(out)
    }

    fn dual(&self, w: &[i64]) -> W {
        let d = self.rs.dual_weight(&Weight::<Ratio<i64>>::from_ints(w));
        d.coords.iter().map(|c| c.to_integer()).collect()
    }

    /// `dim (V_{w_1} ⊗ ... ⊗ V_{w_s})^G` for dominant integral weights.
    pub fn invariant_dim_ints(&self, weights: &[W]) -> Result<u64> {
        for w in weights {
            if w.len() != self.rs.rank() {
                return Err(Error::DimensionMismatch { expected: self.rs.rank(), got: w.len() });
            }
            self.check(w)?;
        }
        let mut ws: Vec<W> = weights.to_vec();
        match ws.len() {
            0 => return Ok(1),
            1 => return Ok(u64::from(ws[0].iter().all(|&c| c == 0))),
            _ => {}
        }
        // largest entry seeds the product, second largest is read off at the
        // end, and the weight diagrams are taken of the rest
        ws.sort_by_key(|w| std::cmp::Reverse(w.iter().sum::<i64>()));
        let seed = ws.remove(0);
        let last = ws.remove(0);
        let mut acc = BTreeMap::from([(seed, 1u64)]);
        for w in &ws {
            acc = self.tensor(&acc, w)?;
        }
        Ok(acc.get(&self.dual(&last)).copied().unwrap_or(0))
    }

    pub fn invariant_dim(&self, t: &RayTuple) -> Result<u64> {
        let mut ints = Vec::with_capacity(t.s());
        for w in &t.weights {
            let mut v = Vec::with_capacity(w.rank());
            for c in &w.coords {
                if !c.is_integer() {
                    return Err(Error::Parse(format!("weight {w} is not integral")));
                }
                v.push(c.to_integer().to_i64().ok_or(Error::Overflow("invariant_dim"))?);
            }
            ints.push(v);
        }
        if ints.iter().flatten().any(|c| *c < 0) {
            return Err(Error::Parse(format!("{t} is not dominant")));
        }
        self.invariant_dim_ints(&ints)
    }
}

/// `dim (V_{lambda_1} ⊗ ... ⊗ V_{lambda_s})^G` with the default height bound.
pub fn invariant_dim(rs: &RootSystem, t: &RayTuple) -> Result<u64> {
    Oracle::new(rs, DEFAULT_MAX_HEIGHT).invariant_dim(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn clebsch_gordan(a: i64, b: i64, c: i64) -> u64 {
        u64::from((a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b)
    }

    #[test]
    fn a1_examples() {
        let rs = RootSystem::parse("A1").unwrap();
        let o = Oracle::new(&rs, 20);
        assert_eq!(o.invariant_dim_ints(&[vec![1], vec![1], vec![0]]).unwrap(), 1);
        assert_eq!(o.invariant_dim_ints(&[vec![1], vec![1], vec![1]]).unwrap(), 0);
        assert_eq!(o.invariant_dim_ints(&vec![vec![1]; 4]).unwrap(), 2);
        assert_eq!(o.invariant_dim_ints(&[vec![0]]).unwrap(), 1);
    }

    #[test]
    fn dimensions_from_multiplicities() {
        let rs = RootSystem::parse("D4").unwrap();
        let o = Oracle::new(&rs, 20);
        let dim = |w: &[i64]| o.weight_diagram(w).unwrap().iter().map(|(_, m)| m).sum::<u64>();
        assert_eq!(dim(&[1, 0, 0, 0]), 8);
        assert_eq!(dim(&[0, 1, 0, 0]), 28);
        assert_eq!(dim(&[2, 0, 0, 0]), 35);
        assert_eq!(dim(&[0, 2, 0, 0]), 300);
        let g2 = RootSystem::parse("G2").unwrap();
        let o = Oracle::new(&g2, 20);
        let dims: Vec<u64> = [[1, 0], [0, 1]]
            .iter()
            .map(|w| o.weight_diagram(w).unwrap().iter().map(|(_, m)| m).sum())
            .collect();
        let mut sorted = dims.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![7, 14]);
    }

    #[test]
    fn d4_basic_class_invariants() {
        let rs = RootSystem::parse("D4").unwrap();
        let o = Oracle::new(&rs, 20);
        let t = |n: i64| vec![vec![0, n, 0, 0], vec![0, 0, n, 0], vec![0, 0, n, 0]];
        assert_eq!(o.invariant_dim_ints(&t(1)).unwrap(), 1);
        assert_eq!(o.invariant_dim_ints(&t(2)).unwrap(), 1);
        // V_{omega_1} ⊗ V_{omega_1}: one invariant
        assert_eq!(o.invariant_dim_ints(&[vec![1, 0, 0, 0], vec![1, 0, 0, 0]]).unwrap(), 1);
        assert_eq!(o.invariant_dim_ints(&[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap(), 0);
    }

    #[test]
    fn height_bound() {
        let rs = RootSystem::parse("A2").unwrap();
        let o = Oracle::new(&rs, 5);
        assert!(matches!(o.invariant_dim_ints(&[vec![3, 3], vec![0, 0]]), Err(Error::ResourceLimit(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn a1_matches_clebsch_gordan(a in 0i64..12, b in 0i64..12, c in 0i64..12) {
            let rs = RootSystem::parse("A1").unwrap();
            let o = Oracle::new(&rs, 20);
            prop_assert_eq!(o.invariant_dim_ints(&[vec![a], vec![b], vec![c]]).unwrap(), clebsch_gordan(a, b, c));
        }

        #[test]
        fn symmetric_in_entries(a in 0i64..3, b in 0i64..3, c in 0i64..3, d in 0i64..3) {
            let rs = RootSystem::parse("A2").unwrap();
            let o = Oracle::new(&rs, 20);
            let x = vec![a, b];
            let y = vec![c, d];
            let z = vec![b + d, a + c];
            prop_assert_eq!(
                o.invariant_dim_ints(&[x.clone(), y.clone(), z.clone()]).unwrap(),
                o.invariant_dim_ints(&[z, x, y]).unwrap()
            );
        }
    }
}
