//! Finite root systems and the pairings every other module is written in.
//!
//! Conventions: simple roots are numbered as in Bourbaki, but all indices in
//! the Rust API are 0-based (`alpha_1` is index 0). Weights are stored in the
//! fundamental-weight basis. The Cartan matrix entry `a[i][j]` is
//! `<alpha_j, alpha_i^vee>`, so `alpha_j = sum_i a[i][j] omega_i`. The
//! invariant form is normalized so that long roots of every simple factor have
//! squared length 2; `half_norm(i) = (alpha_i, alpha_i) / 2`.

mod label;
mod parabolic;
mod weight;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

pub use label::{CartanLabel, Family, SimpleType};
pub use parabolic::ParabolicSpec;
pub use weight::{Coweight, Weight};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Field;

const MAX_POSITIVE_ROOTS: usize = 4096;

/// Immutable root datum of a finite (possibly non-simple) Cartan type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: CartanLabel,
    cartan: Vec<Vec<i64>>,
    half_norms: Vec<Ratio<i64>>,
    /// `A^{-1} = cartan_inv_num / cartan_det`
    cartan_inv_num: Vec<Vec<i64>>,
    cartan_det: i64,
    /// simple-root coordinates, sorted by height then lexicographically
    positive_roots: Vec<Vec<i64>>,
    /// the same roots in the fundamental-weight basis
    root_weights: Vec<Vec<i64>>,
    /// coroots in the simple-coroot basis
    coroots: Vec<Vec<i64>>,
    /// fundamental-weight coordinates of `±beta` -> `±(index + 1)`
    root_index: HashMap<Vec<i64>, i64>,
    components: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn new(label: &CartanLabel) -> Result<Self> {
        Self::from_cartan(label.cartan_matrix(), Some(label.clone()))
    }

    pub fn parse(label: &str) -> Result<Self> {
        Self::new(&label.parse()?)
    }

    /// Builds the root system of an arbitrary finite-type Cartan matrix (for
    /// instance the Levi of a parabolic, with node order inherited). The label
    /// is classified when not given.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, label: Option<CartanLabel>) -> Result<Self> {
        let r = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != r || row[i] != 2 {
                return Err(Error::NotFiniteType("diagonal entries must be 2".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j && (a > 0 || (a == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::NotFiniteType(format!("entry ({i},{j})")));
                }
            }
        }

        let components = connected_components(&cartan);
        let half_norms = symmetrizer(&cartan, &components)?;

        let big: Vec<Vec<BigRational>> = cartan
            .iter()
            .map(|row| row.iter().map(|&a| BigRational::from_int(a)).collect())
            .collect();
        let (cartan_inv_num, cartan_det) = if r == 0 {
            (Vec::new(), 1)
        } else {
            let inv = linalg::inverse(&big)
                .ok_or_else(|| Error::NotFiniteType("singular Cartan matrix".into()))?;
            let den = inv
                .iter()
                .flatten()
                .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            let num = inv
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|q| (q.numer() * (&den / q.denom())).to_i64().unwrap())
                        .collect()
                })
                .collect();
            (num, den.to_i64().unwrap())
        };

        let positive_roots = root_closure(&cartan)?;
        let root_weights: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|n| (0..r).map(|i| (0..r).map(|j| cartan[i][j] * n[j]).sum()).collect())
            .collect();

        let mut coroots = Vec::with_capacity(positive_roots.len());
        for n in &positive_roots {
            // (beta, beta)/2 = 1/2 sum_ij n_i n_j d_i a_ij
            let mut norm = Ratio::<i64>::zero();
            for i in 0..r {
                for j in 0..r {
                    norm += half_norms[i] * Ratio::from_integer(n[i] * n[j] * cartan[i][j]);
                }
            }
            let half = norm / Ratio::from_integer(2);
            let c: Vec<i64> = (0..r)
                .map(|j| {
                    let q = Ratio::from_integer(n[j]) * half_norms[j] / half;
                    if q.is_integer() {
                        Ok(q.to_integer())
                    } else {
                        Err(Error::NotFiniteType("non-integral coroot".into()))
                    }
                })
                .collect::<Result<_>>()?;
            coroots.push(c);
        }

        let mut root_index = HashMap::new();
        for (idx, w) in root_weights.iter().enumerate() {
            root_index.insert(w.clone(), idx as i64 + 1);
            root_index.insert(w.iter().map(|x| -x).collect(), -(idx as i64 + 1));
        }

        let label = match label {
            Some(l) => l,
            None => classify(&cartan, &components, &half_norms, &positive_roots)?,
        };

        Ok(RootSystem {
            label,
            cartan,
            half_norms,
            cartan_inv_num,
            cartan_det,
            positive_roots,
            root_weights,
            coroots,
            root_index,
            components,
        })
    }

    pub fn label(&self) -> &CartanLabel {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(alpha_i, alpha_i) / 2`.
    pub fn half_norm(&self, i: usize) -> Ratio<i64> {
        self.half_norms[i]
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Fundamental-weight coordinates of the positive root with this index.
    pub fn root_weight(&self, idx: usize) -> &[i64] {
        &self.root_weights[idx]
    }

    /// Coroot of a positive root in the simple-coroot basis.
    pub fn coroot(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }

    /// Simple factors, as sets of nodes.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Index of the positive root with these simple-root coordinates.
    pub fn positive_root_index(&self, root: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|b| b == root)
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.positive_root_index(&e).expect("simple roots are roots")
    }

    /// Looks up a root from its fundamental-weight coordinates: `Some((idx,
    /// positive))`.
    pub fn lookup_root(&self, weight_coords: &[i64]) -> Option<(usize, bool)> {
        self.root_index
            .get(weight_coords)
            .map(|&s| ((s.unsigned_abs() - 1) as usize, s > 0))
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.positive_roots[idx].iter().sum()
    }

    pub fn highest_root(&self) -> usize {
        (0..self.positive_roots.len())
            .max_by_key(|&i| self.height(i))
            .expect("nonempty root system")
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node < self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: node + 1, rank: self.rank() })
        }
    }

    // ---- weights ---------------------------------------------------------

    pub fn rho<T: Field>(&self) -> Weight<T> {
        Weight { coords: vec![T::one(); self.rank()] }
    }

    /// `alpha_i` in the fundamental-weight basis.
    pub fn simple_root<T: Field>(&self, i: usize) -> Weight<T> {
        Weight { coords: (0..self.rank()).map(|k| T::from_int(self.cartan[k][i])).collect() }
    }

    /// Simple-root coordinates of a weight.
    pub fn to_root_coords<T: Field>(&self, w: &Weight<T>) -> Vec<T> {
        let det = T::from_int(self.cartan_det);
        (0..self.rank())
            .map(|k| {
                let s = (0..self.rank()).fold(T::zero(), |acc, j| {
                    acc + T::from_int(self.cartan_inv_num[k][j]) * w.coords[j].clone()
                });
                s / det.clone()
            })
            .collect()
    }

    pub fn from_root_coords<T: Field>(&self, n: &[T]) -> Weight<T> {
        Weight {
            coords: (0..self.rank())
                .map(|i| {
                    (0..self.rank())
                        .fold(T::zero(), |acc, j| acc + T::from_int(self.cartan[i][j]) * n[j].clone())
                })
                .collect(),
        }
    }

    /// `lambda(x_k)`: the coefficient of `alpha_k` in `lambda`.
    pub fn eval_x<T: Field>(&self, w: &Weight<T>, k: usize) -> T {
        let det = T::from_int(self.cartan_det);
        (0..self.rank()).fold(T::zero(), |acc, j| {
            acc + T::from_int(self.cartan_inv_num[k][j]) * w.coords[j].clone()
        }) / det
    }

    /// `<lambda, beta^vee>` for a root given by simple-root coordinates
    /// (positive or negative).
    pub fn pair<T: Field>(&self, w: &Weight<T>, root: &[i64]) -> Result<T> {
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        let (idx, sign) = match self.positive_root_index(root) {
            Some(i) => (i, T::one()),
            None => match self.positive_root_index(&neg) {
                Some(i) => (i, -T::one()),
                None => return Err(Error::NotARoot(root.to_vec())),
            },
        };
        Ok(self.pair_positive(w, idx) * sign)
    }

    /// `<lambda, beta^vee>` for the positive root with index `idx`.
    pub fn pair_positive<T: Field>(&self, w: &Weight<T>, idx: usize) -> T {
        self.coroots[idx]
            .iter()
            .zip(&w.coords)
            .fold(T::zero(), |acc, (&c, x)| acc + T::from_int(c) * x.clone())
    }

    /// `(omega_i, omega_j)`.
    pub fn form_fundamental<T: Field>(&self, i: usize, j: usize) -> T {
        let d = self.half_norms[j];
        T::from_frac(self.cartan_inv_num[j][i] * *d.numer(), self.cartan_det * *d.denom())
    }

    /// The invariant form `(lambda, mu)`.
    pub fn form<T: Field>(&self, a: &Weight<T>, b: &Weight<T>) -> T {
        // (lambda, mu) = sum_k lambda(x_k) * d_k * mu_k
        let ra = self.to_root_coords(a);
        (0..self.rank()).fold(T::zero(), |acc, k| {
            let d = self.half_norms[k];
            acc + ra[k].clone() * T::from_frac(*d.numer(), *d.denom()) * b.coords[k].clone()
        })
    }

    /// The isomorphism induced by the invariant form: `alpha_k(kappa(lambda))
    /// = (alpha_k, lambda)`.
    pub fn kappa<T: Field>(&self, w: &Weight<T>) -> Coweight<T> {
        Coweight {
            coords: w
                .coords
                .iter()
                .zip(&self.half_norms)
                .map(|(c, d)| c.clone() * T::from_frac(*d.numer(), *d.denom()))
                .collect(),
        }
    }

    pub fn kappa_inv<T: Field>(&self, h: &Coweight<T>) -> Weight<T> {
        Weight {
            coords: h
                .coords
                .iter()
                .zip(&self.half_norms)
                .map(|(c, d)| c.clone() * T::from_frac(*d.denom(), *d.numer()))
                .collect(),
        }
    }

    /// `lambda(h)` for a weight and a coweight.
    pub fn evaluate<T: Field>(&self, w: &Weight<T>, h: &Coweight<T>) -> T {
        // lambda(x_k) is the alpha_k coefficient of lambda
        self.to_root_coords(w)
            .into_iter()
            .zip(&h.coords)
            .fold(T::zero(), |acc, (a, b)| acc + a * b.clone())
    }

    /// Coroot `beta^vee` of a positive root, as a coweight (x-basis).
    pub fn coroot_coweight<T: Field>(&self, idx: usize) -> Coweight<T> {
        // alpha_k(alpha_j^vee) = a[j][k]
        let c = &self.coroots[idx];
        Coweight {
            coords: (0..self.rank())
                .map(|k| (0..self.rank()).fold(T::zero(), |acc, j| acc + T::from_int(c[j] * self.cartan[j][k])))
                .collect(),
        }
    }

    /// Half the sum of the positive roots of the Levi of `p`.
    pub fn rho_l<T: Field>(&self, p: &ParabolicSpec) -> Weight<T> {
        let mut sum = Weight::<T>::zero(self.rank());
        for idx in p.levi_roots(self) {
            let w: Weight<T> = Weight::from_ints(&self.root_weights[idx]);
            sum += &w;
        }
        sum.scale(&T::from_frac(1, 2))
    }

    /// `-w_0 lambda`, the highest weight of the dual representation.
    pub fn dual_weight<T: Field>(&self, w: &Weight<T>) -> Weight<T> {
        let w0 = crate::weyl::longest_element(self);
        -crate::weyl::act(self, &w0, w)
    }
}

fn connected_components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let r = a.len();
    let mut seen = vec![false; r];
    let mut out = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for u in 0..r {
                if !seen[u] && a[v][u] != 0 {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// `d_i` with `d_i a_ij = d_j a_ji`, normalized per component so the largest
/// is 1.
fn symmetrizer(a: &[Vec<i64>], components: &[Vec<usize>]) -> Result<Vec<Ratio<i64>>> {
    let r = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; r];
    for comp in components {
        d[comp[0]] = Some(Ratio::one());
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            for &j in comp {
                if i != j && a[i][j] != 0 {
                    let dj = d[i].unwrap() * Ratio::new(a[i][j], a[j][i]);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(x) if x != dj => {
                            return Err(Error::NotFiniteType("not symmetrizable".into()))
                        }
                        _ => {}
                    }
                }
            }
        }
        let max = comp.iter().map(|&i| d[i].unwrap()).max().unwrap();
        for &i in comp {
            d[i] = Some(d[i].unwrap() / max);
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}

fn root_closure(a: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let r = a.len();
    let mut roots: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut idx = 0;
    while idx < roots.len() {
        let beta = roots[idx].clone();
        for i in 0..r {
            let p: i64 = (0..r).map(|j| beta[j] * a[i][j]).sum();
            if p == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= p;
            if image.iter().all(|&x| x >= 0) && image.iter().any(|&x| x > 0) && seen.insert(image.clone()) {
                roots.push(image);
                if roots.len() > MAX_POSITIVE_ROOTS {
                    return Err(Error::NotFiniteType("root system is infinite".into()));
                }
            }
        }
        idx += 1;
    }
    roots.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    Ok(roots)
}

fn classify(
    a: &[Vec<i64>],
    components: &[Vec<usize>],
    d: &[Ratio<i64>],
    roots: &[Vec<i64>],
) -> Result<CartanLabel> {
    let mut parts = Vec::new();
    for comp in components {
        let n = comp.len();
        let count = roots
            .iter()
            .filter(|b| b.iter().enumerate().all(|(i, &x)| x == 0 || comp.contains(&i)))
            .count();
        let short = comp.iter().filter(|&&i| d[i] < Ratio::one()).count();
        let triple = comp.iter().any(|&i| a[i][..].iter().any(|&x| x == -3));
        let family = if triple {
            Family::G
        } else if short == 0 {
            if n >= 4 && count == n * (n - 1) {
                Family::D
            } else if count == n * (n + 1) / 2 {
                Family::A
            } else {
                Family::E
            }
        } else if n == 4 && count == 24 {
            Family::F
        } else if short == 1 || n == 2 {
            Family::B
        } else {
            Family::C
        };
        parts.push(SimpleType::new(family, n)?);
    }
    Ok(CartanLabel(parts))
}
