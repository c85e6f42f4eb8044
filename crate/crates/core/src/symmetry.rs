//! Symmetries of the tensor cone: permutations of the `s` entries and
//! automorphisms of the Dynkin diagram acting on every entry.

use std::collections::BTreeMap;

use crate::rootdata::{RootSystem, Weight};
use crate::tuple::RayTuple;

/// All permutations of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap_or(i);
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Node permutations `sigma` with `a[sigma i][sigma j] = a[i][j]`, identity
/// first.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    let a = rs.cartan_matrix();
    let r = rs.rank();
    permutations(r)
        .into_iter()
        .filter(|p| (0..r).all(|i| (0..r).all(|j| a[p[i]][p[j]] == a[i][j])))
        .collect()
}

/// `x` with entry `j` moved to position `perm[j]`.
pub fn permute_entries(x: &RayTuple, perm: &[usize]) -> RayTuple {
    let mut weights = x.weights.clone();
    for (j, w) in x.weights.iter().enumerate() {
        weights[perm[j]] = w.clone();
    }
    RayTuple { weights, tag: x.tag }
}

/// Applies a node permutation to every entry: `omega_i -> omega_{sigma i}`.
pub fn apply_diagram(x: &RayTuple, sigma: &[usize]) -> RayTuple {
    let weights = x
        .weights
        .iter()
        .map(|w| {
            let mut coords = w.coords.clone();
            for (i, c) in w.coords.iter().enumerate() {
                coords[sigma[i]] = c.clone();
            }
            Weight { coords }
        })
        .collect();
    RayTuple { weights, tag: x.tag }
}

/// Groups `rays` into orbits under entry permutations, and additionally under
/// diagram automorphisms when `diagram` is set. Orbits are lists of indices
/// into `rays`, ordered by their first member.
pub fn orbits(rs: &RootSystem, rays: &[RayTuple], diagram: bool) -> Vec<Vec<usize>> {
    let s = rays.first().map_or(0, RayTuple::s);
    let entry_perms = permutations(s);
    let autos = if diagram { diagram_automorphisms(rs) } else { vec![(0..rs.rank()).collect()] };
    let key = |x: &RayTuple| x.primitive().to_string();
    let index: BTreeMap<String, usize> = rays.iter().enumerate().map(|(i, r)| (key(r), i)).collect();
    let mut orbit_of = vec![usize::MAX; rays.len()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..rays.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = Vec::new();
        for sigma in &autos {
            let y = apply_diagram(&rays[i], sigma);
            for p in &entry_perms {
                if let Some(&k) = index.get(&key(&permute_entries(&y, p))) {
                    if orbit_of[k] == usize::MAX {
                        orbit_of[k] = id;
                        members.push(k);
                    }
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuple::Tag;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[0], vec![0, 1, 2]);
    }

    #[test]
    fn automorphism_groups() {
        let count = |l: &str| diagram_automorphisms(&RootSystem::parse(l).unwrap()).len();
        assert_eq!(count("D4"), 6);
        assert_eq!(count("A3"), 2);
        assert_eq!(count("B3"), 1);
        assert_eq!(count("A1xA1"), 2);
    }

    #[test]
    fn a1_rays_form_one_orbit() {
        let rs = RootSystem::parse("A1").unwrap();
        let rays: Vec<RayTuple> = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
            .iter()
            .map(|r| RayTuple::from_ints(&[&[r[0]], &[r[1]], &[r[2]]], Tag::Dd))
            .collect();
        assert_eq!(orbits(&rs, &rays, false), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn triality_moves_nodes() {
        let rs = RootSystem::parse("D4").unwrap();
        let x = RayTuple::parse_display("(ω1, ω4, ω3)", 4).unwrap();
        let images: Vec<String> =
            diagram_automorphisms(&rs).iter().map(|s| apply_diagram(&x, s).to_string()).collect();
        assert!(images.contains(&"(ω3, ω1, ω4)".to_string()));
        assert!(images.iter().all(|s| !s.contains("ω2")));
    }
}
