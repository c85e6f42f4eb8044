use std::fmt;

use crate::error::{Error, Result};

use super::{CartanLabel, RootSystem};

/// A standard parabolic subgroup, given by the simple roots `Delta(P)` of its
/// Levi factor (0-based nodes, sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSpec {
    levi_nodes: Vec<usize>,
}

impl ParabolicSpec {
    pub fn new(rs: &RootSystem, mut levi_nodes: Vec<usize>) -> Result<Self> {
        for &n in &levi_nodes {
            rs.check_node(n)?;
        }
        levi_nodes.sort_unstable();
        levi_nodes.dedup();
        Ok(ParabolicSpec { levi_nodes })
    }

    pub fn borel() -> Self {
        ParabolicSpec { levi_nodes: Vec::new() }
    }

    /// The maximal parabolic `P_k` with `Delta(P) = Delta - {alpha_k}`.
    pub fn maximal(rs: &RootSystem, k: usize) -> Result<Self> {
        Self::omitting(rs, &[k])
    }

    /// The parabolic whose Levi omits exactly the given nodes.
    pub fn omitting(rs: &RootSystem, omitted: &[usize]) -> Result<Self> {
        for &n in omitted {
            rs.check_node(n)?;
        }
        Ok(ParabolicSpec {
            levi_nodes: (0..rs.rank()).filter(|i| !omitted.contains(i)).collect(),
        })
    }

    /// `Delta(P)`.
    pub fn levi_nodes(&self) -> &[usize] {
        &self.levi_nodes
    }

    /// `Delta - Delta(P)`.
    pub fn omitted(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.rank()).filter(|i| !self.levi_nodes.contains(i)).collect()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.levi_nodes.binary_search(&node).is_ok()
    }

    pub fn is_maximal(&self, rs: &RootSystem) -> bool {
        self.levi_nodes.len() + 1 == rs.rank()
    }

    pub fn is_borel(&self) -> bool {
        self.levi_nodes.is_empty()
    }

    /// Indices of the positive roots supported on `Delta(P)`.
    pub fn levi_roots(&self, rs: &RootSystem) -> Vec<usize> {
        rs.positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.iter().enumerate().all(|(i, &x)| x == 0 || self.contains(i)))
            .map(|(idx, _)| idx)
            .collect()
    }

    pub fn is_levi_root(&self, rs: &RootSystem, idx: usize) -> bool {
        rs.positive_roots()[idx]
            .iter()
            .enumerate()
            .all(|(i, &x)| x == 0 || self.contains(i))
    }

    /// `dim G/P = |R^+| - |R^+_l|`.
    pub fn dim(&self, rs: &RootSystem) -> usize {
        rs.num_positive_roots() - self.levi_roots(rs).len()
    }

    /// Root system of the semisimple part of the Levi, with its node `i`
    /// corresponding to `levi_nodes()[i]`.
    pub fn levi_root_system(&self, rs: &RootSystem) -> Result<RootSystem> {
        let a = rs.cartan_matrix();
        let sub: Vec<Vec<i64>> = self
            .levi_nodes
            .iter()
            .map(|&i| self.levi_nodes.iter().map(|&j| a[i][j]).collect())
            .collect();
        RootSystem::from_cartan(sub, None)
    }

    pub fn levi_label(&self, rs: &RootSystem) -> Result<CartanLabel> {
        Ok(self.levi_root_system(rs)?.label().clone())
    }

    /// Connected components of `Delta(P)` in the Dynkin diagram.
    pub fn levi_factors(&self, rs: &RootSystem) -> Vec<Vec<usize>> {
        let a = rs.cartan_matrix();
        let mut left: Vec<usize> = self.levi_nodes.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first().copied() {
            let mut comp = vec![start];
            left.retain(|&x| x != start);
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                let (adj, rest): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&u| a[v][u] != 0);
                comp.extend(adj);
                left = rest;
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Parses a comma/space separated list of 1-based omitted nodes (`"2"`,
    /// `"1,3"`); an empty string means `G` itself.
    pub fn parse_omitted(rs: &RootSystem, s: &str) -> Result<Self> {
        let omitted = parse_nodes(s)?;
        Self::omitting(rs, &omitted)
    }
}

/// Parses 1-based node numbers into 0-based indices.
pub(crate) fn parse_nodes(s: &str) -> Result<Vec<usize>> {
    s.split([',', ' ', ';'])
        .filter(|t| !t.is_empty())
        .map(|t| match t.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n - 1),
            _ => Err(Error::Parse(format!("bad node `{t}`"))),
        })
        .collect()
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.levi_nodes.iter().map(|n| (n + 1).to_string()).collect();
        write!(f, "Δ(P)={{{}}}", nodes.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_p2_levi() {
        let rs = RootSystem::parse("D4").unwrap();
        let p = ParabolicSpec::parse_omitted(&rs, "2").unwrap();
        assert_eq!(p.levi_nodes(), &[0, 2, 3]);
        assert_eq!(p.levi_roots(&rs).len(), 3);
        assert_eq!(p.dim(&rs), 9);
        assert_eq!(p.levi_factors(&rs), vec![vec![0], vec![2], vec![3]]);
        let p4 = ParabolicSpec::maximal(&rs, 3).unwrap();
        assert_eq!(p4.levi_factors(&rs), vec![vec![0, 1, 2]]);
        assert_eq!(p4.dim(&rs), 6);
    }

    #[test]
    fn rejects_out_of_range() {
        let rs = RootSystem::parse("A2").unwrap();
        assert!(ParabolicSpec::parse_omitted(&rs, "3").is_err());
        assert!(ParabolicSpec::parse_omitted(&rs, "0").is_err());
    }
}
