
use crate::error::Result;
use crate::rootdata::{ParabolicSpec, RootSystem};
use crate::schubert::ProductTable;
use crate::system::EigenconeSystem;
use crate::tuple::{RayTuple, Tag};

/// Extremal rays of the tensor cone of the semisimple part of the Levi of
/// `p`, written in the fundamental weights of `rs`.
///
/// The cone is the product of the cones of the simple factors, so its rays
/// are the rays of one factor padded with zeros; each factor's cone is
/// computed from its own facets.
pub fn levi_cone_rays(rs: &RootSystem, p: &ParabolicSpec, s: usize) -> Result<Vec<RayTuple>> {
    let r = rs.rank();
    let mut out = Vec::new();
    for nodes in p.levi_factors(rs) {
        let factor = ParabolicSpec::new(rs, nodes.clone())?.levi_root_system(rs)?;
        let sys = EigenconeSystem::new(ProductTable::build(&factor)?, s)?;
        for ray in sys.extremal_rays()? {
            let mut t = RayTuple::zero(s, r, Tag::Dd);
            for (j, w) in ray.weights.iter().enumerate() {
                for (i, &node) in nodes.iter().enumerate() {
                    t.weights[j].coords[node] = w.coords[i].clone();
                }
            }
            out.push(t);
        }
    }
    Ok(out)
}

