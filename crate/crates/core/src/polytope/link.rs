use super::{build_face_lattice, enumerate_vertices, EnumerateOptions, FaceLattice, HalfSpaceSystem, VertexRecord};
use crate::error::Result;
use crate::projective::Covector;

/// Face lattice of the link of `v`: the half-spaces through `v`, pushed to the quotient
/// `ℝⁿ⁺¹/⟨v⟩` with basis the standard vectors other than the coordinate of largest
/// absolute value in `v`.
pub fn link_at_vertex(sys: &HalfSpaceSystem, v: &VertexRecord) -> Result<FaceLattice> {
    let coords = v.point.coords();
    let mut drop = 0;
    for (i, c) in coords.iter().enumerate() {
        if c.abs().cmp_value(&coords[drop].abs()).is_gt() {
            drop = i;
        }
    }
    let entries = v
        .incidence_idx
        .iter()
        .map(|&i| {
            let c = sys.covectors()[i].coeffs();
            let reduced = c.iter().enumerate().filter(|(k, _)| *k != drop).map(|(_, x)| x.clone()).collect();
            Ok((sys.labels()[i].clone(), Covector::new(reduced)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let link = HalfSpaceSystem::new(sys.dim() - 1, entries, None)?;
    let verts = enumerate_vertices(&link, EnumerateOptions { check_chart: false })?;
    Ok(build_face_lattice(&link, &verts))
}
