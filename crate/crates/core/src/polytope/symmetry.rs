use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::HalfSpaceSystem;
use crate::error::{Error, Result};
use crate::isometry::generate_group;
use crate::projective::{ProjMap, ProjPoint};

/// Action of a symmetry group on a system's labels and on a point set.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryOrbit {
    /// For each generator, the image label of every label.
    pub label_perms: Vec<BTreeMap<String, String>>,
    pub group_order: usize,
    pub orbit: Vec<ProjPoint>,
}

/// Checks that every generator permutes the system's half-spaces and returns the
/// orbit of `points` under the generated group.
pub fn symmetry_orbit(sys: &HalfSpaceSystem, generators: &[ProjMap], points: &[ProjPoint]) -> Result<SymmetryOrbit> {
    let mut label_perms = Vec::new();
    for g in generators {
        let mut perm = BTreeMap::new();
        for (l, c) in sys.entries() {
            let img = g.pushforward_halfspace(c)?;
            let j = sys.covectors().iter().position(|d| *d == img).ok_or(Error::NotASymmetry)?;
            perm.insert(l.clone(), sys.labels()[j].clone());
        }
        label_perms.push(perm);
    }
    let group = generate_group(generators, 1 << 16).ok_or(Error::NotASymmetry)?;
    let mut seen = HashSet::new();
    let mut orbit = Vec::new();
    for p in points {
        for g in &group {
            let q = g.apply_point(p)?;
            if seen.insert(q.clone()) {
                orbit.push(q);
            }
        }
    }
    Ok(SymmetryOrbit { label_perms, group_order: group.len(), orbit })
}
