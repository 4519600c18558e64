use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::HalfSpaceSystem;
use crate::error::{Error, Result};
use crate::forms::PointClass;
use crate::linalg::Matrix;
use crate::numfield::FieldScalar;
use crate::projective::ProjPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VertexKind {
    /// Interior point of the model domain.
    Finite,
    /// On the boundary at infinity.
    Ideal,
    /// Outside the closed domain.
    Hyperideal,
    /// The system carries no form.
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexRecord {
    pub point: ProjPoint,
    /// Labels of all hyperplanes through the vertex, in system order.
    pub incidence: Vec<String>,
    #[serde(skip)]
    pub incidence_idx: Vec<usize>,
    pub kind: VertexKind,
}

impl VertexRecord {
    pub fn has_label(&self, label: &str) -> bool {
        self.incidence.iter().any(|l| l == label)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    /// Reject any feasible point with `x₀ ≤ 0`.
    pub check_chart: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { check_chart: true }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All vertices, from the unique (up to scale) solutions of every `n`-subset of
/// hyperplanes that satisfy every inequality; sorted by incidence.
pub fn enumerate_vertices(sys: &HalfSpaceSystem, opts: EnumerateOptions) -> Result<Vec<VertexRecord>> {
    let n = sys.dim();
    let covs = sys.covectors();
    let subsets = combinations(covs.len(), n);
    let feasible = |x: &[FieldScalar]| covs.iter().all(|c| !c.eval(x).is_positive());
    let found: Vec<Result<ProjPoint>> = subsets
        .par_iter()
        .filter_map(|sub| {
            let m = Matrix::from_rows(sub.iter().map(|&i| covs[i].coeffs().to_vec()).collect());
            let ns = m.nullspace();
            if ns.len() != 1 {
                return None;
            }
            let v = &ns[0];
            let neg: Vec<FieldScalar> = v.iter().map(|x| -x).collect();
            let x = if feasible(v) {
                v.clone()
            } else if feasible(&neg) {
                neg
            } else {
                return None;
            };
            let p = ProjPoint::new(x).expect("nonzero kernel vector");
            if opts.check_chart && !p.coords()[0].is_positive() {
                let labels: Vec<&str> = sub.iter().map(|&i| sys.labels()[i].as_str()).collect();
                return Some(Err(Error::ChartViolation(labels.join(","))));
            }
            Some(Ok(p))
        })
        .collect();
    let mut seen = HashSet::new();
    let mut points = Vec::new();
    for r in found {
        let p = r?;
        if seen.insert(p.clone()) {
            points.push(p);
        }
    }
    let mut records: Vec<VertexRecord> = points
        .into_par_iter()
        .map(|p| {
            let incidence_idx: Vec<usize> = (0..covs.len()).filter(|&i| covs[i].eval(p.coords()).is_zero()).collect();
            let kind = match sys.form() {
                None => VertexKind::Unclassified,
                Some(f) => match f.classify_point(&p) {
                    PointClass::Interior => VertexKind::Finite,
                    PointClass::Boundary => VertexKind::Ideal,
                    PointClass::Exterior => VertexKind::Hyperideal,
                },
            };
            let incidence = incidence_idx.iter().map(|&i| sys.labels()[i].clone()).collect();
            VertexRecord { point: p, incidence, incidence_idx, kind }
        })
        .collect();
    records.sort_by(|a, b| {
        a.incidence_idx.cmp(&b.incidence_idx).then_with(|| a.point.coords().iter().map(|c| c.to_exact_string()).cmp(b.point.coords().iter().map(|c| c.to_exact_string())))
    });
    Ok(records)
}
