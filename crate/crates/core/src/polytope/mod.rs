//! Projective polytopes given as intersections of labeled half-spaces: exact vertex
//! enumeration, face lattices, links, symmetry orbits.

mod lattice;
mod link;
mod symmetry;
mod vertices;

pub use lattice::{build_face_lattice, bounded_edges_check, lattices_equal, lattices_isomorphic, Face, FaceLattice};
pub use link::link_at_vertex;
pub use symmetry::{symmetry_orbit, SymmetryOrbit};
pub use vertices::{enumerate_vertices, EnumerateOptions, VertexKind, VertexRecord};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::ParamForm;
use crate::numfield::FieldScalar;
use crate::projective::Covector;

/// A labeled list of half-spaces `{α ≤ 0}` in `Sⁿ`, with the form used to classify vertices.
#[derive(Debug, Clone, Serialize)]
pub struct HalfSpaceSystem {
    dim: usize,
    labels: Vec<String>,
    covectors: Vec<Covector>,
    #[serde(skip)]
    form: Option<ParamForm>,
}

impl HalfSpaceSystem {
    /// Labels must be unique and every covector must have `dim + 1` coefficients.
    pub fn new(dim: usize, entries: Vec<(String, Covector)>, form: Option<ParamForm>) -> Result<Self> {
        let mut labels = Vec::with_capacity(entries.len());
        let mut covectors = Vec::with_capacity(entries.len());
        for (l, c) in entries {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: c.dim() });
            }
            if labels.contains(&l) {
                return Err(Error::Parse(format!("duplicate label {l}")));
            }
            labels.push(l);
            covectors.push(c);
        }
        if let Some(f) = &form {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: f.dim() });
            }
        }
        Ok(HalfSpaceSystem { dim, labels, covectors, form })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn covectors(&self) -> &[Covector] {
        &self.covectors
    }

    pub fn form(&self) -> Option<&ParamForm> {
        self.form.as_ref()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn covector(&self, label: &str) -> Result<&Covector> {
        self.index_of(label).map(|i| &self.covectors[i]).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&String, &Covector)> {
        self.labels.iter().zip(&self.covectors)
    }

    /// The subsystem with the given labels, in the given order.
    pub fn restrict(&self, labels: &[&str]) -> Result<Self> {
        let entries = labels
            .iter()
            .map(|l| Ok((l.to_string(), self.covector(l)?.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, entries, self.form.clone())
    }

    pub fn without(&self, label: &str) -> Result<Self> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let entries = self.entries().filter(|(l, _)| *l != label).map(|(l, c)| (l.clone(), c.clone())).collect();
        Self::new(self.dim, entries, self.form.clone())
    }

    pub fn with(&self, label: &str, cov: Covector) -> Result<Self> {
        let mut entries: Vec<(String, Covector)> = self.entries().map(|(l, c)| (l.clone(), c.clone())).collect();
        entries.push((label.to_string(), cov));
        Self::new(self.dim, entries, self.form.clone())
    }

    pub fn with_form(mut self, form: Option<ParamForm>) -> Self {
        self.form = form;
        self
    }

    /// Restriction to the hyperplane `{xₙ = 0}` in `Sⁿ⁻¹`.
    ///
    /// Covectors that become equal are merged under the concatenation of their labels;
    /// covectors that vanish on the hyperplane are dropped.
    pub fn slice_last(&self, form: Option<ParamForm>) -> Result<Self> {
        let mut merged: Vec<(String, Covector)> = Vec::new();
        for (l, c) in self.entries() {
            let coeffs = c.coeffs()[..self.dim].to_vec();
            if coeffs.iter().all(FieldScalar::is_zero) {
                continue;
            }
            let cov = Covector::new(coeffs)?;
            match merged.iter_mut().find(|(_, d)| *d == cov) {
                Some((name, _)) => name.push_str(l),
                None => merged.push((l.clone(), cov)),
            }
        }
        Self::new(self.dim - 1, merged, form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cov(xs: &[i64]) -> Covector {
        Covector::new(xs.iter().map(|&x| FieldScalar::from_int(x)).collect()).unwrap()
    }

    #[test]
    fn labels_are_unique() {
        let e = vec![("a".to_string(), cov(&[-1, 1, 0])), ("a".to_string(), cov(&[-1, 0, 1]))];
        assert!(HalfSpaceSystem::new(2, e, None).is_err());
    }

    #[test]
    fn slice_merges_equal_traces() {
        let e = vec![("p".to_string(), cov(&[-1, 1, 1])), ("m".to_string(), cov(&[-1, 1, -1])), ("z".to_string(), cov(&[0, 0, 1]))];
        let s = HalfSpaceSystem::new(2, e, None).unwrap().slice_last(None).unwrap();
        assert_eq!(s.labels(), &["pm".to_string()]);
    }
}
