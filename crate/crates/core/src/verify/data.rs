use serde::Serialize;

use crate::catalog::{self, CovectorFamily, PointFamily, TableId, Q_LABELS};
use crate::error::{Error, Result};
use crate::forms::ParamForm;
use crate::numfield::{BranchFunc, FieldScalar, TimeParam};
use crate::polytope::HalfSpaceSystem;
use crate::projective::Covector;

/// A deliberate corruption of the tables seen by the checks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Mutation {
    /// Adds `delta` to coefficient `index` of half-space `label`, in both the unrescaled
    /// and the rescaled table.
    Perturb { label: String, index: usize, delta: FieldScalar },
    /// Drops half-space `label` from both tables.
    Remove { label: String },
    /// Adds `delta` to affine coordinate `index` of the closed-form vertex `label`.
    PerturbVertex { label: String, index: usize, delta: FieldScalar },
    /// Negates the translation sign in the expected limit of reflection family `label`.
    FlipLimitSign { label: String },
}

/// Tables as the checks see them, with the configured mutation applied.
pub(crate) struct Data {
    mutation: Option<Mutation>,
}

impl Data {
    pub fn new(mutation: Option<Mutation>) -> Self {
        Data { mutation }
    }

    fn mutate(&self, fams: Vec<CovectorFamily>) -> Vec<CovectorFamily> {
        match &self.mutation {
            Some(Mutation::Perturb { label, index, delta }) => fams
                .into_iter()
                .map(|mut f| {
                    if &f.label == label && *index < f.entries.len() {
                        f.entries[*index] = f.entries[*index].add(&BranchFunc::constant(delta.clone()));
                    }
                    f
                })
                .collect(),
            Some(Mutation::Remove { label }) => fams.into_iter().filter(|f| &f.label != label).collect(),
            _ => fams,
        }
    }

    pub fn table2(&self) -> Vec<CovectorFamily> {
        self.mutate(catalog::table2_families())
    }

    pub fn table3(&self) -> Vec<CovectorFamily> {
        self.mutate(catalog::table3_families())
    }

    pub fn table4(&self) -> Vec<PointFamily> {
        let mut fams = catalog::table4_families();
        if let Some(Mutation::PerturbVertex { label, index, delta }) = &self.mutation {
            for f in fams.iter_mut().filter(|f| &f.label == label) {
                if *index < f.affine.len() {
                    f.affine[*index] = f.affine[*index].add(&BranchFunc::constant(delta.clone()));
                }
            }
        }
        fams
    }

    /// Whether the expected limit of family `label` has its sign flipped.
    pub fn limit_sign_flipped(&self, label: &str) -> bool {
        matches!(&self.mutation, Some(Mutation::FlipLimitSign { label: l }) if l == label)
    }

    fn eval(fams: &[CovectorFamily], t: &TimeParam) -> Result<Vec<(String, Covector)>> {
        fams.iter().map(|f| Ok((f.label.clone(), f.eval(t)?))).collect()
    }

    /// The rescaled system of the 22 half-spaces with form `q_t`.
    pub fn p_system(&self, t: &TimeParam, extended_range: bool) -> Result<HalfSpaceSystem> {
        catalog::check_range(TableId::Table3, t, extended_range)?;
        HalfSpaceSystem::new(4, Self::eval(&self.table3(), t)?, Some(ParamForm::new(4, t)))
    }

    /// The unrescaled system with the model form; undefined at `t = 0`.
    pub fn p_system_unrescaled(&self, t: &TimeParam, extended_range: bool) -> Result<HalfSpaceSystem> {
        catalog::check_range(TableId::Table2, t, extended_range)?;
        if t.is_zero() {
            return Err(Error::DegenerateRescale);
        }
        HalfSpaceSystem::new(4, Self::eval(&self.table2(), t)?, Some(ParamForm::model(4, t)))
    }

    /// The rescaled fundamental domain.
    pub fn q_system(&self, t: &TimeParam) -> Result<HalfSpaceSystem> {
        let fams = self.table3();
        let mut entries = Vec::new();
        for l in &Q_LABELS[..5] {
            if let Some(f) = fams.iter().find(|f| &f.label == l) {
                entries.push((l.to_string(), f.eval(t)?));
            }
        }
        entries.extend(catalog::aux_lmn());
        HalfSpaceSystem::new(4, entries, Some(ParamForm::new(4, t)))
    }
}
