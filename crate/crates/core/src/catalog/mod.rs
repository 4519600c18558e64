//! Concrete data of the polytope family: half-space tables as branch-valued
//! constructors, auxiliary mirrors, symmetry generators, closed-form vertices of the
//! fundamental domain, the 24-cell truncation, and horosphere embeddings.

mod horosphere;

pub use horosphere::{pullback_metric_at, translation_matrix, EmbeddingKind, HorosphereEmbedding};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::ParamForm;
use crate::numfield::{BranchFunc, FieldScalar, TimeParam};
use crate::polytope::HalfSpaceSystem;
use crate::projective::{Covector, ProjMap, ProjPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TableId {
    /// 3-dimensional octahedron family.
    Table1,
    /// The 22 half-spaces of the 4-dimensional family.
    Table2,
    /// The same half-spaces after rescaling by `r_{|t|}`.
    Table3,
    /// Closed-form vertices of the rescaled fundamental domain.
    Table4,
    /// Auxiliary mirrors `L`, `M`, `N`.
    AuxLMN,
    /// The two half-spaces `G`, `H` cutting the `t = 1` polytope to the 24-cell.
    Cell24Ext,
}

impl std::str::FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "table1" | "1" => TableId::Table1,
            "table2" | "2" => TableId::Table2,
            "table3" | "3" => TableId::Table3,
            "table4" | "4" => TableId::Table4,
            "aux" | "auxlmn" | "lmn" => TableId::AuxLMN,
            "cell24" | "cell24ext" => TableId::Cell24Ext,
            _ => return Err(Error::Parse(format!("unknown table `{s}`"))),
        })
    }
}

/// A covector whose coefficients depend on `t`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CovectorFamily {
    pub label: String,
    pub entries: Vec<BranchFunc>,
}

impl CovectorFamily {
    pub fn eval(&self, t: &TimeParam) -> Result<Covector> {
        Covector::new(self.entries.iter().map(|e| e.eval(t)).collect::<Result<Vec<_>>>()?)
    }
}

/// A closed-form vertex in affine coordinates with its expected incidence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointFamily {
    pub label: String,
    pub incidence: Vec<String>,
    pub affine: Vec<BranchFunc>,
}

impl PointFamily {
    pub fn eval(&self, t: &TimeParam) -> Result<ProjPoint> {
        Ok(ProjPoint::from_affine(&self.affine.iter().map(|e| e.eval(t)).collect::<Result<Vec<_>>>()?))
    }
}

/// Evaluated table contents.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum TableData {
    Covectors(Vec<(String, Covector)>),
    Points(Vec<(String, Vec<String>, ProjPoint)>),
}

fn c(x: FieldScalar) -> BranchFunc {
    BranchFunc::constant(x)
}

fn ci(n: i64) -> BranchFunc {
    BranchFunc::int(n)
}

fn sqrt2() -> BranchFunc {
    c(FieldScalar::sqrt2())
}

fn q(n: i64, d: i64) -> BranchFunc {
    c(FieldScalar::from_ratio(n, d))
}

/// Sign patterns `(s₁, s₂, s₃, s₄)` of `p₀ … p₇`; `mᵢ` shares the first three.
pub const P_SIGNS: [[i64; 4]; 8] = [
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
    [1, 1, -1, -1],
    [-1, 1, -1, 1],
    [-1, 1, 1, -1],
    [-1, -1, 1, 1],
    [-1, -1, -1, -1],
];

/// Letter mirrors `A … F` as `(−1 : …)` with `±√2` in one coordinate.
pub const LETTERS: [(&str, usize, i64); 6] = [("A", 1, 1), ("B", 2, 1), ("C", 3, 1), ("D", 3, -1), ("E", 2, -1), ("F", 1, -1)];

fn letter_families() -> Vec<CovectorFamily> {
    LETTERS
        .iter()
        .map(|(l, k, s)| {
            let mut e = vec![ci(-1), ci(0), ci(0), ci(0), ci(0)];
            e[*k] = sqrt2().scale(&FieldScalar::from_int(*s));
            CovectorFamily { label: l.to_string(), entries: e }
        })
        .collect()
}

/// `±t` on `m`-rows: `−` for even index, `+` for odd.
fn m_sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// The 22 unrescaled half-spaces: `pᵢ = (−√2|t| : s₁|t| : s₂|t| : s₃|t| : s₄)`,
/// `mᵢ = (−√2 : s₁ : s₂ : s₃ : ∓t)`, and the letters.
pub fn table2_families() -> Vec<CovectorFamily> {
    let a = BranchFunc::abs_t();
    let mut out = Vec::new();
    for (i, s) in P_SIGNS.iter().enumerate() {
        out.push(CovectorFamily {
            label: format!("p{i}"),
            entries: vec![sqrt2().neg().mul(&a), a.scale(&FieldScalar::from_int(s[0])), a.scale(&FieldScalar::from_int(s[1])), a.scale(&FieldScalar::from_int(s[2])), ci(s[3])],
        });
    }
    for (i, s) in P_SIGNS.iter().enumerate() {
        out.push(CovectorFamily {
            label: format!("m{i}"),
            entries: vec![sqrt2().neg(), ci(s[0]), ci(s[1]), ci(s[2]), BranchFunc::t().scale(&FieldScalar::from_int(m_sign(i)))],
        });
    }
    out.extend(letter_families());
    out
}

/// The 22 rescaled half-spaces: `pᵢ = (−√2 : s₁ : s₂ : s₃ : s₄)`,
/// `mᵢ = (−√2 : s₁ : s₂ : s₃ : ∓t|t|)`, and the letters.
pub fn table3_families() -> Vec<CovectorFamily> {
    let tt = BranchFunc::t_abs_t();
    let mut out = Vec::new();
    for (i, s) in P_SIGNS.iter().enumerate() {
        out.push(CovectorFamily { label: format!("p{i}"), entries: vec![sqrt2().neg(), ci(s[0]), ci(s[1]), ci(s[2]), ci(s[3])] });
    }
    for (i, s) in P_SIGNS.iter().enumerate() {
        out.push(CovectorFamily {
            label: format!("m{i}"),
            entries: vec![sqrt2().neg(), ci(s[0]), ci(s[1]), ci(s[2]), tt.scale(&FieldScalar::from_int(m_sign(i)))],
        });
    }
    out.extend(letter_families());
    out
}

/// Image family under `r_{|t|}`: the last coefficient is multiplied by `|t|`.
pub fn rescale_family(f: &CovectorFamily) -> CovectorFamily {
    let mut entries = f.entries.clone();
    let n = entries.len() - 1;
    entries[n] = entries[n].mul(&BranchFunc::abs_t());
    CovectorFamily { label: f.label.clone(), entries }
}

/// The octahedron family in `S³`: quadrilateral faces `Q0…Q3` then triangular faces `T0…T3`.
pub fn table1_families() -> Vec<CovectorFamily> {
    let a = BranchFunc::abs_t();
    let t = BranchFunc::t();
    let s2a = sqrt2().mul(&a);
    let z = ci(0);
    vec![
        CovectorFamily { label: "Q0".into(), entries: vec![a.neg(), s2a.neg(), z.clone(), ci(-1)] },
        CovectorFamily { label: "Q1".into(), entries: vec![a.neg(), z.clone(), s2a.neg(), ci(1)] },
        CovectorFamily { label: "Q2".into(), entries: vec![a.neg(), s2a.clone(), z.clone(), ci(-1)] },
        CovectorFamily { label: "Q3".into(), entries: vec![a.neg(), z.clone(), s2a, ci(1)] },
        CovectorFamily { label: "T0".into(), entries: vec![ci(-1), sqrt2().neg(), z.clone(), t.clone()] },
        CovectorFamily { label: "T1".into(), entries: vec![ci(-1), z.clone(), sqrt2().neg(), t.neg()] },
        CovectorFamily { label: "T2".into(), entries: vec![ci(-1), sqrt2(), z.clone(), t.clone()] },
        CovectorFamily { label: "T3".into(), entries: vec![ci(-1), z, sqrt2(), t.neg()] },
    ]
}

/// Rescaled octahedron family, normalized so that every entry is continuous at `t = 0`.
pub fn table1_rescaled_families() -> Vec<CovectorFamily> {
    let tt = BranchFunc::t_abs_t();
    let z = ci(0);
    vec![
        CovectorFamily { label: "Q0".into(), entries: vec![ci(-1), sqrt2().neg(), z.clone(), ci(-1)] },
        CovectorFamily { label: "Q1".into(), entries: vec![ci(-1), z.clone(), sqrt2().neg(), ci(1)] },
        CovectorFamily { label: "Q2".into(), entries: vec![ci(-1), sqrt2(), z.clone(), ci(-1)] },
        CovectorFamily { label: "Q3".into(), entries: vec![ci(-1), z.clone(), sqrt2(), ci(1)] },
        CovectorFamily { label: "T0".into(), entries: vec![ci(-1), sqrt2().neg(), z.clone(), tt.clone()] },
        CovectorFamily { label: "T1".into(), entries: vec![ci(-1), z.clone(), sqrt2().neg(), tt.neg()] },
        CovectorFamily { label: "T2".into(), entries: vec![ci(-1), sqrt2(), z.clone(), tt.clone()] },
        CovectorFamily { label: "T3".into(), entries: vec![ci(-1), z, sqrt2(), tt.neg()] },
    ]
}

/// `L = (0:−1:1:0:0)`, `M = (0:0:−1:1:0)`, `N = (0:0:−1:−1:0)`.
pub fn aux_lmn() -> Vec<(String, Covector)> {
    let v = |xs: [i64; 5]| Covector::new(xs.iter().map(|&x| FieldScalar::from_int(x)).collect()).expect("nonzero");
    vec![("L".into(), v([0, -1, 1, 0, 0])), ("M".into(), v([0, 0, -1, 1, 0])), ("N".into(), v([0, 0, -1, -1, 0]))]
}

/// `G = (−1:0:0:0:−√2)`, `H = (−1:0:0:0:√2)`.
pub fn cell24_ext() -> Vec<(String, Covector)> {
    let m1 = FieldScalar::from_int(-1);
    let z = FieldScalar::zero;
    vec![
        ("G".into(), Covector::new(vec![m1.clone(), z(), z(), z(), -FieldScalar::sqrt2()]).expect("nonzero")),
        ("H".into(), Covector::new(vec![m1, z(), z(), z(), FieldScalar::sqrt2()]).expect("nonzero")),
    ]
}

/// The 13 vertices of the rescaled fundamental domain, as closed forms in `u = t|t|`.
pub fn table4_families() -> Vec<PointFamily> {
    let u = BranchFunc::t_abs_t();
    let one_minus_u = ci(1).sub(&u);
    let three_minus_u = ci(3).sub(&u);
    let s = |k: i64, d: i64| sqrt2().mul(&q(k, d));
    let a = sqrt2().mul(&q(1, 4)).mul(&one_minus_u);
    let b = sqrt2().mul(&one_minus_u).checked_div(&three_minus_u).expect("3 − t|t| ≠ 0");
    let h = sqrt2().scale(&FieldScalar::from_int(2)).checked_div(&three_minus_u).expect("3 − t|t| ≠ 0");
    let z = ci(0);
    let row = |inc: &[&str], y: Vec<BranchFunc>| PointFamily {
        label: format!("V_{}", inc.concat()),
        incidence: inc.iter().map(|s| s.to_string()).collect(),
        affine: y,
    };
    vec![
        row(&["p0", "p3", "m0", "m3", "A", "L"], vec![s(1, 2), s(1, 2), z.clone(), z.clone()]),
        row(&["p0", "m0", "A", "M"], vec![s(1, 2), s(1, 4), s(1, 4), z.clone()]),
        row(&["p0", "m0", "L", "M"], vec![s(1, 3), s(1, 3), s(1, 3), z.clone()]),
        row(&["p0", "m3", "A", "N"], vec![s(1, 2), a.clone(), a.neg(), s(1, 2)]),
        row(&["p0", "m3", "L", "N"], vec![b.clone(), b.clone(), b.neg(), h.clone()]),
        row(&["p0", "A", "M", "N"], vec![s(1, 2), z.clone(), z.clone(), s(1, 2)]),
        row(&["p0", "L", "M", "N"], vec![z.clone(), z.clone(), z.clone(), s(1, 1)]),
        row(&["p3", "m0", "A", "M"], vec![s(1, 2), a.clone(), a, s(-1, 2)]),
        row(&["p3", "m0", "L", "M"], vec![b.clone(), b.clone(), b, h.neg()]),
        row(&["p3", "m3", "A", "N"], vec![s(1, 2), s(1, 4), s(-1, 4), z.clone()]),
        row(&["p3", "m3", "L", "N"], vec![s(1, 3), s(1, 3), s(-1, 3), z.clone()]),
        row(&["p3", "A", "M", "N"], vec![s(1, 2), z.clone(), z.clone(), s(-1, 2)]),
        row(&["p3", "L", "M", "N"], vec![z.clone(), z.clone(), z, s(-1, 1)]),
    ]
}

/// Labels of the fundamental domain.
pub const Q_LABELS: [&str; 8] = ["p0", "m0", "p3", "m3", "A", "L", "M", "N"];

/// Checks the validity interval of a table.
pub fn check_range(id: TableId, t: &TimeParam, extended_range: bool) -> Result<()> {
    let ok = match id {
        TableId::Cell24Ext => *t == TimeParam::one(),
        TableId::Table1 => extended_range || *t != TimeParam::one(),
        _ => t.in_core_interval() || extended_range,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfInterval(t.expr()))
    }
}

fn eval_all(fams: &[CovectorFamily], t: &TimeParam) -> Result<Vec<(String, Covector)>> {
    fams.iter().map(|f| Ok((f.label.clone(), f.eval(t)?))).collect()
}

/// Exact contents of a table at `t`.
pub fn table(id: TableId, t: &TimeParam, extended_range: bool) -> Result<TableData> {
    check_range(id, t, extended_range)?;
    Ok(match id {
        TableId::Table1 => TableData::Covectors(eval_all(&table1_families(), t)?),
        TableId::Table2 => TableData::Covectors(eval_all(&table2_families(), t)?),
        TableId::Table3 => TableData::Covectors(eval_all(&table3_families(), t)?),
        TableId::AuxLMN => TableData::Covectors(aux_lmn()),
        TableId::Cell24Ext => TableData::Covectors(cell24_ext()),
        TableId::Table4 => TableData::Points(
            table4_families().iter().map(|f| Ok((f.label.clone(), f.incidence.clone(), f.eval(t)?))).collect::<Result<Vec<_>>>()?,
        ),
    })
}

/// The 22-half-space system: rescaled (`r_{|t|}` image, form `q_t`) or unrescaled
/// (form `q_{±1}`, `t ≠ 0`).
pub fn p_system(t: &TimeParam, rescaled: bool, extended_range: bool) -> Result<HalfSpaceSystem> {
    check_range(TableId::Table2, t, extended_range)?;
    if rescaled {
        HalfSpaceSystem::new(4, eval_all(&table3_families(), t)?, Some(ParamForm::new(4, t)))
    } else {
        if t.is_zero() {
            return Err(Error::DegenerateRescale);
        }
        HalfSpaceSystem::new(4, eval_all(&table2_families(), t)?, Some(ParamForm::model(4, t)))
    }
}

/// The rescaled fundamental domain `p0 ∩ m0 ∩ p3 ∩ m3 ∩ A ∩ L ∩ M ∩ N`.
pub fn q_system(t: &TimeParam) -> Result<HalfSpaceSystem> {
    let p = p_system(t, true, false)?;
    let mut entries: Vec<(String, Covector)> = Q_LABELS[..5].iter().map(|l| Ok((l.to_string(), p.covector(l)?.clone()))).collect::<Result<_>>()?;
    entries.extend(aux_lmn());
    HalfSpaceSystem::new(4, entries, p.form().cloned())
}

/// The octahedron system in `S³`, rescaled or not.
pub fn octahedron_system(t: &TimeParam, rescaled: bool) -> Result<HalfSpaceSystem> {
    check_range(TableId::Table1, t, false)?;
    if rescaled {
        HalfSpaceSystem::new(3, eval_all(&table1_rescaled_families(), t)?, Some(ParamForm::new(3, t)))
    } else {
        if t.is_zero() {
            return Err(Error::DegenerateRescale);
        }
        HalfSpaceSystem::new(3, eval_all(&table1_families(), t)?, Some(ParamForm::model(3, t)))
    }
}

/// The `t = 1` system with `G` and `H` appended.
pub fn cell24_system() -> Result<HalfSpaceSystem> {
    let t = TimeParam::one();
    let mut entries = eval_all(&table2_families(), &t)?;
    entries.extend(cell24_ext());
    HalfSpaceSystem::new(4, entries, Some(ParamForm::hyperbolic(4)))
}

/// `r_L`, `r_M`, `r_N` and the roll `R`.
pub fn symmetry_generators() -> Vec<(String, ProjMap)> {
    let id = [1i64; 5];
    vec![
        ("rL".into(), ProjMap::signed_permutation(&[0, 2, 1, 3, 4], &id).expect("permutation")),
        ("rM".into(), ProjMap::signed_permutation(&[0, 1, 3, 2, 4], &id).expect("permutation")),
        ("rN".into(), ProjMap::signed_permutation(&[0, 1, 3, 2, 4], &[1, 1, -1, -1, 1]).expect("permutation")),
        ("R".into(), ProjMap::signed_permutation(&[0, 1, 2, 3, 4], &[1, 1, 1, -1, -1]).expect("permutation")),
    ]
}

/// `vᵢ = (−√2, s₁, s₂, s₃)`, the spatial part shared by `pᵢ` and `mᵢ`.
pub fn v_vector(i: usize) -> Vec<FieldScalar> {
    let s = P_SIGNS[i];
    vec![-FieldScalar::sqrt2(), FieldScalar::from_int(s[0]), FieldScalar::from_int(s[1]), FieldScalar::from_int(s[2])]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FieldScalar {
        s.parse().unwrap()
    }

    #[test]
    fn table_rows() {
        let t = TimeParam::ratio(1, 2);
        let p0 = table2_families()[0].eval(&t).unwrap();
        let want: Vec<FieldScalar> = ["-1/2*sqrt2", "1/2", "1/2", "1/2", "1"].iter().map(|s| fs(s)).collect();
        assert_eq!(p0.coeffs(), &want[..]);
        let m0 = table3_families()[8].eval(&TimeParam::ratio(-1, 2)).unwrap();
        let want: Vec<FieldScalar> = ["-1*sqrt2", "1", "1", "1", "1/4"].iter().map(|s| fs(s)).collect();
        assert_eq!(m0.coeffs(), &want[..]);
        let v = &table4_families()[1];
        assert_eq!(v.label, "V_p0m0AM");
        let y: Vec<FieldScalar> = v.affine.iter().map(|e| e.eval(&TimeParam::ratio(1, 3)).unwrap()).collect();
        let want: Vec<FieldScalar> = ["1/2*sqrt2", "1/4*sqrt2", "1/4*sqrt2", "0"].iter().map(|s| fs(s)).collect();
        assert_eq!(y, want);
    }

    #[test]
    fn ranges() {
        assert!(table(TableId::Cell24Ext, &TimeParam::ratio(1, 2), true).is_err());
        assert!(table(TableId::Table2, &TimeParam::one(), false).is_err());
        assert!(table(TableId::Table2, &TimeParam::one(), true).is_ok());
        assert!(table(TableId::Table2, &TimeParam::inv_sqrt3(), false).is_ok());
    }

    #[test]
    fn symmetry_labels() {
        let g = symmetry_generators();
        let t = TimeParam::ratio(1, 3);
        let fams = table2_families();
        let m1 = fams[9].eval(&t).unwrap();
        let m5 = fams[13].eval(&t).unwrap();
        assert_eq!(g[0].1.pushforward_halfspace(&m1).unwrap(), m5);
        let p0 = fams[0].eval(&t).unwrap();
        assert_eq!(g[0].1.pushforward_halfspace(&p0).unwrap(), p0);
        let p3 = fams[3].eval(&t).unwrap();
        assert_eq!(g[3].1.pushforward_halfspace(&p0).unwrap(), p3);
    }
}
