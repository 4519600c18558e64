use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::census::red_edge_expected;
use super::{first_failure, Context, Outcome};
use crate::catalog::{pullback_metric_at, translation_matrix, CovectorFamily, EmbeddingKind, HorosphereEmbedding};
use crate::error::{Error, Result};
use crate::forms::{hp_angle_sq, HyperplaneType, ParamForm};
use crate::isometry::{null_rotation, toric_cusp_commutation};
use crate::linalg::Matrix;
use crate::numfield::{Branch, BranchFunc, FieldScalar, TimeParam};

/// `b*_t(α, β)` of two rescaled families, with dual weights `(−1, 1, …, 1, 1/(t|t|))`.
pub(crate) fn dual_b_branch(a: &CovectorFamily, b: &CovectorFamily) -> Result<BranchFunc> {
    let n = a.entries.len() - 1;
    let last = BranchFunc::one().checked_div(&BranchFunc::t_abs_t())?;
    let mut acc = BranchFunc::zero();
    for i in 0..=n {
        let w = if i == 0 {
            BranchFunc::int(-1)
        } else if i == n {
            last.clone()
        } else {
            BranchFunc::one()
        };
        acc = acc.add(&w.mul(&a.entries[i]).mul(&b.entries[i]));
    }
    Ok(acc)
}

/// `p`-labels with indices of equal parity.
pub(crate) fn is_special_pair(a: &str, b: &str) -> bool {
    let idx = |s: &str| s.strip_prefix('p').and_then(|r| r.parse::<usize>().ok());
    matches!((idx(a), idx(b)), (Some(i), Some(j)) if i % 2 == j % 2)
}

fn ratio(num: &BranchFunc, den: &BranchFunc) -> BranchFunc {
    num.checked_div(den).expect("nonzero denominator")
}

/// `(3t² − 1)/(1 + t²)` on `t > 0`, `(3t² + 1)/(1 − t²)` on `t < 0`.
pub(crate) fn ridge_cosine_closed_form() -> BranchFunc {
    let t2 = BranchFunc::t().mul(&BranchFunc::t());
    let three = t2.scale(&FieldScalar::from_int(3));
    let pos = ratio(&three.sub(&BranchFunc::one()), &BranchFunc::one().add(&t2));
    let neg = ratio(&three.add(&BranchFunc::one()), &BranchFunc::one().sub(&t2));
    BranchFunc::from_branches(pos.pos().clone(), neg.neg_branch().clone())
}

/// `4t²/(1 + t²)` on `t > 0`, `4t²/(1 − t²)` on `t < 0`.
fn ridge_gap_closed_form() -> BranchFunc {
    let t2 = BranchFunc::t().mul(&BranchFunc::t());
    let four = t2.scale(&FieldScalar::from_int(4));
    let pos = ratio(&four, &BranchFunc::one().add(&t2));
    let neg = ratio(&four, &BranchFunc::one().sub(&t2));
    BranchFunc::from_branches(pos.pos().clone(), neg.neg_branch().clone())
}

pub(crate) fn angles(ctx: &Context) -> Result<Outcome> {
    let fams = ctx.data.table3();
    let fam = |l: &str| fams.iter().find(|f| f.label == l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let mut special: Vec<(String, String)> = Vec::new();
    for i in 0..8 {
        for j in (i + 2..8).step_by(2) {
            special.push((format!("p{i}"), format!("p{j}")));
        }
    }
    let expected = json!({
        "non_right_ridges": special.iter().map(|(a, b)| format!("{a}{b}")).collect::<Vec<_>>(),
        "cosine": "(3t²−1)/(1+t²) for t > 0, cosh = (3t²+1)/(1−t²) for t < 0",
        "one_plus_cos": "4t²/(1+t²)", "cosh_minus_one": "4t²/(1−t²)",
        "right_at": "1/sqrt3", "hp_psi_sq": "8", "other_ridges": "b_t ≡ 0",
    });
    let reference_t = ctx.config.samples.first().cloned().unwrap_or_else(|| TimeParam::ratio(1, 2));
    let reference = ctx.sample(&reference_t)?;
    let ridges: Vec<(String, String)> = reference
        .lattice
        .ridges()
        .iter()
        .map(|r| match r.labels.as_slice() {
            [a, b] => Ok((a.clone(), b.clone())),
            other => Err(Error::Parse(format!("ridge with labels {other:?}"))),
        })
        .collect::<Result<_>>()?;
    let mut actual = json!({ "ridges": ridges.len() });
    let ridge_special: BTreeSet<(String, String)> = ridges.iter().filter(|(a, b)| is_special_pair(a, b)).cloned().collect();
    let special_set: BTreeSet<(String, String)> = special.iter().cloned().collect();
    if ridge_special != special_set {
        return Ok(Outcome::new(expected, actual, Some(json!({ "special_ridges": ridge_special.len() }))));
    }
    let cosine = ridge_cosine_closed_form();
    let gap = ridge_gap_closed_form();
    let n = ctx.config.identity_samples;
    let mut checks: Vec<(Value, bool)> = Vec::new();
    for (a, b) in &ridges {
        let (fa, fb) = (fam(a)?, fam(b)?);
        let bb = dual_b_branch(fa, fb)?;
        if is_special_pair(a, b) {
            let q = dual_b_branch(fa, fa)?;
            if q != dual_b_branch(fb, fb)? {
                checks.push((json!({ "ridge": [a, b], "unequal_norms": true }), false));
                continue;
            }
            let r = ratio(&bb, &q);
            let lhs = BranchFunc::from_branches(r.neg().pos().clone(), r.neg_branch().clone());
            let rep = lhs.certify_identity(&cosine, n)?;
            checks.push((json!({ "ridge": [a, b], "cosine": rep }), rep.holds));
            let shifted = BranchFunc::from_branches(BranchFunc::one().sub(&r).pos().clone(), r.sub(&BranchFunc::one()).neg_branch().clone());
            let rep = shifted.certify_identity(&gap, n)?;
            checks.push((json!({ "ridge": [a, b], "gap": rep }), rep.holds));
            let zero = TimeParam::zero();
            let psi = hp_angle_sq(&fa.eval(&zero)?, &fb.eval(&zero)?)?;
            checks.push((json!({ "ridge": [a, b], "psi_sq": psi.to_exact_string() }), psi == FieldScalar::from_int(8)));
        } else {
            let rep = bb.certify_identity(&BranchFunc::zero(), n)?;
            checks.push((json!({ "ridge": [a, b], "orthogonal": rep }), rep.holds));
        }
    }
    actual["identities_certified"] = json!(checks.len());
    if let Some(f) = first_failure(checks) {
        return Ok(Outcome::new(expected, actual, Some(f)));
    }
    let mut per_t = serde_json::Map::new();
    for t in &ctx.config.samples {
        let s = ctx.sample(t)?;
        if t.is_zero() {
            per_t.insert(t.expr(), json!("half-pipe: see psi_sq"));
            continue;
        }
        let form = ParamForm::new(4, t);
        let mut non_right = BTreeSet::new();
        for (a, b) in &ridges {
            let d = form.angle_between(s.sys.covector(a)?, s.sys.covector(b)?)?;
            if !d.b.is_zero() {
                non_right.insert((a.clone(), b.clone()));
                if d.cosine != Some(red_edge_expected(t)) {
                    let f = json!({ "t": t.expr(), "ridge": [a, b], "cosine": d.cosine.map(|c| c.to_exact_string()) });
                    return Ok(Outcome::new(expected, actual, Some(f)));
                }
            }
        }
        let want = if *t == TimeParam::inv_sqrt3() { BTreeSet::new() } else { special_set.clone() };
        per_t.insert(t.expr(), json!({ "non_right": non_right.len(), "cosine": red_edge_expected(t).to_exact_string(), "branch": format!("{:?}", t.branch()) }));
        if non_right != want {
            let f = json!({ "t": t.expr(), "non_right": non_right.len(), "expected": want.len() });
            return Ok(Outcome::new(expected, actual, Some(f)));
        }
    }
    actual["samples"] = Value::Object(per_t);
    Ok(Outcome::new(expected, actual, None))
}

fn expected_type(label: &str, branch: Branch) -> HyperplaneType {
    let p = label.starts_with('p');
    match branch {
        Branch::Positive => HyperplaneType::Spacelike,
        Branch::Negative if p => HyperplaneType::Spacelike,
        Branch::Negative => HyperplaneType::Timelike,
        Branch::Zero if p => HyperplaneType::Spacelike,
        Branch::Zero => HyperplaneType::Degenerate,
    }
}

pub(crate) fn causal_types(ctx: &Context) -> Result<Outcome> {
    let expected = json!({
        "t<0": { "Spacelike": 8, "Timelike": 14 },
        "t=0": { "Spacelike": 8, "Degenerate": 14 },
        "t>0": { "meets_hyperbolic_space": 22 },
    });
    let mut actual = serde_json::Map::new();
    for t in &ctx.config.samples {
        let s = ctx.sample(t)?;
        let form = ParamForm::new(4, t);
        let mut counts = std::collections::BTreeMap::new();
        for (l, c) in s.sys.entries() {
            let ty = form.classify_hyperplane(c);
            *counts.entry(format!("{ty:?}")).or_insert(0usize) += 1;
            if ty != expected_type(l, t.branch()) {
                let f = json!({ "t": t.expr(), "label": l, "type": format!("{ty:?}") });
                actual.insert(t.expr(), json!(counts));
                return Ok(Outcome::new(expected, Value::Object(actual), Some(f)));
            }
        }
        if !t.is_zero() {
            // Types are invariant under the rescaling.
            let u = ctx.data.p_system_unrescaled(t, ctx.config.extended_range)?;
            let model = ParamForm::model(4, t);
            for ((l, a), b) in s.sys.entries().zip(u.covectors()) {
                if form.classify_hyperplane(a) != model.classify_hyperplane(b) {
                    let f = json!({ "t": t.expr(), "label": l, "unrescaled_type": format!("{:?}", model.classify_hyperplane(b)) });
                    return Ok(Outcome::new(expected, Value::Object(actual), Some(f)));
                }
            }
        }
        actual.insert(t.expr(), json!(counts));
    }
    Ok(Outcome::new(expected, Value::Object(actual), None))
}

fn q(n: i64, d: i64) -> FieldScalar {
    FieldScalar::from_ratio(n, d)
}

/// Five fixed rational chart points per embedding.
fn cusp_points(kind: EmbeddingKind) -> Vec<Vec<FieldScalar>> {
    match kind {
        EmbeddingKind::Eta => vec![
            vec![q(0, 1), q(0, 1), q(0, 1)],
            vec![q(1, 1), q(0, 1), q(0, 1)],
            vec![q(1, 2), q(-1, 3), q(2, 1)],
            vec![q(-3, 1), q(5, 7), q(1, 4)],
            vec![q(2, 1), q(2, 1), q(-1, 1)],
        ],
        EmbeddingKind::Zeta => vec![
            vec![q(2, 1), q(0, 1), q(0, 1), q(0, 1)],
            vec![q(1, 1), q(1, 1), q(1, 1), q(1, 1)],
            vec![q(1, 2), q(-1, 3), q(2, 1), q(3, 1)],
            vec![q(3, 1), q(5, 7), q(-1, 4), q(1, 1)],
            vec![q(7, 5), q(2, 1), q(-1, 1), q(-2, 1)],
        ],
    }
}

pub(crate) fn cusps(ctx: &Context) -> Result<Outcome> {
    let expected = json!({
        "eta": "diag(1, 1, t|t|), q_t = −1 on the image",
        "zeta": "diag(1, 1, 1, t|t|)/y1²",
        "translation_isometry": true,
        "toric_commutation": { "fixing": true, "not_fixing": false },
    });
    let mut checks: Vec<(Value, bool)> = Vec::new();
    for t in &ctx.config.samples {
        for kind in [EmbeddingKind::Eta, EmbeddingKind::Zeta] {
            let emb = HorosphereEmbedding::new(kind, t.clone(), 4);
            for y in cusp_points(kind) {
                let g = pullback_metric_at(&emb, &y)?;
                let ok = g == emb.expected_pullback(&y)?;
                let on_quadric = kind == EmbeddingKind::Zeta || emb.q_image(&y)? == FieldScalar::from_int(-1);
                let y_s: Vec<String> = y.iter().map(FieldScalar::to_exact_string).collect();
                checks.push((json!({ "t": t.expr(), "kind": format!("{kind:?}"), "y": y_s, "gram": g }), ok && on_quadric));
            }
        }
        let j = ParamForm::new(4, t).matrix();
        let m = translation_matrix(&q(3, 2), 4)?;
        checks.push((json!({ "t": t.expr(), "translation": m }), m.transpose().mul(&j).mul(&m) == j));
    }
    let w: Vec<FieldScalar> = [1, 1, 0, 0].iter().map(|&x| FieldScalar::from_int(x)).collect();
    let e2: Vec<FieldScalar> = [0, 0, 1, 0].iter().map(|&x| FieldScalar::from_int(x)).collect();
    let fixing = null_rotation(&w, &e2)?;
    let fixes_w = fixing.mul_vec(&w) == w;
    let yes = toric_cusp_commutation(&fixing, &w, &FieldScalar::one())?;
    let w2: Vec<FieldScalar> = [1, 0, 1, 0].iter().map(|&x| FieldScalar::from_int(x)).collect();
    let e3: Vec<FieldScalar> = [0, 0, 0, 1].iter().map(|&x| FieldScalar::from_int(x)).collect();
    let other: Matrix<FieldScalar> = null_rotation(&w2, &e3)?;
    let no = toric_cusp_commutation(&other, &w, &FieldScalar::one())?;
    let actual = json!({
        "gram_checks": checks.len(),
        "toric_commutation": { "fixing": yes, "not_fixing": no },
    });
    checks.push((json!({ "toric_fixing": yes }), fixes_w && yes.commutes));
    checks.push((json!({ "toric_not_fixing": no }), !no.commutes && no.witness.is_some()));
    Ok(Outcome::new(expected, actual, first_failure(checks)))
}
