use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{first_failure, Context, Outcome};
use crate::catalog::{self, TableId};
use crate::error::Result;
use crate::forms::{Intersection, ParamForm};
use crate::numfield::{Branch, FieldScalar, TimeParam};
use crate::polytope::{
    build_face_lattice, bounded_edges_check, enumerate_vertices, lattices_isomorphic, link_at_vertex,
    symmetry_orbit, EnumerateOptions, FaceLattice, HalfSpaceSystem, VertexKind, VertexRecord,
};
use crate::projective::{Covector, ProjPoint};

fn kinds(verts: &[VertexRecord]) -> (usize, usize, usize) {
    let count = |k| verts.iter().filter(|v| v.kind == k).count();
    (count(VertexKind::Ideal), count(VertexKind::Finite), count(VertexKind::Hyperideal))
}

fn point_json(p: &ProjPoint) -> Value {
    json!(p.coords().iter().map(FieldScalar::to_exact_string).collect::<Vec<_>>())
}

/// Runs `f` on every sample in parallel; gathers per-sample payloads and the first failure.
fn per_sample<F>(ctx: &Context, f: F) -> Result<(Value, Option<Value>)>
where
    F: Fn(&TimeParam) -> Result<(Value, Option<Value>)> + Sync,
{
    let results: Vec<Result<(Value, Option<Value>)>> = ctx.config.samples.par_iter().map(&f).collect();
    let mut actual = serde_json::Map::new();
    let mut failure = None;
    for (t, r) in ctx.config.samples.iter().zip(results) {
        let (v, fail) = r.unwrap_or_else(|e| (Value::Null, Some(json!({ "error": e.to_string() }))));
        actual.insert(t.expr(), v);
        if failure.is_none() {
            failure = fail.map(|x| json!({ "t": t.expr(), "detail": x }));
        }
    }
    Ok((Value::Object(actual), failure))
}

fn boundary_vertex() -> ProjPoint {
    let s = FieldScalar::sqrt2();
    ProjPoint::new(vec![FieldScalar::from_int(2), s.clone(), s, FieldScalar::zero(), FieldScalar::zero()]).expect("nonzero")
}

pub(crate) fn vertex_census(ctx: &Context) -> Result<Outcome> {
    let expected = json!({
        "vertices": 46, "ideal": 12, "finite": 34,
        "fundamental_domain": { "vertices": 13, "boundary": point_json(&boundary_vertex()) },
        "orbit_of_fundamental_domain": 46,
    });
    let gens: Vec<_> = catalog::symmetry_generators().into_iter().filter(|(n, _)| n != "R").map(|(_, g)| g).collect();
    let (actual, failure) = per_sample(ctx, |t| {
        let s = ctx.sample(t)?;
        let (ideal, finite, hyper) = kinds(&s.verts);
        let mut v = json!({ "vertices": s.verts.len(), "ideal": ideal, "finite": finite, "hyperideal": hyper });
        if (s.verts.len(), ideal, finite) != (46, 12, 34) {
            return Ok((v, Some(json!({ "census": [s.verts.len(), ideal, finite] }))));
        }
        let q = ctx.data.q_system(t)?;
        let qv = enumerate_vertices(&q, EnumerateOptions::default())?;
        v["fundamental_domain"] = json!(qv.len());
        if qv.len() != 13 {
            return Ok((v, Some(json!({ "fundamental_domain_vertices": qv.len() }))));
        }
        for fam in ctx.data.table4() {
            let p = fam.eval(t)?;
            let want: BTreeSet<&str> = fam.incidence.iter().map(String::as_str).collect();
            let hit = qv.iter().find(|r| r.point == p);
            let ok = hit.is_some_and(|r| r.incidence.iter().map(String::as_str).collect::<BTreeSet<_>>() == want);
            if !ok {
                return Ok((v, Some(json!({
                    "closed_form": fam.label,
                    "expected_point": point_json(&p),
                    "found_incidence": hit.map(|r| r.incidence.clone()),
                }))));
            }
        }
        let boundary: Vec<&VertexRecord> = qv.iter().filter(|r| r.kind == VertexKind::Ideal).collect();
        v["fundamental_domain_boundary"] = json!(boundary.iter().map(|r| point_json(&r.point)).collect::<Vec<_>>());
        if boundary.len() != 1 || boundary[0].point != boundary_vertex() {
            return Ok((v, Some(json!({ "boundary_vertices": boundary.len() }))));
        }
        let p_points: BTreeSet<Vec<String>> = s.verts.iter().map(|r| r.point.coords().iter().map(FieldScalar::to_exact_string).collect()).collect();
        let seeds: Vec<ProjPoint> = qv.iter().filter(|r| s.verts.iter().any(|w| w.point == r.point)).map(|r| r.point.clone()).collect();
        let orbit = symmetry_orbit(&s.sys, &gens, &seeds)?;
        let o_points: BTreeSet<Vec<String>> = orbit.orbit.iter().map(|p| p.coords().iter().map(FieldScalar::to_exact_string).collect()).collect();
        v["orbit_of_fundamental_domain"] = json!(o_points.len());
        v["group_order"] = json!(orbit.group_order);
        if o_points != p_points {
            return Ok((v, Some(json!({ "orbit_size": o_points.len(), "missing": p_points.difference(&o_points).next() }))));
        }
        Ok((v, None))
    })?;
    Ok(Outcome::new(expected, actual, failure))
}

/// First label set present in one lattice but not the other.
fn lattice_difference(a: &FaceLattice, b: &FaceLattice) -> Option<Value> {
    let (fa, fb) = (a.label_families(), b.label_families());
    for (d, (x, y)) in fa.iter().zip(&fb).enumerate() {
        if x != y {
            return Some(json!({
                "dim": d,
                "only_in_reference": x.difference(y).next(),
                "only_in_sample": y.difference(x).next(),
            }));
        }
    }
    (fa.len() != fb.len()).then(|| json!({ "dims": [fa.len(), fb.len()] }))
}

pub(crate) fn combinatorics(ctx: &Context) -> Result<Outcome> {
    let expected = json!({ "facets": 22, "simple": true, "bounded_edges": true, "lattice_constant": true });
    let reference = match ctx.config.samples.first() {
        Some(t) => Some(ctx.sample(t)?),
        None => None,
    };
    let (actual, failure) = per_sample(ctx, |t| {
        let s = ctx.sample(t)?;
        let l = &s.lattice;
        let facets = l.facets().len();
        let simple = s.verts.iter().enumerate().all(|(i, v)| {
            let k = l.facets_at_vertex(i);
            match v.kind {
                VertexKind::Finite => k == 4,
                _ => k == 6,
            }
        });
        let bounded = bounded_edges_check(l);
        let v = json!({ "f_vector": l.f_vector(), "facets": facets, "simple": simple, "bounded_edges": bounded });
        if facets != 22 || !simple || !bounded {
            return Ok((v.clone(), Some(v)));
        }
        let diff = reference.as_ref().and_then(|r| lattice_difference(&r.lattice, l));
        Ok((v, diff))
    })?;
    Ok(Outcome::new(expected, actual, failure))
}

fn hyperbolic_right(form: &ParamForm, a: &Covector, b: &Covector) -> Result<bool> {
    Ok(form.dual_b(a.coeffs(), b.coeffs())?.is_zero())
}

/// Checks every codimension-one face of `l` is spanned by exactly two labels meeting orthogonally.
fn all_right(sys: &HalfSpaceSystem, l: &FaceLattice, form: &ParamForm) -> Result<Option<Value>> {
    for r in l.ridges() {
        if r.labels.len() != 2 {
            return Ok(Some(json!({ "ridge": r.labels })));
        }
        if !hyperbolic_right(form, sys.covector(&r.labels[0])?, sys.covector(&r.labels[1])?)? {
            return Ok(Some(json!({ "non_right_ridge": r.labels })));
        }
    }
    Ok(None)
}

pub(crate) fn cuboctahedron(ctx: &Context) -> Result<Outcome> {
    let mut facet_labels: Vec<String> = catalog::LETTERS.iter().map(|(l, _, _)| l.to_string()).collect();
    facet_labels.extend((0..8).map(|i| format!("p{i}m{i}")));
    facet_labels.sort();
    let expected = json!({ "ideal_vertices": 12, "finite_vertices": 0, "quadrilaterals": 6, "triangles": 8, "facet_labels": facet_labels, "right_angled": true, "constant": true });
    let form = ParamForm::hyperbolic(3);
    let slice_at = |t: &TimeParam| -> Result<(HalfSpaceSystem, Vec<VertexRecord>, FaceLattice)> {
        let s = ctx.sample(t)?;
        let sys = s.sys.slice_last(Some(form.clone()))?;
        let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
        let l = build_face_lattice(&sys, &verts);
        Ok((sys, verts, l))
    };
    let reference = match ctx.config.samples.first() {
        Some(t) => Some(slice_at(t)?.2),
        None => None,
    };
    let (actual, failure) = per_sample(ctx, |t| {
        let (sys, verts, l) = slice_at(t)?;
        let (ideal, finite, _) = kinds(&verts);
        let facets = l.facets();
        let quads = facets.iter().filter(|f| f.vertices.len() == 4).count();
        let tris = facets.iter().filter(|f| f.vertices.len() == 3).count();
        let mut labels: Vec<String> = facets.iter().flat_map(|f| f.labels.clone()).collect();
        labels.sort();
        let v = json!({ "ideal_vertices": ideal, "finite_vertices": finite, "quadrilaterals": quads, "triangles": tris, "facet_labels": labels });
        if (ideal, finite, quads, tris, facets.len()) != (12, 0, 6, 8, 14) || labels != facet_labels {
            return Ok((v.clone(), Some(v)));
        }
        if let Some(bad) = all_right(&sys, &l, &form)? {
            return Ok((v, Some(bad)));
        }
        Ok((v, reference.as_ref().and_then(|r| lattice_difference(r, &l))))
    })?;
    Ok(Outcome::new(expected, actual, failure))
}

fn signature(v: &VertexRecord) -> String {
    let mut np = 0;
    let mut nm = 0;
    let mut nx = 0;
    for l in &v.incidence {
        match l.as_bytes()[0] {
            b'p' => np += 1,
            b'm' => nm += 1,
            _ => nx += 1,
        }
    }
    format!("{}{}{}", "p".repeat(np), "m".repeat(nm), "X".repeat(nx))
}

fn reference_lattice(dim: usize, covs: Vec<Vec<i64>>) -> FaceLattice {
    let entries = covs
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("h{i}"), Covector::new(c.into_iter().map(FieldScalar::from_int).collect()).expect("nonzero")))
        .collect();
    let sys = HalfSpaceSystem::new(dim, entries, None).expect("reference system");
    let verts = enumerate_vertices(&sys, EnumerateOptions { check_chart: false }).expect("reference vertices");
    build_face_lattice(&sys, &verts)
}

/// The combinatorial cube and tetrahedron.
fn cube_and_tetrahedron() -> (FaceLattice, FaceLattice) {
    let mut cube = Vec::new();
    for i in 1..4 {
        for s in [1, -1] {
            let mut c = vec![-1, 0, 0, 0];
            c[i] = s;
            cube.push(c);
        }
    }
    let tet = (0..4).map(|i| (0..4).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
    (reference_lattice(3, cube), reference_lattice(3, tet))
}

pub(crate) fn links(ctx: &Context) -> Result<Outcome> {
    let expected = json!({ "types": { "ppmmXX": 12, "ppmX": 24, "pppm": 8, "pppp": 2 }, "ideal_link": "cuboid (8, 12, 6)", "finite_link": "tetrahedron (4, 6, 4)" });
    let (cube, tet) = cube_and_tetrahedron();
    let (actual, failure) = per_sample(ctx, |t| {
        let s = ctx.sample(t)?;
        let mut types: BTreeMap<String, usize> = BTreeMap::new();
        for v in &s.verts {
            *types.entry(signature(v)).or_default() += 1;
        }
        let v = json!({ "types": types });
        let want: BTreeMap<String, usize> = [("ppmmXX", 12), ("ppmX", 24), ("pppm", 8), ("pppp", 2)].iter().map(|(k, n)| (k.to_string(), *n)).collect();
        if types != want {
            return Ok((v.clone(), Some(v)));
        }
        let bad = s.verts.par_iter().map(|r| -> Result<Option<Value>> {
            let l = link_at_vertex(&s.sys, r)?;
            let reference = if r.kind == VertexKind::Ideal { &cube } else { &tet };
            Ok((!lattices_isomorphic(&l, reference)).then(|| json!({ "vertex": r.incidence, "link_f_vector": l.f_vector() })))
        }).collect::<Result<Vec<_>>>()?;
        Ok((v, bad.into_iter().flatten().next()))
    })?;
    Ok(Outcome::new(expected, actual, failure))
}

/// The red-edge cosine of the octahedron family at `t ≠ 0`.
pub(crate) fn red_edge_expected(t: &TimeParam) -> FieldScalar {
    let t2 = t.value() * t.value();
    let three = FieldScalar::from_int(3);
    let one = FieldScalar::one();
    match t.branch() {
        Branch::Positive => (&(&three * &t2) - &one).checked_div(&(&one + &t2)).expect("1 + t² > 0"),
        _ => (&(&three * &t2) + &one).checked_div(&(&one - &t2)).expect("|t| < 1"),
    }
}

pub(crate) fn octahedron(ctx: &Context) -> Result<Outcome> {
    let expected = json!({ "lattice_constant": true, "rescaled_matches_unrescaled": true, "red_edge_cosine": "(3t²−1)/(1+t²) for t > 0, (3t²+1)/(1−t²) for t < 0, ψ² = 8 at 0", "isomorphic_to_facet_A": true, "slice": "ideal quadrilateral" });
    let build = |t: &TimeParam, rescaled: bool| -> Result<(HalfSpaceSystem, Vec<VertexRecord>, FaceLattice)> {
        let sys = catalog::octahedron_system(t, rescaled)?;
        let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
        let l = build_face_lattice(&sys, &verts);
        Ok((sys, verts, l))
    };
    let reference = match ctx.config.samples.first() {
        Some(t) if catalog::check_range(TableId::Table1, t, false).is_ok() => Some(build(t, true)?.2),
        _ => None,
    };
    let (actual, failure) = per_sample(ctx, |t| {
        catalog::check_range(TableId::Table1, t, false)?;
        let (sys, verts, l) = build(t, true)?;
        let (ideal, finite, _) = kinds(&verts);
        let mut v = json!({ "f_vector": l.f_vector(), "ideal": ideal, "finite": finite });
        if let Some(d) = reference.as_ref().and_then(|r| lattice_difference(r, &l)) {
            return Ok((v, Some(d)));
        }
        if !t.is_zero() {
            let (_, _, lu) = build(t, false)?;
            if let Some(d) = lattice_difference(&l, &lu) {
                return Ok((v, Some(json!({ "unrescaled": d }))));
            }
        }
        if l.find(1, &["Q0", "Q2"]).is_none() {
            return Ok((v, Some(json!({ "missing_edge": ["Q0", "Q2"] }))));
        }
        let (q0, q2) = (sys.covector("Q0")?, sys.covector("Q2")?);
        if t.is_zero() {
            let psi = crate::forms::hp_angle_sq(q0, q2)?;
            v["red_edge_psi_sq"] = json!(psi.to_exact_string());
            if psi != FieldScalar::from_int(8) {
                return Ok((v, Some(json!({ "psi_sq": psi.to_exact_string() }))));
            }
        } else {
            let a = ParamForm::new(3, t).angle_between(q0, q2)?;
            let c = a.cosine.clone();
            v["red_edge_cosine"] = json!(c.as_ref().map(FieldScalar::to_exact_string));
            if c != Some(red_edge_expected(t)) {
                return Ok((v, Some(json!({ "red_edge_cosine": c.map(|x| x.to_exact_string()) }))));
            }
        }
        let s = ctx.sample(t)?;
        let fa = s.lattice.find(3, &["A"]).map(|f| s.lattice.sublattice(f));
        if !fa.as_ref().is_some_and(|f| lattices_isomorphic(f, &l)) {
            return Ok((v, Some(json!({ "facet_A_f_vector": fa.map(|f| f.f_vector()) }))));
        }
        let slice = sys.slice_last(Some(ParamForm::hyperbolic(2)))?;
        let sv = enumerate_vertices(&slice, EnumerateOptions::default())?;
        let sl = build_face_lattice(&slice, &sv);
        let (si, _, _) = kinds(&sv);
        v["slice"] = json!({ "vertices": sv.len(), "ideal": si, "edges": sl.facets().len() });
        if sv.len() != 4 || si != 4 || sl.facets().len() != 4 {
            return Ok((v.clone(), Some(v["slice"].clone())));
        }
        Ok((v, None))
    })?;
    Ok(Outcome::new(expected, actual, failure))
}

pub(crate) fn cell24(ctx: &Context) -> Result<Outcome> {
    let expected = json!({ "f_vector": [24, 96, 96, 24], "all_ideal": true, "right_angled": true, "octets_disjoint": true });
    let t = TimeParam::one();
    let mut entries: Vec<(String, Covector)> = ctx.data.table2().iter().map(|f| Ok((f.label.clone(), f.eval(&t)?))).collect::<Result<_>>()?;
    entries.extend(catalog::cell24_ext());
    let form = ParamForm::hyperbolic(4);
    let sys = HalfSpaceSystem::new(4, entries, Some(form.clone()))?;
    let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
    let l = build_face_lattice(&sys, &verts);
    let (ideal, _, _) = kinds(&verts);
    let mut actual = json!({ "f_vector": l.f_vector(), "ideal": ideal });
    let mut failure = None;
    if l.f_vector() != vec![24, 96, 96, 24] || ideal != 24 {
        failure = Some(actual.clone());
    }
    if failure.is_none() {
        failure = all_right(&sys, &l, &form)?;
    }
    let octets: [Vec<String>; 3] = [
        (0..8).map(|i| format!("p{i}")).collect(),
        (0..8).map(|i| format!("m{i}")).collect(),
        ["A", "B", "C", "D", "E", "F", "G", "H"].iter().map(|s| s.to_string()).collect(),
    ];
    let mut pairs = Vec::new();
    for oct in &octets {
        for (i, a) in oct.iter().enumerate() {
            for b in &oct[i + 1..] {
                let d = form.angle_between(sys.covector(a)?, sys.covector(b)?)?;
                pairs.push((json!([a, b]), d.intersection == Intersection::NotTransverse));
            }
        }
    }
    actual["octet_pairs_checked"] = json!(pairs.len());
    if failure.is_none() {
        failure = first_failure(pairs).map(|p| json!({ "intersecting_octet_pair": p }));
    }
    Ok(Outcome::new(expected, actual, failure))
}
