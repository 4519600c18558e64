//! Acceptance criteria, one test per criterion. Each test combines the entry of the
//! default certificate with direct recomputation of the values the criterion names.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use halfpipe::catalog::{octahedron_system, p_system, q_system, table4_families, HorosphereEmbedding};
use halfpipe::forms::{hp_angle_sq, HyperplaneType, ParamForm};
use halfpipe::isometry::{conj_rescaled, family_limit, reflection, rotation_or_boost_analyze};
use halfpipe::numfield::{FieldScalar, TimeParam};
use halfpipe::polytope::{build_face_lattice, enumerate_vertices, lattices_equal, EnumerateOptions, FaceLattice, VertexKind};
use halfpipe::projective::{AffineImage, ProjPoint};
use halfpipe::verify::{run_suite, CheckResult, VerifyConfig};

fn certificate() -> &'static [CheckResult] {
    static CERT: OnceLock<Vec<CheckResult>> = OnceLock::new();
    CERT.get_or_init(|| run_suite(&["all".to_string()], &VerifyConfig::default()).expect("suite runs"))
}

fn assert_check(name: &str) {
    let c = certificate().iter().find(|c| c.name == name).expect("check present");
    assert!(c.passed(), "{name} failed: {}", c.actual);
}

fn fs(s: &str) -> FieldScalar {
    s.parse().unwrap()
}

fn t(s: &str) -> TimeParam {
    s.parse().unwrap()
}

fn lattice_at(tp: &TimeParam) -> FaceLattice {
    let sys = p_system(tp, true, false).unwrap();
    build_face_lattice(&sys, &enumerate_vertices(&sys, EnumerateOptions::default()).unwrap())
}

#[test]
fn criterion_01_vertex_census() {
    for e in ["1/5", "-1/5", "1/3", "-1/3", "1/2", "-1/2", "1/sqrt3", "0"] {
        let start = Instant::now();
        let sys = p_system(&t(e), true, false).unwrap();
        let verts = enumerate_vertices(&sys, EnumerateOptions::default()).unwrap();
        let elapsed = start.elapsed();
        let ideal = verts.iter().filter(|v| v.kind == VertexKind::Ideal).count();
        let finite = verts.iter().filter(|v| v.kind == VertexKind::Finite).count();
        assert_eq!((verts.len(), ideal, finite), (46, 12, 34), "t = {e}");
        assert!(elapsed < Duration::from_secs(5), "t = {e} took {elapsed:?}");
    }
    assert_check("vertex_census");
}

/// Closed-form vertices in affine coordinates with `w = −t|t|`, so `w = t²` for `t ≤ 0`.
/// The fourth coordinate of the p0m3AN vertex is √2/2, the value that satisfies N.
fn closed_form_vertices(w: &FieldScalar) -> Vec<(&'static str, [FieldScalar; 4])> {
    let r2 = FieldScalar::sqrt2();
    let q = |n: i64, d: i64| &r2 * &FieldScalar::from_ratio(n, d);
    let z = FieldScalar::zero;
    let w1 = w + &FieldScalar::one();
    let w3 = w + &FieldScalar::from_int(3);
    let a = &q(1, 4) * &w1;
    let b = &(&r2 * &w1).checked_div(&w3).unwrap();
    let c = &q(2, 1).checked_div(&w3).unwrap();
    vec![
        ("V_p0p3m0m3AL", [q(1, 2), q(1, 2), z(), z()]),
        ("V_p0m0AM", [q(1, 2), q(1, 4), q(1, 4), z()]),
        ("V_p0m0LM", [q(1, 3), q(1, 3), q(1, 3), z()]),
        ("V_p0m3AN", [q(1, 2), a.clone(), -&a, q(1, 2)]),
        ("V_p0m3LN", [b.clone(), b.clone(), -b, c.clone()]),
        ("V_p0AMN", [q(1, 2), z(), z(), q(1, 2)]),
        ("V_p0LMN", [z(), z(), z(), r2.clone()]),
        ("V_p3m0AM", [q(1, 2), a.clone(), a.clone(), -&q(1, 2)]),
        ("V_p3m0LM", [b.clone(), b.clone(), b.clone(), -c]),
        ("V_p3m3AN", [q(1, 2), q(1, 4), -&q(1, 4), z()]),
        ("V_p3m3LN", [q(1, 3), q(1, 3), -&q(1, 3), z()]),
        ("V_p3AMN", [q(1, 2), z(), z(), -&q(1, 2)]),
        ("V_p3LMN", [z(), z(), z(), -&r2]),
    ]
}

#[test]
fn criterion_02_closed_form_vertices() {
    let boundary = ProjPoint::new(vec![FieldScalar::from_int(2), FieldScalar::sqrt2(), FieldScalar::sqrt2(), FieldScalar::zero(), FieldScalar::zero()]).unwrap();
    for e in ["1/2", "-1/2"] {
        let tp = t(e);
        let w = -&tp.t_abs_t();
        let want = closed_form_vertices(&w);
        let sys = q_system(&tp).unwrap();
        let verts = enumerate_vertices(&sys, EnumerateOptions::default()).unwrap();
        assert_eq!(verts.len(), 13);
        let fams = table4_families();
        for (label, y) in &want {
            let p = ProjPoint::from_affine(y);
            let v = verts.iter().find(|v| v.point == p).unwrap_or_else(|| panic!("{label} not a vertex at t = {e}"));
            let fam = fams.iter().find(|f| f.label == *label).unwrap();
            assert_eq!(fam.eval(&tp).unwrap(), p, "{label}");
            let a: BTreeSet<&String> = v.incidence.iter().collect();
            let b: BTreeSet<&String> = fam.incidence.iter().collect();
            assert_eq!(a, b, "{label}");
            // Incidence read off the half-spaces directly.
            for (l, c) in sys.entries() {
                let val = c.eval(p.coords());
                assert!(!val.is_positive());
                assert_eq!(val.is_zero(), fam.incidence.contains(l), "{label} on {l}");
            }
        }
        let ideal: Vec<_> = verts.iter().filter(|v| v.kind == VertexKind::Ideal).collect();
        assert_eq!(ideal.len(), 1);
        assert_eq!(ideal[0].point, boundary);
        match ideal[0].point.to_affine().unwrap() {
            AffineImage::Point(y) => assert_eq!(y, want[0].1.to_vec()),
            other => panic!("{other:?}"),
        }
    }
    assert_check("vertex_census");
}

#[test]
fn criterion_03_constant_combinatorics() {
    let reference = lattice_at(&t("1/2"));
    assert_eq!(reference.f_vector(), vec![46, 116, 92, 22]);
    assert_eq!(reference.facets().len(), 22);
    for e in ["0", "-1/2", "1/sqrt3"] {
        assert!(lattices_equal(&lattice_at(&t(e)), &reference), "t = {e}");
    }
    assert!(reference.edges().iter().all(|e| e.vertices.len() == 2));
    assert_check("combinatorics");
}

#[test]
fn criterion_04_angle_ledger() {
    let non_right = |tp: &TimeParam| -> BTreeSet<(String, String)> {
        let sys = p_system(tp, true, false).unwrap();
        let l = build_face_lattice(&sys, &enumerate_vertices(&sys, EnumerateOptions::default()).unwrap());
        let form = ParamForm::new(4, tp);
        l.ridges()
            .iter()
            .filter(|r| !form.dual_b(sys.covector(&r.labels[0]).unwrap().coeffs(), sys.covector(&r.labels[1]).unwrap().coeffs()).unwrap().is_zero())
            .map(|r| (r.labels[0].clone(), r.labels[1].clone()))
            .collect()
    };
    let pairs = non_right(&t("1/3"));
    assert_eq!(pairs.len(), 12);
    for (a, b) in &pairs {
        let (i, j): (u32, u32) = (a[1..].parse().unwrap(), b[1..].parse().unwrap());
        assert!(a.starts_with('p') && b.starts_with('p') && i % 2 == j % 2, "{a}{b}");
    }
    assert_eq!(non_right(&t("-1/3")), pairs);
    assert!(non_right(&TimeParam::inv_sqrt3()).is_empty());
    let s = p_system(&TimeParam::inv_sqrt3(), true, false).unwrap();
    let d = ParamForm::new(4, &TimeParam::inv_sqrt3()).angle_between(s.covector("p0").unwrap(), s.covector("p2").unwrap()).unwrap();
    assert_eq!(d.cosine, Some(FieldScalar::zero()));
    // cos θ at t = 1/2 and cosh φ at t = −1/2.
    for (e, want) in [("1/2", "-1/5"), ("-1/2", "7/3")] {
        let s = p_system(&t(e), true, false).unwrap();
        let d = ParamForm::new(4, &t(e)).angle_between(s.covector("p1").unwrap(), s.covector("p3").unwrap()).unwrap();
        assert_eq!(d.cosine, Some(fs(want)));
    }
    let c = certificate().iter().find(|c| c.name == "angles").unwrap();
    assert!(c.params["identity_samples"].as_u64().unwrap() >= 33);
    assert_check("angles");
}

#[test]
fn criterion_05_causal_types() {
    let count = |tp: &TimeParam| {
        let sys = p_system(tp, true, false).unwrap();
        let form = ParamForm::new(4, tp);
        let ty: Vec<HyperplaneType> = sys.covectors().iter().map(|c| form.classify_hyperplane(c)).collect();
        let n = |k: HyperplaneType| ty.iter().filter(|x| **x == k).count();
        (n(HyperplaneType::Spacelike), n(HyperplaneType::Timelike), n(HyperplaneType::Degenerate))
    };
    assert_eq!(count(&t("-1/2")), (8, 14, 0));
    assert_eq!(count(&t("-1/5")), (8, 14, 0));
    assert_eq!(count(&t("0")), (8, 0, 14));
    assert_check("causal_types");
}

#[test]
fn criterion_06_c1_transition() {
    let fams = halfpipe::catalog::table2_families();
    assert_eq!(fams.len(), 22);
    let mut order2 = 0;
    for f in &fams {
        let fam = conj_rescaled(&f.label, &f.entries).unwrap();
        for k in 0..2 {
            let (l, r) = family_limit(&fam, k).unwrap();
            assert_eq!(l, r, "{} order {k}", f.label);
        }
        let (l, r) = family_limit(&fam, 2).unwrap();
        order2 += usize::from(l != r);
    }
    assert!(order2 >= 1);
    assert_check("reflection_transition");
}

#[test]
fn criterion_07_meridian_holonomy() {
    for (e, trace) in [("1/2", "29/25"), ("-1/2", "205/9")] {
        let tp = t(e);
        let sys = p_system(&tp, true, false).unwrap();
        let form = ParamForm::new(4, &tp);
        let m = reflection(sys.covector("p1").unwrap(), &form).unwrap().compose(&reflection(sys.covector("p3").unwrap(), &form).unwrap());
        let r = rotation_or_boost_analyze(&m, &form).unwrap();
        assert_eq!(r.trace, fs(trace), "t = {e}");
        assert_eq!(r.fixed_dim, 3);
    }
    let fams = halfpipe::catalog::table2_families();
    let lim = |l: &str| {
        let f = fams.iter().find(|f| f.label == l).unwrap();
        halfpipe::projective::ProjMap::new(family_limit(&conj_rescaled(l, &f.entries).unwrap(), 0).unwrap().0).unwrap()
    };
    let r = rotation_or_boost_analyze(&lim("p1").compose(&lim("p3")), &ParamForm::half_pipe(4)).unwrap();
    assert_eq!(r.magnitude_sq, Some(FieldScalar::from_int(32)));
    assert_check("meridian_holonomy");
}

#[test]
fn criterion_08_transition_identities() {
    // Exact values on a grid, beyond the degree bound of either side.
    for n in 1..=40i64 {
        for sign in [1, -1] {
            let tp = TimeParam::ratio(sign * n, 70);
            let sys = p_system(&tp, true, false).unwrap();
            let d = ParamForm::new(4, &tp).angle_between(sys.covector("p0").unwrap(), sys.covector("p2").unwrap()).unwrap();
            let c = d.cosine.unwrap();
            let t2 = &tp.value().clone() * tp.value();
            if sign > 0 {
                let want = (&t2 * &FieldScalar::from_int(4)).checked_div(&(&FieldScalar::one() + &t2)).unwrap();
                assert_eq!(&FieldScalar::one() + &c, want);
            } else {
                let want = (&t2 * &FieldScalar::from_int(4)).checked_div(&(&FieldScalar::one() - &t2)).unwrap();
                assert_eq!(&c - &FieldScalar::one(), want);
            }
        }
    }
    let s0 = p_system(&TimeParam::zero(), true, false).unwrap();
    for (a, b) in [("p0", "p2"), ("p1", "p3"), ("p4", "p6"), ("p1", "p7")] {
        assert_eq!(hp_angle_sq(s0.covector(a).unwrap(), s0.covector(b).unwrap()).unwrap(), FieldScalar::from_int(8));
    }
    assert_check("angles");
}

#[test]
fn criterion_09_cuboctahedron() {
    for e in ["1/2", "0", "-1/2"] {
        let s = p_system(&t(e), true, false).unwrap().slice_last(Some(ParamForm::hyperbolic(3))).unwrap();
        let v = enumerate_vertices(&s, EnumerateOptions::default()).unwrap();
        assert_eq!(v.len(), 12);
        assert!(v.iter().all(|x| x.kind == VertexKind::Ideal));
        let l = build_face_lattice(&s, &v);
        let sizes: Vec<usize> = l.facets().iter().map(|f| f.vertices.len()).collect();
        assert_eq!(sizes.iter().filter(|&&k| k == 4).count(), 6);
        assert_eq!(sizes.iter().filter(|&&k| k == 3).count(), 8);
    }
    assert_check("cuboctahedron");
}

#[test]
fn criterion_10_vertex_links() {
    let tp = t("-1/3");
    let sys = p_system(&tp, true, false).unwrap();
    let verts = enumerate_vertices(&sys, EnumerateOptions::default()).unwrap();
    let mut cubes = 0;
    let mut tets = 0;
    for v in &verts {
        match halfpipe::polytope::link_at_vertex(&sys, v).unwrap().f_vector().as_slice() {
            [8, 12, 6] => cubes += 1,
            [4, 6, 4] => tets += 1,
            other => panic!("link {other:?}"),
        }
    }
    assert_eq!((cubes, tets), (12, 34));
    assert_check("links");
}

#[test]
fn criterion_11_octahedron_family() {
    let build = |tp: &TimeParam| {
        let s = octahedron_system(tp, true).unwrap();
        let v = enumerate_vertices(&s, EnumerateOptions::default()).unwrap();
        (build_face_lattice(&s, &v), s)
    };
    let (reference, _) = build(&t("1/2"));
    for e in ["9/10", "3/4", "1/5", "0", "-1/5", "-3/4", "-9/10"] {
        let tp = t(e);
        let (l, s) = build(&tp);
        assert!(lattices_equal(&l, &reference), "t = {e}");
        if !tp.is_zero() {
            let t2 = tp.value() * tp.value();
            let num = if tp.value().is_positive() { &(&t2 * &FieldScalar::from_int(3)) - &FieldScalar::one() } else { &(&t2 * &FieldScalar::from_int(3)) + &FieldScalar::one() };
            let den = if tp.value().is_positive() { &FieldScalar::one() + &t2 } else { &FieldScalar::one() - &t2 };
            let d = ParamForm::new(3, &tp).angle_between(s.covector("Q0").unwrap(), s.covector("Q2").unwrap()).unwrap();
            assert_eq!(d.cosine, Some(num.checked_div(&den).unwrap()), "t = {e}");
        }
    }
    assert_check("octahedron");
}

#[test]
fn criterion_12_cell24() {
    let s = halfpipe::catalog::cell24_system().unwrap();
    let v = enumerate_vertices(&s, EnumerateOptions::default()).unwrap();
    let l = build_face_lattice(&s, &v);
    assert_eq!(l.f_vector(), vec![24, 96, 96, 24]);
    assert!(v.iter().all(|x| x.kind == VertexKind::Ideal));
    let form = ParamForm::hyperbolic(4);
    for r in l.ridges() {
        let b = form.dual_b(s.covector(&r.labels[0]).unwrap().coeffs(), s.covector(&r.labels[1]).unwrap().coeffs()).unwrap();
        assert!(b.is_zero(), "{:?}", r.labels);
    }
    assert_check("cell24");
}

#[test]
fn criterion_13_cusp_geometry() {
    use halfpipe::catalog::{pullback_metric_at, EmbeddingKind};
    use halfpipe::linalg::Matrix;
    for e in ["1/2", "0", "-1/3"] {
        let tp = t(e);
        let s = tp.t_abs_t();
        let y = [fs("1/2"), fs("-2/3"), fs("3/5"), fs("7/4")];
        let eta = HorosphereEmbedding::new(EmbeddingKind::Eta, tp.clone(), 4);
        let g = pullback_metric_at(&eta, &y[..3]).unwrap();
        assert_eq!(g, Matrix::diag(vec![FieldScalar::one(), FieldScalar::one(), s.clone()]));
        let zeta = HorosphereEmbedding::new(EmbeddingKind::Zeta, tp.clone(), 4);
        let inv = (&y[0] * &y[0]).inv().unwrap();
        let want = Matrix::diag(vec![inv.clone(), inv.clone(), inv.clone(), &s * &inv]);
        assert_eq!(pullback_metric_at(&zeta, &y).unwrap(), want);
    }
    assert_check("cusps");
}
