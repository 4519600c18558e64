//! Cross-checks of exact results against independent floating-point computations.

mod common;

use std::collections::BTreeMap;

use common::{brute_vertices, rescaled_system};
use halfpipe::catalog::p_system;
use halfpipe::numfield::TimeParam;
use halfpipe::polytope::{enumerate_vertices, EnumerateOptions, VertexKind};

fn signature(inc: &[String]) -> String {
    let mut counts = BTreeMap::new();
    for l in inc {
        let key = match l.chars().next() {
            Some('p') => 'p',
            Some('m') => 'm',
            _ => 'X',
        };
        *counts.entry(key).or_insert(0) += 1;
    }
    ['p', 'm', 'X'].iter().map(|k| k.to_string().repeat(*counts.get(k).unwrap_or(&0))).collect()
}

#[test]
fn brute_force_census_matches_exact_enumeration() {
    for (n, d) in [(1, 2), (-1, 2), (1, 5), (-2, 5)] {
        let tf = n as f64 / d as f64;
        let brute = brute_vertices(&rescaled_system(tf), tf * tf.abs());
        let ideal = brute.iter().filter(|v| v.2.abs() < 1e-9).count();
        assert_eq!((brute.len(), ideal), (46, 12), "t = {tf}");

        let t = TimeParam::ratio(n, d);
        let exact = enumerate_vertices(&p_system(&t, true, false).unwrap(), EnumerateOptions::default()).unwrap();
        let mut a: Vec<Vec<String>> = brute.iter().map(|v| v.0.clone()).collect();
        let mut b: Vec<Vec<String>> = exact.iter().map(|v| v.incidence.clone()).collect();
        for x in a.iter_mut().chain(b.iter_mut()) {
            x.sort();
        }
        a.sort();
        b.sort();
        assert_eq!(a, b, "incidence sets at t = {tf}");
        for v in &exact {
            let y = brute.iter().find(|w| {
                let mut l = w.0.clone();
                let mut r = v.incidence.clone();
                l.sort();
                r.sort();
                l == r
            });
            let y = y.unwrap();
            let x0 = v.point.coords()[0].to_f64();
            for (i, c) in v.point.coords().iter().enumerate() {
                assert!((c.to_f64() / x0 - y.1[i]).abs() < 1e-9, "t={} {:?} {} {:?} {:?}", tf, v.incidence, i, c.to_f64() / x0, y.1);
            }
            assert_eq!(v.kind == VertexKind::Ideal, y.2.abs() < 1e-9);
        }
    }
}

#[test]
fn brute_force_link_signatures() {
    let brute = brute_vertices(&rescaled_system(0.5), 0.25);
    let mut census: BTreeMap<String, usize> = BTreeMap::new();
    for v in &brute {
        *census.entry(signature(&v.0)).or_default() += 1;
    }
    let want: BTreeMap<String, usize> = [("ppmmXX", 12), ("ppmX", 24), ("pppm", 8), ("pppp", 2)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
    assert_eq!(census, want);
}

#[test]
fn boundary_vertex_in_floats() {
    // The vertex of the fundamental domain on x₄ = 0 with both A and L active.
    let r2 = 2f64.sqrt();
    let p = [2.0, r2, r2, 0.0, 0.0];
    let q = -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    assert!(q.abs() < 1e-12);
    let brute = brute_vertices(&rescaled_system(0.5), 0.25);
    assert!(brute.iter().any(|v| v.1.iter().zip(&p).all(|(a, b)| (a - b / 2.0).abs() < 1e-9)));
}

#[test]
fn meridian_traces_from_float_angles() {
    // trace = 3 + 2cos(2θ) with cos θ = (3t²−1)/(1+t²), and the hyperbolic analogue.
    let t: f64 = 0.5;
    let c = (3.0 * t * t - 1.0) / (1.0 + t * t);
    let theta = c.acos();
    assert!((3.0 + 2.0 * (2.0 * theta).cos() - 29.0 / 25.0).abs() < 1e-12);
    let ch = (3.0 * t * t + 1.0) / (1.0 - t * t);
    let phi = ch.acosh();
    assert!((3.0 + 2.0 * (2.0 * phi).cosh() - 205.0 / 9.0).abs() < 1e-11);
}
