//! End-to-end runs of the binary: exit codes, written files and output round trips.

use std::process::Command;

use halfpipe::catalog::p_system;
use halfpipe::cli::{parse_vertices_csv, parse_vertices_json, RunConfig};
use halfpipe::numfield::TimeParam;
use halfpipe::polytope::{enumerate_vertices, EnumerateOptions};

fn halfpipe(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_halfpipe")).args(args).output().expect("spawn");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn verify_writes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let (code, _, err) = halfpipe(&["verify", "--suite", "all", "--t", "1/2,-1/2,1/sqrt3", "--out", cert.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 11);
    for c in arr {
        for key in ["name", "params", "status", "expected", "actual", "paper_ref", "duration_ms"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
        assert_eq!(c["status"], "Pass");
    }
}

#[test]
fn out_of_interval_sample_fails_with_status_one() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let (code, _, _) = halfpipe(&["verify", "--suite", "angles", "--t", "0.9", "--out", cert.to_str().unwrap()]);
    assert_eq!(code, 1);
    let text = std::fs::read_to_string(&cert).unwrap();
    assert!(text.contains("outside the validity interval"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(halfpipe(&["verify", "--t", "1/sqrt5"]).0, 2);
    assert_eq!(halfpipe(&["verify", "--suite", "bogus"]).0, 2);
    assert_eq!(halfpipe(&["vertices", "--t", "1/0"]).0, 2);
    assert_eq!(halfpipe(&["nosuch"]).0, 2);
    assert_eq!(halfpipe(&["dump", "--table", "table9", "--t", "1/2"]).0, 2);
    assert_eq!(halfpipe(&["--help"]).0, 0);
}

#[test]
fn vertices_csv_has_46_rows_and_round_trips() {
    let (code, out, _) = halfpipe(&["vertices", "--t", "1/2", "--rescaled", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 47);
    let rows = parse_vertices_csv(&out).unwrap();
    let t = TimeParam::ratio(1, 2);
    let exact = enumerate_vertices(&p_system(&t, true, false).unwrap(), EnumerateOptions::default()).unwrap();
    assert_eq!(rows.len(), exact.len());
    for (r, v) in rows.iter().zip(&exact) {
        assert_eq!(r.point.coords(), v.point.coords());
        assert_eq!(r.incidence, v.incidence);
        assert_eq!(r.kind, format!("{:?}", v.kind));
    }
}

#[test]
fn vertices_json_round_trips() {
    let (code, out, _) = halfpipe(&["vertices", "--t", "-1/sqrt3", "--rescaled", "--format", "json"]);
    assert_eq!(code, 0);
    let rows = parse_vertices_json(&out).unwrap();
    let t: TimeParam = "-1/sqrt3".parse().unwrap();
    let exact = enumerate_vertices(&p_system(&t, true, false).unwrap(), EnumerateOptions::default()).unwrap();
    let a: Vec<_> = rows.iter().map(|r| r.point.clone()).collect();
    let b: Vec<_> = exact.iter().map(|v| v.point.clone()).collect();
    assert_eq!(a, b);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out = dir.path().join("from_cfg.json");
    std::fs::write(&cfg, format!("t = 1/2\nsuite = causal_types\nout = {}\n", out.display())).unwrap();
    assert_eq!(halfpipe(&["--config", cfg.to_str().unwrap(), "verify"]).0, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v[0]["name"], "causal_types");
    assert_eq!(v[0]["params"]["t"], serde_json::json!(["1/2"]));

    let flag_out = dir.path().join("flags.json");
    assert_eq!(halfpipe(&["--config", cfg.to_str().unwrap(), "verify", "--suite", "angles", "--t", "-1/3", "--out", flag_out.to_str().unwrap()]).0, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&flag_out).unwrap()).unwrap();
    assert_eq!(v[0]["name"], "angles");
    assert_eq!(v[0]["params"]["t"], serde_json::json!(["-1/3"]));

    assert_eq!(RunConfig::parse("t = 1/2\nformat = csv\n").unwrap().t_samples, vec!["1/2"]);
}

#[test]
fn plotdata_writes_frames() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = halfpipe(&["plotdata", "--object", "polytope", "--t", "-1/3", "--chart", "affine", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let verts = std::fs::read_to_string(dir.path().join("polytope_000_vertices.csv")).unwrap();
    assert_eq!(verts.lines().count(), 47);
    assert!(verts.lines().next().unwrap().starts_with("index,kind,c0,c1,c2,c3"));
    let edges = std::fs::read_to_string(dir.path().join("polytope_000_edges.csv")).unwrap();
    assert_eq!(edges.lines().count(), 117);
    let index: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("polytope_frames.json")).unwrap()).unwrap();
    assert_eq!(index["frames"][0]["f_vector"], serde_json::json!([46, 116, 92, 22]));
}

#[test]
fn remaining_subcommands_run() {
    let (code, out, _) = halfpipe(&["classify", "--t", "-1/2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("Spacelike").count(), 8);
    assert_eq!(out.matches("Timelike").count(), 14);

    let (code, out, _) = halfpipe(&["angles", "--t", "1/2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains(",false,")).count(), 12);

    let (code, out, _) = halfpipe(&["holonomy", "--t", "1/2", "--pair", "p1,p3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.contains("29/25"));

    let (code, out, _) = halfpipe(&["limits", "--family", "m1", "--order", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.contains("m1,2,false"));

    let (code, out, _) = halfpipe(&["lattice", "--t", "0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([46, 116, 92, 22]));

    let (code, out, _) = halfpipe(&["dump", "--table", "table4", "--t", "1/2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 14);

    assert_eq!(halfpipe(&["cell24"]).0, 0);
}
