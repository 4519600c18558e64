//! Suite plumbing: determinism, edge cases and mutation sensitivity.

use halfpipe::numfield::{FieldScalar, TimeParam};
use halfpipe::verify::{all_passed, run_check, run_suite, without_durations, Mutation, Status, VerifyConfig};
use halfpipe::Error;

fn quick() -> VerifyConfig {
    VerifyConfig { samples: vec![TimeParam::ratio(1, 2), TimeParam::ratio(-1, 3), TimeParam::zero()], ..VerifyConfig::default() }
}

fn mutated(m: Mutation) -> VerifyConfig {
    VerifyConfig { mutation: Some(m), ..quick() }
}

#[test]
fn identical_configs_give_identical_certificates() {
    let names = vec!["angles".to_string(), "causal_types".into(), "links".into()];
    let a = serde_json::to_string(&without_durations(&run_suite(&names, &quick()).unwrap())).unwrap();
    let b = serde_json::to_string(&without_durations(&run_suite(&names, &quick()).unwrap())).unwrap();
    assert_eq!(a, b);
}

#[test]
fn suite_order_follows_request() {
    let names = vec!["cusps".to_string(), "angles".into()];
    let cert = run_suite(&names, &quick()).unwrap();
    assert_eq!(cert.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(), ["cusps", "angles"]);
}

#[test]
fn empty_suite_is_empty_and_passes() {
    let cert = run_suite(&[], &quick()).unwrap();
    assert!(cert.is_empty());
    assert!(all_passed(&cert));
}

#[test]
fn unknown_name_is_an_error() {
    assert_eq!(run_suite(&["nope".to_string()], &quick()).unwrap_err(), Error::UnknownCheck("nope".into()));
}

#[test]
fn out_of_interval_sample_is_recorded() {
    let cfg = VerifyConfig { samples: vec!["0.9".parse().unwrap()], ..VerifyConfig::default() };
    let r = run_check("vertex_census", &cfg).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.actual["counterexample"]["error"].as_str().unwrap().contains("9/10"));
}

#[test]
fn removing_a_facet_breaks_the_census() {
    let r = run_check("vertex_census", &mutated(Mutation::Remove { label: "A".into() })).unwrap();
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn perturbing_a_letter_breaks_combinatorics() {
    let m = Mutation::Perturb { label: "C".into(), index: 0, delta: FieldScalar::from_ratio(1, 7) };
    let cert = run_suite(&["vertex_census".to_string(), "links".into()], &mutated(m)).unwrap();
    assert!(!all_passed(&cert));
}

#[test]
fn perturbing_a_last_coefficient_breaks_angles() {
    let m = Mutation::Perturb { label: "p2".into(), index: 4, delta: FieldScalar::from_ratio(1, 3) };
    let r = run_check("angles", &mutated(m)).unwrap();
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn perturbing_a_closed_form_vertex_breaks_the_census() {
    let m = Mutation::PerturbVertex { label: "V_p0m0AM".into(), index: 1, delta: FieldScalar::from_ratio(1, 100) };
    let r = run_check("vertex_census", &mutated(m)).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.actual.get("counterexample").is_some());
}

#[test]
fn flipping_a_limit_sign_breaks_the_transition() {
    let r = run_check("reflection_transition", &mutated(Mutation::FlipLimitSign { label: "m1".into() })).unwrap();
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn every_single_entry_mutation_is_detected() {
    // One perturbation per row of the 22-half-space table, at a single sample.
    let labels = ["p0", "p1", "p2", "p3", "p4", "p5", "p6", "p7", "m0", "m1", "m2", "m3", "m4", "m5", "m6", "m7", "A", "B", "C", "D", "E", "F"];
    let names: Vec<String> = ["vertex_census", "causal_types"].iter().map(|s| s.to_string()).collect();
    std::thread::scope(|scope| {
        for (k, l) in labels.iter().enumerate() {
            let names = &names;
            scope.spawn(move || {
                let m = Mutation::Perturb { label: l.to_string(), index: k % 5, delta: FieldScalar::from_ratio(1, 5) };
                let cfg = VerifyConfig { samples: vec![TimeParam::ratio(1, 2)], mutation: Some(m), ..VerifyConfig::default() };
                let cert = run_suite(names, &cfg).unwrap();
                assert!(!all_passed(&cert), "mutation of {l} went unnoticed");
            });
        }
    });
}
