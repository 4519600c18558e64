//! Named certification checks. Each check runs on exact data only and reports a
//! [`CheckResult`] with the expected and observed payloads; a failing check carries the
//! first counterexample it met.

mod census;
mod data;
mod geometry;
mod holonomy;

pub use data::Mutation;
pub use holonomy::expected_limit;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numfield::{TimeParam, IDENTITY_SAMPLES};
use crate::polytope::{build_face_lattice, enumerate_vertices, EnumerateOptions, FaceLattice, HalfSpaceSystem, VertexRecord};

use data::Data;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
}

/// One entry of a certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: Value,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub paper_ref: String,
    pub duration_ms: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Names in suite order.
pub const CHECK_NAMES: [&str; 11] = [
    "vertex_census",
    "combinatorics",
    "angles",
    "causal_types",
    "reflection_transition",
    "meridian_holonomy",
    "cuboctahedron",
    "links",
    "octahedron",
    "cell24",
    "cusps",
];

fn claim(name: &str) -> &'static str {
    match name {
        "vertex_census" => "46 vertices, 12 ideal and 34 finite; fundamental-domain vertices in closed form",
        "combinatorics" => "face lattice independent of t, simple, 22 facets, bounded edges",
        "angles" => "12 non-right ridges between p-hyperplanes of equal parity, all others orthogonal",
        "causal_types" => "p spacelike, m and letters timelike for t < 0, degenerate at the rescaled limit",
        "reflection_transition" => "rescaled reflection families extend C1 but not C2 through t = 0",
        "meridian_holonomy" => "meridian holonomy has angle twice the dihedral angle; Delta_t is (Z/2)^3",
        "cuboctahedron" => "slice x4 = 0 is a constant ideal right-angled cuboctahedron",
        "links" => "vertex links: 12 cuboids and 34 tetrahedra",
        "octahedron" => "3-dimensional octahedron family with constant combinatorics",
        "cell24" => "t = 1 truncation is the ideal right-angled 24-cell",
        "cusps" => "horosphere and upper half-space pullback metrics; toric cusp actions commute",
        _ => "",
    }
}

/// Parameters shared by every check.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub samples: Vec<TimeParam>,
    /// Admit `t ∈ (1/√3, 1]`.
    pub extended_range: bool,
    /// Minimum samples per branch in identity certification.
    pub identity_samples: usize,
    /// Deliberate corruption of the tables, for mutation testing.
    pub mutation: Option<Mutation>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { samples: default_samples(), extended_range: false, identity_samples: IDENTITY_SAMPLES, mutation: None }
    }
}

/// `±1/5, ±1/3, ±1/2, ±2/5, 1/√3, 0`.
pub fn default_samples() -> Vec<TimeParam> {
    let mut s = Vec::new();
    for (n, d) in [(1, 5), (1, 3), (1, 2), (2, 5)] {
        s.push(TimeParam::ratio(n, d));
        s.push(TimeParam::ratio(-n, d));
    }
    s.push(TimeParam::inv_sqrt3());
    s.push(TimeParam::zero());
    s
}

/// The rescaled 22-half-space system at one sample, with its vertices and lattice.
pub(crate) struct Sample {
    pub sys: HalfSpaceSystem,
    pub verts: Vec<VertexRecord>,
    pub lattice: FaceLattice,
}

type SampleSlot = Arc<OnceLock<std::result::Result<Arc<Sample>, Error>>>;

/// Configuration plus a per-suite memo of enumerated samples.
pub(crate) struct Context {
    pub config: VerifyConfig,
    pub data: Data,
    cache: Mutex<HashMap<String, SampleSlot>>,
}

impl Context {
    pub fn new(config: VerifyConfig) -> Self {
        let data = Data::new(config.mutation.clone());
        Context { config, data, cache: Mutex::new(HashMap::new()) }
    }

    pub fn sample(&self, t: &TimeParam) -> Result<Arc<Sample>> {
        let slot = {
            let mut cache = self.cache.lock().expect("cache lock");
            cache.entry(t.value().to_exact_string()).or_default().clone()
        };
        slot.get_or_init(|| {
            let sys = self.data.p_system(t, self.config.extended_range)?;
            let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
            let lattice = build_face_lattice(&sys, &verts);
            Ok(Arc::new(Sample { sys, verts, lattice }))
        })
        .clone()
    }

    /// Rejects samples outside the admitted interval.
    pub fn check_samples(&self) -> std::result::Result<(), Value> {
        for t in &self.config.samples {
            if !(t.in_core_interval() || self.config.extended_range) {
                return Err(json!({ "error": Error::OutOfInterval(t.expr()).to_string(), "t": t.expr() }));
            }
        }
        Ok(())
    }

    pub fn sample_names(&self) -> Vec<String> {
        self.config.samples.iter().map(TimeParam::expr).collect()
    }
}

/// Outcome of a check body: expected payload, observed payload, and a counterexample
/// if the check failed.
pub(crate) struct Outcome {
    pub expected: Value,
    pub actual: Value,
    pub failure: Option<Value>,
}

impl Outcome {
    pub fn new(expected: Value, actual: Value, failure: Option<Value>) -> Self {
        Outcome { expected, actual, failure }
    }
}

/// Runs one named check.
pub fn run_check(name: &str, config: &VerifyConfig) -> Result<CheckResult> {
    let ctx = Context::new(config.clone());
    run_in(&ctx, name)
}

fn run_in(ctx: &Context, name: &str) -> Result<CheckResult> {
    let body: fn(&Context) -> Result<Outcome> = match name {
        "vertex_census" => census::vertex_census,
        "combinatorics" => census::combinatorics,
        "angles" => geometry::angles,
        "causal_types" => geometry::causal_types,
        "reflection_transition" => holonomy::reflection_transition,
        "meridian_holonomy" => holonomy::meridian_holonomy,
        "cuboctahedron" => census::cuboctahedron,
        "links" => census::links,
        "octahedron" => census::octahedron,
        "cell24" => census::cell24,
        "cusps" => geometry::cusps,
        _ => return Err(Error::UnknownCheck(name.to_string())),
    };
    let uses_samples = !matches!(name, "reflection_transition" | "cell24");
    let params = if uses_samples {
        json!({ "t": ctx.sample_names(), "extended_range": ctx.config.extended_range, "identity_samples": ctx.config.identity_samples })
    } else {
        json!({ "identity_samples": ctx.config.identity_samples })
    };
    let start = Instant::now();
    let outcome = if uses_samples {
        match ctx.check_samples() {
            Ok(()) => body(ctx),
            Err(v) => Ok(Outcome::new(Value::Null, Value::Null, Some(v))),
        }
    } else {
        body(ctx)
    };
    let outcome = outcome.unwrap_or_else(|e| Outcome::new(Value::Null, Value::Null, Some(json!({ "error": e.to_string() }))));
    let (status, actual) = match outcome.failure {
        None => (Status::Pass, outcome.actual),
        Some(f) => (Status::Fail, json!({ "observed": outcome.actual, "counterexample": f })),
    };
    Ok(CheckResult {
        name: name.to_string(),
        params,
        status,
        expected: outcome.expected,
        actual,
        paper_ref: claim(name).to_string(),
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

/// Expands `"all"` and validates names.
pub fn resolve_names(names: &[String]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for n in names {
        if n == "all" {
            out.extend(CHECK_NAMES.iter().map(|s| s.to_string()));
        } else if CHECK_NAMES.contains(&n.as_str()) {
            out.push(n.clone());
        } else {
            return Err(Error::UnknownCheck(n.clone()));
        }
    }
    Ok(out)
}

/// Runs the named checks concurrently; results come back in the requested order.
pub fn run_suite(names: &[String], config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let names = resolve_names(names)?;
    let ctx = Context::new(config.clone());
    names.par_iter().map(|n| run_in(&ctx, n)).collect()
}

/// Whether every entry passed.
pub fn all_passed(cert: &[CheckResult]) -> bool {
    cert.iter().all(CheckResult::passed)
}

/// The certificate with every `duration_ms` zeroed, for byte comparison.
pub fn without_durations(cert: &[CheckResult]) -> Vec<CheckResult> {
    cert.iter().cloned().map(|mut c| {
        c.duration_ms = 0;
        c
    }).collect()
}

/// First failing item of an iterator of `(key, ok)` pairs.
pub(crate) fn first_failure<I: IntoIterator<Item = (Value, bool)>>(items: I) -> Option<Value> {
    items.into_iter().find(|(_, ok)| !ok).map(|(v, _)| v)
}
