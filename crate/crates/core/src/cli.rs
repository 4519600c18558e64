//! Command-line front end: certification runs, vertex and lattice dumps, angle and
//! causal-type tables, reflection limits, meridian holonomy, table dumps and
//! frame files for external plotting.
//!
//! Exit status: `0` on success, `1` if any check fails, `2` on usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{self, TableData, TableId};
use crate::error::{Error, Result};
use crate::forms::{hp_angle_sq, ParamForm};
use crate::isometry::{conj_rescaled, family_limit, reflection, rotation_or_boost_analyze};
use crate::numfield::{FieldScalar, TimeParam};
use crate::polytope::{build_face_lattice, enumerate_vertices, EnumerateOptions, FaceLattice, HalfSpaceSystem, VertexRecord};
use crate::projective::{AffineImage, ProjMap, ProjPoint};
use crate::verify::{self, expected_limit, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "halfpipe", version, about = "Exact construction and certification of the deforming polytope family")]
struct Cli {
    /// Flat `key = value` file supplying defaults for flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run certification checks and write a certificate.
    Verify(VerifyArgs),
    /// Enumerate the vertices of a system.
    Vertices(SystemArgs),
    /// Face lattice of a system.
    Lattice(SystemArgs),
    /// Dihedral angle data of every ridge.
    Angles(TArgs),
    /// Causal type of every bounding hyperplane.
    Classify(TArgs),
    /// One-sided limits of the rescaled reflection families at t = 0.
    Limits(LimitArgs),
    /// Meridian holonomy of a pair of reflections.
    Holonomy(HolonomyArgs),
    /// Dump a table of half-spaces or closed-form vertices.
    Dump(DumpArgs),
    /// Write frame files of vertices and edges for external rendering.
    Plotdata(PlotArgs),
    /// Certify the t = 1 truncation.
    Cell24(OutArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Default)]
struct OutArgs {
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated check names, or `all`.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    /// Comma-separated parameter values.
    #[arg(long = "t", value_delimiter = ',', allow_hyphen_values = true)]
    t: Vec<String>,
    /// Admit parameters up to t = 1.
    #[arg(long)]
    extended_range: bool,
    /// Minimum samples per branch for identity certification.
    #[arg(long)]
    identity_samples: Option<usize>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SystemKind {
    /// The 22 half-spaces.
    P,
    /// The fundamental domain.
    Q,
    /// The 3-dimensional octahedron family.
    Octahedron,
    /// The t = 1 system with G and H.
    Cell24,
    /// The slice x4 = 0 of the 22 half-spaces.
    Slice,
}

#[derive(Args, Debug)]
struct SystemArgs {
    #[arg(long = "t", allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, value_enum, default_value = "p")]
    system: SystemKind,
    /// Use the rescaled tables (required at t = 0).
    #[arg(long)]
    rescaled: bool,
    #[arg(long)]
    extended_range: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args, Debug)]
struct TArgs {
    #[arg(long = "t", allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long)]
    extended_range: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Family labels (all 22 if omitted).
    #[arg(long, value_delimiter = ',')]
    family: Vec<String>,
    /// Derivative order of the limit.
    #[arg(long, default_value_t = 0)]
    order: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args, Debug)]
struct HolonomyArgs {
    #[arg(long = "t", allow_hyphen_values = true)]
    t: Option<String>,
    /// Two labels of the 22 half-spaces.
    #[arg(long, value_delimiter = ',', default_value = "p1,p3")]
    pair: Vec<String>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args, Debug)]
struct DumpArgs {
    /// table1, table2, table3, table4, aux or cell24.
    #[arg(long)]
    table: String,
    #[arg(long = "t", allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long)]
    extended_range: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PlotObject {
    Polytope,
    Slice,
    Fundamental,
    Octahedron,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Chart {
    Affine,
    Projective,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[arg(long, value_enum, default_value = "polytope")]
    object: PlotObject,
    #[arg(long = "t", value_delimiter = ',', allow_hyphen_values = true)]
    t: Vec<String>,
    #[arg(long, value_enum, default_value = "affine")]
    chart: Chart,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Flags as read from a config file; command-line flags take precedence.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    pub t_samples: Vec<String>,
    pub checks: Vec<String>,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub extended_range: bool,
    pub identity_samples: Option<usize>,
}

impl RunConfig {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = RunConfig::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", n + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            let list = || v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect::<Vec<_>>();
            match k {
                "t" | "t_samples" => c.t_samples = list(),
                "suite" | "checks" => c.checks = list(),
                "out" | "output" | "output_dir" => c.output = Some(PathBuf::from(v)),
                "format" => {
                    c.format = Some(match v {
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        _ => return Err(Error::Parse(format!("config line {}: unknown format `{v}`", n + 1))),
                    })
                }
                "extended_range" => c.extended_range = matches!(v, "true" | "1" | "yes"),
                "identity_samples" => c.identity_samples = Some(v.parse().map_err(|_| Error::Parse(format!("config line {}: bad integer", n + 1)))?),
                _ => return Err(Error::Parse(format!("config line {}: unknown key `{k}`", n + 1))),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }
}

/// Parses a list of parameter expressions.
pub fn parse_t_list(items: &[String]) -> Result<Vec<TimeParam>> {
    items.iter().map(|s| s.parse()).collect()
}

fn parse_t(t: &Option<String>, cfg: &RunConfig) -> Result<TimeParam> {
    match t {
        Some(s) => s.parse(),
        None => match cfg.t_samples.first() {
            Some(s) => s.parse(),
            None => Err(Error::Parse("missing --t".into())),
        },
    }
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::OutOfInterval(_) | Error::UnknownCheck(_) | Error::UnknownLabel(_) | Error::DegenerateRescale
    )
}

/// Entry point; returns the process exit status.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter_or("TRANSIT_LOG", "error")).try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let cfg = match &cli.config {
        Some(p) => match RunConfig::load(p) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
        None => RunConfig::default(),
    };
    match dispatch(cli.command, &cfg) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            if usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

fn emit(out: &Option<PathBuf>, cfg: &RunConfig, text: &str) -> Result<()> {
    match out.as_ref().or(cfg.output.as_ref()) {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            fs::write(p, text)?;
            log::info!("wrote {}", p.display());
        }
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn format_of(o: &OutArgs, cfg: &RunConfig) -> Format {
    o.format.or(cfg.format).unwrap_or(Format::Json)
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| Error::Io(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).map_err(|e| Error::Io(e.to_string()))
}

fn dispatch(cmd: Command, cfg: &RunConfig) -> Result<bool> {
    match cmd {
        Command::Verify(a) => cmd_verify(a, cfg),
        Command::Vertices(a) => cmd_vertices(a, cfg),
        Command::Lattice(a) => cmd_lattice(a, cfg),
        Command::Angles(a) => cmd_angles(a, cfg),
        Command::Classify(a) => cmd_classify(a, cfg),
        Command::Limits(a) => cmd_limits(a, cfg),
        Command::Holonomy(a) => cmd_holonomy(a, cfg),
        Command::Dump(a) => cmd_dump(a, cfg),
        Command::Plotdata(a) => cmd_plotdata(a, cfg),
        Command::Cell24(a) => cmd_cell24(a, cfg),
    }
}

fn cmd_verify(a: VerifyArgs, cfg: &RunConfig) -> Result<bool> {
    let names = if !a.suite.is_empty() { a.suite.clone() } else if !cfg.checks.is_empty() { cfg.checks.clone() } else { vec!["all".into()] };
    let t = if !a.t.is_empty() { &a.t } else { &cfg.t_samples };
    let mut config = VerifyConfig { extended_range: a.extended_range || cfg.extended_range, ..VerifyConfig::default() };
    if !t.is_empty() {
        config.samples = parse_t_list(t)?;
    }
    if let Some(n) = a.identity_samples.or(cfg.identity_samples) {
        config.identity_samples = n;
    }
    let cert = verify::run_suite(&names, &config)?;
    for c in &cert {
        log::info!("{} {:?} {} ms", c.name, c.status, c.duration_ms);
        eprintln!("{:<22} {:?}", c.name, c.status);
    }
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(&cert)?,
        Format::Csv => csv_text(
            &["name".into(), "status".into(), "duration_ms".into()],
            &cert.iter().map(|c| vec![c.name.clone(), format!("{:?}", c.status), c.duration_ms.to_string()]).collect::<Vec<_>>(),
        )?,
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(verify::all_passed(&cert))
}

fn build_system(kind: SystemKind, t: &TimeParam, rescaled: bool, extended: bool) -> Result<HalfSpaceSystem> {
    match kind {
        SystemKind::P => catalog::p_system(t, rescaled || t.is_zero(), extended),
        SystemKind::Q => catalog::q_system(t),
        SystemKind::Octahedron => catalog::octahedron_system(t, rescaled || t.is_zero()),
        SystemKind::Cell24 => catalog::cell24_system(),
        SystemKind::Slice => catalog::p_system(t, true, extended)?.slice_last(Some(ParamForm::hyperbolic(3))),
    }
}

fn system_t(a: &SystemArgs, cfg: &RunConfig) -> Result<TimeParam> {
    if a.system == SystemKind::Cell24 {
        return Ok(TimeParam::one());
    }
    parse_t(&a.t, cfg)
}

/// CSV of vertices: kind, incidence, exact homogeneous coordinates, then their decimals.
pub fn vertices_csv(verts: &[VertexRecord]) -> Result<String> {
    let n = verts.first().map_or(0, |v| v.point.coords().len());
    let mut header = vec!["index".to_string(), "kind".into(), "incidence".into()];
    header.extend((0..n).map(|i| format!("x{i}")));
    header.extend((0..n).map(|i| format!("x{i}_approx")));
    let rows: Vec<Vec<String>> = verts
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut r = vec![i.to_string(), format!("{:?}", v.kind), v.incidence.join(" ")];
            r.extend(v.point.coords().iter().map(FieldScalar::to_exact_string));
            r.extend(v.point.coords().iter().map(|c| c.to_decimal(12)));
            r
        })
        .collect();
    csv_text(&header, &rows)
}

/// A vertex row read back from a dump.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct VertexRow {
    pub point: ProjPoint,
    pub incidence: Vec<String>,
    pub kind: String,
}

/// Reads a vertex CSV written by [`vertices_csv`].
pub fn parse_vertices_csv(text: &str) -> Result<Vec<VertexRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| Error::Parse(e.to_string()))?.clone();
    let coords: Vec<usize> = header.iter().enumerate().filter(|(_, h)| h.starts_with('x') && !h.ends_with("_approx")).map(|(i, _)| i).collect();
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        let xs = coords.iter().map(|&i| rec[i].parse()).collect::<Result<Vec<FieldScalar>>>()?;
        out.push(VertexRow {
            point: ProjPoint::new(xs)?,
            incidence: rec[2].split_whitespace().map(str::to_string).collect(),
            kind: rec[1].to_string(),
        });
    }
    Ok(out)
}

/// Reads a vertex JSON array written by `vertices --format json`.
pub fn parse_vertices_json(text: &str) -> Result<Vec<VertexRow>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn enumerate(sys: &HalfSpaceSystem) -> Result<Vec<VertexRecord>> {
    let verts = enumerate_vertices(sys, EnumerateOptions::default())?;
    log::debug!("{} vertices from {} half-spaces", verts.len(), sys.len());
    Ok(verts)
}

fn cmd_vertices(a: SystemArgs, cfg: &RunConfig) -> Result<bool> {
    let t = system_t(&a, cfg)?;
    let sys = build_system(a.system, &t, a.rescaled, a.extended_range || cfg.extended_range)?;
    let verts = enumerate(&sys)?;
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(&verts)?,
        Format::Csv => vertices_csv(&verts)?,
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(true)
}

fn lattice_rows(l: &FaceLattice) -> Vec<Vec<String>> {
    l.faces.iter().map(|f| vec![f.dim.to_string(), f.labels.join(" "), f.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")]).collect()
}

fn cmd_lattice(a: SystemArgs, cfg: &RunConfig) -> Result<bool> {
    let t = system_t(&a, cfg)?;
    let sys = build_system(a.system, &t, a.rescaled, a.extended_range || cfg.extended_range)?;
    let verts = enumerate(&sys)?;
    let l = build_face_lattice(&sys, &verts);
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(&json!({ "t": t.expr(), "f_vector": l.f_vector(), "lattice": l }))?,
        Format::Csv => csv_text(&["dim".into(), "labels".into(), "vertices".into()], &lattice_rows(&l))?,
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(true)
}

fn scalar_json(x: &FieldScalar) -> Value {
    json!({ "exact": x.to_exact_string(), "approx": x.to_decimal(12) })
}

fn cmd_angles(a: TArgs, cfg: &RunConfig) -> Result<bool> {
    let t = parse_t(&a.t, cfg)?;
    let sys = catalog::p_system(&t, true, a.extended_range || cfg.extended_range)?;
    let verts = enumerate(&sys)?;
    let l = build_face_lattice(&sys, &verts);
    let form = ParamForm::new(4, &t);
    let mut rows = Vec::new();
    for r in l.ridges() {
        if r.labels.len() != 2 {
            continue;
        }
        let (h1, h2) = (sys.covector(&r.labels[0])?, sys.covector(&r.labels[1])?);
        let b = form.dual_b(h1.coeffs(), h2.coeffs()).ok();
        let (kind, value) = if t.is_zero() {
            ("psi_sq", hp_angle_sq(h1, h2).ok())
        } else {
            let d = form.angle_between(h1, h2)?;
            (if t.value().is_positive() { "cos" } else { "cosh" }, d.cosine)
        };
        let right = b.as_ref().map(FieldScalar::is_zero);
        rows.push((r.labels.join(""), kind, right, value));
    }
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(
            &rows
                .iter()
                .map(|(ridge, kind, right, v)| json!({ "ridge": ridge, "right": right, "datum": kind, "value": v.as_ref().map(scalar_json) }))
                .collect::<Vec<_>>(),
        )?,
        Format::Csv => csv_text(
            &["ridge".into(), "right".into(), "datum".into(), "exact".into(), "approx".into()],
            &rows
                .iter()
                .map(|(ridge, kind, right, v)| {
                    vec![
                        ridge.clone(),
                        right.map_or(String::new(), |b| b.to_string()),
                        kind.to_string(),
                        v.as_ref().map_or(String::new(), FieldScalar::to_exact_string),
                        v.as_ref().map_or(String::new(), |x| x.to_decimal(12)),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(true)
}

fn cmd_classify(a: TArgs, cfg: &RunConfig) -> Result<bool> {
    let t = parse_t(&a.t, cfg)?;
    let sys = catalog::p_system(&t, true, a.extended_range || cfg.extended_range)?;
    let form = ParamForm::new(4, &t);
    let rows: Vec<(String, String)> = sys.entries().map(|(l, c)| (l.clone(), format!("{:?}", form.classify_hyperplane(c)))).collect();
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(&json!({ "t": t.expr(), "regime": format!("{:?}", form.regime()), "types": rows.iter().cloned().collect::<BTreeMap<_, _>>() }))?,
        Format::Csv => csv_text(&["label".into(), "type".into()], &rows.iter().map(|(a, b)| vec![a.clone(), b.clone()]).collect::<Vec<_>>())?,
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(true)
}

fn cmd_limits(a: LimitArgs, cfg: &RunConfig) -> Result<bool> {
    let fams = catalog::table2_families();
    let chosen: Vec<_> = if a.family.is_empty() {
        fams.iter().collect()
    } else {
        a.family.iter().map(|l| fams.iter().find(|f| &f.label == l).ok_or_else(|| Error::UnknownLabel(l.clone()))).collect::<Result<_>>()?
    };
    if a.order > 2 {
        return Err(Error::Parse("order must be 0, 1 or 2".into()));
    }
    let mut out = Vec::new();
    for f in chosen {
        let fam = conj_rescaled(&f.label, &f.entries)?;
        let (left, right) = family_limit(&fam, a.order)?;
        let mut v = json!({ "family": f.label, "order": a.order, "one_sided_equal": left == right, "left": left, "right": right });
        if a.order == 0 {
            v["matches_closed_form"] = json!(left == expected_limit(f, false)?);
        }
        out.push(v);
    }
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(&out)?,
        Format::Csv => csv_text(
            &["family".into(), "order".into(), "one_sided_equal".into()],
            &out.iter().map(|v| vec![v["family"].as_str().unwrap_or("").to_string(), a.order.to_string(), v["one_sided_equal"].to_string()]).collect::<Vec<_>>(),
        )?,
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(true)
}

fn cmd_holonomy(a: HolonomyArgs, cfg: &RunConfig) -> Result<bool> {
    let t = parse_t(&a.t, cfg)?;
    let [x, y] = a.pair.as_slice() else {
        return Err(Error::Parse("--pair takes two labels".into()));
    };
    let (m, form) = if t.is_zero() {
        let fams = catalog::table2_families();
        let lim = |l: &str| -> Result<ProjMap> {
            let f = fams.iter().find(|f| f.label == l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            ProjMap::new(family_limit(&conj_rescaled(l, &f.entries)?, 0)?.0)
        };
        (lim(x)?.compose(&lim(y)?), ParamForm::half_pipe(4))
    } else {
        let sys = catalog::p_system(&t, true, false)?;
        let form = ParamForm::new(4, &t);
        (reflection(sys.covector(x)?, &form)?.compose(&reflection(sys.covector(y)?, &form)?), form)
    };
    let r = rotation_or_boost_analyze(&m, &form)?;
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(&json!({ "t": t.expr(), "pair": [x, y], "analysis": r, "matrix": m.matrix() }))?,
        Format::Csv => csv_text(
            &["t".into(), "pair".into(), "kind".into(), "fixed_dim".into(), "trace".into()],
            &[vec![t.expr(), format!("{x}{y}"), format!("{:?}", r.kind), r.fixed_dim.to_string(), r.trace.to_exact_string()]],
        )?,
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(true)
}

fn cmd_dump(a: DumpArgs, cfg: &RunConfig) -> Result<bool> {
    let id: TableId = a.table.parse()?;
    let t = if id == TableId::Cell24Ext || id == TableId::AuxLMN { a.t.as_deref().map_or(Ok(TimeParam::one()), str::parse)? } else { parse_t(&a.t, cfg)? };
    let extended = a.extended_range || cfg.extended_range || id == TableId::AuxLMN;
    let data = catalog::table(id, &t, extended)?;
    let text = match format_of(&a.out, cfg) {
        Format::Json => to_json(&json!({ "table": format!("{id:?}"), "t": t.expr(), "rows": data }))?,
        Format::Csv => match &data {
            TableData::Covectors(rows) => {
                let n = rows.first().map_or(0, |(_, c)| c.coeffs().len());
                let mut header = vec!["label".to_string()];
                header.extend((0..n).map(|i| format!("a{i}")));
                header.extend((0..n).map(|i| format!("a{i}_approx")));
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|(l, c)| {
                        let mut r = vec![l.clone()];
                        r.extend(c.coeffs().iter().map(FieldScalar::to_exact_string));
                        r.extend(c.coeffs().iter().map(|x| x.to_decimal(12)));
                        r
                    })
                    .collect();
                csv_text(&header, &body)?
            }
            TableData::Points(rows) => {
                let mut header = vec!["label".to_string(), "incidence".into()];
                header.extend((1..5).map(|i| format!("y{i}")));
                header.extend((1..5).map(|i| format!("y{i}_approx")));
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|(l, inc, p)| {
                        let y = match p.to_affine() {
                            Ok(AffineImage::Point(y)) => y,
                            _ => Vec::new(),
                        };
                        let mut r = vec![l.clone(), inc.join(" ")];
                        r.extend(y.iter().map(FieldScalar::to_exact_string));
                        r.extend(y.iter().map(|x| x.to_decimal(12)));
                        r
                    })
                    .collect();
                csv_text(&header, &body)?
            }
        },
    };
    emit(&a.out.out, cfg, &text)?;
    Ok(true)
}

fn frame_coords(p: &ProjPoint, chart: Chart) -> Vec<FieldScalar> {
    match (chart, p.to_affine()) {
        (Chart::Affine, Ok(AffineImage::Point(y))) => y,
        _ => p.coords().to_vec(),
    }
}

fn cmd_plotdata(a: PlotArgs, cfg: &RunConfig) -> Result<bool> {
    let items = if !a.t.is_empty() { a.t.clone() } else { cfg.t_samples.clone() };
    if items.is_empty() {
        return Err(Error::Parse("missing --t".into()));
    }
    let ts = parse_t_list(&items)?;
    let dir = a.out.clone().or_else(|| cfg.output.clone()).unwrap_or_else(|| PathBuf::from("plotdata"));
    fs::create_dir_all(&dir)?;
    let name = format!("{:?}", a.object).to_lowercase();
    let mut frames = Vec::new();
    for (k, t) in ts.iter().enumerate() {
        let sys = match a.object {
            PlotObject::Polytope => catalog::p_system(t, true, cfg.extended_range)?,
            PlotObject::Slice => catalog::p_system(t, true, cfg.extended_range)?.slice_last(Some(ParamForm::hyperbolic(3)))?,
            PlotObject::Fundamental => catalog::q_system(t)?,
            PlotObject::Octahedron => catalog::octahedron_system(t, true)?,
        };
        let verts = enumerate(&sys)?;
        let l = build_face_lattice(&sys, &verts);
        let dim = match a.chart {
            Chart::Affine => sys.dim(),
            Chart::Projective => sys.dim() + 1,
        };
        let mut header = vec!["index".to_string(), "kind".into()];
        header.extend((0..dim).map(|i| format!("c{i}")));
        header.extend((0..dim).map(|i| format!("c{i}_exact")));
        let rows: Vec<Vec<String>> = verts
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let c = frame_coords(&v.point, a.chart);
                let mut r = vec![i.to_string(), format!("{:?}", v.kind)];
                r.extend(c.iter().map(|x| x.to_decimal(12)));
                r.extend(c.iter().map(FieldScalar::to_exact_string));
                r
            })
            .collect();
        let vfile = format!("{name}_{k:03}_vertices.csv");
        let efile = format!("{name}_{k:03}_edges.csv");
        fs::write(dir.join(&vfile), csv_text(&header, &rows)?)?;
        let edges: Vec<Vec<String>> = l.faces_of_dim(1).filter(|e| e.vertices.len() == 2).map(|e| vec![e.vertices[0].to_string(), e.vertices[1].to_string(), e.labels.join(" ")]).collect();
        fs::write(dir.join(&efile), csv_text(&["from".into(), "to".into(), "labels".into()], &edges)?)?;
        frames.push(json!({ "t": t.expr(), "t_approx": t.value().to_decimal(12), "vertices": vfile, "edges": efile, "f_vector": l.f_vector() }));
    }
    let chart = format!("{:?}", a.chart).to_lowercase();
    fs::write(dir.join(format!("{name}_frames.json")), to_json(&json!({ "object": name, "chart": chart, "frames": frames }))?)?;
    Ok(true)
}

fn cmd_cell24(a: OutArgs, cfg: &RunConfig) -> Result<bool> {
    let r = verify::run_check("cell24", &VerifyConfig::default())?;
    let text = match format_of(&a, cfg) {
        Format::Json => to_json(&r)?,
        Format::Csv => csv_text(&["name".into(), "status".into()], &[vec![r.name.clone(), format!("{:?}", r.status)]])?,
    };
    emit(&a.out, cfg, &text)?;
    Ok(r.passed())
}
