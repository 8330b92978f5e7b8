//! Command-line front end: `compute`, `shapes`, `verify`, `explore`.
//!
//! Exit codes: 0 success, 1 confirmed violation, 2 input error,
//! 3 too many inconclusive verdicts.

use crate::error::{Error, Result};
use crate::geometry::{
    lens_measures, minimal_enclosing_ball, spindle_measures, IntrinsicProfile, LensSpec, PointConfig, Provenance,
    SpindleSpec,
};
use crate::highd::hull::hull_outer_approx;
use crate::highd::mc::{mc_surface_polyhedron, mc_volume_polyhedron, mean_width_polyhedron};
use crate::highd::{inradius_certified, Estimate};
use crate::planar::{self, RegionKind};
use crate::rng;
use crate::verify::explore::{explore_conjectures, ExploreParams};
use crate::verify::record::write_atomic;
use crate::verify::{run_suite, Budget, SuiteParams, SuiteReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

pub const COMPUTE_SCHEMA: &str = "rball.compute/1";
pub const SHAPES_SCHEMA: &str = "rball.shapes/1";

#[derive(Parser, Debug)]
#[command(name = "rball", version, about = "Ball polyhedra, r-ball hulls, lenses and spindles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Measures of P^r or conv_r P for a point configuration.
    Compute(ComputeArgs),
    /// Intrinsic volumes of a lens or spindle.
    Shapes(ShapesArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Search for configurations that shrink a conjectured margin.
    Explore(ExploreArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Polyhedron,
    Hull,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Lens,
    Spindle,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// JSON file `{dim, r, points}` (or an earlier compute output).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "polyhedron")]
    pub target: Target,
    /// Monte Carlo samples for dimensions above 2.
    #[arg(long, default_value_t = 200_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 400)]
    pub directions: usize,
    /// Centers of the outer hull approximation (dimensions above 2).
    #[arg(long, default_value_t = 512)]
    pub hull_centers: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ShapesArgs {
    #[arg(long, value_enum)]
    pub shape: Shape,
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub r: f64,
    /// Lens inradius.
    #[arg(long)]
    pub rho: Option<f64>,
    /// Spindle half-length (circumradius).
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite id, one of: theorem1 theorem2 theorem3 conjecture1 corollary-intrinsic inradius-identity
    /// circumradius-bound kadets jung-symmetral symmetral-2d minkowski-identity sphere-lemma voronoi-density
    pub suite: String,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Largest point count per trial (pieces for kadets, sites for sphere suites).
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    /// Intrinsic volume index (simplex dimension for jung-symmetral).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 400)]
    pub directions: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Fixed ball radius; by default r/r0 is drawn from [1.1, 5].
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub r0: f64,
    #[arg(long, default_value_t = 2)]
    pub sphere_dim: usize,
    /// Angular radii for the sphere suites.
    #[arg(long, value_delimiter = ',')]
    pub epsilon: Option<Vec<f64>>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub hull_centers: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    pub inconclusive_budget: usize,
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExploreArgs {
    /// 1 (lens upper bound) or 2 (spindle lower bound).
    #[arg(long, default_value_t = 1)]
    pub conjecture: u8,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, default_value_t = 2.0)]
    pub r: f64,
    #[arg(long, default_value_t = 200)]
    pub iterations: usize,
    #[arg(long, default_value_t = 4)]
    pub restarts: usize,
    #[arg(long, default_value_t = 20_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 100)]
    pub directions: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Compute(a) => cmd_compute(&a),
        Command::Shapes(a) => cmd_shapes(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Explore(a) => cmd_explore(&a),
    }
}

fn seed_or_entropy(seed: Option<u64>) -> u64 {
    let s = seed.unwrap_or_else(rng::entropy_seed);
    eprintln!("seed = {s}");
    s
}

fn print_stdout(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(value: &impl Serialize, path: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => print_stdout(&text),
    }
}

/// Reads a configuration, accepting either a bare `{dim, r, points}` object
/// or a compute output carrying it under `input`.
pub fn read_config(path: &Path) -> Result<PointConfig> {
    let text = std::fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text)?;
    let inner = value.get("input").cloned().unwrap_or(value);
    let config: PointConfig = serde_json::from_value(inner)?;
    config.validate()?;
    Ok(config)
}

fn kind_name(kind: RegionKind) -> &'static str {
    match kind {
        RegionKind::Proper => "proper",
        RegionKind::FullDisk => "full-disk",
        RegionKind::SinglePoint => "single-point",
        RegionKind::Empty => "empty",
    }
}

fn mc_entry(profile: &mut IntrinsicProfile, k: usize, e: Estimate) {
    profile.set(k, e.value, Provenance::MonteCarlo(e));
}

pub fn compute_value(config: &PointConfig, a: &ComputeArgs, seed: u64) -> Result<Value> {
    let mut out = json!({
        "schema": COMPUTE_SCHEMA,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "target": a.target,
        "input": config,
    });
    if config.dim == 2 {
        let region = match a.target {
            Target::Polyhedron => planar::disk_intersection(config)?,
            Target::Hull => planar::ball_hull_2d(config)?,
        };
        out["kind"] = json!(kind_name(region.kind));
        out["measures"] = match planar::measures(&region) {
            Ok(m) => serde_json::to_value(m)?,
            Err(_) => Value::Null,
        };
        out["region"] = serde_json::to_value(&region)?;
        return Ok(out);
    }
    out["seed"] = json!(seed);
    let points = config.effective_points();
    let eb = minimal_enclosing_ball(&points, 0)?;
    let r = config.radius;
    if eb.ball.radius > r {
        out["kind"] = json!("empty");
        return Ok(out);
    }
    out["circumcenter"] = json!(eb.ball.center);
    out["r0"] = json!(eb.ball.radius);
    let d = config.dim;
    let mut profile = IntrinsicProfile::new(d);
    match a.target {
        Target::Polyhedron => {
            out["kind"] = json!(if eb.ball.radius < r { "proper" } else { "single-point" });
            if eb.ball.radius < r {
                mc_entry(
                    &mut profile,
                    d,
                    mc_volume_polyhedron(config, a.samples, rng::substream(seed, 1))?,
                );
                mc_entry(
                    &mut profile,
                    d - 1,
                    mc_surface_polyhedron(config, a.samples, rng::substream(seed, 2))?.scaled(0.5),
                );
                mc_entry(
                    &mut profile,
                    1,
                    mean_width_polyhedron(config, a.directions, rng::substream(seed, 3), 1e-10)?,
                );
                let cert = inradius_certified(config, 1e-12)?;
                out["inradius_bracket"] = json!([cert.lower, cert.upper]);
            }
            profile.inradius = Some(r - eb.ball.radius);
            profile.circumradius = Some((r * r - eb.ball.radius.powi(2)).sqrt());
            out["circumradius_is_bound"] = json!(true);
        }
        Target::Hull => {
            out["kind"] = json!(if eb.ball.radius < r {
                "outer-approximation"
            } else {
                "ball"
            });
            if eb.ball.radius < r {
                let approx = hull_outer_approx(config, a.hull_centers.max(1), rng::substream(seed, 4))?;
                let ms: Vec<usize> = [a.hull_centers / 4, a.hull_centers / 2, a.hull_centers]
                    .into_iter()
                    .filter(|&m| m > 0)
                    .collect();
                let study = approx.volume_study(&ms, a.samples, rng::substream(seed, 5));
                mc_entry(&mut profile, d, study.last().unwrap().volume.clone());
                out["volume_study"] = serde_json::to_value(&study)?;
                out["note"] = json!("volumes of an outer approximation; they bound the hull volume from above");
            } else {
                let ball = crate::geometry::unit_ball_volume(d) * r.powi(d as i32);
                profile.set(d, ball, Provenance::Exact);
            }
            profile.circumradius = Some(eb.ball.radius);
        }
    }
    out["profile"] = serde_json::to_value(&profile)?;
    Ok(out)
}

fn cmd_compute(a: &ComputeArgs) -> Result<i32> {
    let config = read_config(&a.input)?;
    let seed = if config.dim == 2 {
        a.seed.unwrap_or(0)
    } else {
        seed_or_entropy(a.seed)
    };
    let start = std::time::Instant::now();
    let mut out = compute_value(&config, a, seed)?;
    out["runtime_seconds"] = json!(start.elapsed().as_secs_f64());
    emit(&out, a.report.as_deref())?;
    Ok(EXIT_OK)
}

pub fn shapes_value(a: &ShapesArgs) -> Result<Value> {
    let (params, profile) = match a.shape {
        Shape::Lens => {
            let rho = a.rho.ok_or(Error::EmptyInput("--rho is required for a lens"))?;
            (
                json!({"dim": a.dim, "r": a.r, "rho": rho}),
                lens_measures(&LensSpec::new(a.dim, a.r, rho)?)?,
            )
        }
        Shape::Spindle => {
            let lambda = a
                .lambda
                .ok_or(Error::EmptyInput("--lambda is required for a spindle"))?;
            (
                json!({"dim": a.dim, "r": a.r, "lambda": lambda}),
                spindle_measures(&SpindleSpec::new(a.dim, a.r, lambda)?)?,
            )
        }
    };
    Ok(json!({
        "schema": SHAPES_SCHEMA,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "shape": a.shape,
        "parameters": params,
        "profile": profile,
    }))
}

fn cmd_shapes(a: &ShapesArgs) -> Result<i32> {
    emit(&shapes_value(a)?, a.report.as_deref())?;
    Ok(EXIT_OK)
}

/// Exit code for a finished report.
pub fn report_exit_code(report: &SuiteReport, inconclusive_budget: usize) -> i32 {
    if report.summary.fail > 0 {
        EXIT_VIOLATION
    } else if report.summary.inconclusive > inconclusive_budget {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    }
}

fn finish(report: &SuiteReport, json_path: Option<&Path>, csv_path: Option<&Path>) -> Result<()> {
    let s = &report.summary;
    eprintln!(
        "{}: {} records, {} pass, {} fail, {} inconclusive, min margin {:e}",
        report.suite, s.trials, s.pass, s.fail, s.inconclusive, s.min_margin
    );
    match json_path {
        Some(p) => report.write_json(p)?,
        None => print_stdout(&report.to_json()?)?,
    }
    if let Some(p) = csv_path {
        report.write_csv(p)?;
    }
    Ok(())
}

pub fn verify_params(a: &VerifyArgs, seed: u64) -> SuiteParams {
    let mut budget = Budget {
        samples: a.samples,
        directions: a.directions,
        ..Budget::default()
    };
    if let Some(h) = &a.hull_centers {
        budget.hull_centers = h.clone();
    }
    let defaults = SuiteParams::default();
    SuiteParams {
        suite: a.suite.clone(),
        dim: a.dim,
        n: a.n,
        k: a.k,
        trials: a.trials,
        seed,
        r: a.r,
        r0: a.r0,
        sphere_dim: a.sphere_dim,
        epsilons: a.epsilon.clone().unwrap_or(defaults.epsilons.clone()),
        tol: a.tol,
        budget,
        ..defaults
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32> {
    let seed = seed_or_entropy(a.seed);
    let report = run_suite(&verify_params(a, seed))?;
    finish(&report, a.report.as_deref(), a.csv.as_deref())?;
    Ok(report_exit_code(&report, a.inconclusive_budget))
}

fn cmd_explore(a: &ExploreArgs) -> Result<i32> {
    let seed = seed_or_entropy(a.seed);
    let mut budget = Budget {
        samples: a.samples,
        directions: a.directions,
        hull_centers: vec![64],
        ..Budget::default()
    };
    if let Some(t) = a.tol {
        budget.tol = t;
    }
    let params = ExploreParams {
        conjecture: a.conjecture,
        dim: a.dim,
        k: a.k,
        count: a.n,
        r: a.r,
        iterations: a.iterations,
        restarts: a.restarts,
        seed,
        budget,
        ..ExploreParams::default()
    };
    let report = explore_conjectures(&params)?;
    finish(&report, a.report.as_deref(), a.csv.as_deref())?;
    Ok(if report.summary.fail > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}
