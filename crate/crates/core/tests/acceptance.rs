//! Acceptance run: each criterion prints one PASS/FAIL line with its runtime.
//!
//! Runs sequentially under its own `main` so timings are not distorted by
//! other tests. Extra command-line words filter criteria by substring.

use rball::geometry::constants::{intrinsic_ball_constant, unit_ball_volume};
use rball::geometry::{
    lens_measures, spindle_measures, steiner_eval, IntrinsicProfile, LensSpec, PointConfig, Provenance, SpindleSpec,
};
use rball::highd::mc::volume_in_ball;
use rball::highd::{
    inradius_certified, mc_surface_polyhedron, mc_volume_polyhedron, mean_width_polyhedron, support_polyhedron,
};
use rball::planar::{ball_hull_2d, disk_intersection, measures, support_2d};
use rball::verify::checks::volume_to_intrinsic_constant;
use rball::verify::explore::{explore_conjectures, ExploreParams};
use rball::verify::generate::gen_generic;
use rball::verify::{run_suite, Budget, SuiteParams, SuiteReport};
use std::f64::consts::PI;
use std::time::Instant;

const EXACT_TOL: f64 = 1e-9;
const HIGHD_INRADIUS_TOL: f64 = 1e-7;
const KADETS_TOL: f64 = 1e-6;
const REGULAR_SIMPLEX_TOL: f64 = 1e-6;
const NUMERIC_AGREEMENT_TOL: f64 = 1e-6;
const STEINER_TOL: f64 = 1e-12;
const CONSTANT_TOL: f64 = 1e-12;
const SIGMAS: f64 = 3.0;
const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        summary: summary.into(),
    }
}

fn suite(name: &str, dim: usize, n: usize, trials: usize, tweak: impl FnOnce(&mut SuiteParams)) -> SuiteReport {
    let mut p = SuiteParams {
        dim,
        n,
        trials,
        seed: SEED,
        ..SuiteParams::new(name)
    };
    tweak(&mut p);
    run_suite(&p).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn min_margin(rep: &SuiteReport) -> f64 {
    rep.summary.min_margin
}

/// Smallest `margin + σ·stderr` over the records.
fn worst_noisy_margin(rep: &SuiteReport) -> f64 {
    rep.records
        .iter()
        .map(|r| r.margin + SIGMAS * r.margin_stderr)
        .fold(f64::INFINITY, f64::min)
}

fn counts(rep: &SuiteReport) -> String {
    format!(
        "{} trials, {} pass, {} fail, {} inconclusive",
        rep.summary.trials, rep.summary.pass, rep.summary.fail, rep.summary.inconclusive
    )
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn extremal_planar_pair() -> Outcome {
    let cfg = PointConfig::new(2, 2.0, vec![vec![1.0, 0.0], vec![-1.0, 0.0]]).unwrap();
    let m = measures(&disk_intersection(&cfg).unwrap()).unwrap();
    let hull = measures(&ball_hull_2d(&cfg).unwrap()).unwrap();
    let s3 = 3f64.sqrt();
    let lens_area = 2.0 * (4.0 * PI / 3.0 - s3);
    // two circular segments of radius 2 over a chord of half-length 1
    let spindle_area = 2.0 * (4.0 * (0.5f64).asin() - s3);
    let spindle_perimeter = 2.0 * 2.0 * 2.0 * (0.5f64).asin();
    let checks = [
        ("area", m.area, lens_area),
        ("inradius", m.inradius, 1.0),
        ("inradius_direct", m.inradius_direct, 1.0),
        ("circumradius", m.circumradius, s3),
        ("hull_area", hull.area, spindle_area),
        ("hull_perimeter", hull.perimeter, spindle_perimeter),
        ("hull_inradius", hull.inradius, 2.0 - s3),
    ];
    let worst = checks
        .iter()
        .map(|(_, got, want)| (got - want).abs())
        .fold(0.0, f64::max);
    let bad: Vec<&str> = checks
        .iter()
        .filter(|(_, got, want)| !close(*got, *want, EXACT_TOL))
        .map(|c| c.0)
        .collect();
    outcome(bad.is_empty(), format!("max deviation {worst:.2e}, off: {bad:?}"))
}

fn volume_bound_plane() -> Outcome {
    let rep = suite("theorem1", 2, 12, 1000, |_| {});
    outcome(
        min_margin(&rep) >= -EXACT_TOL && rep.summary.fail == 0,
        format!("{}, min margin {:.2e}", counts(&rep), min_margin(&rep)),
    )
}

fn volume_bound_space() -> Outcome {
    let rep = suite("theorem1", 3, 12, 200, |_| {});
    outcome(rep.summary.fail == 0, format!("{}, paired samples 1e5", counts(&rep)))
}

fn inradius_identity() -> Outcome {
    let plane = suite("inradius-identity", 2, 12, 1000, |p| p.tol = Some(EXACT_TOL));
    let mut ok = plane.summary.fail == 0;
    let mut parts = vec![format!("d=2 {} fail", plane.summary.fail)];
    for d in 3..=6 {
        let rep = suite("inradius-identity", d, 12, 200, |p| p.tol = Some(HIGHD_INRADIUS_TOL));
        ok &= rep.summary.fail == 0 && rep.summary.trials == 200;
        parts.push(format!("d={d} {} fail", rep.summary.fail));
    }
    outcome(ok, parts.join(", "))
}

fn circumradius_bound() -> Outcome {
    let plane = suite("circumradius-bound", 2, 12, 1000, |_| {});
    let space = suite("circumradius-bound", 3, 12, 200, |_| {});
    outcome(
        min_margin(&plane) >= -EXACT_TOL && worst_noisy_margin(&space) >= -EXACT_TOL,
        format!(
            "d=2 min margin {:.2e}, d=3 min margin {:.2e}",
            min_margin(&plane),
            min_margin(&space)
        ),
    )
}

fn intrinsic_lens_bound() -> Outcome {
    let plane = suite("theorem2", 2, 12, 1000, |p| p.k = Some(1));
    let space = suite("theorem2", 3, 12, 100, |p| p.k = Some(2));
    outcome(
        min_margin(&plane) >= -EXACT_TOL && space.summary.fail == 0,
        format!(
            "d=2 k=1 min margin {:.2e}; d=3 k=2 {}",
            min_margin(&plane),
            counts(&space)
        ),
    )
}

fn spindle_volume_bound() -> Outcome {
    let plane = suite("theorem3", 2, 12, 1000, |_| {});
    let space = suite("theorem3", 3, 12, 50, |_| {});
    let rate = space.summary.inconclusive as f64 / space.summary.trials as f64;
    outcome(
        min_margin(&plane) >= -EXACT_TOL && space.summary.fail == 0,
        format!(
            "d=2 min margin {:.2e}; d=3 {}, inconclusive rate {:.0}%",
            min_margin(&plane),
            counts(&space),
            100.0 * rate
        ),
    )
}

fn spindle_intrinsic_bound() -> Outcome {
    let rep = suite("corollary-intrinsic", 2, 12, 1000, |p| p.k = Some(1));
    let mut worst: f64 = 0.0;
    for d in 1..=8 {
        for k in 1..=d {
            // V_k of the ball whose volume is V_d(B_R) equals V_k(B_R)
            let radius = 1.7f64;
            let vol = unit_ball_volume(d) * radius.powi(d as i32);
            let got = volume_to_intrinsic_constant(d, k).unwrap() * vol.powf(k as f64 / d as f64);
            let want = intrinsic_ball_constant(d, k).unwrap() * radius.powi(k as i32);
            worst = worst.max(((got - want) / want).abs());
        }
    }
    outcome(
        min_margin(&rep) >= -EXACT_TOL && worst <= CONSTANT_TOL,
        format!("min margin {:.2e}, constant deviation {:.1e}", min_margin(&rep), worst),
    )
}

fn covering_inradius_sum() -> Outcome {
    let rep = suite("kadets", 2, 8, 100, |p| p.r = Some(1.0));
    let single: Vec<f64> = rep
        .records
        .iter()
        .filter(|r| r.instance.count == 1)
        .map(|r| r.margin.abs())
        .collect();
    let equality = !single.is_empty() && single.iter().all(|&m| m <= KADETS_TOL);
    outcome(
        min_margin(&rep) >= -KADETS_TOL && equality,
        format!(
            "{}, min margin {:.2e}, {} single-piece coverings",
            counts(&rep),
            min_margin(&rep),
            single.len()
        ),
    )
}

fn symmetral_support_identity() -> Outcome {
    let rep = suite("symmetral-2d", 2, 8, 500, |p| p.tol = Some(EXACT_TOL));
    let max_dev = rep
        .records
        .iter()
        .map(|r| r.details["max_deviation"])
        .fold(0.0, f64::max);
    let max_excess = rep
        .records
        .iter()
        .map(|r| r.details["symmetral_excess"])
        .fold(f64::NEG_INFINITY, f64::max);
    outcome(
        rep.summary.fail == 0,
        format!(
            "{}, max deviation {max_dev:.3e}, max excess of the symmetral {max_excess:.1e}",
            counts(&rep)
        ),
    )
}

fn minkowski_support_identity() -> Outcome {
    let rep = suite("minkowski-identity", 2, 8, 500, |p| p.tol = Some(EXACT_TOL));
    outcome(
        rep.summary.fail == 0,
        format!("{}, min slack {:.2e}", counts(&rep), min_margin(&rep)),
    )
}

fn centered_simplex_diameter() -> Outcome {
    let mut total = 0;
    let mut fails = 0;
    let mut regular = 0;
    for (d, trials) in [(2, 500), (3, 500)] {
        let rep = suite("jung-symmetral", d, 8, trials, |p| p.tol = Some(EXACT_TOL));
        total += rep.summary.trials;
        fails += rep.summary.fail;
        for r in &rep.records {
            if r.details["regular"] == 1.0 {
                regular += 1;
                if (r.rhs.value - r.lhs.value).abs() > REGULAR_SIMPLEX_TOL {
                    fails += 1;
                }
            }
        }
    }
    outcome(
        fails == 0 && total == 1000,
        format!("{total} simplices ({regular} regular), {fails} fail"),
    )
}

fn sphere_neighborhoods() -> Outcome {
    let tweak = |p: &mut SuiteParams| {
        p.sphere_dim = 2;
        p.budget.samples = 1_000_000;
    };
    let lemma = suite("sphere-lemma", 2, 10, 20, tweak);
    let voronoi = suite("voronoi-density", 2, 10, 20, tweak);
    let a = worst_noisy_margin(&lemma);
    let b = worst_noisy_margin(&voronoi);
    outcome(
        a >= 0.0 && b >= 0.0 && lemma.records.len() == 60,
        format!(
            "measure: {} min margin+3σ {a:.2e}; density: {} sites, min margin+3σ {b:.2e}",
            counts(&lemma),
            voronoi.records.len()
        ),
    )
}

/// `(t, s)` with `s ≥ 0` lies in the spindle through `±λ e` iff `(s + sqrt(r² − λ²))² + t² ≤ r²`.
fn in_spindle(x: &[f64], r: f64, lambda: f64) -> bool {
    let t = x[0];
    let s = x[1..].iter().map(|v| v * v).sum::<f64>().sqrt();
    let c = (r * r - lambda * lambda).sqrt();
    (s + c).powi(2) + t * t <= r * r
}

fn oracle_agreement() -> Outcome {
    let samples = 1_000_000;
    let mut bad = Vec::new();
    let mut worst_sigma: f64 = 0.0;
    let mut note = |label: String, value: f64, stderr: f64, target: f64, floor: f64| {
        let gap = (value - target).abs();
        worst_sigma = worst_sigma.max((gap / stderr.max(1e-300)).min(1e9));
        (gap > SIGMAS * stderr + floor).then_some(label)
    };
    let (r, rho, lambda) = (1.0, 0.4, 0.7);
    for d in 2..=4 {
        let lens = LensSpec::new(d, r, rho).unwrap();
        let exact = lens_measures(&lens).unwrap().volume();
        let [a, b] = lens.centers();
        let cfg = PointConfig::new(d, r, vec![a, b]).unwrap();
        let e = mc_volume_polyhedron(&cfg, samples, SEED + d as u64).unwrap();
        bad.extend(note(format!("lens d={d}"), e.value, e.stderr, exact, 0.0));

        let spin = SpindleSpec::new(d, r, lambda).unwrap();
        let exact = spindle_measures(&spin).unwrap().volume();
        let c = vec![0.0; d];
        let e = volume_in_ball(&c, lambda, samples, SEED + 10 + d as u64, "spindle", |x| {
            in_spindle(x, r, lambda)
        });
        bad.extend(note(format!("spindle d={d}"), e.value, e.stderr, exact, 0.0));
    }
    // the plane: closed-form lens area as a third route
    let a = r - rho;
    let closed = 2.0 * (r * r * (a / r).acos() - a * (r * r - a * a).sqrt());
    let quad = lens_measures(&LensSpec::new(2, r, rho).unwrap()).unwrap().volume();
    if !close(closed, quad, EXACT_TOL) {
        bad.push("lens closed form".into());
    }

    let mut numeric_dev: f64 = 0.0;
    for t in 0..6u64 {
        let seed = SEED + 100 + t;
        let cfg = gen_generic(2, 3 + t as usize, 1.0, 1.3 + 0.3 * t as f64, seed).unwrap();
        let m = measures(&disk_intersection(&cfg).unwrap()).unwrap();
        let v = mc_volume_polyhedron(&cfg, samples, seed).unwrap();
        bad.extend(note(format!("area {t}"), v.value, v.stderr, m.area, 0.0));
        let s = mc_surface_polyhedron(&cfg, samples, seed + 1).unwrap();
        bad.extend(note(format!("perimeter {t}"), s.value, s.stderr, m.perimeter, 0.0));
        let w = mean_width_polyhedron(&cfg, 2000, seed + 2, 1e-12).unwrap();
        bad.extend(note(
            format!("mean width {t}"),
            w.value,
            w.stderr,
            m.v1(),
            NUMERIC_AGREEMENT_TOL,
        ));
        let cert = inradius_certified(&cfg, 1e-9).unwrap();
        numeric_dev = numeric_dev.max((cert.inradius - m.inradius).abs());
        let poly = disk_intersection(&cfg).unwrap();
        for k in 0..36 {
            let phi = 2.0 * PI * k as f64 / 36.0;
            let u = [phi.cos(), phi.sin()];
            let exact = support_2d(&poly, u).unwrap().0;
            let numeric = support_polyhedron(&cfg, &u, 1e-12).unwrap().value;
            numeric_dev = numeric_dev.max((exact - numeric).abs());
        }
    }
    if numeric_dev > NUMERIC_AGREEMENT_TOL {
        bad.push("support/inradius".into());
    }
    outcome(
        bad.is_empty(),
        format!("largest gap {worst_sigma:.2} σ, deterministic gap {numeric_dev:.1e}, off: {bad:?}"),
    )
}

fn steiner_ball_profile() -> Outcome {
    let mut worst: f64 = 0.0;
    for d in 1..=8 {
        for &radius in &[0.5, 1.0, 2.5] {
            let mut p = IntrinsicProfile::new(d);
            for k in 1..=d {
                p.set(
                    k,
                    intrinsic_ball_constant(d, k).unwrap() * f64::powi(radius, k as i32),
                    Provenance::Exact,
                );
            }
            for &eps in &[0.0, 0.1, 1.0, 3.0] {
                let got = steiner_eval(&p, eps).unwrap();
                let want = unit_ball_volume(d) * f64::powi(radius + eps, d as i32);
                worst = worst.max(((got - want) / want).abs());
            }
        }
    }
    outcome(
        worst <= STEINER_TOL,
        format!("relative deviation {worst:.1e} for d ≤ 8"),
    )
}

fn thread_count_independence() -> Outcome {
    let light = Budget {
        samples: 20_000,
        directions: 60,
        hull_centers: vec![32, 64],
        ..Budget::default()
    };
    let cases: Vec<SuiteParams> = vec![
        ("theorem1", 2, None),
        ("theorem1", 3, None),
        ("theorem2", 3, Some(2)),
        ("theorem3", 3, None),
        ("corollary-intrinsic", 3, Some(1)),
        ("inradius-identity", 4, None),
        ("kadets", 2, None),
        ("symmetral-2d", 2, None),
        ("jung-symmetral", 3, None),
        ("sphere-lemma", 2, None),
        ("voronoi-density", 2, None),
    ]
    .into_iter()
    .map(|(name, dim, k)| SuiteParams {
        dim,
        k,
        n: 7,
        trials: 6,
        seed: SEED,
        budget: light.clone(),
        ..SuiteParams::new(name)
    })
    .collect();
    let pool = |n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
    let (one, three) = (pool(1), pool(3));
    let mut differing = Vec::new();
    for p in &cases {
        let a = one.install(|| run_suite(p)).unwrap().canonical_json().unwrap();
        let b = three.install(|| run_suite(p)).unwrap().canonical_json().unwrap();
        let c = run_suite(p).unwrap().canonical_json().unwrap();
        if a != b || a != c {
            differing.push(p.suite.clone());
        }
    }
    let explore = ExploreParams {
        iterations: 15,
        restarts: 2,
        seed: SEED,
        ..ExploreParams::default()
    };
    let a = one
        .install(|| explore_conjectures(&explore))
        .unwrap()
        .canonical_json()
        .unwrap();
    let b = three
        .install(|| explore_conjectures(&explore))
        .unwrap()
        .canonical_json()
        .unwrap();
    if a != b {
        differing.push("explore".into());
    }
    outcome(
        differing.is_empty(),
        format!(
            "{} suites at 1 and 3 threads, differing: {differing:?}",
            cases.len() + 1
        ),
    )
}

type Criterion = (&'static str, f64, fn() -> Outcome);

const CRITERIA: [Criterion; 16] = [
    ("extremal antipodal pair in the plane", 1.0, extremal_planar_pair),
    ("lens volume bound, plane", 30.0, volume_bound_plane),
    ("lens volume bound, space", 120.0, volume_bound_space),
    ("inradius equals r minus circumradius", 60.0, inradius_identity),
    ("circumradius of the ball polyhedron", 30.0, circumradius_bound),
    ("lens intrinsic-volume bound", 120.0, intrinsic_lens_bound),
    ("spindle volume bound for the hull", 180.0, spindle_volume_bound),
    (
        "spindle intrinsic bound and its constant",
        30.0,
        spindle_intrinsic_bound,
    ),
    ("inradius sum of a covering", 60.0, covering_inradius_sum),
    ("symmetral of Q^r equals (M_o Q)^r", 30.0, symmetral_support_identity),
    (
        "hull/polyhedron support and perimeter sums",
        30.0,
        minkowski_support_identity,
    ),
    ("diameter of centered simplices", 30.0, centered_simplex_diameter),
    (
        "hemisphere-free neighborhoods and Voronoi density",
        120.0,
        sphere_neighborhoods,
    ),
    ("exact, quadrature and Monte Carlo agree", 120.0, oracle_agreement),
    ("Steiner formula on balls", 1.0, steiner_ball_profile),
    (
        "same seed gives identical reports",
        f64::INFINITY,
        thread_count_independence,
    ),
];

fn main() {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = Vec::new();
    let mut ran = 0;
    for (i, (name, limit, f)) in CRITERIA.iter().enumerate() {
        if !filters.is_empty() && !filters.iter().any(|s| name.contains(s.as_str())) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let result = std::panic::catch_unwind(f);
        let secs = start.elapsed().as_secs_f64();
        let (pass, summary) = match result {
            Ok(o) => (o.pass && secs < *limit, o.summary),
            Err(_) => (false, "panicked".to_string()),
        };
        let budget = if limit.is_finite() {
            format!("{secs:.2} s of {limit} s")
        } else {
            format!("{secs:.2} s")
        };
        println!(
            "{} {:>2} {name}: {summary} [{budget}]",
            if pass { "PASS" } else { "FAIL" },
            i + 1
        );
        if !pass {
            failed.push(i + 1);
        }
    }
    println!("\n{} of {ran} criteria passed", ran - failed.len());
    if !failed.is_empty() {
        println!("failed: {failed:?}");
        std::process::exit(1);
    }
}
