use proptest::prelude::*;
use rball::geometry::PointConfig;
use rball::highd::{inradius_certified, support_polyhedron};
use rball::linalg;
use rball::planar::{ball_hull_2d, check_symmetral_2d, disk_intersection, measures, PlanarMeasures};
use rball::verify::generate::gen_generic;

fn planar(count: usize, r: f64, seed: u64) -> PointConfig {
    gen_generic(2, count, 1.0, r, seed).unwrap()
}

fn polyhedron(cfg: &PointConfig) -> PlanarMeasures {
    measures(&disk_intersection(cfg).unwrap()).unwrap()
}

fn hull(cfg: &PointConfig) -> PlanarMeasures {
    measures(&ball_hull_2d(cfg).unwrap()).unwrap()
}

fn map(cfg: &PointConfig, scale: f64, f: impl Fn(&[f64]) -> Vec<f64>) -> PointConfig {
    PointConfig::new(cfg.dim, cfg.radius * scale, cfg.points.iter().map(|p| f(p)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn planar_measures_scale(count in 2usize..9, r in 1.1f64..4.0, seed in any::<u64>(), lambda in 0.2f64..5.0) {
        let cfg = planar(count, r, seed);
        let big = map(&cfg, lambda, |p| linalg::scale(p, lambda));
        let (a, b) = (polyhedron(&cfg), polyhedron(&big));
        prop_assert!((b.area - lambda * lambda * a.area).abs() <= 1e-9 * b.area.max(1.0));
        prop_assert!((b.perimeter - lambda * a.perimeter).abs() <= 1e-9 * b.perimeter.max(1.0));
        prop_assert!((b.inradius - lambda * a.inradius).abs() <= 1e-8 * lambda.max(1.0));
        let (ha, hb) = (hull(&cfg), hull(&big));
        prop_assert!((hb.area - lambda * lambda * ha.area).abs() <= 1e-9 * hb.area.max(1.0));
    }

    #[test]
    fn planar_measures_are_rigid_invariant(
        count in 2usize..9, r in 1.1f64..4.0, seed in any::<u64>(),
        angle in 0.0f64..std::f64::consts::TAU, tx in -5.0f64..5.0, ty in -5.0f64..5.0,
    ) {
        let cfg = planar(count, r, seed);
        let (c, s) = (angle.cos(), angle.sin());
        let moved = map(&cfg, 1.0, |p| vec![c * p[0] - s * p[1] + tx, s * p[0] + c * p[1] + ty]);
        let (a, b) = (polyhedron(&cfg), polyhedron(&moved));
        prop_assert!((a.area - b.area).abs() < 1e-9);
        prop_assert!((a.perimeter - b.perimeter).abs() < 1e-9);
        prop_assert!((a.circumradius - b.circumradius).abs() < 1e-8);
        prop_assert!((hull(&cfg).perimeter - hull(&moved).perimeter).abs() < 1e-9);
    }

    #[test]
    fn more_generators_shrink_the_polyhedron_and_grow_the_hull(
        count in 2usize..8, r in 1.1f64..4.0, seed in any::<u64>(), t in 0.0f64..1.0, phi in 0.0f64..std::f64::consts::TAU,
    ) {
        let cfg = planar(count, r, seed);
        // a new point inside the circumdisk keeps P^r nonempty
        let q = vec![t * phi.cos(), t * phi.sin()];
        let mut pts = cfg.points.clone();
        pts.push(q);
        let more = cfg.with_points(pts);
        prop_assert!(polyhedron(&more).area <= polyhedron(&cfg).area + 1e-12);
        prop_assert!(hull(&more).area >= hull(&cfg).area - 1e-12);
    }

    #[test]
    fn symmetral_is_contained_in_the_pair_difference_intersection(
        count in 3usize..9, r in 1.1f64..4.0, seed in any::<u64>(),
    ) {
        let rec = check_symmetral_2d(&planar(count, r, seed), 360, 1e-9).unwrap();
        prop_assert!(rec.details["symmetral_excess"] <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn highd_support_points_are_feasible_and_inradius_is_bracketed(
        dim in 3usize..7, count in 2usize..10, r in 1.1f64..4.0, seed in any::<u64>(),
    ) {
        let cfg = gen_generic(dim, count, 1.0, r, seed).unwrap();
        let cert = inradius_certified(&cfg, 1e-10).unwrap();
        prop_assert!(cert.lower <= r - 1.0 + 1e-8 && r - 1.0 - 1e-8 <= cert.upper);
        let mut g = rball::rng::stream(seed, 1);
        for _ in 0..5 {
            let u = rball::rng::unit_vector(&mut g, dim);
            let s = support_polyhedron(&cfg, &u, 1e-12).unwrap();
            prop_assert!(s.feasibility <= 1e-9);
            prop_assert!((linalg::dot(&s.point, &u) - s.value).abs() <= 1e-9);
            // the incenter lies in the body, so no support value is below its projection
            prop_assert!(s.value >= linalg::dot(&cert.center, &u) + cert.lower - 1e-8);
        }
    }
}
