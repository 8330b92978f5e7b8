//! Neighborhoods of hemisphere-free sets on S^2 and the Voronoi density bound.

use rball::sphere::{
    hemisphere_free, mc_neighborhood_measure, mc_voronoi_density, regular_simplex, spherical_cap_measure,
    SphericalConfig,
};

fn main() -> rball::Result<()> {
    let pts = regular_simplex(2);
    for eps in [0.3, 0.8, std::f64::consts::FRAC_PI_2] {
        let cfg = SphericalConfig::new(2, eps, pts.clone())?;
        let free = hemisphere_free(&cfg);
        let est = mc_neighborhood_measure(&cfg, 500_000, 1)?;
        let bound = 2.0 * spherical_cap_measure(2, eps)?;
        println!(
            "eps={eps:.3}: hemisphere-free {} (margin {:.3}), SV(X_eps) = {:.5} +- {:.5} >= {:.5}",
            free.free, free.margin, est.value, est.stderr, bound
        );
        for s in mc_voronoi_density(&cfg, 200_000, 2)? {
            println!(
                "  site {}: density {:.4} +- {:.4}, bound {:.4}",
                s.site, s.density, s.density_stderr, s.bound
            );
        }
    }
    Ok(())
}
