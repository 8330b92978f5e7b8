//! Minimal enclosing ball and the inradius identity r_in(P^r) = r - r_cr(P).

use rball::geometry::meb::certify;
use rball::geometry::minimal_enclosing_ball;
use rball::highd::inradius_certified;
use rball::verify::generate::gen_generic;

fn main() -> rball::Result<()> {
    for d in [2, 3, 5, 8] {
        let cfg = gen_generic(d, 12, 1.0, 1.7, 7 + d as u64)?;
        let eb = minimal_enclosing_ball(&cfg.points, 0)?;
        let cert = certify(&cfg.points, &eb);
        let inr = inradius_certified(&cfg, 1e-12)?;
        println!(
            "d={d}: r_cr = {:.12} (certificate {:?}); r_in(P^r) in [{:.12}, {:.12}], r - r_cr = {:.12}",
            eb.ball.radius,
            cert,
            inr.lower,
            inr.upper,
            cfg.radius - eb.ball.radius
        );
    }
    Ok(())
}
