//! Seeded Monte Carlo volume, surface and mean width of a ball polyhedron in E^4.

use rball::highd::{mc_surface_polyhedron, mc_volume_polyhedron, mean_width_polyhedron};
use rball::verify::generate::gen_generic;

fn main() -> rball::Result<()> {
    let cfg = gen_generic(4, 8, 1.0, 2.0, 11)?;
    let v = mc_volume_polyhedron(&cfg, 400_000, 1)?;
    let s = mc_surface_polyhedron(&cfg, 200_000, 2)?;
    let w = mean_width_polyhedron(&cfg, 500, 3, 1e-10)?;
    println!("V_4 = {:.5} +- {:.5}", v.value, v.stderr);
    println!("2 V_3 = {:.5} +- {:.5}", s.value, s.stderr);
    println!("V_1 = {:.5} +- {:.5}", w.value, w.stderr);
    let again = mc_volume_polyhedron(&cfg, 400_000, 1)?;
    println!("same seed, same value: {}", again == v);
    Ok(())
}
