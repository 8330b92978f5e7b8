//! Outer approximation of the r-ball hull in E^3 as the center count grows.

use rball::highd::hull_outer_approx;
use rball::verify::generate::gen_generic;

fn main() -> rball::Result<()> {
    let cfg = gen_generic(3, 6, 1.0, 1.5, 5)?;
    let approx = hull_outer_approx(&cfg, 1024, 9)?;
    for row in approx.volume_study(&[32, 128, 512, 1024], 200_000, 4) {
        let dec = row.decrease.map(|d| format!("{:.5} +- {:.5}", d.value, d.stderr));
        println!(
            "m = {:4}: volume {:.5} +- {:.5}, decrease {:?}",
            row.m, row.volume.value, row.volume.stderr, dec
        );
    }
    Ok(())
}
