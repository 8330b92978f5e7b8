//! Coverings of a disk by r_i-ball convex pieces and the inradius sum.

use rball::verify::kadets::{gen_covering, Partition};

fn main() -> rball::Result<()> {
    for (n, kind) in [
        (1, Partition::Voronoi),
        (3, Partition::Voronoi),
        (4, Partition::Strips),
        (6, Partition::Voronoi),
    ] {
        let cov = gen_covering(n, 1.0, kind, 0.5, 40 + n as u64)?;
        let radii: Vec<String> = cov.pieces.iter().map(|p| format!("{:.3}", p.radius)).collect();
        println!(
            "{n} pieces ({kind:?}), radii [{}]: sum of inradii {:.6} >= r = 1",
            radii.join(", "),
            cov.inradius_sum()
        );
    }
    Ok(())
}
