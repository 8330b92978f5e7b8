//! Exact arc-polygon construction of a disk intersection and its r-ball hull.

use rball::geometry::PointConfig;
use rball::planar::{ball_hull_2d, disk_intersection, measures, support_2d};

fn main() -> rball::Result<()> {
    let pts = vec![vec![0.9, 0.1], vec![-0.6, 0.7], vec![-0.4, -0.8], vec![0.3, -0.2]];
    let cfg = PointConfig::new(2, 1.5, pts)?;
    let poly = disk_intersection(&cfg)?;
    let hull = ball_hull_2d(&cfg)?;
    println!("P^r has {} arcs", poly.arcs.len());
    for a in &poly.arcs {
        println!("  arc of the circle about {:?}, angle {:.4}", a.center, a.angle());
    }
    let m = measures(&poly)?;
    println!(
        "area {:.6} perimeter {:.6} inradius {:.6} circumradius {:.6}",
        m.area, m.perimeter, m.inradius, m.circumradius
    );
    let h = measures(&hull)?;
    println!(
        "conv_r P: area {:.6} perimeter {:.6} ({} arcs)",
        h.area,
        h.perimeter,
        hull.arcs.len()
    );
    // support functions of the hull and the polyhedron sum to r
    let u = [0.6, 0.8];
    let s = support_2d(&hull, u)?.0 + support_2d(&poly, [-u[0], -u[1]])?.0;
    println!("h_hull(u) + h_poly(-u) = {s:.12} (r = {})", cfg.radius);
    println!(
        "perimeters sum to {:.12} (2 pi r = {:.12})",
        m.perimeter + h.perimeter,
        2.0 * std::f64::consts::PI * cfg.radius
    );
    Ok(())
}
