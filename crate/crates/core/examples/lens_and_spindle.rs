//! Intrinsic volumes of lenses and spindles, and the Steiner formula on a lens.

use rball::geometry::{lens_measures, spindle_measures, steiner_eval, LensSpec, SpindleSpec};

fn main() -> rball::Result<()> {
    for d in 2..=5 {
        let lens = lens_measures(&LensSpec::new(d, 1.0, 0.5)?)?;
        let spindle = spindle_measures(&SpindleSpec::new(d, 1.0, 0.5)?)?;
        println!(
            "d={d}  lens: V_d={:.6} V_(d-1)={:.6} V_1={:.6}   spindle: V_d={:.6} V_1={:.6}",
            lens.volume(),
            lens.get(d - 1).unwrap(),
            lens.get(1).unwrap(),
            spindle.volume(),
            spindle.get(1).unwrap(),
        );
    }
    let lens2 = lens_measures(&LensSpec::new(2, 2.0, 1.0)?)?;
    println!(
        "parallel body of the planar lens at eps=0.1: {:.6}",
        steiner_eval(&lens2, 0.1)?
    );
    Ok(())
}
