use super::constants::unit_ball_volume;
use super::types::IntrinsicProfile;
use crate::error::{Error, Result};

/// Volume of the ε-parallel body: `Σ_{i=1}^{d} ω_{d−i} V_i ε^{d−i} + ω_d ε^d`.
pub fn steiner_eval(profile: &IntrinsicProfile, eps: f64) -> Result<f64> {
    if !(eps >= 0.0) {
        return Err(Error::OutOfRange {
            what: "epsilon",
            value: eps,
        });
    }
    let d = profile.dim;
    let mut total = unit_ball_volume(d) * eps.powi(d as i32);
    for i in 1..=d {
        let v = profile.get(i).ok_or(Error::UnsupportedIndex { k: i, dim: d })?;
        total += unit_ball_volume(d - i) * v * eps.powi((d - i) as i32);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::constants::intrinsic_ball_constant;
    use crate::geometry::types::Provenance;

    fn ball(d: usize, radius: f64) -> IntrinsicProfile {
        let mut p = IntrinsicProfile::new(d);
        for k in 1..=d {
            p.set(
                k,
                intrinsic_ball_constant(d, k).unwrap() * radius.powi(k as i32),
                Provenance::Exact,
            );
        }
        p
    }

    #[test]
    fn ball_inflation() {
        for d in 1..=8 {
            for &e in &[0.0f64, 0.1, 1.0, 3.0] {
                let want = unit_ball_volume(d) * (1.0 + e).powi(d as i32);
                let got = steiner_eval(&ball(d, 1.0), e).unwrap();
                assert!(((got - want) / want).abs() < 1e-12, "d={d} e={e}");
            }
        }
    }

    #[test]
    fn point_inflation_is_a_ball() {
        let mut p = IntrinsicProfile::new(3);
        for k in 1..=3 {
            p.set(k, 0.0, Provenance::Exact);
        }
        assert!((steiner_eval(&p, 1.0).unwrap() - unit_ball_volume(3)).abs() < 1e-15);
    }

    #[test]
    fn incomplete_profile_rejected() {
        let mut p = IntrinsicProfile::new(3);
        p.set(3, 1.0, Provenance::Exact);
        assert!(steiner_eval(&p, 1.0).is_err());
    }
}
