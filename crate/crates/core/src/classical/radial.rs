use super::{cross, dot, norm, V3};
use crate::{Error, Result};

/// Position and velocity of a free particle in three dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeState3 {
    pub r: V3,
    pub v: V3,
}

impl FreeState3 {
    pub fn new(r: V3, v: V3) -> Self {
        Self { r, v }
    }

    /// Exact free flight `r + t v`.
    pub fn at(&self, t: f64) -> FreeState3 {
        let r = [
            self.r[0] + t * self.v[0],
            self.r[1] + t * self.v[1],
            self.r[2] + t * self.v[2],
        ];
        FreeState3 { r, v: self.v }
    }
}

/// Radial data of a free state: distance, radial velocity, squared angular
/// momentum and energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialData {
    pub r: f64,
    pub rdot: f64,
    pub l2: f64,
    pub energy: f64,
}

pub fn reduce_free_to_radial(s: &FreeState3) -> Result<RadialData> {
    let r = norm(&s.r);
    if r == 0.0 {
        return Err(Error::Domain("zero radius".into()));
    }
    let l = cross(&s.r, &s.v);
    Ok(RadialData {
        r,
        rdot: dot(&s.r, &s.v) / r,
        l2: dot(&l, &l),
        energy: 0.5 * dot(&s.v, &s.v),
    })
}

/// Reduced radial dynamics on `(r, ṙ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialField {
    /// Level set of the squared angular momentum.
    FixedL { l2: f64 },
    /// Level set of the energy.
    FixedE { energy: f64 },
    /// Convex combination `α l² + (1 − α) 2E` of both invariants.
    Convex { alpha: f64, l2: f64, energy: f64 },
    /// Level set of the time-dependent constant `r² + v² t² − 2 r·v t = k²`.
    TimeDependent { k2: f64 },
}

impl RadialField {
    pub fn accel(&self, t: f64, r: f64, rdot: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::Domain(format!("radius {r} must be positive")));
        }
        Ok(match *self {
            RadialField::FixedL { l2 } => l2 / r.powi(3),
            RadialField::FixedE { energy } => 2.0 * energy / r - rdot * rdot / r,
            RadialField::Convex { alpha, l2, energy } => {
                (alpha * l2 + (1.0 - alpha) * (2.0 * energy - rdot * rdot) * r * r) / r.powi(3)
            }
            RadialField::TimeDependent { k2 } => {
                if !(t > 0.0) {
                    return Err(Error::Domain(format!("time {t} must be positive")));
                }
                k2 / (r * t * t) + 2.0 * rdot / t - r / (t * t) - rdot * rdot / r
            }
        })
    }

    /// Right-hand side on the state `(r, ṙ)` suitable for the integrator.
    pub fn rhs(self) -> impl Fn(f64, &[f64], &mut [f64]) -> Result<()> {
        move |t, y, dy| {
            dy[0] = y[1];
            dy[1] = self.accel(t, y[0], y[1])?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::integrate_rk4;

    #[test]
    fn radial_data_examples() {
        let d = reduce_free_to_radial(&FreeState3::new([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])).unwrap();
        assert_eq!((d.r, d.rdot, d.l2, d.energy), (1.0, 0.0, 1.0, 0.5));
        let d = reduce_free_to_radial(&FreeState3::new([2.0, 0.0, 0.0], [1.0, 0.0, 0.0])).unwrap();
        assert_eq!((d.r, d.rdot, d.l2, d.energy), (2.0, 1.0, 0.0, 0.5));
        let d = reduce_free_to_radial(&FreeState3::new([1.0, 0.0, 0.0], [0.0; 3])).unwrap();
        assert_eq!((d.r, d.rdot, d.l2, d.energy), (1.0, 0.0, 0.0, 0.0));
        assert!(reduce_free_to_radial(&FreeState3::new([0.0; 3], [1.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn field_values() {
        assert_eq!(RadialField::FixedL { l2: 1.0 }.accel(0.0, 1.0, 0.0).unwrap(), 1.0);
        assert_eq!(RadialField::FixedE { energy: 0.5 }.accel(0.0, 1.0, 1.0).unwrap(), 0.0);
        let conv = RadialField::Convex { alpha: 1.0, l2: 0.7, energy: 3.0 };
        let fl = RadialField::FixedL { l2: 0.7 };
        for &(r, rd) in &[(0.5, 0.1), (2.0, -1.0), (1.3, 0.0)] {
            assert!((conv.accel(0.0, r, rd).unwrap() - fl.accel(0.0, r, rd).unwrap()).abs() < 1e-15);
        }
        assert!(fl.accel(0.0, 0.0, 1.0).is_err());
        assert!(RadialField::TimeDependent { k2: 1.0 }.accel(0.0, 1.0, 0.0).is_err());
    }

    fn check_against_flight(s: FreeState3, field: RadialField, t0: f64, t1: f64) -> f64 {
        let d = reduce_free_to_radial(&s.at(t0)).unwrap();
        let tr = integrate_rk4(field.rhs(), &[d.r, d.rdot], t0, t1, 1e-3).unwrap();
        tr.times
            .iter()
            .zip(&tr.states)
            .map(|(&t, y)| (y[0] - norm(&s.at(t).r)).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn reduced_fields_track_free_flight() {
        let s = FreeState3::new([1.0, 0.2, -0.3], [0.3, 0.8, 0.1]);
        let d = reduce_free_to_radial(&s).unwrap();
        let fields = [
            RadialField::FixedL { l2: d.l2 },
            RadialField::FixedE { energy: d.energy },
            RadialField::Convex { alpha: 0.3, l2: d.l2, energy: d.energy },
        ];
        for f in fields {
            assert!(check_against_flight(s, f, 0.0, 2.0) < 1e-6, "{f:?}");
        }
    }

    #[test]
    fn time_dependent_constant_is_respected() {
        // The constant is |r − v t|² = |r(0)|² along free flight started at t = 0.
        let s = FreeState3::new([1.0, 0.5, 0.0], [0.2, 0.7, -0.4]);
        let k2 = dot(&s.r, &s.r);
        let err = check_against_flight(s, RadialField::TimeDependent { k2 }, 0.5, 2.5);
        assert!(err < 1e-6, "{err}");
    }
}
