//! Fixed-step classical Runge–Kutta integration.

use super::RealVec;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Time-stamped samples of an integrated state together with the largest
/// deviation of every tracked invariant from its initial value.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<RealVec>,
    pub drift: BTreeMap<String, f64>,
}

impl Trajectory {
    pub fn final_state(&self) -> &[f64] {
        self.states.last().expect("trajectory is never empty")
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

type Projection<'a> = Box<dyn Fn(&mut [f64]) + 'a>;
type Invariant<'a> = Box<dyn Fn(f64, &[f64]) -> f64 + 'a>;

/// Configurable RK4 driver: optional constraint projection after each step,
/// invariant tracking and sub-sampling of the stored trajectory.
pub struct Integrator<'a> {
    dt: f64,
    record_every: usize,
    projection: Option<Projection<'a>>,
    invariants: Vec<(String, Invariant<'a>)>,
}

impl<'a> Integrator<'a> {
    pub fn new(dt: f64) -> Self {
        Self {
            dt,
            record_every: 1,
            projection: None,
            invariants: Vec::new(),
        }
    }

    /// Store only every `k`-th step (the final step is always stored).
    pub fn record_every(mut self, k: usize) -> Self {
        self.record_every = k.max(1);
        self
    }

    pub fn project_with(mut self, p: impl Fn(&mut [f64]) + 'a) -> Self {
        self.projection = Some(Box::new(p));
        self
    }

    pub fn track(mut self, name: &str, f: impl Fn(f64, &[f64]) -> f64 + 'a) -> Self {
        self.invariants.push((name.to_string(), Box::new(f)));
        self
    }

    pub fn run<F>(&self, mut field: F, y0: &[f64], t0: f64, t1: f64) -> Result<Trajectory>
    where
        F: FnMut(f64, &[f64], &mut [f64]) -> Result<()>,
    {
        let dt = self.dt;
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidArgument(format!("step {dt} must be positive")));
        }
        if !(t1 > t0) {
            return Err(Error::InvalidArgument(format!(
                "empty time interval [{t0}, {t1}]"
            )));
        }
        let mut y = RealVec::new(y0.to_vec())?.into_inner();
        if let Some(p) = &self.projection {
            p(&mut y);
        }
        let span = t1 - t0;
        let ratio = span / dt;
        let steps = if (ratio.round() - ratio).abs() <= 1e-9 * ratio.max(1.0) {
            ratio.round()
        } else {
            ratio.ceil()
        }
        .max(1.0) as usize;
        let h = span / steps as f64;

        let reference: Vec<f64> = self.invariants.iter().map(|(_, f)| f(t0, &y)).collect();
        let mut drift = vec![0.0_f64; self.invariants.len()];

        let dim = y.len();
        let (mut k1, mut k2, mut k3, mut k4, mut tmp) = (
            vec![0.0; dim],
            vec![0.0; dim],
            vec![0.0; dim],
            vec![0.0; dim],
            vec![0.0; dim],
        );
        let mut times = vec![t0];
        let mut states = vec![RealVec::from_finite(y.clone())];

        for i in 0..steps {
            let t = t0 + i as f64 * h;
            field(t, &y, &mut k1)?;
            for j in 0..dim {
                tmp[j] = y[j] + 0.5 * h * k1[j];
            }
            field(t + 0.5 * h, &tmp, &mut k2)?;
            for j in 0..dim {
                tmp[j] = y[j] + 0.5 * h * k2[j];
            }
            field(t + 0.5 * h, &tmp, &mut k3)?;
            for j in 0..dim {
                tmp[j] = y[j] + h * k3[j];
            }
            field(t + h, &tmp, &mut k4)?;
            for j in 0..dim {
                y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            }
            if let Some(p) = &self.projection {
                p(&mut y);
            }
            let t_next = if i + 1 == steps { t1 } else { t0 + (i + 1) as f64 * h };
            if y.iter().any(|v| !v.is_finite()) {
                return Err(Error::Diverged { t: t_next });
            }
            for (d, ((_, f), r)) in drift.iter_mut().zip(self.invariants.iter().zip(&reference)) {
                *d = d.max((f(t_next, &y) - r).abs());
            }
            if (i + 1) % self.record_every == 0 || i + 1 == steps {
                times.push(t_next);
                states.push(RealVec::from_finite(y.clone()));
            }
        }

        let drift = self
            .invariants
            .iter()
            .zip(drift)
            .map(|((name, _), d)| (name.clone(), d))
            .collect();
        Ok(Trajectory {
            times,
            states,
            drift,
        })
    }
}

/// Integrate `field` from `t0` to `t1` with classical RK4 at fixed step `dt`.
///
/// The number of steps is `ceil((t1 - t0) / dt)`; the step is shrunk
/// uniformly so that the last sample lands exactly on `t1`.
pub fn integrate_rk4<F>(field: F, y0: &[f64], t0: f64, t1: f64, dt: f64) -> Result<Trajectory>
where
    F: FnMut(f64, &[f64], &mut [f64]) -> Result<()>,
{
    Integrator::new(dt).run(field, y0, t0, t1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp_error(dt: f64) -> f64 {
        let tr = integrate_rk4(
            |_, y, dy| {
                dy[0] = y[0];
                Ok(())
            },
            &[1.0],
            0.0,
            1.0,
            dt,
        )
        .unwrap();
        (tr.final_state()[0] - std::f64::consts::E).abs()
    }

    #[test]
    fn constant_field_is_exact() {
        let tr = integrate_rk4(
            |_, _, dy| {
                dy[0] = 0.0;
                Ok(())
            },
            &[3.0],
            0.0,
            1.0,
            0.1,
        )
        .unwrap();
        assert_eq!(tr.final_state(), &[3.0]);
        assert_eq!(*tr.times.last().unwrap(), 1.0);
    }

    #[test]
    fn exponential_growth() {
        assert!(exp_error(1e-3) < 1e-8);
    }

    #[test]
    fn fourth_order_convergence() {
        let ratio = exp_error(0.02) / exp_error(0.01);
        assert!((14.0..=18.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn free_flight() {
        let tr = integrate_rk4(
            |_, y, dy| {
                dy[..3].copy_from_slice(&y[3..]);
                dy[3..].fill(0.0);
                Ok(())
            },
            &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0],
            0.0,
            1.0,
            0.01,
        )
        .unwrap();
        let y = tr.final_state();
        assert!((y[0] - 1.0).abs() < 1e-14 && (y[1] - 1.0).abs() < 1e-14 && y[2] == 0.0);
    }

    #[test]
    fn divergence_reports_time() {
        let err = integrate_rk4(
            |_, y, dy| {
                dy[0] = y[0] * y[0];
                Ok(())
            },
            &[1.0],
            0.0,
            2.0,
            0.01,
        )
        .unwrap_err();
        match err {
            Error::Diverged { t } => assert!(t > 0.9 && t <= 2.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn times_strictly_increasing_and_drift_tracked() {
        let tr = Integrator::new(0.01)
            .record_every(7)
            .track("energy", |_, y| 0.5 * (y[0] * y[0] + y[1] * y[1]))
            .run(
                |_, y, dy| {
                    dy[0] = y[1];
                    dy[1] = -y[0];
                    Ok(())
                },
                &[1.0, 0.0],
                0.0,
                1.0,
            )
            .unwrap();
        assert!(tr.times.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(*tr.times.last().unwrap(), 1.0);
        let d = tr.drift["energy"];
        assert!((0.0..1e-9).contains(&d));
    }

    #[test]
    fn rejects_bad_step() {
        let f = |_: f64, _: &[f64], dy: &mut [f64]| {
            dy[0] = 0.0;
            Ok(())
        };
        assert!(integrate_rk4(f, &[0.0], 0.0, 1.0, 0.0).is_err());
        assert!(integrate_rk4(f, &[0.0], 1.0, 1.0, 0.1).is_err());
    }
}
