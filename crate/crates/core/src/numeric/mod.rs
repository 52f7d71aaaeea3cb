//! Numerical substrate shared by every scenario.

mod bessel;
mod diff;
mod eig;
mod ode;
mod quad;

pub use bessel::{bessel_j, BESSEL_SERIES_LIMIT};
pub use diff::finite_diff;
pub use eig::{eig_sym2_continuous, EigFrame, Sym2, DEGENERACY_GAP};
pub use ode::{integrate_rk4, Integrator, Trajectory};
pub use quad::quad_periodic;

use crate::{Error, Result};
use std::ops::Deref;

/// A vector of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct RealVec(Vec<f64>);

impl RealVec {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "entry {i} is not finite ({})",
                entries[i]
            )));
        }
        Ok(Self(entries))
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub(crate) fn from_finite(entries: Vec<f64>) -> Self {
        debug_assert!(entries.iter().all(|x| x.is_finite()));
        Self(entries)
    }
}

impl Deref for RealVec {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

/// Tolerances used by checks and integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub ode_tol: f64,
    pub symbolic_tol: f64,
    pub quad_tol: f64,
    pub check_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            ode_tol: 1e-8,
            symbolic_tol: 0.0,
            quad_tol: 1e-10,
            check_tol: 1e-6,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("ode_tol", self.ode_tol),
            ("quad_tol", self.quad_tol),
            ("check_tol", self.check_tol),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidArgument(format!("{name} must be positive")));
            }
        }
        if !(self.symbolic_tol >= 0.0 && self.symbolic_tol.is_finite()) {
            return Err(Error::InvalidArgument(
                "symbolic_tol must be non-negative".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realvec_rejects_non_finite() {
        assert!(RealVec::new(vec![1.0, f64::NAN]).is_err());
        assert!(RealVec::new(vec![f64::INFINITY]).is_err());
        assert_eq!(&*RealVec::new(vec![1.0, 2.0]).unwrap(), &[1.0, 2.0]);
    }

    #[test]
    fn default_tolerances_are_valid() {
        let t = ToleranceConfig::default();
        assert_eq!(t.symbolic_tol, 0.0);
        t.validate().unwrap();
        let bad = ToleranceConfig { check_tol: 0.0, ..t };
        assert!(bad.validate().is_err());
    }
}
