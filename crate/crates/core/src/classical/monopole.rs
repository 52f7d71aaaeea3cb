use super::{cross, norm, V3};
use crate::{Error, Result};

/// Charged particle of mass `m` moving around a magnetic monopole of
/// strength `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonopoleState {
    pub r: V3,
    pub v: V3,
    pub k: f64,
    pub m: f64,
}

/// Equations of motion on `(r, v)`: `r̈ = (k/m) (r × v) / |r|³`.
///
/// This orientation of the Lorentz force is the one that keeps
/// [`monopole_invariant`] constant.
pub fn monopole_field(k: f64, m: f64) -> impl Fn(f64, &[f64], &mut [f64]) -> Result<()> {
    move |_, y, dy| {
        let r = [y[0], y[1], y[2]];
        let v = [y[3], y[4], y[5]];
        let rn = norm(&r);
        if rn == 0.0 {
            return Err(Error::Domain("monopole field at the origin".into()));
        }
        let f = cross(&r, &v);
        let s = k / (m * rn * rn * rn);
        dy[..3].copy_from_slice(&v);
        for i in 0..3 {
            dy[3 + i] = s * f[i];
        }
        Ok(())
    }
}

/// Conserved vector `J = m r × v + k r/|r|`.
pub fn monopole_invariant(s: &MonopoleState) -> Result<V3> {
    let rn = norm(&s.r);
    if rn == 0.0 {
        return Err(Error::Domain("monopole invariant at the origin".into()));
    }
    let l = cross(&s.r, &s.v);
    Ok([
        s.m * l[0] + s.k * s.r[0] / rn,
        s.m * l[1] + s.k * s.r[1] / rn,
        s.m * l[2] + s.k * s.r[2] / rn,
    ])
}
