use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Trapezoid rule for `∫_0^{2π} f(φ) dφ` on `n` equispaced nodes.
pub fn quad_periodic(f: impl Fn(f64) -> Complex64, n: usize) -> Result<Complex64> {
    if n < 8 {
        return Err(Error::InvalidResolution(format!(
            "periodic quadrature needs at least 8 nodes, got {n}"
        )));
    }
    let h = TAU / n as f64;
    let sum: Complex64 = (0..n).map(|k| f(k as f64 * h)).sum();
    Ok(sum * h)
}
