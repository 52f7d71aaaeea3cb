use crate::numeric::{bessel_j, quad_periodic};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// `|∫_0^{2π} e^{imφ} e^{iPQ cos φ} dφ - 2π i^m J_m(PQ)|` using `n` nodes.
pub fn bessel_sector_identity(m: u32, p: f64, q: f64, n: usize) -> Result<f64> {
    let z = p * q;
    let lhs = quad_periodic(|phi| Complex64::from_polar(1.0, m as f64 * phi + z * phi.cos()), n)?;
    let rhs = Complex64::i().powu(m) * TAU * bessel_j(m, z);
    Ok((lhs - rhs).norm())
}

/// Free propagator of the planar particle restricted to angular momentum `m`:
/// `√(Q_t Q_0) (-i)^m e^{i(Q_t² + Q_0²)/2t} J_m(Q_t Q_0 / t) / (it)`.
pub fn sector_propagator(m: u32, q_t: f64, q_0: f64, t: f64) -> Result<Complex64> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::Domain(format!("propagator needs finite nonzero time, got {t}")));
    }
    if q_t < 0.0 || q_0 < 0.0 {
        return Err(Error::Domain("radial coordinates must be nonnegative".into()));
    }
    let phase = Complex64::from_polar(1.0, (q_t * q_t + q_0 * q_0) / (2.0 * t));
    let pref = (q_t * q_0).sqrt() * (-Complex64::i()).powu(m) / Complex64::new(0.0, t);
    Ok(pref * phase * bessel_j(m, q_t * q_0 / t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn free_kernel(r2: f64, t: f64) -> Complex64 {
        Complex64::from_polar(1.0, r2 / (2.0 * t)) / Complex64::new(0.0, TAU * t)
    }

    fn simpson(f: impl Fn(f64) -> Complex64, a: f64, b: f64, n: usize) -> Complex64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for k in 1..n {
            let w = if k % 2 == 1 { 4.0 } else { 2.0 };
            s += f(a + k as f64 * h) * w;
        }
        s * (h / 3.0)
    }

    #[test]
    fn identity_trivial_and_generic() {
        assert_eq!(bessel_sector_identity(0, 0.0, 3.0, 64).unwrap(), 0.0);
        assert!(bessel_sector_identity(3, 1.0, 5.0, 256).unwrap() < 1e-8);
        assert!(bessel_sector_identity(1, 2.0, 1.1, 256).unwrap() < 1e-12);
    }

    #[test]
    fn propagator_is_angular_projection_of_free_kernel() {
        let (m, qt, q0, t) = (1u32, 1.0, 1.5, 0.7);
        let oracle = simpson(
            |phi| {
                let r2 = qt * qt + q0 * q0 - 2.0 * qt * q0 * phi.cos();
                Complex64::from_polar(1.0, -(m as f64) * phi) * free_kernel(r2, t)
            },
            0.0,
            2.0 * PI,
            2000,
        ) * (qt * q0).sqrt();
        let k = sector_propagator(m, qt, q0, t).unwrap();
        assert!((k - oracle).norm() < 1e-6, "{k} vs {oracle}");
    }

    #[test]
    fn zero_time_rejected() {
        assert!(matches!(sector_propagator(0, 1.0, 1.0, 0.0), Err(Error::Domain(_))));
    }
}
