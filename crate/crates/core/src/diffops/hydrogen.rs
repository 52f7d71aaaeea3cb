use crate::{Error, Result};

/// `ω(E) = √(−8E)` for a bound energy `E < 0`.
pub fn oscillator_frequency(energy: f64) -> Result<f64> {
    if !(energy < 0.0) {
        return Err(Error::Domain(format!("oscillator frequency needs E < 0, got {energy}")));
    }
    Ok((-8.0 * energy).sqrt())
}

/// `−k² / (2 (m + 1)²)`.
pub fn hydrogen_level(k: f64, m: u32) -> f64 {
    let n = (m + 1) as f64;
    -k * k / (2.0 * n * n)
}

/// Number of eigenvalues below `x` of the symmetric tridiagonal matrix with
/// constant off-diagonal `off`.
fn sturm_count(diag: &[f64], off: f64, x: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0;
    for (i, a) in diag.iter().enumerate() {
        let coupling = if i == 0 { 0.0 } else { off * off / d };
        d = a - x - coupling;
        if d == 0.0 {
            d = -f64::EPSILON * (a.abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `count` levels of `−½u'' − (k/r)u = Eu` with `u(0) = u(r_max) = 0`,
/// discretised on `n` interior points.
pub fn hydrogen_radial_solve(k: f64, r_max: f64, n: usize, count: usize) -> Result<Vec<f64>> {
    if !(r_max > 0.0) {
        return Err(Error::InvalidArgument(format!("r_max must be positive, got {r_max}")));
    }
    if count == 0 || n < 2 * count {
        return Err(Error::InvalidResolution(format!("{n} grid points cannot resolve {count} levels")));
    }
    let h = r_max / (n + 1) as f64;
    let diag: Vec<f64> = (1..=n).map(|i| 1.0 / (h * h) - k / (i as f64 * h)).collect();
    let off = -0.5 / (h * h);
    let lo0 = diag.iter().fold(f64::INFINITY, |m, &d| m.min(d)) - 2.0 * off.abs();
    let hi0 = diag.iter().fold(f64::NEG_INFINITY, |m, &d| m.max(d)) + 2.0 * off.abs();
    Ok((0..count)
        .map(|j| {
            let (mut lo, mut hi) = (lo0, hi0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if sturm_count(&diag, off, mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(hydrogen_level(1.0, 0), -0.5);
        assert_eq!(hydrogen_level(1.0, 1), -0.125);
        assert_eq!(oscillator_frequency(-0.5).unwrap(), 2.0);
        assert!(oscillator_frequency(0.0).is_err());
    }

    #[test]
    fn s_wave_levels() {
        let e = hydrogen_radial_solve(1.0, 60.0, 4000, 3).unwrap();
        assert!((e[0] + 0.5).abs() < 1e-3, "{e:?}");
        assert!((e[1] + 0.125).abs() < 1e-3, "{e:?}");
        assert!((e[2] - hydrogen_level(1.0, 2)).abs() < 2e-3, "{e:?}");
    }

    #[test]
    fn box_levels() {
        let r_max = 10.0;
        let e = hydrogen_radial_solve(0.0, r_max, 4000, 4).unwrap();
        for (j, v) in e.iter().enumerate() {
            let exact = std::f64::consts::PI.powi(2) * ((j + 1) * (j + 1)) as f64 / (2.0 * r_max * r_max);
            assert!((v - exact).abs() < 1e-4 * exact, "{v} vs {exact}");
        }
        assert!(hydrogen_radial_solve(1.0, 60.0, 3, 2).is_err());
    }
}
