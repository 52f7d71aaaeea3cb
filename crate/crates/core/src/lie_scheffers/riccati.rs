use std::sync::Arc;

use crate::numeric::Integrator;
use crate::{Error, Result};

type MatFn = Arc<dyn Fn(f64) -> [[f64; 2]; 2] + Send + Sync>;

/// Linear system `ẋ = A(t) x` on the plane.
#[derive(Clone)]
pub struct LinearSystem2 {
    a: MatFn,
}

impl std::fmt::Debug for LinearSystem2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearSystem2").field("a(0)", &(self.a)(0.0)).finish()
    }
}

impl LinearSystem2 {
    pub fn new(a: impl Fn(f64) -> [[f64; 2]; 2] + Send + Sync + 'static) -> Self {
        Self { a: Arc::new(a) }
    }

    pub fn constant(a: [[f64; 2]; 2]) -> Self {
        Self::new(move |_| a)
    }

    pub fn matrix(&self, t: f64) -> [[f64; 2]; 2] {
        (self.a)(t)
    }

    pub fn field(&self) -> impl Fn(f64, &[f64], &mut [f64]) -> Result<()> + '_ {
        move |t, x, dx| {
            let a = self.matrix(t);
            dx[0] = a[0][0] * x[0] + a[0][1] * x[1];
            dx[1] = a[1][0] * x[0] + a[1][1] * x[1];
            Ok(())
        }
    }
}

/// Coefficients of `ξ̇ = b0 + b1 ξ + b2 ξ²`.
#[derive(Clone)]
pub struct RiccatiCoeffs {
    b: Arc<dyn Fn(f64) -> [f64; 3] + Send + Sync>,
}

impl std::fmt::Debug for RiccatiCoeffs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RiccatiCoeffs").field("b(0)", &(self.b)(0.0)).finish()
    }
}

impl RiccatiCoeffs {
    pub fn new(b: impl Fn(f64) -> [f64; 3] + Send + Sync + 'static) -> Self {
        Self { b: Arc::new(b) }
    }

    /// `[b0, b1, b2]` at time `t`.
    pub fn at(&self, t: f64) -> [f64; 3] {
        (self.b)(t)
    }

    pub fn rhs(&self, t: f64, xi: f64) -> f64 {
        let [b0, b1, b2] = self.at(t);
        b0 + b1 * xi + b2 * xi * xi
    }
}

pub fn riccati_from_linear(sys: &LinearSystem2) -> RiccatiCoeffs {
    let sys = sys.clone();
    RiccatiCoeffs::new(move |t| {
        let a = sys.matrix(t);
        [a[0][1], a[0][0] - a[1][1], -a[1][0]]
    })
}

/// A point of the projective line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProjectivePoint {
    Finite(f64),
    Infinity,
}

impl ProjectivePoint {
    pub fn finite(self) -> Option<f64> {
        match self {
            ProjectivePoint::Finite(x) => Some(x),
            ProjectivePoint::Infinity => None,
        }
    }

    fn homogeneous(self) -> [f64; 2] {
        match self {
            ProjectivePoint::Finite(x) => [x, 1.0],
            ProjectivePoint::Infinity => [1.0, 0.0],
        }
    }

    /// Chordal distance on the projective line (bounded by 1).
    pub fn distance(self, other: ProjectivePoint) -> f64 {
        let [a0, a1] = self.homogeneous();
        let [b0, b1] = other.homogeneous();
        (a0 * b1 - a1 * b0).abs() / (a0.hypot(a1) * b0.hypot(b1))
    }
}

pub fn ratio_project(x: [f64; 2]) -> ProjectivePoint {
    if x[1].abs() < 1e-300 {
        ProjectivePoint::Infinity
    } else {
        ProjectivePoint::Finite(x[0] / x[1])
    }
}

/// Magnitude beyond which the integrator moves to the reciprocal chart.
pub const CHART_SWITCH: f64 = 2.0;

/// Integrate the Riccati equation with RK4 from `xi0` at `t0` to `t1`.
///
/// The state is carried in whichever of the charts `ξ` or `η = 1/ξ` keeps it
/// bounded, so solutions pass through the pole without loss of accuracy.
pub fn integrate_riccati(
    coeffs: &RiccatiCoeffs,
    xi0: ProjectivePoint,
    t0: f64,
    t1: f64,
    dt: f64,
) -> Result<ProjectivePoint> {
    let start = match xi0 {
        ProjectivePoint::Finite(x) if x.abs() <= CHART_SWITCH => [0.0, x],
        ProjectivePoint::Finite(x) => [1.0, 1.0 / x],
        ProjectivePoint::Infinity => [1.0, 0.0],
    };
    let field = |t: f64, s: &[f64], ds: &mut [f64]| {
        let [b0, b1, b2] = coeffs.at(t);
        let v = s[1];
        ds[0] = 0.0;
        ds[1] = if s[0] == 0.0 {
            b0 + b1 * v + b2 * v * v
        } else {
            -(b0 * v * v + b1 * v + b2)
        };
        Ok(())
    };
    let switch = |s: &mut [f64]| {
        if s[1].abs() > CHART_SWITCH {
            s[0] = 1.0 - s[0];
            s[1] = 1.0 / s[1];
        }
    };
    let tr = Integrator::new(dt)
        .record_every(usize::MAX)
        .project_with(switch)
        .run(field, &start, t0, t1)?;
    let s = tr.final_state();
    Ok(if s[0] == 0.0 {
        ProjectivePoint::Finite(s[1])
    } else if s[1] == 0.0 {
        ProjectivePoint::Infinity
    } else {
        ProjectivePoint::Finite(1.0 / s[1])
    })
}

/// `(x − x1)(x2 − x3) / ((x − x2)(x1 − x3))`.
pub fn cross_ratio(x: f64, x1: f64, x2: f64, x3: f64) -> Result<f64> {
    let den = (x - x2) * (x1 - x3);
    if den == 0.0 {
        return Err(Error::Singular(format!(
            "cross ratio denominator vanishes (x = {x}, x1 = {x1}, x2 = {x2}, x3 = {x3})"
        )));
    }
    Ok((x - x1) * (x2 - x3) / den)
}

/// Solve `cross_ratio(x, x1, x2, x3) = k` for `x`.
pub fn riccati_superpose(k: f64, x1: f64, x2: f64, x3: f64) -> Result<f64> {
    // (x − x1) c = k (x − x2) d with c = x2 − x3, d = x1 − x3.
    let c = x2 - x3;
    let d = x1 - x3;
    let lead = c - k * d;
    let scale = c.abs().max((k * d).abs());
    if lead.abs() <= 1e-14 * scale || scale == 0.0 {
        return Err(Error::Singular(format!(
            "superposition is degenerate for K = {k}, x1 = {x1}, x2 = {x2}, x3 = {x3}"
        )));
    }
    Ok((x1 * c - k * x2 * d) / lead)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::integrate_rk4;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rotation() -> LinearSystem2 {
        LinearSystem2::constant([[0.0, 1.0], [-1.0, 0.0]])
    }

    fn flow_linear(sys: &LinearSystem2, x0: [f64; 2], t1: f64) -> [f64; 2] {
        let tr = integrate_rk4(sys.field(), &x0, 0.0, t1, 1e-4).unwrap();
        let s = tr.final_state();
        [s[0], s[1]]
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(riccati_from_linear(&rotation()).at(0.3), [1.0, 0.0, 1.0]);
        let dil = riccati_from_linear(&LinearSystem2::constant([[2.5, 0.0], [0.0, 2.5]]));
        assert_eq!(dil.at(0.0), [0.0, 0.0, 0.0]);
        let hyp = riccati_from_linear(&LinearSystem2::constant([[1.0, 0.0], [0.0, -1.0]]));
        assert_eq!(hyp.at(0.0), [0.0, 2.0, 0.0]);
        let xi = integrate_riccati(&hyp, ProjectivePoint::Finite(0.3), 0.0, 1.0, 1e-4).unwrap();
        assert!((xi.finite().unwrap() - 0.3 * 2f64.exp()).abs() < 1e-10);
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_project([1.0, 2.0]), ProjectivePoint::Finite(0.5));
        assert_eq!(ratio_project([1.0, 0.0]), ProjectivePoint::Infinity);
        assert_eq!(ratio_project([-3.0, -6.0]), ProjectivePoint::Finite(0.5));
    }

    #[test]
    fn cross_ratio_examples() {
        assert_eq!(cross_ratio(1.0, 1.0, 2.0, 3.0).unwrap(), 0.0);
        assert!((cross_ratio(3.0, 1.0, 2.0, 3.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(cross_ratio(2.0, 1.0, 2.0, 3.0).is_err());
        assert!(cross_ratio(0.0, 1.0, 2.0, 1.0).is_err());
        assert_eq!(riccati_superpose(0.0, 1.0, 2.0, 3.0).unwrap(), 1.0);
        assert!((riccati_superpose(1.0, 1.0, 2.0, 3.0).unwrap() - 3.0).abs() < 1e-15);
        assert!(riccati_superpose(1.0, 1.0, 1.0, 3.0).is_err());
        let k = cross_ratio(0.37, -1.2, 2.5, 4.0).unwrap();
        assert!((riccati_superpose(k, -1.2, 2.5, 4.0).unwrap() - 0.37).abs() < 1e-12);
    }

    #[test]
    fn rotation_solutions_cross_the_pole() {
        // ξ = tan(t + c): starting at ξ = 1 the pole is at t = π/4.
        let c = riccati_from_linear(&rotation());
        let xi = integrate_riccati(&c, ProjectivePoint::Finite(1.0), 0.0, 1.0, 1e-4).unwrap();
        assert!((xi.finite().unwrap() - (1.0 + std::f64::consts::FRAC_PI_4).tan()).abs() < 1e-9);
        let at_pole = integrate_riccati(&c, ProjectivePoint::Finite(0.0), 0.0, std::f64::consts::FRAC_PI_2, 1e-4).unwrap();
        assert!(at_pole.distance(ProjectivePoint::Infinity) < 1e-12);
    }

    #[test]
    fn cross_ratio_is_invariant_along_rotation_flow() {
        let c = riccati_from_linear(&rotation());
        let xs0 = [-0.7, 0.1, 0.9, 3.0];
        let xs1: Vec<f64> = xs0
            .iter()
            .map(|&x| integrate_riccati(&c, ProjectivePoint::Finite(x), 0.0, 1.0, 1e-4).unwrap().finite().unwrap())
            .collect();
        let k0 = cross_ratio(xs0[0], xs0[1], xs0[2], xs0[3]).unwrap();
        let k1 = cross_ratio(xs1[0], xs1[1], xs1[2], xs1[3]).unwrap();
        assert!((k0 - k1).abs() < 1e-6);
        let rebuilt = riccati_superpose(k0, xs1[1], xs1[2], xs1[3]).unwrap();
        assert!((rebuilt - xs1[0]).abs() < 1e-6);
    }

    fn projection_commutes(sys: &LinearSystem2, x0: [f64; 2]) -> Option<f64> {
        let c = riccati_from_linear(sys);
        let mut worst = 0.0_f64;
        for &t in &[0.25, 0.5, 0.75, 1.0] {
            let lin = flow_linear(sys, x0, t);
            if lin[1].abs() < 1e-3 * lin[0].abs() {
                return None;
            }
            let xi = integrate_riccati(&c, ratio_project(x0), 0.0, t, 1e-4).unwrap();
            worst = worst.max(xi.distance(ratio_project(lin)));
        }
        Some(worst)
    }

    #[test]
    fn reduction_commutes_with_integration() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut tested = 0;
        for _ in 0..50 {
            let a: [[f64; 2]; 2] = [[rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)], [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]];
            let x0 = [rng.gen_range(-1.0..1.0), rng.gen_range(0.2..1.0)];
            if let Some(err) = projection_commutes(&LinearSystem2::constant(a), x0) {
                assert!(err < 1e-6, "{err}");
                tested += 1;
            }
        }
        for _ in 0..20 {
            let amp: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            let w: f64 = rng.gen_range(0.5..3.0);
            let sys = LinearSystem2::new(move |t| {
                let s = (w * t).sin();
                [[amp[0] * s, amp[1]], [amp[2], amp[3] * (w * t).cos()]]
            });
            let x0 = [rng.gen_range(-1.0..1.0), rng.gen_range(0.2..1.0)];
            if let Some(err) = projection_commutes(&sys, x0) {
                assert!(err < 1e-6, "{err}");
                tested += 1;
            }
        }
        assert!(tested >= 60);
    }

    proptest! {
        #[test]
        fn superpose_inverts_cross_ratio(
            x in -10.0..10.0f64, x1 in -10.0..10.0f64, x2 in -10.0..10.0f64, x3 in -10.0..10.0f64,
        ) {
            prop_assume!((x - x2).abs() > 1e-2 && (x1 - x3).abs() > 1e-2 && (x2 - x3).abs() > 1e-2);
            prop_assume!((x1 - x2).abs() > 1e-2);
            let k = cross_ratio(x, x1, x2, x3).unwrap();
            let back = riccati_superpose(k, x1, x2, x3).unwrap();
            prop_assert!((back - x).abs() < 1e-12 * (1.0 + x.abs()) * 1e3);
        }

        #[test]
        fn ratio_is_dilation_invariant(a in -5.0..5.0f64, b in 0.1..5.0f64, c in 0.1..10.0f64) {
            let p = ratio_project([a, b]).finite().unwrap();
            let q = ratio_project([c * a, c * b]).finite().unwrap();
            prop_assert!((p - q).abs() <= 1e-15 * (1.0 + p.abs()));
        }
    }
}
