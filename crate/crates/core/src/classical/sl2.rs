use super::{dot, V3};

/// Point of the `sl(2,R)` function group `(ξ1, ξ2, ξ3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SL2Point {
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

impl SL2Point {
    pub fn new(xi1: f64, xi2: f64, xi3: f64) -> Self {
        Self { xi1, xi2, xi3 }
    }

    /// The flow invariant `2 ξ1 ξ2 − ξ3²`.
    pub fn casimir(&self) -> f64 {
        2.0 * self.xi1 * self.xi2 - self.xi3 * self.xi3
    }
}

pub fn sl2_lift(r: &V3, p: &V3) -> SL2Point {
    SL2Point::new(0.5 * dot(r, r), dot(p, p), dot(r, p))
}

/// A function on `T*R³` with analytic gradients.
pub trait PhaseFunction {
    fn value(&self, r: &V3, p: &V3) -> f64;
    fn grad_r(&self, r: &V3, p: &V3) -> V3;
    fn grad_p(&self, r: &V3, p: &V3) -> V3;
}

/// The three quadratic generators of the function group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Xi {
    One,
    Two,
    Three,
}

impl PhaseFunction for Xi {
    fn value(&self, r: &V3, p: &V3) -> f64 {
        let s = sl2_lift(r, p);
        match self {
            Xi::One => s.xi1,
            Xi::Two => s.xi2,
            Xi::Three => s.xi3,
        }
    }

    fn grad_r(&self, r: &V3, p: &V3) -> V3 {
        match self {
            Xi::One => *r,
            Xi::Two => [0.0; 3],
            Xi::Three => *p,
        }
    }

    fn grad_p(&self, r: &V3, p: &V3) -> V3 {
        match self {
            Xi::One => [0.0; 3],
            Xi::Two => [2.0 * p[0], 2.0 * p[1], 2.0 * p[2]],
            Xi::Three => *r,
        }
    }
}

/// Canonical bracket normalised by `{p_a, x^b} = δ_a^b`:
/// `{f, g} = Σ_a (∂f/∂p_a ∂g/∂x_a − ∂f/∂x_a ∂g/∂p_a)`.
pub fn canonical_poisson(f: &dyn PhaseFunction, g: &dyn PhaseFunction, r: &V3, p: &V3) -> f64 {
    dot(&f.grad_p(r, p), &g.grad_r(r, p)) - dot(&f.grad_r(r, p), &g.grad_p(r, p))
}

/// Closed-form flow of `ξ̇1 = ξ3`, `ξ̇3 = ξ2`, `ξ̇2 = 0`.
pub fn sl2_flow(p0: &SL2Point, t: f64) -> SL2Point {
    SL2Point::new(
        p0.xi1 + p0.xi3 * t + 0.5 * p0.xi2 * t * t,
        p0.xi2,
        p0.xi3 + p0.xi2 * t,
    )
}

/// Rotation `(η̇1, ξ̇3) = (2ξ3, −2η1)`.
pub fn oscillator_reduced_flow(eta1: f64, xi3: f64, t: f64) -> (f64, f64) {
    let (s, c) = (2.0 * t).sin_cos();
    (eta1 * c + xi3 * s, -eta1 * s + xi3 * c)
}
