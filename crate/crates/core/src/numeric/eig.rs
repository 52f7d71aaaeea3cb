use std::f64::consts::FRAC_PI_2;

/// Eigenvalue gap below which the rotation angle is taken from the previous
/// frame instead of being recomputed.
pub const DEGENERACY_GAP: f64 = 1e-10;

/// Real symmetric 2x2 matrix `[[a, b], [b, c]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sym2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Sym2 {
    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    /// Build from coordinates `(x1, x2, x3)` where the off-diagonal entry is
    /// `x2 / sqrt(2)`.
    pub fn from_coords(x1: f64, x2: f64, x3: f64) -> Self {
        Self::new(x1, x2 / std::f64::consts::SQRT_2, x3)
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.a, self.b * std::f64::consts::SQRT_2, self.c]
    }

    pub fn diag(q1: f64, q2: f64) -> Self {
        Self::new(q1, 0.0, q2)
    }

    pub fn add(&self, o: &Sym2) -> Sym2 {
        Sym2::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }

    pub fn scale(&self, s: f64) -> Sym2 {
        Sym2::new(self.a * s, self.b * s, self.c * s)
    }

    pub fn trace(&self) -> f64 {
        self.a + self.c
    }

    pub fn to_array(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.b, self.c]]
    }

    /// `G(φ) Q G(φ)^{-1}` with `G = [[cos φ, sin φ], [−sin φ, cos φ]]`.
    pub fn from_frame(q1: f64, q2: f64, phi: f64) -> Sym2 {
        let (s, c) = phi.sin_cos();
        Sym2::new(
            q1 * c * c + q2 * s * s,
            (q2 - q1) * s * c,
            q1 * s * s + q2 * c * c,
        )
    }

    /// `G(φ)^{-1} X G(φ)`.
    pub fn rotate_into(&self, phi: f64) -> Sym2 {
        let (s, c) = phi.sin_cos();
        Sym2::new(
            c * c * self.a - 2.0 * s * c * self.b + s * s * self.c,
            s * c * (self.a - self.c) + (c * c - s * s) * self.b,
            s * s * self.a + 2.0 * s * c * self.b + c * c * self.c,
        )
    }
}

/// Diagonal frame `X = G(φ) diag(q1, q2) G(φ)^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigFrame {
    pub q1: f64,
    pub q2: f64,
    pub phi: f64,
    pub degenerate: bool,
}

/// Eigen-decomposition of a symmetric 2x2 matrix that follows a previous
/// frame continuously when one is supplied.
pub fn eig_sym2_continuous(x: &Sym2, prev: Option<&EigFrame>) -> EigFrame {
    let gap = (x.c - x.a).hypot(2.0 * x.b);
    if gap < DEGENERACY_GAP {
        let phi = prev.map_or(0.0, |p| p.phi);
        let d = x.rotate_into(phi);
        return EigFrame {
            q1: d.a,
            q2: d.c,
            phi,
            degenerate: true,
        };
    }
    let mean = 0.5 * x.trace();
    let phi0 = 0.5 * (2.0 * x.b).atan2(x.c - x.a);
    let k = prev.map_or(0.0, |p| ((p.phi - phi0) / FRAC_PI_2).round());
    let (q1, q2) = if (k as i64).rem_euclid(2) == 0 {
        (mean - 0.5 * gap, mean + 0.5 * gap)
    } else {
        (mean + 0.5 * gap, mean - 0.5 * gap)
    };
    EigFrame {
        q1,
        q2,
        phi: phi0 + k * FRAC_PI_2,
        degenerate: false,
    }
}
