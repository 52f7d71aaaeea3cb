use crate::{Error, Result};

/// Samples of a function on a uniform grid of `[x_min, x_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub values: Vec<f64>,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, values: Vec<f64>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::InvalidResolution(format!("grid needs at least 3 points, got {}", values.len())));
        }
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::InvalidArgument(format!("bad grid interval [{x_min}, {x_max}]")));
        }
        Ok(Self { x_min, x_max, values })
    }

    pub fn from_fn(x_min: f64, x_max: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let dx = (x_max - x_min) / (n.max(2) - 1) as f64;
        Self::new(x_min, x_max, (0..n).map(|i| f(x_min + i as f64 * dx)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.len() - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (self.x(i), v))
    }

    fn with_values(&self, values: Vec<f64>) -> Self {
        Self { x_min: self.x_min, x_max: self.x_max, values }
    }

    fn check_same(&self, other: &Grid1D) -> Result<()> {
        if self.len() != other.len() || self.x_min != other.x_min || self.x_max != other.x_max {
            return Err(Error::GridMismatch(format!(
                "[{}, {}; {}] vs [{}, {}; {}]",
                self.x_min,
                self.x_max,
                self.len(),
                other.x_min,
                other.x_max,
                other.len()
            )));
        }
        Ok(())
    }
}

/// Explicit stepping of `u_t = (k/2) u_xx` with fixed boundary values.
pub fn heat_evolve(u0: &Grid1D, k: f64, dt: f64, steps: usize) -> Result<Grid1D> {
    if !(k > 0.0) {
        return Err(Error::InvalidArgument(format!("diffusion constant must be positive, got {k}")));
    }
    let dx = u0.dx();
    let limit = dx * dx / k;
    if !(dt > 0.0) || dt > limit {
        return Err(Error::Unstable { dt, limit });
    }
    let lambda = 0.5 * k * dt / (dx * dx);
    let mut u = u0.values.clone();
    let mut next = u.clone();
    let n = u.len();
    for _ in 0..steps {
        for i in 1..n - 1 {
            next[i] = u[i] + lambda * (u[i + 1] - 2.0 * u[i] + u[i - 1]);
        }
        std::mem::swap(&mut u, &mut next);
    }
    Ok(u0.with_values(u))
}

/// `w = −k log u`.
pub fn cole_hopf(u: &Grid1D, k: f64) -> Result<Grid1D> {
    if let Some((x, v)) = u.points().find(|&(_, v)| !(v > 0.0)) {
        return Err(Error::Domain(format!("Cole-Hopf needs u > 0, found u({x}) = {v}")));
    }
    Ok(u.with_values(u.values.iter().map(|v| -k * v.ln()).collect()))
}

/// `u = exp(−w/k)`.
pub fn inverse_cole_hopf(w: &Grid1D, k: f64) -> Grid1D {
    w.with_values(w.values.iter().map(|v| (-v / k).exp()).collect())
}

/// Max-norm over interior points of the discretised
/// `w_t + ½ w_x² − (k/2) w_xx`, with a forward difference in time and the
/// spatial terms averaged over the two time levels.
pub fn burgers_residual(w_t0: &Grid1D, w_t1: &Grid1D, k: f64, dt: f64) -> Result<f64> {
    w_t0.check_same(w_t1)?;
    if !(dt > 0.0) {
        return Err(Error::InvalidArgument(format!("time step must be positive, got {dt}")));
    }
    let h = w_t0.dx();
    let spatial = |w: &[f64], i: usize| {
        let wx = (w[i + 1] - w[i - 1]) / (2.0 * h);
        let wxx = (w[i + 1] - 2.0 * w[i] + w[i - 1]) / (h * h);
        0.5 * wx * wx - 0.5 * k * wxx
    };
    let (a, b) = (&w_t0.values, &w_t1.values);
    Ok((1..a.len() - 1)
        .map(|i| ((b[i] - a[i]) / dt + 0.5 * (spatial(a, i) + spatial(b, i))).abs())
        .fold(0.0, f64::max))
}

/// `−k log(exp(−(w1 + l1)/k) + exp(−(w2 + l2)/k))`, evaluated without overflow.
pub fn burgers_superpose(w1: &Grid1D, w2: &Grid1D, l1: f64, l2: f64, k: f64) -> Result<Grid1D> {
    w1.check_same(w2)?;
    if !(k > 0.0) {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    let values = w1
        .values
        .iter()
        .zip(&w2.values)
        .map(|(a, b)| {
            let ea = (a + l1) / k;
            let eb = (b + l2) / k;
            let (lo, hi) = if ea <= eb { (ea, eb) } else { (eb, ea) };
            k * (lo - (lo - hi).exp().ln_1p())
        })
        .collect();
    Ok(w1.with_values(values))
}
