//! Constrained motion on spheres: the `TS³` system, its Hopf projection to
//! the spherical pendulum on `TS²`, and tangency of vector fields to `TS²`.

use super::{dot, V3};
use crate::{Error, Result};

type V4 = [f64; 4];

fn dot4(a: &V4, b: &V4) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Point of `T*R⁴` restricted to `|y| = 1`, `y·p = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TS3Point {
    pub y: V4,
    pub p: V4,
}

impl TS3Point {
    pub fn new(y: V4, p: V4, tol: f64) -> Result<Self> {
        let violation = (dot4(&y, &y) - 1.0).abs().max(dot4(&y, &p).abs());
        if violation > tol {
            return Err(Error::InvalidPoint { violation });
        }
        Ok(Self { y, p })
    }

    pub fn from_slice(s: &[f64]) -> Self {
        Self {
            y: [s[0], s[1], s[2], s[3]],
            p: [s[4], s[5], s[6], s[7]],
        }
    }

    pub fn to_array(&self) -> [f64; 8] {
        let mut a = [0.0; 8];
        a[..4].copy_from_slice(&self.y);
        a[4..].copy_from_slice(&self.p);
        a
    }
}

const POTENTIAL_SIGNS: V4 = [1.0, -1.0, -1.0, 1.0];

fn potential(y: &V4) -> f64 {
    let n: f64 = (0..4).map(|i| POTENTIAL_SIGNS[i] * y[i] * y[i]).sum();
    0.5 * n / dot4(y, y)
}

/// `½ (p·p)(y·y) + ½ (y0² + y3² − y1² − y2²)/(y·y)`.
pub fn ts3_energy(y: &V4, p: &V4) -> f64 {
    0.5 * dot4(p, p) * dot4(y, y) + potential(y)
}

/// Hamilton equations of [`ts3_energy`] on `(y, p)`.
pub fn ts3_hamiltonian_field() -> impl Fn(f64, &[f64], &mut [f64]) -> Result<()> {
    |_, s, ds| {
        let y = [s[0], s[1], s[2], s[3]];
        let p = [s[4], s[5], s[6], s[7]];
        let yy = dot4(&y, &y);
        if yy == 0.0 {
            return Err(Error::Domain("TS3 field at y = 0".into()));
        }
        let pp = dot4(&p, &p);
        let n: f64 = (0..4).map(|i| POTENTIAL_SIGNS[i] * y[i] * y[i]).sum();
        for i in 0..4 {
            ds[i] = yy * p[i];
            let grad_v = POTENTIAL_SIGNS[i] * y[i] / yy - n * y[i] / (yy * yy);
            ds[4 + i] = -pp * y[i] - grad_v;
        }
        Ok(())
    }
}

/// Pull a state back onto the constraint set: normalise `y`, then remove the
/// component of `p` along `y`.
pub fn ts3_project(s: &mut [f64]) {
    let n = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3]).sqrt();
    for v in &mut s[..4] {
        *v /= n;
    }
    let yp: f64 = (0..4).map(|i| s[i] * s[4 + i]).sum();
    for i in 0..4 {
        s[4 + i] -= yp * s[i];
    }
}

/// Momentum of the fiber rotation, `y0 p3 − p0 y3 + y1 p2 − y2 p1`.
pub fn sigma_k(y: &V4, p: &V4) -> f64 {
    y[0] * p[3] - p[0] * y[3] + y[1] * p[2] - y[2] * p[1]
}

/// Flow of the fiber field `y0∂y3 − y3∂y0 + y1∂y2 − y2∂y1` (and the same
/// pattern on `p`) for parameter `s`.
pub fn fiber_flow(pt: &TS3Point, s: f64) -> TS3Point {
    let (sn, cs) = s.sin_cos();
    let rot = |v: &V4| -> V4 {
        [
            v[0] * cs - v[3] * sn,
            v[1] * cs - v[2] * sn,
            v[2] * cs + v[1] * sn,
            v[3] * cs + v[0] * sn,
        ]
    };
    TS3Point {
        y: rot(&pt.y),
        p: rot(&pt.p),
    }
}

fn hopf_point(y: &V4) -> V3 {
    [
        2.0 * (y[1] * y[3] - y[0] * y[2]),
        2.0 * (y[2] * y[3] + y[0] * y[1]),
        y[0] * y[0] + y[3] * y[3] - y[1] * y[1] - y[2] * y[2],
    ]
}

/// Tangent map of the Hopf projection applied to `ydot`.
pub fn hopf_velocity(y: &V4, ydot: &V4) -> V3 {
    let rows: [V4; 3] = [
        [-y[2], y[3], -y[0], y[1]],
        [y[1], y[0], y[3], y[2]],
        [y[0], -y[1], -y[2], y[3]],
    ];
    [
        2.0 * dot4(&rows[0], ydot),
        2.0 * dot4(&rows[1], ydot),
        2.0 * dot4(&rows[2], ydot),
    ]
}

/// Project a `TS³` point to `TS²`; the velocity is the image of `ẏ = (y·y) p`.
pub fn hopf_project(pt: &TS3Point, tol: f64) -> Result<TS2State> {
    let TS3Point { y, p } = *pt;
    let violation = (dot4(&y, &y) - 1.0).abs().max(dot4(&y, &p).abs());
    if violation > tol {
        return Err(Error::InvalidPoint { violation });
    }
    let yy = dot4(&y, &y);
    let ydot = [yy * p[0], yy * p[1], yy * p[2], yy * p[3]];
    Ok(TS2State {
        x: hopf_point(&y),
        v: hopf_velocity(&y, &ydot),
    })
}

/// Point of `TS²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TS2State {
    pub x: V3,
    pub v: V3,
}

impl TS2State {
    pub fn new(x: V3, v: V3, tol: f64) -> Result<Self> {
        let s = Self { x, v };
        let violation = s.violation();
        if violation > tol {
            return Err(Error::InvalidPoint { violation });
        }
        Ok(s)
    }

    pub fn violation(&self) -> f64 {
        (dot(&self.x, &self.x) - 1.0).abs().max(dot(&self.x, &self.v).abs())
    }
}

/// Spherical pendulum with gravitational acceleration `gravity` along `−e₃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPendulum {
    pub gravity: f64,
    /// Largest constraint violation accepted by the field evaluator.
    pub constraint_tol: f64,
}

impl Default for SphericalPendulum {
    fn default() -> Self {
        Self {
            gravity: 1.0,
            constraint_tol: 1e-3,
        }
    }
}

impl SphericalPendulum {
    pub fn with_gravity(gravity: f64) -> Self {
        Self {
            gravity,
            ..Self::default()
        }
    }

    /// `ẍ = −g (e₃ − x₃ x) − |v|² x`.
    pub fn accel(&self, x: &V3, v: &V3) -> Result<V3> {
        let violation = TS2State { x: *x, v: *v }.violation();
        if violation > self.constraint_tol {
            return Err(Error::InvalidPoint { violation });
        }
        let vv = dot(v, v);
        let g = self.gravity;
        Ok([
            g * x[2] * x[0] - vv * x[0],
            g * x[2] * x[1] - vv * x[1],
            -g + g * x[2] * x[2] - vv * x[2],
        ])
    }

    pub fn field(self) -> impl Fn(f64, &[f64], &mut [f64]) -> Result<()> {
        move |_, s, ds| {
            let a = self.accel(&[s[0], s[1], s[2]], &[s[3], s[4], s[5]])?;
            ds[..3].copy_from_slice(&s[3..6]);
            ds[3..6].copy_from_slice(&a);
            Ok(())
        }
    }

    /// Renormalise `x` and remove the radial part of `v`.
    pub fn project(s: &mut [f64]) {
        let n = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
        for v in &mut s[..3] {
            *v /= n;
        }
        let xv = s[0] * s[3] + s[1] * s[4] + s[2] * s[5];
        for i in 0..3 {
            s[3 + i] -= xv * s[i];
        }
    }
}

/// Energy-momentum map `(½|v|² + g x₃, x₁v₂ − x₂v₁)`.
pub fn energy_momentum_map(s: &TS2State, gravity: f64) -> (f64, f64) {
    (
        0.5 * dot(&s.v, &s.v) + gravity * s.x[2],
        s.x[0] * s.v[1] - s.x[1] * s.v[0],
    )
}

/// A constraint function on `TR³` with its gradient in `(x, v)`.
#[derive(Clone, Copy)]
pub struct Constraint {
    pub name: &'static str,
    pub value: fn(&V3, &V3) -> f64,
    pub grad: fn(&V3, &V3) -> (V3, V3),
}

/// The two functions cutting out `TS²`: `x·x − 1` and `x·v`.
pub fn ts2_constraints() -> [Constraint; 2] {
    [
        Constraint {
            name: "sphere",
            value: |x, _| dot(x, x) - 1.0,
            grad: |x, _| ([2.0 * x[0], 2.0 * x[1], 2.0 * x[2]], [0.0; 3]),
        },
        Constraint {
            name: "tangent",
            value: |x, v| dot(x, v),
            grad: |x, v| (*v, *x),
        },
    ]
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Rotation generator `R_l = ε_{jkl}(x_j ∂x_k + v_j ∂v_k)` (`l` in 0..3).
pub fn rotation_generator(l: usize) -> impl Fn(&V3, &V3) -> (V3, V3) {
    move |x, v| {
        let mut dx = [0.0; 3];
        let mut dv = [0.0; 3];
        for k in 0..3 {
            for j in 0..3 {
                let e = levi_civita(j, k, l);
                dx[k] += e * x[j];
                dv[k] += e * v[j];
            }
        }
        (dx, dv)
    }
}

/// Generator `V_l = ε_{lij} x_j ∂v_i` (`l` in 0..3).
pub fn boost_generator(l: usize) -> impl Fn(&V3, &V3) -> (V3, V3) {
    move |x, _| {
        let mut dv = [0.0; 3];
        for i in 0..3 {
            for j in 0..3 {
                dv[i] += levi_civita(l, i, j) * x[j];
            }
        }
        ([0.0; 3], dv)
    }
}

/// Largest `|L_X f|` over the sample points and constraints.
pub fn tangency_check(
    field: &dyn Fn(&V3, &V3) -> (V3, V3),
    constraints: &[Constraint],
    samples: &[(V3, V3)],
) -> f64 {
    let mut worst = 0.0_f64;
    for (x, v) in samples {
        let (dx, dv) = field(x, v);
        for c in constraints {
            let (gx, gv) = (c.grad)(x, v);
            worst = worst.max((dot(&gx, &dx) + dot(&gv, &dv)).abs());
        }
    }
    worst
}
