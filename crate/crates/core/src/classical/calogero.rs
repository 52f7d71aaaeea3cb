use crate::numeric::{eig_sym2_continuous, EigFrame, Sym2};
use crate::{Error, Result};

/// Free motion of a symmetric 2x2 matrix: position `x` and velocity `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatFreeState {
    pub x: Sym2,
    pub v: Sym2,
}

impl MatFreeState {
    pub fn new(x: Sym2, v: Sym2) -> Self {
        Self { x, v }
    }

    /// The `(1,2)` entry `m` of `[X, V] = m σ`, with `σ = [[0, 1], [−1, 0]]`.
    pub fn commutator_entry(&self) -> f64 {
        let (x, v) = (&self.x, &self.v);
        v.b * (x.a - x.c) - x.b * (v.a - v.c)
    }
}

/// Exact flight `X(t) = X0 + t V0`.
pub fn matrix_flight(s: &MatFreeState, t: f64) -> MatFreeState {
    MatFreeState::new(s.x.add(&s.v.scale(t)), s.v)
}

/// Two-body Calogero state with coupling `l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalogeroState {
    pub q1: f64,
    pub q2: f64,
    pub p1: f64,
    pub p2: f64,
    pub l: f64,
    pub phi: f64,
}

impl CalogeroState {
    pub fn coords(&self) -> [f64; 4] {
        [self.q1, self.q2, self.p1, self.p2]
    }

    pub fn frame(&self) -> EigFrame {
        EigFrame {
            q1: self.q1,
            q2: self.q2,
            phi: self.phi,
            degenerate: false,
        }
    }
}

pub fn calogero_reduce(s: &MatFreeState) -> Result<CalogeroState> {
    calogero_reduce_from(s, None)
}

/// Reduction that follows the eigenframe `prev` continuously.
pub fn calogero_reduce_from(s: &MatFreeState, prev: Option<&EigFrame>) -> Result<CalogeroState> {
    let f = eig_sym2_continuous(&s.x, prev);
    if f.degenerate {
        return Err(Error::DegenerateEigenvalues {
            gap: (f.q2 - f.q1).abs(),
        });
    }
    let w = s.v.rotate_into(f.phi);
    let d = f.q2 - f.q1;
    let phidot = w.b / d;
    Ok(CalogeroState {
        q1: f.q1,
        q2: f.q2,
        p1: w.a,
        p2: w.c,
        l: phidot * d * d,
        phi: f.phi,
    })
}

/// Calogero equations `q̈1 = −2l²/(q2−q1)³`, `q̈2 = 2l²/(q2−q1)³` on
/// `(q1, q2, p1, p2)`.
pub fn calogero_field(l: f64) -> impl Fn(f64, &[f64], &mut [f64]) -> Result<()> {
    move |_, y, dy| {
        let d = y[1] - y[0];
        if d.abs() < 1e-12 {
            return Err(Error::Singular(format!("particle collision, gap {d:e}")));
        }
        let f = 2.0 * l * l / (d * d * d);
        dy[0] = y[2];
        dy[1] = y[3];
        dy[2] = -f;
        dy[3] = f;
        Ok(())
    }
}

/// Hamilton principal function `Tr((Xt − X0)²) / (2t)`.
pub fn hj_action(xt: &Sym2, x0: &Sym2, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Err(Error::Domain("action needs t != 0".into()));
    }
    let d = xt.add(&x0.scale(-1.0));
    Ok((d.a * d.a + 2.0 * d.b * d.b + d.c * d.c) / (2.0 * t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{finite_diff, integrate_rk4};

    #[test]
    fn reduce_examples() {
        let s = MatFreeState::new(Sym2::diag(0.0, 1.0), Sym2::diag(1.0, -1.0));
        let c = calogero_reduce(&s).unwrap();
        assert_eq!(c.coords(), [0.0, 1.0, 1.0, -1.0]);
        assert_eq!(c.l, 0.0);

        let s = MatFreeState::new(Sym2::diag(0.0, 1.0), Sym2::new(0.0, 1.0, 0.0));
        let c = calogero_reduce(&s).unwrap();
        assert_eq!(c.coords(), [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(c.l.abs(), 1.0);

        let scaled = MatFreeState::new(s.x, s.v.scale(2.5));
        assert!((calogero_reduce(&scaled).unwrap().l - 2.5 * c.l).abs() < 1e-15);

        assert!(calogero_reduce(&MatFreeState::new(Sym2::diag(1.0, 1.0), s.v)).is_err());
    }

    #[test]
    fn field_examples() {
        let mut dy = [0.0; 4];
        calogero_field(1.0)(0.0, &[0.0, 1.0, 0.0, 0.0], &mut dy).unwrap();
        assert_eq!(&dy[2..], &[-2.0, 2.0]);
        calogero_field(0.0)(0.0, &[0.0, 1.0, 0.3, 0.4], &mut dy).unwrap();
        assert_eq!(dy, [0.3, 0.4, 0.0, 0.0]);
        assert!(calogero_field(1.0)(0.0, &[1.0, 1.0, 0.0, 0.0], &mut dy).is_err());
    }

    #[test]
    fn calogero_matches_eigenvalues_of_flight() {
        let s0 = MatFreeState::new(Sym2::new(0.3, 0.4, -0.2), Sym2::new(0.5, -0.7, 0.1));
        let c0 = calogero_reduce(&s0).unwrap();
        let tr = integrate_rk4(calogero_field(c0.l), &c0.coords(), 0.0, 2.0, 1e-3).unwrap();
        for (t, y) in tr.times.iter().zip(&tr.states) {
            let x = matrix_flight(&s0, *t).x;
            let mean = 0.5 * x.trace();
            let half = 0.5 * (x.c - x.a).hypot(2.0 * x.b);
            assert!((y[0] - (mean - half)).abs() < 1e-6);
            assert!((y[1] - (mean + half)).abs() < 1e-6);
        }
    }

    #[test]
    fn coupling_is_conserved_along_flight() {
        let s0 = MatFreeState::new(Sym2::new(1.0, 0.2, -0.5), Sym2::new(0.3, 0.6, 0.9));
        let mut prev = calogero_reduce(&s0).unwrap();
        let m0 = s0.commutator_entry();
        for i in 1..=200 {
            let s = matrix_flight(&s0, i as f64 * 0.01);
            let c = calogero_reduce_from(&s, Some(&prev.frame())).unwrap();
            assert!((c.l - prev.l).abs() < 1e-10);
            assert!((s.commutator_entry() - m0).abs() < 1e-12);
            prev = c;
        }
    }

    #[test]
    fn action_examples_and_gradient() {
        let x0 = Sym2::diag(1.0, 0.0);
        assert_eq!(hj_action(&x0, &x0, 1.0).unwrap(), 0.0);
        assert_eq!(hj_action(&Sym2::diag(2.0, 1.0), &x0, 1.0).unwrap(), 1.0);
        assert!(hj_action(&x0, &x0, 0.0).is_err());

        let xt = Sym2::diag(2.0, 0.0);
        let s = |z: &[f64]| hj_action(&Sym2::new(z[0], z[1], z[2]), &x0, 1.0).unwrap();
        let d11 = finite_diff(s, &[xt.a, xt.b, xt.c], &[1.0, 0.0, 0.0], 1, 1e-4);
        assert!((d11 - 1.0).abs() < 1e-9);
    }
}
