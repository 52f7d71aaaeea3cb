use std::sync::Arc;

use num_complex::Complex64;

use super::{Alphabet, DeformSeries, NCPoly, RewriteSystem, Rule};
use crate::{Error, Result};

/// Generators in termination order `ν < ν* < α < α*`.
pub fn woronowicz_alphabet() -> Arc<Alphabet> {
    Alphabet::new(&["nu", "nu*", "alpha", "alpha*"])
}

const NU: u8 = 0;
const NU_STAR: u8 = 1;
const ALPHA: u8 = 2;
const ALPHA_STAR: u8 = 3;

fn word(al: &Arc<Alphabet>, w: &[u8], c: DeformSeries) -> NCPoly {
    NCPoly::from_word(al, w.to_vec(), c)
}

/// Rewriting rules of the deformed `SU(2)` algebra with `λ = 1 − q`:
///
/// | left | right |
/// |------|-------|
/// | `ν*ν` | `νν*` |
/// | `αν` | `λ να` |
/// | `αν*` | `λ ν*α` |
/// | `α*ν` | `λ⁻¹ να*` |
/// | `α*ν*` | `λ⁻¹ ν*α*` |
/// | `α*α` | `1 − νν*` |
/// | `αα*` | `1 − λ² νν*` |
pub fn woronowicz_system() -> RewriteSystem {
    let al = woronowicz_alphabet();
    let one = DeformSeries::one();
    let lam = DeformSeries::lambda();
    let lam_inv = DeformSeries::lambda_inv();
    let n = word(&al, &[NU, NU_STAR], one.clone());
    let rules = vec![
        Rule { lhs: [NU_STAR, NU], rhs: n.clone() },
        Rule { lhs: [ALPHA, NU], rhs: word(&al, &[NU, ALPHA], lam.clone()) },
        Rule { lhs: [ALPHA, NU_STAR], rhs: word(&al, &[NU_STAR, ALPHA], lam.clone()) },
        Rule { lhs: [ALPHA_STAR, NU], rhs: word(&al, &[NU, ALPHA_STAR], lam_inv.clone()) },
        Rule { lhs: [ALPHA_STAR, NU_STAR], rhs: word(&al, &[NU_STAR, ALPHA_STAR], lam_inv) },
        Rule { lhs: [ALPHA_STAR, ALPHA], rhs: NCPoly::one(&al).minus(&n) },
        Rule { lhs: [ALPHA, ALPHA_STAR], rhs: NCPoly::one(&al).minus(&n.scale(&lam.pow(2))) },
    ];
    RewriteSystem::new(&al, rules).expect("rules decrease the order")
}

/// Elements of the quantum sphere subalgebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Su2qElements {
    /// `1 − 2ν*ν`.
    pub u: NCPoly,
    /// `2ν*α`.
    pub w: NCPoly,
    /// `2α*ν`.
    pub w_star: NCPoly,
    /// `u / 2`.
    pub h: NCPoly,
    /// `ν*ν`.
    pub n: NCPoly,
}

pub fn su2q_elements() -> Su2qElements {
    let al = woronowicz_alphabet();
    let two = DeformSeries::real(2.0);
    let n = word(&al, &[NU_STAR, NU], DeformSeries::one());
    let u = NCPoly::one(&al).minus(&n.scale(&two));
    Su2qElements {
        h: u.scale(&DeformSeries::real(0.5)),
        u,
        w: word(&al, &[NU_STAR, ALPHA], two.clone()),
        w_star: word(&al, &[ALPHA_STAR, NU], two),
        n,
    }
}

/// A relation `lhs = rhs` checked in the quotient.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationCheck {
    pub name: &'static str,
    /// Whether this is one of the relations as originally stated, as opposed
    /// to the form recomputed from the rewrite system.
    pub stated: bool,
    /// Normal form of `lhs − rhs`.
    pub residual: NCPoly,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn series(c: &[f64]) -> DeformSeries {
    DeformSeries::polynomial(c)
}

/// Normal forms of the stated quantum-sphere relations and of their
/// recomputed counterparts.
pub fn su2q_relation_checks() -> Result<Vec<RelationCheck>> {
    let sys = woronowicz_system();
    let al = woronowicz_alphabet();
    let e = su2q_elements();
    let one = NCPoly::one(&al);
    let one_minus_u = one.minus(&e.u);
    let phi = series(&[0.0, -2.0, 1.0]);
    let lam2 = DeformSeries::lambda().pow(2);
    let lam_m2 = DeformSeries::lambda_inv().pow(2);
    let half = DeformSeries::real(0.5);
    let nu = NCPoly::generator(&al, "nu")?;
    let nu_s = NCPoly::generator(&al, "nu*")?;
    let alpha = NCPoly::generator(&al, "alpha")?;
    let alpha_s = NCPoly::generator(&al, "alpha*")?;
    let comm = |a: &NCPoly, b: &NCPoly| a.times(b).minus(&b.times(a));

    let alt_u = word(&al, &[ALPHA_STAR, ALPHA], DeformSeries::one()).minus(&e.n);
    let unit = e.u.times(&e.u).plus(&e.w_star.times(&e.w));
    let ww = comm(&e.w, &e.w_star);
    let hw = comm(&e.h, &e.w);
    let hws = comm(&e.h, &e.w_star);
    let sq = one_minus_u.times(&one_minus_u);

    let cases: Vec<(&'static str, bool, NCPoly, NCPoly)> = vec![
        ("u: two expressions agree", true, e.u.clone(), alt_u),
        ("uu* + w*w = 1", true, unit.clone(), one.clone()),
        ("[w,u] = (q^2-2q)(1-u)w", true, comm(&e.w, &e.u), one_minus_u.times(&e.w).scale(&phi)),
        ("[w*,u] = -(q^2-2q)(1-u)w*", true, comm(&e.w_star, &e.u), one_minus_u.times(&e.w_star).scale(&-&phi)),
        (
            "[w,w*] = -(2q^2-2q)(1-u) + (4q-6q^2+4q^3-q^4)(1-u)^2",
            true,
            ww.clone(),
            one_minus_u.scale(&series(&[0.0, 2.0, -2.0])).plus(&sq.scale(&series(&[0.0, 4.0, -6.0, 4.0, -1.0]))),
        ),
        ("[H,nu] = 0", true, comm(&e.h, &nu), NCPoly::zero(&al)),
        ("[H,nu*] = 0", true, comm(&e.h, &nu_s), NCPoly::zero(&al)),
        ("[H,alpha] = (q^2-2q) nu* nu alpha", true, comm(&e.h, &alpha), e.n.times(&alpha).scale(&phi)),
        ("[H,alpha*] = -(q^2-2q) nu* nu alpha*", true, comm(&e.h, &alpha_s), e.n.times(&alpha_s).scale(&-&phi)),
        ("[H,w] = -(1/2)(q^2-2q)(1-u)w", true, hw.clone(), one_minus_u.times(&e.w).scale(&(&-&phi * &half))),
        ("[H,w*] = -(1/2)(q^2-2q)(1-u)w*", true, hws.clone(), one_minus_u.times(&e.w_star).scale(&(&-&phi * &half))),
        ("[w,u] = (2q-q^2)(1-u)w", false, comm(&e.w, &e.u), one_minus_u.times(&e.w).scale(&-&phi)),
        (
            "[w*,u] = (1-lambda^-2)(1-u)w*",
            false,
            comm(&e.w_star, &e.u),
            one_minus_u.times(&e.w_star).scale(&(&DeformSeries::one() - &lam_m2)),
        ),
        (
            "[w,w*] = lambda^-2 ((2q^2-4q)(1-u) + (1-lambda^4)(1-u)^2)",
            false,
            ww,
            one_minus_u
                .scale(&series(&[0.0, -4.0, 2.0]))
                .plus(&sq.scale(&(&DeformSeries::one() - &lam2.pow(2))))
                .scale(&lam_m2),
        ),
        (
            "uu* + w*w = 1 + (lambda^-2 - 1)(1-u^2)",
            false,
            unit,
            one.plus(&one.minus(&e.u.times(&e.u)).scale(&(&lam_m2 - &DeformSeries::one()))),
        ),
        (
            "[H,alpha*] = (lambda^-2 - 1) nu* nu alpha*",
            false,
            comm(&e.h, &alpha_s),
            e.n.times(&alpha_s).scale(&(&lam_m2 - &DeformSeries::one())),
        ),
        ("[H,w] = (1/2)(q^2-2q)(1-u)w", false, hw, one_minus_u.times(&e.w).scale(&(&phi * &half))),
        (
            "[H,w*] = -(1/2)(1-lambda^-2)(1-u)w*",
            false,
            hws,
            one_minus_u.times(&e.w_star).scale(&(&(&DeformSeries::one() - &lam_m2) * &DeformSeries::real(-0.5))),
        ),
    ];
    cases
        .into_iter()
        .map(|(name, stated, lhs, rhs)| Ok(RelationCheck { name, stated, residual: sys.normal_form(&lhs.minus(&rhs))? }))
        .collect()
}

/// Phase rate of the Heisenberg flow generated by `H = u/2` on a normal word.
///
/// Every normal word `W` evolves as `e^{i t ρ ν*ν} W` with `ρ` returned here
/// as an exact series in `q`.
pub fn woronowicz_flow_rate(w: &[u8]) -> Result<DeformSeries> {
    let alphas = w.iter().filter(|&&s| s == ALPHA).count() as u32;
    let alpha_stars = w.iter().filter(|&&s| s == ALPHA_STAR).count() as u32;
    let phi = series(&[0.0, -2.0, 1.0]);
    let lam2 = DeformSeries::lambda().pow(2);
    let lam_m2 = DeformSeries::lambda_inv().pow(2);
    let geometric = |r: &DeformSeries, k: u32| (0..k).fold(DeformSeries::zero(), |acc, j| &acc + &r.pow(j));
    let sys = woronowicz_system();
    let al = woronowicz_alphabet();
    if !sys.is_normal(&NCPoly::from_word(&al, w.to_vec(), DeformSeries::one())) {
        return Err(Error::InvalidArgument("flow rates are defined on normal words".into()));
    }
    let psi = &lam_m2 - &DeformSeries::one();
    Ok(&(&phi * &geometric(&lam2, alphas)) + &(&psi * &geometric(&lam_m2, alpha_stars)))
}

/// Closed-form flow `e^{it ad_H}` at numeric `(t, q)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WoronowiczFlow {
    pub t: f64,
    pub q: f64,
}

/// `e^{i phase ν*ν} · word`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowImage {
    pub phase: f64,
    pub word: Vec<u8>,
}

pub fn woronowicz_flow(t: f64, q: f64) -> WoronowiczFlow {
    WoronowiczFlow { t, q }
}

impl WoronowiczFlow {
    pub fn image(&self, w: &[u8]) -> Result<FlowImage> {
        let rate = woronowicz_flow_rate(w)?.eval(self.q);
        Ok(FlowImage { phase: self.t * rate.re, word: w.to_vec() })
    }

    /// Image of a normal word evaluated on a representation in which `ν*ν`
    /// acts by the scalar `n`.
    pub fn phase_factor(&self, w: &[u8], n: f64) -> Result<Complex64> {
        Ok(Complex64::from_polar(1.0, self.image(w)?.phase * n))
    }
}

/// All normal words up to `max_len`.
pub fn normal_words(max_len: usize) -> Vec<Vec<u8>> {
    let sys = woronowicz_system();
    let al = woronowicz_alphabet();
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..4u8 {
                let mut v: Vec<u8> = w.clone();
                v.push(s);
                if sys.is_normal(&NCPoly::from_word(&al, v.clone(), DeformSeries::one())) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Largest residual of `i[H, W] − i ρ(W) ν*ν W` over normal words up to
/// `max_len`: the derivative of the closed-form flow at `t = 0` against the
/// Heisenberg equation.
pub fn flow_consistency_check(max_len: usize) -> Result<f64> {
    let sys = woronowicz_system();
    let al = woronowicz_alphabet();
    let e = su2q_elements();
    let i = DeformSeries::constant(Complex64::i());
    let mut worst = 0.0_f64;
    for w in normal_words(max_len) {
        let p = NCPoly::from_word(&al, w.clone(), DeformSeries::one());
        let lhs = e.h.times(&p).minus(&p.times(&e.h)).scale(&i);
        let rhs = e.n.times(&p).scale(&(&woronowicz_flow_rate(&w)? * &i));
        worst = worst.max(sys.normal_form(&lhs.minus(&rhs))?.max_abs());
    }
    Ok(worst)
}
