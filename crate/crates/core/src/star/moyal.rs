use num_complex::Complex64;

use super::commpoly::{s3_vars, su2_vars};
use super::{CommPoly, DeformSeries};
use crate::{Error, Result};

/// Index pairs `(q_a, p_a)` in `(q1, q2, p1, p2)`.
const CANONICAL_PAIRS: [(usize, usize); 2] = [(0, 2), (1, 3)];

fn check_s3(f: &CommPoly) -> Result<()> {
    if *f.vars() != s3_vars() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

/// `{f, g} = Σ_a ∂f/∂q_a ∂g/∂p_a − ∂f/∂p_a ∂g/∂q_a`.
pub fn canonical_poisson(f: &CommPoly, g: &CommPoly) -> Result<CommPoly> {
    check_s3(f)?;
    check_s3(g)?;
    Ok(CANONICAL_PAIRS.iter().fold(CommPoly::zero(&s3_vars()), |acc, &(q, p)| {
        acc.plus(&f.derive(q).times(&g.derive(p))).minus(&f.derive(p).times(&g.derive(q)))
    }))
}

/// `Πⁿ(f, g)` for the canonical Poisson bivector.
fn pi_power(f: &CommPoly, g: &CommPoly, n: usize) -> CommPoly {
    let dirs: Vec<(usize, usize, f64)> = CANONICAL_PAIRS.iter().flat_map(|&(q, p)| [(q, p, 1.0), (p, q, -1.0)]).collect();
    fn rec(f: &CommPoly, g: &CommPoly, n: usize, dirs: &[(usize, usize, f64)], sign: f64) -> CommPoly {
        if f.is_zero() || g.is_zero() {
            return CommPoly::zero(f.vars());
        }
        if n == 0 {
            return f.times(g).scale_real(sign);
        }
        dirs.iter().fold(CommPoly::zero(f.vars()), |acc, &(a, b, s)| acc.plus(&rec(&f.derive(a), &g.derive(b), n - 1, dirs, sign * s)))
    }
    rec(f, g, n, &dirs, 1.0)
}

/// Moyal product `Σₙ (iθ/2)ⁿ/n! Πⁿ(f, g)`, with `θ` the series parameter.
pub fn moyal_product(f: &CommPoly, g: &CommPoly) -> Result<CommPoly> {
    check_s3(f)?;
    check_s3(g)?;
    let top = f.degree().min(g.degree()) as usize;
    let mut out = CommPoly::zero(&s3_vars());
    let mut factor = DeformSeries::one();
    let step = DeformSeries::new(vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.5)], 0);
    for n in 0..=top {
        if n > 0 {
            factor = (&factor * &step).scale(Complex64::new(1.0 / n as f64, 0.0));
        }
        out = out.plus(&pi_power(f, g, n).scale(&factor));
    }
    Ok(out)
}

/// Pullbacks of `(x, y, w)` to `R⁴`.
pub fn su2_generators() -> [CommPoly; 3] {
    let vs = s3_vars();
    let v = |n: &str| CommPoly::var(&vs, n).expect("known variable");
    let (q1, q2, p1, p2) = (v("q1"), v("q2"), v("p1"), v("p2"));
    [
        q1.times(&q2).plus(&p1.times(&p2)).scale_real(0.5),
        q1.times(&p2).minus(&q2.times(&p1)).scale_real(0.5),
        q1.pow(2).plus(&p1.pow(2)).minus(&q2.pow(2)).minus(&p2.pow(2)).scale_real(0.25),
    ]
}

/// `f_H = q1² + q2² + p1² + p2²`.
pub fn f_h() -> CommPoly {
    let vs = s3_vars();
    (0..4).fold(CommPoly::zero(&vs), |acc, i| acc.plus(&CommPoly::var_index(&vs, i).pow(2)))
}

pub fn su2_pullback(f: &CommPoly) -> Result<CommPoly> {
    if *f.vars() != su2_vars() {
        return Err(Error::AlphabetMismatch);
    }
    f.substitute(&su2_generators())
}

/// Largest coefficient of `{f_H, π*x_i ⋆ π*x_j}` over all generator pairs.
pub fn commutant_closure_check() -> Result<f64> {
    let gens = su2_generators();
    let fh = f_h();
    let mut worst = 0.0_f64;
    for i in 0..3 {
        for j in i..3 {
            let prod = moyal_product(&gens[i], &gens[j])?;
            worst = worst.max(canonical_poisson(&fh, &prod)?.max_abs());
        }
    }
    Ok(worst)
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// The candidate reduced product `x_j ⋆ F` (`j` in 1..=3):
/// `x_j F − (iθ/2) ε_{jlm} x_l ∂_m F − (θ²/8)((1 + x_k∂_k)∂_j F − ½ x_j ΔF)`.
pub fn reduced_star_formula(j: usize, f: &CommPoly) -> Result<CommPoly> {
    let vs = su2_vars();
    if *f.vars() != vs {
        return Err(Error::AlphabetMismatch);
    }
    if !(1..=3).contains(&j) {
        return Err(Error::InvalidArgument(format!("generator index {j} not in 1..=3")));
    }
    let j = j - 1;
    let x = |k: usize| CommPoly::var_index(&vs, k);
    let theta = |c: Complex64, pow: usize| {
        let mut num = vec![Complex64::new(0.0, 0.0); pow + 1];
        num[pow] = c;
        DeformSeries::new(num, 0)
    };
    let mut first = CommPoly::zero(&vs);
    for l in 0..3 {
        for m in 0..3 {
            let e = levi_civita(j, l, m);
            if e != 0.0 {
                first = first.plus(&x(l).times(&f.derive(m)).scale_real(e));
            }
        }
    }
    let dj = f.derive(j);
    let euler = (0..3).fold(CommPoly::zero(&vs), |acc, k| acc.plus(&x(k).times(&dj.derive(k))));
    let lap = (0..3).fold(CommPoly::zero(&vs), |acc, k| acc.plus(&f.derive(k).derive(k)));
    let second = dj.plus(&euler).minus(&x(j).times(&lap).scale_real(0.5));
    Ok(x(j)
        .times(f)
        .plus(&first.scale(&theta(Complex64::new(0.0, -0.5), 1)))
        .plus(&second.scale(&theta(Complex64::new(-0.125, 0.0), 2))))
}

/// `π*(x_j ⋆ F) − π*x_j ⋆ π*F`, with the Moyal parameter rescaled by
/// `calibration`.
pub fn reduced_star_verify(j: usize, f: &CommPoly, calibration: f64) -> Result<CommPoly> {
    let lhs = su2_pullback(&reduced_star_formula(j, f)?)?;
    let xj = su2_generators()[j - 1].clone();
    let rhs = moyal_product(&xj, &su2_pullback(f)?)?.rescale_param(calibration)?;
    Ok(lhs.minus(&rhs))
}

/// Ratio between the reduced-formula parameter and the Moyal parameter,
/// fixed by matching first-order terms of `x ⋆ y`.
pub fn calibrate_reduced_star() -> Result<f64> {
    let vs = su2_vars();
    let y = CommPoly::var_index(&vs, 1);
    let formula = su2_pullback(&reduced_star_formula(1, &y)?)?.grade(1);
    let moyal = moyal_product(&su2_generators()[0], &su2_generators()[1])?.grade(1);
    let (a, b) = formula
        .terms()
        .next()
        .map(|(e, c)| (c.taylor(0), moyal_coeff(&moyal, e)))
        .ok_or_else(|| Error::Singular("first-order term vanishes".into()))?;
    if b.norm() == 0.0 {
        return Err(Error::Singular("Moyal first-order term vanishes".into()));
    }
    Ok((a / b).re)
}

fn moyal_coeff(p: &CommPoly, e: &[u32]) -> Complex64 {
    p.terms().find(|(f, _)| *f == e).map(|(_, c)| c.taylor(0)).unwrap_or_default()
}
