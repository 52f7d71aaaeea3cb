use super::{int, num, Outcome, Scenario};
use crate::params::{ParamKind, ParamSpec, Params};
use crate::report::{CheckSpec, Table};
use crate::Context;
use reductionlab::lie_scheffers::*;
use reductionlab::numeric::Integrator;
use reductionlab::Result;
use std::f64::consts::TAU;

pub(super) fn all() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "riccati",
            module: "lie_scheffers",
            topic: "Riccati equation as the projectivisation of a planar linear system",
            params: vec![
                ParamSpec { name: "A", kind: ParamKind::Matrix2, default: "[[0,1],[-1,0]]", help: "constant system matrix" },
                num("xi1", "-0.7", "first initial condition"),
                num("xi2", "0.1", "second initial condition"),
                num("xi3", "0.9", "third initial condition"),
                num("xi4", "3.0", "fourth initial condition"),
                num("t_end", "1", "final time"),
                num("dt", "0.0001", "integration step"),
                int("frames", "50", "output rows"),
            ],
            checks: vec![
                CheckSpec::at_most("riccati-projection-commutes", 1e-6, "projected linear flow against the Riccati flow"),
                CheckSpec::at_most("riccati-cross-ratio-drift", 1e-6, "cross ratio of four solutions"),
            ],
            run: riccati,
        },
        Scenario {
            name: "burgers",
            module: "lie_scheffers",
            topic: "Burgers equation through the Cole-Hopf map and its nonlinear superposition",
            params: vec![
                num("k", "1", "viscosity"),
                num("t0", "1", "age of the initial heat kernels"),
                num("c1", "-1", "centre of the first kernel"),
                num("c2", "1.5", "centre of the second kernel"),
                num("l1", "0.2", "first superposition constant"),
                num("l2", "-0.4", "second superposition constant"),
                num("dt", "0.0001", "heat step"),
                int("steps", "1000", "heat steps before the residual is taken"),
                int("n", "801", "grid points on [-5, 5]"),
                num("window", "3", "half-width of the window where residuals are measured"),
            ],
            checks: vec![
                CheckSpec::at_most("burgers-cole-hopf-residual", 2e-3, "Burgers residual of the transformed heat solution"),
                CheckSpec::at_most("burgers-superposition-residual", 2e-3, "Burgers residual of the superposition"),
            ],
            run: burgers,
        },
    ]
}

fn homogeneous(p: ProjectivePoint) -> [f64; 2] {
    let [a, b] = match p {
        ProjectivePoint::Finite(x) => [x, 1.0],
        ProjectivePoint::Infinity => [1.0, 0.0],
    };
    let n = a.hypot(b);
    [a / n, b / n]
}

fn det(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn projective_cross_ratio(p: &[ProjectivePoint; 4]) -> f64 {
    let [x, x1, x2, x3] = p.map(homogeneous);
    det(x, x1) * det(x2, x3) / (det(x, x2) * det(x1, x3))
}

fn riccati(p: &Params, _ctx: &Context) -> Result<Outcome> {
    let sys = LinearSystem2::constant(p.matrix2("A"));
    let coeffs = riccati_from_linear(&sys);
    let (t_end, dt) = (p.number("t_end"), p.number("dt"));
    let frames = p.integer("frames").max(1);
    let xi0 = ["xi1", "xi2", "xi3", "xi4"].map(|n| ProjectivePoint::Finite(p.number(n)));
    let cr0 = projective_cross_ratio(&xi0);
    let linear: Vec<_> = xi0
        .iter()
        .map(|x| {
            let x0 = x.finite().unwrap_or(0.0);
            Integrator::new(dt).run(sys.field(), &[x0, 1.0], 0.0, t_end)
        })
        .collect::<Result<_>>()?;

    let mut out = Outcome::new(Table::new(&["t", "xi1", "xi2", "xi3", "xi4", "cross_ratio_drift"]));
    let (mut commute, mut drift) = (0.0_f64, 0.0_f64);
    let mut current = xi0;
    let mut t_prev = 0.0;
    for f in 1..=frames {
        let t = t_end * f as f64 / frames as f64;
        for (j, x) in current.iter_mut().enumerate() {
            *x = integrate_riccati(&coeffs, *x, t_prev, t, dt)?;
            let tr = &linear[j];
            let idx = tr.times.iter().position(|&s| (s - t).abs() <= 1e-9 * t_end.max(1.0));
            if let Some(i) = idx {
                let s = &tr.states[i];
                commute = commute.max(ratio_project([s[0], s[1]]).distance(*x));
            }
        }
        let d = (projective_cross_ratio(&current) - cr0).abs() / cr0.abs().max(1.0);
        drift = drift.max(d);
        let row = current.map(|x| x.finite().unwrap_or(f64::INFINITY));
        out.table.push(vec![t, row[0], row[1], row[2], row[3], d]);
        t_prev = t;
    }
    out.record("riccati-projection-commutes", commute);
    out.record("riccati-cross-ratio-drift", drift);
    Ok(out)
}

fn kernel(k: f64, t: f64, c: f64) -> impl Fn(f64) -> f64 {
    move |x| (-(x - c).powi(2) / (2.0 * k * t)).exp() / (TAU * k * t).sqrt()
}

fn restrict(g: &Grid1D, half_width: f64) -> Result<Grid1D> {
    let inside: Vec<(f64, f64)> = g.points().filter(|(x, _)| x.abs() <= half_width + 1e-12).collect();
    let (first, last) = match (inside.first(), inside.last()) {
        (Some(a), Some(b)) => (a.0, b.0),
        _ => return Ok(g.clone()),
    };
    Grid1D::new(first, last, inside.into_iter().map(|(_, v)| v).collect())
}

fn burgers(p: &Params, _ctx: &Context) -> Result<Outcome> {
    let (k, t0, dt) = (p.number("k"), p.number("t0"), p.number("dt"));
    let steps = p.integer("steps");
    let n = p.integer("n");
    let evolve = |c: f64| -> Result<(Grid1D, Grid1D)> {
        let u0 = Grid1D::from_fn(-5.0, 5.0, n, kernel(k, t0, c))?;
        let a = heat_evolve(&u0, k, dt, steps)?;
        let b = heat_evolve(&a, k, dt, 1)?;
        Ok((cole_hopf(&a, k)?, cole_hopf(&b, k)?))
    };
    let (w1a, w1b) = evolve(p.number("c1"))?;
    let (w2a, w2b) = evolve(p.number("c2"))?;
    let window = p.number("window");
    let single = burgers_residual(&restrict(&w1a, window)?, &restrict(&w1b, window)?, k, dt)?;
    let (l1, l2) = (p.number("l1"), p.number("l2"));
    let sa = burgers_superpose(&w1a, &w2a, l1, l2, k)?;
    let sb = burgers_superpose(&w1b, &w2b, l1, l2, k)?;
    let combined = burgers_residual(&restrict(&sa, window)?, &restrict(&sb, window)?, k, dt)?;

    let mut out = Outcome::new(Table::new(&["x", "w1", "w2", "w_superposed"]));
    let stride = (n / 100).max(1);
    for (i, (x, w)) in w1a.points().enumerate().step_by(stride) {
        out.table.push(vec![x, w, w2a.values[i], sa.values[i]]);
    }
    out.notes.push(format!(
        "time of the residual: {} (grid spacing {:.3e}, stability limit {:.3e})",
        t0 + steps as f64 * dt,
        w1a.dx(),
        w1a.dx().powi(2) / k
    ));
    out.record("burgers-cole-hopf-residual", single);
    out.record("burgers-superposition-residual", combined);
    Ok(out)
}
