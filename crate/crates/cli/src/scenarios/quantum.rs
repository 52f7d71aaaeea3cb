use super::{int, num, rng, Outcome, Scenario};
use crate::params::Params;
use crate::report::{CheckSpec, Table};
use crate::Context;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use reductionlab::quantum::*;
use reductionlab::Result;

pub(super) fn all() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "quantum-pictures",
            module: "quantum",
            topic: "Schrodinger, Heisenberg and von Neumann evolution of a finite quantum system",
            params: vec![
                int("n", "4", "Hilbert space dimension"),
                num("t_end", "5", "final time"),
                num("step", "0.1", "spacing of the sampled times"),
                num("hbar", "1", "Planck constant"),
            ],
            checks: vec![
                CheckSpec::at_most("picture-equivalence", 1e-10, "expectation values agree in all three pictures"),
                CheckSpec::at_most("ehrenfest-derivative", 1e-6, "time derivative of the expectation function"),
                CheckSpec::at_most("unitarity", 1e-12, "norm, trace and purity preserved"),
            ],
            run: pictures,
        },
        Scenario {
            name: "kahler-geometry",
            module: "quantum",
            topic: "Kahler structure of a Hilbert space, quadratic observables and the projective tensor",
            params: vec![
                int("n", "3", "Hilbert space dimension"),
                int("samples", "50", "random operator and state samples"),
                num("h", "0.0001", "difference step for the potential"),
            ],
            checks: vec![
                CheckSpec::at_most("omega-sign-measured", 0.0, "sign of the symplectic bracket against -i[A,B]"),
                CheckSpec::at_most("omega-bracket-algebra", 1e-10, "symplectic bracket of quadratic functions"),
                CheckSpec::at_most("jordan-bracket-algebra", 1e-10, "metric bracket of quadratic functions"),
                CheckSpec::at_most("leibniz", 1e-10, "bracket is a derivation of the operator product"),
                CheckSpec::at_most("pullback-identity", 1e-10, "brackets pulled back from the dual of u(n)"),
                CheckSpec::at_most("theta-fiber", 1e-14, "connection on the fiber generators"),
                CheckSpec::at_most("fubini-study-psd", 1e-12, "projective tensor is semidefinite and fiber-degenerate"),
                CheckSpec::at_most("kahler-potential", 1e-6, "potential form against the projective tensor"),
                CheckSpec::at_most("expectation-invariance", 1e-8, "expectation values are constant on complex rays"),
            ],
            run: kahler,
        },
    ]
}

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> Result<HermitianMatrix> {
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        rows[i][i] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            rows[i][j] = z;
            rows[j][i] = z.conj();
        }
    }
    HermitianMatrix::from_rows(&rows)
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> Result<StateVector> {
    StateVector::new((0..n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect())
}

fn pictures(p: &Params, ctx: &Context) -> Result<Outcome> {
    let n = p.integer("n");
    let mut rng = rng(ctx);
    let h = random_hermitian(&mut rng, n)?;
    let a = random_hermitian(&mut rng, n)?;
    let psi = random_state(&mut rng, n)?.normalized()?;
    let ev = Evolution::new(p.number("hbar"))?;
    let (t_end, step) = (p.number("t_end"), p.number("step"));
    let count = (t_end / step).round().max(1.0) as usize;
    let times: Vec<f64> = (0..=count).map(|k| t_end * k as f64 / count as f64).collect();
    let report = ev.picture_equivalence(&h, &a, &psi, &times)?;

    let rho0 = DensityMatrix::from_state(&psi)?;
    let mut unitarity = 0.0_f64;
    let mut out = Outcome::new(Table::new(&["t", "e_schrodinger", "e_heisenberg", "e_vonneumann"]));
    for &t in &times {
        let psi_t = ev.schrodinger(&h, &psi, t)?;
        let rho_t = ev.von_neumann(&h, &rho0, t)?;
        unitarity = unitarity
            .max((psi_t.norm_sq() - 1.0).abs())
            .max((rho_t.trace() - 1.0).abs())
            .max((rho_t.purity() - 1.0).abs());
        out.table.push(vec![t, e_a(&a, &psi_t)?, e_a(&ev.heisenberg(&h, &a, t)?, &psi)?, rho_t.expectation(&a)?]);
    }
    out.record("picture-equivalence", report.max_deviation);
    out.record("ehrenfest-derivative", report.ehrenfest_residual);
    out.record("unitarity", unitarity);
    Ok(out)
}

fn kahler(p: &Params, ctx: &Context) -> Result<Outcome> {
    let n = p.integer("n");
    let step = p.number("h");
    let mut rng = rng(ctx);
    let mut worst = [0.0_f64; 8];
    let mut out = Outcome::new(Table::new(&["sample", "bracket_omega", "bracket_g", "pullback", "leibniz", "fs_xx", "potential"]));
    for s in 0..p.integer("samples") {
        let (a, b, c) = (random_hermitian(&mut rng, n)?, random_hermitian(&mut rng, n)?, random_hermitian(&mut rng, n)?);
        let psi = random_state(&mut rng, n)?;
        let (x, y) = (random_state(&mut rng, n)?, random_state(&mut rng, n)?);

        let w = bracket_omega(&a, &b, &psi)?;
        let g = bracket_g(&a, &b, &psi)?;
        let lie = OMEGA_BRACKET_SIGN * f_op(&lie_product(a.matrix(), b.matrix()), &psi)?.re;
        let jordan = f_op(&jordan_product(a.matrix(), b.matrix()), &psi)?.re;
        worst[0] = worst[0].max((w - lie).abs());
        worst[1] = worst[1].max((g - jordan).abs());
        let leib = leibniz_check(&a, &b, &c, &psi)?;
        worst[2] = worst[2].max(leib);
        let pull = pullback_residual(&a, &b, &psi)?;
        worst[3] = worst[3].max(pull);

        let theta = (theta_eval(&psi, &psi)? - 1.0).norm().max((theta_eval(&psi, &psi.times_i())? - Complex64::i()).norm());
        worst[4] = worst[4].max(theta);

        let xx = fubini_study(&psi, &x, &x)?;
        let fs = (-xx.re).max(0.0).max(xx.im.abs()).max(fubini_study(&psi, &psi, &y)?.norm()).max(fubini_study(&psi, &psi.times_i(), &y)?.norm());
        worst[5] = worst[5].max(fs);

        let pot = kahler_potential_check(&psi, &x, &y, step)?;
        worst[6] = worst[6].max(pot);

        let lam = Complex64::new(rng.gen_range(0.2..3.0), rng.gen_range(-3.0..3.0));
        worst[7] = worst[7].max((e_a(&a, &psi.scale(lam))? - e_a(&a, &psi)?).abs());

        out.table.push(vec![s as f64, w, g, pull, leib, xx.re, pot]);
    }
    out.record("omega-sign-measured", (measure_omega_sign() - OMEGA_BRACKET_SIGN).abs());
    out.record("omega-bracket-algebra", worst[0]);
    out.record("jordan-bracket-algebra", worst[1]);
    out.record("leibniz", worst[2]);
    out.record("pullback-identity", worst[3]);
    out.record("theta-fiber", worst[4]);
    out.record("fubini-study-psd", worst[5]);
    out.record("kahler-potential", worst[6]);
    out.record("expectation-invariance", worst[7]);
    Ok(out)
}
