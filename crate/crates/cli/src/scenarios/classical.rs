use super::{int, max_abs_diff, num, rng, Outcome, Scenario};
use crate::params::Params;
use crate::report::{CheckSpec, Table};
use crate::Context;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use reductionlab::classical::*;
use reductionlab::numeric::{finite_diff, Integrator, Sym2};
use reductionlab::Result;

pub(super) fn all() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "radial",
            module: "classical",
            topic: "free particle reduced to radial motion at fixed angular momentum or energy",
            params: vec![
                int("samples", "200", "number of random initial states"),
                num("t_end", "2", "final time"),
                num("dt", "0.001", "integration step"),
            ],
            checks: vec![
                CheckSpec::at_most("radial-fixed-l-match", 1e-6, "fixed-l2 radial flow against exact flight"),
                CheckSpec::at_most("radial-fixed-e-match", 1e-6, "fixed-E radial flow against exact flight"),
            ],
            run: radial,
        },
        Scenario {
            name: "sl2-brackets",
            module: "classical",
            topic: "sl(2,R) function group of quadratic invariants of free motion",
            params: vec![int("points", "1000", "random phase-space points"), num("t_end", "2", "flow horizon")],
            checks: vec![
                CheckSpec::at_most("sl2-bracket-31", 0.0, "{xi3,xi1} = 2 xi1"),
                CheckSpec::at_most("sl2-bracket-23", 0.0, "{xi2,xi3} = 2 xi2"),
                CheckSpec::at_most("sl2-bracket-21", 0.0, "{xi2,xi1} = 2 xi3"),
                CheckSpec::at_most("sl2-flow-equivariance", 1e-12, "closed-form flow against lifted free flight"),
            ],
            run: sl2,
        },
        Scenario {
            name: "calogero",
            module: "classical",
            topic: "free motion of symmetric 2x2 matrices reduced to the Calogero system",
            params: vec![
                num("x11", "0.3", "initial matrix entry (1,1)"),
                num("x12", "0.4", "initial matrix entry (1,2)"),
                num("x22", "-0.2", "initial matrix entry (2,2)"),
                num("v11", "0.5", "initial velocity entry (1,1)"),
                num("v12", "-0.7", "initial velocity entry (1,2)"),
                num("v22", "0.1", "initial velocity entry (2,2)"),
                num("t_end", "2", "final time"),
                num("dt", "0.001", "integration step"),
            ],
            checks: vec![
                CheckSpec::at_most("calogero-eigenvalue-match", 1e-6, "integrated Calogero against eigenvalues of the flight"),
                CheckSpec::at_most("calogero-l-drift", 1e-10, "coupling along the reduced flight"),
            ],
            run: calogero,
        },
        Scenario {
            name: "hamilton-jacobi",
            module: "classical",
            topic: "Hamilton principal function of matrix free motion",
            params: vec![int("samples", "100", "random endpoint pairs"), num("t", "0.7", "elapsed time"), num("h", "0.0001", "difference step")],
            checks: vec![CheckSpec::at_most("hj-gradient-match", 1e-6, "finite-difference gradient of S against P")],
            run: hamilton_jacobi,
        },
        Scenario {
            name: "monopole",
            module: "classical",
            topic: "charge in a monopole field and its conserved vector",
            params: vec![
                num("k", "0.7", "monopole strength"),
                num("m", "1", "mass"),
                num("rx", "1", "initial position x"),
                num("ry", "0", "initial position y"),
                num("rz", "0.2", "initial position z"),
                num("vx", "0", "initial velocity x"),
                num("vy", "0.8", "initial velocity y"),
                num("vz", "0.1", "initial velocity z"),
                num("t_end", "10", "final time"),
                num("dt", "0.001", "integration step"),
            ],
            checks: vec![CheckSpec::at_most("monopole-j-drift", 1e-7, "largest component drift of J")],
            run: monopole,
        },
        Scenario {
            name: "ts2-tangency",
            module: "classical",
            topic: "tangency of rotation and boost generators to the tangent bundle of the sphere",
            params: vec![int("samples", "200", "random points of TS2")],
            checks: vec![
                CheckSpec::at_most("ts2-rotation-tangent", 1e-10, "rotations preserve the constraint ideal"),
                CheckSpec::at_most("ts2-boost-tangent", 1e-10, "boosts preserve the constraint ideal"),
                CheckSpec::at_least("ts2-nontangent-detected", 0.1, "a transverse field is rejected"),
            ],
            run: ts2_tangency,
        },
        Scenario {
            name: "spherical-pendulum",
            module: "classical",
            topic: "spherical pendulum and its lift to TS3 through the Hopf map",
            params: vec![
                num("gravity", "1", "gravitational acceleration of the pendulum"),
                num("t_end", "10", "pendulum horizon"),
                num("lift_t_end", "2", "horizon of the lifted system"),
                num("dt", "0.001", "integration step"),
            ],
            checks: vec![
                CheckSpec::at_most("pendulum-energy-drift", 1e-7, "energy of the pendulum"),
                CheckSpec::at_most("pendulum-momentum-drift", 1e-7, "vertical angular momentum"),
                CheckSpec::at_most("ts3-sigma-drift", 1e-7, "fiber momentum of the lift"),
                CheckSpec::at_most("hopf-pendulum-residual", 1e-4, "projected lift satisfies the pendulum equation"),
            ],
            run: spherical_pendulum,
        },
    ]
}

fn min_radius(r: &[f64; 3], v: &[f64; 3], t_end: f64) -> f64 {
    let vv: f64 = v.iter().map(|x| x * x).sum();
    let t = if vv > 0.0 { (-(r[0] * v[0] + r[1] * v[1] + r[2] * v[2]) / vv).clamp(0.0, t_end) } else { 0.0 };
    (0..3).map(|i| (r[i] + t * v[i]).powi(2)).sum::<f64>().sqrt()
}

fn random_v3(rng: &mut ChaCha8Rng) -> [f64; 3] {
    std::array::from_fn(|_| rng.gen_range(-1.0..1.0))
}

fn radial(p: &Params, ctx: &Context) -> Result<Outcome> {
    let (t_end, dt) = (p.number("t_end"), p.number("dt"));
    let mut rng = rng(ctx);
    let mut out = Outcome::new(Table::new(&["t", "r_fixed_l", "rdot_fixed_l", "r_fixed_e", "rdot_fixed_e", "r_exact"]));
    let (mut err_l, mut err_e) = (0.0_f64, 0.0_f64);
    for sample in 0..p.integer("samples") {
        let s = loop {
            let s = FreeState3::new(random_v3(&mut rng), random_v3(&mut rng));
            if min_radius(&s.r, &s.v, t_end) > 0.2 {
                break s;
            }
        };
        let d = reduce_free_to_radial(&s)?;
        let run = |f: RadialField| Integrator::new(dt).run(f.rhs(), &[d.r, d.rdot], 0.0, t_end);
        let tl = run(RadialField::FixedL { l2: d.l2 })?;
        let te = run(RadialField::FixedE { energy: d.energy })?;
        for (i, &t) in tl.times.iter().enumerate() {
            let exact = reduce_free_to_radial(&s.at(t))?.r;
            err_l = err_l.max((tl.states[i][0] - exact).abs());
            err_e = err_e.max((te.states[i][0] - exact).abs());
            if sample == 0 && i % 100 == 0 {
                out.table.push(vec![t, tl.states[i][0], tl.states[i][1], te.states[i][0], te.states[i][1], exact]);
            }
        }
    }
    out.record("radial-fixed-l-match", err_l);
    out.record("radial-fixed-e-match", err_e);
    Ok(out)
}

fn sl2(p: &Params, ctx: &Context) -> Result<Outcome> {
    let mut rng = rng(ctx);
    let mut worst = [0.0_f64; 4];
    let mut out = Outcome::new(Table::new(&["t", "xi1", "xi2", "xi3", "casimir"]));
    for i in 0..p.integer("points") {
        let (r, q) = (random_v3(&mut rng), random_v3(&mut rng));
        let s = sl2_lift(&r, &q);
        worst[0] = worst[0].max((canonical_poisson(&Xi::Three, &Xi::One, &r, &q) - 2.0 * s.xi1).abs());
        worst[1] = worst[1].max((canonical_poisson(&Xi::Two, &Xi::Three, &r, &q) - 2.0 * s.xi2).abs());
        worst[2] = worst[2].max((canonical_poisson(&Xi::Two, &Xi::One, &r, &q) - 2.0 * s.xi3).abs());
        let t_end = p.number("t_end");
        for k in 0..=20 {
            let t = t_end * k as f64 / 20.0;
            let moved = sl2_flow(&s, t);
            let lifted = sl2_lift(&[r[0] + t * q[0], r[1] + t * q[1], r[2] + t * q[2]], &q);
            let a = [moved.xi1, moved.xi2, moved.xi3];
            let b = [lifted.xi1, lifted.xi2, lifted.xi3];
            let scale = b.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
            worst[3] = worst[3].max(max_abs_diff(&a, &b) / scale);
            if i == 0 {
                out.table.push(vec![t, moved.xi1, moved.xi2, moved.xi3, moved.casimir()]);
            }
        }
    }
    out.record("sl2-bracket-31", worst[0]);
    out.record("sl2-bracket-23", worst[1]);
    out.record("sl2-bracket-21", worst[2]);
    out.record("sl2-flow-equivariance", worst[3]);
    Ok(out)
}

fn calogero(p: &Params, ctx: &Context) -> Result<Outcome> {
    let s0 = MatFreeState::new(
        Sym2::new(p.number("x11"), p.number("x12"), p.number("x22")),
        Sym2::new(p.number("v11"), p.number("v12"), p.number("v22")),
    );
    let c0 = calogero_reduce(&s0)?;
    let tr = match &ctx.overrides.calogero_field {
        Some(f) => Integrator::new(p.number("dt")).run(f(c0.l), &c0.coords(), 0.0, p.number("t_end"))?,
        None => Integrator::new(p.number("dt")).run(calogero_field(c0.l), &c0.coords(), 0.0, p.number("t_end"))?,
    };
    let mut out = Outcome::new(Table::new(&["t", "q1", "q2", "p1", "p2", "l_drift"]));
    let (mut eig_err, mut l_drift) = (0.0_f64, 0.0_f64);
    let mut prev = c0;
    for (i, (t, y)) in tr.times.iter().zip(&tr.states).enumerate() {
        let flight = matrix_flight(&s0, *t);
        let reduced = calogero_reduce_from(&flight, Some(&prev.frame()))?;
        let x = flight.x;
        let mean = 0.5 * x.trace();
        let half = 0.5 * (x.c - x.a).hypot(2.0 * x.b);
        eig_err = eig_err.max((y[0] - (mean - half)).abs()).max((y[1] - (mean + half)).abs());
        let d = (reduced.l - c0.l).abs();
        l_drift = l_drift.max(d);
        prev = reduced;
        if i % 10 == 0 {
            out.table.push(vec![*t, y[0], y[1], y[2], y[3], d]);
        }
    }
    out.record("calogero-eigenvalue-match", eig_err);
    out.record("calogero-l-drift", l_drift);
    Ok(out)
}

fn random_sym2(rng: &mut ChaCha8Rng) -> Sym2 {
    Sym2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn hamilton_jacobi(p: &Params, ctx: &Context) -> Result<Outcome> {
    let (t, h) = (p.number("t"), p.number("h"));
    let mut rng = rng(ctx);
    let mut out = Outcome::new(Table::new(&["sample", "action", "p11", "p12", "p22", "error"]));
    let mut worst = 0.0_f64;
    for i in 0..p.integer("samples") {
        let (x0, xt) = (random_sym2(&mut rng), random_sym2(&mut rng));
        hj_action(&xt, &x0, t)?;
        let s = |z: &[f64]| hj_action(&Sym2::new(z[0], z[1], z[2]), &x0, t).unwrap_or(f64::NAN);
        let z = [xt.a, xt.b, xt.c];
        let grad: Vec<f64> = (0..3)
            .map(|k| {
                let mut e = [0.0; 3];
                e[k] = 1.0;
                finite_diff(s, &z, &e, 1, h)
            })
            .collect();
        let pm = xt.add(&x0.scale(-1.0)).scale(1.0 / t);
        let expected = [pm.a, 2.0 * pm.b, pm.c];
        let err = max_abs_diff(&grad, &expected);
        worst = worst.max(err);
        out.table.push(vec![i as f64, s(&z), pm.a, pm.b, pm.c, err]);
    }
    out.record("hj-gradient-match", worst);
    Ok(out)
}

fn monopole(p: &Params, _ctx: &Context) -> Result<Outcome> {
    let (k, m) = (p.number("k"), p.number("m"));
    let y0 = ["rx", "ry", "rz", "vx", "vy", "vz"].map(|n| p.number(n));
    let j = move |s: &[f64], i: usize| {
        monopole_invariant(&MonopoleState { r: [s[0], s[1], s[2]], v: [s[3], s[4], s[5]], k, m }).map(|v| v[i]).unwrap_or(f64::NAN)
    };
    let j0: Vec<f64> = (0..3).map(|i| j(&y0, i)).collect();
    let tr = Integrator::new(p.number("dt"))
        .record_every(100)
        .track("j0", move |_, s| j(s, 0))
        .track("j1", move |_, s| j(s, 1))
        .track("j2", move |_, s| j(s, 2))
        .run(monopole_field(k, m), &y0, 0.0, p.number("t_end"))?;
    let mut out = Outcome::new(Table::new(&["t", "x", "y", "z", "vx", "vy", "vz", "j_drift"]));
    for (t, s) in tr.times.iter().zip(&tr.states) {
        let d = (0..3).map(|i| (j(s, i) - j0[i]).abs()).fold(0.0, f64::max);
        let mut row = vec![*t];
        row.extend_from_slice(s);
        row.push(d);
        out.table.push(row);
    }
    out.record("monopole-j-drift", tr.drift.values().fold(0.0, |a: f64, &b| a.max(b)));
    Ok(out)
}

fn random_ts2(rng: &mut ChaCha8Rng) -> ([f64; 3], [f64; 3]) {
    let mut s: [f64; 6] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    SphericalPendulum::project(&mut s);
    ([s[0], s[1], s[2]], [s[3], s[4], s[5]])
}

fn ts2_tangency(p: &Params, ctx: &Context) -> Result<Outcome> {
    let mut rng = rng(ctx);
    let samples: Vec<_> = (0..p.integer("samples")).map(|_| random_ts2(&mut rng)).collect();
    let cs = ts2_constraints();
    let mut out = Outcome::new(Table::new(&["l", "rotation_residual", "boost_residual"]));
    let (mut rot, mut boost) = (0.0_f64, 0.0_f64);
    for l in 0..3 {
        let r = tangency_check(&rotation_generator(l), &cs, &samples);
        let b = tangency_check(&boost_generator(l), &cs, &samples);
        out.table.push(vec![l as f64, r, b]);
        rot = rot.max(r);
        boost = boost.max(b);
    }
    let transverse = |x: &[f64; 3], _: &[f64; 3]| ([0.0; 3], [x[0], 0.0, 0.0]);
    out.record("ts2-rotation-tangent", rot);
    out.record("ts2-boost-tangent", boost);
    out.record("ts2-nontangent-detected", tangency_check(&transverse, &cs, &samples));
    Ok(out)
}

fn horizontal_ts3(rng: &mut ChaCha8Rng) -> TS3Point {
    let mut s: [f64; 8] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    ts3_project(&mut s);
    let mut pt = TS3Point::from_slice(&s);
    let y = pt.y;
    let fiber = [-y[3], -y[2], y[1], y[0]];
    let k: f64 = (0..4).map(|i| pt.p[i] * fiber[i]).sum();
    for i in 0..4 {
        pt.p[i] -= k * fiber[i];
    }
    pt
}

fn spherical_pendulum(p: &Params, ctx: &Context) -> Result<Outcome> {
    let mut rng = rng(ctx);
    let dt = p.number("dt");
    let g = p.number("gravity");
    let (x, v) = random_ts2(&mut rng);
    let st = |s: &[f64]| TS2State { x: [s[0], s[1], s[2]], v: [s[3], s[4], s[5]] };
    let y0 = [x[0], x[1], x[2], v[0], v[1], v[2]];
    let pend = Integrator::new(dt)
        .record_every(1000)
        .project_with(SphericalPendulum::project)
        .track("E", move |_, s| energy_momentum_map(&st(s), g).0)
        .track("L", move |_, s| energy_momentum_map(&st(s), g).1)
        .run(SphericalPendulum::with_gravity(g).field(), &y0, 0.0, p.number("t_end"))?;

    let lift = horizontal_ts3(&mut rng);
    let split = |s: &[f64]| ([s[0], s[1], s[2], s[3]], [s[4], s[5], s[6], s[7]]);
    let up = Integrator::new(dt)
        .project_with(ts3_project)
        .track("sigma_k", move |_, s| {
            let (y, q) = split(s);
            sigma_k(&y, &q)
        })
        .run(ts3_hamiltonian_field(), &lift.to_array(), 0.0, p.number("lift_t_end"))?;
    let xs = up
        .states
        .iter()
        .map(|s| hopf_project(&TS3Point::from_slice(s), 1e-6))
        .collect::<Result<Vec<TS2State>>>()?;
    let projected = SphericalPendulum::with_gravity(2.0);
    let mut worst = 0.0_f64;
    let mut out = Outcome::new(Table::new(&[
        "t", "y0", "y1", "y2", "y3", "p0", "p1", "p2", "p3", "sigma_k", "x1", "x2", "x3",
    ]));
    for i in 0..xs.len() {
        if i > 0 && i + 1 < xs.len() {
            let a = projected.accel(&xs[i].x, &xs[i].v)?;
            let h = up.times[i + 1] - up.times[i];
            for c in 0..3 {
                let fd = (xs[i + 1].x[c] - 2.0 * xs[i].x[c] + xs[i - 1].x[c]) / (h * h);
                worst = worst.max((fd - a[c]).abs());
            }
        }
        if i % 50 == 0 {
            let s = &up.states[i];
            let (y, q) = split(s);
            let mut row = vec![up.times[i]];
            row.extend_from_slice(s);
            row.push(sigma_k(&y, &q));
            row.extend_from_slice(&xs[i].x);
            out.table.push(row);
        }
    }
    out.record("pendulum-energy-drift", pend.drift["E"]);
    out.record("pendulum-momentum-drift", pend.drift["L"]);
    out.record("ts3-sigma-drift", up.drift["sigma_k"]);
    out.record("hopf-pendulum-residual", worst);
    Ok(out)
}
