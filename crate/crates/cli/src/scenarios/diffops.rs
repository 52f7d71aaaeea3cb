use super::{int, num, Outcome, Scenario};
use crate::params::Params;
use crate::report::{CheckSpec, Table};
use crate::Context;
use num_complex::Complex64;
use reductionlab::diffops::*;
use reductionlab::numeric::{bessel_j, quad_periodic};
use reductionlab::quantum::{bessel_sector_identity, sector_propagator};
use reductionlab::Result;
use std::f64::consts::TAU;

pub(super) fn all() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "ks-hydrogen",
            module: "diffops",
            topic: "conformal Kepler operator on R4 projected to the hydrogen operator on R3",
            params: vec![
                num("k", "1", "Coulomb coupling"),
                int("basis_degree", "4", "largest monomial degree probed"),
                num("r_max", "60", "radial box size"),
                int("n", "4000", "interior grid points"),
            ],
            checks: vec![
                CheckSpec::at_most("ks-projectability", 0.0, "conformal Kepler operator descends exactly"),
                CheckSpec::at_least("ks-laplacian-not-projectable", 0.1, "the bare Laplacian does not descend"),
                CheckSpec::at_most("hydrogen-level-0", 1e-3, "ground level against -k^2/2"),
                CheckSpec::at_most("hydrogen-level-1", 1e-3, "first excited level"),
                CheckSpec::at_most("hydrogen-level-2", 2e-3, "second excited level"),
            ],
            run: ks_hydrogen,
        },
        Scenario {
            name: "radial-sector",
            module: "diffops",
            topic: "angular sectors of the planar free particle and their propagators",
            params: vec![
                int("max_m", "3", "largest angular momentum"),
                int("nodes", "256", "quadrature nodes for the Bessel identity"),
                num("t", "0.7", "propagation time"),
            ],
            checks: vec![
                CheckSpec::at_most("sector-similarity", 0.0, "half-density conjugation of each sector Hamiltonian"),
                CheckSpec::at_most("bessel-identity", 1e-8, "angular integral of the plane wave"),
                CheckSpec::at_most("sector-propagator", 1e-6, "closed form against the projected free kernel"),
            ],
            run: radial_sector,
        },
    ]
}

fn ks_hydrogen(p: &Params, _ctx: &Context) -> Result<Outcome> {
    let k = p.number("k");
    let deg = p.integer("basis_degree") as u32;
    let map = ks_map();
    let proj = projectability_check(&conformal_kepler_op(k), &hydrogen_op(k), &map, deg)?;
    let lap = projectability_check(&laplacian(4), &laplacian(3), &map, deg)?;
    let levels = hydrogen_radial_solve(k, p.number("r_max"), p.integer("n"), 3)?;
    let mut out = Outcome::new(Table::new(&["m", "numeric", "exact", "error", "oscillator_frequency"]));
    let mut errs = [0.0; 3];
    for (m, e) in levels.iter().enumerate() {
        let exact = hydrogen_level(k, m as u32);
        errs[m] = (e - exact).abs();
        out.table.push(vec![m as f64, *e, exact, errs[m], oscillator_frequency(exact)?]);
    }
    out.record("ks-projectability", proj);
    out.record("ks-laplacian-not-projectable", lap);
    out.record("hydrogen-level-0", errs[0]);
    out.record("hydrogen-level-1", errs[1]);
    out.record("hydrogen-level-2", errs[2]);
    Ok(out)
}

fn projected_kernel(m: u32, qt: f64, q0: f64, t: f64, n: usize) -> Result<Complex64> {
    let f = |phi: f64| {
        let r2 = qt * qt + q0 * q0 - 2.0 * qt * q0 * phi.cos();
        Complex64::from_polar(1.0, r2 / (2.0 * t) - m as f64 * phi) / Complex64::new(0.0, TAU * t)
    };
    Ok(quad_periodic(f, n)? * (qt * q0).sqrt())
}

fn radial_sector(p: &Params, _ctx: &Context) -> Result<Outcome> {
    let max_m = p.integer("max_m") as u32;
    let nodes = p.integer("nodes");
    let t = p.number("t");
    let mut similarity = 0.0_f64;
    for m in 0..=max_m as i32 {
        for j in -2..=6 {
            similarity = similarity.max(radial_sector_check(m, &HalfPowerPoly::power(j, 1.0)));
        }
    }
    let mut out = Outcome::new(Table::new(&["m", "q", "bessel_j", "identity_residual", "propagator_re", "propagator_im", "propagator_residual"]));
    let (mut bessel, mut prop) = (0.0_f64, 0.0_f64);
    for m in 0..=max_m {
        for i in 1..=8 {
            let q = 0.5 * i as f64;
            let id = bessel_sector_identity(m, 1.3, q, nodes)?;
            bessel = bessel.max(id);
            let k = sector_propagator(m, q, 1.1, t)?;
            let oracle = projected_kernel(m, q, 1.1, t, 4 * nodes)?;
            let r = (k - oracle).norm();
            prop = prop.max(r);
            out.table.push(vec![m as f64, q, bessel_j(m, 1.3 * q), id, k.re, k.im, r]);
        }
    }
    out.record("sector-similarity", similarity);
    out.record("bessel-identity", bessel);
    out.record("sector-propagator", prop);
    Ok(out)
}
