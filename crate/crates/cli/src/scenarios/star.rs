use super::{int, num, rng, Outcome, Scenario};
use crate::params::Params;
use crate::report::{CheckSpec, Table};
use crate::Context;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use reductionlab::star::*;
use reductionlab::Result;
use std::sync::Arc;

pub(super) fn all() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "oscillator",
            module: "star",
            topic: "deformed oscillator algebra, its time derivation and commutative limit",
            params: vec![
                num("q", "1", "deformation of the exchange relation"),
                num("r", "0.3", "constant term of the exchange relation"),
                num("omega", "1.3", "oscillator frequency"),
                int("samples", "50", "random polynomials"),
            ],
            checks: vec![
                CheckSpec::at_most("oscillator-derivation-kernel", 0.0, "time derivation is compatible with the quotient"),
                CheckSpec::at_most("oscillator-canonical-commutator", 0.0, "[a, a+] = r and [N, a] = -r a when q = 1"),
                CheckSpec::at_most("oscillator-commutative-limit", 0.0, "commutators vanish when r = 0 and q = 1"),
            ],
            run: oscillator,
        },
        Scenario {
            name: "woronowicz",
            module: "star",
            topic: "quantum SU(2) relations, the Heisenberg flow of H and the classical S3 to S2 reduction",
            params: vec![int("max_len", "4", "longest normal word in the flow check"), int("points", "100", "random points of S3")],
            checks: vec![
                CheckSpec::at_most("woronowicz-relations", 0.0, "recomputed relations in the quotient"),
                CheckSpec::at_most("woronowicz-flow-consistency", 0.0, "closed-form flow against the Heisenberg equation"),
                CheckSpec::at_most("classical-limit-table", 0.0, "first-order commutators against the quadratic bracket"),
                CheckSpec::at_most("s2-reduced-brackets", 0.0, "reduced brackets and the sphere relation"),
                CheckSpec::at_most("s3-s2-flow-intertwine", 1e-9, "flow on S3 projects to the reduced flow"),
                CheckSpec::at_most("stereographic-field", 1e-9, "reduced field in the stereographic plane"),
            ],
            run: woronowicz,
        },
        Scenario {
            name: "moyal-su2",
            module: "star",
            topic: "Moyal product on R4 and its reduction to polynomials on su(2)*",
            params: vec![int("samples", "50", "random cubic triples")],
            checks: vec![
                CheckSpec::at_most("moyal-associativity", 0.0, "associativity on random cubics"),
                CheckSpec::at_most("commutant-closure", 0.0, "products of invariants remain invariant"),
                CheckSpec::at_most("reduced-star-first-order", 0.0, "reduced product agrees with Moyal at first order"),
                CheckSpec::at_most("reduced-star-square", 0.0, "x_j * x_j = x_j^2 - theta^2/8"),
            ],
            run: moyal_su2,
        },
    ]
}

fn random_nc(rng: &mut ChaCha8Rng, al: &Arc<Alphabet>, terms: usize, max_len: usize) -> NCPoly {
    let n = al.len() as u8;
    (0..terms).fold(NCPoly::zero(al), |acc, _| {
        let len = rng.gen_range(0..=max_len);
        let w = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let c = DeformSeries::polynomial(&[rng.gen_range(-3..=3) as f64, rng.gen_range(-2..=2) as f64]);
        acc.add(&NCPoly::from_word(al, w, c)).expect("same alphabet")
    })
}

fn oscillator(p: &Params, ctx: &Context) -> Result<Outcome> {
    let (q, r, omega) = (p.number("q"), p.number("r"), p.number("omega"));
    let al = oscillator_alphabet();
    let sys = oscillator_system(q, r);
    let a = NCPoly::generator(&al, "a")?;
    let ad = NCPoly::generator(&al, "a+")?;
    let n = ad.mul(&a)?;

    let mut kernel = sys.normal_form(&oscillator_derivation(omega, &n)?)?.max_abs();
    for rel in sys.relations() {
        kernel = kernel.max(sys.normal_form(&oscillator_derivation(omega, &rel)?)?.max_abs());
    }
    let canon = oscillator_system(1.0, r);
    let canonical = canon
        .normal_form(&a.commutator(&ad)?.sub(&NCPoly::constant(&al, DeformSeries::real(r)))?)?
        .max_abs()
        .max(canon.normal_form(&n.commutator(&a)?.add(&a.scale(&DeformSeries::real(r)))?)?.max_abs());

    let classical = oscillator_system(1.0, 0.0);
    let mut rng = rng(ctx);
    let mut limit = 0.0_f64;
    let mut out = Outcome::new(Table::new(&["sample", "terms", "degree", "derivation_residual", "commutator_residual"]));
    for i in 0..p.integer("samples") {
        let f = random_nc(&mut rng, &al, 4, 4);
        let g = random_nc(&mut rng, &al, 4, 4);
        let d = sys
            .normal_form(&oscillator_derivation(omega, &f)?)?
            .sub(&sys.normal_form(&oscillator_derivation(omega, &sys.normal_form(&f)?)?)?)?
            .max_abs();
        kernel = kernel.max(d);
        let c = classical.normal_form(&f.commutator(&g)?)?.max_abs();
        limit = limit.max(c);
        out.table.push(vec![i as f64, f.len() as f64, f.degree() as f64, d, c]);
    }
    out.record("oscillator-derivation-kernel", kernel);
    out.record("oscillator-canonical-commutator", canonical);
    out.record("oscillator-commutative-limit", limit);
    Ok(out)
}

fn random_s3(rng: &mut ChaCha8Rng) -> S3State {
    let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

const COORD_NAMES: [&str; 4] = ["q1", "q2", "p1", "p2"];

fn woronowicz(p: &Params, ctx: &Context) -> Result<Outcome> {
    let mut out = Outcome::new(Table::new(&["t", "u", "v", "z", "intertwine_residual", "stereographic_residual"]));
    let mut relations = 0.0_f64;
    for c in su2q_relation_checks()? {
        if c.stated {
            if !c.holds() {
                out.notes.push(format!("stated relation does not hold in the quotient: {}", c.name));
            }
        } else {
            relations = relations.max(c.residual.max_abs());
        }
    }
    let flow = flow_consistency_check(p.integer("max_len"))?;

    let coords = real_coordinates();
    let mut table = 0.0_f64;
    let computed = quadratic_bracket_table();
    for (((a, b), expected), (_, stated)) in computed.iter().zip(stated_bracket_table()) {
        let limit = classical_limit(&coords[*a].commutator(&coords[*b])?)?;
        table = table.max(limit.sub(expected)?.max_abs());
        if limit != stated {
            out.notes.push(format!(
                "stated bracket {{{},{}}} disagrees with the classical limit of the commutator",
                COORD_NAMES[*a], COORD_NAMES[*b]
            ));
        }
    }
    let reduced = reduced_s2_checks()?.iter().map(|c| c.residual.max_abs()).fold(0.0, f64::max);

    let mut rng = rng(ctx);
    let (mut intertwine, mut stereo) = (0.0_f64, 0.0_f64);
    for _ in 0..p.integer("points") {
        let s = random_s3(&mut rng);
        let t = rng.gen_range(-2.0..2.0);
        let a = sphere_point(&s3_classical_flow(&s, t));
        let b = s2_reduced_flow(&sphere_point(&s), t);
        let ri = (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max);
        intertwine = intertwine.max(ri);
        let rs = if 1.0 - a[0] < 1e-3 {
            f64::NAN
        } else {
            let (x, y) = stereographic_project(a[0], a[1], a[2])?;
            let (dx, dy) = stereographic_pushforward(&a, &s2_reduced_field(&a))?;
            let (fx, fy) = planar_field(x, y);
            let r = (dx - fx).abs().max((dy - fy).abs());
            stereo = stereo.max(r);
            r
        };
        out.table.push(vec![t, a[0], a[1], a[2], ri, rs]);
    }
    out.record("woronowicz-relations", relations);
    out.record("woronowicz-flow-consistency", flow);
    out.record("classical-limit-table", table);
    out.record("s2-reduced-brackets", reduced);
    out.record("s3-s2-flow-intertwine", intertwine);
    out.record("stereographic-field", stereo);
    Ok(out)
}

fn random_cubic(rng: &mut ChaCha8Rng) -> Result<CommPoly> {
    let vs = s3_vars();
    (0..3).try_fold(CommPoly::zero(&vs), |acc, _| {
        let mut e = [0u32; 4];
        for _ in 0..rng.gen_range(0..=3) {
            e[rng.gen_range(0..4)] += 1;
        }
        acc.add(&CommPoly::monomial(&vs, &e, DeformSeries::real(rng.gen_range(-2..=2) as f64))?)
    })
}

fn moyal_su2(p: &Params, ctx: &Context) -> Result<Outcome> {
    let mut rng = rng(ctx);
    let mut assoc = 0.0_f64;
    let mut out = Outcome::new(Table::new(&["sample", "degree_f", "degree_g", "degree_h", "associator"]));
    for i in 0..p.integer("samples") {
        let (f, g, h) = (random_cubic(&mut rng)?, random_cubic(&mut rng)?, random_cubic(&mut rng)?);
        let left = moyal_product(&moyal_product(&f, &g)?, &h)?;
        let right = moyal_product(&f, &moyal_product(&g, &h)?)?;
        let r = left.sub(&right)?.max_abs();
        assoc = assoc.max(r);
        out.table.push(vec![i as f64, f.degree() as f64, g.degree() as f64, h.degree() as f64, r]);
    }
    let closure = commutant_closure_check()?;
    let calibration = calibrate_reduced_star()?;
    out.notes.push(format!("reduced product calibration: {calibration}"));
    let vs = su2_vars();
    let (mut first, mut square) = (0.0_f64, 0.0_f64);
    for j in 1..=3 {
        first = first.max(reduced_star_verify(j, &CommPoly::real(&vs, 1.0), calibration)?.max_abs());
        for k in 0..3 {
            first = first.max(reduced_star_verify(j, &CommPoly::var_index(&vs, k), calibration)?.grade(1).max_abs());
        }
        let xj = CommPoly::var_index(&vs, j - 1);
        let expected = xj.pow(2).add(&CommPoly::constant(&vs, DeformSeries::polynomial(&[0.0, 0.0, -0.125])))?;
        square = square.max(reduced_star_formula(j, &xj)?.sub(&expected)?.max_abs());
    }
    out.record("moyal-associativity", assoc);
    out.record("commutant-closure", closure);
    out.record("reduced-star-first-order", first);
    out.record("reduced-star-square", square);
    Ok(out)
}
