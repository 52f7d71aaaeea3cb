use num_complex::Complex64;

use super::commpoly::s3_vars;
use super::woronowicz::{woronowicz_alphabet, woronowicz_system};
use super::{CommPoly, DeformSeries, NCPoly};
use crate::{Error, Result};

/// Factor turning the first-order part of a commutator into the real
/// quadratic bracket.
pub const BRACKET_CONVENTION: Complex64 = Complex64::new(0.0, 1.0);

fn s3(name: &str) -> CommPoly {
    CommPoly::var(&s3_vars(), name).expect("known variable")
}

/// Commutative images `ν ↦ q1 + i p1`, `ν* ↦ q1 − i p1`, `α ↦ q2 + i p2`,
/// `α* ↦ q2 − i p2`.
pub fn generator_images() -> [CommPoly; 4] {
    let i = Complex64::i();
    let (q1, q2, p1, p2) = (s3("q1"), s3("q2"), s3("p1"), s3("p2"));
    [
        q1.plus(&p1.scale_complex(i)),
        q1.minus(&p1.scale_complex(i)),
        q2.plus(&p2.scale_complex(i)),
        q2.minus(&p2.scale_complex(i)),
    ]
}

/// Noncommutative real coordinates `(q1, q2, p1, p2)` built from the
/// generators: `q = (g + g*)/2`, `p = (g − g*)/(2i)`.
pub fn real_coordinates() -> [NCPoly; 4] {
    let al = woronowicz_alphabet();
    let g = |s: &str| NCPoly::generator(&al, s).expect("generator exists");
    let half = Complex64::new(0.5, 0.0);
    let over_2i = Complex64::new(0.0, -0.5);
    [
        g("nu").plus(&g("nu*")).scale_complex(half),
        g("alpha").plus(&g("alpha*")).scale_complex(half),
        g("nu").minus(&g("nu*")).scale_complex(over_2i),
        g("alpha").minus(&g("alpha*")).scale_complex(over_2i),
    ]
}

/// First-order part of a commutator in the deformation parameter, mapped to
/// a commutative polynomial in `(q1, q2, p1, p2)` and multiplied by
/// [`BRACKET_CONVENTION`].
pub fn classical_limit(c: &NCPoly) -> Result<CommPoly> {
    let nf = woronowicz_system().normal_form(c)?;
    if !nf.taylor(0).is_zero() {
        return Err(Error::NotACommutator);
    }
    let images = generator_images();
    let vs = s3_vars();
    let mut out = CommPoly::zero(&vs);
    for (w, coeff) in nf.terms() {
        let c1 = coeff.taylor(1) * BRACKET_CONVENTION;
        let term = w.iter().fold(CommPoly::constant(&vs, DeformSeries::constant(c1)), |acc, &s| acc.times(&images[s as usize]));
        out = out.plus(&term);
    }
    Ok(out)
}

/// Brackets `{x_a, x_b}` for `a < b` in the order `(q1, q2, p1, p2)`.
pub fn quadratic_bracket_table() -> Vec<((usize, usize), CommPoly)> {
    let (q1, q2, p1, p2) = (s3("q1"), s3("q2"), s3("p1"), s3("p2"));
    vec![
        ((0, 1), q1.times(&p2).scale_real(-1.0)),
        ((0, 2), CommPoly::zero(&s3_vars())),
        ((0, 3), q1.times(&q2)),
        ((1, 2), p1.times(&p2)),
        ((1, 3), q1.pow(2).plus(&p1.pow(2)).scale_real(-1.0)),
        ((2, 3), p1.times(&q2)),
    ]
}

/// The same table with `{p1, p2} = q1 q2`, as first written down.
pub fn stated_bracket_table() -> Vec<((usize, usize), CommPoly)> {
    let mut t = quadratic_bracket_table();
    t[5].1 = s3("q1").times(&s3("q2"));
    t
}

fn bracket_from_table(table: &[((usize, usize), CommPoly)], f: &CommPoly, g: &CommPoly) -> Result<CommPoly> {
    let vs = s3_vars();
    if *f.vars() != vs || *g.vars() != vs {
        return Err(Error::AlphabetMismatch);
    }
    let mut out = CommPoly::zero(&vs);
    for ((a, b), pab) in table {
        let term = f.derive(*a).times(&g.derive(*b)).minus(&f.derive(*b).times(&g.derive(*a)));
        out = out.plus(&term.times(pab));
    }
    Ok(out)
}

/// Quadratic Poisson bracket on `R⁴` extended by the Leibniz rule.
pub fn s3_poisson(f: &CommPoly, g: &CommPoly) -> Result<CommPoly> {
    bracket_from_table(&quadratic_bracket_table(), f, g)
}

/// Bracket built from [`stated_bracket_table`].
pub fn s3_poisson_stated(f: &CommPoly, g: &CommPoly) -> Result<CommPoly> {
    bracket_from_table(&stated_bracket_table(), f, g)
}

/// `q1² + q2² + p1² + p2²`.
pub fn s3_casimir() -> CommPoly {
    ["q1", "q2", "p1", "p2"].iter().fold(CommPoly::zero(&s3_vars()), |acc, v| acc.plus(&s3(v).pow(2)))
}

/// Invariants `(u, v, z)` of the fiber action, as polynomials on `R⁴`.
pub fn sphere_generators() -> [CommPoly; 3] {
    let (q1, q2, p1, p2) = (s3("q1"), s3("q2"), s3("p1"), s3("p2"));
    [
        p2.pow(2).plus(&q2.pow(2)).minus(&p1.pow(2)).minus(&q1.pow(2)),
        p1.times(&p2).plus(&q1.times(&q2)).scale_real(2.0),
        p1.times(&q2).minus(&q1.times(&p2)).scale_real(2.0),
    ]
}

/// A named polynomial identity with its residual.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCheck {
    pub name: &'static str,
    pub residual: CommPoly,
}

impl PolyCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Reduced brackets of `(u, v, z)` and the sphere relation, written
/// homogeneously with the Casimir `C` in place of the constant 1.
pub fn reduced_s2_checks() -> Result<Vec<PolyCheck>> {
    let [u, v, z] = sphere_generators();
    let c = s3_casimir();
    let c_minus_u = c.minus(&u).scale_real(2.0);
    Ok(vec![
        PolyCheck { name: "{v,u} = 2(1-u)z", residual: s3_poisson(&v, &u)?.minus(&c_minus_u.times(&z)) },
        PolyCheck { name: "{u,z} = 2(1-u)v", residual: s3_poisson(&u, &z)?.minus(&c_minus_u.times(&v)) },
        PolyCheck { name: "{z,v} = 2(1-u)u", residual: s3_poisson(&z, &v)?.minus(&c_minus_u.times(&u)) },
        PolyCheck { name: "u^2+v^2+z^2 = 1", residual: u.pow(2).plus(&v.pow(2)).plus(&z.pow(2)).minus(&c.pow(2)) },
    ])
}

/// Point of `S³ ⊂ R⁴` as `(q1, q2, p1, p2)`.
pub type S3State = [f64; 4];

/// Closed-form flow of `2(q1² + p1²)(q2∂p2 − p2∂q2)`.
pub fn s3_classical_flow(s: &S3State, t: f64) -> S3State {
    let [q1, q2, p1, p2] = *s;
    let (sn, cs) = (2.0 * t * (q1 * q1 + p1 * p1)).sin_cos();
    [q1, -sn * p2 + cs * q2, p1, cs * p2 + sn * q2]
}

/// `(u, v, z)` of a point of `R⁴`.
pub fn sphere_point(s: &S3State) -> [f64; 3] {
    let [q1, q2, p1, p2] = *s;
    [
        p2 * p2 + q2 * q2 - p1 * p1 - q1 * q1,
        2.0 * (p1 * p2 + q1 * q2),
        2.0 * (p1 * q2 - q1 * p2),
    ]
}

/// Closed-form flow of `(1 − u)(z∂v − v∂z)` on `S²`.
pub fn s2_reduced_flow(p: &[f64; 3], t: f64) -> [f64; 3] {
    let [u, v, z] = *p;
    let (sn, cs) = ((1.0 - u) * t).sin_cos();
    [u, v * cs + z * sn, -v * sn + z * cs]
}

/// The vector field `(1 − u)(z∂v − v∂z)` as `(u̇, v̇, ż)`.
pub fn s2_reduced_field(p: &[f64; 3]) -> [f64; 3] {
    let [u, v, z] = *p;
    [0.0, (1.0 - u) * z, -(1.0 - u) * v]
}

/// `(x, y) = (v, z) / (1 − u)`.
pub fn stereographic_project(u: f64, v: f64, z: f64) -> Result<(f64, f64)> {
    let d = 1.0 - u;
    if d.abs() < 1e-12 {
        return Err(Error::Domain("stereographic projection at the north pole".into()));
    }
    Ok((v / d, z / d))
}

/// Tangent map of [`stereographic_project`] applied to `(du, dv, dz)`.
pub fn stereographic_pushforward(p: &[f64; 3], dp: &[f64; 3]) -> Result<(f64, f64)> {
    let [u, v, z] = *p;
    let d = 1.0 - u;
    if d.abs() < 1e-12 {
        return Err(Error::Domain("stereographic projection at the north pole".into()));
    }
    Ok((dp[1] / d + v * dp[0] / (d * d), dp[2] / d + z * dp[0] / (d * d)))
}

/// Image of the reduced field in the plane: `2/(x² + y² + 1) (y∂x − x∂y)`.
pub fn planar_field(x: f64, y: f64) -> (f64, f64) {
    let f = 2.0 / (x * x + y * y + 1.0);
    (f * y, -f * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_cubic(rng: &mut ChaCha8Rng) -> CommPoly {
        let vs = s3_vars();
        (0..4).fold(CommPoly::zero(&vs), |acc, _| {
            let mut e = [0u32; 4];
            for _ in 0..rng.gen_range(0..=3) {
                e[rng.gen_range(0..4)] += 1;
            }
            acc.plus(&CommPoly::monomial(&vs, &e, DeformSeries::real(rng.gen_range(-3..=3) as f64)).unwrap())
        })
    }

    fn random_s3(rng: &mut ChaCha8Rng) -> S3State {
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.map(|x| x / n)
    }

    #[test]
    fn classical_limit_reproduces_table() {
        let coords = real_coordinates();
        for ((a, b), expected) in quadratic_bracket_table() {
            let c = coords[a].commutator(&coords[b]).unwrap();
            assert_eq!(classical_limit(&c).unwrap(), expected, "pair {a},{b}");
        }
        let al = woronowicz_alphabet();
        assert_eq!(classical_limit(&NCPoly::one(&al)), Err(Error::NotACommutator));
    }

    #[test]
    fn convention_is_fixed_by_one_bracket() {
        let coords = real_coordinates();
        let raw = woronowicz_system().normal_form(&coords[3].commutator(&coords[1]).unwrap()).unwrap().taylor(1);
        let images = generator_images();
        let vs = s3_vars();
        let mut mapped = CommPoly::zero(&vs);
        for (w, c) in raw.terms() {
            let t = w.iter().fold(CommPoly::constant(&vs, c.clone()), |acc, &s| acc.times(&images[s as usize]));
            mapped = mapped.plus(&t);
        }
        let target = s3("q1").pow(2).plus(&s3("p1").pow(2));
        assert_eq!(mapped.scale_complex(BRACKET_CONVENTION), target);
    }

    #[test]
    fn casimir_and_stated_typo() {
        let c = s3_casimir();
        for v in ["q1", "q2", "p1", "p2"] {
            assert!(s3_poisson(&c, &s3(v)).unwrap().is_zero());
        }
        assert!(!s3_poisson_stated(&c, &s3("p1")).unwrap().is_zero());
    }

    #[test]
    fn jacobi_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let (f, g, h) = (random_cubic(&mut rng), random_cubic(&mut rng), random_cubic(&mut rng));
            let j = s3_poisson(&f, &s3_poisson(&g, &h).unwrap())
                .unwrap()
                .plus(&s3_poisson(&g, &s3_poisson(&h, &f).unwrap()).unwrap())
                .plus(&s3_poisson(&h, &s3_poisson(&f, &g).unwrap()).unwrap());
            assert!(j.is_zero());
        }
    }

    #[test]
    fn reduced_brackets() {
        for check in reduced_s2_checks().unwrap() {
            assert!(check.holds(), "{}: {:?}", check.name, check.residual);
        }
    }

    #[test]
    fn flows_intertwine() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let s = random_s3(&mut rng);
            let t = rng.gen_range(-2.0..2.0);
            let moved = s3_classical_flow(&s, t);
            assert_eq!((moved[0], moved[2]), (s[0], s[2]));
            let a = sphere_point(&moved);
            let b = s2_reduced_flow(&sphere_point(&s), t);
            for i in 0..3 {
                assert!((a[i] - b[i]).abs() < 1e-9);
            }
        }
        assert_eq!(s3_classical_flow(&[0.1, 0.2, 0.3, 0.4], 0.0), [0.1, 0.2, 0.3, 0.4]);
    }

    #[test]
    fn stereographic_image_of_reduced_field() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let p = sphere_point(&random_s3(&mut rng));
            if 1.0 - p[0] < 1e-3 {
                continue;
            }
            let (x, y) = stereographic_project(p[0], p[1], p[2]).unwrap();
            let (dx, dy) = stereographic_pushforward(&p, &s2_reduced_field(&p)).unwrap();
            let (fx, fy) = planar_field(x, y);
            assert!((dx - fx).abs() < 1e-9 && (dy - fy).abs() < 1e-9);
        }
        assert!(stereographic_project(1.0, 0.0, 0.0).is_err());
    }
}
