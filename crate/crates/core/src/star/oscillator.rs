use std::sync::Arc;

use num_complex::Complex64;

use super::{Alphabet, DeformSeries, NCPoly, RewriteSystem};
use crate::Result;

pub fn oscillator_alphabet() -> Arc<Alphabet> {
    Alphabet::new(&["a", "a+"])
}

/// The quotient by `a⁺a − q a a⁺ + r`, oriented as `a⁺a → q a a⁺ − r`.
pub fn oscillator_system(q: f64, r: f64) -> RewriteSystem {
    let al = oscillator_alphabet();
    let rhs = NCPoly::word(&al, &["a", "a+"])
        .expect("generators exist")
        .scale(&DeformSeries::real(q))
        .minus(&NCPoly::constant(&al, DeformSeries::real(r)));
    let rule = RewriteSystem::rule(&al, ["a+", "a"], rhs).expect("generators exist");
    RewriteSystem::new(&al, vec![rule]).expect("rule decreases the order")
}

/// The derivation `a ↦ −iωa`, `a⁺ ↦ iωa⁺` extended by the Leibniz rule.
pub fn oscillator_derivation(omega: f64, p: &NCPoly) -> Result<NCPoly> {
    let al = oscillator_alphabet();
    let a = NCPoly::generator(&al, "a")?.scale_complex(Complex64::new(0.0, -omega));
    let ad = NCPoly::generator(&al, "a+")?.scale_complex(Complex64::new(0.0, omega));
    p.derive_with(&[a, ad])
}

#[cfg(test)]
mod tests {
    use super::super::ncpoly::tests::random_poly;
    use super::super::confluence_probe;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gens() -> (NCPoly, NCPoly) {
        let al = oscillator_alphabet();
        (NCPoly::generator(&al, "a").unwrap(), NCPoly::generator(&al, "a+").unwrap())
    }

    #[test]
    fn canonical_relation() {
        let al = oscillator_alphabet();
        let (a, ad) = gens();
        let hbar = 0.3;
        let sys = oscillator_system(1.0, hbar);
        let nf = sys.normal_form(&ad.mul(&a).unwrap()).unwrap();
        assert_eq!(nf, NCPoly::word(&al, &["a", "a+"]).unwrap().minus(&NCPoly::constant(&al, DeformSeries::real(hbar))));
        let comm = sys.normal_form(&a.commutator(&ad).unwrap()).unwrap();
        assert_eq!(comm, NCPoly::constant(&al, DeformSeries::real(hbar)));
        let n = ad.mul(&a).unwrap();
        let ladder = sys.normal_form(&n.commutator(&a).unwrap()).unwrap();
        assert_eq!(ladder, a.scale(&DeformSeries::real(-hbar)));
        let normal = NCPoly::word(&al, &["a", "a", "a+"]).unwrap();
        assert_eq!(sys.normal_form(&normal).unwrap(), normal);
    }

    #[test]
    fn commutative_limit() {
        let sys = oscillator_system(1.0, 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let al = oscillator_alphabet();
        for _ in 0..50 {
            let x = random_poly(&mut rng, &al, 3, 3);
            let y = random_poly(&mut rng, &al, 3, 3);
            assert!(sys.normal_form(&x.commutator(&y).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn derivation_examples() {
        let al = oscillator_alphabet();
        let (a, ad) = gens();
        assert_eq!(oscillator_derivation(2.0, &a).unwrap(), a.scale_complex(Complex64::new(0.0, -2.0)));
        assert!(oscillator_derivation(2.0, &a.mul(&ad).unwrap()).unwrap().is_zero());
        let (q, r) = (0.5, 0.3);
        let sys = oscillator_system(q, r);
        let rel = ad.mul(&a).unwrap().minus(&a.mul(&ad).unwrap().scale(&DeformSeries::real(q))).plus(&NCPoly::constant(&al, DeformSeries::real(r)));
        assert!(sys.normal_form(&oscillator_derivation(1.3, &rel).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn confluent_and_idempotent() {
        let sys = oscillator_system(0.5, 0.3);
        assert!(confluence_probe(&sys, 200, 6, 7).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let al = oscillator_alphabet();
        for _ in 0..500 {
            let p = random_poly(&mut rng, &al, 3, 5);
            let nf = sys.normal_form(&p).unwrap();
            assert!(sys.is_normal(&nf));
            assert_eq!(sys.normal_form(&nf).unwrap(), nf);
        }
    }

    #[test]
    fn relation_generates_the_kernel() {
        let sys = oscillator_system(0.5, 0.3);
        let rel = &sys.relations()[0];
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let al = oscillator_alphabet();
        for _ in 0..100 {
            let x = random_poly(&mut rng, &al, 2, 3);
            let y = random_poly(&mut rng, &al, 2, 3);
            assert!(sys.normal_form(&x.times(rel).times(&y)).unwrap().is_zero());
        }
    }
}
