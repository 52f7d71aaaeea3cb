use super::state::{apply_op, check_dim, momentum_map, CMatrix, HermitianMatrix, StateVector};
use crate::Result;
use num_complex::Complex64;

/// Sign `ε` in `{f_A, f_B}_ω = ε f_{-i[A,B]}` for the coordinate bracket
/// built from `Ω = ∂_q ∧ ∂_p`.
pub const OMEGA_BRACKET_SIGN: f64 = 1.0;

/// Sign `s` in `G + iΩ = R + i s Λ` when `Λ` is evaluated with
/// `[A,B]_- = i[A,B]` and `⟨ξ, C⟩ = ½ Tr ξC`.
pub const PULLBACK_LAMBDA_SIGN: f64 = -1.0;

const HALF: Complex64 = Complex64::new(0.5, 0.0);

/// `f_M(ψ) = ½⟨ψ, Mψ⟩` for an arbitrary operator.
pub fn f_op(m: &CMatrix, psi: &StateVector) -> Result<Complex64> {
    Ok(psi.inner(&apply_op(m, psi)?)? * HALF)
}

/// `f_A(ψ) = ½⟨ψ, Aψ⟩`, real for Hermitian `A`.
pub fn f_a(a: &HermitianMatrix, psi: &StateVector) -> Result<f64> {
    Ok(f_op(a.matrix(), psi)?.re)
}

/// Normalised expectation value `⟨ψ, Aψ⟩ / ⟨ψ, ψ⟩`.
pub fn e_a(a: &HermitianMatrix, psi: &StateVector) -> Result<f64> {
    let n = psi.nonzero_norm_sq()?;
    Ok(2.0 * f_a(a, psi)? / n)
}

/// Components of `df_M` in the coordinate basis `(dq_1..dq_n, dp_1..dp_n)`.
/// The entries are complex when `M` is not Hermitian.
pub fn quadratic_gradient(m: &CMatrix, psi: &StateVector) -> Result<Vec<Complex64>> {
    let n = psi.dim();
    check_dim(m.nrows(), n)?;
    let m_psi = m * psi.column();
    let madj_psi = m.adjoint() * psi.column();
    let dq = (0..n).map(|k| (m_psi[k] + madj_psi[k].conj()) * HALF);
    let dp = (0..n).map(|k| (m_psi[k] - madj_psi[k].conj()) * Complex64::new(0.0, -0.5));
    Ok(dq.chain(dp.collect::<Vec<_>>()).collect())
}

fn contract_omega(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    let n = a.len() / 2;
    (0..n).map(|k| a[k] * b[n + k] - a[n + k] * b[k]).sum()
}

fn contract_g(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Ω(df_M, df_N)`, extended complex-bilinearly to arbitrary operators.
pub fn bracket_omega_op(m: &CMatrix, n: &CMatrix, psi: &StateVector) -> Result<Complex64> {
    Ok(contract_omega(&quadratic_gradient(m, psi)?, &quadratic_gradient(n, psi)?))
}

/// `G(df_M, df_N)`, extended complex-bilinearly to arbitrary operators.
pub fn bracket_g_op(m: &CMatrix, n: &CMatrix, psi: &StateVector) -> Result<Complex64> {
    Ok(contract_g(&quadratic_gradient(m, psi)?, &quadratic_gradient(n, psi)?))
}

pub fn bracket_omega(a: &HermitianMatrix, b: &HermitianMatrix, psi: &StateVector) -> Result<f64> {
    Ok(bracket_omega_op(a.matrix(), b.matrix(), psi)?.re)
}

pub fn bracket_g(a: &HermitianMatrix, b: &HermitianMatrix, psi: &StateVector) -> Result<f64> {
    Ok(bracket_g_op(a.matrix(), b.matrix(), psi)?.re)
}

/// `-i[A, B]`.
pub fn lie_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    (a * b - b * a) * Complex64::new(0.0, -1.0)
}

/// `AB + BA`.
pub fn jordan_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b + b * a
}

/// Measures the bracket sign on the two-level case `σx, σy` at `(1, 0)`.
pub fn measure_omega_sign() -> f64 {
    let (x, y) = (HermitianMatrix::pauli_x(), HermitianMatrix::pauli_y());
    let psi = StateVector::from_real(&[1.0, 0.0]).expect("fixed state");
    let coord = bracket_omega(&x, &y, &psi).expect("fixed dimensions");
    let algebraic = f_op(&lie_product(x.matrix(), y.matrix()), &psi).expect("fixed dimensions").re;
    coord / algebraic
}

/// Non-local product `(f_A ⋆ f_B)(ψ) = f_{AB}(ψ)`.
pub fn star_func(a: &CMatrix, b: &CMatrix, psi: &StateVector) -> Result<Complex64> {
    check_dim(a.ncols(), b.nrows())?;
    f_op(&(a * b), psi)
}

/// Residual of the derivation property `{f_A, f_B ⋆ f_C} = {f_A, f_B} ⋆ f_C + f_B ⋆ {f_A, f_C}`.
/// The left side is computed from `Ω`; brackets on the right are the
/// operator-level `ε f_{-i[A,·]}`.
pub fn leibniz_check(a: &HermitianMatrix, b: &HermitianMatrix, c: &HermitianMatrix, psi: &StateVector) -> Result<f64> {
    let (am, bm, cm) = (a.matrix(), b.matrix(), c.matrix());
    let lhs = bracket_omega_op(am, &(bm * cm), psi)?;
    let eps = Complex64::new(OMEGA_BRACKET_SIGN, 0.0);
    let rhs = star_func(&(lie_product(am, bm) * eps), cm, psi)? + star_func(bm, &(lie_product(am, cm) * eps), psi)?;
    Ok((lhs - rhs).norm())
}

/// The pair `(R(ξ)(Â, B̂), Λ(ξ)(Â, B̂))` with `⟨ξ, C⟩ = ½ Tr ξC`,
/// `[A,B]_+ = AB + BA` and `[A,B]_- = i[A,B]`.
pub fn r_lambda(xi: &CMatrix, a: &HermitianMatrix, b: &HermitianMatrix) -> Result<(f64, f64)> {
    check_dim(xi.nrows(), a.dim())?;
    check_dim(a.dim(), b.dim())?;
    let (am, bm) = (a.matrix(), b.matrix());
    let plus = jordan_product(am, bm);
    let minus = (am * bm - bm * am) * Complex64::i();
    let r = (xi * plus).trace() * HALF;
    let l = (xi * minus).trace() * HALF;
    Ok((r.re, l.re))
}

/// `|G(df_A, df_B) + iΩ(df_A, df_B) - (R + i s Λ)(μ(ψ))(Â, B̂)|`.
pub fn pullback_residual(a: &HermitianMatrix, b: &HermitianMatrix, psi: &StateVector) -> Result<f64> {
    let lhs = Complex64::new(bracket_g(a, b, psi)?, bracket_omega(a, b, psi)?);
    let (r, l) = r_lambda(&momentum_map(psi), a, b)?;
    Ok((lhs - Complex64::new(r, PULLBACK_LAMBDA_SIGN * l)).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::finite_diff;
    use crate::quantum::state::{complexify, realify};
    use crate::Error;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> HermitianMatrix {
        let m = CMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        HermitianMatrix::new((&m + m.adjoint()) * Complex64::new(0.5, 0.0)).unwrap()
    }

    pub(crate) fn random_state(rng: &mut ChaCha8Rng, n: usize) -> StateVector {
        StateVector::new((0..n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect())
            .unwrap()
    }

    #[test]
    fn identity_values() {
        let psi = StateVector::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]).unwrap();
        let id = HermitianMatrix::identity(2);
        assert!((f_a(&id, &psi).unwrap() - 0.5).abs() < 1e-15);
        assert!((e_a(&id, &psi).unwrap() - 1.0).abs() < 1e-15);
        assert!((star_func(id.matrix(), id.matrix(), &psi).unwrap() - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        let zero = StateVector::from_real(&[0.0, 0.0]).unwrap();
        assert_eq!(e_a(&id, &zero), Err(Error::ZeroVector));
    }

    #[test]
    fn expectation_is_projective_and_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = random_hermitian(&mut rng, 3);
            let psi = random_state(&mut rng, 3);
            let e = e_a(&a, &psi).unwrap();
            let lam = Complex64::new(rng.gen_range(0.1..2.0), rng.gen_range(-2.0..2.0));
            assert!((e_a(&a, &psi.scale(lam)).unwrap() - e).abs() < 1e-12);
            assert!((e_a(&a.scale(-2.5), &psi).unwrap() + 2.5 * e).abs() < 1e-12);
        }
    }

    #[test]
    fn expectation_constant_along_dilation_and_phase() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let a = random_hermitian(&mut rng, 3);
            let psi = random_state(&mut rng, 3);
            let x = realify(&psi);
            let f = |y: &[f64]| e_a(&a, &complexify(y).unwrap()).unwrap();
            let delta = x.clone();
            let j_delta = realify(&psi.times_i());
            assert!(finite_diff(f, &x, &delta, 1, 1e-5).abs() < 1e-8);
            assert!(finite_diff(f, &x, &j_delta, 1, 1e-5).abs() < 1e-8);
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_hermitian(&mut rng, 3);
        let psi = random_state(&mut rng, 3);
        let grad = quadratic_gradient(a.matrix(), &psi).unwrap();
        let x = realify(&psi);
        for (k, g) in grad.iter().enumerate() {
            let mut e = vec![0.0; x.len()];
            e[k] = 1.0;
            let d = finite_diff(|y| f_a(&a, &complexify(y).unwrap()).unwrap(), &x, &e, 1, 1e-5);
            assert!((d - g.re).abs() < 1e-9 && g.im == 0.0);
        }
    }

    #[test]
    fn measured_sign_is_the_declared_constant() {
        assert_eq!(measure_omega_sign(), OMEGA_BRACKET_SIGN);
        let psi = StateVector::from_real(&[1.0, 0.0]).unwrap();
        let (x, y) = (HermitianMatrix::pauli_x(), HermitianMatrix::pauli_y());
        assert!((f_op(&lie_product(x.matrix(), y.matrix()), &psi).unwrap().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn brackets_match_matrix_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for &n in &[2usize, 3, 4, 8] {
            for _ in 0..125 {
                let a = random_hermitian(&mut rng, n);
                let b = random_hermitian(&mut rng, n);
                let psi = random_state(&mut rng, n);
                let w = bracket_omega(&a, &b, &psi).unwrap();
                let expect_w = OMEGA_BRACKET_SIGN * f_op(&lie_product(a.matrix(), b.matrix()), &psi).unwrap().re;
                assert!((w - expect_w).abs() < 1e-10);
                let g = bracket_g(&a, &b, &psi).unwrap();
                let expect_g = f_op(&jordan_product(a.matrix(), b.matrix()), &psi).unwrap().re;
                assert!((g - expect_g).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn bracket_special_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_hermitian(&mut rng, 4);
        let psi = random_state(&mut rng, 4);
        assert!(bracket_omega(&a, &a, &psi).unwrap().abs() < 1e-14);
        let g = bracket_g(&a, &HermitianMatrix::identity(4), &psi).unwrap();
        assert!((g - 2.0 * f_a(&a, &psi).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn star_is_associative_and_leibniz_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let a = random_hermitian(&mut rng, 4);
            let b = random_hermitian(&mut rng, 4);
            let c = random_hermitian(&mut rng, 4);
            let psi = random_state(&mut rng, 4);
            let (am, bm, cm) = (a.matrix(), b.matrix(), c.matrix());
            let left = star_func(am, &(bm * cm), &psi).unwrap();
            let right = star_func(&(am * bm), cm, &psi).unwrap();
            assert!((left - right).norm() < 1e-12);
            assert!(leibniz_check(&a, &b, &c, &psi).unwrap() < 1e-10);
        }
    }

    #[test]
    fn pullback_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = random_hermitian(&mut rng, 3);
            let b = random_hermitian(&mut rng, 3);
            let psi = random_state(&mut rng, 3);
            assert!(pullback_residual(&a, &b, &psi).unwrap() < 1e-10);
        }
    }

    #[test]
    fn lambda_sign_is_forced() {
        let psi = StateVector::from_real(&[1.0, 0.0]).unwrap();
        let (x, y) = (HermitianMatrix::pauli_x(), HermitianMatrix::pauli_y());
        let (r, l) = r_lambda(&momentum_map(&psi), &x, &y).unwrap();
        assert!(r.abs() < 1e-15);
        assert!((l + 1.0).abs() < 1e-15);
        assert!((bracket_omega(&x, &y, &psi).unwrap() - 1.0).abs() < 1e-15);
    }
}
