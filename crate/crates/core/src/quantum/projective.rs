use super::state::{check_dim, StateVector};
use crate::Result;
use num_complex::Complex64;

/// Connection form `θ(X) = ⟨ψ, X⟩ / ⟨ψ, ψ⟩` on the punctured cone.
pub fn theta_eval(psi: &StateVector, x: &StateVector) -> Result<Complex64> {
    let n = psi.nonzero_norm_sq()?;
    Ok(psi.inner(x)? / n)
}

/// Hermitian tensor `⟨X,Y⟩/N - ⟨X,ψ⟩⟨ψ,Y⟩/N²` with `N = ⟨ψ,ψ⟩`.
pub fn fubini_study(psi: &StateVector, x: &StateVector, y: &StateVector) -> Result<Complex64> {
    let n = psi.nonzero_norm_sq()?;
    check_dim(psi.dim(), x.dim())?;
    Ok(x.inner(y)? / n - x.inner(psi)? * psi.inner(y)? / (n * n))
}

/// The one-form `d_J log⟨ψ,ψ⟩` evaluated on a tangent vector `v`.
fn dj_log_norm(psi: &StateVector, v: &StateVector) -> Result<f64> {
    let n = psi.nonzero_norm_sq()?;
    Ok(2.0 * psi.inner(&v.times_i())?.re / n)
}

/// `d(d_J log⟨ψ,ψ⟩)(X, Y)` for constant `X`, `Y`, by centred differences
/// of the one-form with step `h`.
pub fn kahler_potential_form(psi: &StateVector, x: &StateVector, y: &StateVector, h: f64) -> Result<f64> {
    check_dim(psi.dim(), x.dim())?;
    check_dim(psi.dim(), y.dim())?;
    let x_of_y = (dj_log_norm(&psi.axpy(h, x)?, y)? - dj_log_norm(&psi.axpy(-h, x)?, y)?) / (2.0 * h);
    let y_of_x = (dj_log_norm(&psi.axpy(h, y)?, x)? - dj_log_norm(&psi.axpy(-h, y)?, x)?) / (2.0 * h);
    Ok(x_of_y - y_of_x)
}

/// Conformal factor relating the exterior derivative of `d_J log⟨ψ,ψ⟩`
/// to the imaginary part of [`fubini_study`].
pub const KAHLER_POTENTIAL_FACTOR: f64 = -4.0;

/// `|d(d_J log N)(X, Y) - c · Im h(X, Y)|` with `c = KAHLER_POTENTIAL_FACTOR`.
pub fn kahler_potential_check(psi: &StateVector, x: &StateVector, y: &StateVector, h: f64) -> Result<f64> {
    let fd = kahler_potential_form(psi, x, y, h)?;
    let exact = KAHLER_POTENTIAL_FACTOR * fubini_study(psi, x, y)?.im;
    Ok((fd - exact).abs())
}
