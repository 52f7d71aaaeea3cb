use super::brackets::{bracket_omega, e_a, f_a, OMEGA_BRACKET_SIGN};
use super::state::{apply_op, check_dim, CMatrix, DensityMatrix, HermitianMatrix, StateVector};
use crate::{Error, Result};
use num_complex::Complex64;

/// Step used for the centred time derivative in the Ehrenfest check.
pub const EHRENFEST_STEP: f64 = 1e-4;

/// Exact unitary evolution generated by a Hermitian Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evolution {
    pub hbar: f64,
}

impl Default for Evolution {
    fn default() -> Self {
        Self { hbar: 1.0 }
    }
}

impl Evolution {
    pub fn new(hbar: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidArgument(format!("hbar must be positive, got {hbar}")));
        }
        Ok(Self { hbar })
    }

    /// `U(t) = exp(-iHt/ħ)`.
    pub fn propagator(&self, h: &HermitianMatrix, t: f64) -> CMatrix {
        let s = t / self.hbar;
        h.function(|l| Complex64::from_polar(1.0, -l * s))
    }

    pub fn schrodinger(&self, h: &HermitianMatrix, psi0: &StateVector, t: f64) -> Result<StateVector> {
        apply_op(&self.propagator(h, t), psi0)
    }

    /// `A(t) = U^† A U`, solving `iħ dA/dt = [A, H]`.
    pub fn heisenberg(&self, h: &HermitianMatrix, a: &HermitianMatrix, t: f64) -> Result<HermitianMatrix> {
        check_dim(h.dim(), a.dim())?;
        let u = self.propagator(h, t);
        hermitian_part(u.adjoint() * a.matrix() * u)
    }

    /// `ρ(t) = U ρ U^†`, solving `iħ dρ/dt = [H, ρ]`.
    pub fn von_neumann(&self, h: &HermitianMatrix, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
        check_dim(h.dim(), rho0.dim())?;
        let u = self.propagator(h, t);
        Ok(DensityMatrix::from_hermitian_unchecked(hermitian_part(&u * rho0.matrix() * u.adjoint())?))
    }

    /// Compares the Schrödinger, Heisenberg and von Neumann expectation
    /// values at each time and the Ehrenfest derivative along `ψ(t)`.
    pub fn picture_equivalence(
        &self,
        h: &HermitianMatrix,
        a: &HermitianMatrix,
        psi0: &StateVector,
        times: &[f64],
    ) -> Result<PictureReport> {
        psi0.nonzero_norm_sq()?;
        check_dim(h.dim(), psi0.dim())?;
        check_dim(h.dim(), a.dim())?;
        let rho0 = DensityMatrix::from_state(psi0)?;
        let mut report = PictureReport::default();
        for &t in times {
            let psi_t = self.schrodinger(h, psi0, t)?;
            let schr = e_a(a, &psi_t)?;
            let heis = e_a(&self.heisenberg(h, a, t)?, psi0)?;
            let vn = self.von_neumann(h, &rho0, t)?.expectation(a)?;
            let dev = (schr - heis).abs().max((schr - vn).abs()).max((heis - vn).abs());
            report.max_deviation = report.max_deviation.max(dev);
            let fd = (f_a(a, &self.schrodinger(h, psi0, t + EHRENFEST_STEP)?)?
                - f_a(a, &self.schrodinger(h, psi0, t - EHRENFEST_STEP)?)?)
                / (2.0 * EHRENFEST_STEP);
            let ehr = ehrenfest_rate(h, a, &psi_t, self.hbar)?;
            report.ehrenfest_residual = report.ehrenfest_residual.max((fd - ehr).abs());
        }
        Ok(report)
    }
}

/// Maximum deviations reported by [`Evolution::picture_equivalence`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PictureReport {
    pub max_deviation: f64,
    pub ehrenfest_residual: f64,
}

/// `d f_A / dt` along the Schrödinger flow, expressed through the `ω` bracket.
pub fn ehrenfest_rate(h: &HermitianMatrix, a: &HermitianMatrix, psi: &StateVector, hbar: f64) -> Result<f64> {
    Ok(OMEGA_BRACKET_SIGN * bracket_omega(a, h, psi)? / hbar)
}

pub fn evolve_schrodinger(h: &HermitianMatrix, psi0: &StateVector, t: f64) -> Result<StateVector> {
    Evolution::default().schrodinger(h, psi0, t)
}

pub fn evolve_heisenberg(h: &HermitianMatrix, a: &HermitianMatrix, t: f64) -> Result<HermitianMatrix> {
    Evolution::default().heisenberg(h, a, t)
}

pub fn evolve_vonneumann(h: &HermitianMatrix, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    Evolution::default().von_neumann(h, rho0, t)
}

pub fn picture_equivalence(
    h: &HermitianMatrix,
    a: &HermitianMatrix,
    psi0: &StateVector,
    times: &[f64],
) -> Result<PictureReport> {
    Evolution::default().picture_equivalence(h, a, psi0, times)
}

fn hermitian_part(m: CMatrix) -> Result<HermitianMatrix> {
    HermitianMatrix::new((&m + m.adjoint()) * Complex64::new(0.5, 0.0))
}
