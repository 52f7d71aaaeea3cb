//! Geometric quantum mechanics in finite dimension.
//!
//! A Hilbert space `C^n` is viewed as the real manifold `R^{2n}` with
//! coordinates `ψ_k = q_k + i p_k`, carrying a complex structure `J`, a
//! metric `g` and a symplectic form `ω`. Observables become quadratic
//! functions `f_A`, and the commutator and anticommutator of operators are
//! recovered as coordinate brackets built from the inverse tensors. The
//! module also evolves states, observables and density matrices exactly,
//! evaluates the connection and Fubini–Study tensor on the punctured cone,
//! and checks the radial free propagator of the plane.

mod brackets;
mod dynamics;
mod projective;
mod propagator;
mod state;

pub use brackets::{
    bracket_g, bracket_g_op, bracket_omega, bracket_omega_op, e_a, f_a, f_op, jordan_product, leibniz_check,
    lie_product, measure_omega_sign, pullback_residual, quadratic_gradient, r_lambda, star_func, OMEGA_BRACKET_SIGN,
    PULLBACK_LAMBDA_SIGN,
};
pub use dynamics::{
    ehrenfest_rate, evolve_heisenberg, evolve_schrodinger, evolve_vonneumann, picture_equivalence, Evolution,
    PictureReport, EHRENFEST_STEP,
};
pub use projective::{fubini_study, kahler_potential_check, kahler_potential_form, theta_eval, KAHLER_POTENTIAL_FACTOR};
pub use propagator::{bessel_sector_identity, sector_propagator};
pub use state::{
    complexify, kahler_apply, kahler_g, kahler_j, kahler_omega, momentum_map, realify, CMatrix, DensityMatrix,
    HermitianMatrix, KahlerTensor, KahlerValue, StateVector, DENSITY_TOL, HERMITIAN_TOL,
};
