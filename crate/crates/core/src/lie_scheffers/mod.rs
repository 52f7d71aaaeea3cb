//! Superposition rules: the Riccati equation obtained from a linear planar
//! system by projectivisation, and the Cole–Hopf correspondence between the
//! heat equation and a Burgers-type equation.

mod burgers;
mod riccati;

pub use burgers::{burgers_residual, burgers_superpose, cole_hopf, heat_evolve, inverse_cole_hopf, Grid1D};
pub use riccati::{
    cross_ratio, integrate_riccati, ratio_project, riccati_from_linear, riccati_superpose, LinearSystem2,
    ProjectivePoint, RiccatiCoeffs, CHART_SWITCH,
};
