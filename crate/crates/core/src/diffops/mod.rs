//! Exact calculus of linear differential operators whose coefficients are
//! polynomials times integer powers of the radius, with the tools needed to
//! test order, projectability along the Kustaanheimo–Stiefel fibration, and
//! the radial reduction of planar and Coulomb problems.

mod hydrogen;
mod ks;
mod operator;
mod radial_poly;
mod sector;

pub use hydrogen::{hydrogen_level, hydrogen_radial_solve, oscillator_frequency};
pub use ks::{
    ks_map, ks_point_map, ks_pullback, projectability_check, x3_annihilates, x3_annihilation_check, x3_generator, PolyMap,
};
pub use operator::{
    conformal_kepler_op, hydrogen_op, laplacian, op_apply, op_commutator, op_compose, order_detect, LinDiffOp,
};
pub use radial_poly::{rp_derive, RadialPoly};
pub use sector::{conjugated_sector_hamiltonian, radial_sector_check, sector_hamiltonian, HalfPowerPoly};
