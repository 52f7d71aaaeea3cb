//! Classical reductions of free and constrained motion.

mod calogero;
mod monopole;
mod radial;
mod sl2;
mod sphere;

pub use calogero::{
    calogero_field, calogero_reduce, calogero_reduce_from, hj_action, matrix_flight,
    CalogeroState, MatFreeState,
};
pub use monopole::{monopole_field, monopole_invariant, MonopoleState};
pub use radial::{reduce_free_to_radial, FreeState3, RadialData, RadialField};
pub use sl2::{
    canonical_poisson, oscillator_reduced_flow, sl2_flow, sl2_lift, PhaseFunction, SL2Point, Xi,
};
pub use sphere::{
    boost_generator, energy_momentum_map, fiber_flow, hopf_project, hopf_velocity,
    rotation_generator, sigma_k, tangency_check, ts2_constraints, ts3_energy,
    ts3_hamiltonian_field, ts3_project, Constraint, SphericalPendulum, TS2State, TS3Point,
};

pub(crate) type V3 = [f64; 3];

pub(crate) fn dot(a: &V3, b: &V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: &V3, b: &V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn norm(a: &V3) -> f64 {
    dot(a, a).sqrt()
}
