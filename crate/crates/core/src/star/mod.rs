//! Noncommutative algebra: coefficients rational in a deformation parameter,
//! words modulo two-letter rewriting rules, the deformed oscillator, the
//! quantum `SU(2)` algebra with its classical limit, and the Moyal product
//! together with its reduction to `su(2)`.

mod commpoly;
mod moyal;
mod ncpoly;
mod oscillator;
mod poisson;
mod series;
mod woronowicz;

pub use commpoly::{s3_vars, sphere_vars, su2_vars, var_set, CommPoly, VarSet};
pub use moyal::{
    calibrate_reduced_star, canonical_poisson, commutant_closure_check, f_h, moyal_product, reduced_star_formula,
    reduced_star_verify, su2_generators, su2_pullback,
};
pub use ncpoly::{
    confluence_probe, nc_commutator, nc_multiply, normal_form, Alphabet, NCPoly, RewriteSystem, Rule, Word,
    DEFAULT_REWRITE_BUDGET,
};
pub use oscillator::{oscillator_alphabet, oscillator_derivation, oscillator_system};
pub use poisson::{
    classical_limit, generator_images, planar_field, quadratic_bracket_table, real_coordinates, reduced_s2_checks,
    s2_reduced_field, s2_reduced_flow, s3_casimir, s3_classical_flow, s3_poisson, s3_poisson_stated, sphere_generators,
    sphere_point, stated_bracket_table, stereographic_project, stereographic_pushforward, PolyCheck, S3State,
    BRACKET_CONVENTION,
};
pub use series::{DeformSeries, SERIES_TOL};
pub use woronowicz::{
    flow_consistency_check, normal_words, su2q_elements, su2q_relation_checks, woronowicz_alphabet, woronowicz_flow,
    woronowicz_flow_rate, woronowicz_system, FlowImage, RelationCheck, Su2qElements, WoronowiczFlow,
};
