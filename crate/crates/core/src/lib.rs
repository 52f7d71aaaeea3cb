//! Reduction procedures for classical and quantum dynamical systems.
//!
//! The crate is organised by subject:
//!
//! * [`numeric`] holds the shared numerical substrate (RK4, periodic
//!   quadrature, Bessel functions, 2x2 symmetric eigenframes, finite
//!   differences and tolerance policy).
//! * [`classical`] implements the reductions of free motion: radial
//!   dynamics, the `sl(2,R)` function group, the Calogero system, the
//!   charge-monopole system and the spherical pendulum obtained from `TS^3`.
//! * [`lie_scheffers`] covers Riccati superposition and the Cole–Hopf link
//!   between the heat equation and a Burgers-type equation.
//! * [`diffops`] is an exact calculus of differential operators with
//!   polynomial-times-radial coefficients, including the
//!   Kustaanheimo–Stiefel projection of the conformal Kepler problem.
//! * [`star`] contains the noncommutative rewriting engine, deformed
//!   oscillators, quantum `SU(2)`, and the Moyal product.
//! * [`quantum`] provides finite-dimensional geometric quantum mechanics.

pub mod classical;
pub mod diffops;
mod error;
pub mod lie_scheffers;
pub mod numeric;
pub mod quantum;
pub mod star;

pub use error::{Error, Result};
