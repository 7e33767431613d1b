//! Bound states of the Dirac equation with a pure radial tensor potential
//! `U(r) = a/r + b`.
//!
//! The crate has four layers:
//!
//! * [`types`]: model parameters, spin-orbit channels and the existence
//!   predicate for bound states.
//! * [`special`]: generalized Laguerre polynomials, log-gamma and
//!   Gauss–Laguerre / adaptive quadrature.
//! * [`analytic`]: closed-form energies, radial wavefunctions, special
//!   `|E| = M` states, the spectrum table and the charge-conjugation map.
//! * [`numerical`]: an independent shooting eigensolver for the
//!   second-order radial equations and an integrator for the coupled
//!   first-order system, used to cross-check everything in [`analytic`].
//!
//! Natural units are used throughout (`ħ = c = 1`).

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod error;
pub mod numerical;
pub mod special;
pub mod types;

pub use error::{Error, Result};
pub use types::{
    bound_states_exist, kappa_range, BoundState, Branch, Channel, Component, KappaRange,
    ModelParams, RadialSamples,
};
