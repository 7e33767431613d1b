//! Closed-form spectrum and wavefunctions.
//!
//! The second-order radial equations have the form of a Schrödinger equation
//! in a singular Coulomb potential (see [`mapping`]); its known bound states
//! give the Dirac energies and the upper/lower components in terms of
//! generalized Laguerre polynomials. Everything depends on the channel only
//! through `κ̄ = κ + a`.

mod conjugation;
mod energy;
pub mod mapping;
mod residual;
mod spectrum;
mod wavefunction;

pub use conjugation::{charge_conjugate, conjugation_report, ConjugatePair, ConjugationReport};
pub use energy::{
    binding_energy, binding_regime, bound_state, energy, nonrelativistic_binding, special_state,
    state_at_level, BindingRegime,
};
pub use mapping::{map_to_singular_coulomb, SingularCoulombMap};
pub use residual::{residuals, ResidualReport};
pub use spectrum::{spectrum, SpectrumRow};
pub use wavefunction::{state_wavefunctions, wavefunctions, RadialPair, WavefunctionForm};
