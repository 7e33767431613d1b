//! Numerical oracle for the radial equations, independent of the closed
//! forms in [`crate::analytic`].
//!
//! [`shooting`] finds eigenvalues `λ = E² − M² − b²` of the second-order
//! equations by Sturm node counting and log-derivative matching;
//! [`first_order`] integrates the coupled `(g, f)` system outward for a
//! given energy.

pub mod first_order;
pub mod nodes;
pub mod potential;
pub mod shooting;

pub use first_order::{integrate_first_order, FirstOrderConfig, FirstOrderResult, TailBehavior};
pub use nodes::{count_nodes, count_sample_nodes, NodeCount};
pub use potential::{effective_potential, general_tensor_potential, EffectivePotential};
pub use shooting::{shoot_eigenvalue, EigenResult, ShootingConfig};
