//! Special functions and quadrature used by the closed-form solutions.

mod gamma;
mod laguerre;
mod quadrature;

pub use gamma::log_gamma;
pub use laguerre::{
    laguerre, laguerre_derivative, laguerre_second_derivative, laguerre_weighted_norm, LaguerreSpec,
};
pub use quadrature::{adaptive_simpson, GaussLaguerre, DEFAULT_GAUSS_LAGUERRE_NODES};
