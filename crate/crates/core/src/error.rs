use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("kappa must be a nonzero integer")]
    ZeroKappa,

    #[error("channel kappa_bar = {kappa_bar} does not match kappa + a = {expected}")]
    InconsistentChannel { kappa_bar: f64, expected: f64 },

    #[error("kappa_bar = 0: |E| would equal the effective mass, which is not a bound solution")]
    ZeroKappaBar,

    #[error("|kappa_bar| = {0} <= 1/2: no bound states in the excluded window")]
    ExcludedWindow(f64),

    #[error("b = 0: the constant tensor term is required for binding")]
    NoBinding,

    #[error("no bound states: b * kappa_bar = {0} must be negative")]
    UnboundChannel(f64),

    #[error("n_g = 0 with kappa_bar < -1/2 is the special E = +M state; use special_state")]
    SpecialStateRequired,

    #[error("E = -M is excluded from this family: the lower component needs (M + E) != 0")]
    NegativeMassEdge,

    #[error("the special state of this channel lies on the {0:?} branch")]
    SpecialStateBranch(crate::types::Branch),

    #[error("special states need (kappa_bar < -1/2, b > 0) or (kappa_bar > 1/2, b < 0)")]
    NoSpecialState,

    #[error("Laguerre order alpha = {0} must exceed -1")]
    InvalidLaguerreOrder(f64),

    #[error("argument {0} out of domain")]
    Domain(f64),

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("no eigenvalue with {node_target} nodes in lambda bracket [{lo}, {hi}]")]
    NoBracket { node_target: usize, lo: f64, hi: f64 },

    #[error("eigenvalue search did not converge after {iterations} iterations (last bracket width {width})")]
    NonConvergence { iterations: usize, width: f64 },

    #[error("node mismatch: target {expected}, matched solution has {found} nodes")]
    NodeMismatch { expected: usize, found: usize },

    #[error("sample arrays invalid: {0}")]
    InvalidSamples(String),
}
