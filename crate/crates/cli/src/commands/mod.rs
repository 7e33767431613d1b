//! One module per subcommand. Each builds a [`Table`] from a resolved
//! [`RunConfig`](crate::config::RunConfig).

pub mod fig3;
pub mod spectrum;
pub mod verify;
pub mod wavefunction;

use dirac_tensor::{Channel, ModelParams};
use serde_json::{json, Value};

use crate::error::CliError;

/// Reject `b = 0` up front: nothing binds, so a bound-state table is meaningless.
pub(crate) fn require_binding(params: &ModelParams) -> Result<(), CliError> {
    if params.b() == 0.0 {
        return Err(CliError::usage(
            "b = 0 has no bound states: the constant tensor term b is required for binding",
        ));
    }
    Ok(())
}

pub(crate) fn unbound_message(params: &ModelParams, channel: &Channel) -> String {
    format!(
        "no bound states for kappa = {} (kappa_bar = {}, b = {}): bound states need b*kappa_bar < 0 and |kappa_bar| > 1/2",
        channel.kappa,
        channel.kappa_bar,
        params.b()
    )
}

pub(crate) fn opt_u32(v: Option<u32>) -> Value {
    v.map_or(Value::Null, |n| json!(n))
}

pub(crate) fn opt_f64(v: Option<f64>) -> Value {
    v.map_or(Value::Null, |x| json!(x))
}
