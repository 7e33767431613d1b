use dirac_tensor::analytic::state_at_level;
use dirac_tensor::{bound_states_exist, Branch, ModelParams};
use serde_json::{json, Value};

use super::require_binding;
use crate::config::{BranchChoice, RunConfig};
use crate::error::CliError;
use crate::output::Table;

pub const COLUMNS: &[&str] = &["a", "kappa", "kappa_bar", "E_over_M", "bound_flag"];

/// `E/M` at fixed `n_g` for every `a` in the grid and every `κ` in range.
/// Bound rows outside the `κ̄` window are dropped; unbound combinations are
/// always listed with `bound_flag = false`.
pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    let branch = match cfg.branch {
        BranchChoice::Plus => Branch::Particle,
        BranchChoice::Minus => Branch::Antiparticle,
        BranchChoice::Both => return Err(CliError::usage("fig3 tabulates one branch; use plus or minus")),
    };
    let n_g = cfg.n_g.ok_or_else(|| CliError::usage("fig3 needs --n-g"))?;
    if cfg.a_grid.is_empty() {
        return Err(CliError::usage("fig3 needs a non-empty --a-grid"));
    }
    let in_window = |kb: f64| cfg.kappa_bar_window.is_none_or(|(lo, hi)| lo <= kb && kb <= hi);

    let mut table = Table::new(COLUMNS);
    for &a in &cfg.a_grid {
        let params = ModelParams::new(cfg.mass, a, cfg.b)?;
        require_binding(&params)?;
        for kappa in cfg.kappas() {
            let channel = params.channel(kappa)?;
            let kb = channel.kappa_bar;
            let energy = if bound_states_exist(&params, &channel) {
                // Level index is n_g below κ̄ = 0 and n_f = n_g + 1 above it.
                let level = if kb < 0.0 { n_g } else { n_g + 1 };
                match state_at_level(&params, &channel, level, branch) {
                    Ok(state) => Some(state.energy),
                    Err(dirac_tensor::Error::SpecialStateBranch(_)) => None,
                    Err(err) => return Err(err.into()),
                }
            } else {
                None
            };
            match energy {
                Some(_) if !in_window(kb) => {}
                Some(e) => table.push(vec![json!(a), json!(kappa), json!(kb), json!(e / cfg.mass), json!(true)]),
                None => table.push(vec![json!(a), json!(kappa), json!(kb), Value::Null, json!(false)]),
            }
        }
    }
    Ok(table)
}
