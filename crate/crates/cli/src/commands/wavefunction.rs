use dirac_tensor::analytic::{state_at_level, state_wavefunctions};
use dirac_tensor::numerical::count_sample_nodes;
use dirac_tensor::special::{GaussLaguerre, DEFAULT_GAUSS_LAGUERRE_NODES};
use dirac_tensor::{bound_states_exist, Branch, Component, Error};
use serde_json::json;

use super::{opt_u32, require_binding, unbound_message};
use crate::config::{BranchChoice, RunConfig};
use crate::error::CliError;
use crate::output::Table;

pub const COLUMNS: &[&str] = &["r", "g", "f"];

/// Samples of one normalized bound state on a uniform grid, with metadata:
/// energy, decay rate, node counts recounted from the emitted columns, the
/// norm by Gauss–Laguerre quadrature and a trapezoid norm on the grid itself.
pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    let params = cfg.params()?;
    require_binding(&params)?;
    let kappa = cfg.kappa.ok_or_else(|| CliError::usage("wavefunction needs --kappa"))?;
    let branch = match cfg.branch {
        BranchChoice::Plus => Branch::Particle,
        BranchChoice::Minus => Branch::Antiparticle,
        BranchChoice::Both => return Err(CliError::usage("wavefunction needs a single branch: plus or minus")),
    };
    let channel = params.channel(kappa)?;
    if !bound_states_exist(&params, &channel) {
        return Err(CliError::usage(unbound_message(&params, &channel)));
    }
    let kb = channel.kappa_bar;
    // n_f = n_g − 1 below κ̄ = 0 and n_g + 1 above it.
    let level = match (cfg.n_g, cfg.n_f) {
        (Some(n_g), None) => if kb < 0.0 { n_g } else { n_g + 1 },
        (None, Some(n_f)) => if kb < 0.0 { n_f + 1 } else { n_f },
        (None, None) => return Err(CliError::usage("wavefunction needs --n-g or --n-f")),
        (Some(_), Some(_)) => return Err(CliError::usage("give only one of n_g and n_f")),
    };
    let state = state_at_level(&params, &channel, level, branch).map_err(|err| match err {
        Error::SpecialStateBranch(b) => CliError::usage(format!(
            "this level is the special |E| = M state, which lies on the {} branch",
            if b == Branch::Particle { "plus" } else { "minus" }
        )),
        other => other.into(),
    })?;
    let pair = state_wavefunctions(&params, &state)?;

    let gamma = state.gamma;
    let r_min = cfg.r_min.unwrap_or(1e-4 / gamma);
    let r_max = cfg.r_max.unwrap_or(40.0 / gamma);
    if !(r_min >= 0.0 && r_max > r_min) || cfg.points < 2 {
        return Err(CliError::usage("grid needs 0 <= r_min < r_max and at least 2 points"));
    }
    let step = (r_max - r_min) / (cfg.points - 1) as f64;
    let r: Vec<f64> = (0..cfg.points).map(|i| r_min + step * i as f64).collect();
    let samples = pair.sample(&r)?;

    let alpha = 2.0 * kb.abs();
    let rule = GaussLaguerre::new(DEFAULT_GAUSS_LAGUERRE_NODES, alpha)?;
    let two_gamma = 2.0 * gamma;
    let norm = rule.integrate(|x| {
        let r = x / two_gamma;
        (pair.upper.value(r).powi(2) + pair.lower.value(r).powi(2)) * (x - alpha * x.ln()).exp() / two_gamma
    });
    let density: Vec<f64> = samples.g.iter().zip(&samples.f).map(|(g, f)| g * g + f * f).collect();
    let grid_norm = density.windows(2).map(|w| 0.5 * step * (w[0] + w[1])).sum::<f64>();

    let mut table = Table::new(COLUMNS);
    table.metadata = vec![
        ("kappa", json!(kappa)),
        ("kappa_bar", json!(kb)),
        ("n_g", opt_u32(state.n_g)),
        ("n_f", opt_u32(state.n_f)),
        ("E", json!(state.energy)),
        ("gamma", json!(gamma)),
        ("nodes_g", json!(count_sample_nodes(&samples, Component::Upper).count)),
        ("nodes_f", json!(count_sample_nodes(&samples, Component::Lower).count)),
        ("norm", json!(norm)),
        ("grid_norm", json!(grid_norm)),
    ];
    for i in 0..samples.len() {
        table.push(vec![json!(samples.r[i]), json!(samples.g[i]), json!(samples.f[i])]);
    }
    Ok(table)
}
