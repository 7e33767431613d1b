use std::cmp::Ordering;

use crate::error::Error;
use crate::types::{bound_states_exist, BoundState, Branch, Channel, ModelParams};

use super::energy::state_at_level;

/// One line of a spectrum table. Channels without bound states appear once
/// with `bound = false` and no level data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRow {
    pub kappa: i32,
    pub kappa_bar: f64,
    pub bound: bool,
    pub state: Option<BoundState>,
    /// `E / M`.
    pub scaled_energy: Option<f64>,
}

impl SpectrumRow {
    fn unbound(channel: &Channel) -> Self {
        Self { kappa: channel.kappa, kappa_bar: channel.kappa_bar, bound: false, state: None, scaled_energy: None }
    }

    fn bound(params: &ModelParams, state: BoundState) -> Self {
        Self {
            kappa: state.channel.kappa,
            kappa_bar: state.channel.kappa_bar,
            bound: true,
            state: Some(state),
            scaled_energy: Some(state.energy / params.mass()),
        }
    }

    pub fn energy(&self) -> Option<f64> {
        self.state.map(|s| s.energy)
    }

    pub fn n_bar(&self) -> Option<f64> {
        self.state.map(|s| s.n_bar)
    }

    pub fn n_g(&self) -> Option<u32> {
        self.state.and_then(|s| s.n_g)
    }

    pub fn n_f(&self) -> Option<u32> {
        self.state.and_then(|s| s.n_f)
    }

    pub fn is_special(&self) -> bool {
        self.state.is_some_and(|s| s.is_special())
    }

    pub fn branch(&self) -> Option<Branch> {
        self.state.map(|s| s.branch)
    }
}

/// Levels `0..=n_max` of every channel in `kappas` on one energy branch,
/// sorted by `(κ̄, n̄)`. Level `n` is `n_g` for `κ̄ < 0` and `n_f` for `κ̄ > 0`,
/// so level 0 is the special state when it lies on the requested branch.
/// `κ = 0` entries are ignored.
pub fn spectrum(params: &ModelParams, kappas: &[i32], n_max: u32, branch: Branch) -> Vec<SpectrumRow> {
    let mut rows = Vec::new();
    for &kappa in kappas {
        let Ok(channel) = params.channel(kappa) else { continue };
        if !bound_states_exist(params, &channel) {
            rows.push(SpectrumRow::unbound(&channel));
            continue;
        }
        for level in 0..=n_max {
            match state_at_level(params, &channel, level, branch) {
                Ok(state) => rows.push(SpectrumRow::bound(params, state)),
                Err(Error::SpecialStateBranch(_)) => {}
                Err(err) => unreachable!("validated channel rejected level {level}: {err}"),
            }
        }
    }
    rows.sort_by(compare_rows);
    rows
}

pub(crate) fn compare_rows(x: &SpectrumRow, y: &SpectrumRow) -> Ordering {
    let key = |r: &SpectrumRow| r.n_bar().unwrap_or(f64::NEG_INFINITY);
    x.kappa_bar
        .total_cmp(&y.kappa_bar)
        .then(key(x).total_cmp(&key(y)))
        .then(x.branch().cmp(&y.branch()))
}
