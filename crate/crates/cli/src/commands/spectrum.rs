use std::cmp::Ordering;

use dirac_tensor::analytic::{charge_conjugate, spectrum, SpectrumRow};
use dirac_tensor::ModelParams;
use serde_json::json;

use super::{opt_f64, opt_u32, require_binding};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Table;

pub const COLUMNS: &[&str] = &["kappa", "kappa_bar", "n_g", "n_f", "n_bar", "E", "E_over_M", "is_special", "bound_flag"];

/// Spectrum table. With `conjugate` the rows describe the charge-conjugated
/// system: `κ → −κ`, `κ̄ → −κ̄`, and `E^c = −E` of the partner state on the
/// opposite branch, so a positive-branch table maps onto positive `E^c`.
pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    let params = cfg.params()?;
    require_binding(&params)?;
    let (system, kappas, sign): (ModelParams, Vec<i32>, f64) = if cfg.conjugate {
        (charge_conjugate(&params), cfg.kappas().iter().map(|k| -k).collect(), -1.0)
    } else {
        (params, cfg.kappas(), 1.0)
    };

    let mut rows: Vec<SpectrumRow> = Vec::new();
    for (i, branch) in cfg.branch.branches().into_iter().enumerate() {
        let branch = if cfg.conjugate { branch.flipped() } else { branch };
        // Unbound channels are listed once, not once per branch.
        rows.extend(spectrum(&system, &kappas, cfg.n_max, branch).into_iter().filter(|r| r.bound || i == 0));
    }
    rows.sort_by(|x, y| order(x, y, sign));

    let mut table = Table::new(COLUMNS);
    let mass = system.mass();
    for row in rows {
        let energy = row.energy().map(|e| sign * e);
        table.push(vec![
            json!(row.kappa),
            json!(row.kappa_bar),
            opt_u32(row.n_g()),
            opt_u32(row.n_f()),
            opt_f64(row.n_bar()),
            opt_f64(energy),
            opt_f64(energy.map(|e| e / mass)),
            json!(row.is_special()),
            json!(row.bound),
        ]);
    }
    Ok(table)
}

/// Innermost channels first, then by `n̄` and by the sign of the reported energy.
fn order(x: &SpectrumRow, y: &SpectrumRow, sign: f64) -> Ordering {
    let n_bar = |r: &SpectrumRow| r.n_bar().unwrap_or(f64::NEG_INFINITY);
    let reported = |r: &SpectrumRow| r.energy().map_or(0.0, |e| -(sign * e).signum());
    x.kappa_bar
        .abs()
        .total_cmp(&y.kappa_bar.abs())
        .then(x.kappa_bar.total_cmp(&y.kappa_bar))
        .then(n_bar(x).total_cmp(&n_bar(y)))
        .then(reported(x).total_cmp(&reported(y)))
}
