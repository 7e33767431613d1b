use std::io::Write;

use dirac_tensor::analytic::{residuals, state_at_level, state_wavefunctions};
use dirac_tensor::numerical::{count_sample_nodes, shoot_eigenvalue, ShootingConfig};
use dirac_tensor::{bound_states_exist, BoundState, Branch, Component, Error, ModelParams};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{opt_f64, opt_u32};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Table;

pub const COLUMNS: &[&str] = &[
    "b", "a", "kappa", "kappa_bar", "branch", "level", "n_g", "n_f", "E_analytic", "dE_upper", "dE_lower",
    "residual", "nodes_ok", "pass", "verdict",
];

/// Residuals are checked on `r = 0.01, 0.02, …, 30`.
const RESIDUAL_LIMIT: f64 = 1e-8;
const NODE_SAMPLES: usize = 20_000;
const FAILURES_LISTED: usize = 10;

#[derive(Debug, Clone, Copy)]
enum Task {
    State(ModelParams, BoundState),
    /// `b = 0`: nothing may bind in this channel.
    Free(ModelParams, i32),
}

#[derive(Debug, Clone)]
struct Outcome {
    row: Vec<Value>,
    pass: bool,
    max_de: f64,
    label: String,
}

/// Run the closed forms against the shooting solver and the residual and
/// node checks on every state of the grid. Writes the per-state report and
/// fails with exit code 2 if any state fails.
pub fn run(cfg: &RunConfig, stderr: &mut dyn Write) -> Result<(Table, Result<(), CliError>), CliError> {
    let tasks = tasks(cfg)?;
    let outcomes: Vec<Outcome> = tasks.par_iter().map(|t| check(cfg, t)).collect();

    let mut table = Table::new(COLUMNS);
    let failures: Vec<&Outcome> = outcomes.iter().filter(|o| !o.pass).collect();
    let max_de = outcomes.iter().map(|o| o.max_de).fold(0.0, f64::max);
    writeln!(
        stderr,
        "verify: {} checks, {} failed, max |dE| = {:e}",
        outcomes.len(),
        failures.len(),
        max_de
    )?;
    let verdict = if failures.is_empty() {
        Ok(())
    } else {
        let mut msg = format!("{} of {} checks failed:", failures.len(), outcomes.len());
        for o in failures.iter().take(FAILURES_LISTED) {
            msg.push_str("\n  ");
            msg.push_str(&o.label);
        }
        Err(CliError::verification(msg))
    };
    for o in outcomes {
        table.push(o.row);
    }
    Ok((table, verdict))
}

fn tasks(cfg: &RunConfig) -> Result<Vec<Task>, CliError> {
    let mut out = Vec::new();
    for &b in &cfg.b_grid {
        for &a in &cfg.a_grid {
            let params = ModelParams::new(cfg.mass, a, b)?;
            for kappa in cfg.kappas() {
                if b == 0.0 {
                    out.push(Task::Free(params, kappa));
                    continue;
                }
                let channel = params.channel(kappa)?;
                if !bound_states_exist(&params, &channel) {
                    continue;
                }
                for branch in cfg.branch.branches() {
                    for level in 0..=cfg.n_max {
                        match state_at_level(&params, &channel, level, branch) {
                            Ok(state) => out.push(Task::State(params, state)),
                            Err(Error::SpecialStateBranch(_)) => {}
                            Err(err) => return Err(err.into()),
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Particle => "plus",
        Branch::Antiparticle => "minus",
    }
}

fn check(cfg: &RunConfig, task: &Task) -> Outcome {
    match *task {
        Task::State(params, state) => check_state(cfg, &params, &state),
        Task::Free(params, kappa) => check_free(&params, kappa),
    }
}

fn check_state(cfg: &RunConfig, params: &ModelParams, state: &BoundState) -> Outcome {
    let reference = state.energy + cfg.perturb;
    let mut problems = Vec::new();

    let mut shoot = |component: Component, nodes: Option<u32>| -> Option<f64> {
        let nodes = nodes?;
        let config = ShootingConfig::for_channel(params, &state.channel, component);
        match shoot_eigenvalue(params, &state.channel, component, nodes as usize, &config) {
            Ok(res) => {
                let e = if state.energy > 0.0 { res.energy_pair.0 } else { res.energy_pair.1 };
                Some((e - reference).abs())
            }
            Err(err) => {
                problems.push(format!("{component:?} shooting failed: {err}"));
                Some(f64::INFINITY)
            }
        }
    };
    let de_upper = shoot(Component::Upper, state.n_g);
    let de_lower = shoot(Component::Lower, state.n_f);
    let max_de = de_upper.into_iter().chain(de_lower).fold(0.0, f64::max);
    if max_de > cfg.tolerance {
        problems.push(format!("|dE| = {max_de:e} exceeds {:e}", cfg.tolerance));
    }

    let (residual, nodes_ok) = match state_wavefunctions(params, state) {
        Ok(pair) => {
            let grid: Vec<f64> = (1..=3000).map(|i| 0.01 * i as f64).collect();
            let residual = residuals(params, &pair, &grid).max();
            let r_end = 60.0 / state.gamma;
            let r: Vec<f64> = (1..=NODE_SAMPLES).map(|i| r_end * i as f64 / NODE_SAMPLES as f64).collect();
            let nodes_ok = match pair.sample(&r) {
                Ok(s) => {
                    let matches = |c, n: Option<u32>| n.is_none_or(|n| count_sample_nodes(&s, c).count == n as usize);
                    matches(Component::Upper, state.n_g) && matches(Component::Lower, state.n_f)
                }
                Err(_) => false,
            };
            (residual, nodes_ok)
        }
        Err(err) => {
            problems.push(format!("wavefunction: {err}"));
            (f64::INFINITY, false)
        }
    };
    if !(residual < RESIDUAL_LIMIT) {
        problems.push(format!("residual {residual:e} not below {RESIDUAL_LIMIT:e}"));
    }
    if !nodes_ok {
        problems.push("node count mismatch".into());
    }

    let pass = problems.is_empty();
    let verdict = if pass { "ok".to_string() } else { problems.join("; ") };
    let ch = state.channel;
    let label = format!(
        "b={} a={} kappa={} {} level {}: {verdict}",
        params.b(),
        params.a(),
        ch.kappa,
        branch_name(state.branch),
        state.level()
    );
    let row = vec![
        json!(params.b()),
        json!(params.a()),
        json!(ch.kappa),
        json!(ch.kappa_bar),
        json!(branch_name(state.branch)),
        json!(state.level()),
        opt_u32(state.n_g),
        opt_u32(state.n_f),
        json!(reference),
        finite_or_null(de_upper),
        finite_or_null(de_lower),
        finite_or_null(Some(residual)),
        json!(nodes_ok),
        json!(pass),
        json!(verdict),
    ];
    Outcome { row, pass, max_de: if max_de.is_finite() { max_de } else { 0.0 }, label }
}

fn finite_or_null(v: Option<f64>) -> Value {
    opt_f64(v.filter(|x| x.is_finite()))
}

/// With `b = 0` neither component may have a bound level: the shooting
/// bracket `λ ∈ [−M², −1e−6 M²]` must hold no eigenvalue.
fn check_free(params: &ModelParams, kappa: i32) -> Outcome {
    let m2 = params.mass() * params.mass();
    let mut problems = Vec::new();
    let channel = match params.channel(kappa) {
        Ok(ch) => ch,
        Err(err) => {
            return free_outcome(params, kappa, f64::NAN, vec![err.to_string()]);
        }
    };
    if bound_states_exist(params, &channel) {
        problems.push("existence predicate reports binding".to_string());
    }
    if channel.kappa_bar != 0.0 {
        for component in [Component::Upper, Component::Lower] {
            let config = ShootingConfig::for_channel(params, &channel, component).with_bracket(-m2, -1e-6 * m2);
            match shoot_eigenvalue(params, &channel, component, 0, &config) {
                Err(Error::NoBracket { .. }) => {}
                Ok(res) => problems.push(format!("{component:?}: found lambda = {}", res.lambda)),
                Err(err) => problems.push(format!("{component:?}: {err}")),
            }
        }
    }
    free_outcome(params, kappa, channel.kappa_bar, problems)
}

fn free_outcome(params: &ModelParams, kappa: i32, kappa_bar: f64, problems: Vec<String>) -> Outcome {
    let pass = problems.is_empty();
    let verdict = if pass { "no bound states".to_string() } else { problems.join("; ") };
    let label = format!("b=0 a={} kappa={kappa}: {verdict}", params.a());
    let row = vec![
        json!(0.0),
        json!(params.a()),
        json!(kappa),
        opt_f64(Some(kappa_bar).filter(|x| x.is_finite())),
        Value::Null,
        Value::Null,
        Value::Null,
        Value::Null,
        Value::Null,
        Value::Null,
        Value::Null,
        Value::Null,
        Value::Null,
        json!(pass),
        json!(verdict),
    ];
    Outcome { row, pass, max_de: 0.0, label }
}
