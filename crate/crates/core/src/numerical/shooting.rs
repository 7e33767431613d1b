use crate::error::{Error, Result};
use crate::types::{Channel, Component, ModelParams};

use super::potential::EffectivePotential;

/// Settings for [`shoot_eigenvalue`].
///
/// The equation `u'' = (V − λ) u` is integrated on a uniform grid in
/// `t = ln r` with `u = √r φ`, which turns it into `φ'' = Q(t) φ` with
/// `Q = (c + 1/4) + z r − λ r²` and lets a fixed number of steps cover the
/// singular origin and the exponential tail alike.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootingConfig {
    pub r_min: f64,
    /// Outer cutoff. Ignored while `adaptive_outer` is set, in which case
    /// `(decay_lengths + 4ν) / k` is used, with `k = sqrt(−λ)` and
    /// `ν = −z / 2k` the power of the `r^ν e^(−kr)` tail.
    pub r_max: f64,
    pub adaptive_outer: bool,
    pub decay_lengths: f64,
    pub step_count: usize,
    /// Fixed matching radius; `None` uses the outer classical turning point.
    pub match_point: Option<f64>,
    /// Search interval for `λ = E² − M² − b²`, both ends negative.
    pub lambda_bracket: (f64, f64),
    /// Absolute tolerance on `λ`.
    pub tolerance: f64,
    pub max_iterations: usize,
}

pub const DEFAULT_STEP_COUNT: usize = 8000;

impl ShootingConfig {
    /// Bracket starting just below the nodeless level `−z² / (4p²)` of the
    /// attractive `c/r² + z/r` problem, where `p` is the regular power;
    /// grid scaled to that decay rate. With `b = 0` the bracket is empty.
    pub fn for_channel(params: &ModelParams, channel: &Channel, component: Component) -> Self {
        let v = EffectivePotential::for_component(params.b(), channel.kappa_bar, component);
        let z = v.coulomb;
        let p = v.regular_exponent();
        let lo = -(z * z) / (4.0 * p * p) * 1.01;
        let hi = lo * 1e-8;
        let scale = if lo < 0.0 { (-lo).sqrt() } else { params.mass() };
        Self {
            r_min: 1e-6 / scale,
            r_max: 30.0 / scale,
            adaptive_outer: true,
            decay_lengths: 30.0,
            step_count: DEFAULT_STEP_COUNT,
            match_point: None,
            lambda_bracket: (lo, hi),
            tolerance: 1e-14 * (-lo).max(f64::MIN_POSITIVE),
            max_iterations: 300,
        }
    }

    pub fn with_bracket(mut self, lo: f64, hi: f64) -> Self {
        self.lambda_bracket = (lo, hi);
        self
    }

    pub fn with_step_count(mut self, steps: usize) -> Self {
        self.step_count = steps;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        if !(self.r_min > 0.0 && self.r_min.is_finite()) {
            return bad("r_min must be positive");
        }
        if !self.adaptive_outer && !(self.r_max > self.r_min && self.r_max.is_finite()) {
            return bad("r_max must exceed r_min");
        }
        if self.adaptive_outer && !(self.decay_lengths > 0.0) {
            return bad("decay_lengths must be positive");
        }
        if self.step_count < 16 {
            return bad("step_count must be at least 16");
        }
        if !(self.tolerance > 0.0) {
            return bad("tolerance must be positive");
        }
        if self.max_iterations == 0 {
            return bad("max_iterations must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    /// `λ = E² − M² − b²`.
    pub lambda: f64,
    /// `±sqrt(λ + M² + b²)`.
    pub energy_pair: (f64, f64),
    /// Nodes of the matched solution on `(r_min, r_max)`.
    pub node_count: usize,
    pub converged: bool,
    /// Normalized mismatch of the inward and outward solutions at the
    /// matching point.
    pub residual: f64,
    pub r_max: f64,
    pub match_point: f64,
}

/// Eigenvalue of the second-order equation for `component` in `channel`
/// whose eigenfunction has `node_target` interior nodes.
///
/// Works for any `κ̄ ≠ 0`, including the window `|κ̄| ≤ 1/2` where no closed
/// form applies. Returns [`Error::NoBracket`] if the bracket holds no such
/// eigenvalue (in particular for `b = 0`).
pub fn shoot_eigenvalue(
    params: &ModelParams,
    channel: &Channel,
    component: Component,
    node_target: usize,
    config: &ShootingConfig,
) -> Result<EigenResult> {
    params.check_channel(channel)?;
    if channel.kappa_bar == 0.0 {
        return Err(Error::ZeroKappaBar);
    }
    config.validate()?;
    let problem = Problem::new(EffectivePotential::for_component(params.b(), channel.kappa_bar, component));
    let (lo, hi) = config.lambda_bracket;
    let no_bracket = || Error::NoBracket { node_target, lo, hi };
    if !(lo < hi) || !lo.is_finite() || (config.adaptive_outer && hi >= 0.0) {
        return Err(no_bracket());
    }

    // Coarse stage: Sturm bisection, each λ on its own grid.
    let count_at = |lambda: f64| problem.dirichlet_count(&Grid::for_lambda(config, &problem, lambda), lambda);
    if count_at(lo) > node_target {
        return Err(no_bracket());
    }
    let (mut below, mut above) = (lo, None);
    let mut probe = lo;
    while above.is_none() {
        probe = (probe * 0.25).min(hi);
        if count_at(probe) > node_target {
            above = Some(probe);
        } else if probe >= hi {
            return Err(no_bracket());
        } else {
            below = probe;
        }
    }
    let mut above = above.expect("set by loop");
    let mut iterations = 0;
    while above - below > 1e-4 * below.abs() {
        iterations += 1;
        if iterations > config.max_iterations {
            return Err(Error::NonConvergence { iterations, width: above - below });
        }
        let mid = 0.5 * (below + above);
        if count_at(mid) > node_target {
            above = mid;
        } else {
            below = mid;
        }
    }

    // Fine stage: one grid, re-establish the bracket on it, then secant on
    // the matching function.
    let grid = Grid::for_lambda(config, &problem, above);
    let estimate = 0.5 * (below + above);
    let m = grid.match_index(config.match_point.unwrap_or_else(|| problem.turning_point(estimate)));
    let fixed_count = |lambda: f64| problem.dirichlet_count(&grid, lambda);
    while fixed_count(below) > node_target {
        below -= 2.0 * (above - below);
        iterations += 1;
        if below < lo || iterations > config.max_iterations {
            return Err(no_bracket());
        }
    }
    while fixed_count(above) <= node_target {
        above += 2.0 * (above - below);
        iterations += 1;
        if above > hi.min(0.0) || iterations > config.max_iterations {
            return Err(no_bracket());
        }
    }

    let mismatch = |lambda: f64| problem.matched(&grid, m, lambda).mismatch;
    let (mut a, mut b) = (below, above);
    let (mut fa, mut fb) = (mismatch(a), mismatch(b));
    let mut converged = false;
    let mut side = 0i8;
    for _ in 0..config.max_iterations {
        iterations += 1;
        if (b - a).abs() <= config.tolerance || fa == 0.0 || fb == 0.0 {
            converged = true;
            break;
        }
        if fa.signum() == fb.signum() {
            // No sign change yet: fall back to node bisection.
            let mid = 0.5 * (a + b);
            if fixed_count(mid) > node_target {
                b = mid;
                fb = mismatch(b);
            } else {
                a = mid;
                fa = mismatch(a);
            }
            continue;
        }
        let mut c = b - fb * (b - a) / (fb - fa);
        if !(c > a.min(b) && c < a.max(b)) {
            c = 0.5 * (a + b);
        }
        let fc = mismatch(c);
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        } else {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        }
    }
    if !converged {
        return Err(Error::NonConvergence { iterations, width: (b - a).abs() });
    }

    let lambda = if fa.abs() <= fb.abs() { a } else { b };
    let solution = problem.matched(&grid, m, lambda);
    if solution.nodes != node_target {
        return Err(Error::NodeMismatch { expected: node_target, found: solution.nodes });
    }
    let e_sq = lambda + params.effective_mass().powi(2);
    let e = e_sq.max(0.0).sqrt();
    Ok(EigenResult {
        lambda,
        energy_pair: (e, -e),
        node_count: solution.nodes,
        converged,
        residual: solution.mismatch.abs(),
        r_max: grid.r[grid.r.len() - 1],
        match_point: grid.r[m],
    })
}

struct Grid {
    h: f64,
    r: Vec<f64>,
}

impl Grid {
    fn new(r_min: f64, r_max: f64, steps: usize) -> Self {
        let t0 = r_min.ln();
        let h = (r_max.ln() - t0) / steps as f64;
        let r = (0..=steps).map(|i| (t0 + h * i as f64).exp()).collect();
        Self { h, r }
    }

    fn for_lambda(config: &ShootingConfig, problem: &Problem, lambda: f64) -> Self {
        let r_max = if config.adaptive_outer {
            let k = (-lambda).sqrt();
            let nu = (-problem.z / (2.0 * k)).max(0.0);
            (config.decay_lengths + 4.0 * nu) / k
        } else {
            config.r_max
        };
        Self::new(config.r_min, r_max.max(4.0 * config.r_min), config.step_count)
    }

    fn match_index(&self, radius: f64) -> usize {
        let last = self.r.len() - 1;
        let lo = 2.min(last - 2);
        let hi = last.saturating_sub(2).max(lo);
        let t = ((radius.ln() - self.r[0].ln()) / self.h).round();
        (t.max(0.0) as usize).clamp(lo, hi)
    }
}

struct Matched {
    mismatch: f64,
    nodes: usize,
}

const RESCALE: f64 = 1e150;

struct Problem {
    /// `c + 1/4`.
    q0: f64,
    z: f64,
    centrifugal: f64,
    /// Regular power of `u` at the origin.
    p: f64,
}

impl Problem {
    fn new(v: EffectivePotential) -> Self {
        Self { q0: v.centrifugal + 0.25, z: v.coulomb, centrifugal: v.centrifugal, p: v.regular_exponent() }
    }

    fn q(&self, r: f64, lambda: f64) -> f64 {
        self.q0 + self.z * r - lambda * r * r
    }

    /// Outer root of `λ r² − z r − c = 0`.
    fn turning_point(&self, lambda: f64) -> f64 {
        let disc = (self.z * self.z + 4.0 * lambda * self.centrifugal).max(0.0);
        (self.z.abs() + disc.sqrt()) / (2.0 * lambda.abs())
    }

    /// `φ = u / √r` near the origin from the regular Frobenius series.
    fn start(&self, r: f64, lambda: f64) -> f64 {
        let p = self.p;
        let c1 = self.z / (2.0 * p);
        let c2 = (self.z * c1 - lambda) / (4.0 * p + 2.0);
        r.powf(p - 0.5) * (1.0 + r * (c1 + r * c2))
    }

    /// Outward Numerov solution on `0..=upto`. Rescales in place so huge
    /// tails cannot overflow; only signs and ratios matter downstream.
    fn outward(&self, grid: &Grid, lambda: f64, upto: usize) -> Vec<f64> {
        let k = grid.h * grid.h / 12.0;
        let w: Vec<f64> = grid.r[..=upto].iter().map(|&r| 1.0 - k * self.q(r, lambda)).collect();
        let mut phi = Vec::with_capacity(upto + 1);
        phi.push(self.start(grid.r[0], lambda));
        phi.push(self.start(grid.r[1], lambda));
        let norm = phi[1].abs();
        phi.iter_mut().for_each(|v| *v /= norm);
        for i in 1..upto {
            let next = ((12.0 - 10.0 * w[i]) * phi[i] - w[i - 1] * phi[i - 1]) / w[i + 1];
            phi.push(next);
            if next.abs() > RESCALE {
                phi.iter_mut().for_each(|v| *v /= RESCALE);
            }
        }
        phi.truncate(upto + 1);
        phi
    }

    /// Inward Numerov solution on `from..=last`, starting from zero at the
    /// outer cutoff. Index 0 of the result is grid index `from`.
    fn inward(&self, grid: &Grid, lambda: f64, from: usize) -> Vec<f64> {
        let last = grid.r.len() - 1;
        let k = grid.h * grid.h / 12.0;
        let w: Vec<f64> = grid.r[from..].iter().map(|&r| 1.0 - k * self.q(r, lambda)).collect();
        let len = last - from + 1;
        let mut phi = vec![0.0; len];
        phi[len - 1] = 0.0;
        phi[len - 2] = 1e-30;
        for i in (1..len - 1).rev() {
            phi[i - 1] = ((12.0 - 10.0 * w[i]) * phi[i] - w[i + 1] * phi[i + 1]) / w[i - 1];
            if phi[i - 1].abs() > RESCALE {
                phi[i - 1..].iter_mut().for_each(|v| *v /= RESCALE);
            }
        }
        phi
    }

    /// Interior nodes of the outward solution with a Dirichlet wall at the
    /// outer cutoff: the number of eigenvalues below `λ`.
    fn dirichlet_count(&self, grid: &Grid, lambda: f64) -> usize {
        let phi = self.outward(grid, lambda, grid.r.len() - 1);
        sign_changes(&phi)
    }

    fn matched(&self, grid: &Grid, m: usize, lambda: f64) -> Matched {
        let out = self.outward(grid, lambda, m + 1);
        let mut inn = self.inward(grid, lambda, m - 1);
        let (o0, o1) = (out[m], out[m + 1]);
        let (i0, i1) = (inn[1], inn[2]);
        let on = o0.hypot(o1);
        let inorm = i0.hypot(i1);
        let align = if (o0 + o1) * (i0 + i1) < 0.0 { -1.0 } else { 1.0 };
        let mismatch = align * (o0 * i1 - o1 * i0) / (on * inorm);
        inn.iter_mut().for_each(|v| *v *= align);
        let nodes = sign_changes(&out[..=m]) + sign_changes(&inn[1..]);
        Matched { mismatch, nodes }
    }
}

fn sign_changes(values: &[f64]) -> usize {
    let mut count = 0;
    let mut previous = 0.0_f64;
    for &v in values {
        if v != 0.0 {
            if previous != 0.0 && v.signum() != previous.signum() {
                count += 1;
            }
            previous = v;
        }
    }
    count
}
