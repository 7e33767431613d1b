use crate::error::{Error, Result};
use crate::types::{Channel, ModelParams, RadialSamples};

/// Settings for [`integrate_first_order`]. Radii are absolute.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstOrderConfig {
    pub r_min: f64,
    pub r_max: f64,
    /// Local relative error per step.
    pub tolerance: f64,
    pub max_steps: usize,
    /// Amplitude at which the outward solution is declared divergent.
    pub overflow_limit: f64,
    /// Tail-to-peak ratio above which the tail counts as growing. Genuine
    /// high-`n̄` states keep an `r^n̄ e^(−γr)` tail near `1e−3` at `30/γ`;
    /// energies off by `1e−6` relative already reach `1e−1`.
    pub growth_threshold: f64,
}

impl FirstOrderConfig {
    /// `[1e−6, 30] / γ` with `γ = sqrt(M² + b² − E²)`. Energies outside the
    /// gap fall back to `γ = |b|`, or `M` when `b = 0`.
    pub fn for_energy(params: &ModelParams, energy: f64) -> Self {
        let gap = params.effective_mass().powi(2) - energy * energy;
        let gamma = if gap > 0.0 {
            gap.sqrt()
        } else if params.b() != 0.0 {
            params.b().abs()
        } else {
            params.mass()
        };
        Self {
            r_min: 1e-6 / gamma,
            r_max: 30.0 / gamma,
            tolerance: 1e-12,
            max_steps: 200_000,
            overflow_limit: 1e250,
            growth_threshold: 1e-2,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.r_min > 0.0 && self.r_max > self.r_min && self.r_max.is_finite()) {
            return Err(Error::InvalidConfig(format!("bad radial interval [{}, {}]", self.r_min, self.r_max)));
        }
        if !(self.tolerance > 0.0) || self.max_steps == 0 || !(self.overflow_limit > 1.0) {
            return Err(Error::InvalidConfig("tolerance, max_steps and overflow_limit must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailBehavior {
    /// The tail is small compared with the peak.
    Decaying,
    /// The tail stays comparable to the peak: `E` is not an eigenvalue.
    Growing,
    /// The amplitude exceeded the overflow limit before `r_max`.
    Overflow,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FirstOrderResult {
    /// Accepted integration points, scaled so the peak amplitude is 1.
    pub samples: RadialSamples,
    /// `sqrt(g² + f²)` at the last point over its maximum.
    pub tail_ratio: f64,
    pub behavior: TailBehavior,
    pub steps: usize,
}

/// Integrate the coupled first-order system outward from the regular
/// solution at the origin:
///
/// `r g' = −(κ̄ + b r) g + (M + E) r f`,
/// `r f' = (κ̄ + b r) f + (M − E) r g`.
///
/// Uses classical RK4 in `t = ln r` with step doubling and local
/// extrapolation.
pub fn integrate_first_order(
    params: &ModelParams,
    channel: &Channel,
    energy: f64,
    config: &FirstOrderConfig,
) -> Result<FirstOrderResult> {
    params.check_channel(channel)?;
    if channel.kappa_bar == 0.0 {
        return Err(Error::ZeroKappaBar);
    }
    if !energy.is_finite() {
        return Err(Error::InvalidParams(format!("energy must be finite, got {energy}")));
    }
    config.validate()?;
    let system = System { kb: channel.kappa_bar, b: params.b(), plus: params.mass() + energy, minus: params.mass() - energy };

    let t_end = config.r_max.ln();
    let mut t = config.r_min.ln();
    let mut y = system.series(config.r_min);
    let mut r = vec![config.r_min];
    let mut g = vec![y[0]];
    let mut f = vec![y[1]];
    let mut h = 1e-2;
    let mut steps = 0;
    let mut overflow = false;

    while t < t_end {
        if steps >= config.max_steps {
            return Err(Error::NonConvergence { iterations: steps, width: t_end - t });
        }
        steps += 1;
        let last = t + h >= t_end;
        let step = if last { t_end - t } else { h };
        let full = system.rk4(t, y, step);
        let half = system.rk4(t, y, 0.5 * step);
        let two_half = system.rk4(t + 0.5 * step, half, 0.5 * step);
        let scale = two_half[0].hypot(two_half[1]).max(f64::MIN_POSITIVE);
        let err = ((two_half[0] - full[0]).hypot(two_half[1] - full[1]) / 15.0) / scale;
        if err > config.tolerance && step > 1e-10 {
            h = step * (0.9 * (config.tolerance / err).powf(0.2)).max(0.2);
            continue;
        }
        y = [two_half[0] + (two_half[0] - full[0]) / 15.0, two_half[1] + (two_half[1] - full[1]) / 15.0];
        t = if last { t_end } else { t + step };
        r.push(if last { config.r_max } else { t.exp() });
        g.push(y[0]);
        f.push(y[1]);
        let growth = if err > 0.0 { 0.9 * (config.tolerance / err).powf(0.2) } else { 5.0 };
        h = step * growth.clamp(0.2, 5.0);
        if y[0].hypot(y[1]) > config.overflow_limit {
            overflow = true;
            break;
        }
    }

    let amplitude: Vec<f64> = g.iter().zip(&f).map(|(a, b)| a.hypot(*b)).collect();
    let peak = amplitude.iter().copied().fold(0.0, f64::max);
    let tail_ratio = amplitude[amplitude.len() - 1] / peak;
    let behavior = if overflow {
        TailBehavior::Overflow
    } else if tail_ratio > config.growth_threshold {
        TailBehavior::Growing
    } else {
        TailBehavior::Decaying
    };
    g.iter_mut().chain(f.iter_mut()).for_each(|v| *v /= peak);
    let samples = RadialSamples::new(r, g, f)?;
    Ok(FirstOrderResult { samples, tail_ratio, behavior, steps })
}

struct System {
    kb: f64,
    b: f64,
    /// `M + E`.
    plus: f64,
    /// `M − E`.
    minus: f64,
}

const SERIES_TERMS: usize = 8;

impl System {
    fn rhs(&self, t: f64, y: [f64; 2]) -> [f64; 2] {
        let r = t.exp();
        let w = self.kb + self.b * r;
        [-w * y[0] + self.plus * r * y[1], w * y[1] + self.minus * r * y[0]]
    }

    fn rk4(&self, t: f64, y: [f64; 2], h: f64) -> [f64; 2] {
        let add = |y: [f64; 2], k: [f64; 2], s: f64| [y[0] + s * k[0], y[1] + s * k[1]];
        let k1 = self.rhs(t, y);
        let k2 = self.rhs(t + 0.5 * h, add(y, k1, 0.5 * h));
        let k3 = self.rhs(t + 0.5 * h, add(y, k2, 0.5 * h));
        let k4 = self.rhs(t + h, add(y, k3, h));
        [
            y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        ]
    }

    /// Regular solution `r^|κ̄| Σ (g_k, f_k) r^k` at small `r`. The leading
    /// coefficient sits on `g` for `κ̄ < 0` and on `f` for `κ̄ > 0`.
    fn series(&self, r: f64) -> [f64; 2] {
        let s = self.kb.abs();
        let mut gk = [0.0; SERIES_TERMS];
        let mut fk = [0.0; SERIES_TERMS];
        if self.kb < 0.0 {
            gk[0] = 1.0;
        } else {
            fk[0] = 1.0;
        }
        for k in 1..SERIES_TERMS {
            let kf = k as f64;
            gk[k] = (self.plus * fk[k - 1] - self.b * gk[k - 1]) / (s + kf + self.kb);
            fk[k] = (self.minus * gk[k - 1] + self.b * fk[k - 1]) / (s + kf - self.kb);
        }
        let horner = |c: &[f64; SERIES_TERMS]| c.iter().rev().fold(0.0, |acc, &ck| acc * r + ck);
        let lead = r.powf(s);
        [lead * horner(&gk), lead * horner(&fk)]
    }
}
