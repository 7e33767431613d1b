use crate::error::{Error, Result};
use crate::special::{laguerre_weighted_norm, LaguerreSpec};
use crate::types::{BoundState, Branch, Channel, Component, ModelParams, RadialSamples};

use super::energy::{bound_state, special_state, validate_bound_channel};

/// One radial component `amplitude · x^p · e^(−x/2) · L_n^(α)(x)` with
/// `x = 2γr`.
///
/// Every component built here has `2p = α + 1`, which is what makes
/// [`laguerre_weighted_norm`] the exact normalization integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionForm {
    pub prefactor_exponent: f64,
    pub laguerre: LaguerreSpec,
    pub gamma: f64,
    pub amplitude: f64,
}

impl WavefunctionForm {
    fn new(prefactor_exponent: f64, degree: u32, alpha: f64, gamma: f64, amplitude: f64) -> Result<Self> {
        Ok(Self { prefactor_exponent, laguerre: LaguerreSpec::new(degree, alpha)?, gamma, amplitude })
    }

    pub fn is_zero(&self) -> bool {
        self.amplitude == 0.0
    }

    /// `x^(p−k) e^(−x/2)` evaluated in log space.
    fn envelope(&self, x: f64, k: i32) -> f64 {
        if x == 0.0 {
            return if self.prefactor_exponent > f64::from(k) { 0.0 } else { f64::INFINITY };
        }
        ((self.prefactor_exponent - f64::from(k)) * x.ln() - 0.5 * x).exp()
    }

    pub fn value(&self, r: f64) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let x = 2.0 * self.gamma * r;
        self.amplitude * self.envelope(x, 0) * self.laguerre.eval(x)
    }

    /// `d/dr` using the exact Laguerre derivative.
    pub fn derivative(&self, r: f64) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let x = 2.0 * self.gamma * r;
        let p = self.prefactor_exponent;
        let l = self.laguerre.eval(x);
        let dl = self.laguerre.derivative(x);
        2.0 * self.gamma * self.amplitude * self.envelope(x, 1) * ((p - 0.5 * x) * l + x * dl)
    }

    /// `d²/dr²` using exact Laguerre derivatives.
    pub fn second_derivative(&self, r: f64) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let x = 2.0 * self.gamma * r;
        let p = self.prefactor_exponent;
        let l = self.laguerre.eval(x);
        let dl = self.laguerre.derivative(x);
        let d2l = self.laguerre.second_derivative(x);
        let bracket = (p * (p - 1.0) - p * x + 0.25 * x * x) * l + (2.0 * p * x - x * x) * dl + x * x * d2l;
        4.0 * self.gamma * self.gamma * self.amplitude * self.envelope(x, 2) * bracket
    }

    /// `∫₀^∞ value(r)² dr` in closed form.
    pub fn norm_integral(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let w = laguerre_weighted_norm(self.laguerre.degree(), self.laguerre.alpha())
            .expect("order validated at construction");
        self.amplitude * self.amplitude * w / (2.0 * self.gamma)
    }

    fn scaled(mut self, factor: f64) -> Self {
        self.amplitude *= factor;
        self
    }
}

/// Upper and lower components of one bound state, normalized so that
/// `∫₀^∞ (g² + f²) dr = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPair {
    pub state: BoundState,
    pub upper: WavefunctionForm,
    pub lower: WavefunctionForm,
}

impl RadialPair {
    pub fn component(&self, component: Component) -> &WavefunctionForm {
        match component {
            Component::Upper => &self.upper,
            Component::Lower => &self.lower,
        }
    }

    /// Closed-form `∫ (g² + f²) dr`; 1 up to rounding.
    pub fn norm(&self) -> f64 {
        self.upper.norm_integral() + self.lower.norm_integral()
    }

    pub fn sample(&self, r: &[f64]) -> Result<RadialSamples> {
        let g = r.iter().map(|&x| self.upper.value(x)).collect();
        let f = r.iter().map(|&x| self.lower.value(x)).collect();
        RadialSamples::new(r.to_vec(), g, f)
    }
}

/// Wavefunctions of the state with upper-component degree `n_g`.
///
/// `n_g = 0` with `κ̄ < −1/2` on the particle branch is the special state
/// (`f ≡ 0`); on the antiparticle branch it would need `E = −M`, which the
/// lower-component formula excludes.
pub fn wavefunctions(params: &ModelParams, channel: &Channel, n_g: u32, branch: Branch) -> Result<RadialPair> {
    validate_bound_channel(params, channel)?;
    let state = if n_g == 0 && channel.kappa_bar < 0.0 {
        if branch == Branch::Antiparticle {
            return Err(Error::NegativeMassEdge);
        }
        special_state(params, channel)?
    } else {
        bound_state(params, channel, n_g, branch)?
    };
    state_wavefunctions(params, &state)
}

/// Wavefunctions of any closed-form bound state, special ones included.
pub fn state_wavefunctions(params: &ModelParams, state: &BoundState) -> Result<RadialPair> {
    validate_bound_channel(params, &state.channel)?;
    let kb = state.channel.kappa_bar;
    let m = params.mass();
    let e = state.energy;
    let gamma = state.gamma;
    // sqrt|(M − E)/(M + E)|; the E = −M edge is only reachable as the
    // zero-upper special state, handled separately below.
    let mass_ratio = || -> Result<f64> {
        if m + e == 0.0 {
            return Err(Error::NegativeMassEdge);
        }
        Ok(((m - e) / (m + e)).abs().sqrt())
    };

    let (upper, lower) = if kb < 0.0 {
        let n = state.n_g.ok_or(Error::NegativeMassEdge)?;
        let upper = WavefunctionForm::new(-kb, n, -1.0 - 2.0 * kb, gamma, 1.0)?;
        let lower = if n == 0 {
            WavefunctionForm::new(1.0 - kb, 0, 1.0 - 2.0 * kb, gamma, 0.0)?
        } else {
            let nf = f64::from(n);
            let ratio = -(m + e).signum() / (nf * (nf - 2.0 * kb)).sqrt() * mass_ratio()?;
            WavefunctionForm::new(1.0 - kb, n - 1, 1.0 - 2.0 * kb, gamma, ratio)?
        };
        (upper, lower)
    } else {
        match state.n_g {
            None => {
                if state.n_f != Some(0) {
                    return Err(Error::NoSpecialState);
                }
                let upper = WavefunctionForm::new(1.0 + kb, 0, 1.0 + 2.0 * kb, gamma, 0.0)?;
                let lower = WavefunctionForm::new(kb, 0, 2.0 * kb - 1.0, gamma, 1.0)?;
                (upper, lower)
            }
            Some(n) => {
                let ng = f64::from(n);
                let upper = WavefunctionForm::new(1.0 + kb, n, 1.0 + 2.0 * kb, gamma, 1.0)?;
                let ratio =
                    -((ng + 1.0) * (ng + 1.0 + 2.0 * kb)).sqrt() * (m - e).signum() * mass_ratio()?;
                let lower = WavefunctionForm::new(kb, n + 1, 2.0 * kb - 1.0, gamma, ratio)?;
                (upper, lower)
            }
        }
    };

    let total = upper.norm_integral() + lower.norm_integral();
    let scale = total.sqrt().recip();
    Ok(RadialPair { state: *state, upper: upper.scaled(scale), lower: lower.scaled(scale) })
}
