use crate::error::{Error, Result};
use crate::types::{kappa_range, BoundState, Branch, Channel, KappaRange, ModelParams};

/// Whether the model binds at all.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BindingRegime {
    /// `b = 0`: the radial equations reduce to Bessel form and nothing binds,
    /// whatever `a` is.
    NoBoundStates,
    Bound(KappaRange),
}

pub fn binding_regime(params: &ModelParams) -> BindingRegime {
    match kappa_range(params) {
        Ok(range) => BindingRegime::Bound(range),
        Err(_) => BindingRegime::NoBoundStates,
    }
}

pub(crate) fn validate_bound_channel(params: &ModelParams, channel: &Channel) -> Result<()> {
    params.check_channel(channel)?;
    let kb = channel.kappa_bar;
    if params.b() == 0.0 {
        return Err(Error::NoBinding);
    }
    if kb == 0.0 {
        return Err(Error::ZeroKappaBar);
    }
    if kb.abs() <= 0.5 {
        return Err(Error::ExcludedWindow(kb));
    }
    if params.b() * kb >= 0.0 {
        return Err(Error::UnboundChannel(params.b() * kb));
    }
    Ok(())
}

/// `|E| = sqrt(M² + b²[1 − (κ̄/n̄)²])`.
fn energy_magnitude(params: &ModelParams, kappa_bar: f64, n_bar: f64) -> f64 {
    let ratio = kappa_bar / n_bar;
    let b = params.b();
    (params.mass() * params.mass() + b * b * (1.0 - ratio * ratio)).sqrt()
}

/// Level index `n` (Laguerre degree of the component that is never absent in
/// the channel's family) and its `n̄ = n + |κ̄|`.
fn n_bar(kappa_bar: f64, level: u32) -> f64 {
    f64::from(level) + kappa_bar.abs()
}

fn level_from_n_g(kappa_bar: f64, n_g: u32) -> u32 {
    if kappa_bar < 0.0 {
        n_g
    } else {
        n_g + 1
    }
}

/// Energy of the state with upper-component Laguerre degree `n_g`.
///
/// For `κ̄ > 1/2` the lower component has degree `n_g + 1`. The nodeless
/// `κ̄ < −1/2` state (`n_g = 0`, `E = +M`) is served by [`special_state`].
pub fn energy(params: &ModelParams, channel: &Channel, n_g: u32, branch: Branch) -> Result<f64> {
    validate_bound_channel(params, channel)?;
    let kb = channel.kappa_bar;
    if n_g == 0 && kb < 0.0 {
        return Err(Error::SpecialStateRequired);
    }
    Ok(branch.sign() * energy_magnitude(params, kb, n_bar(kb, level_from_n_g(kb, n_g))))
}

/// Full bound-state record for upper-component degree `n_g` (non-special).
pub fn bound_state(params: &ModelParams, channel: &Channel, n_g: u32, branch: Branch) -> Result<BoundState> {
    let energy = energy(params, channel, n_g, branch)?;
    let kb = channel.kappa_bar;
    let nb = n_bar(kb, level_from_n_g(kb, n_g));
    let n_f = if kb < 0.0 { n_g - 1 } else { n_g + 1 };
    Ok(BoundState {
        channel: *channel,
        n_g: Some(n_g),
        n_f: Some(n_f),
        energy,
        branch,
        gamma: (params.b() * kb).abs() / nb,
        n_bar: nb,
        effective_mass: params.effective_mass(),
    })
}

/// The `|E| = M` state with one identically vanishing component.
///
/// `κ̄ < −1/2, b > 0`: `E = +M`, `f ≡ 0`, `g ∝ r^(−κ̄) e^(−|b|r)`.
/// `κ̄ > 1/2, b < 0`: `E = −M`, `g ≡ 0`, `f ∝ r^(κ̄) e^(−|b|r)`.
pub fn special_state(params: &ModelParams, channel: &Channel) -> Result<BoundState> {
    params.check_channel(channel)?;
    let kb = channel.kappa_bar;
    if params.b() == 0.0 {
        return Err(Error::NoBinding);
    }
    if kb.abs() <= 0.5 {
        return Err(if kb == 0.0 { Error::ZeroKappaBar } else { Error::ExcludedWindow(kb) });
    }
    let (n_g, n_f, energy, branch) = if kb < 0.0 && params.b() > 0.0 {
        (Some(0), None, params.mass(), Branch::Particle)
    } else if kb > 0.0 && params.b() < 0.0 {
        (None, Some(0), -params.mass(), Branch::Antiparticle)
    } else {
        return Err(Error::NoSpecialState);
    };
    Ok(BoundState {
        channel: *channel,
        n_g,
        n_f,
        energy,
        branch,
        gamma: params.b().abs(),
        n_bar: kb.abs(),
        effective_mass: params.effective_mass(),
    })
}

/// State at level `n` of a channel: `n = n_g` for `κ̄ < 0`, `n = n_f` for
/// `κ̄ > 0`. Level 0 is the special state and exists only on one branch.
pub fn state_at_level(params: &ModelParams, channel: &Channel, level: u32, branch: Branch) -> Result<BoundState> {
    validate_bound_channel(params, channel)?;
    let kb = channel.kappa_bar;
    if level == 0 {
        let special = special_state(params, channel)?;
        if special.branch != branch {
            return Err(Error::SpecialStateBranch(special.branch));
        }
        return Ok(special);
    }
    let n_g = if kb < 0.0 { level } else { level - 1 };
    bound_state(params, channel, n_g, branch)
}

/// Leading non-relativistic binding energy
/// `E − M ≈ (b²/2M)[1 − κ̄²/(n_g + 1/2 + |κ̄ + 1/2|)²]`.
///
/// Accepts `n_g = 0` for `κ̄ < −1/2` (the special state), where it is 0.
pub fn nonrelativistic_binding(params: &ModelParams, channel: &Channel, n_g: u32) -> Result<f64> {
    validate_bound_channel(params, channel)?;
    let kb = channel.kappa_bar;
    let ratio = kb / n_bar(kb, level_from_n_g(kb, n_g));
    let b = params.b();
    Ok(0.5 * b * b / params.mass() * (1.0 - ratio * ratio))
}

/// Exact `E − M` on the particle branch, free of cancellation:
/// `b²ρ / (M + E)` with `ρ = 1 − (κ̄/n̄)²`.
pub fn binding_energy(params: &ModelParams, channel: &Channel, n_g: u32) -> Result<f64> {
    validate_bound_channel(params, channel)?;
    let kb = channel.kappa_bar;
    let nb = n_bar(kb, level_from_n_g(kb, n_g));
    let ratio = kb / nb;
    let rho = 1.0 - ratio * ratio;
    let b = params.b();
    Ok(b * b * rho / (params.mass() + energy_magnitude(params, kb, nb)))
}
