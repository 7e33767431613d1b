use crate::error::{Error, Result};
use crate::types::{Channel, Component, ModelParams};

/// `V(r) = centrifugal / r² + coulomb / r`, the effective potential of the
/// second-order radial equations once `b²` is moved into the eigenvalue:
/// `u'' = (V(r) − λ) u` with `λ = E² − M² − b²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectivePotential {
    /// `κ̄(κ̄ + 1)` for the upper component, `κ̄(κ̄ − 1)` for the lower.
    pub centrifugal: f64,
    /// `2bκ̄`.
    pub coulomb: f64,
}

impl EffectivePotential {
    pub(crate) fn for_component(b: f64, kappa_bar: f64, component: Component) -> Self {
        let shift = match component {
            Component::Upper => 1.0,
            Component::Lower => -1.0,
        };
        Self { centrifugal: kappa_bar * (kappa_bar + shift), coulomb: 2.0 * b * kappa_bar }
    }

    pub fn value(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::NonPositiveRadius(r));
        }
        Ok(self.centrifugal / (r * r) + self.coulomb / r)
    }

    /// `(centrifugal + 1/4)`: squared shift of the regular power law
    /// `r^(1/2 + sqrt(centrifugal + 1/4))`.
    pub(crate) fn regular_exponent(&self) -> f64 {
        0.5 + (self.centrifugal + 0.25).max(0.0).sqrt()
    }
}

pub fn effective_potential(params: &ModelParams, channel: &Channel, component: Component) -> Result<EffectivePotential> {
    params.check_channel(channel)?;
    if channel.kappa_bar.abs() <= 0.5 {
        return Err(Error::ExcludedWindow(channel.kappa_bar));
    }
    Ok(EffectivePotential::for_component(params.b(), channel.kappa_bar, component))
}

/// Effective potential for an arbitrary radial tensor field `U`, before the
/// `a/r + b` specialization:
/// `κ(κ ± 1)/r² + 2κU/r ∓ U′ + U²` (upper sign for `g`), so that
/// `u'' = (V − (E² − M²)) u`.
pub fn general_tensor_potential(kappa: i32, component: Component, r: f64, u: f64, du: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonPositiveRadius(r));
    }
    let k = f64::from(kappa);
    let (shift, sign) = match component {
        Component::Upper => (1.0, 1.0),
        Component::Lower => (-1.0, -1.0),
    };
    Ok(k * (k + shift) / (r * r) + 2.0 * k * u / r - sign * du + u * u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centrifugal_vanishes_at_minus_one() {
        for b in [0.5, 1.0, -2.0] {
            let p = ModelParams::new(1.0, 0.0, b).unwrap();
            let v = effective_potential(&p, &p.channel(-1).unwrap(), Component::Upper).unwrap();
            for r in [0.1, 1.0, 7.5] {
                assert_eq!(v.value(r).unwrap(), -2.0 * b / r);
            }
        }
    }

    #[test]
    fn lower_component_direct_arithmetic() {
        let p = ModelParams::new(1.0, 0.0, -1.0).unwrap();
        let v = effective_potential(&p, &p.channel(2).unwrap(), Component::Lower).unwrap();
        assert_eq!(v.value(1.0).unwrap(), -2.0);
        // Separate evaluation path: κ̄(κ̄−1)/r² + 2bκ̄/r written out.
        let (kb, b, r) = (2.0_f64, -1.0_f64, 1.0_f64);
        assert_eq!(kb * (kb - 1.0) / (r * r) + 2.0 * b * kb / r, -2.0);
    }

    #[test]
    fn general_form_reduces_to_specialized() {
        for (a, b, kappa) in [(0.0, 1.0, -2), (0.7, -1.3, 3), (-2.0, 0.5, 1), (1.5, 2.0, -4)] {
            let p = ModelParams::new(1.0, a, b).unwrap();
            let ch = p.channel(kappa).unwrap();
            for comp in [Component::Upper, Component::Lower] {
                let spec = effective_potential(&p, &ch, comp).unwrap();
                for r in [0.1, 1.0, 10.0] {
                    let u = a / r + b;
                    let du = -a / (r * r);
                    let general = general_tensor_potential(kappa, comp, r, u, du).unwrap();
                    let specialized = spec.value(r).unwrap() + b * b;
                    assert!((general - specialized).abs() <= 1e-12 * specialized.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_radius_and_window() {
        let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
        let v = effective_potential(&p, &p.channel(-1).unwrap(), Component::Upper).unwrap();
        assert_eq!(v.value(0.0), Err(Error::NonPositiveRadius(0.0)));
        assert!(v.value(-1.0).is_err());
        let p = ModelParams::new(1.0, 0.5, 1.0).unwrap();
        assert!(effective_potential(&p, &p.channel(-1).unwrap(), Component::Upper).is_err());
    }
}
