//! Identification of the second-order Dirac radial equations with the radial
//! Schrödinger equation for a mass `m` in `V = Z/r + β/(2mr²)`.
//!
//! The mass `m` is pure bookkeeping: every physical output is independent of
//! it. The orbital number of the Schrödinger problem is likewise arbitrary and
//! fixed here at `l = 0`, so `β` carries the whole `1/r²` coefficient.

use crate::error::{Error, Result};
use crate::types::{Channel, Component, ModelParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularCoulombMap {
    pub component: Component,
    pub bookkeeping_mass: f64,
    /// Effective Coulomb strength `Z = bκ̄/m`.
    pub z: f64,
    /// Centrifugal modification with `β + l(l+1) = κ̄(κ̄ ± 1)`.
    pub beta: f64,
    pub ell: f64,
    /// `S = sqrt(β + (l + 1/2)²) = |κ̄ ± 1/2|`.
    pub s: f64,
    mass: f64,
    b: f64,
}

impl SingularCoulombMap {
    /// Whether the Schrödinger problem has bound states (`Z < 0`, `β > -1/4`).
    pub fn supports_bound_states(&self) -> bool {
        self.z < 0.0 && self.beta > -0.25
    }

    /// `ε_n = -m Z² / (2 (n + 1/2 + S)²)`.
    pub fn epsilon(&self, n: u32) -> f64 {
        let denom = f64::from(n) + 0.5 + self.s;
        -self.bookkeeping_mass * self.z * self.z / (2.0 * denom * denom)
    }

    /// Decay rate `m|Z| / (n + 1/2 + S)` of the level-`n` solution.
    pub fn decay_rate(&self, n: u32) -> f64 {
        self.bookkeeping_mass * self.z.abs() / (f64::from(n) + 0.5 + self.s)
    }

    /// `E² = 2mε + M² + b²` for the level-`n` solution.
    pub fn dirac_energy_squared(&self, n: u32) -> f64 {
        2.0 * self.bookkeeping_mass * self.epsilon(n) + self.mass * self.mass + self.b * self.b
    }
}

pub fn map_to_singular_coulomb(
    params: &ModelParams,
    channel: &Channel,
    component: Component,
    bookkeeping_mass: f64,
) -> Result<SingularCoulombMap> {
    params.check_channel(channel)?;
    let kb = channel.kappa_bar;
    if kb.abs() <= 0.5 {
        return Err(Error::ExcludedWindow(kb));
    }
    if !(bookkeeping_mass > 0.0) || !bookkeeping_mass.is_finite() {
        return Err(Error::InvalidParams(format!("bookkeeping mass must be positive, got {bookkeeping_mass}")));
    }
    let shift = match component {
        Component::Upper => 1.0,
        Component::Lower => -1.0,
    };
    let beta = kb * (kb + shift);
    Ok(SingularCoulombMap {
        component,
        bookkeeping_mass,
        z: params.b() * kb / bookkeeping_mass,
        beta,
        ell: 0.0,
        s: (beta + 0.25).sqrt(),
        mass: params.mass(),
        b: params.b(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_bar_minus_one_upper() {
        let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
        let ch = p.channel(-1).unwrap();
        for m in [0.5, 1.0, 2.0] {
            let map = map_to_singular_coulomb(&p, &ch, Component::Upper, m).unwrap();
            assert_eq!(map.z, -1.0 / m);
            assert_eq!(map.beta + map.ell * (map.ell + 1.0), 0.0);
            assert!(map.supports_bound_states());
        }
    }

    #[test]
    fn s_is_shifted_kappa_bar() {
        let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
        let ch = p.channel(-2).unwrap();
        let map = map_to_singular_coulomb(&p, &ch, Component::Upper, 1.0).unwrap();
        assert_eq!(map.beta, 2.0);
        assert_eq!(map.s, 1.5);
        assert_eq!(map.s, (0.5 + ch.kappa_bar).abs());
        let lower = map_to_singular_coulomb(&p, &ch, Component::Lower, 1.0).unwrap();
        assert_eq!(lower.beta, 6.0);
        assert_eq!(lower.s, 2.5);
    }

    #[test]
    fn bookkeeping_mass_cancels() {
        for (a, b, kappa) in [(0.0, 1.0, -1), (0.3, -2.0, 3), (-2.0, 0.5, 1)] {
            let p = ModelParams::new(1.3, a, b).unwrap();
            let ch = p.channel(kappa).unwrap();
            for comp in [Component::Upper, Component::Lower] {
                let reference = map_to_singular_coulomb(&p, &ch, comp, 1.0).unwrap();
                for m in [0.5, 2.0] {
                    let map = map_to_singular_coulomb(&p, &ch, comp, m).unwrap();
                    for n in 0..6 {
                        let e2 = map.dirac_energy_squared(n);
                        let e2_ref = reference.dirac_energy_squared(n);
                        assert!((e2 - e2_ref).abs() < 1e-14 * e2_ref);
                        assert!((map.decay_rate(n) - reference.decay_rate(n)).abs() < 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn repulsive_and_excluded() {
        let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
        let map = map_to_singular_coulomb(&p, &p.channel(2).unwrap(), Component::Upper, 1.0).unwrap();
        assert!(!map.supports_bound_states());
        let p = ModelParams::new(1.0, 0.6, 1.0).unwrap();
        assert!(matches!(
            map_to_singular_coulomb(&p, &p.channel(-1).unwrap(), Component::Upper, 1.0),
            Err(Error::ExcludedWindow(_))
        ));
    }
}
