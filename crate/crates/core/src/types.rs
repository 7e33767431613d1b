//! Physical parameters, quantum numbers and the bound-state predicate.

use std::fmt;

use crate::error::{Error, Result};
use crate::numerical::nodes::count_nodes;

/// Parameters of the tensor potential `U(r) = a/r + b` acting on a fermion of
/// mass `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    mass: f64,
    a: f64,
    b: f64,
}

impl ModelParams {
    pub fn new(mass: f64, a: f64, b: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParams(format!("mass must be positive, got {mass}")));
        }
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParams(format!("a and b must be finite, got a={a}, b={b}")));
        }
        // -0.0 would leak into printed tables after conjugation.
        Ok(Self { mass, a: a + 0.0, b: b + 0.0 })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Coulomb tensor strength (dimensionless).
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Constant tensor strength (energy units).
    pub fn b(&self) -> f64 {
        self.b
    }

    /// `M* = sqrt(M² + b²)`, the strict upper bound of bound-state `|E|`.
    pub fn effective_mass(&self) -> f64 {
        self.mass.hypot(self.b)
    }

    pub fn channel(&self, kappa: i32) -> Result<Channel> {
        Channel::new(kappa, self.a)
    }

    pub(crate) fn check_channel(&self, channel: &Channel) -> Result<()> {
        let expected = f64::from(channel.kappa) + self.a;
        if channel.kappa_bar != expected {
            return Err(Error::InconsistentChannel { kappa_bar: channel.kappa_bar, expected });
        }
        Ok(())
    }
}

/// A spin-orbit channel: the Dirac quantum number `κ` together with the
/// shifted `κ̄ = κ + a` that carries all dependence on the Coulomb tensor term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Channel {
    pub kappa: i32,
    pub kappa_bar: f64,
    /// Twice the total angular momentum.
    pub two_j: u32,
    /// Orbital angular momentum of the upper component.
    pub ell_upper: u32,
    pub spin_aligned: bool,
}

impl Channel {
    pub fn new(kappa: i32, a: f64) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::ZeroKappa);
        }
        let spin_aligned = kappa < 0;
        let ell_upper = if spin_aligned { kappa.unsigned_abs() - 1 } else { kappa.unsigned_abs() };
        // κ = -(j + 1/2) aligned, +(j + 1/2) anti-aligned.
        let two_j = 2 * kappa.unsigned_abs() - 1;
        Ok(Self { kappa, kappa_bar: f64::from(kappa) + a, two_j, ell_upper, spin_aligned })
    }

    /// Rebuild a channel from `2j` and the spin alignment.
    pub fn from_angular(two_j: u32, spin_aligned: bool, a: f64) -> Result<Self> {
        if two_j.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("2j must be odd, got {two_j}")));
        }
        let magnitude = i32::try_from(two_j.div_ceil(2))
            .map_err(|_| Error::InvalidParams(format!("2j = {two_j} too large")))?;
        Self::new(if spin_aligned { -magnitude } else { magnitude }, a)
    }

    pub fn j(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kappa={} (kappa_bar={})", self.kappa, self.kappa_bar)
    }
}

/// Upper (`g`) or lower (`f`) radial component of the spinor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Upper,
    Lower,
}

/// Sign of the energy root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `E > 0`.
    Particle,
    /// `E < 0`.
    Antiparticle,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Particle => 1.0,
            Branch::Antiparticle => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Branch::Particle => Branch::Antiparticle,
            Branch::Antiparticle => Branch::Particle,
        }
    }

    pub fn of_energy(energy: f64) -> Self {
        if energy >= 0.0 {
            Branch::Particle
        } else {
            Branch::Antiparticle
        }
    }
}

/// A closed-form bound state.
///
/// `n_g` / `n_f` are the Laguerre degrees of the upper / lower components; one
/// of them is absent for the special `|E| = M` states, whose corresponding
/// component vanishes identically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub channel: Channel,
    pub n_g: Option<u32>,
    pub n_f: Option<u32>,
    pub energy: f64,
    pub branch: Branch,
    /// Exponential decay rate of both components.
    pub gamma: f64,
    /// Degeneracy key `n̄ = n + |κ̄|`; energies depend only on `|κ̄| / n̄`.
    pub n_bar: f64,
    pub effective_mass: f64,
}

impl BoundState {
    pub fn is_special(&self) -> bool {
        self.n_g.is_none() || self.n_f.is_none()
    }

    /// Level index within the channel: `n_g` when `κ̄ < 0`, `n_f` when `κ̄ > 0`.
    /// Charge conjugation preserves it.
    pub fn level(&self) -> u32 {
        if self.channel.kappa_bar < 0.0 {
            self.n_g.unwrap_or(0)
        } else {
            self.n_f.unwrap_or(0)
        }
    }
}

/// The admissible half-line of `κ` for a given sign of `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KappaRange {
    /// `κ < bound` (requires `b > 0`).
    Below(f64),
    /// `κ > bound` (requires `b < 0`).
    Above(f64),
}

impl KappaRange {
    pub fn contains(&self, kappa: i32) -> bool {
        let k = f64::from(kappa);
        kappa != 0
            && match *self {
                KappaRange::Below(bound) => k < bound,
                KappaRange::Above(bound) => k > bound,
            }
    }
}

/// True iff the channel supports bound states: `b·κ̄ < 0` and `|κ̄| > 1/2`.
pub fn bound_states_exist(params: &ModelParams, channel: &Channel) -> bool {
    params.b * channel.kappa_bar < 0.0 && channel.kappa_bar.abs() > 0.5
}

/// Half-line of `κ` values with bound states. Fails for `b = 0`, where there
/// are none.
pub fn kappa_range(params: &ModelParams) -> Result<KappaRange> {
    if params.b > 0.0 {
        Ok(KappaRange::Below(-params.a - 0.5))
    } else if params.b < 0.0 {
        Ok(KappaRange::Above(-params.a + 0.5))
    } else {
        Err(Error::NoBinding)
    }
}

/// Radial functions sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSamples {
    pub r: Vec<f64>,
    pub g: Vec<f64>,
    pub f: Vec<f64>,
    pub node_count_g: usize,
    pub node_count_f: usize,
    /// `∫ (g² + f²) dr` over the grid (trapezoid rule).
    pub l2_norm: f64,
}

impl RadialSamples {
    pub fn new(r: Vec<f64>, g: Vec<f64>, f: Vec<f64>) -> Result<Self> {
        if r.len() < 2 || g.len() != r.len() || f.len() != r.len() {
            return Err(Error::InvalidSamples(format!(
                "need equal lengths >= 2, got r={}, g={}, f={}",
                r.len(),
                g.len(),
                f.len()
            )));
        }
        if !(r[0] > 0.0) || r.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidSamples("r must be positive and strictly increasing".into()));
        }
        let node_count_g = count_nodes(&r, &g).count;
        let node_count_f = count_nodes(&r, &f).count;
        let l2_norm = r
            .windows(2)
            .zip(g.windows(2).zip(f.windows(2)))
            .map(|(rw, (gw, fw))| {
                0.5 * (rw[1] - rw[0]) * (gw[0] * gw[0] + fw[0] * fw[0] + gw[1] * gw[1] + fw[1] * fw[1])
            })
            .sum();
        Ok(Self { r, g, f, node_count_g, node_count_f, l2_norm })
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn component(&self, component: Component) -> &[f64] {
        match component {
            Component::Upper => &self.g,
            Component::Lower => &self.f,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, b: f64) -> ModelParams {
        ModelParams::new(1.0, a, b).unwrap()
    }

    #[test]
    fn existence_examples() {
        let p = params(0.0, 1.0);
        assert!(bound_states_exist(&p, &p.channel(-1).unwrap()));
        assert!(!bound_states_exist(&p, &p.channel(1).unwrap()));
        let p = params(0.7, 1.0);
        let ch = p.channel(-1).unwrap();
        assert!((ch.kappa_bar + 0.3).abs() < 1e-15);
        assert!(!bound_states_exist(&p, &ch));
    }

    #[test]
    fn half_exactly_is_rejected() {
        let p = params(0.5, 1.0);
        let ch = p.channel(-1).unwrap();
        assert_eq!(ch.kappa_bar, -0.5);
        assert!(!bound_states_exist(&p, &ch));
        assert!(!kappa_range(&p).unwrap().contains(-1));
    }

    #[test]
    fn kappa_range_examples() {
        let below = kappa_range(&params(0.0, 1.0)).unwrap();
        assert!((-50..=-1).all(|k| below.contains(k)));
        assert!(!(0..=50).any(|k| below.contains(k)));

        let above = kappa_range(&params(0.0, -1.0)).unwrap();
        assert!((1..=50).all(|k| above.contains(k)));
        assert!(!(-50..=0).any(|k| above.contains(k)));

        // Brute-force enumeration for a = -2, b = 1.
        let p = params(-2.0, 1.0);
        let range = kappa_range(&p).unwrap();
        let brute: Vec<i32> = (-5..=5)
            .filter(|&k| k != 0)
            .filter(|&k| {
                let kb = f64::from(k) + p.a();
                p.b() * kb < 0.0 && kb.abs() > 0.5
            })
            .collect();
        assert_eq!(brute, vec![-5, -4, -3, -2, -1, 1]);
        let from_range: Vec<i32> = (-5..=5).filter(|&k| range.contains(k)).collect();
        assert_eq!(from_range, brute);

        assert_eq!(kappa_range(&params(1.0, 0.0)), Err(Error::NoBinding));
    }

    #[test]
    fn channel_angular_momentum() {
        let ch = Channel::new(-1, 0.0).unwrap();
        assert_eq!((ch.ell_upper, ch.two_j, ch.spin_aligned), (0, 1, true));
        let ch = Channel::new(1, 0.0).unwrap();
        assert_eq!((ch.ell_upper, ch.two_j, ch.spin_aligned), (1, 1, false));
        let ch = Channel::new(-3, 0.25).unwrap();
        assert_eq!((ch.ell_upper, ch.two_j), (2, 5));
        assert_eq!(ch.j(), 2.5);
        assert_eq!(Channel::new(0, 0.0), Err(Error::ZeroKappa));
        assert!(Channel::from_angular(2, true, 0.0).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(ModelParams::new(0.0, 0.0, 1.0).is_err());
        assert!(ModelParams::new(-1.0, 0.0, 1.0).is_err());
        assert!(ModelParams::new(1.0, f64::NAN, 1.0).is_err());
        assert!(ModelParams::new(1.0, 0.0, f64::INFINITY).is_err());
        let p = ModelParams::new(1.0, -0.0, -0.0).unwrap();
        assert!(p.a().is_sign_positive() && p.b().is_sign_positive());
        assert_eq!(p.effective_mass(), 1.0);
    }

    #[test]
    fn inconsistent_channel_detected() {
        let p = params(0.3, 1.0);
        let ch = Channel::new(-2, 0.0).unwrap();
        assert!(matches!(p.check_channel(&ch), Err(Error::InconsistentChannel { .. })));
        assert!(p.check_channel(&p.channel(-2).unwrap()).is_ok());
    }

    #[test]
    fn samples_validation() {
        assert!(RadialSamples::new(vec![1.0], vec![0.0], vec![0.0]).is_err());
        assert!(RadialSamples::new(vec![0.0, 1.0], vec![0.0; 2], vec![0.0; 2]).is_err());
        assert!(RadialSamples::new(vec![1.0, 1.0], vec![0.0; 2], vec![0.0; 2]).is_err());
        let s = RadialSamples::new(vec![1.0, 2.0, 3.0], vec![1.0, -1.0, 1.0], vec![0.0; 3]).unwrap();
        assert_eq!(s.node_count_g, 2);
        assert_eq!(s.node_count_f, 0);
        assert!((s.l2_norm - 2.0).abs() < 1e-15);
    }
}
