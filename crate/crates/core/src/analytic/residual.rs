use crate::types::ModelParams;

use super::wavefunction::RadialPair;

/// Largest pointwise residuals of the radial equations on a grid, each
/// divided by the peak of `|g|` and `|f|` on that grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    /// `g' + (κ̄/r + b) g − (M + E) f` and `f' − (κ̄/r + b) f − (M − E) g`.
    pub first_order: f64,
    /// `u'' − (V(r) − λ) u` for both components, with
    /// `V = κ̄(κ̄ ± 1)/r² + 2bκ̄/r` and `λ = E² − M² − b²`.
    pub second_order: f64,
}

impl ResidualReport {
    pub fn max(&self) -> f64 {
        self.first_order.max(self.second_order)
    }
}

pub fn residuals(params: &ModelParams, pair: &RadialPair, r: &[f64]) -> ResidualReport {
    let kb = pair.state.channel.kappa_bar;
    let (m, b, e) = (params.mass(), params.b(), pair.state.energy);
    let lambda = e * e - m * m - b * b;
    let (upper, lower) = (&pair.upper, &pair.lower);

    let mut peak = 0.0_f64;
    let mut first = 0.0_f64;
    let mut second = 0.0_f64;
    for &x in r {
        let (g, dg, d2g) = (upper.value(x), upper.derivative(x), upper.second_derivative(x));
        let (f, df, d2f) = (lower.value(x), lower.derivative(x), lower.second_derivative(x));
        peak = peak.max(g.abs()).max(f.abs());
        let w = kb / x + b;
        first = first.max((dg + w * g - (m + e) * f).abs()).max((df - w * f - (m - e) * g).abs());
        let coulomb = 2.0 * b * kb / x;
        let vg = kb * (kb + 1.0) / (x * x) + coulomb;
        let vf = kb * (kb - 1.0) / (x * x) + coulomb;
        second = second.max((d2g - (vg - lambda) * g).abs()).max((d2f - (vf - lambda) * f).abs());
    }
    ResidualReport { first_order: first / peak, second_order: second / peak }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::wavefunctions;
    use crate::types::Branch;

    fn grid() -> Vec<f64> {
        (1..=3000).map(|i| 0.01 * i as f64).collect()
    }

    #[test]
    fn closed_forms_have_small_residuals() {
        for (a, b, kappa, n_g, branch) in [(0.0, 1.0, -2, 1, Branch::Particle), (0.5, -2.0, 3, 4, Branch::Antiparticle)] {
            let p = ModelParams::new(1.0, a, b).unwrap();
            let w = wavefunctions(&p, &p.channel(kappa).unwrap(), n_g, branch).unwrap();
            let rep = residuals(&p, &w, &grid());
            assert!(rep.max() < 1e-9, "{rep:?}");
        }
    }

    #[test]
    fn wrong_energy_is_detected() {
        let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
        let mut w = wavefunctions(&p, &p.channel(-2).unwrap(), 1, Branch::Particle).unwrap();
        w.state.energy *= 1.0 + 1e-3;
        assert!(residuals(&p, &w, &grid()).max() > 1e-4);
    }
}
