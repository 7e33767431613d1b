use crate::types::{Branch, ModelParams};

use super::spectrum::{spectrum, SpectrumRow};

/// Charge conjugation flips the sign of the tensor potential: `(a, b) → (−a, −b)`.
pub fn charge_conjugate(params: &ModelParams) -> ModelParams {
    ModelParams::new(params.mass(), -params.a(), -params.b()).expect("negation keeps parameters valid")
}

/// A state of the original system and its partner in the conjugated one:
/// `κ̄ → −κ̄`, branch flipped, `n̄` preserved, `E → −E`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePair {
    pub original: SpectrumRow,
    pub conjugate: SpectrumRow,
    /// `|E + E_conj| / |E|`.
    pub relative_deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjugationReport {
    pub conjugated: ModelParams,
    pub pairs: Vec<ConjugatePair>,
    /// Bound rows on either side without a partner.
    pub unmatched: Vec<SpectrumRow>,
    pub max_relative_deviation: f64,
}

impl ConjugationReport {
    pub fn holds(&self, tolerance: f64) -> bool {
        self.unmatched.is_empty() && self.max_relative_deviation <= tolerance
    }
}

/// Compare the spectrum of `params` (both branches, channels `kappas`) with
/// that of the conjugated parameters on channels `−kappas`.
pub fn conjugation_report(params: &ModelParams, kappas: &[i32], n_max: u32) -> ConjugationReport {
    let conjugated = charge_conjugate(params);
    let mirrored: Vec<i32> = kappas.iter().map(|k| -k).collect();
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();

    for branch in [Branch::Particle, Branch::Antiparticle] {
        let original = spectrum(params, kappas, n_max, branch);
        let mut partners: Vec<Option<SpectrumRow>> =
            spectrum(&conjugated, &mirrored, n_max, branch.flipped()).into_iter().map(Some).collect();

        for row in original.into_iter().filter(|r| r.bound) {
            let state = row.state.expect("bound rows carry a state");
            let found = partners.iter_mut().find(|slot| {
                slot.and_then(|c| c.state)
                    .is_some_and(|cs| cs.channel.kappa_bar == -row.kappa_bar && cs.level() == state.level())
            });
            match found.and_then(Option::take) {
                Some(conjugate) => {
                    let e = state.energy;
                    let ec = conjugate.energy().expect("bound");
                    pairs.push(ConjugatePair { original: row, conjugate, relative_deviation: (e + ec).abs() / e.abs() });
                }
                None => unmatched.push(row),
            }
        }
        unmatched.extend(partners.into_iter().flatten().filter(|r| r.bound));
    }

    let max_relative_deviation = pairs.iter().map(|p| p.relative_deviation).fold(0.0, f64::max);
    ConjugationReport { conjugated, pairs, unmatched, max_relative_deviation }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution() {
        let p = ModelParams::new(1.0, 0.3, -0.7).unwrap();
        assert_eq!(charge_conjugate(&charge_conjugate(&p)), p);
        let c = charge_conjugate(&p);
        assert_eq!((c.a(), c.b()), (-0.3, 0.7));
    }

    #[test]
    fn special_state_maps_to_zero_upper_family() {
        let p = ModelParams::new(1.0, 0.0, 1.0).unwrap();
        let report = conjugation_report(&p, &[-2], 0);
        assert_eq!(report.pairs.len(), 1);
        let pair = report.pairs[0];
        let (o, c) = (pair.original.state.unwrap(), pair.conjugate.state.unwrap());
        assert_eq!((o.energy, o.n_g, o.n_f), (1.0, Some(0), None));
        assert_eq!((c.energy, c.n_g, c.n_f), (-1.0, None, Some(0)));
        assert_eq!(c.channel.kappa_bar, 2.0);
    }

    #[test]
    fn report_holds_for_fractional_a() {
        let p = ModelParams::new(1.0, 0.37, -1.4).unwrap();
        let kappas: Vec<i32> = (-6..=6).filter(|&k| k != 0).collect();
        let report = conjugation_report(&p, &kappas, 5);
        assert!(report.holds(1e-13), "{:?}", report.max_relative_deviation);
        assert!(!report.pairs.is_empty());
    }
}
