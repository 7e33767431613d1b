use log::warn;

use crate::types::{Component, RadialSamples};

/// Values below this fraction of the peak are treated as zero.
const NOISE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeCount {
    pub count: usize,
    /// Sign changes whose bracketing samples are both large compared with
    /// their outer neighbors, i.e. the zero is not resolved by the grid.
    pub suspect_crossings: usize,
}

/// Number of strict sign changes of `values` in the open interval spanned by
/// `r`. Exact zeros and sub-noise values (boundary zeros, underflowed tails)
/// do not count.
pub fn count_nodes(r: &[f64], values: &[f64]) -> NodeCount {
    debug_assert_eq!(r.len(), values.len());
    let peak = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if peak == 0.0 {
        return NodeCount { count: 0, suspect_crossings: 0 };
    }
    let floor = NOISE_FLOOR * peak;
    let significant: Vec<usize> = (0..values.len()).filter(|&i| values[i].abs() > floor).collect();

    let mut count = 0;
    let mut suspect_crossings = 0;
    for (k, pair) in significant.windows(2).enumerate() {
        let (i, j) = (pair[0], pair[1]);
        if values[i].signum() == values[j].signum() {
            continue;
        }
        count += 1;
        let before = if k > 0 { values[significant[k - 1]].abs() } else { 0.0 };
        let after = significant.get(k + 2).map_or(0.0, |&n| values[n].abs());
        let inner = values[i].abs().min(values[j].abs());
        if inner > 0.5 * before.max(after) {
            suspect_crossings += 1;
            warn!("unresolved node between r = {} and r = {}", r[i], r[j]);
        }
    }
    NodeCount { count, suspect_crossings }
}

pub fn count_sample_nodes(samples: &RadialSamples, component: Component) -> NodeCount {
    count_nodes(&samples.r, samples.component(component))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, max: f64) -> Vec<f64> {
        (1..=n).map(|i| max * i as f64 / n as f64).collect()
    }

    #[test]
    fn sine_nodes() {
        let r = grid(2000, 10.0);
        let v: Vec<f64> = r.iter().map(|x| x.sin()).collect();
        let c = count_nodes(&r, &v);
        assert_eq!(c, NodeCount { count: 3, suspect_crossings: 0 });
    }

    #[test]
    fn boundary_zeros_and_noise_ignored() {
        let r = grid(5, 5.0);
        assert_eq!(count_nodes(&r, &[0.0, 1.0, 2.0, 1.0, 0.0]).count, 0);
        assert_eq!(count_nodes(&r, &[1.0, 2.0, 1.0, 1e-15, -1e-14]).count, 0);
        assert_eq!(count_nodes(&r, &[0.0; 5]).count, 0);
        assert_eq!(count_nodes(&r, &[1.0, 0.0, -1.0, -2.0, -1.0]).count, 1);
    }

    #[test]
    fn undersampled_crossing_flagged() {
        let r = grid(6, 6.0);
        let c = count_nodes(&r, &[0.1, 1.0, -1.0, -0.1, -0.05, -0.01]);
        assert_eq!(c.count, 1);
        assert_eq!(c.suspect_crossings, 1);
    }
}
