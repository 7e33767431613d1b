use crate::error::{Error, Result};

use super::gamma::ln_gamma_positive;
use super::laguerre::LaguerreSpec;

pub const DEFAULT_GAUSS_LAGUERRE_NODES: usize = 128;

/// Generalized Gauss–Laguerre rule for `∫₀^∞ x^α e^(−x) h(x) dx`.
///
/// Nodes are the eigenvalues of the Jacobi matrix of the Laguerre recurrence,
/// located by Sturm-sequence bisection and polished with Newton steps on
/// `L_n^(α)`.
#[derive(Debug, Clone)]
pub struct GaussLaguerre {
    alpha: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLaguerre {
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("Gauss–Laguerre rule needs at least one node".into()));
        }
        let degree = u32::try_from(n).map_err(|_| Error::InvalidConfig(format!("{n} nodes")))?;
        let spec = LaguerreSpec::new(degree, alpha)?;

        let diag: Vec<f64> = (0..n).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
        // off[i] couples rows i-1 and i; off[0] is unused.
        let off_sq: Vec<f64> = (0..n).map(|i| i as f64 * (i as f64 + alpha)).collect();
        let upper = (0..n)
            .map(|i| {
                let left = off_sq[i].sqrt();
                let right = if i + 1 < n { off_sq[i + 1].sqrt() } else { 0.0 };
                diag[i] + left + right
            })
            .fold(0.0_f64, f64::max);

        let mut nodes = Vec::with_capacity(n);
        for k in 0..n {
            // k-th eigenvalue: smallest λ with more than k eigenvalues below it.
            let (mut lo, mut hi) = (0.0, upper);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if sturm_count(&diag, &off_sq, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let mut x = 0.5 * (lo + hi);
            for _ in 0..3 {
                let (ln, lnm1) = spec.eval_with_previous(x);
                let deriv = (n as f64 * ln - (n as f64 + alpha) * lnm1) / x;
                if deriv == 0.0 {
                    break;
                }
                let step = ln / deriv;
                if !step.is_finite() || step.abs() > 0.5 * (hi - lo).max(1e-12 * x) {
                    break;
                }
                x -= step;
            }
            nodes.push(x);
        }

        let next = LaguerreSpec::new(degree + 1, alpha)?;
        let ln_prefactor = ln_gamma_positive(n as f64 + alpha + 1.0) - ln_gamma_positive(n as f64 + 1.0);
        let np1_sq = ((n + 1) as f64).powi(2);
        let weights = nodes
            .iter()
            .map(|&x| {
                let p = next.eval(x);
                (ln_prefactor + x.ln() - np1_sq.ln() - 2.0 * p.abs().ln()).exp()
            })
            .collect();

        Ok(Self { alpha, nodes, weights })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `Σ w_i h(x_i) ≈ ∫₀^∞ x^α e^(−x) h(x) dx`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, h: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * h(x)).sum()
    }
}

fn sturm_count(diag: &[f64], off_sq: &[f64], lambda: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diag.iter().enumerate() {
        q = if i == 0 { d - lambda } else { d - lambda - off_sq[i] / q };
        if q == 0.0 {
            q = -f64::EPSILON * (d.abs() + lambda.abs());
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Panels refined independently, so a peak missed by the coarsest samples
/// cannot end the recursion early.
const SIMPSON_PANELS: usize = 64;

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_depth: u32) -> f64 {
    let width = (b - a) / SIMPSON_PANELS as f64;
    let panel_tol = tol / SIMPSON_PANELS as f64;
    (0..SIMPSON_PANELS)
        .map(|i| {
            let lo = a + width * i as f64;
            let hi = if i + 1 == SIMPSON_PANELS { b } else { lo + width };
            let (flo, fhi) = (f(lo), f(hi));
            let m = 0.5 * (lo + hi);
            let fm = f(m);
            let whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
            simpson_step(&f, lo, hi, flo, fm, fhi, whole, panel_tol, max_depth)
        })
        .sum()
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}
