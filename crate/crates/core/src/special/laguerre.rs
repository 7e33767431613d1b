use crate::error::{Error, Result};

use super::gamma::ln_gamma_positive;

/// Generalized Laguerre polynomial `L_n^(α)` with `α > -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreSpec {
    degree: u32,
    alpha: f64,
}

impl LaguerreSpec {
    pub fn new(degree: u32, alpha: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::InvalidLaguerreOrder(alpha));
        }
        Ok(Self { degree, alpha })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Value at `x` by the three-term recurrence in the degree.
    pub fn eval(&self, x: f64) -> f64 {
        recurrence(self.degree, self.alpha, x).0
    }

    /// `(L_n(x), L_{n-1}(x))`; the second entry is 0 for `n = 0`.
    pub fn eval_with_previous(&self, x: f64) -> (f64, f64) {
        recurrence(self.degree, self.alpha, x)
    }

    /// `d/dx L_n^(α) = -L_{n-1}^(α+1)`.
    pub fn derivative(&self, x: f64) -> f64 {
        match self.degree {
            0 => 0.0,
            n => -recurrence(n - 1, self.alpha + 1.0, x).0,
        }
    }

    /// `d²/dx² L_n^(α) = L_{n-2}^(α+2)`.
    pub fn second_derivative(&self, x: f64) -> f64 {
        match self.degree {
            0 | 1 => 0.0,
            n => recurrence(n - 2, self.alpha + 2.0, x).0,
        }
    }
}

fn recurrence(n: u32, alpha: f64, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut prev = 1.0;
    let mut curr = 1.0 + alpha - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    (curr, prev)
}

fn check_domain(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(x))
    }
}

pub fn laguerre(spec: &LaguerreSpec, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(spec.eval(x))
}

pub fn laguerre_derivative(spec: &LaguerreSpec, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(spec.derivative(x))
}

pub fn laguerre_second_derivative(spec: &LaguerreSpec, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(spec.second_derivative(x))
}

/// `∫₀^∞ x^(α+1) e^(−x) [L_n^(α)(x)]² dx = (2n + α + 1) Γ(n + α + 1) / n!`.
///
/// This is the integral met when normalizing a radial function of the form
/// `x^((α+1)/2) e^(−x/2) L_n^(α)(x)`.
pub fn laguerre_weighted_norm(n: u32, alpha: f64) -> Result<f64> {
    LaguerreSpec::new(n, alpha)?;
    let n = f64::from(n);
    let ln_ratio = ln_gamma_positive(n + alpha + 1.0) - ln_gamma_positive(n + 1.0);
    Ok((2.0 * n + alpha + 1.0) * ln_ratio.exp())
}
