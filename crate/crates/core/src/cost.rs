//! Designer cost: `η · ‖ℓ^o(a^t) − ℓ^t(a^t)‖_p`, charged on the played cell only.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostModel {
    eta: f64,
    p: f64,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel { eta: 1.0, p: 1.0 }
    }
}

impl CostModel {
    /// `p = f64::INFINITY` selects the max-norm.
    pub fn new(eta: f64, p: f64) -> Result<Self> {
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::arg(format!("Lipschitz constant must be positive, got {eta}")));
        }
        if !(p >= 1.0) {
            return Err(Error::arg(format!("norm order must be >= 1, got {p}")));
        }
        Ok(CostModel { eta, p })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// `M^(1/p)`, the norm of an all-ones vector of length `m`.
    pub fn ones_norm(&self, m: usize) -> f64 {
        (m as f64).powf(1.0 / self.p)
    }

    pub fn round_cost(&self, original: &[f64], designed: &[f64]) -> Result<f64> {
        if original.len() != designed.len() {
            return Err(Error::arg(format!(
                "loss vectors differ in length: {} vs {}",
                original.len(),
                designed.len()
            )));
        }
        Ok(self.round_cost_unchecked(original, designed))
    }

    #[inline]
    pub(crate) fn round_cost_unchecked(&self, original: &[f64], designed: &[f64]) -> f64 {
        let diffs = original.iter().zip(designed).map(|(a, b)| (a - b).abs());
        let norm = if self.p == 1.0 {
            diffs.sum()
        } else if self.p.is_infinite() {
            diffs.fold(0.0, f64::max)
        } else {
            diffs.map(|d| d.powf(self.p)).sum::<f64>().powf(1.0 / self.p)
        };
        self.eta * norm
    }
}
