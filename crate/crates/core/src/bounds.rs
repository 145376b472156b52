//! Closed-form upper bounds on `T − E[N^T(a†)]` and `E[C^T]` when every
//! player runs EXP3.P, for the interior and boundary designs.
//!
//! All logarithms are natural. Horizons are `f64` so that the asymptotic
//! behaviour can be probed far beyond simulable `T`.

use serde::{Deserialize, Serialize};

use crate::cost::CostModel;
use crate::error::{Error, Result};
use crate::game::NormalFormGame;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub t: f64,
    /// Upper bound on `T − E[N^T(a†)]`.
    pub miss_bound: f64,
    /// Upper bound on `E[C^T]`.
    pub cost_bound: f64,
}

/// Expected-regret bound of EXP3.P with `K` actions over `T` rounds, for
/// losses spanning `range = U − L`:
/// `range · (5.15 √(T K ln K) + √(T K / ln K))`.
pub fn exp3p_regret_bound(t: f64, num_actions: usize, range: f64) -> Result<f64> {
    if num_actions < 2 {
        return Err(Error::arg(format!(
            "regret bound needs at least 2 actions (ln K appears in a denominator), got {num_actions}"
        )));
    }
    if !(t >= 1.0) {
        return Err(Error::arg(format!("horizon must be at least 1, got {t}")));
    }
    if !(range >= 0.0) {
        return Err(Error::arg(format!("loss range must be nonnegative, got {range}")));
    }
    let k = num_actions as f64;
    let ln_k = k.ln();
    Ok(range * (5.15 * (t * k * ln_k).sqrt() + (t * k / ln_k).sqrt()))
}

/// Game and cost parameters shared by both bound families.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundInputs {
    pub action_counts: Vec<usize>,
    pub rho: f64,
    /// `U − L`.
    pub range: f64,
    pub eta: f64,
    pub p: f64,
}

impl BoundInputs {
    pub fn for_game(game: &NormalFormGame, rho: f64, cost: &CostModel) -> Self {
        BoundInputs {
            action_counts: game.action_counts().to_vec(),
            rho,
            range: game.range(),
            eta: cost.eta(),
            p: cost.p(),
        }
    }

    fn players(&self) -> Result<f64> {
        let m = self.action_counts.len();
        if m < 2 {
            return Err(Error::arg(format!("bounds need at least 2 players (M − 1 divides), got {m}")));
        }
        if !(self.rho > 0.0) {
            return Err(Error::arg(format!("rho must be positive, got {}", self.rho)));
        }
        Ok(m as f64)
    }

    /// `η (U − L) M^(1/p)`: the largest possible single-round cost.
    fn max_round_cost(&self, m: f64) -> f64 {
        self.eta * self.range * m.powf(1.0 / self.p)
    }

    /// `M / ((M − 1) ρ) · Σ_i regret_bound_i(T)`.
    fn interior_miss(&self, t: f64, m: f64) -> Result<f64> {
        let mut total = 0.0;
        for &a in &self.action_counts {
            total += exp3p_regret_bound(t, a, self.range)?;
        }
        Ok(m / ((m - 1.0) * self.rho) * total)
    }
}

pub fn interior_bounds(t: f64, inputs: &BoundInputs) -> Result<BoundReport> {
    let m = inputs.players()?;
    let miss_bound = inputs.interior_miss(t, m)?;
    Ok(BoundReport {
        t,
        miss_bound,
        cost_bound: inputs.max_round_cost(m) * miss_bound,
    })
}

pub fn boundary_bounds(t: f64, inputs: &BoundInputs, alpha: f64, epsilon: f64) -> Result<BoundReport> {
    let m = inputs.players()?;
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::arg(format!("alpha must lie in [0, 1), got {alpha}")));
    }
    if !(epsilon > 0.0 && epsilon <= 1.0 - alpha + 1e-12) {
        return Err(Error::arg(format!("epsilon must lie in (0, 1 - alpha], got {epsilon}")));
    }
    let rate = alpha + epsilon;
    let miss_bound = (inputs.interior_miss(t, m)? + m / rate) * t.powf(1.0 - rate);
    let c = inputs.max_round_cost(m);
    Ok(BoundReport {
        t,
        miss_bound,
        cost_bound: c * miss_bound + c / rate * t.powf(rate),
    })
}
