//! Bandit-feedback no-regret players.
//!
//! [`Exp3P`] is EXP3.P run on gains: an observed loss `x ∈ [L, U]` becomes the
//! gain `(U - x) / (U - L) ∈ [0, 1]`. Cumulative importance-weighted gain
//! estimates are kept in the log domain (they are the log-weights up to the
//! learning rate) and shifted by their maximum every [`RENORMALIZE_EVERY`]
//! rounds so that horizons of 10^7 rounds and beyond stay finite.
//!
//! The harness knows every round's full loss row and uses [`PlayerTrace`] /
//! [`RegretTracker`] to compute best-in-hindsight regret.

use rand::{Rng, RngExt};

use crate::error::{Error, Result};

/// Log-weights are shifted by their maximum every this many updates.
pub const RENORMALIZE_EVERY: u64 = 10_000;

/// Slack allowed when checking an observed loss against `[L, U]`.
pub const LOSS_TOLERANCE: f64 = 1e-9;

/// EXP3.P hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exp3PParams {
    /// Uniform mixing weight; every action keeps probability at least `gamma / K`.
    pub gamma: f64,
    /// Optimistic bias added to every action's gain estimate.
    pub beta: f64,
    /// Learning rate on the cumulative gain estimates.
    pub eta: f64,
}

impl Exp3PParams {
    /// Known-horizon schedule matching the `5.15 √(TK ln K)` expected-regret
    /// bound: `β = √(ln K / (TK))`, `η = 0.95 β`, `γ = 1.05 √(K ln K / T)`,
    /// with `γ` and `β` clamped to `[0, 1]`.
    pub fn standard(num_actions: usize, horizon: u64) -> Self {
        let k = num_actions as f64;
        let t = horizon as f64;
        let ln_k = k.ln();
        let base = (ln_k / (t * k)).sqrt();
        Exp3PParams {
            gamma: (1.05 * (k * ln_k / t).sqrt()).clamp(0.0, 1.0),
            beta: base.clamp(0.0, 1.0),
            eta: 0.95 * base,
        }
    }
}

/// Per-player EXP3.P state.
#[derive(Debug, Clone)]
pub struct Exp3P {
    horizon: u64,
    round: u64,
    params: Exp3PParams,
    lower: f64,
    upper: f64,
    log_weights: Vec<f64>,
    probs: Vec<f64>,
}

impl Exp3P {
    /// Uniform initial weights with the [standard](Exp3PParams::standard) schedule.
    pub fn new(num_actions: usize, horizon: u64, lower: f64, upper: f64) -> Result<Self> {
        if num_actions < 2 {
            return Err(Error::arg(format!("EXP3.P needs at least 2 actions, got {num_actions}")));
        }
        Self::with_params(
            num_actions,
            horizon,
            lower,
            upper,
            Exp3PParams::standard(num_actions, horizon),
        )
    }

    pub fn with_params(
        num_actions: usize,
        horizon: u64,
        lower: f64,
        upper: f64,
        params: Exp3PParams,
    ) -> Result<Self> {
        if num_actions < 2 {
            return Err(Error::arg(format!("EXP3.P needs at least 2 actions, got {num_actions}")));
        }
        if horizon < 1 {
            return Err(Error::arg("horizon must be at least 1"));
        }
        if !(upper > lower) {
            return Err(Error::arg(format!("loss range requires U > L, got [{lower}, {upper}]")));
        }
        if !(0.0..=1.0).contains(&params.gamma) || params.beta < 0.0 || !(params.eta > 0.0) {
            return Err(Error::arg(format!("invalid EXP3.P parameters {params:?}")));
        }
        let mut state = Exp3P {
            horizon,
            round: 0,
            params,
            lower,
            upper,
            log_weights: vec![0.0; num_actions],
            probs: vec![0.0; num_actions],
        };
        state.refresh_probabilities();
        Ok(state)
    }

    /// Replaces the log-weights (e.g. to warm-start a player).
    pub fn with_log_weights(mut self, log_weights: Vec<f64>) -> Result<Self> {
        if log_weights.len() != self.num_actions() {
            return Err(Error::arg("log-weight vector has the wrong length"));
        }
        if log_weights.iter().any(|w| w.is_nan() || *w == f64::INFINITY) {
            return Err(Error::arg("log-weights must be finite or -inf"));
        }
        if log_weights.iter().all(|w| *w == f64::NEG_INFINITY) {
            return Err(Error::arg("at least one log-weight must be finite"));
        }
        self.log_weights = log_weights;
        self.refresh_probabilities();
        Ok(self)
    }

    pub fn num_actions(&self) -> usize {
        self.log_weights.len()
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// Number of completed updates.
    pub fn round(&self) -> u64 {
        self.round
    }

    pub fn params(&self) -> Exp3PParams {
        self.params
    }

    /// Current sampling distribution.
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    pub fn log_weights(&self) -> &[f64] {
        &self.log_weights
    }

    /// Draws an action from the current distribution.
    pub fn sample_action<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<usize> {
        if self.round >= self.horizon {
            return Err(Error::State(format!("horizon {} exhausted", self.horizon)));
        }
        let u: f64 = rng.random();
        let mut acc = 0.0;
        for (i, &p) in self.probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return Ok(i);
            }
        }
        // u landed in the rounding slack above the last partial sum
        Ok(self.probs.iter().rposition(|&p| p > 0.0).unwrap_or(0))
    }

    /// Feeds back the loss of the played action and advances one round.
    pub fn update(&mut self, action: usize, observed_loss: f64) -> Result<()> {
        if self.round >= self.horizon {
            return Err(Error::State(format!("horizon {} exhausted", self.horizon)));
        }
        if action >= self.num_actions() {
            return Err(Error::arg(format!("action {action} out of range")));
        }
        if !(observed_loss >= self.lower - LOSS_TOLERANCE && observed_loss <= self.upper + LOSS_TOLERANCE)
        {
            return Err(Error::arg(format!(
                "observed loss {observed_loss} outside [{}, {}]",
                self.lower, self.upper
            )));
        }
        let gain = ((self.upper - observed_loss) / (self.upper - self.lower)).clamp(0.0, 1.0);
        let Exp3PParams { beta, eta, .. } = self.params;
        for (i, (w, &p)) in self.log_weights.iter_mut().zip(&self.probs).enumerate() {
            let g = if i == action { gain } else { 0.0 };
            *w += eta * (g + beta) / p;
        }
        self.round += 1;
        if self.round.is_multiple_of(RENORMALIZE_EVERY) {
            let max = self.max_log_weight();
            self.log_weights.iter_mut().for_each(|w| *w -= max);
        }
        self.refresh_probabilities();
        Ok(())
    }

    fn max_log_weight(&self) -> f64 {
        self.log_weights.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    fn refresh_probabilities(&mut self) {
        let max = self.max_log_weight();
        let mut total = 0.0;
        for (p, &w) in self.probs.iter_mut().zip(&self.log_weights) {
            *p = (w - max).exp();
            total += *p;
        }
        let gamma = self.params.gamma;
        let floor = gamma / self.log_weights.len() as f64;
        for p in &mut self.probs {
            *p = (1.0 - gamma) * *p / total + floor;
        }
    }
}

/// One player's realized actions plus the full loss row `ℓ_i^t(·, a_{-i}^t)`
/// of every round.
#[derive(Debug, Clone, PartialEq)]
pub struct PlayerTrace {
    num_actions: usize,
    actions: Vec<usize>,
    rows: Vec<f64>,
}

impl PlayerTrace {
    pub fn new(num_actions: usize) -> Self {
        PlayerTrace {
            num_actions,
            actions: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, action: usize, row: &[f64]) -> Result<()> {
        if row.len() != self.num_actions || action >= self.num_actions {
            return Err(Error::arg("trace row does not match the action count"));
        }
        self.actions.push(action);
        self.rows.extend_from_slice(row);
        Ok(())
    }

    pub fn num_actions(&self) -> usize {
        self.num_actions
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    /// Loss row of round `t` (0-based).
    pub fn row(&self, t: usize) -> &[f64] {
        &self.rows[t * self.num_actions..(t + 1) * self.num_actions]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.rows.chunks_exact(self.num_actions)
    }
}

/// Best-in-hindsight regret of a recorded trace. An empty trace has regret 0.
pub fn regret(trace: &PlayerTrace) -> f64 {
    let mut tracker = RegretTracker::new(trace.num_actions());
    for (&a, row) in trace.actions().iter().zip(trace.rows()) {
        tracker.record(a, row);
    }
    tracker.regret()
}

/// Running form of [`regret`]: keeps cumulative per-action losses only.
#[derive(Debug, Clone, PartialEq)]
pub struct RegretTracker {
    realized: f64,
    per_action: Vec<f64>,
}

impl RegretTracker {
    pub fn new(num_actions: usize) -> Self {
        RegretTracker {
            realized: 0.0,
            per_action: vec![0.0; num_actions],
        }
    }

    #[inline]
    pub fn record(&mut self, action: usize, row: &[f64]) {
        self.realized += row[action];
        for (acc, &x) in self.per_action.iter_mut().zip(row) {
            *acc += x;
        }
    }

    /// Adds `value` to the cumulative loss of `action` only; the caller is
    /// responsible for calling this once per action per round and then
    /// [`record_played`](Self::record_played).
    #[inline]
    pub(crate) fn add(&mut self, action: usize, value: f64) {
        self.per_action[action] += value;
    }

    #[inline]
    pub(crate) fn record_played(&mut self, value: f64) {
        self.realized += value;
    }

    pub fn cumulative_losses(&self) -> &[f64] {
        &self.per_action
    }

    pub fn regret(&self) -> f64 {
        let best = self.per_action.iter().copied().fold(f64::INFINITY, f64::min);
        if best.is_finite() {
            self.realized - best
        } else {
            0.0
        }
    }
}
