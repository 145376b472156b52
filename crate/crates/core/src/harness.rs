//! End-to-end simulation of the redesign protocol.
//!
//! Each round: the designer commits `ℓ^t`, every player samples from its
//! EXP3.P policy, each player observes only its own `ℓ_i^t(a^t)`, and the
//! designer pays for the played cell. The harness also sees the full
//! counterfactual row `ℓ_i^t(·, a_{-i}^t)` of each player, which is what
//! best-in-hindsight regret needs.
//!
//! Randomness: every trial owns independent ChaCha8 streams keyed by
//! `base_seed` and numbered `(trial << 16) | k`, with `k` the player index and
//! [`DESIGNER_STREAM`] for the discrete designer. Results are therefore a
//! pure function of the configuration, and trials can run in any order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cost::CostModel;
use crate::designer::{Designer, DesignerSpec};
use crate::error::{Error, Result};
use crate::game::NormalFormGame;
use crate::learner::{Exp3P, PlayerTrace, RegretTracker};

/// Stream index reserved for the designer's own randomness.
pub const DESIGNER_STREAM: u64 = 0xFFFF;

/// Default snapshot grid before intersecting with `[1, T]`.
pub const DEFAULT_CHECKPOINTS: [u64; 4] = [10_000, 100_000, 1_000_000, 10_000_000];

/// How the averaged policy `π̄_i^T` is accumulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyAveraging {
    /// Mean of the sampling distributions `π_i^t`.
    #[default]
    Probability,
    /// Empirical action frequencies.
    Empirical,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub game: NormalFormGame,
    pub designer: DesignerSpec,
    pub cost: CostModel,
    pub horizon: u64,
    pub num_trials: usize,
    pub base_seed: u64,
    /// Strictly increasing rounds in `[1, T]`. `T` itself is always snapshotted.
    pub checkpoints: Vec<u64>,
    pub averaging: PolicyAveraging,
    /// Keep the per-round profile and cost of every round.
    pub record_rounds: bool,
    /// Keep every player's counterfactual loss rows (memory grows as `T·ΣA_i`).
    pub record_player_traces: bool,
}

impl SimulationConfig {
    pub fn new(game: NormalFormGame, designer: DesignerSpec, horizon: u64) -> Self {
        SimulationConfig {
            game,
            designer,
            cost: CostModel::default(),
            horizon,
            num_trials: 5,
            base_seed: 0,
            checkpoints: default_checkpoints(horizon),
            averaging: PolicyAveraging::default(),
            record_rounds: false,
            record_player_traces: false,
        }
    }

    pub fn trials(mut self, n: usize) -> Self {
        self.num_trials = n;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.base_seed = seed;
        self
    }

    pub fn cost(mut self, cost: CostModel) -> Self {
        self.cost = cost;
        self
    }

    pub fn checkpoints(mut self, checkpoints: Vec<u64>) -> Self {
        self.checkpoints = checkpoints;
        self
    }

    pub fn averaging(mut self, averaging: PolicyAveraging) -> Self {
        self.averaging = averaging;
        self
    }

    pub fn record_rounds(mut self, on: bool) -> Self {
        self.record_rounds = on;
        self
    }

    pub fn record_player_traces(mut self, on: bool) -> Self {
        self.record_player_traces = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.horizon < 1 {
            return Err(Error::arg("horizon T must be at least 1"));
        }
        if self.num_trials < 1 {
            return Err(Error::arg("at least one trial is required"));
        }
        if self.game.num_players() > DESIGNER_STREAM as usize {
            return Err(Error::arg("too many players for the stream layout"));
        }
        for w in self.checkpoints.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::arg(format!("checkpoints must be strictly increasing: {:?}", self.checkpoints)));
            }
        }
        if let Some(&bad) = self.checkpoints.iter().find(|&&c| c < 1 || c > self.horizon) {
            return Err(Error::arg(format!("checkpoint {bad} outside [1, {}]", self.horizon)));
        }
        Ok(())
    }

    /// Checkpoints actually snapshotted: the configured ones plus `T`.
    pub fn effective_checkpoints(&self) -> Vec<u64> {
        let mut out = self.checkpoints.clone();
        if out.last() != Some(&self.horizon) {
            out.push(self.horizon);
        }
        out
    }
}

/// `{10^4, 10^5, 10^6, 10^7} ∩ [1, T]`.
pub fn default_checkpoints(horizon: u64) -> Vec<u64> {
    DEFAULT_CHECKPOINTS.iter().copied().filter(|&c| c <= horizon).collect()
}

/// Independent random stream `k` of trial `trial`.
pub fn trial_rng(base_seed: u64, trial: usize, k: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(base_seed);
    rng.set_stream(((trial as u64) << 16) | (k & 0xFFFF));
    rng
}

/// Snapshot of one trial after `t` rounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub t: u64,
    /// `N^t(a†)`.
    pub target_hits: u64,
    /// `t − N^t(a†)`.
    pub misses: u64,
    /// `C^t`.
    pub cumulative_cost: f64,
    /// `R_i^t` per player.
    pub regret: Vec<f64>,
    /// `π̄_i^t` per player.
    pub average_policy: Vec<Vec<f64>>,
    /// `N^t(a)` for every profile, in mixed-radix order.
    pub profile_counts: Vec<u64>,
}

impl Checkpoint {
    pub fn target_fraction(&self) -> f64 {
        self.target_hits as f64 / self.t as f64
    }

    pub fn per_round_cost(&self) -> f64 {
        self.cumulative_cost / self.t as f64
    }
}

/// Compact per-round log: played profile index and round cost.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RoundLog {
    target_index: usize,
    profiles: Vec<u32>,
    costs: Vec<f64>,
}

/// One row of a per-round trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundRecord {
    pub t: u64,
    pub profile: usize,
    pub target_hit: bool,
    pub cost: f64,
    pub cumulative_cost: f64,
}

impl RoundLog {
    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    /// Rebuilds the rows, re-accumulating the cost in round order (the same
    /// summation order as the simulation, so totals agree bit for bit).
    pub fn records(&self) -> impl Iterator<Item = RoundRecord> + '_ {
        let mut total = 0.0;
        self.profiles.iter().zip(&self.costs).enumerate().map(move |(k, (&p, &c))| {
            total += c;
            RoundRecord {
                t: k as u64 + 1,
                profile: p as usize,
                target_hit: p as usize == self.target_index,
                cost: c,
                cumulative_cost: total,
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialResult {
    pub trial_index: usize,
    pub checkpoints: Vec<Checkpoint>,
    pub rounds: Option<RoundLog>,
    pub player_traces: Option<Vec<PlayerTrace>>,
}

impl TrialResult {
    pub fn final_checkpoint(&self) -> &Checkpoint {
        self.checkpoints.last().expect("every trial snapshots T")
    }

    pub fn at(&self, t: u64) -> Option<&Checkpoint> {
        self.checkpoints.iter().find(|c| c.t == t)
    }
}

/// Runs one trial of the protocol.
pub fn run_trial(config: &SimulationConfig, trial_index: usize) -> Result<TrialResult> {
    config.validate()?;
    let game = &config.game;
    let m = game.num_players();
    let horizon = config.horizon;
    let mut designer = Designer::new(config.designer.clone(), game.clone())?;
    let target_index = game.profile_index(&config.designer.target)?;

    let mut learners = game
        .action_counts()
        .iter()
        .map(|&k| Exp3P::new(k, horizon, game.lower(), game.upper()))
        .collect::<Result<Vec<_>>>()?;
    let mut player_rngs: Vec<ChaCha8Rng> = (0..m).map(|i| trial_rng(config.base_seed, trial_index, i as u64)).collect();
    let mut designer_rng = trial_rng(config.base_seed, trial_index, DESIGNER_STREAM);

    let strides: Vec<usize> = (0..m).map(|i| game.stride(i)).collect();
    let mut trackers: Vec<RegretTracker> = game.action_counts().iter().map(|&k| RegretTracker::new(k)).collect();
    let mut policy_sums: Vec<Vec<f64>> = game.action_counts().iter().map(|&k| vec![0.0; k]).collect();
    let mut traces = config
        .record_player_traces
        .then(|| game.action_counts().iter().map(|&k| PlayerTrace::new(k)).collect::<Vec<_>>());
    let mut log = config.record_rounds.then(|| RoundLog {
        target_index,
        profiles: Vec::with_capacity(horizon as usize),
        costs: Vec::with_capacity(horizon as usize),
    });

    let checkpoints = config.effective_checkpoints();
    let mut next_checkpoint = checkpoints.iter().copied().peekable();
    let mut snapshots = Vec::with_capacity(checkpoints.len());
    let mut profile_counts = vec![0u64; game.num_profiles()];
    let mut actions = vec![0usize; m];
    let mut row_buf: Vec<f64> = Vec::new();
    let mut target_hits = 0u64;
    let mut cumulative_cost = 0.0;

    for t in 1..=horizon {
        let played_game = designer.round(t, &mut designer_rng)?;

        for (i, learner) in learners.iter().enumerate() {
            if config.averaging == PolicyAveraging::Probability {
                for (acc, &p) in policy_sums[i].iter_mut().zip(learner.probabilities()) {
                    *acc += p;
                }
            }
            actions[i] = learner.sample_action(&mut player_rngs[i])?;
        }

        let idx = game.index_of(&actions);
        let losses = played_game.cell(idx);
        for (i, learner) in learners.iter_mut().enumerate() {
            learner.update(actions[i], losses[i])?;
        }

        for i in 0..m {
            let base = idx - actions[i] * strides[i];
            let count = game.action_counts()[i];
            let tracker = &mut trackers[i];
            if let Some(traces) = traces.as_mut() {
                row_buf.clear();
                row_buf.extend((0..count).map(|b| played_game.cell(base + b * strides[i])[i]));
                traces[i].push(actions[i], &row_buf)?;
            }
            for b in 0..count {
                tracker.add(b, played_game.cell(base + b * strides[i])[i]);
            }
            tracker.record_played(losses[i]);
            if config.averaging == PolicyAveraging::Empirical {
                policy_sums[i][actions[i]] += 1.0;
            }
        }

        let cost = config.cost.round_cost_unchecked(game.cell(idx), losses);
        cumulative_cost += cost;
        profile_counts[idx] += 1;
        if idx == target_index {
            target_hits += 1;
        }
        if let Some(log) = log.as_mut() {
            log.profiles.push(idx as u32);
            log.costs.push(cost);
        }

        if next_checkpoint.peek() == Some(&t) {
            next_checkpoint.next();
            let tf = t as f64;
            snapshots.push(Checkpoint {
                t,
                target_hits,
                misses: t - target_hits,
                cumulative_cost,
                regret: trackers.iter().map(RegretTracker::regret).collect(),
                average_policy: policy_sums
                    .iter()
                    .map(|s| s.iter().map(|x| x / tf).collect())
                    .collect(),
                profile_counts: profile_counts.clone(),
            });
        }
    }

    Ok(TrialResult {
        trial_index,
        checkpoints: snapshots,
        rounds: log,
        player_traces: traces,
    })
}

/// Mean and sample standard deviation (zero for a single trial).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stat {
    pub mean: f64,
    pub std: f64,
}

impl Stat {
    pub fn of<I: IntoIterator<Item = f64>>(values: I) -> Stat {
        let values: Vec<f64> = values.into_iter().collect();
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let std = if values.len() > 1 {
            (values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        Stat { mean, std }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateCheckpoint {
    pub t: u64,
    pub target_hits: Stat,
    pub misses: Stat,
    pub target_fraction: Stat,
    pub cumulative_cost: Stat,
    pub per_round_cost: Stat,
    pub regret: Vec<Stat>,
    /// Across-trial mean of `π̄_i^t`.
    pub average_policy: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub horizon: u64,
    pub trials: Vec<TrialResult>,
    pub checkpoints: Vec<AggregateCheckpoint>,
}

impl SimulationResult {
    pub fn final_checkpoint(&self) -> &AggregateCheckpoint {
        self.checkpoints.last().expect("every run snapshots T")
    }

    pub fn at(&self, t: u64) -> Option<&AggregateCheckpoint> {
        self.checkpoints.iter().find(|c| c.t == t)
    }
}

fn aggregate(trials: &[TrialResult], k: usize) -> AggregateCheckpoint {
    let snaps: Vec<&Checkpoint> = trials.iter().map(|tr| &tr.checkpoints[k]).collect();
    let first = snaps[0];
    let players = first.regret.len();
    let n = snaps.len() as f64;
    AggregateCheckpoint {
        t: first.t,
        target_hits: Stat::of(snaps.iter().map(|s| s.target_hits as f64)),
        misses: Stat::of(snaps.iter().map(|s| s.misses as f64)),
        target_fraction: Stat::of(snaps.iter().map(|s| s.target_fraction())),
        cumulative_cost: Stat::of(snaps.iter().map(|s| s.cumulative_cost)),
        per_round_cost: Stat::of(snaps.iter().map(|s| s.per_round_cost())),
        regret: (0..players).map(|i| Stat::of(snaps.iter().map(|s| s.regret[i]))).collect(),
        average_policy: first
            .average_policy
            .iter()
            .enumerate()
            .map(|(i, row)| {
                (0..row.len())
                    .map(|a| snaps.iter().map(|s| s.average_policy[i][a]).sum::<f64>() / n)
                    .collect()
            })
            .collect(),
    }
}

/// Runs `num_trials` independent trials (in parallel) and aggregates them
/// per checkpoint. The reduction is in trial-index order.
pub fn run(config: &SimulationConfig) -> Result<SimulationResult> {
    config.validate()?;
    // surface designer precondition failures once, before any trial starts
    Designer::new(config.designer.clone(), config.game.clone())?;
    let trials = (0..config.num_trials)
        .into_par_iter()
        .map(|k| run_trial(config, k))
        .collect::<Result<Vec<_>>>()?;
    let checkpoints = (0..trials[0].checkpoints.len()).map(|k| aggregate(&trials, k)).collect();
    Ok(SimulationResult {
        horizon: config.horizon,
        trials,
        checkpoints,
    })
}

/// Least-squares slope of `log10(series)` against `log10(ts)`. Points with a
/// nonpositive coordinate are dropped.
pub fn sublinearity_slope(ts: &[f64], series: &[f64]) -> Result<f64> {
    if ts.len() != series.len() {
        return Err(Error::arg("grid and series lengths differ"));
    }
    if ts.len() < 3 {
        return Err(Error::arg(format!("need at least 3 grid points, got {}", ts.len())));
    }
    let pts: Vec<(f64, f64)> = ts
        .iter()
        .zip(series)
        .filter(|(t, y)| **t > 0.0 && **y > 0.0)
        .map(|(t, y)| (t.log10(), y.log10()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::arg("fewer than 2 positive points remain"));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::arg("grid points are not distinct"));
    }
    Ok(sxy / sxx)
}
