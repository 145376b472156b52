//! Command-line front end: experiment config parsing and the `simulate`,
//! `design`, `bounds` and `sweep-epsilon` commands.
//!
//! # Config file
//!
//! A single JSON document. Unknown keys are rejected and every diagnostic
//! names the offending field by its dotted path.
//!
//! ```json
//! {
//!   "game":     { "preset": "vd", "players": 3, "target": [0, 0, 0] },
//!   "designer": { "kind": "interior", "rho": 1.0, "thresholded": true },
//!   "cost":     { "eta": 1.0, "p": 1 },
//!   "run":      { "T_list": [10000, 100000], "trials": 5, "seed": 7 },
//!   "output":   { "directory": "out", "formats": ["trace", "summary", "loglog"] }
//! }
//! ```
//!
//! * `game`: either `preset` (`vd`, `tc`, `pd`, `rps`) or `custom` (a game
//!   document as printed by `design`). `target` is required for custom games.
//! * `designer`: optional for presets. When present, `kind` and (except for
//!   `none`) `rho` are required; the remaining fields (`v` = `"midpoint"`,
//!   `"target_mean"` or an explicit vector; `alpha`; `epsilon`; `thresholded`)
//!   fall back to the preset's defaults.
//! * `cost.p` is a number `>= 1` or the string `"inf"`.
//! * `run.checkpoints` is filtered to `[1, T]` for each horizon; `T` itself is
//!   always reported. `run.policy_average` is `probability` or `empirical`.
//!
//! The output directory is `--out`, else `$REDESIGN_OUT_DIR`, else
//! `output.directory`, else `./out`.
//!
//! # Output files (`simulate`)
//!
//! * `trace_T<T>_trial<k>.csv`: `t,target_hit,round_cost,cumulative_cost`,
//!   reals with 17 significant digits.
//! * `summary.json`: see [`Summary`].
//! * `loglog.csv`: `T,log10_T,log10_miss,log10_cost,log10_miss_bound,log10_cost_bound`,
//!   one row per entry of `T_list` (or per checkpoint when `T_list` has a
//!   single entry). A zero series value is written as `-inf`.
//!
//! Exit codes: `0` success, `2` invalid config or usage, `1` anything else.

use std::fmt::Write as _;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bounds::{boundary_bounds, interior_bounds, BoundInputs, BoundReport};
use crate::catalog::{preset, GameId};
use crate::cost::CostModel;
use crate::designer::{Designer, DesignerKind, DesignerSpec, InteriorVector};
use crate::error::{Error, Result};
use crate::game::{ActionProfile, GameDocument, NormalFormGame};
use crate::harness::{
    default_checkpoints, run, sublinearity_slope, trial_rng, AggregateCheckpoint, PolicyAveraging,
    SimulationConfig, SimulationResult, Stat, DESIGNER_STREAM,
};

/// Environment variable overriding `output.directory`.
pub const OUT_DIR_ENV: &str = "REDESIGN_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

pub const TRACE_HEADER: &str = "t,target_hit,round_cost,cumulative_cost";
pub const LOGLOG_HEADER: &str = "T,log10_T,log10_miss,log10_cost,log10_miss_bound,log10_cost_bound";
pub const SWEEP_HEADER: &str = "epsilon,T,mean_miss,mean_cost,log10_miss,log10_cost";
pub const DEFAULT_SWEEP: [f64; 5] = [0.1, 0.2, 0.25, 0.3, 0.4];

// ---------------------------------------------------------------------------
// config schema

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub game: GameSection,
    #[serde(default)]
    pub designer: Option<DesignerSection>,
    #[serde(default)]
    pub cost: Option<CostSection>,
    #[serde(default)]
    pub run: RunSection,
    #[serde(default)]
    pub output: OutputSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameSection {
    pub preset: Option<String>,
    pub players: Option<usize>,
    pub custom: Option<GameDocument>,
    pub target: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignerSection {
    pub kind: String,
    pub rho: Option<f64>,
    pub v: Option<VectorChoice>,
    pub alpha: Option<f64>,
    pub epsilon: Option<f64>,
    pub thresholded: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum VectorChoice {
    Named(String),
    Explicit(Vec<f64>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostSection {
    pub eta: Option<f64>,
    pub p: Option<NormOrder>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum NormOrder {
    Finite(f64),
    Named(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    #[serde(rename = "T_list", default = "default_t_list")]
    pub t_list: Vec<u64>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    pub checkpoints: Option<Vec<u64>>,
    #[serde(default)]
    pub policy_average: PolicyAveraging,
}

fn default_t_list() -> Vec<u64> {
    vec![10_000]
}

fn default_trials() -> usize {
    5
}

impl Default for RunSection {
    fn default() -> Self {
        RunSection {
            t_list: default_t_list(),
            trials: default_trials(),
            seed: 0,
            checkpoints: None,
            policy_average: PolicyAveraging::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Trace,
    Summary,
    Loglog,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub directory: Option<PathBuf>,
    pub formats: Option<Vec<OutputFormat>>,
}

/// A config with presets expanded and every value validated.
#[derive(Debug, Clone)]
pub struct Experiment {
    /// `None` for custom games.
    pub preset: Option<GameId>,
    pub game: NormalFormGame,
    pub designer: DesignerSpec,
    pub cost: CostModel,
    pub t_list: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
    pub checkpoints: Option<Vec<u64>>,
    pub averaging: PolicyAveraging,
    pub directory: Option<PathBuf>,
    pub formats: Vec<OutputFormat>,
}

fn json_error(e: serde_path_to_error::Error<serde_json::Error>) -> Error {
    let path = e.path().to_string();
    let field = if path.is_empty() || path == "." { "<root>".to_string() } else { path };
    Error::config(field, e.into_inner().to_string())
}

/// Parses and validates a config document.
pub fn parse_config(text: &str) -> Result<Experiment> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: ExperimentConfig = serde_path_to_error::deserialize(de).map_err(json_error)?;
    resolve(raw)
}

pub fn load_config(path: &Path) -> Result<Experiment> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::config("<file>", format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

fn resolve(raw: ExperimentConfig) -> Result<Experiment> {
    let (preset_id, game, default_designer) = match (&raw.game.preset, &raw.game.custom) {
        (Some(_), Some(_)) => return Err(Error::config("game", "give either `preset` or `custom`, not both")),
        (None, None) => return Err(Error::config("game", "one of `preset` or `custom` is required")),
        (Some(name), None) => {
            let id = GameId::parse(name)
                .ok_or_else(|| Error::config("game.preset", format!("unknown preset `{name}` (vd, tc, pd, rps)")))?;
            let p = preset(id, raw.game.players).map_err(|e| Error::config("game.players", e.to_string()))?;
            (Some(id), p.game, Some(p.designer))
        }
        (None, Some(doc)) => {
            if raw.game.players.is_some() {
                return Err(Error::config("game.players", "only valid with a preset"));
            }
            let g = NormalFormGame::from_document(doc.clone()).map_err(|e| Error::config("game.custom", e.to_string()))?;
            (None, g, None)
        }
    };

    let target = match &raw.game.target {
        Some(t) => {
            let t = ActionProfile::new(t.clone());
            game.validate_profile(&t).map_err(|e| Error::config("game.target", e.to_string()))?;
            Some(t)
        }
        None => None,
    };

    let designer = match (&raw.designer, default_designer) {
        (None, None) => return Err(Error::config("designer", "required for custom games")),
        (None, Some(d)) => d,
        (Some(sec), base) => designer_from_section(sec, base, &game)?,
    };
    let designer = match target {
        Some(t) => DesignerSpec { target: t, ..designer },
        None if preset_id.is_none() => return Err(Error::config("game.target", "required for custom games")),
        None => designer,
    };
    Designer::new(designer.clone(), game.clone()).map_err(|e| Error::config("designer", e.to_string()))?;

    let cost = match &raw.cost {
        None => CostModel::default(),
        Some(c) => {
            let eta = c.eta.unwrap_or(1.0);
            let p = match &c.p {
                None => 1.0,
                Some(NormOrder::Finite(p)) => *p,
                Some(NormOrder::Named(s)) if s.eq_ignore_ascii_case("inf") => f64::INFINITY,
                Some(NormOrder::Named(s)) => {
                    return Err(Error::config("cost.p", format!("expected a number or \"inf\", got \"{s}\"")))
                }
            };
            if !(eta > 0.0 && eta.is_finite()) {
                return Err(Error::config("cost.eta", format!("must be positive, got {eta}")));
            }
            CostModel::new(eta, p).map_err(|e| Error::config("cost.p", e.to_string()))?
        }
    };

    let run = raw.run;
    if run.t_list.is_empty() {
        return Err(Error::config("run.T_list", "must not be empty"));
    }
    if let Some(bad) = run.t_list.iter().find(|&&t| t < 1) {
        return Err(Error::config("run.T_list", format!("horizons must be at least 1, got {bad}")));
    }
    if run.trials < 1 {
        return Err(Error::config("run.trials", "must be at least 1"));
    }
    if let Some(cps) = &run.checkpoints {
        if cps.windows(2).any(|w| w[0] >= w[1]) || cps.first() == Some(&0) {
            return Err(Error::config("run.checkpoints", "must be positive and strictly increasing"));
        }
    }

    Ok(Experiment {
        preset: preset_id,
        game,
        designer,
        cost,
        t_list: run.t_list,
        trials: run.trials,
        seed: run.seed,
        checkpoints: run.checkpoints,
        averaging: run.policy_average,
        directory: raw.output.directory,
        formats: raw
            .output
            .formats
            .unwrap_or_else(|| vec![OutputFormat::Trace, OutputFormat::Summary, OutputFormat::Loglog]),
    })
}

fn designer_from_section(sec: &DesignerSection, base: Option<DesignerSpec>, game: &NormalFormGame) -> Result<DesignerSpec> {
    let kind = DesignerKind::parse(&sec.kind).ok_or_else(|| {
        Error::config("designer.kind", format!("unknown kind `{}` (none, interior, boundary, discrete)", sec.kind))
    })?;
    let base = base.unwrap_or_else(|| DesignerSpec::identity(ActionProfile::new(vec![0; game.num_players()])));
    let rho = match (sec.rho, kind) {
        (Some(r), _) if !(r > 0.0 && r.is_finite()) => {
            return Err(Error::config("designer.rho", format!("must be positive, got {r}")))
        }
        (Some(r), _) => r,
        (None, DesignerKind::Identity) => base.rho,
        (None, _) => return Err(Error::config("designer.rho", "missing; required for this designer kind")),
    };
    let v = match &sec.v {
        None => base.v.clone(),
        Some(VectorChoice::Named(s)) => match s.as_str() {
            "midpoint" => InteriorVector::Midpoint,
            "target_mean" => InteriorVector::TargetMean,
            other => {
                return Err(Error::config(
                    "designer.v",
                    format!("expected \"midpoint\", \"target_mean\" or a vector, got \"{other}\""),
                ))
            }
        },
        Some(VectorChoice::Explicit(v)) => {
            if v.len() != game.num_players() {
                return Err(Error::config(
                    "designer.v",
                    format!("expected {} entries, got {}", game.num_players(), v.len()),
                ));
            }
            InteriorVector::Explicit(v.clone())
        }
    };
    let alpha = sec.alpha.unwrap_or(base.alpha);
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::config("designer.alpha", format!("must lie in [0, 1), got {alpha}")));
    }
    let epsilon = sec.epsilon.unwrap_or(base.epsilon);
    if kind.is_time_varying() && !valid_epsilon(epsilon, alpha) {
        return Err(Error::config(
            "designer.epsilon",
            format!("must lie in (0, 1 - alpha] = (0, {}], got {epsilon}", 1.0 - alpha),
        ));
    }
    Ok(DesignerSpec {
        kind,
        target: base.target,
        rho,
        v,
        alpha,
        epsilon,
        thresholded: sec.thresholded.unwrap_or(base.thresholded),
    })
}

fn valid_epsilon(epsilon: f64, alpha: f64) -> bool {
    epsilon > 0.0 && epsilon <= 1.0 - alpha + 1e-12
}

impl Experiment {
    pub fn simulation(&self, horizon: u64) -> SimulationConfig {
        let checkpoints = match &self.checkpoints {
            Some(cps) => cps.iter().copied().filter(|&c| c <= horizon).collect(),
            None => default_checkpoints(horizon),
        };
        SimulationConfig::new(self.game.clone(), self.designer.clone(), horizon)
            .cost(self.cost)
            .trials(self.trials)
            .seed(self.seed)
            .checkpoints(checkpoints)
            .averaging(self.averaging)
    }

    /// Theoretical bounds at horizon `t`, or `None` for the identity designer.
    pub fn bounds_at(&self, t: f64) -> Result<Option<BoundReport>> {
        let designer = Designer::new(self.designer.clone(), self.game.clone())?;
        let inputs = BoundInputs::for_game(&self.game, designer.effective_rho(), &self.cost);
        Ok(match self.designer.kind {
            DesignerKind::Identity => None,
            DesignerKind::Interior => Some(interior_bounds(t, &inputs)?),
            DesignerKind::Boundary | DesignerKind::Discrete => {
                Some(boundary_bounds(t, &inputs, self.designer.alpha, self.designer.epsilon)?)
            }
        })
    }

    fn output_dir(&self, flag: Option<&Path>) -> PathBuf {
        if let Some(p) = flag {
            return p.to_path_buf();
        }
        if let Some(env) = std::env::var_os(OUT_DIR_ENV).filter(|v| !v.is_empty()) {
            return PathBuf::from(env);
        }
        self.directory.clone().unwrap_or_else(|| PathBuf::from("out"))
    }

    fn game_name(&self) -> String {
        self.preset.map_or_else(|| "custom".to_string(), |id| id.to_string())
    }
}

// ---------------------------------------------------------------------------
// summary document

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub game: String,
    pub designer: String,
    pub target: Vec<usize>,
    pub seed: u64,
    pub trials: usize,
    pub runs: Vec<RunSummary>,
    /// Log-log slopes over the points in `loglog.csv`; `null` with fewer than
    /// three usable points.
    pub slopes: Slopes,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSummary {
    #[serde(rename = "T")]
    pub horizon: u64,
    pub checkpoints: Vec<CheckpointSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckpointSummary {
    pub t: u64,
    pub target_fraction: Stat,
    pub misses: Stat,
    pub cumulative_cost: Stat,
    pub per_round_cost: Stat,
    pub regret: Vec<Stat>,
    pub average_policy: Vec<Vec<f64>>,
    pub bounds: Option<BoundReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Slopes {
    pub miss: Option<f64>,
    pub cost: Option<f64>,
}

fn checkpoint_summary(exp: &Experiment, c: &AggregateCheckpoint) -> Result<CheckpointSummary> {
    Ok(CheckpointSummary {
        t: c.t,
        target_fraction: c.target_fraction,
        misses: c.misses,
        cumulative_cost: c.cumulative_cost,
        per_round_cost: c.per_round_cost,
        regret: c.regret.clone(),
        average_policy: c.average_policy.clone(),
        bounds: exp.bounds_at(c.t as f64)?,
    })
}

/// Points for slopes and `loglog.csv`: the final checkpoint of every horizon,
/// or the checkpoints of the only run.
fn series_points(runs: &[RunSummary]) -> Vec<&CheckpointSummary> {
    if runs.len() == 1 {
        runs[0].checkpoints.iter().collect()
    } else {
        runs.iter().filter_map(|r| r.checkpoints.last()).collect()
    }
}

fn slope_of(points: &[&CheckpointSummary], f: impl Fn(&CheckpointSummary) -> f64) -> Option<f64> {
    let ts: Vec<f64> = points.iter().map(|c| c.t as f64).collect();
    let ys: Vec<f64> = points.iter().map(|c| f(c)).collect();
    sublinearity_slope(&ts, &ys).ok()
}

// ---------------------------------------------------------------------------
// commands

/// Runs every horizon of the experiment and writes the requested files.
/// Returns the summary (also written when `summary` is among the formats).
pub fn cmd_simulate(exp: &Experiment, out_dir: &Path) -> Result<Summary> {
    let want = |f: OutputFormat| exp.formats.contains(&f);
    let mut runs = Vec::with_capacity(exp.t_list.len());
    let mut results: Vec<SimulationResult> = Vec::with_capacity(exp.t_list.len());
    for &horizon in &exp.t_list {
        let cfg = exp.simulation(horizon).record_rounds(want(OutputFormat::Trace));
        let res = run(&cfg)?;
        runs.push(RunSummary {
            horizon,
            checkpoints: res
                .checkpoints
                .iter()
                .map(|c| checkpoint_summary(exp, c))
                .collect::<Result<_>>()?,
        });
        if want(OutputFormat::Trace) {
            results.push(res);
        }
    }
    let points = series_points(&runs);
    let summary = Summary {
        game: exp.game_name(),
        designer: exp.designer.kind.name().to_string(),
        target: exp.designer.target.to_vec(),
        seed: exp.seed,
        trials: exp.trials,
        slopes: Slopes {
            miss: slope_of(&points, |c| c.misses.mean),
            cost: slope_of(&points, |c| c.cumulative_cost.mean),
        },
        runs: runs.clone(),
    };

    fs::create_dir_all(out_dir)?;
    for res in &results {
        for trial in &res.trials {
            let path = out_dir.join(format!("trace_T{}_trial{}.csv", res.horizon, trial.trial_index));
            let mut w = BufWriter::new(fs::File::create(path)?);
            writeln!(w, "{TRACE_HEADER}")?;
            if let Some(log) = &trial.rounds {
                for r in log.records() {
                    writeln!(w, "{},{},{:.16e},{:.16e}", r.t, r.target_hit as u8, r.cost, r.cumulative_cost)?;
                }
            }
            w.flush()?;
        }
    }
    if want(OutputFormat::Summary) {
        fs::write(out_dir.join("summary.json"), serde_json::to_string_pretty(&summary)? + "\n")?;
    }
    if want(OutputFormat::Loglog) {
        let mut text = String::from(LOGLOG_HEADER);
        text.push('\n');
        for c in series_points(&summary.runs) {
            let (mb, cb) = c.bounds.map_or((f64::NAN, f64::NAN), |b| (b.miss_bound, b.cost_bound));
            let _ = writeln!(
                text,
                "{},{},{},{},{},{}",
                c.t,
                fmt_log(c.t as f64),
                fmt_log(c.misses.mean),
                fmt_log(c.cumulative_cost.mean),
                fmt_log(mb),
                fmt_log(cb)
            );
        }
        fs::write(out_dir.join("loglog.csv"), text)?;
    }
    Ok(summary)
}

fn fmt_log(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x <= 0.0 {
        "-inf".to_string()
    } else {
        format!("{:.16e}", x.log10())
    }
}

/// The round-`t` game. Discrete designs draw from the designer stream of
/// trial 0 under `seed`, so reruns with the same seed agree.
pub fn cmd_design(exp: &Experiment, t: u64, seed: u64) -> Result<NormalFormGame> {
    if t < 1 {
        return Err(Error::arg("--t must be at least 1"));
    }
    let mut designer = Designer::new(exp.designer.clone(), exp.game.clone())?;
    let mut rng = trial_rng(seed, 0, DESIGNER_STREAM);
    Ok(designer.round(t, &mut rng)?.clone())
}

/// Human-readable table with 4 decimals: one line per profile.
pub fn format_table(game: &NormalFormGame) -> String {
    let mut s = String::new();
    for idx in 0..game.num_profiles() {
        let cells: Vec<String> = game.cell(idx).iter().map(|x| format!("{x:.4}")).collect();
        let _ = writeln!(s, "{}\t({})", game.profile_at(idx), cells.join(", "));
    }
    s
}

pub fn cmd_bounds(exp: &Experiment) -> Result<Vec<BoundReport>> {
    if exp.designer.kind == DesignerKind::Identity {
        return Err(Error::config("designer.kind", "no bounds exist for the identity designer"));
    }
    exp.t_list
        .iter()
        .map(|&t| Ok(exp.bounds_at(t as f64)?.expect("non-identity designer")))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub epsilon: f64,
    #[serde(rename = "T")]
    pub horizon: u64,
    pub mean_miss: f64,
    pub mean_cost: f64,
}

/// Runs the boundary or discrete design once per valid `ε` and horizon.
/// Invalid entries are reported through `warn` and skipped.
pub fn cmd_sweep_epsilon(exp: &Experiment, eps: &[f64], mut warn: impl FnMut(String)) -> Result<Vec<SweepRow>> {
    if !exp.designer.kind.is_time_varying() {
        return Err(Error::config("designer.kind", "sweep-epsilon needs a boundary or discrete designer"));
    }
    let mut rows = Vec::new();
    for &e in eps {
        if !valid_epsilon(e, exp.designer.alpha) {
            warn(format!(
                "warning: skipping epsilon {e}: outside (0, 1 - alpha] = (0, {}]",
                1.0 - exp.designer.alpha
            ));
            continue;
        }
        let mut variant = exp.clone();
        variant.designer.epsilon = e;
        for &horizon in &exp.t_list {
            let res = run(&variant.simulation(horizon).checkpoints(Vec::new()))?;
            let c = res.final_checkpoint();
            rows.push(SweepRow {
                epsilon: e,
                horizon,
                mean_miss: c.misses.mean,
                mean_cost: c.cumulative_cost.mean,
            });
        }
    }
    Ok(rows)
}

pub fn format_sweep(rows: &[SweepRow]) -> String {
    let mut s = String::from(SWEEP_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{:.16e},{:.16e},{},{}",
            r.epsilon,
            r.horizon,
            r.mean_miss,
            r.mean_cost,
            fmt_log(r.mean_miss),
            fmt_log(r.mean_cost)
        );
    }
    s
}

// ---------------------------------------------------------------------------
// argument parsing

#[derive(Debug, Parser)]
#[command(name = "redesign", version, about = "Game redesign against no-regret learners")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Experiment config (JSON).
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides `run.seed`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory; beats `$REDESIGN_OUT_DIR` and `output.directory`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the experiment and write traces, summary and log-log series.
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print the round-t redesigned loss table as a game document.
    Design {
        #[command(flatten)]
        common: CommonArgs,
        /// Round index (1-based).
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// Print a 4-decimal table instead of the JSON document.
        #[arg(long)]
        table: bool,
    },
    /// Print the theoretical bounds for every horizon in `run.T_list`.
    Bounds {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sweep the boundary rate epsilon: misses and cost per epsilon and horizon.
    SweepEpsilon {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated epsilons.
        #[arg(long, value_delimiter = ',')]
        eps: Option<Vec<f64>>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config { .. } => EXIT_CONFIG,
        _ => EXIT_FAILURE,
    }
}

/// Entry point used by the binary. Returns the process exit code.
pub fn run_cli<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load(common: &CommonArgs) -> Result<Experiment> {
    let mut exp = load_config(&common.config)?;
    if let Some(seed) = common.seed {
        exp.seed = seed;
    }
    Ok(exp)
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Simulate { common } => {
            let exp = load(&common)?;
            let dir = exp.output_dir(common.out.as_deref());
            let summary = cmd_simulate(&exp, &dir)?;
            for r in &summary.runs {
                let c = r.checkpoints.last().expect("T is always a checkpoint");
                writeln!(
                    stdout,
                    "T={} target_fraction={:.4} per_round_cost={:.4} misses={:.1}",
                    r.horizon, c.target_fraction.mean, c.per_round_cost.mean, c.misses.mean
                )?;
            }
            writeln!(stdout, "wrote {}", dir.display())?;
        }
        Command::Design { common, t, table } => {
            let exp = load(&common)?;
            let game = cmd_design(&exp, t, exp.seed)?;
            let text = if table {
                format_table(&game)
            } else {
                serde_json::to_string_pretty(&game.to_document())? + "\n"
            };
            stdout.write_all(text.as_bytes())?;
            if let Some(dir) = &common.out {
                fs::create_dir_all(dir)?;
                fs::write(dir.join(format!("design_t{t}.json")), serde_json::to_string_pretty(&game.to_document())?)?;
            }
        }
        Command::Bounds { common } => {
            let exp = load(&common)?;
            let reports = cmd_bounds(&exp)?;
            writeln!(stdout, "{}", serde_json::to_string_pretty(&reports)?)?;
        }
        Command::SweepEpsilon { common, eps } => {
            let exp = load(&common)?;
            let eps = eps.unwrap_or_else(|| DEFAULT_SWEEP.to_vec());
            let rows = cmd_sweep_epsilon(&exp, &eps, |msg| {
                let _ = writeln!(stderr, "{msg}");
            })?;
            let text = format_sweep(&rows);
            stdout.write_all(text.as_bytes())?;
            if let Some(dir) = &common.out {
                fs::create_dir_all(dir)?;
                fs::write(dir.join("sweep_epsilon.csv"), &text)?;
            }
        }
    }
    Ok(())
}

/// `main` for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
