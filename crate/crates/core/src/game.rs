//! Finite normal-form games with vector-valued losses.
//!
//! Losses are stored densely: one row of `M` values per joint action profile,
//! rows ordered by the mixed-radix index of the profile with the last player's
//! action varying fastest. For a two-player game the row-major layout therefore
//! matches the usual payoff-matrix reading order (rows = player 0).

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for zero-sum and range comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// One action index per player, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ActionProfile(Vec<usize>);

impl ActionProfile {
    pub fn new(actions: Vec<usize>) -> Self {
        ActionProfile(actions)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for ActionProfile {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for ActionProfile {
    fn from(v: Vec<usize>) -> Self {
        ActionProfile(v)
    }
}

impl<const N: usize> From<[usize; N]> for ActionProfile {
    fn from(v: [usize; N]) -> Self {
        ActionProfile(v.to_vec())
    }
}

impl fmt::Display for ActionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Per-player losses for a single profile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LossVector(Vec<f64>);

impl LossVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::arg(format!("loss vector contains non-finite value {bad}")));
        }
        Ok(LossVector(values))
    }

    pub fn constant(len: usize, value: f64) -> Self {
        LossVector(vec![value; len])
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for LossVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

/// Number of coordinates where `a` agrees with `target`.
pub fn match_count(a: &[usize], target: &[usize]) -> Result<usize> {
    if a.len() != target.len() {
        return Err(Error::arg(format!(
            "profile length mismatch: {} vs {}",
            a.len(),
            target.len()
        )));
    }
    Ok(a.iter().zip(target).filter(|(x, y)| x == y).count())
}

/// A finite game `ℓ : A_1 × … × A_M → R^M` with losses bounded in `[L, U]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalFormGame {
    action_counts: Vec<usize>,
    strides: Vec<usize>,
    losses: Vec<f64>,
    lower: f64,
    upper: f64,
    natural_values: Option<Vec<f64>>,
}

impl NormalFormGame {
    /// Builds a game from a flat loss buffer (`num_profiles * M` values).
    pub fn new(action_counts: Vec<usize>, losses: Vec<f64>, lower: f64, upper: f64) -> Result<Self> {
        let strides = Self::validate_shape(&action_counts, lower, upper)?;
        let m = action_counts.len();
        let profiles: usize = action_counts.iter().product();
        if losses.len() != profiles * m {
            return Err(Error::arg(format!(
                "expected {} loss values ({} profiles x {} players), got {}",
                profiles * m,
                profiles,
                m,
                losses.len()
            )));
        }
        let game = NormalFormGame {
            action_counts,
            strides,
            losses,
            lower,
            upper,
            natural_values: None,
        };
        game.check_range()?;
        Ok(game)
    }

    /// Builds a game by evaluating `f(profile, out)` for every joint profile.
    pub fn from_fn<F>(action_counts: Vec<usize>, lower: f64, upper: f64, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize], &mut [f64]),
    {
        let strides = Self::validate_shape(&action_counts, lower, upper)?;
        let m = action_counts.len();
        let profiles: usize = action_counts.iter().product();
        let mut losses = vec![0.0; profiles * m];
        let mut profile = vec![0usize; m];
        for (idx, row) in losses.chunks_exact_mut(m).enumerate() {
            decode_into(idx, &action_counts, &strides, &mut profile);
            f(&profile, row);
        }
        let game = NormalFormGame {
            action_counts,
            strides,
            losses,
            lower,
            upper,
            natural_values: None,
        };
        game.check_range()?;
        Ok(game)
    }

    /// Attaches the natural loss set. Its extremes must equal `L` and `U`.
    pub fn with_natural_values(mut self, values: Vec<f64>) -> Result<Self> {
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if values.is_empty() || min != self.lower || max != self.upper {
            return Err(Error::arg(format!(
                "natural values must have min = L ({}) and max = U ({})",
                self.lower, self.upper
            )));
        }
        self.natural_values = Some(values);
        Ok(self)
    }

    fn validate_shape(action_counts: &[usize], lower: f64, upper: f64) -> Result<Vec<usize>> {
        if action_counts.is_empty() {
            return Err(Error::arg("a game needs at least one player"));
        }
        if action_counts.contains(&0) {
            return Err(Error::arg("every player needs at least one action"));
        }
        if !(lower.is_finite() && upper.is_finite() && upper > lower) {
            return Err(Error::arg(format!("loss range requires U > L, got [{lower}, {upper}]")));
        }
        let mut strides = vec![1usize; action_counts.len()];
        for i in (0..action_counts.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1]
                .checked_mul(action_counts[i + 1])
                .ok_or_else(|| Error::arg("joint action space too large"))?;
        }
        strides[0]
            .checked_mul(action_counts[0])
            .ok_or_else(|| Error::arg("joint action space too large"))?;
        Ok(strides)
    }

    fn check_range(&self) -> Result<()> {
        let (lo, hi) = (self.lower - DEFAULT_TOLERANCE, self.upper + DEFAULT_TOLERANCE);
        for (idx, row) in self.losses.chunks_exact(self.num_players()).enumerate() {
            for (i, &v) in row.iter().enumerate() {
                if !v.is_finite() || v < lo || v > hi {
                    return Err(Error::arg(format!(
                        "loss {v} for player {i} at profile {} lies outside [{}, {}]",
                        self.profile_at(idx),
                        self.lower,
                        self.upper
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn num_players(&self) -> usize {
        self.action_counts.len()
    }

    pub fn action_counts(&self) -> &[usize] {
        &self.action_counts
    }

    pub fn num_profiles(&self) -> usize {
        self.losses.len() / self.num_players()
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    /// `U - L`.
    pub fn range(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn natural_values(&self) -> Option<&[f64]> {
        self.natural_values.as_deref()
    }

    /// Offset between profiles that differ only in `player`'s action by one.
    pub fn stride(&self, player: usize) -> usize {
        self.strides[player]
    }

    /// Loss row of the profile with mixed-radix index `index`.
    #[inline]
    pub fn cell(&self, index: usize) -> &[f64] {
        let m = self.num_players();
        &self.losses[index * m..(index + 1) * m]
    }

    pub(crate) fn losses_mut(&mut self) -> &mut [f64] {
        &mut self.losses
    }

    /// The flat loss buffer, `num_profiles * M` values.
    pub fn losses(&self) -> &[f64] {
        &self.losses
    }

    /// Mixed-radix index of a profile given as a raw slice. Panics in debug
    /// builds on out-of-range input; use [`profile_index`](Self::profile_index)
    /// for checked access.
    #[inline]
    pub fn index_of(&self, actions: &[usize]) -> usize {
        debug_assert_eq!(actions.len(), self.num_players());
        actions.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }

    pub fn profile_index(&self, a: &ActionProfile) -> Result<usize> {
        self.validate_profile(a)?;
        Ok(self.index_of(a))
    }

    pub fn validate_profile(&self, a: &[usize]) -> Result<()> {
        if a.len() != self.num_players() {
            return Err(Error::arg(format!(
                "profile has {} actions but the game has {} players",
                a.len(),
                self.num_players()
            )));
        }
        for (i, (&ai, &count)) in a.iter().zip(&self.action_counts).enumerate() {
            if ai >= count {
                return Err(Error::arg(format!(
                    "action {ai} for player {i} out of range (player has {count} actions)"
                )));
            }
        }
        Ok(())
    }

    pub fn profile_at(&self, index: usize) -> ActionProfile {
        let mut out = vec![0; self.num_players()];
        decode_into(index, &self.action_counts, &self.strides, &mut out);
        ActionProfile(out)
    }

    pub fn loss_at(&self, a: &ActionProfile) -> Result<LossVector> {
        let idx = self.profile_index(a)?;
        Ok(LossVector(self.cell(idx).to_vec()))
    }

    /// True iff every cell's losses sum to zero within `tol`.
    pub fn is_zero_sum(&self, tol: f64) -> bool {
        let tol = tol.max(0.0);
        self.losses
            .chunks_exact(self.num_players())
            .all(|row| row.iter().sum::<f64>().abs() <= tol)
    }

    /// Minimum margin by which `target_action` beats every other action of
    /// `player`, over all opponent configurations. Positive means strict
    /// dominance. Returns `+inf` when the player has a single action.
    pub fn dominance_gap(&self, player: usize, target_action: usize) -> Result<f64> {
        if player >= self.num_players() {
            return Err(Error::arg(format!("player {player} out of range")));
        }
        let count = self.action_counts[player];
        if target_action >= count {
            return Err(Error::arg(format!(
                "action {target_action} out of range for player {player}"
            )));
        }
        let stride = self.strides[player];
        let mut gap = f64::INFINITY;
        for idx in 0..self.num_profiles() {
            if (idx / stride) % count != target_action {
                continue;
            }
            let base = self.cell(idx)[player];
            let first = idx - target_action * stride;
            for alt in (0..count).filter(|&b| b != target_action) {
                let other = self.cell(first + alt * stride)[player];
                gap = gap.min(other - base);
            }
        }
        Ok(gap)
    }

    pub fn same_shape(&self, other: &NormalFormGame) -> bool {
        self.action_counts == other.action_counts
    }

    pub fn to_document(&self) -> GameDocument {
        GameDocument {
            players: self.num_players(),
            action_counts: self.action_counts.clone(),
            loss_table: self
                .losses
                .chunks_exact(self.num_players())
                .map(<[f64]>::to_vec)
                .collect(),
            lower: self.lower,
            upper: self.upper,
            natural_values: self.natural_values.clone(),
        }
    }

    pub fn from_document(doc: GameDocument) -> Result<Self> {
        if doc.players != doc.action_counts.len() {
            return Err(Error::arg(format!(
                "players = {} but action_counts has {} entries",
                doc.players,
                doc.action_counts.len()
            )));
        }
        if let Some(bad) = doc.loss_table.iter().position(|row| row.len() != doc.players) {
            return Err(Error::arg(format!(
                "loss_table row {bad} has {} entries, expected {}",
                doc.loss_table[bad].len(),
                doc.players
            )));
        }
        let losses = doc.loss_table.into_iter().flatten().collect();
        let game = NormalFormGame::new(doc.action_counts, losses, doc.lower, doc.upper)?;
        match doc.natural_values {
            Some(values) => game.with_natural_values(values),
            None => Ok(game),
        }
    }
}

fn decode_into(mut index: usize, counts: &[usize], strides: &[usize], out: &mut [usize]) {
    for ((slot, &count), &stride) in out.iter_mut().zip(counts).zip(strides) {
        *slot = (index / stride) % count;
        index %= stride;
    }
}

/// Serialized form of a [`NormalFormGame`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub players: usize,
    pub action_counts: Vec<usize>,
    /// One loss vector per profile, in mixed-radix order.
    pub loss_table: Vec<Vec<f64>>,
    #[serde(rename = "L")]
    pub lower: f64,
    #[serde(rename = "U")]
    pub upper: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub natural_values: Option<Vec<f64>>,
}
