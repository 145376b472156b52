//! The four experiment games and their default designers.
//!
//! Action indices: VD `0 = volunteer, 1 = not volunteer`; PD `0 = mum,
//! 1 = fink`; RPS `0 = R, 1 = P, 2 = S`; TC action `k` grazes `k` sheep.

use std::fmt;

use crate::designer::{DesignerSpec, InteriorVector};
use crate::error::{Error, Result};
use crate::game::{ActionProfile, NormalFormGame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameId {
    /// Volunteer's dilemma.
    Vd,
    /// Tragedy of the commons.
    Tc,
    /// Prisoner's dilemma.
    Pd,
    /// Rock-paper-scissors.
    Rps,
}

impl GameId {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "vd" => Some(GameId::Vd),
            "tc" => Some(GameId::Tc),
            "pd" => Some(GameId::Pd),
            "rps" => Some(GameId::Rps),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            GameId::Vd => "vd",
            GameId::Tc => "tc",
            GameId::Pd => "pd",
            GameId::Rps => "rps",
        }
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GamePreset {
    pub id: GameId,
    pub game: NormalFormGame,
    pub target: ActionProfile,
    pub designer: DesignerSpec,
    /// Action names, shared by every player (all presets are symmetric).
    pub action_labels: Vec<String>,
}

/// Looks a preset up by id; `players` only affects VD (default 3).
pub fn preset(id: GameId, players: Option<usize>) -> Result<GamePreset> {
    match id {
        GameId::Vd => make_vd(players.unwrap_or(3)),
        _ if players.is_some_and(|m| m != 2) => Err(Error::arg(format!("{id} is a two-player game"))),
        GameId::Tc => make_tc(),
        GameId::Pd => make_pd(),
        GameId::Rps => make_rps(),
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Volunteer's dilemma with `m` players, target "everybody volunteers".
pub fn make_vd(m: usize) -> Result<GamePreset> {
    if m < 2 {
        return Err(Error::arg(format!("volunteer's dilemma needs at least 2 players, got {m}")));
    }
    let game = NormalFormGame::from_fn(vec![2; m], -1.0, 10.0, |a, out| {
        let volunteers = a.iter().filter(|&&x| x == 0).count();
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = if a[i] == 0 {
                0.0
            } else if volunteers > 0 {
                -1.0
            } else {
                10.0
            };
        }
    })?;
    let target = ActionProfile::new(vec![0; m]);
    Ok(GamePreset {
        id: GameId::Vd,
        designer: DesignerSpec::interior(target.clone(), 1.0).thresholded(true),
        game,
        target,
        action_labels: labels(&["volunteer", "not volunteer"]),
    })
}

/// Tragedy of the commons: two farmers graze 0..=15 sheep each and sell at
/// price `√(30 − a_1 − a_2)`. Target: ten sheep each.
pub fn make_tc() -> Result<GamePreset> {
    let lower = -15.0 * 15f64.sqrt();
    let game = NormalFormGame::from_fn(vec![16, 16], lower, 0.0, |a, out| {
        let price = ((30 - a[0] - a[1]) as f64).sqrt();
        out[0] = -(a[0] as f64) * price;
        out[1] = -(a[1] as f64) * price;
    })?;
    let target = ActionProfile::new(vec![10, 10]);
    Ok(GamePreset {
        id: GameId::Tc,
        designer: DesignerSpec::interior(target.clone(), 1.0).thresholded(true),
        game,
        target,
        action_labels: (0..16).map(|k| k.to_string()).collect(),
    })
}

/// Prisoner's dilemma (losses are years in prison). Target: both stay mum.
pub fn make_pd() -> Result<GamePreset> {
    let game = NormalFormGame::new(
        vec![2, 2],
        vec![2.0, 2.0, 5.0, 1.0, 1.0, 5.0, 4.0, 4.0],
        1.0,
        5.0,
    )?;
    let target = ActionProfile::new(vec![0, 0]);
    Ok(GamePreset {
        id: GameId::Pd,
        designer: DesignerSpec::interior(target.clone(), 1.0).thresholded(true),
        game,
        target,
        action_labels: labels(&["mum", "fink"]),
    })
}

/// Rock-paper-scissors in losses (`-1` win, `0` tie, `1` loss). Target
/// `(R, P)`, whose loss `(1, -1)` sits on the boundary of `[-1, 1]`.
pub fn make_rps() -> Result<GamePreset> {
    // row player's loss; R=0, P=1, S=2
    const ROW: [[f64; 3]; 3] = [[0.0, 1.0, -1.0], [-1.0, 0.0, 1.0], [1.0, -1.0, 0.0]];
    let game = NormalFormGame::from_fn(vec![3, 3], -1.0, 1.0, |a, out| {
        out[0] = ROW[a[0]][a[1]];
        out[1] = -ROW[a[0]][a[1]];
    })?
    .with_natural_values(vec![-1.0, 0.0, 1.0])?;
    let target = ActionProfile::new(vec![0, 1]);
    Ok(GamePreset {
        id: GameId::Rps,
        designer: DesignerSpec::boundary(target.clone(), 1.0, 0.5, 0.3).with_vector(InteriorVector::Midpoint),
        game,
        target,
        action_labels: labels(&["R", "P", "S"]),
    })
}
