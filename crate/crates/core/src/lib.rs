//! Steering no-regret learners to a chosen action profile by redesigning the
//! loss functions of a repeated normal-form game.
//!
//! The designer commits a (possibly time-varying) loss table every round so
//! that the target profile `a†` becomes strictly dominant, players run EXP3.P
//! with bandit feedback, and the designer pays for every deviation from the
//! original losses on the cell actually played.
//!
//! ```
//! use game_redesign::catalog::make_pd;
//! use game_redesign::designer::interior_design;
//!
//! let pd = make_pd().unwrap();
//! let redesigned = interior_design(&pd.game, &pd.target, 1.0).unwrap();
//! assert_eq!(redesigned.cell(0), &[2.0, 2.0]); // (mum, mum) is left alone
//! assert_eq!(redesigned.cell(2), &[2.5, 1.5]); // (fink, mum)
//! assert!((redesigned.dominance_gap(0, 0).unwrap() - 0.5).abs() < 1e-12);
//! ```

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod cost;
pub mod designer;
pub mod error;
pub mod game;
pub mod harness;
pub mod learner;

pub use bounds::{boundary_bounds, exp3p_regret_bound, interior_bounds, BoundInputs, BoundReport};
pub use catalog::{preset, GameId, GamePreset};
pub use cost::CostModel;
pub use designer::{Designer, DesignerKind, DesignerSpec, InteriorVector};
pub use error::{Error, Result};
pub use game::{ActionProfile, LossVector, NormalFormGame};
pub use harness::{run, run_trial, sublinearity_slope, PolicyAveraging, SimulationConfig, SimulationResult};
pub use learner::{Exp3P, PlayerTrace, RegretTracker};
