//! Random game populations shared by the integration tests.
#![allow(dead_code)]

use game_redesign::designer::max_interior_margin;
use game_redesign::{ActionProfile, NormalFormGame};
use rand::RngExt;
use rand_chacha::ChaCha8Rng;

pub struct Case {
    pub game: NormalFormGame,
    pub target: ActionProfile,
    pub rho: f64,
    /// Every cell sums to zero, with `L = −U`.
    pub zero_sum: bool,
}

fn shape(rng: &mut ChaCha8Rng) -> Vec<usize> {
    let m = rng.random_range(2..=4usize);
    (0..m).map(|_| rng.random_range(2..=5usize)).collect()
}

/// A loss vector in `[lo, hi]`; zero-sum when requested (then `lo = −hi`).
fn vector(rng: &mut ChaCha8Rng, m: usize, lo: f64, hi: f64, zero_sum: bool) -> Vec<f64> {
    if zero_sum {
        let k = (m - 1) as f64;
        let mut v: Vec<f64> = (0..m - 1).map(|_| rng.random_range(lo / k..=hi / k)).collect();
        v.push(-v.iter().sum::<f64>());
        v
    } else {
        (0..m).map(|_| rng.random_range(lo..=hi)).collect()
    }
}

fn build(rng: &mut ChaCha8Rng, counts: Vec<usize>, lower: f64, upper: f64, zero_sum: bool) -> NormalFormGame {
    let m = counts.len();
    NormalFormGame::from_fn(counts, lower, upper, |_, out| {
        out.copy_from_slice(&vector(rng, m, lower, upper, zero_sum));
    })
    .unwrap()
}

fn with_cell(game: &NormalFormGame, profile: &[usize], values: &[f64]) -> NormalFormGame {
    let mut flat = game.losses().to_vec();
    let m = game.num_players();
    let idx = game.index_of(profile);
    flat[idx * m..(idx + 1) * m].copy_from_slice(values);
    NormalFormGame::new(game.action_counts().to_vec(), flat, game.lower(), game.upper()).unwrap()
}

fn bounds(rng: &mut ChaCha8Rng, zero_sum: bool) -> (f64, f64) {
    if zero_sum {
        let u = rng.random_range(1.0..5.0);
        (-u, u)
    } else {
        let l = rng.random_range(-5.0..0.0);
        (l, l + rng.random_range(1.0..10.0))
    }
}

fn target(rng: &mut ChaCha8Rng, counts: &[usize]) -> ActionProfile {
    ActionProfile::new(counts.iter().map(|&k| rng.random_range(0..k)).collect())
}

/// A game whose target loss is strictly interior, with a feasible margin.
pub fn interior_case(rng: &mut ChaCha8Rng) -> Case {
    let counts = shape(rng);
    let m = counts.len();
    let zero_sum = rng.random_bool(0.3);
    let (lower, upper) = bounds(rng, zero_sum);
    let game = build(rng, counts.clone(), lower, upper, zero_sum);
    let target = target(rng, &counts);
    let pad = 0.05 * (upper - lower);
    let centre = if zero_sum {
        vector(rng, m, 0.8 * lower, 0.8 * upper, true)
    } else {
        vector(rng, m, lower + pad, upper - pad, false)
    };
    let rho = rng.random_range(0.05..=1.0) * max_interior_margin(&centre, lower, upper);
    Case {
        game: with_cell(&game, &target, &centre),
        target,
        rho,
        zero_sum,
    }
}

/// A game whose target loss may sit on the boundary of `[L, U]`. `rho` may
/// exceed what `v` allows; the design caps it.
pub fn boundary_case(rng: &mut ChaCha8Rng) -> (Case, Vec<f64>) {
    let counts = shape(rng);
    let m = counts.len();
    let zero_sum = rng.random_bool(0.3);
    let (lower, upper) = bounds(rng, zero_sum);
    let game = build(rng, counts.clone(), lower, upper, zero_sum);
    let target = target(rng, &counts);
    let mut cell = game.loss_at(&target).unwrap().into_inner();
    if !zero_sum {
        // push some players onto the boundary
        for x in cell.iter_mut() {
            match rng.random_range(0..3) {
                0 => *x = lower,
                1 => *x = upper,
                _ => {}
            }
        }
    }
    let v = if zero_sum {
        vec![0.0; m]
    } else {
        let pad = 0.05 * (upper - lower);
        vector(rng, m, lower + pad, upper - pad, false)
    };
    let rho = rng.random_range(0.05..2.0) * (upper - lower);
    let case = Case {
        game: with_cell(&game, &target, &cell),
        target,
        rho,
        zero_sum,
    };
    (case, v)
}
