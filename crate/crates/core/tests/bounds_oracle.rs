//! The bound formulas re-derived independently and compared on a grid.

use game_redesign::bounds::{boundary_bounds, exp3p_regret_bound, interior_bounds, BoundInputs};
use game_redesign::catalog::{make_pd, make_rps, make_tc, make_vd};
use game_redesign::CostModel;

fn regret(t: f64, k: f64, range: f64) -> f64 {
    let l = k.ln();
    range * 5.15 * (t * k * l).sqrt() + range * (t * k / l).sqrt()
}

fn oracle_interior(t: f64, counts: &[usize], rho: f64, range: f64, eta: f64, p: f64) -> (f64, f64) {
    let m = counts.len() as f64;
    let sum: f64 = counts.iter().map(|&k| regret(t, k as f64, range)).sum();
    let miss = sum * m / (m - 1.0) / rho;
    let per_round = if p.is_infinite() { eta * range } else { eta * range * m.powf(1.0 / p) };
    (miss, per_round * miss)
}

fn oracle_boundary(t: f64, counts: &[usize], rho: f64, range: f64, eta: f64, p: f64, rate: f64) -> (f64, f64) {
    let m = counts.len() as f64;
    let (interior_miss, _) = oracle_interior(t, counts, rho, range, eta, p);
    let miss = (interior_miss + m / rate) * t.powf(1.0 - rate);
    let per_round = if p.is_infinite() { eta * range } else { eta * range * m.powf(1.0 / p) };
    (miss, per_round * miss + per_round * t.powf(rate) / rate)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs())
}

#[test]
fn frozen_exp3p_value() {
    assert!((exp3p_regret_bound(1e4, 2, 11.0).unwrap() - 8538.535738183806).abs() < 1e-8);
    assert!(close(exp3p_regret_bound(1e6, 16, 58.09).unwrap(), regret(1e6, 16.0, 58.09)));
}

#[test]
fn both_bound_families_match_the_oracle() {
    let games = [make_vd(3).unwrap(), make_vd(5).unwrap(), make_tc().unwrap(), make_pd().unwrap(), make_rps().unwrap()];
    for g in &games {
        for (eta, p) in [(1.0, 1.0), (0.3, 2.0), (2.0, f64::INFINITY)] {
            let cost = CostModel::new(eta, p).unwrap();
            for rho in [0.25, 1.0] {
                let inputs = BoundInputs::for_game(&g.game, rho, &cost);
                let counts = g.game.action_counts();
                for e in [1, 3, 5, 7, 12] {
                    let t = 10f64.powi(e);
                    let b = interior_bounds(t, &inputs).unwrap();
                    let (m, c) = oracle_interior(t, counts, rho, g.game.range(), eta, p);
                    assert!(close(b.miss_bound, m) && close(b.cost_bound, c), "{} T=1e{e}", g.id);
                    for eps in [0.05, 0.25, 0.5] {
                        let b = boundary_bounds(t, &inputs, 0.5, eps).unwrap();
                        let (m, c) = oracle_boundary(t, counts, rho, g.game.range(), eta, p, 0.5 + eps);
                        assert!(close(b.miss_bound, m) && close(b.cost_bound, c), "{} T=1e{e} eps={eps}", g.id);
                    }
                }
            }
        }
    }
}

fn cost_optimal_epsilon(t: f64) -> f64 {
    let rps = make_rps().unwrap();
    let counts = rps.game.action_counts();
    let inputs = BoundInputs::for_game(&rps.game, 1.0, &CostModel::default());
    let grid: Vec<f64> = (1..=9).map(|k| k as f64 * 0.05).collect();
    let mut best = (f64::INFINITY, 0.0);
    for &eps in &grid {
        let c = boundary_bounds(t, &inputs, 0.5, eps).unwrap().cost_bound;
        let (_, oracle) = oracle_boundary(t, counts, 1.0, 2.0, 1.0, 1.0, 0.5 + eps);
        assert!(close(c, oracle));
        if c < best.0 {
            best = (c, eps);
        }
    }
    best.1
}

#[test]
fn cost_optimal_epsilon_drifts_toward_a_quarter() {
    // the asymptotic optimum (1 - alpha) / 2 = 0.25 is reached only for
    // astronomically long horizons
    let argmins: Vec<f64> = [1e6, 1e10, 1e20, 1e40].iter().map(|&t| cost_optimal_epsilon(t)).collect();
    let expected = [0.40, 0.35, 0.30, 0.25];
    for (got, want) in argmins.iter().zip(expected) {
        assert!((got - want).abs() < 1e-9, "{argmins:?}");
    }
    assert!(argmins.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn boundary_miss_rate_follows_the_exponent() {
    let rps = make_rps().unwrap();
    let inputs = BoundInputs::for_game(&rps.game, 1.0, &CostModel::default());
    let a = boundary_bounds(1e8, &inputs, 0.5, 0.3).unwrap();
    let b = boundary_bounds(1e10, &inputs, 0.5, 0.3).unwrap();
    // miss ~ T^(1 - eps) asymptotically: interior part √T · T^(0.5 - eps - ...)
    let slope = (b.miss_bound / a.miss_bound).log10() / 2.0;
    assert!((slope - 0.7).abs() < 0.01, "{slope}");
}
