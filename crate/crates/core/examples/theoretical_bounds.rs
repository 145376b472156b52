//! Closed-form miss and cost bounds, and how the cost-optimal boundary rate
//! drifts with the horizon.

use game_redesign::bounds::{boundary_bounds, interior_bounds, BoundInputs};
use game_redesign::catalog::{make_rps, make_vd};
use game_redesign::CostModel;

fn main() -> game_redesign::Result<()> {
    let vd = make_vd(3)?;
    let inputs = BoundInputs::for_game(&vd.game, 1.0, &CostModel::default());
    for e in 4..=7 {
        let b = interior_bounds(10f64.powi(e), &inputs)?;
        println!("vd interior T=1e{e}: miss <= {:.4e}, cost <= {:.4e}", b.miss_bound, b.cost_bound);
    }

    let rps = make_rps()?;
    let inputs = BoundInputs::for_game(&rps.game, 1.0, &CostModel::default());
    let grid: Vec<f64> = (1..=9).map(|k| k as f64 * 0.05).collect();
    for e in [6, 10, 20, 40] {
        let t = 10f64.powi(e);
        let mut best = (f64::INFINITY, 0.0);
        for &eps in &grid {
            let c = boundary_bounds(t, &inputs, 0.5, eps)?.cost_bound;
            if c < best.0 {
                best = (c, eps);
            }
        }
        println!("rps boundary T=1e{e}: cost bound minimized at epsilon = {:.2}", best.1);
    }
    Ok(())
}
