//! Thresholded interior design on the 3-player volunteer's dilemma.
//!
//! `cargo run --release --example volunteers_dilemma -- [T...]`

use game_redesign::catalog::make_vd;
use game_redesign::{run, SimulationConfig};

fn main() -> game_redesign::Result<()> {
    let horizons: Vec<u64> = std::env::args().skip(1).map(|s| s.parse().expect("horizon")).collect();
    let horizons = if horizons.is_empty() { vec![10_000, 100_000] } else { horizons };
    let vd = make_vd(3)?;
    for t in horizons {
        let started = std::time::Instant::now();
        let res = run(&SimulationConfig::new(vd.game.clone(), vd.designer.clone(), t).seed(1))?;
        let c = res.final_checkpoint();
        println!(
            "T={t:>8}  target fraction {:.3} ± {:.3}  cost/round {:.3} ± {:.3}  ({:.1?})",
            c.target_fraction.mean,
            c.target_fraction.std,
            c.per_round_cost.mean,
            c.per_round_cost.std,
            started.elapsed()
        );
    }
    Ok(())
}
