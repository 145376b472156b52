//! Rock-paper-scissors with the target `(R, P)` on the loss boundary, using
//! the time-varying boundary design and its discrete rounding.
//!
//! `cargo run --release --example rps_boundary -- [T] [epsilon]`

use game_redesign::catalog::make_rps;
use game_redesign::designer::DesignerKind;
use game_redesign::{run, SimulationConfig};

fn main() -> game_redesign::Result<()> {
    let mut args = std::env::args().skip(1);
    let horizon: u64 = args.next().map_or(100_000, |s| s.parse().expect("T"));
    let epsilon: f64 = args.next().map_or(0.3, |s| s.parse().expect("epsilon"));
    let rps = make_rps()?;
    for kind in [DesignerKind::Boundary, DesignerKind::Discrete] {
        let spec = rps.designer.clone().with_kind(kind).with_epsilon(epsilon);
        let res = run(&SimulationConfig::new(rps.game.clone(), spec, horizon).seed(3))?;
        for c in &res.checkpoints {
            println!(
                "{:<8} T={:>8}  target fraction {:.3}  cost/round {:.3}",
                kind.name(),
                c.t,
                c.target_fraction.mean,
                c.per_round_cost.mean
            );
        }
    }
    Ok(())
}
