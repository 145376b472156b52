//! Interior design on a zero-sum RPS variant whose target `(R, R)` has an
//! interior loss: the averaged policies concentrate on the target.

use game_redesign::catalog::make_rps;
use game_redesign::designer::DesignerSpec;
use game_redesign::{run, SimulationConfig};

fn main() -> game_redesign::Result<()> {
    let horizon: u64 = std::env::args().nth(1).map_or(1_000_000, |s| s.parse().expect("T"));
    let rps = make_rps()?;
    let spec = DesignerSpec::interior([0, 0].into(), 1.0);
    let res = run(&SimulationConfig::new(rps.game, spec, horizon).seed(2))?;
    for c in &res.checkpoints {
        let mass: Vec<String> = c.average_policy.iter().map(|p| format!("{:.3}", p[0])).collect();
        println!("T={:>8}  mass on R per player [{}]", c.t, mass.join(", "));
    }
    Ok(())
}
