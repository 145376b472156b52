//! Two farmers, 16 actions each: pushing them from the (12, 12) Nash
//! equilibrium to the welfare-optimal (10, 10).

use game_redesign::catalog::make_tc;
use game_redesign::{run, SimulationConfig};

fn main() -> game_redesign::Result<()> {
    let tc = make_tc()?;
    let nash = tc.game.loss_at(&[12, 12].into())?;
    let target = tc.game.loss_at(&tc.target)?;
    println!("loss at Nash {:.3?}, at target {:.3?}", &nash[..], &target[..]);

    // one run per horizon: EXP3.P is tuned to T, so early checkpoints of a
    // longer run are not comparable
    for t in [10_000, 100_000] {
        let res = run(&SimulationConfig::new(tc.game.clone(), tc.designer.clone(), t))?;
        let c = res.final_checkpoint();
        println!("T={t:>6}  target fraction {:.3}  cost/round {:.3}", c.target_fraction.mean, c.per_round_cost.mean);
    }
    Ok(())
}
