//! Steering the prisoner's dilemma to mutual cooperation.

use game_redesign::catalog::make_pd;
use game_redesign::cli::format_table;
use game_redesign::designer::interior_design;
use game_redesign::{run, SimulationConfig};

fn main() -> game_redesign::Result<()> {
    let pd = make_pd()?;
    println!("original:\n{}", format_table(&pd.game));
    println!("redesigned (rho = 1):\n{}", format_table(&interior_design(&pd.game, &pd.target, 1.0)?));

    // one run per horizon: EXP3.P is tuned to T, so early checkpoints of a
    // longer run are not comparable
    for t in [10_000, 100_000] {
        let res = run(&SimulationConfig::new(pd.game.clone(), pd.designer.clone(), t))?;
        let c = res.final_checkpoint();
        println!("T={t:>6}  (mum, mum) {:.3}  cost/round {:.3}", c.target_fraction.mean, c.per_round_cost.mean);
    }
    Ok(())
}
