//! Prints the redesigned loss tables: VD, PD and RPS at t = 1, 10^3, 10^7.

use game_redesign::catalog::{make_pd, make_rps, make_vd};
use game_redesign::cli::format_table;
use game_redesign::designer::Designer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> game_redesign::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for p in [make_vd(3)?, make_pd()?] {
        let mut d = Designer::new(p.designer.clone(), p.game.clone())?;
        println!("{} ({}):\n{}", p.id, p.action_labels.join("/"), format_table(d.round(1, &mut rng)?));
    }
    let rps = make_rps()?;
    let mut d = Designer::new(rps.designer.clone(), rps.game.clone())?;
    for t in [1, 1_000, 10_000_000] {
        println!("rps t={t} w={:.4}:\n{}", d.weight(t).unwrap(), format_table(d.round(t, &mut rng)?));
    }
    Ok(())
}
