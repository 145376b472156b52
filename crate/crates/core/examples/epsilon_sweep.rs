//! Miss count and cost of the RPS boundary design as the rate epsilon varies.

use game_redesign::catalog::make_rps;
use game_redesign::cli::{cmd_sweep_epsilon, format_sweep, parse_config, DEFAULT_SWEEP};

fn main() -> game_redesign::Result<()> {
    let horizon: u64 = std::env::args().nth(1).map_or(100_000, |s| s.parse().expect("T"));
    let exp = parse_config(&format!(r#"{{"game": {{"preset": "rps"}}, "run": {{"T_list": [{horizon}], "seed": 4}}}}"#))?;
    debug_assert_eq!(exp.designer, make_rps()?.designer);
    let rows = cmd_sweep_epsilon(&exp, &DEFAULT_SWEEP, |w| eprintln!("{w}"))?;
    print!("{}", format_sweep(&rows));
    Ok(())
}
