//! Loading a custom game document, redesigning it and running the CLI
//! pipeline in-process.

use game_redesign::cli::{cmd_design, cmd_simulate, format_table, parse_config};

const CONFIG: &str = r#"{
    "game": {
        "custom": {
            "players": 2,
            "action_counts": [2, 3],
            "loss_table": [[0, 3], [2, 1], [1, 0], [3, 2], [1, 1], [2, 3]],
            "L": 0, "U": 3
        },
        "target": [0, 1]
    },
    "designer": {"kind": "interior", "rho": 0.5, "thresholded": true},
    "run": {"T_list": [20000], "trials": 3, "seed": 9},
    "output": {"formats": ["summary", "loglog"]}
}"#;

fn main() -> game_redesign::Result<()> {
    let exp = parse_config(CONFIG)?;
    println!("{}", format_table(&cmd_design(&exp, 1, exp.seed)?));
    let dir = std::env::temp_dir().join("redesign-custom-example");
    let summary = cmd_simulate(&exp, &dir)?;
    let last = summary.runs[0].checkpoints.last().unwrap();
    println!(
        "target fraction {:.3}, cost/round {:.3}, files in {}",
        last.target_fraction.mean,
        last.per_round_cost.mean,
        dir.display()
    );
    Ok(())
}
