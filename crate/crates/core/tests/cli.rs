use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use game_redesign::cli::{Summary, LOGLOG_HEADER, OUT_DIR_ENV, SWEEP_HEADER, TRACE_HEADER};
use game_redesign::game::GameDocument;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("redesign-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn config(dir: &Path, text: &str) -> PathBuf {
    let p = dir.join("config.json");
    fs::write(&p, text).unwrap();
    p
}

fn redesign(args: &[&str], cfg: &Path) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_redesign"));
    cmd.arg(args[0]).arg("--config").arg(cfg).args(&args[1..]).env_remove(OUT_DIR_ENV);
    cmd.output().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn missing_rho_exits_2_and_names_the_field() {
    let dir = scratch("rho");
    let cfg = config(&dir, r#"{"game": {"preset": "vd"}, "designer": {"kind": "interior"}}"#);
    for cmd in ["simulate", "design", "bounds", "sweep-epsilon"] {
        let out = redesign(&[cmd], &cfg);
        assert_eq!(out.status.code(), Some(2), "{cmd}");
        assert!(stderr(&out).contains("designer.rho"), "{}", stderr(&out));
    }
}

#[test]
fn config_errors_exit_2() {
    let dir = scratch("errors");
    let out = redesign(&["bounds"], &config(&dir, r#"{"game": {"preset": "vd"}, "run": {"T_list": [10], "seeds": 1}}"#));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("run.seeds"));
    let out = redesign(&["bounds"], &dir.join("absent.json"));
    assert_eq!(out.status.code(), Some(2));
    let out = redesign(&["bounds"], &config(&dir, "{not json"));
    assert_eq!(out.status.code(), Some(2));
    // usage errors from the argument parser
    let out = Command::new(env!("CARGO_BIN_EXE_redesign")).args(["simulate", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // a well-formed config but an invalid round is a runtime failure
    let out = redesign(&["design", "--t", "0"], &config(&dir, r#"{"game": {"preset": "pd"}}"#));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn simulate_writes_deterministic_outputs() {
    let dir = scratch("simulate");
    let cfg = config(
        &dir,
        r#"{"game": {"preset": "pd"}, "run": {"T_list": [500, 1000, 2000], "trials": 2, "seed": 3}}"#,
    );
    let run = |name: &str, seed: &str| {
        let out_dir = dir.join(name);
        let out = redesign(&["simulate", "--seed", seed, "--out", out_dir.to_str().unwrap()], &cfg);
        assert!(out.status.success(), "{}", stderr(&out));
        out_dir
    };
    let (a, b, c) = (run("a", "11"), run("b", "11"), run("c", "12"));
    for t in [500, 1000, 2000] {
        for k in 0..2 {
            let name = format!("trace_T{t}_trial{k}.csv");
            let bytes = fs::read(a.join(&name)).unwrap();
            assert_eq!(bytes, fs::read(b.join(&name)).unwrap(), "{name}");
            if t == 2000 {
                assert_ne!(bytes, fs::read(c.join(&name)).unwrap());
            }
        }
    }
    assert_eq!(fs::read(a.join("summary.json")).unwrap(), fs::read(b.join("summary.json")).unwrap());

    let trace = fs::read_to_string(a.join("trace_T1000_trial0.csv")).unwrap();
    let mut lines = trace.lines();
    assert_eq!(lines.next(), Some(TRACE_HEADER));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 1000);
    let mut total = 0.0;
    for (k, r) in rows.iter().enumerate() {
        assert_eq!(r[0], (k + 1).to_string());
        assert!(r[1] == "0" || r[1] == "1");
        let cost: f64 = r[2].parse().unwrap();
        total += cost;
        // 17 significant digits round-trip exactly
        assert_eq!(r[3].parse::<f64>().unwrap(), total);
        if r[1] == "1" {
            assert_eq!(cost, 0.0);
        }
    }

    let summary: Summary = serde_json::from_str(&fs::read_to_string(a.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary.game, "pd");
    assert_eq!(summary.seed, 11);
    assert_eq!(summary.runs.len(), 3);
    let last = summary.runs[2].checkpoints.last().unwrap();
    assert_eq!(last.t, 2000);
    let b = last.bounds.unwrap();
    assert!(last.misses.mean <= b.miss_bound && last.cumulative_cost.mean <= b.cost_bound);
    assert!(summary.slopes.miss.is_some() && summary.slopes.cost.is_some());
    let reserialized = serde_json::to_value(&summary).unwrap();
    assert_eq!(reserialized, serde_json::from_str::<serde_json::Value>(&fs::read_to_string(a.join("summary.json")).unwrap()).unwrap());

    let loglog = fs::read_to_string(a.join("loglog.csv")).unwrap();
    assert_eq!(loglog.lines().next(), Some(LOGLOG_HEADER));
    assert_eq!(loglog.lines().count(), 4);
}

#[test]
fn summary_rejects_unknown_fields() {
    let text = r#"{"game":"pd","designer":"interior","target":[0,0],"seed":0,"trials":1,"runs":[],
                   "slopes":{"miss":null,"cost":null},"extra":1}"#;
    assert!(serde_json::from_str::<Summary>(text).is_err());
    assert!(serde_json::from_str::<Summary>(&text.replace(r#","extra":1"#, "")).is_ok());
}

#[test]
fn output_directory_precedence() {
    let dir = scratch("outdir");
    let from_config = dir.join("from-config");
    let cfg = config(
        &dir,
        &format!(
            r#"{{"game": {{"preset": "pd"}}, "run": {{"T_list": [50], "trials": 1}},
                "output": {{"directory": {:?}, "formats": ["summary"]}}}}"#,
            from_config
        ),
    );
    let bin = env!("CARGO_BIN_EXE_redesign");
    let base = || {
        let mut c = Command::new(bin);
        c.args(["simulate", "--config"]).arg(&cfg).env_remove(OUT_DIR_ENV);
        c
    };
    assert!(base().status().unwrap().success());
    assert!(from_config.join("summary.json").exists());
    assert!(!from_config.join("trace_T50_trial0.csv").exists());

    let from_env = dir.join("from-env");
    assert!(base().env(OUT_DIR_ENV, &from_env).status().unwrap().success());
    assert!(from_env.join("summary.json").exists());

    let from_flag = dir.join("from-flag");
    assert!(base().env(OUT_DIR_ENV, &from_env).arg("--out").arg(&from_flag).status().unwrap().success());
    assert!(from_flag.join("summary.json").exists());
}

#[test]
fn design_prints_documents_and_tables() {
    let dir = scratch("design");
    let cfg = config(&dir, r#"{"game": {"preset": "rps"}, "designer": {"kind": "discrete", "rho": 1}}"#);
    let first = redesign(&["design", "--t", "1000", "--seed", "5"], &cfg);
    assert!(first.status.success());
    let again = redesign(&["design", "--t", "1000", "--seed", "5"], &cfg);
    assert_eq!(first.stdout, again.stdout);
    let doc: GameDocument = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc.action_counts, vec![3, 3]);
    assert!(doc.loss_table.iter().flatten().all(|&x| x == -1.0 || x == 1.0));

    let pd = config(&dir, r#"{"game": {"preset": "pd"}}"#);
    let out = redesign(&["design", "--table"], &pd);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1,0)\t(2.5000, 1.5000)"), "{text}");
}

#[test]
fn bounds_prints_one_report_per_horizon() {
    let dir = scratch("bounds");
    let cfg = config(&dir, r#"{"game": {"preset": "vd"}, "run": {"T_list": [10000, 40000, 160000]}}"#);
    let out = redesign(&["bounds"], &cfg);
    assert!(out.status.success());
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 3);
    let miss: Vec<f64> = reports.iter().map(|r| r["miss_bound"].as_f64().unwrap()).collect();
    assert!((miss[1] / miss[0] - 2.0).abs() < 1e-12 && (miss[2] / miss[1] - 2.0).abs() < 1e-12);

    let none = config(&dir, r#"{"game": {"preset": "vd"}, "designer": {"kind": "none"}}"#);
    assert_eq!(redesign(&["bounds"], &none).status.code(), Some(2));
}

#[test]
fn sweep_skips_invalid_epsilons_with_a_warning() {
    let dir = scratch("sweep");
    let cfg = config(&dir, r#"{"game": {"preset": "rps"}, "run": {"T_list": [300, 600], "trials": 1}}"#);
    let out_dir = dir.join("out");
    let out = redesign(&["sweep-epsilon", "--eps", "0.3,0.9,0.2", "--out", out_dir.to_str().unwrap()], &cfg);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("skipping epsilon 0.9"));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(SWEEP_HEADER));
    let eps: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(eps, vec!["0.3", "0.3", "0.2", "0.2"]);
    assert_eq!(fs::read_to_string(out_dir.join("sweep_epsilon.csv")).unwrap(), text);

    let interior = config(&dir, r#"{"game": {"preset": "pd"}}"#);
    assert_eq!(redesign(&["sweep-epsilon"], &interior).status.code(), Some(2));
}

#[test]
fn shipped_configs_are_valid() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    let mut seen = 0;
    for entry in fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        game_redesign::cli::load_config(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        seen += 1;
    }
    assert!(seen >= 5);
}
