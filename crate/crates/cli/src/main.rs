use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use monkeyfold::analyze::{analyze, render};
use monkeyfold::config::parse_config;
use monkeyfold::evaluate::evaluate;
use monkeyfold::pdb::parse_pdb_calpha;
use monkeyfold::report::write_report;
use monkeyfold::simulate::simulate;
use monkeyfold_core::geometry::ThicknessInterval;
use monkeyfold_core::objective::{ObjectiveParams, WeightPreset};

#[derive(Parser)]
#[command(name = "monkeyfold", version, about = "Coarse-grained protein conformation simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a batch of seeded conformation searches
    Simulate {
        /// Run configuration (flat key = value lines)
        #[arg(long)]
        config: PathBuf,
        /// Weight preset overriding the config file
        #[arg(long)]
        preset: Option<String>,
        /// Simulations per group, overriding the config file
        #[arg(long)]
        count: Option<usize>,
        /// Base seed, overriding the config file
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory, overriding the config file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score simulated conformations against target chains by RMSD
    Evaluate {
        /// Directory of simulated .pdb conformations (chain A)
        #[arg(long)]
        conf: PathBuf,
        /// Directory of target .pdb files
        #[arg(long)]
        targets: PathBuf,
        /// Chain map: one `<target> <chain>` per line
        #[arg(long)]
        chains: PathBuf,
        /// Report CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Print geometric statistics of one conformation
    Analyze {
        /// PDB file to analyze
        file: PathBuf,
        /// Clash threshold (Å)
        #[arg(long, default_value_t = 4.30)]
        th: f64,
        /// Helix target distance (Å)
        #[arg(long, default_value_t = 5.50)]
        c: f64,
        /// Chain to read
        #[arg(long, default_value_t = 'A')]
        chain: char,
    },
}

/// Exit code 1: usage or configuration problems. Exit code 2: runtime and
/// data problems.
enum AppError {
    Config(String),
    Data(String),
}

impl AppError {
    fn report(&self) -> ExitCode {
        match self {
            AppError::Config(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            AppError::Data(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

fn cmd_simulate(
    config_path: PathBuf,
    preset: Option<String>,
    count: Option<usize>,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> Result<(), AppError> {
    let text = fs::read_to_string(&config_path)
        .map_err(|e| AppError::Config(format!("cannot read {}: {e}", config_path.display())))?;
    let mut config = parse_config(&text)
        .map_err(|e| AppError::Config(format!("{}: {e}", config_path.display())))?;

    if let Some(name) = preset {
        let preset = WeightPreset::parse(&name)
            .ok_or_else(|| AppError::Config(format!("unknown preset {name:?}")))?;
        config.weights = preset.weights();
        config.presets.clear();
    }
    if let Some(count) = count {
        config.count = count;
    }
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(out) = out {
        config.out_dir = out;
    }
    config.validate().map_err(|e| AppError::Config(e.to_string()))?;

    let groups = simulate(&config).map_err(|e| AppError::Data(e.to_string()))?;
    for g in &groups {
        println!(
            "group {} ({:.1}/{:.1}/{:.1}): {} conformation(s) -> {}",
            g.label,
            g.weights.0,
            g.weights.1,
            g.weights.2,
            g.rows.len(),
            g.dir.display()
        );
        for row in &g.rows {
            println!(
                "  {}  seed {}  f {:.4}  thickness {:.3}  helix triplets {}  {} trees, {} evals, {} ms",
                row.id,
                row.seed,
                row.objective,
                row.thickness,
                row.helix_triplets,
                row.trees,
                row.evaluations,
                row.wall_ms
            );
        }
    }
    Ok(())
}

fn cmd_evaluate(
    conf: PathBuf,
    targets: PathBuf,
    chains: PathBuf,
    out: PathBuf,
) -> Result<(), AppError> {
    let params = ObjectiveParams::default();
    let outcome =
        evaluate(&conf, &targets, &chains, &params).map_err(|e| AppError::Data(e.to_string()))?;

    let mut buf = Vec::new();
    write_report(&outcome.rows, &outcome.target_ids, &mut buf)
        .map_err(|e| AppError::Data(e.to_string()))?;
    fs::write(&out, buf)
        .map_err(|e| AppError::Data(format!("cannot write {}: {e}", out.display())))?;

    for m in &outcome.mismatches {
        eprintln!("skipped: {m}");
    }
    for (id, best) in &outcome.best_per_conf {
        match best {
            Some((target, d)) => println!("{id}: closest target {target} at {d:.4}"),
            None => println!("{id}: no length-matched target"),
        }
    }
    for a in &outcome.aggregates {
        if a.cells > 0 {
            println!(
                "target {}: n {}  min {:.4}  mean {:.4}  max {:.4}",
                a.id, a.cells, a.min, a.mean, a.max
            );
        } else {
            println!("target {}: no length-matched conformations", a.id);
        }
    }
    println!("report: {} ({} rows)", out.display(), outcome.rows.len());
    Ok(())
}

fn cmd_analyze(file: PathBuf, th: f64, c: f64, chain: char) -> Result<(), AppError> {
    if !(th.is_finite() && th > 0.0 && c.is_finite() && c > 0.0) {
        return Err(AppError::Config("th and c must be positive".into()));
    }
    let text = fs::read_to_string(&file)
        .map_err(|e| AppError::Data(format!("cannot read {}: {e}", file.display())))?;
    let target = parse_pdb_calpha(&text, chain)
        .map_err(|e| AppError::Data(format!("{}: {e}", file.display())))?;
    let params = ObjectiveParams { th, c, ..ObjectiveParams::default() };
    let interval = ThicknessInterval::default();
    let a = analyze(&target.calpha, &params, &interval);
    print!("{}", render(&a, &params, &interval));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
            let _ = e.print();
            return code;
        }
    };

    let result = match cli.command {
        Command::Simulate { config, preset, count, seed, out } => {
            cmd_simulate(config, preset, count, seed, out)
        }
        Command::Evaluate { conf, targets, chains, out } => {
            cmd_evaluate(conf, targets, chains, out)
        }
        Command::Analyze { file, th, c, chain } => cmd_analyze(file, th, c, chain),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.report(),
    }
}
