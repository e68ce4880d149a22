//! Batch simulation: independent seeded searches run (optionally in
//! parallel) over one or more weight groups; each final conformation is
//! written as PDB with an `.angles` metadata sidecar, plus a summary CSV per
//! group.
//!
//! Outputs are a pure function of (config, seed): simulation i of group g
//! always runs with seed `base + g·count + i`, so batches reproduce exactly
//! regardless of worker count. `MONKEYFOLD_WORKERS` caps the thread pool.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use monkeyfold_core::geometry::{helix_triplet_count, thickness, BondGeometry, ThicknessInterval};
use monkeyfold_core::monkey_search::{run, MsParams};
use monkeyfold_core::objective::{clash_term, compactness_term, helix_term, ObjectiveParams};
use monkeyfold_core::protein::ProteinProblem;
use rayon::prelude::*;
use thiserror::Error;

use crate::config::RunConfig;
use crate::pdb;

pub const WORKERS_ENV: &str = "MONKEYFOLD_WORKERS";

#[derive(Debug, Error)]
pub enum SimulateError {
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid problem setup: {0}")]
    Problem(String),
    #[error("search with seed {seed} failed: {cause}")]
    Search { seed: u64, cause: String },
}

/// Outcome of one simulation.
#[derive(Debug, Clone)]
pub struct SimulationRow {
    pub id: String,
    pub seed: u64,
    pub objective: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub thickness: f64,
    pub helix_triplets: usize,
    pub trees: usize,
    pub evaluations: usize,
    pub wall_ms: u128,
}

/// One weight group: where it was written and its per-simulation rows.
#[derive(Debug)]
pub struct GroupSummary {
    pub label: String,
    pub dir: PathBuf,
    pub weights: (f64, f64, f64),
    pub rows: Vec<SimulationRow>,
}

fn objective_params(config: &RunConfig, weights: (f64, f64, f64)) -> ObjectiveParams {
    ObjectiveParams {
        gamma1: weights.0,
        gamma2: weights.1,
        gamma3: weights.2,
        th: config.th,
        c: config.c,
    }
}

fn run_one(
    config: &RunConfig,
    weights: (f64, f64, f64),
    dir: &Path,
    index: usize,
    seed: u64,
) -> Result<SimulationRow, SimulateError> {
    let problem = ProteinProblem::new(
        config.n,
        config.region.clone(),
        BondGeometry::default(),
        objective_params(config, weights),
        config.perturb,
    )
    .map_err(|e| SimulateError::Problem(e.to_string()))?;
    let ms = MsParams { rng_seed: seed, ..config.ms.clone() };

    let start = Instant::now();
    let outcome =
        run(&problem, &ms).map_err(|e| SimulateError::Search { seed, cause: e.to_string() })?;
    let wall_ms = start.elapsed().as_millis();

    let best = outcome.memory.best().expect("at least one tree ran");
    let conf = problem.build(&best.point);
    let params = problem.objective_params();

    let id = format!("conf_{:04}", index + 1);
    let pdb_path = dir.join(format!("{id}.pdb"));
    let text = pdb::write_pdb(conf.positions())
        .map_err(|e| SimulateError::Problem(e.to_string()))?;
    fs::write(&pdb_path, text).map_err(|source| SimulateError::Io { path: pdb_path.clone(), source })?;

    // angle metadata, full precision, for exact re-derivation of the trace
    let mut angles_text = String::new();
    for (p, s) in best.point.phi().iter().zip(best.point.psi()) {
        let _ = writeln!(angles_text, "{p} {s}");
    }
    let angles_path = dir.join(format!("{id}.angles"));
    fs::write(&angles_path, angles_text)
        .map_err(|source| SimulateError::Io { path: angles_path, source })?;

    Ok(SimulationRow {
        id,
        seed,
        objective: best.value,
        f1: compactness_term(&conf),
        f2: clash_term(&conf, params.th),
        f3: helix_term(&conf, params.c),
        thickness: thickness(&conf),
        helix_triplets: helix_triplet_count(&conf, &ThicknessInterval::default()),
        trees: outcome.trees,
        evaluations: outcome.evaluations,
        wall_ms,
    })
}

fn write_summary(
    dir: &Path,
    rows: &[SimulationRow],
    weights: (f64, f64, f64),
) -> Result<(), SimulateError> {
    let mut text = String::from(
        "id,seed,gamma1,gamma2,gamma3,objective,f1,f2,f3,thickness,helix_triplets,trees,evaluations,wall_ms\n",
    );
    // gammas repeated per row so a concatenation of groups stays self-describing
    for row in rows {
        let _ = writeln!(
            text,
            "{},{},{:.4},{:.4},{:.4},{:.6},{:.6},{:.6},{:.6},{:.4},{},{},{},{}",
            row.id,
            row.seed,
            weights.0,
            weights.1,
            weights.2,
            row.objective,
            row.f1,
            row.f2,
            row.f3,
            row.thickness,
            row.helix_triplets,
            row.trees,
            row.evaluations,
            row.wall_ms,
        );
    }
    let path = dir.join("summary.csv");
    fs::write(&path, text).map_err(|source| SimulateError::Io { path, source })
}

fn run_group(
    config: &RunConfig,
    label: String,
    weights: (f64, f64, f64),
    dir: PathBuf,
    seed_base: u64,
) -> Result<GroupSummary, SimulateError> {
    fs::create_dir_all(&dir).map_err(|source| SimulateError::Io { path: dir.clone(), source })?;
    let mut rows: Vec<SimulationRow> = (0..config.count)
        .into_par_iter()
        .map(|i| run_one(config, weights, &dir, i, seed_base.wrapping_add(i as u64)))
        .collect::<Result<_, _>>()?;
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    write_summary(&dir, &rows, weights)?;
    Ok(GroupSummary { label, dir, weights, rows })
}

/// Run every group of the batch. Groups follow `config.presets`, or a single
/// group with `config.weights` when no presets are set.
pub fn simulate(config: &RunConfig) -> Result<Vec<GroupSummary>, SimulateError> {
    config.validate().map_err(|e| SimulateError::Problem(e.to_string()))?;

    let groups: Vec<(String, (f64, f64, f64), PathBuf)> = if config.presets.is_empty() {
        vec![("all".to_string(), config.weights, config.out_dir.clone())]
    } else {
        config
            .presets
            .iter()
            .map(|p| {
                (p.name().to_string(), p.weights(), config.out_dir.join(p.name()))
            })
            .collect()
    };

    let body = || -> Result<Vec<GroupSummary>, SimulateError> {
        groups
            .iter()
            .enumerate()
            .map(|(g, (label, weights, dir))| {
                let seed_base =
                    config.seed.wrapping_add((g * config.count) as u64);
                run_group(config, label.clone(), *weights, dir.clone(), seed_base)
            })
            .collect()
    };

    match std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(workers) if workers >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| SimulateError::Problem(e.to_string()))?
            .install(body),
        _ => body(),
    }
}
