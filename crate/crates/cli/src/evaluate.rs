//! All-pairs RMSD scoring of simulated conformations against target chains.

use std::fs;
use std::path::{Path, PathBuf};

use monkeyfold_core::align::rmsd;
use monkeyfold_core::geometry::{helix_triplet_count, thickness, ThicknessInterval};
use monkeyfold_core::objective::{clash_term, compactness_term, evaluate as score, helix_term, ObjectiveParams};
use thiserror::Error;

use crate::pdb::{self, TargetStructure};
use crate::report::ReportRow;

#[derive(Debug, Error)]
pub enum EvaluateError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}, line {line}: chain map entries are `<target> <chain>`")]
    ChainMap { path: PathBuf, line: usize },
    #[error("{path}: {source}")]
    Pdb {
        path: PathBuf,
        #[source]
        source: pdb::PdbError,
    },
    #[error("no targets listed in the chain map")]
    NoTargets,
    #[error("no .pdb conformations under {0}")]
    NoConformations(PathBuf),
}

/// Min/mean/max RMSD of the matching conformations against one target.
#[derive(Debug, Clone)]
pub struct TargetAggregate {
    pub id: String,
    pub cells: usize,
    pub min: f64,
    pub mean: f64,
    pub max: f64,
}

#[derive(Debug)]
pub struct EvaluateOutcome {
    pub target_ids: Vec<String>,
    pub rows: Vec<ReportRow>,
    /// Human-readable length-mismatch notes, one per skipped pair.
    pub mismatches: Vec<String>,
    pub aggregates: Vec<TargetAggregate>,
    /// Per conformation: closest target and its RMSD, when any pair matched.
    pub best_per_conf: Vec<(String, Option<(String, f64)>)>,
}

/// Chain map: one `<target> <chain>` pair per line, `#` comments. The target
/// names `<name>` (resolved as `<name>.pdb`) or a literal `*.pdb` filename.
pub fn parse_chain_map(text: &str, path: &Path) -> Result<Vec<(String, char)>, EvaluateError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(name), Some(chain), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(EvaluateError::ChainMap { path: path.to_path_buf(), line: i + 1 });
        };
        if chain.chars().count() != 1 {
            return Err(EvaluateError::ChainMap { path: path.to_path_buf(), line: i + 1 });
        }
        entries.push((name.to_string(), chain.chars().next().unwrap()));
    }
    if entries.is_empty() {
        return Err(EvaluateError::NoTargets);
    }
    Ok(entries)
}

fn read(path: &Path) -> Result<String, EvaluateError> {
    fs::read_to_string(path)
        .map_err(|source| EvaluateError::Io { path: path.to_path_buf(), source })
}

fn load_target(dir: &Path, name: &str, chain: char) -> Result<TargetStructure, EvaluateError> {
    let file = if name.ends_with(".pdb") { name.to_string() } else { format!("{name}.pdb") };
    let path = dir.join(file);
    let text = read(&path)?;
    let mut target = pdb::parse_pdb_calpha(&text, chain)
        .map_err(|source| EvaluateError::Pdb { path: path.clone(), source })?;
    target.id = name.trim_end_matches(".pdb").to_string();
    Ok(target)
}

fn conformation_files(dir: &Path) -> Result<Vec<PathBuf>, EvaluateError> {
    let entries = fs::read_dir(dir)
        .map_err(|source| EvaluateError::Io { path: dir.to_path_buf(), source })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "pdb"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(EvaluateError::NoConformations(dir.to_path_buf()));
    }
    Ok(files)
}

/// Score every conformation in `conf_dir` (chain A) against every mapped
/// target. Length mismatches are recorded and skipped; the run continues.
pub fn evaluate(
    conf_dir: &Path,
    targets_dir: &Path,
    chains_file: &Path,
    params: &ObjectiveParams,
) -> Result<EvaluateOutcome, EvaluateError> {
    let map = parse_chain_map(&read(chains_file)?, chains_file)?;
    let targets: Vec<TargetStructure> = map
        .iter()
        .map(|(name, chain)| load_target(targets_dir, name, *chain))
        .collect::<Result<_, _>>()?;
    let target_ids: Vec<String> = targets.iter().map(|t| t.id.clone()).collect();

    let interval = ThicknessInterval::default();
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut best_per_conf = Vec::new();

    for path in conformation_files(conf_dir)? {
        let text = read(&path)?;
        let conf = pdb::parse_pdb_calpha(&text, 'A')
            .map_err(|source| EvaluateError::Pdb { path: path.clone(), source })?
            .calpha;
        let id = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();

        let mut cells = Vec::with_capacity(targets.len());
        let mut best: Option<(String, f64)> = None;
        for target in &targets {
            if target.calpha.len() != conf.len() {
                mismatches.push(format!(
                    "{id} vs {}: length mismatch ({} vs {})",
                    target.id,
                    conf.len(),
                    target.calpha.len()
                ));
                cells.push(None);
                continue;
            }
            let d = rmsd(conf.positions(), target.calpha.positions())
                .expect("equal lengths checked");
            if best.as_ref().is_none_or(|(_, b)| d < *b) {
                best = Some((target.id.clone(), d));
            }
            cells.push(Some(d));
        }

        rows.push(ReportRow {
            id: id.clone(),
            weights: (params.gamma1, params.gamma2, params.gamma3),
            objective: score(&conf, params),
            f1: compactness_term(&conf),
            f2: clash_term(&conf, params.th),
            f3: helix_term(&conf, params.c),
            thickness: thickness(&conf),
            helix_triplets: helix_triplet_count(&conf, &interval),
            rmsd: cells,
        });
        best_per_conf.push((id, best));
    }

    let aggregates = target_ids
        .iter()
        .enumerate()
        .map(|(t, id)| {
            let values: Vec<f64> = rows.iter().filter_map(|r| r.rmsd[t]).collect();
            let cells = values.len();
            let (mut min, mut max, mut sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
            for v in &values {
                min = min.min(*v);
                max = max.max(*v);
                sum += v;
            }
            TargetAggregate {
                id: id.clone(),
                cells,
                min,
                mean: if cells == 0 { f64::NAN } else { sum / cells as f64 },
                max,
            }
        })
        .collect();

    Ok(EvaluateOutcome { target_ids, rows, mismatches, aggregates, best_per_conf })
}
