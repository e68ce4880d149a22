//! PDB fixed-width text I/O: Cα-trace extraction and ATOM-record output.
//!
//! Parsing keeps MODEL 1 only (or the sole model), accepts ATOM records with
//! atom name `CA`, the requested chain, and altloc blank or `A`; HETATM is
//! ignored. Malformed records fail with their line number rather than being
//! skipped.

use monkeyfold_core::geometry::{Conformation, GeometryError};
use monkeyfold_core::vec3::Vec3;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PdbError {
    #[error("line {line}: ATOM record too short ({len} columns, need 54)")]
    RecordTooShort { line: usize, len: usize },
    #[error("line {line}: malformed {field} field {text:?}")]
    BadField { line: usize, field: &'static str, text: String },
    #[error("no CA atoms found")]
    NoCaAtoms,
    #[error("no CA atoms on chain '{chain}' (other chains carry CA records)")]
    ChainAbsent { chain: char },
    #[error("chain '{chain}' has {got} CA atoms; a trace needs at least 3")]
    ChainTooShort { chain: char, got: usize },
    #[error("residue {index} has a non-finite coordinate")]
    NonFinite { index: usize },
}

/// A target chain parsed from a PDB file.
#[derive(Debug, Clone)]
pub struct TargetStructure {
    /// 4-character PDB code from the HEADER record, or empty.
    pub id: String,
    pub chain: char,
    pub calpha: Conformation,
    pub residue_names: Vec<String>,
}

fn field<'a>(line: &'a str, lineno: usize, range: core::ops::Range<usize>) -> Result<&'a str, PdbError> {
    line.get(range).ok_or(PdbError::RecordTooShort { line: lineno, len: line.len() })
}

fn coord(line: &str, lineno: usize, range: core::ops::Range<usize>, name: &'static str) -> Result<f64, PdbError> {
    let text = field(line, lineno, range)?;
    text.trim().parse().map_err(|_| PdbError::BadField {
        line: lineno,
        field: name,
        text: text.trim().to_string(),
    })
}

/// Extract the Cα trace of one chain from PDB text.
pub fn parse_pdb_calpha(text: &str, chain: char) -> Result<TargetStructure, PdbError> {
    let mut id = String::new();
    let mut positions = Vec::new();
    let mut residue_names = Vec::new();
    let mut models_seen = 0usize;
    let mut any_ca = false;

    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.starts_with("HEADER") && id.is_empty() {
            if let Some(code) = line.get(62..66) {
                id = code.trim().to_ascii_lowercase();
            }
        } else if line.starts_with("MODEL") {
            models_seen += 1;
            if models_seen >= 2 {
                break;
            }
        } else if line.starts_with("ENDMDL") {
            if models_seen >= 1 {
                break; // first model finished
            }
        } else if line.starts_with("ATOM") {
            let name = field(line, lineno, 12..16)?.trim();
            if name != "CA" {
                continue;
            }
            any_ca = true;
            let altloc = field(line, lineno, 16..17)?.chars().next().unwrap();
            let chain_id = field(line, lineno, 21..22)?.chars().next().unwrap();
            if chain_id != chain || !(altloc == ' ' || altloc == 'A') {
                continue;
            }
            let x = coord(line, lineno, 30..38, "x")?;
            let y = coord(line, lineno, 38..46, "y")?;
            let z = coord(line, lineno, 46..54, "z")?;
            positions.push(Vec3::new(x, y, z));
            residue_names.push(field(line, lineno, 17..20)?.trim().to_string());
        }
    }

    if positions.is_empty() {
        return Err(if any_ca { PdbError::ChainAbsent { chain } } else { PdbError::NoCaAtoms });
    }
    let got = positions.len();
    let calpha = Conformation::new(positions).map_err(|e| match e {
        GeometryError::TooShort { .. } => PdbError::ChainTooShort { chain, got },
        GeometryError::NonFinite { index } => PdbError::NonFinite { index },
        _ => PdbError::ChainTooShort { chain, got },
    })?;
    Ok(TargetStructure { id, chain, calpha, residue_names })
}

/// Render a Cα trace as PDB text: one ATOM per residue (name ` CA `, residue
/// `ALA`, chain `A`, serial and residue numbers from 1, coordinates %8.3f,
/// occupancy 1.00, B-factor 0.00, element ` C`), closed by TER and END.
pub fn write_pdb(positions: &[Vec3]) -> Result<String, PdbError> {
    let mut out = String::new();
    for (i, p) in positions.iter().enumerate() {
        if !p.is_finite() {
            return Err(PdbError::NonFinite { index: i });
        }
        out.push_str(&format!(
            "ATOM  {serial:>5}  CA  ALA A{res:>4}    {x:>8.3}{y:>8.3}{z:>8.3}  1.00  0.00           C\n",
            serial = i + 1,
            res = i + 1,
            x = p.x,
            y = p.y,
            z = p.z,
        ));
    }
    if !positions.is_empty() {
        out.push_str(&format!(
            "TER   {serial:>5}      ALA A{res:>4}\n",
            serial = positions.len() + 1,
            res = positions.len(),
        ));
    }
    out.push_str("END\n");
    Ok(out)
}
