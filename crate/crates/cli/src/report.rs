//! CSV score report: one row per conformation, one RMSD column per target.

use std::io::{self, Write};

/// One scored conformation. `rmsd` holds one cell per target, in target
/// order; `None` marks a length mismatch.
#[derive(Debug, Clone)]
pub struct ReportRow {
    pub id: String,
    pub weights: (f64, f64, f64),
    pub objective: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub thickness: f64,
    pub helix_triplets: usize,
    pub rmsd: Vec<Option<f64>>,
}

/// Comma-separated table: 8 fixed columns then one `rmsd_<target>` column per
/// target. Numbers carry 4 decimals; mismatched cells print as `nan`.
pub fn write_report(
    rows: &[ReportRow],
    targets: &[String],
    out: &mut impl Write,
) -> io::Result<()> {
    write!(out, "id,weights,f,f1,f2,f3,thickness,helix_triplets")?;
    for t in targets {
        write!(out, ",rmsd_{t}")?;
    }
    writeln!(out)?;

    for row in rows {
        debug_assert_eq!(row.rmsd.len(), targets.len());
        write!(
            out,
            "{},{:.4}/{:.4}/{:.4},{:.4},{:.4},{:.4},{:.4},{:.4},{}",
            row.id,
            row.weights.0,
            row.weights.1,
            row.weights.2,
            row.objective,
            row.f1,
            row.f2,
            row.f3,
            row.thickness,
            row.helix_triplets,
        )?;
        for cell in &row.rmsd {
            match cell {
                Some(v) => write!(out, ",{v:.4}")?,
                None => write!(out, ",nan")?,
            }
        }
        writeln!(out)?;
    }
    Ok(())
}
