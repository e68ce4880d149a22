//! Regenerates the bundled synthetic target: a 65-residue ideal α-helix
//! trace, written as PDB to stdout.
//!
//!     cargo run -p monkeyfold --example make_helix_target > fixtures/helix65.pdb

use monkeyfold::pdb::write_pdb;
use monkeyfold_core::geometry::{build_backbone, BondGeometry};

fn main() {
    let n = 65;
    let phi = vec![(-57.0f64).to_radians(); n - 2];
    let psi = vec![(-47.0f64).to_radians(); n - 2];
    let conf = build_backbone(&phi, &psi, &BondGeometry::default()).expect("valid angles");
    print!("{}", write_pdb(conf.positions()).expect("finite coordinates"));
}
