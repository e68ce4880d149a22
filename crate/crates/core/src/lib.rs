//! Coarse-grained protein conformation simulation via global optimization.
//!
//! A protein chain is reduced to its Cα trace. Three geometric requirements —
//! compactness, steric separation, and helix-like `i`/`i+2` spacing — are
//! combined into a weighted objective over backbone dihedral angles, and the
//! [Monkey Search](monkey_search) meta-heuristic minimizes it. Supporting
//! kernels cover backbone construction from (Φ, Ψ) angles, triplet-thickness
//! analysis, and optimal rigid superposition (RMSD).
//!
//! The crate is `no_std` (with `alloc`); all file formats and batch tooling
//! live in the companion `monkeyfold` crate.

#![no_std]

extern crate alloc;

pub mod align;
pub mod geometry;
pub mod monkey_search;
pub mod objective;
pub mod protein;
pub mod vec3;

pub use align::{rmsd, superpose, AlignError, RigidTransform, Superposition};
pub use geometry::{
    build_backbone, circumradius, distance, helix_triplet_count, thickness, BondGeometry,
    Conformation, GeometryError, ThicknessInterval,
};
pub use monkey_search::{run, Memory, MsError, MsOutcome, MsParams, Problem, Solution, Tree};
pub use objective::{ObjectiveParams, WeightPreset};
pub use protein::{
    AllowedRegion, AngleBox, DihedralConformation, PerturbParams, ProteinError, ProteinProblem,
};
pub use vec3::Vec3;
