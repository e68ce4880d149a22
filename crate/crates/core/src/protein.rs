//! The protein model as a search problem: dihedral-angle variables bounded to
//! naturally occurring (Φ, Ψ) regions, a perturbation catalog, angle-space
//! distance, and the angles → coordinates → objective pipeline.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::geometry::{build_backbone, BondGeometry, Conformation};
use crate::monkey_search::{Memory, Problem, Solution};
use crate::objective::{self, ObjectiveParams};

const TWO_PI: f64 = 2.0 * PI;

/// Wrap an angle into (−π, π]. Values already inside come back unchanged.
pub fn wrap_angle(a: f64) -> f64 {
    if a > -PI && a <= PI {
        return a;
    }
    let mut x = (PI - a) % TWO_PI;
    if x < 0.0 {
        x += TWO_PI;
    }
    PI - x
}

/// Absolute circular difference of two angles, in [0, π]. Exactly symmetric.
pub fn circular_difference(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % TWO_PI;
    d.min(TWO_PI - d)
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProteinError {
    TooShort { n: usize },
    EmptyRegion,
    BadBox(&'static str),
    BadParams(&'static str),
    AngleCountMismatch { phi: usize, psi: usize },
}

impl fmt::Display for ProteinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProteinError::TooShort { n } => write!(f, "chain needs at least 3 residues, got {n}"),
            ProteinError::EmptyRegion => write!(f, "allowed region has no boxes"),
            ProteinError::BadBox(msg) => write!(f, "invalid angle box: {msg}"),
            ProteinError::BadParams(msg) => write!(f, "invalid protein problem: {msg}"),
            ProteinError::AngleCountMismatch { phi, psi } => {
                write!(f, "phi/psi length mismatch: {phi} vs {psi}")
            }
        }
    }
}

impl core::error::Error for ProteinError {}

/// Axis-aligned rectangle of allowed (Φ, Ψ) pairs, radians, inside [−π, π].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleBox {
    pub phi_lo: f64,
    pub phi_hi: f64,
    pub psi_lo: f64,
    pub psi_hi: f64,
}

impl AngleBox {
    pub fn new(phi_lo: f64, phi_hi: f64, psi_lo: f64, psi_hi: f64) -> Result<Self, ProteinError> {
        let b = AngleBox { phi_lo, phi_hi, psi_lo, psi_hi };
        if ![phi_lo, phi_hi, psi_lo, psi_hi].iter().all(|a| a.is_finite() && a.abs() <= PI) {
            return Err(ProteinError::BadBox("bounds must lie in [-pi, pi]"));
        }
        if phi_lo >= phi_hi || psi_lo >= psi_hi {
            return Err(ProteinError::BadBox("box must have positive area"));
        }
        Ok(b)
    }

    pub fn from_degrees(
        phi_lo: f64,
        phi_hi: f64,
        psi_lo: f64,
        psi_hi: f64,
    ) -> Result<Self, ProteinError> {
        AngleBox::new(
            phi_lo.to_radians(),
            phi_hi.to_radians(),
            psi_lo.to_radians(),
            psi_hi.to_radians(),
        )
    }

    pub fn area(&self) -> f64 {
        (self.phi_hi - self.phi_lo) * (self.psi_hi - self.psi_lo)
    }

    pub fn contains(&self, phi: f64, psi: f64) -> bool {
        phi >= self.phi_lo && phi <= self.phi_hi && psi >= self.psi_lo && psi <= self.psi_hi
    }

    /// Nearest point of the box (per-coordinate, circular metric) and the
    /// squared circular distance to it.
    fn project(&self, phi: f64, psi: f64) -> (f64, f64, f64) {
        let clamp_circular = |x: f64, lo: f64, hi: f64| {
            if x >= lo && x <= hi {
                (x, 0.0)
            } else {
                let d_lo = circular_difference(x, lo);
                let d_hi = circular_difference(x, hi);
                if d_lo <= d_hi { (lo, d_lo) } else { (hi, d_hi) }
            }
        };
        let (p, dp) = clamp_circular(phi, self.phi_lo, self.phi_hi);
        let (s, ds) = clamp_circular(psi, self.psi_lo, self.psi_hi);
        (p, s, dp * dp + ds * ds)
    }

    fn sample(&self, rng: &mut dyn rand::RngCore) -> (f64, f64) {
        (
            rng.random_range(self.phi_lo..=self.phi_hi),
            rng.random_range(self.psi_lo..=self.psi_hi),
        )
    }
}

/// Union of angle boxes bounding the optimization variables.
///
/// The default covers the two dominant basins observed in real chains: a
/// helical box Φ ∈ [−160°, −45°] × Ψ ∈ [−70°, −10°] and an extended box
/// Φ ∈ [−170°, −50°] × Ψ ∈ [90°, 180°].
#[derive(Debug, Clone, PartialEq)]
pub struct AllowedRegion {
    boxes: Vec<AngleBox>,
}

impl Default for AllowedRegion {
    fn default() -> Self {
        AllowedRegion {
            boxes: alloc::vec![
                AngleBox::from_degrees(-160.0, -45.0, -70.0, -10.0).unwrap(),
                AngleBox::from_degrees(-170.0, -50.0, 90.0, 180.0).unwrap(),
            ],
        }
    }
}

impl AllowedRegion {
    pub fn new(boxes: Vec<AngleBox>) -> Result<Self, ProteinError> {
        if boxes.is_empty() {
            return Err(ProteinError::EmptyRegion);
        }
        Ok(AllowedRegion { boxes })
    }

    pub fn boxes(&self) -> &[AngleBox] {
        &self.boxes
    }

    pub fn contains(&self, phi: f64, psi: f64) -> bool {
        self.boxes.iter().any(|b| b.contains(phi, psi))
    }

    /// Uniform sample: box picked proportionally to area, point uniform
    /// inside it.
    pub fn sample(&self, rng: &mut dyn rand::RngCore) -> (f64, f64) {
        let total: f64 = self.boxes.iter().map(AngleBox::area).sum();
        let mut u = rng.random_range(0.0..total);
        for b in &self.boxes {
            if u < b.area() {
                return b.sample(rng);
            }
            u -= b.area();
        }
        self.boxes[self.boxes.len() - 1].sample(rng)
    }

    /// Project a wrapped (Φ, Ψ) pair onto the nearest point of the nearest
    /// box. Pairs already inside come back unchanged.
    pub fn clamp(&self, phi: f64, psi: f64) -> (f64, f64) {
        let phi = wrap_angle(phi);
        let psi = wrap_angle(psi);
        if self.contains(phi, psi) {
            return (phi, psi);
        }
        let mut best = (phi, psi, f64::INFINITY);
        for b in &self.boxes {
            let candidate = b.project(phi, psi);
            if candidate.2 < best.2 {
                best = candidate;
            }
        }
        (best.0, best.1)
    }
}

/// The dihedral-angle vector of a chain of `n` residues: one (Φ, Ψ) pair per
/// interior residue, so both lists have length n − 2.
#[derive(Debug, Clone, PartialEq)]
pub struct DihedralConformation {
    phi: Vec<f64>,
    psi: Vec<f64>,
}

impl DihedralConformation {
    pub fn new(phi: Vec<f64>, psi: Vec<f64>) -> Result<Self, ProteinError> {
        if phi.len() != psi.len() {
            return Err(ProteinError::AngleCountMismatch { phi: phi.len(), psi: psi.len() });
        }
        if phi.is_empty() {
            return Err(ProteinError::TooShort { n: phi.len() + 2 });
        }
        Ok(DihedralConformation { phi, psi })
    }

    /// Chain length (residue count).
    pub fn n(&self) -> usize {
        self.phi.len() + 2
    }

    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    pub fn psi(&self) -> &[f64] {
        &self.psi
    }

    /// Number of free variables, 2·(n−2).
    pub fn dim(&self) -> usize {
        2 * self.phi.len()
    }

    pub fn build(&self, geom: &BondGeometry) -> Conformation {
        build_backbone(&self.phi, &self.psi, geom).expect("angle vector invariant")
    }

    /// Max absolute circular difference over all angle slots.
    pub fn angular_distance(&self, other: &DihedralConformation) -> f64 {
        assert_eq!(self.phi.len(), other.phi.len(), "comparing different chain lengths");
        let mut max: f64 = 0.0;
        for (a, b) in self.phi.iter().zip(&other.phi) {
            max = max.max(circular_difference(*a, *b));
        }
        for (a, b) in self.psi.iter().zip(&other.psi) {
            max = max.max(circular_difference(*a, *b));
        }
        max
    }
}

/// Uniformly random angle vector for an `n`-residue chain.
pub fn random_conformation(
    n: usize,
    region: &AllowedRegion,
    rng: &mut dyn rand::RngCore,
) -> DihedralConformation {
    assert!(n >= 3, "need at least 3 residues");
    let mut phi = Vec::with_capacity(n - 2);
    let mut psi = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let (p, s) = region.sample(rng);
        phi.push(p);
        psi.push(s);
    }
    DihedralConformation { phi, psi }
}

/// Perturbation settings. All moves clamp their result into the region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbParams {
    /// Standard deviation of the single-angle Gaussian nudge (radians).
    pub nudge_sigma: f64,
    /// Largest window (in residues) for segment re-randomization and the
    /// memory-blend copy.
    pub max_window: usize,
}

impl Default for PerturbParams {
    fn default() -> Self {
        PerturbParams { nudge_sigma: 15.0f64.to_radians(), max_window: 5 }
    }
}

/// Protein conformation simulation as a [`Problem`].
#[derive(Debug, Clone)]
pub struct ProteinProblem {
    n: usize,
    region: AllowedRegion,
    geometry: BondGeometry,
    objective: ObjectiveParams,
    perturbation: PerturbParams,
}

impl ProteinProblem {
    pub fn new(
        n: usize,
        region: AllowedRegion,
        geometry: BondGeometry,
        objective: ObjectiveParams,
        perturbation: PerturbParams,
    ) -> Result<Self, ProteinError> {
        if n < 3 {
            return Err(ProteinError::TooShort { n });
        }
        geometry.validate().map_err(|_| ProteinError::BadParams("bond geometry"))?;
        objective.validate().map_err(ProteinError::BadParams)?;
        if !(perturbation.nudge_sigma.is_finite() && perturbation.nudge_sigma >= 0.0) {
            return Err(ProteinError::BadParams("nudge sigma must be non-negative"));
        }
        if perturbation.max_window == 0 {
            return Err(ProteinError::BadParams("max window must be at least 1"));
        }
        Ok(ProteinProblem { n, region, geometry, objective, perturbation })
    }

    /// Chain with default bond geometry and perturbation settings.
    pub fn with_defaults(n: usize, objective: ObjectiveParams) -> Result<Self, ProteinError> {
        ProteinProblem::new(
            n,
            AllowedRegion::default(),
            BondGeometry::default(),
            objective,
            PerturbParams::default(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn region(&self) -> &AllowedRegion {
        &self.region
    }

    pub fn geometry(&self) -> &BondGeometry {
        &self.geometry
    }

    pub fn objective_params(&self) -> &ObjectiveParams {
        &self.objective
    }

    pub fn build(&self, angles: &DihedralConformation) -> Conformation {
        angles.build(&self.geometry)
    }

    pub fn evaluate(&self, angles: &DihedralConformation) -> f64 {
        objective::evaluate(&self.build(angles), &self.objective)
    }

    /// Move (a): Gaussian nudge of one angle slot, clamped back into the
    /// region.
    fn nudge(&self, angles: &DihedralConformation, rng: &mut dyn rand::RngCore) -> DihedralConformation {
        let mut out = angles.clone();
        let m = out.phi.len();
        let slot = rng.random_range(0..2 * m);
        let delta = if self.perturbation.nudge_sigma > 0.0 {
            let z: f64 = rng.sample(StandardNormal);
            z * self.perturbation.nudge_sigma
        } else {
            0.0
        };
        let k = slot % m;
        if slot < m {
            out.phi[k] += delta;
        } else {
            out.psi[k] += delta;
        }
        let (p, s) = self.region.clamp(out.phi[k], out.psi[k]);
        out.phi[k] = p;
        out.psi[k] = s;
        out
    }

    /// Move (b): re-randomize a short window of consecutive residues.
    fn resample_segment(
        &self,
        angles: &DihedralConformation,
        rng: &mut dyn rand::RngCore,
    ) -> DihedralConformation {
        let mut out = angles.clone();
        let m = out.phi.len();
        let len = rng.random_range(1..=self.perturbation.max_window.min(m));
        let start = rng.random_range(0..=m - len);
        for k in start..start + len {
            let (p, s) = self.region.sample(rng);
            out.phi[k] = p;
            out.psi[k] = s;
        }
        out
    }

    /// Move (c): copy a contiguous residue window from a random memory
    /// solution. Falls back to the nudge when the memory is empty.
    fn blend_from_memory(
        &self,
        angles: &DihedralConformation,
        memory: &Memory<DihedralConformation>,
        rng: &mut dyn rand::RngCore,
    ) -> DihedralConformation {
        if memory.is_empty() {
            return self.nudge(angles, rng);
        }
        let mut out = angles.clone();
        let m = out.phi.len();
        let donor = &memory.solutions()[rng.random_range(0..memory.len())].point;
        let len = rng.random_range(1..=self.perturbation.max_window.min(m));
        let start = rng.random_range(0..=m - len);
        out.phi[start..start + len].copy_from_slice(&donor.phi[start..start + len]);
        out.psi[start..start + len].copy_from_slice(&donor.psi[start..start + len]);
        out
    }
}

impl Problem for ProteinProblem {
    type Point = DihedralConformation;

    fn random_point(&self, rng: &mut dyn rand::RngCore) -> DihedralConformation {
        random_conformation(self.n, &self.region, rng)
    }

    fn perturb(
        &self,
        point: &DihedralConformation,
        memory: &Memory<DihedralConformation>,
        rng: &mut dyn rand::RngCore,
    ) -> DihedralConformation {
        match rng.random_range(0..3u8) {
            0 => self.nudge(point, rng),
            1 => self.resample_segment(point, rng),
            _ => self.blend_from_memory(point, memory, rng),
        }
    }

    fn objective(&self, point: &DihedralConformation) -> f64 {
        self.evaluate(point)
    }

    fn distance(&self, a: &DihedralConformation, b: &DihedralConformation) -> f64 {
        a.angular_distance(b)
    }

    /// Root blend: every residue keeps its (Φ, Ψ) pair together and copies it
    /// from a uniformly random memory solution.
    fn combine(
        &self,
        memory: &[Solution<DihedralConformation>],
        rng: &mut dyn rand::RngCore,
    ) -> DihedralConformation {
        assert!(!memory.is_empty(), "combine needs a non-empty memory");
        let m = self.n - 2;
        let mut phi = Vec::with_capacity(m);
        let mut psi = Vec::with_capacity(m);
        for k in 0..m {
            let donor = &memory[rng.random_range(0..memory.len())].point;
            phi.push(donor.phi[k]);
            psi.push(donor.psi[k]);
        }
        DihedralConformation { phi, psi }
    }
}
