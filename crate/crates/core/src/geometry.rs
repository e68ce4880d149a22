//! Pure geometric kernel: Cα traces, backbone construction from dihedral
//! angles, circumradius/thickness computations, helix-triplet statistics.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use libm::{atan2, cos, sin};
#[cfg(test)]
use libm::sqrt;

use crate::vec3::Vec3;

/// Fixed value used for the two chain-terminal torsions that the angle vector
/// does not carry (the first Ψ and the last Φ). Their values do not affect any
/// pairwise Cα distance; a constant keeps coordinates reproducible.
const TERMINAL_TORSION: f64 = PI;

#[derive(Debug, Clone, PartialEq)]
pub enum GeometryError {
    /// Fewer than three residues.
    TooShort { n: usize },
    /// A coordinate is NaN or infinite.
    NonFinite { index: usize },
    /// Φ/Ψ lists disagree in length.
    AngleCountMismatch { phi: usize, psi: usize },
    /// A bond length or bond angle is out of range.
    InvalidBondGeometry(&'static str),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::TooShort { n } => {
                write!(f, "conformation needs at least 3 residues, got {n}")
            }
            GeometryError::NonFinite { index } => {
                write!(f, "non-finite coordinate at residue {index}")
            }
            GeometryError::AngleCountMismatch { phi, psi } => {
                write!(f, "phi/psi length mismatch: {phi} vs {psi}")
            }
            GeometryError::InvalidBondGeometry(what) => write!(f, "invalid bond geometry: {what}"),
        }
    }
}

impl core::error::Error for GeometryError {}

/// Ordered Cα trace of a chain (positions in Å).
#[derive(Debug, Clone, PartialEq)]
pub struct Conformation {
    positions: Vec<Vec3>,
}

impl Conformation {
    /// At least three residues, all coordinates finite.
    pub fn new(positions: Vec<Vec3>) -> Result<Self, GeometryError> {
        if positions.len() < 3 {
            return Err(GeometryError::TooShort { n: positions.len() });
        }
        if let Some(i) = positions.iter().position(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite { index: i });
        }
        Ok(Conformation { positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[Vec3] {
        &self.positions
    }
}

/// Bond lengths (Å), bond angles (radians) and the peptide-bond torsion ω
/// used to build N–Cα–C backbones.
///
/// Defaults are the standard trans-peptide values; ω = π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BondGeometry {
    pub len_n_ca: f64,
    pub len_ca_c: f64,
    pub len_c_n: f64,
    pub ang_n_ca_c: f64,
    pub ang_ca_c_n: f64,
    pub ang_c_n_ca: f64,
    pub omega: f64,
}

impl Default for BondGeometry {
    fn default() -> Self {
        BondGeometry {
            len_n_ca: 1.458,
            len_ca_c: 1.525,
            len_c_n: 1.329,
            ang_n_ca_c: 111.0f64.to_radians(),
            ang_ca_c_n: 116.6f64.to_radians(),
            ang_c_n_ca: 121.9f64.to_radians(),
            omega: PI,
        }
    }
}

impl BondGeometry {
    /// Lengths positive, bond angles strictly inside (0, π), ω finite.
    pub fn validate(&self) -> Result<(), GeometryError> {
        let lengths_ok = [self.len_n_ca, self.len_ca_c, self.len_c_n]
            .iter()
            .all(|l| l.is_finite() && *l > 0.0);
        if !lengths_ok {
            return Err(GeometryError::InvalidBondGeometry("bond length must be positive"));
        }
        let angles_ok = [self.ang_n_ca_c, self.ang_ca_c_n, self.ang_c_n_ca]
            .iter()
            .all(|a| a.is_finite() && *a > 0.0 && *a < PI);
        if !angles_ok {
            return Err(GeometryError::InvalidBondGeometry("bond angle must lie in (0, pi)"));
        }
        if !self.omega.is_finite() {
            return Err(GeometryError::InvalidBondGeometry("omega must be finite"));
        }
        Ok(())
    }
}

/// Closed interval of triplet-thickness values typical of α-helices (Å).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThicknessInterval {
    pub lo: f64,
    pub hi: f64,
}

impl Default for ThicknessInterval {
    fn default() -> Self {
        ThicknessInterval { lo: 2.50, hi: 2.80 }
    }
}

impl ThicknessInterval {
    pub fn new(lo: f64, hi: f64) -> Option<Self> {
        (lo > 0.0 && lo < hi).then_some(ThicknessInterval { lo, hi })
    }

    pub fn contains(&self, r: f64) -> bool {
        r >= self.lo && r <= self.hi
    }
}

/// Euclidean distance between two points.
pub fn distance(a: Vec3, b: Vec3) -> f64 {
    (a - b).norm()
}

/// Interior angle at `b` of the triangle a–b–c, in radians.
pub fn angle(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    let u = a - b;
    let v = c - b;
    let cos = u.dot(&v) / (u.norm() * v.norm());
    libm::acos(cos.clamp(-1.0, 1.0))
}

/// Signed torsion angle of the chain a–b–c–d about the b–c axis, in (−π, π].
pub fn dihedral(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> f64 {
    let b1 = b - a;
    let b2 = c - b;
    let b3 = d - c;
    let n1 = b1.cross(&b2);
    let n2 = b2.cross(&b3);
    let b2u = b2.normalized().unwrap_or(Vec3::ZERO);
    atan2(b2u.dot(&n1.cross(&n2)), n1.dot(&n2))
}

/// Place the next atom of a chain: distance `r` from `c`, bond angle `theta`
/// at `c`, torsion `tau` for the chain a–b–c–new.
fn place_atom(a: Vec3, b: Vec3, c: Vec3, r: f64, theta: f64, tau: f64) -> Vec3 {
    let bc = (c - b).normalized().expect("degenerate bond");
    let n = (b - a).cross(&bc).normalized().expect("collinear frame");
    let m = n.cross(&bc);
    let d = Vec3::new(-r * cos(theta), r * sin(theta) * cos(tau), r * sin(theta) * sin(tau));
    c + bc * d.x + m * d.y + n * d.z
}

/// Build the N–Cα–C backbone for a chain of `phi.len() + 2` residues and
/// return its Cα trace.
///
/// The angle slices carry one (Φ, Ψ) pair per interior residue; torsions are
/// consumed in the cycle Ψ, ω, Φ as each residue's N, Cα, C are placed. The
/// first three atoms fix the frame: N₁ at the origin, Cα₁ on +x, C₁ in the
/// xy-plane with positive y. Consecutive Cα–Cα distances depend only on the
/// bond geometry, not on the angles.
pub fn build_backbone(
    phi: &[f64],
    psi: &[f64],
    geom: &BondGeometry,
) -> Result<Conformation, GeometryError> {
    build_backbone_atoms(phi, psi, geom).map(|atoms| {
        let cas = (0..phi.len() + 2).map(|i| atoms[3 * i + 1]).collect();
        Conformation { positions: cas }
    })
}

/// Full backbone (N, Cα, C per residue, in order). Shares the frame
/// convention of [`build_backbone`].
pub fn build_backbone_atoms(
    phi: &[f64],
    psi: &[f64],
    geom: &BondGeometry,
) -> Result<Vec<Vec3>, GeometryError> {
    if phi.len() != psi.len() {
        return Err(GeometryError::AngleCountMismatch { phi: phi.len(), psi: psi.len() });
    }
    if phi.is_empty() {
        return Err(GeometryError::TooShort { n: 2 });
    }
    geom.validate()?;
    if phi.iter().chain(psi).any(|a| !a.is_finite()) {
        return Err(GeometryError::InvalidBondGeometry("non-finite dihedral angle"));
    }

    let n = phi.len() + 2;
    let mut atoms = Vec::with_capacity(3 * n);
    atoms.push(Vec3::ZERO);
    atoms.push(Vec3::new(geom.len_n_ca, 0.0, 0.0));
    atoms.push(
        atoms[1]
            + Vec3::new(-cos(geom.ang_n_ca_c), sin(geom.ang_n_ca_c), 0.0) * geom.len_ca_c,
    );

    // Cycle c extends the chain by residue c+1. Its Ψ torsion belongs to
    // residue c, its Φ torsion to residue c+1; the pair stored at index k
    // covers interior residue k+2.
    for c in 1..n {
        let t_psi = if c == 1 { TERMINAL_TORSION } else { psi[c - 2] };
        let t_phi = if c == n - 1 { TERMINAL_TORSION } else { phi[c - 1] };
        let k = atoms.len();
        atoms.push(place_atom(
            atoms[k - 3], atoms[k - 2], atoms[k - 1],
            geom.len_c_n, geom.ang_ca_c_n, t_psi,
        ));
        atoms.push(place_atom(
            atoms[k - 2], atoms[k - 1], atoms[k],
            geom.len_n_ca, geom.ang_c_n_ca, geom.omega,
        ));
        atoms.push(place_atom(
            atoms[k - 1], atoms[k], atoms[k + 1],
            geom.len_ca_c, geom.ang_n_ca_c, t_phi,
        ));
    }
    Ok(atoms)
}

/// Radius of the circle through three points; `f64::INFINITY` for collinear
/// or coincident triplets.
pub fn circumradius(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    let ab = distance(a, b);
    let bc = distance(b, c);
    let ca = distance(c, a);
    let double_area = (b - a).cross(&(c - a)).norm();
    if double_area == 0.0 {
        return f64::INFINITY;
    }
    ab * bc * ca / (2.0 * double_area)
}

/// Thickness Δ(X): minimum circumradius over all residue triplets. O(n³).
pub fn thickness(conf: &Conformation) -> f64 {
    let p = conf.positions();
    let mut min = f64::INFINITY;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            for k in j + 1..p.len() {
                let r = circumradius(p[i], p[j], p[k]);
                if r < min {
                    min = r;
                }
            }
        }
    }
    min
}

/// Number of residue triplets whose circumradius falls inside the closed
/// interval `iv`.
pub fn helix_triplet_count(conf: &Conformation, iv: &ThicknessInterval) -> usize {
    let p = conf.positions();
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            for k in j + 1..p.len() {
                if iv.contains(circumradius(p[i], p[j], p[k])) {
                    count += 1;
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Consecutive Cα–Cα distance for the default bond geometry, frozen from
    /// the independent three-bond evaluation in `ca_ca_oracle`.
    const CA_CA: f64 = 3.808986496899;

    /// Independent evaluation of the Cα(i)→C→N→Cα(i+1) chain in a local
    /// frame: C at the origin, N on +x, Cα(i) in the xy-plane, Cα(i+1)
    /// reflected to the opposite side for the trans (ω = π) peptide.
    fn ca_ca_oracle(geom: &BondGeometry) -> f64 {
        let ca_prev = Vec3::new(
            geom.len_ca_c * cos(geom.ang_ca_c_n),
            geom.len_ca_c * sin(geom.ang_ca_c_n),
            0.0,
        );
        let n = Vec3::new(geom.len_c_n, 0.0, 0.0);
        let ca_next = n
            + Vec3::new(
                geom.len_n_ca * cos(PI - geom.ang_c_n_ca),
                -geom.len_n_ca * sin(PI - geom.ang_c_n_ca),
                0.0,
            );
        distance(ca_prev, ca_next)
    }

    fn random_angles(rng: &mut ChaCha8Rng, m: usize) -> (Vec<f64>, Vec<f64>) {
        let phi = (0..m).map(|_| rng.random_range(-PI..PI)).collect();
        let psi = (0..m).map(|_| rng.random_range(-PI..PI)).collect();
        (phi, psi)
    }

    fn random_rotation(rng: &mut ChaCha8Rng) -> [[f64; 3]; 3] {
        // Rodrigues rotation about a random axis
        let axis = loop {
            let v = Vec3::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            if let Some(u) = v.normalized() {
                break u;
            }
        };
        let t = rng.random_range(-PI..PI);
        let (c, s) = (cos(t), sin(t));
        let (x, y, z) = (axis.x, axis.y, axis.z);
        [
            [c + x * x * (1.0 - c), x * y * (1.0 - c) - z * s, x * z * (1.0 - c) + y * s],
            [y * x * (1.0 - c) + z * s, c + y * y * (1.0 - c), y * z * (1.0 - c) - x * s],
            [z * x * (1.0 - c) - y * s, z * y * (1.0 - c) + x * s, c + z * z * (1.0 - c)],
        ]
    }

    fn rotate(m: &[[f64; 3]; 3], v: Vec3) -> Vec3 {
        Vec3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    #[test]
    fn distance_basics() {
        assert_eq!(distance(Vec3::ZERO, Vec3::ZERO), 0.0);
        assert_eq!(distance(Vec3::ZERO, Vec3::new(3.0, 4.0, 0.0)), 5.0);
        assert_eq!(distance(Vec3::new(1.0, 2.0, 3.0), Vec3::new(4.0, 6.0, 3.0)), 5.0);
    }

    #[test]
    fn placement_reproduces_requested_internal_coordinates() {
        let a = Vec3::new(0.1, -0.3, 0.2);
        let b = Vec3::new(1.5, 0.0, 0.0);
        let c = Vec3::new(2.0, 1.3, -0.4);
        for &tau in &[0.0, 0.5, -2.0, PI, -PI / 2.0] {
            let d = place_atom(a, b, c, 1.4, 1.9, tau);
            assert!((distance(c, d) - 1.4).abs() < 1e-12);
            assert!((angle(b, c, d) - 1.9).abs() < 1e-12);
            let measured = dihedral(a, b, c, d);
            let diff = atan2(sin(measured - tau), cos(measured - tau));
            assert!(diff.abs() < 1e-12, "tau={tau} measured={measured}");
        }
    }

    #[test]
    fn pinned_ca_ca_constant_matches_independent_oracle() {
        assert!((ca_ca_oracle(&BondGeometry::default()) - CA_CA).abs() < 1e-10);
    }

    #[test]
    fn consecutive_ca_distances_are_constant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.random_range(3..=24);
            let (phi, psi) = random_angles(&mut rng, n - 2);
            let conf = build_backbone(&phi, &psi, &BondGeometry::default()).unwrap();
            for w in conf.positions().windows(2) {
                assert!((distance(w[0], w[1]) - CA_CA).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn frame_convention_is_canonical() {
        let conf = build_backbone(&[-1.0], &[0.5], &BondGeometry::default()).unwrap();
        let atoms = build_backbone_atoms(&[-1.0], &[0.5], &BondGeometry::default()).unwrap();
        assert_eq!(atoms[0], Vec3::ZERO);
        assert_eq!(atoms[1].y, 0.0);
        assert_eq!(atoms[1].z, 0.0);
        assert!(atoms[1].x > 0.0);
        assert_eq!(atoms[2].z, 0.0);
        assert!(atoms[2].y > 0.0);
        assert_eq!(conf.positions()[0], atoms[1]);
    }

    #[test]
    fn backbone_atoms_satisfy_all_internal_coordinates() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let geom = BondGeometry::default();
        let (phi, psi) = random_angles(&mut rng, 8);
        let atoms = build_backbone_atoms(&phi, &psi, &geom).unwrap();
        let lens = [geom.len_n_ca, geom.len_ca_c, geom.len_c_n];
        let angs = [geom.ang_n_ca_c, geom.ang_ca_c_n, geom.ang_c_n_ca];
        for i in 0..atoms.len() - 1 {
            assert!((distance(atoms[i], atoms[i + 1]) - lens[i % 3]).abs() < 1e-12);
        }
        for i in 0..atoms.len() - 2 {
            assert!((angle(atoms[i], atoms[i + 1], atoms[i + 2]) - angs[i % 3]).abs() < 1e-12);
        }
        // interior torsions: atom 3k+2..: psi, omega, phi cycle starting at N2
        for (k, &expected) in phi.iter().enumerate() {
            // phi of residue k+2 spans C(k+1)-N(k+2)-CA(k+2)-C(k+2)
            let base = 3 * (k + 1) + 2;
            let t = dihedral(atoms[base - 3], atoms[base - 2], atoms[base - 1], atoms[base]);
            let diff = atan2(sin(t - expected), cos(t - expected));
            assert!(diff.abs() < 1e-12);
        }
    }

    #[test]
    fn ideal_helix_has_near_target_i_i2_spacing() {
        let m = 18;
        let phi = vec![(-57.0f64).to_radians(); m];
        let psi = vec![(-47.0f64).to_radians(); m];
        let conf = build_backbone(&phi, &psi, &BondGeometry::default()).unwrap();
        let p = conf.positions();
        for i in 0..p.len() - 2 {
            let d = distance(p[i], p[i + 2]);
            assert!((5.3..=5.7).contains(&d), "d(i,i+2) = {d}");
        }
    }

    #[test]
    fn angle_count_mismatch_is_rejected() {
        let geom = BondGeometry::default();
        assert!(matches!(
            build_backbone(&[0.1, 0.2], &[0.1], &geom),
            Err(GeometryError::AngleCountMismatch { .. })
        ));
        let bad = BondGeometry { len_c_n: -1.0, ..geom };
        assert!(build_backbone(&[0.1], &[0.1], &bad).is_err());
        assert!(build_backbone(&[f64::NAN], &[0.1], &geom).is_err());
    }

    #[test]
    fn circumradius_known_triangles() {
        // equilateral: r = side / sqrt(3)
        let s = 4.30;
        let a = Vec3::ZERO;
        let b = Vec3::new(s, 0.0, 0.0);
        let c = Vec3::new(s / 2.0, s * sqrt(3.0) / 2.0, 0.0);
        let r = circumradius(a, b, c);
        assert!((r - s / sqrt(3.0)).abs() / r < 1e-12);
        assert!((r - 2.4826).abs() < 1e-4);

        // right triangle: half the hypotenuse
        let r = circumradius(Vec3::ZERO, Vec3::new(3.0, 0.0, 0.0), Vec3::new(0.0, 4.0, 0.0));
        assert!((r - 2.5).abs() < 1e-12);

        // degenerate
        assert_eq!(
            circumradius(Vec3::ZERO, Vec3::new(1.0, 0.0, 0.0), Vec3::new(2.0, 0.0, 0.0)),
            f64::INFINITY
        );
        assert_eq!(circumradius(Vec3::ZERO, Vec3::ZERO, Vec3::new(1.0, 1.0, 0.0)), f64::INFINITY);
    }

    #[test]
    fn circumradius_invariant_under_rigid_motion() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let pts: Vec<Vec3> = (0..3)
                .map(|_| {
                    Vec3::new(
                        rng.random_range(-10.0..10.0),
                        rng.random_range(-10.0..10.0),
                        rng.random_range(-10.0..10.0),
                    )
                })
                .collect();
            let rot = random_rotation(&mut rng);
            let shift = Vec3::new(
                rng.random_range(-5.0..5.0),
                rng.random_range(-5.0..5.0),
                rng.random_range(-5.0..5.0),
            );
            let moved: Vec<Vec3> = pts.iter().map(|&p| rotate(&rot, p) + shift).collect();
            let r0 = circumradius(pts[0], pts[1], pts[2]);
            let r1 = circumradius(moved[0], moved[1], moved[2]);
            if r0.is_finite() {
                assert!((r0 - r1).abs() / r0 < 1e-9, "{r0} vs {r1}");
            }
        }
    }

    #[test]
    fn equilateral_radius_formula_over_threshold_interval() {
        for k in 0..=50 {
            let s = 4.33 + (4.88 - 4.33) * k as f64 / 50.0;
            let c = Vec3::new(s / 2.0, s * sqrt(3.0) / 2.0, 0.0);
            let r = circumradius(Vec3::ZERO, Vec3::new(s, 0.0, 0.0), c);
            assert!((r - s / sqrt(3.0)).abs() / r < 1e-9);
            assert!((2.50 - 0.02..=2.82).contains(&r), "r = {r}");
        }
    }

    #[test]
    fn thickness_single_and_brute_force() {
        let tri = Conformation::new(vec![
            Vec3::ZERO,
            Vec3::new(3.0, 0.0, 0.0),
            Vec3::new(0.0, 4.0, 0.0),
        ])
        .unwrap();
        assert!((thickness(&tri) - 2.5).abs() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let pts: Vec<Vec3> = (0..10)
                .map(|_| {
                    Vec3::new(
                        rng.random_range(-8.0..8.0),
                        rng.random_range(-8.0..8.0),
                        rng.random_range(-8.0..8.0),
                    )
                })
                .collect();
            let conf = Conformation::new(pts.clone()).unwrap();
            let mut expected = f64::INFINITY;
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    for k in j + 1..pts.len() {
                        expected = expected.min(circumradius(pts[i], pts[j], pts[k]));
                    }
                }
            }
            assert_eq!(thickness(&conf), expected);
            // definition of minimum
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    for k in j + 1..pts.len() {
                        assert!(thickness(&conf) <= circumradius(pts[i], pts[j], pts[k]));
                    }
                }
            }
        }
    }

    #[test]
    fn thickness_equilateral_minimizer() {
        let s = 4.30;
        let conf = Conformation::new(vec![
            Vec3::ZERO,
            Vec3::new(s, 0.0, 0.0),
            Vec3::new(s / 2.0, s * sqrt(3.0) / 2.0, 0.0),
            Vec3::new(20.0, 17.0, 9.0),
        ])
        .unwrap();
        assert!((thickness(&conf) - s / sqrt(3.0)).abs() < 1e-9);
    }

    #[test]
    fn helix_triplet_count_boundaries() {
        let iv = ThicknessInterval::default();
        let make = |s: f64| {
            Conformation::new(vec![
                Vec3::ZERO,
                Vec3::new(s, 0.0, 0.0),
                Vec3::new(s / 2.0, s * sqrt(3.0) / 2.0, 0.0),
            ])
            .unwrap()
        };
        // side 4.30: radius 2.4826 falls below 2.50
        assert_eq!(helix_triplet_count(&make(4.30), &iv), 0);
        // side 4.50: radius 2.598 inside
        assert_eq!(helix_triplet_count(&make(4.50), &iv), 1);
        // collinear: infinite radius excluded
        let line = Conformation::new(vec![
            Vec3::ZERO,
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(2.0, 0.0, 0.0),
        ])
        .unwrap();
        assert_eq!(helix_triplet_count(&line, &iv), 0);
    }

    #[test]
    fn conformation_validation() {
        assert!(matches!(
            Conformation::new(vec![Vec3::ZERO, Vec3::ZERO]),
            Err(GeometryError::TooShort { n: 2 })
        ));
        assert!(matches!(
            Conformation::new(vec![Vec3::ZERO, Vec3::ZERO, Vec3::new(f64::NAN, 0.0, 0.0)]),
            Err(GeometryError::NonFinite { index: 2 })
        ));
    }

    #[test]
    fn thickness_interval_validation() {
        assert!(ThicknessInterval::new(2.5, 2.8).is_some());
        assert!(ThicknessInterval::new(2.8, 2.5).is_none());
        assert!(ThicknessInterval::new(0.0, 1.0).is_none());
    }
}
