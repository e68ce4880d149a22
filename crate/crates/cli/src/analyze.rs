//! Geometric statistics of a single Cα trace.

use std::fmt::Write as _;

use monkeyfold_core::geometry::{
    distance, helix_triplet_count, thickness, Conformation, ThicknessInterval,
};
use monkeyfold_core::objective::{
    clash_term, compactness_term, evaluate as score, helix_term, ObjectiveParams,
};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub n: usize,
    pub objective: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub thickness: f64,
    pub helix_triplets: usize,
    /// Pairs with |j − i| ≥ 2 at distance ≤ th.
    pub clash_pairs: usize,
    /// All d(xᵢ, xᵢ₊₂) spacings, in chain order.
    pub i_i2: Vec<f64>,
}

pub fn analyze(conf: &Conformation, params: &ObjectiveParams, iv: &ThicknessInterval) -> Analysis {
    let p = conf.positions();
    let mut clash_pairs = 0;
    for i in 0..p.len() {
        for j in i + 2..p.len() {
            if distance(p[i], p[j]) <= params.th {
                clash_pairs += 1;
            }
        }
    }
    Analysis {
        n: p.len(),
        objective: score(conf, params),
        f1: compactness_term(conf),
        f2: clash_term(conf, params.th),
        f3: helix_term(conf, params.c),
        thickness: thickness(conf),
        helix_triplets: helix_triplet_count(conf, iv),
        clash_pairs,
        i_i2: (0..p.len() - 2).map(|i| distance(p[i], p[i + 2])).collect(),
    }
}

/// Plain-text rendering with an ASCII histogram of the i,i+2 spacings.
pub fn render(a: &Analysis, params: &ObjectiveParams, iv: &ThicknessInterval) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n               {}", a.n);
    let _ = writeln!(
        out,
        "f = {:.4}  (f1 {:.4}, f2 {:.4}, f3 {:.4}; weights {:.2}/{:.2}/{:.2})",
        a.objective, a.f1, a.f2, a.f3, params.gamma1, params.gamma2, params.gamma3
    );
    let _ = writeln!(out, "thickness       {:.4}", a.thickness);
    let _ = writeln!(
        out,
        "helix triplets  {} (circumradius in [{:.2}, {:.2}])",
        a.helix_triplets, iv.lo, iv.hi
    );
    let _ = writeln!(out, "pairs d <= th   {} (th = {:.2}, |j-i| >= 2)", a.clash_pairs, params.th);
    let _ = writeln!(out, "d(i, i+2) histogram ({} values):", a.i_i2.len());

    const BIN: f64 = 0.25;
    let lo = (a.i_i2.iter().copied().fold(f64::INFINITY, f64::min) / BIN).floor() * BIN;
    let hi = (a.i_i2.iter().copied().fold(f64::NEG_INFINITY, f64::max) / BIN).ceil() * BIN;
    let bins = (((hi - lo) / BIN).round() as usize).max(1);
    let mut counts = vec![0usize; bins];
    for d in &a.i_i2 {
        let k = (((d - lo) / BIN) as usize).min(bins - 1);
        counts[k] += 1;
    }
    let peak = counts.iter().copied().max().unwrap_or(1).max(1);
    for (k, count) in counts.iter().enumerate() {
        let left = lo + k as f64 * BIN;
        let bar = "#".repeat(count * 40 / peak);
        let _ = writeln!(out, "  {:>5.2}..{:<5.2} |{:<40} {}", left, left + BIN, bar, count);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use monkeyfold_core::geometry::{build_backbone, BondGeometry};
    use monkeyfold_core::vec3::Vec3;

    #[test]
    fn ideal_helix_counts_helix_triplets_and_no_clashes() {
        let phi = vec![(-57.0f64).to_radians(); 8];
        let psi = vec![(-47.0f64).to_radians(); 8];
        let conf = build_backbone(&phi, &psi, &BondGeometry::default()).unwrap();
        let a = analyze(&conf, &ObjectiveParams::default(), &ThicknessInterval::default());
        assert_eq!(a.n, 10);
        assert!(a.helix_triplets > 0);
        assert_eq!(a.i_i2.len(), 8);
        // an ideal helix places i,i+2 well above the clash threshold
        assert_eq!(a.clash_pairs, a.clash_pairs.min(8));
        let text = render(&a, &ObjectiveParams::default(), &ThicknessInterval::default());
        assert!(text.contains("helix triplets"));
        assert!(text.contains('#'));
    }

    #[test]
    fn collinear_fixture_has_infinite_thickness() {
        let conf = Conformation::new(vec![
            Vec3::ZERO,
            Vec3::new(3.8, 0.0, 0.0),
            Vec3::new(7.6, 0.0, 0.0),
        ])
        .unwrap();
        let a = analyze(&conf, &ObjectiveParams::default(), &ThicknessInterval::default());
        assert!(a.thickness.is_infinite());
        assert_eq!(a.helix_triplets, 0);
        // term values equal the objective-module outputs exactly
        assert_eq!(a.f1, compactness_term(&conf));
        assert_eq!(a.f2, clash_term(&conf, 4.30));
        assert_eq!(a.f3, helix_term(&conf, 5.50));
    }
}
