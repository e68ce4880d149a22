//! The three geometric requirement terms and their weighted sum.
//!
//! `f1` pulls residues that are at least three apart on the chain together
//! (compactness), `f2` penalizes any pair closer than the threshold `th`
//! exponentially (steric clash), and `f3` holds every d(xᵢ, xᵢ₊₂) near the
//! helix spacing `c`. Sums run with the outer index ascending and the inner
//! index ascending so results are reproducible bit for bit.

use libm::exp;

use crate::geometry::{distance, Conformation};

/// Weights and geometric constants of the objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveParams {
    pub gamma1: f64,
    pub gamma2: f64,
    pub gamma3: f64,
    /// Clash threshold (Å).
    pub th: f64,
    /// Helix target for d(xᵢ, xᵢ₊₂) (Å).
    pub c: f64,
}

impl Default for ObjectiveParams {
    fn default() -> Self {
        let (gamma1, gamma2, gamma3) = WeightPreset::Test2.weights();
        ObjectiveParams { gamma1, gamma2, gamma3, th: 4.30, c: 5.50 }
    }
}

impl ObjectiveParams {
    pub fn with_weights(weights: (f64, f64, f64)) -> Self {
        ObjectiveParams {
            gamma1: weights.0,
            gamma2: weights.1,
            gamma3: weights.2,
            ..Default::default()
        }
    }

    /// Non-negative weights, positive thresholds. Zero weights are allowed;
    /// a zero simply disables a term.
    pub fn validate(&self) -> Result<(), &'static str> {
        let ws = [self.gamma1, self.gamma2, self.gamma3];
        if !ws.iter().all(|w| w.is_finite() && *w >= 0.0) {
            return Err("weights must be finite and non-negative");
        }
        if !(self.th.is_finite() && self.th > 0.0) {
            return Err("th must be positive");
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err("c must be positive");
        }
        Ok(())
    }
}

/// The four weight triplets (γ1, γ2, γ3) used for batch generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightPreset {
    Test1,
    Test2,
    Test3,
    Test4,
}

impl WeightPreset {
    pub const ALL: [WeightPreset; 4] =
        [WeightPreset::Test1, WeightPreset::Test2, WeightPreset::Test3, WeightPreset::Test4];

    pub fn weights(self) -> (f64, f64, f64) {
        match self {
            WeightPreset::Test1 => (0.1, 1.2, 0.1),
            WeightPreset::Test2 => (0.1, 1.0, 0.1),
            WeightPreset::Test3 => (0.5, 1.0, 0.1),
            WeightPreset::Test4 => (0.1, 1.0, 0.5),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightPreset::Test1 => "test1",
            WeightPreset::Test2 => "test2",
            WeightPreset::Test3 => "test3",
            WeightPreset::Test4 => "test4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        WeightPreset::ALL.into_iter().find(|p| p.name() == s)
    }
}

/// exp(t) for t ≥ 0, zero otherwise. The jump from 0 to 1 at t = 0 is
/// intentional: a pair sitting exactly at the threshold still contributes.
pub fn exp_plus(t: f64) -> f64 {
    if t >= 0.0 { exp(t) } else { 0.0 }
}

/// f1: sum of d(xᵢ, xⱼ) over all pairs with j ≥ i + 3. Zero when n < 4.
pub fn compactness_term(conf: &Conformation) -> f64 {
    let p = conf.positions();
    let mut sum = 0.0;
    for i in 0..p.len() {
        for j in i + 3..p.len() {
            sum += distance(p[i], p[j]);
        }
    }
    sum
}

/// f2: sum of exp₊(th − d(xᵢ, xⱼ)) over all pairs with j ≥ i + 2. Zero iff
/// every such pair is strictly farther than `th`.
pub fn clash_term(conf: &Conformation, th: f64) -> f64 {
    let p = conf.positions();
    let mut sum = 0.0;
    for i in 0..p.len() {
        for j in i + 2..p.len() {
            sum += exp_plus(th - distance(p[i], p[j]));
        }
    }
    sum
}

/// f3: sum of (d(xᵢ, xᵢ₊₂) − c)² over i = 1..n−2.
pub fn helix_term(conf: &Conformation, c: f64) -> f64 {
    let p = conf.positions();
    let mut sum = 0.0;
    for i in 0..p.len().saturating_sub(2) {
        let d = distance(p[i], p[i + 2]);
        sum += (d - c) * (d - c);
    }
    sum
}

/// f = γ1·f1 + γ2·f2 + γ3·f3. O(n²) overall.
pub fn evaluate(conf: &Conformation, params: &ObjectiveParams) -> f64 {
    params.gamma1 * compactness_term(conf)
        + params.gamma2 * clash_term(conf, params.th)
        + params.gamma3 * helix_term(conf, params.c)
}
