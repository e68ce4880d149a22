//! Monkey Search: a meta-heuristic for global optimization.
//!
//! The search grows binary "trees" of candidate solutions. Each branch tip
//! holds a solution obtained by perturbing its parent; a monkey climbs up
//! while *exploring* (two perturbed children per step, the better tip
//! preferred probabilistically), then climbs down marking every branch with
//! the best objective value seen in the subtree above it, and climbs up again
//! guided by those marks until its climb-up budget is spent. The best
//! solutions of every tree feed a bounded memory of mutually distinct
//! incumbents; after a fixed number of randomly rooted starting trees, new
//! roots are blended from that memory. The search stops when the memory has
//! tightened below a convergence radius or the tree budget is exhausted.
//!
//! All randomness flows through one seeded ChaCha8 stream per [`run`], drawn
//! in a fixed order (root generation, then per explore step: perturbation A,
//! perturbation B, child choice; one draw per climb-down step below the top;
//! one draw per guided ascent step), so a run is reproducible bit for bit
//! from its seed.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A problem the search can operate on.
pub trait Problem {
    type Point: Clone;

    /// A uniformly random feasible point (used for the starting trees).
    fn random_point(&self, rng: &mut dyn rand::RngCore) -> Self::Point;

    /// A perturbed copy of `point`. `memory` holds the current incumbents and
    /// may be borrowed from (blend moves); it can be empty.
    fn perturb(
        &self,
        point: &Self::Point,
        memory: &Memory<Self::Point>,
        rng: &mut dyn rand::RngCore,
    ) -> Self::Point;

    /// Objective value to minimize. Must not return NaN for feasible points.
    fn objective(&self, point: &Self::Point) -> f64;

    /// Distance in variable space (memory distinctness and convergence).
    fn distance(&self, a: &Self::Point, b: &Self::Point) -> f64;

    /// Root for a follow-up tree, combined from the memory incumbents.
    fn combine(&self, memory: &[Solution<Self::Point>], rng: &mut dyn rand::RngCore)
    -> Self::Point;
}

/// Coordinate-wise uniform pick among memory points: every coordinate of the
/// blend is copied from a random donor. A reasonable [`Problem::combine`] for
/// plain vector problems.
pub fn coordinate_blend(points: &[&[f64]], rng: &mut dyn rand::RngCore) -> Vec<f64> {
    assert!(!points.is_empty(), "blend needs at least one point");
    let dim = points[0].len();
    (0..dim).map(|i| points[rng.random_range(0..points.len())][i]).collect()
}

/// Control parameters of the search.
#[derive(Debug, Clone, PartialEq)]
pub struct MsParams {
    /// Branches per root-to-top path.
    pub height: usize,
    /// Guided re-ascents per tree after the initial exploring climb.
    pub climb_ups: usize,
    /// Incumbents kept in memory.
    pub memory_size: usize,
    /// Leading trees rooted at uniformly random points.
    pub starting_trees: usize,
    /// Hard cap on trees per run.
    pub max_trees: usize,
    /// Probability of following the better-valued (or better-marked) child.
    pub better_branch_prob: f64,
    /// Per-step probability, while climbing down, of resuming the ascent
    /// from the current branch instead of the root.
    pub climb_up_prob: f64,
    /// Convergence radius: the run stops once the memory is full and all
    /// incumbents are within this variable-space distance of each other.
    /// Memory distinctness uses a tenth of it.
    pub epsilon: f64,
    pub rng_seed: u64,
}

impl Default for MsParams {
    fn default() -> Self {
        MsParams {
            height: 40,
            climb_ups: 20,
            memory_size: 10,
            starting_trees: 100,
            max_trees: 3000,
            better_branch_prob: 0.8,
            climb_up_prob: 0.5,
            epsilon: 1e-6,
            rng_seed: 0,
        }
    }
}

impl MsParams {
    pub fn validate(&self) -> Result<(), MsError> {
        if self.height == 0 {
            return Err(MsError::InvalidParams("height must be at least 1"));
        }
        if self.memory_size == 0 {
            return Err(MsError::InvalidParams("memory_size must be at least 1"));
        }
        if self.starting_trees == 0 {
            return Err(MsError::InvalidParams("starting_trees must be at least 1"));
        }
        if self.max_trees < self.starting_trees {
            return Err(MsError::InvalidParams("max_trees must be >= starting_trees"));
        }
        if !(0.5..=1.0).contains(&self.better_branch_prob) {
            return Err(MsError::InvalidParams("better_branch_prob must lie in [0.5, 1]"));
        }
        if !(0.0..=1.0).contains(&self.climb_up_prob) {
            return Err(MsError::InvalidParams("climb_up_prob must lie in [0, 1]"));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(MsError::InvalidParams("epsilon must be positive"));
        }
        Ok(())
    }

    fn distinct_radius(&self) -> f64 {
        self.epsilon / 10.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MsError {
    InvalidParams(&'static str),
    /// The problem produced a NaN objective value.
    NanObjective,
}

impl fmt::Display for MsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MsError::InvalidParams(msg) => write!(f, "invalid search parameters: {msg}"),
            MsError::NanObjective => write!(f, "objective evaluated to NaN"),
        }
    }
}

impl core::error::Error for MsError {}

/// An evaluated point.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution<T> {
    pub point: T,
    pub value: f64,
}

/// Bounded, sorted store of the best mutually distinct solutions seen so far.
/// The first entry is the incumbent.
#[derive(Debug, Clone)]
pub struct Memory<T> {
    entries: Vec<Solution<T>>,
    capacity: usize,
    distinct_radius: f64,
}

impl<T: Clone> Memory<T> {
    pub fn new(capacity: usize, distinct_radius: f64) -> Self {
        Memory { entries: Vec::with_capacity(capacity + 1), capacity, distinct_radius }
    }

    pub fn solutions(&self) -> &[Solution<T>] {
        &self.entries
    }

    pub fn best(&self) -> Option<&Solution<T>> {
        self.entries.first()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.entries.len() == self.capacity
    }

    /// Offer a solution. Anything within the distinctness radius of a better
    /// or equal entry is dropped; otherwise the candidate replaces whatever
    /// worse entries it crowds out and the store is re-trimmed to capacity.
    pub fn insert(&mut self, candidate: Solution<T>, dist: impl Fn(&T, &T) -> f64) {
        if candidate.value.is_nan() {
            return;
        }
        let mut keep_candidate = true;
        for e in &self.entries {
            if dist(&e.point, &candidate.point) < self.distinct_radius
                && e.value <= candidate.value
            {
                keep_candidate = false;
                break;
            }
        }
        if !keep_candidate {
            return;
        }
        self.entries.retain(|e| {
            !(dist(&e.point, &candidate.point) < self.distinct_radius
                && e.value > candidate.value)
        });
        let pos = self
            .entries
            .partition_point(|e| e.value <= candidate.value);
        self.entries.insert(pos, candidate);
        self.entries.truncate(self.capacity);
    }

    /// Maximum pairwise distance among stored points (0 for fewer than two).
    pub fn spread(&self, dist: impl Fn(&T, &T) -> f64) -> f64 {
        let mut max: f64 = 0.0;
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                max = max.max(dist(&self.entries[i].point, &self.entries[j].point));
            }
        }
        max
    }
}

/// Memory is "converged" once it is full and every pair of incumbents lies
/// within `epsilon` of each other.
pub fn converged<T: Clone>(
    memory: &Memory<T>,
    epsilon: f64,
    dist: impl Fn(&T, &T) -> f64,
) -> bool {
    memory.is_full() && memory.spread(dist) <= epsilon
}

/// Pick between two *exploring* children by tip value: the lower value wins
/// with probability `better_prob`, ties are a fair coin. Returns `true` for
/// the first child. Consumes exactly one uniform draw.
pub fn choose_first_exploring(
    value_a: f64,
    value_b: f64,
    better_prob: f64,
    rng: &mut dyn rand::RngCore,
) -> bool {
    let u: f64 = rng.random();
    match value_a.partial_cmp(&value_b) {
        Some(Ordering::Less) => u < better_prob,
        Some(Ordering::Greater) => u < 1.0 - better_prob,
        _ => u < 0.5,
    }
}

/// Pick between two children while *ascending*, by branch mark. A child with
/// no mark borders the unexplored part of the tree and is treated as the
/// preferred one. Returns `true` for the first child; one uniform draw.
pub fn choose_first_ascending(
    mark_a: Option<f64>,
    mark_b: Option<f64>,
    better_prob: f64,
    rng: &mut dyn rand::RngCore,
) -> bool {
    match (mark_a, mark_b) {
        (Some(a), Some(b)) => choose_first_exploring(a, b, better_prob, rng),
        (None, Some(_)) => rng.random::<f64>() < better_prob,
        (Some(_), None) => rng.random::<f64>() < 1.0 - better_prob,
        (None, None) => rng.random::<f64>() < 0.5,
    }
}

/// One branch of a search tree. Carries the solution at its tip, the mark
/// left by climb-down passes (best value seen in the subtree above), and its
/// children (exactly zero or two).
#[derive(Debug, Clone)]
pub struct Branch<T> {
    solution: Solution<T>,
    mark: Option<f64>,
    parent: Option<usize>,
    children: Option<(usize, usize)>,
    depth: usize,
}

impl<T> Branch<T> {
    pub fn solution(&self) -> &Solution<T> {
        &self.solution
    }

    pub fn value(&self) -> f64 {
        self.solution.value
    }

    pub fn mark(&self) -> Option<f64> {
        self.mark
    }

    pub fn parent(&self) -> Option<usize> {
        self.parent
    }

    pub fn children(&self) -> Option<(usize, usize)> {
        self.children
    }

    /// A branch is explored once its two children have been grown.
    pub fn is_explored(&self) -> bool {
        self.children.is_some()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }
}

/// A fully grown search tree (arena of branches; index 0 is the root).
#[derive(Debug)]
pub struct Tree<T> {
    branches: Vec<Branch<T>>,
    best: Vec<Solution<T>>,
    evaluations: usize,
}

impl<T: Clone> Tree<T> {
    /// Grow one tree from `root`: evaluate it, explore to the top, then
    /// alternate marking climb-downs and guided re-ascents until the climb-up
    /// budget is spent. Objective calls are at most 2·height·(1+climb_ups)+1.
    pub fn grow<P: Problem<Point = T>>(
        problem: &P,
        root: T,
        memory: &Memory<T>,
        params: &MsParams,
        rng: &mut ChaCha8Rng,
    ) -> Result<Tree<T>, MsError> {
        let mut tree = Tree { branches: Vec::new(), best: Vec::new(), evaluations: 0 };
        let root_value = tree.evaluate(problem, &root, params)?;
        tree.branches.push(Branch {
            solution: Solution { point: root, value: root_value },
            mark: None,
            parent: None,
            children: None,
            depth: 0,
        });

        let mut current = 0;
        while tree.branches[current].depth < params.height {
            current = tree.explore_step(problem, current, memory, params, rng)?;
        }
        for _ in 0..params.climb_ups {
            let resume = tree.climb_down(current, params, rng);
            current = tree.ascend(problem, resume, memory, params, rng)?;
        }
        Ok(tree)
    }

    /// Grow two children of `at` by perturbation, evaluate both, and climb
    /// the probabilistically chosen one.
    fn explore_step<P: Problem<Point = T>>(
        &mut self,
        problem: &P,
        at: usize,
        memory: &Memory<T>,
        params: &MsParams,
        rng: &mut ChaCha8Rng,
    ) -> Result<usize, MsError> {
        debug_assert!(self.branches[at].children.is_none());
        let depth = self.branches[at].depth + 1;
        let base = self.branches[at].solution.point.clone();

        let point_a = problem.perturb(&base, memory, rng);
        let point_b = problem.perturb(&base, memory, rng);
        let value_a = self.evaluate(problem, &point_a, params)?;
        let value_b = self.evaluate(problem, &point_b, params)?;

        let idx_a = self.branches.len();
        let idx_b = idx_a + 1;
        self.branches.push(Branch {
            solution: Solution { point: point_a, value: value_a },
            mark: None,
            parent: Some(at),
            children: None,
            depth,
        });
        self.branches.push(Branch {
            solution: Solution { point: point_b, value: value_b },
            mark: None,
            parent: Some(at),
            children: None,
            depth,
        });
        self.branches[at].children = Some((idx_a, idx_b));

        let first = choose_first_exploring(value_a, value_b, params.better_branch_prob, rng);
        Ok(if first { idx_a } else { idx_b })
    }

    /// Walk from `top` down to the root, refreshing every mark on the way
    /// (running minimum of own value and already-marked children). The ascent
    /// resume point is drawn on the way: each branch strictly below the top
    /// stops the monkey with probability `climb_up_prob`; the root always
    /// does. Marks are written all the way down regardless, so every marked
    /// branch reflects its whole explored subtree.
    fn climb_down(&mut self, top: usize, params: &MsParams, rng: &mut ChaCha8Rng) -> usize {
        let mut resume = None;
        let mut current = Some(top);
        while let Some(i) = current {
            let mut mark = self.branches[i].value();
            if let Some((a, b)) = self.branches[i].children {
                if let Some(m) = self.branches[a].mark {
                    mark = mark.min(m);
                }
                if let Some(m) = self.branches[b].mark {
                    mark = mark.min(m);
                }
            }
            self.branches[i].mark = Some(mark);

            let parent = self.branches[i].parent;
            if i != top && resume.is_none() {
                if parent.is_none() {
                    resume = Some(i); // reached the root: always restart here
                } else if rng.random::<f64>() < params.climb_up_prob {
                    resume = Some(i);
                }
            }
            current = parent;
        }
        resume.unwrap_or(top)
    }

    /// Climb from `from` back to the top: follow marks through the explored
    /// region, then switch to exploring at the first unexplored branch.
    fn ascend<P: Problem<Point = T>>(
        &mut self,
        problem: &P,
        from: usize,
        memory: &Memory<T>,
        params: &MsParams,
        rng: &mut ChaCha8Rng,
    ) -> Result<usize, MsError> {
        let mut current = from;
        while let Some((a, b)) = self.branches[current].children {
            let first = choose_first_ascending(
                self.branches[a].mark,
                self.branches[b].mark,
                params.better_branch_prob,
                rng,
            );
            current = if first { a } else { b };
        }
        while self.branches[current].depth < params.height {
            current = self.explore_step(problem, current, memory, params, rng)?;
        }
        Ok(current)
    }

    fn evaluate<P: Problem<Point = T>>(
        &mut self,
        problem: &P,
        point: &T,
        params: &MsParams,
    ) -> Result<f64, MsError> {
        let value = problem.objective(point);
        if value.is_nan() {
            return Err(MsError::NanObjective);
        }
        self.evaluations += 1;
        self.record_best(problem, point, value, params);
        Ok(value)
    }

    fn record_best<P: Problem<Point = T>>(
        &mut self,
        problem: &P,
        point: &T,
        value: f64,
        params: &MsParams,
    ) {
        // keep the tree-best list tiny: the same bound and distinctness the
        // global memory uses
        let mut scratch = Memory {
            entries: core::mem::take(&mut self.best),
            capacity: params.memory_size,
            distinct_radius: params.distinct_radius(),
        };
        scratch.insert(Solution { point: point.clone(), value }, |a, b| problem.distance(a, b));
        self.best = scratch.entries;
    }

    /// Distinct best solutions found anywhere in this tree, ascending.
    pub fn best_solutions(&self) -> &[Solution<T>] {
        &self.best
    }

    pub fn branches(&self) -> &[Branch<T>] {
        &self.branches
    }

    pub fn root(&self) -> &Branch<T> {
        &self.branches[0]
    }

    /// Objective calls made while growing this tree (including the root).
    pub fn evaluations(&self) -> usize {
        self.evaluations
    }
}

/// Outcome of a search run.
#[derive(Debug)]
pub struct MsOutcome<T> {
    /// Best distinct solutions; the first entry is the incumbent.
    pub memory: Memory<T>,
    /// Trees grown before stopping.
    pub trees: usize,
    /// Total objective evaluations.
    pub evaluations: usize,
}

/// Run the search: `starting_trees` random-rooted trees, then memory-blended
/// roots, until convergence or `max_trees`. Deterministic given
/// `params.rng_seed`.
pub fn run<P: Problem>(problem: &P, params: &MsParams) -> Result<MsOutcome<P::Point>, MsError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let mut memory = Memory::new(params.memory_size, params.distinct_radius());
    let mut trees = 0;
    let mut evaluations = 0;

    while trees < params.max_trees {
        let root = if trees < params.starting_trees || memory.is_empty() {
            problem.random_point(&mut rng)
        } else {
            problem.combine(memory.solutions(), &mut rng)
        };
        let tree = Tree::grow(problem, root, &memory, params, &mut rng)?;
        evaluations += tree.evaluations();
        for s in tree.best_solutions() {
            memory.insert(s.clone(), |a, b| problem.distance(a, b));
        }
        trees += 1;
        if converged(&memory, params.epsilon, |a, b| problem.distance(a, b)) {
            break;
        }
    }
    Ok(MsOutcome { memory, trees, evaluations })
}
