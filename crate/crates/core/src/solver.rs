//! Exact minimum resolving set (dim) and minimum fault-tolerant resolving
//! set (fdim) via a unified minimum set-k-multicover search.
//!
//! Both problems reduce to the same cover question over `PairCoverage`:
//! choose the fewest vertices so that every vertex pair keeps at least k of
//! its resolvers, with k = 1 for dim and k = 2 for fdim. The search is
//! branch-and-bound on the unsatisfied pair with the fewest remaining
//! resolvers, branching over those resolvers in ascending vertex id, seeded
//! with a greedy incumbent and pruned by a disjoint-packing lower bound.
//! Iterative deepening on the target cardinality is available as a fallback
//! strategy; its failed levels double as "no set of size s exists"
//! certificates. The search itself is single-threaded, so the optimum and
//! the reported witness (the lexicographically smallest optimal set) are
//! deterministic.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, pair_coverage, LandmarkSet, PairCoverage};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("pair ({x}, {y}) has only {available} resolvers in the candidate pool, need {need}")]
    Infeasible {
        x: usize,
        y: usize,
        available: usize,
        need: usize,
    },
    #[error("cover multiplicity must be 1 or 2, got {0}")]
    BadMultiplicity(usize),
}

/// Node and wall-clock budgets. `None` means unlimited; `max_nodes == Some(0)`
/// skips the search entirely and reports bounds only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchLimits {
    pub const UNLIMITED: SearchLimits = SearchLimits {
        max_nodes: None,
        max_time: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        SearchLimits {
            max_nodes: Some(max_nodes),
            ..Default::default()
        }
    }

    pub fn millis(ms: u64) -> Self {
        SearchLimits {
            max_time: Some(Duration::from_millis(ms)),
            ..Default::default()
        }
    }

    pub fn with_millis(self, ms: u64) -> Self {
        SearchLimits {
            max_time: Some(Duration::from_millis(ms)),
            ..self
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Incumbent-pruned branch and bound (the default).
    #[default]
    BranchAndBound,
    /// Feasibility search at increasing target cardinality; refuted levels
    /// certify lower bounds even on timeout.
    IterativeDeepening,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    BoundsOnly,
    Timeout,
}

/// Result of one cover computation.
#[derive(Clone, Debug)]
pub struct SolveReport {
    /// Cover multiplicity: 1 for dim, 2 for fdim.
    pub multiplicity: usize,
    /// Minimum cover size; present exactly when `status == Exact`.
    pub optimum: Option<usize>,
    /// Optimal set, ascending; present exactly when `status == Exact`.
    pub witness: Option<LandmarkSet>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: SolveStatus,
}

/// Outcome of a bounded feasibility question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Found(LandmarkSet),
    Infeasible,
    Unknown,
}

/// Classical greedy multicover: repeatedly take the vertex reducing the most
/// unmet pair deficits, smallest id on ties. The result is a valid k-cover
/// and hence an upper bound on the optimum.
pub fn greedy_multicover(cov: &PairCoverage, k: usize) -> Result<LandmarkSet, SolverError> {
    greedy_multicover_in(cov, k, &VertexSet::full(cov.vertex_count()))
}

/// Greedy multicover restricted to a candidate pool.
pub fn greedy_multicover_in(
    cov: &PairCoverage,
    k: usize,
    allowed: &VertexSet,
) -> Result<LandmarkSet, SolverError> {
    check_multiplicity(k)?;
    check_feasible(cov, k, allowed)?;
    let n = cov.vertex_count();
    let mut deficit: Vec<i32> = vec![k as i32; cov.pair_count()];
    let mut unsat = cov.pair_count();
    let mut chosen_mask = VertexSet::new(n);
    let mut chosen = Vec::new();
    let mut gain = vec![0u32; n];

    while unsat > 0 {
        gain.iter_mut().for_each(|g| *g = 0);
        for idx in 0..cov.pair_count() {
            if deficit[idx] <= 0 {
                continue;
            }
            for v in cov.resolver_set(idx).iter() {
                if allowed.contains(v) && !chosen_mask.contains(v) {
                    gain[v] += 1;
                }
            }
        }
        let best = (0..n)
            .filter(|&v| gain[v] > 0)
            .max_by(|&a, &b| gain[a].cmp(&gain[b]).then(b.cmp(&a)))
            .expect("an unmet pair always has an unchosen allowed resolver");
        chosen_mask.insert(best);
        chosen.push(best);
        for idx in 0..cov.pair_count() {
            if deficit[idx] > 0 && cov.resolver_set(idx).contains(best) {
                deficit[idx] -= 1;
                if deficit[idx] == 0 {
                    unsat -= 1;
                }
            }
        }
    }
    chosen.sort_unstable();
    Ok(LandmarkSet::new(chosen).expect("greedy never repeats a vertex"))
}

/// Valid lower bound on the k-multicover optimum: the maximum of
/// - the forced-vertex count (pairs with exactly k resolvers put all of them
///   in every solution),
/// - the twin-class bound (a mutual-twin class of size m needs m−1 vertices
///   for k = 1 and all m for k = 2),
/// - a greedy packing of pairs with pairwise-disjoint resolver sets, each
///   needing k vertices of its own,
/// - `known_dim + 1` for k = 2 when the exact dim is already known.
pub fn lower_bound_multicover(cov: &PairCoverage, k: usize, known_dim: Option<usize>) -> usize {
    let mut bound = forced_vertices(cov, k).len();
    bound = bound.max(twin_class_bound(cov, k));
    bound = bound.max(packing_bound(cov, k));
    if k == 2 {
        if let Some(d) = known_dim {
            bound = bound.max(d + 1);
        }
    }
    bound
}

fn check_multiplicity(k: usize) -> Result<(), SolverError> {
    if k == 1 || k == 2 {
        Ok(())
    } else {
        Err(SolverError::BadMultiplicity(k))
    }
}

fn check_feasible(cov: &PairCoverage, k: usize, allowed: &VertexSet) -> Result<(), SolverError> {
    for idx in 0..cov.pair_count() {
        let available = cov.resolver_set(idx).intersection_count(allowed);
        if available < k {
            let (x, y) = cov.pair(idx);
            return Err(SolverError::Infeasible {
                x,
                y,
                available,
                need: k,
            });
        }
    }
    Ok(())
}

/// Vertices forced into every solution: all members of resolver sets of size
/// exactly k.
fn forced_vertices(cov: &PairCoverage, k: usize) -> Vec<usize> {
    let mut forced = VertexSet::new(cov.vertex_count());
    for idx in 0..cov.pair_count() {
        let r = cov.resolver_set(idx);
        if r.len() == k {
            forced.union_with(r);
        }
    }
    forced.iter().collect()
}

/// Twin pairs are those resolved only by their own two members. Mutual-twin
/// classes are built with pairwise verification; each class of size m forces
/// m−1 members (k = 1) or all m (k = 2) into any solution.
fn twin_class_bound(cov: &PairCoverage, k: usize) -> usize {
    let n = cov.vertex_count();
    let is_twin = |x: usize, y: usize| {
        let r = cov.resolver_set(cov.pair_index(x, y));
        r.len() == 2 && r.contains(x) && r.contains(y)
    };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match classes
            .iter_mut()
            .find(|c| c.iter().all(|&u| is_twin(u, v)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
        .iter()
        .filter(|c| c.len() >= 2)
        .map(|c| if k == 1 { c.len() - 1 } else { c.len() })
        .sum()
}

/// Greedy packing of pairs with pairwise-disjoint resolver sets, smallest
/// sets first; each packed pair needs k vertices no other packed pair can
/// share.
fn packing_bound(cov: &PairCoverage, k: usize) -> usize {
    let mut order: Vec<usize> = (0..cov.pair_count()).collect();
    order.sort_by_key(|&idx| cov.resolver_set(idx).len());
    let mut taken = VertexSet::new(cov.vertex_count());
    let mut bound = 0;
    for idx in order {
        let r = cov.resolver_set(idx);
        if r.is_disjoint(&taken) {
            taken.union_with(r);
            bound += k;
        }
    }
    bound
}

// ---------------------------------------------------------------------------
// Search engine
// ---------------------------------------------------------------------------

/// Above this many total resolver-set bits the per-vertex inverse index is
/// skipped and deficit updates fall back to scanning all pairs.
const INVERSE_INDEX_BIT_BUDGET: usize = 50_000_000;

struct Budget {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    nodes: u64,
    aborted: bool,
}

impl Budget {
    fn new(limits: &SearchLimits, start: Instant) -> Self {
        Budget {
            deadline: limits.max_time.map(|t| start + t),
            max_nodes: limits.max_nodes,
            nodes: 0,
            aborted: false,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        self.nodes += 1;
        if let Some(max) = self.max_nodes {
            if self.nodes > max {
                self.aborted = true;
                return true;
            }
        }
        if self.nodes % 4096 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                    return true;
                }
            }
        }
        false
    }
}

struct Engine<'a> {
    cov: &'a PairCoverage,
    k: usize,
    /// Pairs containing each vertex, or empty when over the bit budget.
    member_of: Vec<Vec<u32>>,
    use_index: bool,
}

#[derive(PartialEq, Eq)]
enum Flow {
    Continue,
    StopFound,
    Abort,
}

struct SearchState {
    chosen: Vec<usize>,
    chosen_set: VertexSet,
    excluded: VertexSet,
    deficit: Vec<i32>,
    unsat: usize,
    allowed: VertexSet,
    limit: usize,
    stop_at_first: bool,
    best: Option<Vec<usize>>,
}

struct Outcome {
    best: Option<Vec<usize>>,
    completed: bool,
}

impl<'a> Engine<'a> {
    fn new(cov: &'a PairCoverage, k: usize) -> Self {
        let total_bits: usize = (0..cov.pair_count())
            .map(|idx| cov.resolver_set(idx).len())
            .sum();
        let use_index = total_bits <= INVERSE_INDEX_BIT_BUDGET;
        let mut member_of = vec![Vec::new(); if use_index { cov.vertex_count() } else { 0 }];
        if use_index {
            for idx in 0..cov.pair_count() {
                for v in cov.resolver_set(idx).iter() {
                    member_of[v].push(idx as u32);
                }
            }
        }
        Engine {
            cov,
            k,
            member_of,
            use_index,
        }
    }

    fn include(&self, state: &mut SearchState, v: usize) {
        state.chosen.push(v);
        state.chosen_set.insert(v);
        self.shift_deficits(state, v, -1);
    }

    fn undo_include(&self, state: &mut SearchState, v: usize) {
        debug_assert_eq!(state.chosen.last(), Some(&v));
        state.chosen.pop();
        state.chosen_set.remove(v);
        self.shift_deficits(state, v, 1);
    }

    fn shift_deficits(&self, state: &mut SearchState, v: usize, delta: i32) {
        let apply = |deficit: &mut i32, unsat: &mut usize| {
            *deficit += delta;
            if delta < 0 && *deficit == 0 {
                *unsat -= 1;
            } else if delta > 0 && *deficit == 1 {
                *unsat += 1;
            }
        };
        if self.use_index {
            for &idx in &self.member_of[v] {
                apply(&mut state.deficit[idx as usize], &mut state.unsat);
            }
        } else {
            for idx in 0..self.cov.pair_count() {
                if self.cov.resolver_set(idx).contains(v) {
                    apply(&mut state.deficit[idx], &mut state.unsat);
                }
            }
        }
    }

    #[inline]
    fn remaining_count(&self, state: &SearchState, idx: usize) -> usize {
        let r = self.cov.resolver_set(idx).words();
        let a = state.allowed.words();
        let e = state.excluded.words();
        let c = state.chosen_set.words();
        let mut count = 0;
        for w in 0..r.len() {
            count += (r[w] & a[w] & !e[w] & !c[w]).count_ones() as usize;
        }
        count
    }

    fn remaining_list(&self, state: &SearchState, idx: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let r = self.cov.resolver_set(idx).words();
        let a = state.allowed.words();
        let e = state.excluded.words();
        let c = state.chosen_set.words();
        for w in 0..r.len() {
            let mut word = r[w] & a[w] & !e[w] & !c[w];
            while word != 0 {
                out.push(w * 64 + word.trailing_zeros() as usize);
                word &= word - 1;
            }
        }
        out
    }

    /// Disjoint-packing bound on the vertices still needed: unsatisfied
    /// pairs with pairwise-disjoint remaining resolver sets, smallest sets
    /// first, each contributing its own deficit.
    fn packing_lower_bound(&self, state: &SearchState, info: &[(u32, u32)]) -> usize {
        let words = state.allowed.words().len();
        let mut union = vec![0u64; words];
        let mut bound = 0usize;
        let a = state.allowed.words();
        let e = state.excluded.words();
        let c = state.chosen_set.words();
        'pairs: for &(_, idx) in info {
            let r = self.cov.resolver_set(idx as usize).words();
            for w in 0..words {
                if r[w] & a[w] & !e[w] & !c[w] & union[w] != 0 {
                    continue 'pairs;
                }
            }
            for w in 0..words {
                union[w] |= r[w] & a[w] & !e[w] & !c[w];
            }
            bound += state.deficit[idx as usize] as usize;
        }
        bound
    }

    fn dfs(&self, state: &mut SearchState, budget: &mut Budget) -> Flow {
        if budget.tick() {
            return Flow::Abort;
        }
        let limit = match &state.best {
            Some(b) if !state.stop_at_first => state.limit.min(b.len() - 1),
            _ => state.limit,
        };
        if state.chosen.len() > limit {
            return Flow::Continue;
        }
        if state.unsat == 0 {
            state.best = Some(state.chosen.clone());
            return if state.stop_at_first {
                Flow::StopFound
            } else {
                Flow::Continue
            };
        }

        // Remaining-resolver counts for unsatisfied pairs; any shortfall
        // kills the branch.
        let mut info: Vec<(u32, u32)> = Vec::with_capacity(state.unsat);
        for idx in 0..self.cov.pair_count() {
            if state.deficit[idx] > 0 {
                let count = self.remaining_count(state, idx);
                if (count as i32) < state.deficit[idx] {
                    return Flow::Continue;
                }
                info.push((count as u32, idx as u32));
            }
        }
        info.sort_unstable();
        if state.chosen.len() + self.packing_lower_bound(state, &info) > limit {
            return Flow::Continue;
        }

        // Branch on the tightest pair (fewest remaining resolvers, then
        // smallest pair): the i-th branch commits candidate i as the
        // smallest-id resolver taken from this set.
        let branch_idx = info[0].1 as usize;
        let need = state.deficit[branch_idx] as usize;
        let candidates = self.remaining_list(state, branch_idx);
        let mut excluded_here = 0;
        let mut flow = Flow::Continue;
        for i in 0..candidates.len() {
            if candidates.len() - i < need {
                break;
            }
            let v = candidates[i];
            self.include(state, v);
            flow = self.dfs(state, budget);
            self.undo_include(state, v);
            if flow != Flow::Continue {
                break;
            }
            state.excluded.insert(v);
            excluded_here += 1;
        }
        for &v in &candidates[..excluded_here] {
            state.excluded.remove(v);
        }
        flow
    }

    /// Runs one search: find a cover of size ≤ `limit` inside `allowed`
    /// extending `forced`. With `stop_at_first` the first hit wins; otherwise
    /// the search keeps tightening and `best` ends optimal for this subspace.
    fn search(
        &self,
        allowed: &VertexSet,
        forced: &[usize],
        limit: usize,
        stop_at_first: bool,
        incumbent: Option<Vec<usize>>,
        budget: &mut Budget,
    ) -> Outcome {
        let mut state = SearchState {
            chosen: Vec::new(),
            chosen_set: VertexSet::new(self.cov.vertex_count()),
            excluded: VertexSet::new(self.cov.vertex_count()),
            deficit: vec![self.k as i32; self.cov.pair_count()],
            unsat: self.cov.pair_count(),
            allowed: allowed.clone(),
            limit,
            stop_at_first,
            best: incumbent,
        };
        for &v in forced {
            debug_assert!(allowed.contains(v));
            if !state.chosen_set.contains(v) {
                self.include(&mut state, v);
            }
        }
        let flow = self.dfs(&mut state, budget);
        Outcome {
            best: state.best,
            completed: flow != Flow::Abort && !budget.aborted,
        }
    }

    /// Given the optimum and one optimal witness, walks positions left to
    /// right replacing each entry by the smallest feasible id. Each probe is
    /// a feasibility search restricted to ids at or above the candidate.
    fn lex_smallest(
        &self,
        optimum: usize,
        incumbent: Vec<usize>,
        budget: &mut Budget,
    ) -> Vec<usize> {
        let n = self.cov.vertex_count();
        let mut best = incumbent;
        best.sort_unstable();
        let mut prefix: Vec<usize> = Vec::with_capacity(optimum);
        for pos in 0..optimum {
            let lo = prefix.last().map_or(0, |&x| x + 1);
            for v in lo..best[pos] {
                let mut allowed = VertexSet::new(n);
                for &x in &prefix {
                    allowed.insert(x);
                }
                for x in v..n {
                    allowed.insert(x);
                }
                let mut forced = prefix.clone();
                forced.push(v);
                let outcome = self.search(&allowed, &forced, optimum, true, None, budget);
                if let Some(mut found) = outcome.best {
                    found.sort_unstable();
                    best = found;
                    break;
                }
                if budget.aborted {
                    return best;
                }
            }
            prefix.push(best[pos]);
        }
        best
    }
}

// ---------------------------------------------------------------------------
// Public solve entry points
// ---------------------------------------------------------------------------

/// Exact minimum k-multicover by incumbent-pruned branch and bound.
pub fn solve_min_multicover(
    cov: &PairCoverage,
    k: usize,
    limits: &SearchLimits,
) -> Result<SolveReport, SolverError> {
    solve_min_multicover_with(cov, k, limits, Strategy::BranchAndBound)
}

/// Exact minimum k-multicover with an explicit search strategy.
pub fn solve_min_multicover_with(
    cov: &PairCoverage,
    k: usize,
    limits: &SearchLimits,
    strategy: Strategy,
) -> Result<SolveReport, SolverError> {
    check_multiplicity(k)?;
    let start = Instant::now();
    let allowed = VertexSet::full(cov.vertex_count());
    check_feasible(cov, k, &allowed)?;

    let greedy = greedy_multicover(cov, k)?;
    let upper: Vec<usize> = greedy.vertices().to_vec();
    let root_lb = lower_bound_multicover(cov, k, None);
    let mut budget = Budget::new(limits, start);

    if limits.max_nodes == Some(0) {
        return Ok(SolveReport {
            multiplicity: k,
            optimum: None,
            witness: None,
            lower_bound: root_lb,
            upper_bound: upper.len(),
            nodes_explored: 0,
            elapsed: start.elapsed(),
            status: SolveStatus::BoundsOnly,
        });
    }

    let engine = Engine::new(cov, k);
    let forced = forced_vertices(cov, k);

    let (optimum, incumbent, certified_lb) = match strategy {
        Strategy::BranchAndBound => {
            if root_lb == upper.len() {
                (Some(upper.len()), upper.clone(), root_lb)
            } else {
                let outcome = engine.search(
                    &allowed,
                    &forced,
                    upper.len().saturating_sub(1),
                    false,
                    Some(upper.clone()),
                    &mut budget,
                );
                let best = outcome.best.unwrap_or_else(|| upper.clone());
                if outcome.completed {
                    (Some(best.len()), best, root_lb)
                } else {
                    (None, best, root_lb)
                }
            }
        }
        Strategy::IterativeDeepening => {
            let mut level = root_lb;
            loop {
                if level >= upper.len() {
                    break (Some(upper.len()), upper.clone(), level);
                }
                let outcome = engine.search(&allowed, &forced, level, true, None, &mut budget);
                match outcome.best {
                    Some(found) => break (Some(found.len()), found, level),
                    None if outcome.completed => level += 1,
                    // Levels below `level` are refuted; this one is not.
                    None => break (None, upper.clone(), level),
                }
            }
        }
    };

    let report = match optimum {
        Some(opt) => {
            let witness = {
                let mut lex = engine.lex_smallest(opt, incumbent, &mut budget);
                lex.sort_unstable();
                LandmarkSet::new(lex).expect("search never repeats a vertex")
            };
            SolveReport {
                multiplicity: k,
                optimum: Some(opt),
                witness: Some(witness),
                lower_bound: opt,
                upper_bound: opt,
                nodes_explored: budget.nodes,
                elapsed: start.elapsed(),
                status: SolveStatus::Exact,
            }
        }
        None => SolveReport {
            multiplicity: k,
            optimum: None,
            witness: None,
            lower_bound: certified_lb,
            upper_bound: incumbent.len(),
            nodes_explored: budget.nodes,
            elapsed: start.elapsed(),
            status: SolveStatus::Timeout,
        },
    };
    Ok(report)
}

/// Bounded feasibility: does a k-cover of at most `size` vertices exist?
pub fn cover_exists_within(
    cov: &PairCoverage,
    k: usize,
    size: usize,
    limits: &SearchLimits,
) -> Result<Feasibility, SolverError> {
    check_multiplicity(k)?;
    let start = Instant::now();
    let allowed = VertexSet::full(cov.vertex_count());
    check_feasible(cov, k, &allowed)?;
    let engine = Engine::new(cov, k);
    let forced = forced_vertices(cov, k);
    let mut budget = Budget::new(limits, start);
    let outcome = engine.search(&allowed, &forced, size, true, None, &mut budget);
    Ok(match outcome.best {
        Some(mut found) => {
            found.sort_unstable();
            Feasibility::Found(LandmarkSet::new(found).expect("distinct by construction"))
        }
        None if outcome.completed => Feasibility::Infeasible,
        None => Feasibility::Unknown,
    })
}

/// Metric dimension: distances → pair coverage → minimum 1-cover.
pub fn dim(g: &Graph, limits: &SearchLimits) -> Result<SolveReport, SolverError> {
    let cov = pair_coverage(&all_pairs_distances(g));
    solve_min_multicover(&cov, 1, limits)
}

/// Fault-tolerant metric dimension: distances → pair coverage → minimum
/// 2-cover.
pub fn fdim(g: &Graph, limits: &SearchLimits) -> Result<SolveReport, SolverError> {
    let cov = pair_coverage(&all_pairs_distances(g));
    solve_min_multicover(&cov, 2, limits)
}
