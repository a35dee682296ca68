//! Exact computation of the integer domination number `gamma_k`.
//!
//! Two independent routes are provided: [`gamma_brute`] exhaustively scans
//! multiplicity vectors and serves as the oracle, while [`gamma_bnb`] is a
//! branch-and-bound search that handles product graphs in the 20-25 vertex
//! range. Both return an optimal witness multiset.
//!
//! A minimum witness never needs more than `k` copies on one vertex: with
//! `k+1` copies at `v`, every vertex of `N[v]` already sees coverage above
//! `k`, so one copy could be dropped without losing feasibility. All
//! searches therefore range over multiplicities `0..=k`.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;
use crate::multiset::Multiset;

/// Default cap on the number of brute-force configurations `(k+1)^n`.
pub const DEFAULT_BRUTE_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Bnb,
}

/// Outcome of an exact solve: the domination number and a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub gamma: usize,
    pub witness: Multiset,
    pub method: Method,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// False only when a time budget expired; the witness is then the best
    /// known feasible incumbent rather than a proven optimum.
    pub optimal: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("instance too large for brute force: (k+1)^n = {configurations} exceeds cap {cap}")]
    InstanceTooLarge { configurations: u128, cap: u128 },
}

/// True iff every closed neighborhood holds at least `k` copies of `d`,
/// counted with multiplicity.
pub fn is_k_dominating(g: &Graph, k: usize, d: &Multiset) -> bool {
    assert!(k >= 1, "k must be positive");
    (0..g.vertex_count()).all(|v| d.count_over_set(&g.closed_neighborhood(v)) >= k)
}

/// Certificate-free lower bound `ceil(k * n / (max_degree + 1))`.
pub fn lower_bound(g: &Graph, k: usize) -> usize {
    assert!(k >= 1, "k must be positive");
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    (k * n).div_ceil(g.max_degree() + 1)
}

/// Greedy feasible witness: repeatedly add one copy of the vertex whose
/// closed neighborhood covers the most remaining deficit, ties broken by
/// lowest id. Always `{k}`-dominating; never smaller than `gamma_k`.
pub fn greedy_upper(g: &Graph, k: usize) -> Multiset {
    assert!(k >= 1, "k must be positive");
    let n = g.vertex_count();
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut coverage = vec![0usize; n];
    let mut total_deficit = k * n;
    let mut witness = Multiset::new();
    while total_deficit > 0 {
        let mut best_v = 0;
        let mut best_gain = 0;
        for (v, nbrs) in closed.iter().enumerate() {
            let gain = nbrs.iter().filter(|&&w| coverage[w] < k).count();
            if gain > best_gain {
                best_gain = gain;
                best_v = v;
            }
        }
        debug_assert!(best_gain > 0, "positive deficit implies positive gain");
        witness.insert(best_v);
        for &w in &closed[best_v] {
            if coverage[w] < k {
                total_deficit -= 1;
            }
            coverage[w] += 1;
        }
    }
    witness
}

/// Exhaustive oracle with the default configuration cap.
pub fn gamma_brute(g: &Graph, k: usize) -> Result<SolveResult, SolverError> {
    gamma_brute_with_cap(g, k, DEFAULT_BRUTE_CAP)
}

/// Exhaustive oracle: enumerates every multiplicity vector in `{0..k}^V` in
/// lexicographic order and keeps the first minimum-cardinality feasible one.
pub fn gamma_brute_with_cap(g: &Graph, k: usize, cap: u128) -> Result<SolveResult, SolverError> {
    assert!(k >= 1, "k must be positive");
    let start = Instant::now();
    let n = g.vertex_count();
    let configurations = (k as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
    if configurations > cap {
        return Err(SolverError::InstanceTooLarge {
            configurations,
            cap,
        });
    }
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighborhood(v)).collect();

    let mut mult = vec![0usize; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut nodes = 0u64;
    loop {
        nodes += 1;
        let size: usize = mult.iter().sum();
        let better = best.as_ref().is_none_or(|(b, _)| size < *b);
        if better {
            let feasible = (0..n).all(|v| closed[v].iter().map(|&w| mult[w]).sum::<usize>() >= k);
            if feasible {
                best = Some((size, mult.clone()));
            }
        }
        // odometer step, least-significant digit last
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if mult[pos] < k {
                mult[pos] += 1;
                break;
            }
            mult[pos] = 0;
        }
        if mult.iter().all(|&m| m == 0) {
            break;
        }
    }
    let (gamma, vector) = best.expect("the all-k vector is always feasible");
    Ok(SolveResult {
        gamma,
        witness: Multiset::from_counts(vector.into_iter().enumerate()),
        method: Method::Brute,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        optimal: true,
    })
}

/// Branch-and-bound solve with no time budget; always optimal.
pub fn gamma_bnb(g: &Graph, k: usize) -> SolveResult {
    gamma_bnb_with_budget(g, k, None)
}

/// Branch-and-bound solve. Branches on vertices in descending-degree order
/// (ties by ascending id) over multiplicities `k..=0`, prunes with the
/// greedy incumbent, a residual deficit bound, and a reachability check on
/// each partially decided neighborhood.
///
/// When `budget` expires the best known incumbent is returned with
/// `optimal: false`.
pub fn gamma_bnb_with_budget(g: &Graph, k: usize, budget: Option<Duration>) -> SolveResult {
    assert!(k >= 1, "k must be positive");
    let start = Instant::now();
    let n = g.vertex_count();
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighborhood(v)).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    // With descending degrees the largest closed neighborhood among the
    // still-undecided vertices is always the next one in order.
    let max_closed_from: Vec<usize> = order.iter().map(|&v| closed[v].len()).collect();

    let incumbent = greedy_upper(g, k);
    let mut search = BnbSearch {
        k,
        closed: &closed,
        order: &order,
        max_closed_from: &max_closed_from,
        best_size: incumbent.cardinality(),
        best: incumbent,
        mult: vec![0; n],
        coverage: vec![0; n],
        undecided_cap: closed.iter().map(|nb| k * nb.len()).collect(),
        total_deficit: k * n,
        size: 0,
        nodes: 0,
        deadline: budget.map(|b| start + b),
        timed_out: false,
    };
    search.recurse(0);
    let timed_out = search.timed_out;
    SolveResult {
        gamma: search.best_size,
        witness: search.best,
        method: Method::Bnb,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
        optimal: !timed_out,
    }
}

struct BnbSearch<'a> {
    k: usize,
    closed: &'a [Vec<usize>],
    order: &'a [usize],
    max_closed_from: &'a [usize],
    best_size: usize,
    best: Multiset,
    mult: Vec<usize>,
    coverage: Vec<usize>,
    /// Coverage still obtainable for each vertex from undecided neighbors.
    undecided_cap: Vec<usize>,
    total_deficit: usize,
    size: usize,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl BnbSearch<'_> {
    fn recurse(&mut self, pos: usize) {
        self.nodes += 1;
        if self.timed_out {
            return;
        }
        if let Some(deadline) = self.deadline {
            // checked at the root so a zero budget times out deterministically
            if (self.nodes == 1 || self.nodes.is_multiple_of(1024)) && Instant::now() >= deadline {
                self.timed_out = true;
                return;
            }
        }
        if self.total_deficit == 0 {
            if self.size < self.best_size {
                self.best_size = self.size;
                self.best = Multiset::from_counts(self.mult.iter().copied().enumerate());
            }
            return;
        }
        if pos == self.order.len() {
            return; // deficit remains with nothing left to place
        }
        // Each further copy removes at most one unit of deficit per member
        // of its closed neighborhood.
        let needed = self.total_deficit.div_ceil(self.max_closed_from[pos]);
        if self.size + needed >= self.best_size {
            return;
        }
        let v = self.order[pos];
        for m in (0..=self.k).rev() {
            if self.size + m >= self.best_size {
                continue;
            }
            let reachable = self.assign(v, m);
            // Less coverage can only make unreachable vertices worse.
            if !reachable {
                self.unassign(v, m);
                break;
            }
            self.recurse(pos + 1);
            self.unassign(v, m);
            if self.timed_out {
                return;
            }
        }
    }

    /// Applies `mult[v] = m`, marking `v` decided. Returns false when some
    /// neighbor can no longer reach coverage `k` even if every undecided
    /// neighbor takes `k` copies.
    fn assign(&mut self, v: usize, m: usize) -> bool {
        self.mult[v] = m;
        self.size += m;
        let mut reachable = true;
        for &w in &self.closed[v] {
            let before = self.coverage[w].min(self.k);
            self.coverage[w] += m;
            self.total_deficit -= self.coverage[w].min(self.k) - before;
            self.undecided_cap[w] -= self.k;
            if self.coverage[w] + self.undecided_cap[w] < self.k {
                reachable = false;
            }
        }
        reachable
    }

    fn unassign(&mut self, v: usize, m: usize) {
        for &w in &self.closed[v] {
            let before = self.coverage[w].min(self.k);
            self.coverage[w] -= m;
            self.total_deficit += before - self.coverage[w].min(self.k);
            self.undecided_cap[w] += self.k;
        }
        self.mult[v] = 0;
        self.size -= m;
    }
}
