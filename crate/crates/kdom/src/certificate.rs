//! Machine-checkable certificates for the Vizing-type bound
//! `gamma_k(G) * gamma_k(H) <= 2k * gamma_k(G box H)` on one instance.
//!
//! A certificate records every object of the double-projection argument:
//! the three optimal witnesses, the anchored k-partitions of `V(G)` and
//! `V(H)`, a dominator assignment that hands each of the `k^2` copies of a
//! product vertex one of its `k` dominators by the residue rule
//! `d((gh)_{sr}) = d_{(s+r) mod k}`, the binary block matrices recording
//! whether each copy is dominated through a G-edge (0) or an H-edge/itself
//! (1), the derived N/Y/S multisets, and the final inequality chain.
//! Verification re-derives everything from the stored pieces and never
//! trusts the construction.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::multiset::Multiset;
use crate::partition::{build_k_partition, KPartition, PartitionError};
use crate::product::{Factor, ProductGraph};
use crate::solver::{is_k_dominating, SolveResult};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("product vertex {vertex} has only {available} dominators in D_k, need {k}")]
    TooFewDominators {
        vertex: usize,
        available: usize,
        k: usize,
    },
}

/// Parse-stage failures: malformed JSON or a shape the verifier cannot
/// even load. Distinct from verification failures.
#[derive(Debug, Error)]
pub enum CertificateParseError {
    #[error("json error at {path}: {message}")]
    Json { path: String, message: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

fn schema_err(path: impl Into<String>, message: impl Into<String>) -> CertificateParseError {
    CertificateParseError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

// ---------------------------------------------------------------------------
// proof objects
// ---------------------------------------------------------------------------

/// For each product vertex, an ordered list of exactly `k` of its dominators
/// in `D_k`, taken with multiplicity in ascending product-id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatorAssignment {
    k: usize,
    lists: Vec<Vec<usize>>,
}

impl DominatorAssignment {
    pub fn from_lists(k: usize, lists: Vec<Vec<usize>>) -> Self {
        DominatorAssignment { k, lists }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    /// The dominator list `d_0..d_{k-1}` for product vertex `gh`.
    pub fn list(&self, gh: usize) -> &[usize] {
        &self.lists[gh]
    }

    /// The dominator handed to copy `(gh)_{sr}`: `d_{(s+r) mod k}`. For
    /// fixed `s`, letting `r` range over `0..k` yields each list entry
    /// exactly once.
    pub fn dominator_of_copy(&self, gh: usize, s: usize, r: usize) -> usize {
        assert!(s < self.k && r < self.k, "copy indices must lie in 0..k");
        self.lists[gh][(s + r) % self.k]
    }
}

/// Chooses the canonical dominator list for every product vertex: the first
/// `k` entries of `D_k` restricted to `N[gh]`, expanded by multiplicity in
/// ascending product-id order. Fails iff `D_k` is not `{k}`-dominating.
pub fn assign_dominators(
    pg: &ProductGraph,
    k: usize,
    d_k: &Multiset,
) -> Result<DominatorAssignment, CertificateError> {
    assert!(k >= 1, "k must be positive");
    let n = pg.vertex_count();
    let mut lists = Vec::with_capacity(n);
    for gh in 0..n {
        let closed = pg.graph().closed_neighborhood(gh);
        let mut list = Vec::with_capacity(k);
        'fill: for &d in &closed {
            for _ in 0..d_k.count(d) {
                list.push(d);
                if list.len() == k {
                    break 'fill;
                }
            }
        }
        if list.len() < k {
            return Err(CertificateError::TooFewDominators {
                vertex: gh,
                available: list.len(),
                k,
            });
        }
        lists.push(list);
    }
    Ok(DominatorAssignment { k, lists })
}

/// Which statements of the binary-matrix dichotomy a block matrix satisfies:
/// `A` - every column contains a 1; `B` - every row contains a 0.
/// Every nonempty 0/1 matrix satisfies at least one of the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MatrixClass {
    A,
    B,
}

/// Classifies a nonempty rectangular 0/1 matrix. The result is never empty:
/// a column without a 1 and a row without a 0 would have to disagree about
/// their shared entry.
pub fn classify_matrix(rows: &[Vec<bool>]) -> BTreeSet<MatrixClass> {
    assert!(
        !rows.is_empty()
            && rows
                .iter()
                .all(|r| r.len() == rows[0].len() && !r.is_empty()),
        "matrix must be nonempty and rectangular"
    );
    let cols = rows[0].len();
    let mut out = BTreeSet::new();
    if (0..cols).all(|c| rows.iter().any(|row| row[c])) {
        out.insert(MatrixClass::A);
    }
    if rows.iter().all(|row| row.iter().any(|&cell| !cell)) {
        out.insert(MatrixClass::B);
    }
    debug_assert!(!out.is_empty());
    out
}

/// The binary matrix `F_ij` over block pair `(P^G_i, P^H_j)`: rows follow
/// the sorted vertices of `P^G_i`, columns the sorted vertices of `P^H_j`.
/// Entry 1 means the assigned dominator is the vertex itself or acts
/// through an H-edge; 0 means it acts through a G-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrix {
    pub i: usize,
    pub j: usize,
    pub rows: Vec<Vec<bool>>,
    pub classification: BTreeSet<MatrixClass>,
}

fn dominated_through_g_edge(pg: &ProductGraph, gh: usize, dominator: usize) -> bool {
    let (g, h) = pg.coords(gh);
    let (dg, dh) = pg.coords(dominator);
    dh == h && dg != g && pg.g_factor().has_edge(dg, g)
}

#[allow(clippy::too_many_arguments)]
fn f_entry(
    pg: &ProductGraph,
    partition_g: &KPartition,
    partition_h: &KPartition,
    assignment: &DominatorAssignment,
    i: usize,
    j: usize,
    g: usize,
    h: usize,
) -> Option<bool> {
    let s = partition_g.inverse_block(g, i)?;
    let r = partition_h.inverse_block(h, j)?;
    // copy indices can run past k when a partition is corrupt
    if s >= assignment.k() || r >= assignment.k() {
        return None;
    }
    let gh = pg.index(g, h);
    if assignment.list(gh).len() != assignment.k() {
        return None;
    }
    let d = assignment.dominator_of_copy(gh, s, r);
    if d >= pg.vertex_count() {
        return None;
    }
    Some(!dominated_through_g_edge(pg, gh, d))
}

/// Builds `F_ij` with its classification from a valid partition pair and
/// assignment.
pub fn build_f_matrix(
    pg: &ProductGraph,
    partition_g: &KPartition,
    partition_h: &KPartition,
    assignment: &DominatorAssignment,
    i: usize,
    j: usize,
) -> BlockMatrix {
    let rows: Vec<Vec<bool>> = partition_g
        .block(i)
        .iter()
        .map(|&g| {
            partition_h
                .block(j)
                .iter()
                .map(|&h| {
                    f_entry(pg, partition_g, partition_h, assignment, i, j, g, h)
                        .expect("valid partitions define every entry")
                })
                .collect()
        })
        .collect();
    let classification = classify_matrix(&rows);
    BlockMatrix {
        i,
        j,
        rows,
        classification,
    }
}

/// The four values of the proved inequality chain:
/// `lhs <= sum_n <= sum_s = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Chain {
    /// `gamma_k(G) * gamma_k(H)`
    pub lhs: usize,
    /// `sum_i |N_i| + sum_j |N_bar_j|`
    pub sum_n: usize,
    /// `sum_i |S_i| + sum_j |S_bar_j|`
    pub sum_s: usize,
    /// `2k * gamma_k(G box H)`
    pub rhs: usize,
}

/// The full proof object for one `(G, H, k)` instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub k: usize,
    pub g: Graph,
    pub h: Graph,
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub gamma_gh: usize,
    pub witness_g: Multiset,
    pub witness_h: Multiset,
    /// Minimum `{k}`-dominating multiset of the product, over product ids.
    pub d_k: Multiset,
    pub partition_g: KPartition,
    pub partition_h: KPartition,
    pub assignment: DominatorAssignment,
    /// All `t_g * t_h` block matrices in row-major `(i, j)` order.
    pub blocks: Vec<BlockMatrix>,
    /// `N_i`: the anchors of H-blocks whose matrix satisfies statement A.
    pub n_sets: Vec<Multiset>,
    /// `N_bar_j`: the anchors of G-blocks whose matrix satisfies statement B.
    pub n_bar_sets: Vec<Multiset>,
    /// `Y_i`: union of the H-blocks counted in `N_i`.
    pub y_sets: Vec<Multiset>,
    /// `Y_bar_j`: union of the G-blocks counted in `N_bar_j`.
    pub y_bar_sets: Vec<Multiset>,
    /// `Z_i` over product ids; recomputable, stored only on request.
    pub z_sets: Option<Vec<Multiset>>,
    pub z_bar_sets: Option<Vec<Multiset>>,
    /// `|S_i|` where `S_i = D_k` intersected with the `k`-fold strip
    /// `P^G_i x V(H)`.
    pub s_sizes: Vec<usize>,
    pub s_bar_sizes: Vec<usize>,
    pub chain: Chain,
}

/// `S_i = D_k` intersected with `k`-fold `P_i x V(other factor)`, for every
/// block of the chosen factor's partition.
fn strip_multisets(
    pg: &ProductGraph,
    blocks: &[Vec<usize>],
    d_k: &Multiset,
    k: usize,
    factor: Factor,
) -> Vec<Multiset> {
    blocks
        .iter()
        .map(|block| {
            let mut strip = Multiset::new();
            for (v, mult) in d_k.iter() {
                let (gi, hi) = pg.coords(v);
                let key = match factor {
                    Factor::G => gi,
                    Factor::H => hi,
                };
                if block.binary_search(&key).is_ok() {
                    strip.insert_copies(v, mult.min(k));
                }
            }
            strip
        })
        .collect()
}

fn block_product_multiset(pg: &ProductGraph, g_block: &[usize], h_block: &[usize]) -> Multiset {
    let mut out = Multiset::new();
    for &g in g_block {
        for &h in h_block {
            out.insert(pg.index(g, h));
        }
    }
    out
}

/// Builds the complete certificate from three optimal solve results; see
/// [`build_certificate_with`] for the `Z`-storage switch.
pub fn build_certificate(
    g: &Graph,
    h: &Graph,
    k: usize,
    solve_g: &SolveResult,
    solve_h: &SolveResult,
    solve_gh: &SolveResult,
) -> Result<Certificate, CertificateError> {
    build_certificate_with(g, h, k, solve_g, solve_h, solve_gh, false)
}

/// Builds the certificate, optionally storing the recomputable `Z`
/// multisets alongside the required data.
pub fn build_certificate_with(
    g: &Graph,
    h: &Graph,
    k: usize,
    solve_g: &SolveResult,
    solve_h: &SolveResult,
    solve_gh: &SolveResult,
    store_z: bool,
) -> Result<Certificate, CertificateError> {
    assert!(k >= 1, "k must be positive");
    let anchors_g: Vec<usize> = solve_g.witness.expanded().collect();
    let anchors_h: Vec<usize> = solve_h.witness.expanded().collect();
    let partition_g = build_k_partition(g, k, &anchors_g)?;
    let partition_h = build_k_partition(h, k, &anchors_h)?;
    let pg = ProductGraph::new(g.clone(), h.clone());
    let d_k = solve_gh.witness.clone();
    let assignment = assign_dominators(&pg, k, &d_k)?;

    let (tg, th) = (partition_g.block_count(), partition_h.block_count());
    let mut blocks = Vec::with_capacity(tg * th);
    for i in 0..tg {
        for j in 0..th {
            blocks.push(build_f_matrix(
                &pg,
                &partition_g,
                &partition_h,
                &assignment,
                i,
                j,
            ));
        }
    }

    let mut n_sets = vec![Multiset::new(); tg];
    let mut n_bar_sets = vec![Multiset::new(); th];
    let mut y_sets = vec![Multiset::new(); tg];
    let mut y_bar_sets = vec![Multiset::new(); th];
    let mut z_sets = vec![Multiset::new(); tg];
    let mut z_bar_sets = vec![Multiset::new(); th];
    for bm in &blocks {
        if bm.classification.contains(&MatrixClass::A) {
            n_sets[bm.i].insert(anchors_h[bm.j]);
            for &hv in partition_h.block(bm.j) {
                y_sets[bm.i].insert(hv);
            }
            if store_z {
                z_sets[bm.i] = z_sets[bm.i].union(&block_product_multiset(
                    &pg,
                    partition_g.block(bm.i),
                    partition_h.block(bm.j),
                ));
            }
        }
        if bm.classification.contains(&MatrixClass::B) {
            n_bar_sets[bm.j].insert(anchors_g[bm.i]);
            for &gv in partition_g.block(bm.i) {
                y_bar_sets[bm.j].insert(gv);
            }
            if store_z {
                z_bar_sets[bm.j] = z_bar_sets[bm.j].union(&block_product_multiset(
                    &pg,
                    partition_g.block(bm.i),
                    partition_h.block(bm.j),
                ));
            }
        }
    }

    let s_sizes: Vec<usize> = strip_multisets(&pg, partition_g.blocks(), &d_k, k, Factor::G)
        .iter()
        .map(Multiset::cardinality)
        .collect();
    let s_bar_sizes: Vec<usize> = strip_multisets(&pg, partition_h.blocks(), &d_k, k, Factor::H)
        .iter()
        .map(Multiset::cardinality)
        .collect();

    let sum_n = n_sets
        .iter()
        .chain(&n_bar_sets)
        .map(Multiset::cardinality)
        .sum();
    let sum_s = s_sizes.iter().chain(&s_bar_sizes).sum();
    let chain = Chain {
        lhs: solve_g.gamma * solve_h.gamma,
        sum_n,
        sum_s,
        rhs: 2 * k * solve_gh.gamma,
    };

    Ok(Certificate {
        k,
        g: g.clone(),
        h: h.clone(),
        gamma_g: solve_g.gamma,
        gamma_h: solve_h.gamma,
        gamma_gh: solve_gh.gamma,
        witness_g: solve_g.witness.clone(),
        witness_h: solve_h.witness.clone(),
        d_k,
        partition_g,
        partition_h,
        assignment,
        blocks,
        n_sets,
        n_bar_sets,
        y_sets,
        y_bar_sets,
        z_sets: store_z.then_some(z_sets),
        z_bar_sets: store_z.then_some(z_bar_sets),
        s_sizes,
        s_bar_sizes,
        chain,
    })
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

/// Outcome of one of the nine verification checks.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub number: usize,
    pub name: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn run(number: usize, name: &'static str, failures: Vec<String>) -> Self {
        CheckResult {
            number,
            name,
            passed: failures.is_empty(),
            failures,
        }
    }
}

/// Per-check report of [`verify_certificate`].
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<usize> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.number)
            .collect()
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for check in &self.checks {
            write!(f, "check {} {:<28} ", check.number, check.name)?;
            if check.passed {
                writeln!(f, "PASS")?;
            } else {
                let shown = check.failures.iter().take(3).cloned().collect::<Vec<_>>();
                let more = check.failures.len().saturating_sub(3);
                write!(f, "FAIL: {}", shown.join("; "))?;
                if more > 0 {
                    write!(f, " (+{more} more)")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

struct Verifier<'a> {
    cert: &'a Certificate,
    pg: ProductGraph,
    anchors_g: &'a [usize],
    anchors_h: &'a [usize],
}

/// Re-checks every stored proof object against an independent
/// recomputation, in nine ordered steps:
///
/// 1. the three witnesses are `{k}`-dominating and match the stated gammas;
/// 2. both k-partitions are valid and anchored on the stated witnesses;
/// 3. every dominator list has length `k` and draws from `D_k` inside the
///    closed neighborhood of its vertex;
/// 4. every block-matrix entry recomputes identically and the stored
///    classification is correct and nonempty;
/// 5. `lhs = gamma_g * gamma_h <= sum |N_i| + sum |N_bar_j| = sum_n`,
///    with the `N` multisets matching their classification-derived values;
/// 6. each `Psi_H(S_i)` dominates `Y_i` and each `Psi_G(S_bar_j)`
///    dominates `Y_bar_j`, with the `Y` (and any stored `Z`) multisets
///    matching recomputation;
/// 7. `|S_i| >= |N_i|` and `|S_bar_j| >= |N_bar_j|` for every index;
/// 8. the strip sums satisfy `sum |S_i| = k |D_k| = sum |S_bar_j|`, each
///    stored size matching recomputation, and `sum_s` is their total;
/// 9. the final inequality `lhs <= 2k * gamma_gh = rhs` with the whole
///    chain in order.
pub fn verify_certificate(cert: &Certificate) -> VerifyReport {
    let pg = ProductGraph::new(cert.g.clone(), cert.h.clone());
    let v = Verifier {
        cert,
        pg,
        anchors_g: cert.partition_g.anchors(),
        anchors_h: cert.partition_h.anchors(),
    };
    let checks = vec![
        CheckResult::run(1, "witnesses", v.check_witnesses()),
        CheckResult::run(2, "partitions", v.check_partitions()),
        CheckResult::run(3, "dominator-assignment", v.check_assignment()),
        CheckResult::run(4, "block-matrices", v.check_matrices()),
        CheckResult::run(5, "block-count-inequality", v.check_block_counts()),
        CheckResult::run(6, "projection-domination", v.check_projection_domination()),
        CheckResult::run(7, "strip-vs-block-sizes", v.check_strip_vs_blocks()),
        CheckResult::run(8, "strip-sums", v.check_strip_sums()),
        CheckResult::run(9, "final-inequality", v.check_final_inequality()),
    ];
    VerifyReport { checks }
}

impl Verifier<'_> {
    fn check_witnesses(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        for (label, graph, witness, gamma) in [
            ("witness_g", &c.g, &c.witness_g, c.gamma_g),
            ("witness_h", &c.h, &c.witness_h, c.gamma_h),
            ("d_k", self.pg.graph(), &c.d_k, c.gamma_gh),
        ] {
            if witness
                .max_element()
                .is_some_and(|m| m >= graph.vertex_count())
            {
                fails.push(format!("{label} mentions an out-of-range vertex"));
                continue;
            }
            if !is_k_dominating(graph, c.k, witness) {
                fails.push(format!("{label} is not {{{}}}-dominating", c.k));
            }
            if witness.cardinality() != gamma {
                fails.push(format!(
                    "{label} has cardinality {} but states gamma {}",
                    witness.cardinality(),
                    gamma
                ));
            }
        }
        fails
    }

    fn check_partitions(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        for (label, graph, partition, witness, gamma) in [
            ("partition_g", &c.g, &c.partition_g, &c.witness_g, c.gamma_g),
            ("partition_h", &c.h, &c.partition_h, &c.witness_h, c.gamma_h),
        ] {
            for violation in partition.validate(graph) {
                fails.push(format!("{label}: {violation}"));
            }
            if partition.anchors().len() != gamma {
                fails.push(format!(
                    "{label} has {} anchors, expected gamma = {gamma}",
                    partition.anchors().len()
                ));
            }
            let anchor_multiset = Multiset::from_elements(partition.anchors().iter().copied());
            if &anchor_multiset != witness {
                fails.push(format!("{label} anchors do not realize the stated witness"));
            }
        }
        fails
    }

    fn check_assignment(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        let n = self.pg.vertex_count();
        if c.assignment.vertex_count() != n {
            fails.push(format!(
                "assignment covers {} vertices, product has {n}",
                c.assignment.vertex_count()
            ));
            return fails;
        }
        for gh in 0..n {
            let list = c.assignment.list(gh);
            if list.len() != c.k {
                fails.push(format!(
                    "vertex {}: list length {} != k",
                    self.pg.vertex_label(gh),
                    list.len()
                ));
                continue;
            }
            let closed = self.pg.graph().closed_neighborhood(gh);
            for &d in list {
                if d >= n || closed.binary_search(&d).is_err() {
                    fails.push(format!(
                        "vertex {}: dominator {} outside N[gh]",
                        self.pg.vertex_label(gh),
                        if d < n {
                            self.pg.vertex_label(d)
                        } else {
                            d.to_string()
                        }
                    ));
                }
            }
            let as_multiset = Multiset::from_elements(list.iter().copied());
            if !as_multiset.is_submultiset(&c.d_k) {
                fails.push(format!(
                    "vertex {}: list exceeds D_k multiplicities",
                    self.pg.vertex_label(gh)
                ));
            }
        }
        fails
    }

    fn check_matrices(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        let (tg, th) = (c.partition_g.block_count(), c.partition_h.block_count());
        let mut by_pos: BTreeMap<(usize, usize), &BlockMatrix> = BTreeMap::new();
        for bm in &c.blocks {
            if bm.i >= tg || bm.j >= th {
                fails.push(format!("block ({},{}) outside partition range", bm.i, bm.j));
                continue;
            }
            if by_pos.insert((bm.i, bm.j), bm).is_some() {
                fails.push(format!("block ({},{}) appears twice", bm.i, bm.j));
            }
        }
        for i in 0..tg {
            for j in 0..th {
                let Some(bm) = by_pos.get(&(i, j)) else {
                    fails.push(format!("block ({i},{j}) missing"));
                    continue;
                };
                let g_block = c.partition_g.block(i);
                let h_block = c.partition_h.block(j);
                let rect = bm.rows.len() == g_block.len()
                    && bm.rows.iter().all(|r| r.len() == h_block.len());
                if !rect {
                    fails.push(format!(
                        "block ({i},{j}) has shape {}x{:?}, expected {}x{}",
                        bm.rows.len(),
                        bm.rows.iter().map(Vec::len).max().unwrap_or(0),
                        g_block.len(),
                        h_block.len()
                    ));
                    continue;
                }
                for (row, &g) in bm.rows.iter().zip(g_block) {
                    for (&stored, &h) in row.iter().zip(h_block) {
                        match f_entry(
                            &self.pg,
                            &c.partition_g,
                            &c.partition_h,
                            &c.assignment,
                            i,
                            j,
                            g,
                            h,
                        ) {
                            Some(expected) if expected == stored => {}
                            Some(expected) => fails.push(format!(
                                "block ({i},{j}) cell ({g},{h}): stored {}, recomputed {}",
                                stored as u8, expected as u8
                            )),
                            None => fails.push(format!(
                                "block ({i},{j}) cell ({g},{h}): entry undefined (broken partition or assignment)"
                            )),
                        }
                    }
                }
                if !bm.rows.is_empty() && bm.rows.iter().all(|r| !r.is_empty()) {
                    let expected = classify_matrix(&bm.rows);
                    if expected != bm.classification {
                        fails.push(format!(
                            "block ({i},{j}) classification {:?} does not match matrix ({:?})",
                            bm.classification, expected
                        ));
                    }
                } else {
                    fails.push(format!("block ({i},{j}) is empty; nothing to classify"));
                }
                if bm.classification.is_empty() {
                    fails.push(format!("block ({i},{j}) classification is empty"));
                }
            }
        }
        fails
    }

    /// Recomputation needs every stored id in range; a hand-assembled
    /// certificate may violate that, which is a failure, not a panic.
    fn recomputation_guard(&self) -> Option<String> {
        let c = self.cert;
        let (ng, nh) = (c.g.vertex_count(), c.h.vertex_count());
        if c.d_k
            .max_element()
            .is_some_and(|m| m >= self.pg.vertex_count())
        {
            return Some("d_k mentions out-of-range product vertices".into());
        }
        if !c.partition_g.blocks().iter().flatten().all(|&v| v < ng)
            || !c.partition_h.blocks().iter().flatten().all(|&v| v < nh)
        {
            return Some("partition blocks mention out-of-range vertices".into());
        }
        let in_range = |sets: &[Multiset], n: usize| {
            sets.iter().all(|s| s.max_element().is_none_or(|m| m < n))
        };
        if !in_range(&c.n_sets, nh)
            || !in_range(&c.y_sets, nh)
            || !in_range(&c.n_bar_sets, ng)
            || !in_range(&c.y_bar_sets, ng)
        {
            return Some("stored factor multisets mention out-of-range vertices".into());
        }
        None
    }

    /// `N_i` recomputed from the stored classifications.
    fn recompute_n_sets(&self) -> (Vec<Multiset>, Vec<Multiset>) {
        let c = self.cert;
        let (tg, th) = (c.partition_g.block_count(), c.partition_h.block_count());
        let mut n_sets = vec![Multiset::new(); tg];
        let mut n_bar_sets = vec![Multiset::new(); th];
        for bm in &c.blocks {
            if bm.i >= tg || bm.j >= th {
                continue;
            }
            if bm.classification.contains(&MatrixClass::A) {
                if let Some(&anchor) = self.anchors_h.get(bm.j) {
                    n_sets[bm.i].insert(anchor);
                }
            }
            if bm.classification.contains(&MatrixClass::B) {
                if let Some(&anchor) = self.anchors_g.get(bm.i) {
                    n_bar_sets[bm.j].insert(anchor);
                }
            }
        }
        (n_sets, n_bar_sets)
    }

    fn recompute_y_sets(&self) -> (Vec<Multiset>, Vec<Multiset>) {
        let c = self.cert;
        let (tg, th) = (c.partition_g.block_count(), c.partition_h.block_count());
        let mut y_sets = vec![Multiset::new(); tg];
        let mut y_bar_sets = vec![Multiset::new(); th];
        for bm in &c.blocks {
            if bm.i >= tg || bm.j >= th {
                continue;
            }
            if bm.classification.contains(&MatrixClass::A) {
                for &hv in c.partition_h.block(bm.j) {
                    y_sets[bm.i].insert(hv);
                }
            }
            if bm.classification.contains(&MatrixClass::B) {
                for &gv in c.partition_g.block(bm.i) {
                    y_bar_sets[bm.j].insert(gv);
                }
            }
        }
        (y_sets, y_bar_sets)
    }

    fn check_block_counts(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        let (n_sets, n_bar_sets) = self.recompute_n_sets();
        if c.n_sets != n_sets {
            fails.push("stored n_sets do not match the classifications".to_string());
        }
        if c.n_bar_sets != n_bar_sets {
            fails.push("stored n_bar_sets do not match the classifications".to_string());
        }
        let sum_n: usize = c
            .n_sets
            .iter()
            .chain(&c.n_bar_sets)
            .map(Multiset::cardinality)
            .sum();
        if c.chain.lhs != c.gamma_g * c.gamma_h {
            fails.push(format!(
                "chain lhs {} != gamma_g * gamma_h = {}",
                c.chain.lhs,
                c.gamma_g * c.gamma_h
            ));
        }
        if c.chain.sum_n != sum_n {
            fails.push(format!(
                "chain sum_n {} != recomputed {}",
                c.chain.sum_n, sum_n
            ));
        }
        if c.chain.lhs > sum_n {
            fails.push(format!(
                "block-count inequality violated: {} > {}",
                c.chain.lhs, sum_n
            ));
        }
        fails
    }

    fn check_projection_domination(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        if let Some(reason) = self.recomputation_guard() {
            return vec![reason];
        }
        let (y_sets, y_bar_sets) = self.recompute_y_sets();
        if c.y_sets != y_sets {
            fails.push("stored y_sets do not match the classifications".to_string());
        }
        if c.y_bar_sets != y_bar_sets {
            fails.push("stored y_bar_sets do not match the classifications".to_string());
        }
        let strips = strip_multisets(&self.pg, c.partition_g.blocks(), &c.d_k, c.k, Factor::G);
        for (i, (strip, y)) in strips.iter().zip(&c.y_sets).enumerate() {
            let psi = self.pg.psi_projection(strip, Factor::H);
            if !c.h.dominates(&psi, y) {
                fails.push(format!("Psi_H(S_{i}) does not dominate Y_{i}"));
            }
        }
        let bar_strips = strip_multisets(&self.pg, c.partition_h.blocks(), &c.d_k, c.k, Factor::H);
        for (j, (strip, y)) in bar_strips.iter().zip(&c.y_bar_sets).enumerate() {
            let psi = self.pg.psi_projection(strip, Factor::G);
            if !c.g.dominates(&psi, y) {
                fails.push(format!("Psi_G(S_bar_{j}) does not dominate Y_bar_{j}"));
            }
        }
        if let Some(z_sets) = &c.z_sets {
            let recomputed = self.recompute_z_sets(MatrixClass::A);
            if z_sets != &recomputed {
                fails.push("stored z_sets do not match the classifications".to_string());
            }
            for (i, (z, y)) in z_sets.iter().zip(&c.y_sets).enumerate() {
                if &self.pg.phi_projection(z, Factor::H) != y {
                    fails.push(format!("Phi_H(Z_{i}) != Y_{i}"));
                }
            }
        }
        if let Some(z_bar_sets) = &c.z_bar_sets {
            let recomputed = self.recompute_z_sets(MatrixClass::B);
            if z_bar_sets != &recomputed {
                fails.push("stored z_bar_sets do not match the classifications".to_string());
            }
            for (j, (z, y)) in z_bar_sets.iter().zip(&c.y_bar_sets).enumerate() {
                if &self.pg.phi_projection(z, Factor::G) != y {
                    fails.push(format!("Phi_G(Z_bar_{j}) != Y_bar_{j}"));
                }
            }
        }
        fails
    }

    fn recompute_z_sets(&self, class: MatrixClass) -> Vec<Multiset> {
        let c = self.cert;
        let (tg, th) = (c.partition_g.block_count(), c.partition_h.block_count());
        let count = match class {
            MatrixClass::A => tg,
            MatrixClass::B => th,
        };
        let mut out = vec![Multiset::new(); count];
        for bm in &c.blocks {
            if bm.i >= tg || bm.j >= th || !bm.classification.contains(&class) {
                continue;
            }
            let product = block_product_multiset(
                &self.pg,
                c.partition_g.block(bm.i),
                c.partition_h.block(bm.j),
            );
            let slot = match class {
                MatrixClass::A => bm.i,
                MatrixClass::B => bm.j,
            };
            out[slot] = out[slot].union(&product);
        }
        out
    }

    fn check_strip_vs_blocks(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        for (label, sizes, sets) in [
            ("S", &c.s_sizes, &c.n_sets),
            ("S_bar", &c.s_bar_sizes, &c.n_bar_sets),
        ] {
            if sizes.len() != sets.len() {
                fails.push(format!(
                    "{label} has {} sizes for {} N multisets",
                    sizes.len(),
                    sets.len()
                ));
                continue;
            }
            for (idx, (&size, n)) in sizes.iter().zip(sets).enumerate() {
                if size < n.cardinality() {
                    fails.push(format!(
                        "|{label}_{idx}| = {size} < |N_{idx}| = {}",
                        n.cardinality()
                    ));
                }
            }
        }
        fails
    }

    fn check_strip_sums(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        if let Some(reason) = self.recomputation_guard() {
            return vec![reason];
        }
        let strips = strip_multisets(&self.pg, c.partition_g.blocks(), &c.d_k, c.k, Factor::G);
        let bar_strips = strip_multisets(&self.pg, c.partition_h.blocks(), &c.d_k, c.k, Factor::H);
        for (label, stored, recomputed) in [
            ("s_sizes", &c.s_sizes, &strips),
            ("s_bar_sizes", &c.s_bar_sizes, &bar_strips),
        ] {
            if stored.len() != recomputed.len() {
                fails.push(format!(
                    "{label} has {} entries for {} blocks",
                    stored.len(),
                    recomputed.len()
                ));
                continue;
            }
            for (idx, (&size, strip)) in stored.iter().zip(recomputed).enumerate() {
                if size != strip.cardinality() {
                    fails.push(format!(
                        "{label}[{idx}] = {size} but the strip recomputes to {}",
                        strip.cardinality()
                    ));
                }
            }
        }
        let target = c.k * c.d_k.cardinality();
        let sum_s: usize = c.s_sizes.iter().sum();
        let sum_s_bar: usize = c.s_bar_sizes.iter().sum();
        if sum_s != target {
            fails.push(format!("sum |S_i| = {sum_s} != k|D_k| = {target}"));
        }
        if sum_s_bar != target {
            fails.push(format!("sum |S_bar_j| = {sum_s_bar} != k|D_k| = {target}"));
        }
        if c.chain.sum_s != sum_s + sum_s_bar {
            fails.push(format!(
                "chain sum_s {} != {} + {}",
                c.chain.sum_s, sum_s, sum_s_bar
            ));
        }
        fails
    }

    fn check_final_inequality(&self) -> Vec<String> {
        let c = self.cert;
        let mut fails = Vec::new();
        if c.chain.rhs != 2 * c.k * c.gamma_gh {
            fails.push(format!(
                "chain rhs {} != 2k * gamma_gh = {}",
                c.chain.rhs,
                2 * c.k * c.gamma_gh
            ));
        }
        let Chain {
            lhs,
            sum_n,
            sum_s,
            rhs,
        } = c.chain;
        if !(lhs <= sum_n && sum_n <= sum_s && sum_s <= rhs) {
            fails.push(format!(
                "chain out of order: {lhs} <= {sum_n} <= {sum_s} <= {rhs} fails"
            ));
        }
        if lhs > rhs {
            fails.push(format!("final inequality violated: {lhs} > {rhs}"));
        }
        fails
    }
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionFile {
    anchors: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockFile {
    i: usize,
    j: usize,
    rows: Vec<String>,
    class: Vec<String>,
}

/// Wire form of a multiset: `[vertex, multiplicity]` rows.
type CountRows = Vec<(usize, usize)>;
/// Wire form of a product multiset: `[[g, h], multiplicity]` rows.
type ProductCountRows = Vec<((usize, usize), usize)>;
/// Wire form of the assignment: `[[g, h], [[g', h'], ...]]` rows.
type AssignmentRows = Vec<((usize, usize), Vec<(usize, usize)>)>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    version: u32,
    k: usize,
    g: GraphFile,
    h: GraphFile,
    gamma_g: usize,
    gamma_h: usize,
    gamma_gh: usize,
    witness_g: CountRows,
    witness_h: CountRows,
    d_k: ProductCountRows,
    partition_g: PartitionFile,
    partition_h: PartitionFile,
    assignment: AssignmentRows,
    blocks: Vec<BlockFile>,
    n_sets: Vec<CountRows>,
    n_bar_sets: Vec<CountRows>,
    y_sets: Vec<CountRows>,
    y_bar_sets: Vec<CountRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    z_sets: Option<Vec<ProductCountRows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    z_bar_sets: Option<Vec<ProductCountRows>>,
    s_sizes: Vec<usize>,
    s_bar_sizes: Vec<usize>,
    chain: Chain,
}

fn multiset_to_pairs(ms: &Multiset) -> CountRows {
    ms.iter().collect()
}

fn product_multiset_to_pairs(pg: &ProductGraph, ms: &Multiset) -> ProductCountRows {
    ms.iter().map(|(v, m)| (pg.coords(v), m)).collect()
}

/// Serializes a certificate to its JSON text form.
pub fn serialize_certificate(cert: &Certificate) -> String {
    let pg = ProductGraph::new(cert.g.clone(), cert.h.clone());
    let file = CertificateFile {
        version: 1,
        k: cert.k,
        g: GraphFile {
            n: cert.g.vertex_count(),
            edges: cert.g.edges(),
        },
        h: GraphFile {
            n: cert.h.vertex_count(),
            edges: cert.h.edges(),
        },
        gamma_g: cert.gamma_g,
        gamma_h: cert.gamma_h,
        gamma_gh: cert.gamma_gh,
        witness_g: multiset_to_pairs(&cert.witness_g),
        witness_h: multiset_to_pairs(&cert.witness_h),
        d_k: product_multiset_to_pairs(&pg, &cert.d_k),
        partition_g: PartitionFile {
            anchors: cert.partition_g.anchors().to_vec(),
            blocks: cert.partition_g.blocks().to_vec(),
        },
        partition_h: PartitionFile {
            anchors: cert.partition_h.anchors().to_vec(),
            blocks: cert.partition_h.blocks().to_vec(),
        },
        assignment: (0..cert.assignment.vertex_count())
            .map(|gh| {
                (
                    pg.coords(gh),
                    cert.assignment
                        .list(gh)
                        .iter()
                        .map(|&d| pg.coords(d))
                        .collect(),
                )
            })
            .collect(),
        blocks: cert
            .blocks
            .iter()
            .map(|bm| BlockFile {
                i: bm.i,
                j: bm.j,
                rows: bm
                    .rows
                    .iter()
                    .map(|row| row.iter().map(|&b| if b { '1' } else { '0' }).collect())
                    .collect(),
                class: bm
                    .classification
                    .iter()
                    .map(|c| match c {
                        MatrixClass::A => "a".to_string(),
                        MatrixClass::B => "b".to_string(),
                    })
                    .collect(),
            })
            .collect(),
        n_sets: cert.n_sets.iter().map(multiset_to_pairs).collect(),
        n_bar_sets: cert.n_bar_sets.iter().map(multiset_to_pairs).collect(),
        y_sets: cert.y_sets.iter().map(multiset_to_pairs).collect(),
        y_bar_sets: cert.y_bar_sets.iter().map(multiset_to_pairs).collect(),
        z_sets: cert.z_sets.as_ref().map(|zs| {
            zs.iter()
                .map(|z| product_multiset_to_pairs(&pg, z))
                .collect()
        }),
        z_bar_sets: cert.z_bar_sets.as_ref().map(|zs| {
            zs.iter()
                .map(|z| product_multiset_to_pairs(&pg, z))
                .collect()
        }),
        s_sizes: cert.s_sizes.clone(),
        s_bar_sizes: cert.s_bar_sizes.clone(),
        chain: cert.chain,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("certificate serialization");
    text.push('\n');
    text
}

fn pairs_to_multiset(
    pairs: &[(usize, usize)],
    n: usize,
    path: &str,
) -> Result<Multiset, CertificateParseError> {
    let mut ms = Multiset::new();
    for (idx, &(v, mult)) in pairs.iter().enumerate() {
        if v >= n {
            return Err(schema_err(
                format!("{path}[{idx}]"),
                format!("vertex {v} out of range for {n} vertices"),
            ));
        }
        if mult == 0 {
            return Err(schema_err(format!("{path}[{idx}]"), "zero multiplicity"));
        }
        if ms.count(v) > 0 {
            return Err(schema_err(
                format!("{path}[{idx}]"),
                format!("duplicate element {v}"),
            ));
        }
        ms.insert_copies(v, mult);
    }
    Ok(ms)
}

fn pair_to_index(
    pair: (usize, usize),
    ng: usize,
    nh: usize,
    path: &str,
) -> Result<usize, CertificateParseError> {
    let (g, h) = pair;
    if g >= ng || h >= nh {
        return Err(schema_err(
            path.to_string(),
            format!("product vertex ({g},{h}) out of range for {ng}x{nh}"),
        ));
    }
    Ok(g * nh + h)
}

fn product_pairs_to_multiset(
    pairs: &[((usize, usize), usize)],
    ng: usize,
    nh: usize,
    path: &str,
) -> Result<Multiset, CertificateParseError> {
    let mut ms = Multiset::new();
    for (idx, &(pair, mult)) in pairs.iter().enumerate() {
        let v = pair_to_index(pair, ng, nh, &format!("{path}[{idx}]"))?;
        if mult == 0 {
            return Err(schema_err(format!("{path}[{idx}]"), "zero multiplicity"));
        }
        if ms.count(v) > 0 {
            return Err(schema_err(
                format!("{path}[{idx}]"),
                format!("duplicate element ({},{})", pair.0, pair.1),
            ));
        }
        ms.insert_copies(v, mult);
    }
    Ok(ms)
}

fn partition_from_file(
    file: &PartitionFile,
    k: usize,
    n: usize,
    path: &str,
) -> Result<KPartition, CertificateParseError> {
    for (idx, &a) in file.anchors.iter().enumerate() {
        if a >= n {
            return Err(schema_err(
                format!("{path}.anchors[{idx}]"),
                format!("vertex {a} out of range"),
            ));
        }
    }
    for (bi, block) in file.blocks.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &v in block {
            if v >= n {
                return Err(schema_err(
                    format!("{path}.blocks[{bi}]"),
                    format!("vertex {v} out of range"),
                ));
            }
            if !seen.insert(v) {
                return Err(schema_err(
                    format!("{path}.blocks[{bi}]"),
                    format!("duplicate vertex {v}; blocks are sets"),
                ));
            }
        }
    }
    Ok(KPartition::from_parts(
        k,
        file.anchors.clone(),
        file.blocks.clone(),
        n,
    ))
}

/// Parses certificate JSON. Malformed JSON and ill-shaped data produce a
/// [`CertificateParseError`]; semantically wrong proofs parse fine and fail
/// under [`verify_certificate`].
pub fn parse_certificate(text: &str) -> Result<Certificate, CertificateParseError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let file: CertificateFile =
        serde_path_to_error::deserialize(&mut de).map_err(|e| CertificateParseError::Json {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;

    if file.version != 1 {
        return Err(schema_err(
            "version",
            format!("unsupported version {}", file.version),
        ));
    }
    if file.k == 0 {
        return Err(schema_err("k", "k must be positive"));
    }
    let g = Graph::from_edges(file.g.n, &file.g.edges)
        .map_err(|e| schema_err("g.edges", e.to_string()))?;
    let h = Graph::from_edges(file.h.n, &file.h.edges)
        .map_err(|e| schema_err("h.edges", e.to_string()))?;
    let (ng, nh) = (g.vertex_count(), h.vertex_count());

    let witness_g = pairs_to_multiset(&file.witness_g, ng, "witness_g")?;
    let witness_h = pairs_to_multiset(&file.witness_h, nh, "witness_h")?;
    let d_k = product_pairs_to_multiset(&file.d_k, ng, nh, "d_k")?;
    let partition_g = partition_from_file(&file.partition_g, file.k, ng, "partition_g")?;
    let partition_h = partition_from_file(&file.partition_h, file.k, nh, "partition_h")?;

    let product_n = ng * nh;
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; product_n];
    for (idx, (pair, dominators)) in file.assignment.iter().enumerate() {
        let gh = pair_to_index(*pair, ng, nh, &format!("assignment[{idx}]"))?;
        if lists[gh].is_some() {
            return Err(schema_err(
                format!("assignment[{idx}]"),
                format!("duplicate entry for vertex ({},{})", pair.0, pair.1),
            ));
        }
        let mut list = Vec::with_capacity(dominators.len());
        for (di, &d) in dominators.iter().enumerate() {
            list.push(pair_to_index(
                d,
                ng,
                nh,
                &format!("assignment[{idx}].1[{di}]"),
            )?);
        }
        lists[gh] = Some(list);
    }
    let lists: Vec<Vec<usize>> = lists
        .into_iter()
        .enumerate()
        .map(|(gh, list)| {
            list.ok_or_else(|| {
                schema_err(
                    "assignment",
                    format!("missing entry for product vertex {gh}"),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    let assignment = DominatorAssignment::from_lists(file.k, lists);

    let mut blocks = Vec::with_capacity(file.blocks.len());
    for (idx, bf) in file.blocks.iter().enumerate() {
        let mut rows = Vec::with_capacity(bf.rows.len());
        for (ri, row) in bf.rows.iter().enumerate() {
            let mut cells = Vec::with_capacity(row.len());
            for ch in row.chars() {
                match ch {
                    '0' => cells.push(false),
                    '1' => cells.push(true),
                    other => {
                        return Err(schema_err(
                            format!("blocks[{idx}].rows[{ri}]"),
                            format!("invalid matrix character {other:?}"),
                        ))
                    }
                }
            }
            rows.push(cells);
        }
        let mut classification = BTreeSet::new();
        for (ci, class) in bf.class.iter().enumerate() {
            let parsed = match class.as_str() {
                "a" => MatrixClass::A,
                "b" => MatrixClass::B,
                other => {
                    return Err(schema_err(
                        format!("blocks[{idx}].class[{ci}]"),
                        format!("invalid class {other:?}, expected \"a\" or \"b\""),
                    ))
                }
            };
            if !classification.insert(parsed) {
                return Err(schema_err(
                    format!("blocks[{idx}].class[{ci}]"),
                    format!("duplicate class {class:?}"),
                ));
            }
        }
        blocks.push(BlockMatrix {
            i: bf.i,
            j: bf.j,
            rows,
            classification,
        });
    }

    let sets_from = |files: &[CountRows],
                     n: usize,
                     path: &str|
     -> Result<Vec<Multiset>, CertificateParseError> {
        files
            .iter()
            .enumerate()
            .map(|(idx, pairs)| pairs_to_multiset(pairs, n, &format!("{path}[{idx}]")))
            .collect()
    };
    let n_sets = sets_from(&file.n_sets, nh, "n_sets")?;
    let n_bar_sets = sets_from(&file.n_bar_sets, ng, "n_bar_sets")?;
    let y_sets = sets_from(&file.y_sets, nh, "y_sets")?;
    let y_bar_sets = sets_from(&file.y_bar_sets, ng, "y_bar_sets")?;

    let z_from = |files: &Option<Vec<ProductCountRows>>,
                  path: &str|
     -> Result<Option<Vec<Multiset>>, CertificateParseError> {
        files
            .as_ref()
            .map(|zs| {
                zs.iter()
                    .enumerate()
                    .map(|(idx, pairs)| {
                        product_pairs_to_multiset(pairs, ng, nh, &format!("{path}[{idx}]"))
                    })
                    .collect()
            })
            .transpose()
    };
    let z_sets = z_from(&file.z_sets, "z_sets")?;
    let z_bar_sets = z_from(&file.z_bar_sets, "z_bar_sets")?;

    Ok(Certificate {
        k: file.k,
        g,
        h,
        gamma_g: file.gamma_g,
        gamma_h: file.gamma_h,
        gamma_gh: file.gamma_gh,
        witness_g,
        witness_h,
        d_k,
        partition_g,
        partition_h,
        assignment,
        blocks,
        n_sets,
        n_bar_sets,
        y_sets,
        y_bar_sets,
        z_sets,
        z_bar_sets,
        s_sizes: file.s_sizes,
        s_bar_sizes: file.s_bar_sizes,
        chain: file.chain,
    })
}
