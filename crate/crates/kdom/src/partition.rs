//! k-partitions of a vertex set anchored at the elements of a
//! `{k}`-dominating sequence.
//!
//! A k-partition assigns every vertex to exactly `k` distinct blocks, one
//! block per anchor position, with block `i` containing its anchor `u_i` and
//! staying inside `N[u_i]`. The per-vertex sorted list of block indices is
//! the membership function `f_v`.

use thiserror::Error;

use crate::graph::Graph;
use crate::multiset::Multiset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("anchors are not a {{{k}}}-dominating multiset: vertex {vertex} sees only {seen} anchor copies")]
    AnchorsNotDominating {
        k: usize,
        vertex: usize,
        seen: usize,
    },
    #[error("anchor {vertex} has multiplicity {mult} > k = {k}")]
    AnchorMultiplicityTooHigh {
        vertex: usize,
        mult: usize,
        k: usize,
    },
    #[error("anchor {vertex} out of range for {n} vertices")]
    AnchorOutOfRange { vertex: usize, n: usize },
}

/// A single broken invariant found by [`KPartition::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionViolation {
    /// The number of blocks differs from the number of anchors.
    BlockCountMismatch { blocks: usize, anchors: usize },
    /// A vertex appears in the wrong number of blocks.
    MembershipCount {
        vertex: usize,
        appears_in: usize,
        expected: usize,
    },
    /// Block `i` does not contain its anchor `u_i`.
    AnchorMissing { block: usize, anchor: usize },
    /// Block `i` contains a vertex outside `N[u_i]`.
    OutsideNeighborhood {
        block: usize,
        anchor: usize,
        vertex: usize,
    },
    /// A block or anchor mentions a vertex id that is not in the graph.
    VertexOutOfRange { vertex: usize },
}

impl std::fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionViolation::BlockCountMismatch { blocks, anchors } => {
                write!(f, "{blocks} blocks for {anchors} anchors")
            }
            PartitionViolation::MembershipCount {
                vertex,
                appears_in,
                expected,
            } => {
                write!(
                    f,
                    "vertex {vertex} appears in {appears_in} blocks, expected {expected}"
                )
            }
            PartitionViolation::AnchorMissing { block, anchor } => {
                write!(f, "block {block} is missing its anchor {anchor}")
            }
            PartitionViolation::OutsideNeighborhood {
                block,
                anchor,
                vertex,
            } => {
                write!(f, "block {block} contains {vertex} outside N[{anchor}]")
            }
            PartitionViolation::VertexOutOfRange { vertex } => {
                write!(f, "vertex {vertex} out of range")
            }
        }
    }
}

/// Blocks `P_0..P_{t-1}` anchored at an ordered `{k}`-dominating sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPartition {
    k: usize,
    anchors: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    membership: Vec<Vec<usize>>,
}

impl KPartition {
    /// Assembles a partition from raw parts without validating the
    /// invariants; membership lists are derived from the blocks. Used when
    /// reloading certificates, where validation is a verification step.
    pub fn from_parts(k: usize, anchors: Vec<usize>, blocks: Vec<Vec<usize>>, n: usize) -> Self {
        let mut membership = vec![Vec::new(); n];
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
            block.dedup();
        }
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                if v < n {
                    membership[v].push(i);
                }
            }
        }
        KPartition {
            k,
            anchors,
            blocks,
            membership,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The anchor sequence `u_0..u_{t-1}`.
    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    /// Number of blocks `t`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block `i` as a sorted vertex set.
    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The membership function `f_v`: the `s`-th smallest block index
    /// containing `v`. Panics outside a valid partition's domain.
    pub fn block_index(&self, v: usize, s: usize) -> usize {
        self.membership[v][s]
    }

    /// Inverse of the membership function: the position `s` with
    /// `block_index(v, s) == i`, or `None` when block `i` does not
    /// contain `v`.
    pub fn inverse_block(&self, v: usize, i: usize) -> Option<usize> {
        if v >= self.membership.len() {
            return None;
        }
        self.membership[v].binary_search(&i).ok()
    }

    /// Checks the three partition invariants, returning every violation.
    pub fn validate(&self, g: &Graph) -> Vec<PartitionViolation> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        if self.blocks.len() != self.anchors.len() {
            out.push(PartitionViolation::BlockCountMismatch {
                blocks: self.blocks.len(),
                anchors: self.anchors.len(),
            });
        }
        for &u in &self.anchors {
            if u >= n {
                out.push(PartitionViolation::VertexOutOfRange { vertex: u });
            }
        }
        for block in &self.blocks {
            for &v in block {
                if v >= n {
                    out.push(PartitionViolation::VertexOutOfRange { vertex: v });
                }
            }
        }
        if out
            .iter()
            .any(|v| matches!(v, PartitionViolation::VertexOutOfRange { .. }))
        {
            return out;
        }
        for v in 0..n {
            let appears_in = self.membership.get(v).map_or(0, Vec::len);
            if appears_in != self.k {
                out.push(PartitionViolation::MembershipCount {
                    vertex: v,
                    appears_in,
                    expected: self.k,
                });
            }
        }
        for (i, (&u, block)) in self.anchors.iter().zip(&self.blocks).enumerate() {
            if block.binary_search(&u).is_err() {
                out.push(PartitionViolation::AnchorMissing {
                    block: i,
                    anchor: u,
                });
            }
            let closed = g.closed_neighborhood(u);
            for &v in block {
                if closed.binary_search(&v).is_err() {
                    out.push(PartitionViolation::OutsideNeighborhood {
                        block: i,
                        anchor: u,
                        vertex: v,
                    });
                }
            }
        }
        out
    }
}

/// Builds a valid k-partition anchored at `anchors`.
///
/// The anchor multiset must be `{k}`-dominating and no anchor may repeat
/// more than `k` times. Each vertex first joins the blocks where it is
/// itself the anchor, then fills up to `k` memberships from anchor
/// positions that dominate it, preferring the least-loaded block and
/// breaking ties by lowest index.
pub fn build_k_partition(
    g: &Graph,
    k: usize,
    anchors: &[usize],
) -> Result<KPartition, PartitionError> {
    assert!(k >= 1, "k must be positive");
    let n = g.vertex_count();
    for &u in anchors {
        if u >= n {
            return Err(PartitionError::AnchorOutOfRange { vertex: u, n });
        }
    }
    let anchor_multiset = Multiset::from_elements(anchors.iter().copied());
    for (v, mult) in anchor_multiset.iter() {
        if mult > k {
            return Err(PartitionError::AnchorMultiplicityTooHigh { vertex: v, mult, k });
        }
    }
    for v in 0..n {
        let seen = anchor_multiset.count_over_set(&g.closed_neighborhood(v));
        if seen < k {
            return Err(PartitionError::AnchorsNotDominating { k, vertex: v, seen });
        }
    }

    let t = anchors.len();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); t];
    let mut membership: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut load = vec![0usize; t];
    for v in 0..n {
        let mut chosen: Vec<usize> = (0..t).filter(|&i| anchors[i] == v).collect();
        let missing = k - chosen.len();
        if missing > 0 {
            let mut eligible: Vec<usize> = (0..t)
                .filter(|&i| anchors[i] != v && g.has_edge(anchors[i], v))
                .collect();
            eligible.sort_by_key(|&i| (load[i], i));
            chosen.extend(eligible.into_iter().take(missing));
        }
        debug_assert_eq!(chosen.len(), k, "domination guarantees k eligible blocks");
        chosen.sort_unstable();
        for &i in &chosen {
            blocks[i].push(v);
            load[i] += 1;
        }
        membership.push(chosen);
    }
    // vertices were scanned in ascending order, so blocks are sorted
    Ok(KPartition {
        k,
        anchors: anchors.to_vec(),
        blocks,
        membership,
    })
}
