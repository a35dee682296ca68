//! Cartesian products of graphs.
//!
//! Product vertices are pairs `(g, h)` packed row-major with the `g`
//! coordinate major: `index(g, h) = g * n_h + h`. Two product vertices are
//! adjacent when they agree in one coordinate and are adjacent in the other,
//! which splits every edge into exactly one of two classes: G-edges (the `g`
//! coordinates differ) and H-edges (the `h` coordinates differ).

use std::fmt;

use crate::graph::Graph;
use crate::multiset::Multiset;

/// Edge list keyed by packed product-vertex ids.
pub type ProductEdges = Vec<(usize, usize)>;

/// Which factor a projection lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    G,
    H,
}

/// The Cartesian product `G box H` together with its factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    g: Graph,
    h: Graph,
    graph: Graph,
}

impl ProductGraph {
    pub fn new(g: Graph, h: Graph) -> Self {
        let (ng, nh) = (g.vertex_count(), h.vertex_count());
        let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
        // H-edges: fix g, connect along H.
        for gi in 0..ng {
            for (u, v) in h.edges() {
                edges.push((gi * nh + u, gi * nh + v));
            }
        }
        // G-edges: fix h, connect along G.
        for hi in 0..nh {
            for (u, v) in g.edges() {
                edges.push((u * nh + hi, v * nh + hi));
            }
        }
        let graph = Graph::from_edges(ng * nh, &edges).expect("product edges are simple");
        ProductGraph { g, h, graph }
    }

    pub fn g_factor(&self) -> &Graph {
        &self.g
    }

    pub fn h_factor(&self) -> &Graph {
        &self.h
    }

    /// The product as a plain graph over `n_g * n_h` vertices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Packs coordinates into a product vertex id.
    pub fn index(&self, g_id: usize, h_id: usize) -> usize {
        let nh = self.h.vertex_count();
        debug_assert!(g_id < self.g.vertex_count() && h_id < nh);
        g_id * nh + h_id
    }

    /// Unpacks a product vertex id into `(g, h)` coordinates.
    pub fn coords(&self, v: usize) -> (usize, usize) {
        let nh = self.h.vertex_count();
        assert!(v < self.vertex_count(), "product vertex {v} out of range");
        (v / nh, v % nh)
    }

    /// Neighbors reached through a G-edge: same `h`, adjacent `g`.
    pub fn g_neighborhood(&self, v: usize) -> Vec<usize> {
        let (gi, hi) = self.coords(v);
        self.g
            .neighbors(gi)
            .iter()
            .map(|&gp| self.index(gp, hi))
            .collect()
    }

    /// Neighbors reached through an H-edge: same `g`, adjacent `h`.
    pub fn h_neighborhood(&self, v: usize) -> Vec<usize> {
        let (gi, hi) = self.coords(v);
        self.h
            .neighbors(hi)
            .iter()
            .map(|&hp| self.index(gi, hp))
            .collect()
    }

    /// All edges split into `(g_edges, h_edges)`; the two classes are
    /// disjoint and together cover the edge set.
    pub fn edge_partition(&self) -> (ProductEdges, ProductEdges) {
        let mut g_edges = Vec::new();
        let mut h_edges = Vec::new();
        for (u, v) in self.graph.edges() {
            let (ug, _) = self.coords(u);
            let (vg, _) = self.coords(v);
            if ug != vg {
                g_edges.push((u, v));
            } else {
                h_edges.push((u, v));
            }
        }
        (g_edges, h_edges)
    }

    /// Projection whose multiplicities are per-fiber maxima: for
    /// `Factor::G`, the count of `g` is the largest count of any `(g, h)`.
    /// Zero-count coordinates are omitted.
    pub fn phi_projection(&self, a: &Multiset, onto: Factor) -> Multiset {
        let mut out = Multiset::new();
        let mut maxima: std::collections::BTreeMap<usize, usize> = Default::default();
        for (v, mult) in a.iter() {
            let (gi, hi) = self.coords(v);
            let key = match onto {
                Factor::G => gi,
                Factor::H => hi,
            };
            let entry = maxima.entry(key).or_insert(0);
            *entry = (*entry).max(mult);
        }
        for (key, mult) in maxima {
            out.insert_copies(key, mult);
        }
        out
    }

    /// Projection whose multiplicities are per-fiber sums; cardinality is
    /// preserved.
    pub fn psi_projection(&self, a: &Multiset, onto: Factor) -> Multiset {
        let mut out = Multiset::new();
        for (v, mult) in a.iter() {
            let (gi, hi) = self.coords(v);
            let key = match onto {
                Factor::G => gi,
                Factor::H => hi,
            };
            out.insert_copies(key, mult);
        }
        out
    }

    /// Renders a product vertex as `(g,h)`.
    pub fn vertex_label(&self, v: usize) -> String {
        let (gi, hi) = self.coords(v);
        format!("({gi},{hi})")
    }
}

impl fmt::Display for ProductGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "product({} x {}, n={}, m={})",
            self.g.vertex_count(),
            self.h.vertex_count(),
            self.vertex_count(),
            self.graph.edge_count()
        )
    }
}
