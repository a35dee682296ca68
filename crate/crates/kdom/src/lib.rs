//! Integer domination on graphs and their Cartesian products.
//!
//! A `{k}`-dominating multiset of a graph `G` places copies of vertices so
//! that every closed neighborhood holds at least `k` copies, counted with
//! multiplicity; `gamma_k(G)` is the minimum total number of copies. This
//! crate computes `gamma_k` exactly (brute force and branch-and-bound),
//! builds the combinatorial objects behind the Vizing-type bound
//!
//! ```text
//! gamma_k(G) * gamma_k(H) <= 2k * gamma_k(G box H)
//! ```
//!
//! on concrete instances, and packages them into JSON certificates that an
//! independent checker can re-verify without re-running the construction.

pub mod certificate;
pub mod graph;
pub mod multiset;
pub mod partition;
pub mod product;
pub mod solver;

pub use certificate::{
    build_certificate, parse_certificate, serialize_certificate, verify_certificate, Certificate,
    VerifyReport,
};
pub use graph::{Family, Graph};
pub use multiset::Multiset;
pub use partition::KPartition;
pub use product::{Factor, ProductGraph};
pub use solver::{gamma_bnb, gamma_brute, is_k_dominating, Method, SolveResult};
