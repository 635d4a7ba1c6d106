//! Graph sparsification by the principle of relevant information.
//!
//! A subgraph is encoded by an edge-selection vector `w` through
//! `L_s(w) = B diag(w) B^T`. The sparsifier minimizes
//! `(1 - beta) S(sigma~) + 2 beta S((sigma~ + rho~) / 2)`, where `S` is the von
//! Neumann entropy of a trace-normalized Laplacian, `rho~` belongs to the
//! input graph and `sigma~` to the subgraph. `beta` trades sparsity (low
//! entropy) against fidelity (low quantum Jensen-Shannon divergence).
//!
//! Modules:
//! - [`graph`], [`incidence`], [`density`]: graphs and the Laplacian algebra.
//! - [`measures`]: entropies and divergences.
//! - [`optimizer`]: Gumbel-softmax training of `w`, analytical gradients.
//! - [`baselines`]: random, local degree, local similarity and effective
//!   resistance sparsifiers.
//! - [`generators`], [`io`], [`datasets`]: synthetic graphs, edge-list files,
//!   bundled benchmark graphs.
//! - [`eval`]: metrics and experiment harness.
//! - [`verify`]: fast self-check of the numerical invariants.

pub mod baselines;
pub mod datasets;
pub mod density;
pub mod error;
pub mod eval;
pub mod generators;
pub mod graph;
pub mod incidence;
pub mod io;
pub mod measures;
pub mod optimizer;
pub mod seed;
mod spectral;
pub mod verify;

pub use density::{trace_normalize, DensityMatrix};
pub use error::{Error, Result};
pub use graph::{degrees, Edge, Graph};
pub use incidence::{incidence_matrix, subgraph_laplacian, EdgeSelection, IncidenceMatrix};
pub use measures::{
    entropy_gap_bound, graph_entropy, pri_objective, qjs_divergence, shannon_degree_entropy,
    spectrum, von_neumann_entropy, DensitySpectrum, EntropyGap,
};
pub use optimizer::{sparsify_pri, PriConfig, SparsifyReport};
