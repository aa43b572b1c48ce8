//! Generalized distance spectra of small connected graphs.
//!
//! The crate computes the matrix `D_α(G) = α·Tr(G) + (1-α)·D(G)` of a
//! connected graph, its spectral radius `μ_α` and Perron vector, and checks
//! the lower bound on `Tr_max - μ_α` for non-transmission-regular graphs
//! together with its extremal families:
//!
//! * `K_{1,2,...,2}` for odd order,
//! * every `(n-4)`-DVDR graph (a hub joined to an `(n-4)`-regular graph)
//!   for even order.
//!
//! Modules follow the data flow: [`graph`] builds graphs and distances,
//! [`spectra`] turns them into matrices and eigenvalues, and [`verify`]
//! classifies graphs, checks the bound and runs exhaustive sweeps over
//! graph6 enumerations.

pub mod graph;
pub mod spectra;
pub mod verify;

pub use graph::{Graph, GraphError};
pub use spectra::{Alpha, SpectraError};
pub use verify::VerifyError;
