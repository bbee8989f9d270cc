//! Exact walk-matrix determinants for rooted path products `G o P_m`.
//!
//! The crate builds `A_tau(G) = A(G) + tau D(G)` for graphs and their rooted
//! products with paths, computes walk matrices and their determinants in
//! exact rational arithmetic, and checks the determinant, characteristic
//! polynomial and Chebyshev resultant identities that relate
//! `det W_tau(G o P_m)` to data of `G` alone.
//!
//! Module map:
//!
//! - [`graph`]: graphs, rooted products, `A_tau` assembly
//! - [`linalg`]: exact matrices, Bareiss determinants, characteristic polynomials
//! - [`poly`]: polynomials, the `Z_k` and Chebyshev families, Sylvester resultants
//! - [`spectral`]: floating-point eigenstructure and explicit product eigenvectors
//! - [`harness`]: identity checkers, graph corpora, sweeps and report I/O
//! - [`cli`]: the `walkmat` command line

pub mod cli;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod spectral;

pub use graph::{kron_assemble_a_tau_product, Graph, GraphError};
pub use linalg::{charpoly_exact, det_exact, kronecker, walk_matrix, ExactMatrix, ExactVector, LinalgError};
pub use poly::{sylvester_resultant, PolyError, UniPoly};
pub use rational::{parse_rational, Rational};
