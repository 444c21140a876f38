//! # lindep
//!
//! Linear dependence graphs of finite-dimensional vector spaces over finite
//! fields: exact construction, exact spectra, and claim-by-claim verification.
//!
//! For a vector space `V = F_q^n` (with `q = p^k`), the *linear dependence
//! graph* `Γ(V)` has every vector of `V` as a vertex, and joins two distinct
//! vectors whenever they are linearly dependent as a pair. The null vector is
//! adjacent to everything; two nonzero vectors are adjacent exactly when one
//! is a scalar multiple of the other. Structurally `Γ(V)` is a windmill:
//! `N = (q^n - 1)/(q - 1)` cliques of size `q - 1` all joined to a hub.
//!
//! The crate is organised around a dual-route discipline — every quantity is
//! computed twice, by independent means, and compared:
//!
//! | Module | Route |
//! |--------|-------|
//! | [`gf`], [`vspace`], [`graph`] | build `Γ(V)` from field arithmetic alone |
//! | [`invariants`] | generic brute-force graph oracles (no family knowledge) |
//! | [`spectra`] | exact integer characteristic polynomials and energies |
//! | [`closedform`] | pure formula predictors in `(q, n)` |
//! | [`verifier`] | runs both routes and emits a machine-readable report |
//!
//! ## Quick start
//!
//! ```
//! use lindep::gf::FieldSpec;
//! use lindep::graph::{build_graph, adjacency_matrix};
//! use lindep::spectra::{charpoly_exact, predicted_adjacency_poly};
//!
//! let field = FieldSpec::new(3, 1).unwrap();       // GF(3)
//! let g = build_graph(&field, 2, 130).unwrap();    // Γ(F_3^2), the friendship graph
//! assert_eq!(g.order(), 9);
//!
//! let computed = charpoly_exact(&adjacency_matrix(&g));
//! let predicted = predicted_adjacency_poly(3, 2);
//! assert_eq!(computed, predicted);
//! ```
//!
//! A narrative guide with worked examples lives in `book/`; its code blocks
//! are compiled and run as doc-tests so the text cannot drift from the crate.

pub mod closedform;
pub mod decimal;
pub mod gf;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod spectra;
pub mod verifier;
pub mod vspace;

#[cfg(doctest)]
pub mod book;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A field presentation failed validation (non-prime p, bad modulus, ...).
    #[error("invalid field: {0}")]
    InvalidField(String),

    /// Inversion of the zero field element.
    #[error("division by zero in GF(q)")]
    DivisionByZero,

    /// A size bound was exceeded.
    #[error("capacity exceeded: {what} = {requested} is above the bound {bound}")]
    Capacity {
        what: &'static str,
        requested: u128,
        bound: u128,
    },

    /// Distance or diameter requested on a disconnected graph.
    #[error("graph is disconnected: distances are infinite")]
    Disconnected,

    /// Everything else that makes an operation meaningless.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on `q^n` when materialising vectors and graphs.
pub const DEFAULT_GRAPH_BOUND: u64 = 1024;
/// Default cap on `q^n` for exact characteristic-polynomial work.
pub const DEFAULT_SPECTRA_BOUND: u64 = 130;
/// Default cap on `q^n` for the NP-hard search oracles.
pub const DEFAULT_ORACLE_BOUND: u64 = 65;
