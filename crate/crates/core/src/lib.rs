//! Exact zeta functions of finite graphs through quantum-walk operators.
//!
//! The walk operator of a graph acts on oriented edges; the 0/1 supports of
//! its first and second powers determine two zeta functions, whose
//! reciprocals this crate computes as exact integer polynomials:
//!
//! * the classical edge zeta, `1/det(I - u (U)^+)`, with its vertex-sized
//!   factorization `(1-u^2)^(m-n) det(I - uA + u^2(D-I))`;
//! * the two-step zeta, `1/det(I - u (U^2)^+)`, which splits as
//!   `(1-2u)^(2(m-n)) p(u)` and carries the spanning-tree count and the
//!   odd-unicyclic-factor invariant in its derivatives at `u = 1/2`.
//!
//! Determinants, characteristic polynomials, pole multiplicities, and every
//! special-value identity are evaluated in exact arbitrary-precision
//! arithmetic; floating point enters only to place roots whose
//! multiplicities are already known exactly. [`verify::verify_graph`] runs
//! the full battery of identity checks on any input graph.

pub mod error;
pub mod exact;
pub mod graph;
pub mod spectra;
pub mod verify;
pub mod walk;
pub mod zeta;

pub use error::{Error, Result, Violation};
pub use exact::{ComplexRoot, IntPolynomial};
pub use graph::{classify, validate_for_modified_zeta, Graph, GraphClassification, OrientedEdge};
pub use spectra::{PoleSet, RadiusReport, RiemannReport, Spectrum};
pub use verify::{verify_graph, CheckStatus, VerificationReport};
pub use walk::GroverMatrix;
pub use zeta::{InvariantReport, ZetaKind, ZetaReciprocal};
