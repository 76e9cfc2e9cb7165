//! Crate-wide error type.

use thiserror::Error;

/// Hypotheses a graph can violate for the two-step zeta machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Graph has a multi-edge or self-loop.
    NotSimple,
    /// Graph is not connected.
    NotConnected,
    /// Minimum degree is below 3.
    MinDegree(usize),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotSimple => write!(f, "graph is not simple"),
            Violation::NotConnected => write!(f, "graph is not connected"),
            Violation::MinDegree(d) => write!(f, "minimum degree {d} < 3"),
        }
    }
}

/// One entry where a claimed matrix identity fails, with both sides.
#[derive(Debug, Clone)]
pub struct IdentityDiscrepancy {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("unknown graph name `{0}`")]
    UnknownName(String),

    #[error("invalid parameter for `{name}`: {msg}")]
    InvalidParameter { name: String, msg: String },

    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),

    #[error("hypothesis violated: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Hypothesis { violations: Vec<Violation> },

    #[error("{0} is not applicable: {1}")]
    NotApplicable(&'static str, String),

    #[error("enumeration length {requested} exceeds cap {cap}")]
    EnumerationCap { requested: usize, cap: usize },

    #[error("exact interpolation produced a non-integer coefficient of u^{power}: {value}")]
    NonIntegerCoefficient { power: usize, value: String },

    #[error("matrix identity {name} fails at {} entries, first at ({},{}): {} vs {}",
            discrepancies.len(), discrepancies[0].row, discrepancies[0].col,
            discrepancies[0].lhs, discrepancies[0].rhs)]
    IdentityViolation {
        name: &'static str,
        discrepancies: Vec<IdentityDiscrepancy>,
    },

    #[error("exact division left a nonzero remainder: {0}")]
    InexactDivision(String),

    #[error("check `{name}` failed: {detail}")]
    CheckFailed { name: &'static str, detail: String },

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
