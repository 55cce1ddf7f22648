use thiserror::Error;

use crate::graph::{ArcId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: expected `SOURCE TARGET`, found {tokens} token(s)")]
    MalformedLine { line: usize, tokens: usize },

    #[error("line {line}: self-loop on vertex `{label}`")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: duplicate arc `{source_label} {target_label}`")]
    DuplicateArc {
        line: usize,
        source_label: String,
        target_label: String,
    },

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown arc id {0}")]
    UnknownArc(ArcId),

    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),

    #[error("partitions are over different universes ({left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },

    #[error("vertex classes do not form a partition of 0..{0}")]
    NotAPartition(usize),

    #[error("input is not strongly connected")]
    NotStronglyConnected,

    #[error("input is not twinless strongly connected")]
    NotTwinlessStronglyConnected,

    #[error("separation matrix needs n <= {limit}, got n = {n}; use the refinement algorithm instead")]
    MatrixBudget { n: usize, limit: usize },

    #[error("{pairs} twin pairs exceed the oracle budget of {limit}")]
    TwinPairBudget { pairs: usize, limit: usize },

    #[error("oracle work {work} exceeds the budget of {limit} orientation evaluations")]
    OracleBudget { work: u128, limit: u128 },

    #[error("{subsets} arc subsets exceed the enumeration budget of {limit}")]
    EnumerationBudget { subsets: u128, limit: u128 },

    #[error("k must be at least 1")]
    InvalidK,

    #[error("twinless relation is not transitive on ({0}, {1}, {2})")]
    NonTransitive(VertexId, VertexId, VertexId),

    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),
}

impl Error {
    /// True for errors caused by the input violating an analysis precondition
    /// (as opposed to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotStronglyConnected
                | Error::NotTwinlessStronglyConnected
                | Error::MatrixBudget { .. }
                | Error::TwinPairBudget { .. }
                | Error::OracleBudget { .. }
                | Error::EnumerationBudget { .. }
                | Error::InvalidK
                | Error::InfeasibleConfig(_)
        )
    }

    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::MalformedLine { .. } | Error::SelfLoop { .. } | Error::DuplicateArc { .. }
        )
    }
}
