//! Shared error type.

use crate::dynkin::{DiagramType, Family};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("cannot parse diagram type from {0:?}")]
    BadDiagramName(String),

    #[error("cannot parse node subset from {0:?}")]
    BadSubset(String),

    #[error("node {node} out of range for {dtype}")]
    NodeOutOfRange { node: usize, dtype: DiagramType },

    #[error("node {node} is not a member of the given subset")]
    NodeNotInSubset { node: usize },

    #[error("elements belong to different diagrams ({0} vs {1})")]
    DiagramMismatch(DiagramType, DiagramType),

    #[error("J must be a proper subset of S")]
    NotProperSubset,

    #[error("J is not combinatorially smooth")]
    NotCombinatoriallySmooth,

    #[error("enumeration budget exceeded: need {needed} points, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}
