use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrices must have at least one row and one column")]
    EmptyMatrix,

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not self-adjoint")]
    NotSelfAdjoint,

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("context member {index} is invalid: {reason}")]
    InvalidMember { index: usize, reason: Box<Error> },

    #[error("context member {index} is the zero operator")]
    ZeroMember { index: usize },

    #[error("context members {i} and {j} are not orthogonal")]
    NonOrthogonalPair { i: usize, j: usize },

    #[error("context members do not sum to the identity")]
    SumNotIdentity,

    #[error("context has no members")]
    EmptyContext,

    #[error("selector index {index} out of range for a context of {size} members")]
    SelectorOutOfRange { index: usize, size: usize },

    #[error("selector belongs to context {found:?}, expected {expected:?}")]
    SelectorMismatch { expected: String, found: String },

    #[error("no lattices to intersect")]
    NoLattices,

    #[error("element family is empty")]
    EmptyFamily,

    #[error("family lacks the {0} subspace")]
    MissingBound(&'static str),

    #[error("family is not closed under {0}")]
    NotClosed(&'static str),

    #[error("lattice has no orthocomplement map")]
    MissingComplementMap,

    #[error("subspace is not an element of the lattice")]
    NotAnElement,

    #[error("lattice closure exceeded {0} elements")]
    ClosureTooLarge(usize),

    #[error("ambient dimension {0} is out of scope (must be at least 2)")]
    DimensionOutOfScope(usize),
}
