use thiserror::Error;

use crate::evaltree::EvalTree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("{what} is not allowed here ({context})")]
    ModeViolation { what: String, context: String },

    #[error("unbound variable ${0}")]
    UnboundVariable(String),

    #[error("term is not closed: contains variable ${0}")]
    NonClosedTerm(String),

    #[error("evaluation tree of {size} nodes exceeds the cap of {cap}")]
    TreeTooLarge { size: u128, cap: usize },

    #[error("not in normal form: {0}")]
    NotInNormalForm(String),

    #[error("not a *-term: {0}")]
    NotStarTerm(String),

    #[error("{kind} decomposition is ambiguous: {count} candidates share the minimum core depth {depth}")]
    AmbiguousDecomposition {
        kind: &'static str,
        count: usize,
        depth: usize,
    },

    #[error("tree {subtree} is outside the image of se on normal forms (clause {clause})")]
    NotInImage {
        clause: &'static str,
        subtree: EvalTree,
    },

    #[error("atom {0} has no interpretation in the model")]
    UninterpretedAtom(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    /// Stable identifier used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::ModeViolation { .. } => "ModeViolation",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::NonClosedTerm(_) => "NonClosedTerm",
            Error::TreeTooLarge { .. } => "TreeTooLarge",
            Error::NotInNormalForm(_) => "NotInNormalForm",
            Error::NotStarTerm(_) => "NotStarTerm",
            Error::AmbiguousDecomposition { .. } => "AmbiguousDecomposition",
            Error::NotInImage { .. } => "NotInImage",
            Error::UninterpretedAtom(_) => "UninterpretedAtom",
            Error::InvalidModel(_) => "InvalidModel",
            Error::Format(_) => "FormatError",
        }
    }

    pub(crate) fn mode(what: impl Into<String>, context: impl Into<String>) -> Self {
        Error::ModeViolation {
            what: what.into(),
            context: context.into(),
        }
    }
}
