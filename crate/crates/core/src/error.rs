use thiserror::Error;

use crate::word::{Composition, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word `{0}` is not in H1 (it must be empty or end in y)")]
    NotInH1(Word),

    #[error("composition {0} is not admissible (first part must exceed 1)")]
    NotAdmissible(Composition),

    #[error("word `{0}` is not admissible (zeta is only defined on 1 and x..y words)")]
    NotAdmissibleWord(Word),

    #[error("empty composition has no {0}")]
    EmptyComposition(&'static str),

    #[error("index must be at least {min}, got {got}")]
    IndexOutOfRange { min: usize, got: usize },

    #[error("series {series}{args} diverges: {reason}")]
    Divergent {
        series: &'static str,
        args: String,
        reason: &'static str,
    },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("relation from family {family} violates its invariant: {reason}")]
    BadRelation {
        family: &'static str,
        reason: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
