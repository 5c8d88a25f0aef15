use thiserror::Error;

/// Errors produced by graph construction, search, and tree routines.
///
/// Non-existence of a parameter value is not an error; see
/// [`crate::search::ParamValue::NotExists`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("loop edge ({0}, {0}) rejected: graphs here are simple")]
    LoopRejected(usize),

    #[error("invalid {family} parameter: {detail}")]
    InvalidFamilyParameter { family: String, detail: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),

    #[error("invalid fault budget {k}: {detail}")]
    InvalidFaultBudget { k: usize, detail: String },

    #[error("graph order {order} exceeds limit {limit} for this operation")]
    SizeLimit { order: usize, limit: usize },

    #[error("set {set} is not 1-fault tolerant")]
    NotFaultTolerant { set: String },

    #[error("graph is not a tree")]
    NotATree,

    #[error("invalid path cover: {0}")]
    InvalidCover(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
