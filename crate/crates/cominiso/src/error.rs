use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: admissible ranks are {expected}")]
    InvalidRank {
        family: char,
        rank: usize,
        expected: &'static str,
    },

    #[error("node {node} is not cominuscule in {space}: valid nodes are {valid}")]
    NotCominuscule {
        space: String,
        node: usize,
        valid: String,
    },

    #[error("{0:?} is not a root of this root system")]
    NotARoot(Vec<i64>),

    /// Signals a bug: a state the underlying theory rules out.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("class {mu} is not contained in {lambda}")]
    NotContained { lambda: String, mu: String },

    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),

    #[error("the empty ideal has no marked diagram")]
    EmptyIdeal,

    #[error("marked diagram matches no cominuscule space: {0}")]
    NotCominusculeDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The three decision routes are theorems; disagreement means a bug, so
    /// this aborts the run instead of being recovered from.
    #[error(
        "route disagreement on ({a}, {b}): poset={poset} minimal={minimal} chow={chow}"
    )]
    RouteDisagreement {
        a: String,
        b: String,
        poset: bool,
        minimal: bool,
        chow: bool,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
