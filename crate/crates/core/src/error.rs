use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value does not fit in {0}")]
    Overflow(&'static str),
    #[error("cannot parse tree at offset {offset}: {reason}")]
    TreeSyntax { offset: usize, reason: String },
    #[error("invalid Dyck path: {0}")]
    InvalidDyck(String),
    #[error("rows are not weakly decreasing positive integers: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("row {row} of length {len} leaves the staircase of ambient {n}")]
    Staircase { row: usize, len: usize, n: usize },
    #[error("diagram needs at least {needed} leaves, ambient {n} gives {}", n + 1)]
    AmbientTooSmall { needed: usize, n: usize },
    #[error("box set is not the image of any tree: {0}")]
    InvalidGapped(String),
    #[error("interval [{a},{b}] is outside the ball structure of ambient {n}")]
    BallOutOfRange { a: usize, b: usize, n: usize },
    #[error("ambient sizes differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("not a torsion class")]
    NotTorsionClass,
    #[error("torsion and torsion-free parts do not form a torsion pair")]
    NotTorsionPair,
    #[error("not a permutation of 1..n: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("permutation contains the pattern 213 at positions {0:?}")]
    Contains213((usize, usize, usize)),
    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
