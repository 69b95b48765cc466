use std::fmt;

/// Why an automorphism of F2 was rejected by [`crate::fgroup::decompose_f`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotInFReason {
    /// The abelianization is not congruent to the identity mod 2 (or has det -1).
    NotCongruent,
    /// The abelianization lies in -<A1, A2> rather than <A1, A2>.
    MinusSign,
    /// After stripping the x-part, the remainder is not inner.
    NotInner,
}

impl fmt::Display for NotInFReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotInFReason::NotCongruent => "abelianization not congruent to I mod 2",
            NotInFReason::MinusSign => "abelianization has sign -1",
            NotInFReason::NotInner => "residual automorphism is not inner",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("maps are not mutually inverse")]
    NotInverse,
    #[error("chi_{{k,i}} needs k != i (got {0} twice)")]
    InvalidChi(u32),
    #[error("index {index} outside 1..={rank}")]
    Index { index: u32, rank: u32 },
    #[error("matrix is not in the level-2 congruence subgroup of SL(2,Z)")]
    NotCongruent,
    #[error("matrix reduction stalled outside +-<A1, A2>")]
    NotInSanov,
    #[error("automorphism is not inner")]
    NotInner,
    #[error("automorphism is not in F: {0}")]
    NotInF(NotInFReason),
    #[error("element of Hol(F2) is not in pi")]
    NotInPi,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
