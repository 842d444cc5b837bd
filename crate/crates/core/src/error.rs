use std::fmt;

use thiserror::Error;

use crate::matroid::Violation;
use crate::oriented::CovectorViolation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("rank {rank} exceeds ground set size {n}")]
    RankExceedsGroundSet { rank: usize, n: usize },

    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("{0} is not a supported prime power (expected a prime power <= 32)")]
    UnsupportedPrimePower(u32),

    #[error("row {0} of the arrangement is zero")]
    ZeroRow(usize),

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedMatrix { row: usize, expected: usize, found: usize },

    #[error("arrangement has no hyperplanes")]
    EmptyArrangement,

    #[error("{{{}}} is not a flat", join(.0))]
    NotAFlat(Vec<usize>),

    #[error("chain of flats is not strictly increasing at position {0}")]
    ChainNotIncreasing(usize),

    #[error("sign vectors have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),

    #[error("ground set of size {0} exceeds the supported maximum of 64 elements")]
    GroundSetTooLarge(usize),

    #[error("sign vector {0} is not a tope")]
    NotATope(String),

    #[error("index set {{{}}} is not a strictly increasing subset of [{max}]", join(.set))]
    SubsetOutOfRange { set: Vec<usize>, max: usize },

    #[error("invalid rank-3 profile: {0}")]
    InvalidProfile(String),

    #[error("k = {k} exceeds r = {r}")]
    BinomialOutOfRange { r: usize, k: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("matroid axioms violated: {}", Joined(.0))]
    InvalidMatroid(Vec<Violation>),

    #[error("covector axioms violated: {}", Joined(.0))]
    InvalidCovectors(Vec<CovectorViolation>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors raised by structural validation rather than syntax.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidMatroid(_) | Error::InvalidCovectors(_) | Error::NotAFlat(_)
        )
    }
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

struct Joined<'a, T>(&'a [T]);

impl<T: fmt::Display> fmt::Display for Joined<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 5;
        for (i, item) in self.0.iter().take(SHOWN).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{item}")?;
        }
        if self.0.len() > SHOWN {
            write!(f, "; ... ({} more)", self.0.len() - SHOWN)?;
        }
        Ok(())
    }
}
