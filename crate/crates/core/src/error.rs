use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Each variant has a stable machine-readable [`Error::code`] used by the CLI
/// and the report records.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at token {token:?}: {reason}")]
    Syntax { token: String, reason: String },

    #[error("generator index {index} out of range for {strands} strands (max {max})", max = strands.saturating_sub(1))]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("plat closures need an even strand count, got {0}")]
    OddStrands(usize),

    #[error("braid groups need at least {min} strands, got {got}")]
    TooFewStrandsForGroup { got: usize, min: usize },

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word is not a fishnet plat: {0}")]
    NotFishnet(String),

    #[error("twist grid is not highly twisted")]
    NotHighlyTwisted,

    #[error("plat width {0} is below 3")]
    WidthTooSmall(usize),

    #[error("coordinate vector has dimension {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("entropy did not converge after {iterations} iterations (last estimate {last_estimate})")]
    NoConvergence { iterations: usize, last_estimate: f64 },

    #[error("zero coordinate vector cannot seed an entropy run")]
    ZeroSeed,

    #[error("two-bridge test needs 4 strands, got {0}")]
    NotFourStrands(usize),

    #[error("plat closure has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("puncture class is not canonical: {0}")]
    NonCanonicalClass(String),

    #[error("family construction needs at least 6 strands, got {0}; in B_4 every odd power of the figure-eight braid s2 s1^-1 s2^2 s3 closes to the same figure-eight knot")]
    TooFewStrands(usize),

    #[error("braid is periodic, not pseudo-Anosov")]
    NotPseudoAnosov,

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("unsupported export format {0:?}")]
    UnsupportedFormat(String),

    #[error("cache record {key} failed its checksum")]
    CorruptCache { key: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::OddStrands(_) => "OddStrands",
            Error::TooFewStrandsForGroup { .. } => "TooFewStrandsForGroup",
            Error::StrandMismatch { .. } => "StrandMismatch",
            Error::NotFishnet(_) => "NotFishnet",
            Error::NotHighlyTwisted => "NotHighlyTwisted",
            Error::WidthTooSmall(_) => "WidthTooSmall",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ZeroSeed => "ZeroSeed",
            Error::NotFourStrands(_) => "NotFourStrands",
            Error::NotAKnot(_) => "NotAKnot",
            Error::NonCanonicalClass(_) => "NonCanonicalClass",
            Error::TooFewStrands(_) => "TooFewStrands",
            Error::NotPseudoAnosov => "NotPseudoAnosov",
            Error::InsufficientData(_) => "InsufficientData",
            Error::UnsupportedFormat(_) => "UnsupportedFormat",
            Error::CorruptCache { .. } => "CorruptCache",
            Error::Io(_) => "IoError",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
