use thiserror::Error;

/// Errors for curve construction, move application, and the explorer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("code is not spherical: traced {faces} faces for {crossings} crossings")]
    NotSpherical { faces: usize, crossings: usize },
    #[error("outer face index {0} out of range")]
    BadOuterFace(usize),
    #[error("loop is not embedded")]
    LoopNotEmbedded,
    #[error("move site is not applicable: {0}")]
    InvalidSite(String),
    #[error("face is not an empty monogon")]
    NotAnEmptyMonogon,
    #[error("no crossing to pass in the requested direction")]
    NoCrossingToPass,
    #[error("move delta matches no template: {0}")]
    NoTemplateMatch(String),
    #[error("monogon interior is not empty")]
    MonogonNotEmpty,
    #[error("upper curve is embedded, no 1-gon exists")]
    NoOneGon,
    #[error("sweep found no applicable triangle: {0}")]
    SweepStuck(String),
    #[error("no two consecutive monogons face opposite sides")]
    NoOppositePair,
    #[error("not all monogons face outward")]
    NotAllOutward,
    #[error("need at least two monogons")]
    TooFewMonogons,
    #[error("no spherical delta curve for omega = {0}")]
    BadOmega(i64),
    #[error("n and omega must have opposite parity (n = {n}, omega = {omega})")]
    BadParity { n: usize, omega: i64 },
    #[error("n = {n} is too small for omega = {omega}")]
    TooFewCrossings { n: usize, omega: i64 },
    #[error("requested size exceeds the configured limit ({0})")]
    LimitExceeded(String),
    #[error("syntax error at line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, CurveError>;
