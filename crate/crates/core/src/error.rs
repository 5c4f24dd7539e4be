use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad graph6 record: wrong length, byte outside `63..=126`, or a bad size header.
    MalformedGraph6(String),
    /// Malformed edge-list text.
    MalformedEdgeList(String),
    /// Edge endpoints out of range, self-loops, etc.
    InvalidGraph(String),
    /// The operation does not support a graph of this order.
    Unsupported {
        n: usize,
        max: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    /// The Mycielskian of the null graph is not defined.
    EmptySource,
    InvalidT(usize),
    LayoutMismatch(String),
    SizeMismatch {
        expected: usize,
        found: usize,
    },
    /// The automorphism listing would exceed the configured cap.
    GroupTooLarge {
        cap: usize,
    },
    GraphTooLarge {
        n: usize,
        max: usize,
    },
    /// The distinguishing number is larger than the caller's color cap.
    ExceedsCap {
        cap: usize,
    },
    SearchBudgetExceeded {
        budget: u64,
    },
    PreconditionViolated(String),
    InvalidM(usize),
    InvalidN(usize),
    PaletteExhausted {
        needed: usize,
        available: usize,
    },
    InvalidColoring(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedGraph6(msg) => write!(f, "malformed graph6: {msg}"),
            Error::MalformedEdgeList(msg) => write!(f, "malformed edge list: {msg}"),
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::Unsupported { n, max } => {
                write!(f, "unsupported graph order {n} (maximum {max})")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph of order {n}")
            }
            Error::EmptySource => f.write_str("source graph has no vertices"),
            Error::InvalidT(t) => write!(f, "invalid level count t = {t} (need t >= 1)"),
            Error::LayoutMismatch(msg) => write!(f, "layout does not describe graph: {msg}"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::GroupTooLarge { cap } => {
                write!(f, "automorphism group has more than {cap} elements")
            }
            Error::GraphTooLarge { n, max } => {
                write!(f, "graph of order {n} exceeds the limit of {max} vertices")
            }
            Error::ExceedsCap { cap } => {
                write!(f, "distinguishing number exceeds the cap of {cap} colors")
            }
            Error::SearchBudgetExceeded { budget } => {
                write!(f, "search budget of {budget} steps exceeded")
            }
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            Error::InvalidM(m) => write!(f, "invalid star size m = {m} (need m >= 2)"),
            Error::InvalidN(n) => write!(f, "invalid complete graph order n = {n} (need n >= 3)"),
            Error::PaletteExhausted { needed, available } => {
                write!(
                    f,
                    "need {needed} distinct colors but only {available} available"
                )
            }
            Error::InvalidColoring(msg) => write!(f, "invalid coloring: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
