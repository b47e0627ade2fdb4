use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A graph needs at least one vertex.
    EmptyGraph,
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    Loop(usize),
    DuplicateVertex(usize),
    /// A vertex set was built for a graph of a different size.
    HostMismatch {
        expected: usize,
        found: usize,
    },
    NotRegular,
    Disconnected,
    /// Weak product whose factors are both bipartite (or otherwise
    /// disconnected) handed to a design operation.
    DisconnectedProduct {
        bipartite_factors: bool,
    },
    TooLarge {
        n: usize,
        cap: usize,
    },
    NoConvergence {
        sweeps: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    /// Designs are nonempty proper subsets.
    ImproperSubset {
        size: usize,
        n: usize,
    },
    NotIndependent,
    NotSharp {
        value: f64,
        bound: f64,
    },
    CertificationFailed(String),
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGraph => write!(f, "graph must have at least one vertex"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(
                    f,
                    "vertex {vertex} out of range for a graph on {n} vertices"
                )
            }
            Error::Loop(v) => write!(f, "loop at vertex {v} is not allowed"),
            Error::DuplicateVertex(v) => write!(f, "vertex {v} listed twice"),
            Error::HostMismatch { expected, found } => write!(
                f,
                "vertex set indexes a graph on {found} vertices, expected {expected}"
            ),
            Error::NotRegular => write!(f, "graph is not regular"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::DisconnectedProduct {
                bipartite_factors: true,
            } => write!(
                f,
                "weak product is disconnected: both factors are bipartite"
            ),
            Error::DisconnectedProduct {
                bipartite_factors: false,
            } => {
                write!(f, "weak product is disconnected")
            }
            Error::TooLarge { n, cap } => write!(f, "{n} vertices exceeds the cap of {cap}"),
            Error::NoConvergence { sweeps } => {
                write!(f, "Jacobi eigensolver did not converge in {sweeps} sweeps")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, got {found}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (length {len})")
            }
            Error::ImproperSubset { size, n } => write!(
                f,
                "subset of size {size} is not a nonempty proper subset of {n} vertices"
            ),
            Error::NotIndependent => write!(f, "vertex set is not independent"),
            Error::NotSharp { value, bound } => {
                write!(f, "value {value} does not meet the bound {bound}")
            }
            Error::CertificationFailed(msg) => write!(f, "certification failed: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
