use thiserror::Error;

/// Failure modes of graph6 decoding. Offsets are byte positions in the input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed size header byte {byte:#04x} at offset {offset}")]
    BadHeader { offset: usize, byte: u8 },
    #[error("graph6 header encodes {n} vertices, more than the supported 64")]
    TooManyVertices { n: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated adjacency body: expected {expected} bytes after offset {offset}, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("trailing garbage starting at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("vertex count {0} exceeds the 64-vertex limit")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap (common mask {0:#x})")]
    Overlap(u64),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("part sizes must be positive")]
    ZeroPart,
    #[error("orientation has {found} direction bits, graph has {expected} edges")]
    OrientationLength { expected: usize, found: usize },
    #[error("orientation contains a cyclic triangle {0:?}")]
    CyclicTriangle((usize, usize, usize)),
    #[error("graph is not complete on the given vertices")]
    NotAClique,
    #[error("{what} = {value} exceeds the guard {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
