use thiserror::Error;

use crate::complexes::NodeSet;
use crate::free_algebra::GeneratorSymbol;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n={0} is outside the supported range 1..=16")]
    UniverseOutOfRange(usize),

    #[error("vertex {vertex} exceeds n={n}")]
    VertexOutOfRange { vertex: usize, n: u8 },

    #[error("vertex 0 is not a node; nodes are numbered from 1")]
    ZeroVertex,

    #[error("the empty set is not a face")]
    EmptyFace,

    #[error("mixed universes: n={left} and n={right}")]
    UniverseMismatch { left: u8, right: u8 },

    #[error("index {index} must not lie in {set}")]
    IndexInSet { index: u8, set: NodeSet },

    #[error("index {index} must lie in {set}")]
    IndexNotInSet { index: u8, set: NodeSet },

    #[error("indices must be distinct, got {0} twice")]
    EqualIndices(u8),

    #[error("no image given for symbol {0}")]
    MissingImage(GeneratorSymbol),

    #[error("symbol {0} is not in the presentation alphabet")]
    SymbolNotInAlphabet(GeneratorSymbol),

    #[error("{count} monomials exceed the cap of {cap}")]
    MonomialCap { count: u128, cap: u128 },

    #[error("ideal slice at degree {degree} exceeds the cap of {cap} stored entries")]
    EntryCap { degree: usize, cap: usize },

    #[error("relation {index} is not homogeneous")]
    InhomogeneousRelation { index: usize },

    #[error("polynomial is not homogeneous; split it with graded_component first")]
    InhomogeneousPolynomial,

    #[error("degree {degree} exceeds the truncation bound {max}")]
    DegreeExceedsBound { degree: usize, max: usize },

    #[error("complex has dimension {0}; a graph needs dimension at most 1")]
    NotAGraph(usize),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown check '{0}'")]
    UnknownCheck(String),

    #[error("{0}")]
    Bounds(String),
}
