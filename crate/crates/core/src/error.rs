use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}; valid ranks: {valid}")]
    InvalidRank {
        family: Family,
        rank: usize,
        valid: String,
    },

    #[error("unknown family `{0}`; expected one of A, B, C, D, E6, E7, E8, F4, G2, BC")]
    UnknownFamily(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("a root must be a nonzero vector")]
    ZeroRoot,

    #[error("reflection image has non-integral coordinates")]
    NonIntegralReflection,

    #[error("vector {0} is not a root of this root system")]
    NotARoot(String),

    #[error("unknown symmetric space `{name}`; valid entries: {valid}")]
    UnknownSpace { name: String, valid: String },

    #[error("invalid catalog data: {0}")]
    Catalog(String),

    #[error("invalid multiplicity data: {0}")]
    InvalidMultiplicities(String),

    #[error("simple root index {index} out of range 1..={rank}")]
    InvalidRootIndex { index: usize, rank: usize },

    #[error("subset {0:?} is not orthogonal: it contains two roots joined in the Dynkin diagram")]
    NotOrthogonal(Vec<usize>),

    #[error("dim V = {dim_v} outside the admissible range 0..={max}")]
    DimVOutOfRange { dim_v: usize, max: usize },

    #[error("matrix size mismatch: {left}x{left} vs {right}x{right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("element does not satisfy its `{tag}` constraint (defect {defect:e})")]
    TagViolation { tag: String, defect: f64 },

    #[error("determinant {0} differs from 1")]
    DeterminantNotOne(f64),

    #[error("column set is numerically singular")]
    Singular,

    #[error("basis element {0} is not symmetric")]
    NotSymmetric(usize),

    #[error("basis is linearly dependent")]
    LinearlyDependent,

    #[error("point {0} is not in the upper half-plane")]
    NotInHalfPlane(String),

    #[error("operation requires the SL_(r+1)(R)/SO_(r+1) space, got `{0}`")]
    NotSlModel(String),

    #[error("line choice for simple root {0} does not lie in its root space")]
    InvalidLineChoice(usize),
}
