use thiserror::Error;

use crate::grid::Cell;

/// Structural reason why a vertex set fails to decompose as a facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FacetDefect {
    WrongCardinality { expected: usize, actual: usize },
    MissingCornerX,
    XVerticesNotAPath,
    PivotIsCorner,
    YVerticesNotDecomposable,
    NotAFace,
}

impl std::fmt::Display for FacetDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FacetDefect::WrongCardinality { expected, actual } => {
                write!(
                    f,
                    "vertex set has {actual} elements, facets have {expected}"
                )
            }
            FacetDefect::MissingCornerX => write!(f, "x[m,n] is missing"),
            FacetDefect::XVerticesNotAPath => {
                write!(f, "x-vertices do not form a single monotone path")
            }
            FacetDefect::PivotIsCorner => write!(f, "the only x-vertex is x[m,n]"),
            FacetDefect::YVerticesNotDecomposable => {
                write!(
                    f,
                    "y-vertices do not split into the mandated disjoint path pair"
                )
            }
            FacetDefect::NotAFace => write!(f, "vertex set contains a generator"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid shape ({m}, {n}): need 2 <= m <= n")]
    BadShape { m: u32, n: u32 },

    #[error("cell ({0}, {1}) lies outside the grid", cell.row, cell.col)]
    OutOfGrid { cell: Cell },

    #[error("path endpoints inverted: ({}, {}) does not precede ({}, {})",
            start.row, start.col, end.row, end.col)]
    InvertedEndpoints { start: Cell, end: Cell },

    #[error("endpoint ({}, {}) does not match the required pattern: {reason}",
            cell.row, cell.col)]
    BadEndpoint { cell: Cell, reason: &'static str },

    #[error("grid has {vertices} vertices, over the limit of {limit} for this operation")]
    Capacity { vertices: u32, limit: u32 },

    #[error("operands belong to different grid shapes")]
    ShapeMismatch,

    #[error("not a facet: {0}")]
    NotAFacet(FacetDefect),

    #[error("witness construction requires P < Q in the shelling order")]
    WitnessPrecondition,

    #[error("witness construction produced an invalid intermediate facet: {0}")]
    WitnessInternal(String),

    #[error("facet index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
