use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite coordinate in input")]
    NonFinite,

    #[error("a simplex in R^{dim} needs {expected} vertices, got {found}")]
    VertexCount {
        dim: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension {0} is out of range {1}..={2}")]
    DimensionOutOfRange(usize, usize, usize),

    #[error("degenerate {what}: normalized measure {measure:e} is below threshold {threshold:e}")]
    Degenerate {
        what: &'static str,
        measure: f64,
        threshold: f64,
    },

    #[error("perturbed simplex is degenerate at t = {t:e}")]
    PerturbedDegenerate { t: f64 },

    #[error("facet index {index} out of range for a simplex with {count} facets")]
    FacetIndex { index: usize, count: usize },

    #[error("matrix must be square {dim}x{dim}")]
    NotSquare { dim: usize },

    #[error("triangle is not right-angled at C: |gamma - pi/2| = {deviation:e} rad")]
    NotRightTriangle { deviation: f64 },

    #[error("legs {i} and {j} are not orthogonal: normalized dot {cosine:e}")]
    NotOrthogonal { i: usize, j: usize, cosine: f64 },

    #[error("random generator gave up after {0} rejected candidates")]
    GeneratorExhausted(usize),
}
