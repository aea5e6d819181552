use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing and positive")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("the empty partition has no Frobenius coordinates")]
    EmptyPartition,

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("polynomial is not symmetric: orbit of {exponent:?} has unequal coefficients")]
    NotSymmetric { exponent: Vec<u32> },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("insufficient variables for faithful expansion: {nvars} variables, degree {degree}")]
    InsufficientVariables { nvars: usize, degree: usize },

    #[error("the zero polynomial has no Newton polytope")]
    ZeroPolynomial,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("empty generator set")]
    EmptyGenerators,

    #[error("group degree must be at least {min}, got {n}")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("shape is not a border strip")]
    NotBorderStrip,

    #[error("{beta:?} does not refine {alpha:?}")]
    NotARefinement { beta: Vec<usize>, alpha: Vec<usize> },

    #[error("invalid outside decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("multiple dominance-maximal exponents: {0:?}")]
    NonUniqueMaximum(Vec<Vec<usize>>),

    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
