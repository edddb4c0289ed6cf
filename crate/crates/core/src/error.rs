use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("polynomial is not a perfect square")]
    NotAPerfectSquare,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("point has {got} coordinates, ring has {expected} variables")]
    PointLength { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index error: {0}")]
    IndexError(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("resource limit of {limit} S-pair reductions exceeded")]
    ResourceLimit { limit: usize },
    #[error("the ideal is the whole ring")]
    UnitIdeal,
    #[error("target is not in the column span")]
    NoSolution,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("Betti numbers {0:?} are not of the form (1, k+1, 2k, k+1, 1)")]
    NotSymmetricBetti(Vec<usize>),
    #[error("no symmetric pairing solves the duality system: {0}")]
    NoPairingSolution(String),
    #[error("hyperbolic reduction blocked over the rationals; diagonal residue {diagonal:?}")]
    SquareClassObstruction { diagonal: Vec<String> },
    #[error("point {0} does not lie on V(I)")]
    PointNotOnVariety(usize),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("invalid resolution data: {0}")]
    Invalid(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinorError {
    #[error("top wedge entry {index} is not divisible by ±L_{index}")]
    NotDivisible { index: usize },
    #[error("top wedge is not a single multiple of L (entry {index} disagrees)")]
    InconsistentFactorization { index: usize },
    #[error("cofactor of L is not a perfect square")]
    NotAPerfectSquare,
    #[error("subset has the wrong parity for k = {k}")]
    WrongParity { k: usize },
    #[error("invalid subset: {0}")]
    InvalidSet(String),
    #[error("torus scale factors must be nonzero")]
    ZeroScale,
    #[error("matrix does not satisfy the isotropy equations")]
    NotOnVariety,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("generators are not a regular sequence (codimension {codim})")]
    NotRegularSequence { codim: usize },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("expected codimension {expected}, found {found}")]
    WrongCodimension { expected: usize, found: usize },
    #[error("the identity sum a_i n_i = sum b_i m_i fails")]
    IdentityFails,
    #[error("invalid family parameters: {0}")]
    Invalid(String),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
