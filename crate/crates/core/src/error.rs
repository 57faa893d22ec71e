use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("affine part of an automorphism is not invertible")]
    NonInvertibleAffine,
    #[error("homogenization degree {requested} is below the polynomial degree {degree}")]
    DegreeTooSmall { degree: u32, requested: u32 },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("constant polynomial has no curve")]
    ConstantPolynomial,
    #[error("point at infinity is not rational (minimal polynomial {0})")]
    NonRationalPoint(String),
    #[error("germ does not vanish at the origin")]
    UnitGerm,
    #[error("germ is the zero polynomial")]
    ZeroGerm,
    #[error("germ has a repeated component")]
    NotReduced,
    #[error("a second algebraic extension would be needed: {0}")]
    ExtensionTowerRequired(String),
    #[error("branches not separated within truncation order {0}")]
    TruncationTooSmall(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectError {
    #[error("branch lies on the curve up to the available precision")]
    BranchContainedInCurve,
    #[error("germs share a common component")]
    CommonComponent,
    #[error("other intersection points interfere with the projection: {0}")]
    LocalizationFailure(String),
    #[error("parameterization gives {param}, resultant order gives {resultant}")]
    MethodDisagreement { param: u64, resultant: u64 },
    #[error(transparent)]
    Local(#[from] LocalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BifurcationError {
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("value {0} listed twice")]
    DuplicateValue(String),
    #[error("invalid ramification profile: {0}")]
    InvalidProfile(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Local(#[from] LocalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} cannot be blown down: {1}")]
    NotBlowDownable(usize, String),
    #[error("blowing down vertex {0} would create a loop")]
    WouldCreateLoop(usize),
    #[error("no vertex with id {0}")]
    UnknownVertex(usize),
    #[error("no edge between {0} and {1}")]
    UnknownEdge(usize, usize),
    #[error("moves may only create components colored zero or infinity")]
    DicriticalMove,
    #[error("graph has {0} vertices, above the isomorphism limit")]
    SizeLimitExceeded(usize),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is not reduced")]
    NotReduced,
    #[error("base point not rational: {0}")]
    NonRationalBasePoint(String),
    #[error("component {0} splits into conjugate components over an extension")]
    ReducibleComponent(String),
    #[error("more than {0} blow-ups needed")]
    ResolutionBudgetExceeded(usize),
    #[error("exceptional component mapped to the constant value {0}, outside zero and infinity")]
    UnexpectedFiberValue(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("invalid parameters: {}", .0.join("; "))]
    InvalidParameters(Vec<String>),
    #[error("polynomial is not linear in y after removing its y-free content")]
    NotLinearInY,
    #[error("polynomial is not reduced")]
    NotReduced,
    #[error("unknown case tag {0:?}")]
    UnknownTag(String),
    #[error("bad parameter {0}")]
    BadParameter(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error(transparent)]
    Bifurcation(#[from] BifurcationError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
