use thiserror::Error;

use crate::geometry::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("projective coordinates are all zero")]
    ZeroVector,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("an operand is the singular point at the origin")]
    OriginOperand,
    #[error("the line meets the surface at infinity; no finite third intersection")]
    DegenerateCubic,
    #[error("point ({0}) is not on the surface")]
    NotOnSurface(String),
    #[error("Viete generators are only defined for sigma = 0")]
    SigmaUnsupported,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("[0:0:0:1] is the singular point and has no image")]
    SingularPoint,
    #[error("map is undefined at the coordinate point {0}")]
    BasePointUndefined(String),
    #[error("the image is the zero vector")]
    UndefinedImage,
    #[error("chord slope {slope} is parallel to an asymptote; the sum is a point at infinity")]
    DenominatorVanishes { slope: Rational },
    #[error("section plane y = {0} cuts a degenerate conic")]
    DegenerateSection(Rational),
    #[error("index must be at least 1")]
    IndexZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("quadratic has complex roots")]
    ComplexRoots,
    #[error("leading coefficient is zero")]
    NotQuadratic,
    #[error("{0} is not a perfect square")]
    NotASquare(String),
    #[error("{0} is not a Markov number")]
    NotAMarkovNumber(String),
    #[error("root triple ({0}) is not on the surface")]
    RootOffSurface(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
