//! Exact value types shared by every surface: rationals, projective points,
//! quadratic irrationals, slopes, and the line/cubic intersection oracle.

mod line;
mod projective;
mod quadratic;
mod rational;

pub use line::{
    line_third_intersection, secant_third_point, ComposeResult, LineParameter, Slope, SurfaceId, UndefinedReason,
};
pub use projective::{normalize_projective, ProjectivePoint, ProjectivePoint2, ProjectivePoint3};
pub use quadratic::{roots_of_quadratic, squarefree_decompose, QuadraticIrrational, QuadraticRoot};
pub use rational::{
    format_rational, format_rationals, frac, int, integer_sqrt, parse_rational, parse_rationals, rational_sqrt,
    Rational,
};
