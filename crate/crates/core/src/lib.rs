//! Composition laws on the Fricke surface `x² + y² + z² = 3xyz` and the double
//! Fricke surface `(x + y + z)² = 9xyz`, in exact rational arithmetic.
//!
//! * [`geometry`]: rationals, projective points, quadratic irrationals and the
//!   line/cubic intersection oracle.
//! * [`fricke`]: Viète moves, the parametrization `φ`/`ψ`, the secant
//!   composition `∘`, the star law and their transfers to `P²(Q)`.
//! * [`sections`]: group laws on the conic sections `y = n₀` of both surfaces,
//!   dihedral moves, Chebyshev-like recurrences and continued fractions.
//! * [`double`]: the double Fricke surface and its Nielsen moves.
//! * [`tree`]: Markov tree enumeration and the Frobenius scan.

pub mod double;
pub mod error;
pub mod fricke;
pub mod geometry;
pub mod sampling;
pub mod sections;
pub mod tree;

pub use error::{Error, Result};
pub use geometry::{ComposeResult, Rational, UndefinedReason};
