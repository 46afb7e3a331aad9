use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::projective::{normalize_projective, ProjectivePoint3};
use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Poly(Vec<Rational>);

impl Poly {
    pub(crate) fn constant(c: Rational) -> Self {
        Self(vec![c])
    }

    /// `base + dir * t`
    pub(crate) fn linear(base: &Rational, dir: &Rational) -> Self {
        Self(vec![base.clone(), dir.clone()])
    }

    /// Coefficient of `t^i`.
    pub(crate) fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn scale(&self, k: &Rational) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }
}

/// Which cubic surface a computation refers to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SurfaceId {
    /// `x^2 + y^2 + z^2 = 3xyz + sigma`
    Fricke { sigma: Rational },
    /// `(x + y + z)^2 = 9xyz`
    DoubleFricke,
}

impl SurfaceId {
    pub fn markov() -> Self {
        Self::Fricke { sigma: Rational::zero() }
    }

    /// The defining polynomial evaluated at an affine point; zero exactly on the surface.
    pub fn residual(&self, p: &[Rational; 3]) -> Rational {
        let [x, y, z] = p;
        match self {
            Self::Fricke { sigma } => x * x + y * y + z * z - int(3) * x * y * z - sigma,
            Self::DoubleFricke => {
                let s = x + y + z;
                &s * &s - int(9) * x * y * z
            }
        }
    }

    pub fn contains(&self, p: &[Rational; 3]) -> bool {
        self.residual(p).is_zero()
    }

    pub fn contains_projective(&self, p: &ProjectivePoint3) -> bool {
        let [x, y, z, s] = p.to_rationals().map(Poly::constant);
        self.homogeneous(&x, &y, &z, &s).coeff(0).is_zero()
    }

    /// The homogenized defining form, evaluated on polynomial coordinates.
    fn homogeneous(&self, x: &Poly, y: &Poly, z: &Poly, s: &Poly) -> Poly {
        match self {
            Self::Fricke { sigma } => {
                let squares = &(&(x * x) + &(y * y)) + &(z * z);
                let cubic = (&(x * y) * z).scale(&int(3));
                let constant = (&(s * s) * s).scale(sigma);
                &(&(&squares * s) - &cubic) - &constant
            }
            Self::DoubleFricke => {
                let sum = &(x + y) + z;
                &(&(&sum * &sum) * s) - &(&(x * y) * z).scale(&int(9))
            }
        }
    }

    /// The form restricted to the line `base + t * dir` in homogeneous coordinates.
    fn on_line(&self, base: &[Rational; 4], dir: &[Rational; 4]) -> Poly {
        let [x, y, z, s]: [Poly; 4] = std::array::from_fn(|i| Poly::linear(&base[i], &dir[i]));
        self.homogeneous(&x, &y, &z, &s)
    }

    fn is_singular_origin(&self, p: &[Rational; 3]) -> bool {
        p.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for SurfaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Fricke { sigma } if sigma.is_zero() => write!(f, "fricke"),
            Self::Fricke { sigma } => write!(f, "fricke(sigma={})", format_rational(sigma)),
            Self::DoubleFricke => write!(f, "double-fricke"),
        }
    }
}

/// Slope `dz/dx` of a line in a section plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Rational),
    Vertical,
}

impl Slope {
    /// Slope of the line through `(x1, z1)` and `(x2, z2)`; the points must differ.
    pub fn through(x1: &Rational, z1: &Rational, x2: &Rational, z2: &Rational) -> Self {
        let dx = x2 - x1;
        if dx.is_zero() {
            Self::Vertical
        } else {
            Self::Finite((z2 - z1) / dx)
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(m) => write!(f, "{m}"),
            Self::Vertical => write!(f, "infinity"),
        }
    }
}

/// Parameter on the line `(P - Q) t + Q`; `t = 0` is `Q`, `t = 1` is `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineParameter(pub Rational);

impl LineParameter {
    pub fn point(&self, p: &[Rational; 3], q: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| (&p[i] - &q[i]) * &self.0 + &q[i])
    }
}

/// Third intersection of the line through `p` and `q` with the surface.
///
/// Substitutes the parametrization into the surface equation, divides the
/// resulting cubic in `t` by `t(t - 1)` and returns the root of the linear
/// quotient. Fails with `DegenerateCubic` when the cubic term vanishes, i.e.
/// the third intersection lies at infinity.
pub fn line_third_intersection(p: &[Rational; 3], q: &[Rational; 3], surface: &SurfaceId) -> Result<LineParameter> {
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    if surface.is_singular_origin(p) || surface.is_singular_origin(q) {
        return Err(Error::OriginOperand);
    }
    let base = [q[0].clone(), q[1].clone(), q[2].clone(), Rational::one()];
    let dir = [&p[0] - &q[0], &p[1] - &q[1], &p[2] - &q[2], Rational::zero()];
    let cubic = surface.on_line(&base, &dir);
    let (c0, c1, c2, c3) = (cubic.coeff(0), cubic.coeff(1), cubic.coeff(2), cubic.coeff(3));
    if !c0.is_zero() {
        return Err(Error::NotOnSurface(super::rational::format_rationals(q)));
    }
    // deflate by t, then synthetic division by (t - 1): c3 t + (c2 + c3), remainder c1 + c2 + c3
    if !(&c1 + &c2 + &c3).is_zero() {
        return Err(Error::NotOnSurface(super::rational::format_rationals(p)));
    }
    if c3.is_zero() {
        return Err(Error::DegenerateCubic);
    }
    Ok(LineParameter(-(c2 + &c3) / c3))
}

/// Why a secant composition has no value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UndefinedReason {
    CoincidentPoints,
    OriginOperand,
    /// Both points lie on one line at infinity, which is contained in the surface.
    SameInfinityLine,
    /// The joining line is contained in the surface.
    LineOnSurface,
    /// Operands belong to different surfaces.
    SurfaceMismatch,
}

impl UndefinedReason {
    pub fn code(&self) -> &'static str {
        match self {
            Self::CoincidentPoints => "coincident-points",
            Self::OriginOperand => "origin-operand",
            Self::SameInfinityLine => "same-infinity-line",
            Self::LineOnSurface => "line-on-surface",
            Self::SurfaceMismatch => "surface-mismatch",
        }
    }
}

impl fmt::Display for UndefinedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Outcome of a secant composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComposeResult<P> {
    Finite(P),
    /// A point on one of the lines at infinity (`s = 0`).
    Infinite(ProjectivePoint3),
    Undefined(UndefinedReason),
}

impl<P> ComposeResult<P> {
    pub fn finite(self) -> Option<P> {
        match self {
            Self::Finite(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, Self::Undefined(_))
    }

    pub fn map<Q>(self, f: impl FnOnce(P) -> Q) -> ComposeResult<Q> {
        match self {
            Self::Finite(p) => ComposeResult::Finite(f(p)),
            Self::Infinite(p) => ComposeResult::Infinite(p),
            Self::Undefined(r) => ComposeResult::Undefined(r),
        }
    }
}

/// Third intersection of the projective line through `p` and `q` with the
/// closure of the surface.
///
/// On the line `λp + μq` the homogeneous form is a binary cubic vanishing at
/// `[1:0]` and `[0:1]`, so it factors as `λμ(αλ + βμ)` and the third point is
/// `βp - αq`. Both `α` and `β` vanish exactly when the line lies on the surface.
pub fn secant_third_point(
    surface: &SurfaceId,
    p: &ProjectivePoint3,
    q: &ProjectivePoint3,
) -> std::result::Result<ProjectivePoint3, UndefinedReason> {
    if p == q {
        return Err(UndefinedReason::CoincidentPoints);
    }
    let singular = |pt: &ProjectivePoint3| pt.coords()[..3].iter().all(Zero::is_zero);
    if singular(p) || singular(q) {
        return Err(UndefinedReason::OriginOperand);
    }
    let pr = p.to_rationals();
    let qr = q.to_rationals();
    // F(q + t p) = F(q) + β t + α t^2 + F(p) t^3
    let restricted = surface.on_line(&qr, &pr);
    let beta = restricted.coeff(1);
    let alpha = restricted.coeff(2);
    if alpha.is_zero() && beta.is_zero() {
        return Err(if p.is_at_infinity() && q.is_at_infinity() {
            UndefinedReason::SameInfinityLine
        } else {
            UndefinedReason::LineOnSurface
        });
    }
    let third: [Rational; 4] = std::array::from_fn(|i| &beta * &pr[i] - &alpha * &qr[i]);
    Ok(normalize_projective(&third).expect("p and q are independent"))
}
