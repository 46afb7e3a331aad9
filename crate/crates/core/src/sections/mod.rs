//! Conic sections `y = n₀` of the Fricke and double Fricke surfaces, with the
//! chord group law: `A ⊕ B` is the second intersection with the conic of the
//! line through the base point `O` parallel to `AB`.

mod double;
mod fricke;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{format_rational, int, rational_sqrt, roots_of_quadratic, QuadraticRoot, Rational, Slope};

pub use double::F2SectionFrame;
pub use fricke::{
    cf_convergent, chebyshev_b, chebyshev_b_signed, chebyshev_matrix_power, ChebyshevValue, DihedralMove, SectionFrame,
    Translation,
};

/// A point `(x, z)` of a section plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectionPoint {
    pub x: Rational,
    pub z: Rational,
}

impl SectionPoint {
    pub fn new(x: Rational, z: Rational) -> Self {
        Self { x, z }
    }

    pub fn from_integers(x: i64, z: i64) -> Self {
        Self::new(int(x), int(z))
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.z.is_integer()
    }
}

impl fmt::Display for SectionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", format_rational(&self.x), format_rational(&self.z))
    }
}

/// Rational solutions of the section equation for a fixed `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveZ {
    Points(Vec<SectionPoint>),
    /// The discriminant is not the square of a rational.
    NonRational,
}

/// `A x² + B xz + C z² + D x + E z + F = 0`, with `C ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conic {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    e: Rational,
    f: Rational,
}

impl Conic {
    fn value(&self, p: &SectionPoint) -> Rational {
        let (x, z) = (&p.x, &p.z);
        &self.a * x * x + &self.b * x * z + &self.c * z * z + &self.d * x + &self.e * z + &self.f
    }

    fn contains(&self, p: &SectionPoint) -> bool {
        self.value(p).is_zero()
    }

    /// Other intersection of the conic with the line through `p` of the given slope.
    fn second_intersection(&self, p: &SectionPoint, slope: &Slope) -> Result<SectionPoint> {
        match slope {
            Slope::Vertical => {
                let linear = &self.b * &p.x + &self.e;
                let z = -linear / &self.c - &p.z;
                Ok(SectionPoint::new(p.x.clone(), z))
            }
            Slope::Finite(mu) => {
                let w = &p.z - mu * &p.x;
                let lead = &self.a + &self.b * mu + &self.c * mu * mu;
                if lead.is_zero() {
                    return Err(Error::DenominatorVanishes { slope: mu.clone() });
                }
                let linear = &self.b * &w + int(2) * &self.c * mu * &w + &self.d + &self.e * mu;
                let x = -linear / lead - &p.x;
                let z = mu * &x + w;
                Ok(SectionPoint::new(x, z))
            }
        }
    }

    fn tangent_slope(&self, p: &SectionPoint) -> Slope {
        let gx = int(2) * &self.a * &p.x + &self.b * &p.z + &self.d;
        let gz = &self.b * &p.x + int(2) * &self.c * &p.z + &self.e;
        if gz.is_zero() {
            Slope::Vertical
        } else {
            Slope::Finite(-gx / gz)
        }
    }

    fn solve_z(&self, x: &Rational) -> SolveZ {
        let lin = &self.b * x + &self.e;
        let cst = &self.a * x * x + &self.d * x + &self.f;
        let disc = &lin * &lin - int(4) * &self.c * &cst;
        let Some(root) = rational_sqrt(&disc) else {
            return SolveZ::NonRational;
        };
        let two_c = int(2) * &self.c;
        let mut zs = vec![(-&lin - &root) / &two_c, (-&lin + &root) / &two_c];
        zs.dedup();
        SolveZ::Points(zs.into_iter().map(|z| SectionPoint::new(x.clone(), z)).collect())
    }

    /// The points at infinity `t = x/z` solve `A t² + B t + C = 0`.
    fn infinity_points(&self) -> Result<[QuadraticRoot; 2]> {
        roots_of_quadratic([&self.a, &self.b, &self.c])
    }

    fn is_degenerate(&self) -> bool {
        // 4 det [[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]]
        let (a, b, c, d, e, f) = (&self.a, &self.b, &self.c, &self.d, &self.e, &self.f);
        let det4 = int(4) * a * c * f + b * e * d - a * e * e - c * d * d - f * b * b;
        det4.is_zero()
    }
}

/// Operations shared by the sections of both surfaces.
pub trait QuadricSection {
    fn n0(&self) -> &Rational;

    /// The neutral element `O = (m₀, k₀)`.
    fn base(&self) -> &SectionPoint;

    fn conic(&self) -> &Conic;

    /// `P₁ ⊕ P₂`; dispatches to [`QuadricSection::double`] when the points coincide.
    fn add(&self, p1: &SectionPoint, p2: &SectionPoint) -> Result<SectionPoint>;

    fn double(&self, p: &SectionPoint) -> Result<SectionPoint>;

    fn contains(&self, p: &SectionPoint) -> bool {
        self.conic().contains(p)
    }

    fn check(&self, p: &SectionPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnSurface(p.to_string()))
        }
    }

    fn point(&self, x: Rational, z: Rational) -> Result<SectionPoint> {
        let p = SectionPoint::new(x, z);
        self.check(&p)?;
        Ok(p)
    }

    /// The point `Q` with `P ⊕ Q = O`: the second intersection of the line
    /// through `P` parallel to the tangent at `O`.
    fn inverse(&self, p: &SectionPoint) -> Result<SectionPoint> {
        self.check(p)?;
        let slope = self.conic().tangent_slope(self.base());
        self.conic().second_intersection(p, &slope)
    }

    fn solve_z(&self, x: &Rational) -> SolveZ {
        self.conic().solve_z(x)
    }

    /// The two points at infinity as slopes `t = x/z`.
    fn infinity_points(&self) -> Result<[QuadraticRoot; 2]> {
        self.conic().infinity_points()
    }

    /// The second intersection of the line through `O` with the given slope;
    /// every rational point arises this way.
    fn point_from_slope(&self, slope: &Slope) -> Result<SectionPoint> {
        self.conic().second_intersection(self.base(), slope)
    }

    fn tangent_slope(&self, p: &SectionPoint) -> Slope {
        self.conic().tangent_slope(p)
    }

    /// `k · P` by double-and-add; negative `k` uses the inverse.
    fn multiple(&self, p: &SectionPoint, k: i64) -> Result<SectionPoint> {
        let mut acc = self.base().clone();
        let mut step = if k < 0 { self.inverse(p)? } else { p.clone() };
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &step)?;
            }
            n >>= 1;
            if n > 0 {
                step = self.double(&step)?;
            }
        }
        Ok(acc)
    }
}
