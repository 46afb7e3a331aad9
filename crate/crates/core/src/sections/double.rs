use num_traits::{One, Zero};

use super::{Conic, QuadricSection, SectionPoint};
use crate::error::{Error, Result};
use crate::geometry::{int, Rational, Slope};

/// The section `(x + n₀ + z)² = 9xn₀z` of the double Fricke surface with base point `O = (m₀, k₀)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2SectionFrame {
    n0: Rational,
    base: SectionPoint,
    conic: Conic,
}

impl F2SectionFrame {
    pub fn new(m0: Rational, n0: Rational, k0: Rational) -> Result<Self> {
        let s = &m0 + &n0 + &k0;
        if &s * &s != int(9) * &m0 * &n0 * &k0 {
            return Err(Error::NotOnSurface(format!("({m0},{n0},{k0})")));
        }
        let two_n0 = int(2) * &n0;
        let conic = Conic {
            a: Rational::one(),
            b: int(2) - int(9) * &n0,
            c: Rational::one(),
            d: two_n0.clone(),
            e: two_n0,
            f: &n0 * &n0,
        };
        if conic.is_degenerate() {
            return Err(Error::DegenerateSection(n0));
        }
        Ok(Self { n0, base: SectionPoint::new(m0, k0), conic })
    }

    pub fn from_integers(m0: i64, n0: i64, k0: i64) -> Result<Self> {
        Self::new(int(m0), int(n0), int(k0))
    }

    /// Second point of the line through `O` with slope `μ`.
    fn through_base(&self, slope: Slope) -> Result<SectionPoint> {
        let (m0, k0, n0) = (&self.base.x, &self.base.z, &self.n0);
        let nine_n0 = int(9) * n0;
        let two = int(2);
        let Slope::Finite(mu) = slope else {
            return Ok(SectionPoint::new(m0.clone(), &nine_n0 * m0 - &two * m0 - &two * n0 - k0));
        };
        let mu1 = &mu + Rational::one();
        let den = &mu1 * &mu1 - &nine_n0 * &mu;
        if den.is_zero() {
            return Err(Error::DenominatorVanishes { slope: mu });
        }
        let mu2 = &mu * &mu;
        let x = (&nine_n0 * k0 - &two * &mu * n0 - &two * &mu * k0 - m0 - &two * n0 - &two * k0 + m0 * &mu2) / &den;
        let z = (&nine_n0 * m0 * &mu2
            - &two * &mu2 * m0
            - &two * &mu2 * n0
            - &mu2 * k0
            - &two * &mu * m0
            - &two * &mu * n0
            + k0)
            / &den;
        Ok(SectionPoint::new(x, z))
    }
}

impl QuadricSection for F2SectionFrame {
    fn n0(&self) -> &Rational {
        &self.n0
    }

    fn base(&self) -> &SectionPoint {
        &self.base
    }

    fn conic(&self) -> &Conic {
        &self.conic
    }

    fn add(&self, p1: &SectionPoint, p2: &SectionPoint) -> Result<SectionPoint> {
        self.check(p1)?;
        self.check(p2)?;
        if p1 == p2 {
            return self.double(p1);
        }
        self.through_base(Slope::through(&p1.x, &p1.z, &p2.x, &p2.z))
    }

    fn double(&self, p: &SectionPoint) -> Result<SectionPoint> {
        self.check(p)?;
        self.through_base(self.conic.tangent_slope(p))
    }
}
