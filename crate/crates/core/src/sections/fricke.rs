use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{Conic, QuadricSection, SectionPoint};
use crate::error::{Error, Result};
use crate::geometry::{int, Rational, Slope};

/// The section `x² + n₀² + z² = 3xn₀z` of the Fricke surface with base point `O = (m₀, k₀)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionFrame {
    n0: Rational,
    base: SectionPoint,
    conic: Conic,
}

impl SectionFrame {
    /// Builds the frame from a point `(m₀, n₀, k₀)` of the surface.
    pub fn new(m0: Rational, n0: Rational, k0: Rational) -> Result<Self> {
        let lhs = &m0 * &m0 + &n0 * &n0 + &k0 * &k0;
        let rhs = int(3) * &m0 * &n0 * &k0;
        if lhs != rhs {
            return Err(Error::NotOnSurface(format!("({m0},{n0},{k0})")));
        }
        let conic = Conic {
            a: Rational::one(),
            b: -int(3) * &n0,
            c: Rational::one(),
            d: Rational::zero(),
            e: Rational::zero(),
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

    /// Positive integers with `n₀ = max(m₀, n₀, k₀)`.
    pub fn is_fundamental(&self) -> bool {
        let all = [&self.base.x, &self.n0, &self.base.z];
        all.iter().all(|v| v.is_integer() && v.is_positive()) && all.iter().all(|v| **v <= self.n0)
    }

    pub fn dihedral(&self, p: &SectionPoint, which: DihedralMove) -> SectionPoint {
        let three_n0 = int(3) * &self.n0;
        let (m, k) = (&p.x, &p.z);
        let (x, z) = match which {
            DihedralMove::A => (m.clone(), &three_n0 * m - k),
            DihedralMove::TA => (&three_n0 * m - k, m.clone()),
            DihedralMove::C => (&three_n0 * k - m, k.clone()),
            DihedralMove::TC => (k.clone(), &three_n0 * k - m),
            DihedralMove::B => (-m, -k),
            DihedralMove::T => (k.clone(), m.clone()),
        };
        SectionPoint::new(x, z)
    }

    /// Closed form of the `r`-th power of `TA` or `TC`.
    pub fn ta_power(&self, p: &SectionPoint, r: u32, family: Translation) -> SectionPoint {
        let r = i64::from(r);
        let b = |i: i64| chebyshev_b_signed(i, &self.n0).expect("index at least -2");
        let (m, k) = (&p.x, &p.z);
        let (br, br1, br2) = (b(r), b(r - 1), b(r - 2));
        match family {
            Translation::TA => SectionPoint::new(m * &br - k * &br1, m * &br1 - k * &br2),
            Translation::TC => SectionPoint::new(k * &br1 - m * &br2, k * &br - m * &br1),
        }
    }
}

impl QuadricSection for SectionFrame {
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
        let (m0, k0, n0) = (&self.base.x, &self.base.z, &self.n0);
        if p1.x == p2.x {
            return Ok(SectionPoint::new(m0.clone(), int(3) * n0 * m0 - k0));
        }
        let mu = (&p2.z - &p1.z) / (&p2.x - &p1.x);
        let den = Rational::one() + &mu * &mu - int(3) * n0 * &mu;
        if den.is_zero() {
            return Err(Error::DenominatorVanishes { slope: mu });
        }
        let mu2 = &mu * &mu;
        let x = (&mu2 * m0 - m0 - int(2) * &mu * k0 + int(3) * n0 * k0) / &den;
        let z = (k0 - int(2) * m0 * &mu - &mu2 * k0 + int(3) * m0 * n0 * &mu2) / &den;
        Ok(SectionPoint::new(x, z))
    }

    fn double(&self, p: &SectionPoint) -> Result<SectionPoint> {
        self.check(p)?;
        if let Slope::Finite(mu) = self.conic.tangent_slope(p) {
            if (Rational::one() + &mu * &mu - int(3) * &self.n0 * &mu).is_zero() {
                return Err(Error::DenominatorVanishes { slope: mu });
            }
        }
        let (m0, k0, n0) = (&self.base.x, &self.base.z, &self.n0);
        let (x1, z1) = (&p.x, &p.z);
        let n0sq = n0 * n0;
        let cross = x1 * k0 - z1 * m0;
        let cross2 = &cross * &cross;
        let x = (x1 * x1 * &n0sq + &cross2) / (&n0sq * m0);
        let z = (z1 * z1 * &n0sq + &cross2) / (&n0sq * k0);
        Ok(SectionPoint::new(x, z))
    }
}

/// Generators of the infinite dihedral group acting on a section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralMove {
    A,
    TA,
    C,
    TC,
    B,
    T,
}

impl DihedralMove {
    pub const ALL: [DihedralMove; 6] = [Self::A, Self::TA, Self::C, Self::TC, Self::B, Self::T];
}

impl FromStr for DihedralMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Self::A),
            "TA" => Ok(Self::TA),
            "C" => Ok(Self::C),
            "TC" => Ok(Self::TC),
            "B" => Ok(Self::B),
            "T" => Ok(Self::T),
            _ => Err(Error::Parse { input: s.to_owned(), reason: "expected A, TA, C, TC, B or T".into() }),
        }
    }
}

impl fmt::Display for DihedralMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::TA => "TA",
            Self::C => "C",
            Self::TC => "TC",
            Self::B => "B",
            Self::T => "T",
        };
        f.write_str(s)
    }
}

/// The two infinite-order translations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Translation {
    TA,
    TC,
}

impl Translation {
    pub fn as_move(self) -> DihedralMove {
        match self {
            Self::TA => DihedralMove::TA,
            Self::TC => DihedralMove::TC,
        }
    }
}

impl FromStr for Translation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "TA" | "ta" => Ok(Self::TA),
            "TC" | "tc" => Ok(Self::TC),
            _ => Err(Error::Parse { input: s.to_owned(), reason: "expected TA or TC".into() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevValue {
    pub r: u32,
    pub n0: Rational,
    pub value: Rational,
}

/// `b_{r+2} = 3n₀ b_{r+1} − b_r`, `b₀ = 1`, `b₁ = 3n₀`.
pub fn chebyshev_b(r: u32, n0: &Rational) -> ChebyshevValue {
    let value = chebyshev_b_signed(i64::from(r), n0).expect("nonnegative index");
    ChebyshevValue { r, n0: n0.clone(), value }
}

/// Same recurrence extended backwards: `b₋₁ = 0`, `b₋₂ = −1`.
pub fn chebyshev_b_signed(r: i64, n0: &Rational) -> Result<Rational> {
    if r < -2 {
        return Err(Error::Parse { input: r.to_string(), reason: "index below -2".into() });
    }
    if r == -2 {
        return Ok(-Rational::one());
    }
    let three_n0 = int(3) * n0;
    let (mut prev, mut cur) = (-Rational::one(), Rational::zero());
    for _ in -1..r {
        let next = &three_n0 * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `[[3n₀, −1], [1, 0]]^r` by repeated squaring.
pub fn chebyshev_matrix_power(n0: &Rational, r: u32) -> [[Rational; 2]; 2] {
    type M = [[Rational; 2]; 2];
    fn mul(a: &M, b: &M) -> M {
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }
    let mut acc: M = [[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]];
    let mut base: M = [[int(3) * n0, -Rational::one()], [Rational::one(), Rational::zero()]];
    let mut n = r;
    while n > 0 {
        if n & 1 == 1 {
            acc = mul(&acc, &base);
        }
        n >>= 1;
        if n > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// `b_r / b_{r−1}`, the `r`-th convergent of `⌈3n₀ : 3n₀ : …⌉`.
pub fn cf_convergent(n0: &Rational, r: u32) -> Result<Rational> {
    if r == 0 {
        return Err(Error::IndexZero);
    }
    let num = chebyshev_b_signed(i64::from(r), n0)?;
    let den = chebyshev_b_signed(i64::from(r) - 1, n0)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num / den)
}
