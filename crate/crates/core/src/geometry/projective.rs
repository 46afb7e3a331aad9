use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A point of projective space with `N` homogeneous coordinates, stored as a
/// primitive integer vector whose first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint<const N: usize> {
    coords: [BigInt; N],
}

/// `[p:q:r]`
pub type ProjectivePoint2 = ProjectivePoint<3>;
/// `[x:y:z:s]`; `s = 0` is the plane at infinity.
pub type ProjectivePoint3 = ProjectivePoint<4>;

impl<const N: usize> ProjectivePoint<N> {
    pub fn from_integers(coords: [BigInt; N]) -> Result<Self> {
        let mut g = BigInt::zero();
        for c in &coords {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        let first_negative = coords.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        if first_negative {
            g = -g;
        }
        Ok(Self { coords: coords.map(|c| c / &g) })
    }

    pub fn from_rationals(coords: &[Rational; N]) -> Result<Self> {
        normalize_projective(coords)
    }

    pub fn coords(&self) -> &[BigInt; N] {
        &self.coords
    }

    pub fn to_rationals(&self) -> [Rational; N] {
        std::array::from_fn(|i| Rational::from_integer(self.coords[i].clone()))
    }
}

/// Clears denominators, divides out the gcd, and makes the first nonzero
/// coordinate positive.
pub fn normalize_projective<const N: usize>(coords: &[Rational; N]) -> Result<ProjectivePoint<N>> {
    let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = std::array::from_fn(|i| {
        let c = &coords[i];
        c.numer() * (&lcm / c.denom())
    });
    ProjectivePoint::from_integers(ints)
}

impl ProjectivePoint3 {
    pub fn is_at_infinity(&self) -> bool {
        self.coords[3].is_zero()
    }

    /// The affine point `(x/s, y/s, z/s)`, or `None` at infinity.
    pub fn to_affine(&self) -> Option<[Rational; 3]> {
        if self.is_at_infinity() {
            return None;
        }
        let s = &self.coords[3];
        Some(std::array::from_fn(|i| Rational::new(self.coords[i].clone(), s.clone())))
    }

    pub fn from_affine(point: &[Rational; 3]) -> Self {
        let [x, y, z] = point.clone();
        normalize_projective(&[x, y, z, Rational::one()]).expect("s = 1 is nonzero")
    }
}

impl<const N: usize> fmt::Display for ProjectivePoint<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `[p:q:r]`, `p:q:r` or `p,q,r`; entries may be rationals.
impl<const N: usize> FromStr for ProjectivePoint<N> {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let body = input.trim().trim_start_matches('[').trim_end_matches(']');
        let sep = if body.contains(':') { ':' } else { ',' };
        let parts = body.split(sep).map(super::rational::parse_rational).collect::<Result<Vec<_>>>()?;
        let coords: [Rational; N] = parts.try_into().map_err(|v: Vec<_>| Error::Parse {
            input: input.to_string(),
            reason: format!("expected {N} coordinates, found {}", v.len()),
        })?;
        normalize_projective(&coords)
    }
}
