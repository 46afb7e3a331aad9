//! The Fricke surface `F_σ: x² + y² + z² = 3xyz + σ` (σ = 0 is the Markov
//! equation) and the structures carried by its rational points.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    format_rationals, int, normalize_projective, secant_third_point, ComposeResult, ProjectivePoint2, ProjectivePoint3,
    Rational, SurfaceId, UndefinedReason,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FrickeSurface {
    sigma: Rational,
}

impl FrickeSurface {
    pub fn markov() -> Self {
        Self::default()
    }

    pub fn with_sigma(sigma: Rational) -> Self {
        Self { sigma }
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    pub fn id(&self) -> SurfaceId {
        SurfaceId::Fricke { sigma: self.sigma.clone() }
    }

    pub fn contains(&self, p: &[Rational; 3]) -> bool {
        self.id().contains(p)
    }

    pub fn point(&self, coords: [Rational; 3]) -> Result<FrickePoint> {
        if !self.contains(&coords) {
            return Err(Error::NotOnSurface(format_rationals(&coords)));
        }
        Ok(FrickePoint { coords, sigma: self.sigma.clone() })
    }
}

/// An affine rational point of `F_σ`, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrickePoint {
    coords: [Rational; 3],
    sigma: Rational,
}

impl FrickePoint {
    /// A point of the Markov surface (σ = 0).
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        FrickeSurface::markov().point(coords)
    }

    pub fn from_integers(coords: [i64; 3]) -> Result<Self> {
        Self::new(coords.map(int))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    pub fn into_coords(self) -> [Rational; 3] {
        self.coords
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    pub fn surface(&self) -> FrickeSurface {
        FrickeSurface::with_sigma(self.sigma.clone())
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_projective(&self) -> ProjectivePoint3 {
        ProjectivePoint3::from_affine(&self.coords)
    }

    fn unchecked(coords: [Rational; 3], sigma: &Rational) -> Self {
        let p = Self { coords, sigma: sigma.clone() };
        debug_assert!(p.surface().contains(&p.coords), "off-surface result {p}");
        p
    }
}

impl fmt::Display for FrickePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_rationals(&self.coords))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    L,
    R,
}

/// `L(x,y,z) = (x, 3xy − z, y)`, `R(x,y,z) = (y, 3yz − x, z)`.
pub fn viete(p: &FrickePoint, generator: Generator) -> Result<FrickePoint> {
    if !p.sigma.is_zero() {
        return Err(Error::SigmaUnsupported);
    }
    let [x, y, z] = &p.coords;
    let three = int(3);
    let coords = match generator {
        Generator::L => [x.clone(), &three * x * y - z, y.clone()],
        Generator::R => [y.clone(), &three * y * z - x, z.clone()],
    };
    Ok(FrickePoint::unchecked(coords, &p.sigma))
}

/// Parametrization of the projective surface by the pencil of lines through
/// the singular point: `[p:q:r] ↦ [pS : qS : rS : 3pqr]`, `S = p² + q² + r²`.
pub fn phi(p: &ProjectivePoint2) -> ProjectivePoint3 {
    let [a, b, c] = p.coords();
    let s = a * a + b * b + c * c;
    let image = [a * &s, b * &s, c * &s, BigInt::from(3) * a * b * c];
    ProjectivePoint3::from_integers(image).expect("p^2 + q^2 + r^2 > 0 over Q")
}

/// Inverse of [`phi`]: the projection `[x:y:z:s] ↦ [x:y:z]`.
pub fn psi(p: &ProjectivePoint3) -> Result<ProjectivePoint2> {
    let [x, y, z, _] = p.coords().clone();
    if !FrickeSurface::markov().id().contains_projective(p) {
        return Err(Error::NotOnSurface(p.to_string()));
    }
    ProjectivePoint2::from_integers([x, y, z]).map_err(|_| Error::SingularPoint)
}

/// The affine chart `(P, Q) ↦ ((P²+Q²+1)/3Q, (P²+Q²+1)/3P, (P²+Q²+1)/3PQ)`.
pub fn param_affine(big_p: &Rational, big_q: &Rational) -> Result<FrickePoint> {
    if big_p.is_zero() || big_q.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let s = big_p * big_p + big_q * big_q + Rational::one();
    let three = int(3);
    let coords = [&s / (&three * big_q), &s / (&three * big_p), &s / (&three * big_p * big_q)];
    Ok(FrickePoint::unchecked(coords, &Rational::zero()))
}

/// Inverse of [`param_affine`]: `(x, y, z) ↦ (x/z, y/z)`.
pub fn chart(p: &FrickePoint) -> Result<(Rational, Rational)> {
    let [x, y, z] = &p.coords;
    if z.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok((x / z, y / z))
}

/// Third intersection of the line through `p` and `q` with the surface.
///
/// With `p = (a,b,c)` and `q = (m,n,k)`, the finite branch is
/// `x = (3(ank + bcm) − 2(am + bn + ck)) / (3(b − n)(c − k))` and its cyclic
/// analogues. When some coordinate difference vanishes the third point is the
/// direction of the line at infinity.
pub fn compose(p: &FrickePoint, q: &FrickePoint) -> ComposeResult<FrickePoint> {
    if p.sigma != q.sigma {
        return ComposeResult::Undefined(UndefinedReason::SurfaceMismatch);
    }
    if p == q {
        return ComposeResult::Undefined(UndefinedReason::CoincidentPoints);
    }
    if p.is_origin() || q.is_origin() {
        return ComposeResult::Undefined(UndefinedReason::OriginOperand);
    }
    let [a, b, c] = &p.coords;
    let [m, n, k] = &q.coords;
    let diffs = [a - m, b - n, c - k];
    if diffs.iter().any(Zero::is_zero) {
        return infinite_third_point(&p.surface().id(), &p.coords, &q.coords, diffs);
    }
    let [da, db, dc] = &diffs;
    let three = int(3);
    let two = int(2);
    let dot = a * m + b * n + c * k;
    let x = (&three * (a * n * k + b * c * m) - &two * &dot) / (&three * db * dc);
    let y = (&three * (b * m * k + a * c * n) - &two * &dot) / (&three * da * dc);
    let z = (&three * (c * m * n + a * b * k) - &two * &dot) / (&three * da * db);
    ComposeResult::Finite(FrickePoint::unchecked([x, y, z], &p.sigma))
}

/// Shared by both surfaces: the cubic term of the restricted equation is a
/// multiple of the product of the coordinate differences, so when one of them
/// vanishes the third intersection is the line's point at infinity, unless
/// the whole line lies on the surface (then `2p − q` is on it as well).
pub(crate) fn infinite_third_point<P>(
    surface: &SurfaceId,
    p: &[Rational; 3],
    q: &[Rational; 3],
    diffs: [Rational; 3],
) -> ComposeResult<P> {
    let beyond: [Rational; 3] = std::array::from_fn(|i| int(2) * &p[i] - &q[i]);
    if surface.contains(&beyond) {
        return ComposeResult::Undefined(UndefinedReason::LineOnSurface);
    }
    let [dx, dy, dz] = diffs;
    let direction = normalize_projective(&[dx, dy, dz, Rational::zero()]).expect("p != q");
    ComposeResult::Infinite(direction)
}

/// Composition on the projective closure, accepting points at infinity.
pub fn compose_projective(
    surface: &FrickeSurface,
    p: &ProjectivePoint3,
    q: &ProjectivePoint3,
) -> Result<ComposeResult<FrickePoint>> {
    let id = surface.id();
    for pt in [p, q] {
        if !id.contains_projective(pt) {
            return Err(Error::NotOnSurface(pt.to_string()));
        }
    }
    Ok(match secant_third_point(&id, p, q) {
        Err(reason) => ComposeResult::Undefined(reason),
        Ok(r) => match r.to_affine() {
            Some(coords) => ComposeResult::Finite(FrickePoint::unchecked(coords, &surface.sigma)),
            None => ComposeResult::Infinite(r),
        },
    })
}

/// The factored form of the σ = 0 composition,
/// `x = ((an − bm)² + (ak − mc)²) / (3am(b − n)(c − k))` and so on.
/// `None` when a denominator vanishes.
pub fn factored_compose(p: &FrickePoint, q: &FrickePoint) -> Option<[Rational; 3]> {
    let [a, b, c] = &p.coords;
    let [m, n, k] = &q.coords;
    let three = int(3);
    let an_bm = a * n - b * m;
    let ak_mc = a * k - m * c;
    let bk_cn = b * k - c * n;
    let dens =
        [&three * a * m * (b - n) * (c - k), &three * b * n * (a - m) * (c - k), &three * c * k * (a - m) * (b - n)];
    if dens.iter().any(Zero::is_zero) {
        return None;
    }
    let [d0, d1, d2] = dens;
    Some([
        (&an_bm * &an_bm + &ak_mc * &ak_mc) / d0,
        (&bk_cn * &bk_cn + &an_bm * &an_bm) / d1,
        (&ak_mc * &ak_mc + &bk_cn * &bk_cn) / d2,
    ])
}

/// `p ⋆ q = (1,1,1) ∘ (p ∘ q)`. Commutative with identity `(1,1,1)`, but not
/// associative. An intermediate point at infinity is composed projectively.
pub fn star(p: &FrickePoint, q: &FrickePoint) -> Result<ComposeResult<FrickePoint>> {
    if !p.sigma.is_zero() || !q.sigma.is_zero() {
        return Err(Error::SigmaUnsupported);
    }
    let unit = FrickePoint::from_integers([1, 1, 1])?;
    Ok(match compose(p, q) {
        ComposeResult::Finite(r) => compose(&unit, &r),
        ComposeResult::Infinite(r) => compose_projective(&FrickeSurface::markov(), &unit.to_projective(), &r)?,
        undefined => undefined,
    })
}

/// The Viète moves conjugated to `P²` by `φ`:
/// `L[p:q:r] = [pr : p²+q² : qr]`, `R[p:q:r] = [qp : q²+r² : pr]`.
pub fn p2_viete(p: &ProjectivePoint2, generator: Generator) -> Result<ProjectivePoint2> {
    reject_coordinate_points(p)?;
    let [a, b, c] = p.coords();
    let image = match generator {
        Generator::L => [a * c, a * a + b * b, b * c],
        Generator::R => [b * a, b * b + c * c, a * c],
    };
    ProjectivePoint2::from_integers(image).map_err(|_| Error::UndefinedImage)
}

pub(crate) fn reject_coordinate_points(p: &ProjectivePoint2) -> Result<()> {
    let zeros = p.coords().iter().filter(|c| c.is_zero()).count();
    if zeros == 2 {
        return Err(Error::BasePointUndefined(p.to_string()));
    }
    Ok(())
}

/// The three involutions generating a `Z/2 * Z/2 * Z/2` action on `P²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    First,
    Second,
    Third,
}

impl Involution {
    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Self::First),
            2 => Some(Self::Second),
            3 => Some(Self::Third),
            _ => None,
        }
    }
}

/// `[pr : qr : p²+q²]`, `[q²+r² : pq : pr]`, `[pq : p²+r² : rq]`.
pub fn p2_involution(p: &ProjectivePoint2, which: Involution) -> Result<ProjectivePoint2> {
    let [a, b, c] = p.coords();
    let image = match which {
        Involution::First => [a * c, b * c, a * a + b * b],
        Involution::Second => [b * b + c * c, a * b, a * c],
        Involution::Third => [a * b, a * a + c * c, c * b],
    };
    ProjectivePoint2::from_integers(image).map_err(|_| Error::UndefinedImage)
}

/// The composition `∘` transferred to `P²` through `φ`.
pub fn p2_compose(first: &ProjectivePoint2, second: &ProjectivePoint2) -> Result<ProjectivePoint2> {
    let [a, b, c] = first.coords();
    let [m, n, k] = second.coords();
    let s1 = a * a + b * b + c * c;
    let s2 = m * m + n * n + k * k;
    let sq = |v: BigInt| &v * &v;
    let image = [
        (&s1 * k * n - &s2 * b * c) * (sq(b * m - a * n) + sq(c * m - a * k)),
        (&s1 * k * m - &s2 * a * c) * (sq(a * n - b * m) + sq(c * n - b * k)),
        (&s1 * m * n - &s2 * b * a) * (sq(a * k - c * m) + sq(b * k - c * n)),
    ];
    ProjectivePoint2::from_integers(image).map_err(|_| Error::UndefinedImage)
}
