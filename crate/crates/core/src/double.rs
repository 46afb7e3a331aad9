//! The double Fricke surface `F²: (x + y + z)² = 9xyz`. Its positive integral
//! points are exactly the coordinatewise squares of Markov triples.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fricke::{infinite_third_point, reject_coordinate_points, FrickePoint, Generator, Involution};
use crate::geometry::{
    format_rationals, int, integer_sqrt, secant_third_point, ComposeResult, ProjectivePoint2, ProjectivePoint3,
    Rational, SurfaceId, UndefinedReason,
};
use crate::tree::{self, Limit, TreeSurface};

pub use crate::sections::F2SectionFrame;

/// An affine rational point of `F²`, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Point {
    coords: [Rational; 3],
}

impl F2Point {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        if !SurfaceId::DoubleFricke.contains(&coords) {
            return Err(Error::NotOnSurface(format_rationals(&coords)));
        }
        Ok(Self { coords })
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

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_projective(&self) -> ProjectivePoint3 {
        ProjectivePoint3::from_affine(&self.coords)
    }

    fn unchecked(coords: [Rational; 3]) -> Self {
        let p = Self { coords };
        debug_assert!(SurfaceId::DoubleFricke.contains(&p.coords), "off-surface result {p}");
        p
    }
}

impl fmt::Display for F2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_rationals(&self.coords))
    }
}

/// `first(x,y,z) = (x, 9xy − 2x − 2y − z, y)`, `second(x,y,z) = (y, 9yz − 2y − 2z − x, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NielsenMove {
    First,
    Second,
}

pub fn nielsen(p: &F2Point, generator: NielsenMove) -> F2Point {
    let [x, y, z] = &p.coords;
    let (nine, two) = (int(9), int(2));
    let coords = match generator {
        NielsenMove::First => [x.clone(), &nine * x * y - &two * x - &two * y - z, y.clone()],
        NielsenMove::Second => [y.clone(), &nine * y * z - &two * y - &two * z - x, z.clone()],
    };
    F2Point::unchecked(coords)
}

/// Replaces coordinate `slot` by the other root `9bc − 2b − 2c − a`.
pub fn vieta_move(p: &F2Point, slot: usize) -> F2Point {
    let mut coords = p.coords.clone();
    let b = &p.coords[(slot + 1) % 3];
    let c = &p.coords[(slot + 2) % 3];
    coords[slot] = int(9) * b * c - int(2) * b - int(2) * c - &p.coords[slot];
    F2Point::unchecked(coords)
}

/// `(m, n, k) ↦ (m², n², k²)`; squares of any point of the Fricke surface lie on `F²`.
pub fn square_lift(p: &FrickePoint) -> Result<F2Point> {
    if !p.sigma().is_zero() {
        return Err(Error::SigmaUnsupported);
    }
    Ok(F2Point::unchecked(p.coords().clone().map(|c| &c * &c)))
}

/// Exact square roots of a positive integral point, checked against the Markov equation.
pub fn sqrt_descend(p: &F2Point) -> Result<FrickePoint> {
    let mut roots = Vec::with_capacity(3);
    for c in &p.coords {
        let root = (c.is_integer() && c.is_positive())
            .then(|| integer_sqrt(c.numer()))
            .flatten()
            .ok_or_else(|| Error::NotASquare(c.to_string()))?;
        roots.push(Rational::from_integer(root));
    }
    let coords: [Rational; 3] = roots.try_into().expect("three roots");
    FrickePoint::new(coords)
}

/// The closed form of `∘̄`: with `p = (a,b,c)`, `q = (m,n,k)`, `S = a+b+c`, `T = m+n+k`,
/// `x = (9(ank + bcm) − 2ST) / (9(b − n)(c − k))` and cyclically.
pub fn f2_compose(p: &F2Point, q: &F2Point) -> ComposeResult<F2Point> {
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
        return infinite_third_point(&SurfaceId::DoubleFricke, &p.coords, &q.coords, diffs);
    }
    let [da, db, dc] = &diffs;
    let (nine, two) = (int(9), int(2));
    let st = &two * (a + b + c) * (m + n + k);
    let x = (&nine * (a * n * k + b * c * m) - &st) / (&nine * db * dc);
    let y = (&nine * (b * m * k + a * c * n) - &st) / (&nine * da * dc);
    let z = (&nine * (c * m * n + a * b * k) - &st) / (&nine * da * db);
    ComposeResult::Finite(F2Point::unchecked([x, y, z]))
}

/// Composition on the projective closure, accepting points at infinity.
pub fn f2_compose_projective(p: &ProjectivePoint3, q: &ProjectivePoint3) -> Result<ComposeResult<F2Point>> {
    let id = SurfaceId::DoubleFricke;
    for pt in [p, q] {
        if !id.contains_projective(pt) {
            return Err(Error::NotOnSurface(pt.to_string()));
        }
    }
    Ok(match secant_third_point(&id, p, q) {
        Err(reason) => ComposeResult::Undefined(reason),
        Ok(r) => match r.to_affine() {
            Some(coords) => ComposeResult::Finite(F2Point::unchecked(coords)),
            None => ComposeResult::Infinite(r),
        },
    })
}

/// `(P, Q) ↦ (S²/9Q², S²/9P², S²/9P²Q²)` with `S = P² + Q² + 1`.
pub fn f2_param_affine(big_p: &Rational, big_q: &Rational) -> Result<F2Point> {
    if big_p.is_zero() || big_q.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let s = big_p * big_p + big_q * big_q + Rational::one();
    let s2 = &s * &s;
    let nine = int(9);
    let (p2, q2) = (big_p * big_p, big_q * big_q);
    Ok(F2Point::unchecked([&s2 / (&nine * &q2), &s2 / (&nine * &p2), &s2 / (&nine * &p2 * &q2)]))
}

/// The pencil of lines through the singular point:
/// `[p:q:r] ↦ [pT² : qT² : rT² : 9pqr]`, `T = p + q + r`.
pub fn f2_phi(p: &ProjectivePoint2) -> Result<ProjectivePoint3> {
    let [a, b, c] = p.coords();
    let t = a + b + c;
    let t2 = &t * &t;
    let image = [a * &t2, b * &t2, c * &t2, BigInt::from(9) * a * b * c];
    // the lines (s, −s, 0) of F² through the origin collapse to the zero vector
    ProjectivePoint3::from_integers(image).map_err(|_| Error::BasePointUndefined(p.to_string()))
}

/// Inverse of [`f2_phi`]: the projection `[x:y:z:s] ↦ [x:y:z]`.
pub fn f2_psi(p: &ProjectivePoint3) -> Result<ProjectivePoint2> {
    if !SurfaceId::DoubleFricke.contains_projective(p) {
        return Err(Error::NotOnSurface(p.to_string()));
    }
    let [x, y, z, _] = p.coords().clone();
    ProjectivePoint2::from_integers([x, y, z]).map_err(|_| Error::SingularPoint)
}

/// The Nielsen moves conjugated to `P²`:
/// `L[p:q:r] = [pr : (p+q)² : qr]`, `R[p:q:r] = [qp : (q+r)² : pr]`.
pub fn f2_p2_viete(p: &ProjectivePoint2, generator: Generator) -> Result<ProjectivePoint2> {
    reject_coordinate_points(p)?;
    let [a, b, c] = p.coords();
    let sq = |v: BigInt| &v * &v;
    let image = match generator {
        Generator::L => [a * c, sq(a + b), b * c],
        Generator::R => [b * a, sq(b + c), a * c],
    };
    ProjectivePoint2::from_integers(image).map_err(|_| Error::UndefinedImage)
}

/// `[pr : qr : (p+q)²]`, `[(q+r)² : pq : pr]`, `[pq : (p+r)² : rq]`.
pub fn f2_p2_involution(p: &ProjectivePoint2, which: Involution) -> Result<ProjectivePoint2> {
    let [a, b, c] = p.coords();
    let sq = |v: BigInt| &v * &v;
    let image = match which {
        Involution::First => [a * c, b * c, sq(a + b)],
        Involution::Second => [sq(b + c), a * b, a * c],
        Involution::Third => [a * b, sq(a + c), c * b],
    };
    ProjectivePoint2::from_integers(image).map_err(|_| Error::UndefinedImage)
}

/// The composition `∘̄` transferred to `P²` through [`f2_phi`]. With
/// `T₁ = (a+b+c)²`, `T₂ = (m+n+k)²`, the first coordinate is
/// `(T₁kn − T₂bc)(a(n+k) − m(b+c))²` and the others follow cyclically.
pub fn f2_p2_compose(first: &ProjectivePoint2, second: &ProjectivePoint2) -> Result<ProjectivePoint2> {
    let [a, b, c] = first.coords();
    let [m, n, k] = second.coords();
    let sq = |v: BigInt| &v * &v;
    let t1 = sq(a + b + c);
    let t2 = sq(m + n + k);
    let image = [
        (&t1 * k * n - &t2 * b * c) * sq(a * (n + k) - m * (b + c)),
        (&t1 * k * m - &t2 * a * c) * sq(n * (a + c) - b * (m + k)),
        (&t1 * m * n - &t2 * a * b) * sq(k * (a + b) - c * (m + n)),
    ];
    ProjectivePoint2::from_integers(image).map_err(|_| Error::UndefinedImage)
}

/// Integral points reached from `(−n, 0, n)` by at most `depth` Viète moves,
/// as sorted triples in ascending order.
pub fn negative_tree(n: u64, depth: u32) -> Vec<[BigInt; 3]> {
    let n = BigInt::from(n);
    let root = [-n.clone(), BigInt::zero(), n];
    let nodes =
        tree::generate(TreeSurface::DoubleFricke, root, Limit::Depth(depth)).expect("(-n, 0, n) lies on the surface");
    let mut out: Vec<_> = nodes.into_iter().map(|node| node.triple).collect();
    out.sort();
    out
}
