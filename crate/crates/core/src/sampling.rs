//! Seeded generators of rational points for randomized checks.

use num_bigint::BigInt;
use rand::Rng;

use crate::double::{f2_param_affine, F2Point};
use crate::fricke::{param_affine, FrickePoint};
use crate::geometry::{frac, ProjectivePoint2, Rational, Slope};
use crate::sections::{QuadricSection, SectionPoint, SolveZ};

/// `n/d` with `0 < |n| ≤ height`, `1 ≤ d ≤ height`.
pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, height: i64) -> Rational {
    let height = height.max(1);
    let n = rng.gen_range(1..=height) * if rng.gen_bool(0.5) { 1 } else { -1 };
    frac(n, rng.gen_range(1..=height))
}

pub fn rational<R: Rng + ?Sized>(rng: &mut R, height: i64) -> Rational {
    let height = height.max(1);
    frac(rng.gen_range(-height..=height), rng.gen_range(1..=height))
}

/// A point of the Markov surface through the affine chart.
pub fn fricke_point<R: Rng + ?Sized>(rng: &mut R, height: i64) -> FrickePoint {
    let (p, q) = (nonzero_rational(rng, height), nonzero_rational(rng, height));
    param_affine(&p, &q).expect("nonzero chart arguments")
}

pub fn f2_point<R: Rng + ?Sized>(rng: &mut R, height: i64) -> F2Point {
    let (p, q) = (nonzero_rational(rng, height), nonzero_rational(rng, height));
    f2_param_affine(&p, &q).expect("nonzero chart arguments")
}

/// Two distinct points drawn by `draw`.
pub fn distinct_pair<T: PartialEq, R: Rng + ?Sized>(rng: &mut R, mut draw: impl FnMut(&mut R) -> T) -> (T, T) {
    let a = draw(rng);
    loop {
        let b = draw(rng);
        if b != a {
            return (a, b);
        }
    }
}

pub fn p2_point<R: Rng + ?Sized>(rng: &mut R, height: i64) -> ProjectivePoint2 {
    loop {
        let coords: [BigInt; 3] = std::array::from_fn(|_| BigInt::from(rng.gen_range(-height..=height)));
        if let Ok(p) = ProjectivePoint2::from_integers(coords) {
            return p;
        }
    }
}

/// A rational point of the section: a chord from `O` with random slope, a
/// small multiple of such a point, or a rational hit of `solve_z`.
pub fn section_point<S: QuadricSection + ?Sized, R: Rng + ?Sized>(frame: &S, rng: &mut R, height: i64) -> SectionPoint {
    loop {
        let candidate = match rng.gen_range(0..3) {
            0 => frame.point_from_slope(&Slope::Finite(rational(rng, height))).ok(),
            1 => frame
                .point_from_slope(&Slope::Finite(rational(rng, height)))
                .and_then(|g| frame.multiple(&g, rng.gen_range(-3..=3)))
                .ok(),
            _ => match frame.solve_z(&rational(rng, height)) {
                SolveZ::Points(points) if !points.is_empty() => {
                    let i = rng.gen_range(0..points.len());
                    Some(points[i].clone())
                }
                _ => None,
            },
        };
        if let Some(p) = candidate {
            debug_assert!(frame.contains(&p));
            return p;
        }
    }
}
