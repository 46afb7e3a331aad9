use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{integer_sqrt, Rational};
use crate::error::{Error, Result};

/// The exact real number `(a + b√d)/c` with `d > 1` squarefree, `b ≠ 0`,
/// `c > 0` and `gcd(a, b, c) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: BigInt,
    b: BigInt,
    d: BigInt,
    c: BigInt,
    /// Primitive integer coefficients `[p2, p1, p0]` of the quadratic the value solves.
    minimal_polynomial: [BigInt; 3],
}

/// A root of a rational quadratic: rational when the discriminant is a square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuadraticRoot {
    Rational(Rational),
    Irrational(QuadraticIrrational),
}

impl QuadraticRoot {
    /// Builds `(a + b√d)/c`, pulling square factors out of `d`.
    pub fn new(a: BigInt, b: BigInt, d: BigInt, c: BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_negative() {
            return Err(Error::ComplexRoots);
        }
        let (square, free) = squarefree_decompose(&d);
        let b = b * square;
        if b.is_zero() || free.is_one() || free.is_zero() {
            let rational_part = if free.is_one() { a + b } else { a };
            return Ok(Self::Rational(Rational::new(rational_part, c)));
        }
        let (mut a, mut b, mut c) = (a, b, c);
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        let (a, b, c) = (a / &g, b / &g, c / &g);
        // (c v - a)^2 = b^2 d
        let p2 = &c * &c;
        let p1 = BigInt::from(-2) * &a * &c;
        let p0 = &a * &a - &b * &b * &free;
        let h = p2.gcd(&p1).gcd(&p0);
        Ok(Self::Irrational(QuadraticIrrational { minimal_polynomial: [p2 / &h, p1 / &h, p0 / &h], a, b, d: free, c }))
    }

    /// Evaluates a polynomial (coefficients highest degree first) at this
    /// value, returning `(r, s)` with result `r + s√d` (`s = 0` for rationals).
    pub fn evaluate(&self, coefficients: &[Rational]) -> (Rational, Rational) {
        match self {
            Self::Rational(v) => {
                let r = coefficients.iter().fold(Rational::zero(), |acc, k| acc * v + k);
                (r, Rational::zero())
            }
            Self::Irrational(q) => q.evaluate(coefficients),
        }
    }
}

impl QuadraticIrrational {
    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn minimal_polynomial(&self) -> &[BigInt; 3] {
        &self.minimal_polynomial
    }

    pub fn conjugate(&self) -> Self {
        Self { b: -self.b.clone(), ..self.clone() }
    }

    pub fn evaluate(&self, coefficients: &[Rational]) -> (Rational, Rational) {
        let vr = Rational::new(self.a.clone(), self.c.clone());
        let vs = Rational::new(self.b.clone(), self.c.clone());
        let d = Rational::from_integer(self.d.clone());
        let mut r = Rational::zero();
        let mut s = Rational::zero();
        for k in coefficients {
            let nr = &r * &vr + &s * &vs * &d + k;
            let ns = &r * &vs + &s * &vr;
            r = nr;
            s = ns;
        }
        (r, s)
    }
}

/// Both roots of `p2 t^2 + p1 t + p0`, the `+√` root first. The polynomial
/// is scaled so that `p2 > 0`, which makes the first root the larger one.
pub fn roots_of_quadratic(coefficients: [&Rational; 3]) -> Result<[QuadraticRoot; 2]> {
    if coefficients[0].is_zero() {
        return Err(Error::NotQuadratic);
    }
    let lcm = coefficients.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let sign = if coefficients[0].is_negative() { -1 } else { 1 };
    let [p2, p1, p0]: [BigInt; 3] = coefficients.map(|c| c.numer() * (&lcm / c.denom()) * sign);
    let disc = &p1 * &p1 - BigInt::from(4) * &p2 * &p0;
    if disc.is_negative() {
        return Err(Error::ComplexRoots);
    }
    let two_a = BigInt::from(2) * &p2;
    Ok([
        QuadraticRoot::new(-p1.clone(), BigInt::one(), disc.clone(), two_a.clone())?,
        QuadraticRoot::new(-p1, -BigInt::one(), disc, two_a)?,
    ])
}

/// Writes `n = s^2 * d` with `d` squarefree. Trial division up to the cube root
/// of the unfactored part; the cofactor left over has at most two prime factors.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.abs();
    if rest.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p * &p <= rest {
        let mut exponent = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            exponent += 1;
        }
        for _ in 0..exponent / 2 {
            square *= &p;
        }
        if exponent % 2 == 1 {
            free *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    match integer_sqrt(&rest) {
        Some(r) if !rest.is_one() => square *= r,
        _ => free *= rest,
    }
    (square, free)
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let mag = self.b.abs();
        write!(f, "({}{}", self.a, sign)?;
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        write!(f, "√{})", self.d)?;
        if !self.c.is_one() {
            write!(f, "/{}", self.c)?;
        }
        Ok(())
    }
}

impl fmt::Display for QuadraticRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(r) => write!(f, "{r}"),
            Self::Irrational(q) => write!(f, "{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{frac, int};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(&bi(32)), (bi(4), bi(2)));
        assert_eq!(squarefree_decompose(&bi(45)), (bi(3), bi(5)));
        assert_eq!(squarefree_decompose(&bi(49)), (bi(7), bi(1)));
        assert_eq!(squarefree_decompose(&bi(221)), (bi(1), bi(221)));
        assert_eq!(squarefree_decompose(&bi(1)), (bi(1), bi(1)));
        // 2^3 * 1009^2 * 1013
        let big = bi(8) * bi(1009) * bi(1009) * bi(1013);
        assert_eq!(squarefree_decompose(&big), (bi(2 * 1009), bi(2 * 1013)));
    }

    #[test]
    fn golden_ratio_roots() {
        // t^2 - 3t + 1
        let roots = roots_of_quadratic([&int(1), &int(-3), &int(1)]).unwrap();
        assert_eq!(roots[0].to_string(), "(3+√5)/2");
        assert_eq!(roots[1].to_string(), "(3-√5)/2");
        for r in &roots {
            let (x, y) = r.evaluate(&[int(1), int(-3), int(1)]);
            assert!(x.is_zero() && y.is_zero());
        }
    }

    #[test]
    fn square_factor_absorbed() {
        // t^2 - 6t + 1 -> 3 ± 2√2
        let roots = roots_of_quadratic([&int(1), &int(-6), &int(1)]).unwrap();
        let QuadraticRoot::Irrational(q) = &roots[0] else { panic!() };
        assert_eq!((q.a(), q.b(), q.d(), q.c()), (&bi(3), &bi(2), &bi(2), &bi(1)));
        assert_eq!(q.to_string(), "(3+2√2)");
        assert_eq!(q.minimal_polynomial(), &[bi(1), bi(-6), bi(1)]);
        assert_eq!(&roots[1], &QuadraticRoot::Irrational(q.conjugate()));
    }

    #[test]
    fn rational_and_complex_cases() {
        // (t - 1/2)(t - 2) = t^2 - 5/2 t + 1
        let roots = roots_of_quadratic([&int(1), &frac(-5, 2), &int(1)]).unwrap();
        assert_eq!(roots[0], QuadraticRoot::Rational(int(2)));
        assert_eq!(roots[1], QuadraticRoot::Rational(frac(1, 2)));
        assert_eq!(roots_of_quadratic([&int(1), &int(0), &int(1)]), Err(Error::ComplexRoots));
        assert_eq!(roots_of_quadratic([&int(0), &int(1), &int(1)]), Err(Error::NotQuadratic));
    }

    #[test]
    fn minimal_polynomial_annihilates() {
        for (p1, p0) in [(-7i64, 1i64), (3, -5), (-11, 2), (0, -12)] {
            let poly = [int(2), int(p1), int(p0)];
            for root in roots_of_quadratic([&poly[0], &poly[1], &poly[2]]).unwrap() {
                if let QuadraticRoot::Irrational(q) = &root {
                    let mp = q.minimal_polynomial().clone().map(Rational::from_integer);
                    let (x, y) = q.evaluate(&mp);
                    assert!(x.is_zero() && y.is_zero(), "{q}");
                }
            }
        }
    }
}
