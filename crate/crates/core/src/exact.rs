//! Exact rational geometry: scalars, points, canonical lines and the three
//! predicates the rest of the crate is built on.
//!
//! Nothing here rounds. Every combinatorial answer in the crate is decided by
//! [`side`], [`intersect`] and [`cmp_angle`] on [`Rat`] values.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rat = BigRational;

/// Builds `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer `p` as a rational.
pub fn int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Rat::zero(), Rat::zero())
    }

    pub fn translated(&self, tx: &Rat, ty: &Rat) -> Self {
        Point::new(&self.x + tx, &self.y + ty)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The locus `a·x + b·y = c`, scaled to coprime integers with `a > 0`.
///
/// Horizontal lines (`a = 0`) cannot be represented: every line has a
/// direction angle strictly inside `(0, π)`. The conventional orientation is
/// the direction `(−b, a)`, i.e. increasing `y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    /// Canonicalizes arbitrary rational coefficients.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateLine);
        }
        if a.is_zero() {
            return Err(Error::HorizontalLine(format!("{}y = {}", b, c)));
        }
        let den = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |r: &Rat| r.numer() * (&den / r.denom());
        let (mut a, mut b, mut c) = (scale(&a), scale(&b), scale(&c));
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        if a.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Line::new(int(a), int(b), int(c))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Direction of increasing `y`: `(−b, a)`.
    pub fn direction(&self) -> (BigInt, BigInt) {
        (-&self.b, self.a.clone())
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// `a·x + b·y − c` at `p`.
    pub fn eval(&self, p: &Point) -> Rat {
        Rat::from_integer(self.a.clone()) * &p.x + Rat::from_integer(self.b.clone()) * &p.y
            - Rat::from_integer(self.c.clone())
    }

    /// Position of `p` along the conventional orientation (dot product with the
    /// direction vector). Only meaningful for comparing points on this line.
    pub fn param(&self, p: &Point) -> Rat {
        let (dx, dy) = self.direction();
        Rat::from_integer(dx) * &p.x + Rat::from_integer(dy) * &p.y
    }

    pub fn x_intercept(&self) -> Rat {
        Rat::new(self.c.clone(), self.a.clone())
    }

    /// The image of this line under the translation `(x, y) ↦ (x + tx, y + ty)`.
    pub fn translated(&self, tx: &Rat, ty: &Rat) -> Self {
        let a = Rat::from_integer(self.a.clone());
        let b = Rat::from_integer(self.b.clone());
        let c = Rat::from_integer(self.c.clone()) + &a * tx + &b * ty;
        Line::new(a, b, c).expect("translation preserves direction")
    }

    /// Same direction, different offset `c`.
    pub fn with_offset(&self, c: Rat) -> Self {
        Line::new(
            Rat::from_integer(self.a.clone()),
            Rat::from_integer(self.b.clone()),
            c,
        )
        .expect("direction unchanged")
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coef = |k: &BigInt| if k.is_one() { String::new() } else { k.to_string() };
        write!(f, "{}x", coef(&self.a))?;
        if !self.b.is_zero() {
            let op = if self.b.is_negative() { '-' } else { '+' };
            write!(f, " {op} {}y", coef(&self.b.abs()))?;
        }
        write!(f, " = {}", self.c)
    }
}

/// Sign of `a·x + b·y − c`; `Equal` means `p` lies on `line`.
pub fn side(line: &Line, p: &Point) -> Ordering {
    line.eval(p).cmp(&Rat::zero())
}

/// The unique common point of two non-parallel lines.
pub fn intersect(l1: &Line, l2: &Line) -> Result<Point> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(Error::ParallelLines(format!("{l1} and {l2}")));
    }
    let x = Rat::new(&l1.c * &l2.b - &l2.c * &l1.b, det.clone());
    let y = Rat::new(&l1.a * &l2.c - &l2.a * &l1.c, det);
    Ok(Point::new(x, y))
}

/// Compares direction angles in `(0, π)`. `Equal` iff the lines are parallel.
pub fn cmp_angle(l1: &Line, l2: &Line) -> Ordering {
    // d1 × d2 with d = (−b, a); both y-components are positive.
    let cross = &l1.a * &l2.b - &l2.a * &l1.b;
    BigInt::zero().cmp(&cross)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(a: i64, b: i64, c: i64) -> Line {
        Line::from_ints(a, b, c).unwrap()
    }

    fn p(x: i64, y: i64) -> Point {
        Point::new(int(x), int(y))
    }

    #[test]
    fn side_examples() {
        let line = l(1, 1, 2);
        assert_eq!(side(&line, &p(0, 0)), Ordering::Less);
        assert_eq!(side(&line, &p(2, 2)), Ordering::Greater);
        assert_eq!(side(&line, &p(1, 1)), Ordering::Equal);
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(intersect(&l(1, -1, 0), &l(1, 1, 2)).unwrap(), p(1, 1));
        assert_eq!(intersect(&l(1, 0, 1), &l(1, 1, 3)).unwrap(), p(1, 2));
        let err = intersect(&l(1, -1, 0), &l(2, -2, 5)).unwrap_err();
        assert_eq!(err.code(), "parallel-lines");
    }

    #[test]
    fn cmp_angle_examples() {
        assert_eq!(cmp_angle(&l(1, -1, 0), &l(1, 0, 1)), Ordering::Less);
        assert_eq!(cmp_angle(&l(1, 0, 1), &l(1, 1, 2)), Ordering::Less);
        assert_eq!(cmp_angle(&l(1, -1, 0), &l(3, -3, 7)), Ordering::Equal);
        assert_eq!(cmp_angle(&l(1, 1, 2), &l(1, -1, 0)), Ordering::Greater);
    }

    #[test]
    fn canonical_scaling() {
        let a = Line::new(rat(-1, 2), rat(1, 3), rat(-5, 6)).unwrap();
        assert_eq!(a, l(3, -2, 5));
        assert_eq!(l(2, -2, 4), l(1, -1, 2));
        assert_eq!(Line::from_ints(0, 1, 3).unwrap_err().code(), "horizontal-line");
        assert_eq!(Line::from_ints(0, 0, 3).unwrap_err().code(), "degenerate-line");
    }

    #[test]
    fn display() {
        assert_eq!(l(1, -1, 0).to_string(), "x - y = 0");
        assert_eq!(l(3, 2, -5).to_string(), "3x + 2y = -5");
        assert_eq!(l(2, 0, 7).to_string(), "2x = 7");
    }

    fn small() -> impl Strategy<Value = i64> {
        -20i64..=20
    }

    proptest! {
        #[test]
        fn side_is_translation_covariant(
            a in 1i64..10, b in small(), c in small(),
            x in small(), y in small(), tx in small(), ty in small(), td in 1i64..5,
        ) {
            let line = l(a, b, c);
            let pt = p(x, y);
            let (tx, ty) = (rat(tx, td), rat(ty, td));
            prop_assert_eq!(side(&line, &pt), side(&line.translated(&tx, &ty), &pt.translated(&tx, &ty)));
        }

        #[test]
        fn intersection_is_on_both_lines(
            a1 in 1i64..10, b1 in small(), c1 in small(),
            a2 in 1i64..10, b2 in small(), c2 in small(),
        ) {
            let (l1, l2) = (l(a1, b1, c1), l(a2, b2, c2));
            prop_assume!(cmp_angle(&l1, &l2) != Ordering::Equal);
            let v = intersect(&l1, &l2).unwrap();
            prop_assert_eq!(side(&l1, &v), Ordering::Equal);
            prop_assert_eq!(side(&l2, &v), Ordering::Equal);
        }

        #[test]
        fn cmp_angle_is_antisymmetric(
            a1 in 1i64..10, b1 in small(), a2 in 1i64..10, b2 in small(),
        ) {
            let (l1, l2) = (l(a1, b1, 0), l(a2, b2, 0));
            prop_assert_eq!(cmp_angle(&l1, &l2), cmp_angle(&l2, &l1).reverse());
        }
    }
}
