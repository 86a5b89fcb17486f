//! Two evaluation domains for bracket expressions: exact rational functions,
//! and exact rationals at a sample point `(q0, A0, B0)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rational_pow, RationalFn};
use crate::qint::{qlin, LinearWeightForm};

/// Field operations needed by the coefficient formulas and recursions.
pub trait Field: Clone + Send + Sync + fmt::Debug + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl Field for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn one() -> Self {
        RationalFn::one()
    }
    fn from_int(n: i64) -> Self {
        RationalFn::from_int(n)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFn::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFn::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFn::mul(self, o)
    }
    fn neg(&self) -> Self {
        RationalFn::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RationalFn::inv(self)
    }
    fn is_zero(&self) -> bool {
        RationalFn::is_zero(self)
    }
    fn pow(&self, k: u32) -> Self {
        RationalFn::pow(self, k)
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Where bracket values live.
pub trait Domain: Send + Sync {
    type Value: Field;

    fn bracket(&self, f: LinearWeightForm) -> Self::Value;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Symbolic;

impl Domain for Symbolic {
    type Value = RationalFn;

    fn bracket(&self, f: LinearWeightForm) -> RationalFn {
        qlin(f)
    }
}

/// A sample point with `q0 ∉ {0, ±1}`; `A0, B0` are independent of `q0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub q: BigRational,
    pub a: BigRational,
    pub b: BigRational,
    qdiff_inv: BigRational,
}

impl Point {
    pub fn new(q: BigRational, a: BigRational, b: BigRational) -> Result<Self> {
        let one = <BigRational as One>::one();
        let zero = <BigRational as Zero>::zero();
        if [&q, &a, &b].iter().any(|x| **x == zero) || q == one || q == -one.clone() {
            return Err(Error::InvalidPoint);
        }
        let qdiff = &q - q.recip();
        Ok(Point { qdiff_inv: qdiff.recip(), q, a, b })
    }

    pub fn from_ratios(q: (i64, i64), a: (i64, i64), b: (i64, i64)) -> Result<Self> {
        let r = |(n, d): (i64, i64)| {
            if d == 0 {
                Err(Error::InvalidPoint)
            } else {
                Ok(BigRational::new(n.into(), d.into()))
            }
        };
        Point::new(r(q)?, r(a)?, r(b)?)
    }

}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} A={} B={}", self.q, self.a, self.b)
    }
}

impl Domain for Point {
    type Value = BigRational;

    fn bracket(&self, f: LinearWeightForm) -> BigRational {
        let x = rational_pow(&self.q, f.c) * rational_pow(&self.a, f.ca) * rational_pow(&self.b, f.cb);
        let xi = x.recip();
        (x - xi) * &self.qdiff_inv
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_brackets_match_symbolic() {
        let p = Point::from_ratios((2, 3), (5, 7), (11, 4)).unwrap();
        for f in [
            LinearWeightForm::new(1, 3, 4),
            LinearWeightForm::constant(7),
            LinearWeightForm::new(-2, 1, 0),
            LinearWeightForm::default(),
        ] {
            let sym = Symbolic.bracket(f).eval_point(&p.q, &p.a, &p.b).unwrap();
            assert_eq!(p.bracket(f), sym);
        }
    }

    #[test]
    fn invalid_points() {
        assert!(matches!(Point::from_ratios((1, 1), (2, 1), (2, 1)), Err(Error::InvalidPoint)));
        assert!(matches!(Point::from_ratios((-1, 1), (2, 1), (2, 1)), Err(Error::InvalidPoint)));
        assert!(matches!(Point::from_ratios((2, 1), (0, 1), (2, 1)), Err(Error::InvalidPoint)));
        assert!(Point::from_ratios((3, 2), (2, 5), (7, 3)).is_ok());
    }
}
