//! Exact Laurent polynomials and rational functions in `q, A, B`.
//!
//! `A` and `B` stand for `q^a` and `q^b` where `(a, b)` is a symbolic weight,
//! so a bracket `[c_a*a + c_b*b + c]` becomes a ratio of two binomials.

mod poly;
mod ratfn;

pub use poly::{LaurentPoly, Monomial};
pub use ratfn::{Factor, RationalFn};

pub(crate) use poly::rational_pow;

use num_rational::BigRational;

use crate::error::Result;

pub fn poly_add(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p.add(r)
}

pub fn poly_neg(p: &LaurentPoly) -> LaurentPoly {
    p.neg()
}

pub fn poly_mul(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p.mul(r)
}

pub fn rat_add(x: &RationalFn, y: &RationalFn) -> RationalFn {
    x.add(y)
}

pub fn rat_sub(x: &RationalFn, y: &RationalFn) -> RationalFn {
    x.sub(y)
}

pub fn rat_mul(x: &RationalFn, y: &RationalFn) -> RationalFn {
    x.mul(y)
}

pub fn rat_inv(x: &RationalFn) -> Result<RationalFn> {
    x.inv()
}

pub fn rat_eq(x: &RationalFn, y: &RationalFn) -> bool {
    x.rat_eq(y)
}

pub fn eval_point(
    x: &RationalFn,
    q0: &BigRational,
    a0: &BigRational,
    b0: &BigRational,
) -> Result<BigRational> {
    x.eval_point(q0, a0, b0)
}

pub fn specialize_weight(x: &RationalFn, a: i64, b: i64) -> Result<RationalFn> {
    x.specialize_weight(a, b)
}
