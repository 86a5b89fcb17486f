//! Rational functions kept as factored products without any polynomial GCD.
//!
//! A value is `unit_n * prod(num factors) / (unit_d * prod(den factors))`
//! where each unit is a single term `c * q^i A^j B^k` and each factor is
//! either a binomial `X - X^{-1}` (the numerator of a shifted bracket) or an
//! opaque polynomial normalised up to units. Identical factors cancel by
//! structural equality; nothing else is ever divided out.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// An irreducible-by-convention factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// `X - X^{-1}` with `X > 1` in monomial order.
    Binomial(Monomial),
    /// A polynomial with positive lowest coefficient, lowest monomial `1`,
    /// and unit content; never a single term and never a binomial.
    Poly(Arc<LaurentPoly>),
}

impl Factor {
    pub fn expand(&self) -> LaurentPoly {
        match self {
            Factor::Binomial(x) => LaurentPoly::binomial(*x),
            Factor::Poly(p) => (**p).clone(),
        }
    }

    fn eval(&self, q: &BigRational, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            Factor::Binomial(x) => {
                let v = x.eval(q, a, b);
                let inv = v.recip();
                v - inv
            }
            Factor::Poly(p) => p.eval(q, a, b),
        }
    }
}

/// Single nonzero term `c * m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Unit {
    coeff: BigInt,
    mono: Monomial,
}

impl Unit {
    fn one() -> Self {
        Unit { coeff: BigInt::one(), mono: Monomial::ONE }
    }

    fn mul(&self, o: &Unit) -> Unit {
        Unit { coeff: &self.coeff * &o.coeff, mono: self.mono.mul(&o.mono) }
    }

    fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::term(self.mono, self.coeff.clone())
    }
}

type Factors = BTreeMap<Factor, u32>;
type FactorList = Vec<(Factor, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Product {
    unit: Unit,
    factors: Factors,
}

impl Product {
    fn one() -> Self {
        Product { unit: Unit::one(), factors: Factors::new() }
    }

    fn from_unit(unit: Unit) -> Self {
        Product { unit, factors: Factors::new() }
    }

    fn expand(&self) -> LaurentPoly {
        expand_factors(&self.factors).mul_term(&self.unit.mono, &self.unit.coeff)
    }

    fn mul(&self, o: &Product) -> Product {
        let mut factors = self.factors.clone();
        for (f, k) in &o.factors {
            *factors.entry(f.clone()).or_insert(0) += k;
        }
        Product { unit: self.unit.mul(&o.unit), factors }
    }
}

fn expand_factors(fs: &Factors) -> LaurentPoly {
    // Multiply small factors first to keep intermediate products compact.
    let mut items: Vec<LaurentPoly> = Vec::new();
    for (f, k) in fs {
        let p = f.expand();
        for _ in 0..*k {
            items.push(p.clone());
        }
    }
    items.sort_by_key(|p| p.len());
    let mut acc = LaurentPoly::one();
    for p in items {
        acc = acc.mul(&p);
    }
    acc
}

fn min_factors(x: &Factors, y: &Factors) -> Factors {
    x.iter()
        .filter_map(|(f, k)| y.get(f).map(|l| (f.clone(), (*k).min(*l))))
        .collect()
}

fn max_factors(x: &Factors, y: &Factors) -> Factors {
    let mut out = x.clone();
    for (f, k) in y {
        let e = out.entry(f.clone()).or_insert(0);
        *e = (*e).max(*k);
    }
    out
}

fn sub_factors(x: &Factors, y: &Factors) -> Factors {
    let mut out = Factors::new();
    for (f, k) in x {
        let r = k - y.get(f).copied().unwrap_or(0);
        if r > 0 {
            out.insert(f.clone(), r);
        }
    }
    out
}

/// Split a nonzero polynomial into `unit * factor`, or just a unit.
fn factorize(p: &LaurentPoly) -> (Unit, Option<Factor>) {
    debug_assert!(!p.is_zero());
    if let Some((m, c)) = p.as_term() {
        return (Unit { coeff: c.clone(), mono: *m }, None);
    }
    let terms = p.terms();
    if terms.len() == 2 {
        let (lo, clo) = (&terms[0].0, &terms[0].1);
        let (hi, chi) = (&terms[1].0, &terms[1].1);
        if clo == &-chi {
            // chi*(hi - lo) = chi*u*(X - X^-1) with X^2 = hi/lo, u = lo*X.
            if let Some(x) = hi.mul(&lo.inv()).sqrt() {
                let u = lo.mul(&x);
                return (Unit { coeff: chi.clone(), mono: u }, Some(Factor::Binomial(x)));
            }
        }
    }
    let (m0, c0) = p.lowest_term().expect("nonzero");
    let content = p.content();
    let coeff = if c0.is_negative() { -content } else { content };
    let shift = m0.inv();
    let normalized: LaurentPoly = LaurentPoly::from_terms(
        terms.iter().map(|(m, c)| (m.mul(&shift), c / &coeff)),
    );
    (Unit { coeff, mono: *m0 }, Some(Factor::Poly(Arc::new(normalized))))
}

/// Element of the field `Q(q, A, B)` represented as a numerator/denominator pair.
///
/// Equality ([`RationalFn::rat_eq`]) is cross-multiplication; values are
/// never reduced by a GCD.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: Product,
    den: Product,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            num: Product { unit: Unit { coeff: BigInt::zero(), mono: Monomial::ONE }, factors: Factors::new() },
            den: Product::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn { num: Product::one(), den: Product::one() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_poly(&LaurentPoly::constant(n))
    }

    pub fn from_poly(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (unit, f) = factorize(p);
        let mut num = Product::from_unit(unit);
        if let Some(f) = f {
            num.factors.insert(f, 1);
        }
        RationalFn { num, den: Product::one() }
    }

    /// `num / den`; fails if `den` is the zero polynomial.
    pub fn new(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_poly(num).mul(&Self::from_poly(den).inv()?))
    }

    /// `(X - X^{-1}) / (Y - Y^{-1})`, the shape of every shifted bracket.
    pub fn binomial_ratio(x: Monomial, y: Monomial) -> Result<Self> {
        Self::new(&LaurentPoly::binomial(x), &LaurentPoly::binomial(y))
    }

    pub fn is_zero(&self) -> bool {
        self.num.unit.coeff.is_zero()
    }

    /// Expanded numerator polynomial.
    pub fn num(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        self.num.expand()
    }

    /// Expanded denominator polynomial (never zero).
    pub fn den(&self) -> LaurentPoly {
        self.den.expand()
    }

    /// Number of factor occurrences in the numerator and denominator.
    pub fn factor_counts(&self) -> (u32, u32) {
        (self.num.factors.values().sum(), self.den.factors.values().sum())
    }

    /// Numerator and denominator factor lists, expanded to polynomials.
    pub fn factor_lists(&self) -> (FactorList, FactorList) {
        (
            self.num.factors.iter().map(|(f, k)| (f.clone(), *k)).collect(),
            self.den.factors.iter().map(|(f, k)| (f.clone(), *k)).collect(),
        )
    }

    /// If the value is a constant integer (after cancellation), return it.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if !self.num.factors.is_empty() || !self.den.factors.is_empty() {
            return None;
        }
        if self.num.unit.mono != self.den.unit.mono {
            return None;
        }
        let (q, r) = self.num.unit.coeff.div_rem(&self.den.unit.coeff);
        r.is_zero().then_some(q)
    }

    fn build(num: Product, den: Product) -> Self {
        if num.unit.coeff.is_zero() {
            return Self::zero();
        }
        let common = min_factors(&num.factors, &den.factors);
        let mut out = RationalFn {
            num: Product { unit: num.unit, factors: sub_factors(&num.factors, &common) },
            den: Product { unit: den.unit, factors: sub_factors(&den.factors, &common) },
        };
        out.normalize_units();
        out
    }

    /// Move the denominator unit into the numerator where it divides exactly,
    /// keeping the denominator unit's coefficient positive.
    fn normalize_units(&mut self) {
        let dm = self.den.unit.mono;
        self.num.unit.mono = self.num.unit.mono.mul(&dm.inv());
        self.den.unit.mono = Monomial::ONE;
        if self.den.unit.coeff.is_negative() {
            self.den.unit.coeff = -self.den.unit.coeff.clone();
            self.num.unit.coeff = -self.num.unit.coeff.clone();
        }
        let g = self.num.unit.coeff.gcd(&self.den.unit.coeff);
        if !g.is_one() && !g.is_zero() {
            self.num.unit.coeff = &self.num.unit.coeff / &g;
            self.den.unit.coeff = &self.den.unit.coeff / &g;
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.num.unit.coeff = -out.num.unit.coeff;
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::build(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::build(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let g = min_factors(&self.num.factors, &o.num.factors);
        let l = max_factors(&self.den.factors, &o.den.factors);
        let lhs = expand_factors(&sub_factors(&self.num.factors, &g))
            .mul(&expand_factors(&sub_factors(&l, &self.den.factors)))
            .mul_term(&self.num.unit.mono.mul(&o.den.unit.mono), &(&self.num.unit.coeff * &o.den.unit.coeff));
        let rhs = expand_factors(&sub_factors(&o.num.factors, &g))
            .mul(&expand_factors(&sub_factors(&l, &o.den.factors)))
            .mul_term(&o.num.unit.mono.mul(&self.den.unit.mono), &(&o.num.unit.coeff * &self.den.unit.coeff));
        let sum = lhs.add(&rhs);
        if sum.is_zero() {
            return Self::zero();
        }
        let (unit, f) = factorize(&sum);
        let mut num = Product { unit, factors: g };
        if let Some(f) = f {
            *num.factors.entry(f).or_insert(0) += 1;
        }
        let den = Product { unit: self.den.unit.mul(&o.den.unit), factors: l };
        Self::build(num, den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Cross-multiplication equality: `num(x)*den(y) == num(y)*den(x)`.
    ///
    /// Shared factors on both sides are struck out before expansion; factors
    /// are nonzero so this does not change the truth value.
    pub fn rat_eq(&self, o: &Self) -> bool {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => return true,
            (true, false) | (false, true) => return false,
            _ => {}
        }
        let lhs = self.num.mul(&o.den);
        let rhs = o.num.mul(&self.den);
        let common = min_factors(&lhs.factors, &rhs.factors);
        let lhs = Product { unit: lhs.unit, factors: sub_factors(&lhs.factors, &common) };
        let rhs = Product { unit: rhs.unit, factors: sub_factors(&rhs.factors, &common) };
        lhs.expand() == rhs.expand()
    }

    /// Exact value at `(q, A, B)`; all coordinates must be nonzero.
    pub fn eval_point(&self, q: &BigRational, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        if q.is_zero() || a.is_zero() || b.is_zero() {
            return Err(Error::InvalidPoint);
        }
        let eval_prod = |p: &Product| -> BigRational {
            let mut acc = p.unit.to_poly().eval(q, a, b);
            for (f, k) in &p.factors {
                let v = f.eval(q, a, b);
                for _ in 0..*k {
                    acc *= v.clone();
                }
            }
            acc
        };
        let den = eval_prod(&self.den);
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        Ok(eval_prod(&self.num) / den)
    }

    /// Fold `A -> q^a`, `B -> q^b`, giving a function of `q` alone.
    ///
    /// Fails with [`Error::DivisionByZero`] when a denominator factor
    /// specializes to zero.
    pub fn specialize_weight(&self, a: i64, b: i64) -> Result<Self> {
        let spec_prod = |p: &Product| -> Result<Option<RationalFn>> {
            let unit = LaurentPoly::term(p.unit.mono.specialize(a, b)?, p.unit.coeff.clone());
            let mut acc = RationalFn::from_poly(&unit);
            for (f, k) in &p.factors {
                let sp = f.expand().specialize(a, b)?;
                if sp.is_zero() {
                    return Ok(None);
                }
                acc = acc.mul(&RationalFn::from_poly(&sp).pow(*k));
            }
            Ok(Some(acc))
        };
        let den = spec_prod(&self.den)?.ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        match spec_prod(&self.num)? {
            None => Ok(Self::zero()),
            Some(num) => num.div(&den),
        }
    }

    /// A witness term of the expanded numerator (its lowest monomial), if nonzero.
    pub fn numerator_witness(&self) -> Option<(Monomial, BigInt)> {
        if self.is_zero() {
            return None;
        }
        self.num().lowest_term().map(|(m, c)| (*m, c.clone()))
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.den();
        if den.is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({}) / ({})", self.num(), den)
        }
    }
}
