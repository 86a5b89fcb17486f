use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `q^eq * A^ea * B^eb` with signed exponents.
///
/// Ordered lexicographically on `(eq, ea, eb)`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Monomial {
    pub eq: i64,
    pub ea: i64,
    pub eb: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { eq: 0, ea: 0, eb: 0 };

    pub const fn new(eq: i64, ea: i64, eb: i64) -> Self {
        Monomial { eq, ea, eb }
    }

    pub const fn q(eq: i64) -> Self {
        Monomial { eq, ea: 0, eb: 0 }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// Product of two monomials. Panics on `i64` exponent overflow, which
    /// would require degrees far beyond anything representable in memory.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        Some(Monomial {
            eq: self.eq.checked_add(other.eq)?,
            ea: self.ea.checked_add(other.ea)?,
            eb: self.eb.checked_add(other.eb)?,
        })
    }

    pub fn inv(&self) -> Monomial {
        Monomial { eq: -self.eq, ea: -self.ea, eb: -self.eb }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial { eq: self.eq * k, ea: self.ea * k, eb: self.eb * k }
    }

    /// `true` when the monomial is strictly greater than `1` in the monomial order.
    pub fn is_positive(&self) -> bool {
        *self > Self::ONE
    }

    /// Fold `A -> q^a`, `B -> q^b`.
    pub fn specialize(&self, a: i64, b: i64) -> Result<Monomial> {
        let eq = a
            .checked_mul(self.ea)
            .and_then(|x| b.checked_mul(self.eb).and_then(|y| x.checked_add(y)))
            .and_then(|s| s.checked_add(self.eq))
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial::q(eq))
    }

    /// Square root when all exponents are even.
    pub fn sqrt(&self) -> Option<Monomial> {
        if self.eq % 2 == 0 && self.ea % 2 == 0 && self.eb % 2 == 0 {
            Some(Monomial { eq: self.eq / 2, ea: self.ea / 2, eb: self.eb / 2 })
        } else {
            None
        }
    }

    pub fn eval(&self, q: &BigRational, a: &BigRational, b: &BigRational) -> BigRational {
        rational_pow(q, self.eq) * rational_pow(a, self.ea) * rational_pow(b, self.eb)
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, e) in [("q", self.eq), ("A", self.ea), ("B", self.eb)] {
            if e != 0 {
                if !first {
                    f.write_str("*")?;
                }
                write!(f, "{name}^{e}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Sparse Laurent polynomial in `q, A, B` with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sorted ascending by monomial with no zero coefficients,
/// so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// `X - X^{-1}`.
    pub fn binomial(x: Monomial) -> Self {
        Self::from_terms([(x, BigInt::one()), (x.inv(), -BigInt::one())])
    }

    /// Build from arbitrary terms; duplicates are merged and zeros dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut v: Vec<(Monomial, BigInt)> = terms.into_iter().collect();
        v.sort_by_key(|x| x.0);
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The single term, if the polynomial is a monomial times a nonzero integer.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<&BigInt> {
        self.as_term().filter(|(m, _)| m.is_one()).map(|(_, c)| c)
    }

    /// Lowest term in monomial order.
    pub fn lowest_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (l, r) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(l.len() + r.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < l.len() && j < r.len() {
            match l[i].0.cmp(&r[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(l[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((r[j].0, rhs(&r[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &l[i].1 - &r[j].1 } else { &l[i].1 + &r[j].1 };
                    if !c.is_zero() {
                        out.push((l[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(l[i..].iter().cloned());
        out.extend(r[j..].iter().map(|(m, c)| (*m, rhs(c))));
        LaurentPoly { terms: out }
    }

    /// Multiply by `c * m`. Order is preserved, so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, large) =
            if self.len() <= other.len() { (self, other) } else { (other, self) };
        if let Some((m, c)) = small.as_term() {
            return large.mul_term(m, c);
        }
        if small.len() == 2 {
            // Two shifted copies merged; the common case of multiplying by a bracket.
            let a = large.mul_term(&small.terms[0].0, &small.terms[0].1);
            let b = large.mul_term(&small.terms[1].0, &small.terms[1].1);
            return a.add(&b);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(small.len().saturating_mul(large.len()).min(1 << 20));
        for (sm, sc) in &small.terms {
            for (lm, lc) in &large.terms {
                let m = sm.mul(lm);
                let prod = sc * lc;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|x| x.0);
        LaurentPoly { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Fold `A -> q^a`, `B -> q^b`. The result only involves `q`.
    pub fn specialize(&self, a: i64, b: i64) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.specialize(a, b)?, c.clone()));
        }
        Ok(Self::from_terms(terms))
    }

    pub fn eval(&self, q: &BigRational, a: &BigRational, b: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += m.eval(q, a, b) * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Greatest common divisor of the coefficients (positive), or zero.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_abs_coefficient(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: ascending monomial order, e.g. `2*q^-3*A^1*B^-3 - q^2 + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical text form (and any reordering of it).
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_int = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            if *pos < bytes.len() && bytes[*pos] == b'-' {
                *pos += 1;
            }
            let digits = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == digits {
                *pos = start;
                return None;
            }
            s[start..*pos].parse().ok()
        };
        let mut terms = Vec::new();
        skip_ws(&mut pos);
        if s.trim() == "0" {
            return Ok(Self::zero());
        }
        let mut sign = BigInt::one();
        if pos < bytes.len() && bytes[pos] == b'-' {
            sign = -sign;
            pos += 1;
        }
        loop {
            skip_ws(&mut pos);
            let mut coeff = BigInt::one();
            let mut mono = Monomial::ONE;
            if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                coeff = read_int(&mut pos).ok_or_else(|| err(pos, "bad coefficient"))?;
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                } else {
                    terms.push((mono, sign.clone() * coeff));
                    skip_ws(&mut pos);
                    if pos >= bytes.len() {
                        break;
                    }
                    sign = match bytes[pos] {
                        b'+' => BigInt::one(),
                        b'-' => -BigInt::one(),
                        _ => return Err(err(pos, "expected + or -")),
                    };
                    pos += 1;
                    continue;
                }
            }
            loop {
                let var = *bytes.get(pos).ok_or_else(|| err(pos, "expected variable"))?;
                pos += 1;
                if bytes.get(pos) != Some(&b'^') {
                    return Err(err(pos, "expected ^"));
                }
                pos += 1;
                let e = read_int(&mut pos).ok_or_else(|| err(pos, "bad exponent"))?;
                let e: i64 = i64::try_from(e).map_err(|_| err(pos, "exponent out of range"))?;
                match var {
                    b'q' => mono.eq += e,
                    b'A' => mono.ea += e,
                    b'B' => mono.eb += e,
                    _ => return Err(err(pos, "unknown variable")),
                }
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            terms.push((mono, sign.clone() * coeff));
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                break;
            }
            sign = match bytes[pos] {
                b'+' => BigInt::one(),
                b'-' => -BigInt::one(),
                _ => return Err(err(pos, "expected + or -")),
            };
            pos += 1;
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::term(Monomial::q(e), 1)
    }

    #[test]
    fn add_disjoint_and_cancelling() {
        assert_eq!((&q(1) + &q(-1)).len(), 2);
        assert!((&q(1) + &q(1).neg()).is_zero());
        let m = LaurentPoly::term(Monomial::new(4, 1, 3), 1);
        let sum = &m + &m;
        assert_eq!(sum.terms(), &[(Monomial::new(4, 1, 3), BigInt::from(2))]);
    }

    #[test]
    fn products() {
        let d = &q(1) - &q(-1);
        let s = &q(1) + &q(-1);
        assert_eq!(&d * &s, &q(2) - &q(-2));
        assert!((&LaurentPoly::zero() * &s).is_zero());
        let three = &(&q(2) + &LaurentPoly::one()) + &q(-2);
        let expect = LaurentPoly::from_terms([
            (Monomial::q(3), BigInt::from(1)),
            (Monomial::q(1), BigInt::from(2)),
            (Monomial::q(-1), BigInt::from(2)),
            (Monomial::q(-3), BigInt::from(1)),
        ]);
        assert_eq!(&s * &three, expect);
    }

    #[test]
    fn general_multiplication_matches_repeated_binomials() {
        let p = LaurentPoly::from_terms([
            (Monomial::new(1, 2, 0), BigInt::from(3)),
            (Monomial::new(-1, 0, 1), BigInt::from(-2)),
            (Monomial::new(0, 0, 0), BigInt::from(5)),
        ]);
        let r = LaurentPoly::from_terms([
            (Monomial::new(2, -1, 0), BigInt::from(1)),
            (Monomial::new(0, 1, 1), BigInt::from(4)),
            (Monomial::new(0, 0, -1), BigInt::from(-7)),
        ]);
        // distributive expansion term by term
        let mut expect = LaurentPoly::zero();
        for (m, c) in r.terms() {
            expect = expect.add(&p.mul_term(m, c));
        }
        assert_eq!(p.mul(&r), expect);
    }

    #[test]
    fn canonical_text() {
        let p = LaurentPoly::term(Monomial::new(-3, 1, -3), 2);
        assert_eq!(p.to_string(), "2*q^-3*A^1*B^-3");
        let p = &(&q(2) - &LaurentPoly::constant(5)) + &LaurentPoly::term(Monomial::new(0, 1, 0), -3);
        assert_eq!(p.to_string(), "-5 - 3*A^1 + q^2");
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn specialization_folds_exponents() {
        let p = LaurentPoly::term(Monomial::new(4, 1, 3), 1);
        assert_eq!(p.specialize(2, 3).unwrap(), q(15));
        let p = LaurentPoly::term(Monomial::new(-4, -1, -3), 1);
        assert_eq!(p.specialize(2, 3).unwrap(), q(-15));
    }

    #[test]
    fn eval_at_point() {
        let s = &q(1) + &q(-1);
        let two = BigRational::from_integer(2.into());
        let one = BigRational::one();
        assert_eq!(s.eval(&two, &one, &one), BigRational::new(5.into(), 2.into()));
    }
}
