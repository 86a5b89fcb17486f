//! Quantum integers `[n] = (q^n - q^-n)/(q - q^-1)` and brackets of affine
//! forms in the symbolic weight `(a, b)`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Monomial, RationalFn};

/// The bracket argument `c_a*a + c_b*b + c`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct LinearWeightForm {
    pub ca: i64,
    pub cb: i64,
    pub c: i64,
}

/// A relative displacement `(δa, δb)` of the symbolic weight.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct WeightShift {
    pub da: i64,
    pub db: i64,
}

impl WeightShift {
    pub const ZERO: WeightShift = WeightShift { da: 0, db: 0 };

    pub const fn new(da: i64, db: i64) -> Self {
        WeightShift { da, db }
    }

    pub fn compose(self, other: WeightShift) -> WeightShift {
        WeightShift { da: self.da + other.da, db: self.db + other.db }
    }
}

impl LinearWeightForm {
    pub const fn new(ca: i64, cb: i64, c: i64) -> Self {
        LinearWeightForm { ca, cb, c }
    }

    pub const fn constant(c: i64) -> Self {
        LinearWeightForm { ca: 0, cb: 0, c }
    }

    pub fn is_zero(&self) -> bool {
        self.ca == 0 && self.cb == 0 && self.c == 0
    }

    pub fn is_constant(&self) -> bool {
        self.ca == 0 && self.cb == 0
    }

    pub fn neg(&self) -> Self {
        LinearWeightForm { ca: -self.ca, cb: -self.cb, c: -self.c }
    }

    /// Value at an integer weight.
    pub fn at(&self, a: i64, b: i64) -> i64 {
        self.ca * a + self.cb * b + self.c
    }

    /// The monomial `A^ca * B^cb * q^c`.
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.c, self.ca, self.cb)
    }

    pub fn scaled(&self, k: i64) -> Self {
        LinearWeightForm { ca: self.ca * k, cb: self.cb * k, c: self.c * k }
    }
}

/// Fold a weight shift into the constant term of a form.
pub fn fold(f: LinearWeightForm, s: WeightShift) -> LinearWeightForm {
    LinearWeightForm { ca: f.ca, cb: f.cb, c: f.c + f.ca * s.da + f.cb * s.db }
}

pub fn vanishes_at(f: LinearWeightForm, a: i64, b: i64) -> bool {
    f.at(a, b) == 0
}

/// `[n]` as a rational function of `q`.
pub fn qint_const(n: i64) -> RationalFn {
    qlin(LinearWeightForm::constant(n))
}

/// `[c_a*a + c_b*b + c] = (A^ca B^cb q^c - A^-ca B^-cb q^-c) / (q - q^-1)`.
pub fn qlin(f: LinearWeightForm) -> RationalFn {
    RationalFn::binomial_ratio(f.monomial(), Monomial::q(1))
        .expect("q - q^-1 is nonzero")
}

/// `[n]_{q^3} = (q^{3n} - q^{-3n}) / (q^3 - q^{-3})`, built directly from its
/// definition rather than via `[3n]/[3]`.
pub fn qint_cubed(n: i64) -> RationalFn {
    let num = LaurentPoly::from_terms([
        (Monomial::q(3 * n), BigInt::from(1)),
        (Monomial::q(-3 * n), BigInt::from(-1)),
    ]);
    let den = LaurentPoly::from_terms([
        (Monomial::q(3), BigInt::from(1)),
        (Monomial::q(-3), BigInt::from(-1)),
    ]);
    RationalFn::new(&num, &den).expect("q^3 - q^-3 is nonzero")
}

/// Fails with [`Error::DegenerateWeight`] listing every form that vanishes at `(a, b)`.
pub fn check_nonvanishing<'a, I>(forms: I, a: i64, b: i64) -> Result<()>
where
    I: IntoIterator<Item = &'a LinearWeightForm>,
{
    let mut bad: Vec<LinearWeightForm> = Vec::new();
    for f in forms {
        if vanishes_at(*f, a, b) && !bad.contains(f) {
            bad.push(*f);
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::DegenerateWeight { atoms: bad, a, b })
    }
}

impl fmt::Display for LinearWeightForm {
    /// Bracket form: `[a+3b+4]`, `[3b]`, `[7]`, `[a-2]`, `[0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (coef, var) in [(self.ca, "a"), (self.cb, "b")] {
            if coef == 0 {
                continue;
            }
            if coef < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if coef.abs() != 1 {
                s.push_str(&coef.abs().to_string());
            }
            s.push_str(var);
        }
        if self.c != 0 || s.is_empty() {
            if self.c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&self.c.abs().to_string());
        }
        write!(f, "[{s}]")
    }
}

impl std::str::FromStr for LinearWeightForm {
    type Err = Error;

    /// Accepts `[a+3b+4]`, `a+3b+4`, `[-2a+1]`, `[7]`, with optional spaces.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.strip_prefix('[').unwrap_or(&t);
        let t = t.strip_suffix(']').unwrap_or(t);
        parse_form_body(t).ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad bracket `{s}`") })
    }
}

/// Parses `±k1 a ± k2 b ± k3` in any order.
pub(crate) fn parse_form_body(t: &str) -> Option<LinearWeightForm> {
    if t.is_empty() {
        return None;
    }
    let bytes = t.as_bytes();
    let mut out = LinearWeightForm::default();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return None;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let k: Option<i64> = if i > start { t[start..i].parse().ok() } else { None };
        match bytes.get(i) {
            Some(b'a') => {
                out.ca += sign * k.unwrap_or(1);
                i += 1;
            }
            Some(b'b') => {
                out.cb += sign * k.unwrap_or(1);
                i += 1;
            }
            _ => out.c += sign * k?,
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_examples() {
        let two = RationalFn::from_poly(&LaurentPoly::from_terms([
            (Monomial::q(1), BigInt::from(1)),
            (Monomial::q(-1), BigInt::from(1)),
        ]));
        assert!(qint_const(2).rat_eq(&two));
        assert!(qint_const(0).is_zero());
        assert!(qint_const(-3).rat_eq(&qint_const(3).neg()));
    }

    #[test]
    fn qlin_pattern() {
        let f = LinearWeightForm::new(1, 3, 4);
        let expect = RationalFn::new(
            &LaurentPoly::from_terms([
                (Monomial::new(4, 1, 3), BigInt::from(1)),
                (Monomial::new(-4, -1, -3), BigInt::from(-1)),
            ]),
            &LaurentPoly::from_terms([
                (Monomial::q(1), BigInt::from(1)),
                (Monomial::q(-1), BigInt::from(-1)),
            ]),
        )
        .unwrap();
        assert!(qlin(f).rat_eq(&expect));
        assert!(qlin(LinearWeightForm::constant(7)).rat_eq(&qint_const(7)));
        let spec = qlin(f).specialize_weight(2, 3).unwrap();
        assert!(spec.rat_eq(&qint_const(15)));
    }

    #[test]
    fn fold_examples() {
        let f = |ca, cb, c| LinearWeightForm::new(ca, cb, c);
        assert_eq!(fold(f(1, 3, 4), WeightShift::new(-1, 0)), f(1, 3, 3));
        assert_eq!(fold(f(0, 1, 1), WeightShift::new(0, -1)), f(0, 1, 0));
        assert_eq!(fold(f(2, 3, 5), WeightShift::new(-2, -1)), f(2, 3, -2));
    }

    #[test]
    fn cubed_examples() {
        assert!(qint_cubed(1).rat_eq(&RationalFn::one()));
        assert!(qint_cubed(2).rat_eq(&qint_const(6).div(&qint_const(3)).unwrap()));
        assert!(qint_cubed(0).is_zero());
    }

    #[test]
    fn vanishing() {
        assert!(vanishes_at(LinearWeightForm::new(1, 0, -2), 2, 7));
        assert!(vanishes_at(LinearWeightForm::new(0, 3, 0), 5, 0));
        assert!(!vanishes_at(LinearWeightForm::new(1, 3, 4), 2, 3));
        let err = check_nonvanishing(&[LinearWeightForm::new(0, 3, 0)], 2, 0).unwrap_err();
        assert_eq!(err.to_string(), "degenerate weight: [3b] = 0 at a=2, b=0");
    }

    #[test]
    fn bracket_text_round_trip() {
        for (s, f) in [
            ("[a+3b+4]", LinearWeightForm::new(1, 3, 4)),
            ("[3b]", LinearWeightForm::new(0, 3, 0)),
            ("[7]", LinearWeightForm::constant(7)),
            ("[a-2]", LinearWeightForm::new(1, 0, -2)),
            ("[-a+b-1]", LinearWeightForm::new(-1, 1, -1)),
            ("[0]", LinearWeightForm::default()),
            ("[-3]", LinearWeightForm::constant(-3)),
        ] {
            assert_eq!(f.to_string(), s);
            assert_eq!(s.parse::<LinearWeightForm>().unwrap(), f);
        }
    }
}
