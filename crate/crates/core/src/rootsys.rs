//! G2 root-system combinatorics.
//!
//! Weights are in the fundamental-weight basis `(ϖ1, ϖ2)`, roots in the
//! simple-root basis `(α_s, α_t)` with `α_s` short, and coroots in the
//! simple-coroot basis. The invariant form has Gram matrix `[[2,-3],[-3,6]]`
//! on simple roots, so `α_s = 2ϖ1 - ϖ2` and `α_t = -3ϖ1 + 2ϖ2`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::RationalFn;
use crate::qint::{qint_const, qint_cubed, LinearWeightForm};

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };
    pub const RHO: Weight = Weight { a: 1, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub fn is_dominant(&self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn add(&self, o: Weight) -> Weight {
        Weight { a: self.a + o.a, b: self.b + o.b }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The two fundamental weights of G2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Fundamental {
    /// ϖ1, the 7-dimensional representation (coefficients `K`).
    F1,
    /// ϖ2, the 14-dimensional adjoint representation (coefficients `R`).
    F2,
}

impl Fundamental {
    pub fn weight(self) -> Weight {
        match self {
            Fundamental::F1 => Weight::new(1, 0),
            Fundamental::F2 => Weight::new(0, 1),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Fundamental::F1 => 1,
            Fundamental::F2 => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Fundamental::F1),
            2 => Some(Fundamental::F2),
            _ => None,
        }
    }
}

impl fmt::Display for Fundamental {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A root `m α_s + n α_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    pub m: i64,
    pub n: i64,
}

/// A coroot `p α_s∨ + r α_t∨`; pairs with a weight `(a, b)` as `p a + r b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coroot {
    pub p: i64,
    pub r: i64,
}

/// Positive roots, in the order they are usually listed for G2.
pub const POSITIVE_ROOTS: [Root; 6] = [
    Root { m: 1, n: 0 },
    Root { m: 3, n: 1 },
    Root { m: 2, n: 1 },
    Root { m: 3, n: 2 },
    Root { m: 1, n: 1 },
    Root { m: 0, n: 1 },
];

/// Coroots of [`POSITIVE_ROOTS`], index for index.
pub const POSITIVE_COROOTS: [Coroot; 6] = [
    Coroot { p: 1, r: 0 },
    Coroot { p: 1, r: 1 },
    Coroot { p: 2, r: 3 },
    Coroot { p: 1, r: 2 },
    Coroot { p: 1, r: 3 },
    Coroot { p: 0, r: 1 },
];

impl Root {
    pub const fn new(m: i64, n: i64) -> Self {
        Root { m, n }
    }

    /// `(α, α)` from the Gram matrix `[[2,-3],[-3,6]]`.
    pub fn norm(&self) -> i64 {
        2 * self.m * self.m - 6 * self.m * self.n + 6 * self.n * self.n
    }

    pub fn is_long(&self) -> bool {
        self.norm() == 6
    }

    /// `ℓ(α)`: 1 for short roots, 3 for long roots.
    pub fn length_class(&self) -> i64 {
        if self.is_long() {
            3
        } else {
            1
        }
    }

    pub fn is_positive(&self) -> bool {
        POSITIVE_ROOTS.contains(self)
    }

    pub fn is_negative(&self) -> bool {
        POSITIVE_ROOTS.contains(&self.neg())
    }

    pub fn neg(&self) -> Root {
        Root { m: -self.m, n: -self.n }
    }

    /// `α∨ = 2α/(α,α)` expressed on simple coroots `α_s∨ = α_s`, `α_t∨ = α_t/3`.
    pub fn coroot(&self) -> Coroot {
        let norm = self.norm();
        Coroot { p: 2 * self.m / norm, r: 6 * self.n / norm }
    }

    /// The root as a weight: `m (2,-1) + n (-3,2)`.
    pub fn to_weight(&self) -> Weight {
        Weight::new(2 * self.m - 3 * self.n, -self.m + 2 * self.n)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*as+{}*at", self.m, self.n)
    }
}

pub fn pairing(c: Coroot, w: Weight) -> i64 {
    c.p * w.a + c.r * w.b
}

/// Pairing against the symbolic weight `(a, b) + shift`, as a bracket argument.
pub fn pairing_form(c: Coroot, shift: Weight) -> LinearWeightForm {
    LinearWeightForm::new(c.p, c.r, pairing(c, shift))
}

/// Simple reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    S,
    T,
}

impl Gen {
    pub fn simple_root(self) -> Root {
        match self {
            Gen::S => Root::new(1, 0),
            Gen::T => Root::new(0, 1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Gen::S => 's',
            Gen::T => 't',
        }
    }
}

pub fn reflect_weight(g: Gen, w: Weight) -> Weight {
    match g {
        Gen::S => Weight::new(-w.a, w.a + w.b),
        Gen::T => Weight::new(w.a + 3 * w.b, -w.b),
    }
}

/// Reflection on simple-root coordinates: `s(α) = α - <α, α_s∨> α_s`.
pub fn reflect_root(g: Gen, r: Root) -> Root {
    match g {
        Gen::S => Root::new(-r.m + 3 * r.n, r.n),
        Gen::T => Root::new(r.m, r.m - r.n),
    }
}

/// A word over `{s, t}`; `x1 x2 … xn` acts as `x1(x2(…xn(v)))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<Gen>,
}

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl std::str::FromStr for ReducedWord {
    type Err = Error;

    /// `""`, `"1"` and `"e"` all denote the identity.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s == "1" || s == "e" {
            return Ok(Self::identity());
        }
        let letters = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                's' => Ok(Gen::S),
                't' => Ok(Gen::T),
                _ => Err(Error::Parse { pos: i, msg: format!("unexpected letter `{c}`") }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ReducedWord { letters })
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for g in &self.letters {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

pub fn apply_word(w: &ReducedWord, v: Weight) -> Weight {
    w.letters.iter().rev().fold(v, |acc, g| reflect_weight(*g, acc))
}

pub fn apply_word_root(w: &ReducedWord, r: Root) -> Root {
    w.letters.iter().rev().fold(r, |acc, g| reflect_root(*g, acc))
}

/// `{α > 0 : wα < 0}` via `{β_n, s_{β_n}(β_{n-1}), …, s_{β_n}…s_{β_2}(β_1)}`.
pub fn inversion_set(w: &ReducedWord) -> Result<BTreeSet<Root>> {
    let mut out = BTreeSet::new();
    let n = w.letters.len();
    for k in (0..n).rev() {
        // s_{β_n} … s_{β_{k+2}} (β_{k+1}) in 1-based terms
        let tail = ReducedWord { letters: w.letters[k + 1..].iter().rev().copied().collect() };
        let root = apply_word_root(&tail, w.letters[k].simple_root());
        if !root.is_positive() || !out.insert(root) {
            return Err(Error::NotReduced { word: w.to_string() });
        }
    }
    Ok(out)
}

/// One row of the extremal-weight table: `d_μ` carries `μ` to the dominant
/// fundamental weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalEntry {
    pub fund: Fundamental,
    pub mu: Weight,
    pub word: ReducedWord,
}

const EXTREMAL: [(Fundamental, i64, i64, &str); 12] = [
    (Fundamental::F1, 1, 0, ""),
    (Fundamental::F1, -1, 1, "s"),
    (Fundamental::F1, 2, -1, "st"),
    (Fundamental::F1, -2, 1, "sts"),
    (Fundamental::F1, 1, -1, "stst"),
    (Fundamental::F1, -1, 0, "ststs"),
    (Fundamental::F2, 0, 1, ""),
    (Fundamental::F2, 3, -1, "t"),
    (Fundamental::F2, -3, 2, "ts"),
    (Fundamental::F2, 3, -2, "tst"),
    (Fundamental::F2, -3, 1, "tsts"),
    (Fundamental::F2, 0, -1, "tstst"),
];

pub fn extremal_table() -> Vec<ExtremalEntry> {
    EXTREMAL
        .iter()
        .map(|(fund, a, b, w)| ExtremalEntry {
            fund: *fund,
            mu: Weight::new(*a, *b),
            word: w.parse().expect("static word"),
        })
        .collect()
}

/// Bracket `[n]_{q^ℓ}` for `ℓ ∈ {1, 3}`.
fn bracket_at_length(n: i64, ell: i64) -> RationalFn {
    if ell == 3 {
        qint_cubed(n)
    } else {
        qint_const(n)
    }
}

/// Quantum Weyl dimension `∏_{α>0} [<α∨, λ+ρ>]_{q^ℓ(α)} / [<α∨, ρ>]_{q^ℓ(α)}`.
pub fn qdim(lam: Weight) -> Result<RationalFn> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant { a: lam.a, b: lam.b });
    }
    let shifted = lam.add(Weight::RHO);
    let mut num = RationalFn::one();
    let mut den = RationalFn::one();
    for root in POSITIVE_ROOTS {
        let c = root.coroot();
        let ell = root.length_class();
        num = num.mul(&bracket_at_length(pairing(c, shifted), ell));
        den = den.mul(&bracket_at_length(pairing(c, Weight::RHO), ell));
    }
    num.div(&den)
}

/// Classical (q = 1) Weyl dimension as an exact integer ratio.
pub fn classical_dim(lam: Weight) -> Result<i64> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant { a: lam.a, b: lam.b });
    }
    let shifted = lam.add(Weight::RHO);
    let (num, den) = POSITIVE_COROOTS.iter().fold((1i64, 1i64), |(n, d), c| {
        (n * pairing(*c, shifted), d * pairing(*c, Weight::RHO))
    });
    Ok(num / den)
}
