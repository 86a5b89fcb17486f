//! Bracket products and sums, and the printed coefficient table.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domain::{Domain, Field};
use crate::error::{Error, Result};
use crate::qint::{fold, parse_form_body, LinearWeightForm, WeightShift};
use crate::rootsys::Weight;

/// `coeff * ∏ num / ∏ den`, each bracket listed once per power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTerm {
    pub coeff: i64,
    pub num: Vec<LinearWeightForm>,
    pub den: Vec<LinearWeightForm>,
}

impl BracketTerm {
    pub fn one() -> Self {
        BracketTerm { coeff: 1, num: Vec::new(), den: Vec::new() }
    }

    pub fn shifted(&self, s: WeightShift) -> BracketTerm {
        BracketTerm {
            coeff: self.coeff,
            num: self.num.iter().map(|f| fold(*f, s)).collect(),
            den: self.den.iter().map(|f| fold(*f, s)).collect(),
        }
    }

    /// Denominator atoms after folding `s`.
    pub fn den_atoms(&self, s: WeightShift) -> Vec<LinearWeightForm> {
        self.den.iter().map(|f| fold(*f, s)).collect()
    }

    pub fn eval<D: Domain>(&self, dom: &D, s: WeightShift) -> Result<D::Value> {
        let mut num = D::Value::from_int(self.coeff);
        for f in &self.num {
            num = num.mul(&dom.bracket(fold(*f, s)));
        }
        if self.den.is_empty() {
            return Ok(num);
        }
        let mut den = D::Value::one();
        for f in &self.den {
            den = den.mul(&dom.bracket(fold(*f, s)));
        }
        num.div(&den)
    }

    /// Fold `(a, b)` into every bracket, leaving constant brackets.
    pub fn at(&self, a: i64, b: i64) -> BracketTerm {
        let c = |f: &LinearWeightForm| LinearWeightForm::constant(f.at(a, b));
        BracketTerm {
            coeff: self.coeff,
            num: self.num.iter().map(c).collect(),
            den: self.den.iter().map(c).collect(),
        }
    }
}

fn write_group(f: &mut fmt::Formatter<'_>, forms: &[LinearWeightForm]) -> fmt::Result {
    let mut i = 0;
    while i < forms.len() {
        let mut k = 1;
        while i + k < forms.len() && forms[i + k] == forms[i] {
            k += 1;
        }
        write!(f, "{}", forms[i])?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
        i += k;
    }
    Ok(())
}

impl fmt::Display for BracketTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff < 0 {
            f.write_str("-")?;
        }
        if self.coeff.abs() != 1 || self.num.is_empty() {
            write!(f, "{}", self.coeff.abs())?;
        }
        write_group(f, &self.num)?;
        if !self.den.is_empty() {
            f.write_str("/")?;
            if self.den.len() > 1 {
                f.write_str("(")?;
            }
            write_group(f, &self.den)?;
            if self.den.len() > 1 {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn brackets(&mut self, out: &mut Vec<LinearWeightForm>) -> Result<()> {
        while self.peek() == Some(b'[') {
            let close = self.s[self.pos..]
                .iter()
                .position(|&c| c == b']')
                .ok_or_else(|| self.err("unclosed bracket"))?;
            let body = std::str::from_utf8(&self.s[self.pos + 1..self.pos + close]).unwrap_or("");
            let form = parse_form_body(body).ok_or_else(|| self.err("bad bracket"))?;
            self.pos += close + 1;
            let mut k = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                k = self.int().ok_or_else(|| self.err("bad power"))?;
            }
            out.extend(std::iter::repeat_n(form, k as usize));
        }
        Ok(())
    }
}

impl std::str::FromStr for BracketTerm {
    type Err = Error;

    /// `-[a+1]/[a]`, `2[3]^2/([2][12])`, `1`.
    fn from_str(s: &str) -> Result<Self> {
        let t: Vec<u8> = s.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
        let mut c = Cursor { s: &t, pos: 0 };
        let mut term = BracketTerm::one();
        match c.peek() {
            Some(b'-') => {
                term.coeff = -1;
                c.pos += 1;
            }
            Some(b'+') => c.pos += 1,
            _ => {}
        }
        if c.peek().is_some_and(|x| x.is_ascii_digit()) {
            term.coeff *= c.int().ok_or_else(|| c.err("bad integer"))?;
        }
        c.brackets(&mut term.num)?;
        if c.peek() == Some(b'/') {
            c.pos += 1;
            let paren = c.peek() == Some(b'(');
            if paren {
                c.pos += 1;
            }
            c.brackets(&mut term.den)?;
            if paren {
                if c.peek() != Some(b')') {
                    return Err(c.err("expected )"));
                }
                c.pos += 1;
            }
            if term.den.is_empty() {
                return Err(c.err("empty denominator"));
            }
        }
        if c.pos != t.len() {
            return Err(c.err("trailing input"));
        }
        Ok(term)
    }
}

/// A signed sum of bracket terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketSum {
    pub terms: Vec<BracketTerm>,
}

impl BracketSum {
    pub fn eval<D: Domain>(&self, dom: &D, s: WeightShift) -> Result<D::Value> {
        let mut acc = D::Value::zero();
        for t in &self.terms {
            acc = acc.add(&t.eval(dom, s)?);
        }
        Ok(acc)
    }

    pub fn den_atoms(&self, s: WeightShift) -> Vec<LinearWeightForm> {
        self.terms.iter().flat_map(|t| t.den_atoms(s)).collect()
    }
}

impl std::str::FromStr for BracketSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                '+' | '-' if depth == 0 && !s[start..i].trim().is_empty() => {
                    terms.push(s[start..i].parse()?);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(s[start..].parse()?);
        Ok(BracketSum { terms })
    }
}

impl fmt::Display for BracketSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let s = t.to_string();
            if i > 0 {
                match s.strip_prefix('-') {
                    Some(rest) => write!(f, " - {rest}")?,
                    None => write!(f, " + {s}")?,
                }
            } else {
                f.write_str(&s)?;
            }
        }
        Ok(())
    }
}

const K_TABLE: [((i64, i64), &str); 7] = [
    ((1, 0), "1"),
    ((-1, 1), "-[a+1]/[a]"),
    ((2, -1), "[3b+3][a+3b+4]/[3b][a+3b+3]"),
    ((0, 0), "-[a+2][a+3b+5][2a+3b+6]/[2][a][a+3b+3][2a+3b+4]"),
    ((-2, 1), "[a+1][2a+3b+5][3a+3b+6]/[a-1][2a+3b+4][3a+3b+3]"),
    ((1, -1), "-[3b+3][a+3b+4][2a+3b+5][3a+6b+9]/[3b][a+3b+2][2a+3b+4][3a+6b+6]"),
    (
        (-1, 0),
        "[a+1][a+3b+4][2a+3b+5][3a+3b+6][3a+6b+9]/[a][a+3b+3][2a+3b+3][3a+3b+3][3a+6b+6]",
    ),
];

const R_TABLE: [((i64, i64), &str); 12] = [
    ((0, 1), "1"),
    ((3, -1), "-[3b+3]/[3b]"),
    ((1, 0), "[a+3][a+3b+6]/[3][a][a+3b+3]"),
    ((-1, 1), "-[a+1][a+2][2a+3b+7]/[3][a-1][a][2a+3b+4]"),
    ((2, -1), "[3b+3][a+3b+4][a+3b+5][2a+3b+7]/[3][3b][a+3b+2][a+3b+3][2a+3b+4]"),
    ((-3, 2), "[a+1][3a+3b+6]/[a-2][3a+3b+3]"),
    ((3, -2), "[3b+3][a+3b+4][3a+6b+9]/[3b-3][a+3b+1][3a+6b+6]"),
    (
        (-2, 1),
        "[a+1][a+3b+6][2a+3b+5][2a+3b+6][3a+3b+6]/[3][a-1][a+3b+3][2a+3b+3][2a+3b+4][3a+3b+3]",
    ),
    (
        (1, -1),
        "-[a+3][3b+3][a+3b+4][2a+3b+5][2a+3b+6][3a+6b+9]/[3][a][3b][a+3b+2][2a+3b+3][2a+3b+4][3a+6b+6]",
    ),
    (
        (-1, 0),
        "[a+1][a+2][a+3b+4][a+3b+5][2a+3b+5][3a+3b+6][3a+6b+9]/[3][a-1][a][a+3b+2][a+3b+3][2a+3b+3][3a+3b+3][3a+6b+6]",
    ),
    ((-3, 1), "-[a+1][2a+3b+5][3a+3b+6][3a+6b+9]/[a-2][2a+3b+2][3a+3b][3a+6b+6]"),
    (
        (0, -1),
        "[3b+3][a+3b+4][2a+3b+5][3a+3b+6][3a+6b+9]/[3b][a+3b+1][2a+3b+2][3a+3b+3][3a+6b+3]",
    ),
];

const DET: &str = "[4][6][a+2][3b+6][a+3b+5][2a+3b+6][3a+3b+9][3a+6b+12]\
    /[2][3][12][a][3b][a+3b+3][2a+3b+4][3a+3b+3][3a+6b+6]";

const R11: &str = "-[6][8][15]/[3][5][12] \
    + [2][a+2][a+3b+5][2a+3b+2]/[3][a+1][a+3b+4][2a+3b+4] \
    + [a-2][3b+6][2a+3b+2][3a+3b]/[a][3b+3][2a+3b+3][3a+3b+3] \
    + [a-1][3b+6][a+3b+5][a+3b+6][2a+3b+6]/[3][a][3b+3][a+3b+3][a+3b+4][2a+3b+3] \
    + [3b][a+3b+1][2a+3b+2][3a+6b+3]/[3b+3][a+3b+3][2a+3b+3][3a+6b+6] \
    + [a+2][a+3][3b][a+3b+2][2a+3b+6]/[3][a][a+1][3b+3][a+3b+3][2a+3b+3]";

const E1_PREFACTOR: &str = "-[3][a+2][3a+6b+9]/[2][3b][a+3b+3][2a+3b+4][3a+3b+3][3a+6b+6]";

const E1_SUM: &str =
    "[3a+3b+6][2a+3b+5] + [a+3b+4][3b+3] + [3a+3b+6][3b+3][2]^2/[3] + [a+4] - [a-2]";

const QUAD_R22: &str = "[4]^2[6]^4/[2]^2[3]^4[12]^2";
const QUAD_R12: &str = "2[4]^2[6]^3/[2]^2[3]^2[12]^2";
const QUAD_R11: &str = "[4]^2[6]^2/[2]^2[12]^2";

const QUAD_RHS: &str = "-[6][8][15]/[3][5][12] \
    + [a+3][3b][a+3b+2][a+3b+3][2a+3b+4]/[3][a+2][3b+3][a+3b+4][a+3b+5][2a+3b+7] \
    + [a-1][a][3b+6][a+3b+6][2a+3b+4]/[3][a+1][a+2][3b+3][a+3b+5][2a+3b+7] \
    + [2][a][a+3b+3][2a+3b+8]/[3][a+1][a+3b+4][2a+3b+6] \
    + [a+4][3b][2a+3b+8][3a+3b+12]/[a+2][3b+3][2a+3b+7][3a+3b+9] \
    + [3b+6][a+3b+7][2a+3b+8][3a+6b+15]/[3b+3][a+3b+5][2a+3b+7][3a+6b+12]";

/// Identifies one printed formula, for mutation fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormulaId {
    K(Weight),
    R(Weight),
    Det,
    R11(usize),
    E1Prefactor,
    E1(usize),
    QuadRhs(usize),
}

/// Which bracket of a term to perturb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slot {
    Num(usize),
    Den(usize),
}

/// Add `delta` to the constant of one bracket of one formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub formula: FormulaId,
    pub slot: Slot,
    pub delta: i64,
}

/// Every explicit formula needed to build the coefficient table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaSet {
    pub k: Vec<(Weight, BracketTerm)>,
    pub r: Vec<(Weight, BracketTerm)>,
    pub det: BracketTerm,
    pub r11: BracketSum,
    pub e1_prefactor: BracketTerm,
    pub e1: BracketSum,
    /// Weights of `r22/D`, `r12/D`, `r11/D` in the quadratic relation.
    pub quad_r22: BracketTerm,
    pub quad_r12: BracketTerm,
    pub quad_r11: BracketTerm,
    pub quad_rhs: BracketSum,
}

fn table(rows: &[((i64, i64), &str)]) -> Vec<(Weight, BracketTerm)> {
    rows.iter()
        .map(|((m, n), s)| (Weight::new(*m, *n), s.parse().expect("static formula")))
        .collect()
}

impl Default for FormulaSet {
    fn default() -> Self {
        let p = |s: &str| s.parse::<BracketTerm>().expect("static formula");
        let ps = |s: &str| s.parse::<BracketSum>().expect("static formula");
        FormulaSet {
            k: table(&K_TABLE),
            r: table(&R_TABLE),
            det: p(DET),
            r11: ps(R11),
            e1_prefactor: p(E1_PREFACTOR),
            e1: ps(E1_SUM),
            quad_r22: p(QUAD_R22),
            quad_r12: p(QUAD_R12),
            quad_r11: p(QUAD_R11),
            quad_rhs: ps(QUAD_RHS),
        }
    }
}

fn find(v: &[(Weight, BracketTerm)], mu: Weight) -> Option<&BracketTerm> {
    v.iter().find(|(w, _)| *w == mu).map(|(_, t)| t)
}

impl FormulaSet {
    pub fn term(&self, id: FormulaId) -> Option<&BracketTerm> {
        match id {
            FormulaId::K(mu) => find(&self.k, mu),
            FormulaId::R(mu) => find(&self.r, mu),
            FormulaId::Det => Some(&self.det),
            FormulaId::R11(i) => self.r11.terms.get(i),
            FormulaId::E1Prefactor => Some(&self.e1_prefactor),
            FormulaId::E1(i) => self.e1.terms.get(i),
            FormulaId::QuadRhs(i) => self.quad_rhs.terms.get(i),
        }
    }

    fn term_mut(&mut self, id: FormulaId) -> Option<&mut BracketTerm> {
        match id {
            FormulaId::K(mu) => self.k.iter_mut().find(|(w, _)| *w == mu).map(|(_, t)| t),
            FormulaId::R(mu) => self.r.iter_mut().find(|(w, _)| *w == mu).map(|(_, t)| t),
            FormulaId::Det => Some(&mut self.det),
            FormulaId::R11(i) => self.r11.terms.get_mut(i),
            FormulaId::E1Prefactor => Some(&mut self.e1_prefactor),
            FormulaId::E1(i) => self.e1.terms.get_mut(i),
            FormulaId::QuadRhs(i) => self.quad_rhs.terms.get_mut(i),
        }
    }

    pub fn with_mutation(&self, m: &Mutation) -> Result<FormulaSet> {
        let mut out = self.clone();
        let term = out.term_mut(m.formula).ok_or(Error::Parse {
            pos: 0,
            msg: format!("no formula {:?}", m.formula),
        })?;
        let slot = match m.slot {
            Slot::Num(i) => term.num.get_mut(i),
            Slot::Den(i) => term.den.get_mut(i),
        }
        .ok_or(Error::Parse { pos: 0, msg: format!("no bracket {:?}", m.slot) })?;
        slot.c += m.delta;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_terms() {
        let t: BracketTerm = "-[a+1]/[a]".parse().unwrap();
        assert_eq!(t.coeff, -1);
        assert_eq!(t.num, vec![LinearWeightForm::new(1, 0, 1)]);
        assert_eq!(t.den, vec![LinearWeightForm::new(1, 0, 0)]);
        assert_eq!(t.to_string(), "-[a+1]/[a]");

        let t: BracketTerm = "2[4]^2[6]^3/[2]^2[3]^2[12]^2".parse().unwrap();
        assert_eq!(t.coeff, 2);
        assert_eq!(t.num.len(), 5);
        assert_eq!(t.den.len(), 6);
        assert_eq!(t.to_string(), "2[4]^2[6]^3/([2]^2[3]^2[12]^2)");

        let one: BracketTerm = "1".parse().unwrap();
        assert_eq!(one, BracketTerm::one());
        assert_eq!(one.to_string(), "1");

        let p: BracketTerm = "[12][15][33]/([6][12][30])".parse().unwrap();
        assert_eq!(p.to_string(), "[12][15][33]/([6][12][30])");
        assert!("[a+1]/".parse::<BracketTerm>().is_err());
        assert!("[a+1]x".parse::<BracketTerm>().is_err());
    }

    #[test]
    fn parse_sums() {
        let s: BracketSum = "[a+4] - [a-2] + [3b+3][2]^2/[3]".parse().unwrap();
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.terms[1].coeff, -1);
        assert_eq!(s.to_string(), "[a+4] - [a-2] + [3b+3][2]^2/[3]");
        let s: BracketSum = "-[6][8][15]/[3][5][12] + [a-2]".parse().unwrap();
        assert_eq!(s.terms.len(), 2);
        assert_eq!(s.terms[0].coeff, -1);
    }

    #[test]
    fn default_table_shapes() {
        let f = FormulaSet::default();
        assert_eq!(f.k.len(), 7);
        assert_eq!(f.r.len(), 12);
        assert_eq!(f.r11.terms.len(), 6);
        assert_eq!(f.e1.terms.len(), 5);
        assert_eq!(f.quad_rhs.terms.len(), 6);
        assert_eq!(f.det.num.len(), 8);
        assert_eq!(f.det.den.len(), 9);
    }

    #[test]
    fn mutation_touches_one_bracket() {
        let f = FormulaSet::default();
        let m = Mutation { formula: FormulaId::K(Weight::new(-1, 1)), slot: Slot::Num(0), delta: 1 };
        let g = f.with_mutation(&m).unwrap();
        assert_eq!(g.term(m.formula).unwrap().to_string(), "-[a+2]/[a]");
        assert_eq!(f.term(m.formula).unwrap().to_string(), "-[a+1]/[a]");
        let bad = Mutation { slot: Slot::Den(5), ..m };
        assert!(f.with_mutation(&bad).is_err());
    }
}
