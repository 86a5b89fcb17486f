//! A small expression language for the recursions.
//!
//! ```text
//! K{-1,1}(a-1,b)     scalar coefficient K^(m,n) at a shifted weight
//! R{3,-1}(a,b-1)     scalar coefficient R^(m,n)
//! R12(a,b-1)         entry (1,2) of the (0,0) block of R
//! Ri12(a,b-1)        entry (1,2) of the inverse of that block
//! D(a,b-1)           the block determinant
//! [7], [a+3b+4]      quantum integers
//! ```
//!
//! Operators are `+ - * / ^k` with the usual precedence; juxtaposition is
//! multiplication, and `*`, `/` and juxtaposition associate left to right.

use std::fmt;

use crate::coefficients::{CoeffKey, Coefficients};
use crate::domain::{Domain, Field};
use crate::error::{Error, Result};
use crate::qint::{fold, parse_form_body, LinearWeightForm, WeightShift};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Bracket(LinearWeightForm),
    Coeff(CoeffKey, WeightShift),
    /// Entry `(i, j)` of the inverse of the `(0,0)` block.
    InvEntry(u8, u8, WeightShift),
    Det(WeightShift),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Fold an extra shift into every coefficient reference and bracket.
    pub fn shifted(&self, s: WeightShift) -> Expr {
        let b = |e: &Expr| Box::new(e.shifted(s));
        match self {
            Expr::Int(n) => Expr::Int(*n),
            Expr::Bracket(f) => Expr::Bracket(fold(*f, s)),
            Expr::Coeff(k, t) => Expr::Coeff(*k, t.compose(s)),
            Expr::InvEntry(i, j, t) => Expr::InvEntry(*i, *j, t.compose(s)),
            Expr::Det(t) => Expr::Det(t.compose(s)),
            Expr::Neg(x) => Expr::Neg(b(x)),
            Expr::Add(x, y) => Expr::Add(b(x), b(y)),
            Expr::Sub(x, y) => Expr::Sub(b(x), b(y)),
            Expr::Mul(x, y) => Expr::Mul(b(x), b(y)),
            Expr::Div(x, y) => Expr::Div(b(x), b(y)),
            Expr::Pow(x, k) => Expr::Pow(b(x), *k),
        }
    }

    pub fn eval<D: Domain>(&self, c: &Coefficients<D>) -> Result<D::Value> {
        Ok(match self {
            Expr::Int(n) => D::Value::from_int(*n),
            Expr::Bracket(f) => c.domain().bracket(*f),
            Expr::Coeff(k, s) => c.coeff(*k, *s)?,
            Expr::Det(s) => c.det(*s)?,
            Expr::InvEntry(i, j, s) => {
                let r = c.r00(*s)?;
                let v = match (i, j) {
                    (1, 1) => r.r22.clone(),
                    (2, 2) => r.r11.clone(),
                    (1, 2) => r.r12.neg(),
                    (2, 1) => r.r21.neg(),
                    _ => return Err(Error::BadMatrixIndex { i: *i, j: *j }),
                };
                v.div(&r.det)?
            }
            Expr::Neg(x) => x.eval(c)?.neg(),
            Expr::Add(x, y) => x.eval(c)?.add(&y.eval(c)?),
            Expr::Sub(x, y) => x.eval(c)?.sub(&y.eval(c)?),
            Expr::Mul(x, y) => x.eval(c)?.mul(&y.eval(c)?),
            Expr::Div(x, y) => x.eval(c)?.div(&y.eval(c)?)?,
            Expr::Pow(x, k) => x.eval(c)?.pow(*k),
        })
    }

    /// Every `(key, shift)` referenced, including matrix keys for `D` and inverse entries.
    pub fn references(&self, out: &mut Vec<(CoeffKey, WeightShift)>) {
        match self {
            Expr::Int(_) | Expr::Bracket(_) => {}
            Expr::Coeff(k, s) => out.push((*k, *s)),
            Expr::InvEntry(_, _, s) | Expr::Det(s) => {
                for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                    out.push((CoeffKey::r00(i, j), *s));
                }
            }
            Expr::Neg(x) | Expr::Pow(x, _) => x.references(out),
            Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => {
                x.references(out);
                y.references(out);
            }
        }
    }
}

fn write_shift(f: &mut fmt::Formatter<'_>, s: &WeightShift) -> fmt::Result {
    let part = |v: &str, d: i64| match d.signum() {
        0 => v.to_string(),
        1 => format!("{v}+{d}"),
        _ => format!("{v}{d}"),
    };
    write!(f, "({},{})", part("a", s.da), part("b", s.db))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Bracket(b) => write!(f, "{b}"),
            Expr::Coeff(k, s) => {
                let name = if k.fund.index() == 1 { "K" } else { "R" };
                match k.idx {
                    Some((i, j)) => write!(f, "{name}{i}{j}")?,
                    None => write!(f, "{name}{{{},{}}}", k.mu.a, k.mu.b)?,
                }
                write_shift(f, s)
            }
            Expr::InvEntry(i, j, s) => {
                write!(f, "Ri{i}{j}")?;
                write_shift(f, s)
            }
            Expr::Det(s) => {
                f.write_str("D")?;
                write_shift(f, s)
            }
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Add(x, y) => write!(f, "({x} + {y})"),
            Expr::Sub(x, y) => write!(f, "({x} - {y})"),
            Expr::Mul(x, y) => write!(f, "({x} * {y})"),
            Expr::Div(x, y) => write!(f, "({x} / {y})"),
            Expr::Pow(x, k) => write!(f, "({x})^{k}"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn uint(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let n = self.uint()?;
        Ok(if neg { -n } else { n })
    }

    fn until(&mut self, close: u8) -> Result<&str> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|c| *c != close) {
            self.pos += 1;
        }
        if self.pos >= self.s.len() {
            return Err(self.err(format!("missing `{}`", close as char)));
        }
        let body = std::str::from_utf8(&self.s[start..self.pos]).map_err(|_| self.err("utf8"))?;
        self.pos += 1;
        Ok(body)
    }

    /// `(a+3,b-2)` as a shift.
    fn shift(&mut self) -> Result<WeightShift> {
        self.expect(b'(')?;
        let body: String = self.until(b')')?.chars().filter(|c| !c.is_whitespace()).collect();
        let (x, y) = body.split_once(',').ok_or_else(|| self.err("expected (a..,b..)"))?;
        let fx = parse_form_body(x).filter(|f| f.ca == 1 && f.cb == 0);
        let fy = parse_form_body(y).filter(|f| f.ca == 0 && f.cb == 1);
        match (fx, fy) {
            (Some(fx), Some(fy)) => Ok(WeightShift::new(fx.c, fy.c)),
            _ => Err(self.err(format!("bad weight `({body})`"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(b'(' | b'[' | b'K' | b'R' | b'D' | b'0'..=b'9'))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_atom() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.uint()?;
            let k = u32::try_from(k).map_err(|_| self.err("power too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let body: String = self.until(b']')?.chars().filter(|c| !c.is_whitespace()).collect();
                parse_form_body(&body)
                    .map(Expr::Bracket)
                    .ok_or_else(|| self.err(format!("bad bracket `[{body}]`")))
            }
            Some(b'0'..=b'9') => Ok(Expr::Int(self.uint()?)),
            Some(b'D') => {
                self.pos += 1;
                Ok(Expr::Det(self.shift()?))
            }
            Some(c @ (b'K' | b'R')) => {
                self.pos += 1;
                if self.eat(b'{') {
                    let m = self.int()?;
                    self.expect(b',')?;
                    let n = self.int()?;
                    self.expect(b'}')?;
                    let key = if c == b'K' { CoeffKey::k(m, n) } else { CoeffKey::r(m, n) };
                    key.validate()?;
                    return Ok(Expr::Coeff(key, self.shift()?));
                }
                if c != b'R' {
                    return Err(self.err("expected `{` after K"));
                }
                let inverse = self.s.get(self.pos) == Some(&b'i');
                if inverse {
                    self.pos += 1;
                }
                let digit = |p: &Self, k: usize| match p.s.get(p.pos + k) {
                    Some(d @ (b'1' | b'2')) => Ok(d - b'0'),
                    _ => Err(p.err("expected matrix index")),
                };
                let (i, j) = (digit(self, 0)?, digit(self, 1)?);
                self.pos += 2;
                let s = self.shift()?;
                Ok(if inverse { Expr::InvEntry(i, j, s) } else { Expr::Coeff(CoeffKey::r00(i, j), s) })
            }
            _ => Err(self.err("expected expression")),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// `lhs = rhs`.
pub fn parse_equation(s: &str) -> Result<(Expr, Expr)> {
    let (l, r) = s.split_once('=').ok_or(Error::Parse { pos: 0, msg: "missing `=`".into() })?;
    let lhs = parse_expr(l)?;
    let rhs = parse_expr(r).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + l.len() + 1, msg },
        e => e,
    })?;
    Ok((lhs, rhs))
}
