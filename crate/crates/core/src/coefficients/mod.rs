//! The explicit triple-clasp coefficients `K`, `R`, the `(0,0)` matrix block
//! and its determinant, at arbitrary weight shifts.

mod formula;

pub use formula::{BracketSum, BracketTerm, FormulaId, FormulaSet, Mutation, Slot};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::domain::{Domain, Field, Point, Symbolic};
use crate::error::{Error, Result};
use crate::probe::probe_with;
use crate::report::{CheckReport, Mode, Probe};
use crate::exactalg::RationalFn;
use crate::qint::{check_nonvanishing, qint_const, LinearWeightForm, WeightShift};
use crate::rootsys::{Fundamental, Weight};

/// Selects one coefficient: `K^mu` for `F1`, `R^mu` (or `^{ij}R^{(0,0)}`) for `F2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoeffKey {
    pub fund: Fundamental,
    pub mu: Weight,
    pub idx: Option<(u8, u8)>,
}

impl CoeffKey {
    pub fn k(m: i64, n: i64) -> Self {
        CoeffKey { fund: Fundamental::F1, mu: Weight::new(m, n), idx: None }
    }

    pub fn r(m: i64, n: i64) -> Self {
        CoeffKey { fund: Fundamental::F2, mu: Weight::new(m, n), idx: None }
    }

    pub fn r00(i: u8, j: u8) -> Self {
        CoeffKey { fund: Fundamental::F2, mu: Weight::ZERO, idx: Some((i, j)) }
    }

    pub fn is_matrix_entry(&self) -> bool {
        self.fund == Fundamental::F2 && self.mu == Weight::ZERO
    }

    pub fn validate(&self) -> Result<()> {
        if !support(self.fund).contains(&self.mu) {
            return Err(Error::UnknownDisplacement {
                fund: self.fund.index(),
                m: self.mu.a,
                n: self.mu.b,
            });
        }
        match (self.is_matrix_entry(), self.idx) {
            (true, None) => Err(Error::MissingMatrixIndex),
            (false, Some(_)) => Err(Error::AmbiguousMatrixIndex { m: self.mu.a, n: self.mu.b }),
            (true, Some((i, j))) if !(1..=2).contains(&i) || !(1..=2).contains(&j) => {
                Err(Error::BadMatrixIndex { i, j })
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CoeffKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.fund {
            Fundamental::F1 => "K",
            Fundamental::F2 => "R",
        };
        match self.idx {
            Some((i, j)) => write!(f, "^{{{i},{j}}}{name}^{}", self.mu),
            None => write!(f, "{name}^{}", self.mu),
        }
    }
}

/// The `(0,0)` block of `R` at one shift.
#[derive(Clone, Debug, PartialEq)]
pub struct R00Record<V> {
    pub r11: V,
    pub r12: V,
    pub r21: V,
    pub r22: V,
    pub det: V,
}

impl<V: Field> R00Record<V> {
    pub fn entry(&self, i: u8, j: u8) -> Result<&V> {
        match (i, j) {
            (1, 1) => Ok(&self.r11),
            (1, 2) => Ok(&self.r12),
            (2, 1) => Ok(&self.r21),
            (2, 2) => Ok(&self.r22),
            _ => Err(Error::BadMatrixIndex { i, j }),
        }
    }

    /// `r11 r22 - r12 r21`.
    pub fn matrix_det(&self) -> V {
        self.r11.mul(&self.r22).sub(&self.r12.mul(&self.r21))
    }
}

const F1_SUPPORT: [(i64, i64); 7] = [(1, 0), (-1, 1), (2, -1), (0, 0), (-2, 1), (1, -1), (-1, 0)];

const F2_SUPPORT: [(i64, i64); 14] = [
    (0, 1),
    (3, -1),
    (1, 0),
    (-1, 1),
    (2, -1),
    (-3, 2),
    (0, 0),
    (0, 0),
    (3, -2),
    (-2, 1),
    (1, -1),
    (-1, 0),
    (-3, 1),
    (0, -1),
];

/// Weights of `V(ϖ)` with multiplicity, in expansion order.
/// `(0,0)` appears twice for `F2`; it carries the 2x2 block.
pub fn support(fund: Fundamental) -> Vec<Weight> {
    let src: &[(i64, i64)] = match fund {
        Fundamental::F1 => &F1_SUPPORT,
        Fundamental::F2 => &F2_SUPPORT,
    };
    src.iter().map(|(m, n)| Weight::new(*m, *n)).collect()
}

/// Every valid key: 7 for `F1`; 12 scalar and 4 matrix keys for `F2`.
pub fn keys(fund: Fundamental) -> Vec<CoeffKey> {
    let mut out = Vec::new();
    for mu in support(fund) {
        let key = CoeffKey { fund, mu, idx: None };
        if key.is_matrix_entry() {
            if out.iter().any(|k: &CoeffKey| k.is_matrix_entry()) {
                continue;
            }
            for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                out.push(CoeffKey::r00(i, j));
            }
        } else {
            out.push(key);
        }
    }
    out
}

/// `None` in the first slot denotes the determinant.
type CacheKey = (Option<(Fundamental, Weight)>, WeightShift);

/// Memoized coefficient lookup in one domain.
pub struct Coefficients<D: Domain> {
    dom: D,
    set: Arc<FormulaSet>,
    scalars: Mutex<HashMap<CacheKey, D::Value>>,
    blocks: Mutex<HashMap<WeightShift, R00Record<D::Value>>>,
}

impl<D: Domain> Coefficients<D> {
    pub fn new(dom: D) -> Self {
        Self::with_formulas(dom, Arc::new(FormulaSet::default()))
    }

    pub fn with_formulas(dom: D, set: Arc<FormulaSet>) -> Self {
        Coefficients {
            dom,
            set,
            scalars: Mutex::new(HashMap::new()),
            blocks: Mutex::new(HashMap::new()),
        }
    }

    pub fn domain(&self) -> &D {
        &self.dom
    }

    pub fn formulas(&self) -> &FormulaSet {
        &self.set
    }

    fn cached(&self, key: CacheKey, build: impl FnOnce() -> Result<D::Value>) -> Result<D::Value> {
        if let Some(v) = self.scalars.lock().expect("cache poisoned").get(&key) {
            return Ok(v.clone());
        }
        let v = build()?;
        self.scalars.lock().expect("cache poisoned").insert(key, v.clone());
        Ok(v)
    }

    pub fn coeff(&self, key: CoeffKey, shift: WeightShift) -> Result<D::Value> {
        key.validate()?;
        if let Some((i, j)) = key.idx {
            return Ok(self.r00(shift)?.entry(i, j)?.clone());
        }
        let term = product_term(&self.set, key).expect("validated key");
        self.cached((Some((key.fund, key.mu)), shift), || term.eval(&self.dom, shift))
    }

    pub fn det(&self, shift: WeightShift) -> Result<D::Value> {
        self.cached((None, shift), || self.set.det.eval(&self.dom, shift))
    }

    /// `r11` and `det` from their formulas; `(r12, r22)` solved from the two
    /// linear relations, `r21 := r12`.
    pub fn r00(&self, shift: WeightShift) -> Result<R00Record<D::Value>> {
        if let Some(r) = self.blocks.lock().expect("cache poisoned").get(&shift) {
            return Ok(r.clone());
        }
        let s = &self.set;
        let dom = &self.dom;
        let r11 = s.r11.eval(dom, shift)?;
        let det = self.det(shift)?;
        let e1 = s.e1_prefactor.eval(dom, shift)?.mul(&s.e1.eval(dom, shift)?);
        let rhs = s.quad_rhs.eval(dom, shift)?;
        let x = s.quad_r22.eval(dom, shift)?;
        let y = s.quad_r12.eval(dom, shift)?;
        let z = s.quad_r11.eval(dom, shift)?;
        let half = D::Value::one().div(&dom.bracket(LinearWeightForm::constant(2)))?;
        // half*r22 + r12 = e1 ; x*r22 + y*r12 = det*rhs - z*r11
        let f = det.mul(&rhs).sub(&z.mul(&r11));
        let delta = half.mul(&y).sub(&x);
        if delta.is_zero() {
            return Err(Error::SingularSystem);
        }
        let r22 = e1.mul(&y).sub(&f).div(&delta)?;
        let r12 = half.mul(&f).sub(&x.mul(&e1)).div(&delta)?;
        let rec = R00Record { r11, r21: r12.clone(), r12, r22, det };
        self.blocks.lock().expect("cache poisoned").insert(shift, rec.clone());
        Ok(rec)
    }
}

fn product_term(set: &FormulaSet, key: CoeffKey) -> Option<&BracketTerm> {
    match key.fund {
        Fundamental::F1 => set.term(FormulaId::K(key.mu)),
        Fundamental::F2 => set.term(FormulaId::R(key.mu)),
    }
}

/// The printed product formula of a scalar coefficient.
pub fn formula_of(key: CoeffKey) -> Result<BracketTerm> {
    key.validate()?;
    if key.is_matrix_entry() {
        return Err(Error::AmbiguousMatrixIndex { m: key.mu.a, n: key.mu.b });
    }
    Ok(product_term(&FormulaSet::default(), key).expect("validated key").clone())
}

/// Symbolic coefficient from the default formulas.
pub fn coeff(key: CoeffKey, shift: WeightShift) -> Result<RationalFn> {
    Coefficients::new(Symbolic).coeff(key, shift)
}

pub fn r00(shift: WeightShift) -> Result<R00Record<RationalFn>> {
    Coefficients::new(Symbolic).r00(shift)
}

pub fn det_explicit(shift: WeightShift) -> Result<RationalFn> {
    FormulaSet::default().det.eval(&Symbolic, shift)
}

/// Denominator atoms of the formula(s) feeding a coefficient, after folding.
/// Matrix entries report every atom of the block's defining relations.
pub fn denominator_atoms(key: CoeffKey, shift: WeightShift) -> Result<Vec<LinearWeightForm>> {
    key.validate()?;
    let set = FormulaSet::default();
    if !key.is_matrix_entry() {
        return Ok(product_term(&set, key).expect("validated key").den_atoms(shift));
    }
    let mut atoms = set.r11.den_atoms(shift);
    atoms.extend(set.det.den_atoms(shift));
    if key.idx != Some((1, 1)) {
        atoms.extend(set.e1_prefactor.den_atoms(shift));
        atoms.extend(set.e1.den_atoms(shift));
        atoms.extend(set.quad_rhs.den_atoms(shift));
    }
    atoms.sort();
    atoms.dedup();
    Ok(atoms)
}

/// Every denominator atom of the whole table, including the determinant.
pub fn all_denominator_atoms(shift: WeightShift) -> Vec<LinearWeightForm> {
    let mut atoms: Vec<LinearWeightForm> = [Fundamental::F1, Fundamental::F2]
        .into_iter()
        .flat_map(keys)
        .flat_map(|k| denominator_atoms(k, shift).expect("valid key"))
        .collect();
    atoms.sort();
    atoms.dedup();
    atoms
}

/// Specialize a coefficient at the integer weight `(a, b)`, refusing
/// degenerate weights.
pub fn coeff_at(key: CoeffKey, a: i64, b: i64) -> Result<RationalFn> {
    let atoms = denominator_atoms(key, WeightShift::ZERO)?;
    check_nonvanishing(&atoms, a, b)?;
    if key.is_matrix_entry() {
        return coeff(key, WeightShift::ZERO)?.specialize_weight(a, b);
    }
    let term = formula_of(key)?.at(a, b);
    let mut num = RationalFn::from_int(term.coeff);
    for f in &term.num {
        num = num.mul(&qint_const(f.c));
    }
    let mut den = RationalFn::one();
    for f in &term.den {
        den = den.mul(&qint_const(f.c));
    }
    num.div(&den)
}

pub fn det_at(a: i64, b: i64) -> Result<RationalFn> {
    let det = FormulaSet::default().det;
    check_nonvanishing(&det.den, a, b)?;
    det_explicit(WeightShift::ZERO)?.specialize_weight(a, b)
}

/// Probe stream reserved for the matrix block, disjoint from recursion ids.
const MATRIX_STREAM: u64 = 100;

fn block_defect<V: Field>(rec: &R00Record<V>) -> (V, V) {
    (rec.r12.sub(&rec.r21), rec.matrix_det().sub(&rec.det))
}

/// Check `r12 = r21` and `r11 r22 - r12 r21 = det` for the solved block.
pub fn verify_matrix_block_with(formulas: &Arc<FormulaSet>, mode: Mode, probe: Probe) -> CheckReport {
    let start = std::time::Instant::now();
    let report = CheckReport::new("matrix", "r00", mode);
    let mut report = match mode {
        Mode::Symbolic => {
            let c = Coefficients::with_formulas(Symbolic, formulas.clone());
            match c.r00(WeightShift::ZERO) {
                Ok(rec) => {
                    let (sym, det) = block_defect(&rec);
                    if !sym.is_zero() {
                        report.fail("r12 - r21 is nonzero")
                    } else if !det.is_zero() {
                        let w = det
                            .numerator_witness()
                            .map(|(m, k)| format!("det residual numerator term {k}*{m}"))
                            .unwrap_or_else(|| "det residual is nonzero".into());
                        report.fail(w)
                    } else {
                        report
                    }
                }
                Err(e) => report.fail(e.to_string()),
            }
        }
        Mode::Numeric => {
            let run = probe_with(probe, MATRIX_STREAM, |p: &Point| {
                let c = Coefficients::with_formulas(p.clone(), formulas.clone());
                let (sym, det) = block_defect(&c.r00(WeightShift::ZERO)?);
                Ok(sym.is_zero() && det.is_zero())
            });
            match run {
                Ok((points, failed)) => {
                    let mut r = match failed {
                        Some(p) => report.fail(format!("block identity fails at {p}")),
                        None => report,
                    };
                    r.probes = points;
                    r
                }
                Err(e) => report.fail(e.to_string()),
            }
        }
    };
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    report
}

pub fn verify_matrix_block(mode: Mode, probe: Probe) -> CheckReport {
    verify_matrix_block_with(&Arc::new(FormulaSet::default()), mode, probe)
}

/// The smallest `(a0, b0)` such that no atom in `atoms` vanishes on
/// `a >= a0, b >= b0`. Each atom must have non-negative `a` and `b`
/// coefficients.
pub fn minimal_safe_weight(atoms: &[LinearWeightForm]) -> Weight {
    let mut best = Weight::ZERO;
    for f in atoms {
        debug_assert!(f.ca >= 0 && f.cb >= 0);
        if f.is_constant() {
            continue;
        }
        // f vanishes somewhere on the quadrant iff f(a0, b0) <= 0
        if f.ca == 0 {
            while f.at(best.a, best.b) <= 0 {
                best.b += 1;
            }
        } else if f.cb == 0 {
            while f.at(best.a, best.b) <= 0 {
                best.a += 1;
            }
        }
    }
    for f in atoms.iter().filter(|f| f.ca > 0 && f.cb > 0) {
        while f.at(best.a, best.b) <= 0 {
            best.a += 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qint::qlin;

    fn lf(ca: i64, cb: i64, c: i64) -> LinearWeightForm {
        LinearWeightForm::new(ca, cb, c)
    }

    #[test]
    fn printed_examples() {
        let z = WeightShift::ZERO;
        assert!(coeff(CoeffKey::k(1, 0), z).unwrap().rat_eq(&RationalFn::one()));
        assert!(coeff(CoeffKey::r(0, 1), z).unwrap().rat_eq(&RationalFn::one()));
        let expect = qlin(lf(1, 0, 1)).div(&qlin(lf(1, 0, 0))).unwrap().neg();
        assert!(coeff(CoeffKey::k(-1, 1), z).unwrap().rat_eq(&expect));
    }

    #[test]
    fn golden_value() {
        let q = qint_const;
        let expect = q(12).mul(&q(15)).mul(&q(33)).div(&q(6).mul(&q(12)).mul(&q(30))).unwrap();
        let sym = coeff(CoeffKey::r(3, -2), WeightShift::ZERO).unwrap().specialize_weight(2, 3).unwrap();
        assert!(sym.rat_eq(&expect));
        assert!(coeff_at(CoeffKey::r(3, -2), 2, 3).unwrap().rat_eq(&expect));
        assert_eq!(formula_of(CoeffKey::r(3, -2)).unwrap().at(2, 3).to_string(), "[12][15][33]/([6][12][30])");
    }

    #[test]
    fn key_errors() {
        let z = WeightShift::ZERO;
        assert!(matches!(coeff(CoeffKey::k(5, 5), z), Err(Error::UnknownDisplacement { .. })));
        assert!(matches!(coeff(CoeffKey::r(0, 0), z), Err(Error::MissingMatrixIndex)));
        let mut k = CoeffKey::k(1, 0);
        k.idx = Some((1, 1));
        assert!(matches!(coeff(k, z), Err(Error::AmbiguousMatrixIndex { .. })));
        assert!(matches!(coeff(CoeffKey::r00(3, 1), z), Err(Error::BadMatrixIndex { .. })));
        assert!(coeff(CoeffKey::k(0, 0), z).is_ok());
    }

    #[test]
    fn supports() {
        assert_eq!(support(Fundamental::F1).len(), 7);
        assert!(support(Fundamental::F1).contains(&Weight::ZERO));
        assert_eq!(support(Fundamental::F2).len(), 14);
        assert_eq!(keys(Fundamental::F1).len(), 7);
        assert_eq!(keys(Fundamental::F2).len(), 16);
    }

    #[test]
    fn denominator_atom_examples() {
        let z = WeightShift::ZERO;
        assert_eq!(denominator_atoms(CoeffKey::k(-1, 1), z).unwrap(), vec![lf(1, 0, 0)]);
        assert!(denominator_atoms(CoeffKey::k(-2, 1), z).unwrap().contains(&lf(1, 0, -1)));
        assert!(denominator_atoms(CoeffKey::r(3, -2), z).unwrap().contains(&lf(0, 3, -3)));
        let shifted = denominator_atoms(CoeffKey::k(-1, 1), WeightShift::new(-1, 0)).unwrap();
        assert_eq!(shifted, vec![lf(1, 0, -1)]);
    }

    #[test]
    fn degenerate_specialization() {
        let err = coeff_at(CoeffKey::k(-2, 1), 1, 1).unwrap_err();
        match err {
            Error::DegenerateWeight { atoms, .. } => assert!(atoms.contains(&lf(1, 0, -1))),
            e => panic!("unexpected {e}"),
        }
        assert!(matches!(coeff_at(CoeffKey::r(3, -1), 2, 0), Err(Error::DegenerateWeight { .. })));
    }

    #[test]
    fn shift_paths_agree() {
        let s1 = WeightShift::new(-1, 2);
        let s2 = WeightShift::new(3, -1);
        for key in keys(Fundamental::F1).into_iter().chain(keys(Fundamental::F2)) {
            if key.is_matrix_entry() {
                continue;
            }
            let direct = coeff(key, s1.compose(s2)).unwrap();
            let t = formula_of(key).unwrap().shifted(s1).shifted(s2);
            let two_step = t.eval(&Symbolic, WeightShift::ZERO).unwrap();
            assert!(direct.rat_eq(&two_step), "{key}");
        }
    }

    #[test]
    fn matrix_block_invariants() {
        let rec = r00(WeightShift::ZERO).unwrap();
        assert!(rec.r12.rat_eq(&rec.r21));
        assert!(rec.matrix_det().rat_eq(&det_explicit(WeightShift::ZERO).unwrap()));
    }

    #[test]
    fn matrix_block_numeric_and_mutated() {
        let probe = Probe { points: 4, seed: 5 };
        let ok = verify_matrix_block(Mode::Numeric, probe);
        assert!(ok.passed());
        assert_eq!(ok.probes.len(), 4);
        let m = Mutation { formula: FormulaId::Det, slot: Slot::Num(1), delta: 1 };
        let bad = Arc::new(FormulaSet::default().with_mutation(&m).unwrap());
        assert!(!verify_matrix_block_with(&bad, Mode::Numeric, probe).passed());
    }

    #[test]
    fn minimal_weight_scan() {
        assert_eq!(minimal_safe_weight(&[lf(1, 0, -2), lf(0, 3, -3)]), Weight::new(3, 2));
        assert_eq!(minimal_safe_weight(&[lf(1, 3, -5)]), Weight::new(6, 0));
    }
}
