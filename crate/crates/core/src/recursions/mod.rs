//! The 22 coefficient recursions and their verification as exact identities.

pub mod dsl;
mod table;

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::coefficients::{denominator_atoms, minimal_safe_weight, CoeffKey, Coefficients, FormulaSet};
use crate::domain::{Domain, Field, Symbolic};
use crate::error::{Error, Result};
use crate::exactalg::RationalFn;
use crate::qint::WeightShift;
use crate::probe::probe_with;
use crate::report::{CheckReport, Mode, Probe};
use crate::rootsys::Weight;

pub use dsl::{parse_equation, parse_expr, Expr};

pub const COUNT: u8 = 22;

/// One recursion: `lhs = rhs` over the coefficient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recursion {
    pub id: u8,
    pub text: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Recursion {
    pub fn parse(id: u8, text: &str) -> Result<Self> {
        let (lhs, rhs) = parse_equation(text)?;
        Ok(Recursion { id, text: text.to_string(), lhs, rhs })
    }

    /// The recursion with the whole table moved by `s`.
    pub fn shifted(&self, s: WeightShift) -> Self {
        Recursion {
            id: self.id,
            text: self.text.clone(),
            lhs: self.lhs.shifted(s),
            rhs: self.rhs.shifted(s),
        }
    }

    pub fn residual_in<D: Domain>(&self, c: &Coefficients<D>) -> Result<D::Value> {
        Ok(self.lhs.eval(c)?.sub(&self.rhs.eval(c)?))
    }

    pub fn references(&self) -> Vec<(CoeffKey, WeightShift)> {
        let mut out = Vec::new();
        self.lhs.references(&mut out);
        self.rhs.references(&mut out);
        out
    }
}

pub fn recursion(id: u8) -> Result<Recursion> {
    let text = table::RECURSIONS
        .get(usize::from(id).wrapping_sub(1))
        .ok_or(Error::Parse { pos: 0, msg: format!("no recursion {id}") })?;
    Recursion::parse(id, text)
}

pub fn all_recursions() -> Vec<Recursion> {
    (1..=COUNT).map(|id| recursion(id).expect("static recursion")).collect()
}

/// Recursion 6 with reciprocals of the matrix entries instead of inverse-matrix entries.
pub fn recursion_6_literal() -> Recursion {
    Recursion::parse(6, table::RECURSION_6_LITERAL).expect("static recursion")
}

pub fn residual(id: u8) -> Result<RationalFn> {
    recursion(id)?.residual_in(&Coefficients::new(Symbolic))
}

/// Verify one recursion against a formula table.
pub fn verify_with(rec: &Recursion, formulas: &Arc<FormulaSet>, mode: Mode, probe: Probe) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new("recursion", rec.id.to_string(), mode);
    report = match mode {
        Mode::Symbolic => {
            let c = Coefficients::with_formulas(Symbolic, formulas.clone());
            match rec.residual_in(&c) {
                Ok(r) if r.is_zero() => report,
                Ok(r) => {
                    let w = r
                        .numerator_witness()
                        .map(|(m, k)| format!("residual numerator term {k}*{m}"))
                        .unwrap_or_else(|| "nonzero residual".into());
                    report.fail(w)
                }
                Err(e) => report.fail(e.to_string()),
            }
        }
        Mode::Numeric => {
            let run = probe_with(probe, u64::from(rec.id), |p| {
                let c = Coefficients::with_formulas(p.clone(), formulas.clone());
                Ok(rec.residual_in(&c)?.is_zero())
            });
            match run {
                Ok((points, failed)) => {
                    report.probes = points;
                    match failed {
                        Some(p) => report.fail(format!("nonzero residual at {p}")),
                        None => report,
                    }
                }
                Err(e) => report.fail(e.to_string()),
            }
        }
    };
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    report
}

pub fn verify(id: u8, mode: Mode, probe: Probe) -> Result<CheckReport> {
    let rec = recursion(id)?;
    Ok(verify_with(&rec, &Arc::new(FormulaSet::default()), mode, probe))
}

/// Verify the selected recursions (all when `only` is empty), in id order.
pub fn verify_all(mode: Mode, probe: Probe, only: &[u8]) -> Result<Vec<CheckReport>> {
    let recs: Vec<Recursion> = if only.is_empty() {
        all_recursions()
    } else {
        only.iter().map(|id| recursion(*id)).collect::<Result<_>>()?
    };
    let formulas = Arc::new(FormulaSet::default());
    Ok(recs.par_iter().map(|r| verify_with(r, &formulas, mode, probe)).collect())
}

/// Shifts actually referenced by the recursion table, sorted and deduplicated.
pub fn referenced_shifts() -> Vec<WeightShift> {
    let mut out: Vec<WeightShift> =
        all_recursions().iter().flat_map(|r| r.references()).map(|(_, s)| s).collect();
    out.sort();
    out.dedup();
    out
}

/// The smallest `(a0, b0)` at which no denominator atom of any coefficient
/// referenced by a recursion, at the shift it is referenced with, vanishes on
/// `a >= a0, b >= b0`.
pub fn minimal_safe_table_weight() -> Weight {
    let mut atoms = Vec::new();
    for rec in all_recursions() {
        for (key, shift) in rec.references() {
            atoms.extend(denominator_atoms(key, shift).expect("recursions reference valid keys"));
        }
    }
    atoms.sort();
    atoms.dedup();
    minimal_safe_weight(&atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{FormulaId, Mutation, Slot};

    fn numeric_ok(rec: &Recursion) -> bool {
        verify_with(rec, &Arc::new(FormulaSet::default()), Mode::Numeric, Probe { points: 3, seed: 11 })
            .passed()
    }

    #[test]
    fn all_parse() {
        let recs = all_recursions();
        assert_eq!(recs.len(), 22);
        assert!(recursion(0).is_err());
        assert!(recursion(23).is_err());
    }

    #[test]
    fn small_recursions_symbolic() {
        for id in [1, 2, 3, 8, 9, 10] {
            assert!(residual(id).unwrap().is_zero(), "recursion {id}");
        }
    }

    #[test]
    fn every_recursion_numeric() {
        for rec in all_recursions() {
            assert!(numeric_ok(&rec), "recursion {}", rec.id);
        }
    }

    #[test]
    fn literal_reciprocal_reading_of_six_fails() {
        assert!(!numeric_ok(&recursion_6_literal()));
    }

    #[test]
    fn perturbed_recursion_two_fails() {
        let rec = Recursion::parse(2, "K{-1,1}(a,b) = -[3] - 1/K{-1,1}(a-1,b)").unwrap();
        let f = Arc::new(FormulaSet::default());
        let sym = verify_with(&rec, &f, Mode::Symbolic, Probe::default());
        assert!(!sym.passed());
        assert!(sym.witness.is_some());
        let num = verify_with(&rec, &f, Mode::Numeric, Probe { points: 5, seed: 1 });
        assert!(!num.passed());
    }

    #[test]
    fn numeric_probe_records_points() {
        let r = verify(2, Mode::Numeric, Probe { points: 5, seed: 1 }).unwrap();
        assert!(r.passed());
        assert_eq!(r.probes.len(), 5);
        let again = verify(2, Mode::Numeric, Probe { points: 5, seed: 1 }).unwrap();
        assert_eq!(r.probes, again.probes);
    }

    #[test]
    fn mutated_coefficient_breaks_a_recursion() {
        let m = Mutation { formula: FormulaId::K(Weight::new(-1, 1)), slot: Slot::Num(0), delta: 1 };
        let f = Arc::new(FormulaSet::default().with_mutation(&m).unwrap());
        let r = verify_with(&recursion(2).unwrap(), &f, Mode::Numeric, Probe::default());
        assert!(!r.passed());
    }

    #[test]
    fn global_shift_preserves_verdicts() {
        for id in [2, 4, 7, 11, 14, 16] {
            let rec = recursion(id).unwrap().shifted(WeightShift::new(3, -2));
            assert!(numeric_ok(&rec), "recursion {id}");
        }
        let bad = Recursion::parse(2, "K{-1,1}(a,b) = -[3] - 1/K{-1,1}(a-1,b)").unwrap();
        assert!(!numeric_ok(&bad.shifted(WeightShift::new(-4, 1))));
    }

    #[test]
    fn referenced_shift_box() {
        let shifts = referenced_shifts();
        let da: Vec<i64> = shifts.iter().map(|s| s.da).collect();
        let db: Vec<i64> = shifts.iter().map(|s| s.db).collect();
        assert_eq!((da.iter().min(), da.iter().max()), (Some(&-5), Some(&3)));
        assert_eq!((db.iter().min(), db.iter().max()), (Some(&-3), Some(&1)));
    }

    #[test]
    fn safe_weight_for_tables() {
        assert_eq!(minimal_safe_table_weight(), Weight::new(6, 4));
    }
}
