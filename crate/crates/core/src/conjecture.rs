//! The clasp product formula over inversion sets, checked against the
//! extremal coefficients, and the quantum-dimension loop values.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coefficients::{CoeffKey, Coefficients, FormulaSet};
use crate::domain::{Domain, Field, Symbolic};
use crate::error::{Error, Result};
use crate::exactalg::RationalFn;
use crate::probe::probe_with;
use crate::qint::{LinearWeightForm, WeightShift};
use crate::report::{CheckReport, Mode, Probe};
use crate::rootsys::{
    classical_dim, extremal_table, inversion_set, pairing, pairing_form, qdim, Fundamental, ReducedWord, Root,
    Weight, POSITIVE_ROOTS,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalCase {
    pub fund: Fundamental,
    pub mu: Weight,
    pub word: ReducedWord,
}

impl ExtremalCase {
    pub fn key(&self) -> CoeffKey {
        CoeffKey { fund: self.fund, mu: self.mu, idx: None }
    }
}

impl std::fmt::Display for ExtremalCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{} {} {}", self.fund, self.mu, self.word)
    }
}

pub fn cases() -> Vec<ExtremalCase> {
    extremal_table()
        .into_iter()
        .map(|e| ExtremalCase { fund: e.fund, mu: e.mu, word: e.word })
        .collect()
}

/// One factor `[num]_{q^ell} / [den]_{q^ell}` of the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingFactor {
    pub root: Root,
    pub ell: i64,
    pub num: LinearWeightForm,
    pub den: LinearWeightForm,
}

/// Numerator pairs with `λ+ρ`, denominator with `λ+μ+ρ`, over the inversion set of the word.
pub fn pairing_factors(case: &ExtremalCase) -> Result<Vec<PairingFactor>> {
    let shifted = case.mu.add(Weight::RHO);
    Ok(inversion_set(&case.word)?
        .into_iter()
        .map(|root| {
            let c = root.coroot();
            PairingFactor {
                root,
                ell: root.length_class(),
                num: pairing_form(c, Weight::RHO),
                den: pairing_form(c, shifted),
            }
        })
        .collect())
}

/// `[n]_{q^ell}` with the `q³` bracket realized as `[3n]/[3]`.
fn bracket_ell<D: Domain>(dom: &D, f: LinearWeightForm, ell: i64) -> Result<D::Value> {
    let b = dom.bracket(f.scaled(ell));
    if ell == 1 {
        Ok(b)
    } else {
        b.div(&dom.bracket(LinearWeightForm::constant(ell)))
    }
}

pub fn product_in<D: Domain>(dom: &D, factors: &[PairingFactor]) -> Result<D::Value> {
    let mut acc = D::Value::one();
    for f in factors {
        acc = acc.mul(&bracket_ell(dom, f.num, f.ell)?).div(&bracket_ell(dom, f.den, f.ell)?)?;
    }
    Ok(acc)
}

pub fn product_formula(case: &ExtremalCase) -> Result<RationalFn> {
    product_in(&Symbolic, &pairing_factors(case)?)
}

/// The constant `ε ∈ {±1}` with `coeff ≡ ε · product`.
pub fn derive_sign(case: &ExtremalCase) -> Result<i8> {
    let c = crate::coefficients::coeff(case.key(), WeightShift::ZERO)?;
    let p = product_formula(case)?;
    let ratio = c.div(&p)?;
    if ratio.rat_eq(&RationalFn::one()) {
        Ok(1)
    } else if ratio.rat_eq(&RationalFn::from_int(-1)) {
        Ok(-1)
    } else {
        Err(Error::NotConstantSign { case: case.to_string() })
    }
}

/// One row of the committed sign table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignRow {
    pub fund: u8,
    pub m: i64,
    pub n: i64,
    pub word: String,
    pub sign: i8,
}

const GOLDEN_SIGNS: &str = include_str!("../golden/signs.csv");

pub fn golden_signs() -> Vec<SignRow> {
    csv::Reader::from_reader(GOLDEN_SIGNS.as_bytes())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .expect("committed sign table parses")
}

fn golden_sign(case: &ExtremalCase) -> Option<i8> {
    golden_signs()
        .into_iter()
        .find(|r| r.fund == case.fund.index() && r.m == case.mu.a && r.n == case.mu.b)
        .map(|r| r.sign)
}

/// Probe streams for conjecture cases start here, after recursion ids and the matrix block.
const CASE_STREAM_BASE: u64 = 200;
const QDIM_STREAM: u64 = 300;

fn defect<D: Domain>(c: &Coefficients<D>, case: &ExtremalCase, factors: &[PairingFactor], sign: i8) -> Result<D::Value> {
    let coeff = c.coeff(case.key(), WeightShift::ZERO)?;
    let prod = product_in(c.domain(), factors)?;
    Ok(coeff.sub(&prod.mul(&D::Value::from_int(sign.into()))))
}

/// Check `coeff ≡ sign · ∏ factors` for one case.
pub fn verify_case_with(
    case: &ExtremalCase,
    factors: &[PairingFactor],
    sign: i8,
    formulas: &Arc<FormulaSet>,
    stream: u64,
    mode: Mode,
    probe: Probe,
) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new("conjecture", case.to_string(), mode);
    report.fund = Some(case.fund.index());
    report.mu = Some(case.mu.to_string());
    report.word = Some(case.word.to_string());
    report.sign = Some(sign);
    let mut report = match mode {
        Mode::Symbolic => {
            let c = Coefficients::with_formulas(Symbolic, formulas.clone());
            match defect(&c, case, factors, sign) {
                Ok(d) if d.is_zero() => report,
                Ok(d) => {
                    let w = d
                        .numerator_witness()
                        .map(|(m, k)| format!("coefficient minus signed product has term {k}*{m}"))
                        .unwrap_or_else(|| "coefficient differs from signed product".into());
                    report.fail(w)
                }
                Err(e) => report.fail(e.to_string()),
            }
        }
        Mode::Numeric => {
            let run = probe_with(probe, stream, |p| {
                let c = Coefficients::with_formulas(p.clone(), formulas.clone());
                Ok(defect(&c, case, factors, sign)?.is_zero())
            });
            match run {
                Ok((points, failed)) => {
                    let mut r = match failed {
                        Some(p) => report.fail(format!("coefficient differs from signed product at {p}")),
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

/// All 12 cases against the committed sign table, in table order.
pub fn verify_conjecture(mode: Mode, probe: Probe) -> Vec<CheckReport> {
    let formulas = Arc::new(FormulaSet::default());
    cases()
        .par_iter()
        .enumerate()
        .map(|(i, case)| {
            let stream = CASE_STREAM_BASE + i as u64;
            let Some(sign) = golden_sign(case) else {
                return CheckReport::new("conjecture", case.to_string(), mode).fail("case missing from sign table");
            };
            match pairing_factors(case) {
                Ok(f) => verify_case_with(case, &f, sign, &formulas, stream, mode, probe),
                Err(e) => CheckReport::new("conjecture", case.to_string(), mode).fail(e.to_string()),
            }
        })
        .collect()
}

/// `∏_{α>0} [<α∨, λ+ρ>]_{q^ℓ} / [<α∨, ρ>]_{q^ℓ}` in any domain.
pub fn qdim_in<D: Domain>(dom: &D, lam: Weight) -> Result<D::Value> {
    let shifted = lam.add(Weight::RHO);
    let mut acc = D::Value::one();
    for root in POSITIVE_ROOTS {
        let c = root.coroot();
        let ell = root.length_class();
        let num = LinearWeightForm::constant(pairing(c, shifted));
        let den = LinearWeightForm::constant(pairing(c, Weight::RHO));
        acc = acc.mul(&bracket_ell(dom, num, ell)?).div(&bracket_ell(dom, den, ell)?)?;
    }
    Ok(acc)
}

fn loop_value<D: Domain>(dom: &D, num: &[i64], den: &[i64]) -> Result<D::Value> {
    let prod = |ns: &[i64]| {
        ns.iter()
            .fold(D::Value::one(), |acc, n| acc.mul(&dom.bracket(LinearWeightForm::constant(*n))))
    };
    prod(num).div(&prod(den))
}

/// Expected loop values `[2][7][12]/([4][6])` and `[7][8][15]/([3][4][5])`.
fn loops<D: Domain>(dom: &D) -> Result<[(Weight, D::Value, i64); 2]> {
    Ok([
        (Fundamental::F1.weight(), loop_value(dom, &[2, 7, 12], &[4, 6])?, 7),
        (Fundamental::F2.weight(), loop_value(dom, &[7, 8, 15], &[3, 4, 5])?, 14),
    ])
}

fn qdim_check<D: Domain>(dom: &D) -> Result<Option<String>> {
    for (w, expect, _) in loops(dom)? {
        if !qdim_in(dom, w)?.sub(&expect).is_zero() {
            return Ok(Some(format!("qdim{w} differs from the loop value")));
        }
    }
    Ok(None)
}

/// Both fundamental loop values, plus their classical dimensions 7 and 14.
pub fn verify_qdim_loops(mode: Mode, probe: Probe) -> CheckReport {
    let start = Instant::now();
    let report = CheckReport::new("qdim", "loops", mode);
    let classical = loops(&Symbolic).map(|ls| {
        ls.iter().find_map(|(w, _, dim)| match classical_dim(*w) {
            Ok(d) if d == *dim => None,
            Ok(d) => Some(format!("classical dimension of {w} is {d}, expected {dim}")),
            Err(e) => Some(e.to_string()),
        })
    });
    let mut report = match classical {
        Err(e) => report.fail(e.to_string()),
        Ok(Some(w)) => report.fail(w),
        Ok(None) => match mode {
            Mode::Symbolic => {
                let via_roots = loops(&Symbolic).and_then(|ls| {
                    for (w, expect, _) in ls {
                        if !qdim(w)?.rat_eq(&expect) {
                            return Ok(Some(format!("qdim{w} differs from the loop value")));
                        }
                    }
                    qdim_check(&Symbolic)
                });
                match via_roots {
                    Ok(None) => report,
                    Ok(Some(w)) => report.fail(w),
                    Err(e) => report.fail(e.to_string()),
                }
            }
            Mode::Numeric => match probe_with(probe, QDIM_STREAM, |p| Ok(qdim_check(p)?.is_none())) {
                Ok((points, failed)) => {
                    let mut r = match failed {
                        Some(p) => report.fail(format!("loop value mismatch at {p}")),
                        None => report,
                    };
                    r.probes = points;
                    r
                }
                Err(e) => report.fail(e.to_string()),
            },
        },
    };
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qint::{qint_const, qlin};

    fn lf(ca: i64, cb: i64, c: i64) -> LinearWeightForm {
        LinearWeightForm::new(ca, cb, c)
    }

    fn case(m: i64, n: i64) -> ExtremalCase {
        cases().into_iter().find(|c| c.mu == Weight::new(m, n)).unwrap()
    }

    #[test]
    fn trivial_word_gives_one() {
        let p = product_formula(&case(1, 0)).unwrap();
        assert!(p.rat_eq(&RationalFn::one()));
        assert_eq!(derive_sign(&case(1, 0)).unwrap(), 1);
    }

    #[test]
    fn word_st_matches_k() {
        let p = product_formula(&case(2, -1)).unwrap();
        let expect = qlin(lf(0, 3, 3))
            .mul(&qlin(lf(1, 3, 4)))
            .div(&qlin(lf(0, 3, 0)).mul(&qlin(lf(1, 3, 3))))
            .unwrap();
        assert!(p.rat_eq(&expect));
        let k = crate::coefficients::coeff(CoeffKey::k(2, -1), WeightShift::ZERO).unwrap();
        assert!(k.rat_eq(&expect));
    }

    #[test]
    fn single_reflection_has_negative_sign() {
        let p = product_formula(&case(-1, 1)).unwrap();
        assert!(p.rat_eq(&qlin(lf(1, 0, 1)).div(&qlin(lf(1, 0, 0))).unwrap()));
        assert_eq!(derive_sign(&case(-1, 1)).unwrap(), -1);
        assert_eq!(derive_sign(&case(3, -1)).unwrap(), -1);
    }

    #[test]
    fn stst_numerator_factors() {
        let mut nums: Vec<_> = pairing_factors(&case(1, -1)).unwrap().iter().map(|f| f.num.scaled(f.ell)).collect();
        nums.sort();
        let mut expect = vec![lf(0, 3, 3), lf(1, 3, 4), lf(2, 3, 5), lf(3, 6, 9)];
        expect.sort();
        assert_eq!(nums, expect);
    }

    #[test]
    fn derived_signs_match_golden_table() {
        let rows = golden_signs();
        assert_eq!(rows.len(), 12);
        for c in cases() {
            let row = rows.iter().find(|r| r.m == c.mu.a && r.n == c.mu.b).unwrap();
            assert_eq!(row.fund, c.fund.index());
            assert_eq!(row.word, c.word.to_string());
            assert_eq!(derive_sign(&c).unwrap(), row.sign, "{c}");
        }
    }

    #[test]
    fn sign_pattern_by_length() {
        for fund in [Fundamental::F1, Fundamental::F2] {
            let mut by_len: Vec<_> = cases().into_iter().filter(|c| c.fund == fund).collect();
            by_len.sort_by_key(|c| c.word.len());
            let signs: Vec<i8> = by_len.iter().map(|c| derive_sign(c).unwrap()).collect();
            assert_eq!(signs, vec![1, -1, 1, 1, -1, 1]);
        }
    }

    #[test]
    fn denominator_atoms_match_shifted_pairings() {
        for c in cases() {
            let mut from_product: Vec<_> =
                pairing_factors(&c).unwrap().iter().map(|f| f.den.scaled(f.ell)).collect();
            from_product.sort();
            let mut from_coeff = crate::coefficients::denominator_atoms(c.key(), WeightShift::ZERO).unwrap();
            from_coeff.retain(|f| !f.is_constant());
            from_coeff.sort();
            assert_eq!(from_coeff, from_product, "{c}");
        }
    }

    #[test]
    fn all_cases_pass_both_modes() {
        for mode in [Mode::Symbolic, Mode::Numeric] {
            let rs = verify_conjecture(mode, Probe { points: 3, seed: 2 });
            assert_eq!(rs.len(), 12);
            assert!(rs.iter().all(|r| r.passed()), "{mode}");
        }
    }

    #[test]
    fn perturbed_pairing_fails() {
        let c = case(1, -1);
        let mut f = pairing_factors(&c).unwrap();
        f[0].num.c += 1;
        let formulas = Arc::new(FormulaSet::default());
        for mode in [Mode::Symbolic, Mode::Numeric] {
            let r = verify_case_with(&c, &f, derive_sign(&c).unwrap(), &formulas, 0, mode, Probe::default());
            assert!(!r.passed(), "{mode}");
        }
    }

    #[test]
    fn large_weight_specialization_matches() {
        for c in cases() {
            let sign = derive_sign(&c).unwrap();
            let coeff = crate::coefficients::coeff_at(c.key(), 40, 57).unwrap();
            let prod = product_formula(&c).unwrap().specialize_weight(40, 57).unwrap();
            assert!(coeff.rat_eq(&prod.mul(&RationalFn::from_int(sign))), "{c}");
        }
    }

    #[test]
    fn qdim_loops_both_modes() {
        assert!(verify_qdim_loops(Mode::Symbolic, Probe::default()).passed());
        assert!(verify_qdim_loops(Mode::Numeric, Probe::default()).passed());
        let s1 = qint_const(2).mul(&qint_const(7)).mul(&qint_const(12));
        let s1 = s1.div(&qint_const(4).mul(&qint_const(6))).unwrap();
        assert!(qdim(Fundamental::F1.weight()).unwrap().rat_eq(&s1));
    }
}
