//! One line per acceptance criterion; the test fails if any criterion fails.

use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use g2clasp::coefficients::{coeff, verify_matrix_block, verify_matrix_block_with, FormulaId, FormulaSet, Mutation, Slot};
use g2clasp::conjecture::{cases, derive_sign, pairing_factors, verify_case_with, verify_conjecture, verify_qdim_loops};
use g2clasp::qint::{qint_const, qint_cubed};
use g2clasp::recursions::{recursion, verify_all, verify_with};
use g2clasp::rootsys::{classical_dim, qdim};
use g2clasp::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn failures(rs: &[CheckReport]) -> Vec<String> {
    rs.iter().filter(|r| !r.passed()).map(|r| format!("{} {}", r.kind, r.id)).collect()
}

fn verdicts(rs: &[CheckReport]) -> Vec<(String, bool)> {
    rs.iter().map(|r| (format!("{} {}", r.kind, r.id), r.passed())).collect()
}

fn brackets(ns: &[i64]) -> RationalFn {
    ns.iter().fold(RationalFn::one(), |acc, n| acc.mul(&qint_const(*n)))
}

fn no_timings(mut rs: Vec<CheckReport>) -> Vec<CheckReport> {
    for r in &mut rs {
        r.elapsed_ms = None;
    }
    rs
}

fn numeric_report(parallelism: usize, probe: Probe) -> String {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(parallelism).build().unwrap();
    let results = pool.install(|| {
        let mut rs = verify_all(Mode::Numeric, probe, &[]).unwrap();
        rs.push(verify_matrix_block(Mode::Numeric, probe));
        rs.extend(verify_conjecture(Mode::Numeric, probe));
        rs.push(verify_qdim_loops(Mode::Numeric, probe));
        rs
    });
    serde_json::to_string_pretty(&VerifyReport::new(Mode::Numeric, Some(probe.seed), no_timings(results))).unwrap()
}

#[test]
fn acceptance() {
    let probe = Probe { points: 5, seed: 1 };
    let mut lines: Vec<(u8, &str, Outcome)> = Vec::new();

    let t = Instant::now();
    let sym_rec = verify_all(Mode::Symbolic, probe, &[]).unwrap();
    let sym_time = t.elapsed();
    let t = Instant::now();
    let num_rec = verify_all(Mode::Numeric, probe, &[]).unwrap();
    let num_time = t.elapsed();
    let bad = failures(&sym_rec);
    lines.push((
        1,
        "recursion suite",
        outcome(
            sym_rec.len() == 22 && bad.is_empty() && sym_time <= Duration::from_secs(600) && num_time <= Duration::from_secs(10),
            format!(
                "{}/22 symbolic residuals zero in {:.1}s; numeric probe {:.2}s; failing {:?}",
                22 - bad.len(),
                sym_time.as_secs_f64(),
                num_time.as_secs_f64(),
                bad
            ),
        ),
    ));

    let sym_block = verify_matrix_block(Mode::Symbolic, probe);
    let block = g2clasp::coefficients::r00(WeightShift::ZERO).unwrap();
    let det = g2clasp::coefficients::det_explicit(WeightShift::ZERO).unwrap();
    let block_ok = sym_block.passed() && block.r12.rat_eq(&block.r21) && block.matrix_det().rat_eq(&det);
    lines.push((2, "matrix block", outcome(block_ok, sym_block.witness.clone().unwrap_or_else(|| "r12 = r21, r11 r22 - r12^2 = det".into()))));

    let sym_conj = verify_conjecture(Mode::Symbolic, probe);
    let signs: Vec<Result<i8>> = cases().iter().map(derive_sign).collect();
    let signs_ok = signs.iter().all(|s| matches!(s, Ok(1) | Ok(-1)));
    let bad = failures(&sym_conj);
    lines.push((
        3,
        "clasp conjecture",
        outcome(sym_conj.len() == 12 && bad.is_empty() && signs_ok, format!("{}/12 cases exact with constant sign; failing {bad:?}", 12 - bad.len())),
    ));

    let s1 = brackets(&[2, 7, 12]).div(&brackets(&[4, 6])).unwrap();
    let s2 = brackets(&[7, 8, 15]).div(&brackets(&[3, 4, 5])).unwrap();
    let q1 = qdim(Fundamental::F1.weight()).unwrap().rat_eq(&s1);
    let q2 = qdim(Fundamental::F2.weight()).unwrap().rat_eq(&s2);
    let dims = (classical_dim(Fundamental::F1.weight()).unwrap(), classical_dim(Fundamental::F2.weight()).unwrap());
    let loops = verify_qdim_loops(Mode::Symbolic, probe);
    lines.push((4, "quantum-dimension loops", outcome(q1 && q2 && dims == (7, 14) && loops.passed(), format!("S1 {q1}, S2 {q2}, dims {dims:?}"))));

    let golden = brackets(&[12, 15, 33]).div(&brackets(&[6, 12, 30])).unwrap();
    let value = coeff(CoeffKey::r(3, -2), WeightShift::ZERO).unwrap().specialize_weight(2, 3).unwrap();
    lines.push((5, "golden value", outcome(value.rat_eq(&golden), "R^(3,-2) at (2,3) = [12][15][33]/([6][12][30])")));

    let qint_ok = (1..=20).all(|n| {
        qint_const(-n).rat_eq(&qint_const(n).neg())
            && qint_const(2).mul(&qint_const(n)).rat_eq(&qint_const(n + 1).add(&qint_const(n - 1)))
            && qint_cubed(n).rat_eq(&qint_const(3 * n).div(&qint_const(3)).unwrap())
    });
    lines.push((6, "quantum-integer identities", outcome(qint_ok, "n = 1..20")));

    let num_block = verify_matrix_block(Mode::Numeric, probe);
    let num_conj = verify_conjecture(Mode::Numeric, probe);
    let mut sym_all = sym_rec.clone();
    sym_all.push(sym_block.clone());
    sym_all.extend(sym_conj.clone());
    let mut num_all = num_rec.clone();
    num_all.push(num_block);
    num_all.extend(num_conj);
    let disagree: Vec<String> = verdicts(&sym_all)
        .into_iter()
        .zip(verdicts(&num_all))
        .filter(|(s, n)| s != n)
        .map(|(s, _)| s.0)
        .collect();
    let formulas = |m: Mutation| Arc::new(FormulaSet::default().with_mutation(&m).unwrap());
    let k_mut = formulas(Mutation { formula: FormulaId::K(Weight::new(-1, 1)), slot: Slot::Num(0), delta: 1 });
    let det_mut = formulas(Mutation { formula: FormulaId::Det, slot: Slot::Num(1), delta: 1 });
    let rec2 = recursion(2).unwrap();
    let case = &cases()[4];
    let mut factors = pairing_factors(case).unwrap();
    factors[0].num.c += 1;
    let default = Arc::new(FormulaSet::default());
    let flips = [Mode::Symbolic, Mode::Numeric].into_iter().all(|mode| {
        !verify_with(&rec2, &k_mut, mode, probe).passed()
            && !verify_matrix_block_with(&det_mut, mode, probe).passed()
            && !verify_case_with(case, &factors, derive_sign(case).unwrap(), &default, 0, mode, probe).passed()
    });
    lines.push((
        7,
        "two-oracle agreement",
        outcome(
            sym_all.len() == 35 && disagree.is_empty() && flips,
            format!("{} verdicts compared, disagreements {disagree:?}; mutation fixtures flip: {flips}", sym_all.len()),
        ),
    ));

    let first = numeric_report(1, probe);
    let second = numeric_report(4, probe);
    let third = numeric_report(4, probe);
    let sym_a = serde_json::to_string(&no_timings(sym_all.clone())).unwrap();
    let sym_b = serde_json::to_string(&no_timings(sym_all)).unwrap();
    let det_ok = first == second && second == third && sym_a == sym_b;
    lines.push((8, "determinism", outcome(det_ok, format!("{} bytes, identical across 3 runs and thread counts", first.len()))));

    let mut out = std::io::stdout().lock();
    for (n, name, o) in &lines {
        let status = if o.ok { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {n} [{status}] {name}: {}", o.detail).unwrap();
    }
    out.flush().unwrap();
    drop(out);

    let failed: Vec<u8> = lines.iter().filter(|(_, _, o)| !o.ok).map(|(n, _, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
