use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use g2clasp::coefficients::{coeff, Coefficients};
use g2clasp::conjecture::verify_conjecture;
use g2clasp::qint::{qint_const, qlin};
use g2clasp::recursions::verify;
use g2clasp::*;

fn arithmetic(c: &mut Criterion) {
    let x = (1..=6).fold(RationalFn::one(), |acc, k| acc.mul(&qlin(LinearWeightForm::new(1, k, k))));
    let y = (2..=7).fold(RationalFn::one(), |acc, k| acc.mul(&qint_const(k)));
    c.bench_function("ratfn_add_six_brackets", |b| b.iter(|| black_box(&x).add(black_box(&y))));
    let p = x.num();
    c.bench_function("poly_square_six_binomials", |b| b.iter(|| black_box(&p).mul(black_box(&p))));
    let s = x.add(&y);
    c.bench_function("rat_eq_after_cancellation", |b| b.iter(|| s.sub(&y).rat_eq(&x)));
}

fn coefficients(c: &mut Criterion) {
    c.bench_function("coeff_r_3_-2_symbolic", |b| b.iter(|| coeff(CoeffKey::r(3, -2), WeightShift::ZERO).unwrap()));
    let p = Point::from_ratios((3, 2), (5, 7), (-4, 3)).unwrap();
    c.bench_function("r00_block_at_point", |b| b.iter(|| Coefficients::new(p.clone()).r00(WeightShift::ZERO).unwrap()));
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("r00_block_symbolic", |b| b.iter(|| Coefficients::new(Symbolic).r00(WeightShift::ZERO).unwrap()));
    g.finish();
}

fn verification(c: &mut Criterion) {
    let probe = Probe { points: 5, seed: 1 };
    c.bench_function("recursion_2_symbolic", |b| b.iter(|| verify(2, Mode::Symbolic, probe).unwrap()));
    c.bench_function("recursion_17_numeric", |b| b.iter(|| verify(17, Mode::Numeric, probe).unwrap()));
    c.bench_function("conjecture_symbolic", |b| b.iter(|| verify_conjecture(Mode::Symbolic, probe)));
}

criterion_group!(benches, arithmetic, coefficients, verification);
criterion_main!(benches);
