//! Seeded sample points for numeric-probe verification.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::Point;
use crate::error::{Error, Result};
use crate::report::{Probe, ProbePoint};

/// Sample pool: `n/d` with `n, d ∈ 2..=13`, either sign.
fn sample(rng: &mut ChaCha8Rng) -> BigRational {
    let n: i64 = rng.gen_range(2..=13);
    let d: i64 = rng.gen_range(2..=13);
    let v = BigRational::new(BigInt::from(n), BigInt::from(d));
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

fn is_unit(x: &BigRational) -> bool {
    x.numer() == x.denom() || *x.numer() == -x.denom()
}

/// Deterministic point stream for one `(seed, stream)` pair.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        PointSampler { rng }
    }

    pub fn next_point(&mut self) -> Point {
        loop {
            let (q, a, b) = (sample(&mut self.rng), sample(&mut self.rng), sample(&mut self.rng));
            if is_unit(&q) || is_unit(&a) || is_unit(&b) {
                continue;
            }
            if let Ok(p) = Point::new(q, a, b) {
                return p;
            }
        }
    }
}

const MAX_RESAMPLES: usize = 10_000;

pub fn probe_point(p: &Point) -> ProbePoint {
    ProbePoint { q: p.q.to_string(), a: p.a.to_string(), b: p.b.to_string() }
}

/// Evaluate `f` at `points` sampled points, resampling on poles.
/// Returns the points used and the first point with a nonzero value.
pub fn probe_with<F>(probe: Probe, stream: u64, mut f: F) -> Result<(Vec<ProbePoint>, Option<ProbePoint>)>
where
    F: FnMut(&Point) -> Result<bool>,
{
    let mut sampler = PointSampler::new(probe.seed, stream);
    let mut used = Vec::with_capacity(probe.points);
    let mut failed = None;
    let mut attempts = 0;
    while used.len() < probe.points {
        attempts += 1;
        if attempts > MAX_RESAMPLES {
            return Err(Error::PoleAtPoint);
        }
        let p = sampler.next_point();
        match f(&p) {
            Ok(zero) => {
                let pp = probe_point(&p);
                if !zero && failed.is_none() {
                    failed = Some(pp.clone());
                }
                used.push(pp);
            }
            Err(Error::DivisionByZero | Error::PoleAtPoint) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok((used, failed))
}
