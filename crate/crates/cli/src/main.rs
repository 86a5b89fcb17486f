mod render;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use g2clasp::coefficients::{
    all_denominator_atoms, coeff_at, det_at, formula_of, keys, verify_matrix_block, Coefficients,
    FormulaSet,
};
use g2clasp::conjecture::{verify_conjecture, verify_qdim_loops};
use g2clasp::qint::check_nonvanishing;
use g2clasp::recursions::{verify_all, COUNT};
use g2clasp::{CheckReport, CoeffKey, Fundamental, Mode, Probe, RationalFn, Symbolic, VerifyReport, WeightShift};

use render::{Format, TableRow};

#[derive(Parser)]
#[command(name = "g2clasp", version, about = "Exact verification of G2 triple-clasp coefficients")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Recursions,
    Matrix,
    Conjecture,
    Qdim,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify recursions, the matrix block, the product formula, or loop values.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value = "numeric")]
        mode: Mode,
        /// Sample points per check in numeric mode.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        points: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = default_parallelism(), value_parser = clap::value_parser!(u64).range(1..))]
        parallelism: u64,
        /// Comma-separated recursion ids (recursions target only).
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=COUNT as i64))]
        only: Vec<u8>,
        /// Record per-check wall time; off by default so reports are reproducible byte for byte.
        #[arg(long)]
        timings: bool,
    },
    /// Print one coefficient: symbolic, at an integer weight, or at a rational q.
    #[command(allow_negative_numbers = true)]
    Coeff {
        /// Fundamental weight index, 1 or 2.
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        fund: u8,
        m: i64,
        n: i64,
        #[arg(long, requires = "j", value_parser = clap::value_parser!(u8).range(1..=2))]
        i: Option<u8>,
        #[arg(long, requires = "i", value_parser = clap::value_parser!(u8).range(1..=2))]
        j: Option<u8>,
        #[arg(long, requires = "b")]
        a: Option<i64>,
        #[arg(long, requires = "a")]
        b: Option<i64>,
        /// Exact rational such as 3/2; needs --a and --b.
        #[arg(long, requires_all = ["a", "b"])]
        q: Option<BigRational>,
    },
    /// Export every coefficient specialized at one weight.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long, default_value_t = 6)]
        a: i64,
        #[arg(long, default_value_t = 4)]
        b: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn default_parallelism() -> u64 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u64)
}

fn run_verify(target: Target, mode: Mode, probe: Probe, only: &[u8], timings: bool) -> anyhow::Result<Vec<CheckReport>> {
    if !only.is_empty() && target != Target::Recursions {
        bail!("--only applies to the recursions target");
    }
    let mut out = Vec::new();
    if matches!(target, Target::Recursions | Target::All) {
        out.extend(verify_all(mode, probe, only)?);
    }
    if matches!(target, Target::Matrix | Target::All) {
        out.push(verify_matrix_block(mode, probe));
    }
    if matches!(target, Target::Conjecture | Target::All) {
        out.extend(verify_conjecture(mode, probe));
    }
    if matches!(target, Target::Qdim | Target::All) {
        out.push(verify_qdim_loops(mode, probe));
    }
    if !timings {
        for r in &mut out {
            r.elapsed_ms = None;
        }
    }
    Ok(out)
}

fn key_of(fund: u8, m: i64, n: i64, idx: Option<(u8, u8)>) -> CoeffKey {
    let fund = Fundamental::from_index(fund).expect("clap restricts the index");
    let mut key = match fund {
        Fundamental::F1 => CoeffKey::k(m, n),
        Fundamental::F2 => CoeffKey::r(m, n),
    };
    key.idx = idx;
    key
}

fn q_power(q: &BigRational, e: i64) -> BigRational {
    q.pow(i32::try_from(e).expect("weight fits in i32"))
}

fn run_coeff(key: CoeffKey, weight: Option<(i64, i64)>, q: Option<BigRational>) -> anyhow::Result<String> {
    key.validate()?;
    let Some((a, b)) = weight else {
        return Ok(if key.is_matrix_entry() {
            g2clasp::coefficients::coeff(key, WeightShift::ZERO)?.to_string()
        } else {
            formula_of(key)?.to_string()
        });
    };
    let value = coeff_at(key, a, b)?;
    match q {
        None if key.is_matrix_entry() => Ok(value.to_string()),
        None => Ok(formula_of(key)?.at(a, b).to_string()),
        Some(q) => {
            let v = value.eval_point(&q, &q_power(&q, a), &q_power(&q, b))?;
            Ok(v.to_string())
        }
    }
}

fn run_table(a: i64, b: i64) -> anyhow::Result<Vec<TableRow>> {
    check_nonvanishing(&all_denominator_atoms(WeightShift::ZERO), a, b)?;
    let block = Coefficients::new(Symbolic).r00(WeightShift::ZERO)?;
    let special = |v: &RationalFn| v.specialize_weight(a, b).map(|x| x.to_string());
    let mut rows = Vec::new();
    for key in keys(Fundamental::F1).into_iter().chain(keys(Fundamental::F2)) {
        let value = match key.idx {
            Some((i, j)) => special(block.entry(i, j)?)?,
            None => {
                coeff_at(key, a, b)?;
                formula_of(key)?.at(a, b).to_string()
            }
        };
        rows.push(TableRow::coefficient(key, value));
    }
    det_at(a, b)?;
    rows.push(TableRow::det(FormulaSet::default().det.at(a, b).to_string()));
    Ok(rows)
}

fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).context("writing output")?;
    out.flush().context("writing output")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Verify { target, mode, points, seed, format, parallelism, only, timings } => {
            let probe = Probe { points: points as usize, seed };
            let pool = rayon::ThreadPoolBuilder::new().num_threads(parallelism as usize).build();
            pool.map_err(anyhow::Error::from)
                .and_then(|pool| pool.install(|| run_verify(target, mode, probe, &only, timings)))
                .and_then(|results| {
                    let seed = (mode == Mode::Numeric).then_some(seed);
                    let report = VerifyReport::new(mode, seed, results);
                    emit(&render::verify(&report, format)?)?;
                    Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
                })
        }
        Cmd::Coeff { fund, m, n, i, j, a, b, q } => {
            let idx = i.zip(j);
            run_coeff(key_of(fund, m, n, idx), a.zip(b), q)
                .and_then(|s| emit(&format!("{s}\n")))
                .map(|_| ExitCode::SUCCESS)
        }
        Cmd::Table { a, b, format } => run_table(a, b)
            .and_then(|rows| emit(&render::table(a, b, &rows, format)?))
            .map(|_| ExitCode::SUCCESS),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
