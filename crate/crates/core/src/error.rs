use thiserror::Error;

use crate::qint::LinearWeightForm;

/// Errors raised by the algebra, coefficient, and root-system layers.
///
/// Verification failures are never errors: they are reported as
/// [`Status::Fail`](crate::report::Status::Fail) records.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at evaluation point")]
    PoleAtPoint,

    #[error("evaluation point must have nonzero coordinates")]
    InvalidPoint,

    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,

    #[error("weight ({a},{b}) is not dominant")]
    NotDominant { a: i64, b: i64 },

    #[error("word `{word}` is not reduced")]
    NotReduced { word: String },

    #[error("displacement ({m},{n}) is not in the support of fundamental {fund}")]
    UnknownDisplacement { fund: u8, m: i64, n: i64 },

    #[error("coefficient R^(0,0) requires a matrix index (i,j)")]
    MissingMatrixIndex,

    #[error("matrix index given for a one-dimensional weight space ({m},{n})")]
    AmbiguousMatrixIndex { m: i64, n: i64 },

    #[error("matrix index ({i},{j}) out of range; expected entries in {{1,2}}")]
    BadMatrixIndex { i: u8, j: u8 },

    #[error("linear system for the (0,0) matrix block is singular")]
    SingularSystem,

    #[error("degenerate weight: {}", describe_degenerate(.atoms, *.a, *.b))]
    DegenerateWeight {
        atoms: Vec<LinearWeightForm>,
        a: i64,
        b: i64,
    },

    #[error("coefficient/product ratio is not a constant sign ±1 for {case}")]
    NotConstantSign { case: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

fn describe_degenerate(atoms: &[LinearWeightForm], a: i64, b: i64) -> String {
    let names: Vec<String> = atoms.iter().map(|f| format!("{f} = 0")).collect();
    format!("{} at a={a}, b={b}", names.join(", "))
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
