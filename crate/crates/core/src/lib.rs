//! Exact verification of G2 clasp coefficients and their recursions.

pub mod coefficients;
pub mod conjecture;
pub mod domain;
pub mod error;
pub mod exactalg;
pub mod probe;
pub mod qint;
pub mod recursions;
pub mod report;
pub mod rootsys;

pub use coefficients::{CoeffKey, R00Record};
pub use domain::{Domain, Field, Point, Symbolic};
pub use error::{Error, Result};
pub use exactalg::{LaurentPoly, Monomial, RationalFn};
pub use qint::{LinearWeightForm, WeightShift};
pub use recursions::Recursion;
pub use report::{CheckReport, Mode, Probe, Status, VerifyReport};
pub use rootsys::{Fundamental, ReducedWord, Weight};
