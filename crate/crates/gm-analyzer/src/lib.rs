//! Decision procedure for the coclique and least-eigenvalue questions on
//! orbital graphs of multiplicity-free Sym(n) actions.

mod check;
mod dominance;
mod error;
pub mod matchings;
pub mod skwr2;
pub mod table2;

pub use check::{gm_check, gm_check_family, GMReport, GmOptions, LambdaAnalysis, OrbitalVerdict, Prepared, REPORT_FORMAT_VERSION};
pub use dominance::{dominance_maximal, second_largest, young_generators, young_orbits};
pub use error::GmError;
