//! Concrete domains for Sym(n): k-subsets, quasi k-subsets and their signed
//! variants, uniform partitions, perfect and quasi-perfect matchings, and
//! cosets of a user-supplied subgroup. Each family carries its action, the
//! analytic stabilizer of its base point and a closed-form orbital classifier.

mod coset;
mod error;
mod family;
mod johnson;
mod line4;
mod line5;
mod matching;
mod quasi;
pub mod sign;
mod subset;
mod uniform;

pub use coset::{parse_group_file, CosetSpace};
pub use error::ModelError;
pub use family::{BuiltFamily, Family, SELECTORS};
pub use johnson::Johnson;
pub use line4::{Line4, SignedComplementPair};
pub use line5::{Line5, PairedSignObject};
pub use matching::{phi, Matching, Matchings};
pub use quasi::{quasi_kneser_graph, QuasiJohnson, QuasiKSubset};
pub use sign::Sign;
pub use subset::KSubset;
pub use uniform::UniformPartitions;
