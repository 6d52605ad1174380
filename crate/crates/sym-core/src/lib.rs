//! Combinatorics of the symmetric group: integer partitions, the dominance
//! order, conjugacy classes and exact irreducible character values.

mod character;
mod classes;
mod error;
mod partition;

pub use character::{character_table, dim_specht, mn_character};
pub use classes::{binomial, conjugacy_classes, double_factorial, factorial, z_mu};
pub use error::SymError;
pub use partition::{dominates, partitions_of, CycleType, Partition, MAX_N};
