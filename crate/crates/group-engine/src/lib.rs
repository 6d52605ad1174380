//! Permutation groups acting on finite domains: enumeration by closure,
//! streamed direct products on disjoint blocks, explicit transitive actions of
//! Sym(n), fix tables, permutation-character decomposition and orbitals.

mod action;
mod error;
mod group;
mod orbits;
pub mod par;
mod perm;

pub use action::{Action, ExplicitAction, ObjectModel};
pub use error::GroupError;
pub use group::{generate_group, BlockFactor, BlockProduct, GeneratedGroup, PermGroup, DEFAULT_GROUP_BUDGET, DEFAULT_STREAM_BUDGET};
pub use orbits::{
    decompose_permchar, decompose_via_fix, fix_table, is_multiplicity_free, orbitals, rank, schreier_generators,
    suborbits_under, Decomposition, FixTable, Orbital, OrbitalStructure,
};
pub use perm::{CycleKey, Perm};
