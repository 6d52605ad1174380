//! Eigenvalues of orbital graphs by independent routes: character sums over
//! cosets of the stabilizer, equitable two-part quotients with exact lifting,
//! product rules, and a dense floating-point oracle re-verified exactly.

mod character;
mod coclique;
mod dense;
mod error;
mod exact;
mod graph;
mod product;
mod quotient;
mod structure;

pub use character::{CharacterSums, SchemeEigenmatrix};
pub use coclique::{max_cocliques, CocliqueOptions, CocliqueSearch};
pub use dense::{dense_spectrum, nullity, DenseOptions, DenseSpectrum};
pub use error::SpectraError;
pub use exact::{format_spectrum, Spectrum, Q};
pub use graph::{verify_isomorphism, Graph};
pub use product::{doubled_spectrum, product_spectrum, ProductKind};
pub use quotient::{lift_and_check, ratio_bound, verify_equitable, LiftCertificate, QuotientMatrix2};
pub use structure::{
    line4_plus_components, line5_minus_direct, line5_plus_copies, orbital_graph, quasi_johnson_bowtie, IsoCertificate,
    TypedScheme,
};
