//! The orbital association scheme of a transitive action of Sym(n):
//! axiom checks, intersection numbers and the commutativity certificate.

mod build;
mod document;
mod error;

pub use build::{BuildOptions, Commutativity, OrbitalScheme, Verify};
pub use document::{ModuleRecord, OrbitalRecord, Scheme, SCHEME_FORMAT_VERSION};
pub use error::SchemeError;
