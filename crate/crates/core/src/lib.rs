//! Finite residuated lattices and the filter theory built on them.
//!
//! An [`Algebra`] is validated once and then read-only. Everything else in
//! the crate is computed from it: filters and their frame, prime and minimal
//! prime spectra with the hull-kernel topologies, coannihilators and
//! ω-filters, α-filters, the class predicates (quasicomplemented,
//! disjunctive, weakly disjunctive), a theorem-checking suite, and an
//! exhaustive enumerator of small algebras.

pub mod algebra;
pub mod alpha;
pub mod analysis;
pub mod classify;
pub mod coann;
pub mod enumerate;
pub mod error;
pub mod filters;
pub mod lattice;
pub mod samples;
pub mod spectrum;
pub mod subset;
pub mod verify;

pub use algebra::{Algebra, ElementId, OpTable, Tables, ValidationError};
pub use error::{CoreError, Result};
pub use subset::Subset;
