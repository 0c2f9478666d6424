//! Cofiniteness tests and finite complements for affine semigroups.

pub mod affine;
mod cone;
pub mod diophantine;
mod membership;
pub mod numerical;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod instances;
pub mod lattice;
pub mod par;

pub use error::{Error, Result};
pub use lattice::{IntMatrix, IntVector, TermOrder, TermOrderKind};
