//! Locally recoverable codes with availability.
//!
//! Finite-field and polynomial-space machinery, the polynomial-evaluation and
//! parity-check constructions, closed-form minimum-distance bounds for
//! irregular recovery profiles and unequal locality, and exhaustive
//! verification tools for desk-scale instances.

pub mod analysis;
pub mod bounds;
pub mod codefile;
pub mod constructions;
pub mod error;
pub mod finite_field;
pub mod matrix;
pub mod poly_spaces;

pub use error::{Error, Result};
pub use finite_field::{FieldElement, FiniteField};
