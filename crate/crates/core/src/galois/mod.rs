//! Galois groups of splitting fields over ℚ and the Galois correspondence:
//! orbits, orbit polynomials, fixed fields, stabilizers and restriction to
//! normal subfields.

mod correspondence;
mod group;

pub(crate) use correspondence::algebra_span;
pub use correspondence::{IntermediateField, Restriction};
pub use group::{galois_group, Automorphism, GaloisGroup};
