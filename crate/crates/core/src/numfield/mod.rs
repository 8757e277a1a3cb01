//! Number fields: exact arithmetic, towers of simple extensions flattened to a
//! primitive element, minimal polynomials, and factorization over a number
//! field by Trager's norm method.

mod field;
mod minpoly;
mod tower;
mod trager;

pub use field::{eval_rational, AbsoluteField, FieldElement, NumberField};
pub use minpoly::minimal_polynomial;
pub use tower::{linear, FieldTower, Primitive, Stage};
pub use trager::factor_over_number_field;

pub(crate) use trager::factor_squarefree;
