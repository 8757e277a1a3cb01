//! Exact Galois theory over the rationals.
//!
//! The crate builds splitting fields of rational polynomials with explicit
//! roots, enumerates their automorphisms, computes fixed fields and minimal
//! polynomials, and normalizes towers of radical extensions. All arithmetic
//! is exact, and every constructed object is checked against an independent
//! identity before it is returned.
//!
//! ```
//! use galois_kit::expr::parse_poly;
//! use galois_kit::galois::galois_group;
//! use galois_kit::splitting::splitting_field;
//! use galois_kit::Config;
//!
//! let e = splitting_field(&parse_poly("x^4 + 1").unwrap(), &Config::default()).unwrap();
//! assert_eq!(galois_group(&e).unwrap().order(), 4);
//! ```

pub mod config;
mod error;
pub mod exact_poly;
pub mod expr;
pub(crate) mod linalg;
pub mod galois;
pub mod numfield;
pub mod permgroup;
pub mod qfactor;
pub mod radical;
pub mod splitting;

pub use config::Config;
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-polynomials.md")]
    mod exact_polynomials {}
    #[doc = include_str!("../../../book/src/number-fields.md")]
    mod number_fields {}
    #[doc = include_str!("../../../book/src/splitting-fields.md")]
    mod splitting_fields {}
    #[doc = include_str!("../../../book/src/galois-groups.md")]
    mod galois_groups {}
    #[doc = include_str!("../../../book/src/correspondence.md")]
    mod correspondence {}
    #[doc = include_str!("../../../book/src/permutation-groups.md")]
    mod permutation_groups {}
    #[doc = include_str!("../../../book/src/radical-towers.md")]
    mod radical_towers {}
    #[doc = include_str!("../../../book/src/solvability.md")]
    mod solvability {}
}
