//! Exact scalars and dense univariate polynomials.
//!
//! Coefficient fields are described by a small [`Field`] trait whose values
//! act as "structure" objects: [`Rationals`] for the ground field, [`PrimeField`]
//! for the modular images used during factorization, and number fields from
//! [`crate::numfield`]. A [`Polynomial`] carries its field, so mixing
//! coefficient fields is detected instead of silently computing garbage.

mod field;
mod modular;
mod polynomial;
mod prime;

pub use field::{Field, Rational, Rationals};
pub use polynomial::{pow_mod, Polynomial};
pub(crate) use modular::{integer_resultant, modular_inverse, modular_solve, norm_squarefree_hint};
pub use prime::{is_prime, small_primes, PrimeField, PrimeFieldElement};

use num_bigint::BigInt;
use num_traits::One;

/// Shorthand for the rational `n / d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Least common multiple of the denominators of a list of rationals.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
