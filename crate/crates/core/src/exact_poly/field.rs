use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A field structure: knows how to combine its elements.
///
/// Elements are plain values; the structure object carries whatever context
/// (a modulus, a defining polynomial) the arithmetic needs.
pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + fmt::Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for fields of characteristic zero.
    fn characteristic(&self) -> u64;
    /// Total order used to make every output deterministic.
    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Whether the element prints as a single atom (no `+`/`-` inside).
    fn is_atomic(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The ground field ℚ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn cmp_elem(&self, a: &Rational, b: &Rational) -> Ordering {
        a.cmp(b)
    }
    fn fmt_elem(&self, a: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
    fn is_atomic(&self, a: &Rational) -> bool {
        !a.is_negative()
    }
}
