use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

use super::Field;

/// An element of ℤ/pℤ, always reduced into `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

/// The prime field 𝔽_p. Construction checks primality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        // products are formed in u128, so any u64 prime is fine
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, value: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            value: value % self.p,
            modulus: self.p,
        }
    }

    /// Reduces a signed integer into the field.
    pub fn from_bigint(&self, n: &num_bigint::BigInt) -> PrimeFieldElement {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let r = n.mod_floor(&num_bigint::BigInt::from(self.p));
        self.elem(r.to_u64().expect("residue fits in u64"))
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.elem(0)
    }
    fn one(&self) -> PrimeFieldElement {
        self.elem(1)
    }
    fn from_i64(&self, n: i64) -> PrimeFieldElement {
        let r = n.rem_euclid(self.p as i64);
        self.elem(r as u64)
    }
    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.value == 0
    }
    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        let s = (a.value as u128 + b.value as u128) % self.p as u128;
        self.elem(s as u64)
    }
    fn sub(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        let s = (a.value as u128 + self.p as u128 - b.value as u128) % self.p as u128;
        self.elem(s as u64)
    }
    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        self.elem((self.p - a.value) % self.p)
    }
    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        let s = (a.value as u128 * b.value as u128) % self.p as u128;
        self.elem(s as u64)
    }
    fn inv(&self, a: &PrimeFieldElement) -> Option<PrimeFieldElement> {
        if a.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(a, self.p - 2))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn cmp_elem(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> Ordering {
        a.value.cmp(&b.value)
    }
    fn fmt_elem(&self, a: &PrimeFieldElement, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", a.value)
    }
}

/// Deterministic trial-division primality test; inputs here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes strictly below `bound`.
pub fn small_primes(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&n| is_prime(n)).collect()
}
