//! Complete factorization over ℚ and over prime fields.
//!
//! The rational path removes content, splits into squarefree parts, makes each
//! part a monic integer polynomial, and then runs the classical pipeline:
//! factor modulo a good prime, Hensel-lift to a coefficient bound, recombine.

mod hensel;
mod modp;

pub use modp::factor_mod_p;

pub(crate) use hensel::ZPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exact_poly::{denominator_lcm, Field, Polynomial, Rational, Rationals};

/// `unit · ∏ fᵢ^mᵢ` with every `fᵢ` monic irreducible, sorted canonically.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<F: Field> {
    field: F,
    unit: F::Elem,
    factors: Vec<(Polynomial<F>, usize)>,
}

impl<F: Field> Factorization<F> {
    pub fn new(field: F, unit: F::Elem, mut factors: Vec<(Polynomial<F>, usize)>) -> Self {
        factors.sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
        Factorization { field, unit, factors }
    }

    pub fn unit(&self) -> &F::Elem {
        &self.unit
    }

    pub fn factors(&self) -> &[(Polynomial<F>, usize)] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<(Polynomial<F>, usize)> {
        self.factors
    }

    /// Multiplies everything back out.
    pub fn expand(&self) -> Polynomial<F> {
        self.factors.iter().fold(
            Polynomial::constant(self.field.clone(), self.unit.clone()),
            |acc, (f, m)| &acc * &f.pow(*m as u32),
        )
    }

    /// Exactly one factor, of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// Sum of `deg fᵢ · mᵢ`.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(f, m)| f.deg() * m).sum()
    }
}

/// Complete factorization of a nonzero rational polynomial.
pub fn factor_over_q(p: &Polynomial<Rationals>, config: &Config) -> Result<Factorization<Rationals>> {
    let unit = p.lc().cloned().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for (part, mult) in p.monic().squarefree_decomposition()? {
        for g in factor_squarefree_monic(&part, config)? {
            factors.push((g, mult));
        }
    }
    Ok(Factorization::new(Rationals, unit, factors))
}

/// Whether `p` (of degree ≥ 1) is irreducible over ℚ.
pub fn is_irreducible_over_q(p: &Polynomial<Rationals>, config: &Config) -> Result<bool> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(factor_over_q(p, config)?.is_irreducible()),
    }
}

/// Whether an integer polynomial stays squarefree modulo `p` (`p` prime).
pub(crate) fn squarefree_mod_p(zs: &[BigInt], p: u64) -> bool {
    let field = crate::exact_poly::PrimeField::new(p).expect("prime modulus");
    let fp = hensel::to_fp(zs, field);
    fp.deg() + 1 == zs.len() && modp::is_squarefree(&fp).unwrap_or(false)
}

/// Primitive integer polynomial with positive leading coefficient, same roots as `p`.
pub(crate) fn primitive_integer(p: &Polynomial<Rationals>) -> ZPoly {
    let d = denominator_lcm(p.coeffs());
    let mut zs: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(d.clone())).to_integer())
        .collect();
    let content = zs.iter().fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
    if !content.is_zero() {
        for c in &mut zs {
            *c /= &content;
        }
    }
    if zs.last().is_some_and(Signed::is_negative) {
        for c in &mut zs {
            *c = -&*c;
        }
    }
    zs
}

pub(crate) fn factor_squarefree_monic(
    g: &Polynomial<Rationals>,
    config: &Config,
) -> Result<Vec<Polynomial<Rationals>>> {
    let n = g.deg();
    if n <= 1 {
        return Ok(vec![g.clone()]);
    }
    // F(y) = a^(n-1) G(y/a) is monic with integer coefficients; its factors
    // h(y) pull back to h(a x) up to scaling.
    let big_g = primitive_integer(g);
    let a = big_g[n].clone();
    let mut monic: ZPoly = vec![BigInt::zero(); n];
    let mut apow = BigInt::one();
    for i in (0..n).rev() {
        monic[i] = &big_g[i] * &apow;
        apow *= &a;
    }
    monic.push(BigInt::one());
    let raw = hensel::factor_monic_squarefree(&monic, config)?;
    let a = Rational::from_integer(a);
    Ok(raw
        .into_iter()
        .map(|h| {
            let mut scale = Rational::one();
            let cs = h
                .into_iter()
                .map(|c| {
                    let v = Rational::from_integer(c) * &scale;
                    scale *= &a;
                    v
                })
                .collect();
            Polynomial::new(Rationals, cs).monic()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::int;
    use proptest::prelude::*;

    fn q(cs: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, cs)
    }

    fn factor(cs: &[i64]) -> Factorization<Rationals> {
        factor_over_q(&q(cs), &Config::default()).unwrap()
    }

    /// Brute-force search for a monic integer factor of degree ≤ 2 with small
    /// coefficients; independent of the modular machinery.
    fn small_factor(p: &Polynomial<Rationals>, bound: i64) -> Option<Polynomial<Rationals>> {
        for b in -bound..=bound {
            let cand = q(&[b, 1]);
            if p.rem(&cand).unwrap().is_zero() {
                return Some(cand);
            }
        }
        for b in -bound..=bound {
            for c in -bound..=bound {
                let cand = q(&[c, b, 1]);
                if p.deg() > 2 && p.rem(&cand).unwrap().is_zero() {
                    return Some(cand);
                }
            }
        }
        None
    }

    #[test]
    fn fourth_roots_of_unity() {
        let f = factor(&[-1, 0, 0, 0, 1]);
        let want = vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 1), (q(&[1, 0, 1]), 1)];
        assert_eq!(f.factors(), want.as_slice());
        for (g, _) in f.factors() {
            assert!(small_factor(g, 3).map_or(true, |h| h == *g));
        }
    }

    #[test]
    fn x5_minus_x_minus_1_is_irreducible() {
        let f = factor(&[-1, -1, 0, 0, 0, 1]);
        assert!(f.is_irreducible());
        assert!(small_factor(&q(&[-1, -1, 0, 0, 0, 1]), 10).is_none());
    }

    #[test]
    fn content_goes_to_the_unit() {
        let f = factor(&[-6, 0, 6]);
        assert_eq!(f.unit(), &int(6));
        assert_eq!(f.factors(), &[(q(&[-1, 1]), 1), (q(&[1, 1]), 1)]);
    }

    #[test]
    fn irreducibility_checks() {
        let c = Config::default();
        assert!(is_irreducible_over_q(&q(&[-2, 0, 1]), &c).unwrap());
        assert!(!is_irreducible_over_q(&q(&[-4, 0, 1]), &c).unwrap());
        assert!(is_irreducible_over_q(&q(&[1, 0, 0, 0, 1]), &c).unwrap());
        assert!(small_factor(&q(&[1, 0, 0, 0, 1]), 2).is_none());
        assert_eq!(is_irreducible_over_q(&q(&[5]), &c), Err(Error::ConstantPolynomial));
        assert_eq!(factor_over_q(&q(&[]), &c), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn non_monic_and_rational_inputs() {
        // (2x - 1)(3x + 2) / 5
        let p = q(&[-2, -1, 6]).scale(&crate::exact_poly::rat(1, 5));
        let f = factor_over_q(&p, &Config::default()).unwrap();
        assert_eq!(f.expand(), p);
        assert_eq!(f.factors().len(), 2);
        assert_eq!(f.unit(), &crate::exact_poly::rat(6, 5));
    }

    #[test]
    fn repeated_factors() {
        let p = &q(&[1, 1]).pow(3) * &q(&[-2, 0, 1]).pow(2);
        let f = factor_over_q(&p, &Config::default()).unwrap();
        assert_eq!(f.factors(), &[(q(&[1, 1]), 3), (q(&[-2, 0, 1]), 2)]);
    }

    #[test]
    fn many_modular_factors() {
        // x^8 - 1 and the product of two Swinnerton-Dyer-like quartics
        let f = factor(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(f.factors().len(), 4);
        let p = &q(&[1, 0, -10, 0, 1]) * &q(&[4, 0, -10, 0, 1]);
        let f = factor_over_q(&p, &Config::default()).unwrap();
        assert_eq!(f.expand(), p);
        assert!(f.factors().iter().all(|(g, _)| {
            is_irreducible_over_q(g, &Config::default()).unwrap()
        }));
    }

    fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Polynomial<Rationals>> {
        prop::collection::vec(-6i64..=6, 1..=max_deg + 1)
            .prop_map(|cs| q(&cs))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn factorization_reconstructs(p in poly_strategy(7)) {
            let f = factor_over_q(&p, &Config::default()).unwrap();
            prop_assert_eq!(f.expand(), p.clone());
            prop_assert_eq!(f.degree(), p.deg());
            for (g, _) in f.factors() {
                prop_assert!(g.is_monic());
            }
        }

        #[test]
        fn factoring_a_factor_is_idempotent(p in poly_strategy(6)) {
            let f = factor_over_q(&p, &Config::default()).unwrap();
            for (g, _) in f.factors() {
                let again = factor_over_q(g, &Config::default()).unwrap();
                prop_assert!(again.is_irreducible());
                prop_assert_eq!(&again.factors()[0].0, g);
            }
        }

        #[test]
        fn planted_products_are_recovered(
            a in poly_strategy(3).prop_filter("deg", |p| p.deg() >= 1),
            b in poly_strategy(3).prop_filter("deg", |p| p.deg() >= 1),
        ) {
            let p = &a * &b;
            let f = factor_over_q(&p, &Config::default()).unwrap();
            let count: usize = f.factors().iter().map(|(_, m)| m).sum();
            prop_assert!(count >= 2);
            for (g, _) in factor_over_q(&a, &Config::default()).unwrap().factors() {
                prop_assert!(p.rem(g).unwrap().is_zero());
                prop_assert!(f.factors().iter().any(|(h, _)| h == g));
            }
        }
    }
}
