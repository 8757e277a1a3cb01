//! Factorization over prime fields: squarefree decomposition, distinct-degree
//! splitting and Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact_poly::{pow_mod, Polynomial, PrimeField};

use super::Factorization;

type FpPoly = Polynomial<PrimeField>;

/// Complete factorization of a nonzero polynomial over 𝔽_p into monic
/// irreducibles. The randomized splitting step is driven by `seed`.
pub fn factor_mod_p(p: &FpPoly, seed: u64) -> Result<Factorization<PrimeField>> {
    let field = *p.field();
    let unit = *p.lc().ok_or(Error::ZeroPolynomial)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ field.modulus().wrapping_mul(0x9e37_79b9));
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&p.monic())? {
        for (block, d) in distinct_degree(&part)? {
            for f in equal_degree(&block, d, &mut rng)? {
                factors.push((f, mult));
            }
        }
    }
    Ok(Factorization::new(field, unit, factors))
}

/// `Some(factor degrees)` if `f` (monic) is squarefree mod p; cheap, no random splitting.
pub(crate) fn degree_pattern(f: &FpPoly) -> Result<Option<Vec<usize>>> {
    if !is_squarefree(f)? {
        return Ok(None);
    }
    let mut degrees = Vec::new();
    for (block, d) in distinct_degree(f)? {
        degrees.extend(std::iter::repeat(d).take(block.deg() / d));
    }
    degrees.sort_unstable();
    Ok(Some(degrees))
}

pub(crate) fn is_squarefree(f: &FpPoly) -> Result<bool> {
    let d = f.derivative();
    if d.is_zero() {
        return Ok(f.deg() == 0);
    }
    Ok(f.gcd(&d)?.deg() == 0)
}

/// `f(x) = g(x^p)` ⇒ `g` is the p-th root, since 𝔽_p coefficients are fixed by Frobenius.
fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.field().modulus() as usize;
    let cs = f.coeffs().iter().step_by(p).copied().collect();
    Polynomial::new(*f.field(), cs)
}

/// Squarefree decomposition valid in characteristic p (handles `f' = 0`).
pub(crate) fn squarefree_decomposition(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    let p = f.field().modulus() as usize;
    let f = f.monic();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let fp = f.derivative();
    if fp.is_zero() {
        for (g, m) in squarefree_decomposition(&pth_root(&f))? {
            out.push((g, m * p));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&fp)?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?;
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w)?;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_decomposition(&pth_root(&c))? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// Splits a monic squarefree polynomial into blocks whose irreducible factors
/// share one degree; returns `(block, degree)`.
pub(crate) fn distinct_degree(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    let field = *f.field();
    let x = Polynomial::x(field);
    let p = BigUint::from(field.modulus());
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = pow_mod(&h, &p, &rest)?;
        let g = rest.gcd(&h.try_sub(&x)?)?;
        if g.deg() > 0 {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    Ok(out)
}

/// Cantor–Zassenhaus: splits a product of distinct monic irreducibles of degree `d`.
pub(crate) fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<FpPoly>> {
    if f.deg() == d {
        return Ok(vec![f.clone()]);
    }
    let field = *f.field();
    let p = field.modulus();
    let exponent = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let cs: Vec<_> = (0..f.deg()).map(|_| field.elem(rng.gen_range(0..p))).collect();
        let a = Polynomial::new(field, cs);
        if a.deg() == 0 {
            continue;
        }
        let g = f.gcd(&a)?;
        let split = if g.deg() > 0 && g.deg() < f.deg() {
            g
        } else {
            let b = if p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = a.rem(f)?;
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.try_mul(&t)?.rem(f)?;
                    acc = acc.try_add(&t)?;
                }
                acc
            } else {
                pow_mod(&a, &exponent, f)?.try_sub(&Polynomial::one(field))?
            };
            if b.is_zero() {
                continue;
            }
            f.gcd(&b)?
        };
        if split.deg() > 0 && split.deg() < f.deg() {
            let other = f.exact_div(&split)?;
            let mut out = equal_degree(&split, d, rng)?;
            out.extend(equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, cs: &[i64]) -> FpPoly {
        Polynomial::from_i64s(PrimeField::new(p).unwrap(), cs)
    }

    /// Exhaustive irreducibility over a tiny field: no monic divisor of degree
    /// 1..=deg/2 exists among all candidates.
    fn brute_irreducible(f: &FpPoly) -> bool {
        let p = f.field().modulus() as i64;
        for d in 1..=f.deg() / 2 {
            let total = p.pow(d as u32);
            for code in 0..total {
                let mut cs = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    cs.push(c % p);
                    c /= p;
                }
                cs.push(1);
                if f.rem(&fp(p as u64, &cs)).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn x2_plus_1_in_small_characteristics() {
        let f2 = factor_mod_p(&fp(2, &[1, 0, 1]), 1).unwrap();
        assert_eq!(f2.factors(), &[(fp(2, &[1, 1]), 2)]);
        let f5 = factor_mod_p(&fp(5, &[1, 0, 1]), 1).unwrap();
        assert_eq!(f5.factors(), &[(fp(5, &[2, 1]), 1), (fp(5, &[3, 1]), 1)]);
        let f3 = factor_mod_p(&fp(3, &[1, 0, 1]), 1).unwrap();
        assert_eq!(f3.factors(), &[(fp(3, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn quintic_mod_two_reproduces_frobenius_type() {
        // x^5 - x - 1 = (x^2 + x + 1)(x^3 + x^2 + 1) over F_2
        let f = factor_mod_p(&fp(2, &[-1, -1, 0, 0, 0, 1]), 7).unwrap();
        assert_eq!(
            f.factors(),
            &[(fp(2, &[1, 1, 1]), 1), (fp(2, &[1, 0, 1, 1]), 1)]
        );
    }

    #[test]
    fn inseparable_power_is_handled() {
        // (x^2 + 1)^3 = x^6 + 1 over F_3 has zero derivative
        let base = fp(3, &[1, 0, 1]);
        assert_eq!(base.pow(3), fp(3, &[1, 0, 0, 0, 0, 0, 1]));
        let f = factor_mod_p(&base.pow(3), 3).unwrap();
        assert_eq!(f.factors(), &[(base.clone(), 3)]);
        let g = factor_mod_p(&(&base.pow(3) * &fp(3, &[1, 1]).pow(2)), 3).unwrap();
        assert_eq!(g.factors(), &[(fp(3, &[1, 1]), 2), (base, 3)]);
    }

    #[test]
    fn factors_are_irreducible_and_reconstruct() {
        let cases = [
            fp(7, &[3, 1, 4, 1, 5, 2, 6, 1]),
            fp(2, &[1, 1, 0, 0, 1, 0, 1, 1, 0, 1]),
            fp(3, &[2, 0, 1, 1, 2, 0, 0, 1]),
            fp(11, &[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        ];
        for (i, c) in cases.iter().enumerate() {
            let f = factor_mod_p(c, i as u64).unwrap();
            assert_eq!(&f.expand(), c);
            for (g, _) in f.factors() {
                assert!(brute_irreducible(g), "{g} reducible");
            }
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(factor_mod_p(&fp(5, &[]), 0).unwrap_err(), Error::ZeroPolynomial);
    }
}
