//! Trager's algorithm: factor over `K = ℚ(θ)` by factoring a norm over ℚ.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::Config;
use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{
    denominator_lcm, integer_resultant, norm_squarefree_hint, small_primes, Field, Polynomial, Rational, Rationals,
};
use crate::qfactor::{factor_over_q, factor_squarefree_monic, squarefree_mod_p, Factorization};

use super::field::{FieldElement, NumberField};

/// Complete factorization of a nonzero polynomial over a number field.
pub fn factor_over_number_field(
    p: &Polynomial<NumberField>,
    config: &Config,
) -> Result<Factorization<NumberField>> {
    let k = p.field().clone();
    let unit = p.lc().cloned().ok_or(Error::ZeroPolynomial)?;
    if k.degree() == 1 {
        let as_q = p.map(Rationals, |c| c.coeff(0));
        let f = factor_over_q(&as_q, config)?;
        let factors = f
            .factors()
            .iter()
            .map(|(g, m)| (k.lift_poly(g), *m))
            .collect();
        return Ok(Factorization::new(k, unit, factors));
    }
    let mut factors = Vec::new();
    for (part, mult) in p.monic().squarefree_decomposition()? {
        for g in factor_squarefree(&part, config)? {
            factors.push((g, mult));
        }
    }
    Ok(Factorization::new(k, unit, factors))
}

/// Monic irreducible factors of a monic squarefree polynomial over `K`.
pub(crate) fn factor_squarefree(
    g: &Polynomial<NumberField>,
    config: &Config,
) -> Result<Vec<Polynomial<NumberField>>> {
    if g.deg() <= 1 {
        return Ok(vec![g.clone()]);
    }
    let k = g.field().clone();
    let theta = k.theta();
    let bound = config.primitive_search_bound;
    let shifts = std::iter::once(0).chain((1..=bound).flat_map(|s| [s, -s]));
    // with rational coefficients the unshifted norm is g^[K:ℚ], never squarefree
    let rational = g.coeffs().iter().all(|c| c.as_rational().is_some());
    for s in shifts.skip(usize::from(rational)) {
        // g_s(x) = g(x - sθ)
        let sub = Polynomial::new(k.clone(), vec![-&theta.scale(&Rational::from_integer(s.into())), k.one()]);
        let gs = g.compose(&sub)?;
        let hint = {
            let rows: Vec<(&[BigInt], &BigInt)> = gs.coeffs().iter().map(|c| (c.numerators(), c.denominator())).collect();
            norm_squarefree_hint(k.integral(), &rows)
        };
        if hint == Some(false) {
            continue;
        }
        let norm = norm(&gs)?;
        if hint.is_none() && !certainly_squarefree(&norm)? {
            continue;
        }
        let parts = factor_squarefree_monic(&norm, config)?;
        if parts.len() == 1 {
            return Ok(vec![g.clone()]);
        }
        let back = Polynomial::new(k.clone(), vec![theta.scale(&Rational::from_integer(s.into())), k.one()]);
        let mut out = Vec::with_capacity(parts.len());
        for n in parts {
            let h = gs.gcd(&k.lift_poly(&n))?;
            ensure_sound!(h.deg() >= 1, "norm factor shares no factor with the shifted polynomial");
            out.push(h.compose(&back)?);
        }
        let total: usize = out.iter().map(Polynomial::deg).sum();
        ensure_sound!(total == g.deg(), "factor degrees do not add up");
        return Ok(out);
    }
    Err(Error::PrimitiveSearchExhausted { bound })
}

/// `N(x) = Res_y(m(y), g(x, y))`, by evaluation at integer points and interpolation.
pub(crate) fn norm(g: &Polynomial<NumberField>) -> Result<Polynomial<Rationals>> {
    let k = g.field();
    let deg = k.degree() * g.deg();
    let xs: Vec<Rational> = (0..=deg as i64).map(|i| Rational::from_integer(i.into())).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for x in &xs {
        let v = g.eval(&k.rational(x.clone()));
        ys.push(element_norm(k, &v));
    }
    let n = interpolate(&xs, &ys);
    ensure_sound!(n.deg() == deg && n.is_monic(), "norm has unexpected shape");
    Ok(n)
}

/// `N_{K/ℚ}(a) = Res(m, r)` where `a = r(θ)`.
///
/// With `a = s(θ)/D` for an integer polynomial `s` and `M = L·m` integral,
/// `Res(m, r) = Res(M, s) / (L^deg s · D^deg m)`.
pub(crate) fn element_norm(k: &NumberField, a: &FieldElement) -> Rational {
    if a.is_zero() {
        return Rational::zero();
    }
    let big_m = k.integral();
    let mut s = a.numerators().to_vec();
    while s.last().is_some_and(Zero::is_zero) {
        s.pop();
    }
    let l = &big_m[big_m.len() - 1];
    let scale = num_traits::pow(l.clone(), s.len() - 1) * num_traits::pow(a.denominator().clone(), k.degree());
    Rational::new(integer_resultant(big_m, &s), scale)
}

/// Newton interpolation through distinct points.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial<Rationals> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Polynomial::zero(Rationals);
    for i in (0..n).rev() {
        let factor = Polynomial::new(Rationals, vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &factor) + &Polynomial::constant(Rationals, coef[i].clone());
    }
    acc
}

/// Squarefree test that first tries a few small primes (a degree-preserving
/// squarefree reduction certifies squarefreeness over ℚ) and only then falls
/// back to an exact gcd.
fn certainly_squarefree(n: &Polynomial<Rationals>) -> Result<bool> {
    let d = denominator_lcm(n.coeffs());
    let zs: Vec<BigInt> = n
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(d.clone())).to_integer())
        .collect();
    if small_primes(200).into_iter().take(12).any(|p| squarefree_mod_p(&zs, p)) {
        return Ok(true);
    }
    n.is_squarefree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::tower::linear;

    fn q(cs: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, cs)
    }

    fn simple(cs: &[i64], name: &str) -> NumberField {
        NumberField::simple(&q(cs), name).unwrap()
    }

    #[test]
    fn x2_minus_2_splits_over_sqrt2() {
        let k = simple(&[-2, 0, 1], "a");
        let a = k.generator("a").unwrap();
        let f = factor_over_number_field(&k.lift_poly(&q(&[-2, 0, 1])), &Config::default()).unwrap();
        let want = vec![(linear(&a), 1), (linear(&-&a), 1)];
        let mut got = f.factors().to_vec();
        got.sort_by(|x, y| x.0.cmp_canonical(&y.0));
        let mut want = want;
        want.sort_by(|x, y| x.0.cmp_canonical(&y.0));
        assert_eq!(got, want);
    }

    #[test]
    fn x2_minus_3_stays_irreducible_over_sqrt2() {
        let k = simple(&[-2, 0, 1], "a");
        let f = factor_over_number_field(&k.lift_poly(&q(&[-3, 0, 1])), &Config::default()).unwrap();
        assert!(f.is_irreducible());
        // independent check: (u + v√2)^2 = 3 forces uv = 0, u^2 = 3 or 2v^2 = 3
        for num in -12i64..=12 {
            for den in 1i64..=6 {
                let r = Rational::new(num.into(), den.into());
                assert_ne!(&r * &r, Rational::from_integer(3.into()));
                assert_ne!(&r * &r * Rational::from_integer(2.into()), Rational::from_integer(3.into()));
            }
        }
    }

    #[test]
    fn cyclotomic_cubic_roots() {
        let k = simple(&[1, 1, 1], "w");
        let w = k.generator("w").unwrap();
        let f = factor_over_number_field(&k.lift_poly(&q(&[1, 1, 1])), &Config::default()).unwrap();
        let mut want = vec![(linear(&w), 1), (linear(&w.pow(2)), 1)];
        want.sort_by(|x, y| x.0.cmp_canonical(&y.0));
        assert_eq!(f.factors(), want.as_slice());
    }

    #[test]
    fn reconstruction_and_multiplicity() {
        let k = simple(&[-2, 0, 0, 1], "c");
        let c = k.generator("c").unwrap();
        // (x - c)^2 (x^2 + c x + c^2)
        let quad = Polynomial::new(k.clone(), vec![c.pow(2), c.clone(), k.one()]);
        let p = &linear(&c).pow(2) * &quad;
        let f = factor_over_number_field(&p.scale(&k.int(3)), &Config::default()).unwrap();
        assert_eq!(f.expand(), p.scale(&k.int(3)));
        assert_eq!(f.factors(), &[(linear(&c), 2), (quad, 1)]);
    }

    #[test]
    fn norm_of_shifted_quadratic() {
        // over ℚ(√2): N(x^2 - 2) = (x^2 - 2)^2
        let k = simple(&[-2, 0, 1], "a");
        let n = norm(&k.lift_poly(&q(&[-2, 0, 1]))).unwrap();
        assert_eq!(n, q(&[-2, 0, 1]).pow(2));
    }
}
