//! Integer polynomials, Hensel lifting and Zassenhaus recombination.
//!
//! Everything here works on monic squarefree integer polynomials; the caller
//! in `qfactor` reduces the general rational case to that one.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exact_poly::{small_primes, Polynomial, PrimeField};

use super::modp;

/// Dense integer polynomial, constant term first, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients moved into `(-m/2, m/2]`.
fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half: BigInt = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub(crate) fn to_fp(a: &[BigInt], field: PrimeField) -> Polynomial<PrimeField> {
    Polynomial::new(field, a.iter().map(|c| field.from_bigint(c)).collect())
}

fn from_fp(a: &Polynomial<PrimeField>) -> ZPoly {
    a.coeffs().iter().map(|c| BigInt::from(c.value())).collect()
}

/// Exact division by a monic integer polynomial; `None` if it leaves a remainder.
pub(crate) fn zdiv_monic(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() < b.len() {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (db..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[k - db + j] -= &c * bc;
        }
        quot[k - db] = c;
    }
    rem[..db].iter().all(Zero::is_zero).then(|| trim(quot))
}

/// Lifts `f ≡ g·h (mod p)` to `f ≡ G·H (mod p^k)` with `G`, `H` monic.
fn lift_pair(
    f: &[BigInt],
    g: &Polynomial<PrimeField>,
    h: &Polynomial<PrimeField>,
    k: u32,
) -> Result<(ZPoly, ZPoly)> {
    let field = *g.field();
    let p = BigInt::from(field.modulus());
    let (one, s, t) = g.xgcd(h)?;
    if !one.is_one() {
        return Err(Error::soundness("Hensel factors are not coprime mod p"));
    }
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let mut pj = p.clone();
    for _ in 1..k {
        let diff = zsub(f, &zmul(&big_g, &big_h));
        let e: ZPoly = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, field);
        let dg = t.try_mul(&e)?.rem(g)?;
        let dh = s.try_mul(&e)?.rem(h)?;
        for (i, c) in dg.coeffs().iter().enumerate() {
            big_g[i] += &pj * c.value();
        }
        for (i, c) in dh.coeffs().iter().enumerate() {
            big_h[i] += &pj * c.value();
        }
        pj *= &p;
    }
    Ok((big_g, big_h))
}

/// Multifactor lifting along a balanced split tree.
fn lift_all(f: &[BigInt], factors: &[Polynomial<PrimeField>], k: u32) -> Result<Vec<ZPoly>> {
    if factors.len() == 1 {
        let m = BigInt::from(factors[0].field().modulus()).pow(k);
        return Ok(vec![zmod(f, &m)]);
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Polynomial<PrimeField>]| {
        fs.iter()
            .skip(1)
            .fold(fs[0].clone(), |acc, x| &acc * x)
    };
    let (g, h) = lift_pair(f, &prod(left), &prod(right), k)?;
    let mut out = lift_all(&g, left, k)?;
    out.extend(lift_all(&h, right, k)?);
    Ok(out)
}

fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Irreducible monic factors of a monic squarefree integer polynomial.
pub(crate) fn factor_monic_squarefree(f: &[BigInt], config: &Config) -> Result<Vec<ZPoly>> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.to_vec()]);
    }
    // Candidate primes: f mod p must stay squarefree. Inspect several and keep
    // the one with the fewest modular factors to bound recombination work.
    let mut allowed = vec![true; n + 1];
    let mut best: Option<(usize, PrimeField)> = None;
    let mut good = 0;
    for p in small_primes(5000) {
        let field = PrimeField::new(p)?;
        let fp = to_fp(f, field);
        let Some(pattern) = modp::degree_pattern(&fp)? else {
            continue;
        };
        good += 1;
        if pattern.len() == 1 {
            return Ok(vec![f.to_vec()]);
        }
        let reach = subset_sums(&pattern, n);
        for (a, r) in allowed.iter_mut().zip(reach) {
            *a &= r;
        }
        if (1..n).all(|d| !allowed[d]) {
            return Ok(vec![f.to_vec()]);
        }
        if best.map_or(true, |(count, _)| pattern.len() < count) {
            best = Some((pattern.len(), field));
        }
        if good >= config.trial_primes {
            break;
        }
    }
    let (_, field) = best.ok_or_else(|| Error::soundness("no good prime below 5000"))?;
    let modular = modp::factor_mod_p(&to_fp(f, field), config.seed)?;
    let mod_factors: Vec<_> = modular.factors().iter().map(|(g, _)| g.clone()).collect();

    // Landau–Mignotte: any factor has coefficients below 2^n * ||f||_2.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (norm2.sqrt() + 1u32) << n;
    let p = BigInt::from(field.modulus());
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= &bound * 2u32 {
        pk *= &p;
        k += 1;
    }
    let lifted = lift_all(f, &mod_factors, k)?;
    Ok(recombine(f.to_vec(), lifted, &pk, &allowed))
}

/// `a / m` as a float in `[0, 1)`, for `0 <= a < m`.
fn fraction(a: &BigInt, m: &BigInt) -> f64 {
    let scaled: BigInt = (a << 64u32) / m;
    scaled.to_f64().unwrap_or(0.0) / 2f64.powi(64)
}

/// Power sums `p_1, …, p_count` of the roots of a monic polynomial, modulo `m`.
fn power_sums(g: &[BigInt], count: usize, m: &BigInt) -> Vec<BigInt> {
    let d = g.len() - 1;
    // c(i) is the coefficient of x^(d - i)
    let c = |i: usize| if i <= d { g[d - i].clone() } else { BigInt::zero() };
    let mut p: Vec<BigInt> = Vec::with_capacity(count);
    for k in 1..=count {
        let mut acc = c(k) * k;
        for i in 1..k {
            acc += c(i) * &p[k - i - 1];
        }
        p.push((-acc).mod_floor(m));
    }
    p
}

/// Upper bound on `log2` of the root moduli of a monic polynomial (Fujiwara).
fn root_bound_log2(f: &[BigInt]) -> f64 {
    let n = f.len() - 1;
    let worst = (1..=n)
        .map(|i| f[n - i].bits() as f64 / i as f64)
        .fold(0.0, f64::max);
    1.0 + worst
}

/// Zassenhaus subset recombination of lifted modular factors.
///
/// Power sums of roots add up over a product, and for a true factor of
/// degree `d` the `k`-th one is at most `d·B^k` for a root bound `B`. A
/// subset whose summed power sums are not small modulo `p^k` is rejected in
/// floating point, with a generous margin, before any multiplication.
fn recombine(mut f: ZPoly, mut pool: Vec<ZPoly>, pk: &BigInt, allowed: &[bool]) -> Vec<ZPoly> {
    const SUMS: usize = 4;
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let log_b = root_bound_log2(&f);
        let log_pk = pk.bits() as f64 - 1.0;
        // only power sums whose bound is far below p^k discriminate
        let usable = (1..=SUMS)
            .take_while(|&k| (f.len() as f64).log2() + k as f64 * log_b < log_pk - 20.0)
            .count();
        let sums: Vec<Vec<f64>> = pool
            .iter()
            .map(|g| power_sums(g, usable, pk).iter().map(|x| fraction(x, pk)).collect())
            .collect();
        let slack = |k: usize, d: usize| ((d as f64).log2() + k as f64 * log_b - log_pk).exp2() + 1e-9;
        // a subset of exactly half the pool and its complement are the same split
        let halves = 2 * size == pool.len();
        let mut hit = None;
        for combo in (0..pool.len()).combinations(size) {
            if halves && combo[0] != 0 {
                break;
            }
            let deg: usize = combo.iter().map(|&i| pool[i].len() - 1).sum();
            if !allowed[deg] {
                continue;
            }
            let far = (0..usable).any(|k| {
                let sum: f64 = combo.iter().map(|&i| sums[i][k]).sum();
                let frac = sum - sum.floor();
                frac.min(1.0 - frac) > slack(k + 1, deg)
            });
            if far {
                continue;
            }
            let f0 = &f[0];
            let c0 = combo
                .iter()
                .fold(BigInt::one(), |acc, &i| (acc * &pool[i][0]).mod_floor(pk));
            let c0 = symmetric(&[c0], pk).first().cloned().unwrap_or_default();
            if !f0.is_zero() && (c0.is_zero() || !(f0 % &c0).is_zero()) {
                continue;
            }
            let g = combo
                .iter()
                .fold(vec![BigInt::one()], |acc, &i| zmod(&zmul(&acc, &pool[i]), pk));
            let g = symmetric(&g, pk);
            if let Some(q) = zdiv_monic(&f, &g) {
                hit = Some((combo, g, q));
                break;
            }
        }
        match hit {
            Some((combo, g, q)) => {
                found.push(g);
                f = q;
                for &i in combo.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(f);
    }
    found
}
