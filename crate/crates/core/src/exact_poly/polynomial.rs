use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::Field;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list and `lc()` is nonzero whenever it exists.
#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl<F: Field> Polynomial<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Polynomial::new(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Polynomial::new(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: F) -> Self {
        Self::monomial(field.clone(), field.one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(field, coeffs)
    }

    /// Builds a polynomial from small integer coefficients, constant term first.
    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Polynomial::new(field, cs)
    }

    /// `x - a`.
    pub fn linear_root(field: F, a: &F::Elem) -> Self {
        let one = field.one();
        let c = field.neg(a);
        Polynomial::new(field, vec![c, one])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the end).
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for loop bounds.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| self.field.is_one(c))
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        let cs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Polynomial::new(f.clone(), cs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        let cs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.sub(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => f.neg(b),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Polynomial::new(f.clone(), cs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut cs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = f.mul(a, b);
                cs[i + j] = f.add(&cs[i + j], &t);
            }
        }
        Ok(Polynomial::new(f.clone(), cs))
    }

    pub fn neg(&self) -> Self {
        let cs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Polynomial {
            field: self.field.clone(),
            coeffs: cs,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let cs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Polynomial::new(self.field.clone(), cs)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut cs = vec![self.field.zero(); k];
        cs.extend(self.coeffs.iter().cloned());
        Polynomial {
            field: self.field.clone(),
            coeffs: cs,
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let dlc = divisor.lc().ok_or(Error::DivisionByZero)?;
        let dlc_inv = f.inv(dlc).expect("leading coefficient is nonzero");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Polynomial::zero(f.clone()), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if f.is_zero(&rem[k]) {
                continue;
            }
            let c = f.mul(&rem[k], &dlc_inv);
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&c, dc);
                rem[k - dd + j] = f.sub(&rem[k - dd + j], &t);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(f.clone(), quot), Polynomial::new(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Division that must be exact; a nonzero remainder is reported as a soundness failure.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::soundness("expected exact polynomial division"));
        }
        Ok(q)
    }

    /// Scales to leading coefficient one. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) => {
                let inv = self.field.inv(c).expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        Polynomial::new(f.clone(), cs)
    }

    /// Horner evaluation at a point of the coefficient field.
    pub fn eval(&self, at: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, at), c))
    }

    /// Substitution `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut acc = Polynomial::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(other)?;
            acc = acc.try_add(&Polynomial::constant(self.field.clone(), c.clone()))?;
        }
        Ok(acc)
    }

    /// `self(x^k)`: spreads coefficients `k` apart.
    pub fn compose_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("exponent k must be at least 1"));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut cs = vec![self.field.zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            cs[i * k] = c.clone();
        }
        Ok(Polynomial::new(self.field.clone(), cs))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(self.field.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        // monic remainders keep coefficient growth in check over number fields
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b)?.monic();
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(f.clone()), Polynomial::zero(f.clone()));
        let (mut t0, mut t1) = (Polynomial::zero(f.clone()), Polynomial::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.try_sub(&q.try_mul(&s1)?)?;
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.try_sub(&q.try_mul(&t1)?)?;
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = f.inv(r0.lc().expect("nonzero gcd")).expect("nonzero");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// `p / gcd(p, p')`, made monic. Characteristic-zero fields only.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.deg() == 0 {
            return Ok(Polynomial::one(self.field.clone()));
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `(a_i, i)` with
    /// `monic(self) = ∏ a_i^i`. Characteristic-zero fields only.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        debug_assert_eq!(self.field.characteristic(), 0);
        let mut out = Vec::new();
        if self.deg() == 0 {
            return Ok(out);
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp)?;
        let mut b = f.exact_div(&a0)?;
        let mut c = fp.exact_div(&a0)?;
        let mut d = c.try_sub(&b.derivative())?;
        let mut i = 1;
        loop {
            let a = b.gcd(&d)?;
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            if a.deg() > 0 {
                out.push((a, i));
            }
            if b.deg() == 0 {
                break;
            }
            d = c.try_sub(&b.derivative())?;
            i += 1;
        }
        Ok(out)
    }

    /// Resultant with the Sylvester-matrix sign convention:
    /// `res(p, q) = lc(p)^deg(q) * ∏ q(α)` over the roots α of p.
    pub fn resultant(&self, other: &Self) -> Result<F::Elem> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = &self.field;
        let mut acc = f.one();
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            let (da, db) = (a.deg(), b.deg());
            let lcb = b.lc().expect("nonzero").clone();
            if db == 0 {
                return Ok(f.mul(&acc, &f.pow(&lcb, da as u64)));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(f.zero());
            }
            let dr = r.deg();
            if (da * db) % 2 == 1 {
                acc = f.neg(&acc);
            }
            acc = f.mul(&acc, &f.pow(&lcb, (da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// Discriminant-free squarefree test: `gcd(p, p') = 1`.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative())?.deg() == 0)
    }

    /// Moves every coefficient into another field.
    pub fn map<G: Field>(&self, target: G, mut f: impl FnMut(&F::Elem) -> G::Elem) -> Polynomial<G> {
        let cs = self.coeffs.iter().map(&mut f).collect();
        Polynomial::new(target, cs)
    }

    /// Canonical order: by degree, then coefficient-wise from the constant term.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                match self.field.cmp_elem(a, b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Renders with a chosen variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Named { poly: self, var }
    }
}

/// `base^exp mod modulus`, with a big exponent.
pub fn pow_mod<F: Field>(
    base: &Polynomial<F>,
    exp: &BigUint,
    modulus: &Polynomial<F>,
) -> Result<Polynomial<F>> {
    let mut result = Polynomial::one(base.field().clone()).rem(modulus)?;
    if exp.is_zero() {
        return Ok(result);
    }
    let b = base.rem(modulus)?;
    for i in (0..exp.bits()).rev() {
        result = result.try_mul(&result)?.rem(modulus)?;
        if exp.bit(i) {
            result = result.try_mul(&b)?.rem(modulus)?;
        }
    }
    Ok(result)
}

struct Named<'a, F: Field> {
    poly: &'a Polynomial<F>,
    var: &'a str,
}

struct ElemFmt<'a, F: Field>(&'a F, &'a F::Elem);

impl<F: Field> fmt::Display for ElemFmt<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_elem(self.1, f)
    }
}

impl<F: Field> fmt::Display for Named<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.poly;
        let field = &p.field;
        if p.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in p.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let negated = field.neg(c);
            // print "a - b" rather than "a + -b" whenever the negation is simpler
            let (negative, mag) = if field.is_atomic(&negated) && !field.is_atomic(c) {
                (true, negated)
            } else {
                (false, c.clone())
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = field.is_one(&mag);
            if k == 0 {
                write!(f, "{}", ElemFmt(field, &mag))?;
                continue;
            }
            if !unit {
                if field.is_atomic(&mag) {
                    write!(f, "{}*", ElemFmt(field, &mag))?;
                } else {
                    write!(f, "({})*", ElemFmt(field, &mag))?;
                }
            }
            if k == 1 {
                write!(f, "{}", self.var)?;
            } else {
                write!(f, "{}^{}", self.var, k)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display_with("x"), f)
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<F: Field> $tr for &Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics if the operands live over different fields.
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                self.$inner(rhs).expect("polynomial operands over different fields")
            }
        }
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::{int, rat, PrimeField, Rational, Rationals};

    fn q(cs: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, cs)
    }

    /// Sylvester determinant by fraction-exact cofactor-free elimination; an
    /// oracle independent of the Euclidean resultant.
    fn sylvester(p: &Polynomial<Rationals>, r: &Polynomial<Rationals>) -> Rational {
        let (n, m) = (p.deg(), r.deg());
        let size = n + m;
        let mut mat = vec![vec![int(0); size]; size];
        for i in 0..m {
            for (j, c) in p.coeffs().iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..n {
            for (j, c) in r.coeffs().iter().rev().enumerate() {
                mat[m + i][i + j] = c.clone();
            }
        }
        let mut det = int(1);
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
                return int(0);
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            det *= mat[col][col].clone();
            for row in col + 1..size {
                let factor = &mat[row][col] / &mat[col][col];
                for k in col..size {
                    let t = &factor * &mat[col][k];
                    mat[row][k] -= t;
                }
            }
        }
        det
    }

    #[test]
    fn divrem_examples() {
        let (quo, r) = q(&[-1, 0, 1]).div_rem(&q(&[-1, 1])).unwrap();
        assert_eq!((quo, r), (q(&[1, 1]), q(&[])));
        assert_eq!(&q(&[1, 0, 1]) * &q(&[-1, 0, 1]), q(&[-1, 0, 0, 0, 1]));
        // x^3 + 2x + 5 = x (x^2 + 1) + (x + 5)
        let a = q(&[5, 2, 0, 1]);
        let b = q(&[1, 0, 1]);
        let (quo, r) = a.div_rem(&b).unwrap();
        assert_eq!(quo, q(&[0, 1]));
        assert_eq!(r, q(&[5, 1]));
        assert_eq!(&(&b * &quo) + &r, a);
    }

    #[test]
    fn division_by_zero_and_field_mismatch() {
        assert_eq!(q(&[1, 1]).div_rem(&q(&[])), Err(Error::DivisionByZero));
        let f5 = PrimeField::new(5).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        let a = Polynomial::from_i64s(f5, &[1, 1]);
        let b = Polynomial::from_i64s(f7, &[1, 1]);
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.div_rem(&b).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn gcd_examples() {
        // x^2-1 = (x-1)(x+1), x^3-1 = (x-1)(x^2+x+1): only x-1 is shared
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 0, 0, 1])).unwrap(), q(&[-1, 1]));
        assert_eq!(q(&[4, 0, 2]).gcd(&q(&[])).unwrap(), q(&[2, 0, 1]));
        assert_eq!(q(&[1, 0, 1]).gcd(&q(&[1, 0, 1])).unwrap(), q(&[1, 0, 1]));
        assert_eq!(q(&[]).gcd(&q(&[])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_examples() {
        let p = &q(&[-1, 1]).pow(2) * &q(&[2, 1]);
        assert_eq!(p.squarefree_part().unwrap(), &q(&[-1, 1]) * &q(&[2, 1]));
        assert_eq!(q(&[-2, 0, 1]).squarefree_part().unwrap(), q(&[-2, 0, 1]));
        let g = q(&[1, 0, 0, -2, 0, 0, 1]).squarefree_part().unwrap();
        assert_eq!(g, q(&[-1, 0, 0, 1]));
        assert_eq!(g.gcd(&g.derivative()).unwrap(), q(&[1]));
        assert_eq!(q(&[]).squarefree_part(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let p = &(&q(&[-1, 1]).pow(3) * &q(&[2, 1]).pow(2)) * &q(&[1, 0, 1]);
        let dec = p.squarefree_decomposition().unwrap();
        assert_eq!(
            dec,
            vec![(q(&[1, 0, 1]), 1), (q(&[2, 1]), 2), (q(&[-1, 1]), 3)]
        );
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(q(&[-2, 0, 1]).resultant(&q(&[-3, 0, 1])).unwrap(), int(1));
        assert_eq!(q(&[-2, 0, 1]).resultant(&q(&[-1, 1])).unwrap(), int(-1));
        let cubic = q(&[1, 1, 0, 1]);
        assert_eq!(q(&[-3, 1]).resultant(&cubic).unwrap(), cubic.eval(&int(3)));
        assert_eq!(q(&[-3, 1]).resultant(&cubic).unwrap(), int(31));
        assert_eq!(cubic.resultant(&q(&[-3, 1])).unwrap(), int(-31));
        assert_eq!(q(&[]).resultant(&cubic), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let cases = [
            (q(&[-2, 0, 1]), q(&[-3, 0, 1])),
            (q(&[1, 2, 3, 4]), q(&[5, -1, 2])),
            (q(&[3, 0, 0, 0, 1]), q(&[-1, 7])),
            (q(&[2, -3, 1]), q(&[-1, 1])),
            (q(&[1, 1, 1, 1, 1, 1]), q(&[0, 2, 0, -1])),
        ];
        for (a, b) in cases {
            assert_eq!(a.resultant(&b).unwrap(), sylvester(&a, &b), "{a} vs {b}");
        }
        let half = Polynomial::new(Rationals, vec![rat(1, 2), rat(-3, 4), int(2)]);
        assert_eq!(half.resultant(&q(&[1, 0, 3])).unwrap(), sylvester(&half, &q(&[1, 0, 3])));
    }

    #[test]
    fn compose_power_examples() {
        assert_eq!(q(&[-2, 0, 1]).compose_power(3).unwrap(), q(&[-2, 0, 0, 0, 0, 0, 1]));
        let mut xn = vec![0; 7];
        xn[0] = -1;
        xn[6] = 1;
        assert_eq!(q(&[-1, 1]).compose_power(6).unwrap(), q(&xn));
        assert_eq!(q(&[-1, -2, 1]).compose_power(2).unwrap(), q(&[-1, 0, -2, 0, 1]));
        assert!(q(&[1, 1]).compose_power(0).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(&[1, 0, -10, 0, 1]).to_string(), "x^4 - 10*x^2 + 1");
        assert_eq!(q(&[-1, -1, 0, 0, 0, 1]).to_string(), "x^5 - x - 1");
        assert_eq!(q(&[0, 0, -3]).to_string(), "-3*x^2");
        let h = Polynomial::new(Rationals, vec![rat(-1, 2), rat(3, 2)]);
        assert_eq!(h.to_string(), "3/2*x - 1/2");
        assert_eq!(q(&[]).to_string(), "0");
    }
}
