use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_poly::{denominator_lcm, modular_inverse, Field, Polynomial, Rational, Rationals};

/// A number field presented as `ℚ[t]/(m(t))` for a monic irreducible `m`.
///
/// Besides the defining polynomial it remembers named generators (the
/// elements a tower adjoined, written in the power basis of `t`).
#[derive(Debug)]
pub struct AbsoluteField {
    min_poly: Polynomial<Rationals>,
    /// `L·m` with integer coefficients, `L` the least common denominator.
    integral: Vec<BigInt>,
    theta_name: String,
    generators: Vec<(String, Vec<Rational>)>,
}

impl AbsoluteField {
    /// Assembles a field. The caller guarantees irreducibility of `min_poly`.
    pub(crate) fn from_parts(
        min_poly: Polynomial<Rationals>,
        theta_name: impl Into<String>,
        generators: Vec<(String, Vec<Rational>)>,
    ) -> Self {
        debug_assert!(min_poly.is_monic() && min_poly.deg() >= 1);
        let l = Rational::from_integer(denominator_lcm(min_poly.coeffs()));
        let integral = min_poly.coeffs().iter().map(|c| (c * &l).to_integer()).collect();
        AbsoluteField {
            min_poly,
            integral,
            theta_name: theta_name.into(),
            generators,
        }
    }

    pub fn min_poly(&self) -> &Polynomial<Rationals> {
        &self.min_poly
    }

    /// `[F : ℚ]`.
    pub fn degree(&self) -> usize {
        self.min_poly.deg()
    }

    pub fn theta_name(&self) -> &str {
        &self.theta_name
    }

    /// The defining polynomial scaled to primitive-free integer coefficients.
    pub(crate) fn integral(&self) -> &[BigInt] {
        &self.integral
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|(n, _)| n.as_str())
    }

    /// Reduces `num / den` modulo the defining polynomial, in lowest terms.
    fn reduce(&self, mut num: Vec<BigInt>, mut den: BigInt) -> (Vec<BigInt>, BigInt) {
        let n = self.degree();
        let m = &self.integral;
        let lead = &m[n];
        for k in (n..num.len()).rev() {
            if num[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut num[k]);
            if !lead.is_one() {
                for x in &mut num[..k] {
                    *x *= lead;
                }
                den *= lead;
            }
            for (j, mj) in m[..n].iter().enumerate() {
                if !mj.is_zero() {
                    num[k - n + j] -= &c * mj;
                }
            }
        }
        num.truncate(n);
        num.resize(n, BigInt::zero());
        normalize(num, den)
    }
}

fn normalize(mut num: Vec<BigInt>, mut den: BigInt) -> (Vec<BigInt>, BigInt) {
    debug_assert!(!den.is_zero());
    if num.iter().all(Zero::is_zero) {
        return (num, BigInt::one());
    }
    let g = num.iter().fold(den.clone(), |acc, x| acc.gcd(x));
    if !g.is_one() {
        for x in &mut num {
            *x /= &g;
        }
        den /= &g;
    }
    if den.is_negative() {
        for x in &mut num {
            *x = -&*x;
        }
        den = -den;
    }
    (num, den)
}

/// Shared handle to an [`AbsoluteField`]; this is the coefficient field type
/// for polynomials over number fields.
#[derive(Clone, Debug)]
pub struct NumberField(Arc<AbsoluteField>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.min_poly == other.0.min_poly
    }
}

impl std::ops::Deref for NumberField {
    type Target = AbsoluteField;
    fn deref(&self) -> &AbsoluteField {
        &self.0
    }
}

impl NumberField {
    pub fn new(field: AbsoluteField) -> Self {
        NumberField(Arc::new(field))
    }

    /// ℚ itself, as the degree-one field `ℚ[t]/(t - 1)`.
    pub fn rationals() -> Self {
        NumberField::new(AbsoluteField::from_parts(
            Polynomial::from_i64s(Rationals, &[-1, 1]),
            "t",
            Vec::new(),
        ))
    }

    /// A single-generator field `ℚ[name]/(m)`. `m` must be irreducible; it is
    /// made monic here.
    pub fn simple(m: &Polynomial<Rationals>, name: &str) -> Result<Self> {
        if m.degree().unwrap_or(0) == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let m = m.monic();
        let n = m.deg();
        let mut gen = vec![Rational::zero(); n];
        if n == 1 {
            gen[0] = -m.coeff(0);
        } else {
            gen[1] = Rational::one();
        }
        Ok(NumberField::new(AbsoluteField::from_parts(
            m,
            name,
            vec![(name.to_string(), gen)],
        )))
    }

    /// The element `Σ coeffs[i]·tⁱ`; longer vectors are reduced.
    pub fn elem(&self, coeffs: Vec<Rational>) -> FieldElement {
        let den = denominator_lcm(&coeffs);
        let d = Rational::from_integer(den.clone());
        let num = coeffs.iter().map(|c| (c * &d).to_integer()).collect();
        self.from_integers(num, den)
    }

    /// The element `(Σ num[i]·tⁱ) / den`.
    pub(crate) fn from_integers(&self, num: Vec<BigInt>, den: BigInt) -> FieldElement {
        let (num, den) = self.reduce(num, den);
        FieldElement {
            field: self.clone(),
            num,
            den,
        }
    }

    pub fn rational(&self, q: Rational) -> FieldElement {
        self.elem(vec![q])
    }

    pub fn int(&self, n: i64) -> FieldElement {
        self.rational(Rational::from_integer(n.into()))
    }

    /// The primitive element `t`.
    pub fn theta(&self) -> FieldElement {
        if self.degree() == 1 {
            return self.one();
        }
        self.elem(vec![Rational::zero(), Rational::one()])
    }

    /// The named generator, if the field has one by that name.
    pub fn generator(&self, name: &str) -> Option<FieldElement> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| self.elem(v.clone()))
    }

    pub fn generators(&self) -> Vec<(String, FieldElement)> {
        self.generators
            .iter()
            .map(|(n, v)| (n.clone(), self.elem(v.clone())))
            .collect()
    }

    /// Interprets a rational polynomial as an element via `t ↦ θ`.
    pub fn from_poly(&self, p: &Polynomial<Rationals>) -> FieldElement {
        self.elem(p.coeffs().to_vec())
    }

    /// Embeds a rational polynomial as a polynomial over this field.
    pub fn lift_poly(&self, p: &Polynomial<Rationals>) -> Polynomial<NumberField> {
        p.map(self.clone(), |c| self.rational(c.clone()))
    }

    pub fn same(&self, other: &NumberField) -> bool {
        self == other
    }

    fn check(&self, e: &FieldElement) -> Result<()> {
        if self.same(&e.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

/// An element of a number field: integer coefficients over a common positive
/// denominator in the power basis `1, t, …, t^(n-1)`, always in lowest terms.
#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Rational coefficients in the power basis.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|x| Rational::new(x.clone(), self.den.clone()))
            .collect()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// The residue polynomial `r` with `self = r(t)`.
    pub fn to_poly(&self) -> Polynomial<Rationals> {
        Polynomial::new(Rationals, self.coeffs())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element is the rational number `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.num[1..].iter().all(Zero::is_zero).then(|| self.coeff(0))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.field.check(rhs)?;
        Ok(self.combine(rhs, false))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.field.check(rhs)?;
        Ok(self.combine(rhs, true))
    }

    fn combine(&self, rhs: &Self, subtract: bool) -> Self {
        let num = if self.den == rhs.den {
            self.num
                .iter()
                .zip(&rhs.num)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&rhs.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &rhs.den, b * &self.den);
                    if subtract {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect()
        };
        let den = if self.den == rhs.den {
            self.den.clone()
        } else {
            &self.den * &rhs.den
        };
        let (num, den) = normalize(num, den);
        FieldElement {
            field: self.field.clone(),
            num,
            den,
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.field.check(rhs)?;
        let n = self.num.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(self.field.from_integers(prod, &self.den * &rhs.den))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|x| x * q.numer()).collect();
        let (num, den) = normalize(num, &self.den * q.denom());
        FieldElement {
            field: self.field.clone(),
            num,
            den,
        }
    }

    /// Inverse via extended Euclid against the defining polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.rational(q.recip()));
        }
        // a = s/D, so a⁻¹ = D·s⁻¹; candidates are confirmed by one multiplication
        let den = Rational::from_integer(self.den.clone());
        let lifted = modular_inverse(&self.num, self.field.integral(), |c| {
            (self * &self.field.elem(c.to_vec()).scale(&den)).is_one()
        });
        if let Some(c) = lifted {
            return Ok(self.field.elem(c).scale(&den));
        }
        let (g, s, _) = self.to_poly().xgcd(&self.field.min_poly)?;
        if g.deg() != 0 {
            return Err(Error::soundness("defining polynomial is reducible"));
        }
        Ok(self.field.from_poly(&s))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(&rhs.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Canonical order: lexicographic on rational coefficient vectors from
    /// the constant term.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        for (a, b) in self.num.iter().zip(&other.num) {
            match (a * &other.den).cmp(&(b * &self.den)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_poly().display_with(&self.field.theta_name), f)
    }
}

macro_rules! elem_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$inner(rhs).expect("field elements from different fields")
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

elem_op!(Add, add, try_add);
elem_op!(Sub, sub, try_sub);
elem_op!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Field for NumberField {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        self.elem(Vec::new())
    }
    fn one(&self) -> FieldElement {
        self.int(1)
    }
    fn from_i64(&self, n: i64) -> FieldElement {
        self.int(n)
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a - b
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        -a
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a * b
    }
    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        a.inv().ok()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn cmp_elem(&self, a: &FieldElement, b: &FieldElement) -> Ordering {
        a.cmp_canonical(b)
    }
    fn fmt_elem(&self, a: &FieldElement, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
    fn is_one(&self, a: &FieldElement) -> bool {
        a.is_one()
    }
    fn is_atomic(&self, a: &FieldElement) -> bool {
        let mut terms = a.num.iter().filter(|c| !c.is_zero());
        match (terms.next(), terms.next()) {
            (None, _) => true,
            (Some(c), None) => !c.is_negative(),
            _ => false,
        }
    }
}

/// Evaluates a rational polynomial at a field element.
pub fn eval_rational(p: &Polynomial<Rationals>, at: &FieldElement) -> FieldElement {
    let field = at.field();
    p.coeffs()
        .iter()
        .rev()
        .fold(field.zero(), |acc, c| &(&acc * at) + &field.rational(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::int;

    fn sqrt2() -> NumberField {
        NumberField::simple(&Polynomial::from_i64s(Rationals, &[-2, 0, 1]), "a").unwrap()
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let k = sqrt2();
        let a = k.generator("a").unwrap();
        let x = &k.one() + &a;
        let inv = x.inv().unwrap();
        assert_eq!(inv, &a - &k.one());
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn cube_root_relation() {
        let k = NumberField::simple(&Polynomial::from_i64s(Rationals, &[-2, 0, 0, 1]), "c").unwrap();
        let c = k.generator("c").unwrap();
        assert_eq!(c.pow(3), k.int(2));
        assert_eq!(c.powi(-1).unwrap(), c.pow(2).scale(&crate::exact_poly::rat(1, 2)));
    }

    #[test]
    fn zero_has_no_inverse_and_fields_do_not_mix() {
        let k = sqrt2();
        assert_eq!(k.zero().inv(), Err(Error::ZeroInverse));
        let other = NumberField::simple(&Polynomial::from_i64s(Rationals, &[-3, 0, 1]), "b").unwrap();
        assert_eq!(k.one().try_add(&other.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn rationals_as_degree_one_field() {
        let q = NumberField::rationals();
        assert_eq!(q.degree(), 1);
        assert_eq!(q.theta(), q.one());
        assert_eq!((&q.int(3) * &q.int(4)).as_rational(), Some(int(12)));
    }

    #[test]
    fn display_uses_generator_name() {
        let k = sqrt2();
        let a = k.generator("a").unwrap();
        assert_eq!((&a.scale(&int(-2)) + &k.int(3)).to_string(), "-2*a + 3");
    }
}
