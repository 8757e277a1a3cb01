use crate::config::Config;
use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{Field, Polynomial, Rational, Rationals};
use crate::linalg::solve_columns;

use super::field::{eval_rational, AbsoluteField, FieldElement, NumberField};
use super::trager::factor_over_number_field;

/// How the primitive element of a stage relates to the one below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitive {
    /// `θᵢ = gᵢ` (first proper stage over ℚ).
    Generator,
    /// `θᵢ = θᵢ₋₁ + c·gᵢ`.
    Shifted(i64),
    /// A degree-one stage: the field does not grow and `θᵢ = θᵢ₋₁`.
    Unchanged,
}

/// One adjunction `Kᵢ = Kᵢ₋₁(gᵢ)` with `poly(gᵢ) = 0`.
#[derive(Clone, Debug)]
pub struct Stage {
    name: String,
    poly: Polynomial<NumberField>,
    field: NumberField,
    primitive: Primitive,
    generator: FieldElement,
    previous_theta: FieldElement,
}

impl Stage {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Monic irreducible polynomial over the previous stage's field.
    pub fn poly(&self) -> &Polynomial<NumberField> {
        &self.poly
    }

    /// `[Kᵢ : Kᵢ₋₁]`.
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    /// The flattened field `Kᵢ`.
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn primitive(&self) -> Primitive {
        self.primitive
    }

    /// `gᵢ` inside `Kᵢ`.
    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    /// `θᵢ₋₁` inside `Kᵢ`.
    pub fn previous_theta(&self) -> &FieldElement {
        &self.previous_theta
    }
}

/// A tower `ℚ = K₀ ⊂ K₁ ⊂ … ⊂ K_m`, each stage flattened to a single
/// primitive element as it is built.
#[derive(Clone, Debug)]
pub struct FieldTower {
    base: NumberField,
    stages: Vec<Stage>,
    /// Image of the primitive element of every level (0..=m) in the top field.
    theta_images: Vec<FieldElement>,
}

impl Default for FieldTower {
    fn default() -> Self {
        Self::rationals()
    }
}

impl FieldTower {
    pub fn rationals() -> Self {
        let base = NumberField::rationals();
        FieldTower {
            theta_images: vec![base.one()],
            base,
            stages: Vec::new(),
        }
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// The top field as an absolute extension of ℚ.
    pub fn top(&self) -> &NumberField {
        self.stages.last().map_or(&self.base, |s| &s.field)
    }

    /// Field at `level` (0 is ℚ).
    pub fn level(&self, level: usize) -> &NumberField {
        if level == 0 {
            &self.base
        } else {
            &self.stages[level - 1].field
        }
    }

    /// `[K_m : ℚ]`, which by construction is the product of stage degrees.
    pub fn degree(&self) -> usize {
        self.top().degree()
    }

    /// Embeds an element of the field at `level` into the top field.
    pub fn embed(&self, level: usize, a: &FieldElement) -> Result<FieldElement> {
        if !self.level(level).same(a.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(eval_rational(&a.to_poly(), &self.theta_images[level]))
    }

    /// Image of level `level`'s primitive element in the top field.
    pub fn theta_image(&self, level: usize) -> &FieldElement {
        &self.theta_images[level]
    }

    /// Adjoins a root of `m`, which must be irreducible over the top field
    /// (checked by factoring). `m` is made monic first.
    pub fn adjoin_root(
        &self,
        m: &Polynomial<NumberField>,
        name: &str,
        config: &Config,
    ) -> Result<FieldTower> {
        if !m.field().same(self.top()) {
            return Err(Error::FieldMismatch);
        }
        match m.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(1) => {}
            Some(_) => {
                self.check_cap(m.deg(), config, name)?;
                if !factor_over_number_field(m, config)?.is_irreducible() {
                    return Err(Error::Reducible);
                }
            }
        }
        self.adjoin_irreducible(m, name, config)
    }

    /// Like [`FieldTower::adjoin_root`] but trusts the caller about irreducibility.
    pub(crate) fn adjoin_irreducible(
        &self,
        m: &Polynomial<NumberField>,
        name: &str,
        config: &Config,
    ) -> Result<FieldTower> {
        let m = m.monic();
        let k = self.top().clone();
        let stage = if m.deg() == 1 {
            Stage {
                name: name.to_string(),
                generator: -m.coeff(0),
                previous_theta: k.theta(),
                primitive: Primitive::Unchanged,
                field: k.clone(),
                poly: m,
            }
        } else {
            self.check_cap(m.deg(), config, name)?;
            flatten(&k, &m, name, config)?
        };
        let mut theta_images: Vec<FieldElement> = self
            .theta_images
            .iter()
            .map(|t| eval_rational(&t.to_poly(), &stage.previous_theta))
            .collect();
        theta_images.push(stage.field.theta());
        let mut stages = self.stages.clone();
        stages.push(stage);
        Ok(FieldTower {
            base: self.base.clone(),
            stages,
            theta_images,
        })
    }

    fn check_cap(&self, step: usize, config: &Config, name: &str) -> Result<()> {
        let required = self.degree() * step;
        if required > config.degree_cap {
            return Err(Error::DegreeCapExceeded {
                required,
                cap: config.degree_cap,
                context: format!("adjoining {name} to a field of degree {}", self.degree()),
            });
        }
        Ok(())
    }
}

/// Element of `K[y]/(m)` written as `Σ cⱼ yʲ` with `cⱼ ∈ K`.
struct Relative<'a> {
    k: &'a NumberField,
    m: &'a Polynomial<NumberField>,
}

impl Relative<'_> {
    /// `v · (θ_K + c·y)`, or `v · y` when `with_theta` is false.
    fn mul_theta_prime(&self, v: &[FieldElement], with_theta: bool, c: i64) -> Vec<FieldElement> {
        let e = v.len();
        // y · v, reduced with y^e = -Σ m_j y^j
        let mut yv = vec![self.k.zero(); e];
        for j in 0..e - 1 {
            yv[j + 1] = v[j].clone();
        }
        let top = &v[e - 1];
        if !top.is_zero() {
            for j in 0..e {
                yv[j] = &yv[j] - &(top * &self.m.coeffs()[j]);
            }
        }
        if !with_theta {
            return yv;
        }
        let theta = self.k.theta();
        let c = self.k.int(c);
        v.iter()
            .zip(&yv)
            .map(|(a, b)| &(a * &theta) + &(b * &c))
            .collect()
    }

    fn flat(&self, v: &[FieldElement]) -> Vec<Rational> {
        v.iter().flat_map(FieldElement::coeffs).collect()
    }
}

/// Builds `K(g)` for a root `g` of the monic irreducible `m` as an absolute
/// field with primitive element `θ_K + c·g` (or `g` when `K = ℚ`).
fn flatten(k: &NumberField, m: &Polynomial<NumberField>, name: &str, config: &Config) -> Result<Stage> {
    let d = k.degree();
    let e = m.deg();
    let total = d * e;
    let rel = Relative { k, m };
    let candidates: Vec<Option<i64>> = if d == 1 {
        vec![None]
    } else {
        (1..=config.primitive_search_bound)
            .flat_map(|c| [Some(c), Some(-c)])
            .collect()
    };
    let mut unit = vec![k.zero(); e];
    unit[0] = k.one();
    for c in candidates {
        let mut power = unit.clone();
        let mut columns = Vec::with_capacity(total);
        for _ in 0..total {
            columns.push(rel.flat(&power));
            power = rel.mul_theta_prime(&power, c.is_some(), c.unwrap_or(1));
        }
        let last: Vec<Rational> = rel.flat(&power).into_iter().map(|x| -x).collect();
        let mut theta_k = vec![k.zero(); e];
        theta_k[0] = k.theta();
        let mut y = vec![k.zero(); e];
        y[1] = k.one();
        // singular exactly when this candidate is not a primitive element
        let Some(sol) = solve_columns(&columns, &[last, rel.flat(&theta_k), rel.flat(&y)]) else {
            continue;
        };
        let mut relation = sol[0].clone();
        relation.push(Rational::from_integer(1.into()));
        let min_poly = Polynomial::new(Rationals, relation);
        ensure_sound!(min_poly.deg() == total && min_poly.is_monic(), "flattening relation has wrong shape");
        let sol = &sol[1..];
        let theta_name = if d == 1 { name.to_string() } else { "t".to_string() };
        let provisional = NumberField::new(AbsoluteField::from_parts(min_poly.clone(), theta_name.clone(), Vec::new()));
        let prev = provisional.elem(sol[0].clone());
        let gen = provisional.elem(sol[1].clone());
        let mut generators: Vec<(String, Vec<Rational>)> = k
            .generators()
            .into_iter()
            .map(|(n, g)| (n, eval_rational(&g.to_poly(), &prev).coeffs()))
            .collect();
        generators.push((name.to_string(), gen.coeffs()));
        let field = NumberField::new(AbsoluteField::from_parts(min_poly, theta_name, generators));
        let previous_theta = field.elem(prev.coeffs());
        let generator = field.elem(gen.coeffs());
        // the defining relation must survive the change of basis
        let image = m.map(field.clone(), |a| eval_rational(&a.to_poly(), &previous_theta));
        ensure_sound!(image.eval(&generator).is_zero(), "generator image does not satisfy its polynomial");
        return Ok(Stage {
            name: name.to_string(),
            poly: m.clone(),
            field,
            primitive: match c {
                None => Primitive::Generator,
                Some(c) => Primitive::Shifted(c),
            },
            generator,
            previous_theta,
        });
    }
    Err(Error::PrimitiveSearchExhausted {
        bound: config.primitive_search_bound,
    })
}

/// `x - a` over the field of `a`.
pub fn linear(a: &FieldElement) -> Polynomial<NumberField> {
    Polynomial::new(a.field().clone(), vec![-a, a.field().one()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::int;

    fn q(cs: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, cs)
    }

    fn over(t: &FieldTower, cs: &[i64]) -> Polynomial<NumberField> {
        t.top().lift_poly(&q(cs))
    }

    #[test]
    fn sqrt2_then_sqrt3() {
        let c = Config::default();
        let t = FieldTower::rationals();
        let t = t.adjoin_root(&over(&t, &[-2, 0, 1]), "a", &c).unwrap();
        assert_eq!(t.degree(), 2);
        let a = t.top().generator("a").unwrap();
        assert_eq!(&a * &a, t.top().int(2));
        let t = t.adjoin_root(&over(&t, &[-3, 0, 1]), "b", &c).unwrap();
        assert_eq!(t.degree(), 4);
        assert_eq!(t.top().min_poly(), &q(&[1, 0, -10, 0, 1]));
        assert_eq!(t.stages()[1].primitive(), Primitive::Shifted(1));
        let a = t.top().generator("a").unwrap();
        let b = t.top().generator("b").unwrap();
        assert_eq!(&a * &a, t.top().int(2));
        assert_eq!(&b * &b, t.top().int(3));
        assert_eq!(&a + &b, t.top().theta());
        // ℚ(√2) embeds with √2 ↦ a
        let sqrt2 = t.level(1).generator("a").unwrap();
        assert_eq!(t.embed(1, &sqrt2).unwrap(), a);
    }

    #[test]
    fn adjoining_a_reducible_polynomial_fails() {
        let c = Config::default();
        let t = FieldTower::rationals();
        let t = t.adjoin_root(&over(&t, &[-2, 0, 1]), "a", &c).unwrap();
        assert_eq!(
            t.adjoin_root(&over(&t, &[-2, 0, 1]), "b", &c).unwrap_err(),
            Error::Reducible
        );
    }

    #[test]
    fn non_monic_is_normalized() {
        let c = Config::default();
        let t = FieldTower::rationals();
        let t = t.adjoin_root(&over(&t, &[-4, 0, 2]), "a", &c).unwrap();
        assert_eq!(t.top().min_poly(), &q(&[-2, 0, 1]));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let c = Config::default().with_degree_cap(4);
        let t = FieldTower::rationals();
        let t = t.adjoin_root(&over(&t, &[-2, 0, 0, 1]), "a", &c).unwrap();
        let err = t.adjoin_root(&over(&t, &[1, 1, 1]), "w", &c).unwrap_err();
        assert!(matches!(err, Error::DegreeCapExceeded { required: 6, cap: 4, .. }));
    }

    #[test]
    fn linear_stage_keeps_the_field() {
        let c = Config::default();
        let t = FieldTower::rationals();
        let t = t.adjoin_root(&over(&t, &[-2, 0, 1]), "a", &c).unwrap();
        let two = t.top().int(2);
        let t = t.adjoin_root(&linear(&two), "r", &c).unwrap();
        assert_eq!(t.degree(), 2);
        assert_eq!(t.stages()[1].generator(), &t.top().int(2));
        assert_eq!(t.top().generator("a").unwrap().pow(2).as_rational(), Some(int(2)));
    }
}
