use std::collections::HashMap;

use num_integer::Integer;

use crate::config::Config;
use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{Field, Polynomial};
use crate::expr::{parse_expr, Expr};
use crate::numfield::{eval_rational, factor_over_number_field, FieldElement, FieldTower, NumberField};

/// Largest characteristic degree accepted by [`realize_chain`].
pub const MAX_CHARACTERISTIC_DEGREE: u32 = 256;

/// One requested adjunction: a root of `x^k - radicand`, where the radicand
/// is an expression in the earlier radicals `r1, r2, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalSpec {
    pub k: u32,
    pub radicand: String,
}

impl RadicalSpec {
    pub fn new(k: u32, radicand: impl Into<String>) -> Self {
        RadicalSpec {
            k,
            radicand: radicand.into(),
        }
    }
}

/// A realized stage `R_i = R_{i-1}(a_i)` with `a_i^k = b_i`.
#[derive(Clone, Debug)]
pub struct RadicalStage {
    k: u32,
    text: String,
    expr: Expr,
    radicand: FieldElement,
    factor: Polynomial<NumberField>,
    root: FieldElement,
}

impl RadicalStage {
    /// The characteristic degree `k_i`.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn radicand_text(&self) -> &str {
        &self.text
    }

    pub fn radicand_expr(&self) -> &Expr {
        &self.expr
    }

    /// `b_i` as an element of `R_{i-1}`.
    pub fn radicand(&self) -> &FieldElement {
        &self.radicand
    }

    /// The irreducible factor of `x^k - b_i` over `R_{i-1}` whose root was adjoined.
    pub fn factor(&self) -> &Polynomial<NumberField> {
        &self.factor
    }

    /// `a_i` as an element of `R_i`.
    pub fn root(&self) -> &FieldElement {
        &self.root
    }

    /// `[R_i : R_{i-1}]`.
    pub fn degree(&self) -> usize {
        self.factor.deg()
    }
}

/// A chain of radical extensions `ℚ = R_0 ⊂ R_1 ⊂ … ⊂ R_n`, realized as a
/// field tower whose level `i` is `R_i`.
#[derive(Clone, Debug)]
pub struct RadicalChain {
    stages: Vec<RadicalStage>,
    tower: FieldTower,
}

impl RadicalChain {
    pub fn stages(&self) -> &[RadicalStage] {
        &self.stages
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// `[R_n : ℚ]`.
    pub fn degree(&self) -> usize {
        self.tower.degree()
    }

    pub fn characteristic_degrees(&self) -> Vec<u32> {
        self.stages.iter().map(|s| s.k).collect()
    }

    /// Least common multiple of the characteristic degrees.
    pub fn lcm(&self) -> u64 {
        self.stages.iter().fold(1u64, |acc, s| acc.lcm(&u64::from(s.k)))
    }

    /// Name under which stage `i` (1-based) can be referenced in later radicands.
    pub fn radical_name(i: usize) -> String {
        format!("r{i}")
    }

    /// `a_1, …, a_n` embedded in the top field `R_n`.
    pub fn radicals_in_top(&self) -> Vec<FieldElement> {
        self.stages
            .iter()
            .enumerate()
            .map(|(i, s)| self.tower.embed(i + 1, &s.root).expect("root lives at its level"))
            .collect()
    }
}

/// Builds the chain stage by stage: factors `x^k - b_i` over `R_{i-1}` and
/// adjoins a root of the first irreducible factor in canonical order. When
/// `x^k - b_i` has a root already, the stage has degree 1.
///
/// ```
/// use galois_kit::radical::{realize_chain, RadicalSpec};
/// use galois_kit::Config;
/// let chain = realize_chain(&[RadicalSpec::new(2, "2"), RadicalSpec::new(2, "1 + r1")], &Config::default()).unwrap();
/// assert_eq!(chain.degree(), 4);
/// ```
pub fn realize_chain(specs: &[RadicalSpec], config: &Config) -> Result<RadicalChain> {
    if specs.is_empty() {
        return Err(Error::invalid("a radical chain needs at least one stage"));
    }
    let mut tower = FieldTower::rationals();
    let mut stages: Vec<RadicalStage> = Vec::with_capacity(specs.len());
    for (idx, spec) in specs.iter().enumerate() {
        let i = idx + 1;
        if spec.k < 2 || spec.k > MAX_CHARACTERISTIC_DEGREE {
            return Err(Error::invalid(format!(
                "stage {i}: characteristic degree must lie in 2..={MAX_CHARACTERISTIC_DEGREE}, got {}",
                spec.k
            )));
        }
        let top = tower.top().clone();
        let names: HashMap<String, FieldElement> = stages
            .iter()
            .enumerate()
            .map(|(j, s)| Ok((RadicalChain::radical_name(j + 1), tower.embed(j + 1, &s.root)?)))
            .collect::<Result<_>>()?;
        let expr = parse_expr(&spec.radicand)?;
        let b = expr.eval_in(&top, &names)?;
        if b.is_zero() {
            return Err(Error::invalid(format!("stage {i}: radicand {} is zero", spec.radicand)));
        }
        let k = spec.k as usize;
        let xk = Polynomial::monomial(top.clone(), top.one(), k);
        let pure = xk.try_sub(&Polynomial::constant(top.clone(), b.clone()))?;
        let factors = factor_over_number_field(&pure, config)?;
        let (factor, _) = factors.factors().first().cloned().ok_or_else(|| Error::soundness("empty factorization"))?;
        tower = tower.adjoin_irreducible(&factor, &RadicalChain::radical_name(i), config)?;
        let stage = tower.stages().last().expect("just adjoined");
        let root = stage.generator().clone();
        let b_up = eval_rational(&b.to_poly(), stage.previous_theta());
        ensure_sound!(root.pow(spec.k.into()) == b_up, "stage {i}: adjoined element is not a {k}-th root");
        stages.push(RadicalStage {
            k: spec.k,
            text: spec.radicand.clone(),
            expr,
            radicand: b,
            factor,
            root,
        });
    }
    Ok(RadicalChain { stages, tower })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::{int, Rational};

    fn realize(specs: &[(u32, &str)]) -> Result<RadicalChain> {
        let specs: Vec<RadicalSpec> = specs.iter().map(|&(k, b)| RadicalSpec::new(k, b)).collect();
        realize_chain(&specs, &Config::default())
    }

    #[test]
    fn square_root_of_two() {
        let c = realize(&[(2, "2")]).unwrap();
        assert_eq!(c.degree(), 2);
        let a = c.radicals_in_top()[0].clone();
        assert_eq!(a.pow(2), c.tower().top().int(2));
    }

    #[test]
    fn nested_square_root_has_degree_four() {
        let c = realize(&[(2, "2"), (2, "1 + r1")]).unwrap();
        assert_eq!(c.degree(), 4);
        assert_eq!(c.stages()[1].degree(), 2);
        // oracle: (u + v√2)^2 = 1 + √2 needs u^2 + 2v^2 = 1 and 2uv = 1, so
        // 8u^4 - 8u^2 + 1 = 0, whose roots u^2 = (2 ± √2)/4 are irrational
        for n in -40i64..=40 {
            for d in 1i64..=20 {
                let u = Rational::new(n.into(), d.into());
                let u2 = &u * &u;
                assert_ne!(&u2 * &u2 * int(8) - &u2 * int(8) + int(1), int(0));
            }
        }
        let [a1, a2] = <[FieldElement; 2]>::try_from(c.radicals_in_top()).unwrap();
        assert_eq!(a2.pow(2), &c.tower().top().int(1) + &a1);
    }

    #[test]
    fn rational_root_gives_degree_one_stage() {
        let c = realize(&[(2, "4")]).unwrap();
        assert_eq!(c.degree(), 1);
        assert_eq!(c.stages()[0].root().as_rational(), Some(int(2)));
    }

    #[test]
    fn rejects_bad_stages() {
        assert!(matches!(realize(&[]).unwrap_err(), Error::InvalidInput(_)));
        assert!(matches!(realize(&[(1, "2")]).unwrap_err(), Error::InvalidInput(_)));
        assert!(matches!(realize(&[(2, "2 - 2")]).unwrap_err(), Error::InvalidInput(_)));
        assert!(matches!(realize(&[(2, "r1")]).unwrap_err(), Error::Parse { column: 1, .. }));
        let cap = Config::default().with_degree_cap(4);
        let specs = [RadicalSpec::new(3, "2"), RadicalSpec::new(2, "r1 + 1")];
        assert!(matches!(realize_chain(&specs, &cap).unwrap_err(), Error::DegreeCapExceeded { required: 6, .. }));
    }

    #[test]
    fn lcm_of_degrees() {
        let c = realize(&[(2, "2"), (3, "r1"), (2, "3")]).unwrap();
        assert_eq!(c.characteristic_degrees(), vec![2, 3, 2]);
        assert_eq!(c.lcm(), 6);
    }
}
