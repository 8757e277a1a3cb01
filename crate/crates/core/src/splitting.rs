//! Splitting fields over ℚ with an explicit, canonically ordered root list.

use crate::config::{Config, FactorChoice};
use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{Polynomial, Rationals};
use crate::numfield::{eval_rational, factor_over_number_field, FieldElement, FieldTower, NumberField};

/// The splitting field of a rational polynomial, built as a tower of root
/// adjunctions and flattened to a single primitive element.
#[derive(Clone, Debug)]
pub struct SplittingField {
    tower: FieldTower,
    input: Polynomial<Rationals>,
    source: Polynomial<Rationals>,
    roots: Vec<FieldElement>,
}

/// Builds the splitting field of `p` over ℚ. Repeated factors are dropped
/// first: the construction works with the squarefree part.
pub fn splitting_field(p: &Polynomial<Rationals>, config: &Config) -> Result<SplittingField> {
    SplittingField::rationals().extend(p, config)
}

/// `[E : ℚ]` for the splitting field `E` of `p`.
pub fn splitting_degree(p: &Polynomial<Rationals>, config: &Config) -> Result<usize> {
    Ok(splitting_field(p, config)?.degree())
}

impl SplittingField {
    /// ℚ as the splitting field of the constant polynomial 1.
    pub fn rationals() -> Self {
        SplittingField {
            tower: FieldTower::rationals(),
            input: Polynomial::one(Rationals),
            source: Polynomial::one(Rationals),
            roots: Vec::new(),
        }
    }

    pub fn field(&self) -> &NumberField {
        self.tower.top()
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn degree(&self) -> usize {
        self.tower.degree()
    }

    /// Monic squarefree polynomial whose roots generate the field.
    pub fn source(&self) -> &Polynomial<Rationals> {
        &self.source
    }

    /// The polynomial as given (before passing to the squarefree part).
    pub fn input(&self) -> &Polynomial<Rationals> {
        &self.input
    }

    /// Whether the input had repeated factors that were removed.
    pub fn squarefree_normalized(&self) -> bool {
        self.input.deg() != self.source.deg()
    }

    /// All roots of the source polynomial, in canonical order.
    pub fn roots(&self) -> &[FieldElement] {
        &self.roots
    }

    /// Index of `a` in the root list.
    pub fn root_index(&self, a: &FieldElement) -> Option<usize> {
        self.roots.iter().position(|r| r == a)
    }

    /// Splits `q` as well: the result is the splitting field of
    /// `lcm(source, q)`, containing this field as its lower part.
    pub fn extend(&self, q: &Polynomial<Rationals>, config: &Config) -> Result<SplittingField> {
        if q.degree().is_none() {
            return Err(Error::ZeroPolynomial);
        }
        if q.deg() == 0 && !self.source.is_one() {
            return Ok(self.clone());
        }
        if q.deg() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let q_sf = q.squarefree_part()?;
        let g = self.source.gcd(&q_sf)?;
        let source = self.source.try_mul(&q_sf.exact_div(&g)?)?.monic();
        let input = if self.source.is_one() { q.clone() } else { source.clone() };

        let mut tower = self.tower.clone();
        let mut roots = self.roots.clone();
        let mut pending = Vec::new();
        for (f, _) in factor_over_number_field(&tower.top().lift_poly(&q_sf), config)?.into_factors() {
            if f.deg() == 1 {
                push_root(&mut roots, -f.coeff(0));
            } else {
                pending.push(f);
            }
        }
        while !pending.is_empty() {
            let pick = match config.factor_choice {
                FactorChoice::First => 0,
                FactorChoice::Last => pending.len() - 1,
            };
            let chosen = pending.remove(pick);
            let name = format!("a{}", tower.stages().len() + 1);
            tower = tower.adjoin_irreducible(&chosen, &name, config)?;
            let stage = tower.stages().last().expect("just adjoined");
            let up = |e: &FieldElement| eval_rational(&e.to_poly(), stage.previous_theta());
            let top = tower.top().clone();
            let g = stage.generator().clone();
            roots = roots.iter().map(up).collect();
            let rest = chosen
                .map(top.clone(), up)
                .exact_div(&crate::numfield::linear(&g))?;
            push_root(&mut roots, g);
            let mut next = Vec::new();
            let lifted = pending.iter().map(|f| f.map(top.clone(), up)).chain(std::iter::once(rest));
            for f in lifted {
                if f.deg() == 0 {
                    continue;
                }
                for h in crate::numfield::factor_squarefree(&f, config)? {
                    if h.deg() == 1 {
                        push_root(&mut roots, -h.coeff(0));
                    } else {
                        next.push(h);
                    }
                }
            }
            next.sort_by(|a, b| a.cmp_canonical(b));
            pending = next;
        }
        roots.sort_by(|a, b| a.cmp_canonical(b));
        ensure_sound!(roots.len() == source.deg(), "found {} roots for a squarefree polynomial of degree {}", roots.len(), source.deg());
        for r in &roots {
            ensure_sound!(eval_rational(&source, r).is_zero(), "listed root does not annihilate the source");
        }
        Ok(SplittingField { tower, input, source, roots })
    }
}

fn push_root(roots: &mut Vec<FieldElement>, r: FieldElement) {
    if !roots.contains(&r) {
        roots.push(r);
    }
}
