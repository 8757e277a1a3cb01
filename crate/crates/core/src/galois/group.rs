use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{Field, Polynomial};
use crate::numfield::{eval_rational, FieldElement, NumberField, Primitive};
use crate::permgroup::{PermGroup, Permutation};
use crate::splitting::SplittingField;

/// A field automorphism of `E`, determined by where it sends `θ`.
#[derive(Clone, Debug)]
pub struct Automorphism {
    theta_image: FieldElement,
    permutation: Permutation,
    /// Column `j` holds the numerators of `σ(θʲ)` over the common denominator.
    columns: Vec<Vec<BigInt>>,
    denominator: BigInt,
}

impl Automorphism {
    fn new(theta_image: FieldElement) -> Self {
        let field = theta_image.field().clone();
        let mut powers = Vec::with_capacity(field.degree());
        let mut power = field.one();
        for _ in 0..field.degree() {
            powers.push(power.clone());
            power = &power * &theta_image;
        }
        let denominator = powers
            .iter()
            .fold(BigInt::one(), |acc, p| acc.lcm(p.denominator()));
        let columns = powers
            .iter()
            .map(|p| {
                let f = &denominator / p.denominator();
                p.numerators().iter().map(|x| x * &f).collect()
            })
            .collect();
        Automorphism {
            theta_image,
            permutation: Permutation::identity(0),
            columns,
            denominator,
        }
    }

    pub fn theta_image(&self) -> &FieldElement {
        &self.theta_image
    }

    /// Action on the root list of the splitting field: `σ(rootᵢ) = root_{π(i)}`.
    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    /// `σ(a)`: substitute the image of `θ` into the residue polynomial of `a`.
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        let n = self.columns.len();
        let mut out = vec![BigInt::zero(); n];
        for (c, col) in a.numerators().iter().zip(&self.columns) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(col) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        self.theta_image
            .field()
            .from_integers(out, a.denominator() * &self.denominator)
    }

    /// Applies `σ` to every coefficient.
    pub fn apply_poly(&self, p: &Polynomial<NumberField>) -> Polynomial<NumberField> {
        p.map(p.field().clone(), |c| self.apply(c))
    }
}

/// `G(E, ℚ)` for a splitting field `E`, as a list of automorphisms sorted by
/// the canonical order of their `θ`-images.
#[derive(Clone, Debug)]
pub struct GaloisGroup {
    splitting: SplittingField,
    elements: Vec<Automorphism>,
    identity: usize,
    index: HashMap<Permutation, usize>,
}

/// Enumerates `G(E, ℚ)` by extending embeddings one tower stage at a time and
/// checks `#G = [E : ℚ]`.
///
/// At stage `i` an embedding `σ` of `Kᵢ₋₁` extends by sending the stage
/// generator to any root of `σ(hᵢ)`; those roots are among the known roots of
/// the source polynomial, so no further factoring is needed.
pub fn galois_group(e: &SplittingField) -> Result<GaloisGroup> {
    let tower = e.tower();
    let top = tower.top();
    let mut partial = vec![top.one()];
    for (i, stage) in tower.stages().iter().enumerate() {
        let c = match stage.primitive() {
            Primitive::Unchanged => continue,
            Primitive::Generator => None,
            Primitive::Shifted(c) => Some(top.int(c)),
        };
        let below = tower.level(i);
        let mut next = Vec::new();
        for s in &partial {
            let h = stage
                .poly()
                .map(top.clone(), |coef| eval_rational(&coef.to_poly(), s));
            ensure_sound!(below.degree() == 1 || !h.is_zero(), "stage polynomial vanished under an embedding");
            for rho in e.roots() {
                if h.eval(rho).is_zero() {
                    next.push(match &c {
                        None => rho.clone(),
                        Some(c) => s + &(c * rho),
                    });
                }
            }
        }
        partial = next;
    }
    ensure_sound!(
        partial.len() == e.degree(),
        "#G = {} but [E:Q] = {}",
        partial.len(),
        e.degree()
    );
    partial.sort_by(|a, b| a.cmp_canonical(b));

    let lookup: HashMap<&FieldElement, usize> = e
        .roots()
        .iter()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();
    let min_poly = top.min_poly();
    let mut elements = Vec::with_capacity(partial.len());
    for t in partial {
        ensure_sound!(eval_rational(min_poly, &t).is_zero(), "theta image is not a conjugate of theta");
        let mut auto = Automorphism::new(t);
        ensure_sound!(
            auto.apply(&top.one()).is_one(),
            "automorphism moves 1"
        );
        let images = e
            .roots()
            .iter()
            .map(|r| lookup.get(&auto.apply(r)).copied())
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::soundness("automorphism sends a root outside the root list"))?;
        auto.permutation = Permutation::new(images)?;
        elements.push(auto);
    }
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, a)| (a.permutation.clone(), i))
        .collect();
    ensure_sound!(index.len() == elements.len(), "two automorphisms act identically on the roots");
    let identity = index
        .get(&Permutation::identity(e.roots().len()))
        .copied()
        .ok_or_else(|| Error::soundness("identity automorphism missing"))?;
    let g = GaloisGroup {
        splitting: e.clone(),
        elements,
        identity,
        index,
    };
    for a in &g.elements {
        for b in &g.elements {
            ensure_sound!(
                g.index.contains_key(&a.permutation.compose(&b.permutation)),
                "automorphisms not closed under composition"
            );
        }
    }
    Ok(g)
}

impl GaloisGroup {
    pub fn splitting_field(&self) -> &SplittingField {
        &self.splitting
    }

    pub fn field(&self) -> &NumberField {
        self.splitting.field()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn apply(&self, g: usize, a: &FieldElement) -> Result<FieldElement> {
        if !a.field().same(self.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.elements[g].apply(a))
    }

    /// Index of `gᵢ ∘ gⱼ`.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].permutation.compose(&self.elements[j].permutation)]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&self.elements[i].permutation.inverse()]
    }

    /// `table[i][j]` is the index of `gᵢ ∘ gⱼ`.
    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|i| (0..self.order()).map(|j| self.compose(i, j)).collect())
            .collect()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The group as permutations of the roots.
    pub fn perm_group(&self) -> PermGroup {
        self.perm_subgroup(&(0..self.order()).collect::<Vec<_>>())
            .expect("the whole group is a subgroup")
    }

    /// The subgroup given by element indices, checked for closure.
    pub fn perm_subgroup(&self, indices: &[usize]) -> Result<PermGroup> {
        let n = self.splitting.roots().len();
        if indices.iter().any(|&i| i >= self.order()) {
            return Err(Error::invalid("automorphism index out of range"));
        }
        let mut set: Vec<usize> = indices.to_vec();
        set.sort_unstable();
        set.dedup();
        let closed = set.contains(&self.identity)
            && set.iter().all(|&a| {
                set.binary_search(&self.inverse(a)).is_ok()
                    && set.iter().all(|&b| set.binary_search(&self.compose(a, b)).is_ok())
            });
        if !closed {
            return Err(Error::NotASubgroup);
        }
        let perms: Vec<Permutation> = set.iter().map(|&i| self.elements[i].permutation.clone()).collect();
        PermGroup::generate(n, &perms)
    }

    /// Element indices of a subgroup given by permutations.
    pub fn indices_of(&self, h: &PermGroup) -> Result<Vec<usize>> {
        let mut out = h
            .elements()
            .iter()
            .map(|p| self.index_of(p).ok_or(Error::NotASubgroup))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }
}
