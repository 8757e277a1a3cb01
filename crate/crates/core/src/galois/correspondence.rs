use num_traits::One;

use crate::config::Config;
use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{Field, Polynomial, Rational, Rationals};
use crate::linalg::{kernel, EchelonBasis};
use crate::numfield::{factor_over_number_field, minimal_polynomial, FieldElement, NumberField};
use crate::permgroup::{PermGroup, Permutation};

use super::GaloisGroup;

/// A field `ℚ ⊆ B ⊆ E`, described by generators inside `E`, a ℚ-basis, and a
/// primitive element with its minimal polynomial.
#[derive(Clone, Debug)]
pub struct IntermediateField {
    generators: Vec<FieldElement>,
    basis: Vec<FieldElement>,
    primitive: FieldElement,
    min_poly: Polynomial<Rationals>,
}

impl IntermediateField {
    /// The field `ℚ(generators)` inside their common field.
    pub fn from_generators(field: &NumberField, generators: &[FieldElement]) -> Result<Self> {
        if generators.iter().any(|g| !g.field().same(field)) {
            return Err(Error::FieldMismatch);
        }
        let basis = algebra_span(field, generators);
        let degree = basis.len();
        let primitive = primitive_candidates(generators)
            .find(|c| minimal_polynomial(c).is_ok_and(|m| m.deg() == degree))
            .ok_or_else(|| Error::soundness("no primitive element among small combinations"))?;
        let min_poly = minimal_polynomial(&primitive)?;
        Ok(IntermediateField {
            generators: generators.to_vec(),
            basis,
            primitive,
            min_poly,
        })
    }

    pub fn generators(&self) -> &[FieldElement] {
        &self.generators
    }

    /// A ℚ-basis of `B` as elements of `E`.
    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn primitive_element(&self) -> &FieldElement {
        &self.primitive
    }

    /// Minimal polynomial over ℚ of the primitive element.
    pub fn min_poly(&self) -> &Polynomial<Rationals> {
        &self.min_poly
    }

    /// `[B : ℚ]`.
    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        let n = a.field().degree();
        let mut span = EchelonBasis::new(n);
        for b in &self.basis {
            span.insert(&b.coeffs());
        }
        span.contains(&a.coeffs())
    }
}

/// ℚ-basis of the algebra generated by `gens`: multiply by generators until stable.
pub(crate) fn algebra_span(field: &NumberField, gens: &[FieldElement]) -> Vec<FieldElement> {
    let mut span = EchelonBasis::new(field.degree());
    let mut basis = vec![field.one()];
    span.insert(&field.one().coeffs());
    let mut i = 0;
    while i < basis.len() {
        for g in gens {
            let p = &basis[i] * g;
            if span.insert(&p.coeffs()).is_none() {
                basis.push(p);
            }
        }
        i += 1;
    }
    basis
}

/// Each element itself, then `Σ tʲ·xⱼ` for `t = 1, 2, …`.
fn primitive_candidates(xs: &[FieldElement]) -> impl Iterator<Item = FieldElement> + '_ {
    let singles = xs.iter().cloned();
    let combos = (1..=64i64).filter_map(move |t| {
        let field = xs.first()?.field();
        let mut acc = field.zero();
        let mut w = Rational::one();
        for x in xs {
            acc = &acc + &x.scale(&w);
            w *= Rational::from_integer(t.into());
        }
        Some(acc)
    });
    singles.chain(combos)
}

/// Restriction `G(E, ℚ) → G(B, ℚ)` for a normal intermediate field `B`.
#[derive(Clone, Debug)]
pub struct Restriction {
    /// Roots of the defining polynomial of `B`, inside `E`, in canonical order.
    pub roots: Vec<FieldElement>,
    /// `G(B, ℚ)` as permutations of `roots`.
    pub image: PermGroup,
    /// `map[i]` is the index in `image.elements()` of the restriction of `gᵢ`.
    pub map: Vec<usize>,
    /// Indices of the automorphisms restricting to the identity.
    pub kernel: Vec<usize>,
}

impl GaloisGroup {
    /// `O(a) = {g(a) : g ∈ G}`, deduplicated and in canonical order.
    pub fn orbit(&self, a: &FieldElement) -> Result<Vec<FieldElement>> {
        let mut out = self
            .elements()
            .iter()
            .enumerate()
            .map(|(i, _)| self.apply(i, a))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|x, y| x.cmp_canonical(y));
        out.dedup();
        Ok(out)
    }

    /// `Q_a(x) = ∏ (x - ω)` over the orbit of `a`. The coefficients are
    /// symmetric in the orbit, hence fixed by `G`, hence rational; that is
    /// checked rather than assumed.
    pub fn orbit_min_poly(&self, a: &FieldElement) -> Result<Polynomial<Rationals>> {
        let field = self.field().clone();
        let mut q = Polynomial::one(field.clone());
        for w in self.orbit(a)? {
            q = &q * &crate::numfield::linear(&w);
        }
        let coeffs = q
            .coeffs()
            .iter()
            .map(|c| c.as_rational())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::soundness("orbit polynomial has a non-rational coefficient"))?;
        Ok(Polynomial::new(Rationals, coeffs))
    }

    /// Elements of `E` fixed by every member of the subgroup `h` (given by
    /// element indices). Checks `[B : ℚ]·#H = [E : ℚ]`.
    pub fn fixed_field(&self, h: &[usize]) -> Result<IntermediateField> {
        let hg = self.perm_subgroup(h)?;
        let e = self.field();
        let n = e.degree();
        let mut rows = Vec::new();
        for p in hg.generators() {
            let g = self.index_of(p).expect("subgroup element");
            // column j of (M_g - I) is g(θʲ) - θʲ; rows of the system are its rows
            let cols: Vec<Vec<Rational>> = (0..n)
                .map(|j| {
                    let mut v = self.elements()[g].apply(&e.theta().pow(j as u64)).coeffs();
                    v[j] -= Rational::one();
                    v
                })
                .collect();
            for r in 0..n {
                rows.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
        let fixed = kernel(&rows, n);
        let degree = fixed.len();
        ensure_sound!(
            degree * hg.order() == self.order(),
            "[B:Q] = {degree} but #G / #H = {}",
            self.order() / hg.order()
        );
        let mut basis: Vec<FieldElement> = fixed.into_iter().map(|v| e.elem(v)).collect();
        basis.sort_by(|a, b| a.cmp_canonical(b));
        // B = Q(b) exactly when the stabilizer of b is H, i.e. #O(b) = [B:Q]
        let nonrational: Vec<FieldElement> = basis.iter().filter(|b| b.as_rational().is_none()).cloned().collect();
        let primitive = if degree == 1 {
            e.one()
        } else {
            let mut found = None;
            for c in primitive_candidates(&nonrational) {
                if self.orbit(&c)?.len() == degree {
                    found = Some(c);
                    break;
                }
            }
            found.ok_or_else(|| Error::soundness("no primitive element for the fixed field"))?
        };
        let min_poly = self.orbit_min_poly(&primitive)?;
        Ok(IntermediateField {
            generators: vec![primitive.clone()],
            basis,
            primitive,
            min_poly,
        })
    }

    /// Indices of the automorphisms fixing every generator of `b`; checks
    /// that they number `[E : ℚ] / [B : ℚ]`.
    pub fn subgroup_fixing(&self, b: &IntermediateField) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, g) in self.elements().iter().enumerate() {
            let mut fixes = true;
            for x in b.generators() {
                if !x.field().same(self.field()) {
                    return Err(Error::FieldMismatch);
                }
                if g.apply(x) != *x {
                    fixes = false;
                    break;
                }
            }
            if fixes {
                out.push(i);
            }
        }
        ensure_sound!(
            out.len() * b.degree() == self.order(),
            "stabilizer has order {} but [E:B] = {}",
            out.len(),
            self.order() / b.degree()
        );
        self.perm_subgroup(&out)?;
        Ok(out)
    }

    /// Restricts every automorphism to `B`, where `B` is the splitting field
    /// of `q` inside `E`. Fails with [`Error::NotNormal`] if some root of `q`
    /// lies outside `B`. Checks the kernel, its normality, surjectivity onto
    /// a group of order `[B : ℚ]`, and the homomorphism property.
    pub fn restriction_homomorphism(
        &self,
        b: &IntermediateField,
        q: &Polynomial<Rationals>,
        config: &Config,
    ) -> Result<Restriction> {
        let e = self.field();
        let f = factor_over_number_field(&e.lift_poly(&q.squarefree_part()?), config)?;
        if f.factors().iter().any(|(h, _)| h.deg() != 1) {
            return Err(Error::invalid("the given polynomial does not split in E"));
        }
        let mut roots: Vec<FieldElement> = f.factors().iter().map(|(h, _)| -h.coeff(0)).collect();
        roots.sort_by(|x, y| x.cmp_canonical(y));
        if let Some(out) = roots.iter().find(|r| !b.contains(r)) {
            return Err(Error::NotNormal(format!("the conjugate {out} lies outside B")));
        }
        let generated = IntermediateField::from_generators(e, &roots)?;
        if generated.degree() != b.degree() {
            return Err(Error::invalid("the roots of the given polynomial do not generate B"));
        }
        let restricted: Vec<Permutation> = self
            .elements()
            .iter()
            .map(|g| {
                let images = roots
                    .iter()
                    .map(|r| roots.iter().position(|s| *s == g.apply(r)))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::soundness("automorphism does not preserve the roots"))?;
                Permutation::new(images)
            })
            .collect::<Result<_>>()?;
        let image = PermGroup::generate(roots.len(), &restricted)?;
        let map: Vec<usize> = restricted
            .iter()
            .map(|p| image.elements().binary_search(p).expect("in the generated group"))
            .collect();
        let kernel: Vec<usize> = (0..self.order())
            .filter(|&i| restricted[i].is_identity())
            .collect();

        ensure_sound!(kernel == self.subgroup_fixing(b)?, "kernel differs from the stabilizer of B");
        let kernel_group = self.perm_subgroup(&kernel)?;
        ensure_sound!(kernel_group.is_normal_in(&self.perm_group())?, "kernel is not normal");
        ensure_sound!(image.order() == b.degree(), "image has order {} but [B:Q] = {}", image.order(), b.degree());
        let mut hit = map.clone();
        hit.sort_unstable();
        hit.dedup();
        ensure_sound!(hit.len() == image.order(), "restriction is not surjective");
        for i in 0..self.order() {
            for j in 0..self.order() {
                let lhs = map[self.compose(i, j)];
                let rhs = image.elements()[map[i]].compose(&image.elements()[map[j]]);
                ensure_sound!(image.elements()[lhs] == rhs, "restriction is not a homomorphism");
            }
        }
        ensure_sound!(image.order() * kernel.len() == self.order(), "image and kernel orders do not multiply to #G");
        Ok(Restriction { roots, image, map, kernel })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::galois_group;
    use crate::splitting::splitting_field;
    use num_bigint::BigInt;

    fn q(cs: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, cs)
    }

    fn group(cs: &[i64]) -> GaloisGroup {
        galois_group(&splitting_field(&q(cs), &Config::default()).unwrap()).unwrap()
    }

    /// Squarefree kernel of a nonzero rational, by trial division.
    fn squarefree_kernel(r: &Rational) -> i64 {
        let n: i64 = (r.numer() * r.denom()).try_into().unwrap();
        let (sign, mut n) = (n.signum(), n.abs());
        let mut out = 1;
        let mut p = 2;
        while p * p <= n {
            while n % (p * p) == 0 {
                n /= p * p;
            }
            if n % p == 0 {
                out *= p;
                n /= p;
            }
            p += 1;
        }
        sign * out * n
    }

    fn roots_in(g: &GaloisGroup, p: &Polynomial<Rationals>) -> Vec<FieldElement> {
        let e = g.field();
        let f = factor_over_number_field(&e.lift_poly(p), &Config::default()).unwrap();
        f.factors()
            .iter()
            .filter(|(h, _)| h.deg() == 1)
            .map(|(h, _)| -h.coeff(0))
            .collect()
    }

    #[test]
    fn quadratic_subfields_of_eighth_roots() {
        let g = group(&[1, 0, 0, 0, 1]);
        let lattice = g.perm_group().subgroups();
        let mut kernels = Vec::new();
        for h in lattice.iter().filter(|h| h.order() == 2) {
            let b = g.fixed_field(&g.indices_of(h).unwrap()).unwrap();
            assert_eq!(b.degree(), 2);
            let m = b.min_poly();
            let disc = &m.coeff(1) * &m.coeff(1) - m.coeff(0) * Rational::from_integer(BigInt::from(4));
            kernels.push(squarefree_kernel(&disc));
        }
        kernels.sort_unstable();
        assert_eq!(kernels, vec![-2, -1, 2]);
    }

    #[test]
    fn duality_round_trip() {
        for cs in [&[-2, 0, 0, 1][..], &[1, 0, 0, 0, 1][..], &[-2, 0, 0, 0, 1][..]] {
            let g = group(cs);
            let mut fields: Vec<(EchelonBasis, Vec<Vec<Rational>>)> = Vec::new();
            for h in g.perm_group().subgroups() {
                let idx = g.indices_of(&h).unwrap();
                let b = g.fixed_field(&idx).unwrap();
                assert_eq!(b.degree() * h.order(), g.order());
                assert_eq!(g.subgroup_fixing(&b).unwrap(), idx);
                let vecs: Vec<Vec<Rational>> = b.basis().iter().map(FieldElement::coeffs).collect();
                // distinct subgroups give distinct fields
                for (span, other) in &fields {
                    let same = other.len() == vecs.len() && vecs.iter().all(|v| span.contains(v));
                    assert!(!same, "{cs:?}: two subgroups share a fixed field");
                }
                let mut span = EchelonBasis::new(g.field().degree());
                for v in &vecs {
                    span.insert(v);
                }
                fields.push((span, vecs));
            }
        }
    }

    #[test]
    fn orbit_polynomial_is_the_minimal_polynomial() {
        let g = group(&[-2, 0, 0, 1]);
        let e = g.field();
        let t = e.theta();
        for x in [e.int(5), t.clone(), &t.pow(2) + &e.int(1), &t.pow(3) - &t, t.pow(5)] {
            let o = g.orbit_min_poly(&x).unwrap();
            assert_eq!(o, minimal_polynomial(&x).unwrap());
            assert!(o.is_monic() && o.is_squarefree().unwrap());
        }
    }

    #[test]
    fn cube_root_field_is_fixed_by_a_transposition() {
        let g = group(&[-2, 0, 0, 1]);
        let c = roots_in(&g, &q(&[-2, 0, 0, 1]));
        let b = IntermediateField::from_generators(g.field(), &c[..1]).unwrap();
        assert_eq!(b.degree(), 3);
        assert_eq!(b.min_poly(), &q(&[-2, 0, 0, 1]));
        let h = g.subgroup_fixing(&b).unwrap();
        assert_eq!(h.len(), 2);
        let err = g
            .restriction_homomorphism(&b, &q(&[-2, 0, 0, 1]), &Config::default())
            .unwrap_err();
        assert!(matches!(err, Error::NotNormal(_)), "{err:?}");
    }

    #[test]
    fn restriction_to_cyclotomic_subfield() {
        let g = group(&[-2, 0, 0, 1]);
        let w = roots_in(&g, &q(&[1, 1, 1]));
        assert_eq!(w.len(), 2);
        let b = IntermediateField::from_generators(g.field(), &w[..1]).unwrap();
        let r = g.restriction_homomorphism(&b, &q(&[1, 1, 1]), &Config::default()).unwrap();
        assert_eq!(r.kernel.len(), 3);
        assert_eq!(r.image.order(), 2);
        assert_eq!(r.roots.len(), 2);
        // the kernel fixes ζ₃ and the other three automorphisms swap ζ₃ and ζ₃²
        for i in 0..g.order() {
            let moved = g.apply(i, &w[0]).unwrap() != w[0];
            assert_eq!(moved, !r.kernel.contains(&i));
        }
        assert!(r.roots.iter().all(|x| (&x.pow(3) - &g.field().int(1)).is_zero()));
    }
}
