use crate::error::{Error, Result};

use super::{PermGroup, Permutation};

/// Evidence for one step `Gᵢ ⊵ Gᵢ₊₁` of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepWitness {
    pub order: usize,
    pub next_order: usize,
    pub normal: bool,
    /// Coset representatives of `Gᵢ₊₁` in `Gᵢ`; the quotient is tabulated on these.
    pub coset_representatives: Vec<Permutation>,
    /// A pair of representatives whose cosets do not commute, if any.
    pub noncommuting_pair: Option<(Permutation, Permutation)>,
}

impl StepWitness {
    pub fn quotient_order(&self) -> usize {
        self.coset_representatives.len()
    }

    pub fn passes(&self) -> bool {
        self.normal && self.noncommuting_pair.is_none()
    }
}

/// Outcome of checking a chain `G₀ ⊇ G₁ ⊇ … ⊇ Gₙ = 1` for normal steps with
/// abelian quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCertificate {
    pub steps: Vec<StepWitness>,
}

impl ChainCertificate {
    pub fn accepted(&self) -> bool {
        self.steps.iter().all(StepWitness::passes)
    }

    /// Index of the first step that fails, if any.
    pub fn first_failure(&self) -> Option<usize> {
        self.steps.iter().position(|s| !s.passes())
    }
}

/// Checks every step of a descending chain ending in the trivial group.
/// Each quotient is examined through its coset representatives: cosets `aH`
/// and `bH` commute iff `b⁻¹a⁻¹ba ∈ H`.
pub fn solvable_via_abelian_chain(chain: &[PermGroup]) -> Result<ChainCertificate> {
    let last = chain.last().ok_or_else(|| Error::invalid("empty chain"))?;
    if !last.is_trivial() {
        return Err(Error::invalid("chain does not end in the trivial group"));
    }
    let mut steps = Vec::new();
    for pair in chain.windows(2) {
        let (g, h) = (&pair[0], &pair[1]);
        if !h.is_subgroup_of(g) {
            return Err(Error::invalid("chain is not descending"));
        }
        let normal = h.is_normal_in(g)?;
        let reps = g.coset_representatives(h)?;
        let mut bad = None;
        if normal {
            'outer: for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    let comm = b.inverse().compose(&a.inverse()).compose(b).compose(a);
                    if !h.contains(&comm) {
                        bad = Some((a.clone(), b.clone()));
                        break 'outer;
                    }
                }
            }
        }
        steps.push(StepWitness {
            order: g.order(),
            next_order: h.order(),
            normal,
            coset_representatives: reps,
            noncommuting_pair: bad,
        });
    }
    Ok(ChainCertificate { steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_chain_accepted() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let a3 = PermGroup::alternating(3).unwrap();
        let cert = solvable_via_abelian_chain(&[s3, a3, PermGroup::trivial(3)]).unwrap();
        assert!(cert.accepted());
        let q: Vec<_> = cert.steps.iter().map(StepWitness::quotient_order).collect();
        assert_eq!(q, vec![2, 3]);
    }

    #[test]
    fn a5_step_rejected() {
        let s5 = PermGroup::symmetric(5).unwrap();
        let a5 = PermGroup::alternating(5).unwrap();
        let cert = solvable_via_abelian_chain(&[s5, a5.clone(), PermGroup::trivial(5)]).unwrap();
        assert!(!cert.accepted());
        assert_eq!(cert.first_failure(), Some(1));
        let cert = solvable_via_abelian_chain(&[a5, PermGroup::trivial(5)]).unwrap();
        assert_eq!(cert.first_failure(), Some(0));
    }

    #[test]
    fn abelian_in_one_step_and_bad_chains() {
        let c4 = PermGroup::cyclic(4).unwrap();
        assert!(solvable_via_abelian_chain(&[c4.clone(), PermGroup::trivial(4)]).unwrap().accepted());
        assert!(solvable_via_abelian_chain(&[c4.clone()]).is_err());
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(solvable_via_abelian_chain(&[c4, s4, PermGroup::trivial(4)]).is_err());
    }
}
