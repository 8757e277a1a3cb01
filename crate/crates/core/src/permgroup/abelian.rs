use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

use crate::error::{Error, Result};

use super::{PermGroup, Permutation};

/// The additive group ℤ_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicGroupZ {
    modulus: u64,
}

impl CyclicGroupZ {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("modulus must be at least 1"));
        }
        Ok(CyclicGroupZ { modulus: n })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }
}

/// The multiplicative group U(n) of residues coprime to n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    modulus: u64,
    elements: Vec<u64>,
}

impl UnitGroup {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("U(n) needs n >= 2"));
        }
        let elements = (1..n).filter(|k| k.gcd(&n) == 1).collect();
        Ok(UnitGroup { modulus: n, elements })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    pub fn element_order(&self, a: u64) -> usize {
        let mut x = a % self.modulus;
        let mut k = 1;
        while x != 1 % self.modulus {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn inverse(&self, a: u64) -> u64 {
        let k = self.element_order(a);
        (0..k - 1).fold(1 % self.modulus, |acc, _| self.mul(acc, a))
    }

    /// A generator when the group is cyclic.
    pub fn generator(&self) -> Option<u64> {
        self.elements
            .iter()
            .copied()
            .find(|&a| self.element_order(a) == self.order())
    }
}

/// `U(n)` for `n ≥ 2`.
pub fn unit_group(n: u64) -> Result<UnitGroup> {
    UnitGroup::new(n)
}

/// An automorphism `k ↦ m·k` of ℤ_n, with its image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAutomorphism {
    pub multiplier: u64,
    pub images: Vec<u64>,
}

/// Enumerates the automorphisms of ℤ_n and checks that `m ↦ (k ↦ m·k)` is an
/// isomorphism from U(n) onto them.
pub fn aut_cyclic(n: u64) -> Result<(UnitGroup, Vec<CyclicAutomorphism>)> {
    let units = UnitGroup::new(n)?;
    let z = CyclicGroupZ::new(n)?;
    // an additive map is fixed by the image of 1; keep the bijective ones
    let mut auts = Vec::new();
    for m in 0..n {
        let images: Vec<u64> = (0..n).map(|k| (m * k) % n).collect();
        let mut seen = vec![false; n as usize];
        if images.iter().all(|&i| !std::mem::replace(&mut seen[i as usize], true)) {
            auts.push(CyclicAutomorphism { multiplier: m, images });
        }
    }
    for a in &auts {
        for x in 0..n {
            for y in 0..n {
                if a.images[z.add(x, y) as usize] != z.add(a.images[x as usize], a.images[y as usize]) {
                    return Err(Error::soundness("multiplication map is not additive"));
                }
            }
        }
    }
    let multipliers: Vec<u64> = auts.iter().map(|a| a.multiplier).collect();
    if multipliers != units.elements {
        return Err(Error::soundness("automorphisms do not match U(n)"));
    }
    for a in &auts {
        for b in &auts {
            let composed: Vec<u64> = b.images.iter().map(|&k| a.images[k as usize]).collect();
            let product = units.mul(a.multiplier, b.multiplier);
            if auts.iter().find(|c| c.multiplier == product).map(|c| &c.images) != Some(&composed) {
                return Err(Error::soundness("correspondence with U(n) is not multiplicative"));
            }
        }
    }
    Ok((units, auts))
}

/// Abelian groups that [`find_embedding`] can map into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingTarget {
    Units(u64),
    Cyclic(u64),
    /// Direct sum of `copies` copies of ℤ_modulus.
    CyclicPower { modulus: u64, copies: usize },
}

/// Largest target the exhaustive search will enumerate.
const TARGET_LIMIT: u128 = 1 << 20;

impl EmbeddingTarget {
    fn order(&self) -> u128 {
        match *self {
            EmbeddingTarget::Units(n) => UnitGroup::new(n).map_or(0, |u| u.order() as u128),
            EmbeddingTarget::Cyclic(n) => n as u128,
            EmbeddingTarget::CyclicPower { modulus, copies } => {
                (modulus as u128).checked_pow(copies as u32).unwrap_or(u128::MAX)
            }
        }
    }

    fn identity(&self) -> Vec<u64> {
        match *self {
            EmbeddingTarget::Units(n) => vec![1 % n],
            EmbeddingTarget::Cyclic(_) => vec![0],
            EmbeddingTarget::CyclicPower { copies, .. } => vec![0; copies],
        }
    }

    pub fn op(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        match *self {
            EmbeddingTarget::Units(n) => vec![((a[0] as u128 * b[0] as u128) % n as u128) as u64],
            EmbeddingTarget::Cyclic(n) | EmbeddingTarget::CyclicPower { modulus: n, .. } => {
                a.iter().zip(b).map(|(x, y)| (x + y) % n).collect()
            }
        }
    }

    fn elements(&self) -> Vec<Vec<u64>> {
        match *self {
            EmbeddingTarget::Units(n) => UnitGroup::new(n)
                .map(|u| u.elements.iter().map(|&e| vec![e]).collect())
                .unwrap_or_default(),
            EmbeddingTarget::Cyclic(n) => (0..n).map(|k| vec![k]).collect(),
            EmbeddingTarget::CyclicPower { modulus, copies } => {
                let mut out = vec![Vec::new()];
                for _ in 0..copies {
                    out = out
                        .into_iter()
                        .flat_map(|v| {
                            (0..modulus).map(move |k| {
                                let mut w = v.clone();
                                w.push(k);
                                w
                            })
                        })
                        .collect();
                }
                out
            }
        }
    }

    fn element_order(&self, a: &[u64]) -> usize {
        let id = self.identity();
        let mut x = a.to_vec();
        let mut k = 1;
        while x != id {
            x = self.op(&x, a);
            k += 1;
        }
        k
    }
}

/// An injective homomorphism, listed on every group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub target: EmbeddingTarget,
    pub images: Vec<(Permutation, Vec<u64>)>,
}

/// Searches for an injective homomorphism `G → target`. `Ok(None)` is a
/// definitive negative. A found map is checked on all pairs before returning.
pub fn find_embedding(g: &PermGroup, target: &EmbeddingTarget) -> Result<Option<Embedding>> {
    if target.order() < g.order() as u128 || !g.is_abelian() {
        return Ok(None);
    }
    if target.order() > TARGET_LIMIT {
        return Err(Error::invalid("embedding target too large to search"));
    }
    let gens = small_generating_set(g);
    let elements = target.elements();
    let candidates: Vec<Vec<&Vec<u64>>> = gens
        .iter()
        .map(|s| {
            let k = s.order();
            elements.iter().filter(|e| target.element_order(e) == k).collect()
        })
        .collect();
    let mut chosen: Vec<Vec<u64>> = Vec::new();
    let Some(map) = search(g.degree(), &gens, &candidates, target, &mut chosen) else {
        return Ok(None);
    };
    let mut images: Vec<(Permutation, Vec<u64>)> = map.into_iter().collect();
    images.sort();
    let lookup: HashMap<&Permutation, &Vec<u64>> = images.iter().map(|(p, v)| (p, v)).collect();
    if lookup.len() != g.order() {
        return Err(Error::soundness("embedding is not defined on the whole group"));
    }
    for a in g.elements() {
        for b in g.elements() {
            if *lookup[&a.compose(b)] != target.op(lookup[a], lookup[b]) {
                return Err(Error::soundness("embedding fails the homomorphism property"));
            }
        }
    }
    let mut distinct: Vec<&Vec<u64>> = lookup.values().copied().collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != g.order() {
        return Err(Error::soundness("embedding is not injective"));
    }
    Ok(Some(Embedding { target: target.clone(), images }))
}

fn small_generating_set(g: &PermGroup) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(g.degree());
    // prefer high-order elements so fewer generators are needed
    let mut by_order: Vec<&Permutation> = g.elements().iter().collect();
    by_order.sort_by_key(|p| std::cmp::Reverse(p.order()));
    for x in by_order {
        if !current.contains(x) {
            gens.push(x.clone());
            current = PermGroup::closure(g.degree(), &gens, usize::MAX).expect("unbounded");
        }
    }
    gens
}

fn search(
    degree: usize,
    gens: &[Permutation],
    candidates: &[Vec<&Vec<u64>>],
    target: &EmbeddingTarget,
    chosen: &mut Vec<Vec<u64>>,
) -> Option<HashMap<Permutation, Vec<u64>>> {
    let depth = chosen.len();
    let partial = propagate(degree, &gens[..depth], chosen, target)?;
    if depth == gens.len() {
        return Some(partial);
    }
    for c in &candidates[depth] {
        chosen.push((*c).clone());
        if let Some(done) = search(degree, gens, candidates, target, chosen) {
            return Some(done);
        }
        chosen.pop();
    }
    None
}

/// Defines `φ` on the subgroup generated by `gens` along Cayley-graph edges;
/// `None` if two paths disagree or two elements share an image.
fn propagate(
    degree: usize,
    gens: &[Permutation],
    images: &[Vec<u64>],
    target: &EmbeddingTarget,
) -> Option<HashMap<Permutation, Vec<u64>>> {
    let id = Permutation::identity(degree);
    let mut map = HashMap::from([(id.clone(), target.identity())]);
    let mut used = HashMap::from([(target.identity(), id.clone())]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let fx = map[&x].clone();
        for (s, fs) in gens.iter().zip(images) {
            let y = s.compose(&x);
            let fy = target.op(fs, &fx);
            match map.get(&y) {
                Some(existing) if *existing != fy => return None,
                Some(_) => {}
                None => {
                    if used.get(&fy).is_some_and(|other| *other != y) {
                        return None;
                    }
                    used.insert(fy.clone(), y.clone());
                    map.insert(y.clone(), fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(n: u64) -> usize {
        (1..=n).filter(|k| k.gcd(&n) == 1).count()
    }

    #[test]
    fn units_mod_8_are_klein() {
        let u = unit_group(8).unwrap();
        assert_eq!(u.elements(), &[1, 3, 5, 7]);
        assert!(u.elements().iter().all(|&a| u.mul(a, a) == 1));
        assert_eq!(u.generator(), None);
    }

    #[test]
    fn units_mod_5_cyclic() {
        let u = unit_group(5).unwrap();
        assert_eq!(u.element_order(2), 4);
        let powers: Vec<u64> = (1..=4).map(|k| (0..k).fold(1, |acc, _| u.mul(acc, 2))).collect();
        assert_eq!(powers, vec![2, 4, 3, 1]);
        assert_eq!(unit_group(2).unwrap().elements(), &[1]);
        assert!(unit_group(1).is_err());
    }

    #[test]
    fn automorphisms_of_cyclic_groups() {
        assert_eq!(aut_cyclic(5).unwrap().1.len(), 4);
        assert_eq!(aut_cyclic(2).unwrap().1.len(), 1);
        let (u, auts) = aut_cyclic(12).unwrap();
        assert_eq!(u.elements(), &[1, 5, 7, 11]);
        assert_eq!(auts.len(), 4);
        for n in 2..=30 {
            assert_eq!(aut_cyclic(n).unwrap().1.len(), phi(n));
        }
    }

    #[test]
    fn klein_into_units_mod_8() {
        let v4 = PermGroup::generate(
            4,
            &[
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let e = find_embedding(&v4, &EmbeddingTarget::Units(8)).unwrap().unwrap();
        assert_eq!(e.images.len(), 4);
        assert!(find_embedding(&v4, &EmbeddingTarget::Cyclic(4)).unwrap().is_none());
        assert!(find_embedding(&v4, &EmbeddingTarget::CyclicPower { modulus: 2, copies: 2 }).unwrap().is_some());
    }

    #[test]
    fn cyclic_into_cyclic_and_nonabelian_nowhere() {
        let c4 = PermGroup::cyclic(4).unwrap();
        assert!(find_embedding(&c4, &EmbeddingTarget::Cyclic(4)).unwrap().is_some());
        assert!(find_embedding(&c4, &EmbeddingTarget::Units(8)).unwrap().is_none());
        assert!(find_embedding(&c4, &EmbeddingTarget::Cyclic(3)).unwrap().is_none());
        let s3 = PermGroup::symmetric(3).unwrap();
        for t in [
            EmbeddingTarget::Units(7),
            EmbeddingTarget::Cyclic(6),
            EmbeddingTarget::CyclicPower { modulus: 6, copies: 2 },
        ] {
            assert!(find_embedding(&s3, &t).unwrap().is_none());
        }
    }
}
