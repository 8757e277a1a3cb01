use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};

use super::Permutation;

/// Default enumeration bound (the order of S₇).
pub const DEFAULT_ORDER_BOUND: usize = 5040;

/// A permutation group, stored as its full sorted element list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Breadth-first closure of `generators`, refusing to go past `bound` elements.
    pub fn closure(degree: usize, generators: &[Permutation], bound: usize) -> Result<Self> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::invalid("generators of different degrees"));
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= bound {
                        return Err(Error::OrderBoundExceeded { bound });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        let generators = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        Ok(PermGroup {
            degree,
            elements,
            generators,
        })
    }

    /// [`PermGroup::closure`] with the default bound.
    pub fn generate(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::closure(degree, generators, DEFAULT_ORDER_BOUND)
    }

    /// Wraps a complete element list; fails with [`Error::NotASubgroup`]
    /// unless it is closed under composition and inverses.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let g = PermGroup {
            degree,
            generators: elements.iter().filter(|p| !p.is_identity()).cloned().collect(),
            elements,
        };
        if !g.is_closed() {
            return Err(Error::NotASubgroup);
        }
        Ok(g)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: Vec::new(),
        }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n <= 1 {
            return Ok(Self::trivial(n));
        }
        let cycle = Permutation::new((1..n).chain([0]).collect())?;
        let swap = Permutation::from_cycles(n, &[&[0, 1]])?;
        Self::generate(n, &[cycle, swap])
    }

    pub fn alternating(n: usize) -> Result<Self> {
        let gens: Vec<_> = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
            .collect::<Result<_>>()?;
        Self::generate(n, &gens)
    }

    /// Cyclic group generated by the n-cycle `(0 1 … n-1)`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n <= 1 {
            return Ok(Self::trivial(n));
        }
        Self::generate(n, &[Permutation::new((1..n).chain([0]).collect())?])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical (lexicographic) order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|h| g.contains(h))
    }

    fn is_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }

    /// `gHg⁻¹ = H` for all `g ∈ G`; errors unless `self ⊆ g`.
    pub fn is_normal_in(&self, g: &PermGroup) -> Result<bool> {
        if !self.is_subgroup_of(g) {
            return Err(Error::NotASubgroup);
        }
        Ok(g.generating_set().iter().all(|x| {
            let xi = x.inverse();
            self.generating_set()
                .iter()
                .all(|h| self.contains(&x.compose(h).compose(&xi)))
        }))
    }

    /// Stored generators, or all elements when none were recorded.
    fn generating_set(&self) -> &[Permutation] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generating_set();
        gens.iter()
            .all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Subgroup generated by all commutators `g h g⁻¹ h⁻¹`.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        for a in &self.elements {
            for b in &self.elements {
                let c = a.compose(b).compose(&a.inverse()).compose(&b.inverse());
                if !current.contains(&c) {
                    gens.push(c);
                    current = Self::closure(self.degree, &gens, usize::MAX).expect("unbounded");
                }
            }
        }
        current
    }

    /// `G ⊇ G′ ⊇ G″ ⊇ …`, stopping at the trivial group or at the first
    /// repetition (which is then listed twice, showing the stall).
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_trivial() {
                return series;
            }
            let next = last.derived_subgroup();
            let stalled = next == *last;
            series.push(next);
            if stalled {
                return series;
            }
        }
    }

    /// Solvable iff the derived series reaches the trivial group.
    pub fn is_solvable(&self) -> (bool, Vec<PermGroup>) {
        let series = self.derived_series();
        (series.last().expect("nonempty").is_trivial(), series)
    }

    /// Left coset representatives of `h` in `self`, smallest element of each coset.
    pub fn coset_representatives(&self, h: &PermGroup) -> Result<Vec<Permutation>> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        let mut covered: HashSet<Permutation> = HashSet::new();
        let mut reps = Vec::new();
        for g in &self.elements {
            if covered.contains(g) {
                continue;
            }
            reps.push(g.clone());
            covered.extend(h.elements.iter().map(|x| g.compose(x)));
        }
        Ok(reps)
    }

    /// Every subgroup, by closing cyclic subgroups under pairwise joins.
    /// Sorted by order, then by element list.
    pub fn subgroups(&self) -> Vec<PermGroup> {
        let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        let mut groups = Vec::new();
        let mut add = |g: PermGroup, groups: &mut Vec<PermGroup>| {
            if found.insert(g.elements.clone()) {
                groups.push(g);
                true
            } else {
                false
            }
        };
        for x in &self.elements {
            let c = Self::closure(self.degree, std::slice::from_ref(x), usize::MAX).expect("unbounded");
            add(c, &mut groups);
        }
        let mut frontier = 0;
        while frontier < groups.len() {
            let end = groups.len();
            for i in frontier..end {
                for j in 0..end {
                    if groups[i].is_subgroup_of(&groups[j]) || groups[j].is_subgroup_of(&groups[i]) {
                        continue;
                    }
                    let mut gens = groups[i].generating_set().to_vec();
                    gens.extend_from_slice(groups[j].generating_set());
                    let joined = Self::closure(self.degree, &gens, usize::MAX).expect("unbounded");
                    add(joined, &mut groups);
                }
            }
            frontier = end;
        }
        groups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        groups
    }
}
