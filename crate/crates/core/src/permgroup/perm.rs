use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}`; entry `i` is the image of `i`.
///
/// Ordered lexicographically by image list, which is the canonical order for
/// every group listing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that `images` is a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Product of cycles, e.g. `from_cycles(4, &[&[0, 1], &[2, 3]])`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &i) in cycle.iter().enumerate() {
                if i >= n || std::mem::replace(&mut touched[i], true) {
                    return Err(Error::invalid("cycles must be disjoint and in range"));
                }
                images[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All cycle lengths including fixed points, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat(1).take(self.degree() - moved));
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // (0 1)∘(1 2) sends 1 -> 2 -> 2, 2 -> 1 -> 0
        assert_eq!(a.compose(&b).images(), &[1, 2, 0]);
        assert_eq!(a.compose(&b).to_string(), "(0 1 2)");
        assert_ne!(a.compose(&b), b.compose(&a));
    }

    #[test]
    fn inverse_order_and_cycle_type() {
        let p = Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![2, 3]);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }
}
