//! Dense exact linear algebra over ℚ: the small amount the engine needs for
//! minimal polynomials, primitive elements and fixed fields.

use num_traits::{One, Zero};

use crate::exact_poly::{modular_solve, Rational};

/// Incrementally built echelon basis that remembers how each stored row was
/// combined from the inserted vectors.
#[derive(Clone, Debug)]
pub(crate) struct EchelonBasis {
    dim: usize,
    inserted: usize,
    track: bool,
    rows: Vec<Row>,
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    values: Vec<Rational>,
    combo: Vec<Rational>,
}

impl EchelonBasis {
    pub(crate) fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            inserted: 0,
            track: false,
            rows: Vec::new(),
        }
    }

    /// Also tracks combinations, so `insert` can report linear relations.
    pub(crate) fn tracking(dim: usize) -> Self {
        EchelonBasis {
            track: true,
            ..Self::new(dim)
        }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        let mut combo = if self.track {
            let mut c = vec![Rational::zero(); self.inserted + 1];
            c[self.inserted] = Rational::one();
            c
        } else {
            Vec::new()
        };
        for row in &self.rows {
            if w[row.pivot].is_zero() {
                continue;
            }
            let f = w[row.pivot].clone();
            for (x, y) in w.iter_mut().zip(&row.values).skip(row.pivot) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            if self.track {
                for (x, y) in combo.iter_mut().zip(&row.combo) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        (w, combo)
    }

    pub(crate) fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// Adds `v`. Returns `Some(relation)` when `v` was already in the span:
    /// `Σ relation[i] * inserted_i = 0` with `relation[last] = 1`. Dependent
    /// vectors are not stored, and (without tracking) the relation is empty.
    pub(crate) fn insert(&mut self, v: &[Rational]) -> Option<Vec<Rational>> {
        let (mut w, mut combo) = self.reduce(v);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return Some(combo);
        };
        let inv = w[pivot].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for x in combo.iter_mut() {
            *x *= &inv;
        }
        // keep rows sorted by pivot so `reduce` eliminates left to right
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(
            at,
            Row {
                pivot,
                values: w,
                combo,
            },
        );
        self.inserted += 1;
        if self.track {
            for row in &mut self.rows {
                row.combo.resize(self.inserted, Rational::zero());
            }
        }
        None
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(mat: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = mat.len();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{ v : A v = 0 }` for `A` given by rows of length `ncols`.
pub(crate) fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut mat = rows.to_vec();
    let pivots = rref(&mut mat);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -mat[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A X = B` for square nonsingular `A` given by its columns; each
/// right-hand side is one column of `B`. `None` if `A` is singular.
pub(crate) fn solve_columns(
    columns: &[Vec<Rational>],
    rhs: &[Vec<Rational>],
) -> Option<Vec<Vec<Rational>>> {
    if let Some(x) = modular_solve(columns, rhs) {
        return Some(x);
    }
    let n = columns.len();
    let mut mat: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            columns
                .iter()
                .map(|c| c[i].clone())
                .chain(rhs.iter().map(|b| b[i].clone()))
                .collect()
        })
        .collect();
    let pivots = rref(&mut mat);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(
        (0..rhs.len())
            .map(|j| (0..n).map(|i| mat[i][n + j].clone()).collect())
            .collect(),
    )
}
