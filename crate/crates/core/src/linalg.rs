//! Exact row reduction over the rationals.

use num_traits::{One, Zero};

use crate::poly::{Coeff, Poly};
use crate::word::Word;

/// Rows kept in reduced row echelon form, inserted one at a time.
///
/// Pivots are the first nonzero column of each row, so the result is
/// independent of the order in which rows arrive.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    width: usize,
    /// `(pivot column, row)` sorted by pivot; each row has a 1 at its pivot
    /// and zeros at every other row's pivot.
    rows: Vec<(usize, Vec<Coeff>)>,
}

impl RowEchelon {
    pub fn new(width: usize) -> RowEchelon {
        RowEchelon {
            width,
            rows: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating every pivot column.
    fn reduce(&self, mut v: Vec<Coeff>) -> Vec<Coeff> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &factor * b;
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Coeff>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = Coeff::one() / &v[pivot];
        for c in v.iter_mut() {
            *c *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (a, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *a -= &factor * b;
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    pub fn contains(&self, v: Vec<Coeff>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Coeff]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

/// Coordinates of a poly in a fixed word basis; `None` if some term lies
/// outside the basis.
pub fn coordinates(p: &Poly, basis: &[Word]) -> Option<Vec<Coeff>> {
    let mut v = vec![Coeff::zero(); basis.len()];
    for (w, c) in p.terms() {
        let i = basis.binary_search(w).ok()?;
        v[i] = c.clone();
    }
    Some(v)
}

/// Rank of a set of polys inside the span of `basis` (sorted).
pub fn rank_of(polys: &[Poly], basis: &[Word]) -> Option<usize> {
    let mut ech = RowEchelon::new(basis.len());
    for p in polys {
        ech.insert(coordinates(p, basis)?);
    }
    Some(ech.rank())
}
