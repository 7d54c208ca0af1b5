//! Sparse exact linear algebra over a field (`ℚ` or `ℚ(i)`).

use std::collections::BTreeMap;

use num_traits::Num;

pub trait Field: Num + Clone + std::fmt::Debug {}
impl<T: Num + Clone + std::fmt::Debug> Field for T {}

pub type SparseRow<T> = BTreeMap<usize, T>;

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseRow<T>>,
}

impl<T: Field> SparseMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn from_dense(dense: &[Vec<T>], ncols: usize) -> Self {
        let mut m = Self::zeros(dense.len(), ncols);
        for (i, row) in dense.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i].get(&j).cloned().unwrap_or_else(T::zero)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                t.rows[j].insert(i, v.clone());
            }
        }
        t
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "shape mismatch");
        let mut out = Self::zeros(self.nrows, other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let acc = &mut out.rows[i];
            for (&k, a) in row {
                for (&j, b) in &other.rows[k] {
                    let v = acc.remove(&j).unwrap_or_else(T::zero) + a.clone() * b.clone();
                    if !v.is_zero() {
                        acc.insert(j, v);
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rank(self.rows.iter().cloned())
    }
}

fn axpy<T: Field>(row: &mut SparseRow<T>, factor: &T, pivot: &SparseRow<T>) {
    for (&j, v) in pivot {
        let nv = row.remove(&j).unwrap_or_else(T::zero) - factor.clone() * v.clone();
        if !nv.is_zero() {
            row.insert(j, nv);
        }
    }
}

/// Incremental row echelon form with monic pivots, keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon<T> {
    pivots: BTreeMap<usize, SparseRow<T>>,
}

impl<T: Field> Echelon<T> {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    /// Reduces `row` against the current pivots; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow<T>) -> SparseRow<T> {
        let mut floor = 0usize;
        loop {
            let lead = row.range(floor..).find(|(j, _)| self.pivots.contains_key(j)).map(|(&j, v)| (j, v.clone()));
            match lead {
                Some((j, v)) => {
                    axpy(&mut row, &v, &self.pivots[&j]);
                    floor = j + 1;
                }
                None => return row,
            }
        }
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseRow<T>) -> bool {
        let mut row = self.reduce(row);
        let Some((&j, lead)) = row.iter().next() else {
            return false;
        };
        let inv = T::one() / lead.clone();
        for v in row.values_mut() {
            *v = v.clone() * inv.clone();
        }
        // keep existing pivots reduced in column j
        for p in self.pivots.values_mut() {
            if let Some(c) = p.get(&j).cloned() {
                axpy(p, &c, &row);
            }
        }
        self.pivots.insert(j, row);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, row: SparseRow<T>) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Reduced row echelon basis, ordered by pivot column.
    pub fn rows(&self) -> Vec<(usize, SparseRow<T>)> {
        self.pivots.iter().map(|(&j, r)| (j, r.clone())).collect()
    }
}

pub fn rank<T: Field>(rows: impl IntoIterator<Item = SparseRow<T>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Reduced row echelon form of the row span.
pub fn rref<T: Field>(rows: impl IntoIterator<Item = SparseRow<T>>) -> Vec<(usize, SparseRow<T>)> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rows()
}

/// Determinant of a small dense square matrix.
pub fn det<T: Field>(m: &[Vec<T>]) -> T {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut out = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            a.swap(p, c);
            out = T::zero() - out;
        }
        let piv = a[c][c].clone();
        out = out * piv.clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / piv.clone();
            for k in c..n {
                let v = a[c][k].clone() * f.clone();
                a[i][k] = a[i][k].clone() - v;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
        let (rows, cols) = (m.len(), m.first().map_or(0, |r| r.len()));
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| m[i][c] != q(0)) else { continue };
            m.swap(r, p);
            for i in 0..rows {
                if i != r && m[i][c] != q(0) {
                    let f = m[i][c].clone() / m[r][c].clone();
                    for k in 0..cols {
                        let v = m[r][k].clone() * f.clone();
                        m[i][k] -= v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_examples() {
        let m = SparseMatrix::from_dense(&[vec![q(1), q(2)], vec![q(2), q(4)]], 2);
        assert_eq!(m.rank(), 1);
        let id = SparseMatrix::from_dense(&[vec![q(1), q(0)], vec![q(0), q(1)]], 2);
        assert_eq!(id.rank(), 2);
        assert_eq!(m.mul(&id), m);
        assert_eq!(SparseMatrix::<BigRational>::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn determinants() {
        assert_eq!(det::<BigRational>(&[]), q(1));
        assert_eq!(det(&[vec![q(0), q(1)], vec![q(1), q(0)]]), q(-1));
        assert_eq!(det(&[vec![q(2), q(1), q(0)], vec![q(1), q(3), q(1)], vec![q(0), q(1), q(4)]]), q(18));
    }

    #[test]
    fn rref_is_reduced() {
        let rows = vec![
            BTreeMap::from([(0, q(2)), (1, q(4)), (2, q(1))]),
            BTreeMap::from([(0, q(1)), (1, q(2)), (2, q(3))]),
        ];
        let r = rref(rows);
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].0, 0);
        assert_eq!(r[1].0, 2);
        assert_eq!(r[0].1.get(&2), None);
        assert_eq!(r[0].1[&1], q(2));
    }

    proptest! {
        #[test]
        fn rank_matches_dense_oracle(entries in proptest::collection::vec(-2i64..=2, 1..=30), cols in 1usize..=6) {
            let dense: Vec<Vec<BigRational>> = entries.chunks(cols).map(|c| {
                let mut v: Vec<BigRational> = c.iter().map(|&x| q(x)).collect();
                v.resize(cols, q(0));
                v
            }).collect();
            let m = SparseMatrix::from_dense(&dense, cols);
            prop_assert_eq!(m.rank(), dense_rank(dense.clone()));
            prop_assert_eq!(m.transpose().rank(), m.rank());
            prop_assert!(m.rank() <= m.nrows.min(m.ncols));
        }
    }
}
