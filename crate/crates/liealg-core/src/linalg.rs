//! Dense exact linear algebra over ℚ(i).
//!
//! Everything here is plain fraction-free-in-spirit Gauss–Jordan elimination
//! with lexicographic pivoting: columns are scanned left to right, candidate
//! rows top to bottom. That rule makes every reduced form, nullspace basis,
//! and solution canonical, so reports are byte-stable across runs.

use crate::error::Error;
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// A dense matrix over the Gaussian rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<G>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![G::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, G::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, got: r.len() });
            }
        }
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    /// Integer-entry convenience constructor.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&n| G::from_int(n)).collect()).collect(),
        )
        .expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &G {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: G) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[G] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = lhs * other.get(k, j);
                    out.set(i, j, out.get(i, j) + &term);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[G]) -> Result<Vec<G>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = G::zero();
                for j in 0..self.cols {
                    acc += &(self.get(i, j) * &v[j]);
                }
                acc
            })
            .collect())
    }

    /// In-place Gauss–Jordan reduction to reduced row echelon form.
    /// Returns the pivot column of each pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self.get(pivot_row, col).inverse().expect("pivot is nonzero");
            self.scale_row(pivot_row, &inv);
            for r in 0..self.rows {
                if r != pivot_row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    self.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Inverse of a square matrix, or `SingularMap`.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::SingularMap);
        }
        let n = self.rows;
        let mut work = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                work.set(i, j, self.get(i, j).clone());
            }
            work.set(i, n + i, G::one());
        }
        let pivots = work.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(r, &c)| r != c) {
            return Err(Error::SingularMap);
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, work.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// Canonical nullspace basis: one vector per free column, in column order,
    /// with a 1 in the free coordinate.
    pub fn nullspace(&self) -> Vec<Vec<G>> {
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![G::zero(); self.cols];
            v[free] = G::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · x = b` exactly. Returns the canonical particular
    /// solution (free variables zero) plus a nullspace basis, or `None` when
    /// the system is inconsistent.
    pub fn solve_affine(&self, b: &[G]) -> Option<(Vec<G>, Vec<Vec<G>>)> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut work = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                work.set(i, j, self.get(i, j).clone());
            }
            work.set(i, self.cols, b[i].clone());
        }
        let pivots = work.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut particular = vec![G::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            particular[pc] = work.get(row, self.cols).clone();
        }
        Some((particular, self.nullspace()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &G) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &G) {
        for c in 0..self.cols {
            let v = self.get(target, c) - &(self.get(source, c) * factor);
            self.set(target, c, v);
        }
    }
}

/// An incrementally built row space kept in reduced echelon form, with each
/// basis row tagged by the combination of inserted vectors that produced it.
/// Insertion order is part of the canonical form, so spans built from sorted
/// input are deterministic.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    tag_width: usize,
    rows: Vec<(Vec<G>, Vec<G>)>,
    inserted: usize,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace { width, tag_width: 0, rows: Vec::new(), inserted: 0 }
    }

    /// Like [`RowSpace::new`] but tracks preimages: the i-th inserted vector
    /// carries tag e_i in a `tag_width`-dimensional tag space.
    pub fn with_tracking(width: usize, tag_width: usize) -> Self {
        RowSpace { width, tag_width, rows: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &[G]> {
        self.rows.iter().map(|(v, _)| v.as_slice())
    }

    /// Basis rows together with their tags (the combination of inserted
    /// vectors each row equals).
    pub fn tracked_basis(&self) -> impl Iterator<Item = (&[G], &[G])> {
        self.rows.iter().map(|(v, t)| (v.as_slice(), t.as_slice()))
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|(v, _)| leading_index(v).expect("basis rows are nonzero")).collect()
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<G>) -> bool {
        assert_eq!(v.len(), self.width, "row width");
        let index = self.inserted;
        self.inserted += 1;
        let mut tag = vec![G::zero(); self.tag_width];
        if self.tag_width > 0 {
            assert!(index < self.tag_width, "more insertions than tag width");
            tag[index] = G::one();
        }
        let (mut v, mut tag, _) = self.reduce_tracked(v, tag);
        let Some(lead) = leading_index(&v) else {
            return false;
        };
        let inv = v[lead].inverse().expect("leading entry is nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for x in tag.iter_mut() {
            *x = &*x * &inv;
        }
        // Eliminate the new pivot from existing rows to stay fully reduced.
        for (row, row_tag) in self.rows.iter_mut() {
            let factor = row[lead].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, s) in row.iter_mut().zip(&v) {
                *x = &*x - &(s * &factor);
            }
            for (x, s) in row_tag.iter_mut().zip(&tag) {
                *x = &*x - &(s * &factor);
            }
        }
        let pos = self.rows.partition_point(|(row, _)| {
            leading_index(row).expect("basis rows are nonzero") < lead
        });
        self.rows.insert(pos, (v, tag));
        true
    }

    /// Reduces `v` against the span; returns the residual.
    pub fn reduce(&self, v: &[G]) -> Vec<G> {
        self.reduce_tracked(v.to_vec(), vec![G::zero(); self.tag_width]).0
    }

    /// Reduces `v` and additionally reports the combination of inserted
    /// vectors that was subtracted: `v = Σ combo_i · inserted_i + residual`.
    pub fn reduce_with_combination(&self, v: &[G]) -> (Vec<G>, Vec<G>) {
        let (residual, _, used) = self.reduce_tracked(v.to_vec(), vec![G::zero(); self.tag_width]);
        (residual, used)
    }

    pub fn contains(&self, v: &[G]) -> bool {
        self.reduce(v).iter().all(G::is_zero)
    }

    fn reduce_tracked(&self, mut v: Vec<G>, mut tag: Vec<G>) -> (Vec<G>, Vec<G>, Vec<G>) {
        let mut used = vec![G::zero(); self.tag_width];
        for (row, row_tag) in &self.rows {
            let lead = leading_index(row).expect("basis rows are nonzero");
            let factor = v[lead].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, s) in v.iter_mut().zip(row) {
                *x = &*x - &(s * &factor);
            }
            for (x, s) in tag.iter_mut().zip(row_tag) {
                *x = &*x - &(s * &factor);
            }
            for (x, s) in used.iter_mut().zip(row_tag) {
                *x = &*x + &(s * &factor);
            }
        }
        (v, tag, used)
    }
}

fn leading_index(v: &[G]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> G {
        G::from_int(n)
    }

    #[test]
    fn rref_and_rank() {
        let mut m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.row(2), vec![gi(0), gi(0), gi(0)]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.inverse(), Err(Error::SingularMap));
    }

    #[test]
    fn nullspace_is_canonical() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], vec![gi(-2), gi(1), gi(0)]);
        assert_eq!(ns[1], vec![gi(-3), gi(0), gi(1)]);
        for v in &ns {
            assert!(m.apply(v).unwrap().iter().all(G::is_zero));
        }
    }

    #[test]
    fn solve_affine_consistency() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(m.solve_affine(&[gi(3), gi(6)]).is_some());
        assert!(m.solve_affine(&[gi(3), gi(7)]).is_none());
        let (p, ns) = m.solve_affine(&[gi(3), gi(6)]).unwrap();
        assert_eq!(p, vec![gi(3), gi(0)]);
        assert_eq!(ns.len(), 1);
    }

    #[test]
    fn rowspace_tracks_combinations() {
        let mut space = RowSpace::with_tracking(3, 2);
        space.insert(vec![gi(1), gi(1), gi(0)]);
        space.insert(vec![gi(0), gi(2), gi(0)]);
        assert_eq!(space.rank(), 2);
        let (residual, combo) = space.reduce_with_combination(&[gi(2), gi(4), gi(5)]);
        assert_eq!(residual, vec![gi(0), gi(0), gi(5)]);
        // 2·(1,1,0) + 1·(0,2,0) = (2,4,0)
        assert_eq!(combo, vec![gi(2), gi(1)]);
        assert!(!space.contains(&[gi(0), gi(0), gi(1)]));
        assert!(space.contains(&[gi(5), gi(-3), gi(0)]));
    }
}
