//! Sparse real matrices for generator images, with counted application to
//! dense complex blocks.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use crate::fft::OpCounter;

/// A square matrix stored as `(row, col, value)` triplets, indexed both ways.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    by_row: Vec<Vec<(usize, f64)>>,
    by_col: Vec<Vec<(usize, f64)>>,
}

impl SparseMatrix {
    /// Builds from triplets; repeated positions are summed and exact zeros dropped.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, f64)>) -> Self {
        let mut dense_rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "triplet ({r}, {c}) outside {dim}x{dim}");
            match dense_rows[r].iter_mut().find(|(cc, _)| *cc == c) {
                Some(slot) => slot.1 += v,
                None => dense_rows[r].push((c, v)),
            }
        }
        let mut by_col: Vec<Vec<(usize, f64)>> = vec![Vec::new(); dim];
        for row in dense_rows.iter_mut() {
            row.retain(|&(_, v)| v != 0.0);
            row.sort_by_key(|&(c, _)| c);
        }
        for (r, row) in dense_rows.iter().enumerate() {
            for &(c, v) in row {
                by_col[c].push((r, v));
            }
        }
        Self {
            dim,
            by_row: dense_rows,
            by_col,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_triplets(dim, (0..dim).map(|i| (i, i, 1.0)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.by_row.iter().map(Vec::len).sum()
    }

    pub fn max_row_nnz(&self) -> usize {
        self.by_row.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_col_nnz(&self) -> usize {
        self.by_col.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.by_row[r]
            .iter()
            .find(|(cc, _)| *cc == c)
            .map_or(0.0, |&(_, v)| v)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.by_row
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (r, c, v) in self.triplets() {
            m[(r, c)] = v;
        }
        m
    }

    /// `self · a` for a real matrix (uncounted; used to build representation images).
    pub fn left_mul_real(&self, a: &DMatrix<f64>) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(self.dim, a.ncols());
        for (r, row) in self.by_row.iter().enumerate() {
            for &(c, v) in row {
                for j in 0..a.ncols() {
                    out[(r, j)] += v * a[(c, j)];
                }
            }
        }
        out
    }

    /// `self · a`; costs one multiply-add per stored entry per column of `a`.
    pub fn left_mul(&self, a: &DMatrix<Complex64>, ops: &mut OpCounter) -> DMatrix<Complex64> {
        debug_assert_eq!(a.nrows(), self.dim);
        let mut out = DMatrix::zeros(self.dim, a.ncols());
        for (r, row) in self.by_row.iter().enumerate() {
            for &(c, v) in row {
                for j in 0..a.ncols() {
                    out[(r, j)] += a[(c, j)] * v;
                }
            }
        }
        ops.add((self.nnz() * a.ncols()) as u64);
        out
    }

    /// `a · self`; costs one multiply-add per stored entry per row of `a`.
    pub fn right_mul(&self, a: &DMatrix<Complex64>, ops: &mut OpCounter) -> DMatrix<Complex64> {
        debug_assert_eq!(a.ncols(), self.dim);
        let mut out = DMatrix::zeros(a.nrows(), self.dim);
        for (c, col) in self.by_col.iter().enumerate() {
            for &(r, v) in col {
                for i in 0..a.nrows() {
                    out[(i, c)] += a[(i, r)] * v;
                }
            }
        }
        ops.add((self.nnz() * a.nrows()) as u64);
        out
    }
}

/// Block-diagonal matrix from square blocks, in order.
pub fn block_diag<T>(blocks: &[&DMatrix<T>]) -> DMatrix<T>
where
    T: nalgebra::Scalar + Zero,
{
    let dim: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = DMatrix::from_element(dim, dim, T::zero());
    let mut off = 0;
    for b in blocks {
        out.view_mut((off, off), (b.nrows(), b.ncols())).copy_from(*b);
        off += b.nrows();
    }
    out
}
