//! Dense exact linear algebra over GF(4).
//!
//! Matrices are immutable values stored row-major; every operation returns a
//! new matrix. All of the paper-scale matrices here are tiny (at most a few
//! hundred entries), so there is no sparse representation and no pivoting
//! heuristic beyond "first nonzero", which keeps reduced row echelon forms
//! deterministic.

use crate::galois::F4;
use crate::{Error, Result};
use std::fmt;
use std::ops::{Index, IndexMut};

/// A dense matrix over GF(4).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F4>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<F4>) -> Matrix {
        assert_eq!(rows * cols, data.len(), "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix::new(rows, cols, vec![F4::ZERO; rows * cols])
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F4::ONE;
        }
        m
    }

    /// All-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Matrix {
        Matrix::new(rows, cols, vec![F4::ONE; rows * cols])
    }

    pub fn from_rows(rows: &[Vec<F4>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.concat())
    }

    /// Parses rows of symbols, rows separated by `;`. Intended for matrices
    /// written inline in code; panics on malformed input.
    pub fn parse(text: &str) -> Matrix {
        let rows: Vec<Vec<F4>> = text
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| {
                        F4::from_symbol(tok)
                            .unwrap_or_else(|| panic!("bad GF(4) symbol `{tok}`"))
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<F4> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<F4> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::new(self.rows + other.rows, self.cols, data)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut data = Vec::with_capacity((self.cols + other.cols) * self.rows);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix::new(self.rows, self.cols + other.cols, data)
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let s = self[(i, k)];
                if s.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += s * other[(k, j)];
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn act_row(&self, v: &[F4]) -> Vec<F4> {
        assert_eq!(v.len(), self.rows, "act_row length mismatch");
        let mut out = vec![F4::ZERO; self.cols];
        for (i, &s) in v.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(i)) {
                *o += s * m;
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn act_col(&self, v: &[F4]) -> Vec<F4> {
        assert_eq!(v.len(), self.cols, "act_col length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F4::ZERO, |acc, (&m, &x)| acc + m * x)
            })
            .collect()
    }

    pub fn scale(&self, s: F4) -> Matrix {
        Matrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(|&x| x * s).collect(),
        )
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(&x, &y)| x + y)
                .collect(),
        )
    }

    pub fn select_rows(&self, sel: &[usize]) -> Matrix {
        let rows: Vec<Vec<F4>> = sel.iter().map(|&i| self.row_vec(i)).collect();
        if rows.is_empty() {
            Matrix::zeros(0, self.cols)
        } else {
            Matrix::from_rows(&rows)
        }
    }

    pub fn select_cols(&self, sel: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, sel.len());
        for i in 0..self.rows {
            for (jj, &j) in sel.iter().enumerate() {
                out[(i, jj)] = self[(i, j)];
            }
        }
        out
    }

    /// Deletes the given columns (indices need not be sorted).
    pub fn delete_cols(&self, del: &[usize]) -> Matrix {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !del.contains(j)).collect();
        self.select_cols(&keep)
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i,j] * other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let s = self[(i, j)];
                if s.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out[(i * other.rows + p, j * other.cols + q)] = s * other[(p, q)];
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column list.
    ///
    /// Deterministic: pivots are chosen as the first nonzero entry below the
    /// current row in each column, scanned left to right.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let tmp = m[(r, j)];
                    m[(r, j)] = m[(p, j)];
                    m[(p, j)] = tmp;
                }
            }
            let inv = m[(r, c)].inv();
            for j in 0..m.cols {
                m[(r, j)] = m[(r, j)] * inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)];
                    for j in 0..m.cols {
                        let v = m[(r, j)];
                        m[(i, j)] += f * v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the row space, as the nonzero rows of the RREF.
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// Basis of the right kernel `{x : m·xᵀ = 0}`, one basis vector per row.
    ///
    /// The result has `cols()` columns and `cols() − rank()` rows.
    pub fn null_space(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![F4::ZERO; self.cols];
            v[f] = F4::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                // x_p = r[i, f] in characteristic 2
                v[p] = r[(i, f)];
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Matrix::zeros(0, self.cols)
        } else {
            Matrix::from_rows(&rows)
        }
    }

    /// Basis of the left kernel `{x : x·m = 0}`, one vector per row.
    pub fn left_null_space(&self) -> Matrix {
        self.transpose().null_space()
    }

    /// One solution of `m·xᵀ = rhs`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &[F4]) -> Option<Vec<F4>> {
        self.solve_affine(rhs).map(|(x, _)| x)
    }

    /// Particular solution plus kernel basis for `m·xᵀ = rhs`; `None` when
    /// inconsistent. The solution is unique iff the kernel has no rows.
    pub fn solve_affine(&self, rhs: &[F4]) -> Option<(Vec<F4>, Matrix)> {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal row count");
        let rhs_col = Matrix::new(self.rows, 1, rhs.to_vec());
        let aug = self.hstack(&rhs_col);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the rhs column
        }
        let mut x = vec![F4::ZERO; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)];
        }
        Some((x, self.null_space()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = F4;
    fn index(&self, (i, j): (usize, usize)) -> &F4 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F4 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h_delta3() -> Matrix {
        Matrix::parse("1 0 1; 0 1 1")
    }

    #[test]
    fn rref_identity_is_fixed_point() {
        let i3 = Matrix::identity(3);
        let (r, pivots) = i3.rref();
        assert_eq!(r, i3);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zeros(2, 5);
        let (r, pivots) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_preserves_row_space() {
        let m = Matrix::parse("1 a b 0; 0 1 1 1; 1 b a 1");
        let (r, _) = m.rref();
        // Every row of r is a combination of rows of m and vice versa.
        assert_eq!(m.row_basis(), r.row_basis());
    }

    #[test]
    fn null_space_of_repetition_parity_is_all_ones() {
        let ns = h_delta3().null_space();
        assert_eq!(ns.rows(), 1);
        assert_eq!(ns.row(0), &[F4::ONE, F4::ONE, F4::ONE]);
    }

    #[test]
    fn null_space_of_full_rank_square_is_empty() {
        let m = Matrix::parse("1 a; b 1");
        assert_eq!(m.rank(), 2);
        assert_eq!(m.null_space().rows(), 0);
    }

    #[test]
    fn null_space_rows_annihilated() {
        let m = Matrix::parse("1 0 1 1; 0 1 b a");
        let ns = m.null_space();
        assert_eq!(ns.rows(), 2);
        for i in 0..ns.rows() {
            assert!(m.act_col(ns.row(i)).iter().all(|x| x.is_zero()));
        }
        assert_eq!(ns.rank(), 2);
    }

    #[test]
    fn kron_identity_block_diagonal() {
        let h = Matrix::parse("1 0 1 1; 0 1 b a");
        let k = Matrix::identity(2).kron(&h);
        assert_eq!((k.rows(), k.cols()), (4, 8));
        for i in 0..2 {
            for j in 0..4 {
                assert_eq!(k[(i, j)], h[(i, j)]);
                assert_eq!(k[(2 + i, 4 + j)], h[(i, j)]);
                assert_eq!(k[(i, 4 + j)], F4::ZERO);
                assert_eq!(k[(2 + i, j)], F4::ZERO);
            }
        }
    }

    #[test]
    fn kron_row_vectors() {
        let a = Matrix::parse("1 1");
        let b = Matrix::parse("1 0 1");
        let k = a.kron(&b);
        assert_eq!(k, Matrix::parse("1 0 1 1 0 1"));
    }

    #[test]
    fn kron_block_count_matches_direct_expansion() {
        let b1 = Matrix::parse("1 1 1 1 0; 0 1 a b 1");
        let k = Matrix::identity(3).kron(&b1);
        assert_eq!((k.rows(), k.cols()), (6, 15));
        // Direct expansion oracle.
        for i in 0..6 {
            for j in 0..15 {
                let expected = if i / 2 == j / 5 {
                    b1[(i % 2, j % 5)]
                } else {
                    F4::ZERO
                };
                assert_eq!(k[(i, j)], expected);
            }
        }
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(2);
        let x = m.solve(&[F4::A, F4::B]).unwrap();
        assert_eq!(x, vec![F4::A, F4::B]);
    }

    #[test]
    fn solve_underdetermined_returns_some_solution() {
        let m = Matrix::parse("1 1");
        let (x, kernel) = m.solve_affine(&[F4::ZERO]).unwrap();
        assert!(m.act_col(&x).iter().all(|v| v.is_zero()));
        assert_eq!(kernel.rows(), 1);
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::parse("1; 1");
        assert!(m.solve(&[F4::ONE, F4::A]).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        ((1usize..=8, 1usize..=12)).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u8..4, r * c)
                .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(F4::from_bits).collect()))
        })
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.null_space().rows(), m.cols());
        }

        #[test]
        fn kron_is_bilinear(a in arb_matrix(), b in arb_matrix(), c in arb_matrix()) {
            // shapes of b and c must agree for the sum
            let c = Matrix::new(b.rows(), b.cols(),
                (0..b.rows()*b.cols()).map(|i| c.row(i % c.rows())[i % c.cols()]).collect());
            let lhs = a.kron(&b.add(&c));
            let rhs = a.kron(&b).add(&a.kron(&c));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
