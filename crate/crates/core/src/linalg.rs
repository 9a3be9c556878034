//! Dense matrices over a [`Field`] and the exact elimination routines built on them.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Row-major dense matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// `G` row-reduced to `[I : P]` after permuting columns by `permutation`
/// (new column `j` is old column `permutation[j]`).
#[derive(Clone, Debug)]
pub struct Systematic {
    pub reduced: Matrix,
    pub parity: Matrix,
    pub permutation: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Fe::ONE;
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Fe,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Fe>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<Fe> = rows.into_iter().flatten().collect();
        if let Some(x) = data.iter().find(|x| !field.contains(**x)) {
            return Err(Error::NotAnElement {
                value: x.value(),
                q: field.order(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows: data.len().checked_div(cols).unwrap_or(0),
            cols,
            data,
        })
    }

    /// Convenience constructor from integer encodings.
    pub fn from_u64(field: &Field, rows: &[&[u64]]) -> Result<Matrix> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.elem(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(Matrix::from_fn(f, self.rows, other.cols, |i, j| {
            f.sum((0..self.cols).map(|l| f.mul(self[(i, l)], other[(l, j)])))
        }))
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = &self.field;
        Ok((0..self.cols)
            .map(|j| f.sum((0..self.rows).map(|i| f.mul(v[i], self[(i, j)]))))
            .collect())
    }

    /// The columns listed in `cols`, in that order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, cols.len(), |i, j| {
            self[(i, cols[j])]
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, rows.len(), self.cols, |i, j| {
            self[(rows[i], j)]
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                "vstack column counts differ".into(),
            ));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        Ok(Matrix::from_fn(
            &self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self[(i, j)]
                } else {
                    other[(i, j - self.cols)]
                }
            },
        ))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row-echelon form with first-nonzero pivot selection.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m[(r, c)]).expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = f.mul(m[(r, j)], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let t = f.mul(factor, m[(r, j)]);
                    m[(i, j)] = f.sub(m[(i, j)], t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Determinant by elimination, tracking row swaps.
    pub fn det(&self) -> Result<Fe> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(det_in_place(&self.field, &mut self.data.clone(), self.rows))
    }

    /// `[I : P]` form. For inputs whose leading `rows x rows` block is invertible the
    /// permutation is the identity.
    pub fn systematic_form(&self) -> Result<Systematic> {
        let Rref {
            matrix,
            rank,
            pivots,
        } = self.rref();
        if rank < self.rows {
            return Err(Error::RankDeficient {
                rank,
                expected: self.rows,
            });
        }
        let mut permutation = pivots.clone();
        permutation.extend((0..self.cols).filter(|c| !pivots.contains(c)));
        let reduced = matrix.select_columns(&permutation);
        let rest: Vec<usize> = (self.rows..self.cols).collect();
        let parity = reduced.select_columns(&rest);
        Ok(Systematic {
            reduced,
            parity,
            permutation,
        })
    }

    /// Checks every `rows x rows` column-submatrix, in lexicographic column order.
    /// Returns the first singular column set, or `None` when all are nonsingular.
    pub fn first_singular_maximal_minor(&self) -> Option<Vec<usize>> {
        let k = self.rows;
        if k > self.cols {
            return Some((0..self.cols).collect());
        }
        let mut buf = vec![Fe::ZERO; k * k];
        (0..self.cols).combinations(k).find(|cols| {
            for i in 0..k {
                for (jj, &c) in cols.iter().enumerate() {
                    buf[i * k + jj] = self[(i, c)];
                }
            }
            det_in_place(&self.field, &mut buf, k).is_zero()
        })
    }

    /// Whether every maximal minor is nonzero (the MDS criterion for a generator matrix).
    pub fn all_maximal_minors_nonzero(&self) -> bool {
        self.first_singular_maximal_minor().is_none()
    }

    /// Rows form a basis of the right null space `{x : M x^T = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis[(b, fc)] = Fe::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                basis[(b, pc)] = f.neg(matrix[(r, fc)]);
            }
        }
        basis
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[Fe]) -> Result<bool> {
        let row = Matrix::from_rows(&self.field, vec![v.to_vec()])?;
        Ok(self.vstack(&row)?.rank() == self.rank())
    }
}

/// Determinant of a row-major `n x n` buffer; the buffer is destroyed.
pub(crate) fn det_in_place(f: &Field, a: &mut [Fe], n: usize) -> Fe {
    let mut det = Fe::ONE;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[i * n + c].is_zero()) else {
            return Fe::ZERO;
        };
        if pr != c {
            for j in 0..n {
                a.swap(c * n + j, pr * n + j);
            }
            det = f.neg(det);
        }
        let piv = a[c * n + c];
        det = f.mul(det, piv);
        let inv = f.inv(piv).expect("pivot is nonzero");
        for i in c + 1..n {
            let factor = f.mul(a[i * n + c], inv);
            if factor.is_zero() {
                continue;
            }
            for j in c..n {
                let t = f.mul(factor, a[c * n + j]);
                a[i * n + j] = f.sub(a[i * n + j], t);
            }
        }
    }
    det
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Fe;
    fn index(&self, (i, j): (usize, usize)) -> &Fe {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Fe {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix {}x{} over {:?}\n{}",
            self.rows, self.cols, self.field, self
        )
    }
}
