//! Dense linear algebra over a [`Field`]: reduced row echelon form, rank,
//! right null space, and row-space intersection dimensions.
//!
//! Elimination pivots on the first nonzero entry scanning rows top-down, so
//! every result is deterministic.

use crate::field::{Field, FieldElement};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Output of [`Matrix::rref`].
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|e| e.value()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// An empty matrix with a definite column count (0 x cols).
    pub fn empty(field: &Field, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows: 0,
            cols,
            data: Vec::new(),
        }
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "cross-field matrix product");
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Vertical stack; both operands keep their row order.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "cross-field stack");
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn columns_submatrix(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form with rank and pivot columns. Pivoting takes
    /// the first row with a nonzero entry in the current column.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(pr, j));
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                m.set(r, j, f.mul(m.get(r, j), inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let e = m.get(i, c);
                if e.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(e, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space: rows x with M x^T = 0. Row count is
    /// cols - rank.
    pub fn kernel(&self) -> Matrix {
        let f = &self.field;
        let rref = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in rref.pivot_cols.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for fc in 0..self.cols {
            if pivot_of_col[fc].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (c, p) in pivot_of_col.iter().enumerate() {
                if let Some(pr) = p {
                    v[c] = f.neg(rref.matrix.get(*pr, fc));
                }
            }
            basis.push(v);
        }
        if basis.is_empty() {
            Matrix::empty(f, self.cols)
        } else {
            Matrix::from_rows(f, basis)
        }
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let rref = self.rref();
        let mut v = v.to_vec();
        for (i, &c) in rref.pivot_cols.iter().enumerate() {
            let e = v[c];
            if e.is_zero() {
                continue;
            }
            for (j, vj) in v.iter_mut().enumerate() {
                *vj = f.sub(*vj, f.mul(e, rref.matrix.get(i, j)));
            }
        }
        v.iter().all(|e| e.is_zero())
    }
}

/// Dimension of the intersection of the two row spaces, computed as
/// k1 + k2 - rank([G1; G2]). Both generators must have full row rank.
pub fn stack_rank_intersection(g1: &Matrix, g2: &Matrix) -> Result<usize> {
    if g1.field != g2.field {
        return Err(Error::FieldMismatch);
    }
    if g1.cols != g2.cols {
        return Err(Error::DimensionMismatch(
            "row spaces live in different ambient spaces".into(),
        ));
    }
    if g1.rank() != g1.rows || g2.rank() != g2.rows {
        return Err(Error::RankDeficient);
    }
    Ok(g1.rows + g2.rows - g1.vstack(g2).rank())
}
