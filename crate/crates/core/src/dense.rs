use std::ops::Range;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Row-major matrix of exact rationals with positive dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::EntryCount {
                rows: r,
                cols: c,
                found: r * c - c + bad.len(),
            });
        }
        DenseMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience for integer literals: `DenseMatrix::from_int_rows(&[[1, 2], [3, 4]])`.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        DenseMatrix::from_rows(
            rows.iter()
                .map(|row| row.as_ref().iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        DenseMatrix::new(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        DenseMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        DenseMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 0-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(
            i < self.rows && j < self.cols,
            "entry ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.entries
            .chunks(self.cols)
            .map(<[Rational]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Square with `m[i][j] == m[j][i]`.
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Copy of the rectangle `rows x cols` (both ranges non-empty and in bounds).
    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> DenseMatrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            entries.extend_from_slice(&self.row(i)[cols.clone()]);
        }
        DenseMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, lambda: &Rational) -> DenseMatrix {
        self.map(|x| lambda * x)
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut entries[i * other.cols..(i + 1) * other.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (acc, b) in out.iter_mut().zip(other.row(k)) {
                    *acc += &(a * b);
                }
            }
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Stacks matrices with equal column counts top to bottom.
    pub fn vstack(parts: &[DenseMatrix]) -> Result<DenseMatrix> {
        let first = parts.first().ok_or(Error::EmptyAxis)?;
        if let Some(bad) = parts.iter().find(|p| p.cols != first.cols) {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns over {}",
                first.cols, bad.cols
            )));
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        let entries = parts
            .iter()
            .flat_map(|p| p.entries.iter().cloned())
            .collect();
        DenseMatrix::new(rows, first.cols, entries)
    }

    /// Joins matrices with equal row counts left to right.
    pub fn hstack(parts: &[DenseMatrix]) -> Result<DenseMatrix> {
        let transposed: Vec<DenseMatrix> = parts.iter().map(DenseMatrix::transpose).collect();
        DenseMatrix::vstack(&transposed)
            .map(|m| m.transpose())
            .map_err(|e| match e {
                Error::DimensionMismatch(_) => Error::DimensionMismatch(
                    "cannot join matrices with different row counts".into(),
                ),
                other => other,
            })
    }
}
