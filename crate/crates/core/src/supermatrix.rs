//! Partitioned matrices.
//!
//! A [`SuperMatrix`] is a [`DenseMatrix`] together with one [`Partition`] per
//! axis. The partitions induce a grid of blocks; block indices are 1-based,
//! so `block(1, 1)` is the top-left submatrix. A matrix whose partitions are
//! both trivial is an ordinary ("simple") matrix.

use std::fmt;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Row => "rows",
            Axis::Column => "columns",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperMatrix {
    data: DenseMatrix,
    row_partition: Partition,
    col_partition: Partition,
}

impl SuperMatrix {
    pub fn new(
        data: DenseMatrix,
        row_partition: Partition,
        col_partition: Partition,
    ) -> Result<Self> {
        if row_partition.len() != data.rows() {
            return Err(Error::DimensionMismatch(format!(
                "row partition covers {} rows but the matrix has {}",
                row_partition.len(),
                data.rows()
            )));
        }
        if col_partition.len() != data.cols() {
            return Err(Error::DimensionMismatch(format!(
                "column partition covers {} columns but the matrix has {}",
                col_partition.len(),
                data.cols()
            )));
        }
        Ok(SuperMatrix {
            data,
            row_partition,
            col_partition,
        })
    }

    /// Builds the partitions from cut lists.
    pub fn with_cuts(
        data: DenseMatrix,
        row_cuts: Vec<usize>,
        col_cuts: Vec<usize>,
    ) -> Result<Self> {
        let rows = Partition::new(data.rows(), row_cuts)?;
        let cols = Partition::new(data.cols(), col_cuts)?;
        SuperMatrix::new(data, rows, cols)
    }

    pub fn simple(data: DenseMatrix) -> Self {
        let rows = Partition::trivial(data.rows()).expect("positive extent");
        let cols = Partition::trivial(data.cols()).expect("positive extent");
        SuperMatrix {
            data,
            row_partition: rows,
            col_partition: cols,
        }
    }

    /// Identity matrix partitioned the same way on both axes.
    pub fn identity(partition: &Partition) -> Self {
        let data = DenseMatrix::identity(partition.len()).expect("positive extent");
        SuperMatrix {
            data,
            row_partition: partition.clone(),
            col_partition: partition.clone(),
        }
    }

    pub fn zeros(row_partition: Partition, col_partition: Partition) -> Self {
        let data =
            DenseMatrix::zeros(row_partition.len(), col_partition.len()).expect("positive extent");
        SuperMatrix {
            data,
            row_partition,
            col_partition,
        }
    }

    pub fn data(&self) -> &DenseMatrix {
        &self.data
    }

    pub fn row_partition(&self) -> &Partition {
        &self.row_partition
    }

    pub fn col_partition(&self) -> &Partition {
        &self.col_partition
    }

    pub fn partition(&self, axis: Axis) -> &Partition {
        match axis {
            Axis::Row => &self.row_partition,
            Axis::Column => &self.col_partition,
        }
    }

    pub fn rows(&self) -> usize {
        self.data.rows()
    }

    pub fn cols(&self) -> usize {
        self.data.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.data.shape()
    }

    /// True when neither axis carries a cut.
    pub fn is_simple(&self) -> bool {
        self.row_partition.is_trivial() && self.col_partition.is_trivial()
    }

    /// `(row blocks, column blocks)`.
    pub fn grid_shape(&self) -> (usize, usize) {
        (
            self.row_partition.block_count(),
            self.col_partition.block_count(),
        )
    }

    /// Copy of block `(i, j)`, both 1-based.
    pub fn block(&self, i: usize, j: usize) -> Result<DenseMatrix> {
        let (row_blocks, col_blocks) = self.grid_shape();
        if i == 0 || j == 0 || i > row_blocks || j > col_blocks {
            return Err(Error::BlockIndexOutOfRange {
                i,
                j,
                row_blocks,
                col_blocks,
            });
        }
        let rows = self.row_partition.ranges().swap_remove(i - 1);
        let cols = self.col_partition.ranges().swap_remove(j - 1);
        Ok(self.data.submatrix(rows, cols))
    }

    /// All blocks in row-major grid order.
    pub fn blocks(&self) -> Vec<Vec<DenseMatrix>> {
        let col_ranges = self.col_partition.ranges();
        self.row_partition
            .ranges()
            .into_iter()
            .map(|rows| {
                col_ranges
                    .iter()
                    .map(|cols| self.data.submatrix(rows.clone(), cols.clone()))
                    .collect()
            })
            .collect()
    }

    /// The underlying simple matrix; partitions are dropped.
    pub fn flatten(&self) -> DenseMatrix {
        self.data.clone()
    }

    pub fn into_data(self) -> DenseMatrix {
        self.data
    }

    /// Splits along `axis` into block strips.
    ///
    /// `Axis::Row` yields the block rows top to bottom, each keeping this
    /// matrix's column partition and a trivial row partition; `Axis::Column`
    /// yields the block columns left to right.
    pub fn strips(&self, axis: Axis) -> Vec<SuperMatrix> {
        match axis {
            Axis::Row => self
                .row_partition
                .ranges()
                .into_iter()
                .map(|rows| SuperMatrix {
                    row_partition: Partition::trivial(rows.len()).expect("non-empty block"),
                    data: self.data.submatrix(rows, 0..self.cols()),
                    col_partition: self.col_partition.clone(),
                })
                .collect(),
            Axis::Column => self
                .col_partition
                .ranges()
                .into_iter()
                .map(|cols| SuperMatrix {
                    col_partition: Partition::trivial(cols.len()).expect("non-empty block"),
                    data: self.data.submatrix(0..self.rows(), cols),
                    row_partition: self.row_partition.clone(),
                })
                .collect(),
        }
    }

    /// Joins parts along `axis`, cutting at every seam.
    ///
    /// Stacking along `Axis::Row` places the parts top to bottom; they must
    /// share the column partition. Internal row cuts of each part are kept.
    /// This is the inverse of [`SuperMatrix::strips`].
    pub fn concat(parts: &[SuperMatrix], axis: Axis) -> Result<SuperMatrix> {
        let first = parts.first().ok_or(Error::Concat {
            axis,
            reason: "no parts".into(),
        })?;
        let across = axis_other(axis);
        if let Some((k, _)) = parts
            .iter()
            .enumerate()
            .find(|(_, p)| p.partition(across) != first.partition(across))
        {
            return Err(Error::Concat {
                axis,
                reason: format!("part {} has a different {} partition", k + 1, across),
            });
        }
        let mut cuts = Vec::new();
        let mut offset = 0;
        for part in parts {
            if offset > 0 {
                cuts.push(offset);
            }
            cuts.extend(part.partition(axis).cuts().iter().map(|c| c + offset));
            offset += part.partition(axis).len();
        }
        let along = Partition::new(offset, cuts)?;
        let datas: Vec<DenseMatrix> = parts.iter().map(|p| p.data.clone()).collect();
        match axis {
            Axis::Row => SuperMatrix::new(
                DenseMatrix::vstack(&datas)?,
                along,
                first.col_partition.clone(),
            ),
            Axis::Column => SuperMatrix::new(
                DenseMatrix::hstack(&datas)?,
                first.row_partition.clone(),
                along,
            ),
        }
    }
}

fn axis_other(axis: Axis) -> Axis {
    match axis {
        Axis::Row => Axis::Column,
        Axis::Column => Axis::Row,
    }
}
