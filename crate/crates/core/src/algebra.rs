//! Arithmetic on single supermatrices.
//!
//! Addition needs identical shapes *and* identical partitions. Products need
//! the left operand's column partition to equal the right operand's row
//! partition; the result takes its row partition from the left factor and
//! its column partition from the right. Row-by-column supervector products
//! therefore come out unpartitioned, column-by-row products come out fully
//! partitioned, and everything in between follows from the same rule.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::supermatrix::SuperMatrix;

/// Which Gram product to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `A * A^T`
    Right,
    /// `A^T * A`
    Left,
}

/// Partitions that certified a product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness {
    pub inner_partition: Partition,
    pub left_row_partition: Partition,
    pub right_col_partition: Partition,
}

/// Same entries; partitions ignored.
pub fn value_eq(a: &SuperMatrix, b: &SuperMatrix) -> bool {
    a.data() == b.data()
}

/// Same entries and same partitions on both axes.
pub fn strict_eq(a: &SuperMatrix, b: &SuperMatrix) -> bool {
    a == b
}

fn check_addable(a: &SuperMatrix, b: &SuperMatrix) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch(format!(
            "cannot add {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.row_partition() != b.row_partition() {
        return Err(Error::PartitionMismatch(format!(
            "row cuts {:?} vs {:?}; addition needs identical partitions",
            a.row_partition().cuts(),
            b.row_partition().cuts()
        )));
    }
    if a.col_partition() != b.col_partition() {
        return Err(Error::PartitionMismatch(format!(
            "column cuts {:?} vs {:?}; addition needs identical partitions",
            a.col_partition().cuts(),
            b.col_partition().cuts()
        )));
    }
    Ok(())
}

pub fn add(a: &SuperMatrix, b: &SuperMatrix) -> Result<SuperMatrix> {
    check_addable(a, b)?;
    SuperMatrix::new(
        a.data().add(b.data())?,
        a.row_partition().clone(),
        a.col_partition().clone(),
    )
}

/// `a + (-1) b`.
pub fn sub(a: &SuperMatrix, b: &SuperMatrix) -> Result<SuperMatrix> {
    add(a, &scale(&Rational::from(-1), b))
}

pub fn scale(lambda: &Rational, a: &SuperMatrix) -> SuperMatrix {
    SuperMatrix::new(
        a.data().scale(lambda),
        a.row_partition().clone(),
        a.col_partition().clone(),
    )
    .expect("scaling preserves shape")
}

/// Transposes entries and swaps the row and column partitions.
pub fn transpose(a: &SuperMatrix) -> SuperMatrix {
    SuperMatrix::new(
        a.data().transpose(),
        a.col_partition().clone(),
        a.row_partition().clone(),
    )
    .expect("transposed partitions fit the transposed matrix")
}

/// Block product of `a` and `b`.
pub fn super_mul(a: &SuperMatrix, b: &SuperMatrix) -> Result<(SuperMatrix, ProductWitness)> {
    if a.cols() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.col_partition() != b.row_partition() {
        return Err(Error::PartitionMismatch(format!(
            "left column cuts {:?} vs right row cuts {:?}; products need them identical",
            a.col_partition().cuts(),
            b.row_partition().cuts()
        )));
    }
    let data = a.data().mul(b.data())?;
    let witness = ProductWitness {
        inner_partition: a.col_partition().clone(),
        left_row_partition: a.row_partition().clone(),
        right_col_partition: b.col_partition().clone(),
    };
    let product = SuperMatrix::new(
        data,
        witness.left_row_partition.clone(),
        witness.right_col_partition.clone(),
    )?;
    Ok((product, witness))
}

/// `A A^T` or `A^T A`; always symmetric and symmetrically partitioned.
pub fn gram(a: &SuperMatrix, side: Side) -> SuperMatrix {
    let t = transpose(a);
    let (left, right) = match side {
        Side::Right => (a, &t),
        Side::Left => (&t, a),
    };
    super_mul(left, right)
        .expect("a matrix is always compatible with its transpose")
        .0
}
