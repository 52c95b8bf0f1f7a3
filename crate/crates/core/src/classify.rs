//! Shape and symmetry taxonomy for supermatrices and their unions.
//!
//! [`union_class`] reports the most specific union shape: a union of row
//! supervectors that are all wider than tall is reported as
//! [`UnionShape::SpecialRowNVector`], and [`UnionShape::is_row_n_vector`]
//! is true for both labels. Orientation labels take precedence over the
//! square/rectangular labels, which only apply when the partitions do not
//! single out a direction.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::supermatrix::SuperMatrix;
use crate::union::{self, SuperNMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    Simple,
    /// Column cuts only.
    RowSupervector,
    /// Row cuts only.
    ColumnSupervector,
    GeneralSuper,
}

impl ShapeClass {
    pub fn label(self) -> &'static str {
        match self {
            ShapeClass::Simple => "simple",
            ShapeClass::RowSupervector => "row_supervector",
            ShapeClass::ColumnSupervector => "column_supervector",
            ShapeClass::GeneralSuper => "general_super",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnionShape {
    RowNVector,
    ColumnNVector,
    SpecialRowNVector,
    SpecialColumnNVector,
    Square(usize),
    MixedSquare,
    Rectangular(usize, usize),
    MixedRectangular,
    Mixed,
}

impl UnionShape {
    pub fn is_row_n_vector(self) -> bool {
        matches!(self, UnionShape::RowNVector | UnionShape::SpecialRowNVector)
    }

    pub fn is_column_n_vector(self) -> bool {
        matches!(
            self,
            UnionShape::ColumnNVector | UnionShape::SpecialColumnNVector
        )
    }

    pub fn is_special(self) -> bool {
        matches!(
            self,
            UnionShape::SpecialRowNVector | UnionShape::SpecialColumnNVector
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    QuasiSymmetric,
    None,
}

impl Symmetry {
    pub fn label(self) -> &'static str {
        match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::QuasiSymmetric => "quasi_symmetric",
            Symmetry::None => "none",
        }
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl fmt::Display for UnionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnionShape::RowNVector => f.write_str("row_n_vector"),
            UnionShape::ColumnNVector => f.write_str("column_n_vector"),
            UnionShape::SpecialRowNVector => f.write_str("special_row_n_vector"),
            UnionShape::SpecialColumnNVector => f.write_str("special_column_n_vector"),
            UnionShape::Square(t) => write!(f, "square({t})"),
            UnionShape::MixedSquare => f.write_str("mixed_square"),
            UnionShape::Rectangular(m, t) => write!(f, "rectangular({m},{t})"),
            UnionShape::MixedRectangular => f.write_str("mixed_rectangular"),
            UnionShape::Mixed => f.write_str("mixed"),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

macro_rules! serialize_as_display {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

serialize_as_display!(ShapeClass, UnionShape, Symmetry);

/// Everything [`union_class`] knows about a union. Serializes with stable keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub arity: usize,
    pub component_shapes: Vec<ShapeClass>,
    pub union_shape: UnionShape,
    pub symmetry: Symmetry,
    pub semi_super: bool,
    pub proper: bool,
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shapes: Vec<&str> = self.component_shapes.iter().map(|s| s.label()).collect();
        writeln!(f, "arity: {}", self.arity)?;
        writeln!(f, "component_shapes: {}", shapes.join(", "))?;
        writeln!(f, "union_shape: {}", self.union_shape)?;
        writeln!(f, "symmetry: {}", self.symmetry)?;
        writeln!(f, "semi_super: {}", self.semi_super)?;
        write!(f, "proper: {}", self.proper)
    }
}

pub fn shape_class(s: &SuperMatrix) -> ShapeClass {
    match (
        s.row_partition().is_trivial(),
        s.col_partition().is_trivial(),
    ) {
        (true, true) => ShapeClass::Simple,
        (true, false) => ShapeClass::RowSupervector,
        (false, true) => ShapeClass::ColumnSupervector,
        (false, false) => ShapeClass::GeneralSuper,
    }
}

/// Square, symmetric entries, and partitioned the same way on both axes.
pub fn is_symmetric_super(s: &SuperMatrix) -> bool {
    s.row_partition() == s.col_partition() && s.data().is_symmetric()
}

pub fn union_shape(u: &SuperNMatrix) -> UnionShape {
    let classes: Vec<ShapeClass> = u.components().iter().map(shape_class).collect();
    let partitioned: Vec<ShapeClass> = classes
        .iter()
        .copied()
        .filter(|&c| c != ShapeClass::Simple)
        .collect();
    let all_partitioned_are =
        |class| !partitioned.is_empty() && partitioned.iter().all(|&c| c == class);

    if all_partitioned_are(ShapeClass::RowSupervector) {
        return if u.components().iter().all(|c| c.rows() < c.cols()) {
            UnionShape::SpecialRowNVector
        } else {
            UnionShape::RowNVector
        };
    }
    if all_partitioned_are(ShapeClass::ColumnSupervector) {
        return if u.components().iter().all(|c| c.rows() > c.cols()) {
            UnionShape::SpecialColumnNVector
        } else {
            UnionShape::ColumnNVector
        };
    }

    let shapes: Vec<(usize, usize)> = u.components().iter().map(SuperMatrix::shape).collect();
    let squares = shapes.iter().filter(|(m, n)| m == n).count();
    let uniform = shapes.windows(2).all(|w| w[0] == w[1]);
    let (m, n) = shapes[0];
    if squares == shapes.len() {
        if uniform {
            UnionShape::Square(m)
        } else {
            UnionShape::MixedSquare
        }
    } else if squares == 0 {
        if uniform {
            UnionShape::Rectangular(m, n)
        } else {
            UnionShape::MixedRectangular
        }
    } else {
        UnionShape::Mixed
    }
}

pub fn symmetry_class(u: &SuperNMatrix) -> Symmetry {
    let symmetric = u
        .components()
        .iter()
        .filter(|c| is_symmetric_super(c))
        .count();
    if symmetric == u.arity() {
        Symmetry::Symmetric
    } else if symmetric > 0 {
        Symmetry::QuasiSymmetric
    } else {
        Symmetry::None
    }
}

pub fn union_class(u: &SuperNMatrix) -> ClassReport {
    ClassReport {
        arity: u.arity(),
        component_shapes: u.components().iter().map(shape_class).collect(),
        union_shape: union_shape(u),
        symmetry: symmetry_class(u),
        semi_super: union::is_semi_super(u),
        proper: union::is_proper(u),
    }
}
