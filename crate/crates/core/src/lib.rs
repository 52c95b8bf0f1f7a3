//! Exact block-partitioned matrices ("supermatrices"), unions of them, their
//! classification, and a plain-text interchange format.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod dense;
pub mod error;
pub mod partition;
pub mod rational;
pub mod supermatrix;
pub mod textio;
pub mod union;

pub use algebra::{ProductWitness, Side};
pub use classify::{ClassReport, ShapeClass, Symmetry, UnionShape};
pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use partition::Partition;
pub use rational::Rational;
pub use supermatrix::{Axis, SuperMatrix};
pub use union::SuperNMatrix;
