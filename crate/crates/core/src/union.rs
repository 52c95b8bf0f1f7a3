//! Unions of supermatrices (`A1 U A2 U ... U An`).
//!
//! Every operation acts componentwise. Failures are wrapped in
//! [`Error::Component`] naming the first offending component (1-based).
//! The constructor does not require the components to be distinct; use
//! [`is_proper`] for that.

use crate::algebra::{self, Side};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::supermatrix::SuperMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperNMatrix {
    components: Vec<SuperMatrix>,
}

impl SuperNMatrix {
    pub fn new(components: Vec<SuperMatrix>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyUnion);
        }
        Ok(SuperNMatrix { components })
    }

    pub fn single(component: SuperMatrix) -> Self {
        SuperNMatrix {
            components: vec![component],
        }
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[SuperMatrix] {
        &self.components
    }

    /// 1-based, like the component numbering in diagnostics.
    pub fn component(&self, k: usize) -> Option<&SuperMatrix> {
        k.checked_sub(1).and_then(|i| self.components.get(i))
    }

    pub fn into_components(self) -> Vec<SuperMatrix> {
        self.components
    }

    pub fn map(&self, f: impl Fn(&SuperMatrix) -> SuperMatrix) -> SuperNMatrix {
        SuperNMatrix {
            components: self.components.iter().map(f).collect(),
        }
    }

    /// Pairs components of `self` and `other` and applies `f`, stopping at the first failure.
    pub fn zip_with(
        &self,
        other: &SuperNMatrix,
        f: impl Fn(&SuperMatrix, &SuperMatrix) -> Result<SuperMatrix>,
    ) -> Result<SuperNMatrix> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .enumerate()
            .map(|(i, (a, b))| f(a, b).map_err(|e| e.in_component(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SuperNMatrix { components })
    }
}

pub fn make_union(components: Vec<SuperMatrix>) -> Result<SuperNMatrix> {
    SuperNMatrix::new(components)
}

/// First pair `(i, j)`, 1-based with `i < j`, of strictly equal components.
pub fn first_identical_pair(u: &SuperNMatrix) -> Option<(usize, usize)> {
    let c = u.components();
    (0..c.len())
        .flat_map(|i| (i + 1..c.len()).map(move |j| (i, j)))
        .find(|&(i, j)| algebra::strict_eq(&c[i], &c[j]))
        .map(|(i, j)| (i + 1, j + 1))
}

/// Components pairwise distinct (in entries or partitions), with an
/// exception for unions made entirely of zero matrices.
pub fn is_proper(u: &SuperNMatrix) -> bool {
    u.arity() == 1
        || u.components().iter().all(|c| c.data().is_zero())
        || first_identical_pair(u).is_none()
}

/// At least one partitioned component alongside at least one simple one.
pub fn is_semi_super(u: &SuperNMatrix) -> bool {
    let simple = u.components().iter().filter(|c| c.is_simple()).count();
    simple > 0 && simple < u.arity()
}

pub fn union_add(u: &SuperNMatrix, v: &SuperNMatrix) -> Result<SuperNMatrix> {
    u.zip_with(v, algebra::add)
}

pub fn union_sub(u: &SuperNMatrix, v: &SuperNMatrix) -> Result<SuperNMatrix> {
    u.zip_with(v, algebra::sub)
}

pub fn union_scale(lambda: &Rational, u: &SuperNMatrix) -> SuperNMatrix {
    u.map(|c| algebra::scale(lambda, c))
}

pub fn union_transpose(u: &SuperNMatrix) -> SuperNMatrix {
    u.map(algebra::transpose)
}

pub fn union_mul(u: &SuperNMatrix, v: &SuperNMatrix) -> Result<SuperNMatrix> {
    u.zip_with(v, |a, b| algebra::super_mul(a, b).map(|(p, _)| p))
}

pub fn union_gram(u: &SuperNMatrix, side: Side) -> SuperNMatrix {
    u.map(|c| algebra::gram(c, side))
}

/// Componentwise [`algebra::value_eq`]; unions of different arity are unequal.
pub fn union_value_eq(u: &SuperNMatrix, v: &SuperNMatrix) -> bool {
    u.arity() == v.arity()
        && u.components()
            .iter()
            .zip(v.components())
            .all(|(a, b)| algebra::value_eq(a, b))
}

pub fn union_strict_eq(u: &SuperNMatrix, v: &SuperNMatrix) -> bool {
    u == v
}

/// Each component with its partitions dropped.
pub fn union_flatten(u: &SuperNMatrix) -> SuperNMatrix {
    u.map(|c| SuperMatrix::simple(c.flatten()))
}
