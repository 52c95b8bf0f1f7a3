use std::ops::Range;

use crate::error::{Error, Result};

/// Cut positions along one matrix axis.
///
/// A cut `c` separates index `c - 1` from index `c` (0-based), so valid cuts
/// lie in `1..=length-1`. No cuts means a single block spanning the axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    length: usize,
    cuts: Vec<usize>,
}

#[allow(clippy::len_without_is_empty)] // a partition always covers at least one index
impl Partition {
    /// Validates `cuts` as given. Unsorted or repeated cuts are rejected, never fixed up.
    pub fn new(length: usize, cuts: Vec<usize>) -> Result<Self> {
        if length == 0 {
            return Err(Error::EmptyAxis);
        }
        for (k, &cut) in cuts.iter().enumerate() {
            if cut < 1 || cut > length - 1 {
                return Err(Error::CutOutOfRange {
                    cut,
                    length,
                    max: length - 1,
                });
            }
            if k > 0 {
                let before = cuts[k - 1];
                if cut == before {
                    return Err(Error::DuplicateCut { cut });
                }
                if cut < before {
                    return Err(Error::UnsortedCuts { before, after: cut });
                }
            }
        }
        Ok(Partition { length, cuts })
    }

    pub fn trivial(length: usize) -> Result<Self> {
        Partition::new(length, Vec::new())
    }

    /// Partition whose blocks have the given widths, in order.
    pub fn from_widths(widths: &[usize]) -> Result<Self> {
        if widths.contains(&0) {
            return Err(Error::EmptyAxis);
        }
        let mut cuts = Vec::with_capacity(widths.len().saturating_sub(1));
        let mut at = 0;
        for &w in widths {
            if at > 0 {
                cuts.push(at);
            }
            at += w;
        }
        Partition::new(at, cuts)
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn is_trivial(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.cuts.len() + 1
    }

    /// Half-open index range of every block, in order.
    pub fn ranges(&self) -> Vec<Range<usize>> {
        let mut bounds = Vec::with_capacity(self.cuts.len() + 2);
        bounds.push(0);
        bounds.extend_from_slice(&self.cuts);
        bounds.push(self.length);
        bounds.windows(2).map(|w| w[0]..w[1]).collect()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.ranges().into_iter().map(|r| r.len()).collect()
    }
}
