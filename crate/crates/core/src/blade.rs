//! Canonical basis blades as bit sets.
//!
//! Bit `i` set means basis vector `e_{i+1}` is a factor; the blade denotes
//! the product of its factors in strictly increasing index order. The empty
//! set is the unit and prints as `1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An index set of basis vectors, at most [`Blade::MAX_DIM`] of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u64);

impl Blade {
    /// Largest supported number of basis vectors.
    pub const MAX_DIM: usize = 63;

    pub const fn empty() -> Self {
        Blade(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        Blade(bits)
    }

    /// Build a blade from 0-based basis indices (order and repeats are
    /// irrelevant; the result is the index set).
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if i >= Self::MAX_DIM {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: Self::MAX_DIM,
                });
            }
            bits |= 1 << i;
        }
        Ok(Blade(bits))
    }

    /// A grade-1 blade on basis index `i`.
    pub fn single(i: usize) -> Result<Self> {
        Self::from_indices(&[i])
    }

    pub const fn bits(&self) -> u64 {
        self.0
    }

    pub const fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub const fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn fits(&self, dim: usize) -> bool {
        dim <= Self::MAX_DIM && self.0 >> dim == 0
    }

    /// `A Δ B`, the blade underlying the geometric product of two blades.
    pub const fn symmetric_difference(&self, other: &Blade) -> Blade {
        Blade(self.0 ^ other.0)
    }

    pub const fn intersects(&self, other: &Blade) -> bool {
        self.0 & other.0 != 0
    }

    /// Ascending 0-based basis indices.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..Self::MAX_DIM).filter(|i| self.contains(*i))
    }

    /// Number of transpositions needed to sort the concatenation `self ++
    /// other`: pairs `(a, b)` with `a ∈ self`, `b ∈ other`, `a > b`.
    pub fn reorder_swaps(&self, other: &Blade) -> usize {
        let mut a = self.0 >> 1;
        let mut swaps = 0usize;
        while a != 0 {
            swaps += (a & other.0).count_ones() as usize;
            a >>= 1;
        }
        swaps
    }

    /// Render with custom per-index basis names.
    pub fn label(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.indices().map(|i| names[i].as_str()).collect()
    }
}

/// Blades order by (grade, bit pattern); this is the iteration and printing
/// order everywhere.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "e{}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_follows_the_shared_convention() {
        assert_eq!(Blade::empty().to_string(), "1");
        assert_eq!(Blade::from_indices(&[0, 2]).unwrap().to_string(), "e1e3");
    }

    #[test]
    fn order_is_grade_then_bits() {
        let one = Blade::empty();
        let e1 = Blade::single(0).unwrap();
        let e2 = Blade::single(1).unwrap();
        let e12 = Blade::from_indices(&[0, 1]).unwrap();
        let mut blades = vec![e12, e2, one, e1];
        blades.sort();
        assert_eq!(blades, vec![one, e1, e2, e12]);
    }

    #[test]
    fn reorder_swap_counts() {
        let e1 = Blade::single(0).unwrap();
        let e2 = Blade::single(1).unwrap();
        let e12 = Blade::from_indices(&[0, 1]).unwrap();
        assert_eq!(e1.reorder_swaps(&e2), 0);
        assert_eq!(e2.reorder_swaps(&e1), 1);
        assert_eq!(e12.reorder_swaps(&e12), 1);
    }

    #[test]
    fn index_range_is_checked() {
        assert!(Blade::from_indices(&[63]).is_err());
        assert!(Blade::from_indices(&[62]).is_ok());
    }
}
