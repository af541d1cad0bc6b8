//! Coordinate vectors over an arbitrary scalar ring.

use crate::error::{Error, Result};
use crate::scalar::Ring;

/// A finite-dimensional coordinate vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<R> {
    coords: Vec<R>,
}

impl<R: Ring> Vector<R> {
    pub fn new(coords: Vec<R>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![R::zero(); dim],
        }
    }

    /// The `i`-th standard basis vector (0-based) of the given dimension.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut coords = vec![R::zero(); dim];
        coords[i] = R::one();
        Vector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[R] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &R {
        &self.coords[i]
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rhs.dim(),
            });
        }
        Ok(Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        Vector {
            coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Vector {
            coords: self.coords.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Standard coordinate inner product `Σ aᵢbᵢ`.
    pub fn dot(&self, rhs: &Self) -> Result<R> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rhs.dim(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&rhs.coords)
            .fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }
}
