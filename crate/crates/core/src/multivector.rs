//! Sparse multivectors: a map from basis blades to coefficients.
//!
//! The representation is canonical: zero coefficients are never stored, so
//! equality is map equality. Iteration follows the blade order
//! (grade, bit pattern), which makes printing and golden outputs
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::vector::Vector;

#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<R> {
    dim: usize,
    terms: BTreeMap<Blade, R>,
}

impl<R: Ring> Multivector<R> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= Blade::MAX_DIM, "dimension exceeds blade capacity");
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The scalar embedding: `c` on the empty blade.
    pub fn scalar(dim: usize, c: R) -> Self {
        let mut mv = Self::zero(dim);
        mv.add_term(Blade::empty(), c);
        mv
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, R::one())
    }

    /// A single-blade multivector.
    pub fn blade(dim: usize, blade: Blade, c: R) -> Result<Self> {
        if !blade.fits(dim) {
            return Err(Error::IndexOutOfRange {
                index: blade.indices().last().unwrap_or(0),
                dim,
            });
        }
        let mut mv = Self::zero(dim);
        mv.add_term(blade, c);
        Ok(mv)
    }

    /// The grade-1 embedding of a coordinate vector: `Σᵢ vᵢ·e_{i+1}`.
    pub fn iota(v: &Vector<R>) -> Self {
        let mut mv = Self::zero(v.dim());
        for (i, c) in v.coords().iter().enumerate() {
            mv.add_term(Blade::from_bits(1 << i), c.clone());
        }
        mv
    }

    /// Recover the coordinate vector of a grade-1 multivector; `None` if any
    /// other grade is present.
    pub fn to_vector(&self) -> Option<Vector<R>> {
        let mut coords = vec![R::zero(); self.dim];
        for (b, c) in &self.terms {
            if b.grade() != 1 {
                return None;
            }
            coords[b.indices().next().unwrap()] = c.clone();
        }
        Some(Vector::new(coords))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in (grade, bit pattern) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &R)> {
        self.terms.iter()
    }

    /// The coefficient of a blade, zero if absent.
    pub fn coeff(&self, blade: &Blade) -> R {
        self.terms.get(blade).cloned().unwrap_or_else(R::zero)
    }

    /// If the value is a pure scalar (or zero), its coefficient.
    pub fn scalar_part_only(&self) -> Option<R> {
        match self.max_grade() {
            None => Some(R::zero()),
            Some(0) => Some(self.coeff(&Blade::empty())),
            Some(_) => None,
        }
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: R) {
        debug_assert!(blade.fits(self.dim), "blade outside dimension");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c.clone());
        }
        out.debug_validate();
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (b, x) in &self.terms {
            out.add_term(*b, c.clone() * x.clone());
        }
        out.debug_validate();
        out
    }

    /// Keep exactly the blades of grade `k`.
    pub fn grade_project(&self, k: usize) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Largest grade carrying a nonzero coefficient; `None` for zero.
    pub fn max_grade(&self) -> Option<usize> {
        self.terms.keys().map(|b| b.grade()).max()
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut gs: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Canonical-form validator, compiled only with debug assertions.
    pub fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        for (b, c) in &self.terms {
            assert!(!c.is_zero(), "canonical form violated: stored zero at {b}");
            assert!(b.fits(self.dim), "blade {b} outside dimension {}", self.dim);
        }
    }
}

impl<R: Ring> Add for &Multivector<R> {
    type Output = Multivector<R>;
    fn add(self, rhs: Self) -> Multivector<R> {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl<R: Ring> Sub for &Multivector<R> {
    type Output = Multivector<R>;
    fn sub(self, rhs: Self) -> Multivector<R> {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl<R: Ring> Neg for &Multivector<R> {
    type Output = Multivector<R>;
    fn neg(self) -> Multivector<R> {
        Multivector::neg(self)
    }
}

impl<R: Ring> Mul<&R> for &Multivector<R> {
    type Output = Multivector<R>;
    fn mul(self, rhs: &R) -> Multivector<R> {
        self.scale(rhs)
    }
}

impl<R: Ring> Multivector<R> {
    /// Render terms in (grade, bit pattern) order as `1 - 3/2 e1e2`, with
    /// blade names supplied by the caller. The sign is read off the
    /// coefficient's own rendering, so this works for any scalar whose
    /// negatives print with a leading minus.
    pub fn render_with(&self, label: impl Fn(&Blade) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let rendered = c.to_string();
            let (negative, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, rendered.as_str()),
            };
            let body = if b.is_empty() {
                magnitude.to_string()
            } else if magnitude == "1" {
                label(b)
            } else {
                format!("{magnitude} {}", label(b))
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

impl<R: Ring> fmt::Display for Multivector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|b| b.to_string()))
    }
}
