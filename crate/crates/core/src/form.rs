//! Quadratic and bilinear forms, signature presets, and the metric file
//! format.
//!
//! A form is stored as its symmetric matrix `B`, with `Q(v) = vᵀBv`. The
//! polar form follows the doubled convention
//! `polar(u, v) = Q(u+v) − Q(u) − Q(v) = 2·uᵀBv`.

use serde::Deserialize;

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational, Ring, SignedRing};
use crate::vector::Vector;

/// A symmetric bilinear matrix evaluating the quadratic form `Q(v) = vᵀBv`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm<R> {
    dim: usize,
    /// Row-major `dim × dim` entries, symmetric by construction.
    matrix: Vec<R>,
}

impl<R: Ring> QuadraticForm<R> {
    /// Build a form from a row-major symmetric matrix.
    #[allow(clippy::needless_range_loop)]
    pub fn from_matrix(dim: usize, matrix: Vec<Vec<R>>) -> Result<Self> {
        if dim > Blade::MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        if matrix.len() != dim || matrix.iter().any(|row| row.len() != dim) {
            return Err(Error::BadMatrixShape);
        }
        for i in 0..dim {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(QuadraticForm {
            dim,
            matrix: matrix.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(entries: Vec<R>) -> Result<Self> {
        let dim = entries.len();
        if dim > Blade::MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        let mut matrix = vec![R::zero(); dim * dim];
        for (i, e) in entries.into_iter().enumerate() {
            matrix[i * dim + i] = e;
        }
        Ok(QuadraticForm { dim, matrix })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.matrix[i * self.dim + j]
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.entry(i, j).is_zero()))
    }

    /// `Q(eᵢ)`, the square of the `i`-th basis vector.
    pub fn basis_square(&self, i: usize) -> &R {
        self.entry(i, i)
    }

    /// `polar(eᵢ, eⱼ) = 2·Bᵢⱼ`.
    pub fn basis_polar(&self, i: usize, j: usize) -> R {
        let b = self.entry(i, j).clone();
        b.clone() + b
    }

    /// Evaluate `Q(v) = vᵀBv`.
    pub fn eval(&self, v: &Vector<R>) -> Result<R> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        let mut acc = R::zero();
        for i in 0..self.dim {
            if v.coord(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                acc = acc + v.coord(i).clone() * self.entry(i, j).clone() * v.coord(j).clone();
            }
        }
        Ok(acc)
    }

    /// `polar(u, v) = Q(u+v) − Q(u) − Q(v)`, computed directly as `2·uᵀBv`.
    pub fn polar(&self, u: &Vector<R>, v: &Vector<R>) -> Result<R> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.dim(),
            });
        }
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        let mut acc = R::zero();
        for i in 0..self.dim {
            if u.coord(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                acc = acc + u.coord(i).clone() * self.entry(i, j).clone() * v.coord(j).clone();
            }
        }
        Ok(acc.clone() + acc)
    }
}

impl<R: SignedRing> QuadraticForm<R> {
    /// Sufficient anisotropy check for diagonal forms: all diagonal entries
    /// strictly positive, or all strictly negative. This is not a necessary
    /// condition; mixed-sign or degenerate forms simply report `false`.
    pub fn is_definite_diagonal(&self) -> Result<bool> {
        if !self.is_diagonal() {
            return Err(Error::NotDiagonal);
        }
        let diag: Vec<&R> = (0..self.dim).map(|i| self.basis_square(i)).collect();
        Ok(diag.iter().all(|e| e.is_positive()) || diag.iter().all(|e| e.is_negative()))
    }
}

/// Counts of basis vectors squaring to `+1`, `−1`, and `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Signature { plus, minus, zero }
    }

    pub fn dim(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    /// The induced diagonal form `diag(1×p, −1×q, 0×r)`.
    pub fn form<R: Ring>(&self) -> Result<QuadraticForm<R>> {
        let mut entries = Vec::with_capacity(self.dim());
        entries.extend(std::iter::repeat_with(R::one).take(self.plus));
        entries.extend(std::iter::repeat_with(|| -R::one()).take(self.minus));
        entries.extend(std::iter::repeat_with(R::zero).take(self.zero));
        QuadraticForm::diagonal(entries)
    }
}

#[derive(Deserialize)]
struct MetricFile {
    dim: usize,
    matrix: Vec<Vec<String>>,
}

impl QuadraticForm<Rational> {
    /// Load a form from the metric file format: a JSON object with `dim` and
    /// a row-major `matrix` of rational strings such as `"-1/2"`. The matrix
    /// must be symmetric.
    pub fn from_metric_json(text: &str) -> Result<Self> {
        let raw: MetricFile =
            serde_json::from_str(text).map_err(|e| Error::MetricFile(e.to_string()))?;
        let mut rows = Vec::with_capacity(raw.matrix.len());
        for row in &raw.matrix {
            rows.push(
                row.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        QuadraticForm::from_matrix(raw.dim, rows)
    }

    pub fn from_metric_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::MetricFile(format!("{}: {e}", path.display())))?;
        Self::from_metric_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn e(dim: usize, i: usize) -> Vector<Rational> {
        Vector::basis(dim, i)
    }

    #[test]
    fn signature_basis_squares() {
        let q: QuadraticForm<Rational> = Signature::new(1, 1, 0).form().unwrap();
        assert_eq!(q.eval(&e(2, 0)).unwrap(), rat(1, 1));
        assert_eq!(q.eval(&e(2, 1)).unwrap(), rat(-1, 1));
    }

    #[test]
    fn eval_scales_quadratically() {
        let q: QuadraticForm<Rational> = Signature::new(1, 0, 0).form().unwrap();
        let v = e(1, 0).scale(&rat(2, 1));
        assert_eq!(q.eval(&v).unwrap(), rat(4, 1));
    }

    #[test]
    fn polar_of_equal_args_doubles_q() {
        let q: QuadraticForm<Rational> = Signature::new(2, 1, 0).form().unwrap();
        let u = Vector::new(vec![rat(1, 2), rat(-1, 3), rat(2, 1)]);
        let double_q = q.eval(&u).unwrap() * rat(2, 1);
        assert_eq!(q.polar(&u, &u).unwrap(), double_q);
    }

    #[test]
    fn polar_vanishes_on_orthogonal_basis() {
        let q: QuadraticForm<Rational> = Signature::new(2, 0, 0).form().unwrap();
        assert_eq!(q.polar(&e(2, 0), &e(2, 1)).unwrap(), rat(0, 1));
    }

    #[test]
    fn signature_form_presets() {
        let c: QuadraticForm<Rational> = Signature::new(0, 1, 0).form().unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(*c.basis_square(0), rat(-1, 1));

        let empty: QuadraticForm<Rational> = Signature::new(0, 0, 0).form().unwrap();
        assert_eq!(empty.dim(), 0);

        let pga: QuadraticForm<Rational> = Signature::new(3, 0, 1).form().unwrap();
        let diag: Vec<_> = (0..4).map(|i| pga.basis_square(i).clone()).collect();
        assert_eq!(diag, vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn definiteness_check() {
        let pos: QuadraticForm<Rational> = Signature::new(2, 0, 0).form().unwrap();
        let neg: QuadraticForm<Rational> = Signature::new(0, 2, 0).form().unwrap();
        let mixed: QuadraticForm<Rational> = Signature::new(1, 1, 0).form().unwrap();
        let degenerate: QuadraticForm<Rational> = Signature::new(1, 0, 1).form().unwrap();
        assert!(pos.is_definite_diagonal().unwrap());
        assert!(neg.is_definite_diagonal().unwrap());
        assert!(!mixed.is_definite_diagonal().unwrap());
        assert!(!degenerate.is_definite_diagonal().unwrap());

        let skew = QuadraticForm::from_matrix(
            2,
            vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]],
        )
        .unwrap();
        assert_eq!(skew.is_definite_diagonal(), Err(Error::NotDiagonal));
    }

    #[test]
    fn from_matrix_rejects_asymmetry() {
        let err = QuadraticForm::from_matrix(
            2,
            vec![vec![rat(0, 1), rat(1, 1)], vec![rat(2, 1), rat(0, 1)]],
        );
        assert_eq!(err, Err(Error::NotSymmetric));
    }

    #[test]
    fn metric_file_round_trip() {
        let q = QuadraticForm::from_metric_json(
            r#"{"dim": 2, "matrix": [["0", "-1/2"], ["-1/2", "1"]]}"#,
        )
        .unwrap();
        assert_eq!(*q.entry(0, 1), rat(-1, 2));
        assert!(QuadraticForm::from_metric_json(
            r#"{"dim": 2, "matrix": [["0", "1"], ["2", "0"]]}"#
        )
        .is_err());
        assert!(QuadraticForm::from_metric_json(r#"{"dim": 2, "matrix": [["0"]]}"#).is_err());
    }
}
