//! Helpers shared by the property and acceptance suites: seeded random
//! values, signature enumeration, and an exact rank oracle.

use num_traits::Zero;
use rand::Rng;

use crate::form::{QuadraticForm, Signature};
use crate::scalar::{rat, Rational};
use crate::structure::Versor;
use crate::vector::Vector;

/// A small random rational: numerator in `-4..=4`, denominator in `1..=4`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.random_range(-4..=4), rng.random_range(1..=4))
}

pub fn random_vector(rng: &mut impl Rng, dim: usize) -> Vector<Rational> {
    Vector::new((0..dim).map(|_| random_rational(rng)).collect())
}

/// A random symmetric form with small rational entries.
#[allow(clippy::needless_range_loop)]
pub fn random_symmetric_form(rng: &mut impl Rng, dim: usize) -> QuadraticForm<Rational> {
    let mut rows = vec![vec![rat(0, 1); dim]; dim];
    for i in 0..dim {
        for j in 0..=i {
            let entry = random_rational(rng);
            rows[i][j] = entry.clone();
            rows[j][i] = entry;
        }
    }
    QuadraticForm::from_matrix(dim, rows).expect("symmetric by construction")
}

/// All signatures with `p + q + r` between 1 and `max_sum`.
pub fn signatures_up_to(max_sum: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for total in 1..=max_sum {
        for p in 0..=total {
            for q in 0..=(total - p) {
                out.push(Signature::new(p, q, total - p - q));
            }
        }
    }
    out
}

/// A random versor of up to `max_len` generating vectors, scaled by a
/// random nonzero rational.
pub fn random_versor(
    rng: &mut impl Rng,
    q: &QuadraticForm<Rational>,
    max_len: usize,
) -> Versor<Rational> {
    let len = rng.random_range(0..=max_len);
    let mut scale = random_rational(rng);
    if scale.is_zero() {
        scale = rat(1, 1);
    }
    let factors = (0..len).map(|_| random_vector(rng, q.dim())).collect();
    Versor::new(q, scale, factors).expect("consistent dimensions")
}

/// Exact rank by Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn rank(rows: &[Vector<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].dim();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / lead.clone();
            for c in col..cols {
                let sub = m[rank][c].clone() * factor.clone();
                m[r][c] = m[r][c].clone() - sub;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
