//! The reference product engine: formal tensor words reduced to blade
//! normal form with the Clifford relation.
//!
//! Elements of the free algebra on the basis are finite sums of words of
//! basis indices. Rewriting uses the relation `eᵢeᵢ = Q(eᵢ)` together with
//! its polarized form `eⱼeᵢ = polar(eᵢ,eⱼ) − eᵢeⱼ` for `j > i`, so it works
//! for any symmetric matrix, including the non-diagonal null blocks of the
//! conformal model. Each rewrite strictly decreases (word length,
//! inversion count) lexicographically, so reduction terminates; the fixed
//! leftmost-first strategy plus term accumulation makes the result
//! deterministic, and [`confluence_probe`] checks order-independence
//! empirically.

use std::collections::BTreeMap;

use rand::Rng;

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::form::QuadraticForm;
use crate::multivector::Multivector;
use crate::scalar::Ring;

/// A word of 0-based basis indices; repeats and arbitrary order allowed.
/// The empty word is the unit.
pub type TensorWord = Vec<usize>;

/// A formal sum of coefficient-weighted tensor words.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElement<R> {
    dim: usize,
    terms: BTreeMap<TensorWord, R>,
}

impl<R: Ring> TensorElement<R> {
    pub fn zero(dim: usize) -> Self {
        TensorElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::word(dim, &[], R::one()).expect("empty word")
    }

    /// A single weighted word.
    pub fn word(dim: usize, indices: &[usize], c: R) -> Result<Self> {
        for &i in indices {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
        }
        let mut t = Self::zero(dim);
        t.add_term(indices.to_vec(), c);
        Ok(t)
    }

    /// Embed a multivector: each canonical blade is already a strictly
    /// increasing square-free word.
    pub fn from_multivector(mv: &Multivector<R>) -> Self {
        let mut t = Self::zero(mv.dim());
        for (b, c) in mv.terms() {
            t.add_term(b.indices().collect(), c.clone());
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &R)> {
        self.terms.iter()
    }

    fn add_term(&mut self, word: TensorWord, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }
}

/// Bilinear extension of word concatenation, the free product.
pub fn tensor_mul<R: Ring>(a: &TensorElement<R>, b: &TensorElement<R>) -> Result<TensorElement<R>> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    let mut out = TensorElement::zero(a.dim);
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let mut w = Vec::with_capacity(wa.len() + wb.len());
            w.extend_from_slice(wa);
            w.extend_from_slice(wb);
            out.add_term(w, ca.clone() * cb.clone());
        }
    }
    Ok(out)
}

/// First rewritable position in a word under the deterministic strategy:
/// the leftmost adjacent pair that is equal or descending.
fn first_redex(word: &[usize]) -> Option<usize> {
    word.windows(2).position(|p| p[0] >= p[1])
}

/// All rewritable positions, for randomized strategies.
fn all_redexes(word: &[usize]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] >= p[1])
        .map(|(i, _)| i)
        .collect()
}

/// Apply the Clifford rewrite at position `i` of `word`, pushing the
/// resulting terms. `word[i] >= word[i+1]` must hold.
fn rewrite_at<R: Ring>(
    q: &QuadraticForm<R>,
    word: &[usize],
    coeff: &R,
    i: usize,
    out: &mut Vec<(TensorWord, R)>,
) {
    let (x, y) = (word[i], word[i + 1]);
    debug_assert!(x >= y);
    let mut shorter = Vec::with_capacity(word.len() - 2);
    shorter.extend_from_slice(&word[..i]);
    shorter.extend_from_slice(&word[i + 2..]);
    if x == y {
        // eᵢeᵢ → Q(eᵢ)
        let c = coeff.clone() * q.basis_square(x).clone();
        if !c.is_zero() {
            out.push((shorter, c));
        }
    } else {
        // eⱼeᵢ → polar(eᵢ,eⱼ) − eᵢeⱼ   (j > i)
        let p = q.basis_polar(y, x);
        if !p.is_zero() {
            out.push((shorter, coeff.clone() * p));
        }
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        out.push((swapped, -coeff.clone()));
    }
}

/// Reduce a formal sum to its canonical multivector: a combination of
/// strictly increasing square-free words.
pub fn normalize<R: Ring>(q: &QuadraticForm<R>, a: &TensorElement<R>) -> Multivector<R> {
    assert_eq!(a.dim, q.dim(), "element and form dimensions must match");
    let mut result = Multivector::zero(q.dim());
    let mut pending: Vec<(TensorWord, R)> = a
        .terms
        .iter()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    while let Some((word, coeff)) = pending.pop() {
        match first_redex(&word) {
            None => {
                let blade = Blade::from_indices(&word).expect("word within dimension");
                result.add_term(blade, coeff);
            }
            Some(i) => rewrite_at(q, &word, &coeff, i, &mut pending),
        }
    }
    result.debug_validate();
    result
}

/// Geometric product for an arbitrary symmetric form: embed, concatenate,
/// reduce.
pub fn product_general<R: Ring>(
    q: &QuadraticForm<R>,
    a: &Multivector<R>,
    b: &Multivector<R>,
) -> Result<Multivector<R>> {
    if a.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: q.dim(),
            found: a.dim(),
        });
    }
    let ta = TensorElement::from_multivector(a);
    let tb = TensorElement::from_multivector(b);
    let prod = tensor_mul(&ta, &tb)?;
    Ok(normalize(q, &prod))
}

/// Reduce with rule applications picked uniformly at random among all
/// applicable (term, position) pairs.
fn normalize_random<R: Ring>(
    q: &QuadraticForm<R>,
    a: &TensorElement<R>,
    rng: &mut impl Rng,
) -> Multivector<R> {
    assert_eq!(a.dim, q.dim(), "element and form dimensions must match");
    let mut result = Multivector::zero(q.dim());
    let mut pending: Vec<(TensorWord, R)> = a
        .terms
        .iter()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    while !pending.is_empty() {
        let pick = rng.random_range(0..pending.len());
        let (word, coeff) = pending.swap_remove(pick);
        let redexes = all_redexes(&word);
        if redexes.is_empty() {
            let blade = Blade::from_indices(&word).expect("word within dimension");
            result.add_term(blade, coeff);
        } else {
            let i = redexes[rng.random_range(0..redexes.len())];
            rewrite_at(q, &word, &coeff, i, &mut pending);
        }
    }
    result
}

/// Normalize `a` under `trials` randomized rule-application orders and
/// report whether every run agrees with the deterministic result.
pub fn confluence_probe<R: Ring>(
    q: &QuadraticForm<R>,
    a: &TensorElement<R>,
    trials: usize,
    rng: &mut impl Rng,
) -> bool {
    let reference = normalize(q, a);
    (0..trials).all(|_| normalize_random(q, a, rng) == reference)
}
