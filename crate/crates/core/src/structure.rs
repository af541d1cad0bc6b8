//! Structure carried by the algebra itself: the universal-property lift,
//! the grade involutions, the Z₂ split, versors, and the alternating
//! wedge of vectors.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::fast::{geometric_product, geometric_product_with, Engine};
use crate::form::QuadraticForm;
use crate::multivector::Multivector;
use crate::scalar::{rat, Field, Rational, Ring};
use crate::vector::Vector;

impl<R: Ring> Multivector<R> {
    /// Grade involution: every grade-k blade scaled by `(−1)^k`. Negates
    /// each vector factor, so it is an algebra morphism.
    pub fn involute(&self) -> Self {
        self.signed_per_grade(|k| k % 2 == 1)
    }

    /// Reversion: every grade-k blade scaled by `(−1)^(k(k−1)/2)`, the sign
    /// of reversing a k-letter word. On an orthogonal (diagonal-metric)
    /// basis this is the antimorphism that reverses products of vectors.
    pub fn reverse(&self) -> Self {
        self.signed_per_grade(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// Clifford conjugation, `reverse ∘ involute`: sign `(−1)^(k(k+1)/2)`.
    pub fn clifford_conjugate(&self) -> Self {
        self.involute().reverse()
    }

    fn signed_per_grade(&self, negate: impl Fn(usize) -> bool) -> Self {
        let mut out = Multivector::zero(self.dim());
        for (b, c) in self.terms() {
            let c = if negate(b.grade()) {
                -c.clone()
            } else {
                c.clone()
            };
            out.add_term(*b, c);
        }
        out
    }

    /// The Z₂ split `(even, odd)`: sums of the even and odd grades. The two
    /// parts recompose to the value, and the decomposition is unique.
    pub fn even_odd_parts(&self) -> (Self, Self) {
        let mut even = Multivector::zero(self.dim());
        let mut odd = Multivector::zero(self.dim());
        for (b, c) in self.terms() {
            if b.grade() % 2 == 0 {
                even.add_term(*b, c.clone());
            } else {
                odd.add_term(*b, c.clone());
            }
        }
        (even, odd)
    }
}

/// An associative unital algebra over the scalar ring, the codomain
/// contract for [`lift`].
pub trait TargetAlgebra<R: Ring> {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    /// The embedding of scalars.
    fn scalar(&self, r: &R) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.scalar(&R::one())
    }
    fn zero(&self) -> Self::Elem {
        self.scalar(&R::zero())
    }
}

/// Violations of the lift precondition, reported per basis relation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("lift rejected: f(e{0})*f(e{0}) != Q(e{0})*1", .index + 1)]
    Square { index: usize },
    #[error("lift rejected: f(e{0})*f(e{1}) + f(e{1})*f(e{0}) != polar(e{0},e{1})*1", .i + 1, .j + 1)]
    Polar { i: usize, j: usize },
    #[error("lift needs {expected} basis images, found {found}")]
    ImageCount { expected: usize, found: usize },
}

/// The unique algebra morphism extending a relation-respecting assignment
/// of basis-vector images.
pub struct Lift<'a, R: Ring, A: TargetAlgebra<R>> {
    target: &'a A,
    images: Vec<A::Elem>,
}

impl<'a, R: Ring, A: TargetAlgebra<R>> std::fmt::Debug for Lift<'a, R, A> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lift")
            .field("images", &self.images)
            .finish_non_exhaustive()
    }
}

/// Check the polarized Clifford conditions on the basis images and build
/// the extension: `f(eᵢ)² = Q(eᵢ)·1` and
/// `f(eᵢ)f(eⱼ) + f(eⱼ)f(eᵢ) = polar(eᵢ,eⱼ)·1` for `i < j`. Over a free
/// module these finitely many conditions are equivalent to requiring
/// `f(v)² = Q(v)·1` for every vector.
pub fn lift<'a, R: Ring, A: TargetAlgebra<R>>(
    q: &QuadraticForm<R>,
    target: &'a A,
    images: Vec<A::Elem>,
) -> std::result::Result<Lift<'a, R, A>, LiftError> {
    if images.len() != q.dim() {
        return Err(LiftError::ImageCount {
            expected: q.dim(),
            found: images.len(),
        });
    }
    for (i, fi) in images.iter().enumerate() {
        let square = target.mul(fi, fi);
        if square != target.scalar(q.basis_square(i)) {
            return Err(LiftError::Square { index: i });
        }
        for (j, fj) in images.iter().enumerate().skip(i + 1) {
            let anti = target.add(&target.mul(fi, fj), &target.mul(fj, fi));
            if anti != target.scalar(&q.basis_polar(i, j)) {
                return Err(LiftError::Polar { i, j });
            }
        }
    }
    Ok(Lift { target, images })
}

impl<'a, R: Ring, A: TargetAlgebra<R>> Lift<'a, R, A> {
    /// Apply the morphism: each blade maps to the ordered product of its
    /// factor images, extended linearly.
    pub fn apply(&self, x: &Multivector<R>) -> Result<A::Elem> {
        if x.dim() != self.images.len() {
            return Err(Error::DimensionMismatch {
                expected: self.images.len(),
                found: x.dim(),
            });
        }
        let mut acc = self.target.zero();
        for (b, c) in x.terms() {
            let mut word = self.target.one();
            for i in b.indices() {
                word = self.target.mul(&word, &self.images[i]);
            }
            let term = self.target.mul(&self.target.scalar(c), &word);
            acc = self.target.add(&acc, &term);
        }
        Ok(acc)
    }

    pub fn image_of_basis(&self, i: usize) -> &A::Elem {
        &self.images[i]
    }
}

/// The Clifford algebra itself as a lift target.
///
/// Products go through the selected engine; dimension mismatches among the
/// supplied images are a caller bug and panic.
pub struct CliffordTarget<'q, R> {
    pub form: &'q QuadraticForm<R>,
    pub engine: Engine,
}

impl<'q, R: Ring> TargetAlgebra<R> for CliffordTarget<'q, R> {
    type Elem = Multivector<R>;

    fn scalar(&self, r: &R) -> Multivector<R> {
        Multivector::scalar(self.form.dim(), r.clone())
    }
    fn add(&self, a: &Multivector<R>, b: &Multivector<R>) -> Multivector<R> {
        a.try_add(b).expect("target algebra dimension mismatch")
    }
    fn mul(&self, a: &Multivector<R>, b: &Multivector<R>) -> Multivector<R> {
        geometric_product_with(self.engine, self.form, a, b)
            .expect("target algebra dimension mismatch")
    }
    fn neg(&self, a: &Multivector<R>) -> Multivector<R> {
        a.neg()
    }
}

/// A scaled product of vectors, kept as its generator list together with
/// the multivector it evaluates to.
#[derive(Debug, Clone, PartialEq)]
pub struct Versor<R> {
    dim: usize,
    scale: R,
    factors: Vec<Vector<R>>,
    cached: Multivector<R>,
}

impl<R: Ring> Versor<R> {
    pub fn identity(dim: usize) -> Self {
        Versor {
            dim,
            scale: R::one(),
            factors: Vec::new(),
            cached: Multivector::one(dim),
        }
    }

    pub fn from_scalar(dim: usize, r: R) -> Self {
        Versor {
            dim,
            scale: r.clone(),
            factors: Vec::new(),
            cached: Multivector::scalar(dim, r),
        }
    }

    /// Build `scale · ι(v₁)⋯ι(v_k)`, evaluating the cached product with the
    /// engine picked for the form.
    pub fn new(q: &QuadraticForm<R>, scale: R, factors: Vec<Vector<R>>) -> Result<Self> {
        let mut cached = Multivector::scalar(q.dim(), scale.clone());
        for v in &factors {
            cached = geometric_product(q, &cached, &Multivector::iota(v))?;
        }
        Ok(Versor {
            dim: q.dim(),
            scale,
            factors,
            cached,
        })
    }

    pub fn from_vector(q: &QuadraticForm<R>, v: Vector<R>) -> Result<Self> {
        Self::new(q, R::one(), vec![v])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> &R {
        &self.scale
    }

    pub fn factors(&self) -> &[Vector<R>] {
        &self.factors
    }

    /// The multivector this versor evaluates to.
    pub fn cached(&self) -> &Multivector<R> {
        &self.cached
    }

    /// Concatenate generator lists and multiply scalars and caches.
    pub fn mul(&self, rhs: &Self, q: &QuadraticForm<R>) -> Result<Self> {
        let mut factors = self.factors.clone();
        factors.extend(rhs.factors.iter().cloned());
        Ok(Versor {
            dim: self.dim,
            scale: self.scale.clone() * rhs.scale.clone(),
            factors,
            cached: geometric_product(q, &self.cached, &rhs.cached)?,
        })
    }

    /// Negate every generator; the cache picks up `(−1)^k`.
    pub fn involute(&self) -> Self {
        Versor {
            dim: self.dim,
            scale: self.scale.clone(),
            factors: self.factors.iter().map(Vector::neg).collect(),
            cached: self.cached.involute(),
        }
    }

    /// Reverse the generator list; the cache is the reversed product.
    pub fn reverse(&self) -> Self {
        Versor {
            dim: self.dim,
            scale: self.scale.clone(),
            factors: self.factors.iter().rev().cloned().collect(),
            cached: self.cached.reverse(),
        }
    }

    /// The product of the reversed generator list, `scale · ι(v_k)⋯ι(v₁)`.
    /// On diagonal forms this equals `cached().reverse()`; on non-orthogonal
    /// bases the per-grade sign formula is not an antimorphism, so the
    /// reversed-factor product is the one the norm identity holds for.
    fn reversed_product(&self, q: &QuadraticForm<R>) -> Result<Multivector<R>> {
        let mut out = Multivector::scalar(q.dim(), self.scale.clone());
        for v in self.factors.iter().rev() {
            out = geometric_product(q, &out, &Multivector::iota(v))?;
        }
        Ok(out)
    }

    /// The scalar `r` with `u · (reversed u) = r`, computed as
    /// `scale² · Π Q(vᵢ)` and checked against the actual product; a
    /// disagreement is an engine bug and surfaces as an internal error.
    pub fn norm(&self, q: &QuadraticForm<R>) -> Result<R> {
        let mut r = self.scale.clone() * self.scale.clone();
        for v in &self.factors {
            r = r * q.eval(v)?;
        }
        let actual = geometric_product(q, &self.cached, &self.reversed_product(q)?)?;
        if actual != Multivector::scalar(self.dim, r.clone()) {
            return Err(Error::Internal(format!(
                "versor norm mismatch: product gave {actual}, formula gave {r}"
            )));
        }
        Ok(r)
    }
}

impl<R: Field> Versor<R> {
    /// Inverse under the geometric product, the reversed product divided by
    /// the norm; errors with [`Error::NotInvertible`] when the norm
    /// vanishes.
    pub fn inverse(&self, q: &QuadraticForm<R>) -> Result<Self> {
        let norm = self.norm(q)?;
        if norm.is_zero() {
            return Err(Error::NotInvertible);
        }
        let cached = self.reversed_product(q)?.scale(&(R::one() / norm.clone()));
        Ok(Versor {
            dim: self.dim,
            scale: self.scale.clone() / norm,
            factors: self.factors.iter().rev().cloned().collect(),
            cached,
        })
    }

    /// The sandwich action `u · x · u⁻¹`.
    pub fn sandwich(&self, x: &Multivector<R>, q: &QuadraticForm<R>) -> Result<Multivector<R>> {
        let inv = self.inverse(q)?;
        let ux = geometric_product(q, &self.cached, x)?;
        geometric_product(q, &ux, &inv.cached)
    }
}

/// The alternating wedge of `n` vectors:
/// `(1/n!) Σ_σ sign(σ) ι(x_{σ(1)})⋯ι(x_{σ(n)})` under the geometric
/// product. Zero vectors in means a linearly dependent list, which wedges
/// to zero; the empty list gives the unit.
pub fn iota_wedge<R: Field>(q: &QuadraticForm<R>, xs: &[Vector<R>]) -> Result<Multivector<R>> {
    let n = xs.len();
    if n == 0 {
        return Ok(Multivector::one(q.dim()));
    }
    let mut acc = Multivector::zero(q.dim());
    for perm in (0..n).permutations(n) {
        let inversions = perm
            .iter()
            .enumerate()
            .map(|(i, &pi)| perm[i + 1..].iter().filter(|&&pj| pj < pi).count())
            .sum::<usize>();
        let mut term = Multivector::one(q.dim());
        for &i in &perm {
            term = geometric_product(q, &term, &Multivector::iota(&xs[i]))?;
        }
        if inversions % 2 == 1 {
            term = term.neg();
        }
        acc = acc.try_add(&term)?;
    }
    let mut factorial = R::one();
    for k in 2..=n {
        factorial = factorial * R::from_int(k as i64);
    }
    Ok(acc.scale(&(R::one() / factorial)))
}

fn random_coeff(rng: &mut impl Rng) -> Rational {
    rat(rng.random_range(-4..=4), rng.random_range(1..=4))
}

fn random_vector(rng: &mut impl Rng, dim: usize) -> Vector<Rational> {
    Vector::new((0..dim).map(|_| random_coeff(rng)).collect())
}

fn random_node(
    rng: &mut impl Rng,
    q: &QuadraticForm<Rational>,
    depth: usize,
) -> Multivector<Rational> {
    let dim = q.dim();
    let choice = if depth == 0 {
        rng.random_range(0..2)
    } else {
        rng.random_range(0..6)
    };
    match choice {
        // leaves: the scalar and vector embeddings
        0 => Multivector::scalar(dim, random_coeff(rng)),
        1 => Multivector::iota(&random_vector(rng, dim)),
        // sums and products of smaller derivations
        2 | 3 => {
            let a = random_node(rng, q, depth - 1);
            let b = random_node(rng, q, depth - 1);
            a.try_add(&b).expect("same dimension")
        }
        _ => {
            let a = random_node(rng, q, depth - 1);
            let b = random_node(rng, q, depth - 1);
            geometric_product(q, &a, &b).expect("same dimension")
        }
    }
}

/// A random multivector built as a bounded-depth derivation over the four
/// generators of the algebra: scalars, vectors, sums, and products.
/// Deterministic for a given seed.
pub fn random_multivector(
    seed: u64,
    q: &QuadraticForm<Rational>,
    depth: usize,
) -> Multivector<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_node(&mut rng, q, depth)
}

/// Same derivation scheme, drawing from a caller-supplied generator.
pub fn random_multivector_with(
    rng: &mut impl Rng,
    q: &QuadraticForm<Rational>,
    depth: usize,
) -> Multivector<Rational> {
    random_node(rng, q, depth)
}
