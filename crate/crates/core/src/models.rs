//! Concrete model algebras: the complex numbers, the quaternions, the
//! conformal model with its null basis and up-map, and named presets for
//! the command line.

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::form::{QuadraticForm, Signature};
use crate::multivector::Multivector;
use crate::scalar::{Field, Rational, Ring};
use crate::structure::TargetAlgebra;
use crate::vector::Vector;

/// `a + b·i` with exact components.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPair<R> {
    pub re: R,
    pub im: R,
}

impl<R: Ring> ComplexPair<R> {
    pub fn new(re: R, im: R) -> Self {
        ComplexPair { re, im }
    }

    pub fn i() -> Self {
        ComplexPair::new(R::zero(), R::one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ComplexPair::new(
            self.re.clone() + rhs.re.clone(),
            self.im.clone() + rhs.im.clone(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        ComplexPair::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re.clone() * rhs.im.clone() + self.im.clone() * rhs.re.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        ComplexPair::new(-self.re.clone(), -self.im.clone())
    }
}

/// The complex numbers as a lift target.
pub struct ComplexAlgebra;

impl<R: Ring> TargetAlgebra<R> for ComplexAlgebra {
    type Elem = ComplexPair<R>;
    fn scalar(&self, r: &R) -> ComplexPair<R> {
        ComplexPair::new(r.clone(), R::zero())
    }
    fn add(&self, a: &ComplexPair<R>, b: &ComplexPair<R>) -> ComplexPair<R> {
        a.add(b)
    }
    fn mul(&self, a: &ComplexPair<R>, b: &ComplexPair<R>) -> ComplexPair<R> {
        a.mul(b)
    }
    fn neg(&self, a: &ComplexPair<R>) -> ComplexPair<R> {
        a.neg()
    }
}

/// The one-dimensional form with `Q(r) = −r²`; its algebra is ℂ.
pub fn complex_form<R: Ring>() -> QuadraticForm<R> {
    QuadraticForm::diagonal(vec![-R::one()]).expect("dim 1")
}

/// Scalar part to `re`, the `e1` coefficient to `im`.
pub fn to_complex<R: Ring>(a: &Multivector<R>) -> Result<ComplexPair<R>> {
    if a.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: a.dim(),
        });
    }
    Ok(ComplexPair::new(
        a.coeff(&Blade::empty()),
        a.coeff(&Blade::from_bits(1)),
    ))
}

pub fn from_complex<R: Ring>(z: &ComplexPair<R>) -> Multivector<R> {
    let mut mv = Multivector::scalar(1, z.re.clone());
    mv = mv
        .try_add(&Multivector::blade(1, Blade::from_bits(1), z.im.clone()).expect("fits"))
        .expect("same dimension");
    mv
}

/// `r + i·i + j·j + k·k` with the Hamilton relations.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionQuad<R> {
    pub r: R,
    pub i: R,
    pub j: R,
    pub k: R,
}

impl<R: Ring> QuaternionQuad<R> {
    pub fn new(r: R, i: R, j: R, k: R) -> Self {
        QuaternionQuad { r, i, j, k }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        QuaternionQuad::new(
            self.r.clone() + rhs.r.clone(),
            self.i.clone() + rhs.i.clone(),
            self.j.clone() + rhs.j.clone(),
            self.k.clone() + rhs.k.clone(),
        )
    }

    /// Hamilton product: `i² = j² = k² = ijk = −1`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (self, rhs);
        QuaternionQuad::new(
            a.r.clone() * b.r.clone()
                - a.i.clone() * b.i.clone()
                - a.j.clone() * b.j.clone()
                - a.k.clone() * b.k.clone(),
            a.r.clone() * b.i.clone() + a.i.clone() * b.r.clone() + a.j.clone() * b.k.clone()
                - a.k.clone() * b.j.clone(),
            a.r.clone() * b.j.clone() + a.j.clone() * b.r.clone() + a.k.clone() * b.i.clone()
                - a.i.clone() * b.k.clone(),
            a.r.clone() * b.k.clone() + a.k.clone() * b.r.clone() + a.i.clone() * b.j.clone()
                - a.j.clone() * b.i.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        QuaternionQuad::new(
            -self.r.clone(),
            -self.i.clone(),
            -self.j.clone(),
            -self.k.clone(),
        )
    }
}

/// The quaternions as a lift target.
pub struct QuaternionAlgebra;

impl<R: Ring> TargetAlgebra<R> for QuaternionAlgebra {
    type Elem = QuaternionQuad<R>;
    fn scalar(&self, r: &R) -> QuaternionQuad<R> {
        QuaternionQuad::new(r.clone(), R::zero(), R::zero(), R::zero())
    }
    fn add(&self, a: &QuaternionQuad<R>, b: &QuaternionQuad<R>) -> QuaternionQuad<R> {
        a.add(b)
    }
    fn mul(&self, a: &QuaternionQuad<R>, b: &QuaternionQuad<R>) -> QuaternionQuad<R> {
        a.mul(b)
    }
    fn neg(&self, a: &QuaternionQuad<R>) -> QuaternionQuad<R> {
        a.neg()
    }
}

/// Signature (0,2,0); with the blade map `1, e1, e2, e1e2 ↦ 1, i, j, k`
/// its algebra is ℍ.
pub fn quaternion_form<R: Ring>() -> QuadraticForm<R> {
    QuadraticForm::diagonal(vec![-R::one(), -R::one()]).expect("dim 2")
}

pub fn to_quaternion<R: Ring>(a: &Multivector<R>) -> Result<QuaternionQuad<R>> {
    if a.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: a.dim(),
        });
    }
    Ok(QuaternionQuad::new(
        a.coeff(&Blade::empty()),
        a.coeff(&Blade::from_bits(0b01)),
        a.coeff(&Blade::from_bits(0b10)),
        a.coeff(&Blade::from_bits(0b11)),
    ))
}

pub fn from_quaternion<R: Ring>(q: &QuaternionQuad<R>) -> Multivector<R> {
    let mut mv = Multivector::scalar(2, q.r.clone());
    for (bits, c) in [(0b01u64, &q.i), (0b10, &q.j), (0b11, &q.k)] {
        mv = mv
            .try_add(&Multivector::blade(2, Blade::from_bits(bits), c.clone()).expect("fits"))
            .expect("same dimension");
    }
    mv
}

/// A vector of the conformal model: a direction in the base space plus
/// coefficients on the null vectors `n₀` (origin) and `n∞` (infinity).
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalVector<R> {
    pub direction: Vector<R>,
    pub c_n0: R,
    pub c_ni: R,
}

impl<R: Ring> ConformalVector<R> {
    pub fn new(direction: Vector<R>, c_n0: R, c_ni: R) -> Self {
        ConformalVector {
            direction,
            c_n0,
            c_ni,
        }
    }

    /// The embedding of a base direction, `(x, 0, 0)`.
    pub fn of_v(direction: Vector<R>) -> Self {
        ConformalVector::new(direction, R::zero(), R::zero())
    }

    /// The origin null vector `(0, 1, 0)`.
    pub fn n0(base_dim: usize) -> Self {
        ConformalVector::new(Vector::zero(base_dim), R::one(), R::zero())
    }

    /// The infinity null vector `(0, 0, 1)`.
    pub fn ni(base_dim: usize) -> Self {
        ConformalVector::new(Vector::zero(base_dim), R::zero(), R::one())
    }

    /// The three projections `(direction, c_n0, c_ni)`.
    pub fn parts(&self) -> (&Vector<R>, &R, &R) {
        (&self.direction, &self.c_n0, &self.c_ni)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        Ok(ConformalVector::new(
            self.direction.try_add(&rhs.direction)?,
            self.c_n0.clone() + rhs.c_n0.clone(),
            self.c_ni.clone() + rhs.c_ni.clone(),
        ))
    }

    pub fn scale(&self, c: &R) -> Self {
        ConformalVector::new(
            self.direction.scale(c),
            self.c_n0.clone() * c.clone(),
            self.c_ni.clone() * c.clone(),
        )
    }

    /// Flatten to coordinates `[x₁, …, x_n, c_n0, c_ni]`, the basis order
    /// used by [`cga_form`].
    pub fn to_vector(&self) -> Vector<R> {
        let mut coords: Vec<R> = self.direction.coords().to_vec();
        coords.push(self.c_n0.clone());
        coords.push(self.c_ni.clone());
        Vector::new(coords)
    }

    pub fn from_vector(v: &Vector<R>) -> Result<Self> {
        if v.dim() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: v.dim(),
            });
        }
        let n = v.dim() - 2;
        Ok(ConformalVector::new(
            Vector::new(v.coords()[..n].to_vec()),
            v.coord(n).clone(),
            v.coord(n + 1).clone(),
        ))
    }
}

/// The point embedding `up(x) = n₀ + x + ½‖x‖²·n∞`, which lands on the
/// null cone of [`cga_form`].
pub fn up<R: Field>(x: &Vector<R>) -> ConformalVector<R> {
    let norm_sq = x.dot(x).expect("same dimension");
    let half = R::one() / R::from_int(2);
    ConformalVector::new(x.clone(), R::one(), half * norm_sq)
}

/// The conformal metric on `[x₁, …, x_n, n₀, n∞]`: the identity on the
/// base block, `B(n₀,n₀) = B(n∞,n∞) = 0`, and `B(n₀,n∞) = −1`, so that
/// `Q(x) = ‖x.direction‖² − 2·c_n0·c_ni`.
pub fn cga_form<R: Ring>(base_dim: usize) -> Result<QuadraticForm<R>> {
    let dim = base_dim + 2;
    if dim > Blade::MAX_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    let mut rows = vec![vec![R::zero(); dim]; dim];
    for (i, row) in rows.iter_mut().enumerate().take(base_dim) {
        row[i] = R::one();
    }
    rows[base_dim][base_dim + 1] = -R::one();
    rows[base_dim + 1][base_dim] = -R::one();
    QuadraticForm::from_matrix(dim, rows)
}

/// A named algebra: its form, the basis tokens the expression language
/// uses, and the base dimension when the algebra is conformal.
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub form: QuadraticForm<Rational>,
    pub basis_names: Vec<String>,
    pub conformal_base: Option<usize>,
}

fn e_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn cga_names(n: usize) -> Vec<String> {
    let mut names = e_names(n);
    names.push("n0".to_string());
    names.push("ni".to_string());
    names
}

/// Look up a named algebra. The conformal presets expose the extra basis
/// tokens `n0` and `ni` for the null block.
pub fn preset(name: &str) -> Result<Preset> {
    let sig = |p, q, r| Signature::new(p, q, r).form::<Rational>().expect("small");
    let p = match name {
        "complex" => Preset {
            form: complex_form(),
            basis_names: e_names(1),
            conformal_base: None,
        },
        "quaternion" => Preset {
            form: quaternion_form(),
            basis_names: e_names(2),
            conformal_base: None,
        },
        "cga2" => Preset {
            form: cga_form(2)?,
            basis_names: cga_names(2),
            conformal_base: Some(2),
        },
        "cga3" => Preset {
            form: cga_form(3)?,
            basis_names: cga_names(3),
            conformal_base: Some(3),
        },
        "pga3" => Preset {
            form: sig(3, 0, 1),
            basis_names: e_names(4),
            conformal_base: None,
        },
        "euclid2" => Preset {
            form: sig(2, 0, 0),
            basis_names: e_names(2),
            conformal_base: None,
        },
        "euclid3" => Preset {
            form: sig(3, 0, 0),
            basis_names: e_names(3),
            conformal_base: None,
        },
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok(p)
}
