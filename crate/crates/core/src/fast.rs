//! Bit-set blade products for diagonal metrics, plus the derived wedge and
//! contraction products and engine dispatch.
//!
//! For a diagonal form the product of two blades is a single signed blade:
//! the symmetric difference `A Δ B`, weighted by the reordering sign
//! `(−1)^t` (t = pairs `a ∈ A, b ∈ B` with `a > b`) and the squares of the
//! shared factors. Non-diagonal forms are routed to the rewriting engine,
//! which keeps exact arithmetic without diagonalizing.

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::form::QuadraticForm;
use crate::multivector::Multivector;
use crate::quotient;
use crate::scalar::Ring;

/// Which product engine to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Fast blade engine for diagonal forms, rewriting engine otherwise.
    #[default]
    Auto,
    /// Always the rewriting engine.
    Oracle,
    /// Fast blade engine only; errors on non-diagonal forms.
    Fast,
}

/// Product of two basis blades under a diagonal form: `(coefficient, A Δ B)`.
pub fn blade_product_diagonal<R: Ring>(
    q: &QuadraticForm<R>,
    a: &Blade,
    b: &Blade,
) -> Result<(R, Blade)> {
    if !q.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    if !a.fits(q.dim()) || !b.fits(q.dim()) {
        return Err(Error::IndexOutOfRange {
            index: a.indices().chain(b.indices()).max().unwrap_or(0),
            dim: q.dim(),
        });
    }
    let mut coeff = if a.reorder_swaps(b).is_multiple_of(2) {
        R::one()
    } else {
        -R::one()
    };
    for i in a.indices() {
        if b.contains(i) {
            coeff = coeff * q.basis_square(i).clone();
            if coeff.is_zero() {
                break;
            }
        }
    }
    Ok((coeff, a.symmetric_difference(b)))
}

fn product_fast<R: Ring>(
    q: &QuadraticForm<R>,
    a: &Multivector<R>,
    b: &Multivector<R>,
) -> Result<Multivector<R>> {
    let mut out = Multivector::zero(q.dim());
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            let (coeff, blade) = blade_product_diagonal(q, ba, bb)?;
            out = out.try_add(&Multivector::blade(
                q.dim(),
                blade,
                ca.clone() * cb.clone() * coeff,
            )?)?;
        }
    }
    out.debug_validate();
    Ok(out)
}

/// The geometric product. `Auto` picks the blade engine for diagonal forms
/// and falls back to the rewriting engine otherwise; both paths agree
/// wherever both apply.
pub fn geometric_product_with<R: Ring>(
    engine: Engine,
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
    if b.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: q.dim(),
            found: b.dim(),
        });
    }
    match engine {
        Engine::Fast => product_fast(q, a, b),
        Engine::Oracle => quotient::product_general(q, a, b),
        Engine::Auto => {
            if q.is_diagonal() {
                product_fast(q, a, b)
            } else {
                quotient::product_general(q, a, b)
            }
        }
    }
}

/// Geometric product with automatic engine selection.
pub fn geometric_product<R: Ring>(
    q: &QuadraticForm<R>,
    a: &Multivector<R>,
    b: &Multivector<R>,
) -> Result<Multivector<R>> {
    geometric_product_with(Engine::Auto, q, a, b)
}

/// The wedge product: blade pairs with overlapping factors vanish, the rest
/// multiply with the reordering sign. Metric-independent; equal to the
/// geometric product under the zero form.
pub fn wedge_product<R: Ring>(a: &Multivector<R>, b: &Multivector<R>) -> Result<Multivector<R>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let mut out = Multivector::zero(a.dim());
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            if ba.intersects(bb) {
                continue;
            }
            let mut c = ca.clone() * cb.clone();
            if ba.reorder_swaps(bb) % 2 == 1 {
                c = -c;
            }
            out = out.try_add(&Multivector::blade(
                a.dim(),
                ba.symmetric_difference(bb),
                c,
            )?)?;
        }
    }
    Ok(out)
}

/// Left contraction `a ⌋ b`: grade-(j−i) parts of the products of the
/// grade-i parts of `a` with the grade-j parts of `b`, terms with `j < i`
/// dropped.
pub fn left_contraction<R: Ring>(
    q: &QuadraticForm<R>,
    a: &Multivector<R>,
    b: &Multivector<R>,
) -> Result<Multivector<R>> {
    left_contraction_with(Engine::Auto, q, a, b)
}

/// [`left_contraction`] with an explicit engine for the inner products.
pub fn left_contraction_with<R: Ring>(
    engine: Engine,
    q: &QuadraticForm<R>,
    a: &Multivector<R>,
    b: &Multivector<R>,
) -> Result<Multivector<R>> {
    for operand in [a, b] {
        if operand.dim() != q.dim() {
            return Err(Error::DimensionMismatch {
                expected: q.dim(),
                found: operand.dim(),
            });
        }
    }
    let mut out = Multivector::zero(q.dim());
    for i in a.grades() {
        let ai = a.grade_project(i);
        for j in b.grades() {
            if j < i {
                continue;
            }
            let bj = b.grade_project(j);
            let prod = geometric_product_with(engine, q, &ai, &bj)?;
            out = out.try_add(&prod.grade_project(j - i))?;
        }
    }
    Ok(out)
}

/// Memoized table of all blade pairs for a diagonal form. Behavior is
/// identical to [`blade_product_diagonal`]; this is a pure cache for
/// repeated products on small algebras.
pub struct BladeTable<R> {
    dim: usize,
    entries: Vec<(R, Blade)>,
}

impl<R: Ring> BladeTable<R> {
    pub fn build(q: &QuadraticForm<R>) -> Result<Self> {
        if !q.is_diagonal() {
            return Err(Error::NotDiagonal);
        }
        let n = q.dim();
        assert!(n <= 16, "blade table limited to small algebras");
        let size = 1usize << n;
        let mut entries = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                entries.push(blade_product_diagonal(
                    q,
                    &Blade::from_bits(a as u64),
                    &Blade::from_bits(b as u64),
                )?);
            }
        }
        Ok(BladeTable { dim: n, entries })
    }

    pub fn product(&self, a: &Blade, b: &Blade) -> &(R, Blade) {
        let size = 1usize << self.dim;
        &self.entries[(a.bits() as usize) * size + b.bits() as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::Signature;
    use crate::scalar::{rat, Rational};

    fn blade(ix: &[usize]) -> Blade {
        Blade::from_indices(ix).unwrap()
    }

    fn mv_blade(dim: usize, ix: &[usize]) -> Multivector<Rational> {
        Multivector::blade(dim, blade(ix), rat(1, 1)).unwrap()
    }

    #[test]
    fn blade_products_match_hand_results() {
        let q = Signature::new(2, 0, 0).form::<Rational>().unwrap();
        assert_eq!(
            blade_product_diagonal(&q, &blade(&[0]), &blade(&[1])).unwrap(),
            (rat(1, 1), blade(&[0, 1]))
        );
        assert_eq!(
            blade_product_diagonal(&q, &blade(&[1]), &blade(&[0])).unwrap(),
            (rat(-1, 1), blade(&[0, 1]))
        );
        assert_eq!(
            blade_product_diagonal(&q, &blade(&[0, 1]), &blade(&[0, 1])).unwrap(),
            (rat(-1, 1), Blade::empty())
        );
    }

    #[test]
    fn non_diagonal_is_rejected_by_the_fast_engine() {
        let q = QuadraticForm::from_matrix(
            2,
            vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(-1, 1), rat(0, 1)]],
        )
        .unwrap();
        assert_eq!(
            blade_product_diagonal(&q, &Blade::empty(), &Blade::empty()),
            Err(Error::NotDiagonal)
        );
        // ... but dispatch still covers it.
        let n0 = mv_blade(2, &[0]);
        let ni = mv_blade(2, &[1]);
        let anti = geometric_product(&q, &n0, &ni)
            .unwrap()
            .try_add(&geometric_product(&q, &ni, &n0).unwrap())
            .unwrap();
        assert_eq!(anti, Multivector::scalar(2, rat(-2, 1)));
        assert_eq!(
            geometric_product_with(Engine::Fast, &q, &n0, &ni),
            Err(Error::NotDiagonal)
        );
    }

    #[test]
    fn unit_law_and_complex_square() {
        let q = Signature::new(0, 1, 0).form::<Rational>().unwrap();
        let e1 = mv_blade(1, &[0]);
        assert_eq!(
            geometric_product(&q, &e1, &e1).unwrap(),
            Multivector::scalar(1, rat(-1, 1))
        );
        let x = Multivector::one(1).try_add(&e1.scale(&rat(2, 3))).unwrap();
        assert_eq!(geometric_product(&q, &x, &Multivector::one(1)).unwrap(), x);
    }

    #[test]
    fn vector_product_splits_into_dot_plus_wedge() {
        let q = Signature::new(3, 0, 0).form::<Rational>().unwrap();
        let a = Multivector::iota(&crate::vector::Vector::new(vec![
            rat(1, 1),
            rat(2, 1),
            rat(-1, 2),
        ]));
        let b = Multivector::iota(&crate::vector::Vector::new(vec![
            rat(0, 1),
            rat(1, 3),
            rat(5, 1),
        ]));
        let ab = geometric_product(&q, &a, &b).unwrap();
        let recomposed = ab.grade_project(0).try_add(&ab.grade_project(2)).unwrap();
        assert_eq!(recomposed, ab);
        assert_eq!(ab.grade_project(2), wedge_product(&a, &b).unwrap());
    }

    #[test]
    fn wedge_vanishes_on_overlap_and_antisymmetrizes() {
        let e1 = mv_blade(2, &[0]);
        let e2 = mv_blade(2, &[1]);
        assert!(wedge_product(&e1, &e1).unwrap().is_zero());
        assert_eq!(wedge_product(&e1, &e2).unwrap(), mv_blade(2, &[0, 1]));
        assert_eq!(
            wedge_product(&e1, &e2).unwrap(),
            wedge_product(&e2, &e1).unwrap().neg()
        );
    }

    #[test]
    fn left_contraction_cases() {
        let q = Signature::new(2, 0, 0).form::<Rational>().unwrap();
        let e1 = mv_blade(2, &[0]);
        let e12 = mv_blade(2, &[0, 1]);
        let x = Multivector::one(2)
            .try_add(&e1)
            .unwrap()
            .try_add(&e12.scale(&rat(-2, 1)))
            .unwrap();
        assert_eq!(left_contraction(&q, &Multivector::one(2), &x).unwrap(), x);
        assert_eq!(left_contraction(&q, &e1, &e1).unwrap(), Multivector::one(2));
        assert!(left_contraction(&q, &e12, &e1).unwrap().is_zero());
    }

    #[test]
    fn contraction_checks_dimensions_even_for_zero_operands() {
        let q = Signature::new(2, 0, 0).form::<Rational>().unwrap();
        let zero3 = Multivector::<Rational>::zero(3);
        let ok2 = Multivector::<Rational>::one(2);
        assert!(left_contraction(&q, &zero3, &ok2).is_err());
        assert!(left_contraction(&q, &ok2, &zero3).is_err());
        assert!(left_contraction(&q, &Multivector::zero(2), &ok2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn cached_table_matches_direct_products() {
        let q = Signature::new(1, 1, 1).form::<Rational>().unwrap();
        let table = BladeTable::build(&q).unwrap();
        for a in 0..8u64 {
            for b in 0..8u64 {
                let (ba, bb) = (Blade::from_bits(a), Blade::from_bits(b));
                assert_eq!(
                    table.product(&ba, &bb),
                    &blade_product_diagonal(&q, &ba, &bb).unwrap()
                );
            }
        }
    }
}
