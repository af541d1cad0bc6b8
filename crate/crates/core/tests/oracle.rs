//! The rewriting engine against itself and against the fast blade engine:
//! ring laws, the defining relation, determinism, and exhaustive
//! cross-engine agreement on small diagonal algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gaq::expr::basis_blades;
use gaq::fast::{blade_product_diagonal, geometric_product_with, Engine};
use gaq::scalar::rat;
use gaq::structure::random_multivector_with;
use gaq::testutil::{random_symmetric_form, random_vector, signatures_up_to};
use gaq::{
    confluence_probe, normalize, product_general, tensor_mul, Multivector, QuadraticForm, Rational,
    TensorElement, Vector,
};

fn random_tensor_element(
    rng: &mut ChaCha8Rng,
    dim: usize,
    words: usize,
    max_len: usize,
) -> TensorElement<Rational> {
    let mut acc = TensorElement::zero(dim);
    for _ in 0..words {
        let len = rng.random_range(0..=max_len);
        let word: Vec<usize> = (0..len).map(|_| rng.random_range(0..dim)).collect();
        let coeff = rat(rng.random_range(-4..=4), rng.random_range(1..=4));
        acc = acc
            .try_add(&TensorElement::word(dim, &word, coeff).unwrap())
            .unwrap();
    }
    acc
}

#[test]
fn ring_laws_hold_after_normalization() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for dim in 1..=4 {
        let q = random_symmetric_form(&mut rng, dim);
        for _ in 0..30 {
            let a = normalize(&q, &random_tensor_element(&mut rng, dim, 3, 4));
            let b = normalize(&q, &random_tensor_element(&mut rng, dim, 3, 4));
            let c = normalize(&q, &random_tensor_element(&mut rng, dim, 3, 4));
            let ab = product_general(&q, &a, &b).unwrap();
            let bc = product_general(&q, &b, &c).unwrap();
            assert_eq!(
                product_general(&q, &ab, &c).unwrap(),
                product_general(&q, &a, &bc).unwrap(),
                "associativity"
            );
            let b_plus_c = b.try_add(&c).unwrap();
            assert_eq!(
                product_general(&q, &a, &b_plus_c).unwrap(),
                ab.try_add(&product_general(&q, &a, &c).unwrap()).unwrap(),
                "left distributivity"
            );
            let one = Multivector::one(dim);
            assert_eq!(product_general(&q, &one, &a).unwrap(), a);
            assert_eq!(product_general(&q, &a, &one).unwrap(), a);
        }
    }
}

#[test]
fn vectors_square_to_their_metric_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for dim in 1..=5 {
        for _ in 0..20 {
            let q = random_symmetric_form(&mut rng, dim);
            let v = random_vector(&mut rng, dim);
            let iota = Multivector::iota(&v);
            assert_eq!(
                product_general(&q, &iota, &iota).unwrap(),
                Multivector::scalar(dim, q.eval(&v).unwrap())
            );
        }
    }
}

#[test]
fn scalar_embedding_is_a_ring_morphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let q = random_symmetric_form(&mut rng, 3);
    for _ in 0..50 {
        let a = rat(rng.random_range(-9..=9), rng.random_range(1..=9));
        let b = rat(rng.random_range(-9..=9), rng.random_range(1..=9));
        let lhs = product_general(
            &q,
            &Multivector::scalar(3, a.clone()),
            &Multivector::scalar(3, b.clone()),
        )
        .unwrap();
        assert_eq!(lhs, Multivector::scalar(3, a * b));
    }
}

#[test]
fn normalization_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for dim in 1..=4 {
        let q = random_symmetric_form(&mut rng, dim);
        for _ in 0..30 {
            let t = random_tensor_element(&mut rng, dim, 4, 5);
            let once = normalize(&q, &t);
            let again = normalize(&q, &TensorElement::from_multivector(&once));
            assert_eq!(again, once);
        }
    }
}

#[test]
fn randomized_rewrite_orders_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dim in 1..=4 {
        let q = random_symmetric_form(&mut rng, dim);
        for _ in 0..10 {
            let t = random_tensor_element(&mut rng, dim, 3, 5);
            assert!(confluence_probe(&q, &t, 20, &mut rng));
        }
    }
}

#[test]
fn product_via_tensor_mul_matches_product_general() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let q = random_symmetric_form(&mut rng, 3);
    for _ in 0..20 {
        let a = normalize(&q, &random_tensor_element(&mut rng, 3, 3, 4));
        let b = normalize(&q, &random_tensor_element(&mut rng, 3, 3, 4));
        let direct = product_general(&q, &a, &b).unwrap();
        let via_words = normalize(
            &q,
            &tensor_mul(
                &TensorElement::from_multivector(&a),
                &TensorElement::from_multivector(&b),
            )
            .unwrap(),
        );
        assert_eq!(direct, via_words);
    }
}

#[test]
fn engines_agree_on_every_blade_pair_of_small_diagonal_algebras() {
    for sig in signatures_up_to(4) {
        let q: QuadraticForm<Rational> = sig.form().unwrap();
        let dim = q.dim();
        for a in basis_blades(dim) {
            for b in basis_blades(dim) {
                let ma = Multivector::blade(dim, a, rat(1, 1)).unwrap();
                let mb = Multivector::blade(dim, b, rat(1, 1)).unwrap();
                let fast = geometric_product_with(Engine::Fast, &q, &ma, &mb).unwrap();
                let oracle = geometric_product_with(Engine::Oracle, &q, &ma, &mb).unwrap();
                assert_eq!(fast, oracle, "signature {sig:?}, blades {a} · {b}");
                let (coeff, blade) = blade_product_diagonal(&q, &a, &b).unwrap();
                assert_eq!(fast, Multivector::blade(dim, blade, coeff).unwrap());
            }
        }
    }
}

#[test]
fn engines_agree_on_random_multivectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for sig in signatures_up_to(3) {
        let q: QuadraticForm<Rational> = sig.form().unwrap();
        for _ in 0..10 {
            let a = random_multivector_with(&mut rng, &q, 3);
            let b = random_multivector_with(&mut rng, &q, 3);
            assert_eq!(
                geometric_product_with(Engine::Fast, &q, &a, &b).unwrap(),
                geometric_product_with(Engine::Oracle, &q, &a, &b).unwrap()
            );
        }
    }
}

#[test]
fn polarized_relation_on_vector_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for dim in 1..=4 {
        let q = random_symmetric_form(&mut rng, dim);
        for _ in 0..20 {
            let u = random_vector(&mut rng, dim);
            let v = random_vector(&mut rng, dim);
            let (iu, iv) = (Multivector::iota(&u), Multivector::iota(&v));
            let anti = product_general(&q, &iu, &iv)
                .unwrap()
                .try_add(&product_general(&q, &iv, &iu).unwrap())
                .unwrap();
            assert_eq!(anti, Multivector::scalar(dim, q.polar(&u, &v).unwrap()));
        }
    }
}

#[test]
fn non_diagonal_null_block_products() {
    // B(n0,ni) = −1 on the 2-dimensional null block
    let q = QuadraticForm::from_matrix(
        2,
        vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(-1, 1), rat(0, 1)]],
    )
    .unwrap();
    let n0 = Multivector::iota(&Vector::basis(2, 0));
    let ni = Multivector::iota(&Vector::basis(2, 1));
    let anti = product_general(&q, &n0, &ni)
        .unwrap()
        .try_add(&product_general(&q, &ni, &n0).unwrap())
        .unwrap();
    assert_eq!(anti, Multivector::scalar(2, rat(-2, 1)));
    assert!(product_general(&q, &n0, &n0).unwrap().is_zero());
}
