//! Conjugation laws, the Z₂ grading, versor closure and inversion, the
//! alternating wedge, and the grade filtration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gaq::fast::{geometric_product, Engine};
use gaq::scalar::rat;
use gaq::structure::{lift, random_multivector_with, CliffordTarget, Versor};
use gaq::testutil::{random_vector, random_versor, rank, signatures_up_to};
use gaq::{iota_wedge, wedge_product, Multivector, QuadraticForm, Rational, Signature, Vector};

fn forms_under_test() -> Vec<QuadraticForm<Rational>> {
    signatures_up_to(4)
        .into_iter()
        .map(|s| s.form().unwrap())
        .collect()
}

#[test]
fn conjugations_are_involutive_and_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for q in forms_under_test() {
        for _ in 0..20 {
            let x = random_multivector_with(&mut rng, &q, 3);
            assert_eq!(x.involute().involute(), x);
            assert_eq!(x.reverse().reverse(), x);
            assert_eq!(x.reverse().involute(), x.involute().reverse());
        }
    }
}

#[test]
fn involute_is_a_morphism_and_reverse_an_antimorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in forms_under_test() {
        for _ in 0..10 {
            let a = random_multivector_with(&mut rng, &q, 3);
            let b = random_multivector_with(&mut rng, &q, 3);
            let ab = geometric_product(&q, &a, &b).unwrap();
            assert_eq!(
                ab.involute(),
                geometric_product(&q, &a.involute(), &b.involute()).unwrap()
            );
            assert_eq!(
                ab.reverse(),
                geometric_product(&q, &b.reverse(), &a.reverse()).unwrap()
            );
        }
    }
}

#[test]
fn z2_split_is_unique_and_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for q in forms_under_test() {
        for _ in 0..10 {
            let a = random_multivector_with(&mut rng, &q, 3);
            let b = random_multivector_with(&mut rng, &q, 3);
            let (ae, ao) = a.even_odd_parts();
            assert_eq!(ae.try_add(&ao).unwrap(), a);
            // the parts are themselves pure, so re-splitting is a fixpoint
            assert_eq!(ae.even_odd_parts().0, ae);
            assert!(ae.even_odd_parts().1.is_zero());
            assert!(ao.even_odd_parts().0.is_zero());

            let (be, bo) = b.even_odd_parts();
            for (x, y, parity_even) in [
                (&ae, &be, true),
                (&ao, &bo, true),
                (&ae, &bo, false),
                (&ao, &be, false),
            ] {
                let prod = geometric_product(&q, x, y).unwrap();
                let (pe, po) = prod.even_odd_parts();
                if parity_even {
                    assert!(po.is_zero(), "even product has odd part");
                    assert_eq!(pe, prod);
                } else {
                    assert!(pe.is_zero(), "odd product has even part");
                    assert_eq!(po, prod);
                }
            }
        }
    }
}

#[test]
fn filtration_bound_on_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for q in forms_under_test() {
        for _ in 0..10 {
            let a = random_multivector_with(&mut rng, &q, 3);
            let b = random_multivector_with(&mut rng, &q, 3);
            let ab = geometric_product(&q, &a, &b).unwrap();
            if let (Some(ga), Some(gb), Some(gab)) = (a.max_grade(), b.max_grade(), ab.max_grade())
            {
                assert!(gab <= ga + gb, "filtration violated: {gab} > {ga} + {gb}");
            }
        }
    }
}

#[test]
fn versor_group_behavior_over_definite_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for n in 1..=4 {
        for sig in [Signature::new(n, 0, 0), Signature::new(0, n, 0)] {
            let q: QuadraticForm<Rational> = sig.form().unwrap();
            for _ in 0..10 {
                let u = random_versor(&mut rng, &q, 4);
                let w = random_versor(&mut rng, &q, 4);
                let norm_u = u.norm(&q).unwrap();
                let norm_w = w.norm(&q).unwrap();
                let uw = u.mul(&w, &q).unwrap();
                assert_eq!(uw.norm(&q).unwrap(), norm_u.clone() * norm_w);
                assert_eq!(
                    uw.cached(),
                    &geometric_product(&q, u.cached(), w.cached()).unwrap()
                );

                // involute and reverse stay versors with matching caches
                assert_eq!(u.involute().cached(), &u.cached().involute());
                assert_eq!(u.reverse().cached(), &u.cached().reverse());

                if !num_traits::Zero::is_zero(&norm_u) {
                    let inv = u.inverse(&q).unwrap();
                    let left = geometric_product(&q, inv.cached(), u.cached()).unwrap();
                    let right = geometric_product(&q, u.cached(), inv.cached()).unwrap();
                    assert_eq!(left, Multivector::one(q.dim()));
                    assert_eq!(right, Multivector::one(q.dim()));
                }
            }
        }
    }
}

#[test]
fn unit_versors_preserve_vector_grade_under_sandwich() {
    let q: QuadraticForm<Rational> = Signature::new(3, 0, 0).form().unwrap();
    for i in 0..3 {
        let u = Versor::from_vector(&q, Vector::basis(3, i)).unwrap();
        for j in 0..3 {
            let x = Multivector::iota(&Vector::basis(3, j));
            let image = u.sandwich(&x, &q).unwrap();
            assert_eq!(image.grades(), vec![1]);
            let expected = if i == j { x } else { x.neg() };
            assert_eq!(image, expected);
        }
    }
}

#[test]
fn alternating_wedge_vanishes_on_dependent_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let q: QuadraticForm<Rational> = Signature::new(2, 1, 0).form().unwrap();
    for _ in 0..50 {
        let a = random_vector(&mut rng, 3);
        let b = random_vector(&mut rng, 3);
        assert!(iota_wedge(&q, &[a.clone(), b.clone(), a.clone()])
            .unwrap()
            .is_zero());

        // a list with an explicit linear combination inside
        let combo = a
            .scale(&rat(rng.random_range(-3..=3), 1))
            .try_add(&b.scale(&rat(rng.random_range(-3..=3), 1)))
            .unwrap();
        let list = [a.clone(), b.clone(), combo];
        assert!(rank(&list) <= 2);
        assert!(iota_wedge(&q, &list).unwrap().is_zero());
    }
}

#[test]
fn alternating_wedge_matches_blade_wedge_under_zero_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for n in 1..=4 {
        let q: QuadraticForm<Rational> = Signature::new(0, 0, n).form().unwrap();
        for len in 1..=3.min(n) {
            for _ in 0..10 {
                let xs: Vec<Vector<Rational>> =
                    (0..len).map(|_| random_vector(&mut rng, n)).collect();
                let alternating = iota_wedge(&q, &xs).unwrap();
                let mut direct = Multivector::one(n);
                for x in &xs {
                    direct = wedge_product(&direct, &Multivector::iota(x)).unwrap();
                }
                assert_eq!(alternating, direct);
            }
        }
    }
}

#[test]
fn lift_morphisms_agreeing_on_the_basis_agree_everywhere() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let q: QuadraticForm<Rational> = Signature::new(2, 1, 0).form().unwrap();
    let target = CliffordTarget {
        form: &q,
        engine: Engine::Auto,
    };
    // two independently constructed morphisms from the same basis images
    let images: Vec<Multivector<Rational>> = (0..3)
        .map(|i| Multivector::iota(&Vector::basis(3, i)).neg())
        .collect();
    let f = lift(&q, &target, images.clone()).unwrap();
    let g = lift(&q, &target, images).unwrap();
    for _ in 0..50 {
        let x = random_multivector_with(&mut rng, &q, 3);
        assert_eq!(f.apply(&x).unwrap(), g.apply(&x).unwrap());
    }
}

#[test]
fn reverse_of_blades_matches_word_reversal_on_diagonal_forms() {
    use gaq::{normalize, Blade, TensorElement};
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..20 {
        let dim = rng.random_range(1..=5usize);
        let entries: Vec<_> = (0..dim).map(|_| rat(rng.random_range(-3..=3), 1)).collect();
        let q = QuadraticForm::diagonal(entries).unwrap();
        for bits in 0..(1u64 << dim) {
            let blade = Blade::from_bits(bits);
            let mv = Multivector::blade(dim, blade, rat(1, 1)).unwrap();
            let mut word: Vec<usize> = blade.indices().collect();
            word.reverse();
            let via_oracle = normalize(&q, &TensorElement::word(dim, &word, rat(1, 1)).unwrap());
            assert_eq!(mv.reverse(), via_oracle, "blade {blade}");
        }
    }
}

#[test]
fn versors_work_over_the_conformal_form() {
    use gaq::models::cga_form;
    let q: QuadraticForm<Rational> = cga_form(2).unwrap();
    // a null generator has norm zero and no inverse
    let n0 = Versor::from_vector(&q, Vector::basis(4, 2)).unwrap();
    assert_eq!(n0.norm(&q).unwrap(), rat(0, 1));
    assert!(n0.inverse(&q).is_err());

    // n0 + 2·ni squares to −4, so the versor inverts two-sidedly
    let v = Vector::new(vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(2, 1)]);
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let u = Versor::new(&q, rat(1, 1), vec![Vector::basis(4, 0), v]).unwrap();
    assert_eq!(u.norm(&q).unwrap(), rat(-4, 1));
    let inv = u.inverse(&q).unwrap();
    let one = Multivector::one(4);
    assert_eq!(
        geometric_product(&q, u.cached(), inv.cached()).unwrap(),
        one
    );
    assert_eq!(
        geometric_product(&q, inv.cached(), u.cached()).unwrap(),
        one
    );
    let x = random_multivector_with(&mut rng, &q, 2);
    let sandwiched = u.sandwich(&x, &q).unwrap();
    let undone = u.inverse(&q).unwrap().sandwich(&sandwiched, &q).unwrap();
    assert_eq!(undone, x);
}

#[test]
fn random_generator_reaches_every_blade() {
    // regression bound: at n = 3, depth 4, all 8 blades appear over 10k seeds
    let q: QuadraticForm<Rational> = Signature::new(3, 0, 0).form().unwrap();
    let mut seen = [0usize; 8];
    for seed in 0..10_000u64 {
        let x = gaq::random_multivector(seed, &q, 4);
        for (b, _) in x.terms() {
            seen[b.bits() as usize] += 1;
        }
    }
    for (bits, count) in seen.iter().enumerate() {
        assert!(*count > 0, "blade {bits:#05b} never generated");
    }
}
