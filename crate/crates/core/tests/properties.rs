//! Algebraic invariants of the segment ring under random inputs.

mod common;

use common::{multisegments_up_to, segments_within};
use jacquet::gl::{
    contragredient, gl_mul, highest_derivative, involution_ring, mstar, standard, tensor_mul, word_model,
};
use jacquet::linalg::rank;
use jacquet::word::shuffle;
use jacquet::{GlElement, Multisegment, Segment};
use proptest::prelude::*;

fn segment() -> impl Strategy<Value = Segment> {
    (-2i64..=2, 1i64..=3).prop_map(|(lo, len)| Segment::ints(lo, lo + len - 1))
}

fn multisegment(max_segs: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(), 1..=max_segs).prop_map(Multisegment::new)
}

/// Small signed combinations of standard modules.
fn element() -> impl Strategy<Value = GlElement> {
    prop::collection::vec((multisegment(2), -2i64..=2), 1..=2).prop_map(|terms| {
        terms
            .into_iter()
            .fold(GlElement::zero(), |acc, (d, c)| acc.add(&standard(&d).scale(&c.into())))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mstar_is_multiplicative(x in element(), y in element()) {
        prop_assert_eq!(mstar(&gl_mul(&x, &y)), tensor_mul(&mstar(&x), &mstar(&y)));
    }

    #[test]
    fn word_model_turns_products_into_shuffles(x in element(), y in element()) {
        prop_assert_eq!(word_model(&gl_mul(&x, &y)), shuffle(&word_model(&x), &word_model(&y)));
    }

    #[test]
    fn highest_derivative_is_multiplicative_on_standard_modules(a in multisegment(2), b in multisegment(2)) {
        let product = gl_mul(&standard(&a), &standard(&b));
        let separate = gl_mul(&highest_derivative(&standard(&a)), &highest_derivative(&standard(&b)));
        prop_assert_eq!(highest_derivative(&product), separate);
    }

    #[test]
    fn involution_is_a_ring_homomorphism(x in element(), y in element()) {
        let lhs = involution_ring(&gl_mul(&x, &y)).unwrap();
        let rhs = gl_mul(&involution_ring(&x).unwrap(), &involution_ring(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn involution_is_an_involution(x in element()) {
        prop_assert_eq!(involution_ring(&involution_ring(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn involution_commutes_with_contragredient(x in element()) {
        prop_assert_eq!(
            involution_ring(&contragredient(&x)).unwrap(),
            contragredient(&involution_ring(&x).unwrap())
        );
    }
}

#[test]
fn word_model_is_faithful_in_each_degree() {
    let segs = segments_within(1, false);
    let all = multisegments_up_to(&segs, 4);
    for k in 1..=4 {
        let of_degree: Vec<&Multisegment> = all.iter().filter(|d| d.degree() == k).collect();
        let words: Vec<_> = of_degree.iter().map(|d| word_model(&standard(d))).collect();
        assert_eq!(rank(&words), words.len(), "degree {k}");
    }
}
