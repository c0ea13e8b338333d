//! `μ*` as a coaction of the segment Hopf algebra on classical classes.

mod common;

use common::{ctx, multisegments_up_to, segments_within};
use jacquet::classical::{induced, mu_star, word_model_classical, TemperedSymbol};
use jacquet::gl::mstar;
use jacquet::{gl, Combination, Induced, MuSum, Multisegment, Tensor};

type Triple = Combination<Tensor<Multisegment, Tensor<Multisegment, Induced>>>;

fn temps() -> Vec<TemperedSymbol> {
    vec![
        TemperedSymbol::Cuspidal,
        TemperedSymbol::GenSteinberg(0),
        TemperedSymbol::GenSteinberg(1),
    ]
}

fn left_then_split(mu: &MuSum) -> Triple {
    mu.map_linear(|Tensor(l, r)| {
        mstar(&gl::standard(l))
            .map_linear(|Tensor(a, b)| Triple::basis(Tensor(a.clone(), Tensor(b.clone(), r.clone()))))
    })
}

fn right_then_split(mu: &MuSum, c: &jacquet::CuspidalContext) -> Triple {
    mu.map_linear(|Tensor(l, r)| {
        mu_star(&Combination::basis(r.clone()), c)
            .unwrap()
            .map_keys(|Tensor(a, b)| Tensor(l.clone(), Tensor(a.clone(), b.clone())))
    })
}

#[test]
fn coaction_is_coassociative() {
    for twice in [1, 2] {
        let c = ctx(twice);
        let segs = segments_within(2, twice % 2 == 1);
        for d in multisegments_up_to(&segs, 2) {
            for t in temps() {
                let x = induced(d.clone(), t.clone());
                let mu = mu_star(&x, &c).unwrap();
                assert_eq!(left_then_split(&mu), right_then_split(&mu, &c), "{x}");
            }
        }
    }
}

#[test]
fn coaction_has_counit_and_positive_coefficients() {
    let c = ctx(1);
    for d in multisegments_up_to(&segments_within(2, true), 3) {
        for t in temps() {
            let x = induced(d.clone(), t.clone());
            let mu = mu_star(&x, &c).unwrap();
            assert!(mu.is_nonnegative(), "{x}");
            let degree_zero = mu.filter(|Tensor(l, _)| l.is_unit()).map_keys(|Tensor(_, r)| r.clone());
            assert_eq!(degree_zero, x, "counit of {x}");
            let degree = d.degree() + t.degree();
            for (Tensor(l, r), _) in mu.iter() {
                assert_eq!(l.degree() + r.degree(), degree, "{x}");
            }
        }
    }
}

#[test]
fn inducing_from_the_contragredient_gives_the_same_words() {
    for twice in [1, 2] {
        let c = ctx(twice);
        for d in multisegments_up_to(&segments_within(2, twice % 2 == 1), 3) {
            for t in temps() {
                let x = induced(d.clone(), t.clone());
                let y = induced(d.contragredient(), t.clone());
                assert_eq!(
                    word_model_classical(&x, &c).unwrap(),
                    word_model_classical(&y, &c).unwrap(),
                    "{x}"
                );
            }
        }
    }
}
