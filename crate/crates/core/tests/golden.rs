//! Printed expansions and worked examples, term for term.

use baxterlab::free_baxter::{p1x_power, shuffle_tails};
use baxterlab::identities::mixcoeff;
use baxterlab::{Algebra, Base, BaxterElement, Coefficient, Composition, Ring, TensorWord};

fn w(e: &[u32]) -> TensorWord {
    TensorWord::new(e.to_vec()).unwrap()
}

/// `c λ^d` in ℤ[λ].
fn cl(r: &Ring, c: i64, d: u32) -> Coefficient {
    &r.from_int(c) * &r.lambda_pow(d)
}

fn element(alg: &Algebra, terms: &[(&[u32], i64, u32)]) -> BaxterElement {
    let r = alg.ring();
    BaxterElement::from_terms(alg, terms.iter().map(|(e, c, d)| (w(e), cl(r, *c, *d)))).unwrap()
}

#[test]
fn powers_of_p_of_x() {
    let alg = Algebra::formal();
    assert_eq!(p1x_power(&alg, 1), element(&alg, &[(&[0, 1], 1, 0)]));
    assert_eq!(
        p1x_power(&alg, 2),
        element(&alg, &[(&[0, 1, 1], 2, 0), (&[0, 2], 1, 1)])
    );
    assert_eq!(
        p1x_power(&alg, 3),
        element(
            &alg,
            &[
                (&[0, 1, 1, 1], 6, 0),
                (&[0, 1, 2], 3, 1),
                (&[0, 2, 1], 3, 1),
                (&[0, 3], 1, 2),
            ]
        )
    );
    let fourth = p1x_power(&alg, 4);
    assert_eq!(
        fourth,
        element(
            &alg,
            &[
                (&[0, 1, 1, 1, 1], 24, 0),
                (&[0, 1, 1, 2], 12, 1),
                (&[0, 1, 2, 1], 12, 1),
                (&[0, 2, 1, 1], 12, 1),
                (&[0, 2, 2], 6, 2),
                (&[0, 1, 3], 4, 2),
                (&[0, 3, 1], 4, 2),
                (&[0, 4], 1, 3),
            ]
        )
    );
    assert_eq!(fourth.len(), 8);
}

#[test]
fn text_of_the_square() {
    let alg = Algebra::formal();
    assert_eq!(p1x_power(&alg, 2).render(false), "2 (1⊗x⊗x) + λ (1⊗x^2)");
}

#[test]
fn three_by_two_worked_example() {
    // a0..a2 = x, x^2, x^4 and b0, b1 = x^8, x^16
    let alg = Algebra::formal();
    let a = BaxterElement::word(&alg, w(&[1, 2, 4]));
    let b = BaxterElement::word(&alg, w(&[8, 16]));
    let head = 9;
    let want = element(
        &alg,
        &[
            (&[head, 2, 4, 16], 1, 0),
            (&[head, 2, 16, 4], 1, 0),
            (&[head, 2, 20], 1, 1),
            (&[head, 16, 2, 4], 1, 0),
            (&[head, 18, 4], 1, 1),
        ],
    );
    assert_eq!(a.product(&b).unwrap(), want);
    assert_eq!(b.product(&a).unwrap(), want);
}

#[test]
fn tail_shuffles() {
    let alg = Algebra::formal();
    let r = alg.ring();
    assert_eq!(
        shuffle_tails(&alg, &[1], &[1]),
        vec![(vec![1, 1], r.from_int(2)), (vec![2], r.lambda())]
    );
    assert_eq!(shuffle_tails(&alg, &[1, 2], &[4]).len(), 5);
    assert_eq!(
        shuffle_tails(&alg, &[], &[2, 1]),
        vec![(vec![2, 1], r.one())]
    );
}

#[test]
fn unit_is_neutral() {
    let alg = Algebra::formal();
    let unit = BaxterElement::unit(&alg);
    for e in [&[0u32][..], &[3], &[1, 2], &[0, 0, 5], &[2, 1, 1, 3]] {
        let x = BaxterElement::word(&alg, w(e));
        assert_eq!(unit.product(&x).unwrap(), x);
        assert_eq!(x.product(&unit).unwrap(), x);
        assert_eq!(x.power(1), x);
    }
}

#[test]
fn square_of_p_of_unit() {
    let alg = Algebra::formal();
    let p1 = BaxterElement::iterated_p_of_unit(&alg, 1);
    assert_eq!(
        p1.power(2),
        element(&alg, &[(&[0, 0, 0], 2, 0), (&[0, 0], 1, 1)])
    );
}

#[test]
fn coefficients_of_the_cube() {
    let alg = Algebra::formal();
    let r = alg.ring();
    let cube = p1x_power(&alg, 3);
    assert_eq!(cube.coefficient_of(&w(&[0, 2, 1])), cl(r, 3, 1));
    assert_eq!(cube.coefficient_of(&w(&[0, 1, 1, 1])), cl(r, 6, 0));
    assert!(cube.coefficient_of(&w(&[1, 1, 1])).is_zero());
    let c = |p: &[u32]| Composition::new(p.to_vec()).unwrap();
    assert_eq!(mixcoeff(4, &c(&[2, 2])).unwrap(), cl(r, 6, 2));
    assert_eq!(mixcoeff(4, &c(&[1, 3])).unwrap(), cl(r, 4, 2));
    assert_eq!(mixcoeff(4, &c(&[1, 1, 2])).unwrap(), cl(r, 12, 1));
}

#[test]
fn reductions_of_printed_expansions() {
    let alg = Algebra::formal();
    let f2 = Algebra::polynomial(Ring::formal(Base::ModP(2)).unwrap());
    let f3 = Algebra::polynomial(Ring::formal(Base::ModP(3)).unwrap());
    assert_eq!(
        p1x_power(&alg, 2).reduce_mod_p(2).unwrap(),
        BaxterElement::monomial(&f2, w(&[0, 2]), f2.ring().lambda()).unwrap()
    );
    assert_eq!(
        p1x_power(&alg, 3).reduce_mod_p(3).unwrap(),
        BaxterElement::monomial(&f3, w(&[0, 3]), f3.ring().lambda_pow(2)).unwrap()
    );
}

#[test]
fn weight_one_specializes_the_expansion() {
    let alg = Algebra::polynomial(Ring::pinned(Base::Int, 1).unwrap());
    let r = alg.ring();
    let fourth = p1x_power(&alg, 4);
    assert_eq!(fourth.coefficient_of(&w(&[0, 2, 2])), r.from_int(6));
    assert_eq!(
        p1x_power(&Algebra::formal(), 4).pin_lambda(1).unwrap(),
        fourth
    );
}
