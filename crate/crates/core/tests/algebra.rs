use std::collections::BTreeMap;

use dgalg_core::algebra::validate_grading;
use dgalg_core::coeff::Rational;
use dgalg_core::group::integers_times;
use dgalg_core::report::Counterexample;
use dgalg_core::{
    AlgebraElement, Budget, GaussianRational, GradedGroup, Grading, Group, GroupElement, Window, WindowSpec,
};
use proptest::prelude::*;

fn x(k: i64) -> GroupElement {
    GroupElement::Abelian(vec![k])
}

fn q(n: i128, d: i128) -> GaussianRational {
    GaussianRational::from_ratio(n, d)
}

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-5i128..=5, 1i128..=4, -5i128..=5, 1i128..=4)
        .prop_map(|(a, b, c, d)| GaussianRational::new(Rational::new(a, b), Rational::new(c, d)))
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    proptest::collection::vec((-3i64..=3, coeff()), 0..5)
        .prop_map(|terms| AlgebraElement::from_terms(terms.into_iter().map(|(k, c)| (x(k), c))))
}

fn s3_element() -> impl Strategy<Value = AlgebraElement> {
    let group = Group::symmetric(3).unwrap();
    let w = Window::enumerate(&group, &WindowSpec::ball(3)).unwrap();
    let elems: Vec<GroupElement> = w.iter().cloned().collect();
    proptest::collection::vec((0..elems.len(), coeff()), 0..4)
        .prop_map(move |terms| AlgebraElement::from_terms(terms.into_iter().map(|(i, c)| (elems[i].clone(), c))))
}

#[test]
fn convolution_examples() {
    let z = Group::integers();
    let a = AlgebraElement::from_terms([(x(1), q(1, 1)), (x(-1), q(1, 1))]);
    let p = a.mul(&AlgebraElement::basis(x(1)), &z).unwrap();
    assert_eq!(p, AlgebraElement::from_terms([(x(2), q(1, 1)), (x(0), q(1, 1))]));
    let zeroed = a.scale(GaussianRational::zero());
    assert!(zeroed.is_zero());
    assert_eq!(zeroed.support().count(), 0);

    let h = Group::heisenberg();
    let (hx, hy) = (h.generator(0).unwrap(), h.generator(1).unwrap());
    let p = AlgebraElement::basis(hx.clone()).mul(&AlgebraElement::basis(hy.clone()), &h).unwrap();
    assert_eq!(p, AlgebraElement::basis(h.mul(&hx, &hy).unwrap()));
    assert_eq!(p, AlgebraElement::basis(GroupElement::heisenberg(1, 1, 1)));
}

#[test]
fn group_mismatch_is_an_error() {
    let h = Group::heisenberg();
    let a = AlgebraElement::basis(x(1));
    assert!(a.mul(&a, &h).is_err());
}

#[test]
fn degrees_and_parities() {
    let z = Group::integers();
    let w = Window::enumerate(&z, &WindowSpec::ball(3)).unwrap();
    let gg = GradedGroup::new(z.clone(), Grading::new(&z, vec![1]).unwrap(), &w).unwrap();
    assert_eq!(gg.degree(&x(-3)), -3);
    assert_eq!(gg.parity(&x(-3)), 1);
    let trivial = GradedGroup::trivially_graded(z);
    assert!(w.iter().all(|g| trivial.degree(g) == 0 && trivial.parity(g) == 0));

    let p = integers_times(Group::symmetric(3).unwrap()).unwrap();
    let gr = Grading::from_named(&p, [("x", 1)]).unwrap();
    let g = p.mul(&p.pow(&p.generator(0).unwrap(), 2), &p.generator(1).unwrap()).unwrap();
    assert_eq!(gr.degree(&p, &g), 2);
}

#[test]
fn unvalidated_grading_is_rejected_in_strict_mode() {
    let h = Group::heisenberg();
    let gr = Grading::new(&h, vec![0, 0, 1]).unwrap();
    let gg = GradedGroup::unvalidated(h.clone(), gr.clone());
    assert!(gg.degree_strict(&h.generator(2).unwrap()).is_err());
    let w = Window::enumerate(&h, &WindowSpec::ball(1)).unwrap();
    assert!(GradedGroup::new(h, gr, &w).is_err());
}

#[test]
fn grading_validation() {
    let z = Group::integers();
    let w = Window::enumerate(&z, &WindowSpec::ball(3)).unwrap();
    assert!(validate_grading(&z, &Grading::new(&z, vec![1]).unwrap(), &w, &Budget::default()).passed());

    let h = Group::heisenberg();
    let w = Window::enumerate(&h, &WindowSpec::ball(2)).unwrap();
    let by_x = Grading::new(&h, vec![1, 0, 0]).unwrap();
    assert!(validate_grading(&h, &by_x, &w, &Budget::default()).passed());
    let by_z = Grading::new(&h, vec![0, 0, 1]).unwrap();
    let r = validate_grading(&h, &by_z, &w, &Budget::default());
    assert!(!r.passed());
    let (hx, hy) = (h.generator(0).unwrap(), h.generator(1).unwrap());
    assert_eq!(r.counterexamples[0], Counterexample::Degree { g: hx, h: hy, product: 1, sum: 0 });
    assert!(r.counterexamples.iter().any(|c| matches!(
        c,
        Counterexample::RelatorDegree { relator, degree: -1 } if relator == "z^-1*x*y*x^-1*y^-1"
    )));
}

#[test]
fn homogeneous_components_examples() {
    let z = Group::integers();
    let w = Window::enumerate(&z, &WindowSpec::ball(3)).unwrap();
    let gg = GradedGroup::new(z.clone(), Grading::new(&z, vec![1]).unwrap(), &w).unwrap();
    let one = GaussianRational::one();
    let a = AlgebraElement::from_terms([(x(1), one), (x(2), one)]);
    let parts = gg.homogeneous_components(&a);
    assert_eq!(parts, BTreeMap::from([(1, AlgebraElement::basis(x(1))), (2, AlgebraElement::basis(x(2)))]));
    assert!(gg.homogeneous_components(&AlgebraElement::zero()).is_empty());
    let b = AlgebraElement::from_terms([(x(0), one), (x(1), q(2, 1)), (x(-1), q(3, 1))]);
    let parts = gg.homogeneous_components(&b);
    assert_eq!(parts[&-1], AlgebraElement::term(x(-1), q(3, 1)));
    assert_eq!(parts[&0], AlgebraElement::basis(x(0)));
    assert_eq!(parts[&1], AlgebraElement::term(x(1), q(2, 1)));
}

proptest! {
    #[test]
    fn ring_axioms_integers(a in element(), b in element(), c in element()) {
        let z = Group::integers();
        let ab_c = a.mul(&b, &z).unwrap().mul(&c, &z).unwrap();
        let a_bc = a.mul(&b.mul(&c, &z).unwrap(), &z).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = a.mul(&(&b + &c), &z).unwrap();
        let right = &a.mul(&b, &z).unwrap() + &a.mul(&c, &z).unwrap();
        prop_assert_eq!(left, right);
        let e = AlgebraElement::basis(x(0));
        prop_assert_eq!(a.mul(&e, &z).unwrap(), a.clone());
        prop_assert_eq!(e.mul(&a, &z).unwrap(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ring_axioms_symmetric(a in s3_element(), b in s3_element(), c in s3_element()) {
        let s3 = Group::symmetric(3).unwrap();
        let ab_c = a.mul(&b, &s3).unwrap().mul(&c, &s3).unwrap();
        let a_bc = a.mul(&b.mul(&c, &s3).unwrap(), &s3).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = (&a + &b).mul(&c, &s3).unwrap();
        let right = &a.mul(&c, &s3).unwrap() + &b.mul(&c, &s3).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_of_homogeneous_parts(a in element(), b in element()) {
        let z = Group::integers();
        let w = Window::enumerate(&z, &WindowSpec::ball(1)).unwrap();
        let gg = GradedGroup::new(z.clone(), Grading::new(&z, vec![2]).unwrap(), &w).unwrap();
        for (i, ai) in gg.homogeneous_components(&a) {
            for (j, bj) in gg.homogeneous_components(&b) {
                let p = gg.mul(&ai, &bj).unwrap();
                prop_assert!(p.is_zero() || gg.homogeneous_degree(&p) == Some(i + j));
            }
        }
        let parts = gg.homogeneous_components(&a);
        let sum = parts.values().fold(AlgebraElement::zero(), |acc, p| &acc + p);
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn exact_coefficient_arithmetic(a in -50i128..50, b in 1i128..50, c in -50i128..50, d in 1i128..50) {
        let direct = q(a, b) + q(c, d);
        let cross = q(a * d + c * b, b * d);
        prop_assert_eq!(direct, cross);
        let i = GaussianRational::i();
        prop_assert_eq!((q(a, b) + i * q(c, d)) * (q(a, b) - i * q(c, d)), q(a, b) * q(a, b) + q(c, d) * q(c, d));
    }
}
