use dgalg_core::character::{character_of_derivation, derivation_of_character};
use dgalg_core::dg::{
    central_dg_criterion, check_dg, check_iso, search_failing_tau, transport_character, AlgebraAutomorphism,
};
use dgalg_core::group::integers_times;
use dgalg_core::groupoid::window_morphisms;
use dgalg_core::{
    Budget, Derivation, Error, GaussianRational, GradedGroup, GradedGroupCharacter, Grading, Group, GroupElement,
    GroupMap, MapKind, Mode, Window, WindowSpec,
};
use proptest::prelude::*;

fn x(k: i64) -> GroupElement {
    GroupElement::Abelian(vec![k])
}

fn int(n: i64) -> GaussianRational {
    GaussianRational::from(n)
}

fn graded(group: Group, degrees: Vec<i64>, len: u32) -> (GradedGroup, Window) {
    let w = Window::enumerate(&group, &WindowSpec::ball(len)).unwrap();
    let gr = Grading::new(&group, degrees).unwrap();
    (GradedGroup::new(group, gr, &w).unwrap(), w)
}

fn parity(c: i64) -> GradedGroupCharacter {
    GradedGroupCharacter::Parity(int(c))
}

#[test]
fn dg_examples_on_integers() {
    let (gg, w) = graded(Group::integers(), vec![1], 4);
    let central = Derivation::Central { z: x(1), tau: parity(1) };
    assert!(check_dg(&central, &gg, Mode::Cochain, &w).unwrap().passed());
    assert!(check_dg(&Derivation::Inner(x(1)), &gg, Mode::Cochain, &w).unwrap().passed());
    let shift = Derivation::Translation { z: x(1), coefficient: int(1) };
    let r = check_dg(&shift, &gg, Mode::Cochain, &w).unwrap();
    assert!(!r.square_zero.passed());
    assert_eq!(r.square_zero.violations, w.len());
}

#[test]
fn chain_mode_uses_degree_minus_one() {
    let (gg, w) = graded(Group::integers(), vec![1], 3);
    let down = Derivation::Central { z: x(-1), tau: parity(1) };
    assert!(check_dg(&down, &gg, Mode::Chain, &w).unwrap().passed());
    assert!(!check_dg(&down, &gg, Mode::Cochain, &w).unwrap().passed());
    let r = central_dg_criterion(&x(-1), &parity(1), &gg, Mode::Chain, &w, &Budget::default()).unwrap();
    assert!(r.criterion.passed() && r.agrees);
}

#[test]
fn degree_shift_matches_homogeneous_components() {
    let (gg, w) = graded(integers_times(Group::symmetric(3).unwrap()).unwrap(), vec![1, 0, 0], 2);
    let z = gg.group().generator(0).unwrap();
    let s = gg.group().generator(1).unwrap();
    for d in [
        Derivation::Central { z: z.clone(), tau: parity(1) },
        Derivation::Inner(z.clone()),
        Derivation::Inner(s),
        Derivation::Translation { z: gg.group().pow(&z, 2), coefficient: int(1) },
    ] {
        let report = check_dg(&d, &gg, Mode::Cochain, &w).unwrap();
        let maps_up = w.iter().all(|g| {
            let image = d.apply_basis(&gg, g).unwrap();
            image.is_zero() || gg.homogeneous_degree(&image) == Some(gg.degree(g) + 1)
        });
        assert_eq!(report.degree_shift.passed(), maps_up);
        let squares = w.iter().all(|g| d.apply(&gg, &d.apply_basis(&gg, g).unwrap()).unwrap().is_zero());
        assert_eq!(report.square_zero.passed(), squares);
    }
}

#[test]
fn criterion_agrees_with_dg_check() {
    let budget = Budget::default();
    let (gg, w) = graded(Group::integers(), vec![1], 4);
    let r = central_dg_criterion(&x(1), &parity(1), &gg, Mode::Cochain, &w, &budget).unwrap();
    assert!(r.criterion.passed() && r.dg.passed() && r.agrees);

    let (gg, w) = graded(integers_times(Group::symmetric(3).unwrap()).unwrap(), vec![1, 0, 0], 3);
    let z = gg.group().generator(0).unwrap();
    let r = central_dg_criterion(&z, &parity(2), &gg, Mode::Cochain, &w, &budget).unwrap();
    assert!(r.criterion.passed() && r.agrees);

    let group = Group::free_abelian(2).unwrap();
    let e = |a: i64, b: i64| GroupElement::Abelian(vec![a, b]);
    let w = Window::from_elements(&group, [e(1, 1), e(2, 1)]).unwrap();
    assert_eq!(w.len(), 5);
    let gg = GradedGroup::new(group.clone(), Grading::new(&group, vec![1, 0]).unwrap(), &w).unwrap();
    let values = [int(-1), int(0), int(1)];
    let tau = search_failing_tau(&e(1, 0), &gg, &w, &values, &budget).unwrap().expect("a failing table");
    let r = central_dg_criterion(&e(1, 0), &tau, &gg, Mode::Cochain, &w, &budget).unwrap();
    assert!(!r.criterion.passed() && !r.dg.passed() && r.agrees);
}

#[test]
fn integers_have_no_failing_window_table() {
    // on Z every admissible table on a five-element window vanishes on x^2
    let (gg, w) = graded(Group::integers(), vec![1], 2);
    let values = [int(-1), int(0), int(1)];
    assert_eq!(search_failing_tau(&x(1), &gg, &w, &values, &Budget::default()).unwrap(), None);
}

#[test]
fn criterion_preconditions() {
    let budget = Budget::default();
    let (gg, w) = graded(Group::heisenberg(), vec![1, 0, 0], 1);
    let hx = gg.group().generator(0).unwrap();
    let r = central_dg_criterion(&hx, &parity(1), &gg, Mode::Cochain, &w, &budget);
    assert!(matches!(r, Err(Error::Precondition(_))));
    let (gg, w) = graded(Group::integers(), vec![1], 2);
    let bad_tau = GradedGroupCharacter::Additive(vec![int(1)]);
    assert!(matches!(
        central_dg_criterion(&x(1), &bad_tau, &gg, Mode::Cochain, &w, &budget),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn iso_controls() {
    let budget = Budget::default();
    let (gg, w) = graded(Group::integers(), vec![1], 3);
    let d = Derivation::Central { z: x(1), tau: parity(1) };
    let id = AlgebraAutomorphism::identity(&gg);
    assert!(check_iso(&d, &d, &id, &gg, &w, &w, &budget).unwrap().passed());
    let r = check_iso(&d, &Derivation::Zero, &id, &gg, &w, &w, &budget).unwrap();
    assert!(!r.passed() && r.agrees);
    // an endomorphism is refused
    let double = GroupMap::new(gg.group().clone(), gg.group().clone(), vec![x(2)], MapKind::Endomorphism).unwrap();
    let r = check_iso(&d, &d, &AlgebraAutomorphism::Transport(double), &gg, &w, &w, &budget);
    assert!(matches!(r, Err(Error::InvalidMap(_))));
}

#[test]
fn transport_examples() {
    let budget = Budget::default();
    let (gg, w) = graded(integers_times(Group::symmetric(3).unwrap()).unwrap(), vec![1, 0, 0], 2);
    let group = gg.group().clone();
    let z = group.generator(0).unwrap();
    let d = Derivation::Central { z, tau: parity(1) };
    let chi = character_of_derivation(&d);

    let id = GroupMap::identity(&group);
    let same = transport_character(&chi, &id, &gg, &w).unwrap();
    for m in window_morphisms(&w) {
        assert_eq!(same.evaluate(&gg, &m).unwrap(), chi.evaluate(&gg, &m).unwrap());
    }

    let f = GroupMap::inner(&group, &group.generator(1).unwrap()).unwrap();
    let search = Window::enumerate(&group, &WindowSpec::ball(3)).unwrap();
    let moved = transport_character(&chi, &f, &gg, &search).unwrap();
    for m in window_morphisms(&w) {
        assert_eq!(moved.evaluate(&gg, &m).unwrap(), chi.evaluate(&gg, &m).unwrap());
    }
    let dt = derivation_of_character(&moved);
    let fa = AlgebraAutomorphism::Transport(f);
    assert!(check_iso(&dt, &d, &fa, &gg, &w, &search, &budget).unwrap().passed());
}

#[test]
fn shear_transport_and_its_corruption() {
    let budget = Budget::default();
    let (gg, w) = graded(Group::free_abelian(2).unwrap(), vec![1, 0], 2);
    let group = gg.group().clone();
    let e = |a: i64, b: i64| GroupElement::Abelian(vec![a, b]);
    let shear = GroupMap::new(group.clone(), group.clone(), vec![e(1, 1), e(0, 1)], MapKind::Automorphism).unwrap();
    let search = Window::enumerate(&group, &WindowSpec::ball(3)).unwrap();
    let d = Derivation::Central { z: e(1, 0), tau: parity(1) };
    let chi = character_of_derivation(&d);
    let moved = transport_character(&chi, &shear, &gg, &search).unwrap();
    let dt = derivation_of_character(&moved);
    let f = AlgebraAutomorphism::Transport(shear.clone());
    let r = check_iso(&dt, &d, &f, &gg, &w, &search, &budget).unwrap();
    assert!(r.passed() && r.agrees);

    // transporting along the inverse composes on the wrong side
    let wrong = transport_character(&chi, &shear.inverse(&search).unwrap(), &gg, &search).unwrap();
    let r = check_iso(&derivation_of_character(&wrong), &d, &f, &gg, &w, &search, &budget).unwrap();
    assert!(!r.passed() && r.agrees);

    // a degree-changing map cannot transport
    let tilt = GroupMap::new(group.clone(), group.clone(), vec![e(1, 0), e(1, 1)], MapKind::Automorphism).unwrap();
    assert!(matches!(transport_character(&chi, &tilt, &gg, &search), Err(Error::InvalidMap(_))));
}

fn nonzero() -> impl Strategy<Value = GaussianRational> {
    (-4i128..=4, 1i128..=4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| GaussianRational::from_ratio(n, d))
}

proptest! {
    #[test]
    fn scaling_law(lambda in nonzero(), c in -3i64..=3) {
        let budget = Budget::default();
        let (gg, w) = graded(Group::integers(), vec![1], 3);
        for d in [Derivation::Central { z: x(1), tau: parity(c) }, Derivation::Inner(x(1)).scaled(int(c))] {
            prop_assert!(check_dg(&d, &gg, Mode::Cochain, &w).unwrap().passed());
            let f = AlgebraAutomorphism::Scaling(lambda);
            let r = check_iso(&d, &d.clone().scaled(lambda), &f, &gg, &w, &w, &budget).unwrap();
            prop_assert!(r.passed() && r.agrees);
        }
    }

    #[test]
    fn iso_symmetry(lambda in nonzero(), mu in nonzero()) {
        let budget = Budget::default();
        let (gg, w) = graded(Group::integers(), vec![1], 3);
        let d1 = Derivation::Central { z: x(1), tau: parity(1) };
        let d2 = d1.clone().scaled(mu);
        let f = AlgebraAutomorphism::Scaling(lambda);
        let finv = f.inverse(&w).unwrap();
        let forward = check_iso(&d1, &d2, &f, &gg, &w, &w, &budget).unwrap().passed();
        let backward = check_iso(&d2, &d1, &finv, &gg, &w, &w, &budget).unwrap().passed();
        prop_assert_eq!(forward, backward);
        prop_assert_eq!(forward, lambda == mu);
    }
}
