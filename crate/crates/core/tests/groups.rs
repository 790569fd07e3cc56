use std::collections::BTreeSet;

use dgalg_core::group::{integers_times, CentralityMode};
use dgalg_core::{Group, GroupElement, GroupMap, MapKind, Window, WindowSpec};
use proptest::prelude::*;

type Mat = [[i64; 3]; 3];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn mat_pow(m: &Mat, e: i64) -> Mat {
    let base = if e >= 0 { *m } else { upper_inverse(m) };
    let mut out = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..e.unsigned_abs() {
        out = mat_mul(&out, &base);
    }
    out
}

fn upper_inverse(m: &Mat) -> Mat {
    let (a, b, c) = (m[0][1], m[1][2], m[0][2]);
    [[1, -a, a * b - c], [0, 1, -b], [0, 0, 1]]
}

const X: Mat = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
const Y: Mat = [[1, 0, 0], [0, 1, 1], [0, 0, 1]];
const Z: Mat = [[1, 0, 1], [0, 1, 0], [0, 0, 1]];

/// `y^b z^c x^a` as a matrix product of generator powers.
fn to_matrix(g: &GroupElement) -> Mat {
    let GroupElement::Heisenberg { b, c, a } = *g else { panic!("not a Heisenberg element") };
    mat_mul(&mat_mul(&mat_pow(&Y, b), &mat_pow(&Z, c)), &mat_pow(&X, a))
}

fn heis() -> impl Strategy<Value = GroupElement> {
    (-6i64..=6, -6i64..=6, -6i64..=6).prop_map(|(b, c, a)| GroupElement::heisenberg(b, c, a))
}

#[test]
fn heisenberg_products_from_matrices() {
    let h = Group::heisenberg();
    let x = h.generator(0).unwrap();
    let y = h.generator(1).unwrap();
    let xy = h.mul(&x, &y).unwrap();
    assert_eq!(to_matrix(&xy), mat_mul(&X, &Y));
    assert_eq!(xy, GroupElement::heisenberg(1, 1, 1));
    let p = h.mul(&GroupElement::heisenberg(1, 0, 1), &GroupElement::heisenberg(1, 0, 0)).unwrap();
    assert_eq!(to_matrix(&p), mat_mul(&mat_mul(&Y, &X), &Y));
    assert_eq!(p, GroupElement::heisenberg(2, 1, 1));
    let g = GroupElement::heisenberg(1, 1, 1);
    assert_eq!(to_matrix(&h.inv(&g)), upper_inverse(&to_matrix(&g)));
}

#[test]
fn window_examples() {
    let z = Group::integers();
    let w = Window::enumerate(&z, &WindowSpec::ball(2)).unwrap();
    let got: Vec<_> = w.iter().cloned().collect();
    let want: Vec<_> = (-2..=2).map(|k| GroupElement::Abelian(vec![k])).collect();
    assert_eq!(got, want);

    let c3 = Group::cyclic(3).unwrap();
    assert_eq!(Window::enumerate(&c3, &WindowSpec::ball(5)).unwrap().len(), 3);
}

#[test]
fn heisenberg_ball_of_radius_two() {
    // breadth-first oracle over matrices, generators x, y, z and inverses
    let gens: Vec<Mat> = [X, Y, Z].iter().flat_map(|m| [*m, upper_inverse(m)]).collect();
    let mut seen: BTreeSet<Mat> = BTreeSet::from([mat_pow(&X, 0)]);
    let mut frontier = seen.clone();
    for _ in 0..2 {
        let mut next = BTreeSet::new();
        for m in &frontier {
            for g in &gens {
                let p = mat_mul(m, g);
                if seen.insert(p) {
                    next.insert(p);
                }
            }
        }
        frontier = next;
    }
    let h = Group::heisenberg();
    let w = Window::enumerate(&h, &WindowSpec::ball(2)).unwrap();
    let lib: BTreeSet<Mat> = w.iter().map(to_matrix).collect();
    assert_eq!(lib, seen);
    assert_eq!(w.len(), 29);
}

#[test]
fn window_cap_is_enforced() {
    let h = Group::heisenberg();
    assert!(Window::enumerate(&h, &WindowSpec::ball(6).with_cap(100)).is_err());
}

#[test]
fn centralizers() {
    let z = Group::integers();
    let w = Window::enumerate(&z, &WindowSpec::ball(3)).unwrap();
    assert_eq!(z.centralizer_in_window(&GroupElement::Abelian(vec![2]), &w).len(), w.len());

    let h = Group::heisenberg();
    let w = Window::enumerate(&h, &WindowSpec::ball(2)).unwrap();
    let x = h.generator(0).unwrap();
    let brute: Vec<_> = w.iter().filter(|t| h.mul(t, &x).unwrap() == h.mul(&x, t).unwrap()).cloned().collect();
    let cz = h.centralizer_in_window(&x, &w);
    assert_eq!(cz, brute);
    assert!(cz.iter().all(|g| matches!(g, GroupElement::Heisenberg { b: 0, .. })));

    let s3 = Group::symmetric(3).unwrap();
    let w = Window::enumerate(&s3, &WindowSpec::ball(3)).unwrap();
    let s1 = s3.generator(0).unwrap();
    let mut want = vec![s3.identity(), s1.clone()];
    want.sort();
    assert_eq!(s3.centralizer_in_window(&s1, &w), want);
}

#[test]
fn centrality() {
    let h = Group::heisenberg();
    let c = h.is_central(&h.generator(2).unwrap());
    assert!(c.central);
    assert_eq!(c.mode, CentralityMode::Exact);
    assert!(!h.is_central(&h.generator(0).unwrap()).central);
    let p = integers_times(Group::symmetric(3).unwrap()).unwrap();
    assert!(p.is_central(&p.generator(0).unwrap()).central);
}

#[test]
fn group_map_audits() {
    let z = Group::integers();
    let w = Window::enumerate(&z, &WindowSpec::ball(3)).unwrap();
    let neg =
        GroupMap::new(z.clone(), z.clone(), vec![GroupElement::Abelian(vec![-1])], MapKind::Automorphism).unwrap();
    assert!(neg.validate(&w, &w).report.passed());

    let double =
        GroupMap::new(z.clone(), z.clone(), vec![GroupElement::Abelian(vec![2])], MapKind::Endomorphism).unwrap();
    let r = double.validate(&w, &w);
    assert!(r.report.passed() && r.homomorphism && !r.generators_hit);

    let h = Group::heisenberg();
    let w = Window::enumerate(&h, &WindowSpec::ball(1)).unwrap();
    let images = vec![h.generator(0).unwrap(), h.generator(1).unwrap(), GroupElement::heisenberg(0, 2, 0)];
    let f = GroupMap::new(h.clone(), h.clone(), images, MapKind::Automorphism).unwrap();
    let r = f.validate(&w, &w);
    assert!(!r.homomorphism);
    assert!(!r.report.passed());
}

proptest! {
    #[test]
    fn heisenberg_agrees_with_matrices(g in heis(), k in heis()) {
        let h = Group::heisenberg();
        let p = h.mul(&g, &k).unwrap();
        prop_assert_eq!(to_matrix(&p), mat_mul(&to_matrix(&g), &to_matrix(&k)));
        prop_assert_eq!(to_matrix(&h.inv(&g)), upper_inverse(&to_matrix(&g)));
    }

    #[test]
    fn heisenberg_associative(a in heis(), b in heis(), c in heis()) {
        let h = Group::heisenberg();
        let l = h.mul(&h.mul(&a, &b).unwrap(), &c).unwrap();
        let r = h.mul(&a, &h.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn normal_words_round_trip(a in heis()) {
        let h = Group::heisenberg();
        let w = h.normal_word(&a);
        let back = h.eval_word(&w).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(h.normal_word(&back), w);
    }

    #[test]
    fn symmetric_group_axioms(i in 0usize..24, j in 0usize..24, k in 0usize..24) {
        let s4 = Group::symmetric(4).unwrap();
        let w = Window::enumerate(&s4, &WindowSpec::ball(6)).unwrap();
        prop_assume!(w.len() == 24);
        let (a, b, c) = (&w.elements()[i], &w.elements()[j], &w.elements()[k]);
        let l = s4.mul(&s4.mul(a, b).unwrap(), c).unwrap();
        let r = s4.mul(a, &s4.mul(b, c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert!(s4.is_identity(&s4.mul(a, &s4.inv(a)).unwrap()));
        prop_assert_eq!(s4.eval_word(&s4.normal_word(a)).unwrap(), a.clone());
    }

    #[test]
    fn product_group_axioms(e in proptest::collection::vec(-4i64..=4, 3)) {
        let p = integers_times(Group::heisenberg()).unwrap();
        let g = p.eval_word(&p.normal_word(&p.pow(&p.generator(1).unwrap(), e[0]))).unwrap();
        let k = p.mul(&p.pow(&p.generator(0).unwrap(), e[1]), &p.pow(&p.generator(2).unwrap(), e[2])).unwrap();
        let l = p.mul(&p.mul(&g, &k).unwrap(), &g).unwrap();
        let r = p.mul(&g, &p.mul(&k, &g).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }
}
