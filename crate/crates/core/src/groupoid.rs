//! The signed conjugacy-action groupoid.
//!
//! Objects are signed elements `±g`. A morphism `(u, v)` goes from
//! `(-1)^|v| v^-1 u` to `u v^-1`, and `(u2, v2) o (u1, v1) =
//! ((-1)^|v2| v2 u1, v2 v1)`. All sign bookkeeping goes through
//! [`SignedElement`].

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::algebra::GradedGroup;
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, Window};
use crate::report::{CheckReport, Counterexample};
use crate::sampling::{digits, Budget};

/// `+g` or `-g`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedElement {
    pub element: GroupElement,
    pub negative: bool,
}

impl SignedElement {
    pub fn pos(element: GroupElement) -> Self {
        Self { element, negative: false }
    }

    pub fn neg(element: GroupElement) -> Self {
        Self { element, negative: true }
    }

    pub fn negated(&self) -> Self {
        Self { element: self.element.clone(), negative: !self.negative }
    }

    /// Multiplies by `(-1)^parity`.
    pub fn signed(mut self, odd: bool) -> Self {
        self.negative ^= odd;
        self
    }

    pub fn mul(&self, other: &SignedElement, group: &Group) -> Self {
        Self { element: group.op(&self.element, &other.element), negative: self.negative ^ other.negative }
    }

    pub fn inv(&self, group: &Group) -> Self {
        Self { element: group.inv(&self.element), negative: self.negative }
    }
}

impl From<GroupElement> for SignedElement {
    fn from(g: GroupElement) -> Self {
        Self::pos(g)
    }
}

/// A morphism `(u, v)`. Canonical morphisms have a positive `v`; every
/// identity, composite and inverse of canonical morphisms is canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism {
    pub u: SignedElement,
    pub v: SignedElement,
}

impl Morphism {
    pub fn new(u: SignedElement, v: GroupElement) -> Self {
        Self { u, v: SignedElement::pos(v) }
    }

    /// A morphism with possibly negative `v`, kept verbatim.
    pub fn with_signed_v(u: SignedElement, v: SignedElement) -> Self {
        Self { u, v }
    }

    pub fn is_canonical(&self) -> bool {
        !self.v.negative
    }

    /// `(-1)^|v| v^-1 u`.
    pub fn source(&self, gg: &GradedGroup) -> SignedElement {
        let g = gg.group();
        self.v.inv(g).mul(&self.u, g).signed(gg.is_odd(&self.v.element))
    }

    /// `u v^-1`.
    pub fn target(&self, gg: &GradedGroup) -> SignedElement {
        let g = gg.group();
        self.u.mul(&self.v.inv(g), g)
    }

    pub fn is_loop(&self, gg: &GradedGroup) -> bool {
        self.source(gg) == self.target(gg)
    }

    /// `1_a = (a, e)`.
    pub fn identity(a: SignedElement, group: &Group) -> Self {
        Self::new(a, group.identity())
    }

    /// `((-1)^|v| v^-1 u v^-1, v^-1)`.
    pub fn inverse(&self, gg: &GradedGroup) -> Self {
        let g = gg.group();
        let vi = self.v.inv(g);
        let u = vi.mul(&self.u, g).mul(&vi, g).signed(gg.is_odd(&self.v.element));
        Self { u, v: vi }
    }
}

/// `second o first`, defined when `target(first) = source(second)`.
pub fn compose(gg: &GradedGroup, second: &Morphism, first: &Morphism) -> Result<Morphism> {
    if first.target(gg) != second.source(gg) {
        return Err(Error::NonComposable);
    }
    Ok(compose_unchecked(gg, second, first))
}

fn compose_unchecked(gg: &GradedGroup, second: &Morphism, first: &Morphism) -> Morphism {
    let g = gg.group();
    let u = second.v.mul(&first.u, g).signed(gg.is_odd(&second.v.element));
    Morphism { u, v: second.v.mul(&first.v, g) }
}

/// The morphism out of `a` with connecting element `v`:
/// `u = (-1)^|v| v a`, target `(-1)^|v| v a v^-1`.
pub fn morphism_from(gg: &GradedGroup, a: &SignedElement, v: &GroupElement) -> Morphism {
    let u = SignedElement::pos(v.clone()).mul(a, gg.group()).signed(gg.is_odd(v));
    Morphism::new(u, v.clone())
}

/// Objects `±g` for `g` in the window.
pub fn objects(window: &Window) -> Vec<SignedElement> {
    window.iter().flat_map(|g| [SignedElement::pos(g.clone()), SignedElement::neg(g.clone())]).collect()
}

/// Morphisms `(u, v)` with `u` in `±window` and `v` in the window.
pub fn window_morphisms(window: &Window) -> Vec<Morphism> {
    let objs = objects(window);
    let mut out = Vec::with_capacity(objs.len() * window.len());
    for u in &objs {
        for v in window {
            out.push(Morphism::new(u.clone(), v.clone()));
        }
    }
    out
}

/// Loops at `a` whose connecting element lies in the window: `(a v, v)` with
/// `v` commuting with `a` and of even parity.
pub fn loops_at(gg: &GradedGroup, a: &SignedElement, window: &Window) -> Vec<Morphism> {
    hom_set(gg, a, a, window)
}

/// `Hom(a, b)` restricted to connecting elements in the window.
pub fn hom_set(gg: &GradedGroup, a: &SignedElement, b: &SignedElement, window: &Window) -> Vec<Morphism> {
    window.iter().map(|v| morphism_from(gg, a, v)).filter(|m| m.target(gg) == *b).collect()
}

/// Objects reachable from `a` by a morphism with connecting element in the
/// window, sorted.
pub fn component_of(gg: &GradedGroup, a: &SignedElement, window: &Window) -> Vec<SignedElement> {
    let set: BTreeSet<SignedElement> = window.iter().map(|v| morphism_from(gg, a, v).target(gg)).collect();
    set.into_iter().collect()
}

/// Identity, inverse, endpoint-coherence and associativity laws on all
/// window morphisms and the composable chains built from them.
pub fn check_groupoid_axioms(gg: &GradedGroup, window: &Window, budget: &Budget) -> CheckReport {
    let mut report = CheckReport::new("groupoid-axioms");
    let group = gg.group();
    let morphisms = window_morphisms(window);
    let n = window.len();

    for m in &morphisms {
        report.population += 4;
        report.examined += 4;
        let s = m.source(gg);
        let t = m.target(gg);
        let one_s = Morphism::identity(s.clone(), group);
        let one_t = Morphism::identity(t.clone(), group);
        if one_s.source(gg) != s || one_s.target(gg) != s {
            report.fail(Counterexample::Groupoid { law: "identity endpoints", morphisms: alloc::vec![one_s.clone()] });
        }
        if compose(gg, &one_t, m).as_ref() != Ok(m) || compose(gg, m, &one_s).as_ref() != Ok(m) {
            report.fail(Counterexample::Groupoid { law: "identity", morphisms: alloc::vec![m.clone()] });
        }
        let inv = m.inverse(gg);
        if compose(gg, &inv, m) != Ok(one_s) {
            report
                .fail(Counterexample::Groupoid { law: "left inverse", morphisms: alloc::vec![m.clone(), inv.clone()] });
        }
        if compose(gg, m, &inv) != Ok(one_t) {
            report.fail(Counterexample::Groupoid { law: "right inverse", morphisms: alloc::vec![m.clone(), inv] });
        }
    }

    let pairs = morphisms.len() * n;
    report.population += pairs;
    let selection = budget.select(pairs);
    report.examined += selection.len();
    for idx in selection.iter() {
        let [i, j] = digits(idx, [morphisms.len(), n]);
        let first = &morphisms[i];
        let second = morphism_from(gg, &first.target(gg), &window.elements()[j]);
        match compose(gg, &second, first) {
            Ok(c) if c.source(gg) == first.source(gg) && c.target(gg) == second.target(gg) => {}
            _ => report.fail(Counterexample::Groupoid {
                law: "endpoint coherence",
                morphisms: alloc::vec![first.clone(), second],
            }),
        }
    }

    let triples = morphisms.len() * n * n;
    report.population += triples;
    let selection = budget.select(triples);
    report.examined += selection.len();
    for idx in selection.iter() {
        let [i, j, k] = digits(idx, [morphisms.len(), n, n]);
        let m1 = &morphisms[i];
        let m2 = morphism_from(gg, &m1.target(gg), &window.elements()[j]);
        let m3 = morphism_from(gg, &m2.target(gg), &window.elements()[k]);
        let left = compose_unchecked(gg, &m3, &compose_unchecked(gg, &m2, m1));
        let right = compose_unchecked(gg, &compose_unchecked(gg, &m3, &m2), m1);
        if left != right {
            report.fail(Counterexample::Groupoid { law: "associativity", morphisms: alloc::vec![m1.clone(), m2, m3] });
        }
    }
    report
}

/// The left action of `Hom(a, a)` on `Hom(a, b)` is free, and any two
/// elements of `Hom(a, b)` differ by exactly one loop.
pub fn check_free_transitive(gg: &GradedGroup, window: &Window) -> CheckReport {
    let mut report = CheckReport::new("loop-action");
    for a in objects(window) {
        let loops = loops_at(gg, &a, window);
        for b in component_of(gg, &a, window) {
            let homs = hom_set(gg, &a, &b, window);
            for psi in &homs {
                report.population += 1;
                report.examined += 1;
                let images: BTreeSet<Morphism> = loops.iter().map(|phi| compose_unchecked(gg, psi, phi)).collect();
                if images.len() != loops.len() {
                    report.fail(Counterexample::Groupoid { law: "free action", morphisms: alloc::vec![psi.clone()] });
                }
                for psi2 in &homs {
                    report.population += 1;
                    report.examined += 1;
                    let phi = compose_unchecked(gg, &psi.inverse(gg), psi2);
                    let hits = loops.iter().filter(|l| compose_unchecked(gg, psi, l) == *psi2).count();
                    let expected = usize::from(window.contains(&phi.v.element));
                    if !phi.is_loop(gg)
                        || phi.source(gg) != a
                        || compose_unchecked(gg, psi, &phi) != *psi2
                        || hits != expected
                    {
                        report.fail(Counterexample::Groupoid {
                            law: "transitive action",
                            morphisms: alloc::vec![psi.clone(), psi2.clone()],
                        });
                    }
                }
            }
        }
    }
    report
}

/// Component membership is reflexive and symmetric on window objects, and
/// transitive whenever the composed conjugator lies in the window.
pub fn check_components(gg: &GradedGroup, window: &Window) -> CheckReport {
    let mut report = CheckReport::new("components");
    let group = gg.group();
    for a in objects(window) {
        report.population += 1;
        report.examined += 1;
        if !component_of(gg, &a, window).contains(&a) {
            report.fail(Counterexample::Groupoid {
                law: "reflexive",
                morphisms: alloc::vec![Morphism::identity(a.clone(), group)],
            });
        }
        for v in window {
            let m = morphism_from(gg, &a, v);
            let b = m.target(gg);
            report.population += 1;
            report.examined += 1;
            if !component_of(gg, &b, window).contains(&a) {
                report.fail(Counterexample::Groupoid { law: "symmetric", morphisms: alloc::vec![m.clone()] });
            }
            for w in window {
                let m2 = morphism_from(gg, &b, w);
                let vw = group.op(w, v);
                if window.contains(&vw) {
                    report.population += 1;
                    report.examined += 1;
                    if !component_of(gg, &a, window).contains(&m2.target(gg)) {
                        report.fail(Counterexample::Groupoid {
                            law: "transitive",
                            morphisms: alloc::vec![m.clone(), m2],
                        });
                    }
                }
            }
        }
    }
    report
}

/// The two composites `(bz, za) o (a^-1 bz, z)` and `(bz a^-1, z) o (bz, az)`
/// that appear in the ideal argument for quasi-inner derivations. Fails with
/// [`Error::NonComposable`] when a pair does not compose, which happens when
/// `z` or `a` has odd parity.
pub fn ideal_square(
    gg: &GradedGroup,
    a: &GroupElement,
    b: &GroupElement,
    z: &GroupElement,
) -> Result<(Morphism, Morphism)> {
    let g = gg.group();
    let bz = g.op(b, z);
    let ai = g.inv(a);
    let p = |e: GroupElement| SignedElement::pos(e);
    let left = compose(gg, &Morphism::new(p(bz.clone()), g.op(z, a)), &Morphism::new(p(g.op(&ai, &bz)), z.clone()))?;
    let right = compose(gg, &Morphism::new(p(g.op(&bz, &ai)), z.clone()), &Morphism::new(p(bz), g.op(a, z)))?;
    Ok((left, right))
}
