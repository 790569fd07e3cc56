//! Locally finite characters on the conjugacy-action groupoid.
//!
//! A character is evaluated lazily on canonical morphisms `(u, v)` (positive
//! `v`). Its column at `g` is the finite sum `sum_h chi(h, g) h` over positive
//! `h`, and negative `u` follow the sign rule `chi(-u, v) = -chi(u, v)`. The
//! column of a character is the image `d(g)` of the derivation it describes.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, GradedGroup};
use crate::coeff::GaussianRational;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupMap, Window};
use crate::groupoid::{loops_at, morphism_from, objects, window_morphisms, Morphism, SignedElement};
use crate::report::{CheckReport, Counterexample};
use crate::sampling::{digits, Budget};

/// Anything that assigns a value to canonical morphisms.
pub trait Evaluate {
    fn evaluate(&self, gg: &GradedGroup, m: &Morphism) -> Result<GaussianRational>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Character {
    /// `chi(h, g)` is the coefficient of `h` in `d(g)`.
    Derivation(Box<Derivation>),
    /// Closed form built from the indicator `[t = a] - [s = a]` of morphisms
    /// ending or starting at `a`; describes the inner derivation `d_a`.
    Inner(GroupElement),
    /// `sum lambda_a chi^a` over finitely many `a`.
    FormalSum(Vec<(GaussianRational, GroupElement)>),
    /// `{chi1, chi2}(a, g) = sum_h chi1(a,h) chi2(h,g) - chi2(a,h) chi1(h,g)`.
    Bracket(Box<Character>, Box<Character>),
    /// `chi'(h, g) = chi(f(h), f(g))`; `inverse` is `f^-1`.
    Transported { base: Box<Character>, map: GroupMap, inverse: GroupMap },
}

/// The raw indicator `[t(m) = a] - [s(m) = a]` for `a` positive. It is zero
/// on loops and additive, but does not obey the sign rule on its own.
pub fn inner_indicator(gg: &GradedGroup, a: &GroupElement, m: &Morphism) -> i8 {
    let a = SignedElement::pos(a.clone());
    i8::from(m.target(gg) == a) - i8::from(m.source(gg) == a)
}

/// Adds `c * u` to `out` for a signed element `u`.
fn add_signed(out: &mut AlgebraElement, u: &SignedElement, c: GaussianRational) {
    let c = if u.negative { -c } else { c };
    out.add_term(u.element.clone(), c);
}

impl Character {
    pub fn of_derivation(d: Derivation) -> Self {
        Character::Derivation(Box::new(d))
    }

    pub fn bracket(a: Character, b: Character) -> Self {
        Character::Bracket(Box::new(a), Box::new(b))
    }

    /// `sum_h chi(h, g) h` over positive `h`.
    pub fn column(&self, gg: &GradedGroup, g: &GroupElement) -> Result<AlgebraElement> {
        gg.group().check(g)?;
        match self {
            Character::Derivation(d) => d.apply_basis(gg, g),
            Character::Inner(a) => Ok(inner_column(gg, a, g)),
            Character::FormalSum(terms) => {
                let mut out = AlgebraElement::zero();
                for (c, a) in terms {
                    out.add_scaled(&inner_column(gg, a, g), *c);
                }
                Ok(out)
            }
            Character::Bracket(c1, c2) => {
                let mut out = AlgebraElement::zero();
                for (h, k) in c2.column(gg, g)?.iter() {
                    out.add_scaled(&c1.column(gg, h)?, *k);
                }
                for (h, k) in c1.column(gg, g)?.iter() {
                    out.add_scaled(&c2.column(gg, h)?, -*k);
                }
                Ok(out)
            }
            Character::Transported { base, map, inverse } => {
                Ok(base.column(gg, &map.apply(g))?.map_basis(|k| inverse.apply(k)))
            }
        }
    }

    /// Value on a canonical morphism.
    pub fn evaluate(&self, gg: &GradedGroup, m: &Morphism) -> Result<GaussianRational> {
        if !m.is_canonical() {
            return Err(Error::UnsupportedMorphism);
        }
        let (h, g) = (&m.u.element, &m.v.element);
        let value = match self {
            Character::Inner(a) => {
                // odd part of the indicator: chi(u, g) = I(u, g) - I(-u, g)
                let flipped = Morphism::new(m.u.negated(), g.clone());
                let v = inner_indicator(gg, a, m) - inner_indicator(gg, a, &flipped);
                return Ok(GaussianRational::from(v as i64));
            }
            Character::Bracket(c1, c2) => {
                let mut acc = GaussianRational::zero();
                for (k, c) in c2.column(gg, g)?.iter() {
                    acc = acc + c1.evaluate(gg, &Morphism::new(SignedElement::pos(h.clone()), k.clone()))? * *c;
                }
                for (k, c) in c1.column(gg, g)?.iter() {
                    acc = acc - c2.evaluate(gg, &Morphism::new(SignedElement::pos(h.clone()), k.clone()))? * *c;
                }
                acc
            }
            Character::Transported { base, map, .. } => {
                let u = SignedElement { element: map.apply(h), negative: m.u.negative };
                return base.evaluate(gg, &Morphism::new(u, map.apply(g)));
            }
            _ => self.column(gg, g)?.coeff(h),
        };
        Ok(if m.u.negative { -value } else { value })
    }
}

impl Evaluate for Character {
    fn evaluate(&self, gg: &GradedGroup, m: &Morphism) -> Result<GaussianRational> {
        Character::evaluate(self, gg, m)
    }
}

/// Column of `chi^a` at `g`: the indicator is nonzero only on the morphisms
/// `(a g, g)` (target `a`) and `((-1)^|g| g a, g)` (source `a`).
fn inner_column(gg: &GradedGroup, a: &GroupElement, g: &GroupElement) -> AlgebraElement {
    let group = gg.group();
    let ends_at_a = SignedElement::pos(group.op(a, g));
    let starts_at_a = SignedElement::pos(group.op(g, a)).signed(gg.is_odd(g));
    let mut out = AlgebraElement::zero();
    let mut candidates = alloc::vec![ends_at_a];
    if !candidates.contains(&starts_at_a) {
        candidates.push(starts_at_a);
    }
    for u in candidates {
        let value = inner_indicator(gg, a, &Morphism::new(u.clone(), g.clone()));
        add_signed(&mut out, &u, GaussianRational::from(value as i64));
    }
    out
}

pub fn character_of_derivation(d: &Derivation) -> Character {
    Character::of_derivation(d.clone())
}

/// The derivation `d(g) = (-1)^|g| g sum_t chi((-1)^|g| g t, g) t`.
pub fn derivation_of_character(chi: &Character) -> Derivation {
    Derivation::CharacterBacked(Box::new(chi.clone()))
}

pub fn bracket(chi1: &Character, chi2: &Character) -> Character {
    Character::bracket(chi1.clone(), chi2.clone())
}

/// `chi(psi o phi) = chi(psi) + chi(phi)` for every `phi` in `±window x window`
/// and every `psi` out of `t(phi)` whose connecting element is in the window.
pub fn check_additivity(chi: &dyn Evaluate, gg: &GradedGroup, window: &Window, budget: &Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("additivity");
    let morphisms = window_morphisms(window);
    let n = window.len();
    let pairs = morphisms.len() * n;
    let selection = budget.select(pairs);
    report.population = pairs;
    report.examined = selection.len();
    for idx in selection.iter() {
        let [i, j] = digits(idx, [morphisms.len(), n]);
        let first = &morphisms[i];
        let second = morphism_from(gg, &first.target(gg), &window.elements()[j]);
        let composite = crate::groupoid::compose(gg, &second, first)?;
        let lhs = chi.evaluate(gg, &composite)?;
        let rhs = chi.evaluate(gg, &second)? + chi.evaluate(gg, first)?;
        if lhs != rhs {
            report.fail(Counterexample::Additivity { first: first.clone(), second, composite, lhs, rhs });
        }
    }
    Ok(report)
}

/// Evaluates `chi` on every loop at every window object with connecting
/// element in the window and lists the nonzero ones.
pub fn is_trivial_on_loops(chi: &dyn Evaluate, gg: &GradedGroup, window: &Window) -> Result<CheckReport> {
    let mut report = CheckReport::new("loops");
    for a in objects(window) {
        for m in loops_at(gg, &a, window) {
            report.population += 1;
            report.examined += 1;
            let value = chi.evaluate(gg, &m)?;
            if !value.is_zero() {
                report.fail(Counterexample::Loop { morphism: m, value });
            }
        }
    }
    Ok(report)
}
