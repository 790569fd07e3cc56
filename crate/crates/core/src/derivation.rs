//! Graded derivations of `C[G]`.
//!
//! A derivation is stored by its rule on basis elements and extended
//! linearly. The graded Leibniz rule `d(uv) = d(u)v + (-1)^|u| u d(v)` is
//! checked on windows rather than assumed.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, GradedGroup};
use crate::character::{character_of_derivation, is_trivial_on_loops, Character};
use crate::coeff::GaussianRational;
use crate::error::{Error, Result};
use crate::group::{GroupElement, Letter, Window};
use crate::groupoid::{ideal_square, Morphism, SignedElement};
use crate::report::{CheckReport, Counterexample};
use crate::sampling::{digits, Budget};
use crate::tau::{validate_tau, GradedGroupCharacter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Zero,
    /// `d_a(x) = ax - (-1)^|x| xa`.
    Inner(GroupElement),
    /// `d(g) = tau(g) gz`. Build through [`Derivation::central`] to have `z`
    /// and `tau` validated.
    Central {
        z: GroupElement,
        tau: GradedGroupCharacter,
    },
    /// Values on generators (by index, missing ones are zero), extended along
    /// normal words by the graded Leibniz rule.
    Table(BTreeMap<usize, AlgebraElement>),
    /// The linear operator `g -> c gz`. Not a derivation in general; used as a
    /// control.
    Translation {
        z: GroupElement,
        coefficient: GaussianRational,
    },
    LinComb(Vec<(GaussianRational, Derivation)>),
    /// `d1 d2 - d2 d1`.
    Commutator(Box<Derivation>, Box<Derivation>),
    /// `d(g) = (-1)^|g| g sum_t chi((-1)^|g| g t, g) t`.
    CharacterBacked(Box<Character>),
}

impl Derivation {
    /// A central derivation whose `z` is in the center and whose `tau` passes
    /// [`validate_tau`] on the window.
    pub fn central(
        gg: &GradedGroup,
        z: GroupElement,
        tau: GradedGroupCharacter,
        window: &Window,
        budget: &Budget,
    ) -> Result<Self> {
        gg.require_validated()?;
        gg.group().check(&z)?;
        if !gg.group().is_central(&z).central {
            return Err(Error::Precondition(alloc::format!("z = {} is not central", gg.group().format_element(&z))));
        }
        let report = validate_tau(&tau, gg, window, budget);
        if !report.passed() {
            return Err(Error::Precondition("tau is not a graded group character on the window".into()));
        }
        Ok(Derivation::Central { z, tau })
    }

    pub fn scaled(self, c: GaussianRational) -> Self {
        Derivation::LinComb(alloc::vec![(c, self)])
    }

    /// `d(g)` for a basis element.
    pub fn apply_basis(&self, gg: &GradedGroup, g: &GroupElement) -> Result<AlgebraElement> {
        let group = gg.group();
        group.check(g)?;
        Ok(match self {
            Derivation::Zero => AlgebraElement::zero(),
            Derivation::Inner(a) => {
                group.check(a)?;
                let mut out = AlgebraElement::basis(group.op(a, g));
                out.add_term(group.op(g, a), -gg.sign(g));
                out
            }
            Derivation::Central { z, tau } => AlgebraElement::term(group.op(g, z), tau.eval(gg, g)),
            Derivation::Table(values) => extend_along_word(gg, values, &group.normal_word(g)),
            Derivation::Translation { z, coefficient } => AlgebraElement::term(group.op(g, z), *coefficient),
            Derivation::LinComb(terms) => {
                let mut out = AlgebraElement::zero();
                for (c, d) in terms {
                    out.add_scaled(&d.apply_basis(gg, g)?, *c);
                }
                out
            }
            Derivation::Commutator(d1, d2) => {
                let forward = d1.apply(gg, &d2.apply_basis(gg, g)?)?;
                let backward = d2.apply(gg, &d1.apply_basis(gg, g)?)?;
                &forward - &backward
            }
            Derivation::CharacterBacked(chi) => {
                let odd = gg.is_odd(g);
                let ginv = group.inv(g);
                let mut sum = AlgebraElement::zero();
                for h in chi.column(gg, g)?.support() {
                    let t = group.op(&ginv, h);
                    let u = SignedElement::pos(group.op(g, &t)).signed(odd);
                    sum.add_term(t, chi.evaluate(gg, &Morphism::new(u, g.clone()))?);
                }
                sum.mul_basis_left(g, group).scale(gg.sign(g))
            }
        })
    }

    /// Linear extension of [`Derivation::apply_basis`].
    pub fn apply(&self, gg: &GradedGroup, a: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (g, c) in a.iter() {
            out.add_scaled(&self.apply_basis(gg, g)?, *c);
        }
        Ok(out)
    }
}

/// `d(w)` for a word, one letter at a time:
/// `d(p l) = d(p) l + (-1)^|p| p d(l)`, with
/// `d(x^-1) = -(-1)^|x| x^-1 d(x) x^-1`.
fn extend_along_word(gg: &GradedGroup, values: &BTreeMap<usize, AlgebraElement>, word: &[Letter]) -> AlgebraElement {
    let group = gg.group();
    let mut prefix = group.identity();
    let mut acc = AlgebraElement::zero();
    let zero = AlgebraElement::zero();
    for letter in word {
        let x = group.generator(letter.generator).expect("normal word letters are generators");
        let xi = group.inv(&x);
        let dx = values.get(&letter.generator).unwrap_or(&zero);
        let (step, d_step) = if letter.exp > 0 {
            (x.clone(), dx.clone())
        } else {
            (xi.clone(), dx.mul_basis_left(&xi, group).mul_basis_right(&xi, group).scale(-gg.sign(&x)))
        };
        for _ in 0..letter.exp.unsigned_abs() {
            acc = acc.mul_basis_right(&step, group);
            acc.add_scaled(&d_step.mul_basis_left(&prefix, group), gg.sign(&prefix));
            prefix = group.op(&prefix, &step);
        }
    }
    acc
}

pub fn commutator(d1: &Derivation, d2: &Derivation) -> Derivation {
    Derivation::Commutator(Box::new(d1.clone()), Box::new(d2.clone()))
}

/// Checks `d(uv) = d(u)v + (-1)^|u| u d(v)` on window pairs.
pub fn check_graded_leibniz(d: &Derivation, gg: &GradedGroup, window: &Window, budget: &Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("leibniz");
    let group = gg.group();
    let n = window.len();
    let selection = budget.select(n * n);
    report.population = n * n;
    report.examined = selection.len();
    let images: Vec<AlgebraElement> = window.iter().map(|g| d.apply_basis(gg, g)).collect::<Result<_>>()?;
    for idx in selection.iter() {
        let [i, j] = digits(idx, [n, n]);
        let (u, v) = (&window.elements()[i], &window.elements()[j]);
        let lhs = d.apply_basis(gg, &group.op(u, v))?;
        let mut rhs = images[i].mul_basis_right(v, group);
        rhs.add_scaled(&images[j].mul_basis_left(u, group), gg.sign(u));
        if lhs != rhs {
            report.fail(Counterexample::Leibniz { u: u.clone(), v: v.clone(), lhs, rhs });
        }
    }
    Ok(report)
}

/// Builds the table derivation and checks it is well defined: the Leibniz
/// expansion of every defining relator must vanish, and factorizations
/// inside the window must agree with the normal-word extension.
pub fn leibniz_extend(
    table: BTreeMap<usize, AlgebraElement>,
    gg: &GradedGroup,
    window: &Window,
    budget: &Budget,
) -> Result<(Derivation, CheckReport)> {
    gg.require_validated()?;
    let group = gg.group();
    for (&i, value) in &table {
        group.generator(i)?;
        value.check_group(group)?;
    }
    let mut report = CheckReport::new("leibniz-extension");
    for relator in group.relators() {
        report.population += 1;
        report.examined += 1;
        let value = extend_along_word(gg, &table, &relator.word);
        if !value.is_zero() {
            report.fail(Counterexample::RelatorDerivation { relator: relator.label, value });
        }
    }
    let d = Derivation::Table(table);
    report.absorb(check_graded_leibniz(&d, gg, window, budget)?);
    Ok((d, report))
}

/// Quasi-inner means the character vanishes on every loop.
pub fn is_quasi_inner(d: &Derivation, gg: &GradedGroup, window: &Window) -> Result<CheckReport> {
    let mut report = is_trivial_on_loops(&character_of_derivation(d), gg, window)?;
    report.check = "quasi-inner".into();
    Ok(report)
}

/// Evidence that loop-trivial characters form an ideal: `{chi, chi^a}`
/// stays loop-trivial for every listed `a`.
pub fn check_ideal(
    chi: &Character,
    gg: &GradedGroup,
    window: &Window,
    elements: &[GroupElement],
) -> Result<CheckReport> {
    let mut report = CheckReport::new("ideal");
    for a in elements {
        let b = Character::bracket(chi.clone(), Character::Inner(a.clone()));
        report.absorb(is_trivial_on_loops(&b, gg, window)?);
    }
    Ok(report)
}

/// `(bz, za) o (a^-1 bz, z) = (bz a^-1, z) o (bz, az)` over window triples.
/// Triples whose pairs do not compose are counted in a note and skipped.
pub fn check_ideal_identity(gg: &GradedGroup, window: &Window, budget: &Budget) -> CheckReport {
    let mut report = CheckReport::new("ideal-identity");
    let n = window.len();
    let selection = budget.select(n * n * n);
    report.population = n * n * n;
    report.examined = selection.len();
    let mut skipped = 0usize;
    for idx in selection.iter() {
        let [i, j, k] = digits(idx, [n, n, n]);
        let e = window.elements();
        match ideal_square(gg, &e[i], &e[j], &e[k]) {
            Ok((left, right)) if left != right => {
                report.fail(Counterexample::Groupoid { law: "ideal-identity", morphisms: alloc::vec![left, right] })
            }
            Ok(_) => {}
            Err(_) => skipped += 1,
        }
    }
    report.note(alloc::format!("{skipped} triples not composable"));
    report
}
