//! Graded group characters `tau: G -> C` with
//! `tau(ab) = tau(a) + (-1)^|a| tau(b)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::algebra::GradedGroup;
use crate::coeff::GaussianRational;
use crate::group::{GroupElement, Window};
use crate::report::{CheckReport, Counterexample};
use crate::sampling::{digits, Budget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedGroupCharacter {
    /// `tau(g) = c * (deg g mod 2)`.
    Parity(GaussianRational),
    /// `tau(g) = sum of exponent * value` along the normal word. Only a graded
    /// character when every generator has even degree.
    Additive(Vec<GaussianRational>),
    /// Explicit values, zero outside the table.
    Table(BTreeMap<GroupElement, GaussianRational>),
}

impl GradedGroupCharacter {
    pub fn eval(&self, gg: &GradedGroup, g: &GroupElement) -> GaussianRational {
        match self {
            Self::Parity(c) => {
                if gg.is_odd(g) {
                    *c
                } else {
                    GaussianRational::zero()
                }
            }
            Self::Additive(values) => gg
                .group()
                .normal_word(g)
                .iter()
                .fold(GaussianRational::zero(), |acc, l| acc + values[l.generator] * GaussianRational::from(l.exp)),
            Self::Table(t) => t.get(g).copied().unwrap_or_default(),
        }
    }
}

/// Checks the graded-character identity on window pairs.
///
/// The parity form satisfies the identity for every validated grading; the
/// window check is still run. Additive forms additionally need every
/// generator degree to be even and every relator to evaluate to zero. Table
/// forms are checked extensionally on pairs `a, b` with `a`, `b`, `ab` all in
/// the window.
pub fn validate_tau(tau: &GradedGroupCharacter, gg: &GradedGroup, window: &Window, budget: &Budget) -> CheckReport {
    let mut report = CheckReport::new("tau");
    let group = gg.group();
    match tau {
        GradedGroupCharacter::Parity(_) => {
            report.note("parity form: identity holds for every validated grading");
        }
        GradedGroupCharacter::Additive(values) => {
            if values.len() != group.num_generators() {
                report.status = crate::report::Status::Fail;
                report.note(format!(
                    "additive form lists {} values for {} generators",
                    values.len(),
                    group.num_generators()
                ));
                return report;
            }
            if gg.grading().degrees().iter().any(|d| d % 2 != 0) {
                report.note("additive form with an odd-degree generator");
            }
            for r in group.relators() {
                report.population += 1;
                report.examined += 1;
                let value = r
                    .word
                    .iter()
                    .fold(GaussianRational::zero(), |acc, l| acc + values[l.generator] * GaussianRational::from(l.exp));
                if !value.is_zero() {
                    report.fail(Counterexample::RelatorValue { relator: r.label, value });
                }
            }
        }
        GradedGroupCharacter::Table(_) => {}
    }

    let n = window.len();
    let table = matches!(tau, GradedGroupCharacter::Table(_));
    let selection = budget.select(n * n);
    report.population += n * n;
    for idx in selection.iter() {
        let [i, j] = digits(idx, [n, n]);
        let (a, b) = (&window.elements()[i], &window.elements()[j]);
        let ab = group.op(a, b);
        if table && !window.contains(&ab) {
            continue;
        }
        report.examined += 1;
        let lhs = tau.eval(gg, &ab);
        let rhs = tau.eval(gg, a) + gg.sign(a) * tau.eval(gg, b);
        if lhs != rhs {
            report.fail(Counterexample::Tau { a: a.clone(), b: b.clone(), lhs, rhs });
        }
    }
    if table {
        // pairs leaving the window are out of scope, not sampled away
        report.population = report.examined + report.population.saturating_sub(n * n);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Grading;
    use crate::group::{Group, WindowSpec};
    use alloc::vec;

    fn x(k: i64) -> GroupElement {
        GroupElement::Abelian(vec![k])
    }

    fn setup(deg: i64) -> (GradedGroup, Window) {
        let g = Group::integers();
        let w = Window::enumerate(&g, &WindowSpec::ball(3)).unwrap();
        let gr = Grading::new(&g, vec![deg]).unwrap();
        (GradedGroup::new(g, gr, &w).unwrap(), w)
    }

    #[test]
    fn parity_form_is_valid() {
        let (gg, w) = setup(1);
        let tau = GradedGroupCharacter::Parity(GaussianRational::one());
        assert!(validate_tau(&tau, &gg, &w, &Budget::default()).passed());
        assert_eq!(tau.eval(&gg, &x(-3)), GaussianRational::one());
        assert_eq!(tau.eval(&gg, &x(2)), GaussianRational::zero());
    }

    #[test]
    fn additive_form_needs_even_degrees() {
        let (flat, w) = setup(0);
        let tau = GradedGroupCharacter::Additive(vec![GaussianRational::one()]);
        assert!(validate_tau(&tau, &flat, &w, &Budget::default()).passed());
        assert_eq!(tau.eval(&flat, &x(-2)), GaussianRational::from(-2));

        let (graded, w) = setup(1);
        let r = validate_tau(&tau, &graded, &w, &Budget::default());
        assert!(!r.passed());
        // tau(x^2) = 2 but tau(x) + (-1) tau(x) = 0
        assert!(r.counterexamples.len() <= crate::report::MAX_COUNTEREXAMPLES);
        let xx =
            Counterexample::Tau { a: x(1), b: x(1), lhs: GaussianRational::from(2), rhs: GaussianRational::zero() };
        let single = Window::from_elements(graded.group(), [x(1), x(2)]).unwrap();
        let r = validate_tau(&tau, &graded, &single, &Budget::default());
        assert!(r.counterexamples.contains(&xx), "{r:?}");
    }

    #[test]
    fn additive_form_respects_relators() {
        let c = Group::cyclic(4).unwrap();
        let w = Window::enumerate(&c, &WindowSpec::ball(2)).unwrap();
        let gg = GradedGroup::trivially_graded(c);
        let tau = GradedGroupCharacter::Additive(vec![GaussianRational::one()]);
        let r = validate_tau(&tau, &gg, &w, &Budget::default());
        assert!(r.counterexamples.iter().any(|c| matches!(c, Counterexample::RelatorValue { .. })));
    }
}
