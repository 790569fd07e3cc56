//! Ready-made DG structures and the grading audit for the Heisenberg group.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{validate_grading, GradedGroup, Grading};
use crate::coeff::GaussianRational;
use crate::derivation::{check_graded_leibniz, Derivation};
use crate::dg::{central_dg_criterion, check_dg, search_failing_tau, Mode};
use crate::error::Result;
use crate::group::{integers_times, Group, GroupElement, Window, WindowSpec};
use crate::report::CheckReport;
use crate::sampling::Budget;
use crate::tau::GradedGroupCharacter;

/// A wired-up example: graded group, window, derivation and the reports run
/// on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Demo {
    pub name: &'static str,
    pub graded: GradedGroup,
    pub window: Window,
    pub derivation: Derivation,
    pub reports: Vec<CheckReport>,
}

impl Demo {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }
}

pub const DEMO_NAMES: [&str; 5] =
    ["integers-dg", "product-dg", "inner-central-dg", "heisenberg-audit", "criterion-failure"];

/// Runs a demo by name with its default parameters.
pub fn demo_by_name(name: &str) -> Option<Result<Demo>> {
    Some(match name {
        "integers-dg" => demo_integers_dg(),
        "product-dg" => Group::symmetric(3).and_then(demo_product_dg),
        "inner-central-dg" => default_inner_central(),
        "heisenberg-audit" => Ok(demo_heisenberg_grading_audit()),
        "criterion-failure" => demo_criterion_failure(),
        _ => return None,
    })
}

fn parity() -> GradedGroupCharacter {
    GradedGroupCharacter::Parity(GaussianRational::one())
}

fn dg_reports(d: &Derivation, gg: &GradedGroup, window: &Window) -> Result<Vec<CheckReport>> {
    let leibniz = check_graded_leibniz(d, gg, window, &Budget::default())?;
    let dg = check_dg(d, gg, Mode::Cochain, window)?;
    Ok(vec![leibniz, dg.square_zero, dg.degree_shift])
}

/// `C[Z]` with `deg x = 1` and `d(g) = tau(g) gx`, `tau` the parity.
pub fn demo_integers_dg() -> Result<Demo> {
    let group = Group::integers();
    let window = Window::enumerate(&group, &WindowSpec::ball(4))?;
    let grading = Grading::new(&group, vec![1])?;
    let gg = GradedGroup::new(group, grading, &window)?;
    let z = GroupElement::Abelian(vec![1]);
    let d = Derivation::central(&gg, z.clone(), parity(), &window, &Budget::default())?;
    let mut reports = dg_reports(&d, &gg, &window)?;
    let criterion = central_dg_criterion(&z, &parity(), &gg, Mode::Cochain, &window, &Budget::default())?;
    reports.push(criterion.criterion);
    Ok(Demo { name: "integers-dg", graded: gg, window, derivation: d, reports })
}

/// `C[Z x H]` with the `Z` generator in degree 1, `H` in degree 0 and the
/// parity central derivation along that generator.
pub fn demo_product_dg(h: Group) -> Result<Demo> {
    let group = integers_times(h)?;
    let window = Window::enumerate(&group, &WindowSpec::ball(3))?;
    let mut degrees = vec![0; group.num_generators()];
    degrees[0] = 1;
    let grading = Grading::new(&group, degrees)?;
    let gg = GradedGroup::new(group.clone(), grading, &window)?;
    let z = group.generator(0)?;
    let d = Derivation::central(&gg, z.clone(), parity(), &window, &Budget::default())?;
    let mut reports = dg_reports(&d, &gg, &window)?;
    let criterion = central_dg_criterion(&z, &parity(), &gg, Mode::Cochain, &window, &Budget::default())?;
    reports.push(criterion.criterion);
    Ok(Demo { name: "product-dg", graded: gg, window, derivation: d, reports })
}

fn default_inner_central() -> Result<Demo> {
    let group = integers_times(Group::symmetric(3)?)?;
    let a = group.generator(0)?;
    demo_inner_central_dg(&a)
}

/// `C[Z x S3]` graded by the `Z` exponent, with the inner derivation `d_a`.
/// For central `a` of degree 1 this is a DG structure.
pub fn demo_inner_central_dg(a: &GroupElement) -> Result<Demo> {
    let group = integers_times(Group::symmetric(3)?)?;
    group.check(a)?;
    let window = Window::enumerate(&group, &WindowSpec::ball(3))?;
    let mut degrees = vec![0; group.num_generators()];
    degrees[0] = 1;
    let grading = Grading::new(&group, degrees)?;
    let gg = GradedGroup::new(group, grading, &window)?;
    let d = Derivation::Inner(a.clone());
    let reports = dg_reports(&d, &gg, &window)?;
    Ok(Demo { name: "inner-central-dg", graded: gg, window, derivation: d, reports })
}

/// Validates two gradings of the Heisenberg group: `z` in degree 1 (fails,
/// since `z` is a commutator) and `x` in degree 1 (passes).
pub fn demo_heisenberg_grading_audit() -> Demo {
    let group = Group::heisenberg();
    let window = Window::enumerate(&group, &WindowSpec::ball(2)).expect("small window");
    let budget = Budget::default();
    let by_z = Grading::new(&group, vec![0, 0, 1]).expect("three generators");
    let by_x = Grading::new(&group, vec![1, 0, 0]).expect("three generators");
    let mut bad = validate_grading(&group, &by_z, &window, &budget);
    bad.check = String::from("grading deg z = 1");
    let mut good = validate_grading(&group, &by_x, &window, &budget);
    good.check = String::from("grading deg x = 1");
    Demo {
        name: "heisenberg-audit",
        graded: GradedGroup::unvalidated(group, by_z),
        window,
        derivation: Derivation::Zero,
        reports: vec![bad, good],
    }
}

/// `C[Z^2]` with `deg x1 = 1`, `deg x2 = 0`, `z = x1` on the five-element
/// window `{e, (x1 x2)^±1, (x1^2 x2)^±1}`. A window table `tau` found by
/// exhaustive search over values in `{-1, 0, 1}` violates the product
/// criterion, and the DG check fails with it.
pub fn demo_criterion_failure() -> Result<Demo> {
    let group = Group::free_abelian(2)?;
    let window = Window::from_elements(&group, [GroupElement::Abelian(vec![1, 1]), GroupElement::Abelian(vec![2, 1])])?;
    let grading = Grading::new(&group, vec![1, 0])?;
    let gg = GradedGroup::new(group.clone(), grading, &window)?;
    let z = group.generator(0)?;
    let values: Vec<GaussianRational> = [-1, 0, 1].into_iter().map(GaussianRational::from).collect();
    let budget = Budget::default();
    let tau = search_failing_tau(&z, &gg, &window, &values, &budget)?
        .ok_or_else(|| crate::error::Error::Precondition(String::from("no failing table on the window")))?;
    let criterion = central_dg_criterion(&z, &tau, &gg, Mode::Cochain, &window, &budget)?;
    let d = Derivation::Central { z, tau };
    Ok(Demo {
        name: "criterion-failure",
        graded: gg,
        window,
        derivation: d,
        reports: vec![criterion.criterion, criterion.dg.square_zero, criterion.dg.degree_shift],
    })
}
