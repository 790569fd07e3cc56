//! DG-algebra structures on graded group algebras and isomorphisms between
//! them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, GradedGroup};
use crate::character::Character;
use crate::coeff::GaussianRational;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupMap, MapKind, Window};
use crate::groupoid::{Morphism, SignedElement};
use crate::report::{CheckReport, Counterexample, Status};
use crate::sampling::{digits, Budget};
use crate::tau::{validate_tau, GradedGroupCharacter};

/// Cochain differentials raise degree by one, chain differentials lower it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Mode {
    #[default]
    Cochain,
    Chain,
}

impl Mode {
    pub fn shift(self) -> i64 {
        match self {
            Mode::Cochain => 1,
            Mode::Chain => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Cochain => "cochain",
            Mode::Chain => "chain",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgReport {
    pub mode: Mode,
    pub window_size: usize,
    /// `d(d(g)) = 0` for every window `g`.
    pub square_zero: CheckReport,
    /// Every `h` in the support of `d(g)` has degree `deg g + shift`.
    pub degree_shift: CheckReport,
}

impl DgReport {
    pub fn passed(&self) -> bool {
        self.square_zero.passed() && self.degree_shift.passed()
    }

    pub fn status(&self) -> Status {
        if self.passed() {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Checks both DG conditions on every window element. `d(d(g))` is computed
/// exactly: column supports are finite, so nothing is truncated.
pub fn check_dg(d: &Derivation, gg: &GradedGroup, mode: Mode, window: &Window) -> Result<DgReport> {
    gg.require_validated()?;
    let mut square_zero = CheckReport::new("square-zero");
    let mut degree_shift = CheckReport::new("degree-shift");
    for g in window {
        let image = d.apply_basis(gg, g)?;
        let deg_g = gg.degree(g);
        for (h, c) in image.iter() {
            degree_shift.population += 1;
            degree_shift.examined += 1;
            let deg_h = gg.degree(h);
            if deg_h != deg_g + mode.shift() {
                degree_shift.fail(Counterexample::DegreeShift {
                    h: h.clone(),
                    g: g.clone(),
                    coefficient: *c,
                    deg_h,
                    deg_g,
                });
            }
        }
        square_zero.population += 1;
        square_zero.examined += 1;
        let twice = d.apply(gg, &image)?;
        if !twice.is_zero() {
            square_zero.fail(Counterexample::SquareZero { g: g.clone(), image: twice });
        }
    }
    Ok(DgReport { mode, window_size: window.len(), square_zero, degree_shift })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    /// `tau(g) tau(gz) = 0` on the window.
    pub criterion: CheckReport,
    /// [`check_dg`] on the central derivation over the same window.
    pub dg: DgReport,
    pub agrees: bool,
}

/// The product criterion for the central derivation `g -> tau(g) gz`,
/// cross-checked against [`check_dg`].
pub fn central_dg_criterion(
    z: &GroupElement,
    tau: &GradedGroupCharacter,
    gg: &GradedGroup,
    mode: Mode,
    window: &Window,
    budget: &Budget,
) -> Result<CriterionReport> {
    gg.require_validated()?;
    let group = gg.group();
    group.check(z)?;
    let deg = gg.degree(z);
    if deg != mode.shift() {
        return Err(Error::Precondition(format!("deg z = {deg}, expected {}", mode.shift())));
    }
    if !group.is_central(z).central {
        return Err(Error::Precondition(format!("z = {} is not central", group.format_element(z))));
    }
    if !validate_tau(tau, gg, window, budget).passed() {
        return Err(Error::Precondition("tau is not a graded group character on the window".into()));
    }
    let mut criterion = CheckReport::new("central-criterion");
    for g in window {
        criterion.population += 1;
        criterion.examined += 1;
        let tau_g = tau.eval(gg, g);
        let tau_gz = tau.eval(gg, &group.op(g, z));
        if !(tau_g * tau_gz).is_zero() {
            criterion.fail(Counterexample::CentralProduct { g: g.clone(), tau_g, tau_gz });
        }
    }
    let d = Derivation::Central { z: z.clone(), tau: tau.clone() };
    let dg = check_dg(&d, gg, mode, window)?;
    let agrees = criterion.passed() == dg.passed();
    Ok(CriterionReport { criterion, dg, agrees })
}

/// Exhaustive search over window tables `tau` with values drawn from
/// `values` (and `tau(e) = 0`) for one that passes [`validate_tau`] but
/// violates the central product criterion. Tables are tried in the order of
/// the window, the last element varying fastest.
pub fn search_failing_tau(
    z: &GroupElement,
    gg: &GradedGroup,
    window: &Window,
    values: &[GaussianRational],
    budget: &Budget,
) -> Result<Option<GradedGroupCharacter>> {
    let group = gg.group();
    let free: Vec<&GroupElement> = window.iter().filter(|g| !group.is_identity(g)).collect();
    let k = values.len();
    let total = k.checked_pow(free.len() as u32).ok_or(Error::WindowTooLarge { cap: budget.cap })?;
    if total > budget.cap {
        return Err(Error::WindowTooLarge { cap: budget.cap });
    }
    for mut idx in 0..total {
        let mut table = BTreeMap::new();
        for g in free.iter().rev() {
            let v = values[idx % k];
            idx /= k;
            if !v.is_zero() {
                table.insert((*g).clone(), v);
            }
        }
        let tau = GradedGroupCharacter::Table(table);
        if !validate_tau(&tau, gg, window, budget).passed() {
            continue;
        }
        let fails = window.iter().any(|g| !(tau.eval(gg, g) * tau.eval(gg, &group.op(g, z))).is_zero());
        if fails {
            return Ok(Some(tau));
        }
    }
    Ok(None)
}

/// A graded algebra map `C[G] -> C[G]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraAutomorphism {
    /// `g -> f(g)` for a group automorphism `f`.
    Transport(GroupMap),
    /// `g -> lambda^(deg g) g`.
    Scaling(GaussianRational),
    /// Explicit images `c^g_h` of window basis elements.
    Matrix(BTreeMap<GroupElement, AlgebraElement>),
}

impl AlgebraAutomorphism {
    pub fn identity(gg: &GradedGroup) -> Self {
        AlgebraAutomorphism::Transport(GroupMap::identity(gg.group()))
    }

    pub fn apply_basis(&self, gg: &GradedGroup, g: &GroupElement) -> Result<AlgebraElement> {
        match self {
            AlgebraAutomorphism::Transport(f) => Ok(AlgebraElement::basis(f.apply(g))),
            AlgebraAutomorphism::Scaling(lambda) => {
                let c = lambda.pow(gg.degree(g)).ok_or(Error::NotInvertible)?;
                Ok(AlgebraElement::term(g.clone(), c))
            }
            AlgebraAutomorphism::Matrix(m) => m.get(g).cloned().ok_or(Error::OutsideDomain),
        }
    }

    pub fn apply(&self, gg: &GradedGroup, a: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (g, c) in a.iter() {
            out.add_scaled(&self.apply_basis(gg, g)?, *c);
        }
        Ok(out)
    }

    /// Audits `f` on the window: multiplicative on pairs, degree preserving,
    /// and for transports a genuine automorphism on the searched range.
    pub fn validate(&self, gg: &GradedGroup, window: &Window, search: &Window, budget: &Budget) -> CheckReport {
        let mut report = CheckReport::new("algebra-map");
        let group = gg.group();
        match self {
            AlgebraAutomorphism::Transport(f) => {
                if f.kind() != MapKind::Automorphism {
                    report.status = Status::Fail;
                    report.note("group map is not declared as an automorphism");
                }
                report.absorb(f.validate(window, search).report);
            }
            AlgebraAutomorphism::Scaling(lambda) => {
                if lambda.is_zero() {
                    report.status = Status::Fail;
                    report.note("scaling by zero");
                    return report;
                }
            }
            AlgebraAutomorphism::Matrix(_) => {}
        }
        for g in window {
            report.population += 1;
            report.examined += 1;
            match self.apply_basis(gg, g) {
                Ok(image) if gg.homogeneous_degree(&image) == Some(gg.degree(g)) => {}
                Ok(image) => report.fail(Counterexample::DegreeChange { g: g.clone(), image }),
                Err(_) => report.fail(Counterexample::DegreeChange { g: g.clone(), image: AlgebraElement::zero() }),
            }
        }
        let n = window.len();
        let selection = budget.select(n * n);
        report.population += n * n;
        for idx in selection.iter() {
            let [i, j] = digits(idx, [n, n]);
            let (g, h) = (&window.elements()[i], &window.elements()[j]);
            let Ok(lhs) = self.apply_basis(gg, &group.op(g, h)) else {
                continue;
            };
            report.examined += 1;
            let (Ok(fg), Ok(fh)) = (self.apply_basis(gg, g), self.apply_basis(gg, h)) else {
                continue;
            };
            if lhs != fg.mul_unchecked(&fh, group) {
                report.fail(Counterexample::NotMultiplicative { g: g.clone(), h: h.clone() });
            }
        }
        report
    }

    /// The inverse map. Matrices must be monomial (one term per image).
    pub fn inverse(&self, search: &Window) -> Result<Self> {
        match self {
            AlgebraAutomorphism::Transport(f) => Ok(AlgebraAutomorphism::Transport(f.inverse(search)?)),
            AlgebraAutomorphism::Scaling(lambda) => {
                Ok(AlgebraAutomorphism::Scaling(lambda.inv().ok_or(Error::NotInvertible)?))
            }
            AlgebraAutomorphism::Matrix(m) => {
                let mut inv = BTreeMap::new();
                for (g, image) in m {
                    let mut terms = image.iter();
                    let (Some((h, c)), None) = (terms.next(), terms.next()) else {
                        return Err(Error::NotInvertible);
                    };
                    let c = c.inv().ok_or(Error::NotInvertible)?;
                    if inv.insert(h.clone(), AlgebraElement::term(g.clone(), c)).is_some() {
                        return Err(Error::NotInvertible);
                    }
                }
                Ok(AlgebraAutomorphism::Matrix(inv))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    /// The coefficient identity `sum_h c^g_h chi2(x, h) = sum_h chi1(h, g) c^h_x`.
    pub conjugation: CheckReport,
    /// The operator identity `f(d1(g)) = d2(f(g))`.
    pub operator: CheckReport,
    pub agrees: bool,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.conjugation.passed() && self.operator.passed()
    }
}

/// Checks that `f` intertwines `d1` and `d2` on the window, once through the
/// characters of both derivations and once through the operators. `f` must
/// pass [`AlgebraAutomorphism::validate`] first.
pub fn check_iso(
    d1: &Derivation,
    d2: &Derivation,
    f: &AlgebraAutomorphism,
    gg: &GradedGroup,
    window: &Window,
    search: &Window,
    budget: &Budget,
) -> Result<IsoReport> {
    gg.require_validated()?;
    let audit = f.validate(gg, window, search, budget);
    if !audit.passed() {
        return Err(Error::InvalidMap(String::from("not a graded algebra automorphism on the window")));
    }
    let chi1 = Character::of_derivation(d1.clone());
    let chi2 = Character::of_derivation(d2.clone());
    let mut conjugation = CheckReport::new("conjugation");
    let mut operator = CheckReport::new("intertwining");
    for g in window {
        let fg = f.apply_basis(gg, g)?;
        let col1 = chi1.column(gg, g)?;

        // rows x that can be nonzero on either side
        let mut rows = BTreeSet::new();
        let mut images = Vec::new();
        for (h, _) in fg.iter() {
            rows.extend(chi2.column(gg, h)?.support().cloned());
        }
        for (h, c) in col1.iter() {
            let fh = f.apply_basis(gg, h)?;
            rows.extend(fh.support().cloned());
            images.push((fh, *c));
        }
        for x in &rows {
            conjugation.population += 1;
            conjugation.examined += 1;
            let mut lhs = GaussianRational::zero();
            for (h, c) in fg.iter() {
                lhs = lhs + *c * chi2.evaluate(gg, &Morphism::new(SignedElement::pos(x.clone()), h.clone()))?;
            }
            let mut rhs = GaussianRational::zero();
            for (fh, c) in &images {
                rhs = rhs + *c * fh.coeff(x);
            }
            if lhs != rhs {
                conjugation.fail(Counterexample::Conjugation { g: g.clone(), x: x.clone(), lhs, rhs });
            }
        }

        operator.population += 1;
        operator.examined += 1;
        let left = f.apply(gg, &d1.apply_basis(gg, g)?)?;
        let right = d2.apply(gg, &fg)?;
        if left != right {
            operator.fail(Counterexample::Disagreement { g: g.clone() });
        }
    }
    let agrees = conjugation.passed() == operator.passed();
    Ok(IsoReport { conjugation, operator, agrees })
}

/// `chi'(h, g) = chi(f(h), f(g))` for a degree-preserving automorphism `f`.
pub fn transport_character(chi: &Character, f: &GroupMap, gg: &GradedGroup, search: &Window) -> Result<Character> {
    if f.kind() != MapKind::Automorphism || f.domain() != gg.group() || f.codomain() != gg.group() {
        return Err(Error::InvalidMap(String::from("transport needs an automorphism of the graded group")));
    }
    for (i, image) in f.images().iter().enumerate() {
        if gg.degree(image) != gg.grading().generator_degree(i) {
            return Err(Error::InvalidMap(format!(
                "image of generator {} changes degree",
                gg.group().generator_names()[i]
            )));
        }
    }
    let inverse = f.inverse(search)?;
    Ok(Character::Transported { base: alloc::boxed::Box::new(chi.clone()), map: f.clone(), inverse })
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

    fn int(n: i64) -> GaussianRational {
        GaussianRational::from(n)
    }

    fn graded_z(len: u32) -> (GradedGroup, Window) {
        let g = Group::integers();
        let w = Window::enumerate(&g, &WindowSpec::ball(len)).unwrap();
        let gr = Grading::new(&g, vec![1]).unwrap();
        (GradedGroup::new(g, gr, &w).unwrap(), w)
    }

    fn parity() -> GradedGroupCharacter {
        GradedGroupCharacter::Parity(int(1))
    }

    #[test]
    fn integers_central_and_inner_are_dg() {
        let (gg, w) = graded_z(4);
        let central = Derivation::Central { z: x(1), tau: parity() };
        assert!(check_dg(&central, &gg, Mode::Cochain, &w).unwrap().passed());
        assert!(check_dg(&Derivation::Inner(x(1)), &gg, Mode::Cochain, &w).unwrap().passed());
        let chain = check_dg(&central, &gg, Mode::Chain, &w).unwrap();
        assert!(chain.square_zero.passed() && !chain.degree_shift.passed());
    }

    #[test]
    fn translation_is_not_square_zero() {
        let (gg, w) = graded_z(3);
        let d = Derivation::Translation { z: x(1), coefficient: int(1) };
        let report = check_dg(&d, &gg, Mode::Cochain, &w).unwrap();
        assert!(!report.square_zero.passed());
        assert!(report.degree_shift.passed());
        match &report.square_zero.counterexamples[0] {
            Counterexample::SquareZero { g, image } => {
                assert_eq!(image, &AlgebraElement::basis(gg.group().op(g, &x(2))));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn criterion_rejects_wrong_degree() {
        let (gg, w) = graded_z(2);
        let r = central_dg_criterion(&x(2), &parity(), &gg, Mode::Cochain, &w, &Budget::default());
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn scaling_conjugates_multiples() {
        let (gg, w) = graded_z(3);
        let d = Derivation::Central { z: x(1), tau: parity() };
        for lambda in [int(2), GaussianRational::from_ratio(1, 3)] {
            let f = AlgebraAutomorphism::Scaling(lambda);
            let report = check_iso(&d, &d.clone().scaled(lambda), &f, &gg, &w, &w, &Budget::default()).unwrap();
            assert!(report.passed() && report.agrees);
        }
    }

    #[test]
    fn zero_never_conjugates_to_nonzero() {
        let (gg, w) = graded_z(3);
        let d = Derivation::Central { z: x(1), tau: parity() };
        let f = AlgebraAutomorphism::identity(&gg);
        let report = check_iso(&d, &Derivation::Zero, &f, &gg, &w, &w, &Budget::default()).unwrap();
        assert!(!report.passed() && report.agrees);
    }

    #[test]
    fn monomial_matrix_inverse() {
        let m = BTreeMap::from([(x(1), AlgebraElement::term(x(1), int(2))), (x(0), AlgebraElement::basis(x(0)))]);
        let inv = AlgebraAutomorphism::Matrix(m).inverse(&Window::from_elements(&Group::integers(), []).unwrap());
        let AlgebraAutomorphism::Matrix(inv) = inv.unwrap() else { panic!() };
        assert_eq!(inv[&x(1)], AlgebraElement::term(x(1), GaussianRational::from_ratio(1, 2)));
    }
}
