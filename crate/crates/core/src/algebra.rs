//! Exact arithmetic in the group algebra `C[G]` and Z-gradings.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::coeff::GaussianRational;
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, Window};
use crate::report::{CheckReport, Counterexample};
use crate::sampling::{digits, Budget};

/// A finitely supported sum `sum_g k_g g` with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    terms: BTreeMap<GroupElement, GaussianRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: GroupElement) -> Self {
        Self::term(g, GaussianRational::one())
    }

    pub fn term(g: GroupElement, c: GaussianRational) -> Self {
        let mut a = Self::zero();
        a.add_term(g, c);
        a
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupElement, GaussianRational)>>(terms: I) -> Self {
        let mut a = Self::zero();
        for (g, c) in terms {
            a.add_term(g, c);
        }
        a
    }

    /// Adds `c * g` in place.
    pub fn add_term(&mut self, g: GroupElement, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = *e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &AlgebraElement, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        for (g, k) in &other.terms {
            self.add_term(g.clone(), *k * c);
        }
    }

    pub fn coeff(&self, g: &GroupElement) -> GaussianRational {
        self.terms.get(g).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(g, k)| (g.clone(), *k * c)).collect() }
    }

    pub fn check_group(&self, group: &Group) -> Result<()> {
        self.terms.keys().try_for_each(|g| group.check(g))
    }

    /// Convolution product `sum_{xy = h} a_x b_y h`.
    pub fn mul(&self, other: &AlgebraElement, group: &Group) -> Result<Self> {
        self.check_group(group)?;
        other.check_group(group)?;
        Ok(self.mul_unchecked(other, group))
    }

    pub(crate) fn mul_unchecked(&self, other: &AlgebraElement, group: &Group) -> Self {
        let mut out = Self::zero();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                out.add_term(group.op(x, y), *a * *b);
            }
        }
        out
    }

    /// `self * g` for a single basis element.
    pub(crate) fn mul_basis_right(&self, g: &GroupElement, group: &Group) -> Self {
        Self { terms: self.terms.iter().map(|(x, a)| (group.op(x, g), *a)).collect() }
    }

    /// `g * self` for a single basis element.
    pub(crate) fn mul_basis_left(&self, g: &GroupElement, group: &Group) -> Self {
        Self { terms: self.terms.iter().map(|(x, a)| (group.op(g, x), *a)).collect() }
    }

    /// Applies a map on basis elements that is injective on the support.
    pub(crate) fn map_basis(&self, mut f: impl FnMut(&GroupElement) -> GroupElement) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, c)| (f(g), *c)))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, GaussianRational::one());
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, -GaussianRational::one());
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(-GaussianRational::one())
    }
}

/// Degrees of the generators; extended to `deg: G -> Z` along normal words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    degrees: Vec<i64>,
}

impl Grading {
    pub fn new(group: &Group, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != group.num_generators() {
            return Err(Error::InvalidDescriptor(format!(
                "grading lists {} degrees for {} generators",
                degrees.len(),
                group.num_generators()
            )));
        }
        Ok(Self { degrees })
    }

    pub fn trivial(group: &Group) -> Self {
        Self { degrees: alloc::vec![0; group.num_generators()] }
    }

    /// Degrees by generator name; unnamed generators get degree 0.
    pub fn from_named<'a, I>(group: &Group, named: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, i64)>,
    {
        let mut g = Self::trivial(group);
        for (name, deg) in named {
            let i = group
                .generator_index(name)
                .ok_or_else(|| Error::InvalidDescriptor(format!("unknown generator {name:?}")))?;
            g.degrees[i] = deg;
        }
        Ok(g)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn generator_degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// Sum of generator degrees along the normal word of `g`.
    pub fn degree(&self, group: &Group, g: &GroupElement) -> i64 {
        group.normal_word(g).iter().map(|l| l.exp * self.degrees[l.generator]).sum()
    }

    pub fn parity(&self, group: &Group, g: &GroupElement) -> u8 {
        self.degree(group, g).rem_euclid(2) as u8
    }

    fn word_degree(&self, word: &[crate::group::Letter]) -> i64 {
        word.iter().map(|l| l.exp * self.degrees[l.generator]).sum()
    }
}

/// Checks that the generator degrees define a homomorphism `G -> Z`.
///
/// Generator pairs are checked first, then the defining relators (a zero
/// degree on every relator is the exact criterion), then all window pairs.
pub fn validate_grading(group: &Group, grading: &Grading, window: &Window, budget: &Budget) -> CheckReport {
    let mut report = CheckReport::new("grading");
    let check_pair = |report: &mut CheckReport, g: &GroupElement, h: &GroupElement| {
        report.examined += 1;
        let product = grading.degree(group, &group.op(g, h));
        let sum = grading.degree(group, g) + grading.degree(group, h);
        if product != sum {
            report.fail(Counterexample::Degree { g: g.clone(), h: h.clone(), product, sum });
        }
    };

    let gens = group.generators();
    report.population += gens.len() * gens.len();
    for g in &gens {
        for h in &gens {
            check_pair(&mut report, g, h);
        }
    }

    let relators = group.relators();
    report.population += relators.len();
    for r in relators {
        report.examined += 1;
        let degree = grading.word_degree(&r.word);
        if degree != 0 {
            report.fail(Counterexample::RelatorDegree { relator: r.label, degree });
        }
    }

    let n = window.len();
    let selection = budget.select(n * n);
    report.population += n * n;
    for idx in selection.iter() {
        let [i, j] = digits(idx, [n, n]);
        check_pair(&mut report, &window.elements()[i], &window.elements()[j]);
    }
    report
}

/// A group together with a grading, and whether the grading was validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGroup {
    group: Group,
    grading: Grading,
    validated: bool,
}

impl GradedGroup {
    /// Validates the grading (relators plus `window` pairs) and wraps it.
    pub fn new(group: Group, grading: Grading, window: &Window) -> Result<Self> {
        let report = validate_grading(&group, &grading, window, &Budget::default());
        if !report.passed() {
            let why = report
                .counterexamples
                .iter()
                .find_map(|c| match c {
                    Counterexample::RelatorDegree { relator, degree } => {
                        Some(format!("relator {relator} has degree {degree}"))
                    }
                    _ => None,
                })
                .unwrap_or_else(|| String::from("degree is not multiplicative on the window"));
            return Err(Error::Precondition(format!("invalid grading: {why}")));
        }
        Ok(Self { group, grading, validated: true })
    }

    /// Wraps a grading without validating it; strict operations reject it.
    pub fn unvalidated(group: Group, grading: Grading) -> Self {
        Self { group, grading, validated: false }
    }

    /// `G` with all generators of degree 0.
    pub fn trivially_graded(group: Group) -> Self {
        let grading = Grading::trivial(&group);
        Self { group, grading, validated: true }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn require_validated(&self) -> Result<()> {
        if self.validated {
            Ok(())
        } else {
            Err(Error::UnvalidatedGrading)
        }
    }

    pub fn degree(&self, g: &GroupElement) -> i64 {
        self.grading.degree(&self.group, g)
    }

    /// Degree, refusing unvalidated gradings.
    pub fn degree_strict(&self, g: &GroupElement) -> Result<i64> {
        self.require_validated()?;
        self.group.check(g)?;
        Ok(self.degree(g))
    }

    /// `|g| = deg g mod 2`.
    pub fn parity(&self, g: &GroupElement) -> u8 {
        self.grading.parity(&self.group, g)
    }

    pub fn is_odd(&self, g: &GroupElement) -> bool {
        self.parity(g) == 1
    }

    /// `(-1)^|g|` as a coefficient.
    pub fn sign(&self, g: &GroupElement) -> GaussianRational {
        if self.is_odd(g) {
            -GaussianRational::one()
        } else {
            GaussianRational::one()
        }
    }

    /// Splits `a` by degree; the parts sum back to `a`.
    pub fn homogeneous_components(&self, a: &AlgebraElement) -> BTreeMap<i64, AlgebraElement> {
        let mut parts: BTreeMap<i64, AlgebraElement> = BTreeMap::new();
        for (g, c) in a.iter() {
            parts.entry(self.degree(g)).or_default().add_term(g.clone(), *c);
        }
        parts
    }

    /// The degree of `a` if it is nonzero and homogeneous.
    pub fn homogeneous_degree(&self, a: &AlgebraElement) -> Option<i64> {
        let parts = self.homogeneous_components(a);
        if parts.len() == 1 {
            parts.keys().next().copied()
        } else {
            None
        }
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        a.mul(b, &self.group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::WindowSpec;
    use alloc::vec;

    fn z(k: i64) -> GroupElement {
        GroupElement::Abelian(vec![k])
    }

    fn int(n: i128) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn convolution_in_integers() {
        let g = Group::integers();
        let a = AlgebraElement::from_terms([(z(1), int(1)), (z(-1), int(1))]);
        let p = a.mul(&AlgebraElement::basis(z(1)), &g).unwrap();
        assert_eq!(p, AlgebraElement::from_terms([(z(2), int(1)), (z(0), int(1))]));
    }

    #[test]
    fn scaling_by_zero_empties_support() {
        let a = AlgebraElement::from_terms([(z(1), int(3))]);
        assert!(a.scale(GaussianRational::zero()).is_zero());
        assert_eq!(a.scale(GaussianRational::zero()).len(), 0);
    }

    #[test]
    fn cancellation_prunes_terms() {
        let a = AlgebraElement::basis(z(1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn heisenberg_product_of_basis_elements() {
        let h = Group::heisenberg();
        let x = AlgebraElement::basis(h.generator(0).unwrap());
        let y = AlgebraElement::basis(h.generator(1).unwrap());
        let p = x.mul(&y, &h).unwrap();
        assert_eq!(p, AlgebraElement::basis(GroupElement::heisenberg(1, 1, 1)));
    }

    #[test]
    fn mismatched_groups_rejected() {
        let h = Group::heisenberg();
        let a = AlgebraElement::basis(z(1));
        assert!(a.mul(&a, &h).is_err());
    }

    #[test]
    fn degrees_and_parities() {
        let g = Group::integers();
        let gr = Grading::new(&g, vec![1]).unwrap();
        assert_eq!(gr.degree(&g, &z(-3)), -3);
        assert_eq!(gr.parity(&g, &z(-3)), 1);
        let t = Grading::trivial(&g);
        assert_eq!(t.degree(&g, &z(5)), 0);
        assert_eq!(t.parity(&g, &z(5)), 0);

        let p = crate::group::integers_times(Group::symmetric(3).unwrap()).unwrap();
        let gr = Grading::from_named(&p, [("x", 1)]).unwrap();
        let el = p.op(&p.pow(&p.generator(0).unwrap(), 2), &p.generator(1).unwrap());
        assert_eq!(gr.degree(&p, &el), 2);
        assert!(Grading::from_named(&p, [("q", 1)]).is_err());
    }

    #[test]
    fn heisenberg_grading_audit() {
        let h = Group::heisenberg();
        let w = Window::enumerate(&h, &WindowSpec::ball(2)).unwrap();
        let good = Grading::from_named(&h, [("x", 1)]).unwrap();
        assert!(validate_grading(&h, &good, &w, &Budget::default()).passed());

        let bad = Grading::from_named(&h, [("z", 1)]).unwrap();
        let r = validate_grading(&h, &bad, &w, &Budget::default());
        assert!(!r.passed());
        assert_eq!(
            r.counterexamples[0],
            Counterexample::Degree { g: h.generator(0).unwrap(), h: h.generator(1).unwrap(), product: 1, sum: 0 }
        );
        assert!(r.counterexamples.iter().any(|c| matches!(
            c,
            Counterexample::RelatorDegree { relator, degree: -1 } if relator == "z^-1*x*y*x^-1*y^-1"
        )));
        assert!(GradedGroup::new(h, bad, &w).is_err());
    }

    #[test]
    fn homogeneous_parts() {
        let g = Group::integers();
        let w = Window::enumerate(&g, &WindowSpec::ball(2)).unwrap();
        let gg = GradedGroup::new(g, Grading::from_named(&Group::integers(), [("x", 1)]).unwrap(), &w).unwrap();
        let a = AlgebraElement::from_terms([(z(0), int(1)), (z(1), int(2)), (z(-1), int(3))]);
        let parts = gg.homogeneous_components(&a);
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![-1, 0, 1]);
        assert_eq!(parts[&-1], AlgebraElement::term(z(-1), int(3)));
        assert_eq!(parts[&1], AlgebraElement::term(z(1), int(2)));
        assert!(gg.homogeneous_components(&AlgebraElement::zero()).is_empty());
    }

    #[test]
    fn strict_mode_rejects_unvalidated() {
        let g = Group::integers();
        let gg = GradedGroup::unvalidated(g.clone(), Grading::trivial(&g));
        assert_eq!(gg.degree_strict(&z(1)), Err(Error::UnvalidatedGrading));
    }
}
