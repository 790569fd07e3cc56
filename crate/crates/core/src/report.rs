//! Structured verification reports with typed, replayable counterexamples.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::AlgebraElement;
use crate::coeff::GaussianRational;
use crate::group::GroupElement;
use crate::groupoid::Morphism;

/// Counterexamples kept per report; `violations` still counts all of them.
pub const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `deg(gh) != deg(g) + deg(h)`.
    Degree { g: GroupElement, h: GroupElement, product: i64, sum: i64 },
    /// A defining relator of nonzero degree.
    RelatorDegree { relator: String, degree: i64 },
    /// A defining relator not sent to the identity.
    RelatorImage { relator: String, image: GroupElement },
    /// A relator on which an additive character does not vanish.
    RelatorValue { relator: String, value: GaussianRational },
    /// A derivation not vanishing on a defining relator.
    RelatorDerivation { relator: String, value: AlgebraElement },
    /// `d(uv) != d(u)v + (-1)^|u| u d(v)`.
    Leibniz { u: GroupElement, v: GroupElement, lhs: AlgebraElement, rhs: AlgebraElement },
    /// `chi(psi o phi) != chi(psi) + chi(phi)`.
    Additivity { first: Morphism, second: Morphism, composite: Morphism, lhs: GaussianRational, rhs: GaussianRational },
    /// A loop with nonzero character value.
    Loop { morphism: Morphism, value: GaussianRational },
    /// A violated groupoid law on the listed morphisms.
    Groupoid { law: &'static str, morphisms: Vec<Morphism> },
    /// `tau(ab) != tau(a) + (-1)^|a| tau(b)`.
    Tau { a: GroupElement, b: GroupElement, lhs: GaussianRational, rhs: GaussianRational },
    /// `d(d(g)) != 0`.
    SquareZero { g: GroupElement, image: AlgebraElement },
    /// `chi(h, g) != 0` although `deg h != deg g + shift`.
    DegreeShift { h: GroupElement, g: GroupElement, coefficient: GaussianRational, deg_h: i64, deg_g: i64 },
    /// `tau(g) tau(gz) != 0`.
    CentralProduct { g: GroupElement, tau_g: GaussianRational, tau_gz: GaussianRational },
    /// `f(d1(g)) != d2(f(g))`, i.e. the two sides of the conjugation identity
    /// differ at the coefficient of `x`.
    Conjugation { g: GroupElement, x: GroupElement, lhs: GaussianRational, rhs: GaussianRational },
    /// `f(gh) != f(g) f(h)`.
    NotMultiplicative { g: GroupElement, h: GroupElement },
    /// `f(g)` is not homogeneous of degree `deg g`.
    DegreeChange { g: GroupElement, image: AlgebraElement },
    /// Two window elements with the same image.
    Collision { g: GroupElement, h: GroupElement, image: GroupElement },
    /// A codomain generator without a preimage in the search window.
    Unhit { generator: usize },
    /// Two verdicts that are required to agree disagree at `g`.
    Disagreement { g: GroupElement },
}

/// Outcome of one exact check over a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    /// Instances actually examined.
    pub examined: usize,
    /// Size of the full instance population; larger than `examined` only
    /// when the population exceeded the budget and was sampled.
    pub population: usize,
    pub violations: usize,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            status: Status::Pass,
            examined: 0,
            population: 0,
            violations: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(&mut self, c: Counterexample) {
        self.status = Status::Fail;
        self.violations += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(c);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    pub fn sampled(&self) -> bool {
        self.examined < self.population
    }

    /// Folds another report into this one: fail if either fails.
    pub fn absorb(&mut self, other: CheckReport) {
        self.examined += other.examined;
        self.population += other.population;
        self.violations += other.violations;
        if !other.passed() {
            self.status = Status::Fail;
        }
        for c in other.counterexamples {
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(c);
            }
        }
        self.notes.extend(other.notes);
    }
}
