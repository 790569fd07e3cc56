//! Graded derivations of group algebras `C[G]`, described as locally finite
//! characters on the signed conjugacy-action groupoid, and verification of
//! DG-algebra structures built from them.
//!
//! Everything is exact: coefficients are Gaussian rationals and statements
//! quantified over an infinite group are checked on finite, inverse-closed
//! [`Window`](group::Window)s.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod character;
pub mod coeff;
pub mod demo;
pub mod derivation;
pub mod dg;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod report;
pub mod sampling;
pub mod tau;

pub use algebra::{AlgebraElement, GradedGroup, Grading};
pub use character::{Character, Evaluate};
pub use coeff::GaussianRational;
pub use derivation::Derivation;
pub use dg::{AlgebraAutomorphism, DgReport, Mode};
pub use error::{Error, Result};
pub use group::{Group, GroupElement, GroupKind, GroupMap, MapKind, Window, WindowSpec};
pub use groupoid::{Morphism, SignedElement};
pub use report::{CheckReport, Counterexample, Status};
pub use sampling::Budget;
pub use tau::GradedGroupCharacter;
