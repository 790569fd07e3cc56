use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{Group, GroupElement, Window};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Counterexample};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Endomorphism,
    Automorphism,
}

/// A map between groups given by the images of the domain generators and
/// extended along normal words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMap {
    domain: Group,
    codomain: Group,
    images: Vec<GroupElement>,
    kind: MapKind,
}

/// Result of auditing a [`GroupMap`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapReport {
    pub report: CheckReport,
    /// All defining relators of the domain map to the identity.
    pub homomorphism: bool,
    pub injective_on_window: bool,
    /// Every codomain generator has a preimage in the search window.
    pub generators_hit: bool,
}

impl GroupMap {
    pub fn new(domain: Group, codomain: Group, images: Vec<GroupElement>, kind: MapKind) -> Result<Self> {
        if images.len() != domain.num_generators() {
            return Err(Error::InvalidMap(format!(
                "expected {} generator images, got {}",
                domain.num_generators(),
                images.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if !codomain.contains(img) {
                return Err(Error::InvalidMap(format!(
                    "image of {} is not an element of {}",
                    domain.generator_names()[i],
                    codomain
                )));
            }
        }
        Ok(Self { domain, codomain, images, kind })
    }

    pub fn identity(group: &Group) -> Self {
        Self { domain: group.clone(), codomain: group.clone(), images: group.generators(), kind: MapKind::Automorphism }
    }

    /// Conjugation `g -> t^-1 g t`.
    pub fn inner(group: &Group, t: &GroupElement) -> Result<Self> {
        group.check(t)?;
        let images = group.generators().iter().map(|g| group.conjugate(g, t)).collect();
        Ok(Self { domain: group.clone(), codomain: group.clone(), images, kind: MapKind::Automorphism })
    }

    pub fn domain(&self) -> &Group {
        &self.domain
    }

    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// Image of `g`, evaluated along its normal word.
    pub fn apply(&self, g: &GroupElement) -> GroupElement {
        let mut acc = self.codomain.identity();
        for l in self.domain.normal_word(g) {
            acc = self.codomain.op(&acc, &self.codomain.pow(&self.images[l.generator], l.exp));
        }
        acc
    }

    /// Checks that every defining relator maps to the identity. For the
    /// automorphism kind also checks injectivity on `window` and that each
    /// codomain generator is hit by some element of `search`.
    pub fn validate(&self, window: &Window, search: &Window) -> MapReport {
        let mut report = CheckReport::new("group-map");
        let mut homomorphism = true;
        let relators = self.domain.relators();
        report.population += relators.len();
        for r in relators {
            report.examined += 1;
            let image = self.codomain.eval_word(&self.map_word(&r.word)).expect("valid generator indices");
            if !self.codomain.is_identity(&image) {
                homomorphism = false;
                report.fail(Counterexample::RelatorImage { relator: r.label, image });
            }
        }

        let mut seen: BTreeMap<GroupElement, GroupElement> = BTreeMap::new();
        let mut injective = true;
        for g in window {
            report.examined += 1;
            report.population += 1;
            let image = self.apply(g);
            if let Some(prev) = seen.get(&image) {
                injective = false;
                if self.kind == MapKind::Automorphism {
                    report.fail(Counterexample::Collision { g: prev.clone(), h: g.clone(), image });
                }
            } else {
                seen.insert(image, g.clone());
            }
        }

        let mut generators_hit = true;
        if self.domain == self.codomain || self.kind == MapKind::Automorphism {
            let hit: BTreeMap<GroupElement, ()> = search.iter().map(|g| (self.apply(g), ())).collect();
            for (i, gen) in self.codomain.generators().iter().enumerate() {
                report.examined += 1;
                report.population += 1;
                if !hit.contains_key(gen) {
                    generators_hit = false;
                    if self.kind == MapKind::Automorphism {
                        report.fail(Counterexample::Unhit { generator: i });
                    }
                }
            }
        }

        let class = match (homomorphism, injective && generators_hit) {
            (false, _) => "not a homomorphism",
            (true, true) => "automorphism on the searched range",
            (true, false) => "endomorphism, not an automorphism",
        };
        report.note(format!("classified as {class}"));
        MapReport { report, homomorphism, injective_on_window: injective, generators_hit }
    }

    /// Rewrites a domain word into codomain letters through the images.
    fn map_word(&self, word: &[super::Letter]) -> Vec<super::Letter> {
        let mut out = Vec::new();
        for l in word {
            let img_word = self.codomain.normal_word(&self.images[l.generator]);
            let (n, inverse) = (l.exp.unsigned_abs(), l.exp < 0);
            for _ in 0..n {
                if inverse {
                    out.extend(img_word.iter().rev().map(|m| super::Letter { generator: m.generator, exp: -m.exp }));
                } else {
                    out.extend(img_word.iter().copied());
                }
            }
        }
        out
    }

    /// The inverse automorphism, with generator preimages found in `search`.
    pub fn inverse(&self, search: &Window) -> Result<Self> {
        if self.domain != self.codomain {
            return Err(Error::InvalidMap("only endomorphisms can be inverted".into()));
        }
        let mut images = Vec::new();
        for gen in self.codomain.generators() {
            let pre = search.iter().find(|g| self.apply(g) == gen).ok_or(Error::NotInvertible)?;
            images.push(pre.clone());
        }
        Ok(Self { domain: self.codomain.clone(), codomain: self.domain.clone(), images, kind: MapKind::Automorphism })
    }

    /// `self o other`.
    pub fn compose(&self, other: &GroupMap) -> Result<Self> {
        if other.codomain != self.domain {
            return Err(Error::InvalidMap("codomain and domain differ".into()));
        }
        let images = other.images.iter().map(|g| self.apply(g)).collect();
        let kind = if self.kind == MapKind::Automorphism && other.kind == MapKind::Automorphism {
            MapKind::Automorphism
        } else {
            MapKind::Endomorphism
        };
        Ok(Self { domain: other.domain.clone(), codomain: self.codomain.clone(), images, kind })
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

    #[test]
    fn negation_is_an_automorphism() {
        let g = Group::integers();
        let w = Window::enumerate(&g, &WindowSpec::ball(3)).unwrap();
        let f = GroupMap::new(g.clone(), g.clone(), vec![z(-1)], MapKind::Automorphism).unwrap();
        let r = f.validate(&w, &w);
        assert!(r.report.passed(), "{r:?}");
        assert_eq!(f.apply(&z(2)), z(-2));
        assert_eq!(f.inverse(&w).unwrap().apply(&z(5)), z(-5));
    }

    #[test]
    fn doubling_is_only_an_endomorphism() {
        let g = Group::integers();
        let w = Window::enumerate(&g, &WindowSpec::ball(3)).unwrap();
        let endo = GroupMap::new(g.clone(), g.clone(), vec![z(2)], MapKind::Endomorphism).unwrap();
        let r = endo.validate(&w, &w);
        assert!(r.report.passed());
        assert!(r.homomorphism && r.injective_on_window && !r.generators_hit);
        let auto = GroupMap::new(g.clone(), g.clone(), vec![z(2)], MapKind::Automorphism).unwrap();
        let r = auto.validate(&w, &w);
        assert!(!r.report.passed());
        assert!(r.report.counterexamples.contains(&Counterexample::Unhit { generator: 0 }));
        assert_eq!(auto.inverse(&w), Err(Error::NotInvertible));
    }

    #[test]
    fn heisenberg_squaring_z_breaks_the_commutator_relator() {
        let h = Group::heisenberg();
        let w = Window::enumerate(&h, &WindowSpec::ball(1)).unwrap();
        let gens = h.generators();
        let z2 = h.pow(&gens[2], 2);
        let f = GroupMap::new(h.clone(), h.clone(), vec![gens[0].clone(), gens[1].clone(), z2], MapKind::Endomorphism)
            .unwrap();
        let r = f.validate(&w, &w);
        assert!(!r.homomorphism);
        match &r.report.counterexamples[0] {
            Counterexample::RelatorImage { relator, image } => {
                assert_eq!(relator, "z^-1*x*y*x^-1*y^-1");
                // z^-2 * z
                assert_eq!(*image, GroupElement::heisenberg(0, -1, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_images_rejected() {
        let g = Group::integers();
        assert!(GroupMap::new(g.clone(), g.clone(), vec![GroupElement::heisenberg(0, 0, 1)], MapKind::Endomorphism)
            .is_err());
        assert!(GroupMap::new(g.clone(), g, vec![], MapKind::Endomorphism).is_err());
    }

    #[test]
    fn inner_automorphism_of_s3() {
        let s3 = Group::symmetric(3).unwrap();
        let w = Window::enumerate(&s3, &WindowSpec::ball(3)).unwrap();
        let t = s3.generator(0).unwrap();
        let f = GroupMap::inner(&s3, &t).unwrap();
        assert!(f.validate(&w, &w).report.passed());
        for g in &w {
            assert_eq!(f.apply(g), s3.conjugate(g, &t));
        }
    }
}
