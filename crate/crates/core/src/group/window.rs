use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{Group, GroupElement};
use crate::error::{Error, Result};

pub const DEFAULT_WINDOW_CAP: usize = 100_000;

/// Bounds for enumerating a [`Window`]: the ball of radius `max_length` in
/// the word metric over the generators and their inverses, optionally
/// filtered by per-generator bounds on the exponent sums of normal words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSpec {
    pub max_length: u32,
    pub exponent_bounds: BTreeMap<usize, i64>,
    pub cap: usize,
}

impl WindowSpec {
    pub fn ball(max_length: u32) -> Self {
        Self { max_length, exponent_bounds: BTreeMap::new(), cap: DEFAULT_WINDOW_CAP }
    }

    pub fn with_bound(mut self, generator: usize, bound: i64) -> Self {
        self.exponent_bounds.insert(generator, bound);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

/// A finite subset of a group that contains the identity, is closed under
/// inverses and is sorted by normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    elements: Vec<GroupElement>,
}

impl Window {
    pub fn enumerate(group: &Group, spec: &WindowSpec) -> Result<Self> {
        for &g in spec.exponent_bounds.keys() {
            if g >= group.num_generators() {
                return Err(Error::InvalidDescriptor(alloc::format!("no generator with index {g}")));
            }
        }
        let mut steps: Vec<GroupElement> = Vec::new();
        for g in group.generators() {
            steps.push(group.inv(&g));
            steps.push(g);
        }
        let mut ball: BTreeSet<GroupElement> = BTreeSet::new();
        ball.insert(group.identity());
        let mut frontier: Vec<GroupElement> = ball.iter().cloned().collect();
        for _ in 0..spec.max_length {
            let mut next = Vec::new();
            for g in &frontier {
                for s in &steps {
                    let h = group.op(g, s);
                    if !ball.contains(&h) {
                        ball.insert(h.clone());
                        next.push(h);
                        if ball.len() > spec.cap {
                            return Err(Error::WindowTooLarge { cap: spec.cap });
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let kept = ball.into_iter().filter(|g| {
            let sums = group.exponent_sums(g);
            spec.exponent_bounds.iter().all(|(&i, &b)| sums[i].abs() <= b)
        });
        let window = Self::closed(group, kept);
        if window.len() > spec.cap {
            return Err(Error::WindowTooLarge { cap: spec.cap });
        }
        Ok(window)
    }

    /// Builds a window from explicit elements, adding the identity and any
    /// missing inverses.
    pub fn from_elements<I>(group: &Group, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = GroupElement>,
    {
        let elements: Vec<_> = elements.into_iter().collect();
        for g in &elements {
            group.check(g)?;
        }
        Ok(Self::closed(group, elements))
    }

    fn closed(group: &Group, elements: impl IntoIterator<Item = GroupElement>) -> Self {
        let mut set: BTreeSet<GroupElement> = BTreeSet::new();
        set.insert(group.identity());
        for g in elements {
            set.insert(group.inv(&g));
            set.insert(g);
        }
        Self { elements: set.into_iter().collect() }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, GroupElement> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }
}

impl<'a> IntoIterator for &'a Window {
    type Item = &'a GroupElement;
    type IntoIter = core::slice::Iter<'a, GroupElement>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
