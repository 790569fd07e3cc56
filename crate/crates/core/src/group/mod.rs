//! Concrete finitely generated groups with exact normal forms.
//!
//! Every supported family has a closed normal form, so equality of group
//! elements is structural equality of [`GroupElement`] values and every
//! multiplication terminates.

mod map;
pub(crate) mod perm;
mod window;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

pub use map::{GroupMap, MapKind, MapReport};
pub use window::{Window, WindowSpec, DEFAULT_WINDOW_CAP};

use crate::error::{Error, Result};

/// The closed family of supported groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    /// `Z = <x>`.
    Integers,
    /// `Z^n`.
    FreeAbelian(usize),
    /// `Z/n`.
    Cyclic(u32),
    /// `S_n` on the adjacent transpositions `s_1 .. s_{n-1}`.
    Symmetric(usize),
    /// Integer Heisenberg group `<x, y, z | z = x y x^-1 y^-1, [x,z], [y,z]>`.
    Heisenberg,
    DirectProduct(Vec<Group>),
}

/// A group descriptor: kind plus generator names (flattened across factors
/// for direct products).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    kind: GroupKind,
    names: Vec<String>,
}

/// Canonical normal form of a group element.
///
/// * `Abelian` - exponent vector for `Z` and `Z^n`; residue in `0..n` for `Z/n`.
/// * `Perm` - one-line notation of a permutation.
/// * `Heisenberg` - the word `y^b z^c x^a`.
/// * `Product` - componentwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Abelian(Vec<i64>),
    Perm(Vec<u8>),
    Heisenberg { b: i64, c: i64, a: i64 },
    Product(Vec<GroupElement>),
}

impl GroupElement {
    pub fn heisenberg(b: i64, c: i64, a: i64) -> Self {
        Self::Heisenberg { b, c, a }
    }
}

/// `gen^exp`, with `gen` an index into the group's generator list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exp: i64,
}

pub type Word = Vec<Letter>;

/// A defining relator of the presentation, with a printable label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub label: String,
    pub word: Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralityMode {
    /// Decided by the center formula of the group family.
    Exact,
    /// Decided by commutation with every element of a window.
    WindowBounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Centrality {
    pub central: bool,
    pub mode: CentralityMode,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn letter(generator: usize, exp: i64) -> Letter {
    Letter { generator, exp }
}

impl Group {
    pub fn integers() -> Self {
        Self { kind: GroupKind::Integers, names: vec!["x".into()] }
    }

    pub fn free_abelian(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescriptor("free-abelian rank must be at least 1".into()));
        }
        Ok(Self { kind: GroupKind::FreeAbelian(n), names: numbered("x", n) })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescriptor("cyclic order must be at least 1".into()));
        }
        Ok(Self { kind: GroupKind::Cyclic(n), names: vec!["x".into()] })
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 16 {
            return Err(Error::InvalidDescriptor("symmetric degree must be in 1..=16".into()));
        }
        Ok(Self { kind: GroupKind::Symmetric(n), names: numbered("s", n - 1) })
    }

    pub fn heisenberg() -> Self {
        Self { kind: GroupKind::Heisenberg, names: vec!["x".into(), "y".into(), "z".into()] }
    }

    pub fn direct_product(factors: Vec<Group>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDescriptor("direct product needs at least one factor".into()));
        }
        let names = factors.iter().flat_map(|f| f.names.iter().cloned()).collect();
        let group = Self { kind: GroupKind::DirectProduct(factors), names };
        group.check_names()?;
        Ok(group)
    }

    /// Replaces the generator names. For direct products the names are
    /// pushed down into the factors.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.names.len() {
            return Err(Error::InvalidDescriptor(format!(
                "expected {} generator names, got {}",
                self.names.len(),
                names.len()
            )));
        }
        if let GroupKind::DirectProduct(factors) = &mut self.kind {
            let mut rest = names.as_slice();
            for f in factors.iter_mut() {
                let (head, tail) = rest.split_at(f.names.len());
                *f = f.clone().with_names(head.to_vec())?;
                rest = tail;
            }
        }
        self.names = names;
        self.check_names()?;
        Ok(self)
    }

    fn check_names(&self) -> Result<()> {
        for (i, n) in self.names.iter().enumerate() {
            if !is_identifier(n) || n == "e" {
                return Err(Error::InvalidDescriptor(format!("invalid generator name {n:?}")));
            }
            if self.names[..i].contains(n) {
                return Err(Error::InvalidDescriptor(format!("duplicate generator name {n:?}")));
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_finite(&self) -> bool {
        match &self.kind {
            GroupKind::Cyclic(_) | GroupKind::Symmetric(_) => true,
            GroupKind::DirectProduct(fs) => fs.iter().all(Group::is_finite),
            _ => false,
        }
    }

    pub fn identity(&self) -> GroupElement {
        match &self.kind {
            GroupKind::Integers => GroupElement::Abelian(vec![0]),
            GroupKind::FreeAbelian(n) => GroupElement::Abelian(vec![0; *n]),
            GroupKind::Cyclic(_) => GroupElement::Abelian(vec![0]),
            GroupKind::Symmetric(n) => GroupElement::Perm(perm::identity(*n)),
            GroupKind::Heisenberg => GroupElement::heisenberg(0, 0, 0),
            GroupKind::DirectProduct(fs) => GroupElement::Product(fs.iter().map(Group::identity).collect()),
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    /// The `i`-th generator as a group element.
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        if i >= self.names.len() {
            return Err(Error::InvalidDescriptor(format!("no generator with index {i}")));
        }
        Ok(match &self.kind {
            GroupKind::Integers => GroupElement::Abelian(vec![1]),
            GroupKind::FreeAbelian(n) => {
                let mut v = vec![0; *n];
                v[i] = 1;
                GroupElement::Abelian(v)
            }
            GroupKind::Cyclic(n) => GroupElement::Abelian(vec![(1 % *n) as i64]),
            GroupKind::Symmetric(n) => GroupElement::Perm(perm::adjacent(*n, i)),
            GroupKind::Heisenberg => match i {
                0 => GroupElement::heisenberg(0, 0, 1),
                1 => GroupElement::heisenberg(1, 0, 0),
                _ => GroupElement::heisenberg(0, 1, 0),
            },
            GroupKind::DirectProduct(fs) => {
                let (k, local) = self.locate(i);
                let mut parts: Vec<_> = fs.iter().map(Group::identity).collect();
                parts[k] = fs[k].generator(local)?;
                GroupElement::Product(parts)
            }
        })
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.num_generators()).map(|i| self.generator(i).expect("index in range")).collect()
    }

    /// Factor index and local generator index of a flattened generator index.
    fn locate(&self, mut i: usize) -> (usize, usize) {
        if let GroupKind::DirectProduct(fs) = &self.kind {
            for (k, f) in fs.iter().enumerate() {
                if i < f.num_generators() {
                    return (k, i);
                }
                i -= f.num_generators();
            }
        }
        (0, i)
    }

    fn offset_of(&self, factor: usize) -> usize {
        match &self.kind {
            GroupKind::DirectProduct(fs) => fs[..factor].iter().map(Group::num_generators).sum(),
            _ => 0,
        }
    }

    /// Whether `g` is a well-formed normal form for this group.
    pub fn contains(&self, g: &GroupElement) -> bool {
        match (&self.kind, g) {
            (GroupKind::Integers, GroupElement::Abelian(v)) => v.len() == 1,
            (GroupKind::FreeAbelian(n), GroupElement::Abelian(v)) => v.len() == *n,
            (GroupKind::Cyclic(n), GroupElement::Abelian(v)) => v.len() == 1 && (0..*n as i64).contains(&v[0]),
            (GroupKind::Symmetric(n), GroupElement::Perm(p)) => {
                p.len() == *n && {
                    let mut seen = vec![false; *n];
                    p.iter().all(|&i| (i as usize) < *n && !core::mem::replace(&mut seen[i as usize], true))
                }
            }
            (GroupKind::Heisenberg, GroupElement::Heisenberg { .. }) => true,
            (GroupKind::DirectProduct(fs), GroupElement::Product(parts)) => {
                fs.len() == parts.len() && fs.iter().zip(parts).all(|(f, p)| f.contains(p))
            }
            _ => false,
        }
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(self.describe()))
        }
    }

    /// Short human-readable name, e.g. `Z x S3`.
    pub fn describe(&self) -> String {
        match &self.kind {
            GroupKind::Integers => "Z".into(),
            GroupKind::FreeAbelian(n) => format!("Z^{n}"),
            GroupKind::Cyclic(n) => format!("Z/{n}"),
            GroupKind::Symmetric(n) => format!("S{n}"),
            GroupKind::Heisenberg => "H3".into(),
            GroupKind::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(Group::describe).collect();
                parts.join(" x ")
            }
        }
    }

    /// Product `gh` of two elements of this group.
    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.op(g, h))
    }

    /// Unchecked product; both operands must belong to this group.
    pub(crate) fn op(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match (&self.kind, g, h) {
            (GroupKind::Cyclic(n), GroupElement::Abelian(x), GroupElement::Abelian(y)) => {
                GroupElement::Abelian(vec![(x[0] + y[0]).rem_euclid(*n as i64)])
            }
            (_, GroupElement::Abelian(x), GroupElement::Abelian(y)) => {
                GroupElement::Abelian(x.iter().zip(y).map(|(a, b)| a + b).collect())
            }
            (_, GroupElement::Perm(p), GroupElement::Perm(q)) => GroupElement::Perm(perm::compose(p, q)),
            (_, GroupElement::Heisenberg { b, c, a }, GroupElement::Heisenberg { b: b2, c: c2, a: a2 }) => {
                // y^b z^c x^a * y^b2 z^c2 x^a2: moving x^a past y^b2 produces z^(a*b2)
                GroupElement::heisenberg(b + b2, c + c2 + a * b2, a + a2)
            }
            (GroupKind::DirectProduct(fs), GroupElement::Product(x), GroupElement::Product(y)) => {
                GroupElement::Product(fs.iter().zip(x.iter().zip(y)).map(|(f, (p, q))| f.op(p, q)).collect())
            }
            _ => panic!("operands do not belong to {}", self.describe()),
        }
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        match (&self.kind, g) {
            (GroupKind::Cyclic(n), GroupElement::Abelian(x)) => {
                GroupElement::Abelian(vec![(-x[0]).rem_euclid(*n as i64)])
            }
            (_, GroupElement::Abelian(x)) => GroupElement::Abelian(x.iter().map(|a| -a).collect()),
            (_, GroupElement::Perm(p)) => GroupElement::Perm(perm::inverse(p)),
            (_, GroupElement::Heisenberg { b, c, a }) => GroupElement::heisenberg(-b, -c + a * b, -a),
            (GroupKind::DirectProduct(fs), GroupElement::Product(x)) => {
                GroupElement::Product(fs.iter().zip(x).map(|(f, p)| f.inv(p)).collect())
            }
            _ => panic!("element does not belong to {}", self.describe()),
        }
    }

    pub fn pow(&self, g: &GroupElement, exp: i64) -> GroupElement {
        let base = if exp < 0 { self.inv(g) } else { g.clone() };
        let mut acc = self.identity();
        let mut sq = base;
        let mut k = exp.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(&acc, &sq);
            }
            sq = self.op(&sq, &sq);
            k >>= 1;
        }
        acc
    }

    pub fn commutes(&self, g: &GroupElement, h: &GroupElement) -> bool {
        self.op(g, h) == self.op(h, g)
    }

    /// `x^-1 g x`.
    pub fn conjugate(&self, g: &GroupElement, x: &GroupElement) -> GroupElement {
        self.op(&self.op(&self.inv(x), g), x)
    }

    /// The canonical word of `g` in the generators. Multiplying its letters
    /// left to right reproduces `g`.
    pub fn normal_word(&self, g: &GroupElement) -> Word {
        let mut word = Vec::new();
        self.push_normal_word(g, 0, &mut word);
        word
    }

    fn push_normal_word(&self, g: &GroupElement, offset: usize, out: &mut Word) {
        match (&self.kind, g) {
            (GroupKind::Symmetric(_), GroupElement::Perm(p)) => {
                out.extend(perm::reduced_word(p).into_iter().map(|i| letter(offset + i, 1)));
            }
            (GroupKind::Heisenberg, GroupElement::Heisenberg { b, c, a }) => {
                // order y, z, x
                for (gen, e) in [(1, *b), (2, *c), (0, *a)] {
                    if e != 0 {
                        out.push(letter(offset + gen, e));
                    }
                }
            }
            (GroupKind::DirectProduct(fs), GroupElement::Product(parts)) => {
                for (k, (f, p)) in fs.iter().zip(parts).enumerate() {
                    f.push_normal_word(p, offset + self.offset_of(k), out);
                }
            }
            (_, GroupElement::Abelian(v)) => {
                out.extend(v.iter().enumerate().filter(|(_, e)| **e != 0).map(|(i, e)| letter(offset + i, *e)));
            }
            _ => panic!("element does not belong to {}", self.describe()),
        }
    }

    /// Evaluates a word in the generators.
    pub fn eval_word(&self, word: &[Letter]) -> Result<GroupElement> {
        let mut acc = self.identity();
        for l in word {
            let g = self.generator(l.generator)?;
            acc = self.op(&acc, &self.pow(&g, l.exp));
        }
        Ok(acc)
    }

    /// Total exponent of each generator in the normal word of `g`.
    pub fn exponent_sums(&self, g: &GroupElement) -> Vec<i64> {
        let mut sums = vec![0; self.num_generators()];
        for l in self.normal_word(g) {
            sums[l.generator] += l.exp;
        }
        sums
    }

    /// Defining relators of the presentation used by this crate.
    pub fn relators(&self) -> Vec<Relator> {
        let mut out = Vec::new();
        self.push_relators(0, &mut out);
        out.into_iter().map(|word| Relator { label: self.format_word(&word), word }).collect()
    }

    fn push_relators(&self, offset: usize, out: &mut Vec<Word>) {
        let l = |g: usize, e: i64| letter(offset + g, e);
        let commutator = |i: usize, j: usize| vec![l(i, 1), l(j, 1), l(i, -1), l(j, -1)];
        match &self.kind {
            GroupKind::Integers => {}
            GroupKind::FreeAbelian(n) => {
                for i in 0..*n {
                    for j in i + 1..*n {
                        out.push(commutator(i, j));
                    }
                }
            }
            GroupKind::Cyclic(n) => out.push(vec![l(0, *n as i64)]),
            GroupKind::Symmetric(n) => {
                let m = n.saturating_sub(1);
                for i in 0..m {
                    out.push(vec![l(i, 2)]);
                }
                for i in 0..m {
                    for j in i + 1..m {
                        if j == i + 1 {
                            out.push(vec![l(i, 1), l(j, 1), l(i, 1), l(j, 1), l(i, 1), l(j, 1)]);
                        } else {
                            out.push(vec![l(i, 1), l(j, 1), l(i, 1), l(j, 1)]);
                        }
                    }
                }
            }
            GroupKind::Heisenberg => {
                // z^-1 x y x^-1 y^-1, [x, z], [y, z]
                out.push(vec![l(2, -1), l(0, 1), l(1, 1), l(0, -1), l(1, -1)]);
                out.push(commutator(0, 2));
                out.push(commutator(1, 2));
            }
            GroupKind::DirectProduct(fs) => {
                for (k, f) in fs.iter().enumerate() {
                    f.push_relators(offset + self.offset_of(k), out);
                }
                for (k, f) in fs.iter().enumerate() {
                    for (k2, f2) in fs.iter().enumerate().skip(k + 1) {
                        for i in 0..f.num_generators() {
                            for j in 0..f2.num_generators() {
                                out.push(commutator(self.offset_of(k) + i, self.offset_of(k2) + j));
                            }
                        }
                    }
                }
            }
        }
    }

    /// Exact centrality test by the center formula of each family.
    pub fn is_central(&self, g: &GroupElement) -> Centrality {
        Centrality { central: self.center_contains(g), mode: CentralityMode::Exact }
    }

    fn center_contains(&self, g: &GroupElement) -> bool {
        match (&self.kind, g) {
            (GroupKind::Integers | GroupKind::FreeAbelian(_) | GroupKind::Cyclic(_), _) => true,
            (GroupKind::Symmetric(n), _) => *n <= 2 || self.is_identity(g),
            (GroupKind::Heisenberg, GroupElement::Heisenberg { b, a, .. }) => *b == 0 && *a == 0,
            (GroupKind::DirectProduct(fs), GroupElement::Product(parts)) => {
                fs.iter().zip(parts).all(|(f, p)| f.center_contains(p))
            }
            _ => false,
        }
    }

    /// Centrality decided by commutation with every element of `window`.
    pub fn centralizes_window(&self, g: &GroupElement, window: &Window) -> Centrality {
        Centrality { central: window.iter().all(|t| self.commutes(g, t)), mode: CentralityMode::WindowBounded }
    }

    /// `{t in window : tg = gt}`, in window order.
    pub fn centralizer_in_window(&self, g: &GroupElement, window: &Window) -> Vec<GroupElement> {
        window.iter().filter(|t| self.commutes(g, t)).cloned().collect()
    }

    /// `gen^exp*gen^exp...`, or `e` for the empty word.
    pub fn format_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "e".into();
        }
        let mut s = String::new();
        for (i, l) in word.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&self.names[l.generator]);
            if l.exp != 1 {
                let _ = write!(s, "^{}", l.exp);
            }
        }
        s
    }

    pub fn format_element(&self, g: &GroupElement) -> String {
        self.format_word(&self.normal_word(g))
    }
}

impl core::fmt::Display for Group {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.describe())
    }
}

/// `Z x H`. The `Z` generator is `x`, or `t` when `H` already uses `x`.
pub fn integers_times(h: Group) -> Result<Group> {
    let mut z = Group::integers();
    if h.generator_index("x").is_some() {
        z = z.with_names(vec![String::from("t")])?;
    }
    Group::direct_product(vec![z, h])
}
