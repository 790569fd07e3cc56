//! Text syntax for group elements, algebra elements, morphisms and
//! derivation specifications.
//!
//! Words are `gen^exp*gen^exp...` (`e` is the identity). Algebra elements are
//! signed sums of `coeff*word` terms with coefficients `p/q` or, in
//! parentheses, `p/q+r/si`.

use std::fmt;

use dgalg_core::coeff::Rational;
use dgalg_core::group::Letter;
use dgalg_core::{AlgebraElement, GaussianRational, Group, GroupElement, Morphism, SignedElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line and column (in characters).
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = Result<T, ParseError>;

/// How a central derivation's `tau` is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TauSpec {
    Parity(GaussianRational),
    Additive(Vec<(usize, GaussianRational)>),
    Table(Vec<(GroupElement, GaussianRational)>),
}

/// A parsed derivation specification; `Ref` names another configured
/// derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationSpec {
    Zero,
    Inner(GroupElement),
    Central { z: GroupElement, tau: TauSpec },
    Table(Vec<(usize, AlgebraElement)>),
    Translate { z: GroupElement, coefficient: GaussianRational },
    LinComb(Vec<(GaussianRational, DerivationSpec)>),
    Ref(String),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> ParseResult<T> {
        self.error_at(self.pos, message)
    }

    fn error_at<T>(&self, pos: usize, message: impl Into<String>) -> ParseResult<T> {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Err(ParseError { line, column, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        let boundary =
            rest[word.len().min(rest.len())..].chars().next().is_none_or(|c| !(c.is_ascii_alphanumeric() || c == '_'));
        if rest.starts_with(word) && boundary {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> ParseResult<()> {
        if self.peek().is_some() {
            self.error("unexpected trailing input")
        } else {
            Ok(())
        }
    }

    fn identifier(&mut self) -> ParseResult<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return self.error("expected an identifier");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn digits(&mut self) -> ParseResult<i128> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.error("expected a number");
        }
        let start = self.pos;
        self.pos += len;
        rest[..len].parse().or_else(|_| self.error_at(start, "number out of range"))
    }

    fn integer(&mut self) -> ParseResult<i64> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return self.error("expected an integer");
        }
        let n = self.digits()?;
        let n = if negative { -n } else { n };
        i64::try_from(n).or_else(|_| self.error_at(start, "integer out of range"))
    }

    /// `p` or `p/q` without a sign.
    fn unsigned_rational(&mut self) -> ParseResult<Rational> {
        let num = self.digits()?;
        if self.eat('/') {
            let at = self.pos;
            let den = self.digits()?;
            if den == 0 {
                return self.error_at(at, "zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn starts_number(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    /// A real coefficient, or a parenthesized Gaussian rational.
    fn coefficient(&mut self) -> ParseResult<GaussianRational> {
        if self.eat('(') {
            let c = self.gaussian()?;
            self.expect(')')?;
            return Ok(c);
        }
        let negative = self.eat('-');
        let r = self.unsigned_rational()?;
        Ok(GaussianRational::new(if negative { -r } else { r }, Rational::from_integer(0)))
    }

    /// `a`, `bi`, `a+bi`, `a-bi`, with `a`, `b` optionally signed rationals
    /// and `i` alone meaning `1i`.
    fn gaussian(&mut self) -> ParseResult<GaussianRational> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        let sign = |p: &mut Self| {
            if p.eat('-') {
                -1
            } else {
                p.eat('+');
                1
            }
        };
        let s1 = sign(self);
        let first = if self.starts_number() { Some(self.unsigned_rational()?) } else { None };
        if self.eat('i') {
            let im = first.unwrap_or(one) * Rational::from_integer(s1);
            return Ok(GaussianRational::new(zero, im));
        }
        let Some(re) = first else {
            return self.error("expected a coefficient");
        };
        let re = re * Rational::from_integer(s1);
        match self.peek() {
            Some('+') | Some('-') => {
                let s2 = sign(self);
                let im = if self.starts_number() { self.unsigned_rational()? } else { one };
                self.expect('i')?;
                Ok(GaussianRational::new(re, im * Rational::from_integer(s2)))
            }
            _ => Ok(GaussianRational::new(re, zero)),
        }
    }

    fn word(&mut self, group: &Group) -> ParseResult<Vec<Letter>> {
        let mut letters = Vec::new();
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            let name = self.identifier()?;
            let exp = if self.eat('^') { self.integer()? } else { 1 };
            if name == "e" {
                // identity factor
            } else {
                let Some(generator) = group.generator_index(name) else {
                    return self.error_at(at, format!("unknown generator '{name}'"));
                };
                letters.push(Letter { generator, exp });
            }
            if !self.eat('*') {
                return Ok(letters);
            }
        }
    }

    fn element(&mut self, group: &Group) -> ParseResult<GroupElement> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let word = self.word(group)?;
        match group.eval_word(&word) {
            Ok(g) => Ok(g),
            Err(e) => self.error_at(at, e.to_string()),
        }
    }

    fn term(&mut self, group: &Group) -> ParseResult<(GaussianRational, GroupElement)> {
        let c = if self.starts_number() || self.peek() == Some('(') {
            let c = self.coefficient()?;
            if !self.eat('*') {
                return Ok((c, group.identity()));
            }
            c
        } else {
            GaussianRational::one()
        };
        Ok((c, self.element(group)?))
    }

    fn algebra(&mut self, group: &Group) -> ParseResult<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        let mut negative = self.eat('-');
        loop {
            let (c, g) = self.term(group)?;
            out.add_term(g, if negative { -c } else { c });
            negative = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => return Ok(out),
            };
            self.pos += 1;
        }
    }

    fn signed_element(&mut self, group: &Group) -> ParseResult<SignedElement> {
        let negative = self.eat('-');
        Ok(SignedElement { element: self.element(group)?, negative })
    }

    fn tau(&mut self, group: &Group) -> ParseResult<TauSpec> {
        if self.keyword("parity") {
            self.expect('(')?;
            let c = self.gaussian()?;
            self.expect(')')?;
            return Ok(TauSpec::Parity(c));
        }
        if self.keyword("additive") {
            let entries = self.braced(|p| {
                let at = p.pos;
                let name = p.identifier()?;
                let Some(i) = group.generator_index(name) else {
                    return p.error_at(at, format!("unknown generator '{name}'"));
                };
                p.expect(':')?;
                Ok((i, p.gaussian()?))
            })?;
            return Ok(TauSpec::Additive(entries));
        }
        if self.keyword("table") {
            let entries = self.braced(|p| {
                let g = p.element(group)?;
                p.expect(':')?;
                Ok((g, p.gaussian()?))
            })?;
            return Ok(TauSpec::Table(entries));
        }
        self.error("expected parity(...), additive{...} or table{...}")
    }

    /// `{ item, item, ... }`, possibly empty.
    fn braced<T>(&mut self, mut item: impl FnMut(&mut Self) -> ParseResult<T>) -> ParseResult<Vec<T>> {
        self.expect('{')?;
        let mut out = Vec::new();
        if self.eat('}') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat('}') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn assignment(&mut self, key: &str) -> ParseResult<()> {
        if !self.keyword(key) {
            return self.error(format!("expected '{key}='"));
        }
        self.expect('=')
    }

    fn derivation(&mut self, group: &Group) -> ParseResult<DerivationSpec> {
        if self.eat('@') {
            return Ok(DerivationSpec::Ref(self.identifier()?.to_string()));
        }
        if self.keyword("zero") {
            return Ok(DerivationSpec::Zero);
        }
        if self.keyword("inner") {
            return Ok(DerivationSpec::Inner(self.element(group)?));
        }
        if self.keyword("central") {
            self.assignment("z")?;
            let z = self.element(group)?;
            self.assignment("tau")?;
            let tau = self.tau(group)?;
            return Ok(DerivationSpec::Central { z, tau });
        }
        if self.keyword("translate") {
            self.assignment("z")?;
            let z = self.element(group)?;
            self.assignment("c")?;
            let coefficient = self.gaussian()?;
            return Ok(DerivationSpec::Translate { z, coefficient });
        }
        if self.keyword("table") {
            let entries = self.braced(|p| {
                let at = p.pos;
                let name = p.identifier()?;
                let Some(i) = group.generator_index(name) else {
                    return p.error_at(at, format!("unknown generator '{name}'"));
                };
                p.expect(':')?;
                Ok((i, p.algebra(group)?))
            })?;
            return Ok(DerivationSpec::Table(entries));
        }
        if self.keyword("lincomb") {
            self.expect('[')?;
            let mut terms = Vec::new();
            if !self.eat(']') {
                loop {
                    let c = self.coefficient()?;
                    self.expect(':')?;
                    terms.push((c, self.derivation(group)?));
                    if self.eat(']') {
                        break;
                    }
                    self.expect(';')?;
                }
            }
            return Ok(DerivationSpec::LinComb(terms));
        }
        self.error("expected zero, inner, central, table, translate, lincomb or @name")
    }
}

fn whole<T>(src: &str, f: impl FnOnce(&mut Parser<'_>) -> ParseResult<T>) -> ParseResult<T> {
    let mut p = Parser::new(src);
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn parse_element(group: &Group, src: &str) -> ParseResult<GroupElement> {
    whole(src, |p| p.element(group))
}

pub fn parse_coefficient(src: &str) -> ParseResult<GaussianRational> {
    whole(src, |p| p.gaussian())
}

pub fn parse_algebra(group: &Group, src: &str) -> ParseResult<AlgebraElement> {
    whole(src, |p| p.algebra(group))
}

/// `(u ; v)` with signed words.
pub fn parse_morphism(group: &Group, src: &str) -> ParseResult<Morphism> {
    whole(src, |p| {
        p.expect('(')?;
        let u = p.signed_element(group)?;
        p.expect(';')?;
        let v = p.signed_element(group)?;
        p.expect(')')?;
        Ok(Morphism::with_signed_v(u, v))
    })
}

pub fn parse_derivation(group: &Group, src: &str) -> ParseResult<DerivationSpec> {
    whole(src, |p| p.derivation(group))
}

pub fn format_signed(group: &Group, u: &SignedElement) -> String {
    let word = group.format_element(&u.element);
    if u.negative {
        format!("-{word}")
    } else {
        word
    }
}

pub fn format_morphism(group: &Group, m: &Morphism) -> String {
    format!("({} ; {})", format_signed(group, &m.u), format_signed(group, &m.v))
}

/// Prints `a` so that [`parse_algebra`] reads it back exactly.
pub fn format_algebra(group: &Group, a: &AlgebraElement) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (g, c)) in a.iter().enumerate() {
        let word = group.format_element(g);
        let identity = group.is_identity(g);
        let (negative, body) = if c.is_real() {
            let negative = c.re < Rational::from_integer(0);
            let abs = if negative { -*c } else { *c };
            let body = match (abs == GaussianRational::one(), identity) {
                (true, true) => "1".to_string(),
                (true, false) => word,
                (false, true) => abs.to_string(),
                (false, false) => format!("{abs}*{word}"),
            };
            (negative, body)
        } else {
            (false, format!("({c})*{word}"))
        };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}
