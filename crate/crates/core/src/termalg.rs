//! The free term algebra of ring expressions: syntax trees, the text
//! grammar, evaluation into the free polynomial ring and canonical readback.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := literal | ident | '(' expr ')' | '-' atom
//! ```
//!
//! `a - b` is read as `a + (-b)` and `a^k` as the left-nested product
//! `((a*a)*a)...`, so trees only use the ring signature. The printer is the
//! exact inverse of the parser: `parse(print(t)) == t` for every tree.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeffring::{Coeff, CoeffError, CoeffRing};
use crate::polyring::{Monomial, Polynomial};
use crate::presentation::Presentation;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("invalid literal `{literal}` at {position}: {source}")]
    BadLiteral { literal: String, position: usize, source: CoeffError },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("constant from {found} used over {expected}")]
    ConstantRing { expected: CoeffRing, found: CoeffRing },
}

/// A numeric constant other than 0 and 1, and not negative. Negation is
/// always explicit in the tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal(Coeff);

impl Literal {
    pub fn new(c: Coeff) -> Option<Literal> {
        (!c.is_zero() && !c.is_one() && !c.is_negative()).then_some(Literal(c))
    }

    pub fn value(&self) -> &Coeff {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Const(Literal),
    Var(usize),
    Neg(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Term {
        Term::add(a, Term::neg(b))
    }

    /// `a^k` as the parser desugars it.
    pub fn pow(a: Term, k: u32) -> Term {
        match k {
            0 => Term::One,
            1 => a,
            _ => {
                let mut acc = Term::mul(a.clone(), a.clone());
                for _ in 2..k {
                    acc = Term::mul(acc, a.clone());
                }
                acc
            }
        }
    }

    /// The tree spelling a coefficient: `0`, `1`, a literal, or a negated one.
    pub fn constant(c: &Coeff) -> Term {
        if c.is_zero() {
            Term::Zero
        } else if c.is_negative() {
            Term::neg(Term::constant(&c.abs()))
        } else if c.is_one() {
            Term::One
        } else {
            Term::Const(Literal(c.clone()))
        }
    }

    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Neg(a) => vec![a],
            Term::Add(a, b) | Term::Mul(a, b) => vec![a, b],
            _ => Vec::new(),
        }
    }

    /// Subterm at a root-relative path of child indices.
    pub fn subterm(&self, path: &[usize]) -> Option<&Term> {
        let mut cur = self;
        for &k in path {
            cur = *cur.children().get(k)?;
        }
        Some(cur)
    }

    /// Copy of `self` with the subterm at `path` replaced.
    pub fn replace(&self, path: &[usize], with: Term) -> Option<Term> {
        let Some((&k, rest)) = path.split_first() else {
            return Some(with);
        };
        match (self, k) {
            (Term::Neg(a), 0) => Some(Term::neg(a.replace(rest, with)?)),
            (Term::Add(a, b), 0) => Some(Term::add(a.replace(rest, with)?, (**b).clone())),
            (Term::Add(a, b), 1) => Some(Term::add((**a).clone(), b.replace(rest, with)?)),
            (Term::Mul(a, b), 0) => Some(Term::mul(a.replace(rest, with)?, (**b).clone())),
            (Term::Mul(a, b), 1) => Some(Term::mul((**a).clone(), b.replace(rest, with)?)),
            _ => None,
        }
    }

    /// Substitute `images[i]` for every `Var(i)`.
    pub fn substitute(&self, images: &[Term]) -> Term {
        match self {
            Term::Var(i) => images[*i].clone(),
            Term::Neg(a) => Term::neg(a.substitute(images)),
            Term::Add(a, b) => Term::add(a.substitute(images), b.substitute(images)),
            Term::Mul(a, b) => Term::mul(a.substitute(images), b.substitute(images)),
            other => other.clone(),
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Check variable indices and constant rings against a presentation.
    pub fn check(&self, pres: &Presentation) -> Result<(), TermError> {
        match self {
            Term::Var(i) if *i >= pres.nvars() => {
                Err(TermError::VariableOutOfRange { index: *i, nvars: pres.nvars() })
            }
            Term::Const(l) if l.0.ring() != pres.ring() => {
                Err(TermError::ConstantRing { expected: pres.ring(), found: l.0.ring() })
            }
            _ => self.children().into_iter().try_for_each(|c| c.check(pres)),
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> TermDisplay<'a> {
        TermDisplay { term: self, names }
    }

    /// Base and exponent if `self` is a left-nested product of `k >= 2`
    /// copies of one factor.
    fn as_power(&self) -> Option<(&Term, u32)> {
        let Term::Mul(left, base) = self else {
            return None;
        };
        let mut k = 2;
        let mut cur: &Term = left;
        loop {
            if cur == &**base {
                return Some((base, k));
            }
            match cur {
                Term::Mul(l, r) if r == base => {
                    cur = l;
                    k += 1;
                }
                _ => return None,
            }
        }
    }
}

/// A term that is the canonical readback of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalTerm(Term);

impl NormalTerm {
    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn into_term(self) -> Term {
        self.0
    }
}

impl Deref for NormalTerm {
    type Target = Term;
    fn deref(&self) -> &Term {
        &self.0
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    names: &'a [String],
}

impl TermDisplay<'_> {
    fn name(&self, i: usize) -> String {
        self.names.get(i).cloned().unwrap_or_else(|| format!("x{i}"))
    }

    fn expr(&self, t: &Term, out: &mut String) {
        match t {
            Term::Add(l, r) => {
                self.expr(l, out);
                match &**r {
                    Term::Neg(inner) => {
                        out.push_str(" - ");
                        self.term(inner, out);
                    }
                    other => {
                        out.push_str(" + ");
                        self.term(other, out);
                    }
                }
            }
            _ => self.term(t, out),
        }
    }

    fn term(&self, t: &Term, out: &mut String) {
        if t.as_power().is_some() {
            return self.factor(t, out);
        }
        match t {
            Term::Mul(l, r) => {
                self.term(l, out);
                out.push('*');
                self.factor(r, out);
            }
            _ => self.factor(t, out),
        }
    }

    fn factor(&self, t: &Term, out: &mut String) {
        match t.as_power() {
            Some((base, k)) => {
                self.atom(base, out);
                out.push('^');
                out.push_str(&k.to_string());
            }
            None => self.atom(t, out),
        }
    }

    fn atom(&self, t: &Term, out: &mut String) {
        match t {
            Term::Zero => out.push('0'),
            Term::One => out.push('1'),
            Term::Const(l) => out.push_str(&l.0.to_string()),
            Term::Var(i) => out.push_str(&self.name(*i)),
            Term::Neg(a) => {
                out.push('-');
                self.atom(a, out);
            }
            Term::Add(..) | Term::Mul(..) => {
                out.push('(');
                self.expr(t, out);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.expr(self.term, &mut out);
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, TermError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                toks.push((Tok::Num(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(TermError::Syntax { position: i, message: format!("unexpected character `{ch}`") });
            }
        };
        toks.push((tok, start));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    pres: &'a Presentation,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Syntax { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Term, TermError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Term::add(acc, self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Term::sub(acc, self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = Term::mul(acc, self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Term, TermError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.peek() {
            Some(Tok::Num(s)) if !s.contains('/') => s.parse::<u32>().ok().filter(|&e| e <= MAX_EXPONENT),
            _ => return self.error("expected a natural-number exponent"),
        };
        match exp {
            Some(e) => {
                self.pos += 1;
                Ok(Term::pow(base, e))
            }
            None => self.error(format!("exponent exceeds {MAX_EXPONENT}")),
        }
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        let position = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                literal(&s, position, self.pres.ring())
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.pres.var_index(&name) {
                    Some(i) => Ok(Term::Var(i)),
                    None => Err(TermError::UnknownVariable { name, position }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Term::neg(self.atom()?))
            }
            Some(_) => self.error("expected a literal, variable, `(` or `-`"),
            None => self.error("unexpected end of input"),
        }
    }
}

fn literal(text: &str, position: usize, ring: CoeffRing) -> Result<Term, TermError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let parse = |s: &str| s.parse::<BigInt>().expect("tokenizer yields digits");
    let c = ring
        .normalize(&parse(num), &parse(den))
        .map_err(|source| TermError::BadLiteral { literal: text.to_string(), position, source })?;
    Ok(Term::constant(&c))
}

/// Parse a term over the variables and coefficient ring of `pres`.
pub fn parse_term(text: &str, pres: &Presentation) -> Result<Term, TermError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), pres };
    let t = p.expr()?;
    if p.pos != p.toks.len() {
        return p.error("unexpected trailing input");
    }
    Ok(t)
}

/// Parse a polynomial written in the term syntax.
pub fn parse_poly(text: &str, pres: &Presentation) -> Result<Polynomial, TermError> {
    term_to_poly(&parse_term(text, pres)?, pres)
}

/// The evaluation map into the free polynomial ring of `pres`.
pub fn term_to_poly(t: &Term, pres: &Presentation) -> Result<Polynomial, TermError> {
    t.check(pres)?;
    Ok(eval(t, pres))
}

fn eval(t: &Term, pres: &Presentation) -> Polynomial {
    let (ring, ord) = (pres.ring(), pres.order());
    match t {
        Term::Zero => Polynomial::zero(ring, ord),
        Term::One => Polynomial::one(ring, ord),
        Term::Const(l) => Polynomial::constant(l.0.clone(), ord),
        Term::Var(i) => Polynomial::var(ring, ord, *i),
        Term::Neg(a) => -&eval(a, pres),
        Term::Add(a, b) => &eval(a, pres) + &eval(b, pres),
        Term::Mul(a, b) => &eval(a, pres) * &eval(b, pres),
    }
}

fn literal_term(c: &Coeff) -> Term {
    if c.is_one() {
        Term::One
    } else {
        Term::Const(Literal(c.clone()))
    }
}

fn monomial_factors(m: &Monomial) -> Vec<Term> {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| Term::pow(Term::Var(v), e))
        .collect()
}

fn product(first: Term, rest: impl IntoIterator<Item = Term>) -> Term {
    rest.into_iter().fold(first, Term::mul)
}

/// Unsigned spelling of `|c| * m`: coefficient first (omitted when 1), then
/// the variables in declaration order with explicit powers.
fn monomial_term(m: &Monomial, abs: &Coeff) -> Term {
    let mut factors = monomial_factors(m).into_iter();
    if abs.is_one() {
        match factors.next() {
            Some(first) => product(first, factors),
            None => Term::One,
        }
    } else {
        product(literal_term(abs), factors)
    }
}

/// Spelling of a negative leading monomial: `-x*y` when the first variable
/// has exponent one and the coefficient is -1, otherwise `-c*...` with an
/// explicit coefficient (`-1*x^2`, since `-x^2` would mean `(-x)^2`).
fn negative_leading_term(m: &Monomial, abs: &Coeff) -> Term {
    let mut factors = monomial_factors(m).into_iter();
    match factors.next() {
        None => Term::neg(literal_term(abs)),
        Some(Term::Var(v)) if abs.is_one() => product(Term::neg(Term::Var(v)), factors),
        Some(first) => product(Term::neg(literal_term(abs)), std::iter::once(first).chain(factors)),
    }
}

/// Canonical readback: monomials in descending order of the polynomial's
/// monomial order, each spelled canonically, joined by `+` and `-`.
pub fn poly_to_term(p: &Polynomial) -> NormalTerm {
    let mut terms = p.terms().iter();
    let Some((m, c)) = terms.next() else {
        return NormalTerm(Term::Zero);
    };
    let first = if c.is_negative() { negative_leading_term(m, &c.abs()) } else { monomial_term(m, c) };
    let t = terms.fold(first, |acc, (m, c)| {
        if c.is_negative() {
            Term::sub(acc, monomial_term(m, &c.abs()))
        } else {
            Term::add(acc, monomial_term(m, c))
        }
    });
    NormalTerm(t)
}

/// Text spelling of a polynomial: the printed canonical readback.
pub fn print_poly(p: &Polynomial, names: &[String]) -> String {
    poly_to_term(p).display(names).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::OrderKind;

    fn pres(ring: CoeffRing, vars: &[&str]) -> Presentation {
        Presentation::new(ring, vars.iter().map(|s| s.to_string()).collect(), OrderKind::Degrevlex, &[]).unwrap()
    }

    fn show(t: &Term, p: &Presentation) -> String {
        t.display(p.varnames()).to_string()
    }

    #[test]
    fn parse_examples() {
        let p = pres(CoeffRing::Rationals, &["x"]);
        let x = || Term::Var(0);
        assert_eq!(parse_term("x^2 - 1", &p).unwrap(), Term::add(Term::mul(x(), x()), Term::neg(Term::One)));
        assert_eq!(
            parse_term("y", &p),
            Err(TermError::UnknownVariable { name: "y".into(), position: 0 })
        );
        assert_eq!(
            parse_term("(x+1)*(x-1)", &p).unwrap(),
            Term::mul(Term::add(x(), Term::One), Term::add(x(), Term::neg(Term::One)))
        );
        assert_eq!(parse_term("x^0", &p).unwrap(), Term::One);
        assert!(matches!(parse_term("2x", &p), Err(TermError::Syntax { position: 1, .. })));
        assert!(matches!(parse_term("x +", &p), Err(TermError::Syntax { position: 3, .. })));
        assert!(matches!(parse_term("(x", &p), Err(TermError::Syntax { .. })));
        assert!(matches!(parse_term("x $ 1", &p), Err(TermError::Syntax { position: 2, .. })));
        assert!(matches!(parse_term("x^2000", &p), Err(TermError::Syntax { .. })));
        assert!(matches!(parse_term("1/0", &p), Err(TermError::BadLiteral { .. })));
        let z = pres(CoeffRing::Integers, &["x"]);
        assert!(matches!(parse_term("3/4", &z), Err(TermError::BadLiteral { .. })));
        assert_eq!(parse_term("4/2", &z).unwrap(), Term::Const(Literal::new(Coeff::from_int(CoeffRing::Integers, 2)).unwrap()));
    }

    #[test]
    fn evaluation_examples() {
        let p = pres(CoeffRing::Rationals, &["x"]);
        let a = parse_poly("(x+1)*(x-1)", &p).unwrap();
        assert_eq!(a, parse_poly("x^2 - 1", &p).unwrap());
        assert_eq!(print_poly(&a, p.varnames()), "x^2 - 1");
        let f5 = pres(CoeffRing::prime_field(5).unwrap(), &["x"]);
        assert_eq!(parse_poly("2*3", &f5).unwrap(), Polynomial::one(f5.ring(), f5.order()));
        assert_eq!(parse_poly("x + 0", &p).unwrap(), Polynomial::var(p.ring(), p.order(), 0));
    }

    #[test]
    fn readback_examples() {
        let p = pres(CoeffRing::Rationals, &["x", "y", "z"]);
        let zero = Polynomial::zero(p.ring(), p.order());
        assert_eq!(poly_to_term(&zero).term(), &Term::Zero);
        let cases = [
            ("x^2 - 1", "x^2 - 1"),
            ("1 + 2*x + 5*x^3", "5*x^3 + 2*x + 1"),
            ("3*x^2*y - 1/2*z + 4", "3*x^2*y - 1/2*z + 4"),
            ("-x*y + 1", "-x*y + 1"),
            ("-x^2 - 1", "x^2 - 1"),
            ("-(x^2) - 1", "-1*x^2 - 1"),
            ("-3*y^2*z", "-3*y^2*z"),
            ("-7", "-7"),
            ("-1", "-1"),
            ("0*x", "0"),
            ("y*x", "x*y"),
        ];
        for (input, expected) in cases {
            let poly = parse_poly(input, &p).unwrap();
            let nt = poly_to_term(&poly);
            assert_eq!(show(&nt, &p), expected, "readback of {input}");
            assert_eq!(parse_term(expected, &p).unwrap(), *nt.term());
            assert_eq!(term_to_poly(&nt, &p).unwrap(), poly);
        }
        let f5 = pres(CoeffRing::prime_field(5).unwrap(), &["x"]);
        assert_eq!(print_poly(&parse_poly("x^2 - 1", &f5).unwrap(), f5.varnames()), "x^2 + 4");
    }

    #[test]
    fn printer_handles_awkward_trees() {
        let p = pres(CoeffRing::Integers, &["x", "y"]);
        let x = || Term::Var(0);
        let y = || Term::Var(1);
        let trees = [
            Term::mul(x(), Term::mul(x(), x())),
            Term::mul(Term::mul(x(), x()), Term::mul(x(), x())),
            Term::mul(y(), Term::mul(Term::mul(x(), x()), Term::mul(x(), x()))),
            Term::neg(Term::neg(Term::Const(Literal::new(Coeff::from_int(CoeffRing::Integers, 3)).unwrap()))),
            Term::add(x(), Term::neg(Term::neg(y()))),
            Term::add(x(), Term::add(y(), Term::One)),
            Term::mul(Term::neg(x()), Term::neg(x())),
            Term::neg(Term::mul(x(), x())),
            Term::sub(Term::Zero, Term::add(x(), y())),
            Term::mul(Term::add(x(), y()), Term::add(x(), y())),
        ];
        for t in trees {
            let s = show(&t, &p);
            assert_eq!(parse_term(&s, &p).unwrap(), t, "round trip of {s}");
        }
        assert_eq!(show(&Term::mul(Term::mul(x(), x()), Term::mul(x(), x())), &p), "(x^2)^2");
        assert_eq!(show(&Term::mul(x(), Term::mul(x(), x())), &p), "x*x^2");
    }

    #[test]
    fn positions_and_replacement() {
        let p = pres(CoeffRing::Integers, &["x", "y"]);
        let t = parse_term("x + y*(x - 1)", &p).unwrap();
        assert_eq!(t.subterm(&[1, 1]), Some(&parse_term("x - 1", &p).unwrap()));
        let r = t.replace(&[1, 1], Term::Zero).unwrap();
        assert_eq!(show(&r, &p), "x + y*0");
        assert_eq!(t.subterm(&[2]), None);
        assert_eq!(t.replace(&[0, 0], Term::Zero), None);
    }
    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_term(nvars: usize, ring: CoeffRing) -> impl Strategy<Value = Term> {
            let leaf = prop_oneof![
                Just(Term::Zero),
                Just(Term::One),
                (2i64..9).prop_map(move |c| Term::constant(&Coeff::from_int(ring, c))),
                (0..nvars).prop_map(Term::Var),
            ];
            leaf.prop_recursive(5, 40, 2, |inner| {
                prop_oneof![
                    inner.clone().prop_map(Term::neg),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::mul(a, b)),
                    (inner, 2u32..4).prop_map(|(a, k)| Term::pow(a, k)),
                ]
            })
        }

        fn rings() -> impl Strategy<Value = CoeffRing> {
            prop_oneof![
                Just(CoeffRing::Integers),
                Just(CoeffRing::Rationals),
                Just(CoeffRing::prime_field(7).unwrap()),
            ]
        }

        fn ctx() -> impl Strategy<Value = (Presentation, Term, Term)> {
            rings().prop_flat_map(|ring| {
                let p = pres(ring, &["x", "y", "z"]);
                (Just(p), arb_term(3, ring), arb_term(3, ring))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(500))]

            #[test]
            fn print_parse_inverse((p, t, _) in ctx()) {
                let s = show(&t, &p);
                prop_assert_eq!(parse_term(&s, &p).unwrap(), t.clone());
                let spaced: String = s.chars().flat_map(|c| [c, ' ']).collect();
                prop_assert_eq!(parse_term(&spaced, &p).unwrap(), t);
            }

            #[test]
            fn evaluation_is_a_homomorphism((p, t, u) in ctx()) {
                let (a, b) = (term_to_poly(&t, &p).unwrap(), term_to_poly(&u, &p).unwrap());
                prop_assert_eq!(term_to_poly(&Term::add(t.clone(), u.clone()), &p).unwrap(), &a + &b);
                prop_assert_eq!(term_to_poly(&Term::mul(t.clone(), u.clone()), &p).unwrap(), &a * &b);
                prop_assert_eq!(term_to_poly(&Term::neg(t), &p).unwrap(), -&a);
            }

            #[test]
            fn readback_is_a_section((p, t, _) in ctx()) {
                let a = term_to_poly(&t, &p).unwrap();
                let nt = poly_to_term(&a);
                prop_assert_eq!(term_to_poly(&nt, &p).unwrap(), a.clone());
                let s = show(&nt, &p);
                prop_assert_eq!(parse_term(&s, &p).unwrap(), nt.term().clone());
                prop_assert_eq!(poly_to_term(&term_to_poly(&nt, &p).unwrap()), nt);
            }
        }
    }
}
