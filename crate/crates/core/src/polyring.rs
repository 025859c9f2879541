//! Sparse multivariate polynomials in canonical form.
//!
//! A [`Polynomial`] carries its coefficient ring, variable count and monomial
//! order. Terms are kept strictly descending in that order with nonzero
//! coefficients, so two polynomials are equal iff their term lists are.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::coeffring::{ext_gcd, Coeff, CoeffRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(CoeffRing, CoeffRing),
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
    #[error("monomial order mismatch")]
    OrderMismatch,
    #[error("zero polynomial in divisor list at position {0}")]
    ZeroDivisor(usize),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("g-polynomials are only defined over the integers")]
    NotIntegers,
    #[error("invalid variable precedence {0:?}")]
    BadPrecedence(Vec<usize>),
}

/// Exponent vector of a monomial. Its length is the ambient variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grlex,
    Degrevlex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Degrevlex => "degrevlex",
        }
    }

    pub fn from_name(name: &str) -> Option<OrderKind> {
        match name {
            "lex" => Some(OrderKind::Lex),
            "grlex" => Some(OrderKind::Grlex),
            "degrevlex" => Some(OrderKind::Degrevlex),
            _ => None,
        }
    }
}

/// A monomial order together with a variable precedence. `precedence[0]` is
/// the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Natural precedence: the first variable is the largest.
    pub fn new(kind: OrderKind, nvars: usize) -> MonomialOrder {
        MonomialOrder { kind, precedence: (0..nvars).collect() }
    }

    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<MonomialOrder, PolyError> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= seen.len() || seen[v] {
                return Err(PolyError::BadPrecedence(precedence));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn is_natural(&self) -> bool {
        self.precedence.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let lex = || {
            self.precedence
                .iter()
                .map(|&v| a.0[v].cmp(&b.0[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::Grlex => a.degree().cmp(&b.degree()).then_with(lex),
            OrderKind::Degrevlex => a.degree().cmp(&b.degree()).then_with(|| {
                // last differing exponent: the smaller one is the larger monomial
                self.precedence
                    .iter()
                    .rev()
                    .map(|&v| b.0[v].cmp(&a.0[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }
}

/// Compare two monomials under `ord`, checking arities.
pub fn mono_cmp(a: &Monomial, b: &Monomial, ord: &MonomialOrder) -> Result<Ordering, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::ArityMismatch(a.nvars(), b.nvars()));
    }
    if a.nvars() != ord.nvars() {
        return Err(PolyError::ArityMismatch(a.nvars(), ord.nvars()));
    }
    Ok(ord.cmp(a, b))
}

pub type Term = (Monomial, Coeff);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: CoeffRing,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: CoeffRing, order: &MonomialOrder) -> Polynomial {
        Polynomial { ring, order: order.clone(), terms: Vec::new() }
    }

    pub fn constant(c: Coeff, order: &MonomialOrder) -> Polynomial {
        let ring = c.ring();
        Polynomial::from_terms(ring, order, vec![(Monomial::one(order.nvars()), c)])
    }

    pub fn one(ring: CoeffRing, order: &MonomialOrder) -> Polynomial {
        Polynomial::constant(ring.one(), order)
    }

    pub fn var(ring: CoeffRing, order: &MonomialOrder, index: usize) -> Polynomial {
        Polynomial::from_terms(ring, order, vec![(Monomial::var(order.nvars(), index), ring.one())])
    }

    /// Canonicalize an arbitrary term list: sort, merge equal monomials and
    /// drop zero coefficients.
    pub fn from_terms(ring: CoeffRing, order: &MonomialOrder, terms: Vec<Term>) -> Polynomial {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), order.nvars());
            debug_assert_eq!(c.ring(), ring);
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring, order: order.clone(), terms }
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Same polynomial, re-sorted for another order over the same variables.
    pub fn with_order(&self, order: &MonomialOrder) -> Polynomial {
        assert_eq!(order.nvars(), self.nvars(), "order arity");
        if *order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: self.ring, order: order.clone(), terms }
    }

    pub fn compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch(self.ring, other.ring));
        }
        if self.nvars() != other.nvars() {
            return Err(PolyError::ArityMismatch(self.nvars(), other.nvars()));
        }
        if self.order != other.order {
            return Err(PolyError::OrderMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.compatible(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.compatible(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.compatible(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring, &self.order);
        }
        let terms = self.terms.iter().map(|(m, d)| (m.clone(), d * c)).filter(|(_, d)| !d.is_zero()).collect();
        Polynomial { ring: self.ring, order: self.order.clone(), terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring, &self.order);
        }
        // multiplication by a monomial preserves the order of terms
        let terms = self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).filter(|(_, d)| !d.is_zero()).collect();
        Polynomial { ring: self.ring, order: self.order.clone(), terms }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring, &self.order);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute polynomials over another variable set (same coefficient
    /// ring) for the variables.
    pub fn substitute(&self, images: &[Polynomial], target: &MonomialOrder) -> Polynomial {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let mut acc = Polynomial::zero(self.ring, target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone(), target);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[v].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let ord = &self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let take_b = |c: &Coeff| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
        Polynomial { ring: self.ring, order: self.order.clone(), terms: out }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        debug_assert!(self.compatible(rhs).is_ok());
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        debug_assert!(self.compatible(rhs).is_ok());
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        debug_assert!(self.compatible(rhs).is_ok());
        let mut products = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                products.push((m.mul(n), c * d));
            }
        }
        Polynomial::from_terms(self.ring, &self.order, products)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring, order: self.order.clone(), terms }
    }
}

/// Result of multivariate division: `p = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division with cofactors.
///
/// The largest reducible monomial is always reduced first, by the first
/// divisor in list order whose leading monomial divides it and whose
/// reduction quotient is nonzero. Over the integers a term `c*m` reduces by
/// a divisor with leading coefficient `a` only when `c` lies outside
/// `[0, |a|)`, leaving the Euclidean residue behind.
pub fn divide(p: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Result<Division, PolyError> {
    for (i, d) in divisors.iter().enumerate() {
        if d.is_zero() {
            return Err(PolyError::ZeroDivisor(i));
        }
        if d.ring != p.ring {
            return Err(PolyError::RingMismatch(p.ring, d.ring));
        }
        if d.nvars() != p.nvars() {
            return Err(PolyError::ArityMismatch(p.nvars(), d.nvars()));
        }
    }
    if ord.nvars() != p.nvars() {
        return Err(PolyError::ArityMismatch(p.nvars(), ord.nvars()));
    }
    let reorder = |q: &'_ Polynomial| -> Polynomial { q.with_order(ord) };
    let divisors: Vec<Cow<'_, Polynomial>> = divisors
        .iter()
        .map(|d| if d.order == *ord { Cow::Borrowed(d) } else { Cow::Owned(reorder(d)) })
        .collect();
    Ok(divide_unchecked(&reorder(p), &divisors))
}

pub(crate) fn divide_unchecked<D: AsRef<Polynomial>>(p: &Polynomial, divisors: &[D]) -> Division {
    let ring = p.ring;
    let ord = &p.order;
    let mut work = p.clone();
    let mut quotient_terms: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut remainder: Vec<Term> = Vec::new();
    while let Some((m, c)) = work.terms.first().cloned() {
        let step = divisors.iter().enumerate().find_map(|(i, d)| {
            let d = d.as_ref();
            let (lm, lc) = d.leading_term().expect("nonzero divisor");
            let shift = m.div(lm)?;
            let q = c.reduction_quotient(lc);
            (!q.is_zero()).then_some((i, shift, q))
        });
        match step {
            Some((i, shift, q)) => {
                let sub = divisors[i].as_ref().mul_term(&shift, &q);
                work = &work - &sub;
                quotient_terms[i].push((shift, q));
            }
            None => {
                remainder.push(work.terms.remove(0));
            }
        }
    }
    Division {
        quotients: quotient_terms.into_iter().map(|t| Polynomial::from_terms(ring, ord, t)).collect(),
        remainder: Polynomial { ring, order: ord.clone(), terms: remainder },
    }
}

impl AsRef<Polynomial> for Polynomial {
    fn as_ref(&self) -> &Polynomial {
        self
    }
}

/// A pair combination `left.1 * left.0 * f + right.1 * right.0 * g`.
#[derive(Debug, Clone)]
pub(crate) struct PairCombination {
    pub poly: Polynomial,
    pub left: Term,
    pub right: Term,
}

fn leading_pair<'a>(f: &'a Polynomial, g: &'a Polynomial) -> Result<(&'a Term, &'a Term), PolyError> {
    f.compatible(g)?;
    match (f.leading_term(), g.leading_term()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(PolyError::ZeroInput),
    }
}

pub(crate) fn s_combination(f: &Polynomial, g: &Polynomial) -> Result<PairCombination, PolyError> {
    let ((mf, cf), (mg, cg)) = leading_pair(f, g)?;
    let lcm = mf.lcm(mg);
    let sf = lcm.div(mf).expect("lcm divisible");
    let sg = lcm.div(mg).expect("lcm divisible");
    let (kf, kg) = match (cf.as_integer(), cg.as_integer()) {
        (Some(a), Some(b)) => {
            let l = num_integer::Integer::lcm(a, b);
            let ring = f.ring;
            (ring.from_bigint(&(&l / a)), ring.from_bigint(&(&l / b)))
        }
        _ => (cf.inv().expect("field"), cg.inv().expect("field")),
    };
    let kg = -kg;
    let poly = &f.mul_term(&sf, &kf) + &g.mul_term(&sg, &kg);
    Ok(PairCombination { poly, left: (sf, kf), right: (sg, kg) })
}

pub(crate) fn g_combination(f: &Polynomial, g: &Polynomial) -> Result<PairCombination, PolyError> {
    let ((mf, cf), (mg, cg)) = leading_pair(f, g)?;
    let (a, b) = match (cf.as_integer(), cg.as_integer()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(PolyError::NotIntegers),
    };
    let lcm = mf.lcm(mg);
    let sf = lcm.div(mf).expect("lcm divisible");
    let sg = lcm.div(mg).expect("lcm divisible");
    let (_, s, t) = ext_gcd(a, b);
    let ring = f.ring;
    let (kf, kg) = (ring.from_bigint(&s), ring.from_bigint(&t));
    let poly = &f.mul_term(&sf, &kf) + &g.mul_term(&sg, &kg);
    Ok(PairCombination { poly, left: (sf, kf), right: (sg, kg) })
}

/// S-polynomial: cancels the leading terms of `f` and `g` over the lcm of
/// their leading monomials (and, over the integers, of their leading
/// coefficients).
pub fn s_poly(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial, PolyError> {
    Ok(s_combination(&f.with_order(ord), &g.with_order(ord))?.poly)
}

/// G-polynomial over the integers: `s*(L/m_f)*f + t*(L/m_g)*g` where
/// `s*a + t*b = gcd(a, b)` for the leading coefficients `a`, `b`.
pub fn g_poly(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial, PolyError> {
    if f.ring != CoeffRing::Integers {
        return Err(PolyError::NotIntegers);
    }
    Ok(g_combination(&f.with_order(ord), &g.with_order(ord))?.poly)
}
