//! Exact coefficient arithmetic over the integers, the rationals and prime
//! fields.
//!
//! Every [`Coeff`] is kept in canonical form: rationals are reduced with a
//! positive denominator and prime-field residues live in `[0, p)`. Zero has
//! exactly one representation in each ring, so structural equality of
//! coefficients is ring equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest accepted prime-field modulus. Residue products must fit in `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound {MAX_MODULUS}")]
    ModulusTooLarge(u64),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(CoeffRing, CoeffRing),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inversion requested over {0}, which is not a field")]
    NotAField(CoeffRing),
    #[error("{0} is not an element of {1}")]
    NotInRing(String, CoeffRing),
}

/// A prime modulus. Only constructible through [`Prime::new`], which checks
/// primality by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime, CoeffError> {
        if p > MAX_MODULUS {
            return Err(CoeffError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The admitted base rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Integers,
    Rationals,
    PrimeField(Prime),
}

impl CoeffRing {
    pub fn prime_field(p: u64) -> Result<CoeffRing, CoeffError> {
        Prime::new(p).map(CoeffRing::PrimeField)
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoeffRing::Integers)
    }

    pub fn zero(self) -> Coeff {
        Coeff::from_int(self, 0)
    }

    pub fn one(self) -> Coeff {
        Coeff::from_int(self, 1)
    }

    /// Canonical coefficient for the raw value `num / den`.
    ///
    /// Over the integers the quotient must be integral; over a prime field
    /// the denominator must be invertible mod p.
    pub fn normalize(self, num: &BigInt, den: &BigInt) -> Result<Coeff, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        match self {
            CoeffRing::Integers => {
                let (q, r) = num.div_rem(den);
                if !r.is_zero() {
                    return Err(CoeffError::NotInRing(format!("{num}/{den}"), self));
                }
                Ok(Coeff(Repr::Int(q)))
            }
            CoeffRing::Rationals => Ok(Coeff(Repr::Rat(BigRational::new(num.clone(), den.clone())))),
            CoeffRing::PrimeField(p) => {
                let n = reduce_mod(num, p);
                let d = reduce_mod(den, p);
                if d == 0 {
                    return Err(CoeffError::DivisionByZero);
                }
                Ok(Coeff(Repr::Mod(mul_mod(n, inv_mod(d, p), p), p)))
            }
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Coeff {
        match self {
            CoeffRing::Integers => Coeff(Repr::Int(n.clone())),
            CoeffRing::Rationals => Coeff(Repr::Rat(BigRational::from_integer(n.clone()))),
            CoeffRing::PrimeField(p) => Coeff(Repr::Mod(reduce_mod(n, p), p)),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "z"),
            CoeffRing::Rationals => write!(f, "q"),
            CoeffRing::PrimeField(p) => write!(f, "fp {}", p.0),
        }
    }
}

fn reduce_mod(n: &BigInt, p: Prime) -> u64 {
    n.mod_floor(&BigInt::from(p.0)).to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: Prime) -> u64 {
    (a * b) % p.0
}

fn inv_mod(a: u64, p: Prime) -> u64 {
    let (_, s, _) = ext_gcd(&BigInt::from(a), &BigInt::from(p.0));
    reduce_mod(&s, p)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64, Prime),
}

/// An exact, canonical element of a [`CoeffRing`].
///
/// The arithmetic operator impls panic when the operands live in different
/// rings; use the `checked_*` methods where that can happen.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coeff(Repr);

impl Coeff {
    pub fn from_int(ring: CoeffRing, n: i64) -> Coeff {
        ring.from_bigint(&BigInt::from(n))
    }

    pub fn ring(&self) -> CoeffRing {
        match &self.0 {
            Repr::Int(_) => CoeffRing::Integers,
            Repr::Rat(_) => CoeffRing::Rationals,
            Repr::Mod(_, p) => CoeffRing::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Int(n) => n.is_zero(),
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod(r, _) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Int(n) => n.is_one(),
            Repr::Rat(q) => q.is_one(),
            Repr::Mod(r, _) => *r == 1,
        }
    }

    /// True for strictly negative integers and rationals; prime-field
    /// residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Int(n) => n.is_negative(),
            Repr::Rat(q) => q.is_negative(),
            Repr::Mod(..) => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match &self.0 {
            Repr::Int(n) => Coeff(Repr::Int(n.abs())),
            Repr::Rat(q) => Coeff(Repr::Rat(q.abs())),
            Repr::Mod(..) => self.clone(),
        }
    }

    /// Numerator and denominator of the canonical value (residue and 1 in a
    /// prime field).
    pub fn to_fraction(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Int(n) => (n.clone(), BigInt::one()),
            Repr::Rat(q) => (q.numer().clone(), q.denom().clone()),
            Repr::Mod(r, _) => (BigInt::from(*r), BigInt::one()),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.0 {
            Repr::Int(n) => Some(n),
            _ => None,
        }
    }

    fn same_ring(&self, other: &Coeff) -> Result<(), CoeffError> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(CoeffError::RingMismatch(self.ring(), other.ring()))
        }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        self.same_ring(other)?;
        Ok(self.add_same(other))
    }

    pub fn checked_sub(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        self.same_ring(other)?;
        Ok(self.add_same(&other.neg_same()))
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        self.same_ring(other)?;
        Ok(self.mul_same(other))
    }

    fn add_same(&self, other: &Coeff) -> Coeff {
        match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => Coeff(Repr::Int(a + b)),
            (Repr::Rat(a), Repr::Rat(b)) => Coeff(Repr::Rat(a + b)),
            (Repr::Mod(a, p), Repr::Mod(b, _)) => Coeff(Repr::Mod((a + b) % p.0, *p)),
            _ => panic!("coefficient ring mismatch: {} vs {}", self.ring(), other.ring()),
        }
    }

    fn mul_same(&self, other: &Coeff) -> Coeff {
        match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => Coeff(Repr::Int(a * b)),
            (Repr::Rat(a), Repr::Rat(b)) => Coeff(Repr::Rat(a * b)),
            (Repr::Mod(a, p), Repr::Mod(b, _)) => Coeff(Repr::Mod(mul_mod(*a, *b, *p), *p)),
            _ => panic!("coefficient ring mismatch: {} vs {}", self.ring(), other.ring()),
        }
    }

    fn neg_same(&self) -> Coeff {
        match &self.0 {
            Repr::Int(a) => Coeff(Repr::Int(-a)),
            Repr::Rat(a) => Coeff(Repr::Rat(-a)),
            Repr::Mod(a, p) => Coeff(Repr::Mod((p.0 - a) % p.0, *p)),
        }
    }

    /// Multiplicative inverse in a field.
    pub fn inv(&self) -> Result<Coeff, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        match &self.0 {
            Repr::Int(_) => Err(CoeffError::NotAField(CoeffRing::Integers)),
            Repr::Rat(q) => Ok(Coeff(Repr::Rat(q.recip()))),
            Repr::Mod(a, p) => Ok(Coeff(Repr::Mod(inv_mod(*a, *p), *p))),
        }
    }

    /// Quotient for one reduction step of `self` by a leading coefficient
    /// `lc`: exact division over a field, Euclidean division with residue in
    /// `[0, |lc|)` over the integers.
    pub(crate) fn reduction_quotient(&self, lc: &Coeff) -> Coeff {
        match (&self.0, &lc.0) {
            (Repr::Int(a), Repr::Int(b)) => {
                let (q, _) = euclid_div_rem(a, b);
                Coeff(Repr::Int(q))
            }
            _ => self * &lc.inv().expect("nonzero leading coefficient"),
        }
    }
}

/// Euclidean division `a = q*b + r` with `0 <= r < |b|`.
pub fn euclid_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let r = a.mod_floor(&b.abs());
    let q = (a - &r) / b;
    (q, r)
}

/// Extended Euclid, classical recursion with truncated division.
///
/// Returns `(g, s, t)` with `g = gcd(a, b) >= 0` and `a*s + b*t = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if b.is_zero() {
        return if a.sign() == Sign::Minus {
            (-a, -BigInt::one(), BigInt::zero())
        } else {
            (a.clone(), BigInt::one(), BigInt::zero())
        };
    }
    let (q, r) = a.div_rem(b);
    let (g, s, t) = ext_gcd(b, &r);
    let next_t = &s - &q * &t;
    (g, t, next_t)
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &'a Coeff) -> Coeff {
        self.add_same(rhs)
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &'a Coeff) -> Coeff {
        self.add_same(&rhs.neg_same())
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &'a Coeff) -> Coeff {
        self.mul_same(rhs)
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_same()
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_same()
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => a.partial_cmp(b),
            (Repr::Rat(a), Repr::Rat(b)) => a.partial_cmp(b),
            (Repr::Mod(a, p), Repr::Mod(b, q)) if p == q => a.partial_cmp(b),
            _ => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Int(n) => write!(f, "{n}"),
            Repr::Rat(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Mod(r, _) => write!(f, "{r}"),
        }
    }
}
