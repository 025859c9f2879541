//! Dense univariate polynomial arithmetic over Q and F_5, independent of the
//! kernel: Euclidean division and monic gcd.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_fraction(num: &BigInt, den: &BigInt) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
    /// Literal in the kernel's term syntax.
    fn text(&self) -> String;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_fraction(num: &BigInt, den: &BigInt) -> Self {
        BigRational::new(num.clone(), den.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn text(&self) -> String {
        format!("({self})")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct F5(pub u8);

impl Field for F5 {
    fn zero() -> Self {
        F5(0)
    }
    fn one() -> Self {
        F5(1)
    }
    fn from_fraction(num: &BigInt, den: &BigInt) -> Self {
        let r = |b: &BigInt| F5(((b % 5i32 + 5i32) % 5i32).to_string().parse().unwrap());
        r(num).mul(&r(den).inv())
    }
    fn add(&self, o: &Self) -> Self {
        F5((self.0 + o.0) % 5)
    }
    fn sub(&self, o: &Self) -> Self {
        F5((self.0 + 5 - o.0) % 5)
    }
    fn mul(&self, o: &Self) -> Self {
        F5(self.0 * o.0 % 5)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        (1..5).map(F5).find(|c| self.mul(c) == F5(1)).unwrap()
    }
    fn text(&self) -> String {
        self.0.to_string()
    }
}

/// Coefficients by ascending degree, with no trailing zeros.
pub type Dense<F> = Vec<F>;

pub fn trim<F: Field>(mut p: Dense<F>) -> Dense<F> {
    while p.last().is_some_and(Field::is_zero) {
        p.pop();
    }
    p
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Dense<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(out)
}

pub fn rem<F: Field>(a: &[F], b: &[F]) -> Dense<F> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let lead_inv = b.last().unwrap().inv();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().mul(&lead_inv);
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&c.mul(bi));
        }
        r = trim(r);
    }
    r
}

pub fn monic<F: Field>(p: Dense<F>) -> Dense<F> {
    match p.last() {
        None => p,
        Some(l) => {
            let inv = l.inv();
            p.iter().map(|c| c.mul(&inv)).collect()
        }
    }
}

pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Dense<F> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

pub fn divides<F: Field>(g: &[F], p: &[F]) -> bool {
    if g.is_empty() {
        return trim(p.to_vec()).is_empty();
    }
    rem(p, g).is_empty()
}

/// The polynomial in the kernel's term syntax over the variable `x`.
pub fn text<F: Field>(p: &[F]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{}*x^{k}", c.text()))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
