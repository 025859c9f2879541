//! Buchberger's algorithm over fields and strong Gröbner bases over the
//! integers, with transition matrices back to the input generators.
//!
//! Every basis element is stored together with its row of the transition
//! matrix, `basis[i] = sum_j transition[i][j] * generators[j]`. The rows are
//! only materialized for reductions that survive, so pairs reducing to zero
//! cost one division and nothing more.

use thiserror::Error;

use crate::coeffring::{Coeff, CoeffRing};
use crate::polyring::{
    divide_unchecked, g_combination, s_combination, Division, MonomialOrder, PairCombination, PolyError,
    Polynomial,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generator {index} lives in {found}, expected {expected}")]
    MixedRings { index: usize, expected: CoeffRing, found: CoeffRing },
    #[error("generator {index} has {found} variables, expected {expected}")]
    MixedArity { index: usize, expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Over ℚ or a prime field.
    Field,
    /// Strong basis over ℤ, closed under S- and G-polynomials.
    StrongInteger,
}

impl Flavor {
    pub fn of(ring: CoeffRing) -> Flavor {
        if ring.is_field() {
            Flavor::Field
        } else {
            Flavor::StrongInteger
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: CoeffRing,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    transition: Vec<Vec<Polynomial>>,
    flavor: Flavor,
    reduced: bool,
}

type Row = Vec<Polynomial>;

fn check_generators(ring: CoeffRing, generators: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>, GroebnerError> {
    generators
        .iter()
        .enumerate()
        .map(|(index, g)| {
            if g.ring() != ring {
                return Err(GroebnerError::MixedRings { index, expected: ring, found: g.ring() });
            }
            if g.nvars() != ord.nvars() {
                return Err(GroebnerError::MixedArity { index, expected: ord.nvars(), found: g.nvars() });
            }
            Ok(g.with_order(ord))
        })
        .collect()
}

fn unit_row(ring: CoeffRing, ord: &MonomialOrder, len: usize, j: usize) -> Row {
    (0..len)
        .map(|k| if k == j { Polynomial::one(ring, ord) } else { Polynomial::zero(ring, ord) })
        .collect()
}

fn scale_row(row: &[Polynomial], c: &Coeff) -> Row {
    row.iter().map(|p| p.scale(c)).collect()
}

/// `row - sum_k quotients[k] * rows[k]`
fn subtract_rows(row: &[Polynomial], quotients: &[Polynomial], rows: &[&Row]) -> Row {
    let mut out = row.to_vec();
    for (q, r) in quotients.iter().zip(rows) {
        if q.is_zero() {
            continue;
        }
        for (o, t) in out.iter_mut().zip(r.iter()) {
            if !t.is_zero() {
                *o = &*o - &(q * t);
            }
        }
    }
    out
}

fn pair_row(comb: &PairCombination, left: &Row, right: &Row) -> Row {
    left.iter()
        .zip(right)
        .map(|(a, b)| &a.mul_term(&comb.left.0, &comb.left.1) + &b.mul_term(&comb.right.0, &comb.right.1))
        .collect()
}

/// Monic over a field, positive leading coefficient over ℤ.
fn normalize_element(poly: Polynomial, row: Row) -> (Polynomial, Row) {
    let lc = match poly.leading_coeff() {
        Some(lc) => lc.clone(),
        None => return (poly, row),
    };
    let factor = if poly.ring().is_field() {
        if lc.is_one() {
            return (poly, row);
        }
        lc.inv().expect("nonzero leading coefficient")
    } else if lc.is_negative() {
        Coeff::from_int(poly.ring(), -1)
    } else {
        return (poly, row);
    };
    (poly.scale(&factor), scale_row(&row, &factor))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    S,
    G,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    kind: PairKind,
    lcm: crate::polyring::Monomial,
}

fn new_pairs(elems: &[(Polynomial, Row)], j: usize, flavor: Flavor, queue: &mut Vec<Pair>) {
    let (mj, cj) = elems[j].0.leading_term().expect("nonzero element");
    for (i, (f, _)) in elems.iter().enumerate().take(j) {
        let (mi, ci) = f.leading_term().expect("nonzero element");
        let lcm = mi.lcm(mj);
        match flavor {
            Flavor::Field => {
                if !mi.coprime(mj) {
                    queue.push(Pair { i, j, kind: PairKind::S, lcm });
                }
            }
            Flavor::StrongInteger => {
                queue.push(Pair { i, j, kind: PairKind::S, lcm: lcm.clone() });
                let (a, b) = (ci.as_integer().expect("integer"), cj.as_integer().expect("integer"));
                let divides = |x: &num_bigint::BigInt, y: &num_bigint::BigInt| (y % x) == num_bigint::BigInt::from(0);
                // if one leading coefficient divides the other the G-polynomial
                // is a monomial multiple of a basis element
                if !divides(a, b) && !divides(b, a) {
                    queue.push(Pair { i, j, kind: PairKind::G, lcm });
                }
            }
        }
    }
}

fn pop_pair(queue: &mut Vec<Pair>, ord: &MonomialOrder) -> Option<Pair> {
    let best = queue
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            ord.cmp(&a.lcm, &b.lcm)
                .then(a.j.cmp(&b.j))
                .then(a.i.cmp(&b.i))
                .then(a.kind.cmp(&b.kind))
        })
        .map(|(k, _)| k)?;
    Some(queue.swap_remove(best))
}

/// Compute the reduced Gröbner basis (strong basis over ℤ) of `generators`.
///
/// Zero generators are allowed and simply never appear in the basis; their
/// transition columns stay zero.
pub fn buchberger(ring: CoeffRing, generators: &[Polynomial], ord: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let generators = check_generators(ring, generators, ord)?;
    let flavor = Flavor::of(ring);
    let m = generators.len();
    let mut elems: Vec<(Polynomial, Row)> = Vec::new();
    let mut queue = Vec::new();
    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        elems.push(normalize_element(g.clone(), unit_row(ring, ord, m, j)));
        new_pairs(&elems, elems.len() - 1, flavor, &mut queue);
    }
    while let Some(pair) = pop_pair(&mut queue, ord) {
        let (f, g) = (&elems[pair.i].0, &elems[pair.j].0);
        let comb = match pair.kind {
            PairKind::S => s_combination(f, g)?,
            PairKind::G => g_combination(f, g)?,
        };
        let divisors: Vec<&Polynomial> = elems.iter().map(|(p, _)| p).collect();
        let Division { quotients, remainder } = divide_unchecked(&comb.poly, &divisors);
        if remainder.is_zero() {
            continue;
        }
        let start = pair_row(&comb, &elems[pair.i].1, &elems[pair.j].1);
        let rows: Vec<&Row> = elems.iter().map(|(_, r)| r).collect();
        let row = subtract_rows(&start, &quotients, &rows);
        elems.push(normalize_element(remainder, row));
        new_pairs(&elems, elems.len() - 1, flavor, &mut queue);
    }
    let (basis, transition) = elems.into_iter().unzip();
    let gb = GroebnerBasis { ring, order: ord.clone(), generators, basis, transition, flavor, reduced: false };
    Ok(autoreduce(&gb))
}

/// Interreduce a basis: repeatedly replace each element by its remainder
/// modulo the others until nothing changes, then normalize leading
/// coefficients and sort by descending leading monomial.
///
/// On a Gröbner basis over a field this yields the unique reduced basis of
/// the ideal; over ℤ it yields the interreduced strong basis with Euclidean
/// residues.
pub fn autoreduce(gb: &GroebnerBasis) -> GroebnerBasis {
    let mut elems: Vec<(Polynomial, Row)> = gb
        .basis
        .iter()
        .cloned()
        .zip(gb.transition.iter().cloned())
        .filter(|(p, _)| !p.is_zero())
        .map(|(p, r)| normalize_element(p, r))
        .collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < elems.len() {
            let others: Vec<&Polynomial> =
                elems.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, (p, _))| p).collect();
            let div = divide_unchecked(&elems[i].0, &others);
            if div.quotients.iter().all(Polynomial::is_zero) {
                i += 1;
                continue;
            }
            changed = true;
            let rows: Vec<&Row> = elems.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, (_, r))| r).collect();
            let row = subtract_rows(&elems[i].1, &div.quotients, &rows);
            if div.remainder.is_zero() {
                elems.remove(i);
            } else {
                elems[i] = normalize_element(div.remainder, row);
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    let ord = &gb.order;
    elems.sort_by(|(a, _), (b, _)| {
        let (ma, mb) = (a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero"));
        ord.cmp(mb, ma)
    });
    let (basis, transition) = elems.into_iter().unzip();
    GroebnerBasis {
        ring: gb.ring,
        order: gb.order.clone(),
        generators: gb.generators.clone(),
        basis,
        transition,
        flavor: gb.flavor,
        reduced: true,
    }
}

/// Check the Gröbner property and the transition identity.
///
/// Every S-polynomial (and G-polynomial over ℤ) of basis pairs must divide
/// to remainder zero, and every transition row must re-expand exactly to its
/// basis element.
pub fn is_groebner(gb: &GroebnerBasis) -> bool {
    if gb.basis.iter().any(Polynomial::is_zero) || gb.transition.len() != gb.basis.len() {
        return false;
    }
    for (b, row) in gb.basis.iter().zip(&gb.transition) {
        if row.len() != gb.generators.len() {
            return false;
        }
        let mut acc = Polynomial::zero(gb.ring, &gb.order);
        for (h, q) in row.iter().zip(&gb.generators) {
            acc = &acc + &(h * q);
        }
        if acc != *b {
            return false;
        }
    }
    let reduces_to_zero = |p: &Polynomial| divide_unchecked(p, &gb.basis).remainder.is_zero();
    for j in 0..gb.basis.len() {
        for i in 0..j {
            let (f, g) = (&gb.basis[i], &gb.basis[j]);
            let s = s_combination(f, g).expect("compatible nonzero basis elements");
            if !reduces_to_zero(&s.poly) {
                return false;
            }
            if gb.flavor == Flavor::StrongInteger {
                let gp = g_combination(f, g).expect("integer basis elements");
                if !reduces_to_zero(&gp.poly) {
                    return false;
                }
            }
        }
    }
    true
}

impl GroebnerBasis {
    /// Wrap generators as a candidate basis with the identity transition,
    /// without running any completion. Useful for checking whether a given
    /// set already is a basis.
    pub fn from_generators(ring: CoeffRing, generators: &[Polynomial], ord: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
        let generators = check_generators(ring, generators, ord)?;
        let m = generators.len();
        let (basis, transition) = generators
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(j, g)| (g.clone(), unit_row(ring, ord, m, j)))
            .unzip();
        Ok(GroebnerBasis { ring, order: ord.clone(), generators, basis, transition, flavor: Flavor::of(ring), reduced: false })
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn transition(&self) -> &[Vec<Polynomial>] {
        &self.transition
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Divide `p` by the basis (re-sorting `p` into the basis order first).
    pub fn reduce(&self, p: &Polynomial) -> Division {
        divide_unchecked(&p.with_order(&self.order), &self.basis)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).remainder.is_zero()
    }

    /// Pull quotients with respect to the basis back to cofactors of the
    /// original generators through the transition matrix.
    pub fn pull_back(&self, quotients: &[Polynomial]) -> Vec<Polynomial> {
        let mut cofactors = vec![Polynomial::zero(self.ring, &self.order); self.generators.len()];
        for (q, row) in quotients.iter().zip(&self.transition) {
            if q.is_zero() {
                continue;
            }
            for (c, t) in cofactors.iter_mut().zip(row) {
                if !t.is_zero() {
                    *c = &*c + &(q * t);
                }
            }
        }
        cofactors
    }

    /// Whether the basis consists of the single constant 1.
    pub fn is_unit_ideal(&self) -> bool {
        matches!(self.basis.as_slice(), [b] if b.terms().len() == 1 && b.leading_monomial().is_some_and(|m| m.is_one()) && b.leading_coeff().is_some_and(Coeff::is_one))
    }
}
