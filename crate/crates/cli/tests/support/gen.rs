//! Seeded random presentations and terms.

use fpnf_core::coeffring::{Coeff, CoeffRing};
use fpnf_core::polyring::OrderKind;
use fpnf_core::presentation::Presentation;
use fpnf_core::termalg::Term;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 3] = ["x", "y", "z"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rings() -> Vec<CoeffRing> {
    vec![
        CoeffRing::Integers,
        CoeffRing::Rationals,
        CoeffRing::prime_field(2).unwrap(),
        CoeffRing::prime_field(5).unwrap(),
    ]
}

pub fn ring_name(r: CoeffRing) -> String {
    r.to_string()
}

fn coefficient(rng: &mut ChaCha8Rng, ring: CoeffRing) -> String {
    let c: i64 = *[-3, -2, -1, 1, 2, 3].choose(rng).unwrap();
    if ring == CoeffRing::Rationals && rng.gen_bool(0.25) {
        format!("({c}/2)")
    } else {
        format!("({c})")
    }
}

fn monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> String {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; n];
    for _ in 0..deg {
        exps[rng.gen_range(0..n)] += 1;
    }
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| format!("{}^{e}", NAMES[i]))
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// A random polynomial in the term syntax with 1 to `max_terms` terms.
pub fn poly_text(rng: &mut ChaCha8Rng, ring: CoeffRing, n: usize, max_terms: usize, max_deg: u32) -> String {
    let k = rng.gen_range(1..=max_terms);
    (0..k)
        .map(|_| format!("{}*{}", coefficient(rng, ring), monomial(rng, n, max_deg)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub struct Shape {
    pub max_vars: usize,
    pub max_rels: usize,
    pub max_terms: usize,
    pub max_deg: u32,
}

pub const SMALL: Shape = Shape { max_vars: 3, max_rels: 3, max_terms: 3, max_deg: 4 };

pub fn presentation_text(rng: &mut ChaCha8Rng, ring: CoeffRing, order: OrderKind, shape: &Shape) -> String {
    let n = rng.gen_range(1..=shape.max_vars);
    let m = rng.gen_range(0..=shape.max_rels);
    let rels: Vec<String> = (0..m).map(|_| poly_text(rng, ring, n, shape.max_terms, shape.max_deg)).collect();
    let mut text = format!("ring {}\norder {}\nvars {}\n", ring, order.name(), NAMES[..n].join(" "));
    if !rels.is_empty() {
        text.push_str(&format!("rels {}\n", rels.join(", ")));
    }
    text
}

pub fn presentation(rng: &mut ChaCha8Rng, ring: CoeffRing, order: OrderKind, shape: &Shape) -> Presentation {
    Presentation::parse(&presentation_text(rng, ring, order, shape)).expect("generated presentations parse")
}

/// A random term over `n` variables whose polynomial has degree at most
/// `budget`.
pub fn term(rng: &mut ChaCha8Rng, ring: CoeffRing, n: usize, depth: u32, budget: u32) -> Term {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..5) {
            0 => Term::Zero,
            1 => Term::One,
            2 => Term::constant(&Coeff::from_int(ring, rng.gen_range(2..5))),
            _ if budget == 0 || n == 0 => Term::constant(&Coeff::from_int(ring, rng.gen_range(-3..4))),
            _ => Term::Var(rng.gen_range(0..n)),
        };
    }
    match rng.gen_range(0..6) {
        0 => Term::neg(term(rng, ring, n, depth - 1, budget)),
        1 | 2 => Term::add(term(rng, ring, n, depth - 1, budget), term(rng, ring, n, depth - 1, budget)),
        3 | 4 => {
            let left = rng.gen_range(0..=budget);
            Term::mul(term(rng, ring, n, depth - 1, left), term(rng, ring, n, depth - 1, budget - left))
        }
        _ => {
            let k = rng.gen_range(2..=3);
            Term::pow(term(rng, ring, n, depth - 1, budget / k), k)
        }
    }
}
