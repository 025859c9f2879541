//! Equality witnesses for finitely presented algebras.
//!
//! A [`CofactorCertificate`] claims `poly(lhs) - poly(rhs) = sum h_j * q_j`
//! in the free polynomial ring. It can be expanded into a step-by-step
//! [`Derivation`]. Both forms are checked in [`check`], which uses only term
//! evaluation and polynomial arithmetic.

mod check;
mod json;
mod make;

use std::fmt;

pub use check::{check_derivation, verify_certificate, InvalidDerivation, InvalidReason, Rejection};
pub use json::FormatError;
pub use make::{make_certificate, CertifyError};

use crate::polyring::Polynomial;
use crate::presentation::Presentation;
use crate::termalg::{poly_to_term, term_to_poly, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofactorCertificate {
    pub presentation: Presentation,
    pub lhs: Term,
    pub rhs: Term,
    pub cofactors: Vec<Polynomial>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Replace an occurrence of the relation's term by `0`.
    ToZero,
    /// Replace an occurrence of `0` by the relation's term.
    FromZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Both sides evaluate to the same free polynomial.
    FreeRing,
    /// Rewrite relation `relation` at a root-relative child-index path.
    Relation { relation: usize, position: Vec<usize>, direction: Direction },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub from: Term,
    pub to: Term,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub presentation: Presentation,
    pub steps: Vec<Step>,
}

impl CofactorCertificate {
    pub fn is_valid(&self) -> bool {
        verify_certificate(self).is_ok()
    }
}

/// Expand a certificate into a chaining derivation:
///
/// `lhs = T1 = R + H_1*Q_1 + ... = R + 0 + ... = R = rhs`
///
/// where `T1` and `R` are canonical readbacks and each `Q_j` is replaced by
/// `0` with one relation step. Only nonzero cofactors contribute a summand;
/// steps that would not change the term are omitted.
pub fn expand_derivation(c: &CofactorCertificate) -> Result<Derivation, Rejection> {
    verify_certificate(c)?;
    let pres = &c.presentation;
    let mut steps = Vec::new();
    let push = |steps: &mut Vec<Step>, from: &Term, to: Term, rule: Rule| {
        if *from != to {
            steps.push(Step { from: from.clone(), to, rule });
        }
    };

    let used: Vec<usize> = (0..c.cofactors.len()).filter(|&j| !c.cofactors[j].is_zero()).collect();
    if used.is_empty() {
        steps.push(Step { from: c.lhs.clone(), to: c.rhs.clone(), rule: Rule::FreeRing });
        return Ok(Derivation { presentation: pres.clone(), steps });
    }

    let order = pres.order();
    let lhs_poly = term_to_poly(&c.lhs, pres).expect("verified");
    let rhs_poly = term_to_poly(&c.rhs, pres).expect("verified");
    let t1 = poly_to_term(&lhs_poly).into_term();
    let r = poly_to_term(&rhs_poly).into_term();
    let spelled = used.iter().fold(r.clone(), |acc, &j| {
        let h = poly_to_term(&c.cofactors[j].with_order(order)).into_term();
        Term::add(acc, Term::mul(h, pres.relation_term(j)))
    });

    push(&mut steps, &c.lhs, t1.clone(), Rule::FreeRing);
    let from = steps.last().map_or(c.lhs.clone(), |s| s.to.clone());
    push(&mut steps, &from, spelled.clone(), Rule::FreeRing);

    // Summand k (0-based) of K sits under K-1-k left spines, then `Mul` child 1.
    let k_total = used.len();
    let mut cur = spelled;
    for (k, &j) in used.iter().enumerate() {
        let mut position = vec![0; k_total - 1 - k];
        position.extend([1, 1]);
        let next = cur.replace(&position, Term::Zero).expect("summand position exists");
        steps.push(Step {
            from: cur,
            to: next.clone(),
            rule: Rule::Relation { relation: j, position, direction: Direction::ToZero },
        });
        cur = next;
    }
    push(&mut steps, &cur, r.clone(), Rule::FreeRing);
    push(&mut steps, &r, c.rhs.clone(), Rule::FreeRing);
    Ok(Derivation { presentation: pres.clone(), steps })
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.presentation.varnames();
        for (i, s) in self.steps.iter().enumerate() {
            match &s.rule {
                Rule::FreeRing => writeln!(f, "{i}: free")?,
                Rule::Relation { relation, position, direction } => {
                    let dir = match direction {
                        Direction::ToZero => "to-zero",
                        Direction::FromZero => "from-zero",
                    };
                    let path: Vec<String> = position.iter().map(usize::to_string).collect();
                    writeln!(f, "{i}: rel {relation} at [{}] {dir}", path.join(","))?
                }
            }
            writeln!(f, "   {}", s.from.display(names))?;
            writeln!(f, "   = {}", s.to.display(names))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::termalg::parse_term;

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    fn cert(p: &Presentation, t: &str, u: &str) -> Result<CofactorCertificate, CertifyError> {
        let gb = buchberger(p.ring(), p.relations(), p.order()).unwrap();
        make_certificate(&parse_term(t, p).unwrap(), &parse_term(u, p).unwrap(), p, &gb)
    }

    #[test]
    fn x4_certificate() {
        let p = pres("ring q\nvars x\nrels x^2 - 1\n");
        let c = cert(&p, "x^4", "1").unwrap();
        assert_eq!(crate::termalg::print_poly(&c.cofactors[0], p.varnames()), "x^2 + 1");
        assert!(c.is_valid());
        let d = expand_derivation(&c).unwrap();
        let rel_steps = d.steps.iter().filter(|s| matches!(s.rule, Rule::Relation { .. })).count();
        assert_eq!(rel_steps, 1);
        assert_eq!(check_derivation(&d).unwrap(), (c.lhs.clone(), c.rhs.clone()));
        assert!(matches!(cert(&p, "x", "0"), Err(CertifyError::NotEqual)));
    }

    #[test]
    fn trivial_certificate_is_one_free_step() {
        let p = pres("ring q\nvars x\nrels x^2 - 1\n");
        let c = cert(&p, "x + 1", "x + 1").unwrap();
        assert!(c.cofactors.iter().all(Polynomial::is_zero));
        let d = expand_derivation(&c).unwrap();
        assert_eq!(d.steps.len(), 1);
        assert_eq!(d.steps[0].rule, Rule::FreeRing);
        assert!(check_derivation(&d).is_ok());
    }

    #[test]
    fn two_relations_two_steps() {
        let p = pres("ring z\nvars x y\nrels x^2 - 1, y^2 - 1\n");
        let c = cert(&p, "x^2 + y^2", "2").unwrap();
        assert!(c.cofactors.iter().all(|h| !h.is_zero()));
        let d = expand_derivation(&c).unwrap();
        let rel_steps = d.steps.iter().filter(|s| matches!(s.rule, Rule::Relation { .. })).count();
        assert_eq!(rel_steps, 2);
        assert!(check_derivation(&d).is_ok());
    }

    #[test]
    fn hand_built_certificate() {
        let p = pres("ring q\nvars x\nrels x^2 - 1\n");
        let c = CofactorCertificate {
            presentation: p.clone(),
            lhs: parse_term("x^4", &p).unwrap(),
            rhs: Term::One,
            cofactors: vec![crate::termalg::parse_poly("x^2 + 1", &p).unwrap()],
        };
        assert!(c.is_valid());
        let mut bad = c.clone();
        bad.cofactors[0] = &bad.cofactors[0] + &crate::polyring::Polynomial::one(p.ring(), p.order());
        assert_eq!(verify_certificate(&bad), Err(Rejection::IdentityFails));
        let mut short = c.clone();
        short.cofactors.clear();
        assert_eq!(verify_certificate(&short), Err(Rejection::CofactorCount { expected: 1, found: 0 }));
        assert!(matches!(expand_derivation(&bad), Err(Rejection::IdentityFails)));
    }

    #[test]
    fn derivation_failures() {
        let p = pres("ring q\nvars x\nrels x^2 - 1\n");
        let d = expand_derivation(&cert(&p, "x^4", "1").unwrap()).unwrap();

        let mut broken = d.clone();
        broken.steps[1].from = Term::Var(0);
        assert_eq!(check_derivation(&broken).unwrap_err().step, 1);

        let wrong = Derivation {
            presentation: p.clone(),
            steps: vec![Step { from: parse_term("x + 1", &p).unwrap(), to: Term::Var(0), rule: Rule::FreeRing }],
        };
        assert_eq!(check_derivation(&wrong).unwrap_err().reason, InvalidReason::FreeRingMismatch);

        let empty = Derivation { presentation: p.clone(), steps: Vec::new() };
        assert_eq!(check_derivation(&empty).unwrap_err().reason, InvalidReason::Empty);

        let rel = d.steps.iter().position(|s| matches!(s.rule, Rule::Relation { .. })).unwrap();
        let mut moved = d.clone();
        if let Rule::Relation { position, .. } = &mut moved.steps[rel].rule {
            position.pop();
        }
        assert_eq!(check_derivation(&moved).unwrap_err().step, rel);

        // Running a relation step backwards is also a valid derivation.
        let s = &d.steps[rel];
        let Rule::Relation { relation, position, .. } = s.rule.clone() else { unreachable!() };
        let back = Derivation {
            presentation: p.clone(),
            steps: vec![Step {
                from: s.to.clone(),
                to: s.from.clone(),
                rule: Rule::Relation { relation, position, direction: Direction::FromZero },
            }],
        };
        assert!(check_derivation(&back).is_ok());
    }

    #[test]
    fn checker_does_not_use_groebner() {
        let check = include_str!("check.rs");
        assert!(!check.contains(concat!("groebner", "::")));
        assert!(!check.contains(concat!("make", "::")));
        let expand = include_str!("mod.rs").split("#[cfg(test)]").next().unwrap();
        assert!(!expand.contains(concat!("groebner", "::")));
        for src in [include_str!("../termalg.rs"), include_str!("../presentation.rs"), include_str!("../polyring.rs")] {
            assert!(!src.contains(concat!("groebner", "::")));
        }
    }
}
