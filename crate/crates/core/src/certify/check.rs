//! Checkers for certificates and derivations. Only term evaluation and
//! free polynomial arithmetic are used here.

use thiserror::Error;

use super::{CofactorCertificate, Derivation, Direction, Rule};
use crate::polyring::Polynomial;
use crate::termalg::{poly_to_term, term_to_poly, Term, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("expected {expected} cofactors, found {found}")]
    CofactorCount { expected: usize, found: usize },
    #[error("cofactor {0} is over a different ring or variable set")]
    CofactorShape(usize),
    #[error("ill-formed term: {0}")]
    Term(#[from] TermError),
    #[error("lhs - rhs differs from the cofactor combination")]
    IdentityFails,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidReason {
    #[error("empty derivation")]
    Empty,
    #[error("step does not start where the previous one ended")]
    BrokenChain,
    #[error("sides are different free polynomials")]
    FreeRingMismatch,
    #[error("ill-formed term: {0}")]
    Term(TermError),
    #[error("no relation {0}")]
    UnknownRelation(usize),
    #[error("position does not exist")]
    BadPosition,
    #[error("subterm at position is not the expected one")]
    SubtermMismatch,
    #[error("result is not the rewritten term")]
    ResultMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {step}: {reason}")]
pub struct InvalidDerivation {
    pub step: usize,
    pub reason: InvalidReason,
}

/// Accept iff `poly(lhs) - poly(rhs) = sum h_j * q_j` holds exactly.
pub fn verify_certificate(c: &CofactorCertificate) -> Result<(), Rejection> {
    let pres = &c.presentation;
    let rels = pres.relations();
    if c.cofactors.len() != rels.len() {
        return Err(Rejection::CofactorCount { expected: rels.len(), found: c.cofactors.len() });
    }
    let zero = Polynomial::zero(pres.ring(), pres.order());
    let mut combination = zero.clone();
    for (j, (h, q)) in c.cofactors.iter().zip(rels).enumerate() {
        zero.compatible(h).map_err(|_| Rejection::CofactorShape(j))?;
        combination = &combination + &(&h.with_order(pres.order()) * q);
    }
    let diff = &term_to_poly(&c.lhs, pres)? - &term_to_poly(&c.rhs, pres)?;
    if diff == combination {
        Ok(())
    } else {
        Err(Rejection::IdentityFails)
    }
}

/// Replay a derivation and return its endpoints.
pub fn check_derivation(d: &Derivation) -> Result<(Term, Term), InvalidDerivation> {
    let pres = &d.presentation;
    let fail = |step, reason| Err(InvalidDerivation { step, reason });
    if d.steps.is_empty() {
        return fail(0, InvalidReason::Empty);
    }
    for (i, s) in d.steps.iter().enumerate() {
        if i > 0 && d.steps[i - 1].to != s.from {
            return fail(i, InvalidReason::BrokenChain);
        }
        let eval = |t: &Term| term_to_poly(t, pres).map_err(|e| InvalidDerivation { step: i, reason: InvalidReason::Term(e) });
        let (from, to) = (eval(&s.from)?, eval(&s.to)?);
        match &s.rule {
            Rule::FreeRing => {
                if from != to {
                    return fail(i, InvalidReason::FreeRingMismatch);
                }
            }
            Rule::Relation { relation, position, direction } => {
                let Some(q) = pres.relations().get(*relation) else {
                    return fail(i, InvalidReason::UnknownRelation(*relation));
                };
                let q_term = poly_to_term(q).into_term();
                let (expected, replacement) = match direction {
                    Direction::ToZero => (&q_term, Term::Zero),
                    Direction::FromZero => (&Term::Zero, q_term.clone()),
                };
                match s.from.subterm(position) {
                    None => return fail(i, InvalidReason::BadPosition),
                    Some(sub) if sub != expected => return fail(i, InvalidReason::SubtermMismatch),
                    Some(_) => {}
                }
                if s.from.replace(position, replacement).as_ref() != Some(&s.to) {
                    return fail(i, InvalidReason::ResultMismatch);
                }
            }
        }
    }
    let first = &d.steps[0].from;
    let last = &d.steps[d.steps.len() - 1].to;
    Ok((first.clone(), last.clone()))
}
