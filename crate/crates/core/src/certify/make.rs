use thiserror::Error;

use super::CofactorCertificate;
use crate::groebner::GroebnerBasis;
use crate::presentation::Presentation;
use crate::termalg::{term_to_poly, Term, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("the terms are not equal in the quotient")]
    NotEqual,
    #[error("basis was not computed from this presentation")]
    BasisMismatch,
    #[error(transparent)]
    Term(#[from] TermError),
}

/// Certify `t ~ u` using a basis computed from the relations of `pres`.
/// Cofactors refer to the presentation's relations, not to basis elements.
pub fn make_certificate(
    t: &Term,
    u: &Term,
    pres: &Presentation,
    gb: &GroebnerBasis,
) -> Result<CofactorCertificate, CertifyError> {
    if gb.ring() != pres.ring() || gb.order() != pres.order() || gb.generators() != pres.relations() {
        return Err(CertifyError::BasisMismatch);
    }
    let diff = &term_to_poly(t, pres)? - &term_to_poly(u, pres)?;
    let division = gb.reduce(&diff);
    if !division.remainder.is_zero() {
        return Err(CertifyError::NotEqual);
    }
    Ok(CofactorCertificate {
        presentation: pres.clone(),
        lhs: t.clone(),
        rhs: u.clone(),
        cofactors: gb.pull_back(&division.quotients),
    })
}
