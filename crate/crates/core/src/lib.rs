//! Certified normal forms for finitely presented commutative algebras over
//! the integers, the rationals and prime fields, and for finitely presented
//! bounded distributive lattices.

pub mod certify;
pub mod coeffring;
pub mod distlat;
pub mod fpquot;
pub mod groebner;
pub mod polyring;
pub mod presentation;
pub mod termalg;

pub use certify::{
    check_derivation, expand_derivation, make_certificate, verify_certificate, CofactorCertificate, Derivation,
};
pub use coeffring::{Coeff, CoeffRing};
pub use distlat::{lat_congruence, lat_enumerate, lat_nf_free, Antichain, LatticePresentation, LatticeTerm};
pub use fpquot::{FpAlgebra, Morphism, QuotOp};
pub use groebner::{autoreduce, buchberger, is_groebner, GroebnerBasis};
pub use polyring::{Monomial, MonomialOrder, OrderKind, Polynomial};
pub use presentation::Presentation;
pub use termalg::{parse_term, poly_to_term, term_to_poly, NormalTerm, Term};
