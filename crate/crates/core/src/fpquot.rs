//! Finitely presented algebras: normal forms, decidable equality, the
//! induced quotient operations and morphisms between presentations.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::certify::{make_certificate, CofactorCertificate};
use crate::groebner::{autoreduce, buchberger, GroebnerBasis};
use crate::polyring::Polynomial;
use crate::presentation::{Presentation, PresentationError};
use crate::termalg::{parse_term, poly_to_term, term_to_poly, NormalTerm, Term, TermError};

/// A presentation together with a write-once Gröbner basis memo.
pub struct FpAlgebra {
    presentation: Presentation,
    basis: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for FpAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FpAlgebra").field("presentation", &self.presentation).finish_non_exhaustive()
    }
}

impl Clone for FpAlgebra {
    fn clone(&self) -> Self {
        FpAlgebra { presentation: self.presentation.clone(), basis: self.basis.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotOp {
    Add,
    Mul,
    Neg,
}

impl FpAlgebra {
    pub fn new(presentation: Presentation) -> FpAlgebra {
        FpAlgebra { presentation, basis: OnceLock::new() }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Canonical serialization of the presentation; the basis is a function
    /// of exactly this text.
    pub fn cache_key(&self) -> String {
        self.presentation.to_text()
    }

    /// Reduced Gröbner basis of the relations, computed on first use.
    pub fn basis(&self) -> &GroebnerBasis {
        self.basis.get_or_init(|| {
            let p = &self.presentation;
            let gb = buchberger(p.ring(), p.relations(), p.order()).expect("presentation relations are well-formed");
            if gb.is_reduced() {
                gb
            } else {
                autoreduce(&gb)
            }
        })
    }

    pub fn parse(&self, text: &str) -> Result<Term, TermError> {
        parse_term(text, &self.presentation)
    }

    pub fn poly(&self, t: &Term) -> Result<Polynomial, TermError> {
        term_to_poly(t, &self.presentation)
    }

    pub fn nf_poly(&self, p: &Polynomial) -> Polynomial {
        self.basis().reduce(p).remainder
    }

    pub fn nf(&self, t: &Term) -> Result<NormalTerm, TermError> {
        Ok(poly_to_term(&self.nf_poly(&self.poly(t)?)))
    }

    pub fn decide_eq(&self, t: &Term, u: &Term) -> Result<bool, TermError> {
        Ok(self.nf(t)? == self.nf(u)?)
    }

    /// Certificate that `t` equals its normal form.
    pub fn section(&self, t: &Term) -> Result<CofactorCertificate, TermError> {
        let division = self.basis().reduce(&self.poly(t)?);
        Ok(CofactorCertificate {
            presentation: self.presentation.clone(),
            lhs: t.clone(),
            rhs: poly_to_term(&division.remainder).into_term(),
            cofactors: self.basis().pull_back(&division.quotients),
        })
    }

    /// Certificate that `t ~ u`, or `None` when they differ in the quotient.
    pub fn certify_eq(&self, t: &Term, u: &Term) -> Result<Option<CofactorCertificate>, TermError> {
        use crate::certify::CertifyError;
        match make_certificate(t, u, &self.presentation, self.basis()) {
            Ok(c) => Ok(Some(c)),
            Err(CertifyError::NotEqual) => Ok(None),
            Err(CertifyError::Term(e)) => Err(e),
            Err(CertifyError::BasisMismatch) => unreachable!("basis is computed from this presentation"),
        }
    }

    /// Normal form of the syntactic combination. `b` is ignored for `Neg`.
    pub fn quot_op(&self, op: QuotOp, a: &NormalTerm, b: &NormalTerm) -> Result<NormalTerm, TermError> {
        let t = match op {
            QuotOp::Add => Term::add(a.term().clone(), b.term().clone()),
            QuotOp::Mul => Term::mul(a.term().clone(), b.term().clone()),
            QuotOp::Neg => Term::neg(a.term().clone()),
        };
        self.nf(&t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("source and target have different coefficient rings")]
    RingMismatch,
    #[error("expected {expected} images, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("image {index}: {source}")]
    Image { index: usize, source: TermError },
    #[error("term is not over the source: {0}")]
    Source(TermError),
    #[error("cannot compose: target of the first is not the source of the second")]
    NotComposable,
    #[error("morphism file: {0}")]
    Syntax(String),
    #[error("{path}: {source}")]
    Presentation { path: String, source: PresentationError },
}

/// Algebra map given by the images of the source variables.
#[derive(Debug, Clone)]
pub struct Morphism {
    source: Arc<FpAlgebra>,
    target: Arc<FpAlgebra>,
    images: Vec<Term>,
}

/// Per-relation verdicts: `Some(certificate)` witnesses `f(q_j) ~ 0`.
#[derive(Debug, Clone)]
pub struct WellDefinedness {
    pub relations: Vec<Option<CofactorCertificate>>,
}

impl WellDefinedness {
    pub fn holds(&self) -> bool {
        self.relations.iter().all(Option::is_some)
    }
}

/// The naturality square for `nf` at one term.
#[derive(Debug, Clone)]
pub struct Coherence {
    /// `f(nf_source(t))`.
    pub pushed_normal: Term,
    /// `f(t)`.
    pub pushed: Term,
    /// `nf_target(f(t))`.
    pub normal_pushed: NormalTerm,
    /// `f(nf_source(t)) ~ nf_target(f(t))` in the target.
    pub provably_equal: bool,
    /// `f(nf_source(t))` and `f(t)` are the same tree.
    pub structurally_equal: bool,
}

impl Morphism {
    pub fn new(source: Arc<FpAlgebra>, target: Arc<FpAlgebra>, images: Vec<Term>) -> Result<Morphism, MorphismError> {
        if source.presentation().ring() != target.presentation().ring() {
            return Err(MorphismError::RingMismatch);
        }
        if images.len() != source.presentation().nvars() {
            return Err(MorphismError::Arity { expected: source.presentation().nvars(), found: images.len() });
        }
        for (index, t) in images.iter().enumerate() {
            t.check(target.presentation()).map_err(|source| MorphismError::Image { index, source })?;
        }
        Ok(Morphism { source, target, images })
    }

    pub fn identity(a: Arc<FpAlgebra>) -> Morphism {
        let images = (0..a.presentation().nvars()).map(Term::Var).collect();
        Morphism { source: a.clone(), target: a, images }
    }

    pub fn source(&self) -> &Arc<FpAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FpAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Term] {
        &self.images
    }

    pub fn apply(&self, t: &Term) -> Result<Term, MorphismError> {
        t.check(self.source.presentation()).map_err(MorphismError::Source)?;
        Ok(t.substitute(&self.images))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism, MorphismError> {
        if self.target.cache_key() != next.source.cache_key() {
            return Err(MorphismError::NotComposable);
        }
        let images = self.images.iter().map(|t| t.substitute(&next.images)).collect();
        Ok(Morphism { source: self.source.clone(), target: next.target.clone(), images })
    }

    pub fn well_defined(&self) -> WellDefinedness {
        let src = self.source.presentation();
        let relations = (0..src.relations().len())
            .map(|j| {
                let image = src.relation_term(j).substitute(&self.images);
                self.target.certify_eq(&image, &Term::Zero).expect("images are over the target")
            })
            .collect();
        WellDefinedness { relations }
    }

    pub fn coherence(&self, t: &Term) -> Result<Coherence, MorphismError> {
        let nf_src = self.source.nf(t).map_err(MorphismError::Source)?;
        let pushed_normal = nf_src.term().substitute(&self.images);
        let pushed = t.substitute(&self.images);
        let normal_pushed = self.target.nf(&pushed).expect("images are over the target");
        let provably_equal = self.target.decide_eq(&pushed_normal, &normal_pushed).expect("well-formed");
        let structurally_equal = pushed_normal == pushed;
        Ok(Coherence { pushed_normal, pushed, normal_pushed, provably_equal, structurally_equal })
    }

    pub fn coherence_check(&self, t: &Term) -> Result<bool, MorphismError> {
        Ok(self.coherence(t)?.provably_equal)
    }

    /// Parse `hom <source> -> <target>: x -> u^2, ...`, loading the two
    /// presentations through `load`.
    pub fn parse(
        text: &str,
        mut load: impl FnMut(&str) -> Result<Presentation, MorphismError>,
    ) -> Result<Morphism, MorphismError> {
        let syntax = |m: &str| MorphismError::Syntax(m.to_string());
        let body: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect::<Vec<_>>()
            .join(" ");
        let rest = body.strip_prefix("hom").filter(|r| r.starts_with(char::is_whitespace)).ok_or_else(|| syntax("expected `hom`"))?;
        let (header, maps) = rest.split_once(':').ok_or_else(|| syntax("expected `:` after the target"))?;
        let (src_path, tgt_path) = header.split_once("->").ok_or_else(|| syntax("expected `<source> -> <target>`"))?;
        let (src_path, tgt_path) = (src_path.trim(), tgt_path.trim());
        if src_path.is_empty() || tgt_path.is_empty() {
            return Err(syntax("missing presentation path"));
        }
        let source = Arc::new(FpAlgebra::new(load(src_path)?));
        let target = Arc::new(FpAlgebra::new(load(tgt_path)?));
        let n = source.presentation().nvars();
        let mut images: Vec<Option<Term>> = vec![None; n];
        for entry in maps.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (var, image) = entry.split_once("->").ok_or_else(|| syntax(&format!("expected `var -> term` in `{entry}`")))?;
            let var = var.trim();
            let i = source
                .presentation()
                .var_index(var)
                .ok_or_else(|| syntax(&format!("`{var}` is not a source variable")))?;
            if images[i].is_some() {
                return Err(syntax(&format!("`{var}` is mapped twice")));
            }
            let t = target.parse(image.trim()).map_err(|source| MorphismError::Image { index: i, source })?;
            images[i] = Some(t);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| syntax(&format!("no image for `{}`", source.presentation().varnames()[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::new(source, target, images)
    }
}
