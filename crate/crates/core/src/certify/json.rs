//! JSON interchange for certificates. Polynomials and terms are stored in
//! the text syntax; `to_json` output parses back to an equal certificate
//! that prints identically.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::CofactorCertificate;
use crate::polyring::{MonomialOrder, OrderKind};
use crate::presentation::{parse_ring, Presentation, PresentationError};
use crate::termalg::{parse_poly, parse_term, TermError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("presentation: {0}")]
    Presentation(String),
    #[error("{field}: {source}")]
    Term { field: String, source: TermError },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    ring: String,
    order: String,
    vars: Vec<String>,
    rels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    presentation: PresentationDoc,
    lhs: String,
    rhs: String,
    cofactors: Vec<String>,
}

impl PresentationDoc {
    fn from_presentation(p: &Presentation) -> PresentationDoc {
        let mut order = p.order().kind().name().to_string();
        if !p.order().is_natural() {
            for &v in p.order().precedence() {
                order.push(' ');
                order.push_str(&p.varnames()[v]);
            }
        }
        PresentationDoc {
            ring: p.ring().to_string(),
            order,
            vars: p.varnames().to_vec(),
            rels: p.relation_strings(),
        }
    }

    fn to_presentation(&self) -> Result<Presentation, FormatError> {
        let bad = |m: String| FormatError::Presentation(m);
        let ring = parse_ring(&self.ring).map_err(bad)?;
        let mut words = self.order.split_whitespace();
        let kind = words
            .next()
            .and_then(OrderKind::from_name)
            .ok_or_else(|| bad(format!("unknown monomial order `{}`", self.order)))?;
        let prec: Vec<&str> = words.collect();
        let order = if prec.is_empty() {
            MonomialOrder::new(kind, self.vars.len())
        } else {
            let idx = prec
                .iter()
                .map(|v| self.vars.iter().position(|w| w == v).ok_or_else(|| bad(format!("unknown variable `{v}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            MonomialOrder::with_precedence(kind, idx).map_err(|e| bad(e.to_string()))?
        };
        let base = Presentation::from_parts(ring, self.vars.clone(), order, Vec::new())
            .map_err(|e: PresentationError| bad(e.to_string()))?;
        let rels = self
            .rels
            .iter()
            .enumerate()
            .map(|(j, r)| parse_poly(r, &base).map_err(|source| FormatError::Term { field: format!("rels[{j}]"), source }))
            .collect::<Result<Vec<_>, _>>()?;
        base.with_relations(rels).map_err(|e| bad(e.to_string()))
    }
}

impl CofactorCertificate {
    pub fn to_json(&self) -> String {
        let p = &self.presentation;
        let names = p.varnames();
        let doc = CertificateDoc {
            presentation: PresentationDoc::from_presentation(p),
            lhs: self.lhs.display(names).to_string(),
            rhs: self.rhs.display(names).to_string(),
            cofactors: self
                .cofactors
                .iter()
                .map(|h| crate::termalg::print_poly(&h.with_order(p.order()), names))
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<CofactorCertificate, FormatError> {
        let doc: CertificateDoc = serde_json::from_str(text)?;
        let presentation = doc.presentation.to_presentation()?;
        let term = |field: &str, s: &str| {
            parse_term(s, &presentation).map_err(|source| FormatError::Term { field: field.to_string(), source })
        };
        let lhs = term("lhs", &doc.lhs)?;
        let rhs = term("rhs", &doc.rhs)?;
        let cofactors = doc
            .cofactors
            .iter()
            .enumerate()
            .map(|(j, h)| {
                parse_poly(h, &presentation).map_err(|source| FormatError::Term { field: format!("cofactors[{j}]"), source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CofactorCertificate { presentation, lhs, rhs, cofactors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::certify::make_certificate;

    #[test]
    fn round_trip_is_bit_exact() {
        for text in [
            "ring q\norder lex\nvars x y z\nrels x^2 - y, x^3 - z\n",
            "ring z\norder grlex y x\nvars x y\nrels 2*x*y - 3, y^2\n",
            "ring fp 5\nvars a\nrels a^3 - 1\n",
        ] {
            let p = Presentation::parse(text).unwrap();
            let gb = buchberger(p.ring(), p.relations(), p.order()).unwrap();
            let lhs = parse_term(&format!("({})*{}", p.relation_strings()[0], p.varnames()[0]), &p).unwrap();
            let c = make_certificate(&lhs, &crate::termalg::Term::Zero, &p, &gb).unwrap();
            let json = c.to_json();
            let back = CofactorCertificate::from_json(&json).unwrap();
            assert_eq!(back, c);
            assert_eq!(back.to_json(), json);
            assert!(back.is_valid());
        }
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(matches!(CofactorCertificate::from_json("{"), Err(FormatError::Json(_))));
        let doc = r#"{"presentation":{"ring":"q","order":"lex","vars":["x"],"rels":["x^2 - 1"]},"lhs":"y","rhs":"1","cofactors":["1"]}"#;
        assert!(matches!(CofactorCertificate::from_json(doc), Err(FormatError::Term { .. })));
        let doc = r#"{"presentation":{"ring":"r","order":"lex","vars":["x"],"rels":[]},"lhs":"x","rhs":"x","cofactors":[]}"#;
        assert!(matches!(CofactorCertificate::from_json(doc), Err(FormatError::Presentation(_))));
    }
}
