//! Finite presentations `k[x_1..x_n]/(q_1..q_m)` and their text format.
//!
//! ```text
//! # comment
//! ring q            # z | q | fp <p>
//! order lex         # lex | grlex | degrevlex, optionally followed by a
//!                   # variable precedence list; defaults to degrevlex
//! vars x y z
//! rels x^2 - y, x^3 - z
//! ```
//!
//! `rels` may appear on several lines; relations accumulate in order.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::coeffring::{CoeffError, CoeffRing};
use crate::polyring::{MonomialOrder, OrderKind, PolyError, Polynomial};
use crate::termalg::{parse_poly, print_poly, Term, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("relation {index}: {source}")]
    Relation { index: usize, source: TermError },
    #[error("relation {index}: {source}")]
    RelationShape { index: usize, source: PolyError },
    #[error("invalid precedence: {0}")]
    Precedence(String),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    ring: CoeffRing,
    varnames: Vec<String>,
    order: MonomialOrder,
    relations: Vec<Polynomial>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    /// Presentation with relations given in term syntax and the natural
    /// variable precedence.
    pub fn new(
        ring: CoeffRing,
        varnames: Vec<String>,
        kind: OrderKind,
        relations: &[&str],
    ) -> Result<Presentation, PresentationError> {
        let order = MonomialOrder::new(kind, varnames.len());
        let base = Presentation::from_parts(ring, varnames, order, Vec::new())?;
        let rels = relations
            .iter()
            .enumerate()
            .map(|(index, r)| parse_poly(r, &base).map_err(|source| PresentationError::Relation { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation { relations: rels, ..base })
    }

    pub fn from_parts(
        ring: CoeffRing,
        varnames: Vec<String>,
        order: MonomialOrder,
        relations: Vec<Polynomial>,
    ) -> Result<Presentation, PresentationError> {
        let mut seen = HashSet::new();
        for name in &varnames {
            if !valid_name(name) {
                return Err(PresentationError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(PresentationError::DuplicateName(name.clone()));
            }
        }
        if order.nvars() != varnames.len() {
            return Err(PresentationError::Precedence(format!(
                "order has {} variables, presentation has {}",
                order.nvars(),
                varnames.len()
            )));
        }
        let probe = Polynomial::zero(ring, &order);
        let relations = relations
            .into_iter()
            .enumerate()
            .map(|(index, r)| {
                probe.compatible(&r).map_err(|source| PresentationError::RelationShape { index, source })?;
                Ok(r.with_order(&order))
            })
            .collect::<Result<Vec<_>, PresentationError>>()?;
        Ok(Presentation { ring, varnames, order, relations })
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn varnames(&self) -> &[String] {
        &self.varnames
    }

    pub fn nvars(&self) -> usize {
        self.varnames.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.varnames.iter().position(|v| v == name)
    }

    /// Same presentation under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Presentation, PresentationError> {
        if order.nvars() != self.nvars() {
            return Err(PresentationError::Precedence(format!(
                "order has {} variables, presentation has {}",
                order.nvars(),
                self.nvars()
            )));
        }
        let relations = self.relations.iter().map(|r| r.with_order(&order)).collect();
        Presentation::from_parts(self.ring, self.varnames.clone(), order, relations)
    }

    pub fn with_relations(&self, relations: Vec<Polynomial>) -> Result<Presentation, PresentationError> {
        Presentation::from_parts(self.ring, self.varnames.clone(), self.order.clone(), relations)
    }

    /// The presentation of `A[X]/(rels)` as a single presentation over the
    /// coefficient ring: variables are the old ones followed by `vars`,
    /// relations are the old ones followed by `rels`. The order kind is kept
    /// and the old variables precede the new ones.
    pub fn extend(&self, vars: &[&str], rels: &[&str]) -> Result<Presentation, PresentationError> {
        let mut names = self.varnames.clone();
        names.extend(vars.iter().map(|s| s.to_string()));
        let mut precedence = self.order.precedence().to_vec();
        precedence.extend(self.nvars()..names.len());
        let order = MonomialOrder::with_precedence(self.order.kind(), precedence)
            .map_err(|e| PresentationError::Precedence(e.to_string()))?;
        let embedding: Vec<Polynomial> = (0..self.nvars()).map(|i| Polynomial::var(self.ring, &order, i)).collect();
        let old = self.relations.iter().map(|r| r.substitute(&embedding, &order)).collect();
        let base = Presentation::from_parts(self.ring, names, order, old)?;
        let start = base.relations.len();
        let mut relations = base.relations.clone();
        for (k, r) in rels.iter().enumerate() {
            relations.push(
                parse_poly(r, &base).map_err(|source| PresentationError::Relation { index: start + k, source })?,
            );
        }
        Ok(Presentation { relations, ..base })
    }

    /// Relation `j` spelled as its canonical term.
    pub fn relation_term(&self, j: usize) -> Term {
        crate::termalg::poly_to_term(&self.relations[j]).into_term()
    }

    pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
        let line_err = |line: usize, message: String| PresentationError::Line { line, message };
        let mut ring: Option<(usize, CoeffRing)> = None;
        let mut order: Option<(usize, OrderKind, Vec<String>)> = None;
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut rels: Vec<(usize, String)> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            match keyword {
                "ring" => {
                    if ring.is_some() {
                        return Err(line_err(line, "duplicate `ring` declaration".into()));
                    }
                    ring = Some((line, parse_ring(rest).map_err(|m| line_err(line, m))?));
                }
                "order" => {
                    if order.is_some() {
                        return Err(line_err(line, "duplicate `order` declaration".into()));
                    }
                    let mut words = rest.split_whitespace();
                    let name = words.next().ok_or_else(|| line_err(line, "missing order name".into()))?;
                    let kind = OrderKind::from_name(name)
                        .ok_or_else(|| line_err(line, format!("unknown monomial order `{name}`")))?;
                    order = Some((line, kind, words.map(str::to_string).collect()));
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(line_err(line, "duplicate `vars` declaration".into()));
                    }
                    vars = Some((line, rest.split_whitespace().map(str::to_string).collect()));
                }
                "rels" => {
                    rels.extend(
                        rest.split(',').map(str::trim).filter(|r| !r.is_empty()).map(|r| (line, r.to_string())),
                    );
                }
                other => return Err(line_err(line, format!("unknown declaration `{other}`"))),
            }
        }

        let (_, ring) = ring.ok_or_else(|| line_err(0, "missing `ring` declaration".into()))?;
        let (vars_line, names) = vars.ok_or_else(|| line_err(0, "missing `vars` declaration".into()))?;
        let n = names.len();
        let order = match order {
            None => MonomialOrder::new(OrderKind::Degrevlex, n),
            Some((_, kind, prec)) if prec.is_empty() => MonomialOrder::new(kind, n),
            Some((line, kind, prec)) => {
                let idx = prec
                    .iter()
                    .map(|v| names.iter().position(|w| w == v).ok_or_else(|| line_err(line, format!("unknown variable `{v}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                MonomialOrder::with_precedence(kind, idx).map_err(|e| line_err(line, e.to_string()))?
            }
        };
        let base = Presentation::from_parts(ring, names, order, Vec::new()).map_err(|e| line_err(vars_line, e.to_string()))?;
        let relations = rels
            .iter()
            .map(|(line, r)| parse_poly(r, &base).map_err(|e| line_err(*line, format!("relation `{r}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation { relations, ..base })
    }

    /// Canonical text form; equal presentations print identically.
    pub fn to_text(&self) -> String {
        let mut out = format!("ring {}\norder {}", self.ring, self.order.kind().name());
        if !self.order.is_natural() {
            for &v in self.order.precedence() {
                out.push(' ');
                out.push_str(&self.varnames[v]);
            }
        }
        out.push_str("\nvars");
        for v in &self.varnames {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        if !self.relations.is_empty() {
            out.push_str("rels ");
            out.push_str(&self.relation_strings().join(", "));
            out.push('\n');
        }
        out
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| print_poly(r, &self.varnames)).collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parse `z`, `q` or `fp <p>`.
pub fn parse_ring(text: &str) -> Result<CoeffRing, String> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["z"] => Ok(CoeffRing::Integers),
        ["q"] => Ok(CoeffRing::Rationals),
        ["fp", p] => {
            let p: u64 = p.parse().map_err(|_| format!("invalid modulus `{p}`"))?;
            CoeffRing::prime_field(p).map_err(|e: CoeffError| e.to_string())
        }
        _ => Err(format!("unknown coefficient ring `{text}`")),
    }
}
