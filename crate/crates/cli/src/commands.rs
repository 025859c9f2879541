use std::fmt::Write;
use std::path::Path;

use fpnf_core::certify::{check_derivation, expand_derivation, verify_certificate, CofactorCertificate};
use fpnf_core::distlat::{lat_congruence, LatticePresentation};
use fpnf_core::fpquot::{FpAlgebra, Morphism, MorphismError};
use fpnf_core::polyring::{MonomialOrder, OrderKind, Polynomial};
use fpnf_core::presentation::Presentation;
use fpnf_core::termalg::{print_poly, Term};
use serde_json::{json, Value};

use crate::{Cli, Command, OrderArg};

pub enum Outcome {
    Positive,
    Negative,
}

/// A user-facing error: bad arguments, unreadable or malformed input.
pub struct Failure(pub String);

type Result<T> = std::result::Result<T, Failure>;

fn fail<T>(message: impl Into<String>) -> Result<T> {
    Err(Failure(message.into()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).or_else(|e| fail(format!("cannot read {}: {e}", path.display())))
}

fn order_kind(o: OrderArg) -> OrderKind {
    match o {
        OrderArg::Lex => OrderKind::Lex,
        OrderArg::Grlex => OrderKind::Grlex,
        OrderArg::Degrevlex => OrderKind::Degrevlex,
    }
}

fn load_presentation(path: &Path, order: Option<OrderArg>) -> std::result::Result<Presentation, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let p = Presentation::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    match order {
        None => Ok(p),
        Some(o) => {
            let ord = MonomialOrder::new(order_kind(o), p.nvars());
            p.with_order(ord).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}

fn algebra(path: &str, order: Option<OrderArg>) -> Result<FpAlgebra> {
    load_presentation(Path::new(path), order).map(FpAlgebra::new).map_err(Failure)
}

fn term(a: &FpAlgebra, text: &str) -> Result<Term> {
    a.parse(text).or_else(|e| fail(format!("term `{text}`: {e}")))
}

fn show(a: &FpAlgebra, t: &Term) -> String {
    t.display(a.presentation().varnames()).to_string()
}

fn poly(a: &FpAlgebra, p: &Polynomial) -> String {
    print_poly(p, a.presentation().varnames())
}

fn emit_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("values serialize"));
    out.push('\n');
}

fn verdict(b: bool) -> Outcome {
    if b {
        Outcome::Positive
    } else {
        Outcome::Negative
    }
}

pub fn run(cli: &Cli, out: &mut String) -> Result<Outcome> {
    let order = cli.order;
    match &cli.command {
        Command::Gb { presentation, transition } => gb(&algebra(presentation, order)?, *transition, cli.json, out),
        Command::Nf { presentation, term: t } => {
            let a = algebra(presentation, order)?;
            let t = term(&a, t)?;
            let n = show(&a, &a.nf(&t).expect("parsed over this presentation"));
            if cli.json {
                emit_json(out, &json!({ "term": show(&a, &t), "nf": n }));
            } else {
                writeln!(out, "{n}").unwrap();
            }
            Ok(Outcome::Positive)
        }
        Command::Eq { presentation, lhs, rhs } => {
            let a = algebra(presentation, order)?;
            let (t, u) = (term(&a, lhs)?, term(&a, rhs)?);
            let equal = a.decide_eq(&t, &u).expect("parsed over this presentation");
            if cli.json {
                emit_json(out, &json!({ "equal": equal }));
            } else {
                writeln!(out, "{equal}").unwrap();
            }
            Ok(verdict(equal))
        }
        Command::Cert { presentation, lhs, rhs } => {
            let a = algebra(presentation, order)?;
            let t = term(&a, lhs)?;
            let cert = match rhs {
                None => Some(a.section(&t).expect("parsed over this presentation")),
                Some(u) => a.certify_eq(&t, &term(&a, u)?).expect("parsed over this presentation"),
            };
            match cert {
                Some(c) => {
                    out.push_str(&c.to_json());
                    Ok(Outcome::Positive)
                }
                None => {
                    writeln!(out, "not equal").unwrap();
                    Ok(Outcome::Negative)
                }
            }
        }
        Command::Check { certificate, derivation } => check(Path::new(certificate), *derivation, cli.json, out),
        Command::Hom { morphism, apply } => hom(Path::new(morphism), order, apply.as_deref(), cli.json, out),
        Command::LatNf { presentation, term: t } => {
            let p = lattice(presentation)?;
            let t = p.parse_term(t).or_else(|e| fail(format!("term `{t}`: {e}")))?;
            let table = lat_congruence(&p);
            let nf = table.nf(&t).expect("parsed over this presentation");
            let names = p.names();
            if cli.json {
                emit_json(out, &json!({ "nf": nf.to_term().display(names).to_string(), "antichain": nf.subsets() }));
            } else {
                writeln!(out, "{}", nf.to_term().display(names)).unwrap();
            }
            Ok(Outcome::Positive)
        }
        Command::LatEq { presentation, lhs, rhs } => {
            let p = lattice(presentation)?;
            let parse = |s: &str| p.parse_term(s).or_else(|e| fail(format!("term `{s}`: {e}")));
            let (t, u) = (parse(lhs)?, parse(rhs)?);
            let table = lat_congruence(&p);
            let v = table.decide_eq(&t, &u).expect("parsed over this presentation");
            let trace: Vec<String> = v.trace.iter().map(|m| table.describe(m)).collect();
            if cli.json {
                emit_json(out, &json!({ "equal": v.equal, "trace": trace }));
            } else {
                writeln!(out, "{}", v.equal).unwrap();
                for line in trace {
                    writeln!(out, "  {line}").unwrap();
                }
            }
            Ok(verdict(v.equal))
        }
    }
}

fn gb(a: &FpAlgebra, transition: bool, as_json: bool, out: &mut String) -> Result<Outcome> {
    let gb = a.basis();
    let basis: Vec<String> = gb.basis().iter().map(|b| poly(a, b)).collect();
    let rows: Vec<Vec<String>> = gb.transition().iter().map(|row| row.iter().map(|t| poly(a, t)).collect()).collect();
    if as_json {
        let mut v = json!({ "basis": basis });
        if transition {
            v["transition"] = json!(rows);
        }
        emit_json(out, &v);
        return Ok(Outcome::Positive);
    }
    for (i, b) in basis.iter().enumerate() {
        if transition {
            writeln!(out, "b{i} = {b}").unwrap();
        } else {
            writeln!(out, "{b}").unwrap();
        }
    }
    if transition {
        for (i, row) in gb.transition().iter().enumerate() {
            let parts: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_zero())
                .map(|(j, t)| format!("({})*q{j}", poly(a, t)))
                .collect();
            let rhs = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
            writeln!(out, "b{i} = {rhs}").unwrap();
        }
    }
    Ok(Outcome::Positive)
}

fn check(path: &Path, derivation: bool, as_json: bool, out: &mut String) -> Result<Outcome> {
    let text = read(path)?;
    let c = CofactorCertificate::from_json(&text).or_else(|e| fail(format!("{}: {e}", path.display())))?;
    let mut verdict = verify_certificate(&c).map_err(|e| e.to_string());
    let mut expanded = None;
    if derivation && verdict.is_ok() {
        let d = expand_derivation(&c).expect("certificate verified");
        verdict = match check_derivation(&d) {
            Ok((l, r)) if l == c.lhs && r == c.rhs => Ok(()),
            Ok(_) => Err("derivation endpoints differ from the certificate".to_string()),
            Err(e) => Err(format!("derivation {e}")),
        };
        expanded = Some(d);
    }
    if as_json {
        let mut v = json!({ "valid": verdict.is_ok() });
        if let Err(reason) = &verdict {
            v["reason"] = json!(reason);
        }
        if let Some(d) = &expanded {
            v["steps"] = json!(d.steps.len());
        }
        emit_json(out, &v);
    } else {
        if let Some(d) = &expanded {
            write!(out, "{d}").unwrap();
        }
        match &verdict {
            Ok(()) => writeln!(out, "valid").unwrap(),
            Err(reason) => writeln!(out, "invalid: {reason}").unwrap(),
        }
    }
    Ok(if verdict.is_ok() { Outcome::Positive } else { Outcome::Negative })
}

fn hom(path: &Path, order: Option<OrderArg>, apply: Option<&str>, as_json: bool, out: &mut String) -> Result<Outcome> {
    let text = read(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let f = Morphism::parse(&text, |p| load_presentation(&dir.join(p), order).map_err(MorphismError::Syntax))
        .or_else(|e| fail(format!("{}: {e}", path.display())))?;
    let (src, tgt) = (f.source(), f.target());
    let w = f.well_defined();

    let mut relations = Vec::new();
    for (j, cert) in w.relations.iter().enumerate() {
        let q = src.presentation().relation_term(j);
        let image = show(tgt, &q.substitute(f.images()));
        let cofactors: Option<Vec<String>> = cert.as_ref().map(|c| c.cofactors.iter().map(|h| poly(tgt, h)).collect());
        relations.push((show(src, &q), image, cofactors));
    }

    let applied = match apply {
        None => None,
        Some(text) => {
            let t = term(src, text)?;
            let coh = f.coherence(&t).expect("parsed over the source");
            Some((show(src, &t), coh))
        }
    };

    if as_json {
        let rels: Vec<Value> = relations
            .iter()
            .map(|(q, image, cof)| json!({ "relation": q, "image": image, "holds": cof.is_some(), "cofactors": cof }))
            .collect();
        let mut v = json!({ "well_defined": w.holds(), "relations": rels });
        if let Some((t, coh)) = &applied {
            v["apply"] = json!({
                "term": t,
                "image": show(tgt, &coh.pushed),
                "nf": show(tgt, &coh.normal_pushed),
                "image_of_nf": show(tgt, &coh.pushed_normal),
                "coherent": coh.provably_equal,
                "structurally_equal": coh.structurally_equal,
            });
        }
        emit_json(out, &v);
    } else {
        for (j, (q, image, cof)) in relations.iter().enumerate() {
            match cof {
                Some(c) => writeln!(out, "q{j}: {q} -> {image} ~ 0 by [{}]", c.join(", ")).unwrap(),
                None => writeln!(out, "q{j}: {q} -> {image} is not 0").unwrap(),
            }
        }
        writeln!(out, "{}", if w.holds() { "well-defined" } else { "not well-defined" }).unwrap();
        if let Some((t, coh)) = &applied {
            writeln!(out, "image of {t}: {}", show(tgt, &coh.pushed)).unwrap();
            writeln!(out, "normal form: {}", show(tgt, &coh.normal_pushed)).unwrap();
            writeln!(out, "image of normal form: {}", show(tgt, &coh.pushed_normal)).unwrap();
            writeln!(out, "coherent: {}", coh.provably_equal).unwrap();
            writeln!(out, "structurally equal: {}", coh.structurally_equal).unwrap();
        }
    }
    Ok(verdict(w.holds()))
}

fn lattice(path: &str) -> Result<LatticePresentation> {
    let text = read(Path::new(path))?;
    LatticePresentation::parse(&text).or_else(|e| fail(format!("{path}: {e}")))
}
