//! Free and finitely presented bounded distributive lattices on at most
//! five generators.
//!
//! An element of the free lattice on `n` generators is a monotone boolean
//! function on `n` inputs, stored as a truth table in a `u32` (bit `k` is
//! the value at the assignment whose true generators are the bits of `k`).
//! Its normal form is the antichain of minimal true assignments.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub const MAX_GENERATORS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("at most {MAX_GENERATORS} generators are supported, got {0}")]
    TooManyGenerators(usize),
    #[error("generator index {index} out of range for {n} generators")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator `{name}` at {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LatticeTerm {
    Bot,
    Top,
    Gen(usize),
    Meet(Box<LatticeTerm>, Box<LatticeTerm>),
    Join(Box<LatticeTerm>, Box<LatticeTerm>),
}

impl LatticeTerm {
    pub fn meet(a: LatticeTerm, b: LatticeTerm) -> LatticeTerm {
        LatticeTerm::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: LatticeTerm, b: LatticeTerm) -> LatticeTerm {
        LatticeTerm::Join(Box::new(a), Box::new(b))
    }

    fn check(&self, n: usize) -> Result<(), LatticeError> {
        match self {
            LatticeTerm::Gen(i) if *i >= n => Err(LatticeError::GeneratorOutOfRange { index: *i, n }),
            LatticeTerm::Meet(a, b) | LatticeTerm::Join(a, b) => {
                a.check(n)?;
                b.check(n)
            }
            _ => Ok(()),
        }
    }

    fn table(&self, n: usize) -> u32 {
        match self {
            LatticeTerm::Bot => 0,
            LatticeTerm::Top => full(n),
            LatticeTerm::Gen(i) => (0..1u32 << n).filter(|k| k >> i & 1 == 1).fold(0, |t, k| t | 1 << k),
            LatticeTerm::Meet(a, b) => a.table(n) & b.table(n),
            LatticeTerm::Join(a, b) => a.table(n) | b.table(n),
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> LatticeTermDisplay<'a> {
        LatticeTermDisplay { term: self, names }
    }
}

pub struct LatticeTermDisplay<'a> {
    term: &'a LatticeTerm,
    names: &'a [String],
}

impl LatticeTermDisplay<'_> {
    /// Meets directly under a join are parenthesized for readability; joins
    /// under a meet need parentheses.
    fn write(&self, t: &LatticeTerm, parent_meet: bool, inside_join: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match t {
            LatticeTerm::Bot => f.write_str("bot"),
            LatticeTerm::Top => f.write_str("top"),
            LatticeTerm::Gen(i) => match self.names.get(*i) {
                Some(name) => f.write_str(name),
                None => write!(f, "g{i}"),
            },
            LatticeTerm::Meet(a, b) => {
                if !parent_meet && inside_join {
                    f.write_str("(")?;
                }
                self.write(a, true, false, f)?;
                f.write_str(" /\\ ")?;
                self.write_right(b, true, f)?;
                if !parent_meet && inside_join {
                    f.write_str(")")?;
                }
                Ok(())
            }
            LatticeTerm::Join(a, b) => {
                if parent_meet {
                    f.write_str("(")?;
                }
                self.write(a, false, true, f)?;
                f.write_str(" \\/ ")?;
                self.write_right(b, false, f)?;
                if parent_meet {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }

    /// Right operands of the same operator are parenthesized so that
    /// printing preserves the tree shape.
    fn write_right(&self, t: &LatticeTerm, in_meet: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let same = matches!((t, in_meet), (LatticeTerm::Meet(..), true) | (LatticeTerm::Join(..), false));
        if same {
            f.write_str("(")?;
            self.write(t, false, false, f)?;
            f.write_str(")")
        } else {
            self.write(t, in_meet, !in_meet, f)
        }
    }
}

impl fmt::Display for LatticeTermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.term, false, false, f)
    }
}

fn full(n: usize) -> u32 {
    if n == 5 {
        u32::MAX
    } else {
        (1u32 << (1u32 << n)) - 1
    }
}

fn subset_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn cmp_subsets(a: u32, b: u32) -> Ordering {
    subset_indices(a).cmp(&subset_indices(b))
}

/// A set of pairwise incomparable generator subsets, read as a join of
/// meets. Subsets are kept in canonical order: each as its sorted index
/// list, and the lists sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    n: usize,
    sets: Vec<u32>,
}

impl Antichain {
    fn from_table(n: usize, table: u32) -> Antichain {
        let mut sets: Vec<u32> = (0..1u32 << n)
            .filter(|&k| table >> k & 1 == 1 && (0..n).all(|i| k >> i & 1 == 0 || table >> (k & !(1 << i)) & 1 == 0))
            .collect();
        sets.sort_by(|&a, &b| cmp_subsets(a, b));
        Antichain { n, sets }
    }

    fn table(&self) -> u32 {
        let mut t = 0;
        for k in 0..1u32 << self.n {
            if self.sets.iter().any(|&s| s & k == s) {
                t |= 1 << k;
            }
        }
        t
    }

    pub fn ngens(&self) -> usize {
        self.n
    }

    /// Member subsets as sorted generator index lists.
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&s| subset_indices(s)).collect()
    }

    pub fn is_bot(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_top(&self) -> bool {
        self.sets == [0]
    }

    /// The antichain as a lattice term: `bot`, `top`, or a join of meets.
    pub fn to_term(&self) -> LatticeTerm {
        let meet = |s: u32| {
            let mut gens = subset_indices(s).into_iter().map(LatticeTerm::Gen);
            match gens.next() {
                None => LatticeTerm::Top,
                Some(first) => gens.fold(first, LatticeTerm::meet),
            }
        };
        let mut sets = self.sets.iter().map(|&s| meet(s));
        match sets.next() {
            None => LatticeTerm::Bot,
            Some(first) => sets.fold(first, LatticeTerm::join),
        }
    }

    /// Set notation, e.g. `{{a}, {b, c}}`.
    pub fn to_sets(&self, names: &[String]) -> String {
        let sets: Vec<String> = self
            .subsets()
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("{{{}}}", sets.join(", "))
    }
}

impl Ord for Antichain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.subsets().cmp(&other.subsets()))
    }
}

impl PartialOrd for Antichain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Normal form of `t` in the free bounded distributive lattice on `n`
/// generators.
pub fn lat_nf_free(t: &LatticeTerm, n: usize) -> Result<Antichain, LatticeError> {
    if n > MAX_GENERATORS {
        return Err(LatticeError::TooManyGenerators(n));
    }
    t.check(n)?;
    Ok(Antichain::from_table(n, t.table(n)))
}

fn monotone_tables(n: usize) -> Vec<u32> {
    if n == 0 {
        return vec![0, 1];
    }
    let smaller = monotone_tables(n - 1);
    let shift = 1u32 << (n - 1);
    let mut out = Vec::new();
    for &low in &smaller {
        for &high in &smaller {
            if low & !high == 0 {
                out.push(low | high << shift);
            }
        }
    }
    out
}

/// Every element of the free bounded distributive lattice on `n`
/// generators, in canonical order.
pub fn lat_enumerate(n: usize) -> Result<Vec<Antichain>, LatticeError> {
    if n > MAX_GENERATORS {
        return Err(LatticeError::TooManyGenerators(n));
    }
    let mut all: Vec<Antichain> = monotone_tables(n).into_iter().map(|t| Antichain::from_table(n, t)).collect();
    all.sort();
    Ok(all)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePresentation {
    names: Vec<String>,
    laws: Vec<(LatticeTerm, LatticeTerm)>,
}

impl LatticePresentation {
    pub fn new(names: Vec<String>, laws: Vec<(LatticeTerm, LatticeTerm)>) -> Result<LatticePresentation, LatticeError> {
        if names.len() > MAX_GENERATORS {
            return Err(LatticeError::TooManyGenerators(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
                && name != "bot"
                && name != "top";
            if !ok {
                return Err(LatticeError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(LatticeError::DuplicateName(name.clone()));
            }
        }
        for (a, b) in &laws {
            a.check(names.len())?;
            b.check(names.len())?;
        }
        Ok(LatticePresentation { names, laws })
    }

    /// Free lattice on generators named `g0`, `g1`, ...
    pub fn free(n: usize) -> Result<LatticePresentation, LatticeError> {
        LatticePresentation::new((0..n).map(|i| format!("g{i}")).collect(), Vec::new())
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn laws(&self) -> &[(LatticeTerm, LatticeTerm)] {
        &self.laws
    }

    pub fn parse_term(&self, text: &str) -> Result<LatticeTerm, LatticeError> {
        let mut p = TermParser { text, pos: 0, names: &self.names };
        let t = p.join()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(t)
    }

    /// Parse `gens a b c` and `laws a = b, a /\ c = bot` lines.
    pub fn parse(text: &str) -> Result<LatticePresentation, LatticeError> {
        let line_err = |line: usize, message: String| LatticeError::Line { line, message };
        let mut gens: Option<Vec<String>> = None;
        let mut laws: Vec<(usize, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            match keyword {
                "gens" => {
                    if gens.is_some() {
                        return Err(line_err(line, "duplicate `gens` declaration".into()));
                    }
                    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    LatticePresentation::new(names.clone(), Vec::new()).map_err(|e| line_err(line, e.to_string()))?;
                    gens = Some(names);
                }
                "laws" => laws.extend(
                    rest.split(',').map(str::trim).filter(|l| !l.is_empty()).map(|l| (line, l.to_string())),
                ),
                other => return Err(line_err(line, format!("unknown declaration `{other}`"))),
            }
        }
        let names = gens.ok_or_else(|| line_err(0, "missing `gens` declaration".into()))?;
        let base = LatticePresentation::new(names, Vec::new()).expect("checked above");
        let mut parsed = Vec::new();
        for (line, law) in laws {
            let (l, r) = law.split_once('=').ok_or_else(|| line_err(line, format!("law `{law}` has no `=`")))?;
            let term = |s: &str| base.parse_term(s).map_err(|e| line_err(line, format!("law `{law}`: {e}")));
            parsed.push((term(l)?, term(r)?));
        }
        Ok(LatticePresentation { laws: parsed, ..base })
    }
}

struct TermParser<'a> {
    text: &'a str,
    pos: usize,
    names: &'a [String],
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> LatticeError {
        LatticeError::Syntax { position: self.pos, message: message.to_string() }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn join(&mut self) -> Result<LatticeTerm, LatticeError> {
        let mut acc = self.meet()?;
        while self.eat("\\/") {
            acc = LatticeTerm::join(acc, self.meet()?);
        }
        Ok(acc)
    }

    fn meet(&mut self) -> Result<LatticeTerm, LatticeError> {
        let mut acc = self.atom()?;
        while self.eat("/\\") {
            acc = LatticeTerm::meet(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<LatticeTerm, LatticeError> {
        if self.eat("(") {
            let inner = self.join()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            return Ok(inner);
        }
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error(if rest.is_empty() { "unexpected end of input" } else { "expected a generator, `bot`, `top` or `(`" }));
        }
        let word = &rest[..len];
        self.pos += len;
        match word {
            "bot" => Ok(LatticeTerm::Bot),
            "top" => Ok(LatticeTerm::Top),
            _ => match self.names.iter().position(|n| n == word) {
                Some(i) => Ok(LatticeTerm::Gen(i)),
                None => Err(LatticeError::UnknownGenerator { name: word.to_string(), position: start }),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// Why two elements were merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergeReason {
    /// Law `k` of the presentation.
    Law(usize),
    /// `x op with` and `y op with` for an earlier merge of `x` and `y`.
    Context { op: LatticeOp, with: usize, from: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Merge {
    pub left: usize,
    pub right: usize,
    pub reason: MergeReason,
}

/// The least congruence containing the laws, as a partition of the free
/// lattice with the merges that produced it. Element indices refer to
/// [`CongruenceTable::elements`].
#[derive(Debug, Clone)]
pub struct CongruenceTable {
    presentation: LatticePresentation,
    elements: Vec<Antichain>,
    index: HashMap<u32, usize>,
    representative: Vec<usize>,
    merges: Vec<Merge>,
    adjacency: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn lat_congruence(p: &LatticePresentation) -> CongruenceTable {
    let n = p.ngens();
    let elements = lat_enumerate(n).expect("presentation respects the generator bound");
    let tables: Vec<u32> = elements.iter().map(Antichain::table).collect();
    let index: HashMap<u32, usize> = tables.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let size = elements.len();

    let mut parent: Vec<usize> = (0..size).collect();
    let mut merges: Vec<Merge> = Vec::new();
    let mut adjacency = vec![Vec::new(); size];
    let mut queue: VecDeque<Merge> = p
        .laws
        .iter()
        .enumerate()
        .map(|(k, (a, b))| Merge { left: index[&a.table(n)], right: index[&b.table(n)], reason: MergeReason::Law(k) })
        .collect();

    while let Some(m) = queue.pop_front() {
        let (rx, ry) = (find(&mut parent, m.left), find(&mut parent, m.right));
        if rx == ry {
            continue;
        }
        parent[rx.max(ry)] = rx.min(ry);
        let e = merges.len();
        adjacency[m.left].push(e);
        adjacency[m.right].push(e);
        let (x, y) = (tables[m.left], tables[m.right]);
        for (z, &tz) in tables.iter().enumerate() {
            for (op, fx, fy) in [(LatticeOp::Meet, x & tz, y & tz), (LatticeOp::Join, x | tz, y | tz)] {
                if fx == fy {
                    continue;
                }
                let (left, right) = (index[&fx], index[&fy]);
                if find(&mut parent, left) != find(&mut parent, right) {
                    queue.push_back(Merge { left, right, reason: MergeReason::Context { op, with: z, from: (m.left, m.right) } });
                }
            }
        }
        merges.push(m);
    }

    // Roots are class minima because unions keep the smaller index, and
    // elements are in canonical order.
    let representative = (0..size).map(|i| find(&mut parent, i)).collect();
    CongruenceTable { presentation: p.clone(), elements, index, representative, merges, adjacency }
}

/// Result of an equality query under a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVerdict {
    pub equal: bool,
    /// Merges connecting the two elements, in path order; empty when they
    /// are unequal or identical.
    pub trace: Vec<Merge>,
}

impl CongruenceTable {
    pub fn presentation(&self) -> &LatticePresentation {
        &self.presentation
    }

    pub fn elements(&self) -> &[Antichain] {
        &self.elements
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    pub fn index_of(&self, a: &Antichain) -> Option<usize> {
        (a.n == self.presentation.ngens()).then(|| self.index.get(&a.table()).copied()).flatten()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.representative[i]
    }

    /// Classes as sorted index lists, ordered by representative.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_rep: Vec<Vec<usize>> = vec![Vec::new(); self.elements.len()];
        for (i, &r) in self.representative.iter().enumerate() {
            by_rep[r].push(i);
        }
        by_rep.into_iter().filter(|c| !c.is_empty()).collect()
    }

    fn element(&self, t: &LatticeTerm) -> Result<usize, LatticeError> {
        let n = self.presentation.ngens();
        t.check(n)?;
        Ok(self.index[&t.table(n)])
    }

    /// Normal form under the presentation: the canonically least element of
    /// the class of `t`.
    pub fn nf(&self, t: &LatticeTerm) -> Result<&Antichain, LatticeError> {
        Ok(&self.elements[self.representative[self.element(t)?]])
    }

    pub fn decide_eq(&self, t: &LatticeTerm, u: &LatticeTerm) -> Result<LatticeVerdict, LatticeError> {
        let (a, b) = (self.element(t)?, self.element(u)?);
        if self.representative[a] != self.representative[b] {
            return Ok(LatticeVerdict { equal: false, trace: Vec::new() });
        }
        Ok(LatticeVerdict { equal: true, trace: self.path(a, b) })
    }

    /// Path of merges from `a` to `b` in the merge forest.
    fn path(&self, a: usize, b: usize) -> Vec<Merge> {
        let mut via: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for &e in &self.adjacency[x] {
                let m = &self.merges[e];
                let y = if m.left == x { m.right } else { m.left };
                if y != a && !via.contains_key(&y) {
                    via.insert(y, e);
                    queue.push_back(y);
                }
            }
        }
        let mut trace = Vec::new();
        let mut x = b;
        while x != a {
            let e = via[&x];
            let m = &self.merges[e];
            trace.push(m.clone());
            x = if m.left == x { m.right } else { m.left };
        }
        trace.reverse();
        trace
    }

    /// One line per merge, naming the elements by their antichain terms.
    pub fn describe(&self, m: &Merge) -> String {
        let names = self.presentation.names();
        let show = |i: usize| self.elements[i].to_term().display(names).to_string();
        let reason = match &m.reason {
            MergeReason::Law(k) => format!("law {k}"),
            MergeReason::Context { op, with, from } => {
                let op = match op {
                    LatticeOp::Meet => "meeting",
                    LatticeOp::Join => "joining",
                };
                format!("{op} {} = {} with {}", show(from.0), show(from.1), show(*with))
            }
        };
        format!("{} = {}  by {reason}", show(m.left), show(m.right))
    }

    #[cfg(test)]
    fn tables(&self) -> Vec<u32> {
        self.elements.iter().map(Antichain::table).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pres(text: &str) -> LatticePresentation {
        LatticePresentation::parse(text).unwrap()
    }

    fn nf(p: &LatticePresentation, t: &str) -> String {
        lat_nf_free(&p.parse_term(t).unwrap(), p.ngens()).unwrap().to_sets(p.names())
    }

    #[test]
    fn free_normal_forms() {
        let p = pres("gens a b c\n");
        assert_eq!(nf(&p, "(a \\/ b) /\\ a"), "{{a}}");
        assert_eq!(nf(&p, "(a /\\ b) \\/ (a /\\ c)"), "{{a, b}, {a, c}}");
        assert_eq!(nf(&p, "(a \\/ b) /\\ (a \\/ c)"), "{{a}, {b, c}}");
        assert_eq!(nf(&p, "bot"), "{}");
        assert_eq!(nf(&p, "top \\/ a"), "{{}}");
        assert_eq!(nf(&p, "a /\\ bot"), "{}");
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| lat_enumerate(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168, 7581]);
        assert!(matches!(lat_enumerate(6), Err(LatticeError::TooManyGenerators(6))));
        let zero = lat_enumerate(0).unwrap();
        assert!(zero[0].is_bot() && zero[1].is_top());
    }

    #[test]
    fn congruence_examples() {
        let free = lat_congruence(&pres("gens a b\n"));
        assert_eq!(free.classes().len(), 6);

        let ab = lat_congruence(&pres("gens a b\nlaws a = b\n"));
        let classes = ab.classes();
        assert_eq!(classes.len(), 3);
        let names = ab.presentation().names();
        let show: Vec<Vec<String>> = classes
            .iter()
            .map(|c| c.iter().map(|&i| ab.elements()[i].to_sets(names)).collect())
            .collect();
        assert!(show.contains(&vec!["{}".to_string()]));
        assert!(show.contains(&vec!["{{}}".to_string()]));
        assert!(show.iter().any(|c| c.len() == 4));

        let top = lat_congruence(&pres("gens a\nlaws a = top\n"));
        assert_eq!(top.classes().len(), 2);
    }

    #[test]
    fn decide_with_trace() {
        let p = pres("gens a b c\nlaws a = b\n");
        let t = lat_congruence(&p);
        let v = t.decide_eq(&p.parse_term("a").unwrap(), &p.parse_term("b").unwrap()).unwrap();
        assert!(v.equal);
        assert_eq!(v.trace.len(), 1);
        assert_eq!(v.trace[0].reason, MergeReason::Law(0));
        let v = t.decide_eq(&p.parse_term("a /\\ c").unwrap(), &p.parse_term("b /\\ c").unwrap()).unwrap();
        assert!(v.equal);
        assert!(!v.trace.is_empty());
        let v = t.decide_eq(&p.parse_term("a").unwrap(), &p.parse_term("c").unwrap()).unwrap();
        assert!(!v.equal);
        assert_eq!(t.nf(&p.parse_term("b").unwrap()).unwrap().to_sets(p.names()), "{{a}}");
    }

    #[test]
    #[ignore = "slow in debug builds"]
    fn five_generators() {
        let p = pres("gens a b c d e\nlaws a = b\n");
        let t = lat_congruence(&p);
        assert!(t.classes().len() < 7581);
    }

    #[test]
    fn trace_chains_and_describes() {
        let p = pres("gens a b c\nlaws a = b, b = c\n");
        let t = lat_congruence(&p);
        let v = t.decide_eq(&p.parse_term("a").unwrap(), &p.parse_term("c").unwrap()).unwrap();
        assert!(v.equal);
        let a = t.index_of(&lat_nf_free(&p.parse_term("a").unwrap(), 3).unwrap()).unwrap();
        let c = t.index_of(&lat_nf_free(&p.parse_term("c").unwrap(), 3).unwrap()).unwrap();
        let mut cur = a;
        for m in &v.trace {
            cur = if m.left == cur { m.right } else { assert_eq!(m.right, cur); m.left };
        }
        assert_eq!(cur, c);
        for m in t.merges() {
            assert!(t.describe(m).contains(" = "));
        }
    }

    #[test]
    fn parse_and_print() {
        let p = pres("# comment\ngens a b c\nlaws a /\\ c = bot\nlaws b = top\n");
        assert_eq!(p.laws().len(), 2);
        for text in ["a /\\ (b \\/ c)", "a \\/ b /\\ c", "(a \\/ b) \\/ c", "a \\/ (b \\/ c)", "a /\\ (b /\\ c)", "top /\\ bot"] {
            let t = p.parse_term(text).unwrap();
            let printed = t.display(p.names()).to_string();
            assert_eq!(p.parse_term(&printed).unwrap(), t, "{text} -> {printed}");
        }
        assert!(matches!(p.parse_term("a /\\ d"), Err(LatticeError::UnknownGenerator { .. })));
        assert!(matches!(p.parse_term("a /\\"), Err(LatticeError::Syntax { .. })));
        for (bad, line) in [("gens a a\n", 1), ("gens a\nlaws a\n", 2), ("gens a\nfoo\n", 2), ("gens a b c d e f\n", 1), ("laws a = b\n", 0)] {
            match LatticePresentation::parse(bad) {
                Err(LatticeError::Line { line: l, .. }) => assert_eq!(l, line, "{bad:?}"),
                other => panic!("{bad:?}: {other:?}"),
            }
        }
    }

    fn arb_term(n: usize) -> impl Strategy<Value = LatticeTerm> {
        let leaf = prop_oneof![Just(LatticeTerm::Bot), Just(LatticeTerm::Top), (0..n).prop_map(LatticeTerm::Gen)];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| LatticeTerm::meet(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| LatticeTerm::join(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn antichain_round_trips(t in arb_term(3)) {
            let a = lat_nf_free(&t, 3).unwrap();
            let again = lat_nf_free(&a.to_term(), 3).unwrap();
            prop_assert_eq!(&again, &a);
            let sets = a.subsets();
            for (i, s) in sets.iter().enumerate() {
                for (j, r) in sets.iter().enumerate() {
                    prop_assert!(i == j || !s.iter().all(|x| r.contains(x)));
                }
            }
        }

        #[test]
        fn congruence_is_compatible(laws in proptest::collection::vec((arb_term(3), arb_term(3)), 0..3)) {
            let p = LatticePresentation::new(vec!["a".into(), "b".into(), "c".into()], laws).unwrap();
            let t = lat_congruence(&p);
            let tables = t.tables();
            for x in 0..tables.len() {
                for y in 0..tables.len() {
                    if t.class_of(x) != t.class_of(y) { continue; }
                    for &z in &tables {
                        prop_assert_eq!(t.class_of(t.index[&(tables[x] & z)]), t.class_of(t.index[&(tables[y] & z)]));
                        prop_assert_eq!(t.class_of(t.index[&(tables[x] | z)]), t.class_of(t.index[&(tables[y] | z)]));
                    }
                }
                let r = t.class_of(x);
                prop_assert_eq!(t.class_of(r), r);
                prop_assert!(r <= x);
            }
        }
    }
}
