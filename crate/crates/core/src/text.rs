//! Text forms for orders, domains, paths and switch sequences.
//!
//! Orders are strings of single-character labels, most preferred first.
//! Paths join orders with ` -> `. Switch sequences are written
//! `(a,b),(a,c)`. A domain file holds one order per line, with an optional
//! `# alphabet: <labels>` header. Other `#` lines and blank lines are ignored.

use std::collections::HashMap;

use crate::domains::Domain;
use crate::error::{Error, Result};
use crate::orders::{Alt, LinearOrder, SwitchingPair, MAX_ALTS};
use crate::paths::{Path, SwitchSeq};

/// Maps alternative ids to single-character labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    labels: Vec<char>,
}

impl Default for Alphabet {
    /// `a` through `p`.
    fn default() -> Self {
        Self { labels: ('a'..='p').collect() }
    }
}

impl Alphabet {
    pub fn new(labels: impl IntoIterator<Item = char>) -> Result<Self> {
        let labels: Vec<char> = labels.into_iter().collect();
        if labels.is_empty() || labels.len() > MAX_ALTS {
            return Err(Error::InvalidOrder(format!("an alphabet needs 1 to {MAX_ALTS} labels")));
        }
        for (i, c) in labels.iter().enumerate() {
            if labels[..i].contains(c) {
                return Err(Error::InvalidOrder(format!("label {c:?} repeats in the alphabet")));
            }
            if c.is_whitespace() || matches!(c, '(' | ')' | ',' | '#' | '-' | '>') {
                return Err(Error::InvalidOrder(format!("label {c:?} is reserved")));
            }
        }
        Ok(Self { labels })
    }

    /// Parse the body of an `# alphabet:` header: either one run of labels
    /// (`abcd`) or labels separated by spaces (`a b c d`).
    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(spec.chars().filter(|c| !c.is_whitespace()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, a: Alt) -> char {
        self.labels.get(a as usize).copied().unwrap_or('?')
    }

    pub fn id(&self, c: char) -> Option<Alt> {
        self.labels.iter().position(|&l| l == c).map(|i| i as Alt)
    }

    pub fn format_order(&self, o: &LinearOrder) -> String {
        o.iter().map(|a| self.label(a)).collect()
    }

    pub fn parse_order(&self, s: &str) -> Result<LinearOrder> {
        let s = s.trim();
        let ids: Vec<Alt> = s
            .chars()
            .map(|c| self.id(c).ok_or_else(|| Error::InvalidOrder(format!("unknown label {c:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        LinearOrder::new(&ids).map_err(|e| Error::InvalidOrder(format!("{s:?}: {e}")))
    }

    pub fn format_pair(&self, p: SwitchingPair) -> String {
        format!("({},{})", self.label(p.lo()), self.label(p.hi()))
    }

    pub fn format_path(&self, p: &Path) -> String {
        p.orders().iter().map(|o| self.format_order(o)).collect::<Vec<_>>().join(" -> ")
    }

    pub fn parse_path(&self, s: &str) -> Result<Path> {
        let orders = s.split("->").map(|part| self.parse_order(part)).collect::<Result<Vec<_>>>()?;
        Path::new(orders)
    }

    pub fn format_seq(&self, s: &SwitchSeq) -> String {
        s.swaps.iter().map(|&p| self.format_pair(p)).collect::<Vec<_>>().join(",")
    }

    /// Parse `(a,b),(a,c),…` applied to `start`. An empty string is the
    /// empty sequence.
    pub fn parse_seq(&self, start: &LinearOrder, s: &str) -> Result<SwitchSeq> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut swaps = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::InvalidPair(format!("expected (x,y) at {rest:?}")))?;
            let (inner, tail) = body;
            let mut it = inner.chars();
            let (x, comma, y) = (it.next(), it.next(), it.next());
            let (Some(x), Some(','), Some(y), None) = (x, comma, y, it.next()) else {
                return Err(Error::InvalidPair(format!("expected (x,y), got ({inner})")));
            };
            let id = |c: char| self.id(c).ok_or_else(|| Error::InvalidPair(format!("unknown label {c:?}")));
            swaps.push(SwitchingPair::new(id(x)?, id(y)?)?);
            rest = tail.strip_prefix(',').unwrap_or(tail);
            if tail.starts_with(',') && rest.is_empty() {
                return Err(Error::InvalidPair("trailing comma".into()));
            }
        }
        let seq = SwitchSeq::new(*start, swaps);
        seq.replay()?;
        Ok(seq)
    }
}

/// A parsed domain file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainFile {
    pub alphabet: Alphabet,
    pub domain: Domain,
    /// Duplicate lines, as `line N: ...` messages.
    pub warnings: Vec<String>,
}

const HEADER: &str = "alphabet:";

pub fn parse_domain_file(text: &str) -> Result<DomainFile> {
    let mut alphabet = Alphabet::default();
    let mut orders: Vec<LinearOrder> = Vec::new();
    let mut first_seen: HashMap<LinearOrder, usize> = HashMap::new();
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if let Some(comment) = s.strip_prefix('#') {
            if let Some(spec) = comment.trim().strip_prefix(HEADER) {
                if !orders.is_empty() {
                    return Err(Error::Parse { line, msg: "alphabet header must come before the orders".into() });
                }
                alphabet = Alphabet::parse(spec).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
            }
            continue;
        }
        if s.is_empty() {
            continue;
        }
        let o = alphabet.parse_order(s).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        if let Some(first) = orders.first() {
            if first.universe() != o.universe() {
                return Err(Error::Parse {
                    line,
                    msg: format!("{s} ranks other alternatives than {}", alphabet.format_order(first)),
                });
            }
        }
        if let Some(prev) = first_seen.get(&o) {
            warnings.push(format!("line {line}: duplicate order {s} (first on line {prev}), ignored"));
            continue;
        }
        first_seen.insert(o, line);
        orders.push(o);
    }
    let domain = Domain::new(orders).map_err(|_| Error::Parse { line: 0, msg: "no orders in domain file".into() })?;
    Ok(DomainFile { alphabet, domain, warnings })
}

pub fn format_domain_file(d: &Domain, alphabet: &Alphabet) -> String {
    let mut out = String::new();
    if *alphabet != Alphabet::default() {
        out.push_str(&format!("# alphabet: {}\n", alphabet.labels.iter().collect::<String>()));
    }
    for o in d {
        out.push_str(&alphabet.format_order(o));
        out.push('\n');
    }
    out
}
