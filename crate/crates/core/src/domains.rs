//! Domains of linear orders and their never-conditions.
//!
//! For a triple `x < y < z` the restriction of an order is one of six
//! patterns. A domain's restriction to the triple is a 6-bit pattern mask,
//! and each of the nine never-conditions is a mask of patterns it forbids.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::orders::{all_orders, alt_set, alts_of, relabelings, Alt, AltSet, LinearOrder};
use crate::paths::{enumerate_geodesics, Path};

/// Slots of the triple's members at positions 0, 1, 2, in lexicographic order.
pub const PATTERNS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Indexed by `xy << 2 | xz << 1 | yz`; 6 and 2 cannot occur.
const PATTERN_OF_BITS: [u8; 8] = [5, 3, u8::MAX, 2, 4, u8::MAX, 1, 0];

const fn violators() -> [u8; 9] {
    let mut out = [0u8; 9];
    let mut p = 0;
    while p < 6 {
        let mut pos = 0;
        while pos < 3 {
            let slot = PATTERNS[p][pos] as usize;
            out[slot * 3 + pos] |= 1 << p;
            pos += 1;
        }
        p += 1;
    }
    out
}

/// Condition `slot * 3 + (k - 1)` forbids the patterns in `VIOLATORS[..]`.
pub const VIOLATORS: [u8; 9] = violators();

/// Which never-conditions are admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// All nine conditions.
    Condorcet,
    /// Never-top and never-bottom conditions only.
    PeakPit,
}

impl Family {
    pub fn condition_mask(self) -> u16 {
        match self {
            Family::Condorcet => 0x1FF,
            Family::PeakPit => 0b101_101_101,
        }
    }
}

/// Bitmask (9 bits) of conditions satisfied by a pattern mask.
#[inline]
pub fn satisfied_conditions(pattern_mask: u8) -> u16 {
    let mut out = 0;
    for (c, v) in VIOLATORS.iter().enumerate() {
        if pattern_mask & v == 0 {
            out |= 1 << c;
        }
    }
    out
}

/// Three distinct alternatives, ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple(pub [Alt; 3]);

impl Triple {
    pub fn new(a: Alt, b: Alt, c: Alt) -> Result<Self> {
        let mut t = [a, b, c];
        t.sort_unstable();
        if t[0] == t[1] || t[1] == t[2] {
            return Err(Error::InvalidSubset(format!("{a},{b},{c} are not distinct")));
        }
        Ok(Triple(t))
    }

    pub fn set(self) -> AltSet {
        alt_set(self.0)
    }

    pub fn slot(self, a: Alt) -> Option<usize> {
        self.0.iter().position(|&x| x == a)
    }

    /// Pattern index of `order` restricted to this triple.
    #[inline]
    pub fn pattern(self, order: &LinearOrder) -> u8 {
        let [x, y, z] = self.0;
        let bits =
            (order.prefers(x, y) as usize) << 2 | (order.prefers(x, z) as usize) << 1 | order.prefers(y, z) as usize;
        PATTERN_OF_BITS[bits]
    }
}

/// Every triple inside `universe`, lexicographically.
pub fn triples(universe: AltSet) -> Vec<Triple> {
    let ids: Vec<Alt> = alts_of(universe).collect();
    let mut out = Vec::new();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            for k in j + 1..ids.len() {
                out.push(Triple([ids[i], ids[j], ids[k]]));
            }
        }
    }
    out
}

/// `x N_{triple} k`: no order ranks `banned` at position `k` within the triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeverCondition {
    pub triple: Triple,
    pub banned: Alt,
    pub k: u8,
}

impl NeverCondition {
    pub fn new(triple: Triple, banned: Alt, k: u8) -> Result<Self> {
        if triple.slot(banned).is_none() || !(1..=3).contains(&k) {
            return Err(Error::Precondition(format!("bad never-condition {banned}N{k} on {triple:?}")));
        }
        Ok(Self { triple, banned, k })
    }

    fn from_index(triple: Triple, c: usize) -> Self {
        Self { triple, banned: triple.0[c / 3], k: (c % 3) as u8 + 1 }
    }

    pub fn index(self) -> usize {
        self.triple.slot(self.banned).expect("banned in triple") * 3 + self.k as usize - 1
    }

    pub fn is_peak_pit(self) -> bool {
        self.k != 2
    }

    pub fn holds_for(self, order: &LinearOrder) -> bool {
        VIOLATORS[self.index()] & (1 << self.triple.pattern(order)) == 0
    }
}

/// Never-conditions satisfied by one triple restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleReport {
    pub triple: Triple,
    pub satisfied: Vec<NeverCondition>,
    pub is_condorcet: bool,
    pub is_peak_pit: bool,
}

/// A nonempty set of orders over one universe, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domain {
    universe: AltSet,
    orders: Vec<LinearOrder>,
}

impl Domain {
    pub fn new(orders: impl IntoIterator<Item = LinearOrder>) -> Result<Self> {
        let set: BTreeSet<LinearOrder> = orders.into_iter().collect();
        let first = set.iter().next().ok_or(Error::EmptyDomain)?;
        let universe = first.universe();
        if let Some(bad) = set.iter().find(|o| o.universe() != universe) {
            return Err(Error::InvalidOrder(format!("{bad:?} is not over the universe of {first:?}")));
        }
        Ok(Self { universe, orders: set.into_iter().collect() })
    }

    /// Every order of `universe`.
    pub fn full(universe: AltSet) -> Self {
        Self { universe, orders: all_orders(universe) }
    }

    pub fn universe(&self) -> AltSet {
        self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.count_ones() as usize
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn contains(&self, order: &LinearOrder) -> bool {
        self.orders.binary_search(order).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LinearOrder> {
        self.orders.iter()
    }

    /// `D_B`.
    pub fn restrict(&self, subset: AltSet) -> Result<Self> {
        if subset == 0 || subset & !self.universe != 0 {
            return Err(Error::InvalidSubset(format!(
                "subset {subset:#b} is empty or not inside universe {:#b}",
                self.universe
            )));
        }
        Ok(self.restrict_unchecked(subset))
    }

    pub(crate) fn restrict_unchecked(&self, subset: AltSet) -> Self {
        if subset == self.universe {
            return self.clone();
        }
        let set: BTreeSet<LinearOrder> = self.orders.iter().map(|o| o.restrict_unchecked(subset)).collect();
        Self { universe: subset, orders: set.into_iter().collect() }
    }

    /// `D_{-a}`.
    pub fn without(&self, a: Alt) -> Result<Self> {
        self.restrict(self.universe & !(1 << a))
    }

    pub fn union(&self, extra: impl IntoIterator<Item = LinearOrder>) -> Result<Self> {
        Self::new(self.orders.iter().copied().chain(extra))
    }

    pub fn relabel(&self, map: &[Alt]) -> Self {
        Self::new(self.orders.iter().map(|o| o.relabel(map))).expect("relabeling keeps the domain nonempty")
    }

    /// 6-bit mask of the patterns realized on `triple`.
    pub fn pattern_mask(&self, triple: Triple) -> u8 {
        self.orders.iter().fold(0, |m, o| m | 1 << triple.pattern(o))
    }

    /// Smallest relabeled copy over `0..n`, used to fold isomorphic domains.
    pub fn canonical_form(&self) -> Domain {
        let ids: Vec<Alt> = alts_of(self.universe).collect();
        let mut compress = [0 as Alt; 16];
        for (i, &a) in ids.iter().enumerate() {
            compress[a as usize] = i as Alt;
        }
        let mut best: Option<Vec<LinearOrder>> = None;
        for perm in relabelings(ids.len()) {
            let map: Vec<Alt> = (0..16).map(|a| perm.get(compress[a] as usize).copied().unwrap_or(0)).collect();
            let mut v: Vec<LinearOrder> = self.orders.iter().map(|o| o.relabel(&map)).collect();
            v.sort_unstable();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        let orders = best.expect("at least one relabeling");
        Domain { universe: orders[0].universe(), orders }
    }
}

impl<'a> IntoIterator for &'a Domain {
    type Item = &'a LinearOrder;
    type IntoIter = std::slice::Iter<'a, LinearOrder>;

    fn into_iter(self) -> Self::IntoIter {
        self.orders.iter()
    }
}

fn check_triple(d: &Domain, triple: Triple) -> Result<()> {
    if triple.set() & !d.universe != 0 {
        return Err(Error::InvalidSubset(format!("{triple:?} is not inside the universe")));
    }
    Ok(())
}

pub fn restrict_domain(d: &Domain, subset: AltSet) -> Result<Domain> {
    d.restrict(subset)
}

pub fn never_conditions_of_triple(d: &Domain, triple: Triple) -> Result<Vec<NeverCondition>> {
    check_triple(d, triple)?;
    Ok(conditions_from_mask(triple, satisfied_conditions(d.pattern_mask(triple))))
}

fn conditions_from_mask(triple: Triple, mask: u16) -> Vec<NeverCondition> {
    (0..9).filter(|c| mask & (1 << c) != 0).map(|c| NeverCondition::from_index(triple, c)).collect()
}

pub fn triple_report(d: &Domain, triple: Triple) -> Result<TripleReport> {
    check_triple(d, triple)?;
    let mask = satisfied_conditions(d.pattern_mask(triple));
    Ok(TripleReport {
        triple,
        satisfied: conditions_from_mask(triple, mask),
        is_condorcet: mask != 0,
        is_peak_pit: mask & Family::PeakPit.condition_mask() != 0,
    })
}

/// Peak-pit conditions satisfied by the triple restriction, `N_p(D_{triple})`.
pub fn peak_pit_conditions(d: &Domain, triple: Triple) -> Vec<NeverCondition> {
    let mask = satisfied_conditions(d.pattern_mask(triple)) & Family::PeakPit.condition_mask();
    conditions_from_mask(triple, mask)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_condorcet: bool,
    pub is_peak_pit: bool,
    pub is_never_top: bool,
    pub is_never_bottom: bool,
    pub is_never_middle: bool,
    pub triples: Vec<TripleReport>,
    /// `N(D)`.
    pub conditions: Vec<NeverCondition>,
    /// `N_p(D)`.
    pub peak_pit_conditions: Vec<NeverCondition>,
}

pub fn classify(d: &Domain) -> Result<Classification> {
    if d.n() < 3 {
        return Err(Error::TooSmallUniverse(d.n()));
    }
    let mut out = Classification {
        is_condorcet: true,
        is_peak_pit: true,
        is_never_top: true,
        is_never_bottom: true,
        is_never_middle: true,
        triples: Vec::new(),
        conditions: Vec::new(),
        peak_pit_conditions: Vec::new(),
    };
    for t in triples(d.universe) {
        let rep = triple_report(d, t)?;
        out.is_condorcet &= rep.is_condorcet;
        out.is_peak_pit &= rep.is_peak_pit;
        out.is_never_top &= rep.satisfied.iter().any(|c| c.k == 1);
        out.is_never_middle &= rep.satisfied.iter().any(|c| c.k == 2);
        out.is_never_bottom &= rep.satisfied.iter().any(|c| c.k == 3);
        out.conditions.extend(rep.satisfied.iter().copied());
        out.peak_pit_conditions.extend(rep.satisfied.iter().copied().filter(|c| c.is_peak_pit()));
        out.triples.push(rep);
    }
    Ok(out)
}

/// Every triple satisfies some condition of `family`. Vacuous below three alternatives.
pub fn satisfies_family(d: &Domain, family: Family) -> bool {
    let allowed = family.condition_mask();
    triples(d.universe).into_iter().all(|t| satisfied_conditions(d.pattern_mask(t)) & allowed != 0)
}

pub fn is_condorcet(d: &Domain) -> bool {
    satisfies_family(d, Family::Condorcet)
}

pub fn is_peak_pit(d: &Domain) -> bool {
    satisfies_family(d, Family::PeakPit)
}

/// Per-triple pattern masks, for cheap "does adding R keep the property" tests.
#[derive(Clone, Debug)]
pub struct TripleMasks {
    entries: Vec<(Triple, u8)>,
}

impl TripleMasks {
    pub fn new(d: &Domain) -> Self {
        Self { entries: triples(d.universe).into_iter().map(|t| (t, d.pattern_mask(t))).collect() }
    }

    pub fn empty(universe: AltSet) -> Self {
        Self { entries: triples(universe).into_iter().map(|t| (t, 0)).collect() }
    }

    pub fn admits(&self, order: &LinearOrder, family: Family) -> bool {
        let allowed = family.condition_mask();
        self.entries.iter().all(|&(t, m)| satisfied_conditions(m | 1 << t.pattern(order)) & allowed != 0)
    }

    pub fn insert(&mut self, order: &LinearOrder) {
        for (t, m) in &mut self.entries {
            *m |= 1 << t.pattern(order);
        }
    }
}

fn extension_witness(d: &Domain, family: Family) -> Option<LinearOrder> {
    let masks = TripleMasks::new(d);
    all_orders(d.universe).into_iter().find(|r| !d.contains(r) && masks.admits(r, family))
}

/// `None` when `d` is a maximal Condorcet domain, otherwise an order that extends it.
pub fn maximal_condorcet_witness(d: &Domain) -> Result<Option<LinearOrder>> {
    if !is_condorcet(d) {
        return Err(Error::Precondition("domain is not a Condorcet domain".into()));
    }
    Ok(extension_witness(d, Family::Condorcet))
}

pub fn is_maximal_condorcet(d: &Domain) -> Result<bool> {
    Ok(maximal_condorcet_witness(d)?.is_none())
}

pub fn maximal_peak_pit_witness(d: &Domain) -> Result<Option<LinearOrder>> {
    if !is_peak_pit(d) {
        return Err(Error::Precondition("domain is not a peak-pit domain".into()));
    }
    Ok(extension_witness(d, Family::PeakPit))
}

pub fn is_maximal_peak_pit(d: &Domain) -> Result<bool> {
    Ok(maximal_peak_pit_witness(d)?.is_none())
}

/// Isomorphism classes of maximal Condorcet domains on three alternatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleClass {
    /// `{abc, acb, cab, cba}`.
    Top,
    /// `{abc, bca, acb, cba}`.
    Middle,
    /// `{abc, bac, bca, cba}`.
    Bottom,
}

impl TripleClass {
    pub const ALL: [TripleClass; 3] = [TripleClass::Top, TripleClass::Middle, TripleClass::Bottom];

    /// The representative over ids `0, 1, 2`.
    pub fn representative(self) -> Domain {
        let rows: [[Alt; 3]; 4] = match self {
            TripleClass::Top => [[0, 1, 2], [0, 2, 1], [2, 0, 1], [2, 1, 0]],
            TripleClass::Middle => [[0, 1, 2], [1, 2, 0], [0, 2, 1], [2, 1, 0]],
            TripleClass::Bottom => [[0, 1, 2], [1, 0, 2], [1, 2, 0], [2, 1, 0]],
        };
        Domain::new(rows.iter().map(|r| LinearOrder::new(r).expect("valid row"))).expect("nonempty")
    }
}

pub fn classify_triple_domain(d: &Domain) -> Result<TripleClass> {
    if d.n() != 3 {
        return Err(Error::Precondition(format!("expected 3 alternatives, got {}", d.n())));
    }
    if !is_condorcet(d) || !is_maximal_condorcet(d)? {
        return Err(Error::Precondition("domain is not a maximal Condorcet domain".into()));
    }
    let ids: Vec<Alt> = alts_of(d.universe).collect();
    for class in TripleClass::ALL {
        let rep = class.representative();
        for perm in relabelings(3) {
            let mut map = [0 as Alt; 16];
            for i in 0..3 {
                map[i] = ids[perm[i] as usize];
            }
            if rep.relabel(&map) == *d {
                return Ok(class);
            }
        }
    }
    unreachable!("every maximal Condorcet domain on three alternatives has size 4 and one of three shapes")
}

/// A geodesic from `r` to `t` on three alternatives whose orders keep `d` peak-pit.
///
/// At distance three, with `r = xyz`, the never-bottom geodesic is used when
/// `d` satisfies `yN3` (this includes the case where it also satisfies
/// `yN1`); otherwise the never-top one.
pub fn extend_with_geodesic_triple(d: &Domain, r: &LinearOrder, t: &LinearOrder) -> Result<Path> {
    if d.n() != 3 {
        return Err(Error::Precondition(format!("expected 3 alternatives, got {}", d.n())));
    }
    if !d.contains(r) || !d.contains(t) {
        return Err(Error::Precondition("endpoints must belong to the domain".into()));
    }
    if !is_peak_pit(d) {
        return Err(Error::Precondition("domain is not peak-pit".into()));
    }
    let dist = r.kendall_unchecked(t);
    if dist < 3 {
        let mut all = enumerate_geodesics(r, t, None)?;
        debug_assert_eq!(all.len(), 1);
        return Ok(all.remove(0));
    }
    let (x, y, z) = (r.at(0), r.at(1), r.at(2));
    let triple = Triple::new(x, y, z)?;
    let np = peak_pit_conditions(d, triple);
    let has = |k| np.iter().any(|c| c.banned == y && c.k == k);
    let middle = if has(3) {
        [[y, x, z], [y, z, x]]
    } else if has(1) {
        [[x, z, y], [z, x, y]]
    } else {
        return Err(Error::Precondition(format!(
            "{r:?} and {t:?} are reversals but the domain satisfies neither never-top nor never-bottom for {y}"
        )));
    };
    Path::new(vec![*r, LinearOrder::new(&middle[0])?, LinearOrder::new(&middle[1])?, *t])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> LinearOrder {
        LinearOrder::new(&s.bytes().map(|c| c - b'a').collect::<Vec<_>>()).unwrap()
    }

    fn dom(s: &str) -> Domain {
        Domain::new(s.split_whitespace().map(o)).unwrap()
    }

    fn cond(d: &Domain, banned: char, k: u8) -> NeverCondition {
        let t = triples(d.universe())[0];
        NeverCondition::new(t, banned as u8 - b'a', k).unwrap()
    }

    #[test]
    fn violator_table_matches_definition() {
        for (p, pattern) in PATTERNS.iter().enumerate() {
            for slot in 0..3u8 {
                for pos in 0..3 {
                    let forbidden = VIOLATORS[slot as usize * 3 + pos] & (1 << p) != 0;
                    assert_eq!(forbidden, pattern[pos] == slot);
                }
            }
        }
    }

    #[test]
    fn pattern_index_matches_lexicographic_rank() {
        let t = Triple([0, 1, 2]);
        for (i, r) in all_orders(0b111).iter().enumerate() {
            assert_eq!(t.pattern(r) as usize, i);
        }
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(dom("abcd bacd").restrict(0b11).unwrap(), dom("ab ba"));
        assert_eq!(dom("abc acb cab cba").restrict(0b11).unwrap(), dom("ab ba"));
        let d = dom("abc acb");
        assert_eq!(d.restrict(0b111).unwrap(), d);
    }

    #[test]
    fn never_condition_examples() {
        let d3t = dom("abc acb cab cba");
        let t = Triple([0, 1, 2]);
        assert_eq!(never_conditions_of_triple(&d3t, t).unwrap(), vec![cond(&d3t, 'b', 1)]);
        let rev = dom("abc cba");
        let n = never_conditions_of_triple(&rev, t).unwrap();
        assert!(n.contains(&cond(&rev, 'b', 1)) && n.contains(&cond(&rev, 'b', 3)));
        assert!(never_conditions_of_triple(&Domain::full(0b111), t).unwrap().is_empty());
    }

    #[test]
    fn classify_examples() {
        let d3b = classify(&dom("abc bac bca cba")).unwrap();
        assert!(d3b.is_condorcet && d3b.is_peak_pit && d3b.is_never_bottom);
        assert_eq!(d3b.peak_pit_conditions, vec![cond(&dom("abc"), 'b', 3)]);

        let fig3 = classify(&dom("abc bac cab cba")).unwrap();
        assert!(fig3.is_condorcet && !fig3.is_peak_pit);
        assert_eq!(fig3.conditions, vec![cond(&dom("abc"), 'c', 2)]);

        let d3m = classify(&dom("abc bca acb cba")).unwrap();
        assert!(d3m.is_condorcet && !d3m.is_peak_pit);
        assert_eq!(d3m.conditions, vec![cond(&dom("abc"), 'a', 2)]);

        assert!(matches!(classify(&dom("ab ba")), Err(Error::TooSmallUniverse(2))));
    }

    #[test]
    fn maximality_examples() {
        assert!(is_maximal_condorcet(&dom("abc acb cab cba")).unwrap());
        assert!(maximal_condorcet_witness(&dom("abc cba")).unwrap().is_some());
        assert!(is_maximal_peak_pit(&dom("abc acb cab cba")).unwrap());
        assert!(!is_maximal_peak_pit(&dom("abc cba")).unwrap());
        assert!(is_maximal_condorcet(&Domain::full(0b111)).is_err());
    }

    #[test]
    fn triple_class_examples() {
        assert_eq!(classify_triple_domain(&dom("abc acb cab cba")).unwrap(), TripleClass::Top);
        assert_eq!(classify_triple_domain(&dom("abc bac bca cba")).unwrap(), TripleClass::Bottom);
        assert_eq!(classify_triple_domain(&dom("abc bca acb cba")).unwrap(), TripleClass::Middle);
        assert!(classify_triple_domain(&dom("abc cba")).is_err());
    }

    #[test]
    fn triple_class_agrees_with_the_unique_condition() {
        // c is never first in {bca, bac, abc, acb}.
        let d = dom("bca bac abc acb");
        assert_eq!(classify_triple_domain(&d).unwrap(), TripleClass::Top);
        let n = never_conditions_of_triple(&d, Triple([0, 1, 2])).unwrap();
        assert_eq!(n, vec![cond(&d, 'c', 1)]);
    }

    #[test]
    fn geodesic_triple_examples() {
        let p = extend_with_geodesic_triple(&dom("abc bca"), &o("abc"), &o("bca")).unwrap();
        assert_eq!(p.orders(), &[o("abc"), o("bac"), o("bca")]);

        let p = extend_with_geodesic_triple(&dom("abc acb cab cba"), &o("abc"), &o("cba")).unwrap();
        assert_eq!(p.orders(), &[o("abc"), o("acb"), o("cab"), o("cba")]);

        // Both bN1 and bN3 hold: the never-bottom geodesic is chosen.
        let p = extend_with_geodesic_triple(&dom("abc cba"), &o("abc"), &o("cba")).unwrap();
        assert_eq!(p.orders(), &[o("abc"), o("bac"), o("bca"), o("cba")]);

        let p = extend_with_geodesic_triple(&dom("abc cba"), &o("abc"), &o("abc")).unwrap();
        assert_eq!(p.orders(), &[o("abc")]);
    }

    #[test]
    fn canonical_form_folds_relabelings() {
        let a = dom("abc acb cab cba");
        let b = a.relabel(&[2, 0, 1]);
        assert_ne!(a, b);
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), dom("abc bac bca cba").canonical_form());
    }
}
