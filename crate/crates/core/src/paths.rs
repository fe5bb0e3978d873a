//! Paths of alike orders, switching-pair sequences and geodesics.

use crate::domains::{triples, Domain};
use crate::error::{Error, Result};
use crate::orders::{AltSet, LinearOrder, SwitchingPair};

/// A nonempty sequence of orders in which consecutive entries are alike.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    orders: Vec<LinearOrder>,
}

/// The switching pairs of a path, anchored at its first order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwitchSeq {
    pub start: LinearOrder,
    pub swaps: Vec<SwitchingPair>,
}

impl Path {
    pub fn new(orders: Vec<LinearOrder>) -> Result<Self> {
        let first = orders.first().ok_or_else(|| Error::Precondition("a path has at least one order".into()))?;
        let u = first.universe();
        for (i, w) in orders.windows(2).enumerate() {
            if w[1].universe() != u || w[0].alike_unchecked(&w[1]).is_none() {
                return Err(Error::MalformedSequence {
                    step: i,
                    reason: format!("{:?} and {:?} are not alike", w[0], w[1]),
                });
            }
        }
        Ok(Self { orders })
    }

    pub fn single(order: LinearOrder) -> Self {
        Self { orders: vec![order] }
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    /// Number of orders.
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of swaps, `len() - 1`.
    pub fn swap_count(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn first(&self) -> &LinearOrder {
        &self.orders[0]
    }

    pub fn last(&self) -> &LinearOrder {
        self.orders.last().expect("nonempty")
    }

    pub fn universe(&self) -> AltSet {
        self.orders[0].universe()
    }

    pub fn switch_seq(&self) -> SwitchSeq {
        SwitchSeq {
            start: self.orders[0],
            swaps: self.orders.windows(2).map(|w| w[0].alike_unchecked(&w[1]).expect("alike")).collect(),
        }
    }

    /// Every switching pair occurs once.
    pub fn is_geodesic(&self) -> bool {
        let mut seen = 0u128;
        for w in self.orders.windows(2) {
            let bit = w[0].alike_unchecked(&w[1]).expect("alike").bit();
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        debug_assert_eq!(self.swap_count() as u32, self.first().kendall_unchecked(self.last()));
        true
    }

    /// Pointwise restriction with consecutive duplicates removed.
    pub fn restrict(&self, subset: AltSet) -> Result<Self> {
        let mut out: Vec<LinearOrder> = Vec::with_capacity(self.orders.len());
        for o in &self.orders {
            let r = o.restrict(subset)?;
            if out.last() != Some(&r) {
                out.push(r);
            }
        }
        Ok(Self { orders: out })
    }

    pub fn reversed(&self) -> Self {
        Self { orders: self.orders.iter().rev().copied().collect() }
    }

    /// `K(A)`, the set of orders on the path.
    pub fn as_domain(&self) -> Domain {
        Domain::new(self.orders.iter().copied()).expect("paths are nonempty")
    }
}

impl SwitchSeq {
    pub fn new(start: LinearOrder, swaps: Vec<SwitchingPair>) -> Self {
        Self { start, swaps }
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    /// Replay the swaps; fails when a pair is not adjacent at its turn.
    pub fn replay(&self) -> Result<Path> {
        let mut orders = Vec::with_capacity(self.swaps.len() + 1);
        let mut cur = self.start;
        orders.push(cur);
        for (step, &p) in self.swaps.iter().enumerate() {
            cur = cur.swap_pair(p).ok_or_else(|| Error::MalformedSequence {
                step,
                reason: format!("pair ({},{}) is not adjacent in {cur:?}", p.lo(), p.hi()),
            })?;
            orders.push(cur);
        }
        Ok(Path { orders })
    }

    /// Order reached after the first `k` swaps.
    pub fn order_after(&self, k: usize) -> Result<LinearOrder> {
        SwitchSeq::new(self.start, self.swaps[..k].to_vec()).replay().map(|p| *p.last())
    }

    pub fn position(&self, pair: SwitchingPair) -> Option<usize> {
        self.swaps.iter().position(|&p| p == pair)
    }
}

pub fn switch_seq(p: &Path) -> SwitchSeq {
    p.switch_seq()
}

pub fn path_from_seq(s: &SwitchSeq) -> Result<Path> {
    s.replay()
}

pub fn is_geodesic(p: &Path) -> bool {
    p.is_geodesic()
}

pub fn restrict_path(p: &Path, subset: AltSet) -> Result<Path> {
    p.restrict(subset)
}

/// Join two geodesics sharing the junction order, with disjoint switching pairs.
pub fn concat_geodesics(a: &Path, b: &Path) -> Result<Path> {
    if a.last() != b.first() {
        return Err(Error::Precondition(format!("junction mismatch: {:?} vs {:?}", a.last(), b.first())));
    }
    if !a.is_geodesic() || !b.is_geodesic() {
        return Err(Error::Precondition("both inputs must be geodesics".into()));
    }
    let sa: u128 = a.switch_seq().swaps.iter().fold(0, |m, p| m | p.bit());
    let sb: u128 = b.switch_seq().swaps.iter().fold(0, |m, p| m | p.bit());
    if sa & sb != 0 {
        return Err(Error::Precondition("the geodesics share a switching pair".into()));
    }
    let mut orders = a.orders.clone();
    orders.extend_from_slice(&b.orders[1..]);
    Ok(Path { orders })
}

fn check_endpoints(r: &LinearOrder, t: &LinearOrder, within: Option<&Domain>) -> Result<()> {
    if r.universe() != t.universe() {
        return Err(Error::InvalidPair("endpoints over different universes".into()));
    }
    if let Some(d) = within {
        if d.universe() != r.universe() || !d.contains(r) || !d.contains(t) {
            return Err(Error::Precondition("endpoints must belong to the domain".into()));
        }
    }
    Ok(())
}

/// Visit every geodesic from `r` to `t`, depth-first by ascending swap position.
/// The visitor returns `false` to stop early.
pub fn for_each_geodesic(
    r: &LinearOrder,
    t: &LinearOrder,
    within: Option<&Domain>,
    mut visit: impl FnMut(&[LinearOrder]) -> bool,
) -> Result<()> {
    check_endpoints(r, t, within)?;
    let mut stack = vec![*r];
    dfs(&mut stack, t, within, &mut visit);
    Ok(())
}

fn dfs(
    stack: &mut Vec<LinearOrder>,
    t: &LinearOrder,
    within: Option<&Domain>,
    visit: &mut impl FnMut(&[LinearOrder]) -> bool,
) -> bool {
    let u = *stack.last().expect("nonempty");
    if u == *t {
        return visit(stack);
    }
    for i in 0..u.len() - 1 {
        if t.prefers(u.at(i), u.at(i + 1)) {
            continue;
        }
        let v = u.swap_unchecked(i);
        if within.is_none_or(|d| d.contains(&v)) {
            stack.push(v);
            let go_on = dfs(stack, t, within, visit);
            stack.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// All geodesics from `r` to `t`, optionally staying inside `within`.
pub fn enumerate_geodesics(r: &LinearOrder, t: &LinearOrder, within: Option<&Domain>) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    for_each_geodesic(r, t, within, |orders| {
        out.push(Path { orders: orders.to_vec() });
        true
    })?;
    Ok(out)
}

/// The two geodesics between reversed orders on three alternatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dichotomy {
    /// Swaps `(a,b), (a,c), (b,c)` from `abc`; its orders never rank `b` last.
    NeverBottom,
    /// Swaps `(b,c), (a,c), (a,b)` from `abc`; its orders never rank `b` first.
    NeverTop,
}

pub fn triple_dichotomy(g: &Path) -> Result<Dichotomy> {
    let r = g.first();
    if r.len() != 3 || g.last() != &r.reversed() || !g.is_geodesic() {
        return Err(Error::Precondition("expected a geodesic between reversed orders on three alternatives".into()));
    }
    let first = g.switch_seq().swaps[0];
    if first == SwitchingPair::new(r.at(0), r.at(1))? {
        Ok(Dichotomy::NeverBottom)
    } else {
        Ok(Dichotomy::NeverTop)
    }
}

/// Exchange swaps `i` and `i+1`, which must be disjoint.
pub fn commute_adjacent_disjoint(p: &Path, i: usize) -> Result<Path> {
    let mut s = p.switch_seq();
    if i + 1 >= s.swaps.len() {
        return Err(Error::Index { index: i, len: s.swaps.len().saturating_sub(2) });
    }
    if !s.swaps[i].is_disjoint(s.swaps[i + 1]) {
        return Err(Error::Precondition(format!("swaps {i} and {} share an alternative", i + 1)));
    }
    s.swaps.swap(i, i + 1);
    s.replay()
}

/// Equal restrictions to every triple (and equal endpoints).
pub fn paths_equivalent(a: &Path, b: &Path) -> bool {
    if a.universe() != b.universe() || a.first() != b.first() || a.last() != b.last() {
        return false;
    }
    if a.first().len() < 3 {
        return a == b;
    }
    triples(a.universe()).into_iter().all(|t| a.restrict(t.set()).ok() == b.restrict(t.set()).ok())
}

/// What the relative order of two switching pairs forces in a geodesic from
/// `abc` on three alternatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleInference {
    /// The sequence is exactly these three pairs and ends at `cba`.
    Forced([SwitchingPair; 3]),
    /// `first` is the first swap; if the third pair also occurs, the
    /// sequence is `if_complete` and ends at `cba`.
    Leading { first: SwitchingPair, if_complete: [SwitchingPair; 3] },
}

/// Consequence of observing `earlier` before `later` in a geodesic starting at `start`.
pub fn infer_triple_order(
    start: &LinearOrder,
    earlier: SwitchingPair,
    later: SwitchingPair,
) -> Result<TripleInference> {
    if start.len() != 3 {
        return Err(Error::Precondition("expected an order on three alternatives".into()));
    }
    let (a, b, c) = (start.at(0), start.at(1), start.at(2));
    let ab = SwitchingPair::new(a, b)?;
    let ac = SwitchingPair::new(a, c)?;
    let bc = SwitchingPair::new(b, c)?;
    let bottom = [ab, ac, bc];
    let top = [bc, ac, ab];
    let out = match (earlier, later) {
        (x, y) if x == ab && y == ac => TripleInference::Leading { first: ab, if_complete: bottom },
        (x, y) if x == ac && y == ab => TripleInference::Forced(top),
        (x, y) if x == ab && y == bc => TripleInference::Forced(bottom),
        (x, y) if x == bc && y == ab => TripleInference::Forced(top),
        (x, y) if x == ac && y == bc => TripleInference::Forced(bottom),
        (x, y) if x == bc && y == ac => TripleInference::Leading { first: bc, if_complete: top },
        _ => return Err(Error::Precondition("expected two distinct pairs of the triple".into())),
    };
    Ok(out)
}

/// For a geodesic from `abcd`: `(a,c) < (b,c) < (b,d)` forces
/// `(a,b) < (a,c) < (a,d) < (b,d)`, and `(b,d) < (a,b) < (a,c)` forces
/// `(c,d) < (b,d) < (a,d) < (a,c)`. Other patterns force nothing here.
pub fn infer_quadruple_order(start: &LinearOrder, observed: [SwitchingPair; 3]) -> Result<Option<[SwitchingPair; 4]>> {
    if start.len() != 4 {
        return Err(Error::Precondition("expected an order on four alternatives".into()));
    }
    let (a, b, c, d) = (start.at(0), start.at(1), start.at(2), start.at(3));
    let p = |x, y| SwitchingPair::new(x, y).expect("distinct");
    if observed == [p(a, c), p(b, c), p(b, d)] {
        return Ok(Some([p(a, b), p(a, c), p(a, d), p(b, d)]));
    }
    if observed == [p(b, d), p(a, b), p(a, c)] {
        return Ok(Some([p(c, d), p(b, d), p(a, d), p(a, c)]));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{classify, NeverCondition, Triple};

    fn o(s: &str) -> LinearOrder {
        LinearOrder::new(&s.bytes().map(|c| c - b'a').collect::<Vec<_>>()).unwrap()
    }

    fn path(s: &str) -> Path {
        Path::new(s.split_whitespace().map(o).collect()).unwrap()
    }

    fn pr(s: &str) -> SwitchingPair {
        let b = s.as_bytes();
        SwitchingPair::new(b[0] - b'a', b[1] - b'a').unwrap()
    }

    fn seq(s: &str) -> Vec<SwitchingPair> {
        s.split_whitespace().map(pr).collect()
    }

    const A1: &str = "abcd bacd bcad cbad cbda cdba";
    const A2: &str = "abcd bacd bcad bcda cbda cdba";

    #[test]
    fn switch_seq_examples() {
        assert_eq!(path("abc bac bca cba").switch_seq().swaps, seq("ab ac bc"));
        assert_eq!(path(A1).switch_seq().swaps, seq("ab ac bc ad bd"));
        assert!(path("abc").switch_seq().swaps.is_empty());
    }

    #[test]
    fn replay_examples() {
        assert_eq!(SwitchSeq::new(o("abc"), seq("ab")).replay().unwrap(), path("abc bac"));
        assert_eq!(SwitchSeq::new(o("abcd"), seq("ab ac ad bc bd")).replay().unwrap(), path(A2));
        assert!(SwitchSeq::new(o("abc"), seq("ac")).replay().is_err());
    }

    #[test]
    fn geodesic_examples() {
        assert!(path("abc bac bca cba").is_geodesic());
        assert!(!path("abc bac abc").is_geodesic());
        assert!(!path("abc acb cab cba bca").is_geodesic());
        assert!(Path::new(vec![o("abc"), o("cba")]).is_err());
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(path(A1).restrict(0b111).unwrap(), path("abc bac bca cba"));
        assert_eq!(path(A2).restrict(0b111).unwrap(), path("abc bac bca cba"));
        assert_eq!(path("bcad").restrict(0b111).unwrap(), path("bca"));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat_geodesics(&path("abc bac"), &path("bac bca")).unwrap(), path("abc bac bca"));
        assert_eq!(concat_geodesics(&path("abc bac bca"), &path("bca cba")).unwrap(), path("abc bac bca cba"));
        assert!(concat_geodesics(&path("abc bac"), &path("bac abc")).is_err());
        assert!(concat_geodesics(&path("abc bac"), &path("abc acb")).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_geodesics(&o("abc"), &o("cba"), None).unwrap().len(), 2);
        let fig3 = Domain::new(["abc", "bac", "cab", "cba"].map(o)).unwrap();
        assert!(enumerate_geodesics(&o("abc"), &o("cba"), Some(&fig3)).unwrap().is_empty());
        assert_eq!(enumerate_geodesics(&o("bca"), &o("bca"), None).unwrap(), vec![path("bca")]);
    }

    #[test]
    fn dichotomy_examples() {
        let nb = path("abc bac bca cba");
        let nt = path("abc acb cab cba");
        assert_eq!(triple_dichotomy(&nb).unwrap(), Dichotomy::NeverBottom);
        assert_eq!(triple_dichotomy(&nt).unwrap(), Dichotomy::NeverTop);
        assert!(triple_dichotomy(&path("abc bac")).is_err());
        let t = Triple([0, 1, 2]);
        assert_eq!(classify(&nb.as_domain()).unwrap().conditions, vec![NeverCondition::new(t, 1, 3).unwrap()]);
        assert_eq!(classify(&nt.as_domain()).unwrap().conditions, vec![NeverCondition::new(t, 1, 1).unwrap()]);
    }

    #[test]
    fn commute_examples() {
        assert_eq!(commute_adjacent_disjoint(&path(A1), 2).unwrap(), path(A2));
        assert_eq!(commute_adjacent_disjoint(&path(A2), 2).unwrap(), path(A1));
        assert!(commute_adjacent_disjoint(&path("abc bac bca"), 0).is_err());
    }

    #[test]
    fn equivalence_examples() {
        assert!(paths_equivalent(&path(A1), &path(A2)));
        assert!(!paths_equivalent(&path("abc bac bca cba"), &path("abc acb cab cba")));
        assert!(paths_equivalent(&path(A1), &path(A1)));
        assert!(!paths_equivalent(&path("abc bac"), &path("abc acb")));
    }

    #[test]
    fn inference_table() {
        let r = o("abc");
        assert_eq!(
            infer_triple_order(&r, pr("ab"), pr("ac")).unwrap(),
            TripleInference::Leading { first: pr("ab"), if_complete: [pr("ab"), pr("ac"), pr("bc")] }
        );
        assert_eq!(
            infer_triple_order(&r, pr("ac"), pr("ab")).unwrap(),
            TripleInference::Forced([pr("bc"), pr("ac"), pr("ab")])
        );
        assert!(infer_triple_order(&r, pr("ab"), pr("ab")).is_err());
        let q = o("abcd");
        assert_eq!(
            infer_quadruple_order(&q, [pr("ac"), pr("bc"), pr("bd")]).unwrap(),
            Some([pr("ab"), pr("ac"), pr("ad"), pr("bd")])
        );
        assert_eq!(infer_quadruple_order(&q, [pr("ab"), pr("bc"), pr("cd")]).unwrap(), None);
    }
}
