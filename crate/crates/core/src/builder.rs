//! Geodesics that keep a peak-pit domain peak-pit.
//!
//! Given a peak-pit domain `D`, two of its orders `R`, `T` and a subset `B`
//! of at least three alternatives, [`build_geodesic`] returns a geodesic from
//! `R_B` to `T_B` whose orders can be added to `D_B` without breaking the
//! peak-pit property.
//!
//! The construction is an induction on `|B|`. Let `z` be the last alternative
//! of `R_B` and `t_1 … t_q` the alternatives after `z` in `T_B`. A geodesic
//! `G` for `B \ {z}` is built first. `C` is the set of tail pairs that `R`
//! and `T` rank differently, and `C_NT` the pairs `(a, b) ∈ C` (with `a`
//! above `b` in `R`) whose triple with `z` satisfies exactly the peak-pit
//! condition `b N 1`.
//!
//! * If `C_NT` is empty, `z` is walked up past `t_q, …, t_1` at the end.
//! * Otherwise `G` is rearranged by commuting disjoint swaps (stages A2, A3,
//!   A4 below) so that just before the first `C_NT` pair `(d, e)` the last
//!   `q` alternatives are exactly the tail set, every later pair is in `C`,
//!   and every later pair is in `C_NT` or touches an earlier pair of the
//!   suffix. Then `z` is walked up immediately before `(d, e)`.
//!
//! Every stage is checked and any failed check becomes
//! [`Error::ConstructionBug`] with the full state attached.

use std::fmt;

use crate::domains::{extend_with_geodesic_triple, is_peak_pit, peak_pit_conditions, Domain, Triple};
use crate::error::{Error, Result};
use crate::orders::{alts_of, Alt, AltSet, LinearOrder, SwitchingPair};
use crate::paths::{enumerate_geodesics, Path, SwitchSeq};

/// Diagnostic record attached to [`Error::ConstructionBug`].
#[derive(Clone, Debug)]
pub struct BuildFailure {
    pub stage: &'static str,
    pub reason: String,
    pub subset: AltSet,
    pub r: LinearOrder,
    pub t: LinearOrder,
    pub seq: Option<SwitchSeq>,
    pub state: Option<BuilderState>,
}

impl fmt::Display for BuildFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on subset {:#b} ({:?} -> {:?}): {}", self.stage, self.subset, self.r, self.t, self.reason)?;
        if let Some(s) = &self.seq {
            write!(f, "; sequence {:?}", s.swaps)?;
        }
        Ok(())
    }
}

/// One induction step: the recursive geodesic on `B \ {z}` plus the data
/// used to place `z`.
#[derive(Clone, Debug)]
pub struct BuilderState {
    /// `D_B`.
    pub domain: Domain,
    /// `R_B`.
    pub r: LinearOrder,
    /// `T_B`.
    pub t: LinearOrder,
    pub z: Alt,
    /// `t_1 … t_q`.
    pub tail: Vec<Alt>,
    pub c: Vec<SwitchingPair>,
    pub c_nt: Vec<SwitchingPair>,
    /// Geodesic from `R_{B\{z}}` to `T_{B\{z}}`.
    pub current: SwitchSeq,
}

/// Swap closure of `w` over the suffix of a sequence starting at `from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapClosure {
    pub w: Alt,
    pub from: usize,
    /// Alternatives swapping with `w` in the suffix.
    pub h: Vec<Alt>,
    /// In sequence order.
    pub k1: Vec<SwitchingPair>,
    /// The rest of the suffix, in sequence order.
    pub k2: Vec<SwitchingPair>,
}

/// Stage names used in traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    /// `R_B = T_B`.
    Singleton,
    /// `|B| = 3`.
    Base,
    /// Geodesic returned for `B \ {z}`.
    Recursed,
    A2,
    A3,
    A4,
    /// Final geodesic on `B`.
    Placed,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Singleton => "singleton",
            Stage::Base => "base",
            Stage::Recursed => "recursed",
            Stage::A2 => "A2",
            Stage::A3 => "A3",
            Stage::A4 => "A4",
            Stage::Placed => "placed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceLevel {
    pub subset: AltSet,
    pub z: Option<Alt>,
    pub tail: Vec<Alt>,
    pub c: Vec<SwitchingPair>,
    pub c_nt: Vec<SwitchingPair>,
    pub stages: Vec<(Stage, SwitchSeq)>,
}

/// Innermost level first.
pub type Trace = Vec<TraceLevel>;

#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    /// On a construction failure, fall back to brute-force search and report
    /// that it was used. Diagnostic only.
    pub oracle_fallback: bool,
}

#[derive(Clone, Debug)]
pub struct BuildOutcome {
    pub geodesic: Path,
    pub trace: Trace,
    /// Set when the brute-force fallback produced the result.
    pub fallback: Option<String>,
}

impl BuilderState {
    pub fn new(domain: Domain, r: LinearOrder, t: LinearOrder, current: SwitchSeq) -> Result<Self> {
        let z = r.last();
        let zpos = t.position(z).ok_or_else(|| Error::Precondition("z missing from T".into()))?;
        let tail: Vec<Alt> = t.iter().skip(zpos + 1).collect();
        let mut c = Vec::new();
        let mut c_nt = Vec::new();
        for (i, &x) in tail.iter().enumerate() {
            for &y in &tail[i + 1..] {
                // T ranks x above y, R the other way round; x is then the
                // later of the two in R.
                if !r.prefers(y, x) {
                    continue;
                }
                let pair = SwitchingPair::new(x, y)?;
                c.push(pair);
                let np = peak_pit_conditions(&domain, Triple::new(x, y, z)?);
                if np.len() == 1 && np[0].banned == x && np[0].k == 1 {
                    c_nt.push(pair);
                }
            }
        }
        c.sort_unstable();
        c_nt.sort_unstable();
        Ok(Self { domain, r, t, z, tail, c, c_nt, current })
    }

    fn bbar(&self) -> AltSet {
        self.domain.universe() & !(1 << self.z)
    }

    fn fail(&self, stage: &'static str, reason: impl Into<String>) -> Error {
        Error::ConstructionBug(Box::new(BuildFailure {
            stage,
            reason: reason.into(),
            subset: self.domain.universe(),
            r: self.r,
            t: self.t,
            seq: Some(self.current.clone()),
            state: Some(self.clone()),
        }))
    }

    /// Position of `(d, e)`, the first `C_NT` pair in the current sequence.
    pub fn first_c_nt(&self) -> Option<usize> {
        self.current.swaps.iter().position(|p| self.c_nt.contains(p))
    }

    /// Order immediately before swap `pos`.
    pub fn order_before(&self, pos: usize) -> LinearOrder {
        self.current.order_after(pos).expect("current replays")
    }

    /// The last `q` alternatives before `(d, e)` are the tail set.
    pub fn a2_holds(&self) -> bool {
        let Some(pos) = self.first_c_nt() else { return true };
        let l = self.order_before(pos);
        let q = self.tail.len();
        let mut last: Vec<Alt> = l.iter().skip(l.len() - q).collect();
        let mut tail = self.tail.clone();
        last.sort_unstable();
        tail.sort_unstable();
        last == tail
    }

    /// Every pair after `(d, e)` is in `C`.
    pub fn a3_holds(&self) -> bool {
        let Some(pos) = self.first_c_nt() else { return true };
        self.current.swaps[pos + 1..].iter().all(|p| self.c.contains(p))
    }

    /// Every pair after `(d, e)` is in `C_NT` or meets an earlier pair of the suffix.
    pub fn a4_holds(&self) -> bool {
        let Some(pos) = self.first_c_nt() else { return true };
        let s = &self.current.swaps[pos..];
        (1..s.len()).all(|m| self.c_nt.contains(&s[m]) || s[..m].iter().any(|p| !p.is_disjoint(s[m])))
    }

    fn with_swaps(&self, stage: &'static str, target: Vec<SwitchingPair>) -> Result<Self> {
        let swaps = reorder(&self.current.swaps, &target).map_err(|e| self.fail(stage, e))?;
        let mut next = self.clone();
        next.current = SwitchSeq::new(self.current.start, swaps);
        Ok(next)
    }
}

/// Rearrange `swaps` into `target` one adjacent transposition at a time,
/// requiring each transposed pair of swaps to be disjoint.
fn reorder(swaps: &[SwitchingPair], target: &[SwitchingPair]) -> std::result::Result<Vec<SwitchingPair>, String> {
    let mut s = swaps.to_vec();
    if s.len() != target.len() {
        return Err("target is not a rearrangement".into());
    }
    for (i, want) in target.iter().enumerate() {
        let j = (i..s.len()).find(|&j| s[j] == *want).ok_or("target is not a rearrangement")?;
        for k in (i + 1..=j).rev() {
            if !s[k - 1].is_disjoint(s[k]) {
                return Err(format!("cannot commute {:?} past {:?}", s[k], s[k - 1]));
            }
            s.swap(k - 1, k);
        }
    }
    Ok(s)
}

/// Swap closure of `w` on the suffix of `seq` starting at `from`.
///
/// `K1` holds every suffix pair `(a, b)` for which some `h` swapping with
/// `w` and some suffix pair `(h, u)` satisfy `(a, b) ⊴ (h, u) ⊴ (h, w)` with
/// `{a, b}` meeting `{h, u}`. `K2` is the rest of the suffix. Each `K1` pair
/// is checked to be disjoint from every earlier `K2` pair.
pub fn swap_closure(seq: &SwitchSeq, w: Alt, from: usize) -> Result<SwapClosure> {
    let k = seq.swaps.get(from..).unwrap_or(&[]);
    let hw: Vec<(Alt, usize)> = k.iter().enumerate().filter_map(|(i, p)| p.other(w).map(|h| (h, i))).collect();
    if hw.is_empty() {
        return Err(Error::EmptySwapSet(w));
    }
    let mut in_k1 = vec![false; k.len()];
    for &(h, phw) in &hw {
        for j in (0..=phw).filter(|&j| k[j].contains(h)) {
            for i in 0..=j {
                if !k[i].is_disjoint(k[j]) {
                    in_k1[i] = true;
                }
            }
        }
    }
    for j in 0..k.len() {
        for i in 0..j {
            if in_k1[j] && !in_k1[i] && !k[i].is_disjoint(k[j]) {
                return Err(Error::ConstructionBug(Box::new(BuildFailure {
                    stage: "swap_closure",
                    reason: format!("K1 pair {:?} meets earlier K2 pair {:?}", k[j], k[i]),
                    subset: seq.start.universe(),
                    r: seq.start,
                    t: seq.start,
                    seq: Some(seq.clone()),
                    state: None,
                })));
            }
        }
    }
    let (mut k1, mut k2) = (Vec::new(), Vec::new());
    for (i, &p) in k.iter().enumerate() {
        if in_k1[i] {
            k1.push(p);
        } else {
            k2.push(p);
        }
    }
    Ok(SwapClosure { w, from, h: hw.into_iter().map(|(h, _)| h).collect(), k1, k2 })
}

/// Move the swap closure of `w` in front of `(d, e)` so that the order just
/// before `(d, e)` ends with the tail set.
pub fn normalize_a2(state: &BuilderState) -> Result<BuilderState> {
    let pos = state.first_c_nt().ok_or_else(|| state.fail("A2", "C_NT is empty"))?;
    if state.a2_holds() {
        return Ok(state.clone());
    }
    let de = state.current.swaps[pos];
    let t_bar = state.t.restrict_unchecked(state.bbar());
    let t1 = *state.tail.first().ok_or_else(|| state.fail("A2", "empty tail but A2 fails"))?;
    let p1 = t_bar.position(t1).expect("tail inside T");
    if p1 == 0 {
        return Err(state.fail("A2", "tail is all of B\\{z} but A2 fails"));
    }
    let w = t_bar.at(p1 - 1);
    let closure = swap_closure(&state.current, w, pos).map_err(|e| match e {
        Error::EmptySwapSet(_) => state.fail("A2", format!("{w} has an empty swap set")),
        other => other,
    })?;
    if closure.k1.contains(&de) {
        return Err(state.fail("A2", "(d,e) fell into K1"));
    }
    if let Some(p) = closure.k1.iter().find(|p| state.c_nt.contains(p)) {
        return Err(state.fail("A2", format!("C_NT pair {p:?} fell into K1")));
    }
    let mut target = state.current.swaps[..pos].to_vec();
    target.extend(&closure.k1);
    target.extend(&closure.k2);
    let next = state.with_swaps("A2", target)?;
    if next.first_c_nt() != Some(pos + closure.k1.len()) || !next.a2_holds() {
        return Err(next.fail("A2", "tail condition still fails after moving the closure"));
    }
    Ok(next)
}

/// Move every pair after `(d, e)` that is not in `C` to just before `(d, e)`.
pub fn normalize_a3(state: &BuilderState) -> Result<BuilderState> {
    let pos = state.first_c_nt().ok_or_else(|| state.fail("A3", "C_NT is empty"))?;
    let s = &state.current.swaps;
    let mut target = s[..pos].to_vec();
    target.extend(s[pos + 1..].iter().filter(|p| !state.c.contains(p)));
    target.push(s[pos]);
    target.extend(s[pos + 1..].iter().filter(|p| state.c.contains(p)));
    let next = state.with_swaps("A3", target)?;
    if !next.a2_holds() || !next.a3_holds() {
        return Err(next.fail("A3", "A2/A3 fail after moving non-C pairs"));
    }
    Ok(next)
}

/// Sweep the suffix after `(d, e)` in ascending order and move every pair
/// that is outside `C_NT` and disjoint from all unmoved earlier suffix pairs
/// to just before `(d, e)`, keeping relative order.
pub fn normalize_a4(state: &BuilderState) -> Result<BuilderState> {
    let pos = state.first_c_nt().ok_or_else(|| state.fail("A4", "C_NT is empty"))?;
    let s = &state.current.swaps[pos..];
    let mut moved = vec![false; s.len()];
    for m in 1..s.len() {
        moved[m] = !state.c_nt.contains(&s[m]) && (0..m).all(|l| moved[l] || s[l].is_disjoint(s[m]));
    }
    let mut target = state.current.swaps[..pos].to_vec();
    target.extend((0..s.len()).filter(|&m| moved[m]).map(|m| s[m]));
    target.extend((0..s.len()).filter(|&m| !moved[m]).map(|m| s[m]));
    let next = state.with_swaps("A4", target)?;
    if !next.a2_holds() || !next.a3_holds() || !next.a4_holds() {
        return Err(next.fail("A4", "A2-A4 fail after the sweep"));
    }
    Ok(next)
}

fn z_pairs(z: Alt, above: &[Alt]) -> Vec<SwitchingPair> {
    above.iter().rev().copied().map(|a| SwitchingPair::new(a, z).expect("z is not in the tail")).collect()
}

/// Insert `(t'_q, z), …, (t'_1, z)` just before `(d, e)`, where `t'_1 … t'_q`
/// ends the order preceding `(d, e)`.
fn place_before_first_c_nt(state: &BuilderState) -> Result<SwitchSeq> {
    let pos = state.first_c_nt().ok_or_else(|| state.fail("placement", "C_NT is empty"))?;
    let l = state.order_before(pos);
    let q = state.tail.len();
    let mut swaps = state.current.swaps[..pos].to_vec();
    swaps.extend(z_pairs(state.z, &l.to_vec()[l.len() - q..]));
    swaps.extend(&state.current.swaps[pos..]);
    Ok(SwitchSeq::new(state.r, swaps))
}

/// Append `(t_q, z), …, (t_1, z)`.
fn place_at_end(state: &BuilderState) -> SwitchSeq {
    let mut swaps = state.current.swaps.clone();
    swaps.extend(z_pairs(state.z, &state.tail));
    SwitchSeq::new(state.r, swaps)
}

fn check_result(
    domain: &Domain,
    r: &LinearOrder,
    t: &LinearOrder,
    seq: &SwitchSeq,
) -> std::result::Result<Path, String> {
    let path = seq.replay().map_err(|e| e.to_string())?;
    if path.last() != t {
        return Err(format!("ends at {:?} instead of {t:?}", path.last()));
    }
    if path.first() != r || !path.is_geodesic() {
        return Err("not a geodesic".into());
    }
    let union = domain.union(path.orders().iter().copied()).map_err(|e| e.to_string())?;
    if !is_peak_pit(&union) {
        return Err("D_B together with the geodesic is not peak-pit".into());
    }
    Ok(path)
}

fn bug(
    stage: &'static str,
    reason: String,
    domain: &Domain,
    r: &LinearOrder,
    t: &LinearOrder,
    seq: Option<SwitchSeq>,
) -> Error {
    Error::ConstructionBug(Box::new(BuildFailure {
        stage,
        reason,
        subset: domain.universe(),
        r: *r,
        t: *t,
        seq,
        state: None,
    }))
}

fn step(mut state: BuilderState, level: &mut TraceLevel) -> Result<SwitchSeq> {
    level.z = Some(state.z);
    level.tail = state.tail.clone();
    level.c = state.c.clone();
    level.c_nt = state.c_nt.clone();
    level.stages.push((Stage::Recursed, state.current.clone()));
    let seq = if state.c_nt.is_empty() {
        place_at_end(&state)
    } else {
        state = normalize_a2(&state)?;
        level.stages.push((Stage::A2, state.current.clone()));
        state = normalize_a3(&state)?;
        level.stages.push((Stage::A3, state.current.clone()));
        state = normalize_a4(&state)?;
        level.stages.push((Stage::A4, state.current.clone()));
        place_before_first_c_nt(&state)?
    };
    check_result(&state.domain, &state.r, &state.t, &seq).map_err(|e| state.fail("placement", e))?;
    Ok(seq)
}

/// One induction step on its own: given any geodesic `g` from `R_{B\{z}}`
/// to `T_{B\{z}}` that keeps `D_{B\{z}}` peak-pit, where `z` is the last
/// alternative of `r`, place `z` and return the geodesic on `B`. Here `d`
/// is already restricted to `B`.
pub fn extend_geodesic(d: &Domain, r: &LinearOrder, t: &LinearOrder, g: &Path) -> Result<(Path, TraceLevel)> {
    if d.n() < 4 || !d.contains(r) || !d.contains(t) {
        return Err(Error::Precondition("need |B| >= 4 with R and T in D_B".into()));
    }
    let bbar = d.universe() & !(1 << r.last());
    let (rb, tb) = (r.restrict_unchecked(bbar), t.restrict_unchecked(bbar));
    if g.first() != &rb || g.last() != &tb || !g.is_geodesic() {
        return Err(Error::Precondition("g is not a geodesic between the restrictions of R and T".into()));
    }
    if !is_peak_pit(&d.restrict_unchecked(bbar).union(g.orders().iter().copied())?) {
        return Err(Error::Precondition("g does not keep the restricted domain peak-pit".into()));
    }
    let mut level = TraceLevel {
        subset: d.universe(),
        z: None,
        tail: Vec::new(),
        c: Vec::new(),
        c_nt: Vec::new(),
        stages: Vec::new(),
    };
    let seq = step(BuilderState::new(d.clone(), *r, *t, g.switch_seq())?, &mut level)?;
    level.stages.push((Stage::Placed, seq.clone()));
    Ok((seq.replay()?, level))
}

fn build_level(domain: &Domain, r: LinearOrder, t: LinearOrder, trace: &mut Trace) -> Result<SwitchSeq> {
    let subset = domain.universe();
    let mut level =
        TraceLevel { subset, z: None, tail: Vec::new(), c: Vec::new(), c_nt: Vec::new(), stages: Vec::new() };
    if r == t {
        let seq = SwitchSeq::new(r, Vec::new());
        level.stages.push((Stage::Singleton, seq.clone()));
        trace.push(level);
        return Ok(seq);
    }
    if domain.n() == 3 {
        let seq = extend_with_geodesic_triple(domain, &r, &t)
            .map_err(|e| bug("base", e.to_string(), domain, &r, &t, None))?
            .switch_seq();
        check_result(domain, &r, &t, &seq).map_err(|e| bug("base", e, domain, &r, &t, Some(seq.clone())))?;
        level.stages.push((Stage::Base, seq.clone()));
        trace.push(level);
        return Ok(seq);
    }
    let bbar = subset & !(1 << r.last());
    let g =
        build_level(&domain.restrict_unchecked(bbar), r.restrict_unchecked(bbar), t.restrict_unchecked(bbar), trace)?;
    let seq = step(BuilderState::new(domain.clone(), r, t, g)?, &mut level)?;
    level.stages.push((Stage::Placed, seq.clone()));
    trace.push(level);
    Ok(seq)
}

fn check_inputs(d: &Domain, r: &LinearOrder, t: &LinearOrder, subset: AltSet) -> Result<()> {
    if !d.contains(r) || !d.contains(t) {
        return Err(Error::Precondition("R and T must belong to the domain".into()));
    }
    if subset & !d.universe() != 0 || subset.count_ones() < 3 {
        return Err(Error::InvalidSubset(format!(
            "B = {subset:#b} must be a subset of the universe with at least 3 alternatives"
        )));
    }
    if !is_peak_pit(d) {
        return Err(Error::Precondition("domain is not peak-pit".into()));
    }
    Ok(())
}

/// Geodesic from `R_B` to `T_B` keeping `D_B` peak-pit.
pub fn build_geodesic(d: &Domain, r: &LinearOrder, t: &LinearOrder, subset: AltSet) -> Result<Path> {
    build_geodesic_with(d, r, t, subset, &BuildOptions::default()).map(|o| o.geodesic)
}

pub fn build_geodesic_with(
    d: &Domain,
    r: &LinearOrder,
    t: &LinearOrder,
    subset: AltSet,
    options: &BuildOptions,
) -> Result<BuildOutcome> {
    check_inputs(d, r, t, subset)?;
    let domain = d.restrict_unchecked(subset);
    let (rb, tb) = (r.restrict_unchecked(subset), t.restrict_unchecked(subset));
    let mut trace = Trace::new();
    match build_level(&domain, rb, tb, &mut trace) {
        Ok(seq) => Ok(BuildOutcome { geodesic: seq.replay()?, trace, fallback: None }),
        Err(Error::ConstructionBug(f)) if options.oracle_fallback => {
            let found = enumerate_geodesics(&rb, &tb, None)?
                .into_iter()
                .find(|g| domain.union(g.orders().iter().copied()).map(|u| is_peak_pit(&u)).unwrap_or(false));
            match found {
                Some(g) => Ok(BuildOutcome { geodesic: g, trace, fallback: Some(f.to_string()) }),
                None => Err(Error::ConstructionBug(f)),
            }
        }
        Err(e) => Err(e),
    }
}

/// Subsets of `universe` with at least three members, by increasing bitmask.
pub fn subsets_of_size_at_least_3(universe: AltSet) -> Vec<AltSet> {
    let ids: Vec<Alt> = alts_of(universe).collect();
    (0u32..1 << ids.len())
        .filter(|m| m.count_ones() >= 3)
        .map(|m| ids.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).fold(0, |s, (_, &a)| s | 1 << a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::paths_equivalent;

    fn o(s: &str) -> LinearOrder {
        LinearOrder::new(&s.bytes().map(|c| c - b'a').collect::<Vec<_>>()).unwrap()
    }

    fn dom(s: &str) -> Domain {
        Domain::new(s.split_whitespace().map(o)).unwrap()
    }

    fn pr(s: &str) -> SwitchingPair {
        let b = s.as_bytes();
        SwitchingPair::new(b[0] - b'a', b[1] - b'a').unwrap()
    }

    fn seq(start: &str, s: &str) -> SwitchSeq {
        SwitchSeq::new(o(start), s.split_whitespace().map(pr).collect())
    }

    #[test]
    fn triple_examples() {
        let d = dom("abc acb cab cba");
        let g = build_geodesic(&d, &o("abc"), &o("cba"), 0b111).unwrap();
        assert_eq!(g.orders(), &[o("abc"), o("acb"), o("cab"), o("cba")]);
        let g = build_geodesic(&d, &o("acb"), &o("acb"), 0b111).unwrap();
        assert_eq!(g.orders(), &[o("acb")]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let d = dom("abc acb cab cba");
        assert!(build_geodesic(&d, &o("abc"), &o("bac"), 0b111).is_err());
        assert!(build_geodesic(&d, &o("abc"), &o("cba"), 0b11).is_err());
        assert!(build_geodesic(&dom("abc bac cab cba"), &o("abc"), &o("cba"), 0b111).is_err());
    }

    #[test]
    fn minimal_closure() {
        // w = d swaps only with c, and nothing precedes that swap.
        let s = seq("abcd", "cd ab");
        let cl = swap_closure(&s, 3, 0).unwrap();
        assert_eq!(cl.k1, vec![pr("cd")]);
        assert_eq!(cl.k2, vec![pr("ab")]);
        assert!(swap_closure(&s, 0, 1).is_ok());
        assert!(matches!(swap_closure(&s, 3, 1), Err(Error::EmptySwapSet(3))));
    }

    #[test]
    fn closure_follows_shared_alternatives() {
        // From abhw: (a,b), (h,a)... h swaps with b then a, then with w.
        // a=0 b=1 c=h d=w
        let s = seq("abcd", "ab ac bc cd");
        let cl = swap_closure(&s, 3, 0).unwrap();
        assert_eq!(cl.h, vec![2]);
        assert_eq!(cl.k1, vec![pr("ab"), pr("ac"), pr("bc"), pr("cd")]);
        assert!(cl.k2.is_empty());
    }

    #[test]
    fn closure_leaves_disjoint_swap_behind() {
        let al = crate::text::Alphabet::new("habwde".chars()).unwrap();
        let s = al.parse_seq(&al.parse_order("habwde").unwrap(), "(d,e),(a,b),(h,b),(h,a),(h,w),(h,e)").unwrap();
        assert_eq!(al.format_order(s.replay().unwrap().last()), "bawehd");
        let cl = swap_closure(&s, al.id('w').unwrap(), 0).unwrap();
        assert_eq!(al.format_seq(&SwitchSeq::new(s.start, cl.k1.clone())), "(a,b),(h,b),(h,a),(h,w)");
        assert_eq!(cl.k2.first().map(|&p| al.format_pair(p)).as_deref(), Some("(d,e)"));
    }

    #[test]
    fn reorder_refuses_overlapping_commutes() {
        assert!(reorder(&[pr("ab"), pr("cd")], &[pr("cd"), pr("ab")]).is_ok());
        assert!(reorder(&[pr("ab"), pr("bc")], &[pr("bc"), pr("ab")]).is_err());
    }

    #[test]
    fn stages_preserve_equivalence() {
        // D on abcd where C_NT is nonempty at the top level.
        let d = dom("abcd dcba");
        let out = build_geodesic_with(&d, &o("abcd"), &o("dcba"), 0b1111, &BuildOptions::default()).unwrap();
        assert!(out.geodesic.is_geodesic());
        for level in &out.trace {
            let recursed = level.stages.iter().find(|(s, _)| *s == Stage::Recursed);
            if let Some((_, base)) = recursed {
                let base = base.replay().unwrap();
                for (stage, s) in &level.stages {
                    if matches!(stage, Stage::A2 | Stage::A3 | Stage::A4) {
                        assert!(paths_equivalent(&base, &s.replay().unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn subsets_enumerated() {
        assert_eq!(subsets_of_size_at_least_3(0b1111).len(), 5);
        assert_eq!(subsets_of_size_at_least_3(0b11111).len(), 16);
    }
}
