//! Checkers for the auxiliary facts the builder's correctness rests on.
//!
//! None of these are called by the builder. Each function scans every
//! instance of a hypothesis inside a concrete domain and reports instances
//! whose conclusion fails, together with how many instances it examined.
//! Alternative names in [`Lemma`] follow the shape of `R` on the
//! alternatives involved, e.g. [`Lemma::Fgsz`] covers `R = f g s z`.

use std::collections::BTreeMap;

use crate::builder::swap_closure;
use crate::domains::{is_peak_pit, peak_pit_conditions, Domain, Triple};
use crate::error::Result;
use crate::orders::{alt_set, alts_of, Alt, AltSet, LinearOrder, SwitchingPair};
use crate::paths::{enumerate_geodesics, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lemma {
    /// `R = abvz`, `T = vzba`, `N_p(abz) = {b N 1}` forces `N_p(abv) = {b N 1}`
    /// and the swap order `(b,v), (a,v), (a,b)` on any valid geodesic.
    Abvz,
    /// A swap-closure pair `(a, b)` with `L = ab..z`, `w` above `z` and
    /// `T = w z b a` never has `N_p(abz) = {b N 1}`.
    Closure,
    /// `R = fgsz`, `T ∈ {zgsf, zsgf}`, `N_p(fgz) = {g N 1}`, `(f,g)` first.
    Fgsz,
    /// `R = fguz`, `T = zugf`, `N_p(guz) = {u N 1}`, `(g,u)` first.
    Fguz,
    /// `R = sfgz`, `T ∈ {zgsf, zgfs}`, `g N 1` on `fgz`, `(f,g)` first.
    Sfgz,
    /// `R = fsgz`, `T = zgsf`, `g N 1` on `fgz`, `(f,s) ◁ (f,g) ◁ (s,g)`.
    FsgzForward,
    /// Same, with `(s,g) ◁ (f,g) ◁ (f,s)`.
    FsgzBackward,
    /// `R = fabsz`, `T = zbaf` on `abfz`, no `s N 1` on `fsz`, and
    /// `(a,b) ◁ (f,b) ◁ (f,a) ◁ (f,s)` force `b N 3` on `abz`.
    Fabsz,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaViolation {
    pub lemma: Lemma,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    /// Instances whose hypothesis held.
    pub instances: BTreeMap<Lemma, usize>,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    fn record(&mut self, lemma: Lemma, ok: bool, detail: impl FnOnce() -> String) {
        *self.instances.entry(lemma).or_default() += 1;
        if !ok {
            self.violations.push(LemmaViolation { lemma, detail: detail() });
        }
    }

    pub fn merge(&mut self, other: LemmaReport) {
        for (k, v) in other.instances {
            *self.instances.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
    }
}

fn has(d: &Domain, [x, y, z]: [Alt; 3], banned: Alt, k: u8) -> bool {
    let t = Triple::new(x, y, z).expect("distinct");
    peak_pit_conditions(d, t).iter().any(|c| c.banned == banned && c.k == k)
}

fn only(d: &Domain, [x, y, z]: [Alt; 3], banned: Alt, k: u8) -> bool {
    let t = Triple::new(x, y, z).expect("distinct");
    let np = peak_pit_conditions(d, t);
    np.len() == 1 && np[0].banned == banned && np[0].k == k
}

fn pair(a: Alt, b: Alt) -> SwitchingPair {
    SwitchingPair::new(a, b).expect("distinct")
}

fn is(o: &LinearOrder, alts: &[Alt]) -> bool {
    o.restrict_unchecked(alt_set(alts.iter().copied())).iter().eq(alts.iter().copied())
}

/// Pairs occur in `g` in the given order.
fn in_order(g: &Path, pairs: &[SwitchingPair]) -> bool {
    let s = g.switch_seq();
    let pos: Option<Vec<usize>> = pairs.iter().map(|&p| s.position(p)).collect();
    pos.is_some_and(|v| v.windows(2).all(|w| w[0] < w[1]))
}

/// Every geodesic from `r_S` to `t_S` whose orders keep `d_S` peak-pit.
pub fn valid_geodesics(d: &Domain, r: &LinearOrder, t: &LinearOrder, subset: AltSet) -> Result<Vec<Path>> {
    let ds = d.restrict(subset)?;
    let all = enumerate_geodesics(&r.restrict(subset)?, &t.restrict(subset)?, None)?;
    Ok(all.into_iter().filter(|g| is_peak_pit(&ds.union(g.orders().iter().copied()).expect("same universe"))).collect())
}

/// The facts about four alternatives, for every 4-subset of `d`'s universe.
/// `d` must be peak-pit and contain `r` and `t`.
pub fn check_four(d: &Domain, r: &LinearOrder, t: &LinearOrder) -> Result<LemmaReport> {
    let mut rep = LemmaReport::default();
    let ids: Vec<Alt> = alts_of(d.universe()).collect();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            for k in j + 1..ids.len() {
                for l in k + 1..ids.len() {
                    let q = alt_set([ids[i], ids[j], ids[k], ids[l]]);
                    let rq = r.restrict_unchecked(q).to_vec();
                    check_quadruple(&d.restrict_unchecked(q), r, t, [rq[0], rq[1], rq[2], rq[3]], &mut rep)?;
                }
            }
        }
    }
    Ok(rep)
}

fn check_quadruple(d: &Domain, r: &LinearOrder, t: &LinearOrder, q: [Alt; 4], rep: &mut LemmaReport) -> Result<()> {
    let [p0, p1, p2, z] = q;
    let tri = |a: Alt, b: Alt, c: Alt| alt_set([a, b, c]);

    // R = a b v z.
    let (a, b, v) = (p0, p1, p2);
    if is(t, &[v, z, b, a]) && only(d, [a, b, z], b, 1) {
        let forced = only(d, [a, b, v], b, 1);
        rep.record(Lemma::Abvz, forced, || format!("N_p on {{{a},{b},{v}}} is not {{{b}N1}}"));
        for g in valid_geodesics(d, r, t, tri(a, b, v))? {
            let ok = in_order(&g, &[pair(b, v), pair(a, v), pair(a, b)]);
            rep.record(Lemma::Abvz, ok, || format!("geodesic {:?} on {{{a},{b},{v}}} swaps out of order", g.orders()));
        }
    }

    // R = f g s z.
    let (f, g_, s) = (p0, p1, p2);
    if (is(t, &[z, g_, s, f]) || is(t, &[z, s, g_, f])) && only(d, [f, g_, z], g_, 1) {
        for g in valid_geodesics(d, r, t, tri(f, g_, s))? {
            if g.switch_seq().swaps.first() == Some(&pair(f, g_)) {
                rep.record(Lemma::Fgsz, has(d, [f, s, z], s, 1), || format!("{s}N1 missing on {{{f},{s},{z}}}"));
            }
        }
    }

    // R = f g u z.
    let (f, g_, u) = (p0, p1, p2);
    if is(t, &[z, u, g_, f]) && only(d, [g_, u, z], u, 1) {
        for g in valid_geodesics(d, r, t, tri(f, g_, u))? {
            if g.switch_seq().swaps.first() == Some(&pair(g_, u)) {
                rep.record(Lemma::Fguz, only(d, [f, u, z], u, 1), || {
                    format!("N_p on {{{f},{u},{z}}} is not {{{u}N1}}")
                });
            }
        }
    }

    // R = s f g z.
    let (s, f, g_) = (p0, p1, p2);
    if (is(t, &[z, g_, s, f]) || is(t, &[z, g_, f, s])) && has(d, [f, g_, z], g_, 1) {
        for g in valid_geodesics(d, r, t, tri(f, g_, s))? {
            if g.switch_seq().swaps.first() == Some(&pair(f, g_)) {
                rep.record(Lemma::Sfgz, has(d, [g_, s, z], g_, 1), || format!("{g_}N1 missing on {{{g_},{s},{z}}}"));
            }
        }
    }

    // R = f s g z.
    let (f, s, g_) = (p0, p1, p2);
    if is(t, &[z, g_, s, f]) && has(d, [f, g_, z], g_, 1) {
        for g in valid_geodesics(d, r, t, tri(f, g_, s))? {
            if in_order(&g, &[pair(f, s), pair(f, g_), pair(s, g_)]) {
                rep.record(Lemma::FsgzForward, has(d, [g_, s, z], g_, 1), || {
                    format!("{g_}N1 missing on {{{g_},{s},{z}}}")
                });
            }
            if in_order(&g, &[pair(s, g_), pair(f, g_), pair(f, s)]) {
                rep.record(Lemma::FsgzBackward, has(d, [f, s, z], s, 1), || {
                    format!("{s}N1 missing on {{{f},{s},{z}}}")
                });
            }
        }
    }
    Ok(())
}

/// The swap-closure fact for one valid geodesic `g` from `L_{A\{z}}` to
/// `T_{A\{z}}`, over every `w` that swaps in `g`.
///
/// The fact holds when `z` is ranked last in `L`, which is how the builder
/// uses it. For other `z` it can fail; see the `closure_needs_z_last` test.
pub fn check_closure(d: &Domain, l: &LinearOrder, t: &LinearOrder, z: Alt, g: &Path) -> Result<LemmaReport> {
    let mut rep = LemmaReport::default();
    let seq = g.switch_seq();
    let rest = d.universe() & !(1 << z);
    for w in alts_of(rest) {
        if !seq.swaps.iter().any(|p| p.contains(w)) || !l.prefers(w, z) {
            continue;
        }
        let k1 = swap_closure(&seq, w, 0)?.k1;
        for p in k1 {
            let (a, b) = if l.prefers(p.lo(), p.hi()) { (p.lo(), p.hi()) } else { (p.hi(), p.lo()) };
            if a == w || b == w || !l.prefers(b, z) || !is(t, &[w, z, b, a]) {
                continue;
            }
            rep.record(Lemma::Closure, !only(d, [a, b, z], b, 1), || {
                format!("closure pair ({a},{b}) of {w} has N_p = {{{b}N1}} on {{{a},{b},{z}}}")
            });
        }
    }
    Ok(rep)
}

/// The five-alternative fact for one valid geodesic `g` from `R_{B\{z}}`
/// to `T_{B\{z}}`, over every choice of `a, b, f, s`.
pub fn check_fabsz(d: &Domain, r: &LinearOrder, t: &LinearOrder, z: Alt, g: &Path) -> Result<LemmaReport> {
    let mut rep = LemmaReport::default();
    let others: Vec<Alt> = alts_of(d.universe() & !(1 << z)).collect();
    for &f in &others {
        for &a in &others {
            for &b in &others {
                for &s in &others {
                    if alt_set([f, a, b, s]).count_ones() != 4 {
                        continue;
                    }
                    if !is(r, &[f, a, b, s, z]) || !is(t, &[z, b, a, f]) || has(d, [f, s, z], s, 1) {
                        continue;
                    }
                    if in_order(g, &[pair(a, b), pair(f, b), pair(f, a), pair(f, s)]) {
                        rep.record(Lemma::Fabsz, has(d, [a, b, z], b, 3), || {
                            format!("{b}N3 missing on {{{a},{b},{z}}}")
                        });
                    }
                }
            }
        }
    }
    Ok(rep)
}
