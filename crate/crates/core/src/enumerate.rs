//! Exhaustive enumeration of maximal Condorcet and peak-pit domains, random
//! peak-pit domains, and end-to-end checks of the three characterizations.
//!
//! Every maximal domain of a family equals the set `D(N)` of all orders that
//! satisfy some assignment `N` of one never-condition per triple, so the
//! search walks assignments instead of order subsets. An assignment is kept
//! only if each triple carries the smallest condition its final domain
//! satisfies; that makes every maximal domain appear exactly once.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write as _;
use std::path::{Path as FsPath, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{is_connected, is_directly_connected, is_directly_connected_with};
use crate::domains::{
    is_maximal_condorcet, is_maximal_peak_pit, is_peak_pit, satisfied_conditions, triples, Domain, Family, TripleMasks,
    VIOLATORS,
};
use crate::error::{Error, Result};
use crate::orders::{all_orders, full_set, LinearOrder};
use crate::par::{self, Exec};

const WORDS: usize = 12;

/// Set of orders over `0..n`, `n <= 6`, indexed by lexicographic rank.
#[derive(Clone, Copy, PartialEq, Eq)]
struct OrderSet([u64; WORDS]);

impl OrderSet {
    const EMPTY: Self = OrderSet([0; WORDS]);

    fn full(count: usize) -> Self {
        let mut s = Self::EMPTY;
        for i in 0..count {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= b;
        }
        out
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| a & !b == 0)
    }

    fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORDS * 64).filter(|&i| self.contains(i))
    }
}

/// Precomputed per-triple tables for one `n`.
struct Universe {
    orders: Vec<LinearOrder>,
    /// `pattern[t][i]`: pattern of order `i` on triple `t`.
    pattern: Vec<Vec<u8>>,
    /// `sat[t][c]`: orders satisfying condition `c` on triple `t`.
    sat: Vec<[OrderSet; 9]>,
}

impl Universe {
    fn new(n: usize) -> Self {
        let orders = all_orders(full_set(n));
        let ts = triples(full_set(n));
        let pattern: Vec<Vec<u8>> = ts.iter().map(|t| orders.iter().map(|o| t.pattern(o)).collect()).collect();
        let sat = pattern
            .iter()
            .map(|pats| {
                let mut row = [OrderSet::EMPTY; 9];
                for (c, set) in row.iter_mut().enumerate() {
                    for (i, &p) in pats.iter().enumerate() {
                        if VIOLATORS[c] & (1 << p) == 0 {
                            set.insert(i);
                        }
                    }
                }
                row
            })
            .collect();
        Self { orders, pattern, sat }
    }

    fn triple_count(&self) -> usize {
        self.sat.len()
    }

    fn conditions(family: Family) -> Vec<usize> {
        (0..9).filter(|c| family.condition_mask() >> c & 1 == 1).collect()
    }

    /// Some already assigned triple now satisfies a smaller condition than its own.
    fn breaks_canonicity(&self, m: &OrderSet, assigned: &[usize], family: Family) -> bool {
        assigned.iter().enumerate().any(|(t, &ct)| {
            Self::conditions(family).into_iter().take_while(|&c| c < ct).any(|c| m.is_subset(&self.sat[t][c]))
        })
    }

    fn is_maximal(&self, m: &OrderSet, family: Family) -> bool {
        let allowed = family.condition_mask();
        let masks: Vec<u8> =
            self.pattern.iter().map(|pats| m.indices().fold(0u8, |acc, i| acc | 1 << pats[i])).collect();
        (0..self.orders.len()).filter(|&i| !m.contains(i)).all(|i| {
            self.pattern.iter().zip(&masks).any(|(pats, &pm)| satisfied_conditions(pm | 1 << pats[i]) & allowed == 0)
        })
    }

    /// Depth-first search below a fixed assignment prefix.
    fn search(&self, family: Family, prefix: &[usize], out: &mut Vec<OrderSet>) {
        let mut m = OrderSet::full(self.orders.len());
        for (t, &c) in prefix.iter().enumerate() {
            m = m.and(&self.sat[t][c]);
        }
        if m.is_empty() || self.breaks_canonicity(&m, prefix, family) {
            return;
        }
        let mut assigned = prefix.to_vec();
        self.descend(family, m, &mut assigned, out);
    }

    fn descend(&self, family: Family, m: OrderSet, assigned: &mut Vec<usize>, out: &mut Vec<OrderSet>) {
        let t = assigned.len();
        if t == self.triple_count() {
            if self.is_maximal(&m, family) {
                out.push(m);
            }
            return;
        }
        for c in Self::conditions(family) {
            let next = m.and(&self.sat[t][c]);
            if next.is_empty() {
                continue;
            }
            assigned.push(c);
            if !self.breaks_canonicity(&next, assigned, family) {
                self.descend(family, next, assigned, out);
            }
            assigned.pop();
        }
    }

    /// Assignment prefixes the parallel search is split over.
    fn prefixes(&self, family: Family) -> Vec<Vec<usize>> {
        let depth = self.triple_count().min(2);
        let mut out = vec![Vec::new()];
        for _ in 0..depth {
            out = out
                .into_iter()
                .flat_map(|p| {
                    Self::conditions(family).into_iter().map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusRow {
    pub domain: Domain,
    pub size: usize,
    pub peak_pit: bool,
    pub connected: bool,
    pub directly_connected: bool,
    pub maximal_condorcet: bool,
    pub maximal_peak_pit: bool,
}

impl CensusRow {
    pub fn new(domain: Domain) -> Self {
        let peak_pit = is_peak_pit(&domain);
        Self {
            size: domain.len(),
            peak_pit,
            connected: is_connected(&domain),
            directly_connected: is_directly_connected(&domain),
            maximal_condorcet: is_maximal_condorcet(&domain).unwrap_or(false),
            maximal_peak_pit: peak_pit && is_maximal_peak_pit(&domain).unwrap_or(false),
            domain,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Keep one canonical representative per isomorphism class.
    pub fold_iso: bool,
    pub exec: Exec,
    /// Required for `n = 6`.
    pub long_running: bool,
    /// Resume from and record progress in this file.
    pub checkpoint: Option<PathBuf>,
}

fn check_size(n: usize, long_running: bool) -> Result<()> {
    match n {
        3..=5 => Ok(()),
        6 if long_running => Ok(()),
        6 => Err(Error::UnsupportedSize("n = 6 needs the long-running flag".into())),
        _ => Err(Error::UnsupportedSize(format!("n = {n} is outside 3..=6"))),
    }
}

/// All maximal domains of `family` on `n` alternatives, labeled, sorted.
pub fn maximal_domains(n: usize, family: Family, opts: &EnumerateOptions) -> Result<Vec<Domain>> {
    check_size(n, opts.long_running)?;
    let u = Universe::new(n);
    let prefixes = u.prefixes(family);
    let run = |p: &Vec<usize>| {
        let mut out = Vec::new();
        u.search(family, p, &mut out);
        out.iter().map(|m| m.indices().collect::<Vec<usize>>()).collect::<Vec<_>>()
    };
    let found: Vec<Vec<usize>> = match &opts.checkpoint {
        None => par::map(opts.exec, &prefixes, run).into_iter().flatten().collect(),
        Some(path) => {
            let mut ck = Checkpoint::load_or_new(path, n, family)?;
            let pending: Vec<Vec<usize>> = prefixes.iter().filter(|p| !ck.done.contains(*p)).cloned().collect();
            let batch = rayon_batch(opts.exec);
            for chunk in pending.chunks(batch) {
                let results = par::map(opts.exec, chunk, run);
                for (p, leaves) in chunk.iter().zip(results) {
                    ck.done.insert(p.clone());
                    ck.leaves.extend(leaves);
                }
                ck.save(path)?;
            }
            ck.leaves
        }
    };
    let mut domains: Vec<Domain> =
        found.into_iter().map(|idx| Domain::new(idx.into_iter().map(|i| u.orders[i])).expect("nonempty")).collect();
    domains.sort();
    domains.dedup();
    Ok(domains)
}

fn rayon_batch(exec: Exec) -> usize {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return rayon::current_num_threads().max(1) * 2;
    }
    let _ = exec;
    1
}

/// Canonical forms of `domains`, one per isomorphism class, sorted.
pub fn fold_isomorphic(domains: &[Domain], exec: Exec) -> Vec<Domain> {
    let set: BTreeSet<Domain> = par::map(exec, domains, Domain::canonical_form).into_iter().collect();
    set.into_iter().collect()
}

/// Census of maximal Condorcet domains, sorted by domain.
pub fn enumerate_maximal(n: usize, opts: &EnumerateOptions) -> Result<Vec<CensusRow>> {
    let labeled = maximal_domains(n, Family::Condorcet, opts)?;
    let domains = if opts.fold_iso { fold_isomorphic(&labeled, opts.exec) } else { labeled };
    let mut rows = par::map(opts.exec, &domains, |d| CensusRow::new(d.clone()));
    rows.sort();
    Ok(rows)
}

/// Census as CSV with columns
/// `canonical_domain,size,peak_pit,connected,directly_connected,maximal`.
/// Orders within a domain are separated by spaces and written with
/// `format_order`.
pub fn census_csv(rows: &[CensusRow], format_order: impl Fn(&LinearOrder) -> String) -> String {
    let mut out = String::from("canonical_domain,size,peak_pit,connected,directly_connected,maximal\n");
    for r in rows {
        let d: Vec<String> = r.domain.iter().map(&format_order).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            d.join(" "),
            r.size,
            r.peak_pit,
            r.connected,
            r.directly_connected,
            r.maximal_condorcet
        ));
    }
    out
}

/// Progress file for long enumerations.
///
/// ```text
/// # condorcet enumeration checkpoint
/// n 5
/// family condorcet
/// done 0 3
/// leaf 0 1 5 17 40
/// ```
///
/// `done` lines list completed assignment prefixes as condition indices
/// (`slot * 3 + k - 1` for each of the first triples). `leaf` lines list the
/// maximal domains found under them as indices into the lexicographic list
/// of all orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub n: usize,
    pub family: Family,
    pub done: BTreeSet<Vec<usize>>,
    pub leaves: Vec<Vec<usize>>,
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Condorcet => "condorcet",
        Family::PeakPit => "peak-pit",
    }
}

fn parse_indices(rest: &str, line: usize) -> Result<Vec<usize>> {
    rest.split_whitespace()
        .map(|x| x.parse().map_err(|_| Error::Parse { line, msg: format!("bad index {x:?}") }))
        .collect()
}

impl Checkpoint {
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut family = None;
        let mut done = BTreeSet::new();
        let mut leaves = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let (key, rest) = s.split_once(' ').unwrap_or((s, ""));
            match key {
                "n" => n = Some(rest.trim().parse().map_err(|_| Error::Parse { line, msg: "bad n".into() })?),
                "family" => {
                    family = Some(match rest.trim() {
                        "condorcet" => Family::Condorcet,
                        "peak-pit" => Family::PeakPit,
                        other => return Err(Error::Parse { line, msg: format!("unknown family {other:?}") }),
                    })
                }
                "done" => {
                    done.insert(parse_indices(rest, line)?);
                }
                "leaf" => leaves.push(parse_indices(rest, line)?),
                other => return Err(Error::Parse { line, msg: format!("unknown key {other:?}") }),
            }
        }
        Ok(Self {
            n: n.ok_or(Error::Parse { line: 0, msg: "missing n".into() })?,
            family: family.ok_or(Error::Parse { line: 0, msg: "missing family".into() })?,
            done,
            leaves,
        })
    }

    pub fn render(&self) -> String {
        let mut out =
            format!("# condorcet enumeration checkpoint\nn {}\nfamily {}\n", self.n, family_name(self.family));
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        for p in &self.done {
            out.push_str(&format!("done {}\n", join(p)));
        }
        for l in &self.leaves {
            out.push_str(&format!("leaf {}\n", join(l)));
        }
        out
    }

    fn load_or_new(path: &FsPath, n: usize, family: Family) -> Result<Self> {
        if !path.exists() {
            return Ok(Self { n, family, done: BTreeSet::new(), leaves: Vec::new() });
        }
        let text = fs::read_to_string(path)?;
        let ck = Self::parse(&text)?;
        if ck.n != n || ck.family != family {
            return Err(Error::Precondition(format!("checkpoint {} belongs to another run", path.display())));
        }
        Ok(ck)
    }

    fn save(&self, path: &FsPath) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        f.write_all(self.render().as_bytes())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub domain: Domain,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: u8,
    pub n: usize,
    pub exhaustive: bool,
    /// Domains examined.
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub exec: Exec,
    /// Run `n = 5` exhaustively instead of sampling.
    pub exhaustive_n5: bool,
    pub samples: usize,
    pub seed: u64,
    pub checkpoint: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { exec: Exec::default(), exhaustive_n5: false, samples: 100, seed: 0, checkpoint: None }
    }
}

/// Maximal domains of `family` to verify against: exhaustive for `n <= 4`
/// (or `n = 5` with the flag), otherwise random greedy maximal ones.
fn subjects(n: usize, family: Family, opts: &VerifyOptions) -> Result<(bool, Vec<Domain>)> {
    match n {
        3 | 4 => Ok((true, maximal_domains(n, family, &enum_opts(opts))?)),
        5 if opts.exhaustive_n5 => Ok((true, maximal_domains(n, family, &enum_opts(opts))?)),
        5 => {
            let seeds: Vec<u64> = (0..opts.samples as u64).map(|i| opts.seed.wrapping_add(i)).collect();
            let ds = par::map(opts.exec, &seeds, |&s| random_maximal_domain(n, family, s));
            Ok((false, ds.into_iter().collect::<Result<Vec<_>>>()?))
        }
        _ => Err(Error::UnsupportedSize(format!("verification runs for n in 3..=5, got {n}"))),
    }
}

fn enum_opts(opts: &VerifyOptions) -> EnumerateOptions {
    EnumerateOptions { fold_iso: false, exec: opts.exec, long_running: false, checkpoint: opts.checkpoint.clone() }
}

fn report(
    theorem: u8,
    n: usize,
    exhaustive: bool,
    checked: usize,
    found: Vec<Option<Counterexample>>,
) -> TheoremReport {
    TheoremReport { theorem, n, exhaustive, checked, counterexamples: found.into_iter().flatten().collect() }
}

/// Every maximal peak-pit domain is directly connected.
pub fn verify_theorem_1(n: usize, opts: &VerifyOptions) -> Result<TheoremReport> {
    let (exhaustive, ds) = subjects(n, Family::PeakPit, opts)?;
    let found = par::map(opts.exec, &ds, |d| {
        (!is_directly_connected_with(d, Exec::Sequential))
            .then(|| Counterexample { domain: d.clone(), reason: "not directly connected".into() })
    });
    Ok(report(1, n, exhaustive, ds.len(), found))
}

/// A peak-pit domain is maximal as a Condorcet domain exactly when it is
/// maximal among peak-pit domains.
pub fn verify_theorem_2(n: usize, opts: &VerifyOptions) -> Result<TheoremReport> {
    let (exhaustive, pp) = subjects(n, Family::PeakPit, opts)?;
    let (_, mc) = subjects(n, Family::Condorcet, opts)?;
    let mut found = par::map(opts.exec, &pp, |d| match is_maximal_condorcet(d) {
        Ok(true) => None,
        _ => Some(Counterexample { domain: d.clone(), reason: "maximal peak-pit but not maximal Condorcet".into() }),
    });
    found.extend(par::map(opts.exec, &mc, |d| {
        (is_peak_pit(d) && !is_maximal_peak_pit(d).unwrap_or(false)).then(|| Counterexample {
            domain: d.clone(),
            reason: "maximal Condorcet and peak-pit but not maximal peak-pit".into(),
        })
    }));
    if exhaustive {
        let pp_set: BTreeSet<&Domain> = pp.iter().collect();
        found.extend(mc.iter().filter(|d| is_peak_pit(d) && !pp_set.contains(d)).map(|d| {
            Some(Counterexample {
                domain: d.clone(),
                reason: "peak-pit maximal Condorcet domain missing from the peak-pit census".into(),
            })
        }));
    }
    Ok(report(2, n, exhaustive, pp.len() + mc.len(), found))
}

/// For maximal Condorcet domains: peak-pit, connected and directly connected coincide.
pub fn verify_theorem_3(n: usize, opts: &VerifyOptions) -> Result<TheoremReport> {
    let (exhaustive, ds) = subjects(n, Family::Condorcet, opts)?;
    let found = par::map(opts.exec, &ds, |d| {
        let flags = (is_peak_pit(d), is_connected(d), is_directly_connected_with(d, Exec::Sequential));
        (flags.0 != flags.1 || flags.1 != flags.2).then(|| Counterexample {
            domain: d.clone(),
            reason: format!("peak_pit={} connected={} directly_connected={}", flags.0, flags.1, flags.2),
        })
    });
    Ok(report(3, n, exhaustive, ds.len(), found))
}

/// Grow `d` by shuffled greedy insertion until no order of `family` fits.
pub fn extend_to_maximal(d: &Domain, family: Family, seed: u64) -> Domain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders = all_orders(d.universe());
    orders.shuffle(&mut rng);
    let mut masks = TripleMasks::new(d);
    let mut kept: Vec<LinearOrder> = d.orders().to_vec();
    for o in orders {
        if !d.contains(&o) && masks.admits(&o, family) {
            masks.insert(&o);
            kept.push(o);
        }
    }
    Domain::new(kept).expect("nonempty")
}

/// A random maximal domain of `family` on `0..n`.
pub fn random_maximal_domain(n: usize, family: Family, seed: u64) -> Result<Domain> {
    if !(3..=8).contains(&n) {
        return Err(Error::UnsupportedSize(format!("random domains need 3 <= n <= 8, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let orders = all_orders(full_set(n));
    let start = *orders.choose(&mut rng).expect("n >= 3");
    Ok(extend_to_maximal(&Domain::new([start])?, family, seed ^ 0x9E37_79B9_7F4A_7C15))
}

const GENERATION_ATTEMPTS: u64 = 16;

/// A peak-pit domain on `0..n` with up to `target_size` orders (at least 2),
/// built by shuffled greedy insertion. Deterministic per seed.
pub fn random_peak_pit_domain(n: usize, seed: u64, target_size: usize) -> Result<Domain> {
    if !(2..=8).contains(&n) {
        return Err(Error::UnsupportedSize(format!("random domains need 2 <= n <= 8, got {n}")));
    }
    if target_size < 2 {
        return Err(Error::Precondition("target size must be at least 2".into()));
    }
    let universe = full_set(n);
    for attempt in 0..GENERATION_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        let mut orders = all_orders(universe);
        orders.shuffle(&mut rng);
        let mut masks = TripleMasks::empty(universe);
        let mut kept = Vec::with_capacity(target_size);
        for o in orders {
            if kept.len() == target_size {
                break;
            }
            if masks.admits(&o, Family::PeakPit) {
                masks.insert(&o);
                kept.push(o);
            }
        }
        if kept.len() >= 2 {
            return Domain::new(kept);
        }
    }
    Err(Error::GenerationFailure(GENERATION_ATTEMPTS))
}

/// Sizes of the domains in `rows`, with multiplicities.
pub fn size_histogram(rows: &[CensusRow]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for r in rows {
        *h.entry(r.size).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{classify, is_condorcet, TripleClass};

    #[test]
    fn three_classes_on_three_alternatives() {
        let rows = enumerate_maximal(3, &EnumerateOptions { fold_iso: true, ..Default::default() }).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.size == 4 && r.maximal_condorcet));
        let reps: BTreeSet<Domain> = TripleClass::ALL.iter().map(|c| c.representative().canonical_form()).collect();
        let got: BTreeSet<Domain> = rows.iter().map(|r| r.domain.clone()).collect();
        assert_eq!(got, reps);
    }

    #[test]
    fn size_limits() {
        let o = EnumerateOptions::default();
        assert!(matches!(maximal_domains(2, Family::Condorcet, &o), Err(Error::UnsupportedSize(_))));
        assert!(matches!(maximal_domains(6, Family::Condorcet, &o), Err(Error::UnsupportedSize(_))));
        assert!(maximal_domains(7, Family::Condorcet, &EnumerateOptions { long_running: true, ..o }).is_err());
    }

    #[test]
    fn peak_pit_census_is_subfamily() {
        let o = EnumerateOptions::default();
        let pp = maximal_domains(4, Family::PeakPit, &o).unwrap();
        assert!(pp.iter().all(|d| is_peak_pit(d) && is_condorcet(d)));
    }

    #[test]
    fn random_domains_are_reproducible() {
        let a = random_peak_pit_domain(4, 7, 6).unwrap();
        assert_eq!(a, random_peak_pit_domain(4, 7, 6).unwrap());
        assert!(classify(&a).unwrap().is_peak_pit);
        assert_eq!(a.len(), 6);
        let b = random_peak_pit_domain(5, 11, 10).unwrap();
        assert!(is_peak_pit(&b) && b.len() == 10);
        let c = random_peak_pit_domain(3, 3, 4).unwrap();
        assert!(is_peak_pit(&c) && c.len() == 4);
        assert!(random_peak_pit_domain(4, 0, 1).is_err());
    }

    #[test]
    fn checkpoint_round_trip() {
        let mut ck = Checkpoint { n: 5, family: Family::Condorcet, done: BTreeSet::new(), leaves: vec![vec![0, 4, 9]] };
        ck.done.insert(vec![0, 3]);
        assert_eq!(Checkpoint::parse(&ck.render()).unwrap(), ck);
        assert!(Checkpoint::parse("n 5\nfamily nope\n").is_err());
    }

    #[test]
    fn checkpoint_resume_matches_direct_run() {
        let dir = std::env::temp_dir().join(format!("ck-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("n4.ck");
        let _ = fs::remove_file(&path);
        let plain = maximal_domains(4, Family::Condorcet, &EnumerateOptions::default()).unwrap();
        let opts = EnumerateOptions { checkpoint: Some(path.clone()), ..Default::default() };
        assert_eq!(maximal_domains(4, Family::Condorcet, &opts).unwrap(), plain);
        // A second run finds every prefix done and reuses the stored leaves.
        assert_eq!(maximal_domains(4, Family::Condorcet, &opts).unwrap(), plain);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn theorems_hold_on_three() {
        let o = VerifyOptions::default();
        for r in [verify_theorem_1(3, &o), verify_theorem_2(3, &o), verify_theorem_3(3, &o)] {
            let r = r.unwrap();
            assert!(r.passed() && r.exhaustive, "{r:?}");
        }
    }
}
