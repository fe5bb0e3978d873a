//! Brute-force oracles. Orders are plain `Vec<u8>` rankings here and every
//! check is computed from the definitions, without the library's bitmasks
//! or search code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use condorcet_core::{Domain, LinearOrder, Path, SwitchSeq};

pub type Perm = Vec<u8>;

pub fn perm(o: &LinearOrder) -> Perm {
    o.to_vec()
}

pub fn order(p: &[u8]) -> LinearOrder {
    LinearOrder::new(p).unwrap()
}

pub fn parse(s: &str) -> LinearOrder {
    order(&s.bytes().map(|c| c - b'a').collect::<Vec<_>>())
}

pub fn dom(s: &str) -> Domain {
    Domain::new(s.split_whitespace().map(parse)).unwrap()
}

pub fn perms_of(items: &[u8]) -> Vec<Perm> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in perms_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    perms_of(&(0..n as u8).collect::<Vec<_>>())
}

fn rank(p: &[u8], a: u8) -> usize {
    p.iter().position(|&x| x == a).unwrap()
}

pub fn discordant(p: &[u8], q: &[u8]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if rank(q, p[i]) > rank(q, p[j]) {
                c += 1;
            }
        }
    }
    c
}

pub fn neighbours(p: &[u8]) -> Vec<Perm> {
    (0..p.len().saturating_sub(1))
        .map(|i| {
            let mut q = p.to_vec();
            q.swap(i, i + 1);
            q
        })
        .collect()
}

pub fn triples_of(alts: &[u8]) -> Vec<[u8; 3]> {
    let mut v = alts.to_vec();
    v.sort();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            for k in j + 1..v.len() {
                out.push([v[i], v[j], v[k]]);
            }
        }
    }
    out
}

/// `(triple, banned, k)`: `banned` never sits at place `k` (1-based) of the triple.
pub type Cond = ([u8; 3], u8, u8);

pub fn never_conditions(orders: &[Perm]) -> BTreeSet<Cond> {
    let mut out = BTreeSet::new();
    for t in triples_of(&orders[0]) {
        for &x in &t {
            for k in 1..=3u8 {
                let seen = orders.iter().any(|o| {
                    let r: Vec<u8> = o.iter().copied().filter(|a| t.contains(a)).collect();
                    r[k as usize - 1] == x
                });
                if !seen {
                    out.insert((t, x, k));
                }
            }
        }
    }
    out
}

pub fn conds_of(d: &Domain) -> BTreeSet<Cond> {
    never_conditions(&d.orders().iter().map(perm).collect::<Vec<_>>())
}

fn every_triple(orders: &[Perm], allow: impl Fn(u8) -> bool) -> bool {
    let n = never_conditions(orders);
    triples_of(&orders[0]).into_iter().all(|t| n.iter().any(|&(tt, _, k)| tt == t && allow(k)))
}

pub fn condorcet(orders: &[Perm]) -> bool {
    every_triple(orders, |_| true)
}

pub fn peak_pit(orders: &[Perm]) -> bool {
    every_triple(orders, |k| k != 2)
}

pub fn perms(d: &Domain) -> Vec<Perm> {
    d.orders().iter().map(perm).collect()
}

pub fn is_peak_pit_bf(d: &Domain) -> bool {
    peak_pit(&perms(d))
}

pub fn is_condorcet_bf(d: &Domain) -> bool {
    condorcet(&perms(d))
}

/// Maximal in the family: no missing order can be added.
pub fn maximal_scan(orders: &[Perm], ok: impl Fn(&[Perm]) -> bool) -> bool {
    let have: HashSet<&Perm> = orders.iter().collect();
    perms_of(&orders[0]).into_iter().filter(|p| !have.contains(p)).all(|p| {
        let mut bigger = orders.to_vec();
        bigger.push(p);
        !ok(&bigger)
    })
}

/// Connected components of the adjacent-swap graph induced on `orders`.
pub fn connected(orders: &[Perm]) -> bool {
    let set: HashSet<&Perm> = orders.iter().collect();
    let mut seen: HashSet<Perm> = HashSet::from([orders[0].clone()]);
    let mut queue = VecDeque::from([orders[0].clone()]);
    while let Some(p) = queue.pop_front() {
        for q in neighbours(&p) {
            if set.contains(&q) && seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len() == set.len()
}

fn induced_distances(orders: &[Perm], from: &Perm) -> HashMap<Perm, usize> {
    let set: HashSet<&Perm> = orders.iter().collect();
    let mut dist = HashMap::from([(from.clone(), 0)]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(p) = queue.pop_front() {
        let dp = dist[&p];
        for q in neighbours(&p) {
            if set.contains(&q) && !dist.contains_key(&q) {
                dist.insert(q.clone(), dp + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

/// Every pair is joined inside `orders` by a path as short as their distance.
pub fn directly_connected(orders: &[Perm]) -> bool {
    orders.iter().all(|r| {
        let dist = induced_distances(orders, r);
        orders.iter().all(|t| dist.get(t) == Some(&discordant(r, t)))
    })
}

/// Shortest paths from `r` to `t` in the full permutohedron, found from
/// breadth-first distances to `t`.
pub fn geodesics(r: &LinearOrder, t: &LinearOrder) -> Vec<Path> {
    let (r, t) = (perm(r), perm(t));
    let everything = perms_of(&r);
    let dist = induced_distances(&everything, &t);
    let mut out = Vec::new();
    let mut stack = vec![r.clone()];
    walk(&mut stack, &dist, &mut out);
    out
}

fn walk(stack: &mut Vec<Perm>, dist: &HashMap<Perm, usize>, out: &mut Vec<Path>) {
    let p = stack.last().unwrap().clone();
    if dist[&p] == 0 {
        out.push(Path::new(stack.iter().map(|q| order(q)).collect()).unwrap());
        return;
    }
    for q in neighbours(&p) {
        if dist[&q] + 1 == dist[&p] {
            stack.push(q);
            walk(stack, dist, out);
            stack.pop();
        }
    }
}

/// Geodesics from `R_B` to `T_B` whose orders keep `D_B` peak-pit.
pub fn valid_geodesics(d: &Domain, r: &LinearOrder, t: &LinearOrder, subset: u16) -> Vec<Path> {
    let db = perms(&d.restrict(subset).unwrap());
    geodesics(&r.restrict(subset).unwrap(), &t.restrict(subset).unwrap())
        .into_iter()
        .filter(|g| {
            let mut all = db.clone();
            all.extend(g.orders().iter().map(perm));
            peak_pit(&all)
        })
        .collect()
}

/// Every switch sequence reachable by commuting adjacent disjoint swaps.
pub fn commutation_class(s: &SwitchSeq) -> HashSet<Vec<(u8, u8)>> {
    let key = |s: &[(u8, u8)]| s.to_vec();
    let start: Vec<(u8, u8)> = s.swaps.iter().map(|p| (p.lo(), p.hi())).collect();
    let mut seen = HashSet::from([key(&start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[i], w[i + 1]);
            if x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1 {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

pub fn equivalent_bfs(a: &Path, b: &Path) -> bool {
    a.first() == b.first()
        && a.last() == b.last()
        && commutation_class(&a.switch_seq())
            .contains(&b.switch_seq().swaps.iter().map(|p| (p.lo(), p.hi())).collect::<Vec<_>>())
}

/// Sort and deduplicate orders of a candidate domain.
pub fn normal(mut orders: Vec<Perm>) -> Vec<Perm> {
    orders.sort();
    orders.dedup();
    orders
}

/// Maximal domains of a family on `0..n`, labeled. Every maximal domain of
/// such a family is the set of orders obeying one chosen condition per
/// triple, so the full product of choices is scanned and filtered.
pub fn maximal_by_assignment(n: usize, peak_pit_only: bool) -> BTreeSet<Vec<Perm>> {
    let alts: Vec<u8> = (0..n as u8).collect();
    let ts = triples_of(&alts);
    let choices: Vec<(usize, u8)> =
        (0..3).flat_map(|slot| (1..=3u8).map(move |k| (slot, k))).filter(|&(_, k)| !peak_pit_only || k != 2).collect();
    let everything = all_perms(n);
    let ok = |o: &[Perm]| if peak_pit_only { peak_pit(o) } else { condorcet(o) };
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; ts.len()];
    loop {
        let kept: Vec<Perm> = everything
            .iter()
            .filter(|p| {
                ts.iter().zip(&idx).all(|(t, &c)| {
                    let (slot, k) = choices[c];
                    let r: Vec<u8> = p.iter().copied().filter(|a| t.contains(a)).collect();
                    r[k as usize - 1] != t[slot]
                })
            })
            .cloned()
            .collect();
        if !kept.is_empty() && maximal_scan(&kept, ok) {
            out.insert(normal(kept));
        }
        let mut i = 0;
        loop {
            if i == idx.len() {
                return out;
            }
            idx[i] += 1;
            if idx[i] < choices.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// All `2^6` subsets of orders on three alternatives.
pub fn subsets_of_three() -> Vec<Vec<Perm>> {
    let all = all_perms(3);
    (1u32..64)
        .map(|m| all.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).map(|(_, p)| p.clone()).collect())
        .collect()
}

/// Smallest relabeled form of a domain on `0..n`.
pub fn iso_key(orders: &[Perm]) -> Vec<Perm> {
    let n = orders[0].len();
    all_perms(n)
        .into_iter()
        .map(|map| normal(orders.iter().map(|o| o.iter().map(|&a| map[a as usize]).collect()).collect()))
        .min()
        .unwrap()
}
