//! Connectedness of domains inside the permutahedron.

use std::collections::{HashSet, VecDeque};

use crate::domains::Domain;
use crate::orders::LinearOrder;
use crate::par::{self, Exec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub directly_connected: bool,
    /// Two orders with no path between them inside the domain.
    pub witness_disconnected_pair: Option<(LinearOrder, LinearOrder)>,
    /// Two orders with no geodesic between them inside the domain.
    pub witness_non_geodesic_pair: Option<(LinearOrder, LinearOrder)>,
}

/// `None` when connected, else a pair in different components.
pub fn disconnected_pair(d: &Domain) -> Option<(LinearOrder, LinearOrder)> {
    let orders = d.orders();
    let mut seen = vec![false; orders.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for j in 0..orders.len() {
            if !seen[j] && orders[i].kendall_unchecked(&orders[j]) == 1 {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.iter().position(|s| !s).map(|j| (orders[0], orders[j]))
}

pub fn is_connected(d: &Domain) -> bool {
    disconnected_pair(d).is_none()
}

/// Whether a geodesic from `r` to `t` stays inside `d`.
///
/// Only orders between `r` and `t` can lie on such a geodesic, and every
/// step must bring the walk one swap closer to `t`.
pub fn geodesic_within(d: &Domain, r: &LinearOrder, t: &LinearOrder) -> bool {
    let interval: Vec<LinearOrder> = d.iter().copied().filter(|u| u.between_unchecked(r, t)).collect();
    let mut seen: HashSet<LinearOrder> = HashSet::from([*r]);
    let mut queue = VecDeque::from([*r]);
    while let Some(u) = queue.pop_front() {
        if u == *t {
            return true;
        }
        let du = u.kendall_unchecked(t);
        for v in &interval {
            if v.kendall_unchecked(t) + 1 == du && u.kendall_unchecked(v) == 1 && seen.insert(*v) {
                queue.push_back(*v);
            }
        }
    }
    false
}

fn unordered_pairs(d: &Domain) -> Vec<(usize, usize)> {
    let n = d.len();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// `None` when directly connected, else a pair with no geodesic inside `d`.
/// Pairs are checked once each, since reversing a geodesic keeps it inside `d`.
pub fn non_geodesic_pair_with(d: &Domain, exec: Exec) -> Option<(LinearOrder, LinearOrder)> {
    let orders = d.orders();
    par::find_map_first(exec, &unordered_pairs(d), |&(i, j)| {
        (!geodesic_within(d, &orders[i], &orders[j])).then_some((orders[i], orders[j]))
    })
}

pub fn non_geodesic_pair(d: &Domain) -> Option<(LinearOrder, LinearOrder)> {
    non_geodesic_pair_with(d, Exec::default())
}

pub fn is_directly_connected(d: &Domain) -> bool {
    non_geodesic_pair(d).is_none()
}

pub fn is_directly_connected_with(d: &Domain, exec: Exec) -> bool {
    non_geodesic_pair_with(d, exec).is_none()
}

/// Every pair is linked inside `d` by a path on which no pair of alternatives
/// swaps twice. Searched without betweenness pruning: the state is the
/// current order plus the set of pairs already swapped.
pub fn no_restoration_check(d: &Domain) -> bool {
    let orders = d.orders();
    unordered_pairs(d).into_iter().all(|(i, j)| no_restoration_path(d, &orders[i], &orders[j]))
}

fn no_restoration_path(d: &Domain, r: &LinearOrder, t: &LinearOrder) -> bool {
    let mut seen: HashSet<(LinearOrder, u128)> = HashSet::new();
    let mut stack = vec![(*r, 0u128)];
    while let Some((u, used)) = stack.pop() {
        if u == *t {
            return true;
        }
        if !seen.insert((u, used)) {
            continue;
        }
        for i in 0..u.len() - 1 {
            let v = u.swap_unchecked(i);
            let bit = crate::orders::pair_bit(u.at(i), u.at(i + 1));
            if used & bit == 0 && d.contains(&v) {
                stack.push((v, used | bit));
            }
        }
    }
    false
}

pub fn connectivity_report(d: &Domain) -> ConnectivityReport {
    connectivity_report_with(d, Exec::default())
}

pub fn connectivity_report_with(d: &Domain, exec: Exec) -> ConnectivityReport {
    let witness_disconnected_pair = disconnected_pair(d);
    let witness_non_geodesic_pair = non_geodesic_pair_with(d, exec);
    ConnectivityReport {
        connected: witness_disconnected_pair.is_none(),
        directly_connected: witness_non_geodesic_pair.is_none(),
        witness_disconnected_pair,
        witness_non_geodesic_pair,
    }
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

    #[test]
    fn examples() {
        let d3b = dom("abc bac bca cba");
        let d3t = dom("abc acb cab cba");
        let fig3 = dom("abc bac cab cba");
        assert!(is_connected(&d3b) && is_directly_connected(&d3b) && no_restoration_check(&d3b));
        assert!(is_directly_connected(&d3t));
        assert!(!is_connected(&fig3) && !is_directly_connected(&fig3) && !no_restoration_check(&fig3));
        assert!(is_connected(&dom("bca")) && is_directly_connected(&dom("bca")));
        assert_eq!(non_geodesic_pair(&fig3), Some((o("abc"), o("cab"))));
    }

    #[test]
    fn connected_but_not_directly() {
        // bac is missing, so abc reaches bca only around the hexagon.
        let ring = dom("abc acb cab cba bca");
        assert!(is_connected(&ring) && !is_directly_connected(&ring));
        let detour = dom("abc bac bca cba cab");
        assert!(is_connected(&detour));
        // acb is missing, so abc -> cab has no geodesic inside.
        assert!(!is_directly_connected(&detour));
        assert!(!no_restoration_check(&detour));
    }

    #[test]
    fn report_witnesses_follow_flags() {
        let rep = connectivity_report(&dom("abc bac cab cba"));
        assert!(!rep.connected && rep.witness_disconnected_pair.is_some());
        let rep = connectivity_report(&dom("abc bac"));
        assert!(rep.connected && rep.directly_connected && rep.witness_non_geodesic_pair.is_none());
    }
}
