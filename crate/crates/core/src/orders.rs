//! Alternatives, linear orders and switching pairs.
//!
//! A [`LinearOrder`] ranks a set of at most 16 alternatives, most-preferred
//! first. The ranking is packed four bits per position into a `u64` and the
//! pairwise comparisons are cached in a `u128` with one bit per unordered
//! pair, so Kendall distance and betweenness are a popcount and a mask.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Identifier of an alternative, `0..16`.
pub type Alt = u8;

/// Largest universe a [`LinearOrder`] can hold.
pub const MAX_ALTS: usize = 16;

/// Bitset of alternatives.
pub type AltSet = u16;

pub fn alt_set(alts: impl IntoIterator<Item = Alt>) -> AltSet {
    alts.into_iter().fold(0, |m, a| m | (1 << a))
}

pub fn alts_of(set: AltSet) -> impl Iterator<Item = Alt> {
    (0..MAX_ALTS as Alt).filter(move |a| set & (1 << a) != 0)
}

pub fn full_set(n: usize) -> AltSet {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

#[inline]
pub(crate) fn pair_bit(a: Alt, b: Alt) -> u128 {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    let j = j as u32;
    1u128 << (j * (j - 1) / 2 + i as u32)
}

/// Unordered pair of distinct alternatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchingPair {
    lo: Alt,
    hi: Alt,
}

impl SwitchingPair {
    pub fn new(a: Alt, b: Alt) -> Result<Self> {
        if a == b || a as usize >= MAX_ALTS || b as usize >= MAX_ALTS {
            return Err(Error::InvalidPair(format!("({a},{b}) is not a pair of distinct ids")));
        }
        Ok(Self { lo: a.min(b), hi: a.max(b) })
    }

    pub fn lo(self) -> Alt {
        self.lo
    }

    pub fn hi(self) -> Alt {
        self.hi
    }

    pub fn contains(self, a: Alt) -> bool {
        self.lo == a || self.hi == a
    }

    pub fn is_disjoint(self, other: SwitchingPair) -> bool {
        !other.contains(self.lo) && !other.contains(self.hi)
    }

    /// The member that is not `a`, if `a` is a member.
    pub fn other(self, a: Alt) -> Option<Alt> {
        if a == self.lo {
            Some(self.hi)
        } else if a == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    pub fn set(self) -> AltSet {
        (1 << self.lo) | (1 << self.hi)
    }

    pub(crate) fn bit(self) -> u128 {
        pair_bit(self.lo, self.hi)
    }
}

/// A strict total ranking of a set of alternatives, most-preferred first.
#[derive(Clone, Copy)]
pub struct LinearOrder {
    word: u64,
    len: u8,
    /// Bit for pair `(i, j)`, `i < j`, is set when `i` is ranked above `j`.
    prec: u128,
}

impl LinearOrder {
    pub fn new(ranking: &[Alt]) -> Result<Self> {
        if ranking.is_empty() || ranking.len() > MAX_ALTS {
            return Err(Error::InvalidOrder(format!(
                "an order ranks between 1 and {MAX_ALTS} alternatives, got {}",
                ranking.len()
            )));
        }
        let mut seen: AltSet = 0;
        for &a in ranking {
            if a as usize >= MAX_ALTS || seen & (1 << a) != 0 {
                return Err(Error::InvalidOrder(format!("repeated or out-of-range id {a}")));
            }
            seen |= 1 << a;
        }
        Ok(Self::from_slice(ranking))
    }

    /// Order `0 1 … n-1`.
    pub fn identity(n: usize) -> Self {
        let ids: Vec<Alt> = (0..n as Alt).collect();
        Self::from_slice(&ids)
    }

    fn from_slice(ranking: &[Alt]) -> Self {
        let mut word = 0u64;
        let mut prec = 0u128;
        for (i, &a) in ranking.iter().enumerate() {
            word |= (a as u64) << (60 - 4 * i);
            for &b in &ranking[i + 1..] {
                if a < b {
                    prec |= pair_bit(a, b);
                }
            }
        }
        Self { word, len: ranking.len() as u8, prec }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Alternative at position `pos` (0 is the top).
    pub fn at(&self, pos: usize) -> Alt {
        debug_assert!(pos < self.len());
        ((self.word >> (60 - 4 * pos)) & 0xF) as Alt
    }

    pub fn first(&self) -> Alt {
        self.at(0)
    }

    pub fn last(&self) -> Alt {
        self.at(self.len() - 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = Alt> + '_ {
        (0..self.len()).map(move |i| self.at(i))
    }

    pub fn to_vec(&self) -> Vec<Alt> {
        self.iter().collect()
    }

    pub fn universe(&self) -> AltSet {
        alt_set(self.iter())
    }

    pub fn position(&self, a: Alt) -> Option<usize> {
        self.iter().position(|x| x == a)
    }

    /// Whether `a` is ranked above `b`. Both must belong to the universe.
    #[inline]
    pub fn prefers(&self, a: Alt, b: Alt) -> bool {
        let bit = self.prec & pair_bit(a, b) != 0;
        if a < b {
            bit
        } else {
            !bit
        }
    }

    /// Bitmap of unordered pairs ranked ascending-id-first.
    pub fn pair_bitmap(&self) -> u128 {
        self.prec
    }

    /// Delete every alternative outside `subset`, keeping relative order.
    pub fn restrict(&self, subset: AltSet) -> Result<Self> {
        let u = self.universe();
        if subset == 0 || subset & !u != 0 {
            return Err(Error::InvalidSubset(format!(
                "subset {subset:#b} is empty or not contained in universe {u:#b}"
            )));
        }
        Ok(self.restrict_unchecked(subset))
    }

    pub(crate) fn restrict_unchecked(&self, subset: AltSet) -> Self {
        let kept: Vec<Alt> = self.iter().filter(|a| subset & (1 << a) != 0).collect();
        Self::from_slice(&kept)
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe() != other.universe() {
            return Err(Error::InvalidPair(format!("orders over different universes: {self:?} vs {other:?}")));
        }
        Ok(())
    }

    /// Number of unordered pairs ranked differently.
    pub fn kendall_distance(&self, other: &Self) -> Result<u32> {
        self.same_universe(other)?;
        Ok(self.kendall_unchecked(other))
    }

    #[inline]
    pub(crate) fn kendall_unchecked(&self, other: &Self) -> u32 {
        (self.prec ^ other.prec).count_ones()
    }

    /// The switching pair when the two orders differ by one adjacent swap.
    pub fn alike(&self, other: &Self) -> Result<Option<SwitchingPair>> {
        self.same_universe(other)?;
        Ok(self.alike_unchecked(other))
    }

    pub(crate) fn alike_unchecked(&self, other: &Self) -> Option<SwitchingPair> {
        if self.kendall_unchecked(other) != 1 {
            return None;
        }
        // One inversion apart means an adjacent transposition.
        (0..self.len() - 1)
            .find(|&i| self.at(i) != other.at(i))
            .map(|i| SwitchingPair { lo: self.at(i).min(self.at(i + 1)), hi: self.at(i).max(self.at(i + 1)) })
    }

    /// Transpose positions `i` and `i+1`.
    pub fn apply_swap(&self, i: usize) -> Result<Self> {
        if i + 1 >= self.len() {
            return Err(Error::Index { index: i, len: self.len().saturating_sub(1) });
        }
        Ok(self.swap_unchecked(i))
    }

    #[inline]
    pub(crate) fn swap_unchecked(&self, i: usize) -> Self {
        let a = self.at(i);
        let b = self.at(i + 1);
        let sa = 60 - 4 * i;
        let sb = sa - 4;
        let mut word = self.word & !((0xFu64 << sa) | (0xFu64 << sb));
        word |= (b as u64) << sa | (a as u64) << sb;
        Self { word, len: self.len, prec: self.prec ^ pair_bit(a, b) }
    }

    /// Swap `pair` if its members are adjacent.
    pub fn swap_pair(&self, pair: SwitchingPair) -> Option<Self> {
        let i = self.position(pair.lo)?;
        let j = self.position(pair.hi)?;
        match i.abs_diff(j) {
            1 => Some(self.swap_unchecked(i.min(j))),
            _ => None,
        }
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.to_vec();
        v.reverse();
        Self::from_slice(&v)
    }

    /// Apply the relabeling `a -> map[a]`.
    pub fn relabel(&self, map: &[Alt]) -> Self {
        let v: Vec<Alt> = self.iter().map(|a| map[a as usize]).collect();
        Self::from_slice(&v)
    }

    /// True iff `self` agrees with `r` or with `t` on every pair.
    pub fn is_between(&self, r: &Self, t: &Self) -> Result<bool> {
        self.same_universe(r)?;
        self.same_universe(t)?;
        Ok(self.between_unchecked(r, t))
    }

    #[inline]
    pub(crate) fn between_unchecked(&self, r: &Self, t: &Self) -> bool {
        (self.prec ^ r.prec) & (self.prec ^ t.prec) == 0
    }
}

/// `between(U, R, T)`.
pub fn between(u: &LinearOrder, r: &LinearOrder, t: &LinearOrder) -> Result<bool> {
    u.is_between(r, t)
}

impl PartialEq for LinearOrder {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word && self.len == other.len
    }
}

impl Eq for LinearOrder {}

impl Hash for LinearOrder {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
        self.len.hash(state);
    }
}

impl Ord for LinearOrder {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.word, self.len).cmp(&(other.word, other.len))
    }
}

impl PartialOrd for LinearOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.iter() {
            if a < 26 {
                write!(f, "{}", (b'a' + a) as char)?;
            } else {
                write!(f, "[{a}]")?;
            }
        }
        Ok(())
    }
}

/// All orders of `universe` in lexicographic order of id sequences.
pub fn all_orders(universe: AltSet) -> Vec<LinearOrder> {
    let mut ids: Vec<Alt> = alts_of(universe).collect();
    let mut out = Vec::new();
    loop {
        out.push(LinearOrder::from_slice(&ids));
        if !next_permutation(&mut ids) {
            break;
        }
    }
    out
}

pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All bijections `0..n -> 0..n` as lookup tables.
pub fn relabelings(n: usize) -> Vec<Vec<Alt>> {
    let mut p: Vec<Alt> = (0..n as Alt).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> LinearOrder {
        LinearOrder::new(&s.bytes().map(|c| c - b'a').collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(o("abcd").restrict(0b0111).unwrap(), o("abc"));
        assert_eq!(o("cbda").restrict(0b0111).unwrap(), o("cba"));
        assert_eq!(o("dbca").restrict(0b1111).unwrap(), o("dbca"));
        assert!(o("abc").restrict(0).is_err());
        assert!(o("abc").restrict(0b1001).is_err());
    }

    #[test]
    fn kendall_examples() {
        assert_eq!(o("abc").kendall_distance(&o("abc")).unwrap(), 0);
        assert_eq!(o("abc").kendall_distance(&o("cba")).unwrap(), 3);
        assert_eq!(o("abcd").kendall_distance(&o("cdba")).unwrap(), 5);
        assert!(o("abc").kendall_distance(&o("abd")).is_err());
    }

    #[test]
    fn alike_and_swap() {
        let ab = SwitchingPair::new(0, 1).unwrap();
        assert_eq!(o("abc").alike(&o("bac")).unwrap(), Some(ab));
        assert_eq!(o("abc").alike(&o("cba")).unwrap(), None);
        assert_eq!(o("abc").alike(&o("abc")).unwrap(), None);
        assert_eq!(o("abc").apply_swap(1).unwrap(), o("acb"));
        assert!(o("abc").apply_swap(2).is_err());
        assert_eq!(o("abc").swap_pair(SwitchingPair::new(0, 2).unwrap()), None);
    }

    #[test]
    fn between_examples() {
        assert!(between(&o("bac"), &o("abc"), &o("cba")).unwrap());
        assert!(between(&o("abc"), &o("abc"), &o("bca")).unwrap());
        assert!(!between(&o("acb"), &o("abc"), &o("bca")).unwrap());
    }

    #[test]
    fn prefers_and_ordering() {
        let r = o("cab");
        assert!(r.prefers(2, 0) && r.prefers(0, 1) && !r.prefers(1, 2));
        let all = all_orders(0b111);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], o("abc"));
        assert_eq!(all[5], o("cba"));
    }

    #[test]
    fn pair_rejects_loops() {
        assert!(SwitchingPair::new(3, 3).is_err());
        assert_eq!(SwitchingPair::new(2, 1).unwrap(), SwitchingPair::new(1, 2).unwrap());
    }
}
