//! Vertex sets over the ground set `[n] = {1, …, n}`, stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// A subset of `[n]`, with vertex `v` stored in bit `v` (bit 0 unused).
///
/// Ground sets up to 63 vertices are supported, far beyond desk scale.
/// The derived ordering is the canonical one used throughout the crate:
/// smaller cardinality first, then lexicographic on the sorted element
/// list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);
    pub const MAX_VERTEX: u32 = 63;

    pub fn singleton(v: u32) -> Self {
        debug_assert!(v >= 1 && v <= Self::MAX_VERTEX);
        VertexSet(1u64 << v)
    }

    /// `{1, …, n}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= Self::MAX_VERTEX);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(((1u128 << (n + 1)) - 2) as u64)
        }
    }

    pub fn from_slice(vs: &[u32]) -> Self {
        let mut bits = 0u64;
        for &v in vs {
            assert!(v >= 1 && v <= Self::MAX_VERTEX, "vertex out of range");
            bits |= 1 << v;
        }
        VertexSet(bits)
    }

    /// Checked construction: every vertex must lie in `[n]`.
    pub fn try_from_slice(vs: &[u32], n: u32) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vs {
            if v < 1 || v > n || v > Self::MAX_VERTEX {
                return Err(Error::VertexOutOfRange(v, n));
            }
            bits |= 1 << v;
        }
        Ok(VertexSet(bits))
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub(crate) fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        v <= Self::MAX_VERTEX && self.0 & (1 << v) != 0
    }

    pub fn insert(self, v: u32) -> Self {
        debug_assert!(v >= 1 && v <= Self::MAX_VERTEX);
        VertexSet(self.0 | (1 << v))
    }

    pub fn remove(self, v: u32) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min_vertex(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    pub fn max_vertex(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros())
        }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted element lists, with a
    /// proper prefix ordered first. The first differing element is the
    /// lowest bit of the symmetric difference.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            // self owns the first differing element, so it is smaller there
            Ordering::Less
        } else if self.0 & !(low - 1) != 0 {
            // self has a later element at that position
            Ordering::Greater
        } else {
            // self is a strict prefix of other
            Ordering::Less
        }
    }

    /// All sets obtained by replacing one element `e` by `e - 1`.
    ///
    /// These are the immediate predecessors in the dominance order; a
    /// family closed under them is closed under the full order.
    pub fn unit_decrements(self) -> impl Iterator<Item = VertexSet> {
        let set = self;
        self.iter().filter_map(move |v| {
            if v > 1 && !set.contains(v - 1) {
                Some(set.remove(v).insert(v - 1))
            } else {
                None
            }
        })
    }

    /// All sets obtained by replacing one element `e` by `e + 1`, staying
    /// inside `[n]`.
    pub fn unit_increments(self, n: u32) -> impl Iterator<Item = VertexSet> {
        let set = self;
        self.iter().filter_map(move |v| {
            if v < n && !set.contains(v + 1) {
                Some(set.remove(v).insert(v + 1))
            } else {
                None
            }
        })
    }
}

/// Dominance order on equal-size sets: `g ≪ f` iff the i-th smallest
/// element of `g` is at most the i-th smallest element of `f`, for all i.
///
/// Sets of different cardinality are incomparable.
pub fn dominates(g: VertexSet, f: VertexSet) -> Result<bool> {
    if g.len() != f.len() {
        return Err(Error::IncomparableCardinalities);
    }
    Ok(g.iter().zip(f.iter()).all(|(gi, fi)| gi <= fi))
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All `r`-element subsets of `[n]`, in lexicographic order of their
/// sorted element lists.
pub fn k_subsets(n: u32, r: u32) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r as usize);
    fn rec(n: u32, r: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<VertexSet>) {
        if cur.len() as u32 == r {
            out.push(VertexSet::from_slice(cur));
            return;
        }
        let remaining = r - cur.len() as u32;
        for v in start..=(n.saturating_sub(remaining - 1)) {
            cur.push(v);
            rec(n, r, v + 1, cur, out);
            cur.pop();
        }
    }
    if r <= n {
        rec(n, r, 1, &mut cur, &mut out);
    }
    out
}

/// All `r`-element subsets of an arbitrary vertex set, in lexicographic
/// order.
pub fn k_subsets_of(mask: VertexSet, r: u32) -> Vec<VertexSet> {
    let elems = mask.to_vec();
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(r as usize);
    fn rec(elems: &[u32], r: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<VertexSet>) {
        if cur.len() == r {
            out.push(VertexSet::from_slice(cur));
            return;
        }
        let need = r - cur.len();
        if elems.len() - start < need {
            return;
        }
        for i in start..=(elems.len() - need) {
            cur.push(elems[i]);
            rec(elems, r, i + 1, cur, out);
            cur.pop();
        }
    }
    if (r as usize) <= elems.len() {
        rec(&elems, r as usize, 0, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_matches_element_lists() {
        let a = VertexSet::from_slice(&[1, 4]);
        let b = VertexSet::from_slice(&[2, 3]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(a), Ordering::Greater);
        let c = VertexSet::from_slice(&[1]);
        let d = VertexSet::from_slice(&[1, 2]);
        assert_eq!(c.lex_cmp(d), Ordering::Less); // prefix first
    }

    #[test]
    fn canonical_order_puts_smaller_cardinality_first() {
        let single = VertexSet::from_slice(&[9]);
        let pair = VertexSet::from_slice(&[1, 2]);
        assert!(single < pair);
    }

    #[test]
    fn dominates_examples() {
        let g = VertexSet::from_slice(&[1, 3]);
        let f = VertexSet::from_slice(&[2, 4]);
        assert_eq!(dominates(g, f), Ok(true));
        let g = VertexSet::from_slice(&[1, 4]);
        let f = VertexSet::from_slice(&[2, 3]);
        assert_eq!(dominates(g, f), Ok(false));
        let g = VertexSet::from_slice(&[2, 5, 7]);
        assert_eq!(dominates(g, g), Ok(true));
        assert_eq!(
            dominates(VertexSet::from_slice(&[1]), f),
            Err(Error::IncomparableCardinalities)
        );
    }

    #[test]
    fn unit_moves() {
        let f = VertexSet::from_slice(&[2, 3]);
        let preds: Vec<_> = f.unit_decrements().collect();
        assert_eq!(preds, vec![VertexSet::from_slice(&[1, 3])]);
        let succs: Vec<_> = f.unit_increments(4).collect();
        assert_eq!(succs, vec![VertexSet::from_slice(&[2, 4])]);
    }

    #[test]
    fn k_subsets_lex_order_and_count() {
        let subs = k_subsets(5, 3);
        assert_eq!(subs.len(), 10);
        assert_eq!(subs[0], VertexSet::from_slice(&[1, 2, 3]));
        assert_eq!(subs[1], VertexSet::from_slice(&[1, 2, 4]));
        assert_eq!(subs[9], VertexSet::from_slice(&[3, 4, 5]));
        for w in subs.windows(2) {
            assert_eq!(w[0].lex_cmp(w[1]), Ordering::Less);
        }
    }

    #[test]
    fn full_set() {
        assert_eq!(VertexSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(63).len(), 63);
    }
}
