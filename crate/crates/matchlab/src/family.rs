//! Set families with exact matching numbers, the dominance order and
//! stability checking.
//!
//! A [`Family`] is a deduplicated collection of vertex sets over `[n]`,
//! kept sorted by (cardinality, lexicographic element list) so every
//! iteration order, witness and counterexample is deterministic.

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A finite set family over the ground set `[n]`.
///
/// `uniform_k` records uniformity when every member has the same
/// cardinality; trace families carry `None` and mix cardinalities.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: u32,
    uniform_k: Option<u32>,
    members: Vec<VertexSet>,
}

impl Family {
    /// Builds a family, validating bounds and uniformity and putting the
    /// members into canonical order.
    pub fn new(n: u32, uniform_k: Option<u32>, members: Vec<VertexSet>) -> Result<Self> {
        if n > VertexSet::MAX_VERTEX {
            return Err(Error::ParametersOutOfRange);
        }
        let ground = VertexSet::full(n);
        let mut members = members;
        members.sort();
        members.dedup();
        for &m in &members {
            if m.is_empty() {
                return Err(Error::EmptyMember);
            }
            if !m.is_subset(ground) {
                let v = (m - ground).min_vertex().unwrap();
                return Err(Error::VertexOutOfRange(v, n));
            }
            if let Some(k) = uniform_k {
                if m.len() != k {
                    return Err(Error::NotUniform(m, k));
                }
            }
        }
        Ok(Family {
            n,
            uniform_k,
            members,
        })
    }

    pub fn empty(n: u32, uniform_k: Option<u32>) -> Self {
        Family {
            n,
            uniform_k,
            members: Vec::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn uniform_k(&self) -> Option<u32> {
        self.uniform_k
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    /// Same members over a larger ground set.
    pub fn embed(&self, n: u32) -> Result<Family> {
        if n < self.n {
            return Err(Error::ParametersOutOfRange);
        }
        Family::new(n, self.uniform_k, self.members.clone())
    }

    /// The subfamily of members avoiding `v`, written F(v̄).
    pub fn without_vertex(&self, v: u32) -> Family {
        Family {
            n: self.n,
            uniform_k: self.uniform_k,
            members: self
                .members
                .iter()
                .copied()
                .filter(|m| !m.contains(v))
                .collect(),
        }
    }

    /// Exact matching number, size only.
    pub fn nu(&self) -> u32 {
        max_matching(&self.members, VertexSet::full(self.n))
    }

    /// Exact matching number together with the deterministic witness:
    /// the lexicographically least maximum matching under sorted
    /// edge-list order.
    pub fn matching_number(&self) -> (u32, MatchingWitness) {
        let size = self.nu();
        let edges = lex_least_matching(&self.members, VertexSet::full(self.n), size);
        (size, MatchingWitness { edges })
    }

    /// Whether no matching of size `need` exists (cheaper than `nu` when
    /// only a threshold matters).
    pub fn nu_below(&self, need: u32) -> bool {
        !exists_matching(&self.members, VertexSet::full(self.n), need)
    }

    /// Stability check: closure under the dominance order within each
    /// cardinality class. Returns the first violating pair
    /// `(missing, present)` in canonical order, produced by a unit
    /// element decrement.
    pub fn is_stable(&self) -> (bool, Option<(VertexSet, VertexSet)>) {
        for &f in &self.members {
            for g in f.unit_decrements() {
                if !self.contains(g) {
                    return (false, Some((g, f)));
                }
            }
        }
        (true, None)
    }
}

impl std::fmt::Debug for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Family(n={}, {} members)", self.n, self.members.len())
    }
}

/// A set of pairwise disjoint members witnessing a matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingWitness {
    edges: Vec<VertexSet>,
}

impl MatchingWitness {
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Validates the witness against its source family.
    pub fn verify(&self, fam: &Family) -> bool {
        let mut used = VertexSet::EMPTY;
        for &e in &self.edges {
            if !fam.contains(e) || !e.is_disjoint(used) {
                return false;
            }
            used = used | e;
        }
        true
    }
}

/// Exact maximum matching size by branch and bound: branch on the least
/// vertex still coverable, either assigning it one of the edges through
/// it or discarding it.
pub(crate) fn max_matching(edges: &[VertexSet], avail: VertexSet) -> u32 {
    let live: Vec<VertexSet> = edges
        .iter()
        .copied()
        .filter(|e| e.is_subset(avail))
        .collect();
    let mut best = greedy_matching(&live);
    rec_max(&live, avail, 0, &mut best);
    best
}

fn greedy_matching(edges: &[VertexSet]) -> u32 {
    let mut used = VertexSet::EMPTY;
    let mut count = 0;
    for &e in edges {
        if e.is_disjoint(used) {
            used = used | e;
            count += 1;
        }
    }
    count
}

fn rec_max(live: &[VertexSet], avail: VertexSet, count: u32, best: &mut u32) {
    if count > *best {
        *best = count;
    }
    let cur: Vec<VertexSet> = live
        .iter()
        .copied()
        .filter(|e| e.is_subset(avail))
        .collect();
    if cur.is_empty() {
        return;
    }
    let mut union = VertexSet::EMPTY;
    let mut min_size = u32::MAX;
    for &e in &cur {
        union = union | e;
        min_size = min_size.min(e.len());
    }
    if count + union.len() / min_size <= *best {
        return;
    }
    let v = union.min_vertex().unwrap();
    for &e in cur.iter().filter(|e| e.contains(v)) {
        rec_max(&cur, avail - e, count + 1, best);
    }
    rec_max(&cur, avail.remove(v), count, best);
}

/// Does a matching of size `need` exist among the edges inside `avail`?
pub(crate) fn exists_matching(edges: &[VertexSet], avail: VertexSet, need: u32) -> bool {
    if need == 0 {
        return true;
    }
    let live: Vec<VertexSet> = edges
        .iter()
        .copied()
        .filter(|e| e.is_subset(avail))
        .collect();
    rec_exists(&live, avail, need)
}

fn rec_exists(live: &[VertexSet], avail: VertexSet, need: u32) -> bool {
    if need == 0 {
        return true;
    }
    let cur: Vec<VertexSet> = live
        .iter()
        .copied()
        .filter(|e| e.is_subset(avail))
        .collect();
    if (cur.len() as u32) < need {
        return false;
    }
    let mut union = VertexSet::EMPTY;
    let mut min_size = u32::MAX;
    for &e in &cur {
        union = union | e;
        min_size = min_size.min(e.len());
    }
    if union.len() / min_size < need {
        return false;
    }
    let v = union.min_vertex().unwrap();
    for &e in cur.iter().filter(|e| e.contains(v)) {
        if rec_exists(&cur, avail - e, need - 1) {
            return true;
        }
    }
    rec_exists(&cur, avail.remove(v), need)
}

/// The lexicographically least maximum matching, as a sorted edge list:
/// greedily pick the least edge that still extends to the target size
/// using canonically later edges.
fn lex_least_matching(edges: &[VertexSet], avail: VertexSet, size: u32) -> Vec<VertexSet> {
    let mut result = Vec::with_capacity(size as usize);
    let mut avail = avail;
    let mut start = 0;
    let mut need = size;
    while need > 0 {
        let mut found = false;
        for i in start..edges.len() {
            let e = edges[i];
            if !e.is_subset(avail) {
                continue;
            }
            if exists_matching(&edges[i + 1..], avail - e, need - 1) {
                result.push(e);
                avail = avail - e;
                start = i + 1;
                need -= 1;
                found = true;
                break;
            }
        }
        assert!(found, "witness extension must exist at the optimal size");
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::k_subsets;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fam(n: u32, k: u32, members: &[&[u32]]) -> Family {
        Family::new(
            n,
            Some(k),
            members.iter().map(|m| VertexSet::from_slice(m)).collect(),
        )
        .unwrap()
    }

    /// Oracle: maximum matching by enumerating all edge subsets.
    fn naive_nu(members: &[VertexSet]) -> u32 {
        assert!(members.len() <= 20);
        let mut best = 0u32;
        for mask in 0u32..(1 << members.len()) {
            if mask.count_ones() <= best {
                continue;
            }
            let mut used = VertexSet::EMPTY;
            let mut ok = true;
            for (i, &e) in members.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    if !e.is_disjoint(used) {
                        ok = false;
                        break;
                    }
                    used = used | e;
                }
            }
            if ok {
                best = mask.count_ones();
            }
        }
        best
    }

    /// Oracle: lexicographically least maximum matching by full
    /// enumeration.
    fn naive_lex_least(members: &[VertexSet], size: u32) -> Vec<VertexSet> {
        let mut best: Option<Vec<VertexSet>> = None;
        for mask in 0u32..(1 << members.len()) {
            if mask.count_ones() != size {
                continue;
            }
            let mut used = VertexSet::EMPTY;
            let mut sel = Vec::new();
            let mut ok = true;
            for (i, &e) in members.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    if !e.is_disjoint(used) {
                        ok = false;
                        break;
                    }
                    used = used | e;
                    sel.push(e);
                }
            }
            if !ok {
                continue;
            }
            sel.sort();
            match &best {
                None => best = Some(sel),
                Some(b) => {
                    if sel < *b {
                        best = Some(sel);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }

    #[test]
    fn matching_trivial_cases() {
        let empty = Family::empty(5, Some(3));
        let (nu, w) = empty.matching_number();
        assert_eq!(nu, 0);
        assert!(w.is_empty());

        let single = fam(5, 3, &[&[1, 2, 3]]);
        let (nu, w) = single.matching_number();
        assert_eq!(nu, 1);
        assert_eq!(w.edges(), &[VertexSet::from_slice(&[1, 2, 3])]);
        assert!(w.verify(&single));
    }

    #[test]
    fn matching_bounded_by_n_over_k() {
        let complete = Family::new(7, Some(3), k_subsets(7, 3)).unwrap();
        assert_eq!(complete.nu(), 2); // floor(7/3)
        let complete9 = Family::new(9, Some(3), k_subsets(9, 3)).unwrap();
        assert_eq!(complete9.nu(), 3);
    }

    #[test]
    fn matching_agrees_with_naive_oracle_on_random_families() {
        // mixed-size families included: the trace machinery depends on them
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..300 {
            let n = rng.random_range(3..=8);
            let mut members = Vec::new();
            let budget = rng.random_range(0..=12usize);
            for _ in 0..budget {
                let r = rng.random_range(1..=3.min(n));
                let all = k_subsets(n, r);
                members.push(all[rng.random_range(0..all.len())]);
            }
            let f = Family::new(n, None, members).unwrap();
            assert_eq!(f.nu(), naive_nu(f.members()), "family {:?}", f.members());
        }
    }

    #[test]
    fn stability_examples() {
        let missing = fam(3, 2, &[&[2, 3]]);
        let (ok, ce) = missing.is_stable();
        assert!(!ok);
        assert_eq!(
            ce,
            Some((
                VertexSet::from_slice(&[1, 3]),
                VertexSet::from_slice(&[2, 3])
            ))
        );

        let complete = Family::new(6, Some(3), k_subsets(6, 3)).unwrap();
        assert!(complete.is_stable().0);
    }

    #[test]
    fn witness_is_lex_least_against_oracle() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(4..=8);
            let k = rng.random_range(2..=3);
            let all = k_subsets(n, k);
            let count = rng.random_range(0..=all.len().min(10));
            let mut members = Vec::new();
            for _ in 0..count {
                members.push(all[rng.random_range(0..all.len())]);
            }
            let f = Family::new(n, Some(k), members).unwrap();
            let (nu, w) = f.matching_number();
            assert_eq!(nu, naive_nu(f.members()), "family {:?}", f.members());
            assert!(w.verify(&f));
            let oracle = naive_lex_least(f.members(), nu);
            assert_eq!(w.edges(), &oracle[..], "family {:?}", f.members());
        }
    }

    #[test]
    fn matching_is_monotone_and_subadditive() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.random_range(5..=8);
            let all = k_subsets(n, 3);
            let mut members: Vec<VertexSet> = Vec::new();
            for _ in 0..rng.random_range(0..10usize) {
                members.push(all[rng.random_range(0..all.len())]);
            }
            let f = Family::new(n, Some(3), members.clone()).unwrap();
            let nu0 = f.nu();
            // adding one edge changes nu by 0 or +1
            let extra = all[rng.random_range(0..all.len())];
            members.push(extra);
            let g = Family::new(n, Some(3), members.clone()).unwrap();
            let nu1 = g.nu();
            assert!(nu1 == nu0 || nu1 == nu0 + 1);
            // union subadditivity
            let mut other_members = Vec::new();
            for _ in 0..rng.random_range(0..8usize) {
                other_members.push(all[rng.random_range(0..all.len())]);
            }
            let h = Family::new(n, Some(3), other_members.clone()).unwrap();
            let mut both = members.clone();
            both.extend(other_members);
            let u = Family::new(n, Some(3), both).unwrap();
            assert!(u.nu() <= g.nu() + h.nu());
        }
    }

    #[test]
    fn dominance_is_a_partial_order_on_small_subsets() {
        use crate::set::dominates;
        for r in [2u32, 3] {
            let sets = k_subsets(8, r);
            for &a in &sets {
                assert_eq!(dominates(a, a), Ok(true));
                for &b in &sets {
                    let ab = dominates(a, b).unwrap();
                    let ba = dominates(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b); // antisymmetry
                    }
                    for &c in &sets {
                        if ab && dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap()); // transitivity
                        }
                    }
                }
            }
        }
    }
}
