//! Structural classification of restrictions at k = 3: the width-2
//! pair trichotomy, diagonals and transversals, and the
//! normal/fat/slightly-fat/robust triple profiles with their missing-set
//! counts.
//!
//! Every predicate here is decided by brute force over the bounded
//! vertex set `X(R)` (at most 11 vertices), so correctness is cheap.

use crate::error::{Error, Result};
use crate::set::{dominates, k_subsets_of, VertexSet};
use crate::trace::{restriction, BasePartition, Restriction, TraceFamily};

/// The three possible shapes of the width-2 pair family once it has at
/// least three members, plus the small case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairCase {
    /// Fewer than three width-2 two-sets; no shape is claimed.
    Small,
    /// All four sets `{x,y}` with `x ∈ {a_u,b_u}`, `y ∈ {a_v,b_v}`.
    CaseI,
    /// The three of Case I except `{b_u,b_v}`.
    CaseII,
    /// `{a,a}`, `{a,b}`, `{a,c}` pivoting on one block's least element.
    CaseIII,
}

/// Classification of the width-2 two-sets of one block pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairProfile {
    pub u: u32,
    pub v: u32,
    /// Width-2 two-sets of `H({u,v})`, canonically sorted.
    pub g2_members: Vec<VertexSet>,
    pub case: PairCase,
}

impl PairProfile {
    /// `g(u,v)`, the number of width-2 two-sets.
    pub fn g(&self) -> usize {
        self.g2_members.len()
    }
}

fn block_abc(bp: &BasePartition, r: u32) -> (u32, u32, u32) {
    let e = bp.block(r).to_vec();
    (e[0], e[1], e[2])
}

fn pair_set(x: u32, y: u32) -> VertexSet {
    VertexSet::from_slice(&[x, y])
}

/// Classifies the width-2 two-sets of the pair `{u, v}` against the
/// three admissible shapes.
///
/// Requires k = 3 and `d_1 = 1`; the single-block side conditions
/// (`{a,c}` and `{b,c}` absent, and `{a,b}` present forcing `{1,c}`
/// absent) are verified first, since the trichotomy is only claimed
/// when they hold.
pub fn classify_pair(
    t: &TraceFamily,
    bp: &BasePartition,
    u: u32,
    v: u32,
) -> Result<PairProfile> {
    let (_, k, _) = t.origin();
    if k != 3 {
        return Err(Error::PairNeedsK3);
    }
    if bp.d1() != 1 {
        return Err(Error::PairNeedsDOne);
    }
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    for w in [u, v] {
        let (a, b, c) = block_abc(bp, w);
        if t.contains(pair_set(a, c)) {
            return Err(Error::SideCondition(format!("{{a_{w},c_{w}}} present")));
        }
        if t.contains(pair_set(b, c)) {
            return Err(Error::SideCondition(format!("{{b_{w},c_{w}}} present")));
        }
        if t.contains(pair_set(a, b)) && t.contains(pair_set(1, c)) {
            return Err(Error::SideCondition(format!(
                "{{a_{w},b_{w}}} and {{1,c_{w}}} both present"
            )));
        }
    }

    let restr = restriction(t, bp, &[u, v])?;
    let mut h2: Vec<VertexSet> = restr
        .members
        .iter()
        .filter(|m| m.set.len() == 2 && m.width == 2)
        .map(|m| m.set)
        .collect();
    h2.sort();

    if h2.len() < 3 {
        return Ok(PairProfile {
            u,
            v,
            g2_members: h2,
            case: PairCase::Small,
        });
    }

    let (au, bu, _cu) = block_abc(bp, u);
    let (av, bv, _cv) = block_abc(bp, v);
    let shape = |sets: &[VertexSet]| {
        let mut s = sets.to_vec();
        s.sort();
        s
    };
    let case_i = shape(&[
        pair_set(au, av),
        pair_set(au, bv),
        pair_set(bu, av),
        pair_set(bu, bv),
    ]);
    let case_ii = shape(&[pair_set(au, av), pair_set(au, bv), pair_set(bu, av)]);
    let case_iii_uv = {
        let (_, _, cv) = block_abc(bp, v);
        shape(&[pair_set(au, av), pair_set(au, bv), pair_set(au, cv)])
    };
    let case_iii_vu = {
        let (_, _, cu) = block_abc(bp, u);
        shape(&[pair_set(av, au), pair_set(av, bu), pair_set(av, cu)])
    };

    let case = if h2 == case_i {
        PairCase::CaseI
    } else if h2 == case_ii {
        PairCase::CaseII
    } else if h2 == case_iii_uv || h2 == case_iii_vu {
        PairCase::CaseIII
    } else {
        return Err(Error::TrichotomyViolation);
    };
    Ok(PairProfile {
        u,
        v,
        g2_members: h2,
        case,
    })
}

/// All transversals of the blocks indexed by `r_tuple`: k-sets meeting
/// every block exactly once. There are `k^k` of them at `|R| = k`.
pub fn transversals(bp: &BasePartition, r_tuple: &[u32]) -> Result<Vec<VertexSet>> {
    if r_tuple.len() as u32 != bp.k() {
        return Err(Error::BadRestrictionTuple);
    }
    let blocks: Vec<Vec<u32>> = r_tuple.iter().map(|&r| bp.block(r).to_vec()).collect();
    let mut out = vec![VertexSet::EMPTY];
    for block in &blocks {
        let mut next = Vec::with_capacity(out.len() * block.len());
        for &partial in &out {
            for &x in block {
                next.push(partial.insert(x));
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// All diagonals: transversals meeting every column exactly once.
/// There are `k!` of them at `|R| = k`.
pub fn diagonals(bp: &BasePartition, r_tuple: &[u32]) -> Result<Vec<VertexSet>> {
    let k = bp.k();
    if r_tuple.len() as u32 != k {
        return Err(Error::BadRestrictionTuple);
    }
    let columns: Vec<VertexSet> = (1..=k).map(|q| bp.column(r_tuple, q)).collect();
    let all = transversals(bp, r_tuple)?;
    Ok(all
        .into_iter()
        .filter(|t| columns.iter().all(|col| (*t & *col).len() == 1))
        .collect())
}

/// Transversals dominated by a given diagonal in the ≪ order.
///
/// There are always at least `k!` of these: raising the diagonal's
/// element within each block gives `k!` block-aligned transversals (a
/// product over the diagonal's column positions), and block-wise raises
/// imply sorted-list domination. Further dominated transversals can
/// exist on top of those.
pub fn dominated_transversals(
    bp: &BasePartition,
    r_tuple: &[u32],
    diagonal: VertexSet,
) -> Result<Vec<VertexSet>> {
    Ok(transversals(bp, r_tuple)?
        .into_iter()
        .filter(|t| dominates(diagonal, *t).unwrap_or(false))
        .collect())
}

/// The `k!` transversals obtained from a diagonal by raising each
/// element within its own block.
pub fn block_raised_transversals(
    bp: &BasePartition,
    r_tuple: &[u32],
    diagonal: VertexSet,
) -> Result<Vec<VertexSet>> {
    if r_tuple.len() as u32 != bp.k() {
        return Err(Error::BadRestrictionTuple);
    }
    let mut out = vec![VertexSet::EMPTY];
    for &r in r_tuple {
        let block = bp.block(r).to_vec();
        let pick = (diagonal & bp.block(r))
            .min_vertex()
            .ok_or(Error::BadRestrictionTuple)?;
        let mut next = Vec::new();
        for &partial in &out {
            for &x in block.iter().filter(|&&x| x >= pick) {
                next.push(partial.insert(x));
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Structural profile of an index triple at k = 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleProfile {
    pub r: Vec<u32>,
    /// Columns `T_1, T_2, T_3` over the triple's blocks.
    pub columns: [VertexSet; 3],
    /// Elements ordered column by column: every `T_q` entirely below
    /// `T_{q+1}`.
    pub normal: bool,
    /// `T_2 ∪ T_3` splits into two disjoint present 3-sets.
    pub fat: bool,
    /// `T_1 ∪ T_3` splits into two disjoint present transversals.
    pub slightly_fat: bool,
    /// Three pairwise disjoint present 2-sets inside the block union.
    pub robust: bool,
    /// `Q ≠ ∅`.
    pub sufficiently_fat: bool,
    /// Block indices `u` whose modified ridge `{a_u,b_v,b_z,c_u,c_v,c_z}`
    /// splits into two disjoint present 3-sets.
    pub q: Vec<u32>,
    /// Width-1 two-sets in `H(R)`.
    pub g1: u32,
    /// Width-2 two-sets in `H(R)`.
    pub g2: u32,
    /// Every triple of pairwise disjoint present 2-sets inside the
    /// block union (the robustness witnesses).
    pub robust_witnesses: Vec<[VertexSet; 3]>,
}

/// Computes the full triple profile by exhaustive checking over `X(R)`.
pub fn triple_profile(
    t: &TraceFamily,
    bp: &BasePartition,
    r_tuple: &[u32],
) -> Result<TripleProfile> {
    let (_, k, _) = t.origin();
    if k != 3 || r_tuple.len() != 3 {
        return Err(Error::PairNeedsK3);
    }
    let restr = restriction(t, bp, r_tuple)?;
    let columns = [
        bp.column(r_tuple, 1),
        bp.column(r_tuple, 2),
        bp.column(r_tuple, 3),
    ];
    let normal = (0..2).all(|q| {
        columns[q].max_vertex().unwrap() < columns[q + 1].min_vertex().unwrap()
    });

    let present_threes: Vec<VertexSet> = restr
        .members
        .iter()
        .filter(|m| m.set.len() == 3)
        .map(|m| m.set)
        .collect();
    let contains3 = |s: VertexSet| present_threes.contains(&s);

    let fat = splits_into_two_present(columns[1] | columns[2], &contains3);

    // slightly fat wants two *transversals*; inside T_1 ∪ T_3 any
    // partition part is a transversal iff it meets each block once
    let block_union = bp.x_of(r_tuple) - bp.d;
    let is_transversal =
        |s: VertexSet| r_tuple.iter().all(|&r| (s & bp.block(r)).len() == 1);
    let slightly_fat = {
        let region = columns[0] | columns[2];
        k_subsets_of(region, 3).into_iter().any(|h| {
            let other = region - h;
            h.lex_cmp(other).is_lt()
                && is_transversal(h)
                && is_transversal(other)
                && contains3(h)
                && contains3(other)
        })
    };

    // robustness witnesses: disjoint present 2-sets inside the blocks
    let block_twos: Vec<VertexSet> = restr
        .members
        .iter()
        .filter(|m| m.set.len() == 2 && m.set.is_subset(block_union))
        .map(|m| m.set)
        .collect();
    let mut robust_witnesses = Vec::new();
    for i in 0..block_twos.len() {
        for j in (i + 1)..block_twos.len() {
            if !block_twos[i].is_disjoint(block_twos[j]) {
                continue;
            }
            for l in (j + 1)..block_twos.len() {
                if block_twos[l].is_disjoint(block_twos[i])
                    && block_twos[l].is_disjoint(block_twos[j])
                {
                    robust_witnesses.push([block_twos[i], block_twos[j], block_twos[l]]);
                }
            }
        }
    }
    let robust = !robust_witnesses.is_empty();

    let mut q = Vec::new();
    for (pos, &u) in r_tuple.iter().enumerate() {
        let (au, _bu, cu) = block_abc(bp, u);
        let mut ridge = VertexSet::from_slice(&[au, cu]);
        for (other_pos, &w) in r_tuple.iter().enumerate() {
            if other_pos != pos {
                let (_aw, bw, cw) = block_abc(bp, w);
                ridge = ridge.insert(bw).insert(cw);
            }
        }
        if splits_into_two_present(ridge, &contains3) {
            q.push(u);
        }
    }
    let sufficiently_fat = !q.is_empty();

    let g1 = restr
        .members
        .iter()
        .filter(|m| m.set.len() == 2 && m.width == 1)
        .count() as u32;
    let g2 = restr
        .members
        .iter()
        .filter(|m| m.set.len() == 2 && m.width == 2)
        .count() as u32;

    Ok(TripleProfile {
        r: r_tuple.to_vec(),
        columns,
        normal,
        fat,
        slightly_fat,
        robust,
        sufficiently_fat,
        q,
        g1,
        g2,
        robust_witnesses,
    })
}

/// Does the 6-element region split into two disjoint 3-sets that are
/// both present?
fn splits_into_two_present(region: VertexSet, present: &impl Fn(VertexSet) -> bool) -> bool {
    debug_assert_eq!(region.len(), 6);
    let anchor = region.min_vertex().unwrap();
    for h in k_subsets_of(region.remove(anchor), 2) {
        let first = h.insert(anchor);
        if present(first) && present(region - first) {
            return true;
        }
    }
    false
}

/// Exact absence counts over the canonical regions of one triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MissingCounts {
    /// Width-3 three-sets inside `B ∪ C = T_2 ∪ T_3` absent from `H(R)`
    /// (out of 8).
    pub missing_w3_in_bc: u32,
    /// Width-2 three-sets inside `B ∪ C` absent from `H(R)` (out of 12).
    pub missing_w2_in_bc: u32,
    /// Transversals of the whole block union absent from `H(R)`
    /// (out of 27).
    pub transversals_missing: u32,
    /// Width-2 three-sets inside the whole block union absent from
    /// `H(R)` (out of 54).
    pub missing_w2_in_blocks: u32,
}

/// Counts absent sets in the stated categories for downstream
/// assertions.
pub fn missing_counts(
    t: &TraceFamily,
    bp: &BasePartition,
    r_tuple: &[u32],
) -> Result<MissingCounts> {
    let (_, k, _) = t.origin();
    if k != 3 || r_tuple.len() != 3 {
        return Err(Error::PairNeedsK3);
    }
    let restr = restriction(t, bp, r_tuple)?;
    let present: Vec<VertexSet> = restr.member_sets().collect();
    let contains = |s: VertexSet| present.contains(&s);

    let bc = bp.column(r_tuple, 2) | bp.column(r_tuple, 3);
    let mut missing_w3_in_bc = 0;
    let mut missing_w2_in_bc = 0;
    for h in k_subsets_of(bc, 3) {
        let width = bp.width(r_tuple, h);
        if contains(h) {
            continue;
        }
        match width {
            3 => missing_w3_in_bc += 1,
            2 => missing_w2_in_bc += 1,
            _ => unreachable!("three elements from two-element block slices"),
        }
    }

    let mut transversals_missing = 0;
    for tr in transversals(bp, r_tuple)? {
        if !contains(tr) {
            transversals_missing += 1;
        }
    }

    let block_union = bp.x_of(r_tuple) - bp.d;
    let mut missing_w2_in_blocks = 0;
    for h in k_subsets_of(block_union, 3) {
        if bp.width(r_tuple, h) == 2 && !contains(h) {
            missing_w2_in_blocks += 1;
        }
    }

    Ok(MissingCounts {
        missing_w3_in_bc,
        missing_w2_in_bc,
        transversals_missing,
        missing_w2_in_blocks,
    })
}

/// `ν(H(R))` computed exactly from the restriction members.
pub fn restriction_nu(t: &TraceFamily, restr: &Restriction) -> u32 {
    restr.as_family(t.kernel()).nu()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_a, ExtremalSpec};
    use crate::family::Family;
    use crate::trace::analyze;

    fn analyzed(n: u32, k: u32, s: u32, ell: u32) -> (Family, crate::trace::Analysis) {
        let fam = build_a(ExtremalSpec::new(n, k, s, ell).unwrap()).unwrap();
        let an = analyze(&fam, k, s).unwrap();
        (fam, an)
    }

    #[test]
    fn middle_construction_pairs_are_case_one() {
        let (_, an) = analyzed(13, 3, 3, 2);
        for (u, v) in [(1, 2), (1, 3), (2, 3)] {
            let profile = classify_pair(&an.trace, &an.partition, u, v).unwrap();
            assert_eq!(profile.case, PairCase::CaseI, "pair ({u},{v})");
            assert_eq!(profile.g(), 4);
        }
    }

    #[test]
    fn embedded_clique_pairs_are_small() {
        // every member of the embedded clique is a 3-set, so no width-2
        // two-sets exist at all
        let (_, an) = analyzed(13, 3, 3, 3);
        let profile = classify_pair(&an.trace, &an.partition, 1, 2).unwrap();
        assert_eq!(profile.case, PairCase::Small);
        assert!(profile.g2_members.is_empty());
    }

    #[test]
    fn cover_construction_fails_the_pair_precondition() {
        // the cover construction has d_1 = s+1, not 1
        let (_, an) = analyzed(13, 3, 3, 1);
        assert_eq!(
            classify_pair(&an.trace, &an.partition, 1, 2),
            Err(Error::PairNeedsDOne)
        );
    }

    #[test]
    fn transversal_and_diagonal_counts() {
        let (_, an) = analyzed(13, 3, 3, 2);
        let r = [1, 2, 3];
        let ts = transversals(&an.partition, &r).unwrap();
        assert_eq!(ts.len(), 27);
        let ds = diagonals(&an.partition, &r).unwrap();
        assert_eq!(ds.len(), 6);
        for &d in &ds {
            assert!(ts.contains(&d));
            let raised = block_raised_transversals(&an.partition, &r, d).unwrap();
            assert_eq!(raised.len(), 6, "diagonal {d:?}");
            let dom = dominated_transversals(&an.partition, &r, d).unwrap();
            assert!(dom.len() >= 6, "diagonal {d:?}");
            for t in &raised {
                assert!(dom.contains(t));
            }
        }
    }

    #[test]
    fn clique_triple_is_fat_and_normal_but_not_robust() {
        let (_, an) = analyzed(13, 3, 3, 3);
        let p = triple_profile(&an.trace, &an.partition, &[1, 2, 3]).unwrap();
        assert!(p.normal);
        assert!(p.fat);
        assert!(p.slightly_fat);
        // every member of the embedded clique is a 3-set, so there are
        // no 2-sets to witness robustness
        assert!(!p.robust);
        assert_eq!((p.g1, p.g2), (0, 0));
    }

    #[test]
    fn middle_triple_profile() {
        let (_, an) = analyzed(13, 3, 3, 2);
        let p = triple_profile(&an.trace, &an.partition, &[1, 2, 3]).unwrap();
        assert!(p.robust, "three disjoint width-covering pairs exist");
        assert!(!p.fat, "no two member 3-sets cover T_2 ∪ T_3");
        assert_eq!(p.g2, 12);
        // additivity over the three pairs
        let mut total = 0;
        for (u, v) in [(1, 2), (1, 3), (2, 3)] {
            total += classify_pair(&an.trace, &an.partition, u, v).unwrap().g() as u32;
        }
        assert_eq!(p.g2, total);
        // every robustness witness covers T_1 ∪ T_2
        let t12 = p.columns[0] | p.columns[1];
        for w in &p.robust_witnesses {
            assert_eq!(w[0] | w[1] | w[2], t12);
        }
    }

    #[test]
    fn cover_triple_profile() {
        let (_, an) = analyzed(13, 3, 3, 1);
        let p = triple_profile(&an.trace, &an.partition, &[1, 2, 3]).unwrap();
        assert!(!p.fat, "no member 3-set avoids the window");
        assert!(p.q.is_empty());
        assert!(!p.sufficiently_fat);
        // pairs like {1,6},{2,7},{3,8} are present and block-contained
        assert!(p.robust);
    }

    #[test]
    fn missing_counts_on_constructions() {
        let (_, an) = analyzed(13, 3, 3, 3);
        let m = missing_counts(&an.trace, &an.partition, &[1, 2, 3]).unwrap();
        assert_eq!(
            m,
            MissingCounts {
                missing_w3_in_bc: 0,
                missing_w2_in_bc: 0,
                transversals_missing: 0,
                missing_w2_in_blocks: 0,
            }
        );

        let (_, an) = analyzed(13, 3, 3, 1);
        let m = missing_counts(&an.trace, &an.partition, &[1, 2, 3]).unwrap();
        assert!(m.missing_w3_in_bc >= 4, "{m:?}");
        assert!(m.missing_w2_in_bc >= 6, "{m:?}");
    }

    #[test]
    fn pair_arguments_commute() {
        let (_, an) = analyzed(13, 3, 3, 2);
        let a = classify_pair(&an.trace, &an.partition, 3, 1).unwrap();
        let b = classify_pair(&an.trace, &an.partition, 1, 3).unwrap();
        assert_eq!(a, b);
    }
}
