//! Trace families, the canonical base partition, restrictions with
//! widths and weights, and the exact counting identity.
//!
//! For a k-uniform family with matching number `s` on `[n]`, the trace
//! keeps every member's intersection with the kernel `[ks+k−1]`. A
//! maximal family is reconstructible from its trace, and the weighted
//! restriction sums over k-tuples of partition blocks reproduce the
//! family size exactly — in rational arithmetic, with zero tolerance.

use crate::constructions::{build_a, ExtremalSpec};
use crate::error::{Error, Result};
use crate::family::{exists_matching, Family};
use crate::math::{binomial, rat_u128, Rational};
use crate::set::{k_subsets_of, VertexSet};
use num::Zero;

/// The trace `{ F ∩ [ks+k−1] : F ∈ F }` of a k-uniform family,
/// deduplicated, over the kernel ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFamily {
    base: Family,
    n: u32,
    k: u32,
    s: u32,
}

impl TraceFamily {
    /// Wraps an already-computed kernel family as a trace with the given
    /// origin parameters; used by the search engine, whose states are
    /// trace families by construction.
    pub(crate) fn from_parts(base: Family, n: u32, k: u32, s: u32) -> TraceFamily {
        debug_assert_eq!(base.n(), k * s + k - 1);
        TraceFamily { base, n, k, s }
    }

    /// Ground set size `ks + k − 1` of the trace.
    pub fn kernel(&self) -> u32 {
        self.k * self.s + self.k - 1
    }

    pub fn family(&self) -> &Family {
        &self.base
    }

    /// Parameters `(n, k, s)` of the originating family.
    pub fn origin(&self) -> (u32, u32, u32) {
        (self.n, self.k, self.s)
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.base.contains(set)
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }
}

/// Computes the trace family on `[ks+k−1]`.
pub fn trace(fam: &Family, k: u32, s: u32) -> Result<TraceFamily> {
    if fam.uniform_k() != Some(k) {
        return Err(Error::UniformityRequired);
    }
    let kernel = k * s + k - 1;
    if fam.n() < kernel {
        return Err(Error::GroundSetTooSmall(kernel));
    }
    let mask = VertexSet::full(kernel);
    let mut members = Vec::with_capacity(fam.len());
    for &f in fam.members() {
        let h = f & mask;
        if h.is_empty() {
            return Err(Error::TraceMemberSize);
        }
        members.push(h);
    }
    let base = Family::new(kernel, None, members)?;
    Ok(TraceFamily {
        base,
        n: fam.n(),
        k,
        s,
    })
}

/// The reconstruction size `Σ_{H} C(n−ks−k+1, k−|H|)`, which equals the
/// size of the originating family whenever that family is maximal.
pub fn size_formula(t: &TraceFamily) -> u64 {
    let tail = (t.n - t.kernel()) as u64;
    let total: u128 = t
        .base
        .members()
        .iter()
        .map(|h| binomial(tail, (t.k - h.len()) as u64))
        .sum();
    u64::try_from(total).expect("size fits in u64 at desk scale")
}

/// Expands a trace family back to the k-uniform family on `[n]` whose
/// members intersect the kernel in a trace member.
pub fn expand(t: &TraceFamily) -> Result<Family> {
    let kernel = t.kernel();
    let mut tail_set = VertexSet::EMPTY;
    for x in (kernel + 1)..=t.n {
        tail_set = tail_set.insert(x);
    }
    let mut members = Vec::new();
    for &h in t.base.members() {
        let need = t.k - h.len();
        for tail in k_subsets_of(tail_set, need) {
            members.push(h | tail);
        }
    }
    Family::new(t.n, Some(t.k), members)
}

/// The canonical decomposition `[ks+k−1] = D ∪ F_1 ∪ … ∪ F_s`: `D` is
/// the lexicographically first `(k−1)`-set whose complement splits into
/// `s` members, and the blocks minimize the nested column sums
/// `(Σ a_1(i), Σ a_2(i), …)` with a final sorted-block-list tie-break.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePartition {
    pub d: VertexSet,
    /// Blocks sorted by their element lists; pairwise disjoint members.
    pub blocks: Vec<VertexSet>,
    k: u32,
    s: u32,
}

impl BasePartition {
    pub fn kernel(&self) -> u32 {
        self.k * self.s + self.k - 1
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `d_1`, the least excluded vertex.
    pub fn d1(&self) -> u32 {
        self.d.min_vertex().unwrap()
    }

    /// Block `F_r` for a 1-based index.
    pub fn block(&self, r: u32) -> VertexSet {
        self.blocks[(r - 1) as usize]
    }

    /// `X(R) = D ∪ ⋃_{r∈R} F_r`.
    pub fn x_of(&self, r_tuple: &[u32]) -> VertexSet {
        let mut x = self.d;
        for &r in r_tuple {
            x = x | self.block(r);
        }
        x
    }

    /// The q-th column over the given blocks: the q-th smallest element
    /// of each.
    pub fn column(&self, r_tuple: &[u32], q: u32) -> VertexSet {
        let mut col = VertexSet::EMPTY;
        for &r in r_tuple {
            let elems = self.block(r).to_vec();
            col = col.insert(elems[(q - 1) as usize]);
        }
        col
    }

    /// Number of blocks of the tuple met by `h` — the width of `h` in
    /// the restriction to that tuple.
    pub fn width(&self, r_tuple: &[u32], h: VertexSet) -> u32 {
        r_tuple
            .iter()
            .filter(|&&r| !h.is_disjoint(self.block(r)))
            .count() as u32
    }
}

/// Computes the canonical base partition of a stable family with
/// matching number exactly `s`.
pub fn base_partition(fam: &Family, k: u32, s: u32) -> Result<BasePartition> {
    if fam.uniform_k() != Some(k) || k < 2 {
        return Err(Error::UniformityRequired);
    }
    let kernel = k * s + k - 1;
    if fam.n() < kernel {
        return Err(Error::GroundSetTooSmall(kernel));
    }
    if !fam.is_stable().0 {
        return Err(Error::NotStable);
    }
    let nu = fam.nu();
    if nu != s {
        return Err(Error::WrongMatchingNumber {
            expected: s,
            found: nu,
        });
    }
    let kernel_mask = VertexSet::full(kernel);
    let inside: Vec<VertexSet> = fam
        .members()
        .iter()
        .copied()
        .filter(|m| m.is_subset(kernel_mask))
        .collect();

    // lexicographically first (k−1)-set with partitionable complement
    let mut chosen_d = None;
    for d in crate::set::k_subsets(kernel, k - 1) {
        let comp = kernel_mask - d;
        if exists_matching(&inside, comp, s) {
            chosen_d = Some(d);
            break;
        }
    }
    let d = chosen_d.ok_or(Error::NotPartitionable)?;

    // visit every partition of the complement into s members, keeping
    // the minimizer of (column sums, sorted block list)
    let comp = kernel_mask - d;
    let mut best: Option<(Vec<u64>, Vec<VertexSet>)> = None;
    let mut stack: Vec<VertexSet> = Vec::with_capacity(s as usize);
    enumerate_partitions(&inside, comp, &mut stack, &mut |blocks| {
        let mut sorted: Vec<VertexSet> = blocks.to_vec();
        sorted.sort();
        let key: Vec<u64> = (0..k as usize)
            .map(|q| sorted.iter().map(|b| b.to_vec()[q] as u64).sum())
            .collect();
        let candidate = (key, sorted);
        match &best {
            None => best = Some(candidate),
            Some(cur) => {
                if candidate < *cur {
                    best = Some(candidate);
                }
            }
        }
    });
    let (_, blocks) = best.ok_or(Error::NotPartitionable)?;
    Ok(BasePartition { d, blocks, k, s })
}

/// Visits every partition of `avail` into pairwise disjoint members.
fn enumerate_partitions(
    members: &[VertexSet],
    avail: VertexSet,
    stack: &mut Vec<VertexSet>,
    visit: &mut impl FnMut(&[VertexSet]),
) {
    if avail.is_empty() {
        visit(stack);
        return;
    }
    let v = avail.min_vertex().unwrap();
    for &m in members {
        if m.contains(v) && m.is_subset(avail) {
            stack.push(m);
            enumerate_partitions(members, avail - m, stack, visit);
            stack.pop();
        }
    }
}

/// One member of a restriction, with its width and (when defined)
/// weight `C(n−ks−k+1, k−|H|) / C(s−v, k−v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionMember {
    pub set: VertexSet,
    pub width: u32,
    pub weight: Option<Rational>,
}

/// The restriction `H(R) = { H ∈ F_0 : H ⊆ X(R) }` for an index tuple
/// `R ⊆ [s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub r: Vec<u32>,
    pub x: VertexSet,
    pub members: Vec<RestrictionMember>,
}

impl Restriction {
    /// Total weight, the quantity the counting identity sums over all
    /// k-tuples. Errors when a weight is undefined, which happens
    /// exactly when `s < k`.
    pub fn weight_sum(&self) -> Result<Rational> {
        let mut total = Rational::zero();
        for m in &self.members {
            match &m.weight {
                Some(w) => total += w,
                None => return Err(Error::LemmaRequiresSGeK),
            }
        }
        Ok(total)
    }

    pub fn member_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().map(|m| m.set)
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.members.iter().any(|m| m.set == set)
    }

    /// Members as a family over the kernel, for matching-number checks.
    pub fn as_family(&self, kernel: u32) -> Family {
        Family::new(kernel, None, self.members.iter().map(|m| m.set).collect())
            .expect("restriction members are valid sets")
    }
}

/// Computes `H(R)` with widths and weights for a sorted tuple of
/// distinct block indices.
pub fn restriction(t: &TraceFamily, bp: &BasePartition, r_tuple: &[u32]) -> Result<Restriction> {
    let (n, k, s) = t.origin();
    if r_tuple.is_empty()
        || r_tuple.windows(2).any(|w| w[0] >= w[1])
        || r_tuple.iter().any(|&r| r < 1 || r > s)
    {
        return Err(Error::BadRestrictionTuple);
    }
    if r_tuple.len() as u32 > k {
        return Err(Error::RestrictionTooWide);
    }
    let x = bp.x_of(r_tuple);
    let tail = (n - t.kernel()) as u64;
    let mut members = Vec::new();
    for &h in t.family().members() {
        if !h.is_subset(x) {
            continue;
        }
        let width = bp.width(r_tuple, h);
        let denom = binomial((s - width) as u64, (k - width) as u64);
        let weight = if denom == 0 {
            None
        } else {
            Some(rat_u128(binomial(tail, (k - h.len()) as u64)) / rat_u128(denom))
        };
        members.push(RestrictionMember {
            set: h,
            width,
            weight,
        });
    }
    Ok(Restriction {
        r: r_tuple.to_vec(),
        x,
        members,
    })
}

/// Trace plus canonical base partition of a stable, exactly-ν=s family.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub trace: TraceFamily,
    pub partition: BasePartition,
}

/// Convenience wrapper building both the trace and the base partition.
pub fn analyze(fam: &Family, k: u32, s: u32) -> Result<Analysis> {
    let t = trace(fam, k, s)?;
    let bp = base_partition(fam, k, s)?;
    // the excluded (k−1)-set is never itself a trace member
    debug_assert!(!t.contains(bp.d));
    Ok(Analysis {
        trace: t,
        partition: bp,
    })
}

/// All k-element index tuples of `[s]`, in lexicographic order.
pub fn index_tuples(s: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    fn rec(s: u32, k: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == k {
            out.push(cur.clone());
            return;
        }
        for r in start..=s {
            cur.push(r);
            rec(s, k, r + 1, cur, out);
            cur.pop();
        }
    }
    if k <= s {
        rec(s, k, 1, &mut cur, &mut out);
    }
    out
}

/// Result of evaluating the counting identity
/// `|F| = Σ_{R ∈ C([s],k)} Σ_{H ∈ H(R)} w(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingCheck {
    pub n: u32,
    pub k: u32,
    pub s: u32,
    pub lhs: u64,
    pub rhs: Rational,
    pub equal: bool,
}

/// Evaluates both sides of the counting identity for a stable maximal
/// family with matching number `s ≥ k`.
pub fn counting_lemma_check(fam: &Family, k: u32, s: u32) -> Result<CountingCheck> {
    if s < k {
        return Err(Error::LemmaRequiresSGeK);
    }
    let analysis = analyze(fam, k, s)?;
    let lhs = fam.len() as u64;
    let mut rhs = Rational::zero();
    for r_tuple in index_tuples(s, k) {
        let restr = restriction(&analysis.trace, &analysis.partition, &r_tuple)?;
        rhs += restr.weight_sum()?;
    }
    let equal = rhs == rat_u128(lhs as u128);
    Ok(CountingCheck {
        n: fam.n(),
        k,
        s,
        lhs,
        rhs,
        equal,
    })
}

/// The common restriction weight of the construction `A_ℓ(n)` at the
/// tuple `R = (1, …, k)`.
pub fn f_value(ell: u32, n: u32, k: u32, s: u32) -> Result<Rational> {
    if s < k {
        return Err(Error::LemmaRequiresSGeK);
    }
    let fam = build_a(ExtremalSpec::new(n, k, s, ell)?)?;
    let analysis = analyze(&fam, k, s)?;
    let first: Vec<u32> = (1..=k).collect();
    restriction(&analysis.trace, &analysis.partition, &first)?.weight_sum()
}

/// Restriction weights of `A_ℓ(n)` over every k-tuple; these must all
/// share one common value.
pub fn f_values_all_tuples(ell: u32, n: u32, k: u32, s: u32) -> Result<Vec<Rational>> {
    if s < k {
        return Err(Error::LemmaRequiresSGeK);
    }
    let fam = build_a(ExtremalSpec::new(n, k, s, ell)?)?;
    let analysis = analyze(&fam, k, s)?;
    index_tuples(s, k)
        .iter()
        .map(|r_tuple| restriction(&analysis.trace, &analysis.partition, r_tuple)?.weight_sum())
        .collect()
}

/// Verdict of the single-tuple weight bound
/// `Σ_{H∈H(R)} w(H) ≤ max_ℓ f(ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBoundCheck {
    pub n: u32,
    pub k: u32,
    pub s: u32,
    pub r: Vec<u32>,
    pub value: Rational,
    pub bound: Rational,
    pub holds: bool,
    /// Whether the hypothesis ν(F(1̄)) = s is satisfied. The bound is
    /// only claimed under it, but both sides stay well defined without
    /// it, so this is reported rather than raised.
    pub nu_without_first_ok: bool,
}

/// Evaluates the weight bound for one tuple `R`. Stability, exact
/// matching number and `s ≥ k` are hard preconditions; the ν(F(1̄)) = s
/// hypothesis is reported as a flag.
pub fn conjecture2_check(
    fam: &Family,
    k: u32,
    s: u32,
    r_tuple: &[u32],
) -> Result<WeightBoundCheck> {
    if s < k {
        return Err(Error::LemmaRequiresSGeK);
    }
    let analysis = analyze(fam, k, s)?; // rejects unstable and wrong-ν inputs
    let restr = restriction(&analysis.trace, &analysis.partition, r_tuple)?;
    let value = restr.weight_sum()?;
    let mut bound: Option<Rational> = None;
    for ell in 1..=k {
        let f = f_value(ell, fam.n(), k, s)?;
        bound = Some(match bound {
            None => f,
            Some(b) => b.max(f),
        });
    }
    let bound = bound.unwrap();
    let nu_without_first_ok = fam.without_vertex(1).nu() == s;
    let holds = value <= bound;
    Ok(WeightBoundCheck {
        n: fam.n(),
        k,
        s,
        r: r_tuple.to_vec(),
        value,
        bound,
        holds,
        nu_without_first_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{rat, rat_int};

    fn a(n: u32, k: u32, s: u32, ell: u32) -> Family {
        build_a(ExtremalSpec::new(n, k, s, ell).unwrap()).unwrap()
    }

    fn vs(elems: &[u32]) -> VertexSet {
        VertexSet::from_slice(elems)
    }

    #[test]
    fn trace_of_clique_is_itself() {
        let clique = a(13, 3, 3, 3);
        let t = trace(&clique, 3, 3).unwrap();
        assert_eq!(t.kernel(), 11);
        assert_eq!(t.len(), clique.len());
        assert!(t.family().members().iter().all(|m| m.len() == 3));
    }

    #[test]
    fn trace_of_cover_has_singletons() {
        let t = trace(&a(10, 3, 2, 1), 3, 2).unwrap();
        assert!(t.contains(vs(&[1])));
        assert!(t.contains(vs(&[2])));
        assert_eq!(t.family().members()[0], vs(&[1]));
    }

    #[test]
    fn trace_keeps_matching_number_of_saturated_families() {
        let t = trace(&a(13, 3, 3, 2), 3, 3).unwrap();
        assert_eq!(t.family().nu(), 3);
        let t = trace(&a(12, 3, 3, 1), 3, 3).unwrap();
        assert_eq!(t.family().nu(), 3);
    }

    #[test]
    fn size_formula_examples() {
        let clique = a(13, 3, 3, 3);
        assert_eq!(size_formula(&trace(&clique, 3, 3).unwrap()), 165);
        let cover10 = a(10, 3, 2, 1);
        assert_eq!(size_formula(&trace(&cover10, 3, 2).unwrap()), 64);
        let cover13 = a(13, 3, 3, 1);
        assert_eq!(size_formula(&trace(&cover13, 3, 3).unwrap()), 166);
    }

    #[test]
    fn expand_inverts_trace_for_maximal_families() {
        for (fam, k, s) in [
            (a(10, 3, 2, 1), 3, 2),
            (a(10, 3, 2, 3), 3, 2),
            (a(13, 3, 3, 2), 3, 3),
        ] {
            let t = trace(&fam, k, s).unwrap();
            assert_eq!(expand(&t).unwrap(), fam);
        }
    }

    #[test]
    fn base_partition_d_values_for_constructions() {
        // cover: D = (s+1, s+2)
        let bp = base_partition(&a(13, 3, 3, 1), 3, 3).unwrap();
        assert_eq!(bp.d, vs(&[4, 5]));
        assert_eq!(
            bp.blocks,
            vec![vs(&[1, 6, 9]), vs(&[2, 7, 10]), vs(&[3, 8, 11])]
        );
        // middle: D = (1, 2s+2)
        let bp = base_partition(&a(13, 3, 3, 2), 3, 3).unwrap();
        assert_eq!(bp.d, vs(&[1, 8]));
        assert_eq!(
            bp.blocks,
            vec![vs(&[2, 5, 9]), vs(&[3, 6, 10]), vs(&[4, 7, 11])]
        );
        // clique: D = (1, 2); the nested column-sum minimization spreads
        // the small elements across blocks
        let bp = base_partition(&a(13, 3, 3, 3), 3, 3).unwrap();
        assert_eq!(bp.d, vs(&[1, 2]));
        assert_eq!(
            bp.blocks,
            vec![vs(&[3, 6, 9]), vs(&[4, 7, 10]), vs(&[5, 8, 11])]
        );
        // s=2 cover
        let bp = base_partition(&a(10, 3, 2, 1), 3, 2).unwrap();
        assert_eq!(bp.d, vs(&[3, 4]));
    }

    #[test]
    fn base_partition_rejects_bad_inputs() {
        let unstable = Family::new(11, Some(3), vec![vs(&[9, 10, 11])]).unwrap();
        assert_eq!(base_partition(&unstable, 3, 1), Err(Error::NotStable));
        let wrong_nu = a(13, 3, 3, 2);
        assert!(matches!(
            base_partition(&wrong_nu, 3, 2),
            Err(Error::WrongMatchingNumber { .. })
        ));
    }

    #[test]
    fn restriction_profile_of_middle_construction() {
        // every single-block restriction of A_2 has 3 two-sets and 7
        // three-sets
        let fam = a(13, 3, 3, 2);
        let an = analyze(&fam, 3, 3).unwrap();
        for r in 1..=3u32 {
            let restr = restriction(&an.trace, &an.partition, &[r]).unwrap();
            let twos = restr.members.iter().filter(|m| m.set.len() == 2).count();
            let threes = restr.members.iter().filter(|m| m.set.len() == 3).count();
            assert_eq!((twos, threes), (3, 7), "block {r}");
        }
    }

    #[test]
    fn weights_match_definition() {
        // k=3, s=4, n=17: a block has width 1 and weight 1/3; a width-1
        // 2-set weighs 1
        let fam = a(17, 3, 4, 2);
        let an = analyze(&fam, 3, 4).unwrap();
        let restr = restriction(&an.trace, &an.partition, &[1]).unwrap();
        let block = an.partition.block(1);
        let m = restr.members.iter().find(|m| m.set == block).unwrap();
        assert_eq!(m.width, 1);
        assert_eq!(m.weight, Some(rat(1, 3)));
        let two = restr
            .members
            .iter()
            .find(|m| m.set.len() == 2 && m.width == 1)
            .unwrap();
        assert_eq!(two.weight, Some(rat_int(1)));
    }

    #[test]
    fn counting_identity_on_constructions() {
        for ell in 1..=3u32 {
            let fam = a(13, 3, 3, ell);
            let check = counting_lemma_check(&fam, 3, 3).unwrap();
            assert!(check.equal, "ell={ell}: {} vs {}", check.lhs, check.rhs);
        }
        // s > k exercises nontrivial weights
        let fam = a(17, 3, 4, 2);
        let check = counting_lemma_check(&fam, 3, 4).unwrap();
        assert_eq!(check.lhs, 372);
        assert!(check.equal);
    }

    #[test]
    fn f_values_at_s_equals_k() {
        assert_eq!(f_value(3, 13, 3, 3).unwrap(), rat_int(165));
        assert_eq!(f_value(1, 13, 3, 3).unwrap(), rat_int(166));
        assert_eq!(f_value(2, 13, 3, 3).unwrap(), rat_int(161));
    }

    #[test]
    fn f_gap_at_s4_is_thirty_over_four() {
        let f1 = f_value(1, 17, 3, 4).unwrap();
        let f3 = f_value(3, 17, 3, 4).unwrap();
        assert_eq!(f1 - f3, rat(30, 4));
    }

    #[test]
    fn f_value_is_tuple_independent() {
        for ell in 1..=3u32 {
            let all = f_values_all_tuples(ell, 17, 3, 4).unwrap();
            assert_eq!(all.len(), 4);
            assert!(all.windows(2).all(|w| w[0] == w[1]), "ell={ell}");
        }
    }

    #[test]
    fn weight_bound_examples() {
        let check = conjecture2_check(&a(13, 3, 3, 2), 3, 3, &[1, 2, 3]).unwrap();
        assert!(check.holds);
        assert!(check.nu_without_first_ok);
        assert_eq!(check.value, rat_int(161));
        assert_eq!(check.bound, rat_int(166));

        // the cover construction attains the bound with equality, but
        // fails the ν(F(1̄)) = s hypothesis
        let check = conjecture2_check(&a(13, 3, 3, 1), 3, 3, &[1, 2, 3]).unwrap();
        assert!(check.holds);
        assert_eq!(check.value, check.bound);
        assert!(!check.nu_without_first_ok);

        // the embedded clique evaluates to f(3)
        let check = conjecture2_check(&a(13, 3, 3, 3), 3, 3, &[1, 2, 3]).unwrap();
        assert!(check.holds);
        assert_eq!(check.value, rat_int(165));
    }

    #[test]
    fn restriction_rejects_wide_and_malformed_tuples() {
        let fam = a(13, 3, 3, 2);
        let an = analyze(&fam, 3, 3).unwrap();
        assert_eq!(
            restriction(&an.trace, &an.partition, &[1, 2, 3, 3]),
            Err(Error::BadRestrictionTuple)
        );
        assert_eq!(
            restriction(&an.trace, &an.partition, &[1, 2, 3, 4]),
            Err(Error::BadRestrictionTuple),
        );
    }

    #[test]
    fn widths_are_positive_and_sized() {
        let fam = a(13, 3, 3, 2);
        let an = analyze(&fam, 3, 3).unwrap();
        let restr = restriction(&an.trace, &an.partition, &[1, 2, 3]).unwrap();
        assert!(!restr.members.is_empty());
        for m in &restr.members {
            assert!(m.width >= 1);
            assert!(m.width <= 3);
            assert!(m.width <= m.set.len());
        }
        assert_eq!(restr.x, VertexSet::full(11));
    }
}
