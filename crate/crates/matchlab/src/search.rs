//! Saturation at fixed matching number and the exhaustive maximizer
//! `m(n, k, s)` over stable trace families.
//!
//! The maximizer explores down-sets of the dominance order on the
//! kernel's small sets, scoring each by the exact reconstruction size.
//! Branches die on (a) an exact matching-number check, (b) an
//! optimistic completion bound from the remaining candidate weights,
//! and (c) forward exclusion of members no matching can tolerate. Every
//! exploration order yields the same value and the same canonical
//! witness: ties are resolved by the lexicographically least trace.

use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{build_a, ExtremalSpec};
use crate::error::{Error, Result};
use crate::family::{exists_matching, Family};
use crate::math::binomial;
use crate::set::{k_subsets, VertexSet};
use crate::shift::stabilize;
use crate::trace::{expand, trace, TraceFamily};

/// Greedy completion to a maximal family: every k-set of `[n]` is tried
/// in lexicographic order and kept when the matching number stays at
/// most `s`.
pub fn saturate(fam: &Family, s: u32) -> Result<Family> {
    let k = fam.uniform_k().ok_or(Error::UniformityRequired)?;
    saturate_with_order(fam, s, &k_subsets(fam.n(), k))
}

/// Saturation along an explicit candidate order.
pub fn saturate_with_order(fam: &Family, s: u32, order: &[VertexSet]) -> Result<Family> {
    let k = fam.uniform_k().ok_or(Error::UniformityRequired)?;
    if !fam.nu_below(s + 1) {
        return Err(Error::NuTooLarge);
    }
    let ground = VertexSet::full(fam.n());
    let mut members: Vec<VertexSet> = fam.members().to_vec();
    for &e in order {
        debug_assert_eq!(e.len(), k);
        if members.contains(&e) {
            continue;
        }
        // adding e keeps ν ≤ s unless s members disjoint from e exist
        if !exists_matching(&members, ground - e, s) {
            members.push(e);
        }
    }
    Family::new(fam.n(), Some(k), members)
}

/// A maximal stable family with matching number `s`, produced by
/// saturating an empty family along a seeded random order and then
/// alternating stabilization with lexicographic re-saturation until
/// both fix the family.
pub fn random_saturated_stable(n: u32, k: u32, s: u32, seed: u64) -> Result<Family> {
    let mut order = k_subsets(n, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut fam = saturate_with_order(&Family::empty(n, Some(k)), s, &order)?;
    loop {
        let (stable, _) = stabilize(&fam);
        let grown = saturate(&stable, s)?;
        if grown == stable {
            return Ok(grown);
        }
        fam = grown;
    }
}

/// Exact maximum size over *all* families with matching number at most
/// `s`, by enumerating every subfamily. Only feasible for
/// `C(n,k) ≤ 20`.
pub fn naive_max(n: u32, k: u32, s: u32) -> Result<u64> {
    let all = k_subsets(n, k);
    if all.len() > 20 {
        return Err(Error::NaiveTooLarge);
    }
    let ground = VertexSet::full(n);
    let mut best = 0u32;
    for mask in 0u32..(1u32 << all.len()) {
        if mask.count_ones() <= best {
            continue;
        }
        let members: Vec<VertexSet> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        if !exists_matching(&members, ground, s + 1) {
            best = mask.count_ones();
        }
    }
    Ok(best as u64)
}

/// Which named construction the search witness coincides with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchedConstruction {
    CliqueAk,
    CoverA1,
    Other,
}

impl MatchedConstruction {
    pub fn label(self) -> &'static str {
        match self {
            MatchedConstruction::CliqueAk => "A_k",
            MatchedConstruction::CoverA1 => "A_1",
            MatchedConstruction::Other => "OTHER",
        }
    }
}

/// Outcome of the exhaustive maximization.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: u32,
    pub k: u32,
    pub s: u32,
    pub max_size: u64,
    /// A maximum family on `[n]` realizing `max_size`; stable, with
    /// matching number exactly `s`.
    pub witness: Family,
    pub nodes_explored: u64,
    pub matched: MatchedConstruction,
}

/// Knobs for [`max_stable`].
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker threads; 0 means use the machine's parallelism.
    pub threads: usize,
    /// Allows the best-effort s = 3 searches, which may run long.
    pub allow_deep: bool,
    /// Restricts the search to members of size at least 2, the mode
    /// matching the ν(F(1̄)) = s reduction.
    pub exclude_singletons: bool,
    /// Checkpoint file for the deep mode; finished top-level branches
    /// are recorded and skipped on resume.
    pub checkpoint: Option<PathBuf>,
}

struct Candidate {
    set: VertexSet,
    contribution: u64,
    /// Indices of same-size unit-decrement predecessors.
    preds: Vec<u16>,
    /// Indices of every candidate dominating this one (including
    /// itself), closed transitively.
    upset: IdxSet,
}

/// Fixed 256-bit index set, enough for every desk-scale candidate list.
#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct IdxSet([u64; 4]);

impl IdxSet {
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn test(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }
    fn or_assign(&mut self, other: &IdxSet) {
        for w in 0..4 {
            self.0[w] |= other.0[w];
        }
    }
    fn minus(&self, other: &IdxSet) -> IdxSet {
        let mut out = IdxSet::default();
        for w in 0..4 {
            out.0[w] = self.0[w] & !other.0[w];
        }
        out
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).flat_map(move |w| {
            let mut bits = self.0[w];
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }
}

/// The candidate list: kernel subsets of size `k` down to 1 with
/// positive reconstruction weight, each class in lexicographic order.
fn build_candidates(n: u32, k: u32, s: u32, exclude_singletons: bool) -> Vec<Candidate> {
    let kernel = k * s + k - 1;
    let tail = (n - kernel) as u64;
    let mut sets: Vec<(VertexSet, u64)> = Vec::new();
    let min_size = if exclude_singletons { 2 } else { 1 };
    for size in (min_size..=k).rev() {
        let contribution = binomial(tail, (k - size) as u64);
        if contribution == 0 {
            continue;
        }
        for set in k_subsets(kernel, size) {
            sets.push((set, contribution as u64));
        }
    }
    assert!(sets.len() <= 256, "candidate list exceeds the index set");
    let index_of = |set: VertexSet, sets: &[(VertexSet, u64)]| -> Option<u16> {
        sets.iter().position(|(s, _)| *s == set).map(|i| i as u16)
    };
    let mut cands: Vec<Candidate> = sets
        .iter()
        .map(|&(set, contribution)| {
            let preds = set
                .unit_decrements()
                .filter_map(|p| index_of(p, &sets))
                .collect();
            Candidate {
                set,
                contribution,
                preds,
                upset: IdxSet::default(),
            }
        })
        .collect();
    // up-sets by reverse sweep over unit increments: every successor's
    // index is larger, so its upset is already complete
    for i in (0..cands.len()).rev() {
        let mut upset = IdxSet::default();
        upset.set(i);
        for succ in cands[i].set.unit_increments(kernel) {
            if let Some(j) = index_of(succ, &sets) {
                debug_assert!(j as usize > i);
                let other = cands[j as usize].upset;
                upset.or_assign(&other);
            }
        }
        cands[i].upset = upset;
    }
    cands
}

struct Shared<'a> {
    cands: &'a [Candidate],
    kernel_mask: VertexSet,
    s: u32,
    /// Global best value, shared across workers for pruning only.
    best_value: &'a AtomicU64,
}

#[derive(Clone)]
struct NodeState {
    idx: usize,
    included: Vec<VertexSet>,
    included_idx: IdxSet,
    excluded: IdxSet,
    current: u64,
    /// Σ contributions of candidates at index ≥ idx not yet excluded.
    remaining: u64,
}

struct Local {
    best_value: u64,
    best_trace: Vec<VertexSet>,
    nodes: u64,
}

fn dfs(sh: &Shared, st: &mut NodeState, local: &mut Local) {
    local.nodes += 1;
    let global = sh.best_value.load(Ordering::Relaxed).max(local.best_value);
    if st.current + st.remaining < global {
        return;
    }
    if st.current > local.best_value
        || (st.current == local.best_value && lex_less(&st.included, &local.best_trace))
    {
        local.best_value = st.current;
        local.best_trace = st.included.clone();
        sh.best_value.fetch_max(st.current, Ordering::Relaxed);
    }
    if st.idx == sh.cands.len() {
        return;
    }
    let idx = st.idx;
    let cand = &sh.cands[idx];
    if st.excluded.test(idx) {
        st.idx += 1;
        dfs(sh, st, local);
        st.idx = idx;
        return;
    }
    let includable = cand.preds.iter().all(|&p| st.included_idx.test(p as usize))
        && !exists_matching(&st.included, sh.kernel_mask - cand.set, sh.s);
    if includable {
        let mut child = st.clone();
        child.idx = idx + 1;
        child.included.push(cand.set);
        child.included_idx.set(idx);
        child.current += cand.contribution;
        child.remaining -= cand.contribution;
        // forward check: exclude future members no matching tolerates
        if exists_matching(&child.included, sh.kernel_mask, sh.s) {
            for j in (idx + 1)..sh.cands.len() {
                if child.excluded.test(j) {
                    continue;
                }
                let other = &sh.cands[j];
                if exists_matching(&child.included, sh.kernel_mask - other.set, sh.s) {
                    let newly = other.upset.minus(&child.excluded);
                    for nj in newly.iter() {
                        child.remaining -= sh.cands[nj].contribution;
                    }
                    child.excluded.or_assign(&other.upset);
                }
            }
        }
        dfs(sh, &mut child, local);
    }
    // exclusion branch: everything above the candidate dies with it
    let newly = cand.upset.minus(&st.excluded);
    let mut child = st.clone();
    child.idx = idx + 1;
    for nj in newly.iter() {
        child.remaining -= sh.cands[nj].contribution;
    }
    child.excluded.or_assign(&cand.upset);
    dfs(sh, &mut child, local);
}

/// Canonical family-order comparison on sorted member lists.
fn lex_less(a: &[VertexSet], b: &[VertexSet]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a < b
}

/// Exact maximum of the reconstruction size over stable trace families
/// with matching number `s`, which equals `m(n, k, s)`.
///
/// Mandatory desk-scale guard: `k ≤ 3` and `s ≤ 2`; `s = 3` is
/// best-effort behind [`SearchOptions::allow_deep`].
pub fn max_stable(n: u32, k: u32, s: u32, opts: &SearchOptions) -> Result<SearchResult> {
    if k < 2 || k > 3 || s < 1 || s > 3 || (s == 3 && !opts.allow_deep) {
        return Err(Error::BeyondDeskScale);
    }
    let kernel = k * s + k - 1;
    if n < kernel || n > VertexSet::MAX_VERTEX {
        return Err(Error::ParametersOutOfRange);
    }

    let cands = build_candidates(n, k, s, opts.exclude_singletons);
    let kernel_mask = VertexSet::full(kernel);
    let total: u64 = cands.iter().map(|c| c.contribution).sum();

    // seed with the two named constructions
    let mut seed_best: Option<(u64, Vec<VertexSet>)> = None;
    for ell in [1, k] {
        if let Ok(spec) = ExtremalSpec::new(n, k, s, ell) {
            let fam = build_a(spec)?;
            let t = trace(&fam, k, s)?;
            let positive: Vec<VertexSet> = t
                .family()
                .members()
                .iter()
                .copied()
                .filter(|m| binomial((n - kernel) as u64, (k - m.len()) as u64) > 0)
                .filter(|m| !(opts.exclude_singletons && m.len() < 2))
                .collect();
            let value = positive
                .iter()
                .map(|m| binomial((n - kernel) as u64, (k - m.len()) as u64) as u64)
                .sum::<u64>();
            let candidate = (value, positive);
            seed_best = Some(match seed_best {
                None => candidate,
                Some(cur) => {
                    if candidate.0 > cur.0 || (candidate.0 == cur.0 && lex_less(&candidate.1, &cur.1))
                    {
                        candidate
                    } else {
                        cur
                    }
                }
            });
        }
    }
    let (seed_value, seed_trace) = seed_best.expect("constructions exist at accepted parameters");

    let best_value = AtomicU64::new(seed_value);
    let shared = Shared {
        cands: &cands,
        kernel_mask,
        s,
        best_value: &best_value,
    };

    let root = NodeState {
        idx: 0,
        included: Vec::new(),
        included_idx: IdxSet::default(),
        excluded: IdxSet::default(),
        current: 0,
        remaining: total,
    };

    let threads = if opts.threads == 0 {
        std::thread::available_parallelism().map_or(1, |p| p.get())
    } else {
        opts.threads
    };

    let (value, trace_members, nodes) = if threads <= 1 && opts.checkpoint.is_none() {
        let mut local = Local {
            best_value: seed_value,
            best_trace: seed_trace.clone(),
            nodes: 0,
        };
        let mut st = root;
        dfs(&shared, &mut st, &mut local);
        (local.best_value, local.best_trace, local.nodes)
    } else {
        run_parallel(&shared, root, threads, seed_value, &seed_trace, opts, n, k, s)?
    };

    // expand the winning trace and stabilize the result; size and the
    // matching number are both preserved
    let trace_fam = TraceFamily::from_parts(
        Family::new(kernel, None, trace_members)?,
        n,
        k,
        s,
    );
    let expanded = expand(&trace_fam)?;
    debug_assert_eq!(expanded.len() as u64, value);
    let (witness, _) = stabilize(&expanded);
    debug_assert_eq!(witness.nu(), s);
    debug_assert!(witness.is_stable().0);

    let matched = if witness == build_a(ExtremalSpec::new(n, k, s, k)?)? {
        MatchedConstruction::CliqueAk
    } else if witness == build_a(ExtremalSpec::new(n, k, s, 1)?)? {
        MatchedConstruction::CoverA1
    } else {
        MatchedConstruction::Other
    };

    Ok(SearchResult {
        n,
        k,
        s,
        max_size: value,
        witness,
        nodes_explored: nodes,
        matched,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_parallel(
    sh: &Shared,
    root: NodeState,
    threads: usize,
    seed_value: u64,
    seed_trace: &[VertexSet],
    opts: &SearchOptions,
    n: u32,
    k: u32,
    s: u32,
) -> Result<(u64, Vec<VertexSet>, u64)> {
    // split the tree into top-level branches by bounded breadth-first
    // expansion; each branch is one unit of work
    let target = (threads * 8).max(32);
    let mut frontier = vec![root];
    while frontier.len() < target {
        // expand the shallowest state
        let pos = match frontier
            .iter()
            .enumerate()
            .filter(|(_, st)| st.idx < sh.cands.len())
            .min_by_key(|(_, st)| st.idx)
        {
            Some((pos, _)) => pos,
            None => break,
        };
        let st = frontier.swap_remove(pos);
        let idx = st.idx;
        let cand = &sh.cands[idx];
        if st.excluded.test(idx) {
            let mut child = st;
            child.idx += 1;
            frontier.push(child);
            continue;
        }
        let includable = cand.preds.iter().all(|&p| st.included_idx.test(p as usize))
            && !exists_matching(&st.included, sh.kernel_mask - cand.set, sh.s);
        if includable {
            let mut child = st.clone();
            child.idx = idx + 1;
            child.included.push(cand.set);
            child.included_idx.set(idx);
            child.current += cand.contribution;
            child.remaining -= cand.contribution;
            frontier.push(child);
        }
        let newly = cand.upset.minus(&st.excluded);
        let mut child = st;
        child.idx = idx + 1;
        for nj in newly.iter() {
            child.remaining -= sh.cands[nj].contribution;
        }
        child.excluded.or_assign(&cand.upset);
        frontier.push(child);
    }
    // deterministic branch ids: sort by (idx, trace, excluded words)
    frontier.sort_by(|a, b| {
        (a.idx, &a.included, a.excluded.0).cmp(&(b.idx, &b.included, b.excluded.0))
    });

    let checkpoint = opts
        .checkpoint
        .as_ref()
        .map(|path| Checkpoint::open(path, n, k, s, opts.exclude_singletons))
        .transpose()?;

    let mut results: Vec<Option<(u64, Vec<VertexSet>, u64)>> = vec![None; frontier.len()];
    if let Some(cp) = &checkpoint {
        for (id, st) in frontier.iter().enumerate() {
            if let Some(done) = cp.done.get(&id) {
                results[id] = Some(done.clone());
                let _ = st;
            }
        }
    }

    let work = Mutex::new(
        frontier
            .iter()
            .enumerate()
            .filter(|(id, _)| results[*id].is_none())
            .map(|(id, st)| (id, st.clone()))
            .collect::<Vec<_>>(),
    );
    let fresh = Mutex::new(Vec::<(usize, u64, Vec<VertexSet>, u64)>::new());

    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| loop {
                let item = work.lock().unwrap().pop();
                let Some((id, st)) = item else { break };
                let mut local = Local {
                    best_value: sh.best_value.load(Ordering::Relaxed),
                    best_trace: Vec::new(),
                    nodes: 0,
                };
                // local best trace must correspond to the local branch:
                // start empty at the branch's own floor
                local.best_value = 0;
                let mut state = st;
                dfs(sh, &mut state, &mut local);
                fresh
                    .lock()
                    .unwrap()
                    .push((id, local.best_value, local.best_trace, local.nodes));
            });
        }
    });

    for (id, value, trace_members, nodes) in fresh.into_inner().unwrap() {
        results[id] = Some((value, trace_members, nodes));
    }

    if let Some(cp) = checkpoint {
        cp.write_all(&results)?;
    }

    // deterministic reduction: max value, then lexicographically least
    // trace; the construction seed participates like any branch
    let mut best_value = seed_value;
    let mut best_trace = seed_trace.to_vec();
    let mut nodes_total = 0u64;
    for res in results.into_iter().flatten() {
        let (value, trace_members, nodes) = res;
        nodes_total += nodes;
        if trace_members.is_empty() && value == 0 {
            continue;
        }
        if value > best_value || (value == best_value && lex_less(&trace_members, &best_trace)) {
            best_value = value;
            best_trace = trace_members;
        }
    }
    Ok((best_value, best_trace, nodes_total))
}

struct Checkpoint {
    path: PathBuf,
    header: String,
    done: std::collections::HashMap<usize, (u64, Vec<VertexSet>, u64)>,
}

impl Checkpoint {
    fn open(path: &PathBuf, n: u32, k: u32, s: u32, no_singletons: bool) -> Result<Checkpoint> {
        let header = format!("matchlab-search-checkpoint v1 n={n} k={k} s={s} singletons={}",
            if no_singletons { "excluded" } else { "included" });
        let mut done = std::collections::HashMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
            let mut lines = text.lines();
            match lines.next() {
                Some(first) if first == header => {}
                Some(other) => {
                    return Err(Error::Checkpoint(format!(
                        "header mismatch: {other:?} vs {header:?}"
                    )))
                }
                None => {}
            }
            for line in lines {
                if line.trim().is_empty() {
                    continue;
                }
                let mut parts = line.split_whitespace();
                let tag = parts.next();
                if tag != Some("done") {
                    return Err(Error::Checkpoint(format!("bad record: {line:?}")));
                }
                let id: usize = parse_field(parts.next(), "id")?;
                let value: u64 = parse_field(parts.next(), "value")?;
                let nodes: u64 = parse_field(parts.next(), "nodes")?;
                let trace_str = parts.next().unwrap_or("-");
                let members = parse_trace(trace_str)?;
                done.insert(id, (value, members, nodes));
            }
        }
        Ok(Checkpoint {
            path: path.clone(),
            header,
            done,
        })
    }

    fn write_all(&self, results: &[Option<(u64, Vec<VertexSet>, u64)>]) -> Result<()> {
        let mut out = String::new();
        out.push_str(&self.header);
        out.push('\n');
        for (id, res) in results.iter().enumerate() {
            if let Some((value, members, nodes)) = res {
                let trace_str = if members.is_empty() {
                    "-".to_string()
                } else {
                    members
                        .iter()
                        .map(|m| {
                            m.to_vec()
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        })
                        .collect::<Vec<_>>()
                        .join(";")
                };
                out.push_str(&format!("done {id} {value} {nodes} {trace_str}\n"));
            }
        }
        std::fs::write(&self.path, out).map_err(|e| Error::Io(e.to_string()))
    }
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, name: &str) -> Result<T> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| Error::Checkpoint(format!("missing or bad field {name}")))
}

fn parse_trace(text: &str) -> Result<Vec<VertexSet>> {
    if text == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in text.split(';') {
        let verts: std::result::Result<Vec<u32>, _> =
            part.split(',').map(|v| v.parse::<u32>()).collect();
        let verts = verts.map_err(|_| Error::Checkpoint(format!("bad trace member {part:?}")))?;
        out.push(VertexSet::from_slice(&verts));
    }
    Ok(out)
}
