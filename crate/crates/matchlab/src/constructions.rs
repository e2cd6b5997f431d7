//! The extremal constructions `A_ℓ(n)`, their exact sizes, pivotal
//! numbers, and the classical closed-form bounds.
//!
//! `A_ℓ(n)` consists of the k-sets meeting the window `[ℓs+ℓ−1]` in at
//! least `ℓ` elements; `ℓ = 1` is the cover construction and `ℓ = k`
//! the clique on `[ks+k−1]`.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::math::binomial;
use crate::set::{k_subsets, VertexSet};

/// Parameters for one construction `A_ℓ(n)` at uniformity `k` and
/// matching number `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub n: u32,
    pub k: u32,
    pub s: u32,
    pub ell: u32,
}

impl ExtremalSpec {
    pub fn new(n: u32, k: u32, s: u32, ell: u32) -> Result<Self> {
        let spec = ExtremalSpec { n, k, s, ell };
        spec.validate()?;
        Ok(spec)
    }

    /// Window `[ℓs+ℓ−1]` whose intersection defines membership.
    pub fn window(&self) -> u32 {
        self.ell * self.s + self.ell - 1
    }

    fn validate(&self) -> Result<()> {
        let ok = self.k >= 1
            && self.s >= 1
            && self.ell >= 1
            && self.ell <= self.k
            && self.n >= self.k * self.s
            && self.n >= self.window()
            && self.n <= VertexSet::MAX_VERTEX.min(10_000);
        if ok {
            Ok(())
        } else {
            Err(Error::ParametersOutOfRange)
        }
    }
}

/// Materializes `A_ℓ(n) = { F ∈ C([n],k) : |F ∩ [ℓs+ℓ−1]| ≥ ℓ }`.
pub fn build_a(spec: ExtremalSpec) -> Result<Family> {
    spec.validate()?;
    let window = VertexSet::full(spec.window());
    let members = k_subsets(spec.n, spec.k)
        .into_iter()
        .filter(|f| (*f & window).len() >= spec.ell)
        .collect();
    Family::new(spec.n, Some(spec.k), members)
}

/// Exact cardinality of `A_ℓ(n)` by summation over the window
/// intersection size: `Σ_{t≥ℓ} C(ℓs+ℓ−1, t) · C(n−ℓs−ℓ+1, k−t)`.
pub fn size_a(spec: ExtremalSpec) -> Result<u64> {
    spec.validate()?;
    let w = spec.window() as u64;
    let rest = spec.n as u64 - w;
    let mut total: u128 = 0;
    for t in spec.ell..=spec.k {
        total += binomial(w, t as u64) * binomial(rest, (spec.k - t) as u64);
    }
    Ok(u64::try_from(total).expect("size fits in u64 at accepted ranges"))
}

/// Closed form for the clique construction `|A_k| = C(ks+k−1, k)`;
/// independent of `n`.
pub fn size_a_clique(k: u32, s: u32) -> u64 {
    binomial((k * s + k - 1) as u64, k as u64) as u64
}

/// Closed form for the cover construction
/// `|A_1(n)| = C(n,k) − C(n−s,k)`.
pub fn size_a_cover(n: u32, k: u32, s: u32) -> u64 {
    (binomial(n as u64, k as u64) - binomial((n - s) as u64, k as u64)) as u64
}

/// The pivotal number: the least `n` at which the cover construction
/// `A_1(n)` catches up with the clique `A_k`.
///
/// The scan starts at `n = ks+k−1` and is capped by `(k+1)(s+1)`, the
/// bound the induction argument actually yields.
pub fn pivotal(s: u32, k: u32) -> Result<u32> {
    if s < 1 || k < 2 {
        return Err(Error::ParametersOutOfRange);
    }
    let clique = binomial((k * s + k - 1) as u64, k as u64);
    for n in (k * s + k - 1)..=((k + 1) * (s + 1)) {
        let cover = binomial(n as u64, k as u64) - binomial((n - s) as u64, k as u64);
        if clique <= cover {
            return Ok(n);
        }
    }
    unreachable!("pivotal number exists below (k+1)(s+1)")
}

/// Upper bound on `pivotal(s, k)` from convexity: `⌊(k+½)s + k⌋`.
pub fn pivotal_upper_bound(s: u32, k: u32) -> u32 {
    ((2 * k + 1) * s + 2 * k) / 2
}

/// The Erdős–Gallai edge-count formula `C(n,2) − C(n−s,2)` for graphs
/// with matching number `s`, valid as stated for `n ≥ 3s`.
pub fn erdos_gallai_max(n: u32, s: u32) -> Result<u64> {
    if n < 3 * s {
        return Err(Error::ErdosGallaiRange);
    }
    Ok((binomial(n as u64, 2) - binomial((n - s) as u64, 2)) as u64)
}

/// The general bound `s · C(n−1, k−1)`, valid for `n ≥ k(s+1)`.
pub fn general_upper_bound(n: u32, k: u32, s: u32) -> Result<u64> {
    if k < 1 || s < 1 || n < k * (s + 1) {
        return Err(Error::ParametersOutOfRange);
    }
    Ok(u64::try_from(s as u128 * binomial((n - 1) as u64, (k - 1) as u64))
        .expect("bound fits in u64 at accepted ranges"))
}
