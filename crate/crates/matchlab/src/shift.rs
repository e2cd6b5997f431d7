//! The (i,j)-shift operator and stabilization.
//!
//! Shifting replaces `j` by `i < j` in every member where the exchange
//! does not collide with an existing member. Families fixed by every
//! shift are exactly the stable ones, so repeated shifting reaches a
//! stable family of the same size.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::set::VertexSet;

/// One recorded shift application that moved at least one member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftStep {
    pub i: u32,
    pub j: u32,
    pub moved: u32,
}

/// Provenance record for [`stabilize`]: the sequence of effective
/// shifts, replayable from the input family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShiftLog {
    pub steps: Vec<ShiftStep>,
}

/// The (i,j)-compression: each member `F` with `j ∈ F`, `i ∉ F` is
/// replaced by `(F − {j}) ∪ {i}` unless that set is already present, in
/// which case `F` is kept. The family size never changes.
pub fn shift(fam: &Family, i: u32, j: u32) -> Result<Family> {
    shift_counted(fam, i, j).map(|(f, _)| f)
}

pub(crate) fn shift_counted(fam: &Family, i: u32, j: u32) -> Result<(Family, u32)> {
    if i >= j {
        return Err(Error::InvalidShiftDirection);
    }
    if j > fam.n() || i < 1 {
        return Err(Error::VertexOutOfRange(j, fam.n()));
    }
    let mut moved = 0u32;
    let mut out: Vec<VertexSet> = Vec::with_capacity(fam.len());
    for &f in fam.members() {
        if f.contains(j) && !f.contains(i) {
            let target = f.remove(j).insert(i);
            if fam.contains(target) {
                out.push(f);
            } else {
                out.push(target);
                moved += 1;
            }
        } else {
            out.push(f);
        }
    }
    let shifted = Family::new(fam.n(), fam.uniform_k(), out)?;
    debug_assert_eq!(shifted.len(), fam.len());
    Ok((shifted, moved))
}

/// Applies shifts over all pairs `i < j` in lexicographic order,
/// restarting from `(1,2)` after any change, until the family is stable.
///
/// Terminates because the element sum `Σ_F Σ_{x∈F} x` strictly decreases
/// with every recorded step.
pub fn stabilize(fam: &Family) -> (Family, ShiftLog) {
    let mut cur = fam.clone();
    let mut log = ShiftLog::default();
    'outer: loop {
        for i in 1..fam.n() {
            for j in (i + 1)..=fam.n() {
                let (next, moved) = shift_counted(&cur, i, j).expect("i < j by construction");
                if moved > 0 {
                    log.steps.push(ShiftStep { i, j, moved });
                    cur = next;
                    continue 'outer;
                }
            }
        }
        debug_assert!(cur.is_stable().0);
        return (cur, log);
    }
}

/// `Σ_F Σ_{x∈F} x`, the potential that strictly decreases along a
/// stabilization run.
pub fn potential(fam: &Family) -> u64 {
    fam.members()
        .iter()
        .map(|m| m.iter().map(u64::from).sum::<u64>())
        .sum()
}
