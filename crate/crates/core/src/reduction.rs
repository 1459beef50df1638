//! The defect reduction algorithm for the index of a parabolic subalgebra.
//!
//! For a composition `(a_1,…,a_k)` define the defects
//! `d_i = (a_1+…+a_{i−1}) − (a_{i+1}+…+a_k)` for `i < k` and
//! `d_k = −(a_1+…+a_{k−1})`. When `d_i ≠ 0` the index is unchanged by
//! replacing `a_i` with `a_i mod |d_i|`; when `d_i = 0` the block `a_i` can be
//! removed at the cost of adding `a_i` to the index. Some `i` always has
//! `d_i = 0` or `a_i ≥ |d_i|`, so every step shrinks the total and the process
//! ends at a single block `(m)`, whose index is `m`.
//!
//! A seaweed `q(a|b)` is first embedded as the parabolic
//! `p(a_1,…,a_k,b_t,…,b_1)` of twice the size.

use serde::Serialize;

use crate::composition::{gcd, Composition};
use crate::error::{Error, Result};
use crate::meander::Meander;

/// `(a_1,…,a_k,b_t,…,b_1)`, a parabolic with the same index as `q(a|b)`.
pub fn seaweed_to_parabolic(a: &Composition, b: &Composition) -> Result<Composition> {
    check_sums(a, b)?;
    a.concat(&b.reverse())
}

fn check_sums(a: &Composition, b: &Composition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SumMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// The defects `d_1,…,d_k`.
pub fn defects(c: &Composition) -> Vec<i128> {
    let sums = c.partial_sums();
    let n = c.n() as i128;
    let k = c.len();
    (0..k)
        .map(|i| {
            let before = sums[i] as i128;
            if i + 1 == k {
                -before
            } else {
                before - (n - sums[i + 1] as i128)
            }
        })
        .collect()
}

/// Which rewrite a step applied. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Rule {
    /// `a_i ← a_i mod |d_i|`.
    ModReduce { i: usize, d_i: i128 },
    /// `d_i = 0`: drop `a_i`, gaining `a_i`.
    RemoveZeroDefect { i: usize, d_i: i128 },
    /// `a_1+…+a_i = a_j+…+a_k`: the index splits over the outer blocks
    /// `(a_1..a_i, a_j..a_k)` and the inner blocks `(a_{i+1}..a_{j−1})`.
    SplitEqualSums { i: usize, j: usize },
    /// Two blocks: index is their gcd.
    TwoBlockGcd,
    /// One block `(m)`: index `m`.
    SingleBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    #[serde(flatten)]
    pub rule: Rule,
    pub before: Composition,
    /// Empty for terminal rules, two entries for splits.
    pub after: Vec<Composition>,
    pub gained: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub index: u64,
}

impl ReductionTrace {
    /// Every composition the trace passes through, in order, starting with
    /// the input.
    pub fn visited(&self) -> Vec<Composition> {
        let mut out = Vec::new();
        if let Some(first) = self.steps.first() {
            out.push(first.before.clone());
        }
        for s in &self.steps {
            out.extend(s.after.iter().cloned());
        }
        out.dedup();
        out
    }
}

/// How [`index_via_reduction_with`] picks its rewrites.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Only the defect rewrites, down to a single block.
    #[default]
    Strict,
    /// Also closes two-block compositions by gcd and splits at equal
    /// prefix/suffix sums, as one would by hand.
    Shortcut,
}

/// One defect rewrite on a composition with at least two blocks.
///
/// The pivot is the first `i` with `d_i = 0`, else the first `i` with
/// `a_i ≥ |d_i|`.
pub fn reduce_step(c: &Composition) -> Result<ReductionStep> {
    if c.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "({c}) has a single block; nothing to reduce"
        )));
    }
    let d = defects(c);
    let parts = c.parts();

    if let Some(i) = d.iter().position(|&di| di == 0) {
        let mut rest = parts.to_vec();
        let gained = rest.remove(i);
        return Ok(ReductionStep {
            rule: Rule::RemoveZeroDefect { i: i + 1, d_i: 0 },
            before: c.clone(),
            after: vec![Composition::normalize(&rest)?],
            gained,
        });
    }

    let i = (0..parts.len())
        .find(|&i| parts[i] as i128 >= d[i].abs())
        .ok_or_else(|| Error::Internal(format!("no reducible block in ({c}); defects {d:?}")))?;
    let mut next = parts.to_vec();
    next[i] = (parts[i] as i128 % d[i].abs()) as u64;
    Ok(ReductionStep {
        rule: Rule::ModReduce {
            i: i + 1,
            d_i: d[i],
        },
        before: c.clone(),
        after: vec![Composition::normalize(&next)?],
        gained: 0,
    })
}

fn terminal_step(c: &Composition) -> ReductionStep {
    ReductionStep {
        rule: Rule::SingleBlock,
        before: c.clone(),
        after: Vec::new(),
        gained: c.n(),
    }
}

/// First split point `(i, j)` (1-based, `i + 1 < j`) with
/// `a_1+…+a_i = a_j+…+a_k`.
fn equal_sums_split(c: &Composition) -> Option<(usize, usize)> {
    let sums = c.partial_sums();
    let k = c.len();
    let n = c.n();
    for i in 1..k {
        for j in i + 2..=k {
            // suffix a_j..a_k
            if sums[i] == n - sums[j - 1] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Runs the strict strategy to completion.
pub fn index_via_reduction(c: &Composition) -> ReductionTrace {
    index_via_reduction_with(c, Strategy::Strict)
}

pub fn index_via_reduction_with(c: &Composition, strategy: Strategy) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut pending = vec![c.clone()];
    while let Some(cur) = pending.pop() {
        let step = match (cur.len(), strategy) {
            (1, _) => terminal_step(&cur),
            (2, Strategy::Shortcut) => ReductionStep {
                rule: Rule::TwoBlockGcd,
                gained: gcd(cur.parts()[0], cur.parts()[1]),
                before: cur.clone(),
                after: Vec::new(),
            },
            _ => {
                let split = match strategy {
                    Strategy::Shortcut => equal_sums_split(&cur),
                    Strategy::Strict => None,
                };
                match split {
                    Some((i, j)) => split_step(&cur, i, j),
                    // A pivot always exists for k ≥ 2.
                    None => reduce_step(&cur).expect("k ≥ 2 always has a pivot"),
                }
            }
        };
        // Depth-first, left piece first.
        pending.extend(step.after.iter().rev().cloned());
        steps.push(step);
    }
    let index = steps.iter().map(|s| s.gained).sum();
    ReductionTrace { steps, index }
}

fn split_step(c: &Composition, i: usize, j: usize) -> ReductionStep {
    let parts = c.parts();
    let outer: Vec<u64> = parts[..i].iter().chain(&parts[j - 1..]).copied().collect();
    let inner = &parts[i..j - 1];
    ReductionStep {
        rule: Rule::SplitEqualSums { i, j },
        before: c.clone(),
        after: vec![
            Composition::normalize(&outer).expect("outer blocks are positive"),
            Composition::normalize(inner).expect("inner blocks are non-empty"),
        ],
        gained: 0,
    }
}

/// Index of a parabolic `p(c)` by reduction.
pub fn parabolic_index(c: &Composition) -> u64 {
    index_via_reduction(c).index
}

/// Index of `q(a|b)` from both the meander and the reduction engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub a: Composition,
    pub b: Composition,
    pub index: u64,
    pub sl_index: u64,
    pub cycles: u64,
    pub segments: u64,
    pub maximal_dimensions: Vec<u64>,
    pub trace: ReductionTrace,
}

/// Computes the index twice and fails if the engines disagree.
pub fn index_of_seaweed(a: &Composition, b: &Composition) -> Result<IndexReport> {
    let meander = Meander::new(a, b)?;
    let (cycles, segments) = meander.cycle_segment_counts();
    let by_meander = 2 * cycles + segments;
    let trace = index_via_reduction(&seaweed_to_parabolic(a, b)?);
    if trace.index != by_meander {
        return Err(Error::Internal(format!(
            "q({a}|{b}): meander gives {by_meander}, reduction gives {}",
            trace.index
        )));
    }
    Ok(IndexReport {
        a: a.clone(),
        b: b.clone(),
        index: by_meander,
        sl_index: by_meander - 1,
        cycles,
        segments,
        maximal_dimensions: meander.equivalence_signature(),
        trace,
    })
}

/// Index of `q(a|b) ∩ sl(n)`, one less than the `gl(n)` index.
pub fn index_sl(a: &Composition, b: &Composition) -> Result<u64> {
    Ok(index_of_seaweed(a, b)?.index - 1)
}
