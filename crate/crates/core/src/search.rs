//! Exhaustive enumeration and the verification harness.
//!
//! Every identity about indices and meanders that the crate does not use as
//! an algorithm is registered here as a named [`Check`], evaluated over a
//! grid of compositions and reported as a [`VerificationReport`]. Grids are
//! exhaustive up to [`EXHAUSTIVE_PAIR_N`] for seaweed pairs and sampled
//! (deterministically) above it; parabolic grids are always exhaustive.

use std::fmt::{Debug, Display};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::composition::{gcd, Composition};
use crate::error::{Error, Result};
use crate::formulas;
use crate::kirillov;
use crate::meander::Meander;
use crate::reduction::{self, defects, Strategy};

/// Seaweed pairs are enumerated in full up to this size.
pub const EXHAUSTIVE_PAIR_N: u64 = 10;
/// Random pairs checked per size above [`EXHAUSTIVE_PAIR_N`].
pub const SAMPLES_PER_N: usize = 10_000;
/// Largest size accepted by [`find_frobenius_seaweeds`].
pub const MAX_FROBENIUS_N: u64 = 12;
/// Largest `m` in the `(a, …, a, b)` grids.
pub const RUN_MAX_M: u64 = 8;

const SAMPLE_SEED: u64 = 0x5ea_feed;

/// All compositions of `n`, in reverse lexicographic order:
/// `(n), (n−1, 1), …, (1, …, 1)`.
pub fn enumerate_compositions(n: u64) -> Compositions {
    assert!(
        n <= 64,
        "2^{} compositions is not enumerable",
        n.saturating_sub(1)
    );
    Compositions {
        n,
        next: 0,
        end: if n == 0 { 0 } else { 1u128 << (n - 1) },
    }
}

/// Streaming iterator returned by [`enumerate_compositions`].
#[derive(Clone, Debug)]
pub struct Compositions {
    n: u64,
    next: u128,
    end: u128,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.next >= self.end {
            return None;
        }
        let c = composition_from_cuts(self.n, self.next as u64);
        self.next += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Compositions {}

/// Bit `n − 1 − j` of `mask` cuts the line `1..=n` after position `j`.
fn composition_from_cuts(n: u64, mask: u64) -> Composition {
    let mut parts = Vec::new();
    let mut run = 0;
    for j in 1..n {
        run += 1;
        if mask >> (n - 1 - j) & 1 == 1 {
            parts.push(run);
            run = 0;
        }
    }
    parts.push(run + 1);
    Composition::normalize(&parts).expect("cuts give positive parts")
}

fn random_composition(n: u64, rng: &mut ChaCha8Rng) -> Composition {
    let mask = if n <= 1 {
        0
    } else {
        rng.random::<u64>() & ((1u64 << (n - 1)) - 1)
    };
    composition_from_cuts(n, mask)
}

/// Meander index of `p(parts)`; zero for an empty list.
fn chi(parts: &[u64]) -> u64 {
    match Composition::normalize_opt(parts).expect("valid parts") {
        None => 0,
        Some(c) => Meander::parabolic(&c).expect("small meander").index(),
    }
}

/// Meander index of `q(a|b)`; zero when both are empty.
fn chi_q(a: &[u64], b: &[u64]) -> u64 {
    let a = Composition::normalize_opt(a).expect("valid parts");
    let b = Composition::normalize_opt(b).expect("valid parts");
    match (a, b) {
        (None, None) => 0,
        (Some(a), Some(b)) => Meander::new(&a, &b).expect("equal sums").index(),
        (a, b) => panic!("one side empty: {a:?} | {b:?}"),
    }
}

fn rev(parts: &[u64]) -> Vec<u64> {
    parts.iter().rev().copied().collect()
}

fn cat(pieces: &[&[u64]]) -> Vec<u64> {
    pieces.concat()
}

/// Seaweed pairs `(a, b)` of size `n` with `sl`-index 0 (or `gl`-index 0 when
/// `sl` is false, which never happens).
pub fn find_frobenius_seaweeds(n: u64, sl: bool) -> Result<Vec<(Composition, Composition)>> {
    if n == 0 || n > MAX_FROBENIUS_N {
        return Err(Error::TooLarge {
            what: "Frobenius search size",
            got: n,
            limit: MAX_FROBENIUS_N,
        });
    }
    let target = if sl { 1 } else { 0 };
    let all: Vec<Composition> = enumerate_compositions(n).collect();
    Ok(all
        .par_iter()
        .flat_map_iter(|a| {
            all.iter().filter_map(move |b| {
                let m = Meander::new(a, b).expect("same n");
                (m.index() == target).then(|| (a.clone(), b.clone()))
            })
        })
        .collect())
}

/// One instance where the two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub parameter_space: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_tally(name: &str, parameter_space: String, tally: Tally) -> Self {
        Self {
            name: name.to_string(),
            parameter_space,
            instances: tally.instances,
            failures: tally.failures,
        }
    }

    /// Combines two reports of the same check.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self
    }
}

/// Running count of checked instances and failures.
#[derive(Clone, Debug, Default)]
struct Tally {
    instances: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn eq<T: PartialEq + Debug>(&mut self, input: impl Display, expected: T, got: T) {
        self.instances += 1;
        if expected != got {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: format!("{expected:?}"),
                got: format!("{got:?}"),
            });
        }
    }

    fn holds(&mut self, input: impl Display, ok: bool, what: impl Display) {
        self.eq(
            input,
            format!("{what}"),
            if ok {
                format!("{what}")
            } else {
                "violated".into()
            },
        );
    }

    fn absorb(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs `f` on every composition of size `1..=bound`.
fn over_parabolics<F>(bound: u64, f: F) -> Tally
where
    F: Fn(&Composition, &mut Tally) + Sync,
{
    let all: Vec<Composition> = (1..=bound).flat_map(enumerate_compositions).collect();
    all.par_iter()
        .map(|a| {
            let mut t = Tally::default();
            f(a, &mut t);
            t
        })
        .reduce(Tally::default, Tally::absorb)
}

/// Runs `f` on every seaweed pair of size `1..=bound`, sampling above
/// [`EXHAUSTIVE_PAIR_N`].
fn over_seaweeds<F>(bound: u64, f: F) -> Tally
where
    F: Fn(&Composition, &Composition, &mut Tally) + Sync,
{
    (1..=bound)
        .map(|n| {
            if n <= EXHAUSTIVE_PAIR_N {
                let all: Vec<Composition> = enumerate_compositions(n).collect();
                all.par_iter()
                    .map(|a| {
                        let mut t = Tally::default();
                        for b in &all {
                            f(a, b, &mut t);
                        }
                        t
                    })
                    .reduce(Tally::default, Tally::absorb)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ n);
                let pairs: Vec<(Composition, Composition)> = (0..SAMPLES_PER_N)
                    .map(|_| {
                        (
                            random_composition(n, &mut rng),
                            random_composition(n, &mut rng),
                        )
                    })
                    .collect();
                pairs
                    .par_iter()
                    .map(|(a, b)| {
                        let mut t = Tally::default();
                        f(a, b, &mut t);
                        t
                    })
                    .reduce(Tally::default, Tally::absorb)
            }
        })
        .fold(Tally::default(), Tally::absorb)
}

fn pair_label(a: &Composition, b: &Composition) -> String {
    format!("{a}|{b}")
}

fn seaweed_space(bound: u64) -> String {
    if bound <= EXHAUSTIVE_PAIR_N {
        format!("all seaweed pairs with n ≤ {bound}")
    } else {
        format!(
            "all seaweed pairs with n ≤ {EXHAUSTIVE_PAIR_N}, {SAMPLES_PER_N} sampled per n up to {bound}"
        )
    }
}

fn parabolic_space(bound: u64) -> String {
    format!("all compositions with n ≤ {bound}")
}

/// How a check interprets its bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// Largest `n`; driven by `verify --max-n`.
    Size,
    /// A fixed parameter grid; the default bound is used by `verify`.
    Grid,
}

/// A named identity or formula check.
pub struct Check {
    pub name: &'static str,
    pub description: &'static str,
    pub kind: BoundKind,
    pub default_bound: u64,
    run: fn(&'static str, u64) -> VerificationReport,
}

impl Check {
    pub fn run(&self, bound: u64) -> VerificationReport {
        (self.run)(self.name, bound)
    }
}

impl Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("default_bound", &self.default_bound)
            .finish()
    }
}

/// Every registered check.
pub fn checks() -> &'static [Check] {
    CHECKS
}

pub fn find_check(name: &str) -> Result<&'static Check> {
    CHECKS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Evaluates a registered check over its grid up to `bound`.
pub fn check_identity(name: &str, bound: u64) -> Result<VerificationReport> {
    Ok(find_check(name)?.run(bound))
}

macro_rules! check {
    ($name:literal, $kind:ident, $bound:expr, $desc:literal, $run:expr) => {
        Check {
            name: $name,
            description: $desc,
            kind: BoundKind::$kind,
            default_bound: $bound,
            run: $run,
        }
    };
}

static CHECKS: &[Check] = &[
    // Engines
    check!("engine-agreement", Size, 12,
        "meander count equals the reduction index of the embedded parabolic",
        engine_agreement),
    check!("shortcut-agreement", Size, 12,
        "strict and shortcut reduction strategies give the same index",
        shortcut_agreement),
    // Symmetries and reductions
    check!("swap-symmetry", Size, 12, "χ q(a|b) = χ q(b|a)", swap_symmetry),
    check!("reversal-symmetry", Size, 12,
        "χ q(a|b) = χ q(a reversed | b reversed)", reversal_symmetry),
    check!("parabolic-embedding", Size, 12,
        "χ q(a|b) = χ p(a_1..a_k, b_t..b_1)", parabolic_embedding),
    check!("cut-conversion", Size, 12,
        "χ p(a) equals the seaweed index obtained by cutting after a_i and folding the tail",
        cut_conversion),
    check!("palindromic-split", Size, 12,
        "equal prefix and suffix sums split χ p(a) into outer plus inner blocks",
        palindromic_split),
    check!("seaweed-split", Size, 12,
        "equal partial sums of a and b split χ q(a|b) into two seaweeds",
        seaweed_split),
    check!("rotation", Size, 12,
        "a_i + d_i ≥ 0 (1<i<k): χ p(a) = χ p(a_i+d_i, a_{i+1}..a_k, a_2..a_i)",
        rotation),
    check!("rotation-head", Size, 12,
        "a_1 + d_1 ≤ 0: χ p(a) = χ p(a_2..a_k, |a_1+d_1|)", rotation_head),
    check!("rotation-tail", Size, 12,
        "a_k + d_k ≤ 0: χ p(a) = χ p(|a_k+d_k|, a_1..a_{k−1})", rotation_tail),
    check!("tail-fold", Size, 12,
        "folding the tail sum ã_i = a_i+…+a_k into a_1 preserves χ p(a)", tail_fold),
    check!("seaweed-fold", Size, 12,
        "folding the prefix sum b_1+…+b_i into a_1 preserves χ q(a|b)", seaweed_fold),
    check!("end-difference", Size, 12,
        "a_1 > a_k: χ p(a) = χ p(m − a_1 mod m, a_1 mod m, a_2..a_{k−1}), m = a_1 − a_k",
        end_difference),
    check!("run-collapse", Size, 12,
        "a ≥ 2b: (b.., (a−2b)^r, a^m, (a−2b)^r) and (b.., (a−2b)^{m+2r}) have equal index",
        run_collapse),
    check!("run-reflection", Size, 12,
        "b < a < 2b: (b_1..b_t, a^m) and (b_t..b_1, (2b−a)^m) have equal index",
        run_reflection),
    // Meander structure
    check!("mod-reduce-equivalence", Size, 12,
        "a_i ← a_i mod |d_i| keeps the maximal-cycle signature", mod_reduce_equivalence),
    check!("cycle-bound", Size, 14,
        "Γ(a_1..a_k) has at most ⌊(k+1)/2⌋ maximal cycles", cycle_bound),
    check!("single-cycle-gcd", Size, 14,
        "Γ(a) has one maximal cycle iff χ p(a) = gcd of the parts", single_cycle_gcd),
    check!("segment-endpoints", Size, 12,
        "fixed points are the middles of odd blocks; segments have two endpoints, cycles none",
        segment_endpoints),
    check!("two-bouts", Size, 12,
        "every maximal cycle of dimension s > 1 has two bouts of span s − 1 and pair gap s − 1",
        two_bouts),
    check!("dimension-sum", Size, 12,
        "components partition the vertices and maximal-cycle dimensions sum to the index",
        dimension_sum),
    check!("scaling-signature", Size, 10,
        "the signature of Γ(αa) is α times the signature of Γ(a), α ≤ 3", scaling_signature),
    // Closed forms
    check!("two-blocks", Grid, 40, "χ p(a1,a2) = a1 ∧ a2 for a1 + a2 ≤ bound", two_blocks),
    check!("three-blocks", Grid, 30,
        "χ p(a1,a2,a3) = (a1+a2) ∧ (a2+a3) for sums ≤ bound", three_blocks),
    check!("aaab", Grid, 20,
        "χ p(a,a,a,b) formula and parity form; index 1 iff a even and a ∧ b = 1 (a, b ≤ bound)",
        aaab),
    check!("four-blocks", Grid, 28,
        "every applicable four-block case formula equals the engine (sum ≤ bound)", four_blocks),
    check!("run", Grid, 10,
        "χ p(a^m, b) = (a∧b) φ_m(a/(a∧b), b/(a∧b)) for a, b ≤ bound, m ≤ 8", run),
    check!("run-frobenius", Grid, 12,
        "the Frobenius criterion for p(a^m, b) matches index 1 (a, b ≤ bound, m ≤ 8)",
        run_frobenius),
    check!("geometric", Grid, 6,
        "χ p(1, a, …, a^k) = (a^{⌊k/2⌋+1} − 1)/(a − 1) for a ≤ 4, k ≤ bound", geometric),
    check!("scaling", Grid, 10,
        "χ p(αa) = α χ p(a) and gcd(a) divides χ p(a), n ≤ bound, α ≤ 4", scaling),
    check!("frobenius-family", Grid, 4,
        "nested-multiple compositions have index 1 (multipliers ≤ 3, length ≤ bound)",
        frobenius_family),
    check!("three-families", Grid, 6,
        "the four extensions of p(a,b,c) keep its index; index 1 when coprime (a,b,c ≤ bound, α ≤ 3)",
        three_families),
];

fn engine_agreement(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        let meander = Meander::new(a, b).unwrap().index();
        let embedded = reduction::seaweed_to_parabolic(a, b).unwrap();
        t.eq(
            pair_label(a, b),
            meander,
            reduction::parabolic_index(&embedded),
        );
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn shortcut_agreement(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        t.eq(
            a,
            reduction::parabolic_index(a),
            reduction::index_via_reduction_with(a, Strategy::Shortcut).index,
        );
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn swap_symmetry(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        t.eq(
            pair_label(a, b),
            chi_q(a.parts(), b.parts()),
            chi_q(b.parts(), a.parts()),
        );
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn reversal_symmetry(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        t.eq(
            pair_label(a, b),
            chi_q(a.parts(), b.parts()),
            chi_q(&rev(a.parts()), &rev(b.parts())),
        );
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn parabolic_embedding(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        t.eq(
            pair_label(a, b),
            chi_q(a.parts(), b.parts()),
            chi(&cat(&[a.parts(), &rev(b.parts())])),
        );
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn cut_conversion(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        let sums = a.partial_sums();
        let lhs = chi(p);
        for i in 1..p.len() {
            let cut = sums[i] as i64 - (a.n() - sums[i]) as i64;
            let rhs = if cut >= 0 {
                chi_q(&p[..i], &cat(&[&rev(&p[i..]), &[cut as u64]]))
            } else {
                chi_q(&cat(&[&p[..i], &[(-cut) as u64]]), &rev(&p[i..]))
            };
            t.eq(format!("{a} cut after {i}"), lhs, rhs);
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn palindromic_split(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        let sums = a.partial_sums();
        let k = p.len();
        for i in 1..k {
            for j in i + 2..=k {
                if sums[i] == a.n() - sums[j - 1] {
                    let rhs = chi(&cat(&[&p[..i], &p[j - 1..]])) + chi(&p[i..j - 1]);
                    t.eq(format!("{a} split at {i},{j}"), chi(p), rhs);
                }
            }
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn seaweed_split(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        let (pa, pb) = (a.parts(), b.parts());
        let (sa, sb) = (a.partial_sums(), b.partial_sums());
        let lhs = chi_q(pa, pb);
        for i in 1..pa.len() {
            for j in 1..pb.len() {
                if sa[i] == sb[j] {
                    let rhs = chi_q(&pa[..i], &pb[..j]) + chi_q(&pa[i..], &pb[j..]);
                    t.eq(format!("{a}|{b} split at {i},{j}"), lhs, rhs);
                }
            }
        }
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn rotation(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        let d = defects(a);
        let k = p.len();
        for i in 1..k.saturating_sub(1) {
            let head = p[i] as i128 + d[i];
            if head >= 0 {
                let rhs = chi(&cat(&[&[head as u64], &p[i + 1..], &p[1..=i]]));
                t.eq(format!("{a} at {}", i + 1), chi(p), rhs);
            }
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn rotation_head(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        if p.len() < 2 {
            return;
        }
        let head = p[0] as i128 + defects(a)[0];
        if head <= 0 {
            t.eq(
                a,
                chi(p),
                chi(&cat(&[&p[1..], &[head.unsigned_abs() as u64]])),
            );
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn rotation_tail(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        let k = p.len();
        if k < 2 {
            return;
        }
        let tail = p[k - 1] as i128 + defects(a)[k - 1];
        if tail <= 0 {
            t.eq(
                a,
                chi(p),
                chi(&cat(&[&[tail.unsigned_abs() as u64], &p[..k - 1]])),
            );
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn tail_fold(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        for i in 1..p.len() {
            let tail: u64 = p[i..].iter().sum();
            let rhs = if p[0] >= 2 * tail {
                chi(&cat(&[&[p[0] - 2 * tail], &p[i..], &p[1..i]]))
            } else {
                chi(&cat(&[&p[i..], &p[1..i], &[2 * tail - p[0]]]))
            };
            t.eq(format!("{a} at {}", i + 1), chi(p), rhs);
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn seaweed_fold(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        let (pa, pb) = (a.parts(), b.parts());
        let lhs = chi_q(pa, pb);
        for i in 1..=pb.len() {
            let prefix: u64 = pb[..i].iter().sum();
            let rhs = if pa[0] >= 2 * prefix {
                chi_q(
                    &cat(&[&[pa[0] - 2 * prefix], &rev(&pb[..i]), &pa[1..]]),
                    &pb[i..],
                )
            } else {
                chi_q(
                    &cat(&[&rev(&pb[..i]), &pa[1..]]),
                    &cat(&[&[2 * prefix - pa[0]], &pb[i..]]),
                )
            };
            t.eq(format!("{a}|{b} at {i}"), lhs, rhs);
        }
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn end_difference(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        let k = p.len();
        if k >= 2 && p[0] > p[k - 1] {
            let m = p[0] - p[k - 1];
            let r = p[0] % m;
            t.eq(a, chi(p), chi(&cat(&[&[m - r, r], &p[1..k - 1]])));
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn run_collapse(name: &'static str, bound: u64) -> VerificationReport {
    let mut t = Tally::default();
    for b in 1..=bound {
        for head in enumerate_compositions(b) {
            for a in 2 * b..=2 * b + bound {
                let gap = a - 2 * b;
                for r in 0..=3u64 {
                    for m in 0.. {
                        let total = b + 2 * r * gap + m * a;
                        if total > bound {
                            break;
                        }
                        let side = vec![gap; r as usize];
                        let lhs = chi(&cat(&[head.parts(), &side, &vec![a; m as usize], &side]));
                        let rhs = chi(&cat(&[head.parts(), &vec![gap; (m + 2 * r) as usize]]));
                        t.eq(format!("head {head}, a={a}, r={r}, m={m}"), lhs, rhs);
                    }
                }
            }
        }
    }
    VerificationReport::from_tally(
        name,
        format!("head compositions b, a ≥ 2b, r ≤ 3, total ≤ {bound}"),
        t,
    )
}

fn run_reflection(name: &'static str, bound: u64) -> VerificationReport {
    let mut t = Tally::default();
    for b in 1..=bound {
        for head in enumerate_compositions(b) {
            for a in b + 1..2 * b {
                for m in 0.. {
                    if b + m * a > bound {
                        break;
                    }
                    let lhs = chi(&cat(&[head.parts(), &vec![a; m as usize]]));
                    let rhs = chi(&cat(&[&rev(head.parts()), &vec![2 * b - a; m as usize]]));
                    t.eq(format!("head {head}, a={a}, m={m}"), lhs, rhs);
                }
            }
        }
    }
    VerificationReport::from_tally(
        name,
        format!("head compositions b, b < a < 2b, total ≤ {bound}"),
        t,
    )
}

fn mod_reduce_equivalence(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let p = a.parts();
        if p.len() < 2 {
            return;
        }
        let sig = Meander::parabolic(a).unwrap().equivalence_signature();
        for (i, &d) in defects(a).iter().enumerate() {
            if d == 0 || (p[i] as i128) < d.abs() {
                continue;
            }
            let mut next = p.to_vec();
            next[i] = (p[i] as i128 % d.abs()) as u64;
            let reduced = Composition::normalize(&next).unwrap();
            let got = Meander::parabolic(&reduced)
                .unwrap()
                .equivalence_signature();
            t.eq(format!("{a} → {reduced}"), sig.clone(), got);
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn cycle_bound(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let count = Meander::parabolic(a).unwrap().maximal_cycles().len();
        let limit = a.len().div_ceil(2);
        t.holds(a, count <= limit, format!("{count} ≤ {limit}"));
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn single_cycle_gcd(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let m = Meander::parabolic(a).unwrap();
        let single = m.maximal_cycles().len() == 1;
        t.eq(a, single, m.index() == a.gcd_all());
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

/// Middles of the odd blocks of `c`.
fn odd_block_middles(c: &Composition) -> Vec<usize> {
    let sums = c.partial_sums();
    c.parts()
        .iter()
        .enumerate()
        .filter(|(_, &p)| p % 2 == 1)
        .map(|(i, &p)| (sums[i] + p.div_ceil(2)) as usize)
        .collect()
}

fn segment_endpoints(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        let m = Meander::new(a, b).unwrap();
        let label = pair_label(a, b);
        t.eq(&label, odd_block_middles(a), m.theta_a().fixed_points());
        t.eq(&label, odd_block_middles(b), m.theta_b().fixed_points());
        for comp in m.components() {
            let ends: usize = comp
                .vertices
                .iter()
                .map(|&x| m.theta_a().is_fixed(x) as usize + m.theta_b().is_fixed(x) as usize)
                .sum();
            let want = if comp.is_cycle() { 0 } else { 2 };
            t.eq(format!("{label} component {:?}", comp.vertices), want, ends);
        }
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn two_bouts(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        let m = Meander::new(a, b).unwrap();
        for mc in m.maximal_cycles() {
            if mc.dimension <= 1 {
                continue;
            }
            let span = mc.dimension as usize - 1;
            let label = format!("{} cycle {:?}", pair_label(a, b), mc.core.vertices);
            t.eq(&label, 2, mc.bouts.len());
            t.eq(&label, Some(span), mc.core.pair_gap());
            let spans_ok = mc.bouts.iter().all(|bt| bt.arc.v - bt.arc.u == span);
            t.holds(&label, spans_ok, format!("bouts span {span}"));
        }
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn dimension_sum(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_seaweeds(bound, |a, b, t| {
        let m = Meander::new(a, b).unwrap();
        let label = pair_label(a, b);
        let comps = m.components();
        let mut seen = vec![0u32; m.n()];
        for c in &comps {
            for &x in &c.vertices {
                seen[x - 1] += 1;
                let closed = c.vertices.binary_search(&m.theta_a().apply(x)).is_ok()
                    && c.vertices.binary_search(&m.theta_b().apply(x)).is_ok();
                if !closed {
                    t.holds(&label, false, format!("orbit of {x} leaves its component"));
                }
            }
        }
        t.holds(
            &label,
            seen.iter().all(|&s| s == 1),
            "components partition 1..n",
        );
        let mcs = m.maximal_cycles();
        let accounted: usize = mcs.iter().map(|mc| 1 + mc.inside.len()).sum();
        t.eq(&label, comps.len(), accounted);
        t.eq(&label, m.index(), mcs.iter().map(|mc| mc.dimension).sum());
    });
    VerificationReport::from_tally(name, seaweed_space(bound), t)
}

fn scaling_signature(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let base = Meander::parabolic(a).unwrap().equivalence_signature();
        for alpha in 2..=3 {
            let scaled = Meander::parabolic(&a.scale(alpha).unwrap())
                .unwrap()
                .equivalence_signature();
            let want: Vec<u64> = base.iter().map(|d| d * alpha).collect();
            t.eq(format!("{a} × {alpha}"), want, scaled);
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn from_table(name: &'static str, family: Family, bound: u64, space: String) -> VerificationReport {
    let mut t = Tally::default();
    for row in formula_table(family, bound) {
        t.eq(
            format!("{} ({})", row.parameters, row.family),
            row.formula,
            row.engine,
        );
    }
    VerificationReport::from_tally(name, space, t)
}

fn two_blocks(name: &'static str, bound: u64) -> VerificationReport {
    from_table(name, Family::Two, bound, format!("a1 + a2 ≤ {bound}"))
}

fn three_blocks(name: &'static str, bound: u64) -> VerificationReport {
    from_table(
        name,
        Family::Three,
        bound,
        format!("a1 + a2 + a3 ≤ {bound}"),
    )
}

fn aaab(name: &'static str, bound: u64) -> VerificationReport {
    let mut report = from_table(name, Family::Aaab, bound, format!("a, b ≤ {bound}"));
    let mut t = Tally::default();
    for a in 1..=bound {
        for b in 1..=bound {
            let engine = formulas::index_aaab(a, b);
            t.eq(
                format!("index 1 criterion at ({a},{b})"),
                a % 2 == 0 && gcd(a, b) == 1,
                engine == 1,
            );
        }
    }
    report.instances += t.instances;
    report.failures.extend(t.failures);
    report
}

fn four_blocks(name: &'static str, bound: u64) -> VerificationReport {
    from_table(
        name,
        Family::Four,
        bound,
        format!("a + b + c + d ≤ {bound}, applicable cases"),
    )
}

fn run(name: &'static str, bound: u64) -> VerificationReport {
    from_table(
        name,
        Family::Run,
        bound,
        format!("a, b ≤ {bound}, m ≤ {RUN_MAX_M}"),
    )
}

fn run_frobenius(name: &'static str, bound: u64) -> VerificationReport {
    let params: Vec<(u64, u64, u64)> = (1..=bound)
        .flat_map(|a| (1..=bound).flat_map(move |b| (1..=RUN_MAX_M).map(move |m| (a, m, b))))
        .collect();
    let t = params
        .par_iter()
        .map(|&(a, m, b)| {
            let mut t = Tally::default();
            let c = formulas::run_composition(a, m, b).unwrap();
            t.eq(
                format!("({a})^{m},{b}"),
                reduction::parabolic_index(&c) == 1,
                formulas::is_frobenius_run(a, m, b),
            );
            t
        })
        .reduce(Tally::default, Tally::absorb);
    VerificationReport::from_tally(name, format!("a, b ≤ {bound}, m ≤ {RUN_MAX_M}"), t)
}

fn geometric(name: &'static str, bound: u64) -> VerificationReport {
    from_table(
        name,
        Family::Geometric,
        bound,
        format!("a ∈ {{2,3,4}}, k ≤ {bound}"),
    )
}

fn scaling(name: &'static str, bound: u64) -> VerificationReport {
    let t = over_parabolics(bound, |a, t| {
        let base = reduction::parabolic_index(a);
        t.holds(a, base.is_multiple_of(a.gcd_all()), "gcd divides the index");
        for alpha in 1..=4 {
            let scaled = reduction::parabolic_index(&a.scale(alpha).unwrap());
            t.eq(format!("{a} × {alpha}"), alpha * base, scaled);
        }
    });
    VerificationReport::from_tally(name, parabolic_space(bound), t)
}

fn frobenius_family(name: &'static str, bound: u64) -> VerificationReport {
    let mut t = Tally::default();
    let mut vectors: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..bound {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                (1..=3).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
        for alphas in &vectors {
            let c = formulas::frobenius_family(alphas).unwrap();
            let b = Composition::single(c.n()).unwrap();
            t.eq(
                format!("{alphas:?} → {c}"),
                0,
                reduction::index_sl(&c, &b).unwrap(),
            );
        }
    }
    VerificationReport::from_tally(name, format!("multipliers ≤ 3, 1 ≤ r ≤ {bound}"), t)
}

fn three_families(name: &'static str, bound: u64) -> VerificationReport {
    let mut t = Tally::default();
    for a in 1..=bound {
        for b in 1..=bound {
            for c in 1..=bound {
                let base = reduction::parabolic_index(&Composition::normalize(&[a, b, c]).unwrap());
                for alpha in 1..=3 {
                    let total = a + b + c;
                    let extended = [
                        vec![alpha * total, a, b, c],
                        vec![a, alpha * a.abs_diff(b + c), b, c],
                        vec![a, b, alpha * (a + b).abs_diff(c), c],
                    ];
                    for e in &extended {
                        let got = reduction::parabolic_index(&Composition::normalize(e).unwrap());
                        t.eq(format!("{e:?} vs ({a},{b},{c})"), base, got);
                    }
                    if gcd(a + b, b + c) == 1 {
                        for f in formulas::frobenius_three_families(a, b, c, alpha).unwrap() {
                            t.eq(format!("{f}"), 1, reduction::parabolic_index(&f));
                        }
                    }
                }
            }
        }
    }
    VerificationReport::from_tally(name, format!("a, b, c ≤ {bound}, α ≤ 3"), t)
}

/// Closed-form family for [`formula_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `(a1, a2)` with `a1 + a2 ≤ bound`.
    Two,
    /// `(a1, a2, a3)` with sum `≤ bound`.
    Three,
    /// `(a, a, a, b)` with `a, b ≤ bound`, both closed forms.
    Aaab,
    /// `(a, b, c, d)` with sum `≤ bound`, one row per applicable case.
    Four,
    /// `(a, …, a, b)` with `a, b ≤ bound` and `m ≤ 8`.
    Run,
    /// `(1, a, …, a^k)` with `a ≤ 4` and `k ≤ bound`.
    Geometric,
}

/// A closed-form value next to the reduction engine's value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: String,
    pub parameters: String,
    pub formula: u64,
    pub engine: u64,
    pub agree: bool,
}

impl TableRow {
    fn new(family: impl Into<String>, params: &[u64], formula: u64, engine: u64) -> Self {
        let parameters = params
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        Self {
            family: family.into(),
            parameters,
            formula,
            engine,
            agree: formula == engine,
        }
    }
}

fn engine(parts: &[u64]) -> u64 {
    reduction::parabolic_index(&Composition::normalize(parts).expect("positive parts"))
}

/// Formula and engine values over a family's grid, in grid order.
pub fn formula_table(family: Family, bound: u64) -> Vec<TableRow> {
    match family {
        Family::Two => (2..=bound)
            .flat_map(|s| (1..s).map(move |a1| (a1, s - a1)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(a1, a2)| {
                TableRow::new(
                    "two",
                    &[a1, a2],
                    formulas::index_two(a1, a2),
                    engine(&[a1, a2]),
                )
            })
            .collect(),
        Family::Three => (3..=bound)
            .flat_map(|s| {
                (1..s).flat_map(move |a1| (1..s - a1).map(move |a2| (a1, a2, s - a1 - a2)))
            })
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(a1, a2, a3)| {
                TableRow::new(
                    "three",
                    &[a1, a2, a3],
                    formulas::index_three(a1, a2, a3),
                    engine(&[a1, a2, a3]),
                )
            })
            .collect(),
        Family::Aaab => (1..=bound)
            .flat_map(|a| (1..=bound).map(move |b| (a, b)))
            .collect::<Vec<_>>()
            .par_iter()
            .flat_map_iter(|&(a, b)| {
                let e = engine(&[a, a, a, b]);
                [
                    TableRow::new("aaab", &[a, b], formulas::index_aaab(a, b), e),
                    TableRow::new("aaab-parity", &[a, b], formulas::aaab_case(a, b), e),
                ]
            })
            .collect(),
        Family::Four => {
            let mut tuples = Vec::new();
            for s in 4..=bound {
                for a in 1..s {
                    for b in 1..s - a {
                        for c in 1..s - a - b {
                            tuples.push((a, b, c, s - a - b - c));
                        }
                    }
                }
            }
            tuples
                .par_iter()
                .flat_map_iter(|&(a, b, c, d)| {
                    let cases = formulas::four_block_cases(a, b, c, d);
                    let e = if cases.is_empty() {
                        0
                    } else {
                        engine(&[a, b, c, d])
                    };
                    cases.into_iter().map(move |(case, v)| {
                        TableRow::new(format!("four:{}", case.number()), &[a, b, c, d], v, e)
                    })
                })
                .collect()
        }
        Family::Run => (1..=bound)
            .flat_map(|a| (1..=RUN_MAX_M).flat_map(move |m| (1..=bound).map(move |b| (a, m, b))))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(a, m, b)| {
                let c = formulas::run_composition(a, m, b).unwrap();
                TableRow::new(
                    "run",
                    &[a, m, b],
                    formulas::index_run(a, m, b),
                    reduction::parabolic_index(&c),
                )
            })
            .collect(),
        Family::Geometric => (2..=4u64)
            .flat_map(|a| (0..=bound as u32).map(move |k| (a, k)))
            .filter_map(|(a, k)| {
                let c = formulas::geometric_composition(a, k).ok()?;
                let f = formulas::index_geometric(a, k).ok()?;
                Some(TableRow::new(
                    "geometric",
                    &[a, k as u64],
                    f,
                    reduction::parabolic_index(&c),
                ))
            })
            .collect(),
    }
}

/// Kirillov oracle against both engines on every pair with `n ≤ bound`.
pub fn check_oracle(bound: u64, trials: u32, seed: u64) -> VerificationReport {
    let t = over_seaweeds(bound.min(EXHAUSTIVE_PAIR_N), |a, b, t| {
        let meander = Meander::new(a, b).unwrap().index();
        let embedded = reduction::seaweed_to_parabolic(a, b).unwrap();
        let reduced = reduction::parabolic_index(&embedded);
        let form = kirillov::index_via_form(a, b, trials, seed).unwrap();
        t.eq(pair_label(a, b), (meander, meander), (reduced, form));
    });
    VerificationReport::from_tally(
        "kirillov-oracle",
        format!(
            "all seaweed pairs with n ≤ {}, {trials} trials, seed {seed}; (meander, meander) vs (reduction, form)",
            bound.min(EXHAUSTIVE_PAIR_N)
        ),
        t,
    )
}

/// Options for [`verify_all`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_n: u64,
    pub oracle: bool,
    pub oracle_max_n: u64,
    pub trials: u32,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_n: 10,
            oracle: false,
            oracle_max_n: 7,
            trials: 5,
            seed: 0,
        }
    }
}

/// Size checks at `max_n`, grid checks at their defaults, and optionally
/// the Kirillov oracle.
pub fn verify_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = checks()
        .iter()
        .map(|c| match c.kind {
            BoundKind::Size => c.run(opts.max_n),
            BoundKind::Grid => c.run(c.default_bound),
        })
        .collect();
    if opts.oracle {
        reports.push(check_oracle(opts.oracle_max_n, opts.trials, opts.seed));
    }
    reports
}
