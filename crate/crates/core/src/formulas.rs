//! Closed-form indices for families of parabolic subalgebras, and the
//! Frobenius families they produce.
//!
//! Every function here is pure arithmetic. The engines in [`crate::reduction`]
//! and [`crate::meander`] are the reference these are checked against.

use serde::Serialize;

use crate::composition::{gcd, Composition};
use crate::error::{Error, Result};

/// Index of `p(a1, a2)`.
pub fn index_two(a1: u64, a2: u64) -> u64 {
    gcd(a1, a2)
}

/// Index of `p(a1, a2, a3)`.
pub fn index_three(a1: u64, a2: u64, a3: u64) -> u64 {
    gcd(a1 + a2, a2 + a3)
}

/// Index of `p(a, a, a, b)`: `(a + g) ∧ (a − g)` with `g = a ∧ b`.
pub fn index_aaab(a: u64, b: u64) -> u64 {
    let g = gcd(a, b);
    gcd(a + g, a - g)
}

/// Parity form of [`index_aaab`]: `2g` when `a/g` is odd, `g` otherwise.
///
/// After dividing by `g` the two arguments cannot both be even.
pub fn aaab_case(a: u64, b: u64) -> u64 {
    let g = gcd(a, b);
    if (a / g) % 2 == 1 {
        2 * g
    } else {
        g
    }
}

/// Which sufficient condition on `(a, b, c, d)` yields a closed form for
/// the index of `p(a, b, c, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FourBlockCase {
    /// `(a+b+c) ∧ (b+c+d) ≥ b+c`
    One,
    /// `(a+b+c) ∧ (c+d) ≥ a+b`
    Two,
    /// `(a+b) ∧ (b+c+d) ≥ c+d`
    Three,
    /// `a > d` and `(b+a−d) ∧ (b+c) ≥ a−d`
    Four,
}

impl FourBlockCase {
    pub const ALL: [FourBlockCase; 4] = [Self::One, Self::Two, Self::Three, Self::Four];

    pub fn number(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Three => 3,
            Self::Four => 4,
        }
    }

    /// The formula value when the hypothesis holds.
    pub fn evaluate(self, a: u64, b: u64, c: u64, d: u64) -> Option<u64> {
        let (p, threshold, tail) = match self {
            Self::One => (gcd(a + b + c, b + c + d), b + c, gcd(b, c)),
            Self::Two => (gcd(a + b + c, c + d), a + b, gcd(a, b)),
            Self::Three => (gcd(a + b, b + c + d), c + d, gcd(c, d)),
            Self::Four => {
                if a <= d {
                    return None;
                }
                (gcd(b + a - d, b + c), a - d, gcd(a, d))
            }
        };
        (p >= threshold).then(|| p - threshold + tail)
    }
}

/// First applicable case (in order 1–4) and its value.
pub fn index_four(a: u64, b: u64, c: u64, d: u64) -> Option<(u64, FourBlockCase)> {
    four_block_cases(a, b, c, d)
        .into_iter()
        .next()
        .map(|(case, v)| (v, case))
}

/// Every applicable case with its value.
pub fn four_block_cases(a: u64, b: u64, c: u64, d: u64) -> Vec<(FourBlockCase, u64)> {
    FourBlockCase::ALL
        .into_iter()
        .filter_map(|case| case.evaluate(a, b, c, d).map(|v| (case, v)))
        .collect()
}

/// `φ_m(a, b)`, defined when `a` or `b` is odd.
pub fn phi(m: u64, a: u64, b: u64) -> Result<u64> {
    match (a % 2 == 1, b % 2 == 1) {
        (true, true) => Ok(m / 2 + 1),
        (true, false) => Ok(m.div_ceil(2)),
        (false, true) => Ok(1),
        (false, false) => Err(Error::InvalidArgument(format!(
            "phi is undefined for two even arguments ({a}, {b})"
        ))),
    }
}

/// Index of `p(a, …, a, b)` with `m` copies of `a`.
pub fn index_run(a: u64, m: u64, b: u64) -> u64 {
    let g = gcd(a, b);
    g * phi(m, a / g, b / g).expect("coprime arguments are never both even")
}

/// Whether `p(a, …, a, b)` has index 1, i.e. its `sl` part is Frobenius.
pub fn is_frobenius_run(a: u64, m: u64, b: u64) -> bool {
    gcd(a, b) == 1
        && (m == 1
            || (a.is_multiple_of(2) && b % 2 == 1)
            || (a % 2 == 1 && b.is_multiple_of(2) && m == 2))
}

/// The composition `(a, …, a, b)`.
pub fn run_composition(a: u64, m: u64, b: u64) -> Result<Composition> {
    let mut parts = vec![a; m as usize];
    parts.push(b);
    Composition::normalize(&parts)
}

/// Index of `p(1, a, a², …, a^k)`: `(a^{⌊k/2⌋+1} − 1)/(a − 1)`.
pub fn index_geometric(a: u64, k: u32) -> Result<u64> {
    if a < 2 {
        return Err(Error::InvalidArgument(format!(
            "ratio must be ≥ 2, got {a}"
        )));
    }
    let top = a
        .checked_pow(k / 2 + 1)
        .ok_or_else(|| Error::Overflow(format!("{a}^{}", k / 2 + 1)))?;
    Ok((top - 1) / (a - 1))
}

/// `(1, a, a², …, a^k)`.
pub fn geometric_composition(a: u64, k: u32) -> Result<Composition> {
    let parts = (0..=k)
        .map(|e| {
            a.checked_pow(e)
                .ok_or_else(|| Error::Overflow(format!("{a}^{e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::normalize(&parts)
}

/// `(a_0, …, a_r)` with `a_0 = 1` and `a_i = α_i (a_0 + … + a_{i−1})`.
/// The `sl` part of the parabolic is always Frobenius.
pub fn frobenius_family(alphas: &[u64]) -> Result<Composition> {
    if alphas.is_empty() || alphas.contains(&0) {
        return Err(Error::InvalidArgument(
            "need at least one multiplier, all ≥ 1".into(),
        ));
    }
    let mut parts = vec![1u64];
    let mut total = 1u64;
    for &alpha in alphas {
        let next = alpha
            .checked_mul(total)
            .ok_or_else(|| Error::Overflow(format!("{alpha} × {total}")))?;
        total = total
            .checked_add(next)
            .ok_or_else(|| Error::Overflow("family total".into()))?;
        parts.push(next);
    }
    Composition::normalize(&parts)
}

/// The four four-block parabolics built from `p(a, b, c)` that have index 1
/// when `(a+b) ∧ (b+c) = 1`:
/// `(α(a+b+c), a, b, c)`, `(a, α|a−b−c|, b, c)`, `(a, b, α|a+b−c|, c)`,
/// `(a, b, c, α(a+b+c))`. Zero parts are dropped.
pub fn frobenius_three_families(a: u64, b: u64, c: u64, alpha: u64) -> Result<Vec<Composition>> {
    if a == 0 || b == 0 || c == 0 || alpha == 0 {
        return Err(Error::InvalidArgument("all parameters must be ≥ 1".into()));
    }
    if gcd(a + b, b + c) != 1 {
        return Err(Error::InvalidArgument(format!(
            "({a}+{b}) and ({b}+{c}) are not coprime"
        )));
    }
    let total = a + b + c;
    let families = [
        [alpha * total, a, b, c],
        [a, alpha * a.abs_diff(b + c), b, c],
        [a, b, alpha * (a + b).abs_diff(c), c],
        [a, b, c, alpha * total],
    ];
    families.iter().map(|p| Composition::normalize(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::reduction::parabolic_index;

    #[test]
    fn two_and_three_blocks() {
        assert_eq!(index_two(6, 4), 2);
        assert_eq!(index_two(5, 4), 1);
        assert_eq!(index_two(7, 7), 7);
        assert_eq!(index_three(13, 20, 18), 1);
        assert_eq!(index_three(1, 1, 1), 2);
        assert_eq!(index_three(3, 4, 3), 7);
    }

    #[test]
    fn aaab_examples() {
        assert_eq!(index_aaab(3, 2), 2);
        assert_eq!(index_aaab(2, 1), 1);
        assert_eq!(index_aaab(5, 5), 10);
        assert_eq!(index_aaab(4, 8), 8);
        assert_eq!(aaab_case(3, 2), 2);
        assert_eq!(aaab_case(2, 3), 1);
        assert_eq!(aaab_case(6, 3), 3);
        assert_eq!(index_aaab(6, 3), 3);
        assert_eq!(parabolic_index(&comp![3, 3, 3, 2]), 2);
    }

    #[test]
    fn four_block_examples() {
        // 3∧3 − 2 + 1
        assert_eq!(index_four(1, 1, 1, 1), Some((2, FourBlockCase::One)));
        assert_eq!(parabolic_index(&comp![1, 1, 1, 1]), 2);
        // 4∧4 − 2 + 1, matching the split χ(2,2) + χ(1,1)
        assert_eq!(index_four(2, 1, 1, 2), Some((3, FourBlockCase::One)));
        assert_eq!(parabolic_index(&comp![2, 1, 1, 2]), 3);
        for (case, v) in four_block_cases(5, 1, 2, 4) {
            assert_eq!(v, 1, "case {case:?}");
        }
    }

    #[test]
    fn case_four_needs_a_above_d() {
        assert_eq!(FourBlockCase::Four.evaluate(1, 5, 5, 3), None);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(2, 1, 1).unwrap(), 2);
        assert_eq!(phi(5, 3, 2).unwrap(), 3);
        assert_eq!(phi(7, 2, 1).unwrap(), 1);
        assert!(matches!(phi(3, 2, 4), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn run_examples() {
        assert_eq!(index_run(1, 2, 1), 2);
        assert_eq!(index_run(2, 3, 1), 1);
        assert_eq!(parabolic_index(&comp![2, 2, 2, 1]), 1);
        for a in 1..8 {
            for b in 1..8 {
                assert_eq!(index_run(a, 1, b), gcd(a, b));
            }
        }
        assert!(is_frobenius_run(2, 5, 3));
        assert!(is_frobenius_run(3, 2, 2));
        assert!(!is_frobenius_run(3, 3, 2));
        assert_eq!(run_composition(2, 3, 1).unwrap(), comp![2, 2, 2, 1]);
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(index_geometric(2, 2).unwrap(), 3);
        assert_eq!(index_three(1, 2, 4), 3);
        for a in 2..6 {
            assert_eq!(index_geometric(a, 0).unwrap(), 1);
        }
        assert_eq!(index_geometric(3, 3).unwrap(), 4);
        assert_eq!(parabolic_index(&comp![1, 3, 9, 27]), 4);
        assert!(index_geometric(1, 3).is_err());
        assert!(matches!(
            index_geometric(u64::MAX, 4),
            Err(Error::Overflow(_))
        ));
        assert_eq!(geometric_composition(3, 3).unwrap(), comp![1, 3, 9, 27]);
    }

    #[test]
    fn frobenius_family_examples() {
        assert_eq!(frobenius_family(&[1, 2]).unwrap(), comp![1, 1, 4]);
        assert_eq!(parabolic_index(&comp![1, 1, 4]), 1);
        assert_eq!(frobenius_family(&[1]).unwrap(), comp![1, 1]);
        let c = frobenius_family(&[2, 1, 3]).unwrap();
        assert_eq!(c, comp![1, 2, 3, 18]);
        assert_eq!(parabolic_index(&c), 1);
        assert!(frobenius_family(&[]).is_err());
        assert!(frobenius_family(&[1, 0]).is_err());
        assert!(matches!(
            frobenius_family(&[u64::MAX, u64::MAX]),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn three_family_examples() {
        let fams = frobenius_three_families(1, 1, 2, 1).unwrap();
        assert_eq!(fams[0], comp![4, 1, 1, 2]);
        assert_eq!(fams[1], comp![1, 2, 1, 2]);
        let fams = frobenius_three_families(1, 2, 2, 1).unwrap();
        assert_eq!(fams[2], comp![1, 2, 1, 2]);
        for c in fams {
            assert_eq!(parabolic_index(&c), 1, "{c}");
        }
        assert!(frobenius_three_families(1, 1, 1, 1).is_err());
    }

    #[test]
    fn three_family_zero_part_is_stripped() {
        // |3 − 1 − 2| = 0
        let fams = frobenius_three_families(3, 1, 2, 2).unwrap();
        assert_eq!(fams[1], comp![3, 1, 2]);
    }
}
