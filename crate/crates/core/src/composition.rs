//! Compositions of an integer: ordered block sizes of a seaweed.
//!
//! Zero entries are dropped on construction, so `(2,0,3)` and `(2,3)` name
//! the same block structure. The textual form is a comma-separated list,
//! e.g. `2,4,3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Greatest common divisor, with `gcd(x, 0) == x`.
pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// An ordered sequence of positive block sizes with cached total.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
    n: u64,
}

impl Composition {
    /// Keeps the positive entries of `raw` in order.
    ///
    /// Fails when nothing positive remains or the total overflows `u64`.
    pub fn normalize(raw: &[u64]) -> Result<Self> {
        let parts: Vec<u64> = raw.iter().copied().filter(|&p| p > 0).collect();
        if parts.is_empty() {
            return Err(Error::InvalidComposition(
                "no positive parts (empty or all zero)".into(),
            ));
        }
        let n = checked_sum(&parts)?;
        Ok(Self { parts, n })
    }

    /// Like [`Composition::normalize`] but returns `None` when every entry is zero.
    ///
    /// Rewrite rules routinely produce all-zero remainders; callers treat those
    /// as the empty composition.
    pub fn normalize_opt(raw: &[u64]) -> Result<Option<Self>> {
        if raw.iter().all(|&p| p == 0) {
            return Ok(None);
        }
        Self::normalize(raw).map(Some)
    }

    /// The single block `(n)`.
    pub fn single(n: u64) -> Result<Self> {
        Self::normalize(&[n])
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false: a composition has at least one part.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn gcd_all(&self) -> u64 {
        self.parts.iter().fold(0, |g, &p| gcd(g, p))
    }

    pub fn scale(&self, alpha: u64) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::InvalidArgument("scale factor must be ≥ 1".into()));
        }
        let parts = self
            .parts
            .iter()
            .map(|&p| {
                p.checked_mul(alpha)
                    .ok_or_else(|| Error::Overflow(format!("{p} × {alpha}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(&parts)
    }

    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self { parts, n: self.n }
    }

    /// Partial sums `s_0 = 0, s_1 = a_1, …, s_k = n`.
    pub fn partial_sums(&self) -> Vec<u64> {
        let mut sums = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        sums.push(acc);
        for &p in &self.parts {
            acc += p;
            sums.push(acc);
        }
        sums
    }

    /// Block number (0-based) of every vertex `1..=n`, stored at index `x - 1`.
    pub fn block_of_vertices(&self) -> Vec<usize> {
        let mut blocks = Vec::with_capacity(self.n as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            blocks.extend(std::iter::repeat_n(i, p as usize));
        }
        blocks
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Composition) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::normalize(&parts)
    }
}

fn checked_sum(parts: &[u64]) -> Result<u64> {
    parts.iter().try_fold(0u64, |acc, &p| {
        acc.checked_add(p)
            .ok_or_else(|| Error::Overflow("composition total exceeds u64".into()))
    })
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u64>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{:?}: {e}", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(&raw)
    }
}

impl TryFrom<Vec<u64>> for Composition {
    type Error = Error;

    fn try_from(raw: Vec<u64>) -> Result<Self> {
        Self::normalize(&raw)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Builds a composition from literal parts, panicking on invalid input.
/// Intended for tests and examples.
#[macro_export]
macro_rules! comp {
    ($($p:expr),+ $(,)?) => {
        $crate::Composition::normalize(&[$($p as u64),+]).expect("valid composition")
    };
}
