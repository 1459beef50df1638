//! Ground-truth index from the Kirillov form.
//!
//! `q(a|b)` is realized as the span of the matrix units `e_ij` with
//! `block_a(i) ≤ block_a(j)` and `block_b(i) ≥ block_b(j)`. For a functional
//! `f` the antisymmetric matrix `B_f[u][v] = f([x_u, x_v])` has corank
//! `dim g_f`, and the index is the minimum over `f`. A random `f` over a
//! large prime field attains the minimum with high probability, so a few
//! trials with min-aggregation suffice.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::composition::Composition;
use crate::error::{Error, Result};

/// The Mersenne prime 2^31 − 1.
pub const PRIME: u64 = (1 << 31) - 1;

/// Largest basis the oracle will build a Kirillov matrix for.
pub const MAX_DIM: usize = 4096;

/// Matrix units spanning `q(a|b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeaweedBasis {
    n: usize,
    /// 1-based `(row, col)`, row-major order.
    positions: Vec<(usize, usize)>,
    block_a: Vec<usize>,
    block_b: Vec<usize>,
    /// `lookup[(i−1)·n + (j−1)]` is the basis index of `e_ij`.
    lookup: Vec<Option<usize>>,
}

impl SeaweedBasis {
    pub fn new(a: &Composition, b: &Composition) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::SumMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        // dim ≥ n, so this also bounds the lookup table.
        if a.n() > MAX_DIM as u64 {
            return Err(Error::TooLarge {
                what: "seaweed size n",
                got: a.n(),
                limit: MAX_DIM as u64,
            });
        }
        let n = a.n() as usize;
        let block_a = a.block_of_vertices();
        let block_b = b.block_of_vertices();
        let mut positions = Vec::new();
        let mut lookup = vec![None; n * n];
        for i in 1..=n {
            for j in 1..=n {
                if block_a[i - 1] <= block_a[j - 1] && block_b[i - 1] >= block_b[j - 1] {
                    lookup[(i - 1) * n + (j - 1)] = Some(positions.len());
                    positions.push((i, j));
                }
            }
        }
        Ok(Self {
            n,
            positions,
            block_a,
            block_b,
            lookup,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// 0-based block of vertex `x` in the first composition.
    pub fn block_a(&self, x: usize) -> usize {
        self.block_a[x - 1]
    }

    pub fn block_b(&self, x: usize) -> usize {
        self.block_b[x - 1]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.index_of(i, j).is_some()
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        self.lookup[(i - 1) * self.n + (j - 1)]
    }
}

/// `f([x_u, x_v])` for `x_u = e_ij`, `x_v = e_kl`:
/// `f(e_il)·[j = k] − f(e_kj)·[l = i]`, with `f` zero off the basis.
pub fn bracket_functional(basis: &SeaweedBasis, f: &[u64], u: usize, v: usize) -> u64 {
    let (i, j) = basis.positions[u];
    let (k, l) = basis.positions[v];
    let at = |r, c| basis.index_of(r, c).map_or(0, |idx| f[idx]);
    let plus = if j == k { at(i, l) } else { 0 };
    let minus = if l == i { at(k, j) } else { 0 };
    sub_mod(plus, minus)
}

fn sub_mod(x: u64, y: u64) -> u64 {
    (x + PRIME - y) % PRIME
}

fn mul_mod(x: u64, y: u64) -> u64 {
    x * y % PRIME
}

fn inv_mod(x: u64) -> u64 {
    // Fermat: x^(p−2)
    let mut result = 1;
    let mut base = x % PRIME;
    let mut e = PRIME - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    result
}

/// Row-major `dim × dim` Kirillov matrix of `f`.
pub fn kirillov_matrix(basis: &SeaweedBasis, f: &[u64]) -> Vec<Vec<u64>> {
    let d = basis.dim();
    (0..d)
        .map(|u| (0..d).map(|v| bracket_functional(basis, f, u, v)).collect())
        .collect()
}

/// Rank over `F_p` by Gaussian elimination. Consumes the matrix.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][col]);
        for x in m[rank][col..].iter_mut() {
            *x = mul_mod(*x, inv);
        }
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = sub_mod(*x, mul_mod(factor, p));
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// One random functional and the rank of its Kirillov form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSample {
    pub prime: u64,
    pub functional: Vec<u64>,
    pub rank: usize,
}

impl FormSample {
    /// `dim g_f` for this sample.
    pub fn stabilizer_dim(&self) -> usize {
        self.functional.len() - self.rank
    }
}

/// Samples `f` uniformly from `F_p^dim` using stream `trial` of the
/// generator keyed by `seed`.
pub fn sample_form(basis: &SeaweedBasis, seed: u64, trial: u64) -> FormSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let functional: Vec<u64> = (0..basis.dim())
        .map(|_| rng.random_range(0..PRIME))
        .collect();
    let rank = rank_mod_p(kirillov_matrix(basis, &functional));
    FormSample {
        prime: PRIME,
        functional,
        rank,
    }
}

/// `dim q − max rank` over `trials` random functionals.
pub fn index_via_form(a: &Composition, b: &Composition, trials: u32, seed: u64) -> Result<u64> {
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "at least one trial is needed".into(),
        ));
    }
    let basis = SeaweedBasis::new(a, b)?;
    if basis.dim() > MAX_DIM {
        return Err(Error::TooLarge {
            what: "seaweed dimension",
            got: basis.dim() as u64,
            limit: MAX_DIM as u64,
        });
    }
    let best = (0..trials as u64)
        .map(|t| sample_form(&basis, seed, t).stabilizer_dim())
        .min()
        .expect("trials > 0");
    Ok(best as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    /// n + Σ C(a_i, 2) + Σ C(b_j, 2): strictly upper entries share a b-block,
    /// strictly lower entries share an a-block.
    fn closed_form_dim(a: &Composition, b: &Composition) -> usize {
        let pairs = |c: &Composition| c.parts().iter().map(|&p| p * (p - 1) / 2).sum::<u64>();
        (a.n() + pairs(a) + pairs(b)) as usize
    }

    #[test]
    fn basis_examples() {
        let full = SeaweedBasis::new(&comp![4], &comp![4]).unwrap();
        assert_eq!(full.dim(), 16);
        let borel = SeaweedBasis::new(&comp![1, 1], &comp![2]).unwrap();
        assert_eq!(borel.positions(), &[(1, 1), (1, 2), (2, 2)]);
        let ex = SeaweedBasis::new(&comp![2, 4, 3], &comp![5, 2, 2]).unwrap();
        assert_eq!(ex.dim(), 31);
        assert_eq!(ex.dim(), closed_form_dim(&comp![2, 4, 3], &comp![5, 2, 2]));
        assert!((1..=9).all(|x| ex.contains(x, x)));
        assert!(!ex.contains(0, 1) && !ex.contains(10, 1));
    }

    #[test]
    fn basis_rejects_mismatch() {
        assert!(matches!(
            SeaweedBasis::new(&comp![1, 1], &comp![3]),
            Err(Error::SumMismatch { .. })
        ));
    }

    #[test]
    fn parabolic_is_block_upper_triangular() {
        let a = comp![2, 1, 3];
        let basis = SeaweedBasis::new(&a, &comp![6]).unwrap();
        for i in 1..=6 {
            for j in 1..=6 {
                let want = basis.block_a(i) <= basis.block_a(j);
                assert_eq!(basis.contains(i, j), want);
            }
        }
        let opposite = SeaweedBasis::new(&comp![6], &a).unwrap();
        for &(i, j) in opposite.positions() {
            assert!(opposite.block_b(i) >= opposite.block_b(j));
        }
    }

    #[test]
    fn bracket_examples() {
        let gl2 = SeaweedBasis::new(&comp![2], &comp![2]).unwrap();
        // positions: e11, e12, e21, e22
        let f = [11, 12, 21, 22];
        assert_eq!(bracket_functional(&gl2, &f, 1, 1), 0);
        // [e12, e21] = e11 − e22
        assert_eq!(bracket_functional(&gl2, &f, 1, 2), sub_mod(11, 22));
        // [e11, e12] = e12
        assert_eq!(bracket_functional(&gl2, &f, 0, 1), 12);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn kirillov_matrix_is_antisymmetric() {
        let basis = SeaweedBasis::new(&comp![2, 4, 3], &comp![5, 2, 2]).unwrap();
        let s = sample_form(&basis, 7, 0);
        let m = kirillov_matrix(&basis, &s.functional);
        for u in 0..basis.dim() {
            for v in 0..basis.dim() {
                assert_eq!((m[u][v] + m[v][u]) % PRIME, 0);
            }
        }
        assert_eq!(s.rank % 2, 0);
    }

    #[test]
    fn rank_small_matrices() {
        assert_eq!(rank_mod_p(vec![]), 0);
        assert_eq!(rank_mod_p(vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_mod_p(vec![vec![0, 1], vec![PRIME - 1, 0]]), 2);
        assert_eq!(inv_mod(3) * 3 % PRIME, 1);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(index_via_form(&comp![2], &comp![2], 5, 0).unwrap(), 2);
        assert_eq!(index_via_form(&comp![1, 1], &comp![2], 5, 0).unwrap(), 1);
        assert_eq!(
            index_via_form(&comp![2, 4, 3], &comp![5, 2, 2], 5, 0).unwrap(),
            3
        );
        assert_eq!(
            index_via_form(&comp![5, 1, 2, 4], &comp![12], 5, 0).unwrap(),
            1
        );
    }

    #[test]
    fn oracle_is_reproducible() {
        let basis = SeaweedBasis::new(&comp![3, 2], &comp![1, 4]).unwrap();
        assert_eq!(sample_form(&basis, 1, 2), sample_form(&basis, 1, 2));
        assert_ne!(
            sample_form(&basis, 1, 2).functional,
            sample_form(&basis, 1, 3).functional
        );
    }

    #[test]
    fn oracle_guards() {
        assert!(matches!(
            index_via_form(&comp![1], &comp![1], 0, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            index_via_form(&comp![100], &comp![100], 1, 0),
            Err(Error::TooLarge { .. })
        ));
    }
}
