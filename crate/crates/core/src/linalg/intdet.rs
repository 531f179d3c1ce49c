//! Exact integer determinants via Bareiss fraction-free elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Square matrix with exact integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigIntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl BigIntMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let data = (0..n * n)
            .map(|k| BigInt::from(f(k / n, k % n)))
            .collect();
        BigIntMatrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        BigIntMatrix::from_fn(n, |i, j| i64::from(i == j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

/// Exact determinant by Bareiss' algorithm; every intermediate division is
/// exact, so no rounding occurs anywhere.
pub fn bareiss_det(m: &BigIntMatrix) -> BigInt {
    let n = m.n;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.data.clone();
    let idx = |i: usize, j: usize| i * n + j;
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[idx(k, k)].is_zero() {
            // pivot search below row k
            match (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(idx(k, c), idx(r, c));
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                a[idx(i, j)] = num / &prev;
            }
            a[idx(i, k)] = BigInt::zero();
        }
        prev = a[idx(k, k)].clone();
    }
    let det = a[idx(n - 1, n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
