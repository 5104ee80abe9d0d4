//! Exact matrix rank over ℚ and GF(p).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::FieldSpec;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            FieldSpec::Prime(p) => rank_mod_p(self, p as u64),
            FieldSpec::Rationals => rank_rational(self),
        }
    }
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let cols = m.cols;
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    a.retain(|r| r.iter().any(|&v| v != 0));
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_pow(a[rank][col], p - 2, p);
        for j in col..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            let factor = r[col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                r[j] = (r[j] + p * p - factor * prow[j] % p) % p;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Fraction-free (Bareiss) elimination in `i128`, redone with big integers
/// if an intermediate minor overflows.
fn rank_rational(m: &IntMatrix) -> usize {
    let rows: Vec<Vec<i128>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|&v| v as i128).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&v| v != 0))
        .collect();
    if let Some(rank) = bareiss_i128(rows) {
        return rank;
    }
    let rows: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    bareiss_big(rows)
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = prow[col];
        for r in tail.iter_mut() {
            let f = r[col];
            for j in col + 1..cols {
                let v = r[j].checked_mul(p)?.checked_sub(f.checked_mul(prow[j])?)?;
                debug_assert_eq!(v % prev, 0);
                r[j] = v / prev;
            }
            r[col] = 0;
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = prow[col].clone();
        for r in tail.iter_mut() {
            let f = r[col].clone();
            for j in col + 1..cols {
                let v = &r[j] * &p - &f * &prow[j];
                r[j] = v / &prev;
            }
            r[col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
