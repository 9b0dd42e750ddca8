//! Exact rank computations for small integer matrices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

/// Rank over GF(p) for a 61-bit prime. Never exceeds the rational rank.
pub fn rank_mod_p(rows: &[Vec<i64>], ncols: usize) -> usize {
    independent_rows_mod_p(rows, ncols).len()
}

/// Indices of a maximal set of rows independent over GF(p). Rows that are
/// independent modulo p are independent over the rationals.
pub fn independent_rows_mod_p(rows: &[Vec<i64>], ncols: usize) -> Vec<usize> {
    let mut origin: Vec<usize> = (0..rows.len()).collect();
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(PRIME as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        origin.swap(rank, piv);
        let inv = powmod(m[rank][col], PRIME - 2);
        for c in col..ncols {
            m[rank][c] = mulmod(m[rank][c], inv);
        }
        let pivot_row = m[rank].clone();
        for r in rank + 1..m.len() {
            let factor = m[r][col];
            if factor != 0 {
                for c in col..ncols {
                    let sub = mulmod(factor, pivot_row[c]);
                    m[r][c] = (m[r][c] + PRIME - sub) % PRIME;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    origin.truncate(rank);
    origin
}

/// Rational rank by fraction-free (Bareiss) elimination over big integers.
pub fn rank_exact(rows: &[Vec<i64>], ncols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rational rank. The modular rank is a certified lower bound, so when it
/// already reaches `min(rows, cols)` the exact pass is skipped.
pub fn rational_rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    let modular = rank_mod_p(rows, ncols);
    if modular == rows.len().min(ncols) {
        return modular;
    }
    rank_exact(rows, ncols)
}

/// `true` iff the rows have rational rank at least `target`. Uses the
/// modular lower bound first.
pub fn rank_reaches(rows: &[Vec<i64>], ncols: usize, target: usize) -> bool {
    if rows.len() < target {
        return false;
    }
    rank_mod_p(rows, ncols) >= target || rank_exact(rows, ncols) >= target
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut ext = row.clone();
            ext.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
            ext
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for c in col..2 * n {
            a[col][c] = &a[col][c] / &p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for c in col..2 * n {
                    let d = &f * &pivot_row[c];
                    row[c] -= d;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// The primitive integer generator of the null space when it is
/// one-dimensional, with its first nonzero entry positive.
pub fn kernel_vector(rows: &[Vec<i64>], ncols: usize) -> Option<Vec<BigInt>> {
    if ncols == 0 {
        return None;
    }
    let picked = independent_rows_mod_p(rows, ncols);
    let chosen: Vec<&Vec<i64>> = if picked.len() == ncols - 1 {
        picked.iter().map(|&r| &rows[r]).collect()
    } else {
        rows.iter().collect()
    };
    let mut m: Vec<Vec<Rational>> = chosen
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col].clone();
        for c in col..ncols {
            m[rank][c] = &m[rank][c] / &p;
        }
        let pivot_row = m[rank].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let d = &f * &pivot_row[c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    if rank != ncols - 1 {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut v = alloc::vec![Rational::zero(); ncols];
    v[free] = Rational::one();
    for (r, &p) in pivots.iter().enumerate() {
        v[p] = -m[r][free].clone();
    }
    let denom = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(denom.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let sign = if ints.iter().find(|x| !x.is_zero())?.is_negative() { -BigInt::one() } else { BigInt::one() };
    Some(ints.iter().map(|x| x / &g * &sign).collect())
}

/// A basis of the rational null space as primitive integer vectors.
pub fn nullspace_basis(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col].clone();
        for c in col..ncols {
            m[rank][c] = &m[rank][c] / &p;
        }
        let pivot_row = m[rank].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let d = &f * &pivot_row[c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = alloc::vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][free].clone();
            }
            let denom = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> =
                v.iter().map(|x| (x * Rational::from_integer(denom.clone())).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            ints.iter().map(|x| x / &g).collect()
        })
        .collect()
}
