//! Packed binary vectors and Gaussian elimination over GF(2).

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_count(&self, other: &BitVec) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `true` if every set bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }

    /// Dot product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        self.and_count(other) % 2 == 1
    }
}

/// Reduced row echelon form over GF(2) with pivots taken left to right.
/// Returns the reduced rows (nonzero ones only) and their pivot columns.
pub fn row_reduce(rows: &[BitVec], ncols: usize) -> (Vec<BitVec>, Vec<usize>) {
    let mut work: Vec<BitVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..work.len()).find(|&r| work[r].get(col)) else {
            continue;
        };
        work.swap(rank, pivot);
        let pivot_row = work[rank].clone();
        for r in 0..work.len() {
            if r != rank && work[r].get(col) {
                work[r].xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    work.truncate(rank);
    (work, pivots)
}

pub fn rank(rows: &[BitVec], ncols: usize) -> usize {
    row_reduce(rows, ncols).1.len()
}

/// Basis of the right kernel `{x : M x = 0}`, one vector per free column
/// in increasing column order.
pub fn nullspace(rows: &[BitVec], ncols: usize) -> Vec<BitVec> {
    let (reduced, pivots) = row_reduce(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = BitVec::zeros(ncols);
        v.set(free, true);
        for (row, &p) in reduced.iter().zip(&pivots) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let rows: Vec<BitVec> = (0..9).map(|i| BitVec::from_indices(9, &[i])).collect();
        assert_eq!(rank(&rows, 9), 9);
        assert!(nullspace(&rows, 9).is_empty());
    }

    #[test]
    fn kernel_vectors_are_orthogonal_to_rows() {
        let rows = [
            BitVec::from_bits(&[1, 1, 0, 1, 0, 0, 0]),
            BitVec::from_bits(&[0, 1, 1, 0, 1, 0, 0]),
            BitVec::from_bits(&[0, 0, 1, 1, 0, 1, 0]),
            BitVec::from_bits(&[1, 0, 1, 0, 0, 1, 0]),
        ];
        let kernel = nullspace(&rows, 7);
        assert_eq!(kernel.len(), 7 - rank(&rows, 7));
        for v in &kernel {
            for r in &rows {
                assert!(!r.dot(v));
            }
        }
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
    }
}
