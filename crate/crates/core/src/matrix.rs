//! Binary parity-check matrices with row and column index sets.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// An `m x n` binary parity-check matrix.
///
/// Rows are checks, columns are variables. Both the per-row supports
/// (`I_j`) and the per-column supports (`J_i`) are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    n: usize,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
    circulant: bool,
}

impl ParityCheckMatrix {
    /// Builds a matrix from the support of each row.
    pub fn from_row_supports(n: usize, supports: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = supports;
        let mut cols = vec![Vec::new(); n];
        for (j, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            row.dedup();
            for &i in row.iter() {
                if i >= n {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "row {j} references column {i} but n = {n}"
                    )));
                }
                cols[i].push(j);
            }
        }
        let mut h = Self { n, rows, cols, circulant: false };
        h.circulant = h.detect_circulant();
        Ok(h)
    }

    pub fn from_dense(dense: &[Vec<u8>]) -> Result<Self> {
        let n = dense.first().map_or(0, Vec::len);
        let mut supports = Vec::with_capacity(dense.len());
        for row in dense {
            if row.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: row.len() });
            }
            supports.push(row.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i).collect());
        }
        Self::from_row_supports(n, supports)
    }

    /// Circulant matrix whose row `j` is `first_row` shifted right by `j`.
    pub fn circulant(n: usize, first_row: &[usize]) -> Result<Self> {
        let supports = (0..n)
            .map(|j| first_row.iter().map(|&i| (i + j) % n).collect())
            .collect();
        Self::from_row_supports(n, supports)
    }

    fn detect_circulant(&self) -> bool {
        if self.rows.len() != self.n || self.n == 0 {
            return false;
        }
        let first = &self.rows[0];
        self.rows.iter().enumerate().all(|(j, row)| {
            let mut shifted: Vec<usize> = first.iter().map(|&i| (i + j) % self.n).collect();
            shifted.sort_unstable();
            &shifted == row
        })
    }

    /// Number of columns (code length).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows (checks).
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn is_circulant(&self) -> bool {
        self.circulant
    }

    /// First row support when the matrix is circulant.
    pub fn circulant_generator(&self) -> Option<&[usize]> {
        self.circulant.then(|| self.rows[0].as_slice())
    }

    /// `I_j`, the columns checked by row `j`.
    pub fn row(&self, j: usize) -> &[usize] {
        &self.rows[j]
    }

    /// `J_i`, the rows that check column `i`.
    pub fn col(&self, i: usize) -> &[usize] {
        &self.cols[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, j: usize, i: usize) -> bool {
        self.rows[j].binary_search(&i).is_ok()
    }

    pub fn num_incidences(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Common column weight, if all columns have the same weight.
    pub fn column_weight(&self) -> Option<usize> {
        uniform(self.cols.iter().map(Vec::len))
    }

    /// Common row weight, if all rows have the same weight.
    pub fn row_weight(&self) -> Option<usize> {
        uniform(self.rows.iter().map(Vec::len))
    }

    pub fn max_row_weight(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_col_weight(&self) -> usize {
        self.cols.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn dense(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|row| {
                let mut r = vec![0u8; self.n];
                for &i in row {
                    r[i] = 1;
                }
                r
            })
            .collect()
    }

    pub fn bit_rows(&self) -> Vec<BitVec> {
        self.rows.iter().map(|r| BitVec::from_indices(self.n, r)).collect()
    }

    /// Matrix restricted to the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self> {
        Self::from_row_supports(self.n, rows.iter().map(|&j| self.rows[j].clone()).collect())
    }

    /// `H^T H` over the integers: entry `(i, i')` counts rows containing both.
    pub fn gram(&self) -> Vec<Vec<u64>> {
        let mut g = vec![vec![0u64; self.n]; self.n];
        for row in &self.rows {
            for &a in row {
                for &b in row {
                    g[a][b] += 1;
                }
            }
        }
        g
    }

    /// Integer syndrome `H w^T`.
    pub fn integer_syndrome(&self, w: &[i64]) -> Vec<i64> {
        self.rows.iter().map(|row| row.iter().map(|&i| w[i]).sum()).collect()
    }

    /// Syndrome over GF(2) of a binary word.
    pub fn syndrome_is_zero(&self, word: &BitVec) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().filter(|&&i| word.get(i)).count() % 2 == 0)
    }

    /// Applies a column permutation `col_perm` (old column `i` moves to
    /// `col_perm[i]`) and a row permutation `row_perm` likewise.
    pub fn permuted(&self, col_perm: &[usize], row_perm: &[usize]) -> Result<Self> {
        let mut supports = vec![Vec::new(); self.m()];
        for (j, row) in self.rows.iter().enumerate() {
            supports[row_perm[j]] = row.iter().map(|&i| col_perm[i]).collect();
        }
        Self::from_row_supports(self.n, supports)
    }

    /// Canonical form used for comparisons up to simultaneous relabeling of
    /// rows: rows sorted lexicographically.
    pub fn sorted_rows(&self) -> Vec<Vec<usize>> {
        let mut rows = self.rows.clone();
        rows.sort();
        rows
    }
}

fn uniform(mut it: impl Iterator<Item = usize>) -> Option<usize> {
    let first = it.next()?;
    it.all(|w| w == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_rows_are_shifts() {
        let h = ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap();
        assert!(h.is_circulant());
        assert_eq!(h.row(1), &[1, 2, 4]);
        assert_eq!(h.row(6), &[0, 2, 6]);
        assert_eq!(h.column_weight(), Some(3));
        assert_eq!(h.row_weight(), Some(3));
    }

    #[test]
    fn dense_round_trip() {
        let h = ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap();
        assert_eq!(ParityCheckMatrix::from_dense(&h.dense()).unwrap(), h);
    }

    #[test]
    fn rejects_out_of_range_column() {
        assert!(ParityCheckMatrix::from_row_supports(3, alloc::vec![alloc::vec![0, 3]]).is_err());
    }

    #[test]
    fn row_subset_is_not_circulant() {
        let h = ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap();
        let sub = h.select_rows(&[0, 1, 2, 3]).unwrap();
        assert!(!sub.is_circulant());
        assert_eq!(sub.m(), 4);
    }
}
