//! Codewords, minimal codewords and Hamming weight enumerators.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};
use crate::matrix::ParityCheckMatrix;

/// Largest code dimension accepted for exhaustive enumeration.
pub const DEFAULT_K_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    bits: BitVec,
    weight: usize,
}

impl Codeword {
    pub fn new(h: &ParityCheckMatrix, bits: BitVec) -> Result<Self> {
        if bits.len() != h.n() {
            return Err(Error::LengthMismatch { expected: h.n(), found: bits.len() });
        }
        if !h.syndrome_is_zero(&bits) {
            return Err(Error::NotACodeword);
        }
        Ok(Self::new_unchecked(bits))
    }

    fn new_unchecked(bits: BitVec) -> Self {
        let weight = bits.weight();
        Self { bits, weight }
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn support(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn to_vec(&self) -> Vec<i64> {
        (0..self.bits.len()).map(|i| i64::from(self.bits.get(i))).collect()
    }
}

/// Hamming weight enumerator: weight -> number of words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightEnumerator(pub BTreeMap<usize, u64>);

impl WeightEnumerator {
    pub fn from_weights(weights: impl IntoIterator<Item = usize>) -> Self {
        let mut map = BTreeMap::new();
        for w in weights {
            *map.entry(w).or_insert(0) += 1;
        }
        Self(map)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.0.get(&weight).copied().unwrap_or(0)
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.0.keys().copied().find(|&w| w > 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().map(|(&w, &c)| (w, c))
    }
}

/// GF(2) rank of a binary matrix given as rows.
pub fn gf2_rank(h: &ParityCheckMatrix) -> usize {
    gf2::rank(&h.bit_rows(), h.n())
}

pub fn dimension(h: &ParityCheckMatrix) -> usize {
    h.n() - gf2_rank(h)
}

/// Basis of the code, one vector per free column of the row-reduced `H`.
pub fn code_basis(h: &ParityCheckMatrix) -> Vec<BitVec> {
    gf2::nullspace(&h.bit_rows(), h.n())
}

/// All `2^k` codewords, in Gray-code order starting from zero.
pub fn enumerate_codewords(h: &ParityCheckMatrix, k_limit: usize) -> Result<Vec<Codeword>> {
    let basis = code_basis(h);
    let k = basis.len();
    if k > k_limit {
        return Err(Error::DimensionTooLarge { dimension: k, limit: k_limit });
    }
    let mut words = Vec::with_capacity(1 << k);
    let mut current = BitVec::zeros(h.n());
    words.push(Codeword::new_unchecked(current.clone()));
    for step in 1u64..(1u64 << k) {
        current.xor_assign(&basis[step.trailing_zeros() as usize]);
        words.push(Codeword::new_unchecked(current.clone()));
    }
    Ok(words)
}

/// GF(2) rank of the columns of `h` indexed by `support`.
pub fn column_rank(h: &ParityCheckMatrix, support: &[usize]) -> usize {
    let cols: Vec<BitVec> = support.iter().map(|&i| BitVec::from_indices(h.m(), h.col(i))).collect();
    gf2::rank(&cols, h.m())
}

/// A nonzero codeword is minimal iff the columns on its support have rank
/// `w_H(x) - 1`.
pub fn is_minimal_codeword(h: &ParityCheckMatrix, x: &BitVec) -> Result<bool> {
    if x.len() != h.n() {
        return Err(Error::LengthMismatch { expected: h.n(), found: x.len() });
    }
    if !h.syndrome_is_zero(x) {
        return Err(Error::NotACodeword);
    }
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    let support: Vec<usize> = x.ones().collect();
    Ok(column_rank(h, &support) == support.len() - 1)
}

pub fn min_distance(h: &ParityCheckMatrix) -> Result<usize> {
    let words = enumerate_codewords(h, DEFAULT_K_LIMIT)?;
    Ok(words.iter().map(Codeword::weight).filter(|&w| w > 0).min().unwrap_or(0))
}

/// Minimal codewords, in enumeration order.
pub fn minimal_codewords(h: &ParityCheckMatrix, words: &[Codeword]) -> Vec<Codeword> {
    words
        .iter()
        .filter(|c| c.weight() > 0 && is_minimal_codeword(h, c.bits()).unwrap_or(false))
        .cloned()
        .collect()
}

/// Full and minimal Hamming weight enumerators.
pub fn hamming_spectra(h: &ParityCheckMatrix) -> Result<(WeightEnumerator, WeightEnumerator)> {
    let words = enumerate_codewords(h, DEFAULT_K_LIMIT)?;
    let full = WeightEnumerator::from_weights(words.iter().map(Codeword::weight));
    let minimal = WeightEnumerator::from_weights(minimal_codewords(h, &words).iter().map(Codeword::weight));
    Ok((full, minimal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_eg_plane_reduced, build_pg_plane, incidence_matrix, Ordering};

    fn fano() -> ParityCheckMatrix {
        ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap()
    }

    #[test]
    fn identity_rank() {
        let h = ParityCheckMatrix::from_row_supports(5, (0..5).map(|i| alloc::vec![i]).collect()).unwrap();
        assert_eq!(gf2_rank(&h), 5);
    }

    #[test]
    fn fano_code() {
        let h = fano();
        assert_eq!(gf2_rank(&h), 4);
        let words = enumerate_codewords(&h, DEFAULT_K_LIMIT).unwrap();
        assert_eq!(words.len(), 8);
        let (full, minimal) = hamming_spectra(&h).unwrap();
        assert_eq!(full.0, BTreeMap::from([(0, 1), (4, 7)]));
        assert_eq!(minimal.0, BTreeMap::from([(4, 7)]));
        assert_eq!(min_distance(&h).unwrap(), 4);
    }

    #[test]
    fn minimality_errors() {
        let h = fano();
        assert_eq!(is_minimal_codeword(&h, &BitVec::zeros(7)), Err(Error::ZeroVector));
        assert_eq!(
            is_minimal_codeword(&h, &BitVec::from_bits(&[1, 0, 0, 0, 0, 0, 0])),
            Err(Error::NotACodeword)
        );
    }

    #[test]
    fn dimension_guard() {
        let h = incidence_matrix(&build_pg_plane(8).unwrap(), Ordering::Circulant);
        assert_eq!(dimension(&h), 45);
        assert!(matches!(
            enumerate_codewords(&h, DEFAULT_K_LIMIT),
            Err(Error::DimensionTooLarge { dimension: 45, .. })
        ));
    }

    #[test]
    fn eg4_rank() {
        let h = incidence_matrix(&build_eg_plane_reduced(4).unwrap(), Ordering::Natural);
        assert_eq!(gf2_rank(&h), 8);
    }
}
