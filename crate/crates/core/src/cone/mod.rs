//! The fundamental cone `K(H)`: its inequality description, membership and
//! minimality tests, and exact enumeration of its extreme rays (the minimal
//! pseudo-codewords).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::matrix::ParityCheckMatrix;
use crate::rational::{common_denominator, Rational};

pub mod adjacency;
pub mod classes;
pub mod dd;
pub mod linalg;
pub mod overlap;
pub mod search;
pub mod symmetric;

pub use classes::ClassSet;
pub use overlap::{construct_overlap_sum, OverlapCandidate};
pub use symmetric::enumerate_mpcw_symmetric;

/// Largest length accepted by [`enumerate_extreme_rays`] without
/// symmetry reduction.
pub const FULL_DD_MAX_N: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowTag {
    /// `sum_{i' in I_j \ {i}} w_i' - w_i >= 0`.
    Check { check: usize, var: usize },
    /// `w_i >= 0`.
    NonNeg(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRow {
    pub tag: RowTag,
    pub coeffs: Vec<i64>,
}

/// Inequality description `{w : a w >= 0}` of a fundamental cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescription {
    n: usize,
    rows: Vec<ConeRow>,
}

impl ConeDescription {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[ConeRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn position(&self, tag: RowTag) -> Option<usize> {
        self.rows.iter().position(|r| r.tag == tag)
    }

    /// Rows tight at the integer point `w`.
    pub fn tight_rows(&self, w: &[i64]) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| dot_i128(&self.rows[r].coeffs, w) == 0)
            .collect()
    }
}

fn dot_i128(a: &[i64], w: &[i64]) -> i128 {
    a.iter().zip(w).map(|(&x, &y)| i128::from(x) * i128::from(y)).sum()
}

/// Check rows (one per incidence, ordered by check then variable) followed
/// by one non-negativity row per coordinate.
pub fn cone_inequalities(h: &ParityCheckMatrix) -> ConeDescription {
    let n = h.n();
    let mut rows = Vec::with_capacity(h.num_incidences() + n);
    for (j, support) in h.rows().iter().enumerate() {
        for &i in support {
            let mut coeffs = vec![0i64; n];
            for &k in support {
                coeffs[k] = 1;
            }
            coeffs[i] = -1;
            rows.push(ConeRow { tag: RowTag::Check { check: j, var: i }, coeffs });
        }
    }
    for i in 0..n {
        let mut coeffs = vec![0i64; n];
        coeffs[i] = 1;
        rows.push(ConeRow { tag: RowTag::NonNeg(i), coeffs });
    }
    ConeDescription { n, rows }
}

/// Representative of a class of pseudo-codewords under positive scaling:
/// the non-negative integer vector with entry gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PseudoCodeword {
    entries: Vec<i64>,
}

impl PseudoCodeword {
    pub fn from_integers(values: &[i64]) -> Result<Self> {
        if let Some(i) = values.iter().position(|&v| v < 0) {
            return Err(Error::NegativeEntry(i));
        }
        let g = values.iter().fold(0i64, |g, &v| g.gcd(&v));
        if g == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self { entries: values.iter().map(|&v| v / g).collect() })
    }

    /// Smallest positive integer multiple of a non-negative rational vector.
    pub fn normalize(values: &[Rational]) -> Result<Self> {
        if let Some(i) = values.iter().position(Signed::is_negative) {
            return Err(Error::NegativeEntry(i));
        }
        if values.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        let denom = common_denominator(values);
        let ints: Vec<BigInt> = values
            .iter()
            .map(|v| (v * Rational::from_integer(denom.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        let entries = ints
            .iter()
            .map(|v| (v / &g).to_i64().ok_or(Error::Overflow))
            .collect::<Result<Vec<i64>>>()?;
        Ok(Self { entries })
    }

    pub fn from_codeword(word: &BitVec) -> Result<Self> {
        let v: Vec<i64> = word.to_bits().into_iter().map(i64::from).collect();
        Self::from_integers(&v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.entries.iter().map(|&v| Rational::from_integer(v.into())).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| self.entries[i] != 0).collect()
    }

    pub fn max_entry(&self) -> i64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// `true` if all entries are 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|&v| v <= 1)
    }

    pub fn is_codeword(&self, h: &ParityCheckMatrix) -> bool {
        self.is_binary() && h.syndrome_is_zero(&self.to_bitvec())
    }

    /// The entries taken modulo 2.
    pub fn to_bitvec(&self) -> BitVec {
        let bits: Vec<u8> = self.entries.iter().map(|&v| (v & 1) as u8).collect();
        BitVec::from_bits(&bits)
    }

    pub fn type_vector(&self) -> TypeVector {
        TypeVector::of_integers(&self.entries)
    }

    /// Image under a coordinate permutation: entry `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut entries = vec![0; self.entries.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            entries[perm[i]] = v;
        }
        Self { entries }
    }
}

/// Multiplicities of the distinct entry values of a vector.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TypeVector {
    pub zeros: usize,
    pub counts: BTreeMap<Rational, usize>,
}

impl TypeVector {
    pub fn of(values: &[Rational]) -> Self {
        let mut t = Self::default();
        for v in values {
            if v.is_zero() {
                t.zeros += 1;
            } else {
                *t.counts.entry(v.clone()).or_insert(0) += 1;
            }
        }
        t
    }

    pub fn of_integers(values: &[i64]) -> Self {
        let mut t = Self::default();
        for &v in values {
            if v == 0 {
                t.zeros += 1;
            } else {
                *t.counts.entry(Rational::from_integer(v.into())).or_insert(0) += 1;
            }
        }
        t
    }

    /// Count of entries equal to `value` (including zero).
    pub fn count(&self, value: &Rational) -> usize {
        if value.is_zero() {
            self.zeros
        } else {
            self.counts.get(value).copied().unwrap_or(0)
        }
    }

    pub fn count_int(&self, value: i64) -> usize {
        self.count(&Rational::from_integer(value.into()))
    }

    pub fn support_size(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.zeros + self.support_size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Integer syndrome `H w^T` and the rows where it is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeReport {
    pub syndrome: Vec<i64>,
    pub odd_rows: Vec<usize>,
}

pub fn syndrome(h: &ParityCheckMatrix, w: &[i64]) -> Result<SyndromeReport> {
    if w.len() != h.n() {
        return Err(Error::LengthMismatch { expected: h.n(), found: w.len() });
    }
    let syndrome = h.integer_syndrome(w);
    let odd_rows = (0..syndrome.len()).filter(|&j| syndrome[j] % 2 != 0).collect();
    Ok(SyndromeReport { syndrome, odd_rows })
}

/// Every row meeting `set` meets it at least twice. The empty set counts.
pub fn is_stopping_set(h: &ParityCheckMatrix, set: &[usize]) -> bool {
    let mut hits = vec![0usize; h.m()];
    for &i in set {
        for &j in h.col(i) {
            hits[j] += 1;
        }
    }
    hits.iter().all(|&c| c != 1)
}

pub fn is_in_cone_int(h: &ParityCheckMatrix, w: &[i64]) -> bool {
    if w.len() != h.n() || w.iter().any(|&v| v < 0) {
        return false;
    }
    h.rows().iter().all(|row| {
        let total: i128 = row.iter().map(|&i| i128::from(w[i])).sum();
        row.iter().all(|&i| total >= 2 * i128::from(w[i]))
    })
}

pub fn is_in_cone(h: &ParityCheckMatrix, w: &[Rational]) -> bool {
    if w.len() != h.n() || w.iter().any(Signed::is_negative) {
        return false;
    }
    h.rows().iter().all(|row| {
        let total: Rational = row.iter().map(|&i| w[i].clone()).sum();
        row.iter().all(|&i| total >= &w[i] * Rational::from_integer(2.into()))
    })
}

fn tight_matrix(h: &ParityCheckMatrix, w: &[i64]) -> Vec<Vec<i64>> {
    let desc = cone_inequalities(h);
    desc.tight_rows(w)
        .into_iter()
        .map(|r| desc.rows[r].coeffs.clone())
        .collect()
}

/// Rational rank of the rows of `K(H)` tight at `w`.
pub fn tight_rank(h: &ParityCheckMatrix, w: &[i64]) -> usize {
    linalg::rational_rank(&tight_matrix(h, w), h.n())
}

/// The tight rows at a nonzero `w` have rank at most `n - 1`; `w` spans an
/// extreme ray iff that rank is attained.
pub(crate) fn spans_extreme_ray(h: &ParityCheckMatrix, w: &[i64]) -> bool {
    linalg::rank_reaches(&tight_matrix(h, w), h.n(), h.n() - 1)
}

/// `w` spans an extreme ray of `K(H)`: the tight rows have rank `n - 1`.
pub fn is_minimal_pcw(h: &ParityCheckMatrix, w: &[i64]) -> Result<bool> {
    if w.len() != h.n() {
        return Err(Error::LengthMismatch { expected: h.n(), found: w.len() });
    }
    if w.iter().all(|&v| v == 0) {
        return Err(Error::ZeroVector);
    }
    if !is_in_cone_int(h, w) {
        return Err(Error::NotInCone);
    }
    Ok(spans_extreme_ray(h, w))
}

pub fn is_minimal_pcw_rational(h: &ParityCheckMatrix, w: &[Rational]) -> Result<bool> {
    if !is_in_cone(h, w) {
        return Err(Error::NotInCone);
    }
    let p = PseudoCodeword::normalize(w)?;
    is_minimal_pcw(h, p.entries())
}

/// The multiplier (1 or 2) that makes the integer syndrome even.
pub fn cover_multiplier(h: &ParityCheckMatrix, w: &PseudoCodeword) -> i64 {
    if h.integer_syndrome(w.entries()).iter().all(|s| s % 2 == 0) {
        1
    } else {
        2
    }
}

/// Smallest multiple of `w` whose integer syndrome is even everywhere.
pub fn to_cover_realizable(h: &ParityCheckMatrix, w: &PseudoCodeword) -> Vec<i64> {
    let alpha = cover_multiplier(h, w);
    w.entries().iter().map(|&v| v * alpha).collect()
}

/// Extreme rays of `K(H)` by plain double description, sorted.
pub fn enumerate_extreme_rays(h: &ParityCheckMatrix, allow_large: bool) -> Result<Vec<PseudoCodeword>> {
    if h.n() > FULL_DD_MAX_N && !allow_large {
        return Err(Error::SizeGuard(alloc::format!(
            "full enumeration is limited to n <= {FULL_DD_MAX_N} (n = {}); use the symmetric variant",
            h.n()
        )));
    }
    let desc = cone_inequalities(h);
    let (rays, _) = dd::extreme_rays(&desc, &[])?;
    collect_classes(rays)
}

pub(crate) fn collect_classes(rays: Vec<Vec<i64>>) -> Result<Vec<PseudoCodeword>> {
    let mut out = rays
        .iter()
        .map(|r| PseudoCodeword::from_integers(r))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}
