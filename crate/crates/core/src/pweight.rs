//! AWGNC, BSC and BEC pseudo-weights, their spectra over a set of
//! pseudo-codeword classes, and the spectrum gap.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::cone::PseudoCodeword;
use crate::error::{Error, Result};
use crate::lincode::is_minimal_codeword;
use crate::matrix::ParityCheckMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Channel {
    Awgnc,
    Bsc,
    Bec,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Awgnc, Channel::Bsc, Channel::Bec];

    pub fn name(self) -> &'static str {
        match self {
            Channel::Awgnc => "awgnc",
            Channel::Bsc => "bsc",
            Channel::Bec => "bec",
        }
    }
}

fn check_nonneg(w: &[Rational]) -> Result<()> {
    match w.iter().position(Signed::is_negative) {
        Some(i) => Err(Error::NegativeEntry(i)),
        None => Ok(()),
    }
}

/// `||w||_1^2 / ||w||_2^2`, or 0 for the zero vector.
pub fn awgnc_pw(w: &[Rational]) -> Result<Rational> {
    check_nonneg(w)?;
    let l1: Rational = w.iter().sum();
    let l2: Rational = w.iter().map(|x| x * x).sum();
    if l2.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(&l1 * &l1 / l2)
}

/// `2e`, where `e` is the point at which the cumulative sum of the
/// entries sorted in non-increasing order reaches half the total.
pub fn bsc_pw(w: &[Rational]) -> Result<Rational> {
    check_nonneg(w)?;
    let mut sorted: Vec<Rational> = w.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let total: Rational = sorted.iter().sum();
    if total.is_zero() {
        return Ok(Rational::zero());
    }
    let half = total / Rational::from_integer(2.into());
    let mut prefix = Rational::zero();
    for (i, v) in sorted.iter().enumerate() {
        let next = &prefix + v;
        if next >= half {
            let xi = Rational::from_integer(i.into()) + (&half - &prefix) / v;
            return Ok(xi * Rational::from_integer(2.into()));
        }
        prefix = next;
    }
    unreachable!("the prefix sums reach the total")
}

/// Support size.
pub fn bec_pw(w: &[Rational]) -> Result<Rational> {
    check_nonneg(w)?;
    Ok(Rational::from_integer(w.iter().filter(|x| !x.is_zero()).count().into()))
}

pub fn pseudo_weight(w: &[Rational], channel: Channel) -> Result<Rational> {
    match channel {
        Channel::Awgnc => awgnc_pw(w),
        Channel::Bsc => bsc_pw(w),
        Channel::Bec => bec_pw(w),
    }
}

/// Pseudo-weight of a class representative.
pub fn class_pw(w: &PseudoCodeword, channel: Channel) -> Rational {
    pseudo_weight(&w.to_rationals(), channel).expect("representatives are non-negative")
}

/// Pseudo-weight -> number of classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Spectrum(pub BTreeMap<Rational, u64>);

impl Spectrum {
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn count(&self, pw: &Rational) -> u64 {
        self.0.get(pw).copied().unwrap_or(0)
    }

    pub fn min(&self) -> Option<&Rational> {
        self.0.keys().next()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, u64)> + '_ {
        self.0.iter().map(|(k, &v)| (k, v))
    }

    pub fn merge(&mut self, other: &Spectrum) {
        for (k, v) in other.terms() {
            *self.0.entry(k.clone()).or_insert(0) += v;
        }
    }
}

pub fn pw_spectrum(classes: &[PseudoCodeword], channel: Channel) -> Spectrum {
    let mut map = BTreeMap::new();
    for c in classes {
        *map.entry(class_pw(c, channel)).or_insert(0) += 1;
    }
    Spectrum(map)
}

pub fn min_pw(classes: &[PseudoCodeword], channel: Channel) -> Result<Rational> {
    classes
        .iter()
        .map(|c| class_pw(c, channel))
        .min()
        .ok_or_else(|| Error::InvalidArgument("no classes".into()))
}

/// `true` for classes that are multiples of minimal codewords.
pub fn is_minimal_codeword_class(h: &ParityCheckMatrix, w: &PseudoCodeword) -> bool {
    w.is_binary() && w.is_codeword(h) && is_minimal_codeword(h, &w.to_bitvec()).unwrap_or(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub channel: Channel,
    /// Smallest pseudo-weight among classes that are not minimal codewords.
    pub min_noncodeword_pw: Option<Rational>,
    pub d_min: usize,
    /// `min_noncodeword_pw - d_min`.
    pub gap: Option<Rational>,
    /// `false` when the classes come from a partial search; the true gap is
    /// then at most the reported one.
    pub exhaustive: bool,
}

pub fn spectrum_gap(
    h: &ParityCheckMatrix,
    classes: &[PseudoCodeword],
    channel: Channel,
    d_min: usize,
    exhaustive: bool,
) -> GapReport {
    let min_noncodeword_pw = classes
        .iter()
        .filter(|c| !is_minimal_codeword_class(h, c))
        .map(|c| class_pw(c, channel))
        .min();
    let gap = min_noncodeword_pw
        .as_ref()
        .map(|m| m - Rational::from_integer(d_min.into()));
    GapReport { channel, min_noncodeword_pw, d_min, gap, exhaustive }
}
