//! Channels, log-likelihood ratios and decoding decisions under the
//! all-zero codeword convention: exact ML and LP decision-region tests,
//! an exact LP decoder, a floating point sum-product decoder, and the
//! BSC/BEC analyses built on them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::cone::{cover_multiplier, is_in_cone_int, ClassSet, PseudoCodeword};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::matrix::ParityCheckMatrix;
use crate::pweight::{class_pw, Channel as PwChannel};
use crate::rational::Rational;
use crate::simplex::{solve_exact, LpStatus};
use crate::subsets::{binomial, for_each_subset};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Channel {
    /// Antipodal signaling `0 -> +1`, `1 -> -1` with Gaussian noise.
    Awgnc { sigma: f64 },
    Bsc { p: f64 },
    Bec { eps: f64 },
}

impl Channel {
    pub fn awgnc(sigma: f64) -> Result<Self> {
        if sigma.is_nan() || sigma <= 0.0 {
            return Err(Error::InvalidArgument("sigma must be positive".into()));
        }
        Ok(Channel::Awgnc { sigma })
    }

    pub fn bsc(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 0.5) {
            return Err(Error::InvalidArgument("flip probability must lie in (0, 1/2)".into()));
        }
        Ok(Channel::Bsc { p })
    }

    pub fn bec(eps: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eps) {
            return Err(Error::InvalidArgument("erasure probability must lie in [0, 1]".into()));
        }
        Ok(Channel::Bec { eps })
    }

    /// Noise level for a given `Es/N0` in dB: `sigma^2 = 1 / (2 Es/N0)`.
    pub fn awgnc_from_es_n0_db(es_n0_db: f64) -> Result<Self> {
        let es_n0 = libm::pow(10.0, es_n0_db / 10.0);
        Self::awgnc(libm::sqrt(1.0 / (2.0 * es_n0)))
    }
}

/// `ln((1 - p) / p)`.
pub fn bsc_magnitude(p: f64) -> f64 {
    libm::log((1.0 - p) / p)
}

/// `2 y_i / sigma^2` for received values `y`.
pub fn awgnc_llr(sigma: f64, received: &[f64]) -> Vec<f64> {
    received.iter().map(|y| 2.0 * y / (sigma * sigma)).collect()
}

/// `-L` on flipped positions, `+L` elsewhere.
pub fn bsc_llr(p: f64, flipped: &[bool]) -> Vec<f64> {
    let l = bsc_magnitude(p);
    flipped.iter().map(|&f| if f { -l } else { l }).collect()
}

/// `0` on erased positions, `+inf` elsewhere.
pub fn bec_llr(erased: &[bool]) -> Vec<f64> {
    erased.iter().map(|&e| if e { 0.0 } else { f64::INFINITY }).collect()
}

/// An exact log-likelihood ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Llr {
    Finite(Rational),
    PosInf,
}

impl Llr {
    pub fn int(v: i64) -> Self {
        Llr::Finite(Rational::from_integer(v.into()))
    }
}

/// BSC LLRs scaled to `L = 1` (decisions are scale invariant).
pub fn bsc_llr_exact(n: usize, flips: &[usize]) -> Vec<Llr> {
    let mut out = vec![Llr::int(1); n];
    for &i in flips {
        out[i] = Llr::int(-1);
    }
    out
}

pub fn bec_llr_exact(n: usize, erasures: &[usize]) -> Vec<Llr> {
    let mut out = vec![Llr::PosInf; n];
    for &i in erasures {
        out[i] = Llr::int(0);
    }
    out
}

/// `<w, llr>`; `None` stands for `+inf`.
pub fn inner(w: &[i64], llr: &[Llr]) -> Option<Rational> {
    let mut acc = Rational::zero();
    for (&x, l) in w.iter().zip(llr) {
        if x == 0 {
            continue;
        }
        match l {
            Llr::PosInf => return None,
            Llr::Finite(v) => acc += v * Rational::from_integer(x.into()),
        }
    }
    Some(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    ZeroWins,
    /// Some vector has strictly negative cost; `witness` indexes it when the
    /// decision came from a list.
    Loses { witness: Option<usize> },
    /// The minimum cost is exactly zero and attained off the origin.
    Tie { witnesses: Vec<usize> },
}

impl Verdict {
    pub fn zero_wins(&self) -> bool {
        matches!(self, Verdict::ZeroWins)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub verdict: Verdict,
    /// Smallest `<w, llr>` over the list; `None` if all are `+inf` or the
    /// list is empty.
    pub min_value: Option<Rational>,
}

/// Zero is decoded iff every vector has positive cost.
pub fn zero_region_test<'a>(vectors: impl IntoIterator<Item = &'a [i64]>, llr: &[Llr]) -> DecodeOutcome {
    let mut min_value: Option<Rational> = None;
    let mut first_negative = None;
    let mut ties = Vec::new();
    for (k, w) in vectors.into_iter().enumerate() {
        let Some(v) = inner(w, llr) else { continue };
        if v.is_negative() && first_negative.is_none() {
            first_negative = Some(k);
        }
        if v.is_zero() {
            ties.push(k);
        }
        if min_value.as_ref().is_none_or(|m| v < *m) {
            min_value = Some(v);
        }
    }
    let verdict = if first_negative.is_some() {
        Verdict::Loses { witness: first_negative }
    } else if !ties.is_empty() {
        Verdict::Tie { witnesses: ties }
    } else {
        Verdict::ZeroWins
    };
    DecodeOutcome { verdict, min_value }
}

fn bits_to_ints(words: &[BitVec]) -> Vec<Vec<i64>> {
    words.iter().map(|w| w.to_bits().into_iter().map(i64::from).collect()).collect()
}

/// ML decision via the minimal codewords (they alone shape the ML region
/// of the zero codeword).
pub fn ml_decode_zero_region(llr: &[Llr], minimal_codewords: &[BitVec]) -> DecodeOutcome {
    let ints = bits_to_ints(minimal_codewords);
    zero_region_test(ints.iter().map(Vec::as_slice), llr)
}

/// LP decision via the minimal pseudo-codewords.
pub fn lp_decode_zero_region(llr: &[Llr], classes: &[PseudoCodeword]) -> DecodeOutcome {
    zero_region_test(classes.iter().map(PseudoCodeword::entries), llr)
}

/// Floating point region test used by simulations: `true` if some vector has
/// cost `<= 0` (a tie or a loss).
pub fn zero_region_fails_f64(vectors: &[Vec<f64>], llr: &[f64]) -> (bool, bool) {
    let mut tie = false;
    for w in vectors {
        let mut acc = 0.0;
        for (&x, &l) in w.iter().zip(llr) {
            if x != 0.0 {
                acc += x * l;
            }
        }
        if acc < 0.0 {
            return (true, false);
        }
        if acc == 0.0 {
            tie = true;
        }
    }
    (tie, tie)
}

/// Largest row weight accepted by [`lp_decode_simplex`].
pub const LP_MAX_ROW_WEIGHT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpDecodeResult {
    pub verdict: Verdict,
    pub value: Rational,
    pub vertex: Vec<Rational>,
}

/// Inequalities of the relaxation: for each check and each odd subset `S`
/// of its support, `sum_S x - sum_{rest} x <= |S| - 1`, plus `x <= 1`.
/// Variables in `fixed_zero` are dropped.
fn polytope_rows(h: &ParityCheckMatrix, keep: &[usize]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let n = h.n();
    let mut pos = vec![usize::MAX; n];
    for (k, &i) in keep.iter().enumerate() {
        pos[i] = k;
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for row in h.rows() {
        let d = row.len();
        for mask in 0u32..(1 << d) {
            if mask.count_ones() % 2 == 0 {
                continue;
            }
            let mut coeffs = vec![Rational::zero(); keep.len()];
            let mut any = false;
            for (t, &i) in row.iter().enumerate() {
                if pos[i] == usize::MAX {
                    continue;
                }
                any = true;
                coeffs[pos[i]] = Rational::from_integer(if mask >> t & 1 == 1 { 1 } else { -1 }.into());
            }
            if any {
                a.push(coeffs);
                b.push(Rational::from_integer((i64::from(mask.count_ones()) - 1).into()));
            }
        }
    }
    for k in 0..keep.len() {
        let mut coeffs = vec![Rational::zero(); keep.len()];
        coeffs[k] = Rational::from_integer(1.into());
        a.push(coeffs);
        b.push(Rational::from_integer(1.into()));
    }
    (a, b)
}

/// Exact LP decoding `min <x, llr>` over the relaxation polytope. Positions
/// with infinite LLR are fixed to 0. Ties are detected by maximizing
/// `sum x` over the optimal face when the optimum is 0.
pub fn lp_decode_simplex(h: &ParityCheckMatrix, llr: &[Llr]) -> Result<LpDecodeResult> {
    let n = h.n();
    if llr.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: llr.len() });
    }
    if h.max_row_weight() > LP_MAX_ROW_WEIGHT {
        return Err(Error::SizeGuard(alloc::format!(
            "row weight {} exceeds {LP_MAX_ROW_WEIGHT}",
            h.max_row_weight()
        )));
    }
    let keep: Vec<usize> = (0..n).filter(|&i| llr[i] != Llr::PosInf).collect();
    let c: Vec<Rational> = keep
        .iter()
        .map(|&i| match &llr[i] {
            Llr::Finite(v) => v.clone(),
            Llr::PosInf => unreachable!(),
        })
        .collect();
    let (mut a, mut b) = polytope_rows(h, &keep);
    let pivots = 100 * (a.len() + keep.len());
    let LpStatus::Optimal { x, value, .. } = solve_exact(&a, &b, &c, pivots)? else {
        unreachable!("the polytope is bounded")
    };
    let expand = |x: &[Rational]| {
        let mut v = vec![Rational::zero(); n];
        for (k, &i) in keep.iter().enumerate() {
            v[i] = x[k].clone();
        }
        v
    };
    if value.is_negative() {
        return Ok(LpDecodeResult { verdict: Verdict::Loses { witness: None }, value, vertex: expand(&x) });
    }
    // optimum is 0: is the origin the only optimal point?
    a.push(c.clone());
    b.push(Rational::zero());
    let neg_ones = vec![Rational::from_integer((-1).into()); keep.len()];
    let LpStatus::Optimal { x: x2, value: v2, .. } = solve_exact(&a, &b, &neg_ones, pivots)? else {
        unreachable!("the polytope is bounded")
    };
    if v2.is_negative() {
        Ok(LpDecodeResult { verdict: Verdict::Tie { witnesses: Vec::new() }, value, vertex: expand(&x2) })
    } else {
        Ok(LpDecodeResult { verdict: Verdict::ZeroWins, value, vertex: vec![Rational::zero(); n] })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProductResult {
    pub bits: Vec<u8>,
    /// A codeword was reached with every bit decided.
    pub converged: bool,
    pub iterations: usize,
}

/// Default iteration cap for the sum-product decoder.
pub const SP_MAX_ITERS: usize = 100;

const MSG_CLAMP: f64 = 40.0;

/// Flooding-schedule sum-product decoding in the LLR domain. Positions with
/// a total LLR of exactly 0 are undecided and prevent convergence.
pub fn sum_product_decode(h: &ParityCheckMatrix, llr: &[f64], max_iters: usize) -> SumProductResult {
    let n = h.n();
    // edge e = (check j, slot t); var_edges[i] lists edge ids touching i
    let mut edge_var = Vec::new();
    let mut check_edges: Vec<Vec<usize>> = Vec::with_capacity(h.m());
    for row in h.rows() {
        let mut ids = Vec::with_capacity(row.len());
        for &i in row {
            ids.push(edge_var.len());
            edge_var.push(i);
        }
        check_edges.push(ids);
    }
    let mut var_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &i) in edge_var.iter().enumerate() {
        var_edges[i].push(e);
    }
    let mut c2v = vec![0.0f64; edge_var.len()];
    let mut v2c = vec![0.0f64; edge_var.len()];
    let mut bits = vec![0u8; n];
    let decide = |c2v: &[f64], bits: &mut [u8]| -> bool {
        let mut decided = true;
        for i in 0..n {
            let total = llr[i] + var_edges[i].iter().map(|&e| c2v[e]).sum::<f64>();
            bits[i] = u8::from(total < 0.0);
            if total == 0.0 || total.is_nan() {
                decided = false;
            }
        }
        decided
    };
    if decide(&c2v, &mut bits) && h.syndrome_is_zero(&BitVec::from_bits(&bits)) {
        return SumProductResult { bits, converged: true, iterations: 0 };
    }
    for iter in 1..=max_iters {
        for i in 0..n {
            for &e in &var_edges[i] {
                let others: f64 = var_edges[i].iter().filter(|&&f| f != e).map(|&f| c2v[f]).sum();
                v2c[e] = llr[i] + others;
            }
        }
        for edges in &check_edges {
            for &e in edges {
                let mut prod = 1.0;
                for &f in edges {
                    if f != e {
                        prod *= libm::tanh(v2c[f].clamp(-MSG_CLAMP, MSG_CLAMP) / 2.0);
                    }
                }
                let limit = 1.0 - 1e-15;
                c2v[e] = 2.0 * libm::atanh(prod.clamp(-limit, limit));
            }
        }
        if decide(&c2v, &mut bits) && h.syndrome_is_zero(&BitVec::from_bits(&bits)) {
            return SumProductResult { bits, converged: true, iterations: iter };
        }
    }
    SumProductResult { bits, converged: false, iterations: max_iters }
}

/// The vector with `q` on the flip set and 1 elsewhere (a multiple of
/// `1` on flips, `1/q` elsewhere). For `PG(2,q)` it always lies in the cone.
pub fn canonical_completion(h: &ParityCheckMatrix, q: u32, flips: &[usize]) -> Result<PseudoCodeword> {
    let mut w = vec![1i64; h.n()];
    for &i in flips {
        if i >= h.n() {
            return Err(Error::InvalidArgument(alloc::format!("flip position {i} out of range")));
        }
        w[i] = i64::from(q);
    }
    if !is_in_cone_int(h, &w) {
        return Err(Error::NotInCone);
    }
    PseudoCodeword::from_integers(&w)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RadiusRow {
    pub flips: usize,
    pub patterns: u64,
    pub zero_wins: u64,
    pub ties: u64,
    pub loses: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusReport {
    /// `q / 2`.
    pub guaranteed: usize,
    /// Every pattern of `guaranteed` flips decodes to zero.
    pub guaranteed_holds: bool,
    /// `q + 1`.
    pub failure_size: usize,
    /// Every pattern of `failure_size` flips has a canonical completion with
    /// negative cost.
    pub failure_holds: bool,
    pub table: Vec<RadiusRow>,
}

/// Largest number of patterns swept per radius.
pub const MAX_PATTERNS: u64 = 5_000_000;

fn sweep(n: usize, classes: &ClassSet, e: usize) -> Result<RadiusRow> {
    let patterns = binomial(n, e);
    if patterns > MAX_PATTERNS {
        return Err(Error::SizeGuard(alloc::format!("{patterns} patterns of {e} flips")));
    }
    let totals: Vec<i64> = classes.representatives().iter().map(|c| c.entries().iter().sum()).collect();
    let mut row = RadiusRow { flips: e, patterns, ..Default::default() };
    // the verdict is constant on orbits of flip sets
    classes.for_each_subset_orbit(n, e, |flips, size| {
        // cost of a class is proportional to total - 2 * (mass on flips)
        let mut tie = false;
        let mut lose = false;
        for (k, &t) in totals.iter().enumerate() {
            let cost = t - 2 * classes.max_mass(k, flips);
            if cost < 0 {
                lose = true;
                break;
            }
            tie |= cost == 0;
        }
        if lose {
            row.loses += size;
        } else if tie {
            row.ties += size;
        } else {
            row.zero_wins += size;
        }
    });
    Ok(row)
}

/// LP correction behaviour on the BSC for `PG(2,q)`: all patterns of `q/2`
/// flips, all patterns of `q + 1` flips via canonical completion, and a
/// full table for each radius in `table_radii`.
pub fn bsc_correction_radius(
    h: &ParityCheckMatrix,
    q: u32,
    classes: &ClassSet,
    table_radii: &[usize],
) -> Result<RadiusReport> {
    let n = h.n();
    let guaranteed = q as usize / 2;
    let failure_size = q as usize + 1;
    let g = sweep(n, classes, guaranteed)?;
    let guaranteed_holds = g.zero_wins == g.patterns;
    if binomial(n, failure_size) > MAX_PATTERNS {
        return Err(Error::SizeGuard("too many failure patterns".into()));
    }
    let mut failure_holds = true;
    let mut err = None;
    for_each_subset(n, failure_size, |flips| {
        if !failure_holds || err.is_some() {
            return;
        }
        match canonical_completion(h, q, flips) {
            Ok(w) => {
                let llr = bsc_llr_exact(n, flips);
                failure_holds = inner(w.entries(), &llr).is_some_and(|v| v.is_negative());
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let table = table_radii.iter().map(|&e| sweep(n, classes, e)).collect::<Result<Vec<_>>>()?;
    Ok(RadiusReport { guaranteed, guaranteed_holds, failure_size, failure_holds, table })
}

/// Necessary condition for BSC effectiveness of the second kind on
/// `PG(2,q)`: `q + 2 <= w_bsc <= 2q + 2`.
pub fn cor3_filter(q: u32, bsc_pw: &Rational) -> bool {
    let lo = Rational::from_integer((i64::from(q) + 2).into());
    let hi = Rational::from_integer((2 * i64::from(q) + 2).into());
    *bsc_pw >= lo && *bsc_pw <= hi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Effectiveness {
    FirstKind,
    SecondKindOnly,
    NotEffective,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EffectivenessOptions {
    /// Largest `n` for the exhaustive BSC sweep over all `2^n` flip sets.
    pub max_exhaustive_n: usize,
    /// Plane order, enabling the `PG(2,q)` necessary condition.
    pub pg_q: Option<u32>,
    /// Tie-break variants tried per class by the witness search.
    pub witness_variants: usize,
}

impl Default for EffectivenessOptions {
    fn default() -> Self {
        Self { max_exhaustive_n: 15, pg_q: None, witness_variants: 64 }
    }
}

/// Effectiveness of each representative for the given channel. The
/// labels are invariant under the group, so they hold for whole orbits.
pub fn classify_effectiveness(
    classes: &ClassSet,
    channel: PwChannel,
    opts: &EffectivenessOptions,
) -> Result<Vec<Effectiveness>> {
    let reps = classes.representatives();
    Ok(match channel {
        PwChannel::Awgnc => vec![Effectiveness::FirstKind; reps.len()],
        // every class ties the zero word when its whole support is erased,
        // and no cost can be negative
        PwChannel::Bec => vec![Effectiveness::SecondKindOnly; reps.len()],
        PwChannel::Bsc => {
            let n = classes.n().unwrap_or(0);
            if n <= opts.max_exhaustive_n {
                let all = classes.expand(u64::MAX)?;
                let labels = bsc_exhaustive(&all, n);
                reps.iter()
                    .map(|r| all.binary_search(r).map(|i| labels[i]).map_err(|_| Error::NotInCone))
                    .collect::<Result<Vec<_>>>()?
            } else {
                bsc_filtered(classes, opts)
            }
        }
    })
}

fn bsc_exhaustive(classes: &[PseudoCodeword], n: usize) -> Vec<Effectiveness> {
    let totals: Vec<i64> = classes.iter().map(|c| c.entries().iter().sum()).collect();
    let mut mass = vec![0i64; classes.len()];
    let mut first = vec![false; classes.len()];
    let mut second = vec![false; classes.len()];
    let mut current: u64 = 0;
    let mut negatives = Vec::new();
    let mut zeros = Vec::new();
    for step in 0u64..(1u64 << n) {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            let adding = current >> bit & 1 == 0;
            current ^= 1 << bit;
            for (m, c) in mass.iter_mut().zip(classes) {
                let v = c.entries()[bit];
                *m += if adding { v } else { -v };
            }
        }
        negatives.clear();
        zeros.clear();
        for k in 0..classes.len() {
            let cost = totals[k] - 2 * mass[k];
            if cost < 0 {
                negatives.push(k);
                if negatives.len() > 1 {
                    break;
                }
            } else if cost == 0 {
                zeros.push(k);
            }
        }
        match negatives.len() {
            0 => zeros.iter().for_each(|&k| second[k] = true),
            1 => {
                first[negatives[0]] = true;
                second[negatives[0]] = true;
            }
            _ => {}
        }
    }
    (0..classes.len())
        .map(|k| {
            if first[k] {
                Effectiveness::FirstKind
            } else if second[k] {
                Effectiveness::SecondKindOnly
            } else {
                Effectiveness::NotEffective
            }
        })
        .collect()
}

/// Classes failing the `PG(2,q)` condition are not effective; for the rest
/// a deterministic witness search tries flip sets made of the largest
/// entries, rotating among equal values. A found witness of the first kind
/// decides the class; otherwise it stays unknown.
fn bsc_filtered(classes: &ClassSet, opts: &EffectivenessOptions) -> Vec<Effectiveness> {
    let reps = classes.representatives();
    let totals: Vec<i64> = reps.iter().map(|c| c.entries().iter().sum()).collect();
    // member k of its orbit is the only class with negative cost
    let only_negative = |flips: &[usize], k: usize| -> bool {
        totals.iter().enumerate().all(|(j, &t)| {
            if j == k {
                classes.members_above(j, flips, t / 2) == 1 && 2 * classes.max_mass(j, flips) > t
            } else {
                2 * classes.max_mass(j, flips) <= t
            }
        })
    };
    reps.iter()
        .enumerate()
        .map(|(k, c)| {
            if let Some(q) = opts.pg_q {
                if !cor3_filter(q, &class_pw(c, PwChannel::Bsc)) {
                    return Effectiveness::NotEffective;
                }
            }
            // group positions by value, largest first
            let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (i, &v) in c.entries().iter().enumerate() {
                if v > 0 {
                    groups.entry(-v).or_default().push(i);
                }
            }
            for variant in 0..opts.witness_variants.max(1) {
                let mut flips = Vec::new();
                let mut mass = 0i64;
                'fill: for (neg_v, idx) in &groups {
                    let len = idx.len();
                    for t in 0..len {
                        if 2 * mass > totals[k] {
                            break 'fill;
                        }
                        flips.push(idx[(t + variant * (1 + t)) % len]);
                        mass += -neg_v;
                    }
                }
                flips.sort_unstable();
                flips.dedup();
                let own: i64 = flips.iter().map(|&i| c.entries()[i]).sum();
                if 2 * own > totals[k] && only_negative(&flips, k) {
                    return Effectiveness::FirstKind;
                }
            }
            Effectiveness::Unknown
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddComponentReport {
    pub all_pass: bool,
    pub per_class: Vec<bool>,
}

/// For each class, whether its even-syndrome multiple has an odd entry.
/// When all classes pass, LP and ML tie events coincide on the BEC.
pub fn bec_odd_component_check(h: &ParityCheckMatrix, classes: &[PseudoCodeword]) -> OddComponentReport {
    let per_class: Vec<bool> = classes
        .iter()
        .map(|c| cover_multiplier(h, c) == 1 && c.entries().iter().any(|v| v % 2 == 1))
        .collect();
    OddComponentReport { all_pass: per_class.iter().all(|&b| b), per_class }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::enumerate_extreme_rays;
    use crate::rational::rat;

    fn fano() -> ParityCheckMatrix {
        ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap()
    }

    #[test]
    fn channel_validation() {
        assert!(Channel::bsc(0.6).is_err());
        assert!(Channel::awgnc(0.0).is_err());
        assert!(Channel::bec(0.3).is_ok());
        assert_eq!(bsc_llr(0.1, &[true, false])[0], -bsc_magnitude(0.1));
        assert_eq!(bec_llr(&[true, false]), vec![0.0, f64::INFINITY]);
        assert_eq!(awgnc_llr(0.5, &[1.0]), vec![8.0]);
    }

    #[test]
    fn region_verdicts() {
        let words = [BitVec::from_indices(3, &[0, 1])];
        let pos = vec![Llr::int(1); 3];
        assert_eq!(ml_decode_zero_region(&pos, &words).verdict, Verdict::ZeroWins);
        let tie = vec![Llr::int(1), Llr::int(-1), Llr::int(5)];
        assert_eq!(ml_decode_zero_region(&tie, &words).verdict, Verdict::Tie { witnesses: vec![0] });
    }

    #[test]
    fn simplex_matches_region_on_fano() {
        let h = fano();
        let classes = enumerate_extreme_rays(&h, false).unwrap();
        let cases: [[i64; 7]; 4] = [
            [1, 1, 1, 1, 1, 1, 1],
            [-3, 1, 1, 1, 1, 1, 1],
            [-1, -1, 1, 1, 1, 1, 1],
            [-1, 1, 2, 1, 2, 1, 1],
        ];
        for case in &cases {
            let llr: Vec<Llr> = case.iter().map(|&v| Llr::int(v)).collect();
            let region = lp_decode_zero_region(&llr, &classes).verdict;
            let lp = lp_decode_simplex(&h, &llr).unwrap().verdict;
            assert_eq!(region.zero_wins(), lp.zero_wins(), "{case:?}");
        }
    }

    #[test]
    fn completion_in_pg2() {
        let h = fano();
        let w = canonical_completion(&h, 2, &[0, 1, 2]).unwrap();
        let llr = bsc_llr_exact(7, &[0, 1, 2]);
        // 2 * (q (n - e) / q - q e) / q with the 1/q scaling removed
        assert_eq!(inner(w.entries(), &llr), Some(rat(-2, 1)));
    }

    #[test]
    fn sum_product_clean_channel() {
        let h = fano();
        let r = sum_product_decode(&h, &[10.0; 7], SP_MAX_ITERS);
        assert!(r.converged);
        assert_eq!(r.bits, vec![0; 7]);
        // codeword {2,4,5,6} sent noiselessly
        let llr: Vec<f64> = (0..7).map(|i| if [2, 4, 5, 6].contains(&i) { -4.0 } else { 4.0 }).collect();
        let r = sum_product_decode(&h, &llr, SP_MAX_ITERS);
        assert_eq!(r.bits, vec![0, 0, 1, 0, 1, 1, 1]);
    }

    #[test]
    fn cor3_boundaries() {
        assert!(!cor3_filter(4, &rat(12, 1)));
        assert!(cor3_filter(2, &rat(5, 1)));
        assert!(cor3_filter(2, &rat(4, 1)));
    }
}
