//! Monte Carlo word error rates under the all-zero codeword, and union
//! upper bounds.
//!
//! ML and LP decisions use the region tests (minimal codewords and minimal
//! pseudo-codewords respectively); sum-product runs the message passing
//! decoder. All decoders see the same channel realizations, so per-trial
//! comparisons are meaningful.

use std::io::Write;

use fgcone_core::cone::PseudoCodeword;
use fgcone_core::decode::{bsc_magnitude, sum_product_decode, SP_MAX_ITERS};
use fgcone_core::pweight::{class_pw, Channel as PwChannel};
use fgcone_core::rational::to_f64;
use fgcone_core::ParityCheckMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum ChannelKind {
    Awgnc,
    Bsc,
    Bec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum SnrConvention {
    /// Grid values are `Eb/N0` in dB; `Es/N0 = R Eb/N0`.
    Eb,
    /// Grid values are `Es/N0` in dB.
    Es,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum TiePolicy {
    /// A tie is a block error.
    Error,
    /// The winner is drawn uniformly among the tied candidates.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, clap::ValueEnum)]
pub enum Decoder {
    Ml,
    Lp,
    Sp,
}

impl Decoder {
    pub fn name(self) -> &'static str {
        match self {
            Decoder::Ml => "ml",
            Decoder::Lp => "lp",
            Decoder::Sp => "sp",
        }
    }
}

/// Sparse non-negative vectors with an index from positions to vectors,
/// for fast region tests.
#[derive(Debug, Clone)]
pub struct RegionSet {
    vectors: Vec<Vec<(usize, f64)>>,
    by_position: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionOutcome {
    ZeroWins,
    Loses,
    /// Minimum cost 0 attained by this many vectors.
    Tie(usize),
}

impl RegionSet {
    pub fn new(n: usize, vectors: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut by_position = vec![Vec::new(); n];
        let vectors: Vec<Vec<(usize, f64)>> = vectors
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                v.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| {
                        by_position[i].push(k as u32);
                        (i, x as f64)
                    })
                    .collect()
            })
            .collect();
        Self { vectors, by_position }
    }

    pub fn from_classes(n: usize, classes: &[PseudoCodeword]) -> Self {
        Self::new(n, classes.iter().map(|c| c.entries().to_vec()))
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Sign test of `<w, llr>` over the set. Only vectors touching a
    /// non-positive LLR can have non-positive cost.
    pub fn outcome(&self, llr: &[f64], scratch: &mut Vec<bool>) -> RegionOutcome {
        scratch.clear();
        scratch.resize(self.vectors.len(), false);
        let mut ties = 0;
        for (i, &l) in llr.iter().enumerate() {
            if l > 0.0 {
                continue;
            }
            for &k in &self.by_position[i] {
                let k = k as usize;
                if scratch[k] {
                    continue;
                }
                scratch[k] = true;
                let cost: f64 = self.vectors[k].iter().map(|&(j, x)| x * llr[j]).sum();
                if cost < 0.0 {
                    return RegionOutcome::Loses;
                }
                if cost == 0.0 {
                    ties += 1;
                }
            }
        }
        if ties > 0 {
            RegionOutcome::Tie(ties)
        } else {
            RegionOutcome::ZeroWins
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimConfig {
    pub channel: ChannelKind,
    /// dB values for the AWGNC, probabilities otherwise.
    pub grid: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    pub decoders: Vec<Decoder>,
    pub tie_policy: TiePolicy,
    pub convention: SnrConvention,
    /// Code rate used by the `Eb/N0` convention.
    pub rate: f64,
    pub sp_max_iters: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WerPoint {
    pub decoder: Decoder,
    pub grid_value: f64,
    pub trials: u64,
    /// Trials where some nonzero candidate strictly beat zero (or, for
    /// sum-product, the decoder did not return zero).
    pub losses: u64,
    /// Trials decided by a tie.
    pub ties: u64,
    /// Block errors under the tie policy.
    pub errors: u64,
    pub wer: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Wilson score interval at 95% confidence.
pub fn wilson_interval(errors: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let p = errors as f64 / n;
    let denom = 1.0 + z * z / n;
    let center = (p + z * z / (2.0 * n)) / denom;
    let half = z * ((p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt()) / denom;
    // the endpoints are exact when no trial (or every trial) failed
    let lo = if errors == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if errors == trials { 1.0 } else { (center + half).min(1.0) };
    (lo, hi)
}

/// `Es/N0` (linear) for a grid value in dB.
pub fn es_n0(db: f64, convention: SnrConvention, rate: f64) -> f64 {
    let lin = 10f64.powf(db / 10.0);
    match convention {
        SnrConvention::Es => lin,
        SnrConvention::Eb => rate * lin,
    }
}

const CHUNK: u64 = 2048;

#[derive(Default, Clone, Copy)]
struct Tally {
    losses: u64,
    ties: u64,
    errors: u64,
}

fn validate(cfg: &SimConfig) -> Result<()> {
    if cfg.grid.is_empty() {
        return Err(Error::Usage("empty grid".into()));
    }
    if cfg.trials == 0 {
        return Err(Error::Usage("zero trials".into()));
    }
    if cfg.decoders.is_empty() {
        return Err(Error::Usage("no decoders selected".into()));
    }
    for &g in &cfg.grid {
        let ok = match cfg.channel {
            ChannelKind::Awgnc => g.is_finite(),
            ChannelKind::Bsc => g > 0.0 && g < 0.5,
            ChannelKind::Bec => (0.0..=1.0).contains(&g),
        };
        if !ok {
            return Err(Error::Usage(format!("grid value {g} is invalid for this channel")));
        }
    }
    Ok(())
}

/// Simulates every decoder at every grid point. `ml` and `lp` must be
/// provided when the respective decoder is requested.
pub fn monte_carlo(
    h: &ParityCheckMatrix,
    ml: Option<&RegionSet>,
    lp: Option<&RegionSet>,
    cfg: &SimConfig,
) -> Result<Vec<WerPoint>> {
    validate(cfg)?;
    for d in &cfg.decoders {
        let missing = match d {
            Decoder::Ml => ml.is_none(),
            Decoder::Lp => lp.is_none(),
            Decoder::Sp => false,
        };
        if missing {
            return Err(Error::Usage(format!("decoder {} needs its vector list", d.name())));
        }
    }
    let n = h.n();
    let chunks = cfg.trials.div_ceil(CHUNK);
    let mut out = Vec::new();
    for (g_idx, &g) in cfg.grid.iter().enumerate() {
        let per_chunk: Vec<Vec<Tally>> = (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(((g_idx as u64) << 32) | chunk);
                let count = CHUNK.min(cfg.trials - chunk * CHUNK);
                let mut tallies = vec![Tally::default(); cfg.decoders.len()];
                let mut llr = vec![0.0; n];
                let mut scratch = Vec::new();
                for _ in 0..count {
                    sample_llr(cfg, g, &mut rng, &mut llr);
                    for (d, tally) in cfg.decoders.iter().zip(tallies.iter_mut()) {
                        let outcome = match d {
                            Decoder::Ml => ml.expect("checked").outcome(&llr, &mut scratch),
                            Decoder::Lp => lp.expect("checked").outcome(&llr, &mut scratch),
                            Decoder::Sp => sp_outcome(h, &llr, cfg.sp_max_iters),
                        };
                        match outcome {
                            RegionOutcome::ZeroWins => {}
                            RegionOutcome::Loses => {
                                tally.losses += 1;
                                tally.errors += 1;
                            }
                            RegionOutcome::Tie(t) => {
                                tally.ties += 1;
                                let error = match cfg.tie_policy {
                                    TiePolicy::Error => true,
                                    TiePolicy::Random => rng.random_range(0..=t) != 0,
                                };
                                tally.errors += u64::from(error);
                            }
                        }
                    }
                }
                tallies
            })
            .collect();
        for (k, &d) in cfg.decoders.iter().enumerate() {
            let mut t = Tally::default();
            for c in &per_chunk {
                t.losses += c[k].losses;
                t.ties += c[k].ties;
                t.errors += c[k].errors;
            }
            let (ci_low, ci_high) = wilson_interval(t.errors, cfg.trials);
            out.push(WerPoint {
                decoder: d,
                grid_value: g,
                trials: cfg.trials,
                losses: t.losses,
                ties: t.ties,
                errors: t.errors,
                wer: t.errors as f64 / cfg.trials as f64,
                ci_low,
                ci_high,
            });
        }
    }
    Ok(out)
}

fn sample_llr(cfg: &SimConfig, g: f64, rng: &mut ChaCha8Rng, llr: &mut [f64]) {
    match cfg.channel {
        ChannelKind::Awgnc => {
            let sigma = (1.0 / (2.0 * es_n0(g, cfg.convention, cfg.rate))).sqrt();
            let scale = 2.0 / (sigma * sigma);
            for l in llr.iter_mut() {
                let z: f64 = rng.sample(StandardNormal);
                *l = scale * (1.0 + sigma * z);
            }
        }
        ChannelKind::Bsc => {
            let mag = bsc_magnitude(g);
            for l in llr.iter_mut() {
                *l = if rng.random_bool(g) { -mag } else { mag };
            }
        }
        ChannelKind::Bec => {
            for l in llr.iter_mut() {
                *l = if rng.random_bool(g) { 0.0 } else { f64::INFINITY };
            }
        }
    }
}

/// Sum-product on erasures runs with a large finite value for known bits.
fn sp_outcome(h: &ParityCheckMatrix, llr: &[f64], max_iters: usize) -> RegionOutcome {
    let finite: Vec<f64> = llr.iter().map(|&l| if l.is_infinite() { 1e3 } else { l }).collect();
    let r = sum_product_decode(h, &finite, max_iters);
    if r.converged && r.bits.iter().all(|&b| b == 0) {
        RegionOutcome::ZeroWins
    } else {
        RegionOutcome::Loses
    }
}

impl SimConfig {
    pub fn new(channel: ChannelKind, grid: Vec<f64>, trials: u64, seed: u64) -> Self {
        Self {
            channel,
            grid,
            trials,
            seed,
            decoders: vec![Decoder::Ml, Decoder::Lp, Decoder::Sp],
            tie_policy: TiePolicy::Error,
            convention: SnrConvention::Eb,
            rate: 1.0,
            sp_max_iters: SP_MAX_ITERS,
        }
    }
}

/// Gaussian tail `Q(x)`.
pub fn q_function(x: f64) -> f64 {
    0.5 * libm::erfc(x / std::f64::consts::SQRT_2)
}

/// `P(sum_i w_i B_i >= total / 2)` for independent `B_i ~ Bernoulli(p)`:
/// the probability that flips on the support make `<w, llr> <= 0`.
pub fn bsc_pairwise(w: &[i64], p: f64) -> f64 {
    let total: i64 = w.iter().sum();
    let mut dist = vec![0.0f64; total as usize + 1];
    dist[0] = 1.0;
    let mut reach = 0usize;
    for &x in w.iter().filter(|&&x| x > 0) {
        let x = x as usize;
        for s in (0..=reach).rev() {
            let v = dist[s];
            if v != 0.0 {
                dist[s + x] += v * p;
                dist[s] = v * (1.0 - p);
            }
        }
        reach += x;
    }
    dist.iter().enumerate().filter(|(s, _)| 2 * *s as i64 >= total).map(|(_, v)| v).sum()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundPoint {
    pub grid_value: f64,
    pub bound: f64,
}

/// Union bound on the probability that some vector has cost `<= 0`.
pub fn union_upper_bound(
    vectors: &[PseudoCodeword],
    channel: ChannelKind,
    grid: &[f64],
    convention: SnrConvention,
    rate: f64,
) -> Vec<BoundPoint> {
    let weights: Vec<f64> = match channel {
        ChannelKind::Awgnc => vectors.iter().map(|v| to_f64(&class_pw(v, PwChannel::Awgnc))).collect(),
        ChannelKind::Bec => vectors.iter().map(|v| v.support().len() as f64).collect(),
        ChannelKind::Bsc => Vec::new(),
    };
    grid.iter()
        .map(|&g| {
            let sum: f64 = match channel {
                ChannelKind::Awgnc => {
                    let s = es_n0(g, convention, rate);
                    weights.iter().map(|&w| q_function((2.0 * s * w).sqrt())).sum()
                }
                ChannelKind::Bsc => vectors.iter().map(|v| bsc_pairwise(v.entries(), g)).sum(),
                ChannelKind::Bec => weights.iter().map(|&w| g.powf(w)).sum(),
            };
            BoundPoint { grid_value: g, bound: sum.min(1.0) }
        })
        .collect()
}

pub fn write_wer_csv<W: Write>(points: &[WerPoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["decoder", "grid_value", "trials", "losses", "ties", "errors", "wer", "ci_low", "ci_high"])?;
    for p in points {
        w.write_record([
            p.decoder.name().to_string(),
            p.grid_value.to_string(),
            p.trials.to_string(),
            p.losses.to_string(),
            p.ties.to_string(),
            p.errors.to_string(),
            p.wer.to_string(),
            p.ci_low.to_string(),
            p.ci_high.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_bound_csv<W: Write>(points: &[BoundPoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["grid_value", "bound"])?;
    for p in points {
        w.write_record([p.grid_value.to_string(), p.bound.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use fgcone_core::cone::enumerate_extreme_rays;

    fn fano() -> ParityCheckMatrix {
        ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap()
    }

    #[test]
    fn wilson_contains_estimate() {
        let (lo, hi) = wilson_interval(10, 1000);
        assert!(lo < 0.01 && 0.01 < hi);
        assert_eq!(wilson_interval(0, 100).0, 0.0);
    }

    #[test]
    fn pairwise_matches_binomial_for_binary_vectors() {
        // weight 4: error iff at least 2 of 4 flipped
        let p: f64 = 0.1;
        let expect = 1.0 - (1.0 - p).powi(4) - 4.0 * p * (1.0 - p).powi(3);
        assert!((bsc_pairwise(&[1, 1, 1, 1, 0], p) - expect).abs() < 1e-12);
    }

    #[test]
    fn region_outcomes() {
        let set = RegionSet::new(3, vec![vec![1, 1, 0], vec![0, 1, 2]]);
        let mut s = Vec::new();
        assert_eq!(set.outcome(&[1.0, 1.0, 1.0], &mut s), RegionOutcome::ZeroWins);
        assert_eq!(set.outcome(&[1.0, -1.0, 1.0], &mut s), RegionOutcome::Tie(1));
        assert_eq!(set.outcome(&[1.0, -3.0, 1.0], &mut s), RegionOutcome::Loses);
        assert_eq!(set.outcome(&[f64::INFINITY, 0.0, f64::INFINITY], &mut s), RegionOutcome::ZeroWins);
    }

    #[test]
    fn seeds_reproduce_and_ml_dominates() {
        let h = fano();
        let classes = enumerate_extreme_rays(&h, false).unwrap();
        let words: Vec<PseudoCodeword> = classes.iter().filter(|c| c.is_binary()).cloned().collect();
        let ml = RegionSet::from_classes(7, &words);
        let lp = RegionSet::from_classes(7, &classes);
        let mut cfg = SimConfig::new(ChannelKind::Awgnc, vec![1.0, 3.0], 5000, 7);
        cfg.rate = 3.0 / 7.0;
        let a = monte_carlo(&h, Some(&ml), Some(&lp), &cfg).unwrap();
        let b = monte_carlo(&h, Some(&ml), Some(&lp), &cfg).unwrap();
        assert_eq!(a, b);
        for g in 0..2 {
            assert!(a[3 * g].errors <= a[3 * g + 1].errors);
        }
        assert!(monte_carlo(&h, None, Some(&lp), &cfg).is_err());
        cfg.trials = 0;
        assert!(monte_carlo(&h, Some(&ml), Some(&lp), &cfg).is_err());
    }
}
