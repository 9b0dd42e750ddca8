//! Random search for low pseudo-weight minimal pseudo-codewords on codes too
//! large for enumeration.
//!
//! Each trial draws an objective, minimizes it over the cross-section
//! `{w in K(H) : sum w <= 1}` and keeps the certified extreme ray at the
//! optimum. Objectives put large negative costs on a few random positions
//! and uniform positive costs elsewhere, which favours rays concentrated on
//! small supports.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use fgcone_core::cone::search::section_vertex;
use fgcone_core::cone::PseudoCodeword;
use fgcone_core::pweight::{class_pw, is_minimal_codeword_class, Channel};
use fgcone_core::{ParityCheckMatrix, Rational};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub trials: u64,
    pub seed: u64,
    /// Stop early once this much wall time has passed.
    pub budget: Option<Duration>,
    /// Largest number of positions given negative cost.
    pub max_negative: usize,
}

impl SearchConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        Self { trials, seed, budget: None, max_negative: 3 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FoundClass {
    pub vector: Vec<i64>,
    pub awgnc: String,
    pub is_codeword: bool,
    pub hits: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub trials_run: u64,
    /// Trials whose vertex was the origin or failed exact certification.
    pub rejected: u64,
    pub distinct_classes: usize,
    /// Lowest AWGNC pseudo-weight among found classes that are not minimal
    /// codewords.
    pub best_noncodeword_awgnc: Option<String>,
    pub best_noncodeword: Option<Vec<i64>>,
    /// All distinct classes found, lightest first.
    pub classes: Vec<FoundClass>,
    pub elapsed_seconds: f64,
}

impl SearchReport {
    /// Non-codeword classes lighter than `threshold`.
    pub fn below(&self, h: &ParityCheckMatrix, threshold: &Rational) -> Vec<PseudoCodeword> {
        self.classes
            .iter()
            .filter_map(|c| PseudoCodeword::from_integers(&c.vector).ok())
            .filter(|c| !is_minimal_codeword_class(h, c) && class_pw(c, Channel::Awgnc) < *threshold)
            .collect()
    }
}

fn objective(n: usize, max_negative: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut c: Vec<f64> = (0..n).map(|_| rng.random_range(0.05..1.0)).collect();
    let k = rng.random_range(1..=max_negative.clamp(1, n));
    // large enough that some ray through the chosen positions beats zero
    let scale = n as f64 / k as f64;
    for i in sample(rng, n, k) {
        c[i] = -scale * rng.random_range(0.25..1.0);
    }
    c
}

pub fn random_cone_search(h: &ParityCheckMatrix, cfg: &SearchConfig) -> Result<SearchReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut found: BTreeMap<PseudoCodeword, u64> = BTreeMap::new();
    let mut rejected = 0;
    let mut trials_run = 0;
    for _ in 0..cfg.trials {
        if cfg.budget.is_some_and(|b| start.elapsed() >= b) {
            break;
        }
        let c = objective(h.n(), cfg.max_negative, &mut rng);
        trials_run += 1;
        match section_vertex(h, &c) {
            Ok(Some(w)) => *found.entry(w).or_default() += 1,
            Ok(None) => rejected += 1,
            // a pivot limit on a degenerate instance only costs the trial
            Err(fgcone_core::Error::SizeGuard(_)) => rejected += 1,
            Err(e) => return Err(e.into()),
        }
    }
    let mut classes: Vec<(Rational, PseudoCodeword, u64)> =
        found.into_iter().map(|(w, hits)| (class_pw(&w, Channel::Awgnc), w, hits)).collect();
    classes.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let best = classes.iter().find(|(_, w, _)| !is_minimal_codeword_class(h, w));
    Ok(SearchReport {
        trials_run,
        rejected,
        distinct_classes: classes.len(),
        best_noncodeword_awgnc: best.map(|(pw, _, _)| pw.to_string()),
        best_noncodeword: best.map(|(_, w, _)| w.entries().to_vec()),
        classes: classes
            .iter()
            .map(|(pw, w, hits)| FoundClass {
                vector: w.entries().to_vec(),
                awgnc: pw.to_string(),
                is_codeword: w.is_codeword(h),
                hits: *hits,
            })
            .collect(),
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}
