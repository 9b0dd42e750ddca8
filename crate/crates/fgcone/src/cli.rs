//! Command line interface. Every subcommand writes its artifacts into the
//! output directory and prints a JSON summary on stdout.

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fgcone_core::bounds::{audit_bounds, PlaneInfo};
use fgcone_core::cone::{is_in_cone_int, is_minimal_pcw};
use fgcone_core::decode::{
    bec_odd_component_check, bsc_correction_radius, classify_effectiveness, lp_decode_simplex,
    sum_product_decode, zero_region_test, DecodeOutcome, Effectiveness, EffectivenessOptions, Llr, Verdict,
    LP_MAX_ROW_WEIGHT, SP_MAX_ITERS,
};
use fgcone_core::geometry::plane_parameters;
use fgcone_core::lincode::{dimension, hamming_spectra, WeightEnumerator};
use fgcone_core::pweight::{class_pw, is_minimal_codeword_class, spectrum_gap, Channel as PwChannel};
use fgcone_core::{Family, PseudoCodeword, Rational};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::formats::{
    read_class_records, write_alist, write_class_set, write_dense, write_histogram_csv, write_spectrum_csv,
};
use crate::pipeline::{classes_for, codewords_feasible, enumerate, Code, Method, MAX_EXPANDED_CLASSES};
use crate::search::{random_cone_search, SearchConfig};
use crate::simulate::{
    monte_carlo, union_upper_bound, write_bound_csv, write_wer_csv, ChannelKind, Decoder, RegionSet, SimConfig,
    SnrConvention, TiePolicy,
};

#[derive(Debug, Parser)]
#[command(name = "fgcone", version, about = "Minimal pseudo-codewords of finite-geometry LDPC codes")]
pub struct Cli {
    /// Directory for output files.
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    /// Worker threads for parallel loops (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pg,
    Eg,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Pg => Family::Pg,
            FamilyArg::Eg => Family::EgReduced,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    /// Generated plane code (with --q).
    #[arg(long, requires = "q", conflicts_with = "matrix")]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub q: Option<u32>,
    /// Parity-check matrix in alist or dense 0/1 format.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

impl CodeArgs {
    fn load(&self) -> Result<Code> {
        match (&self.family, self.q, &self.matrix) {
            (Some(f), Some(q), None) => Code::generated((*f).into(), q),
            (None, _, Some(path)) => Code::from_file(path),
            _ => Err(Error::Usage("give --family with --q, or --matrix".into())),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    /// Class list (JSON lines) instead of enumerating.
    #[arg(long)]
    pub classes: Option<PathBuf>,
    /// Lift the enumeration size guards.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecodeMethod {
    Region,
    Simplex,
    Sp,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a plane code and report its parameters.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Enumerate minimal pseudo-codeword classes.
    Enumerate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        #[arg(long)]
        allow_large: bool,
    },
    /// Pseudo-weight spectra and histograms.
    Spectrum {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        classes: ClassArgs,
        /// Only this channel (default: all three).
        #[arg(long, value_enum)]
        channel: Option<ChannelKind>,
        #[arg(long, default_value_t = 0.25)]
        bin_width: f64,
    },
    /// Gap between the lightest non-codeword class and the minimum distance.
    Gap {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        classes: ClassArgs,
        #[arg(long, value_enum)]
        channel: Option<ChannelKind>,
    },
    /// Check every applicable pseudo-weight bound on every class.
    Audit {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        classes: ClassArgs,
        /// Accept the weaker hypothesis for the many-ones type bound.
        #[arg(long)]
        relaxed: bool,
    },
    /// Decode one LLR vector against the all-zero codeword.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        classes: ClassArgs,
        /// Comma separated LLRs: integers, fractions `p/q`, decimals or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        llr: String,
        #[arg(long, value_enum, default_value = "all")]
        decoder: DecodeMethod,
    },
    /// Monte Carlo word error rates and union bounds.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        classes: ClassArgs,
        #[arg(long, value_enum)]
        channel: ChannelKind,
        /// SNR values in dB (AWGNC).
        #[arg(long, value_delimiter = ',')]
        snr_grid: Vec<f64>,
        /// Crossover probabilities (BSC).
        #[arg(long, value_delimiter = ',')]
        p_grid: Vec<f64>,
        /// Erasure probabilities (BEC).
        #[arg(long, value_delimiter = ',')]
        eps_grid: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "ml,lp,sp")]
        decoders: Vec<Decoder>,
        #[arg(long, value_enum, default_value = "error")]
        tie_policy: TiePolicy,
        #[arg(long, value_enum, default_value = "eb")]
        snr_convention: SnrConvention,
        #[arg(long, default_value_t = SP_MAX_ITERS)]
        sp_iters: usize,
    },
    /// Random search for light minimal pseudo-codewords.
    Search {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        seconds: Option<f64>,
        #[arg(long, default_value_t = 3)]
        max_negative: usize,
    },
    /// Classify classes as effective for a channel.
    Effective {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        classes: ClassArgs,
        #[arg(long, value_enum)]
        channel: ChannelKind,
    },
    /// Re-check an imported class list.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        classes: PathBuf,
    },
}

fn pw_channel(c: ChannelKind) -> PwChannel {
    match c {
        ChannelKind::Awgnc => PwChannel::Awgnc,
        ChannelKind::Bsc => PwChannel::Bsc,
        ChannelKind::Bec => PwChannel::Bec,
    }
}

fn channels(c: Option<ChannelKind>) -> Vec<PwChannel> {
    c.map_or_else(|| PwChannel::ALL.to_vec(), |c| vec![pw_channel(c)])
}

fn create(dir: &Path, name: &str) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(dir.join(name))?))
}

fn write_json(dir: &Path, name: &str, value: &Value) -> Result<()> {
    let mut f = create(dir, name)?;
    serde_json::to_writer_pretty(&mut f, value)?;
    writeln!(f)?;
    f.flush()?;
    Ok(())
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn enumerator_json(e: &WeightEnumerator) -> Value {
    let m: BTreeMap<String, u64> = e.terms().map(|(w, c)| (w.to_string(), c)).collect();
    json!(m)
}

fn write_enumerator_csv<W: Write>(e: &WeightEnumerator, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["weight", "count"])?;
    for (weight, count) in e.terms() {
        w.write_record([weight.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Runs the parsed command and returns the stdout summary.
pub fn run(cli: &Cli) -> Result<Value> {
    if let Some(w) = cli.workers {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global();
    }
    fs::create_dir_all(&cli.out)?;
    let out = cli.out.as_path();
    match &cli.command {
        Command::Construct { code } => construct(code, out),
        Command::Enumerate { code, method, allow_large } => {
            let code = code.load()?;
            let start = Instant::now();
            let e = enumerate(&code, *method, *allow_large)?;
            let mut f = create(out, "classes.jsonl")?;
            write_class_set(&code.h, &e.set, &mut f)?;
            f.flush()?;
            let codewords: u64 = e
                .set
                .representatives()
                .iter()
                .zip(e.set.counts())
                .filter(|(c, _)| is_minimal_codeword_class(&code.h, c))
                .map(|(_, &k)| k)
                .sum();
            Ok(json!({
                "n": code.n(),
                "method": e.method,
                "classes": e.set.total(),
                "orbits": e.set.num_orbits(),
                "minimal_codewords": codewords,
                "seconds": start.elapsed().as_secs_f64(),
            }))
        }
        Command::Spectrum { code, classes, channel, bin_width } => {
            let code = code.load()?;
            let list = classes_for(&code, classes.classes.as_deref(), classes.allow_large)?;
            let mut summary = serde_json::Map::new();
            for ch in channels(*channel) {
                let s = list.spectrum(ch);
                let mut f = create(out, &format!("spectrum_{}.csv", ch.name()))?;
                write_spectrum_csv(&s, &mut f)?;
                let mut f = create(out, &format!("histogram_{}.csv", ch.name()))?;
                write_histogram_csv(&s, *bin_width, &mut f)?;
                summary.insert(
                    ch.name().into(),
                    json!({ "min": s.min().map(rat), "distinct": s.0.len(), "total": s.total() }),
                );
            }
            Ok(Value::Object(summary))
        }
        Command::Gap { code, classes, channel } => {
            let code = code.load()?;
            let list = classes_for(&code, classes.classes.as_deref(), classes.allow_large)?;
            let d_min = code.d_min()?;
            let reports: Vec<Value> = channels(*channel)
                .into_iter()
                .map(|ch| {
                    let g = spectrum_gap(&code.h, list.representatives(), ch, d_min, true);
                    json!({
                        "channel": ch.name(),
                        "min_noncodeword_pw": g.min_noncodeword_pw.as_ref().map(rat),
                        "d_min": g.d_min,
                        "gap": g.gap.as_ref().map(rat),
                        "exhaustive": g.exhaustive,
                    })
                })
                .collect();
            let v = Value::Array(reports);
            write_json(out, "gap.json", &v)?;
            Ok(v)
        }
        Command::Audit { code, classes, relaxed } => audit(code, classes, *relaxed, out),
        Command::Decode { code, classes, llr, decoder } => decode(code, classes, llr, *decoder),
        Command::Simulate {
            code,
            classes,
            channel,
            snr_grid,
            p_grid,
            eps_grid,
            trials,
            seed,
            decoders,
            tie_policy,
            snr_convention,
            sp_iters,
        } => {
            let code = code.load()?;
            let grid = match channel {
                ChannelKind::Awgnc => snr_grid,
                ChannelKind::Bsc => p_grid,
                ChannelKind::Bec => eps_grid,
            }
            .clone();
            let needs_classes = decoders.iter().any(|d| *d != Decoder::Sp);
            let list = if needs_classes {
                classes_for(&code, classes.classes.as_deref(), classes.allow_large)?.expand(MAX_EXPANDED_CLASSES)?
            } else {
                Vec::new()
            };
            let minimal_cw: Vec<PseudoCodeword> =
                list.iter().filter(|c| is_minimal_codeword_class(&code.h, c)).cloned().collect();
            let ml = RegionSet::from_classes(code.n(), &minimal_cw);
            let lp = RegionSet::from_classes(code.n(), &list);
            let rate = dimension(&code.h) as f64 / code.n() as f64;
            let cfg = SimConfig {
                decoders: decoders.clone(),
                tie_policy: *tie_policy,
                convention: *snr_convention,
                rate,
                sp_max_iters: *sp_iters,
                ..SimConfig::new(*channel, grid.clone(), *trials, *seed)
            };
            let points = monte_carlo(&code.h, Some(&ml), Some(&lp), &cfg)?;
            write_wer_csv(&points, create(out, "wer.csv")?)?;
            if needs_classes {
                let ub_ml = union_upper_bound(&minimal_cw, *channel, &grid, *snr_convention, rate);
                let ub_lp = union_upper_bound(&list, *channel, &grid, *snr_convention, rate);
                write_bound_csv(&ub_ml, create(out, "union_ml.csv")?)?;
                write_bound_csv(&ub_lp, create(out, "union_lp.csv")?)?;
            }
            Ok(json!({ "rate": rate, "points": points }))
        }
        Command::Search { code, trials, seed, seconds, max_negative } => {
            let code = code.load()?;
            let mut cfg = SearchConfig::new(*trials, *seed);
            cfg.budget = seconds.map(Duration::from_secs_f64);
            cfg.max_negative = *max_negative;
            let report = random_cone_search(&code.h, &cfg)?;
            write_json(out, "search.json", &serde_json::to_value(&report)?)?;
            let d_min = code.d_min().ok();
            let gap_bound = report.best_noncodeword.as_ref().zip(d_min).map(|(v, d)| {
                let w = PseudoCodeword::from_integers(v).expect("found classes are valid");
                rat(&(class_pw(&w, PwChannel::Awgnc) - Rational::from_integer(d.into())))
            });
            Ok(json!({
                "trials_run": report.trials_run,
                "rejected": report.rejected,
                "distinct_classes": report.distinct_classes,
                "best_noncodeword_awgnc": report.best_noncodeword_awgnc,
                "awgnc_gap_at_most": gap_bound,
                "elapsed_seconds": report.elapsed_seconds,
            }))
        }
        Command::Effective { code, classes, channel } => effective(code, classes, *channel, out),
        Command::Verify { code, classes } => verify(code, classes, out),
    }
}

fn construct(code: &CodeArgs, out: &Path) -> Result<Value> {
    let code = code.load()?;
    let h = &code.h;
    write_alist(h, create(out, "code.alist")?)?;
    write_dense(h, create(out, "code.txt")?)?;
    let k = dimension(h);
    let mut report = json!({
        "n": h.n(),
        "m": h.m(),
        "k": k,
        "rank": h.n() - k,
        "column_weight": h.column_weight(),
        "row_weight": h.row_weight(),
        "circulant": h.is_circulant(),
        "first_row": h.row(0),
    });
    if let Some((family, q)) = code.plane_info() {
        let p = plane_parameters(family, q)?;
        report["family"] = json!(if family == Family::Pg { "pg" } else { "eg" });
        report["q"] = json!(q);
        report["d_min"] = json!(p.d_min);
        report["rank_formula"] = json!(p.redundancy);
    }
    if codewords_feasible(h) {
        let (full, minimal) = hamming_spectra(h)?;
        report["d_min_enumerated"] = json!(full.terms().map(|(w, _)| w).find(|&w| w > 0));
        report["weight_enumerator"] = enumerator_json(&full);
        report["minimal_enumerator"] = enumerator_json(&minimal);
        write_enumerator_csv(&full, create(out, "weight_enumerator.csv")?)?;
        write_enumerator_csv(&minimal, create(out, "minimal_enumerator.csv")?)?;
    }
    write_json(out, "parameters.json", &report)?;
    Ok(report)
}

fn audit(code: &CodeArgs, classes: &ClassArgs, relaxed: bool, out: &Path) -> Result<Value> {
    let code = code.load()?;
    let list = classes_for(&code, classes.classes.as_deref(), classes.allow_large)?;
    let plane = code.plane_info().map(|(family, q)| PlaneInfo { family, q });
    let report = audit_bounds(&code.h, list.representatives(), plane, relaxed)?;
    let mut per_bound: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for c in &report.classes {
        for r in &c.results {
            let e = per_bound.entry(r.name.clone()).or_default();
            e.0 += 1;
            e.1 += usize::from(r.satisfied);
        }
    }
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|(i, name)| json!({ "class_index": i, "bound": name, "vector": list.representatives()[*i].entries() }))
        .collect();
    let mut summary = csv::Writer::from_writer(create(out, "audit_summary.csv")?);
    summary.write_record(["bound", "checked", "satisfied"])?;
    for (name, (checked, ok)) in &per_bound {
        summary.write_record([name.clone(), checked.to_string(), ok.to_string()])?;
    }
    summary.flush()?;
    let per_class: Vec<Value> = report
        .classes
        .iter()
        .map(|c| {
            let results: Vec<Value> = c
                .results
                .iter()
                .map(|r| {
                    json!({
                        "bound": r.name,
                        "value": rat(&r.bound),
                        "actual": rat(&r.actual),
                        "upper": r.upper,
                        "satisfied": r.satisfied,
                    })
                })
                .collect();
            json!({ "class_index": c.class_index, "results": results })
        })
        .collect();
    let v = json!({
        "classes": list.num_orbits(),
        "bounds": per_bound
            .iter()
            .map(|(k, (checked, ok))| (k.clone(), json!({ "checked": checked, "satisfied": ok })))
            .collect::<serde_json::Map<_, _>>(),
        "violations": violations,
        "binary_noncodewords": report.binary_noncodewords,
        "lightest_noncodeword_max_value": report.lightest_noncodeword_max_value,
        "lightest_noncodewords_are_zero_one_two": report.lightest_noncodewords_are_zero_one_two,
        "odd_row_shortfalls": report.odd_row_shortfalls,
    });
    let mut full = v.clone();
    full["per_class"] = Value::Array(per_class);
    write_json(out, "audit.json", &full)?;
    if !report.is_clean() {
        return Err(Error::Check(format!("{} bound violations, see audit.json", report.violations.len())));
    }
    Ok(v)
}

/// Parses `1,-2,3/2,0.5,inf`. Decimals are converted exactly.
pub fn parse_llr(text: &str) -> Result<Vec<Llr>> {
    text.split(',')
        .map(str::trim)
        .map(|t| {
            if matches!(t, "inf" | "+inf") {
                return Ok(Llr::PosInf);
            }
            let bad = || Error::Usage(format!("bad LLR {t:?}"));
            let r = if t.contains('/') {
                t.parse::<Rational>().map_err(|_| bad())?
            } else if t.contains('.') || t.contains('e') || t.contains('E') {
                let f: f64 = t.parse().map_err(|_| bad())?;
                Rational::from_float(f).ok_or_else(bad)?
            } else {
                Rational::from_integer(t.parse().map_err(|_| bad())?)
            };
            Ok(Llr::Finite(r))
        })
        .collect()
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::ZeroWins => json!({ "verdict": "zero_wins" }),
        Verdict::Loses { witness } => json!({ "verdict": "loses", "witness": witness }),
        Verdict::Tie { witnesses } => json!({ "verdict": "tie", "witnesses": witnesses }),
    }
}

fn outcome_json(o: &DecodeOutcome) -> Value {
    let mut v = verdict_json(&o.verdict);
    v["min_value"] = json!(o.min_value.as_ref().map(rat));
    v
}

fn decode(code: &CodeArgs, classes: &ClassArgs, llr: &str, method: DecodeMethod) -> Result<Value> {
    let code = code.load()?;
    let llr = parse_llr(llr)?;
    if llr.len() != code.n() {
        return Err(fgcone_core::Error::LengthMismatch { expected: code.n(), found: llr.len() }.into());
    }
    let mut report = serde_json::Map::new();
    if matches!(method, DecodeMethod::Region | DecodeMethod::All) {
        let list = classes_for(&code, classes.classes.as_deref(), classes.allow_large)?.expand(MAX_EXPANDED_CLASSES)?;
        let ml: Vec<&[i64]> =
            list.iter().filter(|c| is_minimal_codeword_class(&code.h, c)).map(|c| c.entries()).collect();
        report.insert("ml".into(), outcome_json(&zero_region_test(ml, &llr)));
        report.insert("lp".into(), outcome_json(&zero_region_test(list.iter().map(|c| c.entries()), &llr)));
    }
    if matches!(method, DecodeMethod::Simplex | DecodeMethod::All) {
        if code.h.max_row_weight() <= LP_MAX_ROW_WEIGHT || method == DecodeMethod::Simplex {
            let r = lp_decode_simplex(&code.h, &llr)?;
            let mut v = verdict_json(&r.verdict);
            v["value"] = rat(&r.value);
            v["vertex"] = json!(r.vertex.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            report.insert("lp_simplex".into(), v);
        }
    }
    if matches!(method, DecodeMethod::Sp | DecodeMethod::All) {
        let f: Vec<f64> = llr
            .iter()
            .map(|l| match l {
                Llr::Finite(r) => fgcone_core::rational::to_f64(r),
                Llr::PosInf => 1e3,
            })
            .collect();
        let r = sum_product_decode(&code.h, &f, SP_MAX_ITERS);
        report.insert(
            "sp".into(),
            json!({
                "zero_wins": r.converged && r.bits.iter().all(|&b| b == 0),
                "converged": r.converged,
                "iterations": r.iterations,
                "bits": r.bits,
            }),
        );
    }
    Ok(Value::Object(report))
}

fn label(e: Effectiveness) -> &'static str {
    match e {
        Effectiveness::FirstKind => "first_kind",
        Effectiveness::SecondKindOnly => "second_kind_only",
        Effectiveness::NotEffective => "not_effective",
        Effectiveness::Unknown => "unknown",
    }
}

fn effective(code: &CodeArgs, classes: &ClassArgs, channel: ChannelKind, out: &Path) -> Result<Value> {
    let code = code.load()?;
    let list = classes_for(&code, classes.classes.as_deref(), classes.allow_large)?;
    let ch = pw_channel(channel);
    let opts = EffectivenessOptions { pg_q: code.pg_order(), ..Default::default() };
    let labels = classify_effectiveness(&list, ch, &opts)?;
    let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
    for (&l, &size) in labels.iter().zip(list.counts()) {
        *counts.entry(label(l)).or_default() += size;
    }
    let per_class: Vec<Value> = list
        .representatives()
        .iter()
        .zip(&labels)
        .zip(list.counts())
        .enumerate()
        .map(|(i, ((c, &l), &size))| {
            json!({
                "class_id": i,
                "orbit_size": size,
                "pseudo_weight": rat(&class_pw(c, ch)),
                "label": label(l),
            })
        })
        .collect();
    let mut report = json!({ "channel": ch.name(), "counts": counts, "classes": per_class });
    match channel {
        ChannelKind::Bec => {
            let odd = bec_odd_component_check(&code.h, list.representatives());
            let failing: Vec<usize> = odd.per_class.iter().enumerate().filter(|(_, &ok)| !ok).map(|(i, _)| i).collect();
            report["odd_component"] = json!({ "all_pass": odd.all_pass, "failing": failing });
        }
        ChannelKind::Bsc => {
            if let Some(q) = code.pg_order() {
                let radii: Vec<usize> = (1..=q as usize + 1).collect();
                match bsc_correction_radius(&code.h, q, &list, &radii) {
                    Ok(r) => {
                        report["correction_radius"] = json!({
                            "guaranteed": r.guaranteed,
                            "guaranteed_holds": r.guaranteed_holds,
                            "failure_size": r.failure_size,
                            "failure_holds": r.failure_holds,
                            "table": r.table.iter().map(|row| json!({
                                "flips": row.flips,
                                "patterns": row.patterns,
                                "zero_wins": row.zero_wins,
                                "ties": row.ties,
                                "loses": row.loses,
                            })).collect::<Vec<_>>(),
                        });
                    }
                    Err(fgcone_core::Error::SizeGuard(msg)) => {
                        report["correction_radius"] = json!({ "skipped": msg });
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        ChannelKind::Awgnc => {}
    }
    write_json(out, "effective.json", &report)?;
    Ok(json!({ "channel": ch.name(), "counts": report["counts"].clone() }))
}

fn verify(code: &CodeArgs, path: &Path, out: &Path) -> Result<Value> {
    let code = code.load()?;
    let records = read_class_records(std::io::BufReader::new(File::open(path)?))?;
    let group = if records.iter().any(|r| r.orbit_size.is_some()) { Some(code.group_elements()?) } else { None };
    let mut failures = Vec::new();
    let mut results = Vec::with_capacity(records.len());
    for rec in &records {
        let mut problems: Vec<String> = Vec::new();
        let w = match PseudoCodeword::from_integers(&rec.vector) {
            Ok(w) if w.len() == code.n() => Some(w),
            Ok(w) => {
                problems.push(format!("length {} instead of {}", w.len(), code.n()));
                None
            }
            Err(e) => {
                problems.push(e.to_string());
                None
            }
        };
        let mut weights = serde_json::Map::new();
        if let Some(w) = &w {
            if w.entries() != rec.vector.as_slice() {
                problems.push("vector is not primitive".into());
            }
            if !is_in_cone_int(&code.h, w.entries()) {
                problems.push("not in the fundamental cone".into());
            } else if !is_minimal_pcw(&code.h, w.entries())? {
                problems.push("not an extreme ray".into());
            }
            if w.is_codeword(&code.h) != rec.is_codeword {
                problems.push("is_codeword flag disagrees".into());
            }
            let fresh = crate::formats::ClassRecord::new(&code.h, rec.class_id, w);
            if fresh.type_counts != rec.type_counts {
                problems.push("type vector disagrees".into());
            }
            if let (Some(size), Some(group)) = (rec.orbit_size, &group) {
                let orbit: std::collections::HashSet<PseudoCodeword> = group.iter().map(|p| w.permuted(p)).collect();
                if orbit.len() as u64 != size {
                    problems.push(format!("orbit has {} classes, not {size}", orbit.len()));
                }
            }
            for ch in PwChannel::ALL {
                weights.insert(ch.name().into(), rat(&class_pw(w, ch)));
            }
        }
        if !problems.is_empty() {
            failures.push(rec.class_id);
        }
        results.push(json!({ "class_id": rec.class_id, "ok": problems.is_empty(), "problems": problems, "pseudo_weights": weights }));
    }
    let report = json!({ "classes": records.len(), "failures": failures, "results": results });
    write_json(out, "verify.json", &report)?;
    if !failures.is_empty() {
        return Err(Error::Check(format!("{} classes failed verification, see verify.json", failures.len())));
    }
    Ok(json!({ "classes": records.len(), "failures": 0 }))
}
