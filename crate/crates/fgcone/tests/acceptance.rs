//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. The random search budget of the last
//! criterion can be shortened with `FGCONE_SEARCH_SECONDS`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fgcone::pipeline::{enumerate, Code, Method};
use fgcone::search::{random_cone_search, SearchConfig};
use fgcone::simulate::{monte_carlo, union_upper_bound, ChannelKind, Decoder, RegionSet, SimConfig, SnrConvention};
use fgcone_core::bounds::{audit_bounds, pg_type_bound, PgTypeClass, PlaneInfo};
use fgcone_core::cone::overlap::{construct_overlap_sum, find_image_with_overlap, regular_hyperoval, search_raise_sets};
use fgcone_core::cone::{cone_inequalities, enumerate_extreme_rays, ClassSet, PseudoCodeword};
use fgcone_core::decode::{
    bec_odd_component_check, bsc_correction_radius, inner, lp_decode_simplex, lp_decode_zero_region,
    ml_decode_zero_region, Llr, Verdict,
};
use fgcone_core::geometry::{automorphism_generators, build_eg_plane_reduced, build_pg_plane};
use fgcone_core::gf2::BitVec;
use fgcone_core::lincode::{dimension, enumerate_codewords, hamming_spectra, minimal_codewords, Codeword};
use fgcone_core::pweight::{class_pw, is_minimal_codeword_class, spectrum_gap, Channel};
use fgcone_core::rational::{int, rat, to_f64};
use fgcone_core::{Family, ParityCheckMatrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn reference_fano() -> ParityCheckMatrix {
    let rows = [
        [1, 1, 0, 1, 0, 0, 0],
        [0, 1, 1, 0, 1, 0, 0],
        [0, 0, 1, 1, 0, 1, 0],
        [0, 0, 0, 1, 1, 0, 1],
        [1, 0, 0, 0, 1, 1, 0],
        [0, 1, 0, 0, 0, 1, 1],
        [1, 0, 1, 0, 0, 0, 1],
    ];
    ParityCheckMatrix::from_dense(&rows.map(|r| r.to_vec())).unwrap()
}

fn four_row_fano() -> ParityCheckMatrix {
    reference_fano().select_rows(&[0, 1, 2, 3]).unwrap()
}

fn vectors(list: &[&[i64]]) -> BTreeSet<Vec<i64>> {
    list.iter().map(|v| v.to_vec()).collect()
}

fn cyclic_shifts(v: &[i64]) -> Vec<Vec<i64>> {
    (0..v.len()).map(|s| (0..v.len()).map(|i| v[(i + v.len() - s) % v.len()]).collect()).collect()
}

fn spectrum_of(classes: &[PseudoCodeword], ch: Channel) -> Vec<(Rational, u64)> {
    ClassSet::from_classes(classes.to_vec()).spectrum(ch).terms().map(|(p, c)| (p.clone(), c)).collect()
}

fn pairs(list: &[(Rational, u64)]) -> String {
    list.iter().map(|(p, c)| format!("{c}@{p}")).collect::<Vec<_>>().join(" + ")
}

fn gaps(h: &ParityCheckMatrix, classes: &[PseudoCodeword], d_min: usize) -> Vec<Rational> {
    Channel::ALL.iter().map(|&ch| spectrum_gap(h, classes, ch, d_min, true).gap.unwrap()).collect()
}

fn show(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Golden enumeration of a small matrix: class count, spectra per channel
/// and gaps, all exact.
fn golden(
    h: &ParityCheckMatrix,
    count: usize,
    spectra: [&[(Rational, u64)]; 3],
    expected_gaps: [Rational; 3],
    limit: Duration,
) -> (Vec<PseudoCodeword>, Outcome) {
    let start = Instant::now();
    let classes = enumerate_extreme_rays(h, false).unwrap();
    let elapsed = start.elapsed();
    let mut ok = classes.len() == count && elapsed < limit;
    let mut detail = format!("{} classes in {:.3}s", classes.len(), elapsed.as_secs_f64());
    for (ch, want) in Channel::ALL.iter().zip(spectra) {
        let got = spectrum_of(&classes, *ch);
        ok &= got == want;
        detail += &format!("; {} {}", ch.name(), pairs(&got));
    }
    let g = gaps(h, &classes, 4);
    ok &= g == expected_gaps;
    detail += &format!("; gaps {}", show(&g));
    (classes, check(ok, detail))
}

fn criterion_1() -> (Vec<PseudoCodeword>, Outcome) {
    let h = reference_fano();
    let (classes, outcome) = golden(
        &h,
        14,
        [&[(int(4), 7), (rat(25, 4), 7)], &[(int(4), 7), (int(5), 7)], &[(int(4), 7), (int(7), 7)]],
        [rat(9, 4), int(1), int(3)],
        Duration::from_secs(1),
    );
    // the listed representatives are exactly the classes
    let mut listed: BTreeSet<Vec<i64>> = cyclic_shifts(&[1, 0, 0, 1, 0, 1, 1]).into_iter().collect();
    listed.extend(cyclic_shifts(&[1, 2, 2, 1, 2, 1, 1]));
    let found: BTreeSet<Vec<i64>> = classes.iter().map(|c| c.entries().to_vec()).collect();
    let outcome = match outcome {
        Ok(d) if found == listed => Ok(d + "; listed vectors match"),
        Ok(d) => Err(d + "; listed vectors differ"),
        e => e,
    };
    (classes, outcome)
}

fn criterion_2() -> (Vec<PseudoCodeword>, Outcome) {
    let h = four_row_fano();
    let (classes, outcome) = golden(
        &h,
        20,
        [&[(int(4), 11), (rat(9, 2), 9)], &[(int(3), 3), (int(4), 17)], &[(int(4), 8), (int(5), 12)]],
        [int(0), int(-1), int(0)],
        Duration::from_secs(1),
    );
    let listed = vectors(&[
        &[3, 2, 1, 1, 1, 0, 0],
        &[0, 1, 2, 1, 1, 3, 0],
        &[0, 1, 1, 1, 2, 0, 3],
        &[0, 1, 1, 1, 1, 0, 0],
        &[2, 1, 1, 1, 0, 0, 1],
        &[1, 2, 1, 1, 1, 0, 0],
        &[0, 1, 2, 1, 1, 1, 0],
        &[0, 1, 1, 1, 0, 2, 1],
        &[1, 0, 1, 1, 1, 0, 2],
        &[2, 1, 0, 1, 1, 1, 0],
        &[0, 1, 1, 1, 2, 0, 1],
        &[1, 0, 1, 1, 1, 2, 0],
        &[0, 1, 0, 1, 1, 1, 2],
    ]);
    let found: BTreeSet<Vec<i64>> =
        classes.iter().filter(|c| !c.is_codeword(&h)).map(|c| c.entries().to_vec()).collect();
    let outcome = match outcome {
        Ok(d) if found == listed => Ok(d + "; listed non-codewords match"),
        Ok(d) => Err(d + "; listed non-codewords differ"),
        e => e,
    };
    (classes, outcome)
}

fn enumerator_matches(h: &ParityCheckMatrix, full: &[(usize, u64)], minimal: &[(usize, u64)]) -> (bool, String) {
    let (f, m) = hamming_spectra(h).unwrap();
    let f: Vec<(usize, u64)> = f.terms().collect();
    let m: Vec<(usize, u64)> = m.terms().collect();
    (f == full && m == minimal, format!("enumerators {f:?} / {m:?}"))
}

fn criterion_3(code: &Code) -> (ClassSet, Outcome) {
    let start = Instant::now();
    let set = enumerate(code, Method::Symmetric, false).unwrap().set;
    let elapsed = start.elapsed();
    let h = &code.h;
    let (mut ok, mut detail) = enumerator_matches(
        h,
        &[(0, 1), (6, 168), (8, 210), (10, 1008), (12, 280), (14, 360), (16, 21)],
        &[(6, 168), (8, 210), (10, 1008)],
    );
    // the minimal codewords appear among the classes, counted by orbit
    let codeword_classes: u64 = set
        .representatives()
        .iter()
        .zip(set.counts())
        .filter(|(c, _)| is_minimal_codeword_class(h, c))
        .map(|(_, &k)| k)
        .sum();
    ok &= codeword_classes == 168 + 210 + 1008;
    let g = gaps(h, set.representatives(), 6);
    ok &= g == [rat(19, 5), int(1), int(5)];
    let mins: Vec<Rational> = Channel::ALL.iter().map(|&ch| set.spectrum(ch).min().unwrap().clone()).collect();
    ok &= mins.iter().all(|m| *m == int(6));
    ok &= elapsed < Duration::from_secs(3600);
    detail = format!(
        "{} classes in {} orbits, {:.1}s; {detail}; gaps {}; min pseudo-weights {}",
        set.total(),
        set.num_orbits(),
        elapsed.as_secs_f64(),
        show(&g),
        show(&mins)
    );
    (set, check(ok, detail))
}

fn criterion_4(h: &ParityCheckMatrix) -> (Vec<PseudoCodeword>, Outcome) {
    let start = Instant::now();
    let classes = enumerate_extreme_rays(h, false).unwrap();
    let elapsed = start.elapsed();
    let (mut ok, detail) = enumerator_matches(
        h,
        &[(0, 1), (5, 18), (6, 30), (7, 15), (8, 15), (9, 30), (10, 18), (15, 1)],
        &[(5, 18), (6, 30), (7, 15), (8, 15), (9, 30)],
    );
    let g = spectrum_gap(h, &classes, Channel::Awgnc, 5, true);
    ok &= g.min_noncodeword_pw == Some(rat(169, 19)) && g.gap == Some(rat(169, 19) - int(5));
    let mins: Vec<Rational> =
        Channel::ALL.iter().map(|&ch| classes.iter().map(|c| class_pw(c, ch)).min().unwrap()).collect();
    ok &= mins.iter().all(|m| *m == int(5));
    ok &= elapsed < Duration::from_secs(600);
    let detail = format!(
        "{} classes in {:.1}s; {detail}; awgnc gap {} - 5; min pseudo-weights {}",
        classes.len(),
        elapsed.as_secs_f64(),
        g.min_noncodeword_pw.unwrap(),
        show(&mins)
    );
    (classes, check(ok, detail))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    for q in [2u32, 4, 8] {
        let h = build_pg_plane(q).unwrap().incidence();
        let n = h.n();
        // (H^T H)[a][b] counts the checks containing both columns
        for a in 0..n {
            for b in 0..n {
                let common = h.col(a).iter().filter(|j| h.col(b).contains(j)).count() as u32;
                ok &= common == if a == b { q + 1 } else { 1 };
            }
        }
    }
    check(ok, "H^T H = qI + J for q = 2, 4, 8".into())
}

fn criterion_6(datasets: &[(&str, &ParityCheckMatrix, &[PseudoCodeword], Option<PlaneInfo>)]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, h, classes, plane) in datasets {
        let report = audit_bounds(h, classes, *plane, false).unwrap();
        let checks: usize = report.classes.iter().map(|c| c.results.len()).sum();
        ok &= report.is_clean();
        parts.push(format!("{name}: {checks} checks, {} violations", report.violations.len()));
    }
    // spot values from two hyperovals meeting in half their points
    let spot = |q: u32, raise: usize| -> Rational {
        let plane = build_pg_plane(q).unwrap();
        let h = plane.incidence();
        let oval = regular_hyperoval(&plane).unwrap();
        let gens = automorphism_generators(&plane);
        let other = find_image_with_overlap(&gens, &oval, (q as usize + 2) / 2, 1 << 16).unwrap();
        let x1 = BitVec::from_indices(h.n(), &oval);
        let x2 = BitVec::from_indices(h.n(), &other);
        let sets = search_raise_sets(&h, &x1, &x2, raise, 2).unwrap();
        let c = construct_overlap_sum(&h, &x1, &x2, &sets[0], &int(2)).unwrap();
        let w = PseudoCodeword::normalize(&c.vector).unwrap();
        assert!(c.in_cone && c.minimal);
        class_pw(&w, Channel::Awgnc)
    };
    let b = |q, class| pg_type_bound(q, class).unwrap();
    let (p2, p4) = (spot(2, 1), spot(4, 2));
    let (l2, m2) = (b(2, PgTypeClass::ZeroOneTwo), b(2, PgTypeClass::ZeroOneTwoManyOnes));
    let (l4, m4) = (b(4, PgTypeClass::ZeroOneTwo), b(4, PgTypeClass::ZeroOneTwoManyOnes));
    ok &= p2 == rat(25, 4) && l2 == rat(128, 27) && m2 == rat(16, 3);
    ok &= (to_f64(&p4) - 9.85).abs() < 5e-3 && l4 == rat(64, 9) && m4 == int(8);
    ok &= p2 >= m2 && p4 >= m4;
    parts.push(format!("q=2: {p2} vs {{{l2}, {m2}}}; q=4: {p4} vs {{{l4}, {m4}}}"));
    check(ok, parts.join("; "))
}

/// Fraction-free determinant.
fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Rays by brute force: every `n - 1` inequalities of full rank define a
/// line, kept when one of its directions satisfies all inequalities.
fn brute_force_rays(h: &ParityCheckMatrix) -> BTreeSet<Vec<i64>> {
    let n = h.n();
    let desc = cone_inequalities(h);
    let rows: Vec<&Vec<i64>> = desc.rows().iter().map(|r| &r.coeffs).collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::with_capacity(n - 1);
    fn go(
        start: usize,
        rows: &[&Vec<i64>],
        n: usize,
        chosen: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<i64>>,
    ) {
        if chosen.len() == n - 1 {
            let v: Vec<i128> = (0..n)
                .map(|skip| {
                    let minor: Vec<Vec<i128>> = chosen
                        .iter()
                        .map(|&r| (0..n).filter(|&c| c != skip).map(|c| i128::from(rows[r][c])).collect())
                        .collect();
                    if skip % 2 == 0 {
                        det(minor)
                    } else {
                        -det(minor)
                    }
                })
                .collect();
            if v.iter().all(|&x| x == 0) {
                return;
            }
            for sign in [1i128, -1] {
                let w: Vec<i128> = v.iter().map(|x| x * sign).collect();
                let inside =
                    rows.iter().all(|r| r.iter().zip(&w).map(|(&a, &b)| i128::from(a) * b).sum::<i128>() >= 0);
                if inside {
                    let g = w.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                    out.insert(w.iter().map(|&x| (x / g) as i64).collect());
                }
            }
            return;
        }
        for i in start..rows.len() {
            chosen.push(i);
            go(i + 1, rows, n, chosen, out);
            chosen.pop();
        }
    }
    go(0, &rows, n, &mut chosen, &mut out);
    out
}

fn criterion_7() -> Outcome {
    let mut suite = vec![("H", reference_fano()), ("H'", four_row_fano())];
    for n in 3..=7 {
        suite.push(("single check", ParityCheckMatrix::from_row_supports(n, vec![(0..n).collect()]).unwrap()));
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, h) in &suite {
        let dd: BTreeSet<Vec<i64>> =
            enumerate_extreme_rays(h, false).unwrap().iter().map(|w| w.entries().to_vec()).collect();
        let oracle = brute_force_rays(h);
        ok &= dd == oracle;
        parts.push(format!("{name} n={}: {}", h.n(), oracle.len()));
    }
    check(ok, parts.join(", "))
}

#[derive(Debug, PartialEq, Eq)]
enum Kind {
    Zero,
    Tie,
    Lose,
}

fn kind(v: &Verdict) -> Kind {
    match v {
        Verdict::ZeroWins => Kind::Zero,
        Verdict::Tie { .. } => Kind::Tie,
        Verdict::Loses { .. } => Kind::Lose,
    }
}

fn ml_brute_force(words: &[Codeword], llr: &[Llr]) -> Kind {
    let best = words.iter().filter(|c| c.weight() > 0).filter_map(|c| inner(&c.to_vec(), llr)).min();
    match best {
        Some(m) if m < int(0) => Kind::Lose,
        Some(m) if m == int(0) => Kind::Tie,
        _ => Kind::Zero,
    }
}

fn criterion_8(cases: &[(&ParityCheckMatrix, &[PseudoCodeword])], trials: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut ok = true;
    let mut parts = Vec::new();
    for (h, classes) in cases {
        let n = h.n();
        let words = enumerate_codewords(h, 20).unwrap();
        let minimal: Vec<BitVec> = minimal_codewords(h, &words).iter().map(|c| c.bits().clone()).collect();
        let (mut agree, mut ml_agree, mut implied, mut ties) = (0, 0, 0, 0);
        for _ in 0..trials {
            let llr: Vec<Llr> =
                (0..n).map(|_| Llr::Finite(rat(rng.random_range(-6..=6), rng.random_range(1..=4)))).collect();
            let region = lp_decode_zero_region(&llr, classes);
            let simplex = lp_decode_simplex(h, &llr).unwrap();
            let ml = ml_decode_zero_region(&llr, &minimal);
            agree += usize::from(kind(&region.verdict) == kind(&simplex.verdict));
            ml_agree += usize::from(kind(&ml.verdict) == ml_brute_force(&words, &llr));
            implied += usize::from(!region.verdict.zero_wins() || ml.verdict.zero_wins());
            ties += usize::from(kind(&region.verdict) == Kind::Tie);
        }
        ok &= agree == trials && ml_agree == trials && implied == trials;
        parts.push(format!(
            "n={n}: lp {agree}/{trials}, ml {ml_agree}/{trials}, lp zero => ml zero {implied}/{trials} ({ties} lp ties)"
        ));
    }
    check(ok, parts.join("; "))
}

fn criterion_9(cases: &[(u32, &ParityCheckMatrix, &ClassSet)]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, h, set) in cases {
        let r = bsc_correction_radius(h, *q, set, &[*q as usize / 2]).unwrap();
        let row = &r.table[0];
        ok &= r.guaranteed_holds && r.failure_holds && row.zero_wins == row.patterns;
        parts.push(format!(
            "q={q}: {}/{} patterns of {} flips decode to zero, all C({}, {}) = {} patterns of {} flips fail",
            row.zero_wins,
            row.patterns,
            r.guaranteed,
            h.n(),
            r.failure_size,
            fgcone_core::subsets::binomial(h.n(), r.failure_size),
            r.failure_size
        ));
    }
    check(ok, parts.join("; "))
}

fn criterion_10(cases: &[(u32, &ParityCheckMatrix, &[PseudoCodeword], u64)]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, h, reps, total) in cases {
        let r = bec_odd_component_check(h, reps);
        let passing = r.per_class.iter().filter(|&&b| b).count();
        ok &= r.all_pass;
        parts.push(format!("q={q}: {passing}/{} representatives ({total} classes)", reps.len()));
    }
    check(ok, parts.join("; "))
}

fn criterion_11(h: &ParityCheckMatrix, classes: &[PseudoCodeword]) -> Outcome {
    let grid = vec![2.0, 3.0, 4.0, 5.0];
    let trials = 100_000;
    let minimal: Vec<PseudoCodeword> = classes.iter().filter(|c| is_minimal_codeword_class(h, c)).cloned().collect();
    let ml = RegionSet::from_classes(h.n(), &minimal);
    let lp = RegionSet::from_classes(h.n(), classes);
    let rate = dimension(h) as f64 / h.n() as f64;
    let cfg = SimConfig { rate, convention: SnrConvention::Eb, ..SimConfig::new(ChannelKind::Awgnc, grid.clone(), trials, 11) };
    let points = monte_carlo(h, Some(&ml), Some(&lp), &cfg).unwrap();
    let bound = union_upper_bound(classes, ChannelKind::Awgnc, &grid, SnrConvention::Eb, rate);
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, &g) in grid.iter().enumerate() {
        let at = |d: Decoder| points.iter().find(|p| p.decoder == d && p.grid_value == g).unwrap();
        let (m, l, s) = (at(Decoder::Ml), at(Decoder::Lp), at(Decoder::Sp));
        // ordering within the 95% intervals
        ok &= m.ci_low <= l.ci_high && l.ci_low <= s.ci_high;
        ok &= l.ci_low <= bound[k].bound;
        parts.push(format!(
            "{g} dB: ml {:.2e} <= lp {:.2e} <= sp {:.2e}, lp bound {:.2e}",
            m.wer, l.wer, s.wer, bound[k].bound
        ));
    }
    check(ok, format!("{trials} trials per point, Eb/N0; {}", parts.join("; ")))
}

fn criterion_12() -> Outcome {
    let seconds: f64 = std::env::var("FGCONE_SEARCH_SECONDS").ok().and_then(|s| s.parse().ok()).unwrap_or(600.0);
    let code = Code::generated(Family::Pg, 8).unwrap();
    let mut cfg = SearchConfig::new(u64::MAX, 12);
    cfg.budget = Some(Duration::from_secs_f64(seconds));
    let report = random_cone_search(&code.h, &cfg).unwrap();
    let threshold = int(16);
    let below = report.below(&code.h, &threshold);
    let best = report.best_noncodeword_awgnc.clone().unwrap_or_else(|| "none".into());
    let mut detail = format!(
        "observation only: {} trials in {:.0}s (budget {seconds}s), {} distinct classes, lightest non-codeword {best}",
        report.trials_run, report.elapsed_seconds, report.distinct_classes
    );
    if below.is_empty() {
        detail += "; none below 16";
    } else {
        detail += &format!("; FALSIFICATION EVENT: {} classes below 16, e.g. {:?}", below.len(), below[0].entries());
    }
    Ok(detail)
}

fn main() {
    // `cargo test` passes harness flags such as `--nocapture`; a name
    // filter that does not mention this suite skips it
    let args: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if !args.is_empty() && !args.iter().any(|a| "acceptance".contains(a.as_str())) {
        return;
    }
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut report = |k: usize, name: &'static str, outcome: Outcome| {
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {k:>2} {tag} {name} [{}]: {detail}", tolerance(k));
        results.push((k, name, outcome));
    };

    let (pg2, r1) = criterion_1();
    report(1, "PG(2,2) golden enumeration", r1);
    let (sub, r2) = criterion_2();
    report(2, "four-row PG(2,2) golden enumeration", r2);
    let pg4 = Code::generated(Family::Pg, 4).unwrap();
    let (pg4_set, r3) = criterion_3(&pg4);
    report(3, "PG(2,4) symmetric enumeration", r3);
    let eg4 = build_eg_plane_reduced(4).unwrap().incidence();
    let (eg4_classes, r4) = criterion_4(&eg4);
    report(4, "EG(2,4) enumeration", r4);
    report(5, "PG Gram identity", criterion_5());
    let pg_plane = |q| Some(PlaneInfo { family: Family::Pg, q });
    report(
        6,
        "bound audit",
        criterion_6(&[
            ("PG(2,2)", &reference_fano(), &pg2, pg_plane(2)),
            ("four-row PG(2,2)", &four_row_fano(), &sub, None),
            ("PG(2,4)", &pg4.h, pg4_set.representatives(), pg_plane(4)),
            ("EG(2,4)", &eg4, &eg4_classes, Some(PlaneInfo { family: Family::EgReduced, q: 4 })),
        ]),
    );
    report(7, "brute-force oracle equals double description", criterion_7());
    report(8, "decoder consistency", criterion_8(&[(&reference_fano(), &pg2), (&eg4, &eg4_classes)], 1000));
    let pg2_set = ClassSet::from_classes(pg2.clone());
    report(9, "BSC correction radius", criterion_9(&[(2, &reference_fano(), &pg2_set), (4, &pg4.h, &pg4_set)]));
    report(
        10,
        "odd component of cover-realizable representatives",
        criterion_10(&[(2, &reference_fano(), &pg2, 14), (4, &pg4.h, pg4_set.representatives(), pg4_set.total())]),
    );
    report(11, "EG(2,4) word error rate ordering", criterion_11(&eg4, &eg4_classes));
    report(12, "PG(2,8) random search", criterion_12());

    let failed: Vec<usize> = results.iter().filter(|r| r.2.is_err()).map(|r| r.0).collect();
    println!("acceptance: {} of {} criteria passed", results.len() - failed.len(), results.len());
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

fn tolerance(k: usize) -> &'static str {
    match k {
        1 | 2 => "exact, under 1 s",
        3 => "exact, under 1 h",
        4 => "exact, under 10 min",
        5 | 6 | 7 => "exact",
        8 => "100% of 1000 draws per length",
        9 | 10 => "100%, exhaustive",
        11 => "95% Wilson intervals, 1e5 trials",
        _ => "observational, threshold 16",
    }
}
