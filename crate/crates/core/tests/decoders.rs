use fgcone_core::cone::adjacency::{orbit_classes, WalkLimits};
use fgcone_core::cone::{enumerate_extreme_rays, is_in_cone_int, ClassSet, PseudoCodeword};
use fgcone_core::decode::{
    bec_llr_exact, bsc_correction_radius, canonical_completion, classify_effectiveness, inner, lp_decode_simplex,
    lp_decode_zero_region, ml_decode_zero_region, sum_product_decode, Effectiveness, EffectivenessOptions, Llr,
    Verdict,
};
use fgcone_core::geometry::{automorphism_generators, build_pg_plane};
use fgcone_core::pweight::Channel;
use fgcone_core::gf2::BitVec;
use fgcone_core::lincode::{enumerate_codewords, minimal_codewords, Codeword};
use fgcone_core::subsets::for_each_subset;
use fgcone_core::{ParityCheckMatrix, Rational};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

struct Fixture {
    h: ParityCheckMatrix,
    classes: Vec<PseudoCodeword>,
    words: Vec<Codeword>,
    minimal: Vec<BitVec>,
}

fn fixture() -> Fixture {
    let h = build_pg_plane(2).unwrap().incidence();
    let classes = enumerate_extreme_rays(&h, false).unwrap();
    let words = enumerate_codewords(&h, 20).unwrap();
    let minimal = minimal_codewords(&h, &words).iter().map(|c| c.bits().clone()).collect();
    Fixture { h, classes, words, minimal }
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

/// Exhaustive ML over all codewords.
fn ml_brute_force(words: &[Codeword], llr: &[Llr]) -> Kind {
    let mut min_nonzero: Option<Rational> = None;
    for c in words.iter().filter(|c| c.weight() > 0) {
        if let Some(v) = inner(&c.to_vec(), llr) {
            if min_nonzero.as_ref().is_none_or(|m| v < *m) {
                min_nonzero = Some(v);
            }
        }
    }
    match min_nonzero {
        Some(m) if m.is_negative() => Kind::Lose,
        Some(m) if m.is_zero() => Kind::Tie,
        _ => Kind::Zero,
    }
}

fn llr_strategy(n: usize) -> impl Strategy<Value = Vec<Llr>> {
    proptest::collection::vec((-6i64..=6, 1i64..=4), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| Llr::Finite(Rational::new(a.into(), b.into()))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn three_decoders_agree(llr in llr_strategy(7)) {
        let f = fixture();
        let region = lp_decode_zero_region(&llr, &f.classes);
        let simplex = lp_decode_simplex(&f.h, &llr).unwrap();
        prop_assert_eq!(kind(&region.verdict), kind(&simplex.verdict));
        let ml = ml_decode_zero_region(&llr, &f.minimal);
        prop_assert_eq!(kind(&ml.verdict), ml_brute_force(&f.words, &llr));
        if region.verdict.zero_wins() {
            prop_assert!(ml.verdict.zero_wins());
        }
        let integral = simplex.vertex.iter().all(|x| x.is_zero() || x.is_one());
        if integral {
            let bits: Vec<u8> = simplex.vertex.iter().map(|x| u8::from(x.is_one())).collect();
            prop_assert!(f.h.syndrome_is_zero(&BitVec::from_bits(&bits)));
        }
    }

    #[test]
    fn erasure_ties_are_covered_supports(erased in proptest::collection::vec(any::<bool>(), 7)) {
        let f = fixture();
        let set: Vec<usize> = (0..7).filter(|&i| erased[i]).collect();
        let llr = bec_llr_exact(7, &set);
        let out = lp_decode_zero_region(&llr, &f.classes);
        let covered = f.classes.iter().any(|c| c.support().iter().all(|i| erased[*i]));
        prop_assert_eq!(kind(&out.verdict), if covered { Kind::Tie } else { Kind::Zero });
        let simplex = lp_decode_simplex(&f.h, &llr).unwrap();
        prop_assert_eq!(kind(&simplex.verdict), kind(&out.verdict));
    }
}

#[test]
fn canonical_completion_stays_in_the_cone() {
    for q in [2u32, 4] {
        let h = build_pg_plane(q).unwrap().incidence();
        let n = h.n();
        for e in 0..=(q as usize + 1) {
            for_each_subset(n, e, |flips| {
                let w = canonical_completion(&h, q, flips).unwrap();
                assert!(is_in_cone_int(&h, w.entries()));
                // cost with L = 1: (n - e) - q e, up to the positive scaling
                let cost: i64 = (0..n).map(|i| if flips.contains(&i) { -w.entries()[i] } else { w.entries()[i] }).sum();
                assert_eq!(cost.signum(), ((n - e) as i64 - q as i64 * e as i64).signum());
            });
        }
    }
}

#[test]
fn sum_product_basics() {
    let h = build_pg_plane(2).unwrap().incidence();
    let r = sum_product_decode(&h, &[50.0; 7], 100);
    assert!(r.converged && r.bits == vec![0; 7] && r.iterations <= 1);
    for c in enumerate_codewords(&h, 20).unwrap() {
        let llr: Vec<f64> = c.to_vec().iter().map(|&b| if b == 1 { -4.0 } else { 4.0 }).collect();
        let r = sum_product_decode(&h, &llr, 100);
        assert!(r.converged);
        assert_eq!(r.bits, c.bits().to_bits());
    }
}

#[test]
fn orbit_lists_decide_like_plain_lists() {
    let plane = build_pg_plane(2).unwrap();
    let h = plane.incidence();
    let gens = automorphism_generators(&plane);
    let (orbits, _) = orbit_classes(&h, &gens, WalkLimits::default()).unwrap();
    let sym = ClassSet::from_orbits(orbits, gens.elements(1 << 20).unwrap());
    let plain = ClassSet::from_classes(enumerate_extreme_rays(&h, false).unwrap());
    let radii: Vec<usize> = (0..=7).collect();
    let a = bsc_correction_radius(&h, 2, &sym, &radii).unwrap();
    let b = bsc_correction_radius(&h, 2, &plain, &radii).unwrap();
    assert_eq!(a, b);
    assert!(a.guaranteed_holds && a.failure_holds);
    for opts in [
        EffectivenessOptions::default(),
        EffectivenessOptions { max_exhaustive_n: 0, ..Default::default() },
    ] {
        let exact = classify_effectiveness(&plain, Channel::Bsc, &opts).unwrap();
        let by_orbit = classify_effectiveness(&sym, Channel::Bsc, &opts).unwrap();
        for (r, l) in sym.representatives().iter().zip(&by_orbit) {
            let i = plain.representatives().binary_search(r).unwrap();
            assert_eq!(exact[i], *l);
        }
    }
    // the witness search never claims more than the exhaustive sweep
    let full = classify_effectiveness(&plain, Channel::Bsc, &EffectivenessOptions::default()).unwrap();
    let filtered = classify_effectiveness(
        &plain,
        Channel::Bsc,
        &EffectivenessOptions { max_exhaustive_n: 0, ..Default::default() },
    )
    .unwrap();
    for (f, e) in filtered.iter().zip(&full) {
        if *f == Effectiveness::FirstKind {
            assert_eq!(*e, Effectiveness::FirstKind);
        }
    }
}
