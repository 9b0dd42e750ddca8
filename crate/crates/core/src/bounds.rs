//! Lower bounds on the AWGNC pseudo-weight and an audit that evaluates every
//! applicable bound on a set of minimal pseudo-codewords.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cone::{cover_multiplier, syndrome, PseudoCodeword, TypeVector};
use crate::error::{Error, Result};
use crate::geometry::Family;
use crate::lincode;
use crate::matrix::ParityCheckMatrix;
use crate::pweight::{awgnc_pw, class_pw, is_minimal_codeword_class, Channel};
use crate::rational::{isqrt, Rational};

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn norms(w: &[Rational]) -> (Rational, Rational) {
    let l1: Rational = w.iter().sum();
    let l2: Rational = w.iter().map(|x| x * x).sum();
    (l1, l2)
}

/// `(2 eta ||w||_1 - ||w||_2^2) / eta^2`, a lower bound on the AWGNC
/// pseudo-weight for every nonzero `eta`, tight at `eta = ||w||_2^2 / ||w||_1`.
pub fn eta_lower_bound(w: &[Rational], eta: &Rational) -> Result<Rational> {
    if eta.is_zero() {
        return Err(Error::InvalidArgument("eta must be nonzero".into()));
    }
    let (l1, l2) = norms(w);
    Ok((r(2) * eta * l1 - l2) / (eta * eta))
}

/// The `eta` at which [`eta_lower_bound`] is tight (`None` for the zero vector).
pub fn optimal_eta(w: &[Rational]) -> Option<Rational> {
    let (l1, l2) = norms(w);
    (!l1.is_zero()).then(|| l2 / l1)
}

/// `sum_l beta_l t_l` with `beta_l = l (2 eta - l) / eta^2`.
pub fn cor1_bound(t: &TypeVector, eta: &Rational) -> Result<Rational> {
    if eta.is_zero() {
        return Err(Error::InvalidArgument("eta must be nonzero".into()));
    }
    let eta2 = eta * eta;
    Ok(t.counts
        .iter()
        .map(|(l, &c)| l * (r(2) * eta - l) / &eta2 * r(c as i64))
        .sum())
}

/// Ratio of the largest to the smallest positive entry, and the support size.
fn ratio_and_support(w: &[Rational]) -> Result<(Rational, usize)> {
    let positive: Vec<&Rational> = w.iter().filter(|x| !x.is_zero()).collect();
    let (Some(max), Some(min)) = (positive.iter().max(), positive.iter().min()) else {
        return Err(Error::ZeroVector);
    };
    Ok(((*max) / (*min), positive.len()))
}

/// `4 r / (r + 1)^2 * |supp(w)|`, where `r` is the ratio of the largest to
/// the smallest positive entry.
pub fn ratio_bound(w: &[Rational]) -> Result<Rational> {
    let (ratio, supp) = ratio_and_support(w)?;
    let d = &ratio + r(1);
    Ok(r(4) * &ratio / (&d * &d) * r(supp as i64))
}

/// `2 r^2 / ((1 + r^2)(r - 1) + 2 r) * |supp(w)|`.
pub fn ks_bound(w: &[Rational]) -> Result<Rational> {
    let (ratio, supp) = ratio_and_support(w)?;
    let r2 = &ratio * &ratio;
    let denom = (r(1) + &r2) * (&ratio - r(1)) + r(2) * &ratio;
    Ok(r(2) * r2 / denom * r(supp as i64))
}

/// Value patterns with a known bound for `PG(2,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgTypeClass {
    /// Values in {0, 1}, not a codeword.
    ZeroOne,
    /// Values in {0, 1, 2} with both 1 and 2 present.
    ZeroOneTwo,
    /// Values in {0, 1, 2}, at least `q + 2` ones, some twos.
    ZeroOneTwoManyOnes,
    /// Largest value `m >= 2`, at least `q + 2` odd entries.
    General(u32),
    /// Values in {0, 1, 2, 3} with 1 and 3 present, even integer syndrome.
    ZeroOneTwoThree,
}

/// `ceil(q/2 + 1 + sqrt(q^2 + 16 q + 16) / 2)` computed with integers.
fn zero_one_bound(q: u32) -> BigInt {
    let q = BigInt::from(q);
    let disc = &q * &q + BigInt::from(16) * &q + BigInt::from(16);
    let (root, exact) = isqrt(&disc);
    // value = (q + 2 + sqrt(disc)) / 2
    let base = &q + BigInt::from(2) + root;
    if exact {
        (base + BigInt::one()) / BigInt::from(2)
    } else {
        base / BigInt::from(2) + BigInt::one()
    }
}

pub fn pg_type_bound(q: u32, class: PgTypeClass) -> Result<Rational> {
    let q2 = r(i64::from(q) + 2);
    Ok(match class {
        PgTypeClass::ZeroOne => Rational::from_integer(zero_one_bound(q)),
        PgTypeClass::ZeroOneTwo => Rational::new(32.into(), 27.into()) * q2,
        PgTypeClass::ZeroOneTwoManyOnes => Rational::new(4.into(), 3.into()) * q2,
        PgTypeClass::General(m) => {
            if m < 2 {
                return Err(Error::InvalidArgument("the largest value must be at least 2".into()));
            }
            let m = i64::from(m);
            Rational::new((m * m).into(), (m * m - m + 1).into()) * q2
        }
        PgTypeClass::ZeroOneTwoThree => Rational::new(9.into(), 8.into()) * q2,
    })
}

/// Minimum pseudo-weight (all three channels) of the plane codes.
pub fn min_pw_formula(family: Family, q: u32) -> usize {
    match family {
        Family::Pg => q as usize + 2,
        Family::EgReduced => q as usize + 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub name: String,
    pub bound: Rational,
    pub actual: Rational,
    /// `true` if the bound is an upper bound on `actual`.
    pub upper: bool,
    pub satisfied: bool,
}

impl BoundResult {
    pub fn lower(name: &str, bound: Rational, actual: Rational) -> Self {
        let satisfied = actual >= bound;
        Self { name: name.into(), bound, actual, upper: false, satisfied }
    }

    pub fn upper(name: &str, bound: Rational, actual: Rational) -> Self {
        let satisfied = actual <= bound;
        Self { name: name.into(), bound, actual, upper: true, satisfied }
    }
}

/// Weight of a 0/1-valued minimal pseudo-codeword is at most `n - k + 1`.
pub fn lemma4_check(h: &ParityCheckMatrix, w: &PseudoCodeword) -> Result<BoundResult> {
    if !w.is_binary() {
        return Err(Error::Hypothesis("entries must be 0 or 1".into()));
    }
    let k = lincode::dimension(h);
    let bound = r((h.n() - k + 1) as i64);
    let actual = r(w.support().len() as i64);
    Ok(BoundResult::upper("binary_weight_upper", bound, actual))
}

/// Pattern hypotheses satisfied by a class, evaluated on its primitive
/// representative.
pub fn applicable_pg_classes(
    h: &ParityCheckMatrix,
    q: u32,
    w: &PseudoCodeword,
    relaxed_many_ones: bool,
) -> Vec<PgTypeClass> {
    let t = w.type_vector();
    let max = w.max_entry();
    let count = |v: i64| t.count_int(v);
    let only = |allowed: &[i64]| w.entries().iter().all(|v| *v == 0 || allowed.contains(v));
    let even_syndrome = cover_multiplier(h, w) == 1;
    let q2 = q as usize + 2;
    let mut out = Vec::new();
    if only(&[1]) && !w.is_codeword(h) {
        out.push(PgTypeClass::ZeroOne);
    }
    if only(&[1, 2]) && count(1) > 0 && count(2) > 0 {
        out.push(PgTypeClass::ZeroOneTwo);
        let many = if relaxed_many_ones { even_syndrome && count(1) >= 1 } else { count(1) >= q2 };
        if many {
            out.push(PgTypeClass::ZeroOneTwoManyOnes);
        }
    }
    if max >= 2 {
        let odd: usize = w.entries().iter().filter(|v| *v % 2 == 1).count();
        if odd >= q2 {
            out.push(PgTypeClass::General(max as u32));
        }
    }
    if only(&[1, 2, 3]) && count(1) > 0 && count(3) > 0 && even_syndrome {
        out.push(PgTypeClass::ZeroOneTwoThree);
    }
    out
}

fn class_name(c: PgTypeClass) -> String {
    match c {
        PgTypeClass::ZeroOne => "pg_zero_one".into(),
        PgTypeClass::ZeroOneTwo => "pg_zero_one_two".into(),
        PgTypeClass::ZeroOneTwoManyOnes => "pg_zero_one_two_many_ones".into(),
        PgTypeClass::General(m) => alloc::format!("pg_max_value_{m}"),
        PgTypeClass::ZeroOneTwoThree => "pg_zero_to_three_even".into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAudit {
    pub class_index: usize,
    pub results: Vec<BoundResult>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub classes: Vec<ClassAudit>,
    pub violations: Vec<(usize, String)>,
    /// Binary classes that are not minimal codewords.
    pub binary_noncodewords: Vec<usize>,
    /// Largest entry among the lightest non-codeword classes, and whether
    /// they all use exactly the values {0, 1, 2} with 1 and 2 present.
    pub lightest_noncodeword_max_value: Option<i64>,
    pub lightest_noncodewords_are_zero_one_two: Option<bool>,
    /// Number of binary non-codeword classes with fewer than `q + 1` odd
    /// syndrome rows.
    pub odd_row_shortfalls: usize,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Plane parameters used by the geometry-specific bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneInfo {
    pub family: Family,
    pub q: u32,
}

/// Evaluates every applicable bound on every class.
pub fn audit_bounds(
    h: &ParityCheckMatrix,
    classes: &[PseudoCodeword],
    plane: Option<PlaneInfo>,
    relaxed_many_ones: bool,
) -> Result<AuditReport> {
    let mut report = AuditReport {
        classes: Vec::with_capacity(classes.len()),
        violations: Vec::new(),
        binary_noncodewords: Vec::new(),
        lightest_noncodeword_max_value: None,
        lightest_noncodewords_are_zero_one_two: None,
        odd_row_shortfalls: 0,
    };
    let mut lightest: Option<(Rational, Vec<usize>)> = None;
    for (idx, w) in classes.iter().enumerate() {
        let v = w.to_rationals();
        let actual = awgnc_pw(&v)?;
        let mut results = Vec::new();
        if let Some(eta) = optimal_eta(&v) {
            let at_optimum = eta_lower_bound(&v, &eta)?;
            // the bound is tight at the optimal eta, so equality is demanded
            let mut tight = BoundResult::lower("eta_optimal", at_optimum.clone(), actual.clone());
            tight.satisfied = at_optimum == actual;
            results.push(tight);
            results.push(BoundResult::lower("type_weighted", cor1_bound(&w.type_vector(), &eta)?, actual.clone()));
            results.push(BoundResult::lower("eta_one", eta_lower_bound(&v, &Rational::one())?, actual.clone()));
        }
        results.push(BoundResult::lower("entry_ratio", ratio_bound(&v)?, actual.clone()));
        results.push(BoundResult::lower("entry_ratio_ks", ks_bound(&v)?, actual.clone()));
        let minimal_cw = is_minimal_codeword_class(h, w);
        if w.is_binary() {
            results.push(lemma4_check(h, w)?);
            if !minimal_cw {
                report.binary_noncodewords.push(idx);
            }
        }
        if let Some(p) = plane {
            let formula = r(min_pw_formula(p.family, p.q) as i64);
            for ch in Channel::ALL {
                let name = alloc::format!("min_pw_{}", ch.name());
                results.push(BoundResult::lower(&name, formula.clone(), class_pw(w, ch)));
            }
            if p.family == Family::Pg {
                for c in applicable_pg_classes(h, p.q, w, relaxed_many_ones) {
                    results.push(BoundResult::lower(&class_name(c), pg_type_bound(p.q, c)?, actual.clone()));
                }
                if w.is_binary() && !w.is_codeword(h) {
                    let s = syndrome(h, w.entries())?;
                    if s.odd_rows.len() < p.q as usize + 1 {
                        report.odd_row_shortfalls += 1;
                    }
                }
            }
        }
        for res in &results {
            if !res.satisfied {
                report.violations.push((idx, res.name.clone()));
            }
        }
        if !minimal_cw {
            match &mut lightest {
                Some((best, ids)) if *best == actual => ids.push(idx),
                Some((best, _)) if *best < actual => {}
                _ => lightest = Some((actual.clone(), alloc::vec![idx])),
            }
        }
        report.classes.push(ClassAudit { class_index: idx, results });
    }
    if let Some((_, ids)) = lightest {
        let max = ids.iter().map(|&i| classes[i].max_entry()).max();
        report.lightest_noncodeword_max_value = max;
        report.lightest_noncodewords_are_zero_one_two = Some(ids.iter().all(|&i| {
            let t = classes[i].type_vector();
            classes[i].max_entry() == 2 && t.count_int(1) > 0 && t.count_int(2) > 0
        }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn eta_bound_values() {
        let w = ints(&[1, 2, 2, 1, 2, 1, 1]);
        assert_eq!(eta_lower_bound(&w, &rat(16, 10)).unwrap(), rat(25, 4));
        assert_eq!(eta_lower_bound(&w, &int(1)).unwrap(), int(4));
        assert_eq!(eta_lower_bound(&ints(&[0, 0]), &int(3)).unwrap(), int(0));
        assert!(eta_lower_bound(&w, &int(0)).is_err());
    }

    #[test]
    fn cor1_values() {
        let t = TypeVector::of_integers(&[1, 2, 2, 1, 2, 1, 1]);
        assert_eq!(cor1_bound(&t, &rat(3, 2)).unwrap(), rat(56, 9));
        assert_eq!(cor1_bound(&TypeVector::of_integers(&[0, 0]), &int(1)).unwrap(), int(0));
    }

    #[test]
    fn ratio_bounds() {
        assert_eq!(ratio_bound(&ints(&[1, 0, 1, 1])).unwrap(), int(3));
        assert_eq!(ratio_bound(&ints(&[1, 2, 2, 1, 2, 1, 1])).unwrap(), rat(56, 9));
        assert_eq!(ks_bound(&ints(&[1, 2, 2, 1, 2, 1, 1])).unwrap(), rat(56, 9));
        let r3 = ints(&[1, 3, 3, 3, 3, 3, 3, 3, 3]);
        assert_eq!(ks_bound(&r3).unwrap(), rat(81, 13));
        assert_eq!(ratio_bound(&r3).unwrap(), rat(27, 4));
        assert_eq!(ratio_bound(&ints(&[0])), Err(Error::ZeroVector));
    }

    #[test]
    fn pg_bounds() {
        assert_eq!(pg_type_bound(2, PgTypeClass::ZeroOneTwo).unwrap(), rat(128, 27));
        assert_eq!(pg_type_bound(4, PgTypeClass::ZeroOneTwoManyOnes).unwrap(), int(8));
        assert_eq!(pg_type_bound(2, PgTypeClass::ZeroOne).unwrap(), int(6));
        assert_eq!(pg_type_bound(4, PgTypeClass::ZeroOne).unwrap(), int(8));
        assert_eq!(pg_type_bound(8, PgTypeClass::ZeroOne).unwrap(), int(13));
        assert_eq!(pg_type_bound(4, PgTypeClass::General(2)).unwrap(), int(8));
        assert!(pg_type_bound(4, PgTypeClass::General(1)).is_err());
    }

    #[test]
    fn formula() {
        assert_eq!(min_pw_formula(Family::Pg, 4), 6);
        assert_eq!(min_pw_formula(Family::EgReduced, 4), 5);
        assert_eq!(min_pw_formula(Family::Pg, 2), 4);
    }
}
