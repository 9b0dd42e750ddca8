//! Double description method for pointed cones `{x : A x >= 0}` whose
//! description contains all non-negativity rows.
//!
//! Rays carry their zero sets as bitsets over the constraints processed so
//! far; two rays are adjacent iff their common zero set has at least
//! `n - 2` elements and is contained in no other ray's zero set.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, One, Signed, ToPrimitive, Zero};

use super::{linalg, ConeDescription, RowTag};
use crate::rational::Rational;
use crate::error::{Error, Result};

/// Integer type usable for ray coordinates.
pub trait RayInt:
    Clone + Ord + Integer + Signed + CheckedMul + CheckedAdd + From<i64> + ToPrimitive
{
}

impl RayInt for i64 {}
impl RayInt for i128 {}
impl RayInt for BigInt {}

/// Largest number of constraints the bitset representation supports.
pub const MAX_ROWS: usize = 64 * 16;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Bits<const W: usize>([u64; W]);

impl<const W: usize> Bits<W> {
    fn empty() -> Self {
        Self([0; W])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Self) -> Self {
        let mut out = [0u64; W];
        for k in 0..W {
            out[k] = self.0[k] & other.0[k];
        }
        Self(out)
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn subset_of(&self, other: &Self) -> bool {
        (0..W).all(|k| self.0[k] & !other.0[k] == 0)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..W).flat_map(move |k| {
            let mut word = self.0[k];
            core::iter::from_fn(move || {
                (word != 0).then(|| {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    64 * k + b
                })
            })
        })
    }
}

/// Per-iteration sizes, useful for tuning insertion orders.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DdStats {
    /// Number of rays after each processed constraint.
    pub ray_counts: Vec<usize>,
    /// Number of candidate pairs that passed the cardinality filter.
    pub candidate_pairs: u64,
}

impl DdStats {
    pub fn max_intermediate(&self) -> usize {
        self.ray_counts.iter().copied().max().unwrap_or(0)
    }
}

/// Default insertion order: non-negativity rows, then the rows to be held
/// at equality, then the check rows sorted by density (stable on ties).
pub fn default_order(desc: &ConeDescription, equalities: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..desc.rows().len())
        .filter(|&r| matches!(desc.rows()[r].tag, RowTag::NonNeg(_)))
        .collect();
    order.sort_by_key(|&r| match desc.rows()[r].tag {
        RowTag::NonNeg(i) => i,
        RowTag::Check { .. } => usize::MAX,
    });
    order.extend(equalities.iter().copied());
    let mut rest: Vec<usize> = (0..desc.rows().len())
        .filter(|r| !order.contains(r))
        .collect();
    rest.sort_by_key(|&r| desc.rows()[r].coeffs.iter().filter(|&&c| c != 0).count());
    order.extend(rest);
    order
}

/// Extreme rays of `{x : a_r x >= 0 for all rows r, a_e x = 0 for e in
/// equalities}` as primitive non-negative integer vectors, in no particular
/// order. The description must contain one non-negativity row per
/// coordinate.
pub fn extreme_rays(desc: &ConeDescription, equalities: &[usize]) -> Result<(Vec<Vec<i64>>, DdStats)> {
    let order = default_order(desc, equalities);
    extreme_rays_ordered(desc, &order, equalities)
}

pub fn extreme_rays_ordered(
    desc: &ConeDescription,
    order: &[usize],
    equalities: &[usize],
) -> Result<(Vec<Vec<i64>>, DdStats)> {
    extreme_rays_observed(desc, order, equalities, &mut |_, _| {})
}

/// Like [`extreme_rays_ordered`], calling `observer(step, rays)` after every
/// processed constraint.
pub fn extreme_rays_observed(
    desc: &ConeDescription,
    order: &[usize],
    equalities: &[usize],
    observer: &mut dyn FnMut(usize, usize),
) -> Result<(Vec<Vec<i64>>, DdStats)> {
    let rows = desc.rows().len();
    if rows > MAX_ROWS {
        return Err(Error::SizeGuard(alloc::format!(
            "double description supports at most {MAX_ROWS} constraints, got {rows}"
        )));
    }
    let coeffs: Vec<&[i64]> = desc.rows().iter().map(|r| r.coeffs.as_slice()).collect();
    rays_i64_with_fallback(desc.n(), &coeffs, order, equalities, observer)
}

fn rays_i64_with_fallback(
    n: usize,
    rows: &[&[i64]],
    order: &[usize],
    equalities: &[usize],
    observer: &mut dyn FnMut(usize, usize),
) -> Result<(Vec<Vec<i64>>, DdStats)> {
    match run_dispatch::<i64>(n, rows, order, equalities, observer) {
        Ok(res) => Ok(res),
        Err(Error::Overflow) => {
            let (rays, stats) = run_dispatch::<BigInt>(n, rows, order, equalities, observer)?;
            let rays = rays
                .into_iter()
                .map(|r| r.into_iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect())
                .collect::<Result<Vec<Vec<i64>>>>()?;
            Ok((rays, stats))
        }
        Err(e) => Err(e),
    }
}

/// Extreme rays of the pointed cone `{x in Q^dim : a x >= 0 for all rows}`,
/// as primitive integer vectors. A basis of `dim` independent rows is
/// turned into non-negativity constraints by the change of variables
/// `x = B^-1 y`; the remaining rows follow in order of density.
pub fn pointed_cone_rays(rows: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<BigInt>>> {
    let mut rows: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&c| c != 0)).cloned().collect();
    rows.sort();
    rows.dedup();
    let basis = linalg::independent_rows_mod_p(&rows, dim);
    if basis.len() != dim {
        return Err(Error::InvalidArgument("cone is not pointed".into()));
    }
    if rows.len() > MAX_ROWS {
        return Err(Error::SizeGuard(alloc::format!(
            "double description supports at most {MAX_ROWS} constraints, got {}",
            rows.len()
        )));
    }
    // m = D * B^-1 with D > 0 clearing all denominators
    let b: Vec<Vec<Rational>> = basis
        .iter()
        .map(|&r| rows[r].iter().map(|&c| Rational::from_integer(c.into())).collect())
        .collect();
    let inv = linalg::inverse(&b).ok_or_else(|| Error::InvalidArgument("singular basis".into()))?;
    let denom = inv.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let m: Vec<Vec<BigInt>> = inv
        .iter()
        .map(|row| row.iter().map(|x| (x * Rational::from_integer(denom.clone())).to_integer()).collect())
        .collect();
    let mut transformed: Vec<Vec<i64>> = (0..dim)
        .map(|k| {
            let mut e = vec![0i64; dim];
            e[k] = 1;
            e
        })
        .collect();
    let mut rest: Vec<Vec<i64>> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        if basis.contains(&r) {
            continue;
        }
        let mut t: Vec<BigInt> = (0..dim)
            .map(|k| row.iter().enumerate().fold(BigInt::zero(), |acc, (i, &a)| acc + &m[i][k] * BigInt::from(a)))
            .collect();
        make_primitive(&mut t);
        if t.iter().all(Zero::is_zero) {
            continue;
        }
        rest.push(t.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect::<Result<Vec<i64>>>()?);
    }
    rest.sort_by_key(|r| r.iter().filter(|&&c| c != 0).count());
    transformed.extend(rest);
    let slices: Vec<&[i64]> = transformed.iter().map(Vec::as_slice).collect();
    let order: Vec<usize> = (0..slices.len()).collect();
    let (ys, _) = rays_i64_with_fallback(dim, &slices, &order, &[], &mut |_, _| {})?;
    Ok(ys
        .iter()
        .map(|y| {
            let mut x: Vec<BigInt> = m
                .iter()
                .map(|row| row.iter().zip(y).fold(BigInt::zero(), |acc, (a, &b)| acc + a * BigInt::from(b)))
                .collect();
            make_primitive(&mut x);
            x
        })
        .collect())
}

fn run_dispatch<T: RayInt>(
    n: usize,
    rows: &[&[i64]],
    order: &[usize],
    equalities: &[usize],
    observer: &mut dyn FnMut(usize, usize),
) -> Result<(Vec<Vec<T>>, DdStats)> {
    if order.len() <= 128 {
        run::<T, 2>(n, rows, order, equalities, observer)
    } else if order.len() <= 256 {
        run::<T, 4>(n, rows, order, equalities, observer)
    } else {
        run::<T, 16>(n, rows, order, equalities, observer)
    }
}

fn unit_index(coeffs: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &c) in coeffs.iter().enumerate() {
        match c {
            0 => {}
            1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

fn dot<T: RayInt>(coeffs: &[i64], v: &[T]) -> Result<T> {
    let mut acc = T::zero();
    for (&c, x) in coeffs.iter().zip(v) {
        if c == 0 || x.is_zero() {
            continue;
        }
        let term = x.checked_mul(&T::from(c)).ok_or(Error::Overflow)?;
        acc = acc.checked_add(&term).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

fn combine<T: RayInt>(vp: &[T], val_p: &T, vn: &[T], val_n: &T) -> Result<Vec<T>> {
    // val_p > 0 > val_n; the result is zero on the current row.
    let a = val_p.clone();
    let b = -val_n.clone();
    let g = a.gcd(&b);
    let (a, b) = (a / g.clone(), b / g);
    let mut out = Vec::with_capacity(vp.len());
    for (xp, xn) in vp.iter().zip(vn) {
        let t1 = xn.checked_mul(&a).ok_or(Error::Overflow)?;
        let t2 = xp.checked_mul(&b).ok_or(Error::Overflow)?;
        out.push(t1.checked_add(&t2).ok_or(Error::Overflow)?);
    }
    make_primitive(&mut out);
    Ok(out)
}

fn make_primitive<T: RayInt>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
}

struct Ray<T, const W: usize> {
    v: Vec<T>,
    zeros: Bits<W>,
}

fn run<T: RayInt, const W: usize>(
    n: usize,
    all_rows: &[&[i64]],
    order: &[usize],
    equalities: &[usize],
    observer: &mut dyn FnMut(usize, usize),
) -> Result<(Vec<Vec<T>>, DdStats)> {
    // the first n processed rows must be the non-negativity rows
    let mut nonneg_pos = vec![usize::MAX; n];
    for (pos, &r) in order.iter().enumerate().take(n) {
        match unit_index(all_rows[r]) {
            Some(i) => nonneg_pos[i] = pos,
            None => {
                return Err(Error::InvalidArgument(
                    "insertion order must start with the non-negativity rows".into(),
                ))
            }
        }
    }
    if nonneg_pos.contains(&usize::MAX) {
        return Err(Error::InvalidArgument("missing non-negativity rows".into()));
    }
    let mut rays: Vec<Ray<T, W>> = (0..n)
        .map(|i| {
            let mut v = vec![T::zero(); n];
            v[i] = T::one();
            let mut zeros = Bits::empty();
            for k in 0..n {
                if k != i {
                    zeros.set(nonneg_pos[k]);
                }
            }
            Ray { v, zeros }
        })
        .collect();
    let mut stats = DdStats::default();
    let threshold = n.saturating_sub(2) as u32;

    for (pos, &r) in order.iter().enumerate().skip(n) {
        let coeffs = all_rows[r];
        let is_equality = equalities.contains(&r);
        let mut vals = Vec::with_capacity(rays.len());
        for ray in &rays {
            vals.push(dot(coeffs, &ray.v)?);
        }
        let pos_idx: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg_idx: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg_idx.is_empty() && !is_equality {
            for (ray, val) in rays.iter_mut().zip(&vals) {
                if val.is_zero() {
                    ray.zeros.set(pos);
                }
            }
            stats.ray_counts.push(rays.len());
            observer(pos, rays.len());
            continue;
        }
        let zero_sets: Vec<Bits<W>> = rays.iter().map(|r| r.zeros).collect();
        // rays zero on each processed constraint, to find blockers quickly
        let mut tight_on: Vec<Vec<u32>> = vec![Vec::new(); pos];
        for (k, z) in zero_sets.iter().enumerate() {
            for b in z.ones() {
                tight_on[b].push(k as u32);
            }
        }
        let mut created: Vec<Ray<T, W>> = Vec::new();
        for &p in &pos_idx {
            let zp = zero_sets[p];
            for &q in &neg_idx {
                let z = zp.and(&zero_sets[q]);
                if z.count() < threshold {
                    continue;
                }
                stats.candidate_pairs += 1;
                let shortest = z.ones().min_by_key(|&b| tight_on[b].len()).expect("nonempty zero set");
                let blocked = tight_on[shortest].iter().any(|&k| {
                    let k = k as usize;
                    k != p && k != q && z.subset_of(&zero_sets[k])
                });
                if blocked {
                    continue;
                }
                let v = combine(&rays[p].v, &vals[p], &rays[q].v, &vals[q])?;
                let mut zeros = z;
                zeros.set(pos);
                created.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray<T, W>> = Vec::with_capacity(rays.len() + created.len());
        for (mut ray, val) in rays.into_iter().zip(vals) {
            if val.is_zero() {
                ray.zeros.set(pos);
                next.push(ray);
            } else if val.is_positive() && !is_equality {
                next.push(ray);
            }
        }
        next.extend(created);
        rays = next;
        stats.ray_counts.push(rays.len());
        observer(pos, rays.len());
    }
    Ok((rays.into_iter().map(|r| r.v).collect(), stats))
}
