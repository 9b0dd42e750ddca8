//! Dense tableau simplex for `min c x` subject to `A x <= b`, `x >= 0` with
//! `b >= 0`, so the slack basis is an initial feasible basis. Pivoting
//! takes the most negative reduced cost and falls back to Bland's
//! smallest-index rule, which cannot cycle, once progress stalls.
//!
//! The solver is generic over the scalar type. Exact solves run over
//! `Ratio<i128>` with checked arithmetic and are redone over `BigRational`
//! if an intermediate value overflows.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Scalar operations needed by the tableau. Arithmetic returns `None` on
/// overflow.
pub trait LpScalar: Clone + PartialOrd + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn div(&self, other: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
}

impl LpScalar for Ratio<i128> {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl LpScalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        (!Zero::is_zero(o)).then(|| self / o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Tolerance used by the floating point instantiation.
pub const F64_EPS: f64 = 1e-9;

impl LpScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn is_zero(&self) -> bool {
        self.abs() <= F64_EPS
    }
    fn is_positive(&self) -> bool {
        *self > F64_EPS
    }
    fn is_negative(&self) -> bool {
        *self < -F64_EPS
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpStatus<T> {
    Optimal {
        x: Vec<T>,
        value: T,
        /// Basic variable per row; indices `>= n` are slacks.
        basis: Vec<usize>,
    },
    Unbounded,
}

/// Consecutive degenerate pivots tolerated before Bland's rule takes over.
const DEGENERATE_RUN: usize = 50;

/// `min c x` s.t. `a x <= b`, `x >= 0`. Every `b` entry must be `>= 0`.
/// `max_pivots` bounds the work; exceeding it is reported as a size guard.
pub fn solve<T: LpScalar>(a: &[Vec<T>], b: &[T], c: &[T], max_pivots: usize) -> Result<LpStatus<T>> {
    let m = a.len();
    let n = c.len();
    if b.len() != m {
        return Err(Error::LengthMismatch { expected: m, found: b.len() });
    }
    if b.iter().any(LpScalar::is_negative) {
        return Err(Error::InvalidArgument("right-hand side must be non-negative".into()));
    }
    let width = n + m;
    // row k: [a_k | e_k | b_k]
    let mut t: Vec<Vec<T>> = Vec::with_capacity(m);
    for (k, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: row.len() });
        }
        let mut r = Vec::with_capacity(width + 1);
        r.extend(row.iter().cloned());
        r.extend((0..m).map(|s| if s == k { T::one() } else { T::zero() }));
        r.push(b[k].clone());
        t.push(r);
    }
    // reduced costs; the last entry holds minus the objective value
    let mut cost: Vec<T> = c.iter().cloned().chain((0..=m).map(|_| T::zero())).collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // most negative reduced cost first; after a run of degenerate pivots
    // switch to the smallest index for good, which cannot cycle
    let mut degenerate_run = 0;
    for pivots in 0.. {
        let entering = if degenerate_run < DEGENERATE_RUN {
            (0..width).filter(|&j| cost[j].is_negative()).fold(None, |best: Option<usize>, j| match best {
                Some(b) if cost[b] <= cost[j] => Some(b),
                _ => Some(j),
            })
        } else {
            (0..width).find(|&j| cost[j].is_negative())
        };
        let Some(enter) = entering else {
            let mut x = vec![T::zero(); n];
            for (k, &bv) in basis.iter().enumerate() {
                if bv < n {
                    x[bv] = t[k][width].clone();
                }
            }
            let value = T::zero().sub(&cost[width]).ok_or(Error::Overflow)?;
            return Ok(LpStatus::Optimal { x, value, basis });
        };
        let mut ratios = Vec::new();
        for k in 0..m {
            if t[k][enter].is_positive() {
                ratios.push((k, t[k][width].div(&t[k][enter]).ok_or(Error::Overflow)?));
            }
        }
        let bland = degenerate_run >= DEGENERATE_RUN;
        let mut leave: Option<(usize, T)> = None;
        if let Some(min) = ratios.iter().map(|(_, r)| r).fold(None, |m: Option<&T>, r| match m {
            Some(m) if m <= r => Some(m),
            _ => Some(r),
        }) {
            // among the tied rows: the smallest basic index under Bland's
            // rule, otherwise the largest pivot for stability
            for (k, ratio) in &ratios {
                if !ratio.sub(min).ok_or(Error::Overflow)?.is_zero() {
                    continue;
                }
                let better = match &leave {
                    None => true,
                    Some((l, _)) if bland => basis[*k] < basis[*l],
                    Some((l, _)) => t[*k][enter] > t[*l][enter],
                };
                if better {
                    leave = Some((*k, ratio.clone()));
                }
            }
        }
        let Some((row, ratio)) = leave else {
            return Ok(LpStatus::Unbounded);
        };
        if pivots == max_pivots {
            break;
        }
        if ratio.is_zero() {
            if degenerate_run < DEGENERATE_RUN {
                degenerate_run += 1;
            }
        } else if degenerate_run < DEGENERATE_RUN {
            degenerate_run = 0;
        }
        pivot(&mut t, &mut cost, row, enter)?;
        basis[row] = enter;
    }
    Err(Error::SizeGuard("simplex pivot limit reached".into()))
}

fn pivot<T: LpScalar>(t: &mut [Vec<T>], cost: &mut [T], row: usize, col: usize) -> Result<()> {
    let p = t[row][col].clone();
    if !(p == T::one()) {
        for v in t[row].iter_mut() {
            if !v.is_zero() {
                *v = v.div(&p).ok_or(Error::Overflow)?;
            }
        }
    }
    let pivot_row = t[row].clone();
    let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
    let eliminate = |target: &mut Vec<T>| -> Result<()> {
        let f = target[col].clone();
        if f.is_zero() {
            return Ok(());
        }
        for &j in &nz {
            let d = f.mul(&pivot_row[j]).ok_or(Error::Overflow)?;
            target[j] = target[j].sub(&d).ok_or(Error::Overflow)?;
        }
        Ok(())
    };
    for (k, r) in t.iter_mut().enumerate() {
        if k != row {
            eliminate(r)?;
        }
    }
    let mut c = cost.to_vec();
    eliminate(&mut c)?;
    cost.clone_from_slice(&c);
    Ok(())
}

fn to_small(v: &Rational) -> Option<Ratio<i128>> {
    let n = v.numer().to_i128()?;
    let d = v.denom().to_i128()?;
    Some(Ratio::new(n, d))
}

fn to_big(v: &Ratio<i128>) -> Rational {
    Rational::new(BigInt::from(*v.numer()), BigInt::from(*v.denom()))
}

/// Exact solve: `Ratio<i128>` first, `BigRational` on overflow.
pub fn solve_exact(a: &[Vec<Rational>], b: &[Rational], c: &[Rational], max_pivots: usize) -> Result<LpStatus<Rational>> {
    let small = || -> Option<(Vec<Vec<Ratio<i128>>>, Vec<Ratio<i128>>, Vec<Ratio<i128>>)> {
        let a = a.iter().map(|r| r.iter().map(to_small).collect::<Option<Vec<_>>>()).collect::<Option<Vec<_>>>()?;
        let b = b.iter().map(to_small).collect::<Option<Vec<_>>>()?;
        let c = c.iter().map(to_small).collect::<Option<Vec<_>>>()?;
        Some((a, b, c))
    };
    if let Some((sa, sb, sc)) = small() {
        match solve(&sa, &sb, &sc, max_pivots) {
            Ok(LpStatus::Optimal { x, value, basis }) => {
                return Ok(LpStatus::Optimal { x: x.iter().map(to_big).collect(), value: to_big(&value), basis })
            }
            Ok(LpStatus::Unbounded) => return Ok(LpStatus::Unbounded),
            Err(Error::Overflow) => {}
            Err(e) => return Err(e),
        }
    }
    solve(a, b, c, max_pivots)
}
