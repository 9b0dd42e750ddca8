//! Extreme rays of `K(H)` found by minimizing linear objectives over the
//! cross-section `{w in K(H) : sum w <= 1}`.
//!
//! The LP runs in floating point; the vertex it ends on is recovered
//! exactly from the basis (the nonbasic constraints determine the ray) and
//! then certified with exact arithmetic, so numerical trouble can only cost
//! a trial, never produce a wrong answer.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{cone_inequalities, is_in_cone_int, linalg, spans_extreme_ray, PseudoCodeword, RowTag};
use crate::error::Result;
use crate::matrix::ParityCheckMatrix;
use crate::simplex::{solve, LpStatus};

/// Minimizes `objective . w` over the cross-section and returns the
/// certified extreme ray at the optimum, or `None` if the optimum is the
/// origin or the recovered vector fails certification.
pub fn section_vertex(h: &ParityCheckMatrix, objective: &[f64]) -> Result<Option<PseudoCodeword>> {
    let n = h.n();
    let desc = cone_inequalities(h);
    let check_rows: Vec<usize> = (0..desc.len())
        .filter(|&r| matches!(desc.rows()[r].tag, RowTag::Check { .. }))
        .collect();
    let mut a: Vec<Vec<f64>> = check_rows
        .iter()
        .map(|&r| desc.rows()[r].coeffs.iter().map(|&c| -(c as f64)).collect())
        .collect();
    // distinct tiny right-hand sides break the degeneracy of the cone; the
    // nonbasic rows at the optimum still describe a ray of the cone
    let mut b: Vec<f64> = (0..a.len()).map(|k| 1e-7 * (1.0 + ((k * 7919) % 997) as f64 / 997.0)).collect();
    a.push(alloc::vec![1.0; n]);
    b.push(1.0);
    let status = solve(&a, &b, objective, 50 * (a.len() + n))?;
    let LpStatus::Optimal { value, basis, .. } = status else {
        return Ok(None);
    };
    if value > -1e-9 {
        return Ok(None);
    }
    let m = a.len();
    let mut is_basic = alloc::vec![false; n + m];
    for &v in &basis {
        is_basic[v] = true;
    }
    let mut tight: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        if !is_basic[i] {
            let mut row = alloc::vec![0i64; n];
            row[i] = 1;
            tight.push(row);
        }
    }
    for (k, &r) in check_rows.iter().enumerate() {
        if !is_basic[n + k] {
            tight.push(desc.rows()[r].coeffs.clone());
        }
    }
    let Some(ray) = linalg::kernel_vector(&tight, n) else {
        return Ok(None);
    };
    let Some(mut ints) = ray.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<i64>>>() else {
        return Ok(None);
    };
    if ints.iter().any(|&v| v < 0) {
        ints.iter_mut().for_each(|v| *v = -*v);
    }
    if !is_in_cone_int(h, &ints) || ints.iter().all(|&v| v == 0) || !spans_extreme_ray(h, &ints) {
        return Ok(None);
    }
    Ok(Some(PseudoCodeword::from_integers(&ints)?))
}
