//! Extreme rays by brute force over tight sets, compared with the double
//! description output.

use std::collections::BTreeSet;

use fgcone_core::cone::{cone_inequalities, enumerate_extreme_rays, is_minimal_pcw, PseudoCodeword};
use fgcone_core::ParityCheckMatrix;
use proptest::prelude::*;

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

/// Generator of the kernel of an `(n-1) x n` matrix, if it has full rank.
fn kernel(rows: &[&Vec<i64>], n: usize) -> Option<Vec<i128>> {
    let v: Vec<i128> = (0..n)
        .map(|skip| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| (0..n).filter(|&c| c != skip).map(|c| i128::from(r[c])).collect())
                .collect();
            let d = det(minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    v.iter().any(|&x| x != 0).then_some(v)
}

fn combinations(m: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=m - (k - cur.len()) {
            cur.push(i);
            go(i + 1, m, k, cur, f);
            cur.pop();
        }
    }
    go(0, m, k, &mut Vec::new(), f);
}

fn oracle(h: &ParityCheckMatrix) -> BTreeSet<Vec<i64>> {
    let n = h.n();
    let desc = cone_inequalities(h);
    let rows: Vec<&Vec<i64>> = desc.rows().iter().map(|r| &r.coeffs).collect();
    let mut out = BTreeSet::new();
    combinations(rows.len(), n - 1, &mut |subset| {
        let chosen: Vec<&Vec<i64>> = subset.iter().map(|&i| rows[i]).collect();
        let Some(v) = kernel(&chosen, n) else { return };
        for sign in [1i128, -1] {
            let w: Vec<i128> = v.iter().map(|x| x * sign).collect();
            let inside = rows.iter().all(|r| r.iter().zip(&w).map(|(&a, &b)| i128::from(a) * b).sum::<i128>() >= 0);
            if inside {
                let g = w.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                out.insert(w.iter().map(|&x| (x / g) as i64).collect());
            }
        }
    });
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn dd(h: &ParityCheckMatrix) -> BTreeSet<Vec<i64>> {
    enumerate_extreme_rays(h, false).unwrap().iter().map(|w| w.entries().to_vec()).collect()
}

fn fano() -> ParityCheckMatrix {
    ParityCheckMatrix::from_row_supports(
        7,
        vec![vec![0, 1, 3], vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 6], vec![0, 4, 5], vec![1, 5, 6], vec![0, 2, 6]],
    )
    .unwrap()
}

#[test]
fn fano_plane_matches_oracle() {
    let h = fano();
    let o = oracle(&h);
    assert_eq!(o.len(), 14);
    assert_eq!(dd(&h), o);
}

#[test]
fn four_row_submatrix_matches_oracle() {
    let h = fano().select_rows(&[0, 1, 2, 3]).unwrap();
    let o = oracle(&h);
    assert_eq!(o.len(), 20);
    assert_eq!(dd(&h), o);
}

#[test]
fn single_checks_match_oracle() {
    let h = ParityCheckMatrix::from_row_supports(3, vec![vec![0, 1, 2]]).unwrap();
    let expected: BTreeSet<Vec<i64>> = [vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]].into_iter().collect();
    assert_eq!(oracle(&h), expected);
    assert_eq!(dd(&h), expected);
    for n in 4..=6 {
        let h = ParityCheckMatrix::from_row_supports(n, vec![(0..n).collect()]).unwrap();
        assert_eq!(dd(&h), oracle(&h));
    }
}

/// Random matrices with every column covered at least twice, so that the
/// cone is pointed.
fn small_matrix() -> impl Strategy<Value = ParityCheckMatrix> {
    (4usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 2..=n.min(4)), 2..=4).prop_filter_map(
            "every column in a check",
            move |rows| {
                let rows: Vec<Vec<usize>> = rows.into_iter().map(|r| r.into_iter().collect()).collect();
                let covered = (0..n).all(|i| rows.iter().any(|r| r.contains(&i)));
                covered.then(|| ParityCheckMatrix::from_row_supports(n, rows).ok()).flatten()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_small_codes_match_oracle(h in small_matrix()) {
        prop_assert_eq!(dd(&h), oracle(&h));
    }

    #[test]
    fn returned_rays_are_minimal_and_distinct(h in small_matrix()) {
        let rays = enumerate_extreme_rays(&h, false).unwrap();
        let set: BTreeSet<&PseudoCodeword> = rays.iter().collect();
        prop_assert_eq!(set.len(), rays.len());
        for w in &rays {
            prop_assert!(is_minimal_pcw(&h, w.entries()).unwrap());
        }
    }
}
