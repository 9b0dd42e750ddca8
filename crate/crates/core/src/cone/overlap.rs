//! Building minimal pseudo-codewords from two overlapping codewords: add
//! them over the integers and raise a few of the remaining zeros.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashSet;
use num_traits::Zero;

use super::{is_in_cone, is_in_cone_int, spans_extreme_ray, PseudoCodeword};
use crate::error::{Error, Result};
use crate::geometry::{Family, PermutationGroupGens, Plane};
use crate::gf2::BitVec;
use crate::matrix::ParityCheckMatrix;
use crate::rational::Rational;
use crate::subsets::for_each_subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapCandidate {
    pub vector: Vec<Rational>,
    pub in_cone: bool,
    pub minimal: bool,
}

impl OverlapCandidate {
    pub fn pseudo_codeword(&self) -> Result<PseudoCodeword> {
        PseudoCodeword::normalize(&self.vector)
    }
}

fn check_codeword(h: &ParityCheckMatrix, x: &BitVec) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::LengthMismatch { expected: h.n(), found: x.len() });
    }
    if !h.syndrome_is_zero(x) {
        return Err(Error::NotACodeword);
    }
    Ok(())
}

fn integer_sum(x1: &BitVec, x2: &BitVec) -> Vec<i64> {
    (0..x1.len()).map(|i| i64::from(x1.get(i)) + i64::from(x2.get(i))).collect()
}

/// `x1 + x2` over the integers with the entries in `raise` set to `value`.
/// Leaving the cone is reported through the flags, not as an error.
pub fn construct_overlap_sum(
    h: &ParityCheckMatrix,
    x1: &BitVec,
    x2: &BitVec,
    raise: &[usize],
    value: &Rational,
) -> Result<OverlapCandidate> {
    check_codeword(h, x1)?;
    check_codeword(h, x2)?;
    let base = integer_sum(x1, x2);
    let mut vector: Vec<Rational> = base.iter().map(|&v| Rational::from_integer(v.into())).collect();
    for &i in raise {
        if i >= h.n() || base[i] != 0 {
            return Err(Error::InvalidArgument(alloc::format!(
                "position {i} is not a zero of the codeword sum"
            )));
        }
        vector[i] = value.clone();
    }
    let in_cone = is_in_cone(h, &vector);
    let minimal = in_cone
        && !vector.iter().all(Zero::is_zero)
        && PseudoCodeword::normalize(&vector)
            .map(|p| spans_extreme_ray(h, p.entries()))
            .unwrap_or(false);
    Ok(OverlapCandidate { vector, in_cone, minimal })
}

/// Index pairs `(a, b)`, `a < b`, whose supports meet in exactly `overlap`
/// positions.
pub fn pairs_with_overlap(words: &[BitVec], overlap: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..words.len() {
        for b in a + 1..words.len() {
            if words[a].and_count(&words[b]) == overlap {
                out.push((a, b));
            }
        }
    }
    out
}

/// All `size`-subsets of the zeros of `x1 + x2` that, raised to the integer
/// `value`, give a minimal pseudo-codeword.
pub fn search_raise_sets(
    h: &ParityCheckMatrix,
    x1: &BitVec,
    x2: &BitVec,
    size: usize,
    value: i64,
) -> Result<Vec<Vec<usize>>> {
    check_codeword(h, x1)?;
    check_codeword(h, x2)?;
    let base = integer_sum(x1, x2);
    let zeros: Vec<usize> = (0..base.len()).filter(|&i| base[i] == 0).collect();
    let mut found = Vec::new();
    let mut w = base.clone();
    for_each_subset(zeros.len(), size, |subset| {
        for &k in subset {
            w[zeros[k]] = value;
        }
        if is_in_cone_int(h, &w) && spans_extreme_ray(h, &w) {
            found.push(subset.iter().map(|&k| zeros[k]).collect());
        }
        for &k in subset {
            w[zeros[k]] = 0;
        }
    });
    Ok(found)
}

/// The regular hyperoval of `PG(2,q)`, `q` even: the conic `y^2 = x z`
/// together with its nucleus `(0,1,0)`. It meets every line in 0 or 2
/// points, so it is a codeword of weight `q + 2`.
pub fn regular_hyperoval(plane: &Plane) -> Result<Vec<usize>> {
    if plane.family() != Family::Pg || plane.q() % 2 != 0 {
        return Err(Error::InvalidArgument("hyperovals need PG(2,q) with q even".into()));
    }
    let f = plane.field();
    let mut coords: Vec<[u8; 3]> = f.elements().map(|t| [1, t, f.square(t)]).collect();
    coords.push([0, 0, 1]);
    coords.push([0, 1, 0]);
    let mut pts = coords
        .into_iter()
        .map(|c| plane.point_index(c).ok_or(Error::InvalidArgument("point not in plane".into())))
        .collect::<Result<Vec<usize>>>()?;
    pts.sort_unstable();
    Ok(pts)
}

/// Breadth-first search over images of `set` under the group generated by
/// `gens` for one meeting `set` in exactly `overlap` points. Visits at most
/// `limit` distinct images.
pub fn find_image_with_overlap(
    gens: &PermutationGroupGens,
    set: &[usize],
    overlap: usize,
    limit: usize,
) -> Option<Vec<usize>> {
    let mut start = set.to_vec();
    start.sort_unstable();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    let perms: Vec<&[usize]> = gens.point_perms().collect();
    while let Some(cur) = queue.pop_front() {
        for perm in &perms {
            let mut image: Vec<usize> = cur.iter().map(|&i| perm[i]).collect();
            image.sort_unstable();
            if seen.contains(&image) {
                continue;
            }
            let common = image.iter().filter(|i| start.binary_search(i).is_ok()).count();
            if common == overlap {
                return Some(image);
            }
            if seen.len() >= limit {
                return None;
            }
            seen.insert(image.clone());
            queue.push_back(image);
        }
    }
    None
}
