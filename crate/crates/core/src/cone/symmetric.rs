//! Extreme ray enumeration for codes with a flag-transitive automorphism
//! group.
//!
//! Every extreme ray makes at least one check inequality tight (only unit
//! vectors have `n - 1` zeros, and those lie outside the cone). When the
//! group acts transitively on incident (check, variable) pairs, all check
//! inequalities are equivalent, so it is enough to enumerate the face where one fixed check inequality holds with
//! equality and then close the result under the group.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::{cone_inequalities, collect_classes, dd, PseudoCodeword, RowTag};
use crate::error::{Error, Result};
use crate::geometry::PermutationGroupGens;
use crate::matrix::ParityCheckMatrix;

/// Rays of the face of `K(H)` where the check inequality for the first
/// incidence of row 0 is tight.
pub fn face_rays(h: &ParityCheckMatrix) -> Result<(Vec<Vec<i64>>, dd::DdStats)> {
    let desc = cone_inequalities(h);
    let first = *h
        .row(0)
        .first()
        .ok_or_else(|| Error::InvalidArgument("row 0 is empty".into()))?;
    let tight = desc
        .position(RowTag::Check { check: 0, var: first })
        .expect("every incidence has a check row");
    dd::extreme_rays(&desc, &[tight])
}

/// Closes a set of vectors under the point permutations of `gens`.
pub fn orbit_closure(seeds: &[PseudoCodeword], gens: &PermutationGroupGens) -> Vec<PseudoCodeword> {
    let mut seen: HashSet<PseudoCodeword> = HashSet::new();
    let mut queue: VecDeque<PseudoCodeword> = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    let perms: Vec<&[usize]> = gens.point_perms().collect();
    while let Some(w) = queue.pop_front() {
        for perm in &perms {
            let image = w.permuted(perm);
            if !seen.contains(&image) {
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    let mut out: Vec<PseudoCodeword> = seen.into_iter().collect();
    out.sort();
    out
}

/// All minimal pseudo-codewords of `H`, using the flag-transitive group
/// generated by `gens`. The face rays are extreme in `K(H)` because the face
/// is exposed by a valid inequality.
pub fn enumerate_mpcw_symmetric(h: &ParityCheckMatrix, gens: &PermutationGroupGens) -> Result<Vec<PseudoCodeword>> {
    if !gens.preserves(h) || !gens.is_flag_transitive(h) {
        return Err(Error::NotFlagTransitive);
    }
    let (rays, _) = face_rays(h)?;
    let seeds = collect_classes(rays)?;
    Ok(orbit_closure(&seeds, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::enumerate_extreme_rays;
    use crate::geometry::{automorphism_generators, build_pg_plane, incidence_matrix, Ordering};

    #[test]
    fn pg2_matches_full_enumeration() {
        let plane = build_pg_plane(2).unwrap();
        let h = incidence_matrix(&plane, Ordering::Natural);
        let gens = automorphism_generators(&plane);
        let sym = enumerate_mpcw_symmetric(&h, &gens).unwrap();
        let full = enumerate_extreme_rays(&h, false).unwrap();
        assert_eq!(sym, full);
        assert_eq!(sym.len(), 14);
    }

    #[test]
    fn rejects_non_transitive_group() {
        let h = ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap();
        let shift: Vec<usize> = (0..7).map(|i| (i + 1) % 7).collect();
        let gens = PermutationGroupGens::from_point_perms(h.rows(), alloc::vec![shift]).unwrap();
        assert_eq!(enumerate_mpcw_symmetric(&h, &gens), Err(Error::NotFlagTransitive));
    }
}
