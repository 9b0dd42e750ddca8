//! Class lists stored as orbits of a permutation group: one representative
//! per orbit with its size, plus the explicit group. A plain list is the
//! special case of the trivial group.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::adjacency::OrbitClass;
use super::PseudoCodeword;
use crate::error::{Error, Result};
use crate::pweight::{class_pw, Channel, Spectrum};
use crate::subsets::for_each_subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSet {
    reps: Vec<PseudoCodeword>,
    counts: Vec<u64>,
    /// Point permutations, entry `i` moving to `perm[i]`. Empty for the
    /// trivial group.
    group: Vec<Vec<usize>>,
    /// `inverse[g][j]` is the source of position `j` under element `g`.
    inverse: Vec<Vec<usize>>,
}

impl ClassSet {
    /// Every class listed explicitly.
    pub fn from_classes(classes: Vec<PseudoCodeword>) -> Self {
        let counts = alloc::vec![1; classes.len()];
        Self { reps: classes, counts, group: Vec::new(), inverse: Vec::new() }
    }

    /// Orbit representatives under the group with the given elements.
    pub fn from_orbits(orbits: Vec<OrbitClass>, group: Vec<Vec<usize>>) -> Self {
        let inverse = group
            .iter()
            .map(|p| {
                let mut inv = alloc::vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                inv
            })
            .collect();
        let (reps, counts) = orbits.into_iter().map(|o| (o.class, o.orbit_size)).unzip();
        Self { reps, counts, group, inverse }
    }

    pub fn representatives(&self) -> &[PseudoCodeword] {
        &self.reps
    }

    /// Orbit sizes, aligned with the representatives.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn group(&self) -> &[Vec<usize>] {
        &self.group
    }

    pub fn is_symmetric(&self) -> bool {
        self.group.len() > 1
    }

    /// Number of classes, all orbits counted in full.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn num_orbits(&self) -> usize {
        self.reps.len()
    }

    pub fn n(&self) -> Option<usize> {
        self.reps.first().map(PseudoCodeword::len)
    }

    /// Distinct members of orbit `k`, sorted.
    pub fn orbit(&self, k: usize) -> Vec<PseudoCodeword> {
        if !self.is_symmetric() {
            return alloc::vec![self.reps[k].clone()];
        }
        let set: HashSet<PseudoCodeword> = self.group.iter().map(|p| self.reps[k].permuted(p)).collect();
        let mut out: Vec<PseudoCodeword> = set.into_iter().collect();
        out.sort();
        out
    }

    /// Every class, sorted. Fails past `max_classes`.
    pub fn expand(&self, max_classes: u64) -> Result<Vec<PseudoCodeword>> {
        let total = self.total();
        if total > max_classes {
            return Err(Error::SizeGuard(alloc::format!("{total} classes, more than {max_classes}")));
        }
        let mut out = Vec::with_capacity(total as usize);
        for k in 0..self.reps.len() {
            out.extend(self.orbit(k));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Pseudo-weight spectrum with every orbit counted in full.
    pub fn spectrum(&self, channel: Channel) -> Spectrum {
        let mut map = BTreeMap::new();
        for (c, &count) in self.reps.iter().zip(&self.counts) {
            *map.entry(class_pw(c, channel)).or_insert(0) += count;
        }
        Spectrum(map)
    }

    /// Largest mass any member of orbit `k` puts on the positions in `set`.
    pub fn max_mass(&self, k: usize, set: &[usize]) -> i64 {
        let c = self.reps[k].entries();
        if !self.is_symmetric() {
            return set.iter().map(|&j| c[j]).sum();
        }
        self.inverse.iter().map(|g| set.iter().map(|&j| c[g[j]]).sum()).max().unwrap_or(0)
    }

    /// Number of distinct members of orbit `k` whose mass on `set` exceeds
    /// `threshold`.
    pub fn members_above(&self, k: usize, set: &[usize], threshold: i64) -> usize {
        let c = self.reps[k].entries();
        if !self.is_symmetric() {
            return usize::from(set.iter().map(|&j| c[j]).sum::<i64>() > threshold);
        }
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for g in &self.inverse {
            if set.iter().map(|&j| c[g[j]]).sum::<i64>() > threshold {
                seen.insert(g.iter().map(|&s| c[s]).collect());
            }
        }
        seen.len()
    }

    /// Calls `f` once per group orbit of `e`-subsets of `0..n` with a
    /// representative and the orbit size.
    pub fn for_each_subset_orbit(&self, n: usize, e: usize, mut f: impl FnMut(&[usize], u64)) {
        if !self.is_symmetric() || n > 128 {
            for_each_subset(n, e, |s| f(s, 1));
            return;
        }
        let mask = |s: &mut dyn Iterator<Item = usize>| s.fold(0u128, |m, i| m | 1u128 << i);
        let mut seen: HashSet<u128> = HashSet::new();
        for_each_subset(n, e, |s| {
            let m = mask(&mut s.iter().copied());
            if seen.contains(&m) {
                return;
            }
            let mut size = 0u64;
            for p in &self.group {
                if seen.insert(mask(&mut s.iter().map(|&i| p[i]))) {
                    size += 1;
                }
            }
            f(s, size);
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::adjacency::{orbit_classes, WalkLimits};
    use crate::cone::enumerate_extreme_rays;
    use crate::geometry::{automorphism_generators, build_pg_plane};
    use crate::subsets::binomial;

    fn fano_set() -> (ClassSet, Vec<PseudoCodeword>) {
        let plane = build_pg_plane(2).unwrap();
        let h = plane.incidence();
        let gens = automorphism_generators(&plane);
        let (orbits, _) = orbit_classes(&h, &gens, WalkLimits::default()).unwrap();
        let set = ClassSet::from_orbits(orbits, gens.elements(1 << 20).unwrap());
        (set, enumerate_extreme_rays(&h, false).unwrap())
    }

    #[test]
    fn orbits_expand_to_the_full_list() {
        let (set, full) = fano_set();
        assert_eq!(set.num_orbits(), 2);
        assert_eq!(set.total(), 14);
        assert_eq!(set.expand(100).unwrap(), full);
        assert!(set.expand(10).is_err());
        let plain = ClassSet::from_classes(full.clone());
        for ch in Channel::ALL {
            assert_eq!(set.spectrum(ch), plain.spectrum(ch));
        }
    }

    #[test]
    fn masses_and_subset_orbits_agree_with_the_list() {
        let (set, full) = fano_set();
        for e in 0..=7 {
            let mut total = 0;
            set.for_each_subset_orbit(7, e, |s, size| {
                total += size;
                for k in 0..set.num_orbits() {
                    let members = set.orbit(k);
                    let best = members.iter().map(|c| s.iter().map(|&j| c.entries()[j]).sum::<i64>()).max().unwrap();
                    assert_eq!(set.max_mass(k, s), best);
                    let above = members.iter().filter(|c| s.iter().map(|&j| c.entries()[j]).sum::<i64>() > 2).count();
                    assert_eq!(set.members_above(k, s, 2), above);
                }
            });
            assert_eq!(total, binomial(7, e));
        }
        assert_eq!(full.len(), 14);
    }
}
