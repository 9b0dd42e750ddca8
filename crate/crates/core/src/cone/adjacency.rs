//! Extreme rays up to symmetry by walking the edge graph one orbit at a time.
//!
//! For an extreme ray `r` of a pointed cone, the two-dimensional faces
//! through `r` correspond to the extreme rays of the tangent cone
//! `{d : a d >= 0 for rows tight at r, r d = 0}`. Walking from `r` along such
//! a direction until another row becomes tight gives a neighbouring ray.
//! The edge graph is connected, so expanding one representative per orbit
//! reaches every orbit.
//!
//! The tangent cone at `r` is invariant under the stabilizer of `r`, and
//! neighbours along directions in one stabilizer orbit lie in one orbit of
//! the whole group. Degenerate rays (many tight rows) with a large
//! stabilizer therefore get their tangent cone enumerated up to the
//! stabilizer by the same walk; all other tangent cones go straight to
//! double description.

use alloc::vec::Vec;

use hashbrown::HashSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{cone_inequalities, dd, linalg, search::section_vertex, PseudoCodeword};
use crate::error::{Error, Result};
use crate::geometry::PermutationGroupGens;
use crate::matrix::ParityCheckMatrix;

/// Largest group expanded into an explicit element list.
pub const MAX_GROUP_ORDER: usize = 1 << 21;

/// When to recurse into a tangent cone instead of running double
/// description on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkLimits {
    /// Size guard on the number of orbits at the top level.
    pub max_orbits: usize,
    /// Tangent cones with at most `dim - 1 + direct_excess` rows use double
    /// description.
    pub direct_excess: usize,
    /// Tangent cones whose stabilizer has fewer elements use double
    /// description.
    pub min_group: usize,
}

impl Default for WalkLimits {
    fn default() -> Self {
        Self { max_orbits: 1 << 20, direct_excess: 24, min_group: 24 }
    }
}

/// Counters from an orbit walk.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WalkStats {
    pub group_order: u64,
    /// Tangent cones handled by double description.
    pub direct_cones: u64,
    /// Tangent cones handled by a nested walk.
    pub nested_walks: u64,
    /// Deepest nesting reached.
    pub max_depth: usize,
    /// Neighbour computations at the top level.
    pub neighbours_examined: u64,
}

/// One orbit of minimal pseudo-codeword classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    /// The lexicographically largest member.
    pub class: PseudoCodeword,
    pub orbit_size: u64,
}

/// Explicit permutation group, each element stored as the map from image
/// positions back to source positions.
struct Group {
    inverse: Vec<Vec<u16>>,
}

impl Group {
    fn from_elements(elements: &[Vec<usize>]) -> Result<Self> {
        let inverse = elements
            .iter()
            .map(|p| {
                let mut inv = alloc::vec![0u16; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = u16::try_from(i).map_err(|_| Error::Overflow)?;
                }
                Ok(inv)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { inverse })
    }

    fn len(&self) -> usize {
        self.inverse.len()
    }

    /// Lexicographically largest image of `x`.
    fn canonical(&self, x: &[i64]) -> Vec<i64> {
        let n = x.len();
        let mut best = x.to_vec();
        'elements: for g in &self.inverse {
            let mut j = 0;
            while j < n {
                let v = x[g[j] as usize];
                match v.cmp(&best[j]) {
                    core::cmp::Ordering::Less => continue 'elements,
                    core::cmp::Ordering::Greater => break,
                    core::cmp::Ordering::Equal => j += 1,
                }
            }
            for k in j..n {
                best[k] = x[g[k] as usize];
            }
        }
        best
    }

    fn stabilizer(&self, x: &[i64]) -> Group {
        let inverse = self
            .inverse
            .iter()
            .filter(|g| g.iter().enumerate().all(|(j, &s)| x[s as usize] == x[j]))
            .cloned()
            .collect();
        Group { inverse }
    }

    fn images(&self, x: &[i64]) -> impl Iterator<Item = Vec<i64>> + '_ {
        let x = x.to_vec();
        self.inverse.iter().map(move |g| g.iter().map(|&s| x[s as usize]).collect())
    }
}

/// A pointed cone `{x : a x >= 0 for a in rows, e x = 0 for e in eqs}`
/// with the group acting on it. The equalities are pairwise orthogonal.
struct Cone<'a> {
    rows: Vec<&'a [i64]>,
    eqs: Vec<Vec<i64>>,
    group: Group,
}

fn dot(a: &[i64], x: &[i64]) -> i128 {
    a.iter().zip(x).map(|(&u, &v)| i128::from(u) * i128::from(v)).sum()
}

fn primitive_i64(v: &mut [BigInt]) -> Result<Vec<i64>> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

fn primitive_i128(v: &mut [i128]) -> Result<Vec<i64>> {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    v.iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect()
}

struct Walker {
    n: usize,
    samples: Vec<Vec<i64>>,
    limits: WalkLimits,
    stats: WalkStats,
}

impl Walker {
    /// Orthogonal projection of some sample ray onto the common kernel of
    /// the equalities. Returns a point of the cone, or `None` if every
    /// sample projects to zero.
    fn sample(&self, cone: &Cone) -> Result<Option<Vec<i64>>> {
        for s in &self.samples {
            let mut p: Vec<BigInt> = s.iter().map(|&v| BigInt::from(v)).collect();
            for e in &cone.eqs {
                let ee = BigInt::from(dot(e, e));
                let pe: BigInt = p.iter().zip(e).map(|(x, &y)| x * BigInt::from(y)).sum();
                if pe.is_zero() {
                    continue;
                }
                for (x, &y) in p.iter_mut().zip(e) {
                    *x = &*x * &ee - &pe * BigInt::from(y);
                }
            }
            if p.iter().any(|x| !x.is_zero()) {
                return primitive_i64(&mut p).map(Some);
            }
        }
        Ok(None)
    }

    /// An extreme ray reached from the point `x` of the cone by moving
    /// within the face of `x` until the tight rows have full rank.
    fn shoot(&self, cone: &Cone, mut x: Vec<i64>) -> Result<Vec<i64>> {
        let n = self.n;
        loop {
            let mut tight: Vec<Vec<i64>> = cone.rows.iter().filter(|a| dot(a, &x) == 0).map(|a| a.to_vec()).collect();
            tight.extend(cone.eqs.iter().cloned());
            if linalg::rank_reaches(&tight, n, n - 1) {
                return Ok(x);
            }
            tight.push(x.clone());
            let basis = linalg::nullspace_basis(&tight, n);
            let mut v = primitive_i64(&mut basis.into_iter().next().ok_or(Error::ZeroVector)?)?;
            if cone.rows.iter().all(|a| dot(a, &v) >= 0) {
                v.iter_mut().for_each(|c| *c = -*c);
            }
            // largest step keeping every row non-negative
            let mut best: Option<(i128, i128)> = None;
            for a in &cone.rows {
                let av = dot(a, &v);
                if av >= 0 {
                    continue;
                }
                let (num, den) = (dot(a, &x), -av);
                if best.is_none_or(|(bn, bd)| num * bd < bn * den) {
                    best = Some((num, den));
                }
            }
            let (num, den) = best.ok_or_else(|| Error::InvalidArgument("cone is not pointed".into()))?;
            let mut next: Vec<i128> = x.iter().zip(&v).map(|(&a, &b)| i128::from(a) * den + i128::from(b) * num).collect();
            x = primitive_i128(&mut next)?;
        }
    }

    /// All extreme rays by double description in coordinates of the
    /// common kernel of the equalities.
    fn direct(&self, cone: &Cone) -> Result<Vec<Vec<i64>>> {
        let n = self.n;
        let basis: Vec<Vec<i64>> = if cone.eqs.is_empty() {
            (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
        } else {
            linalg::nullspace_basis(&cone.eqs, n)
                .into_iter()
                .map(|mut b| primitive_i64(&mut b))
                .collect::<Result<_>>()?
        };
        let k = basis.len();
        if k == 1 {
            let b = &basis[0];
            let sign = if cone.rows.iter().all(|a| dot(a, b) >= 0) { 1 } else { -1 };
            return Ok(alloc::vec![b.iter().map(|&v| v * sign).collect()]);
        }
        let reduced: Vec<Vec<i64>> = cone
            .rows
            .iter()
            .map(|a| basis.iter().map(|b| i64::try_from(dot(a, b)).map_err(|_| Error::Overflow)).collect())
            .collect::<Result<_>>()?;
        dd::pointed_cone_rays(&reduced, k)?
            .into_iter()
            .map(|y| {
                let mut x: Vec<BigInt> = (0..n)
                    .map(|i| y.iter().zip(&basis).map(|(c, b)| c * BigInt::from(b[i])).sum())
                    .collect();
                primitive_i64(&mut x)
            })
            .collect()
    }

    /// The neighbour of `r` along the tangent direction `d`.
    fn step(&self, cone: &Cone, r: &[i64], d: &[i64]) -> Result<Vec<i64>> {
        let mut best: Option<(i128, i128)> = None;
        for a in &cone.rows {
            let u = dot(a, r);
            if u <= 0 {
                continue;
            }
            let v = -dot(a, d);
            if best.is_none_or(|(bn, bd)| v * bd > bn * u) {
                best = Some((v, u));
            }
        }
        let (num, den) = best.ok_or(Error::ZeroVector)?;
        let mut w: Vec<i128> = d.iter().zip(r).map(|(&x, &y)| i128::from(x) * den + i128::from(y) * num).collect();
        let w = primitive_i128(&mut w)?;
        if w.iter().all(|&v| v == 0) || cone.rows.iter().any(|a| dot(a, &w) < 0) {
            return Err(Error::InvalidArgument("neighbour left the cone".into()));
        }
        Ok(w)
    }

    fn tangent<'a>(&self, cone: &Cone<'a>, r: &[i64]) -> Cone<'a> {
        let rows = cone.rows.iter().copied().filter(|a| dot(a, r) == 0).collect();
        let mut eqs = cone.eqs.clone();
        eqs.push(r.to_vec());
        Cone { rows, eqs, group: cone.group.stabilizer(r) }
    }

    /// One extreme ray per group orbit.
    fn representatives(
        &mut self,
        cone: &Cone,
        depth: usize,
        seed: Option<Vec<i64>>,
        observer: &mut dyn FnMut(usize, usize),
    ) -> Result<Vec<Vec<i64>>> {
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let dim = self.n - cone.eqs.len();
        let small = dim <= 3
            || cone.group.len() < self.limits.min_group
            || cone.rows.len() < dim + self.limits.direct_excess;
        // a nested walk whose seed search overflows falls back to double
        // description
        let first = match seed {
            Some(s) => Some(self.shoot(cone, s)?),
            None if small => None,
            None => match self.sample(cone).and_then(|p| p.map(|p| self.shoot(cone, p)).transpose()) {
                Ok(first) => first,
                Err(Error::Overflow) => None,
                Err(e) => return Err(e),
            },
        };
        let Some(first) = first else {
            self.stats.direct_cones += 1;
            let mut seen = HashSet::new();
            let rays = self.direct(cone)?;
            return Ok(rays.into_iter().filter(|r| seen.insert(cone.group.canonical(r))).collect());
        };
        if depth > 0 {
            self.stats.nested_walks += 1;
        }
        let mut seen = HashSet::new();
        seen.insert(cone.group.canonical(&first));
        let mut reps = alloc::vec![first];
        let mut next = 0;
        while next < reps.len() {
            let r = reps[next].clone();
            next += 1;
            let sub = self.tangent(cone, &r);
            for d in self.representatives(&sub, depth + 1, None, &mut |_, _| {})? {
                if depth == 0 {
                    self.stats.neighbours_examined += 1;
                }
                let nb = self.step(cone, &r, &d)?;
                if seen.insert(cone.group.canonical(&nb)) {
                    reps.push(nb);
                    if depth == 0 && reps.len() > self.limits.max_orbits {
                        return Err(Error::SizeGuard(alloc::format!(
                            "more than {} orbits of classes",
                            self.limits.max_orbits
                        )));
                    }
                }
            }
            if depth == 0 {
                observer(next, reps.len());
            }
        }
        Ok(reps)
    }
}

/// An extreme ray found by minimizing simple objectives over the cone.
pub fn seed_ray(h: &ParityCheckMatrix) -> Result<PseudoCodeword> {
    let n = h.n();
    for k in 0..n {
        let c: Vec<f64> = (0..n).map(|i| -1.0 - ((i + k) % n) as f64 / (4 * n) as f64).collect();
        if let Some(w) = section_vertex(h, &c)? {
            return Ok(w);
        }
    }
    Err(Error::InvalidArgument("no extreme ray found".into()))
}

/// One class per orbit of the group generated by `gens` on the minimal
/// pseudo-codeword classes of `H`, with orbit sizes. `observer` sees the
/// number of expanded and known orbits after each expansion.
pub fn orbit_classes_observed(
    h: &ParityCheckMatrix,
    gens: &PermutationGroupGens,
    limits: WalkLimits,
    observer: &mut dyn FnMut(usize, usize),
) -> Result<(Vec<OrbitClass>, WalkStats)> {
    if !gens.preserves(h) {
        return Err(Error::InvalidArgument("generators do not preserve H".into()));
    }
    let n = h.n();
    let elements = if gens.is_empty() { alloc::vec![(0..n).collect()] } else { gens.elements(MAX_GROUP_ORDER)? };
    let group = Group::from_elements(&elements)?;
    let desc = cone_inequalities(h);
    let seed = seed_ray(h)?.entries().to_vec();
    let mut samples: Vec<Vec<i64>> = group.images(&seed).collect();
    samples.sort();
    samples.dedup();
    let mut walker = Walker {
        n,
        samples,
        limits,
        stats: WalkStats { group_order: group.len() as u64, ..WalkStats::default() },
    };
    let cone = Cone { rows: desc.rows().iter().map(|r| r.coeffs.as_slice()).collect(), eqs: Vec::new(), group };
    let reps = walker.representatives(&cone, 0, Some(seed), observer)?;
    let mut out = reps
        .iter()
        .map(|r| {
            let canon = cone.group.canonical(r);
            let stab = cone.group.stabilizer(r).len() as u64;
            Ok(OrbitClass { class: PseudoCodeword::from_integers(&canon)?, orbit_size: walker.stats.group_order / stab })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.class.cmp(&b.class));
    Ok((out, walker.stats))
}

pub fn orbit_classes(
    h: &ParityCheckMatrix,
    gens: &PermutationGroupGens,
    limits: WalkLimits,
) -> Result<(Vec<OrbitClass>, WalkStats)> {
    orbit_classes_observed(h, gens, limits, &mut |_, _| {})
}

/// Every member of the orbits, sorted.
pub fn expand_orbits(orbits: &[OrbitClass], gens: &PermutationGroupGens, max_classes: usize) -> Result<Vec<PseudoCodeword>> {
    let total: u64 = orbits.iter().map(|o| o.orbit_size).sum();
    if total > max_classes as u64 {
        return Err(Error::SizeGuard(alloc::format!("{total} classes, more than {max_classes}")));
    }
    let Some(first) = orbits.first() else {
        return Ok(Vec::new());
    };
    let n = first.class.len();
    let elements = if gens.is_empty() { alloc::vec![(0..n).collect()] } else { gens.elements(MAX_GROUP_ORDER)? };
    let mut out: HashSet<PseudoCodeword> = HashSet::new();
    for o in orbits {
        for p in &elements {
            out.insert(o.class.permuted(p));
        }
    }
    let mut out: Vec<PseudoCodeword> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// All extreme rays of `K(H)`: the orbit walk followed by orbit expansion.
pub fn enumerate_by_orbits(
    h: &ParityCheckMatrix,
    gens: &PermutationGroupGens,
    max_classes: usize,
) -> Result<(Vec<PseudoCodeword>, WalkStats)> {
    let (orbits, stats) = orbit_classes(h, gens, WalkLimits::default())?;
    Ok((expand_orbits(&orbits, gens, max_classes)?, stats))
}
