//! Projective planes `PG(2,q)` and reduced Euclidean planes `EG(2,q)`.
//!
//! Points are kept as homogeneous coordinate triples over GF(q) and lines as
//! dual triples, so that a point lies on a line iff their dot product is 0.
//! The reduced Euclidean plane uses affine points `(x, y, 1)` with the origin
//! `(0, 0, 1)` removed, and the lines `a x + b y = 1` that miss the origin.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{degree_of_order, FieldTable};
use crate::matrix::ParityCheckMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Pg,
    EgReduced,
}

/// Labeling of points and lines when forming the incidence matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    /// Lexicographic order of the normalized coordinate triples.
    Natural,
    /// Points and lines labeled along a Singer cycle, giving a circulant matrix.
    Circulant,
}

type Point = [u8; 3];
type Mat3 = [[u8; 3]; 3];

#[derive(Debug, Clone)]
pub struct Plane {
    family: Family,
    q: u32,
    field: FieldTable,
    points: Vec<Point>,
    line_duals: Vec<Point>,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    /// Regular cyclic collineation on points, `singer[i]` = image of point `i`.
    singer: Vec<usize>,
    ordering: Ordering,
}

impl Plane {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point(&self, i: usize) -> [u8; 3] {
        self.points[i]
    }

    /// Sorted point indices on line `j`.
    pub fn line(&self, j: usize) -> &[usize] {
        &self.lines[j]
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Sorted line indices through point `i`.
    pub fn lines_through(&self, i: usize) -> &[usize] {
        &self.point_lines[i]
    }

    /// The regular cyclic point permutation (Singer cycle for PG, a
    /// multiplicative generator of GF(q^2) for the reduced EG plane).
    pub fn singer_cycle(&self) -> &[usize] {
        &self.singer
    }

    /// Index of the unique line through two distinct points, if any.
    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        let la = &self.point_lines[a];
        let lb = &self.point_lines[b];
        la.iter().copied().find(|l| lb.binary_search(l).is_ok())
    }

    pub fn incidence(&self) -> ParityCheckMatrix {
        ParityCheckMatrix::from_row_supports(self.num_points(), self.lines.clone())
            .expect("plane incidence is well formed")
    }

    /// The same plane with points and lines relabeled.
    pub fn with_ordering(&self, ordering: Ordering) -> Plane {
        if ordering == self.ordering {
            return self.clone();
        }
        match ordering {
            Ordering::Natural => {
                let mut idx: Vec<usize> = (0..self.num_points()).collect();
                idx.sort_by_key(|&i| self.points[i]);
                let mut lidx: Vec<usize> = (0..self.num_lines()).collect();
                lidx.sort_by_key(|&j| self.line_duals[j]);
                self.relabel(&idx, &lidx, ordering)
            }
            Ordering::Circulant => {
                let (point_order, line_order) = self.circulant_labels();
                self.relabel(&point_order, &line_order, ordering)
            }
        }
    }

    /// `new_points[k]` is the old index of the point that gets label `k`.
    fn relabel(&self, new_points: &[usize], new_lines: &[usize], ordering: Ordering) -> Plane {
        let mut inverse = vec![0usize; new_points.len()];
        for (k, &old) in new_points.iter().enumerate() {
            inverse[old] = k;
        }
        let points: Vec<Point> = new_points.iter().map(|&i| self.points[i]).collect();
        let line_duals: Vec<Point> = new_lines.iter().map(|&j| self.line_duals[j]).collect();
        let lines: Vec<Vec<usize>> = new_lines
            .iter()
            .map(|&j| {
                let mut l: Vec<usize> = self.lines[j].iter().map(|&i| inverse[i]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        let singer = new_points.iter().map(|&old| inverse[self.singer[old]]).collect();
        let point_lines = point_lines_of(points.len(), &lines);
        Plane {
            family: self.family,
            q: self.q,
            field: self.field.clone(),
            points,
            line_duals,
            lines,
            point_lines,
            singer,
            ordering,
        }
    }

    /// Labels along the Singer cycle. Picks the base point `0`, the cycle
    /// direction and the base line so that the first row support is
    /// lexicographically smallest.
    fn circulant_labels(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.num_points();
        let forward = orbit_order(&self.singer, 0);
        let mut inverse_cycle = vec![0usize; n];
        for (i, &j) in self.singer.iter().enumerate() {
            inverse_cycle[j] = i;
        }
        let backward = orbit_order(&inverse_cycle, 0);
        let mut best: Option<(Vec<usize>, Vec<usize>, usize)> = None;
        for order in [forward, backward] {
            let mut label = vec![0usize; n];
            for (k, &p) in order.iter().enumerate() {
                label[p] = k;
            }
            for j in 0..self.num_lines() {
                let mut d: Vec<usize> = self.lines[j].iter().map(|&p| label[p]).collect();
                d.sort_unstable();
                if best.as_ref().is_none_or(|(bd, _, _)| d < *bd) {
                    best = Some((d, order.clone(), j));
                }
            }
        }
        let (_, point_order, base_line) = best.expect("plane has lines");
        let mut label = vec![0usize; n];
        for (k, &p) in point_order.iter().enumerate() {
            label[p] = k;
        }
        // Line with label j is the image of the base line under the j-th power
        // of the chosen cycle; identify it by its relabeled point set.
        let mut by_support: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for j in 0..self.num_lines() {
            let mut d: Vec<usize> = self.lines[j].iter().map(|&p| label[p]).collect();
            d.sort_unstable();
            by_support.insert(d, j);
        }
        let base: Vec<usize> = {
            let mut d: Vec<usize> = self.lines[base_line].iter().map(|&p| label[p]).collect();
            d.sort_unstable();
            d
        };
        let line_order = (0..self.num_lines())
            .map(|j| {
                let mut d: Vec<usize> = base.iter().map(|&k| (k + j) % n).collect();
                d.sort_unstable();
                by_support[&d]
            })
            .collect();
        (point_order, line_order)
    }

    /// Index of the point with the given (not necessarily normalized)
    /// coordinates.
    pub fn point_index(&self, coords: [u8; 3]) -> Option<usize> {
        let p = self.normalize(coords)?;
        self.points.iter().position(|&x| x == p)
    }

    fn point_lookup(&self) -> Vec<usize> {
        let q = self.q as usize;
        let mut table = vec![usize::MAX; q * q * q];
        for (i, p) in self.points.iter().enumerate() {
            table[key(p, q)] = i;
        }
        table
    }

    /// Point permutation induced by a semilinear map on coordinates. Returns
    /// `None` if the map does not preserve the point set.
    fn point_permutation(&self, map: impl Fn(Point) -> Point) -> Option<Vec<usize>> {
        let q = self.q as usize;
        let lookup = self.point_lookup();
        let mut perm = Vec::with_capacity(self.num_points());
        for &p in &self.points {
            let image = self.normalize(map(p))?;
            let idx = lookup[key(&image, q)];
            if idx == usize::MAX {
                return None;
            }
            perm.push(idx);
        }
        Some(perm)
    }

    fn normalize(&self, p: Point) -> Option<Point> {
        match self.family {
            Family::Pg => normalize_projective(&self.field, p),
            Family::EgReduced => {
                // affine points keep their last coordinate 1
                let z = p[2];
                if z == 0 {
                    return None;
                }
                let inv = self.field.inv(z)?;
                Some([self.field.mul(p[0], inv), self.field.mul(p[1], inv), 1])
            }
        }
    }
}

fn key(p: &Point, q: usize) -> usize {
    (p[0] as usize * q + p[1] as usize) * q + p[2] as usize
}

fn orbit_order(perm: &[usize], start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut x = perm[start];
    while x != start {
        order.push(x);
        x = perm[x];
    }
    order
}

fn point_lines_of(n: usize, lines: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut pl = vec![Vec::new(); n];
    for (j, l) in lines.iter().enumerate() {
        for &i in l {
            pl[i].push(j);
        }
    }
    pl
}

fn dot(f: &FieldTable, a: &Point, b: &Point) -> u8 {
    f.mul(a[0], b[0]) ^ f.mul(a[1], b[1]) ^ f.mul(a[2], b[2])
}

fn normalize_projective(f: &FieldTable, p: Point) -> Option<Point> {
    let lead = *p.iter().find(|&&c| c != 0)?;
    let inv = f.inv(lead)?;
    Some([f.mul(p[0], inv), f.mul(p[1], inv), f.mul(p[2], inv)])
}

fn mat_vec(f: &FieldTable, m: &Mat3, v: Point) -> Point {
    let mut out = [0u8; 3];
    for r in 0..3 {
        out[r] = f.mul(m[r][0], v[0]) ^ f.mul(m[r][1], v[1]) ^ f.mul(m[r][2], v[2]);
    }
    out
}

/// Normalized homogeneous triples over GF(q), in lexicographic order.
fn projective_points(f: &FieldTable) -> Vec<Point> {
    let q = f.order() as u8;
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let p = [a, b, c];
                if normalize_projective(f, p) == Some(p) {
                    pts.push(p);
                }
            }
        }
    }
    pts
}

fn finish_plane(
    family: Family,
    q: u32,
    field: FieldTable,
    points: Vec<Point>,
    line_duals: Vec<Point>,
    singer: impl Fn(&FieldTable, Point) -> Point,
) -> Plane {
    let lines: Vec<Vec<usize>> = line_duals
        .iter()
        .map(|l| (0..points.len()).filter(|&i| dot(&field, l, &points[i]) == 0).collect())
        .collect();
    let point_lines = point_lines_of(points.len(), &lines);
    let mut plane = Plane {
        family,
        q,
        field,
        points,
        line_duals,
        lines,
        point_lines,
        singer: Vec::new(),
        ordering: Ordering::Natural,
    };
    let field = plane.field.clone();
    plane.singer = plane
        .point_permutation(|p| singer(&field, p))
        .expect("cyclic collineation preserves the point set");
    plane
}

/// Companion matrix of `x^3 + a x^2 + b x + c` acting on column vectors.
fn companion3(a: u8, b: u8, c: u8) -> Mat3 {
    [[0, 0, c], [1, 0, b], [0, 1, a]]
}

/// First companion matrix (in `(a, b, c)` lexicographic order) whose
/// projective action on `(1,0,0)` has an orbit of size `q^2 + q + 1`.
fn find_singer_matrix(f: &FieldTable) -> Mat3 {
    let q = f.order();
    let n = q * q + q + 1;
    for a in 0..q as u8 {
        for b in 0..q as u8 {
            for c in 1..q as u8 {
                let m = companion3(a, b, c);
                let start = [1u8, 0, 0];
                let mut p = start;
                let mut len = 0;
                loop {
                    p = normalize_projective(f, mat_vec(f, &m, p)).expect("companion is invertible");
                    len += 1;
                    if p == start || len > n {
                        break;
                    }
                }
                if len == n {
                    return m;
                }
            }
        }
    }
    unreachable!("a primitive cubic exists over every finite field")
}

/// First companion matrix of `x^2 + a x + b` whose action on `(1, 0)` has
/// orbit size `q^2 - 1`.
fn find_eg_cycle(f: &FieldTable) -> [[u8; 2]; 2] {
    let q = f.order();
    for a in 0..q as u8 {
        for b in 1..q as u8 {
            let m = [[0u8, b], [1u8, a]];
            let start = [1u8, 0];
            let mut v = start;
            let mut len = 0;
            loop {
                v = [f.mul(m[0][0], v[0]) ^ f.mul(m[0][1], v[1]), f.mul(m[1][0], v[0]) ^ f.mul(m[1][1], v[1])];
                len += 1;
                if v == start || len > q * q {
                    break;
                }
            }
            if len == q * q - 1 {
                return m;
            }
        }
    }
    unreachable!("a primitive quadratic exists over every finite field")
}

/// Builds `PG(2,q)` with points as 1-dimensional subspaces of GF(q)^3.
pub fn build_pg_plane(q: u32) -> Result<Plane> {
    let s = degree_of_order(q)?;
    let field = FieldTable::new(s)?;
    let points = projective_points(&field);
    let line_duals = points.clone();
    let singer = find_singer_matrix(&field);
    Ok(finish_plane(Family::Pg, q, field, points, line_duals, move |f, p| mat_vec(f, &singer, p)))
}

/// Builds `EG(2,q)` with the origin and the `q+1` lines through it removed.
pub fn build_eg_plane_reduced(q: u32) -> Result<Plane> {
    let s = degree_of_order(q)?;
    let field = FieldTable::new(s)?;
    let qq = q as u8;
    let mut points = Vec::new();
    for x in 0..qq {
        for y in 0..qq {
            if (x, y) != (0, 0) {
                points.push([x, y, 1]);
            }
        }
    }
    // a x + b y = 1  <=>  (a, b, 1) . (x, y, 1) = 0 in characteristic 2
    let line_duals: Vec<Point> = points.clone();
    let cycle = find_eg_cycle(&field);
    Ok(finish_plane(Family::EgReduced, q, field, points, line_duals, move |f, p| {
        [
            f.mul(cycle[0][0], p[0]) ^ f.mul(cycle[0][1], p[1]),
            f.mul(cycle[1][0], p[0]) ^ f.mul(cycle[1][1], p[1]),
            p[2],
        ]
    }))
}

pub fn build_plane(family: Family, q: u32) -> Result<Plane> {
    match family {
        Family::Pg => build_pg_plane(q),
        Family::EgReduced => build_eg_plane_reduced(q),
    }
}

/// Perfect difference set of the Singer cycle of `PG(2,q)`, normalized to
/// the lexicographically smallest first row (so it contains 0 and 1).
pub fn singer_difference_set(q: u32) -> Result<Vec<usize>> {
    let plane = build_pg_plane(q)?.with_ordering(Ordering::Circulant);
    Ok(plane.line(0).to_vec())
}

/// Incidence matrix with rows = lines and columns = points.
pub fn incidence_matrix(plane: &Plane, ordering: Ordering) -> ParityCheckMatrix {
    plane.with_ordering(ordering).incidence()
}

/// Generators of a group of Tanner-graph automorphisms: each point
/// permutation is paired with the line permutation it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroupGens {
    gens: Vec<(Vec<usize>, Vec<usize>)>,
}

impl PermutationGroupGens {
    /// Pairs each point permutation with its induced line permutation.
    /// Fails if some permutation is not a collineation of `lines`.
    pub fn from_point_perms(lines: &[Vec<usize>], perms: Vec<Vec<usize>>) -> Result<Self> {
        let mut by_support: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (j, l) in lines.iter().enumerate() {
            let mut s = l.clone();
            s.sort_unstable();
            by_support.insert(s, j);
        }
        let mut gens = Vec::with_capacity(perms.len());
        for perm in perms {
            let mut line_perm = Vec::with_capacity(lines.len());
            for l in lines {
                let mut image: Vec<usize> = l.iter().map(|&i| perm[i]).collect();
                image.sort_unstable();
                let &j = by_support.get(&image).ok_or_else(|| {
                    Error::InvalidArgument("permutation does not map lines to lines".into())
                })?;
                line_perm.push(j);
            }
            gens.push((perm, line_perm));
        }
        Ok(Self { gens })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.gens
    }

    pub fn point_perms(&self) -> impl Iterator<Item = &[usize]> {
        self.gens.iter().map(|(p, _)| p.as_slice())
    }

    /// `true` if column-permuting by each generator and row-permuting by its
    /// paired line permutation reproduces `h`.
    pub fn preserves(&self, h: &ParityCheckMatrix) -> bool {
        self.gens
            .iter()
            .all(|(p, l)| h.permuted(p, l).map(|g| &g == h).unwrap_or(false))
    }

    /// Orbits of the generated group on incident (point, line) pairs.
    pub fn flag_orbits(&self, h: &ParityCheckMatrix) -> Vec<usize> {
        let mut flags: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for j in 0..h.m() {
            for &i in h.row(j) {
                let id = flags.len();
                flags.insert((i, j), id);
            }
        }
        let mut seen = vec![false; flags.len()];
        let mut sizes = Vec::new();
        let keys: Vec<(usize, usize)> = flags.keys().copied().collect();
        for start in keys {
            if seen[flags[&start]] {
                continue;
            }
            let mut size = 0;
            let mut queue = VecDeque::from([start]);
            seen[flags[&start]] = true;
            while let Some((i, j)) = queue.pop_front() {
                size += 1;
                for (p, l) in &self.gens {
                    let image = (p[i], l[j]);
                    let id = *flags.get(&image).expect("automorphism maps flags to flags");
                    if !seen[id] {
                        seen[id] = true;
                        queue.push_back(image);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    pub fn is_flag_transitive(&self, h: &ParityCheckMatrix) -> bool {
        self.flag_orbits(h).len() == 1
    }

    /// Every point permutation in the generated group, identity first.
    /// Fails with a size guard past `limit` elements.
    pub fn elements(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let Some((first, _)) = self.gens.first() else {
            return Ok(Vec::new());
        };
        let identity: Vec<usize> = (0..first.len()).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut out = vec![identity];
        let mut next = 0;
        while next < out.len() {
            for (p, _) in &self.gens {
                let composed: Vec<usize> = out[next].iter().map(|&i| p[i]).collect();
                if !seen.contains(&composed) {
                    if out.len() >= limit {
                        return Err(Error::SizeGuard(alloc::format!("group has more than {limit} elements")));
                    }
                    seen.insert(composed.clone());
                    out.push(composed);
                }
            }
            next += 1;
        }
        Ok(out)
    }
}

/// Generators of automorphisms of the plane's Tanner graph, in the plane's
/// current labeling.
///
/// For `PG(2,q)` these are the Singer cycle, a diagonal matrix, elementary
/// transvections over an additive basis of GF(q), a coordinate rotation and
/// the Frobenius map; together they generate PGammaL(3,q), which is
/// flag-transitive. For the reduced EG plane only the cyclic shift is given.
pub fn automorphism_generators(plane: &Plane) -> PermutationGroupGens {
    let mut perms = vec![plane.singer.clone()];
    if plane.family == Family::Pg {
        let f = plane.field.clone();
        let s = f.degree() as usize;
        let g = f.generator();
        let mut mats: Vec<Mat3> = Vec::new();
        if f.order() > 2 {
            mats.push([[g, 0, 0], [0, 1, 0], [0, 0, 1]]);
        }
        for k in 0..s {
            let lambda = f.exp(k);
            for r in 0..3 {
                for c in 0..3 {
                    if r != c {
                        let mut m: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
                        m[r][c] = lambda;
                        mats.push(m);
                    }
                }
            }
        }
        mats.push([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        for m in mats {
            let fm = f.clone();
            perms.push(
                plane
                    .point_permutation(move |p| mat_vec(&fm, &m, p))
                    .expect("invertible linear map is a collineation"),
            );
        }
        if s > 1 {
            let ff = f.clone();
            perms.push(
                plane
                    .point_permutation(move |p| [ff.square(p[0]), ff.square(p[1]), ff.square(p[2])])
                    .expect("Frobenius is a collineation"),
            );
        }
    }
    PermutationGroupGens::from_point_perms(plane.lines(), perms).expect("collineations map lines to lines")
}

/// Parameters reported for a plane-based code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneParameters {
    pub n: usize,
    pub m: usize,
    pub column_weight: usize,
    pub row_weight: usize,
    pub d_min: usize,
    /// `n - k` from the closed form (`3^s + 1` for PG, `3^s - 1` for EG).
    pub redundancy: usize,
}

impl PlaneParameters {
    pub fn k(&self) -> usize {
        self.n - self.redundancy
    }
}

/// Closed-form parameters of the PG/EG-based codes.
pub fn plane_parameters(family: Family, q: u32) -> Result<PlaneParameters> {
    let s = degree_of_order(q)?;
    let q = q as usize;
    let three_s = 3usize.pow(s);
    Ok(match family {
        Family::Pg => PlaneParameters {
            n: q * q + q + 1,
            m: q * q + q + 1,
            column_weight: q + 1,
            row_weight: q + 1,
            d_min: q + 2,
            redundancy: three_s + 1,
        },
        Family::EgReduced => PlaneParameters {
            n: q * q - 1,
            m: q * q - 1,
            column_weight: q,
            row_weight: q,
            d_min: q + 1,
            redundancy: three_s - 1,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pg_sizes() {
        for (q, n, w) in [(2, 7, 3), (4, 21, 5), (8, 73, 9)] {
            let p = build_pg_plane(q).unwrap();
            assert_eq!(p.num_points(), n);
            assert_eq!(p.num_lines(), n);
            assert!(p.lines().iter().all(|l| l.len() == w));
            assert!((0..n).all(|i| p.lines_through(i).len() == w));
        }
    }

    #[test]
    fn eg_sizes() {
        for (q, n, w) in [(2, 3, 2), (4, 15, 4), (8, 63, 8)] {
            let p = build_eg_plane_reduced(q).unwrap();
            assert_eq!(p.num_points(), n);
            assert_eq!(p.num_lines(), n);
            assert!(p.lines().iter().all(|l| l.len() == w));
            assert!((0..n).all(|i| p.lines_through(i).len() == w));
        }
    }

    #[test]
    fn unsupported_orders() {
        assert!(build_pg_plane(3).is_err());
        assert!(build_eg_plane_reduced(64).is_err());
    }

    #[test]
    fn two_points_one_line() {
        for q in [2, 4, 8] {
            let p = build_pg_plane(q).unwrap();
            let n = p.num_points();
            for a in 0..n {
                for b in a + 1..n {
                    let common = p
                        .lines_through(a)
                        .iter()
                        .filter(|l| p.lines_through(b).contains(l))
                        .count();
                    assert_eq!(common, 1, "q={q} points {a},{b}");
                }
            }
        }
    }

    #[test]
    fn eg_pairs_share_at_most_one_line() {
        for q in [2, 4, 8] {
            let p = build_eg_plane_reduced(q).unwrap();
            let n = p.num_points();
            for a in 0..n {
                for b in a + 1..n {
                    let common = p
                        .lines_through(a)
                        .iter()
                        .filter(|l| p.lines_through(b).contains(l))
                        .count();
                    assert!(common <= 1);
                }
            }
        }
    }

    fn is_perfect_difference_set(d: &[usize], n: usize) -> bool {
        let mut seen = vec![0usize; n];
        for &a in d {
            for &b in d {
                if a != b {
                    seen[(a + n - b) % n] += 1;
                }
            }
        }
        seen[0] == 0 && seen[1..].iter().all(|&c| c == 1)
    }

    #[test]
    fn singer_sets_are_perfect() {
        assert_eq!(singer_difference_set(2).unwrap(), vec![0, 1, 3]);
        for q in [2u32, 4, 8, 16] {
            let d = singer_difference_set(q).unwrap();
            let n = (q * q + q + 1) as usize;
            assert_eq!(d.len(), q as usize + 1);
            assert!(is_perfect_difference_set(&d, n), "q={q}");
        }
    }

    #[test]
    fn circulant_orderings() {
        for q in [2, 4, 8] {
            let h = incidence_matrix(&build_pg_plane(q).unwrap(), Ordering::Circulant);
            assert!(h.is_circulant());
            let h = incidence_matrix(&build_eg_plane_reduced(q).unwrap(), Ordering::Circulant);
            assert!(h.is_circulant(), "EG q={q}");
        }
    }

    #[test]
    fn pg2_circulant_matches_fano_matrix() {
        let h = incidence_matrix(&build_pg_plane(2).unwrap(), Ordering::Circulant);
        let fano = ParityCheckMatrix::circulant(7, &[0, 1, 3]).unwrap();
        assert_eq!(h, fano);
    }

    #[test]
    fn generators_preserve_incidence() {
        for q in [2, 4, 8] {
            for ordering in [Ordering::Natural, Ordering::Circulant] {
                let plane = build_pg_plane(q).unwrap().with_ordering(ordering);
                let gens = automorphism_generators(&plane);
                assert!(gens.preserves(&plane.incidence()));
            }
        }
        let plane = build_eg_plane_reduced(4).unwrap().with_ordering(Ordering::Circulant);
        let gens = automorphism_generators(&plane);
        assert_eq!(gens.len(), 1);
        assert!(gens.preserves(&plane.incidence()));
    }

    #[test]
    fn cyclic_shift_is_an_automorphism_of_circulant_pg2() {
        let plane = build_pg_plane(2).unwrap().with_ordering(Ordering::Circulant);
        let shift: Vec<usize> = (0..7).map(|i| (i + 1) % 7).collect();
        assert_eq!(plane.singer_cycle(), shift.as_slice());
    }

    #[test]
    fn pg4_generators_are_flag_transitive() {
        let plane = build_pg_plane(4).unwrap().with_ordering(Ordering::Circulant);
        let gens = automorphism_generators(&plane);
        assert_eq!(gens.flag_orbits(&plane.incidence()), vec![21 * 5]);
    }

    #[test]
    fn gram_identity() {
        for q in [2usize, 4, 8] {
            let h = build_pg_plane(q as u32).unwrap().incidence();
            let g = h.gram();
            for a in 0..h.n() {
                for b in 0..h.n() {
                    let expected = if a == b { q as u64 + 1 } else { 1 };
                    assert_eq!(g[a][b], expected);
                }
            }
        }
    }
}
