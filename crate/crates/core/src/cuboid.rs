//! Subsets of the cube `{0,1}^n` and their cuboids.
//!
//! Coordinate `i` (1-based) of a point `p` owns cuboid elements `2i - 1` and
//! `2i`: the member of `p` contains `2i - 1` when `p_i = 1` and `2i` when
//! `p_i = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::clutter::{Clutter, Deduplication};
use crate::error::{Error, Result};
use crate::gf2::{BinarySpace, BitVector};
use crate::lp::{self, IdealityReport, Rational};
use crate::Caps;

/// A set of distinct points of `{0,1}^width`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneSet {
    width: usize,
    points: Vec<BitVector>,
}

/// Which inequality defines a facet of `conv(S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FacetKind {
    LowerBound,
    UpperBound,
    GeneralizedSetCovering,
    Other,
}

/// A facet of `conv(S)` with its defining inequality
/// `Σ_{i∈I} x_i + Σ_{j∈J} (1 - x_j) ≥ 1` (bounds use `≥ 0` with a single
/// index in `I` or `J`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetClass {
    pub kind: FacetKind,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    /// Indices into the point list of the points on the facet.
    pub tight: Vec<usize>,
}

/// Facets of `conv(S)` relative to its affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetReport {
    pub dimension: usize,
    pub facets: Vec<FacetClass>,
    /// `conv(S)` is cut out of `[0,1]^n` by the covering inequalities valid on `S`.
    pub described_by_covering: bool,
}

impl FacetReport {
    /// `conv(S)` is described by bounds and generalized set covering
    /// inequalities. When `conv(S)` is full-dimensional this is the same as
    /// every facet being classified.
    pub fn is_cube_ideal(&self) -> bool {
        self.described_by_covering
    }

    pub fn all_facets_classified(&self) -> bool {
        self.facets.iter().all(|f| f.kind != FacetKind::Other)
    }
}

/// A clutter recognized as a cuboid: `pairs[i]` are the two elements
/// playing coordinate `i + 1`, the first one standing for value 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuboidForm {
    pub set: ZeroOneSet,
    pub pairs: Vec<(usize, usize)>,
}

/// A coordinate class of duplicated coordinates; entries are
/// `(coordinate, complemented relative to the first)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordinateClass {
    pub coordinates: Vec<(usize, bool)>,
}

impl ZeroOneSet {
    pub fn new(width: usize, mut points: Vec<BitVector>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.width() != width) {
            return Err(Error::WidthMismatch { expected: width, found: p.width() });
        }
        points.sort();
        points.dedup();
        Ok(Self { width, points })
    }

    /// Parses 0/1 strings such as `"011"`.
    pub fn from_strs(width: usize, points: &[&str]) -> Result<Self> {
        let parsed = points
            .iter()
            .map(|s| BitVector::parse(s).ok_or_else(|| Error::Parse { line: 0, message: format!("bad point {s:?}") }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(width, parsed)
    }

    pub fn from_space(space: &BinarySpace) -> Result<Self> {
        Ok(Self { width: space.width(), points: space.points()? })
    }

    /// The whole cube `{0,1}^width` (width at most 20).
    pub fn cube(width: usize) -> Result<Self> {
        Self::from_space(&BinarySpace::full(width))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn points(&self) -> &[BitVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &BitVector) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// `{p + t : p ∈ S}`.
    pub fn translate(&self, t: &BitVector) -> Self {
        let mut points: Vec<BitVector> = self.points.iter().map(|p| p.xor(t)).collect();
        points.sort();
        Self { width: self.width, points }
    }

    /// Translates so the smallest point becomes zero.
    pub fn canonical_form(&self) -> Self {
        match self.points.first() {
            Some(p) => self.translate(&p.clone()),
            None => self.clone(),
        }
    }

    /// `S` contains zero and is closed under addition.
    pub fn is_binary_space(&self) -> bool {
        let Ok(span) = BinarySpace::span(self.width, &self.points) else {
            return false;
        };
        span.rank() < usize::BITS as usize - 1
            && self.points.len() == 1usize << span.rank()
            && self.points.first().is_some_and(BitVector::is_zero)
    }

    /// The span as a [`BinarySpace`] when `S` is one.
    pub fn as_binary_space(&self) -> Option<BinarySpace> {
        self.is_binary_space()
            .then(|| BinarySpace::span(self.width, &self.points).expect("widths checked"))
    }

    pub fn project(&self, coords: &[usize]) -> Self {
        let mut points: Vec<BitVector> = self.points.iter().map(|p| p.project(coords)).collect();
        points.sort();
        points.dedup();
        Self { width: coords.len(), points }
    }
}

impl fmt::Display for ZeroOneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ZeroOneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZeroOneSet({self})")
    }
}

/// The member of `cuboid(S)` encoding `p`.
pub fn member_of_point(p: &BitVector) -> BitVector {
    let n = p.width();
    BitVector::from_indices(2 * n, (0..n).map(|i| if p.get(i) { 2 * i } else { 2 * i + 1 }))
}

pub fn cuboid(s: &ZeroOneSet) -> Result<Clutter> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let sets = s.points.iter().map(member_of_point).collect();
    Clutter::from_sets(2 * s.width, sets)
}

/// Recognizes a cuboid, choosing the lexicographically first pairing of the
/// ground set into pairs met exactly once by every member.
pub fn as_cuboid(c: &Clutter) -> Option<CuboidForm> {
    let n = c.ground_size();
    if n == 0 || n % 2 == 1 || c.is_empty() {
        return None;
    }
    let sig = c.element_signatures();
    let all = BitVector::ones(c.len());
    let partner = |u: usize, v: usize| sig[u].xor(&sig[v]) == all && !sig[u].intersects(&sig[v]);
    let mut mate = vec![usize::MAX; n];
    if !match_pairs(n, &partner, &mut mate) {
        return None;
    }
    let pairs: Vec<(usize, usize)> = (0..n).filter(|&u| mate[u] > u).map(|u| (u, mate[u])).collect();
    let points = c
        .members()
        .iter()
        .map(|m| BitVector::from_indices(pairs.len(), (0..pairs.len()).filter(|&i| m.get(pairs[i].0))))
        .collect();
    let set = ZeroOneSet::new(pairs.len(), points).expect("widths agree");
    Some(CuboidForm { set, pairs: pairs.iter().map(|&(u, v)| (u + 1, v + 1)).collect() })
}

fn match_pairs(n: usize, partner: &impl Fn(usize, usize) -> bool, mate: &mut [usize]) -> bool {
    let Some(u) = (0..n).find(|&u| mate[u] == usize::MAX) else {
        return true;
    };
    for v in u + 1..n {
        if mate[v] == usize::MAX && partner(u, v) {
            mate[u] = v;
            mate[v] = u;
            if match_pairs(n, partner, mate) {
                return true;
            }
            mate[u] = usize::MAX;
            mate[v] = usize::MAX;
        }
    }
    false
}

/// Deduplicates `c` and recognizes the result as a cuboid.
pub fn as_duplicated_cuboid(c: &Clutter) -> Option<(Deduplication, CuboidForm)> {
    let d = c.deduplicate();
    let form = as_cuboid(&d.clutter)?;
    Some((d, form))
}

/// The smallest coordinate (1-based) on which all points agree, with the value.
pub fn agree_on_coordinate(s: &ZeroOneSet) -> Option<(usize, bool)> {
    let mut and = BitVector::ones(s.width);
    let mut or = BitVector::zeros(s.width);
    for p in &s.points {
        and.and_assign(p);
        or.or_assign(p);
    }
    let agreed = and.or(&or.not());
    agreed.first_one().map(|i| (i + 1, and.get(i)))
}

/// The first subset of at most `k` points (fewest points first, then
/// lexicographic) that agrees on no coordinate.
pub fn min_disagreeing_subset(s: &ZeroOneSet, k: usize) -> Option<Vec<BitVector>> {
    if agree_on_coordinate(s).is_some() {
        return None;
    }
    for size in 1..=k.min(s.len()) {
        let mut picked = Vec::with_capacity(size);
        let start = (BitVector::ones(s.width), BitVector::zeros(s.width));
        if disagree_search(s, 0, size, start, &mut picked) {
            return Some(picked.into_iter().map(|i| s.points[i].clone()).collect());
        }
    }
    None
}

fn disagree_search(
    s: &ZeroOneSet,
    from: usize,
    size: usize,
    (and, or): (BitVector, BitVector),
    picked: &mut Vec<usize>,
) -> bool {
    if picked.len() == size {
        return and.or(&or.not()).is_zero();
    }
    let need = size - picked.len();
    for i in from..=s.len() - need {
        let p = &s.points[i];
        picked.push(i);
        if disagree_search(s, i + 1, size, (and.and(p), or.or(p)), picked) {
            return true;
        }
        picked.pop();
    }
    false
}

pub fn is_cube_ideal(s: &ZeroOneSet) -> Result<IdealityReport> {
    is_cube_ideal_with(s, &Caps::default())
}

/// Idealness of `cuboid(S)`.
pub fn is_cube_ideal_with(s: &ZeroOneSet, caps: &Caps) -> Result<IdealityReport> {
    if s.width > caps.cube_width {
        return Err(Error::CapExceeded { what: "width for cube-idealness", size: s.width, cap: caps.cube_width });
    }
    lp::is_ideal_with(&cuboid(s)?, caps)
}

/// Returns each coordinate class of duplicated coordinates and `S` projected
/// onto the class representatives (smallest coordinate of each class).
pub fn deduplicate_coordinates(s: &ZeroOneSet) -> (ZeroOneSet, Vec<CoordinateClass>) {
    let mut groups: BTreeMap<BitVector, Vec<(usize, bool)>> = BTreeMap::new();
    for i in 0..s.width {
        let column = BitVector::from_indices(s.len(), (0..s.len()).filter(|&k| s.points[k].get(i)));
        let flipped = column.get(0) && !s.is_empty();
        let key = if flipped { column.not() } else { column };
        groups.entry(key).or_default().push((i + 1, flipped));
    }
    let mut classes: Vec<CoordinateClass> = groups
        .into_values()
        .map(|g| {
            let base = g[0].1;
            CoordinateClass { coordinates: g.into_iter().map(|(i, f)| (i, f != base)).collect() }
        })
        .collect();
    classes.sort_by_key(|c| c.coordinates[0].0);
    let reps: Vec<usize> = classes.iter().map(|c| c.coordinates[0].0 - 1).collect();
    (s.project(&reps), classes)
}

pub fn facets(s: &ZeroOneSet) -> Result<FacetReport> {
    facets_with(s, &Caps::default())
}

/// Facets of `conv(S)` by double description, each matched to a bound or
/// generalized set covering inequality with the same set of tight points.
pub fn facets_with(s: &ZeroOneSet, caps: &Caps) -> Result<FacetReport> {
    if s.width > caps.facet_width {
        return Err(Error::CapExceeded { what: "width for facet enumeration", size: s.width, cap: caps.facet_width });
    }
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = s.width;
    let int_points: Vec<Vec<i64>> =
        s.points.iter().map(|p| (0..n).map(|i| i64::from(p.get(i))).collect()).collect();
    // Coordinates that parametrize the affine hull.
    let diffs: Vec<Vec<Rational>> = int_points
        .iter()
        .map(|p| (0..n).map(|i| Rational::from_integer(BigInt::from(p[i] - int_points[0][i]))).collect())
        .collect();
    let hull = hull_coordinates(&diffs, n);
    let k = hull.len();
    let candidates = candidate_inequalities(n);
    let described_by_covering = covering_system_is_exact(s, &int_points, &candidates)?;
    if k == 0 {
        return Ok(FacetReport { dimension: 0, facets: Vec::new(), described_by_covering });
    }
    let rows: Vec<Vec<BigInt>> = int_points
        .iter()
        .map(|p| {
            let mut r: Vec<BigInt> = hull.iter().map(|&i| BigInt::from(p[i])).collect();
            r.push(BigInt::from(-1));
            r
        })
        .collect();
    let rays = lp::extreme_rays(&rows, k + 1)?;
    let mut facets = Vec::new();
    for ray in rays.iter().filter(|r| r[..k].iter().any(|x| !x.is_zero())) {
        let slack: Vec<BigInt> =
            rows.iter().map(|row| row.iter().zip(ray).fold(BigInt::zero(), |a, (x, y)| a + x * y)).collect();
        if slack.iter().any(Signed::is_negative) {
            return Err(Error::invariant("facet inequality violated by a point"));
        }
        let tight: Vec<usize> = (0..slack.len()).filter(|&t| slack[t].is_zero()).collect();
        let found = candidates.iter().find(|cand| {
            int_points.iter().all(|p| cand.slack(p) >= 0)
                && (0..int_points.len()).filter(|&t| cand.slack(&int_points[t]) == 0).eq(tight.iter().copied())
        });
        facets.push(match found {
            Some(cand) => cand.to_class(tight),
            None => FacetClass { kind: FacetKind::Other, i: Vec::new(), j: Vec::new(), tight },
        });
    }
    let report = FacetReport { dimension: k, facets, described_by_covering };
    if k == n && report.all_facets_classified() != described_by_covering {
        return Err(Error::invariant("facet classification disagrees with the covering description"));
    }
    Ok(report)
}

/// Every vertex of `{x ∈ [0,1]^n : valid covering inequalities}` lies in `S`.
fn covering_system_is_exact(s: &ZeroOneSet, points: &[Vec<i64>], candidates: &[Candidate]) -> Result<bool> {
    let n = s.width;
    if n == 0 {
        return Ok(true);
    }
    let mut minimal: Vec<(&[usize], &[usize])> = Vec::new();
    for cand in candidates {
        let Candidate::Covering(i, j) = cand else { continue };
        if points.iter().any(|p| cand.slack(p) < 0) {
            continue;
        }
        let implied = minimal.iter().any(|(a, b)| a.iter().all(|x| i.contains(x)) && b.iter().all(|x| j.contains(x)));
        if !implied {
            minimal.push((i, j));
        }
    }
    // Homogenized in `(x, t)`.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let unit = |a: usize, v: i64| {
        let mut r = vec![BigInt::zero(); n + 1];
        r[a] = BigInt::from(v);
        r
    };
    rows.push(unit(n, 1));
    for a in 0..n {
        rows.push(unit(a, 1));
        let mut r = unit(a, -1);
        r[n] = BigInt::from(1);
        rows.push(r);
    }
    for (i, j) in minimal {
        let mut r = vec![BigInt::zero(); n + 1];
        for &a in i {
            r[a] = BigInt::from(1);
        }
        for &b in j {
            r[b] = BigInt::from(-1);
        }
        r[n] = BigInt::from(j.len() as i64 - 1);
        rows.push(r);
    }
    for ray in lp::extreme_rays(&rows, n + 1)? {
        let t = &ray[n];
        if !t.is_positive() {
            return Err(Error::invariant("covering system has an unbounded direction"));
        }
        if ray[..n].iter().any(|x| !x.is_zero() && x != t) {
            return Ok(false);
        }
        let v = BitVector::from_indices(n, (0..n).filter(|&a| !ray[a].is_zero()));
        if !s.contains(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

enum Candidate {
    /// `x_a ≥ 0`
    Lower(usize),
    /// `x_a ≤ 1`
    Upper(usize),
    /// `Σ_I x_i + Σ_J (1 - x_j) ≥ 1`
    Covering(Vec<usize>, Vec<usize>),
}

impl Candidate {
    fn slack(&self, p: &[i64]) -> i64 {
        match self {
            Candidate::Lower(a) => p[*a],
            Candidate::Upper(a) => 1 - p[*a],
            Candidate::Covering(i, j) => {
                i.iter().map(|&a| p[a]).sum::<i64>() + j.iter().map(|&b| 1 - p[b]).sum::<i64>() - 1
            }
        }
    }

    fn to_class(&self, tight: Vec<usize>) -> FacetClass {
        let labels = |v: &[usize]| v.iter().map(|x| x + 1).collect();
        match self {
            Candidate::Lower(a) => FacetClass { kind: FacetKind::LowerBound, i: vec![a + 1], j: Vec::new(), tight },
            Candidate::Upper(a) => FacetClass { kind: FacetKind::UpperBound, i: Vec::new(), j: vec![a + 1], tight },
            Candidate::Covering(i, j) => {
                FacetClass { kind: FacetKind::GeneralizedSetCovering, i: labels(i), j: labels(j), tight }
            }
        }
    }
}

/// Bounds first, then covering inequalities by support size.
fn candidate_inequalities(n: usize) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = (0..n).map(Candidate::Lower).chain((0..n).map(Candidate::Upper)).collect();
    let mut covering: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for code in 1..3usize.pow(n as u32) {
        let (mut i, mut j) = (Vec::new(), Vec::new());
        let mut c = code;
        for a in 0..n {
            match c % 3 {
                1 => i.push(a),
                2 => j.push(a),
                _ => {}
            }
            c /= 3;
        }
        covering.push((i, j));
    }
    covering.sort_by_key(|(i, j)| (i.len() + j.len(), i.clone(), j.clone()));
    out.extend(covering.into_iter().map(|(i, j)| Candidate::Covering(i, j)));
    out
}

/// Pivot columns of the row space of `rows`.
fn hull_coordinates(rows: &[Vec<Rational>], n: usize) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        for (p, e) in &echelon {
            if !r[*p].is_zero() {
                let f = &r[*p] / &e[*p];
                for c in 0..n {
                    r[c] -= &f * &e[c];
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            // Keep pivots unique by eliminating the new pivot from earlier rows.
            for (_, e) in echelon.iter_mut() {
                if !e[p].is_zero() {
                    let f = &e[p] / &r[p];
                    for c in 0..n {
                        e[c] -= &f * &r[c];
                    }
                }
            }
            echelon.push((p, r));
        }
    }
    let mut pivots: Vec<usize> = echelon.iter().map(|(p, _)| *p).collect();
    pivots.sort_unstable();
    pivots
}
