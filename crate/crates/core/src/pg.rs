//! Projective geometries inside binary spaces and clutters, and the dyadic
//! packings of value two they carry.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::clutter::{Clutter, CoveringNumber};
use crate::cuboid::{as_cuboid, cuboid, ZeroOneSet};
use crate::error::{Error, Result};
use crate::gf2::{BinarySpace, BitVector};
use crate::lp::{self, FractionalPacking, Idealness, Rational};
use crate::matroid::{k_cycle_cover_space, pg_columns, projective_geometry, BinaryMatroid};
use crate::Caps;

/// A subspace whose coordinate deduplication is the cocycle space of
/// `PG(level - 1, 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgSubspace {
    pub space: BinarySpace,
    pub level: usize,
}

/// `2^level` members of a clutter forming a duplication of the cuboid of
/// the cocycle space of `PG(level - 1, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub level: usize,
    /// `members[c]` is the member index placed at `c ∈ F_2^level`, where bit
    /// `i` of `c` is coordinate `i + 1`.
    pub members: Vec<usize>,
    /// For element `v`, `elements[v - 1] = (column, one_side)`: the element
    /// duplicates cuboid element `2·column - 1` when `one_side`, else `2·column`.
    pub elements: Vec<(usize, bool)>,
}

impl Embedding {
    /// Members at `0, e_1, …, e_level`; they have no common element.
    pub fn empty_intersection_witness(&self) -> Vec<usize> {
        std::iter::once(0).chain((0..self.level).map(|i| 1 << i)).map(|c| self.members[c]).collect()
    }

    /// Re-checks the embedding against `c`.
    pub fn verify(&self, c: &Clutter) -> Result<()> {
        let l = self.level;
        let cols = pg_columns(l);
        if self.members.len() != 1 << l || self.elements.len() != c.ground_size() {
            return Err(Error::invariant("embedding has the wrong shape"));
        }
        let mut seen = vec![[false; 2]; cols.len()];
        for (v, &(col, one)) in self.elements.iter().enumerate() {
            if col == 0 || col > cols.len() {
                return Err(Error::invariant("embedding column out of range"));
            }
            seen[col - 1][usize::from(one)] = true;
            for (idx, &m) in self.members.iter().enumerate() {
                let point = BitVector::from_u64(l, idx as u64);
                let inside = point.dot(&cols[col - 1]) == one;
                if c.members()[m].get(v) != inside {
                    return Err(Error::invariant(format!("element {} disagrees with the embedding", v + 1)));
                }
            }
        }
        if seen.iter().any(|s| !s[0] || !s[1]) {
            return Err(Error::invariant("embedding misses a cuboid element"));
        }
        Ok(())
    }
}

/// Reverses the low `width` bits, so that counting upwards through
/// `BitVector::from_u64(width, reverse_bits(x, width))` is increasing order.
fn reverse_bits(c: u64, width: usize) -> u64 {
    (0..width).fold(0, |acc, i| acc | ((c >> i & 1) << (width - 1 - i)))
}

/// Integral packing data of [`quarter_packing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarterPacking {
    pub packing: FractionalPacking,
    /// The packing is uniform on the cuboid of `PG(level - 1, 2)`.
    pub level: usize,
    pub idealness: Idealness,
    /// Elements deleted to reach a minimal tangled minor.
    pub deleted: Vec<usize>,
}

pub fn pg_subspace(s: &BinarySpace) -> Result<PgSubspace> {
    pg_subspace_with(s, &Caps::default())
}

/// Extends a basis of `S⊥` greedily (candidates in increasing order over
/// `{0,1}^n`) by vectors keeping it independent and free of unit vectors;
/// returns the orthogonal complement of the maximal extension.
pub fn pg_subspace_with(s: &BinarySpace, caps: &Caps) -> Result<PgSubspace> {
    let n = s.width();
    if n > caps.pg_width {
        return Err(Error::CapExceeded { what: "width for the geometry construction", size: n, cap: caps.pg_width });
    }
    if let Some(k) = uncovered_coordinate(s) {
        return Err(Error::AgreedCoordinate { coordinate: k + 1, value: false });
    }
    let mut d = s.orthogonal_complement();
    let units: Vec<BitVector> = (0..n).map(|i| BitVector::unit(n, i)).collect();
    let mut unit_res: Vec<BitVector> = units.iter().map(|u| d.reduce(u)).collect();
    let admissible = |d: &BinarySpace, unit_res: &[BitVector], v: &BitVector| {
        let r = d.reduce(v);
        !r.is_zero() && !unit_res.contains(&r)
    };
    for x in 0u64..(1u64 << n) {
        let v = BitVector::from_u64(n, reverse_bits(x, n));
        if admissible(&d, &unit_res, &v) {
            d.insert(v);
            unit_res = units.iter().map(|u| d.reduce(u)).collect();
        }
    }
    if (0u64..(1u64 << n)).any(|x| admissible(&d, &unit_res, &BitVector::from_u64(n, x))) {
        return Err(Error::invariant("greedy extension is not maximal"));
    }
    let space = d.orthogonal_complement();
    if !space.is_subspace_of(s) || uncovered_coordinate(&space).is_some() {
        return Err(Error::invariant("geometry subspace lost a coordinate"));
    }
    let level = BinaryMatroid::from_cycle_space(d)
        .simplify()
        .is_projective_geometry()?
        .ok_or_else(|| Error::invariant("simplification is not a projective geometry"))?;
    Ok(PgSubspace { space, level })
}

fn uncovered_coordinate(s: &BinarySpace) -> Option<usize> {
    let mut covered = BitVector::zeros(s.width());
    for b in s.basis() {
        covered.or_assign(b);
    }
    covered.not().first_one()
}

pub fn embeds_pg(c: &Clutter, max_level: usize) -> Result<Option<Embedding>> {
    embeds_pg_with(c, max_level, &Caps::default())
}

/// The smallest `level ≤ max_level` at which `c` embeds `PG(level - 1, 2)`.
///
/// The members of an embedding are the symmetric differences of odd-size
/// subsets of any `level + 1` of them placed at `0, e_1, …, e_level`, so the
/// search runs over such affine bases.
pub fn embeds_pg_with(c: &Clutter, max_level: usize, caps: &Caps) -> Result<Option<Embedding>> {
    if !(1..=3).contains(&max_level) {
        return Err(Error::OutOfRange { what: "geometry level", value: max_level, min: 1, max: 3 });
    }
    for level in 1..=max_level {
        let subsets = binomial(BigInt::from(c.len()), BigInt::from(level + 1));
        if subsets > BigInt::from(caps.embed_subsets) {
            return Err(Error::CapExceeded {
                what: "candidate member subsets for embedding",
                size: subsets.to_usize().unwrap_or(usize::MAX),
                cap: caps.embed_subsets.to_usize().unwrap_or(usize::MAX),
            });
        }
        if c.ground_size() < 2 * ((1 << level) - 1) {
            continue;
        }
        let mut picked = Vec::with_capacity(level + 1);
        if let Some(e) = basis_search(c, level, 0, &mut picked) {
            e.verify(c)?;
            return Ok(Some(e));
        }
    }
    Ok(None)
}

fn basis_search(c: &Clutter, level: usize, from: usize, picked: &mut Vec<usize>) -> Option<Embedding> {
    if picked.len() == level + 1 {
        return try_basis(c, level, picked);
    }
    for i in from..c.len() {
        picked.push(i);
        if let Some(e) = basis_search(c, level, i + 1, picked) {
            return Some(e);
        }
        picked.pop();
    }
    None
}

fn try_basis(c: &Clutter, level: usize, basis: &[usize]) -> Option<Embedding> {
    let m = c.members();
    let n = c.ground_size();
    let mut inter = BitVector::ones(n);
    let mut union = BitVector::zeros(n);
    for &b in basis {
        inter.and_assign(&m[b]);
        union.or_assign(&m[b]);
    }
    if !inter.is_zero() || union.count_ones() != n {
        return None;
    }
    // Every nonconstant pattern on the basis must occur.
    let patterns: Vec<u64> = (0..n)
        .map(|v| basis.iter().enumerate().fold(0, |acc, (k, &b)| acc | (u64::from(m[b].get(v)) << k)))
        .collect();
    let mut seen = vec![false; 1 << (level + 1)];
    for &p in &patterns {
        seen[p as usize] = true;
    }
    let full = (1usize << (level + 1)) - 1;
    if (1..full).any(|p| !seen[p]) {
        return None;
    }
    let origin = &m[basis[0]];
    let deltas: Vec<BitVector> = basis[1..].iter().map(|&b| m[b].xor(origin)).collect();
    let mut members = Vec::with_capacity(1 << level);
    for idx in 0..(1usize << level) {
        let mut set = origin.clone();
        for (i, d) in deltas.iter().enumerate() {
            if idx >> i & 1 == 1 {
                set.xor_assign(d);
            }
        }
        members.push(c.index_of(&set)?);
    }
    let cols = pg_columns(level);
    let elements = patterns
        .iter()
        .map(|&p| {
            let b = p & 1;
            let linear = (0..level).fold(0u64, |acc, i| acc | (((p >> (i + 1) & 1) ^ b) << i));
            let a = BitVector::from_u64(level, linear);
            let col = cols.iter().position(|x| *x == a).expect("nonzero linear part") + 1;
            (col, b == 0)
        })
        .collect();
    Some(Embedding { level, members, elements })
}

/// Uniform weight `1/2^k` on the `2^(k+1)` members of the cuboid of the
/// cocycle space of `PG(k, 2)`.
pub fn pg_packing(k: usize) -> Result<FractionalPacking> {
    if k > 3 {
        return Err(Error::OutOfRange { what: "packing order", value: k, min: 0, max: 3 });
    }
    let cocycles = projective_geometry(k + 1)?.cocycles();
    let c = cuboid(&ZeroOneSet::from_space(&cocycles)?)?;
    let w = Rational::new(BigInt::one(), BigInt::from(1u64 << k));
    let pk = FractionalPacking::new(c.clone(), vec![w; c.len()])?;
    if *pk.value() != lp::int(2) {
        return Err(Error::invariant("geometry packing does not have value two"));
    }
    Ok(pk)
}

pub fn quarter_packing(c: &Clutter, assume_ideal: bool) -> Result<QuarterPacking> {
    quarter_packing_with(c, assume_ideal, &Caps::default())
}

/// A packing of value two with weights in `{0, 1/4, 1/2, 1}` for an ideal
/// binary clutter with covering number at least two.
///
/// Minimal tangled deletion minor → deduplication to `cuboid(S)` with
/// `0 ∈ S` → a 3-cycle cover of the binary space `S` → the geometry subspace
/// of its span → uniform weights lifted back to the members of `c`.
pub fn quarter_packing_with(c: &Clutter, assume_ideal: bool, caps: &Caps) -> Result<QuarterPacking> {
    if c.has_empty_member() {
        return Err(Error::EmptyMember);
    }
    let tau = c.covering_number();
    if !tau.at_least(2) {
        return Err(Error::CoveringNumber { found: tau.to_string(), need: "at least 2" });
    }
    debug_assert!(tau != CoveringNumber::Infinite);
    if !c.is_binary() {
        return Err(Error::NotBinary);
    }
    let idealness = lp::ensure_ideal(c, assume_ideal, caps)?;
    let minor = c.minimal_tangled_deletion_minor()?;
    let dedup = minor.clutter.deduplicate();
    let form = as_cuboid(&dedup.clutter).ok_or_else(|| Error::invariant("tangled binary minor is not a cuboid"))?;
    let shift = form.set.points()[0].clone();
    let space = form
        .set
        .translate(&shift)
        .as_binary_space()
        .ok_or_else(|| Error::invariant("cuboid point set is not a binary space"))?;
    let cover = k_cycle_cover_space(&space, 3, caps.cover_rank)?.ok_or(Error::NoThreeCycleCover)?;
    let span = BinarySpace::span(space.width(), &cover)?;
    let geometry = pg_subspace_with(&span, caps)?;

    let weight = Rational::new(BigInt::one(), BigInt::from(1u64 << (geometry.level - 1)));
    let mut weights = vec![Rational::zero(); c.len()];
    for q in geometry.space.points()? {
        let p = q.xor(&shift);
        let mut member = BitVector::zeros(minor.clutter.ground_size());
        for (i, &(one, zero)) in form.pairs.iter().enumerate() {
            let rep = if p.get(i) { one } else { zero };
            for &e in &dedup.classes[rep - 1] {
                member.set(e - 1, true);
            }
        }
        let idx = minor
            .clutter
            .index_of(&member)
            .ok_or_else(|| Error::invariant("lifted point is not a member of the minor"))?;
        weights[minor.source_members[idx]] = weight.clone();
    }
    let packing = FractionalPacking::new(c.clone(), weights)?;
    if *packing.value() != lp::int(2) || !packing.is_integral_over(4) {
        return Err(Error::invariant("lifted packing is not a quarter-integral packing of value two"));
    }
    Ok(QuarterPacking { packing, level: geometry.level, idealness, deleted: minor.deleted })
}
