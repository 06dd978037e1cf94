//! The covering polyhedron `Q(C) = {x ≥ 0 : x(C) ≥ 1 for every member C}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{dd, LpProblem, Rational, Relation, Sense};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::Caps;

/// `Q(C)`; constraint rows correspond to the members in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPolyhedron {
    n: usize,
    members: Vec<BitVector>,
}

/// Whether idealness was checked or taken on trust.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Idealness {
    Verified,
    Assumed,
}

/// Outcome of an idealness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealityReport {
    pub vertices: usize,
    /// The first fractional vertex, if any.
    pub witness: Option<Vec<Rational>>,
}

impl IdealityReport {
    pub fn is_ideal(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn cover_polyhedron(c: &Clutter) -> Result<CoverPolyhedron> {
    if c.has_empty_member() {
        return Err(Error::EmptyMember);
    }
    Ok(CoverPolyhedron { n: c.ground_size(), members: c.members().to_vec() })
}

impl CoverPolyhedron {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn num_members(&self) -> usize {
        self.members.len()
    }

    /// `min w·x` over `Q(C)`.
    pub fn lp(&self, weights: &[Rational]) -> LpProblem {
        let mut p = LpProblem::new(Sense::Minimize, weights.to_vec());
        for m in &self.members {
            let row = (0..self.n).map(|i| if m.get(i) { Rational::one() } else { Rational::zero() }).collect();
            p.add_row(row, Relation::Ge, Rational::one());
        }
        p
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.n
            && x.iter().all(|v| !v.is_negative())
            && self
                .members
                .iter()
                .all(|m| m.ones_iter().fold(Rational::zero(), |acc, i| acc + &x[i]) >= Rational::one())
    }

    /// Rank of the constraints tight at `x`.
    pub fn tight_rank(&self, x: &[Rational]) -> usize {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (i, v) in x.iter().enumerate() {
            if v.is_zero() {
                let mut r = vec![Rational::zero(); self.n];
                r[i] = Rational::one();
                rows.push(r);
            }
        }
        for m in &self.members {
            let s = m.ones_iter().fold(Rational::zero(), |acc, i| acc + &x[i]);
            if s.is_one() {
                rows.push((0..self.n).map(|i| if m.get(i) { Rational::one() } else { Rational::zero() }).collect());
            }
        }
        dd::rank(&rows, self.n)
    }
}

pub fn enumerate_vertices(q: &CoverPolyhedron) -> Result<Vec<Vec<Rational>>> {
    enumerate_vertices_with(q, &Caps::default())
}

/// All vertices of `Q(C)` in increasing lexicographic order, each certified
/// feasible with `n` linearly independent tight constraints.
///
/// Homogenizes to the cone `{(x, t) : x ≥ 0, t ≥ 0, x(C) ≥ t}` and reads the
/// vertices off the extreme rays with `t > 0`.
pub fn enumerate_vertices_with(q: &CoverPolyhedron, caps: &Caps) -> Result<Vec<Vec<Rational>>> {
    if q.n > caps.vertex_ground {
        return Err(Error::CapExceeded { what: "ground set for vertex enumeration", size: q.n, cap: caps.vertex_ground });
    }
    if q.members.len() > caps.vertex_members {
        return Err(Error::CapExceeded {
            what: "member count for vertex enumeration",
            size: q.members.len(),
            cap: caps.vertex_members,
        });
    }
    let d = q.n + 1;
    let mut rows: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    for m in &q.members {
        let mut r: Vec<BigInt> = (0..q.n).map(|i| BigInt::from(u8::from(m.get(i)))).collect();
        r.push(BigInt::from(-1));
        rows.push(r);
    }
    let rays = dd::extreme_rays(&rows, d)?;
    let mut vertices: Vec<Vec<Rational>> = rays
        .into_iter()
        .filter(|r| r[q.n].is_positive())
        .map(|r| r[..q.n].iter().map(|x| Rational::new(x.clone(), r[q.n].clone())).collect())
        .collect();
    vertices.sort();
    for v in &vertices {
        if !q.contains(v) || q.tight_rank(v) != q.n {
            return Err(Error::invariant("vertex enumeration produced a non-vertex"));
        }
    }
    Ok(vertices)
}

pub fn is_ideal(c: &Clutter) -> Result<IdealityReport> {
    is_ideal_with(c, &Caps::default())
}

/// Whether every vertex of `Q(C)` is integral.
pub fn is_ideal_with(c: &Clutter, caps: &Caps) -> Result<IdealityReport> {
    let q = cover_polyhedron(c)?;
    let vertices = enumerate_vertices_with(&q, caps)?;
    let witness = vertices.iter().find(|v| v.iter().any(|x| !x.is_integer())).cloned();
    Ok(IdealityReport { vertices: vertices.len(), witness })
}

/// Verifies idealness when `c` fits the vertex caps; otherwise relies on
/// `assume_ideal`.
pub fn ensure_ideal(c: &Clutter, assume_ideal: bool, caps: &Caps) -> Result<Idealness> {
    let fits = c.ground_size() <= caps.vertex_ground && c.len() <= caps.vertex_members;
    if fits {
        if is_ideal_with(c, caps)?.is_ideal() {
            Ok(Idealness::Verified)
        } else {
            Err(Error::NotIdeal)
        }
    } else if assume_ideal {
        Ok(Idealness::Assumed)
    } else {
        Err(Error::IdealnessUnverified { n: c.ground_size(), cap: caps.vertex_ground })
    }
}
