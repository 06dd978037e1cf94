//! Exact rational linear programming and the polyhedra attached to clutters.
//!
//! Every routine works over [`Rational`] (arbitrary precision); there are no
//! tolerances anywhere.

mod dd;
mod packing;
mod polyhedron;
mod simplex;
mod text;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use dd::extreme_rays;
pub use packing::{core_support, extract_small_subfamily, max_fractional_packing, FractionalPacking};
pub use polyhedron::{
    cover_polyhedron, enumerate_vertices, enumerate_vertices_with, ensure_ideal, is_ideal, is_ideal_with,
    CoverPolyhedron, IdealityReport, Idealness,
};

/// Exact rational number.
pub type Rational = num_rational::BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Formats as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Least common multiple of the denominators (1 for an empty list).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }

    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `optimize objective · x` subject to the rows and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    pub sense: Sense,
    pub objective: Vec<Rational>,
    pub rows: Vec<Constraint>,
}

/// An optimal primal/dual pair.
///
/// Dual sign conventions: for a minimization the dual is
/// `max b·y, Aᵀy ≤ c` with `y ≥ 0` on `≥` rows and `y ≤ 0` on `≤` rows;
/// for a maximization it is `min b·y, Aᵀy ≥ c` with `y ≥ 0` on `≤` rows and
/// `y ≤ 0` on `≥` rows. Equality rows are free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

impl LpProblem {
    pub fn new(sense: Sense, objective: Vec<Rational>) -> Self {
        Self { sense, objective, rows: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_row(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.rows.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        for (i, r) in self.rows.iter().enumerate() {
            if r.coeffs.len() != n {
                return Err(Error::BadProblem(format!(
                    "row {} has {} coefficients, expected {n}",
                    i + 1,
                    r.coeffs.len()
                )));
            }
        }
        Ok(())
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    /// `x ≥ 0` and every row holds exactly.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.rows.iter().all(|r| r.relation.holds(&dot(&r.coeffs, x), &r.rhs))
    }

    pub fn solve(&self) -> Result<LpSolution> {
        self.validate()?;
        let sol = simplex::solve(self)?;
        if !verify_certificate(self, &sol.primal, &sol.dual) {
            return Err(Error::invariant("simplex returned an uncertified optimum"));
        }
        Ok(sol)
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Checks primal feasibility, dual feasibility under the documented sign
/// conventions, and equality of the two objective values.
pub fn verify_certificate(p: &LpProblem, primal: &[Rational], dual: &[Rational]) -> bool {
    if !p.is_feasible(primal) || dual.len() != p.rows.len() {
        return false;
    }
    let sign_ok = p.rows.iter().zip(dual).all(|(r, y)| match (p.sense, r.relation) {
        (_, Relation::Eq) => true,
        (Sense::Minimize, Relation::Ge) | (Sense::Maximize, Relation::Le) => !y.is_negative(),
        (Sense::Minimize, Relation::Le) | (Sense::Maximize, Relation::Ge) => !y.is_positive(),
    });
    if !sign_ok {
        return false;
    }
    let columns_ok = (0..p.num_vars()).all(|j| {
        let aty = p.rows.iter().zip(dual).fold(Rational::zero(), |acc, (r, y)| acc + &r.coeffs[j] * y);
        match p.sense {
            Sense::Minimize => aty <= p.objective[j],
            Sense::Maximize => aty >= p.objective[j],
        }
    });
    let dual_value = p.rows.iter().zip(dual).fold(Rational::zero(), |acc, (r, y)| acc + &r.rhs * y);
    columns_ok && dual_value == p.objective_value(primal)
}

impl fmt::Display for LpProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::write(self))
    }
}

impl std::str::FromStr for LpProblem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        text::parse(s)
    }
}
