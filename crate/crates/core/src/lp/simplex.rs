//! Two-phase dense tableau simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{LpProblem, LpSolution, Rational, Relation, Sense};
use crate::error::{Error, Result};

struct Tableau {
    /// `rows[i]` holds the coefficients of every column followed by the rhs.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs followed by minus the objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v -= &f * p;
                    }
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Sets the objective row to the reduced costs of `cost`.
    fn price(&mut self, cost: &[Rational]) {
        let mut obj: Vec<Rational> = cost.to_vec();
        obj.push(Rational::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if !cost[b].is_zero() {
                for (v, a) in obj.iter_mut().zip(row) {
                    *v -= &cost[b] * a;
                }
            }
        }
        self.obj = obj;
    }

    /// Minimizes with columns `0..enter_limit` eligible to enter.
    fn run(&mut self, enter_limit: usize) -> Result<()> {
        loop {
            let Some(c) = (0..enter_limit).find(|&j| self.obj[j].is_negative()) else {
                return Ok(());
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = self.rhs(i) / a;
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, c);
        }
    }
}

pub(super) fn solve(p: &LpProblem) -> Result<LpSolution> {
    let n = p.num_vars();
    let m = p.rows.len();
    let slacks: Vec<Option<usize>> = {
        let mut next = n;
        p.rows
            .iter()
            .map(|r| match r.relation {
                Relation::Eq => None,
                _ => {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect()
    };
    let structural = n + slacks.iter().flatten().count();
    let cols = structural + m;

    // Row i is multiplied by sign[i] so its rhs is nonnegative; artificial
    // column structural + i starts basic in row i.
    let mut sign = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    for (i, r) in p.rows.iter().enumerate() {
        let s = if r.rhs.is_negative() { -Rational::one() } else { Rational::one() };
        let mut row = vec![Rational::zero(); cols + 1];
        for (j, a) in r.coeffs.iter().enumerate() {
            row[j] = a * &s;
        }
        if let Some(k) = slacks[i] {
            let unit = if r.relation == Relation::Le { Rational::one() } else { -Rational::one() };
            row[k] = unit * &s;
        }
        row[structural + i] = Rational::one();
        row[cols] = &r.rhs * &s;
        rows.push(row);
        sign.push(s);
    }
    let mut t = Tableau { rows, obj: Vec::new(), basis: (structural..cols).collect(), cols };

    let mut phase1 = vec![Rational::zero(); cols];
    for c in phase1.iter_mut().skip(structural) {
        *c = Rational::one();
    }
    t.price(&phase1);
    t.run(structural)?;
    if !t.obj[cols].is_zero() {
        return Err(Error::Infeasible);
    }
    // Drive zero-level artificials out where possible; rows where this is
    // impossible are redundant and keep their artificial at zero.
    for i in 0..m {
        if t.basis[i] >= structural {
            if let Some(c) = (0..structural).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, c);
            }
        }
    }

    let flip = p.sense == Sense::Maximize;
    let mut cost = vec![Rational::zero(); cols];
    for (j, c) in p.objective.iter().enumerate() {
        cost[j] = if flip { -c } else { c.clone() };
    }
    t.price(&cost);
    t.run(structural)?;

    let mut primal = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            primal[b] = t.rhs(i).clone();
        }
    }
    // y = c_B B⁻¹; the artificial block of the tableau holds B⁻¹.
    let mut dual = Vec::with_capacity(m);
    for (k, sk) in sign.iter().enumerate().take(m) {
        let mut y = Rational::zero();
        for (i, &b) in t.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                y += &cost[b] * &t.rows[i][structural + k];
            }
        }
        y *= sk;
        dual.push(if flip { -y } else { y });
    }
    let value = p.objective_value(&primal);
    Ok(LpSolution { value, primal, dual })
}
