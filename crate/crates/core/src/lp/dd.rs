//! Double description method for pointed polyhedral cones `{z : A z ≥ 0}`.
//!
//! Rays are kept as primitive integer vectors and adjacency is decided
//! combinatorially from zero sets, so no division ever happens after setup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    zeros: BitVector,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Row reduction over `Q`; returns the indices of a maximal independent
/// prefix-greedy subset of `rows`.
pub(crate) fn independent_rows(rows: &[Vec<Rational>], d: usize) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (p, e) in &echelon {
            if !r[*p].is_zero() {
                let f = &r[*p] / &e[*p];
                for k in 0..d {
                    if !e[k].is_zero() {
                        r[k] -= &f * &e[k];
                    }
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            echelon.push((p, r));
            chosen.push(i);
            if chosen.len() == d {
                break;
            }
        }
    }
    chosen
}

pub(crate) fn rank(rows: &[Vec<Rational>], d: usize) -> usize {
    independent_rows(rows, d).len()
}

/// Inverse of a square nonsingular rational matrix.
fn inverse(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let d = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..d).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&r| !a[r][c].is_zero()).expect("matrix is nonsingular");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, q) in row.iter_mut().zip(&pivot) {
                    *v -= &f * q;
                }
            }
        }
    }
    a.into_iter().map(|r| r[d..].to_vec()).collect()
}

/// Extreme rays of `{z ∈ R^d : rows · z ≥ 0}` as primitive integer vectors,
/// sorted. The rows must have rank `d` (the cone is pointed).
pub fn extreme_rays(rows: &[Vec<BigInt>], d: usize) -> Result<Vec<Vec<BigInt>>> {
    if rows.iter().any(|r| r.len() != d) {
        return Err(Error::BadProblem("cone row of wrong length".into()));
    }
    let qrows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
        .collect();
    let init = independent_rows(&qrows, d);
    if init.len() < d {
        return Err(Error::BadProblem("cone is not pointed".into()));
    }
    let m = rows.len();
    let a0: Vec<Vec<Rational>> = init.iter().map(|&i| qrows[i].clone()).collect();
    let inv = inverse(&a0);
    let mut rays: Vec<Ray> = (0..d)
        .map(|k| {
            let col: Vec<Rational> = (0..d).map(|i| inv[i][k].clone()).collect();
            let l = col.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
            let coords = primitive(col.iter().map(|x| (x * &l).to_integer()).collect());
            let mut zeros = BitVector::zeros(m);
            for (j, &i) in init.iter().enumerate() {
                if j != k {
                    zeros.set(i, true);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    let mut is_init = vec![false; m];
    for &i in &init {
        is_init[i] = true;
    }
    for (i, row) in rows.iter().enumerate() {
        if is_init[i] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for (k, r) in rays.iter().enumerate() {
            if !values[k].is_negative() {
                let mut r = r.clone();
                if values[k].is_zero() {
                    r.zeros.set(i, true);
                }
                next.push(r);
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count_ones() + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !common.is_subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let coords: Vec<BigInt> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(x, y)| &vq * x + vp * y)
                    .collect();
                let mut zeros = common;
                zeros.set(i, true);
                next.push(Ray { coords: primitive(coords), zeros });
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    Ok(out)
}
