//! Fractional packings and the LP characterization of the core.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{denominator_lcm, fmt_rational, int, LpProblem, Rational, Relation, Sense};
use crate::clutter::{to_labels, Clutter, CoveringNumber};
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Nonnegative member weights with every element load at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalPacking {
    clutter: Clutter,
    weights: Vec<Rational>,
    value: Rational,
    denominator: BigInt,
}

impl FractionalPacking {
    /// Validates `weights` (one per member, in member order).
    pub fn new(clutter: Clutter, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != clutter.len() {
            return Err(Error::InvalidPacking(format!(
                "{} weights for {} members",
                weights.len(),
                clutter.len()
            )));
        }
        if let Some(i) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::InvalidPacking(format!("negative weight on member {}", i + 1)));
        }
        let pk = Self {
            value: weights.iter().fold(Rational::zero(), |a, w| a + w),
            denominator: denominator_lcm(&weights),
            clutter,
            weights,
        };
        if let Some(e) = pk.loads().iter().position(|l| *l > Rational::one()) {
            return Err(Error::InvalidPacking(format!("element {} has load above one", e + 1)));
        }
        Ok(pk)
    }

    pub fn clutter(&self) -> &Clutter {
        &self.clutter
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// Least common multiple of the weight denominators.
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Total weight of the members containing each element.
    pub fn loads(&self) -> Vec<Rational> {
        let mut loads = vec![Rational::zero(); self.clutter.ground_size()];
        for (m, w) in self.clutter.members().iter().zip(&self.weights) {
            if !w.is_zero() {
                for e in m.ones_iter() {
                    loads[e] += w;
                }
            }
        }
        loads
    }

    /// Indices of the members with positive weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| self.weights[i].is_positive()).collect()
    }

    /// Every weight is an integer multiple of `1/q`.
    pub fn is_integral_over(&self, q: u64) -> bool {
        (BigInt::from(q) % &self.denominator).is_zero()
    }
}

impl fmt::Display for FractionalPacking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "value {}", fmt_rational(&self.value))?;
        writeln!(f, "denominator {}", self.denominator)?;
        for i in self.support() {
            write!(f, "weight {} members", fmt_rational(&self.weights[i]))?;
            for e in self.clutter.member_labels(i) {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `max 1·y` subject to element loads at most one.
pub(crate) fn packing_lp(c: &Clutter) -> LpProblem {
    let mut p = LpProblem::new(Sense::Maximize, vec![int(1); c.len()]);
    for e in 0..c.ground_size() {
        let row = c.members().iter().map(|m| int(i64::from(m.get(e)))).collect();
        p.add_row(row, Relation::Le, int(1));
    }
    p
}

/// An optimal fractional packing.
pub fn max_fractional_packing(c: &Clutter) -> Result<FractionalPacking> {
    if c.has_empty_member() {
        return Err(Error::EmptyMember);
    }
    let sol = packing_lp(c).solve()?;
    FractionalPacking::new(c.clone(), sol.primal)
}

/// Members carrying positive weight in some fractional packing of value two.
///
/// One LP per member not yet seen in the support of an earlier optimum.
pub fn core_support(c: &Clutter) -> Result<Clutter> {
    let tau = c.covering_number();
    if tau != CoveringNumber::Finite(2) {
        return Err(Error::CoveringNumber { found: tau.to_string(), need: "exactly 2" });
    }
    let best = max_fractional_packing(c)?;
    if *best.value() != int(2) {
        return Err(Error::NotIdeal);
    }
    let mut positive = vec![false; c.len()];
    for i in best.support() {
        positive[i] = true;
    }
    for target in 0..c.len() {
        if positive[target] {
            continue;
        }
        let mut p = packing_lp(c);
        p.objective = (0..c.len()).map(|j| int(i64::from(j == target))).collect();
        p.add_row(vec![int(1); c.len()], Relation::Eq, int(2));
        let sol = p.solve()?;
        for (j, y) in sol.primal.iter().enumerate() {
            if y.is_positive() {
                positive[j] = true;
            }
        }
    }
    let sets: Vec<BitVector> = (0..c.len()).filter(|&i| positive[i]).map(|i| c.members()[i].clone()).collect();
    Clutter::from_sets(c.ground_size(), sets)
}

/// An inclusion-minimal subfamily of the support with weight above one.
/// Such a subfamily has no common element. Returns member indices.
pub fn extract_small_subfamily(pk: &FractionalPacking) -> Result<Vec<usize>> {
    if *pk.value() <= Rational::one() {
        return Err(Error::PackingValueTooSmall(fmt_rational(pk.value())));
    }
    let w = pk.weights();
    let mut chosen = Vec::new();
    let mut sum = Rational::zero();
    for i in pk.support() {
        chosen.push(i);
        sum += &w[i];
        if sum > Rational::one() {
            break;
        }
    }
    let mut k = 0;
    while k < chosen.len() {
        let without = &sum - &w[chosen[k]];
        if without > Rational::one() {
            sum = without;
            chosen.remove(k);
        } else {
            k += 1;
        }
    }
    let c = pk.clutter();
    let mut common = BitVector::ones(c.ground_size());
    for &i in &chosen {
        common.and_assign(&c.members()[i]);
    }
    if !common.is_zero() {
        return Err(Error::invariant(format!(
            "subfamily of weight above one shares elements {:?}",
            to_labels(&common)
        )));
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::rat;

    fn c(n: usize, members: &[&[usize]]) -> Clutter {
        Clutter::new(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn packing_values() {
        let q6 = max_fractional_packing(&Clutter::q6()).unwrap();
        assert_eq!(*q6.value(), int(2));
        let two = max_fractional_packing(&c(2, &[&[1], &[2]])).unwrap();
        assert_eq!(two.weights(), &[int(1), int(1)]);
        let tri = max_fractional_packing(&c(3, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!(*tri.value(), rat(3, 2));
        assert_eq!(max_fractional_packing(&Clutter::new(1, [Vec::<usize>::new()]).unwrap()), Err(Error::EmptyMember));
    }

    #[test]
    fn validation() {
        let q6 = Clutter::q6();
        assert!(FractionalPacking::new(q6.clone(), vec![int(1); 4]).is_err());
        assert!(FractionalPacking::new(q6.clone(), vec![int(1); 3]).is_err());
        let pk = FractionalPacking::new(q6, vec![rat(1, 2); 4]).unwrap();
        assert_eq!(*pk.denominator(), BigInt::from(2));
        assert!(pk.is_integral_over(2) && pk.is_integral_over(4) && !pk.is_integral_over(1));
        assert_eq!(
            pk.to_string(),
            "value 2\ndenominator 2\nweight 1/2 members 1 3 6\nweight 1/2 members 1 4 5\n\
             weight 1/2 members 2 3 5\nweight 1/2 members 2 4 6\n"
        );
    }

    #[test]
    fn core_support_examples() {
        assert_eq!(core_support(&Clutter::q6()).unwrap(), Clutter::q6());
        let x = c(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(core_support(&x).unwrap(), x);
        assert!(core_support(&c(2, &[&[1, 2]])).is_err());
    }

    #[test]
    fn small_subfamilies() {
        let pk = FractionalPacking::new(Clutter::q6(), vec![rat(1, 2); 4]).unwrap();
        assert_eq!(extract_small_subfamily(&pk).unwrap(), vec![0, 1, 2]);
        let two = FractionalPacking::new(c(2, &[&[1], &[2]]), vec![int(1), int(1)]).unwrap();
        assert_eq!(extract_small_subfamily(&two).unwrap(), vec![0, 1]);
        let low = FractionalPacking::new(c(2, &[&[1], &[2]]), vec![int(1), int(0)]).unwrap();
        assert!(matches!(extract_small_subfamily(&low), Err(Error::PackingValueTooSmall(_))));
    }
}
