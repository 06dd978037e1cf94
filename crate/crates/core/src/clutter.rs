//! Clutters over the ground set `{1..n}` and their combinatorial operations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::{cuboid, lp, Caps};

/// Largest ground set accepted by [`Clutter::blocker_brute_force`].
pub const BRUTE_FORCE_BLOCKER_CAP: usize = 16;

/// Orders sets by their sorted element lists, so `{1,3,6} < {1,4,5} < {2,3,5}`.
pub(crate) fn set_order(a: &BitVector, b: &BitVector) -> Ordering {
    a.ones_iter().cmp(b.ones_iter())
}

/// Keeps the inclusion-minimal sets, dropping repeats.
pub(crate) fn minimal_sets(mut sets: Vec<BitVector>) -> Vec<BitVector> {
    sets.sort_by_key(|s| s.count_ones());
    sets.dedup();
    let mut kept: Vec<BitVector> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset_of(&s)) {
            kept.push(s);
        }
    }
    kept.sort_by(set_order);
    kept
}

/// A family of pairwise incomparable subsets of `{1..n}`.
///
/// Element `e` is stored at bit `e - 1`. Members are kept sorted by
/// [`set_order`], which makes structural equality the clutter equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: usize,
    members: Vec<BitVector>,
}

/// `τ`, which is infinite exactly when the empty set is a member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CoveringNumber {
    Finite(usize),
    Infinite,
}

impl CoveringNumber {
    pub fn finite(self) -> Option<usize> {
        match self {
            CoveringNumber::Finite(t) => Some(t),
            CoveringNumber::Infinite => None,
        }
    }

    pub fn at_least(self, k: usize) -> bool {
        self >= CoveringNumber::Finite(k)
    }
}

impl fmt::Display for CoveringNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoveringNumber::Finite(t) => write!(f, "{t}"),
            CoveringNumber::Infinite => f.write_str("inf"),
        }
    }
}

/// A proper colouring: a partition of the ground set, no part containing a member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Colouring {
    pub k: usize,
    pub parts: Vec<Vec<usize>>,
}

/// A minor together with the original label of each of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub clutter: Clutter,
    /// `labels[i]` is the original label of minor element `i + 1`.
    pub labels: Vec<usize>,
}

/// A clutter with duplicated elements collapsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deduplication {
    pub clutter: Clutter,
    /// `classes[i]` lists the original elements merged into element `i + 1`,
    /// smallest (the representative) first.
    pub classes: Vec<Vec<usize>>,
}

/// Result of greedily deleting elements while keeping `τ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionMinor {
    pub clutter: Clutter,
    pub deleted: Vec<usize>,
    /// Original label of each element of the minor.
    pub labels: Vec<usize>,
    /// `source_members[i]` indexes the member of the input clutter that
    /// became member `i` of the minor.
    pub source_members: Vec<usize>,
}

/// The core of an ideal tangled clutter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub clutter: Clutter,
    pub idealness: lp::Idealness,
}

impl Clutter {
    /// Builds a clutter from member element lists (labels `1..=n`).
    ///
    /// Repeated members collapse; comparable members are rejected.
    pub fn new<I, M>(n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = M>,
        M: AsRef<[usize]>,
    {
        let mut sets = Vec::new();
        for m in members {
            let mut v = BitVector::zeros(n);
            for &e in m.as_ref() {
                if e == 0 || e > n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
                v.set(e - 1, true);
            }
            sets.push(v);
        }
        Self::from_sets(n, sets)
    }

    /// Builds a clutter from incidence vectors, checking the antichain condition.
    pub fn from_sets(n: usize, mut sets: Vec<BitVector>) -> Result<Self> {
        for s in &sets {
            if s.width() != n {
                return Err(Error::WidthMismatch { expected: n, found: s.width() });
            }
        }
        sets.sort_by(set_order);
        sets.dedup();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i != j && a.is_subset_of(b) {
                    return Err(Error::NotAntichain {
                        contained: to_labels(a),
                        container: to_labels(b),
                    });
                }
            }
        }
        Ok(Self { n, members: sets })
    }

    /// The clutter of inclusion-minimal sets among `sets`.
    pub fn from_minimal(n: usize, sets: Vec<BitVector>) -> Self {
        debug_assert!(sets.iter().all(|s| s.width() == n));
        Self { n, members: minimal_sets(sets) }
    }

    /// `Q6`, the triangles of `K4` over its edges.
    pub fn q6() -> Self {
        Self::new(6, [[1, 3, 6], [1, 4, 5], [2, 3, 5], [2, 4, 6]]).expect("Q6 is a clutter")
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[BitVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Element labels of member `i`.
    pub fn member_labels(&self, i: usize) -> Vec<usize> {
        to_labels(&self.members[i])
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(to_labels).collect()
    }

    /// Incidence vector of a set of labels.
    pub fn set_of(&self, labels: &[usize]) -> Result<BitVector> {
        let mut v = BitVector::zeros(self.n);
        for &e in labels {
            if e == 0 || e > self.n {
                return Err(Error::ElementOutOfRange { element: e, n: self.n });
            }
            v.set(e - 1, true);
        }
        Ok(v)
    }

    pub fn index_of(&self, set: &BitVector) -> Option<usize> {
        self.members.binary_search_by(|m| set_order(m, set)).ok()
    }

    pub fn has_empty_member(&self) -> bool {
        self.members.iter().any(BitVector::is_zero)
    }

    pub fn is_cover(&self, set: &BitVector) -> bool {
        self.members.iter().all(|m| m.intersects(set))
    }

    /// Whether `set` contains some member.
    pub fn contains_member_within(&self, set: &BitVector) -> bool {
        self.members.iter().any(|m| m.is_subset_of(set))
    }

    /// Indices of the members containing each element (0-based element index).
    pub(crate) fn element_signatures(&self) -> Vec<BitVector> {
        let m = self.members.len();
        let mut sig = vec![BitVector::zeros(m); self.n];
        for (j, mem) in self.members.iter().enumerate() {
            for e in mem.ones_iter() {
                sig[e].set(j, true);
            }
        }
        sig
    }

    // ------------------------------------------------------------------
    // Blocker
    // ------------------------------------------------------------------

    /// The clutter of minimal covers.
    ///
    /// Incremental minimal-transversal generation: after processing members
    /// `C_1..C_j` the working family is exactly the blocker of `{C_1..C_j}`.
    pub fn blocker(&self) -> Clutter {
        let mut transversals = vec![BitVector::zeros(self.n)];
        for member in &self.members {
            let mut next = Vec::with_capacity(transversals.len());
            for t in &transversals {
                if t.intersects(member) {
                    next.push(t.clone());
                } else {
                    for e in member.ones_iter() {
                        let mut u = t.clone();
                        u.set(e, true);
                        next.push(u);
                    }
                }
            }
            transversals = minimal_sets(next);
        }
        Clutter::from_minimal(self.n, transversals)
    }

    /// The blocker by checking all `2^n` subsets. Test oracle only.
    pub fn blocker_brute_force(&self) -> Result<Clutter> {
        if self.n > BRUTE_FORCE_BLOCKER_CAP {
            return Err(Error::CapExceeded {
                what: "ground set for brute-force blocker",
                size: self.n,
                cap: BRUTE_FORCE_BLOCKER_CAP,
            });
        }
        let covers: Vec<BitVector> = (0u64..(1u64 << self.n))
            .map(|m| BitVector::from_u64(self.n, m))
            .filter(|s| self.is_cover(s))
            .collect();
        Ok(Clutter::from_minimal(self.n, covers))
    }

    // ------------------------------------------------------------------
    // Covering and packing numbers
    // ------------------------------------------------------------------

    pub fn covering_number(&self) -> CoveringNumber {
        match self.minimum_cover() {
            Some(c) => CoveringNumber::Finite(c.count_ones()),
            None => CoveringNumber::Infinite,
        }
    }

    /// A minimum cover, or `None` when the empty set is a member.
    pub fn minimum_cover(&self) -> Option<BitVector> {
        if self.has_empty_member() {
            return None;
        }
        let mut best = BitVector::ones(self.n);
        let mut chosen = BitVector::zeros(self.n);
        self.cover_search(&mut chosen, 0, &mut best);
        Some(best)
    }

    fn cover_search(&self, chosen: &mut BitVector, size: usize, best: &mut BitVector) {
        let uncovered: Vec<&BitVector> = self.members.iter().filter(|m| !m.intersects(chosen)).collect();
        let Some(first) = uncovered.first() else {
            if size < best.count_ones() {
                *best = chosen.clone();
            }
            return;
        };
        // Pairwise disjoint uncovered members each need their own element.
        let mut lower = 0;
        let mut used = BitVector::zeros(self.n);
        for m in &uncovered {
            if !m.intersects(&used) {
                used.or_assign(m);
                lower += 1;
            }
        }
        if size + lower >= best.count_ones() {
            return;
        }
        for e in first.ones_iter() {
            chosen.set(e, true);
            self.cover_search(chosen, size + 1, best);
            chosen.set(e, false);
        }
    }

    /// `ν`, the largest number of pairwise disjoint members.
    pub fn packing_number(&self) -> Result<usize> {
        if self.has_empty_member() {
            return Err(Error::EmptyMember);
        }
        let candidates: Vec<usize> = (0..self.members.len()).collect();
        let mut best = 0;
        self.packing_search(&candidates, 0, &mut best);
        debug_assert!(self.covering_number() >= CoveringNumber::Finite(best));
        Ok(best)
    }

    fn packing_search(&self, candidates: &[usize], current: usize, best: &mut usize) {
        if current > *best {
            *best = current;
        }
        if current + candidates.len() <= *best {
            return;
        }
        let Some((&first, rest)) = candidates.split_first() else {
            return;
        };
        let compatible: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&j| !self.members[j].intersects(&self.members[first]))
            .collect();
        self.packing_search(&compatible, current + 1, best);
        self.packing_search(rest, current, best);
    }

    // ------------------------------------------------------------------
    // Minors and duplication
    // ------------------------------------------------------------------

    /// `C \ delete / contract`, relabelled onto `1..=n'` in increasing order
    /// of the surviving labels.
    pub fn minor(&self, delete: &[usize], contract: &[usize]) -> Result<Minor> {
        let del = self.set_of(delete)?;
        let con = self.set_of(contract)?;
        if let Some(e) = del.and(&con).first_one() {
            return Err(Error::MinorOverlap(e + 1));
        }
        let gone = del.or(&con);
        let keep: Vec<usize> = (0..self.n).filter(|&i| !gone.get(i)).collect();
        let sets: Vec<BitVector> = self
            .members
            .iter()
            .filter(|m| !m.intersects(&del))
            .map(|m| m.and_not(&con).project(&keep))
            .collect();
        Ok(Minor {
            clutter: Clutter::from_minimal(keep.len(), sets),
            labels: keep.iter().map(|i| i + 1).collect(),
        })
    }

    /// Adds a copy `n + 1` of element `u`.
    pub fn duplicate(&self, u: usize) -> Result<Clutter> {
        if u == 0 || u > self.n {
            return Err(Error::UnknownElement(u));
        }
        let n = self.n + 1;
        let sets = self
            .members
            .iter()
            .map(|m| {
                let mut v = BitVector::from_indices(n, m.ones_iter());
                if m.get(u - 1) {
                    v.set(n - 1, true);
                }
                v
            })
            .collect();
        Clutter::from_sets(n, sets)
    }

    /// Collapses every class of duplicated elements (elements lying in
    /// exactly the same members) onto its smallest element.
    pub fn deduplicate(&self) -> Deduplication {
        let sig = self.element_signatures();
        let mut classes: BTreeMap<&BitVector, Vec<usize>> = BTreeMap::new();
        for (e, s) in sig.iter().enumerate() {
            classes.entry(s).or_default().push(e + 1);
        }
        let mut classes: Vec<Vec<usize>> = classes.into_values().collect();
        classes.sort();
        let reps: Vec<usize> = classes.iter().map(|c| c[0] - 1).collect();
        let sets = self.members.iter().map(|m| m.project(&reps)).collect();
        Deduplication {
            clutter: Clutter::from_sets(reps.len(), sets).expect("projection onto representatives is injective"),
            classes,
        }
    }

    // ------------------------------------------------------------------
    // Intersecting properties
    // ------------------------------------------------------------------

    /// Every `≤ k` members share an element, yet no element is in all members.
    pub fn is_k_wise_intersecting(&self, k: usize) -> bool {
        self.common_element_in_all().is_none() && self.disjoint_subfamily(k).is_none()
    }

    /// Some element belonging to every member (vacuously any element if there are none).
    pub fn common_element_in_all(&self) -> Option<usize> {
        let mut acc = BitVector::ones(self.n);
        for m in &self.members {
            acc.and_assign(m);
        }
        acc.first_one().map(|e| e + 1)
    }

    /// Lexicographically first set of at most `k` member indices with no
    /// common element.
    pub fn disjoint_subfamily(&self, k: usize) -> Option<Vec<usize>> {
        for size in 1..=k.min(self.members.len()) {
            let mut picked = Vec::with_capacity(size);
            if self.disjoint_search(0, size, BitVector::ones(self.n), &mut picked) {
                return Some(picked);
            }
        }
        None
    }

    fn disjoint_search(&self, start: usize, size: usize, acc: BitVector, picked: &mut Vec<usize>) -> bool {
        if picked.len() == size {
            return acc.is_zero();
        }
        let need = size - picked.len();
        for i in start..=self.members.len().saturating_sub(need) {
            let next = acc.and(&self.members[i]);
            // An empty intersection before reaching `size` means a smaller
            // witness exists and was already found.
            if next.is_zero() && picked.len() + 1 < size {
                continue;
            }
            picked.push(i);
            if self.disjoint_search(i + 1, size, next, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }

    // ------------------------------------------------------------------
    // Binary clutters
    // ------------------------------------------------------------------

    /// The symmetric difference of every three members contains a member.
    ///
    /// Triples suffice: triples with a repeated member reduce to a single
    /// member, and odd symmetric differences of more members reduce to triples.
    pub fn is_binary(&self) -> bool {
        let result = self.binary_violation().is_none();
        debug_assert!(
            self.n > 10 || result == self.is_binary_by_odd_intersection(),
            "binary characterizations disagree on {self:?}"
        );
        result
    }

    /// A triple of member indices whose symmetric difference contains no member.
    pub fn binary_violation(&self) -> Option<[usize; 3]> {
        let m = &self.members;
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                let ij = m[i].xor(&m[j]);
                for (k, mk) in m.iter().enumerate().skip(j + 1) {
                    let s = ij.xor(mk);
                    if !self.contains_member_within(&s) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// Every member meets every minimal cover in an odd number of elements.
    pub fn is_binary_by_odd_intersection(&self) -> bool {
        let b = self.blocker();
        self.members
            .iter()
            .all(|m| b.members.iter().all(|c| m.intersection_size(c) % 2 == 1))
    }

    // ------------------------------------------------------------------
    // Tangled clutters, chromatic number, core
    // ------------------------------------------------------------------

    /// All covers `{u, v}` with `u < v` (labels).
    pub fn two_covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.members.iter().all(|m| m.get(u) || m.get(v)) {
                    out.push((u + 1, v + 1));
                }
            }
        }
        out
    }

    /// `τ = 2` and every element lies in a cover of size two.
    pub fn is_tangled(&self) -> bool {
        if self.covering_number() != CoveringNumber::Finite(2) {
            return false;
        }
        let mut touched = vec![false; self.n];
        for (u, v) in self.two_covers() {
            touched[u - 1] = true;
            touched[v - 1] = true;
        }
        touched.iter().all(|&t| t)
    }

    /// `χ` with a witness colouring. Colour classes are numbered by their
    /// smallest element, which removes colour-permutation symmetry.
    pub fn chromatic_number(&self) -> Result<Colouring> {
        if let Some(m) = self.members.iter().find(|m| m.count_ones() < 2) {
            return Err(Error::SmallMember(to_labels(m)));
        }
        // Members to check when their largest element receives a colour.
        let mut closing: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (j, m) in self.members.iter().enumerate() {
            if let Some(last) = m.ones_iter().last() {
                closing[last].push(j);
            }
        }
        for k in 1..=self.n.max(1) {
            let mut colour = vec![usize::MAX; self.n];
            let mut classes = vec![BitVector::zeros(self.n); k];
            if self.colour_search(0, 0, k, &closing, &mut colour, &mut classes) {
                let parts = classes.iter().map(to_labels).collect();
                return Ok(Colouring { k, parts });
            }
        }
        unreachable!("singleton classes always give a proper colouring")
    }

    fn colour_search(
        &self,
        e: usize,
        used: usize,
        k: usize,
        closing: &[Vec<usize>],
        colour: &mut [usize],
        classes: &mut [BitVector],
    ) -> bool {
        if e == self.n {
            return true;
        }
        for c in 0..(used + 1).min(k) {
            classes[c].set(e, true);
            let ok = closing[e].iter().all(|&j| !self.members[j].is_subset_of(&classes[c]));
            if ok {
                colour[e] = c;
                if self.colour_search(e + 1, used.max(c + 1), k, closing, colour, classes) {
                    return true;
                }
            }
            classes[c].set(e, false);
        }
        false
    }

    /// Members meeting every minimum cover in exactly one element.
    ///
    /// Idealness is verified with vertex enumeration when the clutter fits
    /// the caps; larger clutters need `assume_ideal`.
    pub fn core(&self, assume_ideal: bool) -> Result<Core> {
        self.core_with(assume_ideal, &Caps::default())
    }

    pub fn core_with(&self, assume_ideal: bool, caps: &Caps) -> Result<Core> {
        if !self.is_tangled() {
            return Err(Error::NotTangled);
        }
        let idealness = lp::ensure_ideal(self, assume_ideal, caps)?;
        let pairs = self.two_covers();
        let sets: Vec<BitVector> = self
            .members
            .iter()
            .filter(|m| pairs.iter().all(|&(u, v)| m.get(u - 1) != m.get(v - 1)))
            .cloned()
            .collect();
        let core = Clutter { n: self.n, members: sets };
        if !core.is_tangled() {
            return Err(Error::invariant("core of an ideal tangled clutter is not tangled"));
        }
        if cuboid::as_duplicated_cuboid(&core).is_none() {
            return Err(Error::invariant("core is not a duplication of a cuboid"));
        }
        Ok(Core { clutter: core, idealness })
    }

    /// Deletes elements in increasing label order whenever `τ` stays at
    /// least two. The result is tangled and every member is a member of `self`.
    pub fn minimal_tangled_deletion_minor(&self) -> Result<DeletionMinor> {
        let tau = self.covering_number();
        if tau == CoveringNumber::Infinite {
            return Err(Error::EmptyMember);
        }
        if !tau.at_least(2) {
            return Err(Error::CoveringNumber { found: tau.to_string(), need: "at least 2" });
        }
        let mut alive: Vec<usize> = (0..self.members.len()).collect();
        let mut deleted = BitVector::zeros(self.n);
        for e in 0..self.n {
            let trial: Vec<usize> = alive.iter().copied().filter(|&j| !self.members[j].get(e)).collect();
            let sub = Clutter {
                n: self.n,
                members: trial.iter().map(|&j| self.members[j].clone()).collect(),
            };
            if sub.covering_number().at_least(2) {
                alive = trial;
                deleted.set(e, true);
            }
        }
        let keep: Vec<usize> = (0..self.n).filter(|&i| !deleted.get(i)).collect();
        let mut pairs: Vec<(BitVector, usize)> = alive.iter().map(|&j| (self.members[j].project(&keep), j)).collect();
        pairs.sort_by(|a, b| set_order(&a.0, &b.0));
        let (sets, source_members): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let minor = Clutter { n: keep.len(), members: sets };
        if !minor.is_tangled() {
            return Err(Error::invariant("minimal deletion minor is not tangled"));
        }
        Ok(DeletionMinor {
            clutter: minor,
            deleted: to_labels(&deleted),
            labels: keep.iter().map(|i| i + 1).collect(),
            source_members,
        })
    }
}

pub(crate) fn to_labels(v: &BitVector) -> Vec<usize> {
    v.ones_iter().map(|i| i + 1).collect()
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, e) in m.ones_iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", e + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}} on {}", self.n)
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter({self})")
    }
}
