//! Binary matroids held by their cycle spaces.
//!
//! A matroid's ground set is a sorted list of positive labels; coordinate `k`
//! of the cycle space stands for `labels[k]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BinarySpace, BitVector};
use crate::graph::Graph;
use crate::Caps;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    labels: Vec<usize>,
    cycles: BinarySpace,
}

/// How two matroids were glued by [`matroid_sum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SumKind {
    #[serde(rename = "1-sum")]
    One,
    #[serde(rename = "2-sum")]
    Two,
    #[serde(rename = "Y-sum")]
    Y,
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumKind::One => "1-sum",
            SumKind::Two => "2-sum",
            SumKind::Y => "Y-sum",
        })
    }
}

/// Three cycles (repeats and empty cycles allowed) given by element labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ThreeCycleCover {
    pub cycles: [Vec<usize>; 3],
}

impl ThreeCycleCover {
    pub fn new(a: Vec<usize>, b: Vec<usize>, c: Vec<usize>) -> Self {
        let mut cycles = [a, b, c];
        for cy in cycles.iter_mut() {
            cy.sort_unstable();
            cy.dedup();
        }
        Self { cycles }
    }

    /// Each set is a cycle of `m` and together they cover its ground set.
    pub fn verify(&self, m: &BinaryMatroid) -> Result<()> {
        let mut union = BitVector::zeros(m.len());
        for cy in &self.cycles {
            let v = m.set_of(cy)?;
            if !m.cycles.contains(&v)? {
                return Err(Error::InvalidCover(format!("{cy:?} is not a cycle")));
            }
            union.or_assign(&v);
        }
        if let Some(k) = union.not().first_one() {
            return Err(Error::InvalidCover(format!("element {} is uncovered", m.labels[k])));
        }
        Ok(())
    }
}

impl fmt::Display for ThreeCycleCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cycles.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", parts.join(","))?;
        }
        Ok(())
    }
}

impl BinaryMatroid {
    /// A matroid on `labels` whose cycle space is `cycles` (coordinate `k`
    /// standing for `labels[k]`). Labels are re-sorted.
    pub fn new(labels: Vec<usize>, cycles: BinarySpace) -> Result<Self> {
        if cycles.width() != labels.len() {
            return Err(Error::WidthMismatch { expected: labels.len(), found: cycles.width() });
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by_key(|&k| labels[k]);
        let sorted: Vec<usize> = order.iter().map(|&k| labels[k]).collect();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSum(format!("label {} repeated", w[0])));
        }
        let cycles = cycles.project(&order);
        Ok(Self { labels: sorted, cycles })
    }

    /// Labels `1..=width`.
    pub fn from_cycle_space(cycles: BinarySpace) -> Self {
        Self { labels: (1..=cycles.width()).collect(), cycles }
    }

    /// The matroid represented by the rows of `rows` (cycles = null space).
    pub fn from_representation(width: usize, rows: &[BitVector]) -> Result<Self> {
        Ok(Self::from_cycle_space(BinarySpace::null_space(width, rows)?))
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self::from_cycle_space(g.cycle_space())
    }

    /// `F_7`, represented by the rows `1000111`, `0101011`, `0011101`.
    pub fn fano() -> Self {
        projective_geometry(3).expect("rank 3 is in range")
    }

    /// `M(V_8)*` for the Wagner graph of [`Graph::wagner`].
    pub fn wagner_dual() -> Self {
        Self::from_graph(&Graph::wagner()).dual()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn cycles(&self) -> &BinarySpace {
        &self.cycles
    }

    pub fn cocycles(&self) -> BinarySpace {
        self.cycles.orthogonal_complement()
    }

    /// Matroid rank, the dimension of the cocycle space.
    pub fn rank(&self) -> usize {
        self.len() - self.cycles.rank()
    }

    /// Rows of a representation: a basis of the cocycle space.
    pub fn representation(&self) -> Vec<BitVector> {
        self.cocycles().basis().to_vec()
    }

    pub fn dual(&self) -> Self {
        Self { labels: self.labels.clone(), cycles: self.cocycles() }
    }

    pub fn coordinate(&self, label: usize) -> Result<usize> {
        self.labels.binary_search(&label).map_err(|_| Error::UnknownElement(label))
    }

    pub fn set_of(&self, labels: &[usize]) -> Result<BitVector> {
        let mut v = BitVector::zeros(self.len());
        for &l in labels {
            v.set(self.coordinate(l)?, true);
        }
        Ok(v)
    }

    pub fn labels_of(&self, v: &BitVector) -> Vec<usize> {
        v.ones_iter().map(|k| self.labels[k]).collect()
    }

    pub fn is_cycle(&self, labels: &[usize]) -> Result<bool> {
        self.cycles.contains(&self.set_of(labels)?)
    }

    /// Inclusion-minimal nonempty cycles, sorted.
    pub fn circuits(&self) -> Result<Vec<Vec<usize>>> {
        let points: Vec<BitVector> = self.cycles.points()?.into_iter().filter(|p| !p.is_zero()).collect();
        let minimal = crate::clutter::minimal_sets(points);
        let mut out: Vec<Vec<usize>> = minimal.iter().map(|v| self.labels_of(v)).collect();
        out.sort();
        Ok(out)
    }

    pub fn cocircuits(&self) -> Result<Vec<Vec<usize>>> {
        self.dual().circuits()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.cycles.reduce(&BitVector::unit(self.len(), k)).is_zero())
            .map(|k| self.labels[k])
            .collect()
    }

    /// Elements lying in no cycle.
    pub fn coloops(&self) -> Vec<usize> {
        let mut covered = BitVector::zeros(self.len());
        for b in self.cycles.basis() {
            covered.or_assign(b);
        }
        covered.not().ones_iter().map(|k| self.labels[k]).collect()
    }

    /// Classes of mutually parallel non-loop elements, each sorted, ordered
    /// by smallest label.
    pub fn parallel_classes(&self) -> Vec<Vec<usize>> {
        let cocycles = self.cocycles();
        // Parallel elements have equal columns in any representation.
        let mut groups: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
        for k in 0..self.len() {
            let column: Vec<bool> = cocycles.basis().iter().map(|r| r.get(k)).collect();
            if column.iter().any(|&b| b) {
                groups.entry(column).or_default().push(self.labels[k]);
            }
        }
        let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
        classes.sort();
        classes
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_classes().iter().all(|c| c.len() == 1)
    }

    /// Deletes loops and all but the smallest element of each parallel class.
    pub fn simplify(&self) -> Self {
        let keep: Vec<usize> = self.parallel_classes().iter().map(|c| c[0]).collect();
        let drop: Vec<usize> = self.labels.iter().copied().filter(|l| !keep.contains(l)).collect();
        self.delete(&drop).expect("labels come from the matroid")
    }

    /// `M \ X`: cycles avoiding `X`.
    pub fn delete(&self, x: &[usize]) -> Result<Self> {
        let (coords, rest) = self.split(x)?;
        let cycles = self.cycles.vanishing_on(&coords).project(&rest);
        Ok(Self { labels: rest.iter().map(|&k| self.labels[k]).collect(), cycles })
    }

    /// `M / X`: restrictions of cycles to the remaining elements.
    pub fn contract(&self, x: &[usize]) -> Result<Self> {
        let (_, rest) = self.split(x)?;
        let cycles = self.cycles.project(&rest);
        Ok(Self { labels: rest.iter().map(|&k| self.labels[k]).collect(), cycles })
    }

    fn split(&self, x: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
        let gone = self.set_of(x)?;
        Ok((gone.ones_iter().collect(), gone.not().ones_iter().collect()))
    }

    /// Renames element `labels[k]` to `f(labels[k])`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new(self.labels.iter().map(|&l| f(l)).collect(), self.cycles.clone())
    }

    /// `Some(ℓ)` when the matroid is `PG(ℓ-1, 2)`: `2^ℓ - 1` elements of rank
    /// `ℓ ≥ 1` with every two elements in a common triangle.
    pub fn is_projective_geometry(&self) -> Result<Option<usize>> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let r = self.rank();
        if r == 0 || r >= usize::BITS as usize || self.len() != (1usize << r) - 1 {
            return Ok(None);
        }
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                let pair = BitVector::from_indices(n, [a, b]);
                let in_triangle = (0..n)
                    .filter(|&c| c != a && c != b)
                    .any(|c| self.cycles.reduce(&pair.xor(&BitVector::unit(n, c))).is_zero());
                if !in_triangle {
                    return Ok(None);
                }
            }
        }
        Ok(Some(r))
    }
}

impl fmt::Display for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "binary matroid on {:?}, cycle space {}", self.labels, self.cycles)
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `PG(ℓ-1, 2)` for `1 ≤ ℓ ≤ 6`: columns are the nonzero vectors of
/// `{0,1}^ℓ`, unit vectors first, then by weight and lexicographically.
pub fn projective_geometry(l: usize) -> Result<BinaryMatroid> {
    if !(1..=6).contains(&l) {
        return Err(Error::OutOfRange { what: "projective geometry order", value: l, min: 1, max: 6 });
    }
    let columns = pg_columns(l);
    let rows: Vec<BitVector> = (0..l)
        .map(|r| BitVector::from_indices(columns.len(), (0..columns.len()).filter(|&c| columns[c].get(r))))
        .collect();
    let m = BinaryMatroid::from_representation(columns.len(), &rows)?;
    let cocycles = m.cocycles();
    let points = cocycles.points()?;
    let half = 1usize << (l - 1);
    if m.rank() != l || points.len() != 1 << l || points.iter().any(|p| !p.is_zero() && p.count_ones() != half) {
        return Err(Error::invariant("projective geometry has the wrong cocycle structure"));
    }
    Ok(m)
}

/// Columns of the standard representation of `PG(ℓ-1, 2)`.
pub fn pg_columns(l: usize) -> Vec<BitVector> {
    let mut cols: Vec<BitVector> = (1u64..(1 << l)).map(|x| BitVector::from_u64(l, x)).collect();
    cols.sort_by(|a, b| {
        let wa = a.count_ones();
        let wb = b.count_ones();
        (wa, a).cmp(&(wb, b))
    });
    // Unit vectors sorted by weight come out as e_ℓ..e_1; put e_1 first.
    cols[..l].sort_by_key(|v| v.first_one());
    cols
}

/// Glues two matroids along their common labels as a 1-, 2- or Y-sum.
pub fn matroid_sum(m1: &BinaryMatroid, m2: &BinaryMatroid) -> Result<(BinaryMatroid, SumKind)> {
    let x: Vec<usize> = m1.labels.iter().copied().filter(|l| m2.labels.binary_search(l).is_ok()).collect();
    let kind = match x.len() {
        0 => SumKind::One,
        1 => {
            let e = x[0];
            for (name, m) in [("first", m1), ("second", m2)] {
                if m.loops().contains(&e) || m.coloops().contains(&e) {
                    return Err(Error::InvalidSum(format!("shared element {e} is a loop or coloop of the {name} matroid")));
                }
            }
            SumKind::Two
        }
        3 => {
            for (name, m) in [("first", m1), ("second", m2)] {
                let xv = m.set_of(&x)?;
                let cocycles = m.cocycles();
                let is_cocircuit = cocycles.contains(&xv)?
                    && x.iter().all(|&l| {
                        // A cocycle inside a 3-cocycle X that is proper and
                        // nonempty would be a pair or singleton.
                        let single = m.set_of(&[l]).expect("label present");
                        !cocycles.contains(&single).expect("widths agree")
                            && !cocycles.contains(&xv.xor(&single)).expect("widths agree")
                    });
                if !is_cocircuit {
                    return Err(Error::InvalidSum(format!("{x:?} is not a cocircuit of the {name} matroid")));
                }
                let has_circuit = (1u64..8).any(|mask| {
                    let sub: Vec<usize> = (0..3).filter(|b| mask >> b & 1 == 1).map(|b| x[b]).collect();
                    m.is_cycle(&sub).expect("labels present")
                });
                if has_circuit {
                    return Err(Error::InvalidSum(format!("{x:?} contains a circuit of the {name} matroid")));
                }
            }
            SumKind::Y
        }
        k => return Err(Error::InvalidSum(format!("{k} shared elements"))),
    };
    let mut union: Vec<usize> = m1.labels.iter().chain(&m2.labels).copied().collect();
    union.sort_unstable();
    union.dedup();
    let embed = |m: &BinaryMatroid| -> Vec<BitVector> {
        let coords: Vec<usize> = m.labels.iter().map(|l| union.binary_search(l).expect("in union")).collect();
        m.cycles.basis().iter().map(|b| b.embed(union.len(), &coords)).collect()
    };
    let gens: Vec<BitVector> = embed(m1).into_iter().chain(embed(m2)).collect();
    let shared: Vec<usize> = x.iter().map(|l| union.binary_search(l).expect("in union")).collect();
    let rest: Vec<usize> = (0..union.len()).filter(|k| !shared.contains(k)).collect();
    let cycles = BinarySpace::span(union.len(), &gens)?.vanishing_on(&shared).project(&rest);
    let labels = rest.iter().map(|&k| union[k]).collect();
    Ok((BinaryMatroid { labels, cycles }, kind))
}

pub fn three_cycle_cover(m: &BinaryMatroid) -> Result<Option<ThreeCycleCover>> {
    three_cycle_cover_with(m, &Caps::default())
}

/// The lexicographically first 3-cycle cover over the sorted cycle list, or
/// `None` exactly when some element is a coloop.
pub fn three_cycle_cover_with(m: &BinaryMatroid, caps: &Caps) -> Result<Option<ThreeCycleCover>> {
    if !m.coloops().is_empty() {
        return Ok(None);
    }
    let found = k_cycle_cover_space(m.cycles(), 3, caps.cover_rank)?;
    let Some(cycles) = found else {
        return Err(Error::NoThreeCycleCover);
    };
    let cover = ThreeCycleCover::new(m.labels_of(&cycles[0]), m.labels_of(&cycles[1]), m.labels_of(&cycles[2]));
    cover.verify(m)?;
    Ok(Some(cover))
}

/// The first nondecreasing `k`-tuple (over the sorted points of `space`)
/// whose union is every coordinate.
pub fn k_cycle_cover_space(space: &BinarySpace, k: usize, rank_cap: usize) -> Result<Option<Vec<BitVector>>> {
    if space.rank() > rank_cap {
        return Err(Error::CapExceeded { what: "cycle space rank for cover search", size: space.rank(), cap: rank_cap });
    }
    let points = space.points()?;
    let full = BitVector::ones(space.width());
    let mut picked = Vec::with_capacity(k);
    if k > 0 && cover_search(&points, &full, 0, k, BitVector::zeros(space.width()), &mut picked) {
        return Ok(Some(picked.into_iter().map(|i| points[i].clone()).collect()));
    }
    Ok((k == 0 && space.width() == 0).then(Vec::new))
}

fn cover_search(
    points: &[BitVector],
    full: &BitVector,
    from: usize,
    k: usize,
    union: BitVector,
    picked: &mut Vec<usize>,
) -> bool {
    if picked.len() + 1 == k {
        let missing = full.and_not(&union);
        if let Some(i) = (from..points.len()).find(|&i| missing.is_subset_of(&points[i])) {
            picked.push(i);
            return true;
        }
        return false;
    }
    for i in from..points.len() {
        picked.push(i);
        if cover_search(points, full, i, k, union.or(&points[i]), picked) {
            return true;
        }
        picked.pop();
    }
    false
}

/// Combines 3-cycle covers of `m1` and `m2` into one of their sum.
pub fn compose_three_cycle_covers(
    m1: &BinaryMatroid,
    cover1: &ThreeCycleCover,
    m2: &BinaryMatroid,
    cover2: &ThreeCycleCover,
    kind: SumKind,
) -> Result<ThreeCycleCover> {
    let (sum, found) = matroid_sum(m1, m2)?;
    if found != kind {
        return Err(Error::InvalidSum(format!("the matroids form a {found}, not a {kind}")));
    }
    cover1.verify(m1)?;
    cover2.verify(m2)?;
    let shared: Vec<usize> = m1.labels.iter().copied().filter(|l| m2.labels.binary_search(l).is_ok()).collect();
    let (a, b) = match kind {
        SumKind::One => (cover1.clone(), cover2.clone()),
        SumKind::Two => (put_in_first_only(cover1, shared[0]), put_in_first_only(cover2, shared[0])),
        SumKind::Y => {
            let p1 = vec![shared[0], shared[1]];
            let p2 = vec![shared[0], shared[2]];
            (align_y(cover1, &shared, &p1, &p2)?, align_y(cover2, &shared, &p1, &p2)?)
        }
    };
    let combined = ThreeCycleCover {
        cycles: [0, 1, 2].map(|j| symmetric_difference(&a.cycles[j], &b.cycles[j])),
    };
    combined.verify(&sum)?;
    Ok(combined)
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().filter(|x| !b.contains(x)).chain(b.iter().filter(|x| !a.contains(x))).copied().collect();
    out.sort_unstable();
    out
}

/// Reorders and replaces cycles by symmetric differences so that `e` lies in
/// the first cycle only. Coverage is preserved by each step.
fn put_in_first_only(cover: &ThreeCycleCover, e: usize) -> ThreeCycleCover {
    let mut c = cover.cycles.clone();
    let first = c.iter().position(|cy| cy.contains(&e)).expect("covers contain every element");
    c.swap(0, first);
    for j in 1..3 {
        if c[j].contains(&e) {
            c[j] = symmetric_difference(&c[j], &c[0]);
        }
    }
    ThreeCycleCover { cycles: c }
}

/// Elementary operations (swaps and `C_j ← C_j △ C_k`, `k ≠ j`) bringing the
/// traces on `x` to `p1`, `p2` and `∅`.
fn align_y(cover: &ThreeCycleCover, x: &[usize], p1: &[usize], p2: &[usize]) -> Result<ThreeCycleCover> {
    let trace = |cy: &[usize]| -> Vec<usize> { x.iter().copied().filter(|l| cy.contains(l)).collect() };
    let mut c = cover.cycles.clone();
    let bad = || Error::InvalidCover("cycle traces do not span the even subsets of the shared triple".into());

    // Position 0 gets trace p1.
    if let Some(a) = (0..3).find(|&a| trace(&c[a]) == p1) {
        c.swap(0, a);
    } else {
        let (a, b) = [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)]
            .into_iter()
            .find(|&(a, b)| trace(&symmetric_difference(&c[a], &c[b])) == p1)
            .ok_or_else(bad)?;
        c[a] = symmetric_difference(&c[a], &c[b]);
        c.swap(0, a);
    }
    // Position 1 gets trace p2, possibly after adding position 0.
    let (j, with_first) = [(1, false), (1, true), (2, false), (2, true)]
        .into_iter()
        .find(|&(j, w)| {
            let cand = if w { symmetric_difference(&c[j], &c[0]) } else { c[j].clone() };
            trace(&cand) == p2
        })
        .ok_or_else(bad)?;
    if with_first {
        c[j] = symmetric_difference(&c[j], &c[0]);
    }
    c.swap(1, j);
    // Position 2 is cleared on x using positions 0 and 1.
    let t = trace(&c[2]);
    if t.contains(&p1[1]) {
        c[2] = symmetric_difference(&c[2], &c[0]);
    }
    if t.contains(&p2[1]) {
        c[2] = symmetric_difference(&c[2], &c[1]);
    }
    if !trace(&c[2]).is_empty() {
        return Err(bad());
    }
    Ok(ThreeCycleCover { cycles: c })
}
