//! Undirected multigraphs with loops, their cycle spaces and cycle covers.
//!
//! Vertices are `1..=n`; edge `k` (1-based) is the `k`-th entry of the edge
//! list. A loop is incident to no vertex for parity purposes, so it is
//! always a cycle on its own.

use std::fmt;

use serde::Serialize;

use crate::clutter::Clutter;
use crate::cuboid::{cuboid, ZeroOneSet};
use crate::error::{Error, Result};
use crate::gf2::{BinarySpace, BitVector};
use crate::matroid::k_cycle_cover_space;
use crate::Caps;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// Cycles (as edge-label lists) and how many of them use each edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCover {
    pub cycles: Vec<Vec<usize>>,
    /// `multiplicity[k]` counts the cycles containing edge `k + 1`.
    pub multiplicity: Vec<usize>,
}

impl CycleCover {
    pub fn new(g: &Graph, cycles: Vec<Vec<usize>>) -> Self {
        let mut multiplicity = vec![0; g.num_edges()];
        for c in &cycles {
            for &e in c {
                if (1..=g.num_edges()).contains(&e) {
                    multiplicity[e - 1] += 1;
                }
            }
        }
        Self { cycles, multiplicity }
    }

    /// Every listed set is a cycle (even degree everywhere) and every edge
    /// is used exactly `times` times.
    pub fn verify(&self, g: &Graph, times: usize) -> Result<()> {
        for c in &self.cycles {
            if !g.is_cycle(c)? {
                return Err(Error::InvalidCover(format!("{c:?} is not a cycle")));
            }
        }
        let recount = CycleCover::new(g, self.cycles.clone());
        if recount.multiplicity != self.multiplicity {
            return Err(Error::InvalidCover("multiplicities do not match the cycles".into()));
        }
        if let Some(k) = self.multiplicity.iter().position(|&m| m != times) {
            return Err(Error::InvalidCover(format!(
                "edge {} is used {} times, expected {times}",
                k + 1,
                self.multiplicity[k]
            )));
        }
        Ok(())
    }
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x == 0 || x > vertices {
                    return Err(Error::ElementOutOfRange { element: x, n: vertices });
                }
            }
        }
        Ok(Self { vertices, edges })
    }

    fn fixed(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        Self::new(vertices, edges).expect("fixture is well formed")
    }

    /// `K_n` with edges `{i,j}` (`i < j`) in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self::fixed(n, edges)
    }

    /// `K_{a,b}` with sides `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j))).collect();
        Self::fixed(a + b, edges)
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::fixed(n, (1..n).map(|i| (i, i + 1)).collect())
    }

    /// The cycle on `n ≥ 1` vertices (a loop when `n = 1`).
    pub fn cycle(n: usize) -> Self {
        Self::fixed(n, (1..=n).map(|i| (i, i % n + 1)).collect())
    }

    /// The Petersen graph: outer cycle `1..5` (edges 1–5), spokes
    /// `{i, i+5}` (edges 6–10), inner pentagram (edges 11–15).
    pub fn petersen() -> Self {
        let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
        edges.extend((1..=5).map(|i| (i, i + 5)));
        edges.extend([(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]);
        Self::fixed(10, edges)
    }

    /// The Wagner graph: outer cycle `1..8` (edges 1–8, edge 8 = `{8,1}`)
    /// and chords `{i, i+4}` (edges 9–12).
    pub fn wagner() -> Self {
        let mut edges: Vec<(usize, usize)> = (1..=8).map(|i| (i, i % 8 + 1)).collect();
        edges.extend((1..=4).map(|i| (i, i + 4)));
        Self::fixed(8, edges)
    }

    /// The triangular prism: triangles `1,2,3` and `4,5,6` joined by `{i, i+3}`.
    pub fn prism() -> Self {
        Self::fixed(6, vec![(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)])
    }

    /// Two triangles sharing vertex 1.
    pub fn bowtie() -> Self {
        Self::fixed(5, vec![(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1)])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn edge_set(&self, edges: &[usize]) -> Result<BitVector> {
        let m = self.num_edges();
        let mut v = BitVector::zeros(m);
        for &e in edges {
            if e == 0 || e > m {
                return Err(Error::ElementOutOfRange { element: e, n: m });
            }
            v.set(e - 1, true);
        }
        Ok(v)
    }

    /// Even degree at every vertex, counted directly.
    pub fn is_cycle(&self, edges: &[usize]) -> Result<bool> {
        let set = self.edge_set(edges)?;
        let mut degree = vec![0usize; self.vertices + 1];
        for k in set.ones_iter() {
            let (u, v) = self.edges[k];
            if u != v {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        Ok(degree.iter().all(|d| d % 2 == 0))
    }

    /// Even-degree edge sets: the null space of the vertex-edge incidence
    /// matrix over GF(2).
    pub fn cycle_space(&self) -> BinarySpace {
        let m = self.num_edges();
        let rows: Vec<BitVector> = (1..=self.vertices)
            .map(|x| {
                BitVector::from_indices(
                    m,
                    self.edges.iter().enumerate().filter(|(_, &(u, v))| u != v && (u == x || v == x)).map(|(k, _)| k),
                )
            })
            .collect();
        BinarySpace::null_space(m, &rows).expect("rows have the edge count as width")
    }

    /// Edges lying in no cycle.
    pub fn bridges(&self) -> Vec<usize> {
        let mut covered = BitVector::zeros(self.num_edges());
        for b in self.cycle_space().basis() {
            covered.or_assign(b);
        }
        covered.not().ones_iter().map(|k| k + 1).collect()
    }

    /// `δ(X)`: edges with exactly one end in `X`.
    pub fn cut(&self, x: &[usize]) -> Result<Vec<usize>> {
        let mut inside = vec![false; self.vertices + 1];
        for &v in x {
            if v == 0 || v > self.vertices {
                return Err(Error::ElementOutOfRange { element: v, n: self.vertices });
            }
            inside[v] = true;
        }
        Ok((0..self.num_edges()).filter(|&k| inside[self.edges[k].0] != inside[self.edges[k].1]).map(|k| k + 1).collect())
    }

    pub fn k_cycle_cover(&self, k: usize) -> Result<Option<Vec<Vec<usize>>>> {
        self.k_cycle_cover_with(k, &Caps::default())
    }

    /// The lexicographically first `k` cycles whose union is every edge.
    pub fn k_cycle_cover_with(&self, k: usize, caps: &Caps) -> Result<Option<Vec<Vec<usize>>>> {
        if !(1..=3).contains(&k) {
            return Err(Error::OutOfRange { what: "number of cycles", value: k, min: 1, max: 3 });
        }
        if !self.bridges().is_empty() {
            return Ok(None);
        }
        let found = k_cycle_cover_space(&self.cycle_space(), k, caps.cover_rank)?;
        Ok(found.map(|cs| cs.iter().map(|c| c.ones_iter().map(|e| e + 1).collect()).collect()))
    }

    pub fn seven_cycle_four_cover(&self) -> Result<CycleCover> {
        self.seven_cycle_four_cover_with(&Caps::default())
    }

    /// The seven nonzero GF(2) combinations of a 3-cycle cover. An edge in a
    /// nonempty set `T` of the three cycles lies in exactly four of the eight
    /// combinations, none of which is the empty one.
    pub fn seven_cycle_four_cover_with(&self, caps: &Caps) -> Result<CycleCover> {
        if let Some(&edge) = self.bridges().first() {
            return Err(Error::Bridge { edge });
        }
        let three = self.k_cycle_cover_with(3, caps)?.ok_or(Error::NoThreeCycleCover)?;
        let base: Vec<BitVector> = three.iter().map(|c| self.edge_set(c)).collect::<Result<_>>()?;
        let cycles: Vec<Vec<usize>> = (1u32..8)
            .map(|mask| {
                let mut v = BitVector::zeros(self.num_edges());
                for (b, c) in base.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        v.xor_assign(c);
                    }
                }
                v.ones_iter().map(|e| e + 1).collect()
            })
            .collect();
        let cover = CycleCover::new(self, cycles);
        cover.verify(self, 4)?;
        Ok(cover)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p {} {}", self.vertices, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "e {u} {v}")?;
        }
        Ok(())
    }
}

/// `T_30`, the cuboid of the cycle space of the Petersen graph.
pub fn t30() -> Clutter {
    let s = ZeroOneSet::from_space(&Graph::petersen().cycle_space()).expect("rank 6 is below the point cap");
    cuboid(&s).expect("cycle space is nonempty")
}
