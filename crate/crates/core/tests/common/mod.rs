//! Brute-force oracles, generators and seeded property checks shared by the
//! integration tests and the acceptance runner.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tangle_core::cuboid::{self, ZeroOneSet};
use tangle_core::gf2::{BinarySpace, BitVector};
use tangle_core::lp::{self, Relation, Sense};
use tangle_core::matroid::{self, BinaryMatroid};
use tangle_core::{Clutter, CoveringNumber, Graph, LpProblem};

pub type Check = Result<usize, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ----------------------------------------------------------------------
// Generators
// ----------------------------------------------------------------------

/// Minimal sets among up to `max_members` random subsets of size at least
/// `min_size`.
pub fn random_clutter(r: &mut impl Rng, n: usize, max_members: usize, min_size: usize) -> Clutter {
    let count = r.gen_range(1..=max_members);
    let mut sets = Vec::new();
    while sets.len() < count {
        let density = r.gen_range(0.25..0.75);
        let v = BitVector::from_indices(n, (0..n).filter(|_| r.gen_bool(density)));
        if v.count_ones() >= min_size.max(1) {
            sets.push(v);
        }
    }
    Clutter::from_minimal(n, sets)
}

pub fn random_space(r: &mut impl Rng, width: usize, max_generators: usize) -> BinarySpace {
    let gens: Vec<BitVector> = (0..r.gen_range(0..=max_generators))
        .map(|_| BitVector::from_indices(width, (0..width).filter(|_| r.gen_bool(0.5))))
        .collect();
    BinarySpace::span(width, &gens).unwrap()
}

pub fn random_set(r: &mut impl Rng, width: usize) -> ZeroOneSet {
    let total = 1u64 << width;
    let count = r.gen_range(1..=total.min(12));
    let points = (0..count).map(|_| BitVector::from_u64(width, r.gen_range(0..total))).collect();
    ZeroOneSet::new(width, points).unwrap()
}

/// A random binary clutter: a cuboid of a binary space, an optional element
/// duplication, and a random minor.
pub fn random_binary_clutter(r: &mut impl Rng, max_width: usize) -> Clutter {
    let width = r.gen_range(1..=max_width);
    let space = random_space(r, width, width);
    let mut c = cuboid::cuboid(&ZeroOneSet::from_space(&space).unwrap()).unwrap();
    if r.gen_bool(0.3) {
        c = c.duplicate(r.gen_range(1..=c.ground_size())).unwrap();
    }
    let (del, con) = random_minor_labels(r, c.ground_size(), 2);
    c.minor(&del, &con).unwrap().clutter
}

/// Disjoint random deletion and contraction label lists.
pub fn random_minor_labels(r: &mut impl Rng, n: usize, max_each: usize) -> (Vec<usize>, Vec<usize>) {
    let mut labels: Vec<usize> = (1..=n).collect();
    let mut out = [Vec::new(), Vec::new()];
    for side in out.iter_mut() {
        let k = r.gen_range(0..=max_each).min(labels.len());
        for _ in 0..k {
            side.push(labels.swap_remove(r.gen_range(0..labels.len())));
        }
    }
    let [del, con] = out;
    (del, con)
}

pub fn random_matroid(r: &mut impl Rng, max_rank: usize, max_len: usize) -> BinaryMatroid {
    let n = r.gen_range(1..=max_len);
    let rows: Vec<BitVector> = (0..r.gen_range(0..=max_rank))
        .map(|_| BitVector::from_indices(n, (0..n).filter(|_| r.gen_bool(0.5))))
        .collect();
    BinaryMatroid::from_representation(n, &rows).unwrap()
}

// ----------------------------------------------------------------------
// Oracles
// ----------------------------------------------------------------------

fn all_subsets(n: usize) -> impl Iterator<Item = BitVector> {
    (0..1u64 << n).map(move |m| BitVector::from_u64(n, m))
}

fn is_cover(c: &Clutter, s: &BitVector) -> bool {
    c.members().iter().all(|m| m.intersects(s))
}

/// Minimal covers by exhaustive search.
pub fn blocker_oracle(c: &Clutter) -> Clutter {
    let n = c.ground_size();
    let covers: Vec<BitVector> = all_subsets(n).filter(|s| is_cover(c, s)).collect();
    let minimal: Vec<BitVector> = covers
        .iter()
        .filter(|s| !covers.iter().any(|t| t != *s && t.is_subset_of(s)))
        .cloned()
        .collect();
    Clutter::from_sets(n, minimal).unwrap()
}

pub fn tau_oracle(c: &Clutter) -> Option<usize> {
    all_subsets(c.ground_size()).filter(|s| is_cover(c, s)).map(|s| s.count_ones()).min()
}

pub fn nu_oracle(c: &Clutter) -> usize {
    let m = c.members();
    (0..1u64 << m.len())
        .filter(|mask| {
            let mut used = BitVector::zeros(c.ground_size());
            for (i, mi) in m.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used.intersects(mi) {
                        return false;
                    }
                    used.or_assign(mi);
                }
            }
            true
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Some assignment of `k` colours leaves no member monochromatic.
pub fn colourable_oracle(c: &Clutter, k: usize) -> bool {
    let n = c.ground_size();
    let total = (k as u64).pow(n as u32);
    (0..total).any(|mut code| {
        let mut classes = vec![BitVector::zeros(n); k];
        for e in 0..n {
            classes[(code % k as u64) as usize].set(e, true);
            code /= k as u64;
        }
        c.members().iter().all(|m| classes.iter().all(|cl| !m.is_subset_of(cl)))
    })
}

/// Every odd subfamily has a symmetric difference containing a member.
pub fn binary_oracle(c: &Clutter) -> bool {
    let m = c.members();
    (1..1u64 << m.len()).filter(|mask| mask.count_ones() % 2 == 1).all(|mask| {
        let mut x = BitVector::zeros(c.ground_size());
        for (i, mi) in m.iter().enumerate() {
            if mask >> i & 1 == 1 {
                x.xor_assign(mi);
            }
        }
        m.iter().any(|mm| mm.is_subset_of(&x))
    })
}

pub fn k_wise_oracle(c: &Clutter, k: usize) -> bool {
    let m = c.members();
    let common = |mask: u64| {
        let mut acc = BitVector::ones(c.ground_size());
        for (i, mi) in m.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc.and_assign(mi);
            }
        }
        !acc.is_zero()
    };
    let all = (1u64 << m.len()) - 1;
    if common(all) || (m.is_empty() && c.ground_size() > 0) {
        return false;
    }
    (1..=all).filter(|mask| mask.count_ones() as usize <= k).all(common)
}

/// Every subset of at most `k` points agrees on some coordinate.
pub fn small_subsets_agree_oracle(s: &ZeroOneSet, k: usize) -> bool {
    let p = s.points();
    (1..1u64 << p.len()).filter(|mask| mask.count_ones() as usize <= k).all(|mask| {
        let chosen: Vec<&BitVector> = (0..p.len()).filter(|&i| mask >> i & 1 == 1).map(|i| &p[i]).collect();
        (0..s.width()).any(|i| chosen.iter().all(|q| q.get(i) == chosen[0].get(i)))
    })
}

/// Some `k` points of `space` have union equal to every coordinate.
pub fn k_cover_oracle(space: &BinarySpace, k: usize) -> bool {
    let points = space.points().unwrap();
    let full = BitVector::ones(space.width());
    fn go(points: &[BitVector], full: &BitVector, k: usize, acc: BitVector, from: usize) -> bool {
        if acc == *full {
            return true;
        }
        if k == 0 {
            return false;
        }
        (from..points.len()).any(|i| go(points, full, k - 1, acc.or(&points[i]), i))
    }
    k > 0 && go(&points, &full, k, BitVector::zeros(space.width()), 0)
}

pub type Rat = BigRational;

fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = b.len();
    let mut m: Vec<Vec<Rat>> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Vertices of `{x : rows·x ≥ rhs}` by choosing every square subsystem.
pub fn vertices_by_bases(rows: &[Vec<Rat>], rhs: &[Rat], d: usize) -> Vec<Vec<Rat>> {
    let mut out: Vec<Vec<Rat>> = Vec::new();
    combinations(rows.len(), d, |pick| {
        let a: Vec<Vec<Rat>> = pick.iter().map(|&i| rows[i].clone()).collect();
        let b: Vec<Rat> = pick.iter().map(|&i| rhs[i].clone()).collect();
        if let Some(x) = solve_square(&a, &b) {
            let feasible = rows.iter().zip(rhs).all(|(r, h)| dot(r, &x) >= *h);
            if feasible && !out.contains(&x) {
                out.push(x);
            }
        }
    });
    out.sort();
    out
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |s, (x, y)| s + x * y)
}

/// Rows of `Q(C)` in `≥` form: members, then nonnegativity.
pub fn cover_rows(c: &Clutter) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let n = c.ground_size();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for m in c.members() {
        rows.push((0..n).map(|i| lp::int(i64::from(m.get(i)))).collect());
        rhs.push(Rat::one());
    }
    for i in 0..n {
        rows.push((0..n).map(|j| lp::int(i64::from(i == j))).collect());
        rhs.push(Rat::zero());
    }
    (rows, rhs)
}

pub fn ideal_oracle(c: &Clutter) -> bool {
    let (rows, rhs) = cover_rows(c);
    vertices_by_bases(&rows, &rhs, c.ground_size()).iter().all(|v| v.iter().all(|x| x.is_integer()))
}

// ----------------------------------------------------------------------
// Seeded property checks (each returns the number of instances checked)
// ----------------------------------------------------------------------

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn blocker_involution(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let n = r.gen_range(1..=8);
        let c = random_clutter(&mut r, n, 8, 1);
        let b = c.blocker();
        ensure!(b == blocker_oracle(&c), "blocker of {c} differs from the exhaustive one");
        ensure!(b.blocker() == c, "b(b(C)) != C for {c}");
    }
    Ok(count)
}

pub fn weak_duality(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let n = r.gen_range(1..=8);
        let c = random_clutter(&mut r, n, 10, 1);
        let tau = c.covering_number();
        let nu = c.packing_number().map_err(|e| e.to_string())?;
        ensure!(tau == CoveringNumber::Finite(tau_oracle(&c).unwrap()), "τ of {c}");
        ensure!(nu == nu_oracle(&c), "ν of {c}");
        ensure!(tau.finite().is_some_and(|t| nu <= t), "ν > τ on {c}");
    }
    Ok(count)
}

/// `χ(C) ≤ k` exactly when the blocker is not `k`-wise intersecting.
pub fn chromatic_blocker_duality(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let n = r.gen_range(2..=7);
        let c = random_clutter(&mut r, n, 8, 2);
        let chi = c.chromatic_number().map_err(|e| e.to_string())?;
        let b = c.blocker();
        for k in 1..=4 {
            let le = chi.k <= k;
            ensure!(le == colourable_oracle(&c, k), "χ ≤ {k} disagrees with colouring search on {c}");
            ensure!(le == !b.is_k_wise_intersecting(k), "χ ≤ {k} vs blocker {k}-wise on {c}");
            ensure!(b.is_k_wise_intersecting(k) == k_wise_oracle(&b, k), "{k}-wise test on {b}");
        }
    }
    Ok(count)
}

pub fn binary_characterizations(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for i in 0..count {
        let c = if i % 2 == 0 {
            let n = r.gen_range(1..=7);
            random_clutter(&mut r, n, 7, 1)
        } else {
            random_binary_clutter(&mut r, 3)
        };
        let by_triples = c.is_binary();
        ensure!(by_triples == c.is_binary_by_odd_intersection(), "binary tests disagree on {c}");
        if c.len() <= 12 {
            ensure!(by_triples == binary_oracle(&c), "binary oracle disagrees on {c}");
        }
        ensure!(by_triples == c.blocker().is_binary(), "blocker changes binarity of {c}");
    }
    Ok(count)
}

pub fn idealness_preserved(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    let mut ideal_seen = 0;
    for i in 0..count {
        let c = if i % 2 == 0 {
            let n = r.gen_range(1..=6);
            random_clutter(&mut r, n, 6, 1)
        } else {
            random_binary_clutter(&mut r, 3)
        };
        if c.has_empty_member() || c.is_empty() {
            continue;
        }
        let ideal = lp::is_ideal(&c).map_err(|e| e.to_string())?.is_ideal();
        if c.ground_size() <= 5 {
            ensure!(ideal == ideal_oracle(&c), "idealness of {c} differs from the basis oracle");
        }
        let b = c.blocker();
        if !b.is_empty() && !b.has_empty_member() {
            ensure!(ideal == lp::is_ideal(&b).map_err(|e| e.to_string())?.is_ideal(), "blocker of {c}");
        }
        if ideal {
            ideal_seen += 1;
            let (del, con) = random_minor_labels(&mut r, c.ground_size(), 2);
            let m = c.minor(&del, &con).map_err(|e| e.to_string())?.clutter;
            if !m.is_empty() && !m.has_empty_member() {
                ensure!(lp::is_ideal(&m).map_err(|e| e.to_string())?.is_ideal(), "minor {m} of ideal {c}");
            }
            let u = r.gen_range(1..=c.ground_size());
            let d = c.duplicate(u).map_err(|e| e.to_string())?;
            ensure!(lp::is_ideal(&d).map_err(|e| e.to_string())?.is_ideal(), "duplicate of ideal {c}");
        }
    }
    ensure!(ideal_seen > count / 10, "only {ideal_seen} ideal instances generated");
    Ok(count)
}

/// `cuboid(S)` is `k`-wise intersecting exactly when the points agree on no
/// coordinate yet every `≤ k` of them do.
pub fn cuboid_intersection_equivalence(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let w = r.gen_range(1..=4);
        let s = random_set(&mut r, w);
        let c = cuboid::cuboid(&s).map_err(|e| e.to_string())?;
        let agreed = cuboid::agree_on_coordinate(&s).is_some();
        for k in 1..=4 {
            let expected = !agreed && small_subsets_agree_oracle(&s, k);
            ensure!(c.is_k_wise_intersecting(k) == expected, "{k}-wise on cuboid of {s}");
        }
        let tau = c.covering_number();
        ensure!(tau.finite().is_some_and(|t| t <= 2), "τ of cuboid of {s} above two");
        ensure!((tau == CoveringNumber::Finite(2)) == !agreed, "τ = 2 vs agreement on {s}");
    }
    Ok(count)
}

/// Recognizing `cuboid(S)` gives a point set whose cuboid, relabelled by
/// the found pairs, is `cuboid(S)` again.
pub fn cuboid_round_trip(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let w = r.gen_range(1..=6);
        let s = random_set(&mut r, w);
        let c = cuboid::cuboid(&s).map_err(|e| e.to_string())?;
        let form = cuboid::as_cuboid(&c).ok_or(format!("cuboid of {s} not recognized"))?;
        ensure!(form.set.width() == w && form.set.len() == s.len(), "shape of {s}");
        let again = cuboid::cuboid(&form.set).map_err(|e| e.to_string())?;
        let relabelled: Vec<Vec<usize>> = again
            .to_lists()
            .iter()
            .map(|m| {
                m.iter()
                    .map(|&e| {
                        let (one, zero) = form.pairs[(e - 1) / 2];
                        if e % 2 == 1 { one } else { zero }
                    })
                    .collect()
            })
            .collect();
        ensure!(Clutter::new(2 * w, relabelled).unwrap() == c, "round trip of {s}");
        let canon = s.canonical_form();
        ensure!(canon.points()[0].is_zero() && canon.canonical_form() == canon, "canonical form of {s}");
        ensure!(canon == s.translate(&s.points()[0]), "canonical form of {s} is not its smallest translate");
        let t = &s.points()[r.gen_range(0..s.len())];
        ensure!(cuboid::as_cuboid(&cuboid::cuboid(&s.translate(t)).unwrap()).is_some(), "translate of {s}");
    }
    Ok(count)
}

pub fn facet_and_cuboid_paths_agree(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let w = r.gen_range(1..=5);
        let s = random_set(&mut r, w);
        let by_facets = cuboid::facets(&s).map_err(|e| e.to_string())?.is_cube_ideal();
        let by_cuboid = cuboid::is_cube_ideal(&s).map_err(|e| e.to_string())?.is_ideal();
        ensure!(by_facets == by_cuboid, "cube-idealness paths disagree on {s}");
    }
    Ok(count)
}

/// All simple graphs on six vertices with at most six edges: bridges are the
/// coordinates where the cycle space agrees, and `k` covering cycles exist
/// exactly when `k + 1` points of the cycle space disagree.
pub fn graph_cover_equivalences() -> Check {
    let slots: Vec<(usize, usize)> = (1..=6).flat_map(|u| (u + 1..=6).map(move |v| (u, v))).collect();
    let mut checked = 0;
    for mask in 0u32..1 << slots.len() {
        if mask.count_ones() > 6 {
            continue;
        }
        let edges = (0..slots.len()).filter(|&i| mask >> i & 1 == 1).map(|i| slots[i]).collect();
        let g = Graph::new(6, edges).unwrap();
        let space = g.cycle_space();
        let points = ZeroOneSet::from_space(&space).unwrap();
        let agreed: Vec<usize> = (0..g.num_edges())
            .filter(|&e| points.points().iter().all(|p| !p.get(e)))
            .map(|e| e + 1)
            .collect();
        ensure!(g.bridges() == agreed, "bridges of {g}");
        for k in 1..=3 {
            let found = g.k_cycle_cover(k).map_err(|e| e.to_string())?;
            let disagree = cuboid::min_disagreeing_subset(&points, k + 1).is_some();
            ensure!(found.is_some() == disagree, "{k}-cover vs disagreement on {g}");
            ensure!(found.is_some() == k_cover_oracle(&space, k), "{k}-cover oracle on {g}");
            if let Some(cycles) = found {
                ensure!(cycles.len() == k, "cover size on {g}");
                let mut used = vec![false; g.num_edges()];
                for c in &cycles {
                    ensure!(g.is_cycle(c).unwrap(), "{c:?} is not a cycle of {g}");
                    for &e in c {
                        used[e - 1] = true;
                    }
                }
                ensure!(used.iter().all(|&u| u), "cover misses an edge of {g}");
            }
        }
        checked += 1;
    }
    Ok(checked)
}

/// Random binary matroids: coloops are the coordinates where every cycle
/// vanishes, and `k` cycles cover the ground set exactly when `k + 1`
/// cycles disagree everywhere.
pub fn matroid_cover_equivalences(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let m = random_matroid(&mut r, 4, 8);
        let points = ZeroOneSet::from_space(m.cycles()).unwrap();
        let agreed: Vec<usize> = (0..m.len())
            .filter(|&e| points.points().iter().all(|p| !p.get(e)))
            .map(|e| m.labels()[e])
            .collect();
        ensure!(m.coloops() == agreed, "coloops of {m:?}");
        for k in 1..=3 {
            let found = matroid::k_cycle_cover_space(m.cycles(), k, 8).map_err(|e| e.to_string())?;
            let disagree = cuboid::min_disagreeing_subset(&points, k + 1).is_some();
            ensure!(found.is_some() == disagree, "{k}-cover vs disagreement on {m:?}");
            ensure!(found.is_some() == k_cover_oracle(m.cycles(), k), "{k}-cover oracle on {m:?}");
        }
        let three = matroid::three_cycle_cover(&m).map_err(|e| e.to_string())?;
        ensure!(three.is_none() == !m.coloops().is_empty(), "3-cover vs coloops on {m:?}");
        if let Some(cover) = three {
            cover.verify(&m).map_err(|e| e.to_string())?;
        }
    }
    Ok(count)
}

/// Random feasible bounded LPs: exact strong duality with a checked
/// certificate, compared against basis enumeration when small.
pub fn lp_strong_duality(seed: u64, count: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..count {
        let nv = r.gen_range(1..=8);
        let nr = r.gen_range(1..=12);
        let p = random_bounded_lp(&mut r, nv, nr);
        let sol = p.solve().map_err(|e| format!("{e} on\n{p}"))?;
        ensure!(p.is_feasible(&sol.primal), "infeasible primal on\n{p}");
        ensure!(p.objective_value(&sol.primal) == sol.value, "primal value on\n{p}");
        let dual_value = dot(&sol.dual, &p.rows.iter().map(|c| c.rhs.clone()).collect::<Vec<_>>());
        ensure!(dual_value == sol.value, "dual value {dual_value} vs {} on\n{p}", sol.value);
        ensure!(lp::verify_certificate(&p, &sol.primal, &sol.dual), "certificate on\n{p}");
        if nv <= 4 {
            let best = brute_force_optimum(&p);
            ensure!(best == sol.value, "basis oracle {best} vs {} on\n{p}", sol.value);
        }
    }
    Ok(count)
}

/// Feasible by construction (rows are satisfied at a random nonnegative
/// point) and bounded by a box row.
fn random_bounded_lp(r: &mut impl Rng, nv: usize, nr: usize) -> LpProblem {
    let x0: Vec<Rat> = (0..nv).map(|_| lp::rat(r.gen_range(0..6), r.gen_range(1..4))).collect();
    let sense = if r.gen_bool(0.5) { Sense::Maximize } else { Sense::Minimize };
    let objective = (0..nv).map(|_| lp::int(r.gen_range(-5..=5))).collect();
    let mut p = LpProblem::new(sense, objective);
    p.add_row(vec![lp::int(1); nv], Relation::Le, lp::int(20));
    for _ in 1..nr {
        let coeffs: Vec<Rat> = (0..nv).map(|_| lp::int(r.gen_range(-4..=4))).collect();
        let at = dot(&coeffs, &x0);
        let (relation, rhs) = match r.gen_range(0..5) {
            0 => (Relation::Eq, at),
            1 | 2 => (Relation::Le, at + lp::int(r.gen_range(0..3))),
            _ => (Relation::Ge, at - lp::int(r.gen_range(0..3))),
        };
        p.add_row(coeffs, relation, rhs);
    }
    p
}

fn brute_force_optimum(p: &LpProblem) -> Rat {
    let nv = p.num_vars();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for c in &p.rows {
        let neg: Vec<Rat> = c.coeffs.iter().map(|x| -x).collect();
        match c.relation {
            Relation::Ge => {
                rows.push(c.coeffs.clone());
                rhs.push(c.rhs.clone());
            }
            Relation::Le => {
                rows.push(neg);
                rhs.push(-&c.rhs);
            }
            Relation::Eq => {
                rows.push(c.coeffs.clone());
                rhs.push(c.rhs.clone());
                rows.push(neg);
                rhs.push(-&c.rhs);
            }
        }
    }
    for i in 0..nv {
        rows.push((0..nv).map(|j| lp::int(i64::from(i == j))).collect());
        rhs.push(Rat::zero());
    }
    let values = vertices_by_bases(&rows, &rhs, nv).into_iter().map(|v| dot(&p.objective, &v));
    match p.sense {
        Sense::Minimize => values.min().unwrap(),
        Sense::Maximize => values.max().unwrap(),
    }
}

/// For random clutters, the minimum of 200 random nonnegative objectives
/// over `Q(C)` is attained at an enumerated vertex. Returns the number of
/// polyhedra.
pub fn vertices_attain_optima(seed: u64, polyhedra: usize, objectives: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..polyhedra {
        let n = r.gen_range(2..=7);
        let c = random_clutter(&mut r, n, 8, 1);
        let q = lp::cover_polyhedron(&c).map_err(|e| e.to_string())?;
        let verts = lp::enumerate_vertices(&q).map_err(|e| e.to_string())?;
        if n <= 5 {
            let (rows, rhs) = cover_rows(&c);
            ensure!(verts == vertices_by_bases(&rows, &rhs, n), "vertex lists differ on {c}");
        }
        for _ in 0..objectives {
            let w: Vec<Rat> = (0..n).map(|_| lp::rat(r.gen_range(0..10), r.gen_range(1..5))).collect();
            let sol = q.lp(&w).solve().map_err(|e| e.to_string())?;
            let best = verts.iter().map(|v| dot(&w, v)).min().unwrap();
            ensure!(best == sol.value, "objective {w:?} on {c}: vertices {best}, simplex {}", sol.value);
            ensure!(!sol.value.is_negative(), "negative optimum on {c}");
        }
    }
    Ok(polyhedra)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
