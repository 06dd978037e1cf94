use tangle_core::cuboid::{self, ZeroOneSet};
use tangle_core::lp::{self, core_support, extract_small_subfamily};
use tangle_core::matroid::{self, projective_geometry};
use tangle_core::pg::{pg_subspace, quarter_packing};
use tangle_core::{t30, Clutter, Graph, Idealness};

fn cycle_cuboid(g: &Graph) -> Clutter {
    cuboid::cuboid(&ZeroOneSet::from_space(&g.cycle_space()).unwrap()).unwrap()
}

fn ideal_binary_fixtures() -> Vec<Clutter> {
    vec![
        Clutter::new(2, [[1], [2]]).unwrap(),
        Clutter::q6(),
        Clutter::q6().duplicate(3).unwrap(),
        cuboid::cuboid(&ZeroOneSet::cube(2).unwrap()).unwrap(),
        cycle_cuboid(&Graph::cycle(4)),
        cycle_cuboid(&Graph::complete(4)),
        cycle_cuboid(&Graph::bowtie()),
        // Q6 plus an extra member keeps τ = 2 but is not tangled.
        Clutter::new(7, [vec![1, 3, 6], vec![1, 4, 5], vec![2, 3, 5], vec![2, 4, 6], vec![7, 1, 2]]).unwrap(),
    ]
}

#[test]
fn quarter_packings_of_ideal_binary_fixtures() {
    let mut packed = 0;
    for c in ideal_binary_fixtures() {
        if !c.is_binary() || !lp::is_ideal(&c).unwrap().is_ideal() {
            continue;
        }
        let qp = quarter_packing(&c, false).unwrap();
        assert_eq!(qp.idealness, Idealness::Verified);
        assert_eq!(*qp.packing.value(), lp::int(2), "{c}");
        assert!(qp.packing.is_integral_over(4), "{c}");
        let sub = extract_small_subfamily(&qp.packing).unwrap();
        assert!(sub.len() <= 5, "{c}: {sub:?}");
        let mut common = c.members()[sub[0]].clone();
        for &i in &sub {
            common.and_assign(&c.members()[i]);
        }
        assert!(common.is_zero());
        packed += 1;
    }
    assert!(packed >= 7, "{packed}");
}

#[test]
fn t30_packing_needs_assumed_idealness() {
    let t = t30();
    assert!(quarter_packing(&t, false).is_err());
    let qp = quarter_packing(&t, true).unwrap();
    assert_eq!(qp.idealness, Idealness::Assumed);
    assert_eq!(qp.level, 3);
    assert_eq!(qp.packing.support().len(), 8);
    assert!(extract_small_subfamily(&qp.packing).unwrap().len() <= 5);
}

#[test]
fn core_matches_lp_support() {
    for c in ideal_binary_fixtures() {
        if !c.is_tangled() {
            continue;
        }
        let core = c.core(false).unwrap();
        assert_eq!(core.clutter, core_support(&c).unwrap(), "{c}");
        let pairs = c.two_covers();
        for m in core.clutter.members() {
            assert!(pairs.iter().all(|&(u, v)| m.get(u - 1) != m.get(v - 1)));
        }
    }
}

#[test]
fn geometry_cuboid_beyond_q6_is_not_ideal() {
    let c = cuboid::cuboid(&ZeroOneSet::from_space(&projective_geometry(3).unwrap().cocycles()).unwrap()).unwrap();
    assert!(c.is_k_wise_intersecting(3));
    let report = lp::is_ideal(&c).unwrap();
    let w = report.witness.expect("fractional vertex");
    let third = lp::rat(1, 3);
    let expected: Vec<_> = (0..14).map(|i| if i % 2 == 1 { third.clone() } else { lp::int(0) }).collect();
    assert_eq!(w, expected);
    let q = lp::cover_polyhedron(&c).unwrap();
    assert!(q.contains(&w));
    assert_eq!(q.tight_rank(&w), 14);
}

#[test]
fn petersen_cover_span_reduces_to_the_fano_geometry() {
    let g = Graph::petersen();
    let cover = matroid::k_cycle_cover_space(&g.cycle_space(), 3, 8).unwrap().unwrap();
    let span = tangle_core::BinarySpace::span(15, &cover).unwrap();
    let sub = pg_subspace(&span).unwrap();
    assert_eq!(sub.level, 3);
    assert!(sub.space.is_subspace_of(&span));
    let points = ZeroOneSet::from_space(&sub.space).unwrap();
    assert!(cuboid::agree_on_coordinate(&points).is_none());
    let (dedup, _) = cuboid::deduplicate_coordinates(&points);
    assert_eq!((dedup.len(), dedup.width()), (8, 7));
}
