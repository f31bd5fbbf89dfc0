//! Randomized invariants checked against the brute-force oracles.

mod common;

use common::*;
use nefdual::io::{parse_points, write_polytope};
use nefdual::{corpus, run_full_duality, NefPartition, Point, Polytope, Rational, Space};
use num_traits::Signed;
use proptest::prelude::*;

fn point_sets(d: usize, max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, d), 1..=max)
        .prop_map(|rows| rows.iter().map(|r| Point::from_ints(r, Space::M)).collect())
}

fn any_point_set() -> impl Strategy<Value = Vec<Point>> {
    (1usize..=3).prop_flat_map(|d| point_sets(d, 8))
}

/// Full-dimensional lattice polytopes with the origin in the interior.
fn centered() -> impl Strategy<Value = Polytope> {
    (1usize..=3)
        .prop_flat_map(|d| point_sets(d, 8))
        .prop_filter_map("origin not interior", |pts| {
            let p = Polytope::hull(&pts).ok()?;
            p.has_origin_in_interior().then_some(p)
        })
}

fn triple() -> impl Strategy<Value = (Vec<Point>, Vec<Point>, Vec<Point>)> {
    (1usize..=3).prop_flat_map(|d| (point_sets(d, 4), point_sets(d, 4), point_sets(d, 4)))
}

fn rational_point(d: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec((-7i64..=7, 1i64..=3), d).prop_map(|v| {
        Point::new(
            v.into_iter()
                .map(|(n, m)| Rational::new(n.into(), m.into()))
                .collect(),
            Space::M,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_matches_oracle(pts in any_point_set()) {
        let p = Polytope::hull(&pts).unwrap();
        prop_assert_eq!(coords(p.vertices()), hull_vertices(&coords(&pts)));
        prop_assert_eq!(Polytope::hull(p.vertices()).unwrap(), p);
    }

    #[test]
    fn facets_match_oracle(p in centered()) {
        let mut lib: Vec<(Vector, Q)> = p.facets().iter().map(|f| {
            let a = f.normal.coords().to_vec();
            let lead = a.iter().find(|x| **x != q(0)).unwrap().abs();
            (a.iter().map(|x| x / &lead).collect(), &f.offset / &lead)
        }).collect();
        lib.sort();
        prop_assert_eq!(lib, facets(&coords(p.vertices())));
    }

    #[test]
    fn polar_biduality(p in centered()) {
        let polar = p.polar_dual().unwrap();
        prop_assert_eq!(Some(coords(polar.vertices())), polar_vertices(&coords(p.vertices())));
        prop_assert_eq!(polar.polar_dual().unwrap(), p);
    }

    #[test]
    fn minkowski_commutes_and_associates((a, b, c) in triple()) {
        let (a, b, c) = (Polytope::hull(&a).unwrap(), Polytope::hull(&b).unwrap(), Polytope::hull(&c).unwrap());
        let ab = a.minkowski_sum(&b).unwrap();
        prop_assert_eq!(&ab, &b.minkowski_sum(&a).unwrap());
        prop_assert_eq!(ab.minkowski_sum(&c).unwrap(), a.minkowski_sum(&b.minkowski_sum(&c).unwrap()).unwrap());
        prop_assert_eq!(coords(ab.vertices()), minkowski_vertices(&coords(a.vertices()), &coords(b.vertices())));
    }

    #[test]
    fn contains_matches_oracle((pts, x) in (1usize..=3).prop_flat_map(|d| (point_sets(d, 6), rational_point(d)))) {
        let p = Polytope::hull(&pts).unwrap();
        prop_assert_eq!(p.contains(&x).unwrap(), in_hull(x.coords(), &coords(p.vertices())));
    }

    #[test]
    fn file_round_trip(p in centered()) {
        let text = write_polytope(&p);
        let back = Polytope::hull(&parse_points(&text, Space::M).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}

/// Every bundled nef-partition as a validated partition.
fn bundled() -> Vec<(String, NefPartition)> {
    corpus::entries()
        .iter()
        .flat_map(|e| {
            let delta = e.polytope();
            e.canonical_partitions().into_iter().map(move |parts| {
                (
                    e.name.to_string(),
                    NefPartition::validate(&delta, &parts).unwrap(),
                )
            })
        })
        .collect()
}

#[test]
fn support_polytopes_add() {
    for (name, np) in bundled() {
        let phi = np.phi();
        for i in 0..phi.len() {
            for j in i + 1..phi.len() {
                let sum = phi[i].try_add(&phi[j]).unwrap();
                assert!(sum.is_convex() && sum.is_integral(), "{name}");
                let lhs = sum.support_polytope().unwrap();
                let rhs = np.nabla_parts()[i]
                    .minkowski_sum(&np.nabla_parts()[j])
                    .unwrap();
                assert_eq!(lhs, rhs, "{name}: parts {i}, {j}");
            }
        }
    }
}

#[test]
fn relation_matrix_is_exchanged_by_duality() {
    for (name, np) in bundled() {
        let res = run_full_duality(&np).unwrap();
        let m = np.check_relations().matrix;
        let dual = res.dual.check_relations().matrix;
        for (i, row) in dual.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, m[j][i], "{name}: entry ({i},{j})");
            }
        }
    }
}

#[test]
fn every_bundled_partition_is_oracle_valid() {
    for (name, np) in bundled() {
        assert!(
            is_nef_partition(&coords(np.delta().vertices()), np.parts()),
            "{name}"
        );
    }
}
