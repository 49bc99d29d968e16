use proptest::prelude::*;

use tightspan::bounds::{f_bound, h_bound};
use tightspan::celltest::cell_tests;
use tightspan::dual::{enumerate_cells, is_generic, seed_cell, traverse_cells};
use tightspan::fvec::{
    f_from_bounded_h, f_from_h, h_from_bounded_f, h_from_f, split_interior_boundary, tightspan_vectors, FVector,
};
use tightspan::graph::{edge_count, is_odd_unicyclic_spanning};
use tightspan::metric::generators::{default_resolution, gen_random};
use tightspan::primal::{bounded_faces, crosscheck, enumerate_vertices};
use tightspan::rational::int;
use tightspan::{EdgeGraph, Metric};

/// Entries in `{2, 3, 4}`: always a metric, often degenerate.
fn small_integer_metric(n: usize) -> impl Strategy<Value = Metric> {
    prop::collection::vec(2i64..=4, edge_count(n))
        .prop_map(move |v| Metric::from_upper(n, v.into_iter().map(int).collect()).unwrap())
}

fn random_metric(n: usize) -> impl Strategy<Value = Metric> {
    any::<u64>().prop_map(move |seed| gen_random(n, seed, default_resolution(n)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn genericity_is_primal_simplicity(d in prop_oneof![
        small_integer_metric(4),
        small_integer_metric(5),
        random_metric(4),
        random_metric(5),
    ]) {
        let generic = is_generic(&d).unwrap().generic;
        let simple = enumerate_vertices(&d).unwrap().iter().all(|v| v.is_simple());
        prop_assert_eq!(generic, simple);
    }

    #[test]
    fn traversal_matches_enumeration(d in prop_oneof![random_metric(5), random_metric(6)]) {
        let e = enumerate_cells(&d, 8).unwrap();
        prop_assume!(e.generic);
        let t = traverse_cells(&d, &seed_cell(&d).unwrap().graph).unwrap();
        prop_assert_eq!(e, t);
    }

    #[test]
    fn generic_subdivisions_fill_the_hypersimplex(d in prop_oneof![random_metric(5), random_metric(6)]) {
        let s = enumerate_cells(&d, 8).unwrap();
        prop_assume!(s.generic);
        prop_assert_eq!(s.volume_sum(), (1u64 << (d.n() - 1)) - d.n() as u64);
    }

    #[test]
    fn cell_tests_agree(d in random_metric(5), bits in any::<u64>()) {
        prop_assume!(is_generic(&d).unwrap().generic);
        // pick a candidate by scanning from a random edge set of size n
        let candidates: Vec<EdgeGraph> = (0u64..1 << edge_count(5))
            .filter(|b| b.count_ones() == 5)
            .map(|b| EdgeGraph::from_bits(5, b))
            .filter(|g| is_odd_unicyclic_spanning(g) && tightspan::graph::components(g).components.len() == 1)
            .collect();
        let g = candidates[(bits % candidates.len() as u64) as usize];
        let verdicts: Vec<bool> = cell_tests().iter().map(|t| t.is_cell(&d, &g).unwrap()).collect();
        prop_assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{} on {:?}: {:?}", g, d, verdicts);
    }

    #[test]
    fn dual_and_primal_agree(d in prop_oneof![random_metric(4), random_metric(5)]) {
        prop_assume!(is_generic(&d).unwrap().generic);
        prop_assert!(crosscheck(&d).is_ok());
    }

    #[test]
    fn tight_span_vectors_are_consistent(d in random_metric(6)) {
        let s = enumerate_cells(&d, 8).unwrap();
        prop_assume!(is_generic(&d).unwrap().generic);
        let tv = tightspan_vectors(&d, &s).unwrap();
        prop_assert_eq!(f_from_bounded_h(&tv.ht), tv.ft.clone());
        prop_assert!(tv.ht.iter().all(|&h| h >= 0));
        let n = d.n();
        prop_assert!(tv.dim() >= n.div_ceil(3) && tv.dim() <= n / 2);
        for (k, &f) in tv.ft.iter().enumerate() {
            prop_assert!(f as u64 <= f_bound(n, k).unwrap());
            prop_assert!(tv.ht[k] as u64 <= h_bound(n, k, false).unwrap());
        }
        let ball = split_interior_boundary(&tightspan::dual::all_faces(&s).unwrap());
        prop_assert_eq!(ball.total.counts.iter().sum::<i64>(),
            ball.boundary.counts.iter().sum::<i64>() + ball.interior.counts.iter().sum::<i64>());
    }

    #[test]
    fn primal_vertices_match_dual_top_faces(d in random_metric(5)) {
        prop_assume!(is_generic(&d).unwrap().generic);
        let s = enumerate_cells(&d, 8).unwrap();
        let tv = tightspan_vectors(&d, &s).unwrap();
        prop_assert_eq!(bounded_faces(&d).unwrap().f_vector()[0], tv.ft[0]);
    }
}

proptest! {
    #[test]
    fn h_from_f_inverts(dim in 0usize..8, raw in prop::collection::vec(0i64..1000, 8)) {
        let f = FVector::new(dim, &raw[..=dim]);
        prop_assert_eq!(f_from_h(&h_from_f(&f)), f);
    }

    #[test]
    fn bounded_h_inverts(f in prop::collection::vec(-500i64..500, 1..8)) {
        prop_assert_eq!(f_from_bounded_h(&h_from_bounded_f(&f)), f);
    }

    #[test]
    fn f_bound_recursion(n in 4usize..=40, k in 1usize..=20) {
        prop_assume!(k <= n / 2);
        let f = |n: usize, k: usize| f_bound(n, k).unwrap_or(0);
        prop_assert_eq!(f(n, k), 2 * f(n - 1, k) + f(n - 2, k - 1));
    }
}
