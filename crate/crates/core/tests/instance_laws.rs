mod common;

use boolfun::bits;
use boolfun::{
    contract, enumerate_partitions, gamma, graphic_rank, is_matroid_rank, is_modular, is_rigid,
    linear_rank, restrict, star_product, BooleanFunction, Field, Hypergraph, Mask, MultiGraph,
    QPair, VectorFamily,
};
use proptest::prelude::*;

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (0..=max_n).prop_flat_map(|n| {
        let candidates = (1u32 << n) - 1;
        prop::collection::vec(1..=candidates.max(1), 0..6)
            .prop_map(move |edges| Hypergraph::new(n, if n == 0 { vec![] } else { edges }).unwrap())
    })
}

/// Multigraphs with `edges` edges on `vcount` vertices, all of them.
fn all_multigraphs(vcount: usize, edges: usize) -> Vec<MultiGraph> {
    let pairs: Vec<(usize, usize)> = (1..=vcount)
        .flat_map(|u| (u + 1..=vcount).map(move |v| (u, v)))
        .collect();
    if pairs.is_empty() {
        return if edges == 0 {
            vec![MultiGraph::new(vcount, vec![]).unwrap()]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    let total = pairs.len().pow(edges as u32);
    for mut code in 0..total {
        let mut ends = Vec::with_capacity(edges);
        for _ in 0..edges {
            ends.push(pairs[code % pairs.len()]);
            code /= pairs.len();
        }
        out.push(MultiGraph::new(vcount, ends).unwrap());
    }
    out
}

/// Depth-first search for a cycle, treating parallel edges as distinct.
fn has_cycle(g: &MultiGraph) -> bool {
    let mut adjacency = vec![Vec::new(); g.vcount() + 1];
    for (id, &(u, v)) in g.ends().iter().enumerate() {
        adjacency[u].push((v, id));
        adjacency[v].push((u, id));
    }
    let mut seen = vec![false; g.vcount() + 1];
    for start in 1..=g.vcount() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, usize::MAX)];
        while let Some((v, via)) = stack.pop() {
            if seen[v] {
                return true;
            }
            seen[v] = true;
            for &(w, id) in &adjacency[v] {
                if id != via {
                    stack.push((w, id));
                }
            }
        }
    }
    false
}

fn sub_graph(g: &MultiGraph, y: Mask) -> MultiGraph {
    MultiGraph::new(
        g.vcount(),
        bits::positions(y)
            .into_iter()
            .map(|e| g.ends()[e])
            .collect(),
    )
    .unwrap()
}

fn small_graphs() -> Vec<MultiGraph> {
    (1..=4)
        .flat_map(|v| (0..=4).flat_map(move |e| all_multigraphs(v, e)))
        .collect()
}

proptest! {
    #[test]
    fn gamma_is_a_product_morphism(g in hypergraph(3), h in hypergraph(3)) {
        let lhs = gamma(&g.disjoint_union(&h).unwrap());
        prop_assert_eq!(lhs, star_product(&gamma(&g), &gamma(&h), QPair::ONE).unwrap());
    }

    #[test]
    fn gamma_commutes_with_restriction(h in hypergraph(4), sub in 0u32..16) {
        let sub = sub & bits::full(h.n());
        prop_assert_eq!(restrict(&gamma(&h), sub).unwrap(), gamma(&h.restrict(sub).unwrap()));
    }

    #[test]
    fn gamma_is_modular_iff_all_edges_are_singletons(h in hypergraph(4)) {
        let singletons = h.edges().iter().all(|e| e.count_ones() == 1);
        prop_assert_eq!(is_modular(&gamma(&h)), singletons);
        prop_assert!(is_rigid(&gamma(&h)));
    }

    #[test]
    fn linear_families_give_matroids(dim in 1usize..=3, cols in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..=4)) {
        let columns: Vec<Vec<i64>> = cols.iter().map(|c| c[..dim].to_vec()).collect();
        let v = VectorFamily::from_integers(dim, &columns).unwrap();
        let rank = linear_rank(&v, Field::Rationals).unwrap();
        prop_assert!(is_matroid_rank(&rank));
        prop_assert!(is_rigid(&rank));
        for p in enumerate_partitions(rank.n()).unwrap() {
            let low_rank_blocks = p.blocks().iter().all(|&b| rank.at(b) <= 1);
            prop_assert_eq!(is_matroid_rank(&contract(&rank, &p).unwrap()), low_rank_blocks);
            let colinear = p.blocks().iter().all(|&b| {
                let picked = bits::positions(b);
                picked.iter().all(|&i| picked.iter().all(|&j| {
                    (0..dim).all(|r| (0..dim).all(|s| columns[i][r] * columns[j][s] == columns[i][s] * columns[j][r]))
                }))
            });
            prop_assert_eq!(low_rank_blocks, colinear);
        }
    }

    #[test]
    fn prime_field_ranks_are_matroids(cols in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 0..=4), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let v = VectorFamily::from_integers(2, &cols).unwrap();
        let rank = linear_rank(&v, Field::prime(p).unwrap()).unwrap();
        prop_assert!(is_matroid_rank(&rank));
        prop_assert!(is_rigid(&rank));
    }
}

#[test]
fn graphic_ranks_are_rigid_matroids_with_forest_and_parallel_criteria() {
    for g in small_graphs() {
        let rank = graphic_rank(&g);
        assert!(is_matroid_rank(&rank), "{g:?}");
        assert!(is_rigid(&rank), "{g:?}");
        assert_eq!(is_modular(&rank), !has_cycle(&g), "{g:?}");
        for y in 0..1u32 << g.n() {
            assert_eq!(
                rank.at(y) == i64::from(y.count_ones()),
                !has_cycle(&sub_graph(&g, y))
            );
        }
        if g.n() <= 3 {
            for p in enumerate_partitions(g.n()).unwrap() {
                let parallel = p.blocks().iter().all(|&b| {
                    let ends: Vec<_> = bits::positions(b)
                        .into_iter()
                        .map(|e| g.ends()[e])
                        .collect();
                    let key = |&(u, v): &(usize, usize)| (u.min(v), u.max(v));
                    ends.iter().all(|e| key(e) == key(&ends[0]))
                });
                assert_eq!(
                    is_matroid_rank(&contract(&rank, &p).unwrap()),
                    parallel,
                    "{g:?} {p:?}"
                );
            }
        }
    }
}

#[test]
fn independent_sets_are_hereditary_and_products_stay_matroids() {
    let graphs = small_graphs();
    for g in graphs.iter().filter(|g| g.n() <= 3) {
        let rank = graphic_rank(g);
        for y in 0..1u32 << rank.n() {
            if rank.at(y) == i64::from(y.count_ones()) {
                assert!(bits::submasks(y).all(|z| rank.at(z) == i64::from(z.count_ones())));
            }
            assert!(is_matroid_rank(&restrict(&rank, y).unwrap()));
        }
    }
    for a in graphs.iter().filter(|g| g.n() <= 2).step_by(3) {
        for b in graphs.iter().filter(|g| g.n() <= 2).step_by(5) {
            let p = star_product(&graphic_rank(a), &graphic_rank(b), QPair::ONE).unwrap();
            assert!(is_matroid_rank(&p));
        }
    }
    assert!(is_matroid_rank(&BooleanFunction::unit()));
}
