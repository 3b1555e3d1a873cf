mod common;

use boolfun::{
    contract, enumerate_partitions, induced_partition, refines, restrict, restrict_by,
    star_product, QPair, SetPartition,
};
use common::{function, function_of_size};
use proptest::prelude::*;

fn refinement_pair(n: usize) -> impl Strategy<Value = (SetPartition, SetPartition)> {
    let all = enumerate_partitions(n).unwrap();
    let pairs: Vec<(SetPartition, SetPartition)> = all
        .iter()
        .flat_map(|p| {
            all.iter()
                .filter(|q| refines(p, q).unwrap())
                .map(move |q| (p.clone(), q.clone()))
        })
        .collect();
    (0..pairs.len()).prop_map(move |i| pairs[i].clone())
}

proptest! {
    #[test]
    fn contraction_and_restriction_commute(
        (f, (fine, coarse)) in (1usize..=4).prop_flat_map(|n| (function_of_size(n, -4, 4), refinement_pair(n)))
    ) {
        let lhs = contract(&restrict_by(&f, &coarse).unwrap(), &fine).unwrap();
        let rhs = restrict_by(&contract(&f, &fine).unwrap(), &induced_partition(&fine, &coarse).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operations_split_over_products(
        (f, p) in (0usize..=2).prop_flat_map(|n| (function_of_size(n, -4, 4), common::partition_of(n))),
        (g, r) in (0usize..=2).prop_flat_map(|n| (function_of_size(n, -4, 4), common::partition_of(n))),
    ) {
        let fg = star_product(&f, &g, QPair::ONE).unwrap();
        let joined = p.disjoint_union(&r);
        let contracted = star_product(&contract(&f, &p).unwrap(), &contract(&g, &r).unwrap(), QPair::ONE).unwrap();
        prop_assert_eq!(contract(&fg, &joined).unwrap(), contracted);
        let restricted = star_product(&restrict_by(&f, &p).unwrap(), &restrict_by(&g, &r).unwrap(), QPair::ONE).unwrap();
        prop_assert_eq!(restrict_by(&fg, &joined).unwrap(), restricted);
    }

    #[test]
    fn restriction_to_a_union_of_blocks_commutes_with_contraction(
        (f, p, pick) in (1usize..=4).prop_flat_map(|n| (function_of_size(n, -4, 4), common::partition_of(n), 0u32..16))
    ) {
        let blocks = p.blocks();
        let chosen: Vec<usize> = (0..blocks.len()).filter(|&j| pick & (1 << j) != 0).collect();
        let x = chosen.iter().fold(0, |m, &j| m | blocks[j]);
        let quotient_sub = chosen.iter().fold(0u32, |m, &j| m | (1 << j));
        let lhs = contract(&restrict(&f, x).unwrap(), &p.restricted_to(x)).unwrap();
        let rhs = restrict(&contract(&f, &p).unwrap(), quotient_sub).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn discrete_and_trivial_partitions(f in function(4, -4, 4)) {
        let n = f.n();
        prop_assert_eq!(&contract(&f, &SetPartition::discrete(n)).unwrap(), &f);
        prop_assert_eq!(&restrict_by(&f, &SetPartition::one_block(n)).unwrap(), &f);
    }
}

#[test]
fn partition_counts_are_bell_numbers() {
    let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
    for (n, &b) in bell.iter().enumerate() {
        let all = enumerate_partitions(n).unwrap();
        assert_eq!(all.len(), b);
        let distinct: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), b);
        for p in &all {
            assert_eq!(&SetPartition::from_rgs(p.rgs().to_vec()).unwrap(), p);
        }
    }
    assert!(enumerate_partitions(11).is_err());
}
