#![allow(dead_code)]

use boolfun::{BooleanFunction, SetPartition};
use proptest::prelude::*;

pub fn bf(n: usize, values: &[i64]) -> BooleanFunction {
    BooleanFunction::new(n, values.to_vec()).unwrap()
}

/// Functions on `0..=max_n` elements with values in `lo..=hi`.
pub fn function(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = BooleanFunction> {
    (0..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(lo..=hi, (1usize << n) - 1).prop_map(move |rest| {
            let mut values = vec![0];
            values.extend(rest);
            BooleanFunction::new(n, values).unwrap()
        })
    })
}

pub fn function_of_size(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = BooleanFunction> {
    prop::collection::vec(lo..=hi, (1usize << n) - 1).prop_map(move |rest| {
        let mut values = vec![0];
        values.extend(rest);
        BooleanFunction::new(n, values).unwrap()
    })
}

/// Every table on `n` elements with values in `lo..=hi`, in lexicographic order of codes.
pub fn all_tables(n: usize, lo: i64, hi: i64) -> impl Iterator<Item = BooleanFunction> {
    let len = 1usize << n;
    let width = (hi - lo + 1) as usize;
    let count = width.pow((len - 1) as u32);
    (0..count).map(move |mut code| {
        let mut values = vec![0i64; len];
        for v in values.iter_mut().skip(1) {
            *v = lo + (code % width) as i64;
            code /= width;
        }
        BooleanFunction::new(n, values).unwrap()
    })
}

pub fn partition_of(n: usize) -> impl Strategy<Value = SetPartition> {
    let all = boolfun::enumerate_partitions(n).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}
