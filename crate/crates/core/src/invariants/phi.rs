//! The fundamental invariant `Φ`, its coloring-count oracle, and the character `μ = Φ(·)(-1)`.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::polynomial::{stirling_first_kind, Polynomial};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::instances::{gamma, Hypergraph};
use crate::limits;

/// Largest number of colorings `phi_count` enumerates.
pub const COLORING_LIMIT: u64 = 1 << 24;

/// `modular[m]`: whether `f|m` is modular. A restriction is modular when its value on the
/// whole set equals the sum over singletons and each one-element deletion is modular.
pub(crate) fn modular_table(f: &BooleanFunction) -> Vec<bool> {
    let size = 1usize << f.n();
    let mut singleton_sum = vec![0i128; size];
    let mut modular = vec![true; size];
    for m in 1..size {
        let low = m & m.wrapping_neg();
        singleton_sum[m] = singleton_sum[m ^ low] + i128::from(f.at(low as Mask));
        modular[m] = i128::from(f.at(m as Mask)) == singleton_sum[m]
            && bits::positions(m as Mask)
                .into_iter()
                .all(|x| modular[m ^ (1 << x)]);
    }
    modular
}

/// `counts[k]`: the number of partitions of the ground set into `k` blocks with modular
/// restrictions.
pub fn modular_partition_counts(f: &BooleanFunction) -> Result<Vec<u64>> {
    limits::check(f.n(), limits::PARTITIONS, "the partition expansion of Φ")?;
    let n = f.n();
    let modular = modular_table(f);
    let size = 1usize << n;
    // table[m][k]: partitions of m into k modular blocks.
    let mut table: Vec<Vec<u64>> = vec![Vec::new(); size];
    table[0] = vec![1];
    for m in 1..size {
        let low = m & m.wrapping_neg();
        let mut row = vec![0u64; (m as u32).count_ones() as usize + 1];
        let rest = m ^ low;
        for sub in bits::submasks(rest as Mask) {
            let block = sub as usize | low;
            if !modular[block] {
                continue;
            }
            for (k, &c) in table[m ^ block].iter().enumerate() {
                row[k + 1] += c;
            }
        }
        table[m] = row;
    }
    Ok(table.pop().expect("table is nonempty"))
}

/// `Φ(f̄) = Σ_{modular partitions {X₁..X_k}} T(T-1)⋯(T-k+1)`.
pub fn phi(f: &BooleanFunction) -> Result<Polynomial> {
    let counts = modular_partition_counts(f)?;
    let stirling = stirling_first_kind(counts.len() - 1);
    let mut coeffs = vec![BigInt::from(0); counts.len()];
    for (k, &c) in counts.iter().enumerate().filter(|(_, &c)| c != 0) {
        for (j, s) in stirling[k].iter().enumerate() {
            coeffs[j] += s * BigInt::from(c);
        }
    }
    Ok(Polynomial::new(coeffs))
}

/// Number of maps `c : X → [colors]` whose fibers all carry modular restrictions.
pub fn phi_count(f: &BooleanFunction, colors: u64) -> Result<u64> {
    let n = f.n();
    let too_large = Error::EnumerationTooLarge { n, colors };
    let total = u32::try_from(n)
        .ok()
        .and_then(|e| colors.checked_pow(e))
        .filter(|&t| t <= COLORING_LIMIT)
        .ok_or(too_large)?;
    if n == 0 {
        return Ok(1);
    }
    let modular = modular_table(f);
    let k = colors as usize;
    Ok((0..total)
        .into_par_iter()
        .filter(|&code| {
            let mut fibers = vec![0usize; k];
            let mut c = code;
            for x in 0..n {
                fibers[(c % colors) as usize] |= 1 << x;
                c /= colors;
            }
            fibers.iter().all(|&m| modular[m])
        })
        .count() as u64)
}

/// `Φ(γ(H))`, the chromatic polynomial of `H`.
pub fn chromatic_polynomial(h: &Hypergraph) -> Result<Polynomial> {
    phi(&gamma(h))
}

/// `μ(f̄) = Φ(f̄)(-1)`.
pub fn mu(f: &BooleanFunction) -> Result<BigInt> {
    Ok(phi(f)?.eval_i64(-1))
}
