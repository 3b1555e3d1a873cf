//! Factorizations `f = f|X₁ ⋆ ⋯ ⋆ f|X_k` into indecomposable components, the component
//! partition `∼_f^i` for `⋆₁`, and modularity.
//!
//! Every factorization `f = f' ⋆ f''` over a bipartition `(X∖Y, Y)` forces `f' = f|X∖Y` and
//! `f'' = f|Y`, so all searches below run over subsets rather than over factor pairs.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::function::{star_product, BooleanFunction, QPair};
use crate::partitions::SetPartition;

/// An ordered composition of the ground set whose blocks multiply back to the function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub blocks: Vec<Mask>,
    pub q: QPair,
}

impl Decomposition {
    /// Checks that the blocks form a composition and that the ordered product of the
    /// restrictions reproduces `f`. Indecomposability of the factors is not rechecked.
    pub fn reassembles(&self, f: &BooleanFunction) -> bool {
        let mut seen: Mask = 0;
        for &b in &self.blocks {
            if b == 0 || b & seen != 0 {
                return false;
            }
            // f restricted to seen∪b must equal (f|seen) ⋆ (f|b) in place.
            if seen != 0 && !splits_as(f, seen | b, seen, self.q) {
                return false;
            }
            seen |= b;
        }
        seen == f.full_mask()
    }
}

fn power_table(q: i64, k: usize) -> Vec<Option<i128>> {
    let mut out = Vec::with_capacity(k + 1);
    let mut cur = Some(1i128);
    for _ in 0..=k {
        out.push(cur);
        cur = cur.and_then(|c| c.checked_mul(i128::from(q)));
    }
    out
}

fn exact_term(q1: i64, e1: u32, v1: i64, q2: i64, e2: u32, v2: i64) -> BigInt {
    BigInt::from(q1).pow(e1) * v1 + BigInt::from(q2).pow(e2) * v2
}

/// Whether `f|within = f|left ⋆_q f|(within∖left)`, in the coordinates of `f`.
pub(crate) fn splits_as(f: &BooleanFunction, within: Mask, left: Mask, q: QPair) -> bool {
    let right = within & !left;
    if q == QPair::ONE {
        return bits::submasks(within).all(|a| {
            i128::from(f.at(a)) == i128::from(f.at(a & left)) + i128::from(f.at(a & right))
        });
    }
    let k = within.count_ones() as usize;
    let p1 = power_table(q.q1, k);
    let p2 = power_table(q.q2, k);
    bits::submasks(within).all(|a| {
        let (l, r) = (a & left, a & right);
        let (e1, e2) = (r.count_ones(), l.count_ones());
        let (v1, v2) = (f.at(l), f.at(r));
        let fast = p1[e1 as usize]
            .and_then(|p| p.checked_mul(i128::from(v1)))
            .zip(p2[e2 as usize].and_then(|p| p.checked_mul(i128::from(v2))))
            .and_then(|(x, y)| x.checked_add(y));
        match fast {
            Some(total) => total == i128::from(f.at(a)),
            None => exact_term(q.q1, e1, v1, q.q2, e2, v2) == BigInt::from(f.at(a)),
        }
    })
}

/// Whether `f|mask` is `q`-indecomposable, in the coordinates of `f`.
pub(crate) fn indecomposable_on(f: &BooleanFunction, mask: Mask, q: QPair) -> bool {
    bits::submasks(mask)
        .filter(|&y| y != 0 && y != mask)
        .all(|y| !splits_as(f, mask, mask & !y, q))
}

/// `f` admits no factorization `f|X∖Y ⋆_q f|Y` with `∅ ⊊ Y ⊊ X`.
pub fn is_indecomposable(f: &BooleanFunction, q: QPair) -> Result<bool> {
    if f.n() == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Ok(indecomposable_on(f, f.full_mask(), q))
}

/// Splits `mask` recursively, taking the smallest admissible first block at each step.
fn split_recursive(f: &BooleanFunction, mask: Mask, q: QPair, out: &mut Vec<Mask>) {
    let first = bits::submasks(mask)
        .filter(|&b| b != 0 && b != mask)
        .find(|&b| splits_as(f, mask, b, q));
    match first {
        None => out.push(mask),
        Some(b) => {
            split_recursive(f, b, q, out);
            split_recursive(f, mask & !b, q, out);
        }
    }
}

/// Sequence of blocks of `f|mask` under `q`; empty when `mask` is empty.
pub(crate) fn blocks_on(f: &BooleanFunction, mask: Mask, q: QPair) -> Vec<Mask> {
    let mut out = Vec::new();
    if mask != 0 {
        split_recursive(f, mask, q, &mut out);
    }
    out
}

/// A decomposition of `f` into `q`-indecomposable factors.
pub fn decompose(f: &BooleanFunction, q: QPair) -> Result<Decomposition> {
    if f.n() == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Ok(Decomposition {
        blocks: blocks_on(f, f.full_mask(), q),
        q,
    })
}

/// `∼_f^i`: the partition into indecomposable components under `⋆₁`.
pub fn component_partition(f: &BooleanFunction) -> Result<SetPartition> {
    if f.n() == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Ok(components_partition_unchecked(f))
}

pub(crate) fn components_partition_unchecked(f: &BooleanFunction) -> SetPartition {
    let blocks = blocks_on(f, f.full_mask(), QPair::ONE);
    SetPartition::from_blocks(f.n(), &blocks).expect("components form a partition")
}

/// `ic(f)`, the number of indecomposable components; 0 for the unit.
pub fn ic(f: &BooleanFunction) -> usize {
    blocks_on(f, f.full_mask(), QPair::ONE).len()
}

/// `f(A) = Σ_{x∈A} f({x})` for every `A`.
pub fn is_modular(f: &BooleanFunction) -> bool {
    (1..1u32 << f.n()).all(|a| {
        let low = a & a.wrapping_neg();
        i128::from(f.at(a)) == i128::from(f.at(a ^ low)) + i128::from(f.at(low))
    })
}

/// `f ⋆_q g = g ⋆_q f`, comparing both on the ground set where `f` occupies the low positions.
pub fn commutes(f: &BooleanFunction, g: &BooleanFunction, q: QPair) -> Result<bool> {
    let fg = star_product(f, g, q)?;
    let gf = star_product(g, f, q)?;
    let (nf, ng) = (f.n(), g.n());
    let low = f.full_mask();
    Ok((0..1u32 << (nf + ng)).all(|m| {
        let a = m & low;
        let b = m >> nf;
        fg.at(m) == gf.at(b | (a << ng))
    }))
}
