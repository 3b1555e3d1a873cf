//! Set partitions stored as restricted-growth strings, with the contraction `f/∼` and the
//! restriction `f|∼`.
//!
//! Block `j` of a partition is `{i+1 : rgs[i] = j}`. Labels appear in first-occurrence
//! order, so blocks are also ordered by their smallest element; the quotient ground set
//! of `f/∼` uses exactly this order.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct SetPartition {
    n: usize,
    rgs: Vec<u8>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    rgs: Vec<u8>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        if raw.rgs.len() != raw.n {
            return Err(Error::InvalidPartition(format!(
                "n = {} but the string has {} labels",
                raw.n,
                raw.rgs.len()
            )));
        }
        SetPartition::from_rgs(raw.rgs)
    }
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        limits::check(rgs.len(), limits::ARITHMETIC, "set partitions")?;
        let mut next = 0u8;
        for (i, &label) in rgs.iter().enumerate() {
            if label > next {
                return Err(Error::InvalidPartition(format!(
                    "label {label} at position {i} skips ahead of {next}"
                )));
            }
            if label == next {
                next += 1;
            }
        }
        Ok(SetPartition { n: rgs.len(), rgs })
    }

    /// Builds the partition with the given blocks, which must be disjoint, nonempty
    /// and cover `{1..n}`.
    pub fn from_blocks(n: usize, blocks: &[Mask]) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (j, &b) in blocks.iter().enumerate() {
            if b == 0 || b & !bits::full(n) != 0 {
                return Err(Error::InvalidPartition(format!(
                    "block {b:#b} is empty or out of range"
                )));
            }
            for p in bits::positions(b) {
                if owner[p] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {} repeated",
                        p + 1
                    )));
                }
                owner[p] = j;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(Error::InvalidPartition(
                "blocks do not cover the ground set".into(),
            ));
        }
        Ok(Self::normalized(&owner))
    }

    /// Relabels an arbitrary block assignment into first-occurrence order.
    fn normalized(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let rgs = labels
            .iter()
            .map(|&l| {
                let next = map.len() as u8;
                *map.entry(l).or_insert(next)
            })
            .collect();
        SetPartition {
            n: labels.len(),
            rgs,
        }
    }

    /// The equality relation `=_X`: all blocks are singletons.
    pub fn discrete(n: usize) -> Self {
        SetPartition {
            n,
            rgs: (0..n as u8).collect(),
        }
    }

    pub fn one_block(n: usize) -> Self {
        SetPartition { n, rgs: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// `cl(∼)`, the number of blocks.
    pub fn block_count(&self) -> usize {
        self.rgs.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count() == self.n
    }

    /// Block masks in label order.
    pub fn blocks(&self) -> Vec<Mask> {
        let mut out = vec![0 as Mask; self.block_count()];
        for (i, &l) in self.rgs.iter().enumerate() {
            out[l as usize] |= 1 << i;
        }
        out
    }

    /// `∼_X ⊔ ∼_Y` on the concatenated ground set.
    pub fn disjoint_union(&self, other: &SetPartition) -> SetPartition {
        let shift = self.block_count() as u8;
        let mut rgs = self.rgs.clone();
        rgs.extend(other.rgs.iter().map(|&l| l + shift));
        SetPartition { n: rgs.len(), rgs }
    }

    /// `∼ ∩ sub²`, read on the compressed ground set of `sub`.
    pub fn restricted_to(&self, sub: Mask) -> SetPartition {
        let labels: Vec<usize> = bits::positions(sub)
            .into_iter()
            .map(|p| self.rgs[p] as usize)
            .collect();
        Self::normalized(&labels)
    }

    /// Whether `sub` is a union of blocks.
    pub fn saturates(&self, sub: Mask) -> bool {
        self.blocks().iter().all(|&b| b & sub == 0 || b & sub == b)
    }

    /// Treats `self` as a partition of the compressed ground set of `sub` and returns
    /// its blocks as global masks inside `sub`.
    pub(crate) fn expanded_blocks(&self, sub: Mask) -> Vec<Mask> {
        let table = bits::expansion_table(&bits::positions(sub));
        self.blocks()
            .into_iter()
            .map(|b| table[b as usize])
            .collect()
    }
}

/// All partitions of `{1..n}` in lexicographic order of their restricted-growth strings.
pub fn enumerate_partitions(n: usize) -> Result<Vec<SetPartition>> {
    limits::check(n, limits::PARTITIONS, "partition enumeration")?;
    let mut out = Vec::new();
    if n == 0 {
        out.push(SetPartition {
            n: 0,
            rgs: Vec::new(),
        });
        return Ok(out);
    }
    let mut rgs = vec![0u8; n];
    // prefix_max[i] = max(rgs[0..=i])
    let mut prefix_max = vec![0u8; n];
    loop {
        out.push(SetPartition {
            n,
            rgs: rgs.clone(),
        });
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if rgs[i] <= prefix_max[i - 1] {
                rgs[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

fn same_n(p: &SetPartition, q: &SetPartition) -> Result<()> {
    if p.n != q.n {
        Err(Error::MismatchedGroundSets {
            left: p.n,
            right: q.n,
        })
    } else {
        Ok(())
    }
}

/// `∼_p ⊆ ∼_q`: every block of `p` lies inside a block of `q`.
pub fn refines(p: &SetPartition, q: &SetPartition) -> Result<bool> {
    same_n(p, q)?;
    let mut image = vec![None; p.block_count()];
    for (a, b) in p.rgs.iter().zip(&q.rgs) {
        match image[*a as usize] {
            None => image[*a as usize] = Some(*b),
            Some(prev) if prev != *b => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// The partition `‾∼′` of the blocks of `p` grouping those that share a block of `q`.
pub fn induced_partition(p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
    if !refines(p, q)? {
        return Err(Error::NotARefinement);
    }
    let mut labels = vec![0usize; p.block_count()];
    for (a, b) in p.rgs.iter().zip(&q.rgs) {
        labels[*a as usize] = *b as usize;
    }
    Ok(SetPartition::normalized(&labels))
}

fn check_ground(f: &BooleanFunction, p: &SetPartition) -> Result<()> {
    if f.n() != p.n {
        Err(Error::MismatchedGroundSets {
            left: f.n(),
            right: p.n,
        })
    } else {
        Ok(())
    }
}

/// `(f/∼)(A) = f(⋃ A)` on the quotient ground set of blocks.
pub fn contract(f: &BooleanFunction, p: &SetPartition) -> Result<BooleanFunction> {
    check_ground(f, p)?;
    Ok(contract_blocks(f, &p.blocks()))
}

/// Contraction by an explicit list of disjoint blocks, in the given order.
pub(crate) fn contract_blocks(f: &BooleanFunction, blocks: &[Mask]) -> BooleanFunction {
    let k = blocks.len();
    let mut pre = vec![0 as Mask; 1 << k];
    for a in 1..pre.len() {
        pre[a] = pre[a & (a - 1)] | blocks[a.trailing_zeros() as usize];
    }
    BooleanFunction::from_fn(k, |a| f.at(pre[a as usize])).expect("quotient is no larger than f")
}

/// `(f|∼)(A) = Σ_{Y ∈ X/∼} f(A ∩ Y)`.
pub fn restrict_by(f: &BooleanFunction, p: &SetPartition) -> Result<BooleanFunction> {
    check_ground(f, p)?;
    restrict_by_blocks(f, &p.blocks())
}

pub(crate) fn restrict_by_blocks(f: &BooleanFunction, blocks: &[Mask]) -> Result<BooleanFunction> {
    let mut values = Vec::with_capacity(1 << f.n());
    for a in 0..1u32 << f.n() {
        let mut sum = 0i64;
        for &y in blocks {
            sum = sum
                .checked_add(f.at(a & y))
                .ok_or(Error::Overflow("summing block values"))?;
        }
        values.push(sum);
    }
    BooleanFunction::new(f.n(), values)
}
