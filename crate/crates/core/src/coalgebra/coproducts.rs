//! The restriction coproduct `Δ`, the equivalence families `E^W` and `E^S`, and the
//! contraction-restriction coproducts `δ^W` and `δ^S`.

use serde::{Deserialize, Serialize};

use super::formal::{FormalSum, FormalTensorSum};
use crate::bits::{self, Mask};
use crate::decomposition::{ic, indecomposable_on, is_modular};
use crate::error::Result;
use crate::function::{restrict_unchecked, BooleanFunction, QPair};
use crate::limits;
use crate::partitions::{self, enumerate_partitions, SetPartition};

/// Which equivalence family defines `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Weak equivalences: every block restriction is indecomposable.
    W,
    /// Strong equivalences: weak, and contraction preserves the component count.
    S,
}

/// `ind[mask]` is whether `f|mask` is indecomposable under `⋆₁`; `ind[0]` is false.
pub(crate) fn indecomposable_table(f: &BooleanFunction) -> Vec<bool> {
    (0..1u32 << f.n())
        .map(|m| m != 0 && indecomposable_on(f, m, QPair::ONE))
        .collect()
}

/// Precomputed data for membership tests of `E^W(f)` and `E^S(f)`.
pub struct Equivalences<'a> {
    f: &'a BooleanFunction,
    ind: Vec<bool>,
    ic_f: usize,
}

impl<'a> Equivalences<'a> {
    pub fn new(f: &'a BooleanFunction) -> Self {
        Equivalences {
            f,
            ind: indecomposable_table(f),
            ic_f: ic(f),
        }
    }

    pub fn is_weak(&self, p: &SetPartition) -> bool {
        p.blocks().iter().all(|&b| self.ind[b as usize])
    }

    pub fn is_strong(&self, p: &SetPartition) -> bool {
        self.is_weak(p) && ic(&partitions::contract_blocks(self.f, &p.blocks())) == self.ic_f
    }

    pub fn contains(&self, family: Family, p: &SetPartition) -> bool {
        match family {
            Family::W => self.is_weak(p),
            Family::S => self.is_strong(p),
        }
    }
}

/// `E^W(f)` or `E^S(f)`, in lexicographic order of restricted-growth strings.
pub fn equivalences(f: &BooleanFunction, family: Family) -> Result<Vec<SetPartition>> {
    let all = enumerate_partitions(f.n())?;
    let eq = Equivalences::new(f);
    Ok(all.into_iter().filter(|p| eq.contains(family, p)).collect())
}

pub fn weak_equivalences(f: &BooleanFunction) -> Result<Vec<SetPartition>> {
    equivalences(f, Family::W)
}

pub fn strong_equivalences(f: &BooleanFunction) -> Result<Vec<SetPartition>> {
    equivalences(f, Family::S)
}

/// `Δ(f̄) = Σ_{X′⊔X″=X} f̄|X′ ⊗ f̄|X″`.
pub fn coproduct_delta(f: &BooleanFunction) -> Result<FormalTensorSum> {
    limits::check(f.n(), limits::CANONICAL, "canonicalization")?;
    let full = f.full_mask();
    let mut out = FormalTensorSum::new();
    for x in bits::submasks(full) {
        out.add_canonical(
            &restrict_unchecked(f, x),
            &restrict_unchecked(f, full & !x),
            1.into(),
        )?;
    }
    Ok(out)
}

/// The split `(f|X′, f|X″)` terms of `Δ` before canonicalization, with `X′` given as a mask.
pub(crate) fn splits(
    f: &BooleanFunction,
) -> impl Iterator<Item = (Mask, BooleanFunction, BooleanFunction)> + '_ {
    let full = f.full_mask();
    bits::submasks(full).map(move |x| {
        (
            x,
            restrict_unchecked(f, x),
            restrict_unchecked(f, full & !x),
        )
    })
}

/// `δ(f̄) = Σ_{∼∈E(f)} f̄/∼ ⊗ f̄|∼` for the chosen family.
pub fn coproduct(f: &BooleanFunction, family: Family) -> Result<FormalTensorSum> {
    limits::check(f.n(), limits::CANONICAL, "canonicalization")?;
    let mut out = FormalTensorSum::new();
    for p in equivalences(f, family)? {
        let blocks = p.blocks();
        let quotient = partitions::contract_blocks(f, &blocks);
        let restricted = partitions::restrict_by_blocks(f, &blocks)?;
        out.add_canonical(&quotient, &restricted, 1.into())?;
    }
    Ok(out)
}

pub fn coproduct_delta_w(f: &BooleanFunction) -> Result<FormalTensorSum> {
    coproduct(f, Family::W)
}

pub fn coproduct_delta_s(f: &BooleanFunction) -> Result<FormalTensorSum> {
    coproduct(f, Family::S)
}

/// `ε_δ`: 1 on modular functions, 0 otherwise.
pub fn epsilon_delta(f: &BooleanFunction) -> i64 {
    i64::from(is_modular(f))
}

/// `ε_Δ`: 1 on the unit, 0 otherwise.
pub fn epsilon_restriction(f: &BooleanFunction) -> i64 {
    i64::from(f.is_unit())
}

/// `(Id ⊗ ε_δ)` applied to a tensor sum.
pub fn apply_counit_right(t: &FormalTensorSum) -> FormalSum {
    t.terms()
        .filter(|((_, b), _)| is_modular(b))
        .map(|((a, _), c)| (a.clone(), c.clone()))
        .collect()
}

/// `(ε_δ ⊗ Id)` applied to a tensor sum.
pub fn apply_counit_left(t: &FormalTensorSum) -> FormalSum {
    t.terms()
        .filter(|((a, _), _)| is_modular(a))
        .map(|((_, b), c)| (b.clone(), c.clone()))
        .collect()
}

/// `(ε_Δ ⊗ Id)` applied to a tensor sum.
pub fn apply_restriction_counit_left(t: &FormalTensorSum) -> FormalSum {
    t.terms()
        .filter(|((a, _), _)| a.is_unit())
        .map(|((_, b), c)| (b.clone(), c.clone()))
        .collect()
}
