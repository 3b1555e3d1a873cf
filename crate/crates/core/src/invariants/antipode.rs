//! The antipode of `(H_Bool, ⋆₁, Δ)` on `Bool_max`, as `(μ ⊗ Id)∘δ^W`.

use num_bigint::BigInt;

use super::phi::mu;
use crate::coalgebra::classify::in_bool_max;
use crate::coalgebra::coproducts::{coproduct_delta_w, splits};
use crate::coalgebra::formal::FormalSum;
use crate::error::{Error, Result};
use crate::function::{star_product, BooleanFunction, QPair};

/// `S(f̄) = Σ_{∼∈E^W(f)} μ(f̄/∼)·f̄|∼`.
///
/// With `checked`, functions outside `Bool_max` are rejected, since only there is this
/// formula known to give the antipode.
pub fn antipode(f: &BooleanFunction, checked: bool) -> Result<FormalSum> {
    if checked && !in_bool_max(f)? {
        return Err(Error::NotInBoolMax);
    }
    let mut out = FormalSum::new();
    for ((quotient, restricted), c) in coproduct_delta_w(f)?.terms() {
        out.add_term(restricted.clone(), c * mu(quotient)?);
    }
    Ok(out)
}

/// `⋆₁∘(S ⊗ Id)∘Δ(f̄) - ε_Δ(f̄)·1`, which vanishes when `S` is the antipode at `f̄`.
pub fn antipode_defect(f: &BooleanFunction) -> Result<FormalSum> {
    let mut total = FormalSum::new();
    for (_, left, right) in splits(f) {
        let s_left = antipode(&left, false)?;
        for (a, c) in s_left.terms() {
            total.add_canonical(&star_product(a, &right, QPair::ONE)?, c.clone())?;
        }
    }
    if f.is_unit() {
        total.add_term(BooleanFunction::unit(), BigInt::from(-1));
    }
    Ok(total)
}
