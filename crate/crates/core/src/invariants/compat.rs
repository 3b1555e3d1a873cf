//! Comparison of `(Φ⊗Φ)∘δ^W`, `(Φ⊗Φ)∘δ^S` and `δ∘Φ` as polynomials in `T, T′`.

use serde::Serialize;

use super::phi::phi;
use super::polynomial::BivariatePolynomial;
use crate::coalgebra::classify::is_counitary;
use crate::coalgebra::coproducts::{coproduct, Family};
use crate::coalgebra::formal::FormalTensorSum;
use crate::error::Result;
use crate::function::BooleanFunction;

/// `(Φ ⊗ Φ)(t)` under `P ⊗ Q ↦ P(T)Q(T′)`.
pub fn phi_tensor(t: &FormalTensorSum) -> Result<BivariatePolynomial> {
    let mut out = BivariatePolynomial::zero();
    for ((a, b), c) in t.terms() {
        out = &out + &(&BivariatePolynomial::tensor(&phi(a)?, &phi(b)?) * c);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    pub input: BooleanFunction,
    pub phi_delta_w: BivariatePolynomial,
    pub phi_delta_s: BivariatePolynomial,
    pub delta_phi: BivariatePolynomial,
    pub w_equals_s: bool,
    pub w_equals_delta_phi: bool,
    pub s_equals_delta_phi: bool,
    pub counitary: bool,
    /// `w_equals_delta_phi == counitary`, which is expected for every input.
    pub consistent: bool,
}

pub fn phi_compat_report(f: &BooleanFunction) -> Result<CompatReport> {
    let phi_delta_w = phi_tensor(&coproduct(f, Family::W)?)?;
    let phi_delta_s = phi_tensor(&coproduct(f, Family::S)?)?;
    let delta_phi = BivariatePolynomial::of_product(&phi(f)?);
    let counitary = is_counitary(f)?;
    let w_equals_delta_phi = phi_delta_w == delta_phi;
    Ok(CompatReport {
        input: f.clone(),
        w_equals_s: phi_delta_w == phi_delta_s,
        s_equals_delta_phi: phi_delta_s == delta_phi,
        w_equals_delta_phi,
        counitary,
        consistent: w_equals_delta_phi == counitary,
        phi_delta_w,
        phi_delta_s,
        delta_phi,
    })
}
