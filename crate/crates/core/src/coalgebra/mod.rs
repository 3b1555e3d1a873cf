//! The coalgebra structure on isoclasses: formal sums, the coproducts `Δ`, `δ^W`, `δ^S`,
//! their counits, the classification predicates and a checker for the axioms relating them.

pub mod axioms;
pub mod classify;
pub mod coproducts;
pub mod formal;

pub use axioms::{
    delta_condition_failures, random_sample, restriction_condition_failures, verify_axioms, Axiom,
    AxiomEntry, AxiomReport, Witness, PRNG_ID, RANDOM_VALUE_RANGE,
};
pub use classify::{
    counitary_witness, in_bool_max, is_counitary, is_hyper_rigid, is_rigid, BoolMaxOracle,
};
pub use coproducts::{
    coproduct, coproduct_delta, coproduct_delta_s, coproduct_delta_w, epsilon_delta,
    epsilon_restriction, equivalences, strong_equivalences, weak_equivalences, Equivalences,
    Family,
};
pub use formal::{Formal, FormalSum, FormalTensorSum, FormalTripleSum};
