//! Exact algebra of integer-valued boolean functions on finite sets.
//!
//! A boolean function on `{1..n}` is a table of `2^n` integers indexed by subset bitmask,
//! with value 0 on the empty set. The crate provides the two-parameter products and
//! `θ_q` transforms, the restriction coproduct `Δ`, the contraction-restriction coproducts
//! `δ^W` and `δ^S`, the classification predicates (modular, indecomposable, rigid,
//! hyper-rigid, counitary, `Bool_max`), constructors from hypergraphs and matroids, and the
//! polynomial invariant `Φ` together with the antipode it determines.

pub mod bits;
pub mod coalgebra;
pub mod decomposition;
pub mod error;
pub mod function;
pub mod instances;
pub mod invariants;
pub mod limits;
pub mod partitions;

pub use bits::Mask;
pub use coalgebra::{
    coproduct, coproduct_delta, coproduct_delta_s, coproduct_delta_w, counitary_witness,
    equivalences, in_bool_max, is_counitary, is_hyper_rigid, is_rigid, random_sample,
    strong_equivalences, verify_axioms, weak_equivalences, Axiom, AxiomEntry, AxiomReport, Family,
    FormalSum, FormalTensorSum, Witness, PRNG_ID, RANDOM_VALUE_RANGE,
};
pub use decomposition::{
    commutes, component_partition, decompose, ic, is_indecomposable, is_modular, Decomposition,
};
pub use error::{Error, Result};
pub use function::{
    canonical_form, f_lambda, is_isomorphic, relabel, restrict, star_product, theta,
    BooleanFunction, QPair,
};
pub use instances::{
    basis_of, extend_basis, gamma, graphic_rank, iota, is_connected, is_matroid_rank, linear_rank,
    Field, Hypergraph, MultiGraph, VectorFamily,
};
pub use invariants::{
    antipode, antipode_defect, chromatic_polynomial, mu, phi, phi_compat_report, phi_count,
    BivariatePolynomial, CompatReport, Polynomial,
};
pub use partitions::{
    contract, enumerate_partitions, induced_partition, refines, restrict_by, SetPartition,
};
