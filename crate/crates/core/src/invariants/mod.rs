//! The polynomial invariant `Φ`, the character `μ`, the antipode and the compatibility
//! of `Φ` with the coproducts `δ`.

pub mod antipode;
pub mod compat;
pub mod phi;
pub mod polynomial;

pub use antipode::{antipode, antipode_defect};
pub use compat::{phi_compat_report, phi_tensor, CompatReport};
pub use phi::{chromatic_polynomial, modular_partition_counts, mu, phi, phi_count};
pub use polynomial::{stirling_first_kind, BivariatePolynomial, Polynomial};
