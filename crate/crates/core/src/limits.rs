//! Ground-set size caps. The CLI may lower these through `BOOLFUN_MAX_N`, never raise them.

/// Largest ground set for value-table arithmetic (2^16 entries).
pub const ARITHMETIC: usize = 16;
/// Largest ground set for operations that enumerate set partitions (Bell(10) = 115975).
pub const PARTITIONS: usize = 10;
/// Largest ground set for canonicalization up to relabeling (8! permutations).
pub const CANONICAL: usize = 8;
/// Largest ground set for the recursive Bool_max membership test.
pub const BOOL_MAX: usize = 5;

pub(crate) fn check(n: usize, cap: usize, what: &'static str) -> crate::Result<()> {
    if n > cap {
        Err(crate::Error::GroundSetTooLarge { n, cap, what })
    } else {
        Ok(())
    }
}
