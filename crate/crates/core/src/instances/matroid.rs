use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// `0 ≤ f(A) ≤ |A|`, `f` increasing, and `f` submodular.
///
/// Monotonicity and submodularity are checked in their local forms, adding one or two
/// elements at a time, which are equivalent to the global inequalities over all pairs.
pub fn is_matroid_rank(f: &BooleanFunction) -> bool {
    let n = f.n();
    (0..1u32 << n).all(|a| {
        let fa = f.at(a);
        if fa < 0 || fa > i64::from(a.count_ones()) {
            return false;
        }
        let outside: Vec<usize> = (0..n).filter(|&x| a & (1 << x) == 0).collect();
        outside.iter().enumerate().all(|(i, &x)| {
            let fx = f.at(a | 1 << x);
            fx >= fa
                && outside[i + 1..].iter().all(|&y| {
                    i128::from(f.at(a | 1 << x | 1 << y)) + i128::from(fa)
                        <= i128::from(fx) + i128::from(f.at(a | 1 << y))
                })
        })
    })
}

/// Greedy extension of the independent set `start` by elements of `candidates`, smallest first.
fn greedy(f: &BooleanFunction, start: Mask, candidates: Mask) -> Mask {
    let mut b = start;
    for z in bits::positions(candidates) {
        if f.at(b | 1 << z) == f.at(b) + 1 {
            b |= 1 << z;
        }
    }
    b
}

/// A basis of `y`: `B ⊆ Y` with `f(B) = |B| = f(Y)`.
pub fn basis_of(f: &BooleanFunction, y: Mask) -> Result<Mask> {
    f.check_subset(y)?;
    if !is_matroid_rank(f) {
        return Err(Error::NotAMatroid);
    }
    Ok(greedy(f, 0, y))
}

/// `B_Y ⊆ Y∖Z` such that `B_Z ⊔ B_Y` is a basis of `Y`, given a basis `B_Z` of `Z ⊆ Y`.
pub fn extend_basis(f: &BooleanFunction, z: Mask, b_z: Mask, y: Mask) -> Result<Mask> {
    for m in [z, b_z, y] {
        f.check_subset(m)?;
    }
    if !is_matroid_rank(f) {
        return Err(Error::NotAMatroid);
    }
    if z & !y != 0 {
        return Err(Error::NotABasis(format!(
            "Z = {:?} is not contained in Y = {:?}",
            bits::to_elements(z),
            bits::to_elements(y)
        )));
    }
    let size = i64::from(b_z.count_ones());
    if b_z & !z != 0 || f.at(b_z) != size || f.at(z) != size {
        return Err(Error::NotABasis(format!(
            "{:?} is not a basis of {:?}",
            bits::to_elements(b_z),
            bits::to_elements(z)
        )));
    }
    let b_y = greedy(f, b_z, y & !z) & !b_z;
    assert_eq!(b_y & z, 0, "greedy extension only draws from Y∖Z");
    Ok(b_y)
}
