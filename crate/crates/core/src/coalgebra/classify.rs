//! Counitary, rigid and hyper-rigid functions, and membership in `Bool_max`.

use std::collections::HashMap;

use super::coproducts::Equivalences;
use crate::bits::{self, Mask};
use crate::decomposition::{blocks_on, splits_as};
use crate::error::Result;
use crate::function::{canonical_form, restrict_unchecked, BooleanFunction, QPair};
use crate::limits;
use crate::partitions::{self, enumerate_partitions, SetPartition};

fn additive(f: &BooleanFunction, a: Mask, b: Mask) -> bool {
    i128::from(f.at(a | b)) == i128::from(f.at(a)) + i128::from(f.at(b))
}

/// Disjoint pairs of nonempty subsets `(A, B)` of `y`, each unordered pair visited once.
fn disjoint_pairs(y: Mask) -> impl Iterator<Item = (Mask, Mask)> {
    bits::submasks(y).filter(|&a| a != 0).flat_map(move |a| {
        let low_a = a & a.wrapping_neg();
        bits::submasks(y & !a)
            .filter(move |&b| b != 0 && (b & b.wrapping_neg()) > low_a)
            .map(move |b| (a, b))
    })
}

/// First partition in `E^W(f) ∖ E^S(f)`, if any.
pub fn counitary_witness(f: &BooleanFunction) -> Result<Option<SetPartition>> {
    let all = enumerate_partitions(f.n())?;
    let eq = Equivalences::new(f);
    Ok(all.into_iter().find(|p| eq.is_weak(p) && !eq.is_strong(p)))
}

/// `E^W(f) = E^S(f)`.
pub fn is_counitary(f: &BooleanFunction) -> Result<bool> {
    Ok(counitary_witness(f)?.is_none())
}

/// Inside every indecomposable component, an additive split `f(A⊔B) = f(A)+f(B)` forces
/// `f|A⊔B = f|A ⋆₁ f|B`.
pub fn is_rigid(f: &BooleanFunction) -> bool {
    blocks_on(f, f.full_mask(), QPair::ONE)
        .into_iter()
        .all(|y| {
            disjoint_pairs(y).all(|(a, b)| !additive(f, a, b) || splits_as(f, a | b, a, QPair::ONE))
        })
}

/// Inside every indecomposable component, no additive split with both parts nonempty exists.
pub fn is_hyper_rigid(f: &BooleanFunction) -> bool {
    blocks_on(f, f.full_mask(), QPair::ONE)
        .into_iter()
        .all(|y| disjoint_pairs(y).all(|(a, b)| !additive(f, a, b)))
}

/// Memoized membership test for `Bool_max`, keyed on canonical forms.
///
/// A function belongs when `E^W = E^S`, its restrictions to all `(n-1)`-subsets belong,
/// and its contractions by every non-discrete weak equivalence belong. Restrictions to
/// smaller subsets are then covered by the recursion.
#[derive(Default)]
pub struct BoolMaxOracle {
    memo: HashMap<BooleanFunction, bool>,
}

impl BoolMaxOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&mut self, f: &BooleanFunction) -> Result<bool> {
        limits::check(f.n(), limits::BOOL_MAX, "Bool_max membership")?;
        let key = canonical_form(f)?;
        Ok(self.contains_canonical(key))
    }

    fn contains_canonical(&mut self, f: BooleanFunction) -> bool {
        if f.n() <= 1 {
            return true;
        }
        if let Some(&known) = self.memo.get(&f) {
            return known;
        }
        let answer = self.decide(&f);
        self.memo.insert(f, answer);
        answer
    }

    fn decide(&mut self, f: &BooleanFunction) -> bool {
        let all = enumerate_partitions(f.n()).expect("within the Bool_max cap");
        let eq = Equivalences::new(f);
        let weak: Vec<&SetPartition> = all.iter().filter(|p| eq.is_weak(p)).collect();
        if weak.iter().any(|p| !eq.is_strong(p)) {
            return false;
        }
        let full = f.full_mask();
        for x in 0..f.n() {
            let sub = restrict_unchecked(f, full & !(1 << x));
            if !self.contains_canonical(canonical_form(&sub).expect("within the cap")) {
                return false;
            }
        }
        for p in weak.into_iter().filter(|p| !p.is_discrete()) {
            let quotient = partitions::contract_blocks(f, &p.blocks());
            if !self.contains_canonical(canonical_form(&quotient).expect("within the cap")) {
                return false;
            }
        }
        true
    }
}

pub fn in_bool_max(f: &BooleanFunction) -> Result<bool> {
    BoolMaxOracle::new().contains(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(n: usize, values: &[i64]) -> BooleanFunction {
        BooleanFunction::new(n, values.to_vec()).unwrap()
    }

    fn all_tables(n: usize, lo: i64, hi: i64) -> Vec<BooleanFunction> {
        let len = 1usize << n;
        let width = (hi - lo + 1) as usize;
        let count = width.pow((len - 1) as u32);
        (0..count)
            .map(|mut code| {
                let mut values = vec![0i64; len];
                for v in values.iter_mut().skip(1) {
                    *v = lo + (code % width) as i64;
                    code /= width;
                }
                bf(n, &values)
            })
            .collect()
    }

    #[test]
    fn disjoint_pairs_are_unordered_and_complete() {
        let pairs: Vec<_> = disjoint_pairs(0b111).collect();
        // 3 nonempty-disjoint unordered pairs of singletons plus 3 singleton-pair splits.
        assert_eq!(pairs.len(), 6);
        assert!(pairs.iter().all(|&(a, b)| a & b == 0));
    }

    #[test]
    fn everything_is_classified_true_on_two_elements() {
        for f in all_tables(2, -2, 2) {
            assert!(is_rigid(&f) && is_hyper_rigid(&f) && is_counitary(&f).unwrap());
            assert!(in_bool_max(&f).unwrap());
        }
    }

    #[test]
    fn three_element_examples() {
        let rigid_not_hyper = bf(3, &[0, 1, 1, 2, 1, 3, 3, 7]);
        assert!(is_rigid(&rigid_not_hyper));
        assert!(!is_hyper_rigid(&rigid_not_hyper));
        let max_not_rigid = bf(3, &[0, 1, 1, 2, 1, 3, 3, 3]);
        assert!(!is_rigid(&max_not_rigid));
        assert!(in_bool_max(&max_not_rigid).unwrap());
        let not_max = bf(3, &[0, 1, 1, 3, 2, 5, 5, 5]);
        assert!(!in_bool_max(&not_max).unwrap());
        assert!(!is_counitary(&not_max).unwrap());
        assert_eq!(
            counitary_witness(&not_max).unwrap().unwrap().rgs(),
            &[0, 0, 1]
        );
    }

    #[test]
    fn decomposable_three_element_functions_are_hyper_rigid() {
        for f in all_tables(3, -1, 1) {
            if blocks_on(&f, f.full_mask(), QPair::ONE).len() > 1 {
                assert!(is_hyper_rigid(&f));
            }
            if is_hyper_rigid(&f) {
                assert!(is_rigid(&f));
            }
            if is_rigid(&f) {
                assert!(in_bool_max(&f).unwrap());
                assert!(is_counitary(&f).unwrap());
            }
        }
    }

    #[test]
    fn bool_max_cap() {
        assert!(in_bool_max(&BooleanFunction::zero(6).unwrap()).is_err());
    }
}
