//! Boolean functions on a finite ground set, the `⋆_{q1,q2}` products, the `θ_q` transforms
//! and canonicalization up to relabeling.
//!
//! The ground set of a function on `n` elements is `{1..n}`, stored as bit positions
//! `0..n-1`. Disjoint unions are realized by concatenation: in `f ⋆ g` the elements of
//! `f` keep the low positions and those of `g` are shifted up by `f.n()`.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::limits;

/// A map from the subsets of `{1..n}` to the integers with value 0 on the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFunction")]
pub struct BooleanFunction {
    n: usize,
    values: Vec<i64>,
}

#[derive(Deserialize)]
struct RawFunction {
    n: usize,
    values: Vec<i64>,
}

impl TryFrom<RawFunction> for BooleanFunction {
    type Error = Error;

    fn try_from(raw: RawFunction) -> Result<Self> {
        BooleanFunction::new(raw.n, raw.values)
    }
}

/// Parameters of the product `⋆_{q1,q2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPair {
    pub q1: i64,
    pub q2: i64,
}

impl QPair {
    /// The parameters of `⋆₁`, which underlies every coproduct construction.
    pub const ONE: QPair = QPair { q1: 1, q2: 1 };

    pub const fn new(q1: i64, q2: i64) -> Self {
        QPair { q1, q2 }
    }

    pub const fn equal(q: i64) -> Self {
        QPair { q1: q, q2: q }
    }
}

impl BooleanFunction {
    /// Validates and wraps a value table indexed by subset bitmask.
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self> {
        limits::check(n, limits::ARITHMETIC, "value tables")?;
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::WrongLength {
                n,
                expected,
                got: values.len(),
            });
        }
        if values[0] != 0 {
            return Err(Error::NonzeroEmptySet(values[0]));
        }
        Ok(BooleanFunction { n, values })
    }

    /// Builds a function by evaluating `value` on every nonempty subset.
    pub fn from_fn(n: usize, mut value: impl FnMut(Mask) -> i64) -> Result<Self> {
        limits::check(n, limits::ARITHMETIC, "value tables")?;
        let values = (0..1u32 << n)
            .map(|m| if m == 0 { 0 } else { value(m) })
            .collect();
        Ok(BooleanFunction { n, values })
    }

    /// The unit: the unique boolean function on the empty set.
    pub fn unit() -> Self {
        BooleanFunction {
            n: 0,
            values: vec![0],
        }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| 0)
    }

    /// The modular function `A ↦ |A|`.
    pub fn cardinality(n: usize) -> Result<Self> {
        Self::from_fn(n, |m| i64::from(m.count_ones()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    pub fn full_mask(&self) -> Mask {
        bits::full(self.n)
    }

    pub fn is_unit(&self) -> bool {
        self.n == 0
    }

    /// `f(A)`. Panics if `mask` is not a subset of the ground set.
    #[inline]
    pub fn at(&self, mask: Mask) -> i64 {
        self.values[mask as usize]
    }

    /// Value on the singleton `{i+1}`.
    #[inline]
    pub fn singleton(&self, i: usize) -> i64 {
        self.values[1 << i]
    }

    pub(crate) fn check_subset(&self, sub: Mask) -> Result<()> {
        if sub & !self.full_mask() != 0 {
            Err(Error::SubsetOutOfRange {
                mask: u64::from(sub),
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

/// `f|sub`, re-indexed onto `{1..|sub|}` preserving the order of the surviving elements.
pub fn restrict(f: &BooleanFunction, sub: Mask) -> Result<BooleanFunction> {
    f.check_subset(sub)?;
    Ok(restrict_unchecked(f, sub))
}

pub(crate) fn restrict_unchecked(f: &BooleanFunction, sub: Mask) -> BooleanFunction {
    let table = bits::expansion_table(&bits::positions(sub));
    let values = table.iter().map(|&g| f.at(g)).collect();
    BooleanFunction {
        n: sub.count_ones() as usize,
        values,
    }
}

/// Powers `q^0..=q^k`, with `None` marking those that overflow.
fn powers(q: i64, k: usize) -> Vec<Option<i64>> {
    let mut out = Vec::with_capacity(k + 1);
    let mut cur = Some(1i64);
    for _ in 0..=k {
        out.push(cur);
        cur = cur.and_then(|c| c.checked_mul(q));
    }
    out
}

fn scaled(power: Option<i64>, value: i64) -> Result<i64> {
    if value == 0 {
        return Ok(0);
    }
    power
        .and_then(|p| p.checked_mul(value))
        .ok_or(Error::Overflow("scaling a value by a power of q"))
}

/// `f ⋆_{q1,q2} g (A) = q1^{|A∩Y|} f(A∩X) + q2^{|A∩X|} g(A∩Y)` where `f` lives on the low
/// positions `X` and `g` on the high positions `Y`.
pub fn star_product(f: &BooleanFunction, g: &BooleanFunction, q: QPair) -> Result<BooleanFunction> {
    let n = f.n + g.n;
    limits::check(n, limits::ARITHMETIC, "value tables")?;
    let p1 = powers(q.q1, g.n);
    let p2 = powers(q.q2, f.n);
    let low = f.full_mask();
    let mut values = Vec::with_capacity(1 << n);
    for m in 0..1u32 << n {
        let a = m & low;
        let b = m >> f.n;
        let left = scaled(p1[b.count_ones() as usize], f.at(a))?;
        let right = scaled(p2[a.count_ones() as usize], g.at(b))?;
        values.push(
            left.checked_add(right)
                .ok_or(Error::Overflow("adding product terms"))?,
        );
    }
    Ok(BooleanFunction { n, values })
}

/// Iterated `⋆_q` product, left to right; the empty product is the unit.
pub fn star_product_all<'a>(
    factors: impl IntoIterator<Item = &'a BooleanFunction>,
    q: QPair,
) -> Result<BooleanFunction> {
    factors
        .into_iter()
        .try_fold(BooleanFunction::unit(), |acc, f| star_product(&acc, f, q))
}

/// `θ_q(f)(A) = Σ_{B⊆A} q^{|A|-|B|} f(B)`.
pub fn theta(f: &BooleanFunction, q: i64) -> Result<BooleanFunction> {
    let mut acc: Vec<i128> = f.values.iter().map(|&v| i128::from(v)).collect();
    let q = i128::from(q);
    for x in 0..f.n {
        let bit = 1usize << x;
        for m in 0..acc.len() {
            if m & bit == 0 {
                let add = q
                    .checked_mul(acc[m])
                    .ok_or(Error::Overflow("computing theta"))?;
                acc[m | bit] = acc[m | bit]
                    .checked_add(add)
                    .ok_or(Error::Overflow("computing theta"))?;
            }
        }
    }
    let values = acc
        .into_iter()
        .map(|v| i64::try_from(v).map_err(|_| Error::Overflow("computing theta")))
        .collect::<Result<Vec<_>>>()?;
    Ok(BooleanFunction { n: f.n, values })
}

/// `f_{X,λ}^{(q1,q2)}(A) = λ (q1^{|A|} - q2^{|A|}) / (q1 - q2)`, evaluated as the
/// integer sum `λ Σ_{i<k} q1^{k-1-i} q2^i` with `k = |A|`.
pub fn f_lambda(n: usize, lambda: i64, q: QPair) -> Result<BooleanFunction> {
    if q.q1 == q.q2 {
        return Err(Error::EqualParameters(q.q1));
    }
    limits::check(n, limits::ARITHMETIC, "value tables")?;
    let overflow = || Error::Overflow("evaluating f_lambda");
    let mut by_size = vec![0i64; n + 1];
    if lambda != 0 {
        let (q1, q2) = (i128::from(q.q1), i128::from(q.q2));
        let mut h: i128 = 0;
        let mut q2_pow: i128 = 1;
        for (k, slot) in by_size.iter_mut().enumerate().skip(1) {
            h = q1
                .checked_mul(h)
                .and_then(|x| x.checked_add(q2_pow))
                .ok_or_else(overflow)?;
            if k < n {
                q2_pow = q2_pow.checked_mul(q2).ok_or_else(overflow)?;
            }
            let v = h.checked_mul(i128::from(lambda)).ok_or_else(overflow)?;
            *slot = i64::try_from(v).map_err(|_| overflow())?;
        }
    }
    BooleanFunction::from_fn(n, |m| by_size[m.count_ones() as usize])
}

/// Advances `perm` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm
        .iter()
        .rposition(|&x| x > perm[i])
        .expect("a larger successor exists");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// The relabeling of `f` that sends element `sigma[i]` to position `i`.
pub fn relabel(f: &BooleanFunction, sigma: &[usize]) -> BooleanFunction {
    let table = bits::expansion_table(sigma);
    BooleanFunction {
        n: f.n,
        values: table.iter().map(|&g| f.at(g)).collect(),
    }
}

/// The lexicographically smallest value table among all relabelings of `f`.
pub fn canonical_form(f: &BooleanFunction) -> Result<BooleanFunction> {
    limits::check(f.n, limits::CANONICAL, "canonicalization")?;
    if f.n <= 1 {
        return Ok(f.clone());
    }
    let size = f.values.len();
    let mut best = f.values.clone();
    let mut pre: Vec<Mask> = vec![0; size];
    let mut perm: Vec<usize> = (0..f.n).collect();
    while next_permutation(&mut perm) {
        // Walk the candidate in mask order and stop at the first position that differs.
        let mut improving = false;
        for m in 1..size {
            let low = m.trailing_zeros() as usize;
            pre[m] = pre[m & (m - 1)] | (1 << perm[low]);
            let v = f.values[pre[m] as usize];
            if improving {
                best[m] = v;
            } else if v < best[m] {
                improving = true;
                best[m] = v;
            } else if v > best[m] {
                break;
            }
        }
    }
    Ok(BooleanFunction {
        n: f.n,
        values: best,
    })
}

pub fn is_isomorphic(f: &BooleanFunction, g: &BooleanFunction) -> Result<bool> {
    Ok(f.n == g.n && canonical_form(f)? == canonical_form(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(n: usize, values: &[i64]) -> BooleanFunction {
        BooleanFunction::new(n, values.to_vec()).unwrap()
    }

    fn star_oracle(f: &BooleanFunction, g: &BooleanFunction, q: QPair) -> Vec<i64> {
        (0..1u32 << (f.n + g.n))
            .map(|m| {
                let a = m & f.full_mask();
                let b = m >> f.n;
                q.q1.pow(b.count_ones()) * f.at(a) + q.q2.pow(a.count_ones()) * g.at(b)
            })
            .collect()
    }

    fn theta_oracle(f: &BooleanFunction, q: i64) -> Vec<i64> {
        (0..1u32 << f.n)
            .map(|a| {
                bits::submasks(a)
                    .map(|b| q.pow((a & !b).count_ones()) * f.at(b))
                    .sum()
            })
            .collect()
    }

    #[test]
    fn construction_and_validation() {
        assert_eq!(bf(1, &[0, 5]).singleton(0), 5);
        assert!(BooleanFunction::new(0, vec![0]).unwrap().is_unit());
        assert_eq!(
            BooleanFunction::new(1, vec![3, 0]),
            Err(Error::NonzeroEmptySet(3))
        );
        assert!(matches!(
            BooleanFunction::new(2, vec![0, 1]),
            Err(Error::WrongLength { .. })
        ));
        assert!(matches!(
            BooleanFunction::zero(17),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }

    #[test]
    fn restriction_examples() {
        let f = bf(2, &[0, 1, 2, 7]);
        assert_eq!(restrict(&f, 0b01).unwrap(), bf(1, &[0, 1]));
        assert_eq!(restrict(&f, 0b10).unwrap(), bf(1, &[0, 2]));
        assert_eq!(restrict(&f, 0).unwrap(), BooleanFunction::unit());
        assert!(matches!(
            restrict(&f, 0b100),
            Err(Error::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn product_examples() {
        let f = bf(1, &[0, 1]);
        let g = bf(1, &[0, 0]);
        let q = QPair::new(2, 3);
        assert_eq!(star_product(&f, &g, q).unwrap().at(0b11), 2);
        assert_eq!(star_product(&g, &f, q).unwrap().at(0b11), 3);
        let p = star_product(&bf(1, &[0, 2]), &bf(1, &[0, 3]), QPair::ONE).unwrap();
        assert_eq!(p.values(), &[0, 2, 3, 5]);
    }

    #[test]
    fn product_matches_formula() {
        let f = bf(2, &[0, 1, -2, 3]);
        let g = bf(2, &[0, 4, 0, -1]);
        for q1 in -2..=2 {
            for q2 in -2..=2 {
                let q = QPair::new(q1, q2);
                assert_eq!(
                    star_product(&f, &g, q).unwrap().values(),
                    &star_oracle(&f, &g, q)[..]
                );
            }
        }
    }

    #[test]
    fn product_overflow_is_reported() {
        let f = bf(1, &[0, i64::MAX]);
        assert!(matches!(
            star_product(&f, &f, QPair::ONE),
            Err(Error::Overflow(_))
        ));
        let big = bf(1, &[0, 1]);
        let z = BooleanFunction::zero(1).unwrap();
        // A huge power multiplied by zero is not an overflow.
        assert!(star_product(&z, &big, QPair::new(i64::MAX, 2)).is_ok());
        assert_eq!(
            star_product(&big, &z, QPair::new(3, i64::MAX))
                .unwrap()
                .values(),
            &[0, 1, 0, 3]
        );
    }

    #[test]
    fn theta_examples() {
        let f = bf(3, &[0, 1, -1, 2, 0, 3, 1, -2]);
        assert_eq!(theta(&f, 0).unwrap(), f);
        for q in -2..=2 {
            assert_eq!(theta(&f, q).unwrap().values(), &theta_oracle(&f, q)[..]);
            assert_eq!(theta(&theta(&f, q).unwrap(), -q).unwrap(), f);
        }
        // Indicator of the hyperedges {1} and {1,2}.
        let iota = bf(2, &[0, 1, 0, 1]);
        assert_eq!(theta(&iota, 1).unwrap().values(), &[0, 1, 0, 2]);
    }

    #[test]
    fn f_lambda_examples() {
        assert_eq!(f_lambda(1, 7, QPair::new(3, -1)).unwrap().values(), &[0, 7]);
        assert_eq!(
            f_lambda(2, 1, QPair::new(2, 1)).unwrap().values(),
            &[0, 1, 1, 3]
        );
        assert_eq!(
            f_lambda(2, 1, QPair::new(2, 2)),
            Err(Error::EqualParameters(2))
        );
        let q = QPair::new(2, -1);
        for (n1, n2) in [(1, 1), (1, 2), (2, 2), (0, 3)] {
            let lhs = star_product(
                &f_lambda(n1, 3, q).unwrap(),
                &f_lambda(n2, 3, q).unwrap(),
                q,
            )
            .unwrap();
            assert_eq!(lhs, f_lambda(n1 + n2, 3, q).unwrap());
        }
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_form(&bf(2, &[0, 3, 1, 4])).unwrap().values(),
            &[0, 1, 3, 4]
        );
        let one = bf(1, &[0, -4]);
        assert_eq!(canonical_form(&one).unwrap(), one);
        let f = bf(3, &[0, 5, 1, 2, 3, 9, 4, 0]);
        let c = canonical_form(&f).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), c);
    }

    #[test]
    fn canonical_is_minimum_over_relabelings() {
        let f = bf(3, &[0, 5, 1, 2, 3, 9, 4, 0]);
        let mut perm: Vec<usize> = (0..3).collect();
        let mut all = vec![relabel(&f, &perm)];
        while next_permutation(&mut perm) {
            let g = relabel(&f, &perm);
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&f).unwrap());
            all.push(g);
        }
        assert_eq!(all.len(), 6);
        let min = all.iter().map(|g| g.values().to_vec()).min().unwrap();
        assert_eq!(canonical_form(&f).unwrap().values(), &min[..]);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f = bf(2, &[0, 1, 2, 7]);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"n":2,"values":[0,1,2,7]}"#);
        assert_eq!(serde_json::from_str::<BooleanFunction>(&text).unwrap(), f);
        assert!(serde_json::from_str::<BooleanFunction>(r#"{"n":1,"values":[1,0]}"#).is_err());
    }
}
