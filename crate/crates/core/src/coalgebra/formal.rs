//! Integer linear combinations of isoclasses and of tuples of isoclasses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::function::{canonical_form, star_product, BooleanFunction, QPair};

/// A finite ℤ-linear combination of keys with no zero coefficients.
///
/// Keys are expected to be canonical; the `*_canonical` constructors enforce this.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Formal<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

/// An element of `H_Bool`.
pub type FormalSum = Formal<BooleanFunction>;
/// An element of `H_Bool ⊗ H_Bool`.
pub type FormalTensorSum = Formal<(BooleanFunction, BooleanFunction)>;
/// An element of `H_Bool^{⊗3}`.
pub type FormalTripleSum = Formal<(BooleanFunction, BooleanFunction, BooleanFunction)>;

impl<K: Ord + Clone> Formal<K> {
    pub fn new() -> Self {
        Formal {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_one(&mut self, key: K) {
        self.add_term(key, BigInt::one());
    }

    pub fn add_scaled(&mut self, other: &Formal<K>, scale: &BigInt) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn coefficient(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self - other`.
    pub fn difference(&self, other: &Formal<K>) -> Formal<K> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one());
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(
        &self,
        mut image: impl FnMut(&K) -> Result<Formal<L>>,
    ) -> Result<Formal<L>> {
        let mut out = Formal::new();
        for (k, c) in &self.terms {
            out.add_scaled(&image(k)?, c);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for Formal<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut out = Formal::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl FormalSum {
    /// The isoclass of `f` with coefficient 1.
    pub fn basis(f: &BooleanFunction) -> Result<Self> {
        let mut out = Formal::new();
        out.add_one(canonical_form(f)?);
        Ok(out)
    }

    pub fn unit() -> Self {
        let mut out = Formal::new();
        out.add_one(BooleanFunction::unit());
        out
    }

    pub fn add_canonical(&mut self, f: &BooleanFunction, coeff: BigInt) -> Result<()> {
        self.add_term(canonical_form(f)?, coeff);
        Ok(())
    }

    /// Bilinear extension of `⋆₁`.
    pub fn star1(&self, other: &FormalSum) -> Result<FormalSum> {
        let mut out = FormalSum::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_canonical(&star_product(a, b, QPair::ONE)?, ca * cb)?;
            }
        }
        Ok(out)
    }
}

impl FormalTensorSum {
    pub fn add_canonical(
        &mut self,
        a: &BooleanFunction,
        b: &BooleanFunction,
        coeff: BigInt,
    ) -> Result<()> {
        self.add_term((canonical_form(a)?, canonical_form(b)?), coeff);
        Ok(())
    }

    /// Exchanges the two tensor factors.
    pub fn swapped(&self) -> Self {
        self.terms
            .iter()
            .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<K> {
    coeff: String,
    term: K,
}

impl<K: Ord + Serialize> Serialize for Formal<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<&K>> = self
            .terms
            .iter()
            .map(|(k, c)| TermRepr {
                coeff: c.to_string(),
                term: k,
            })
            .collect();
        #[derive(Serialize)]
        struct Wrapper<'a, T> {
            terms: &'a [T],
        }
        Wrapper { terms: &terms }.serialize(serializer)
    }
}

impl<'de, K: Ord + Clone + Deserialize<'de>> Deserialize<'de> for Formal<K> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wrapper<T> {
            terms: Vec<T>,
        }
        let raw: Wrapper<TermRepr<K>> = Wrapper::deserialize(deserializer)?;
        let mut out = Formal::new();
        for t in raw.terms {
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(t.term, c);
        }
        Ok(out)
    }
}
