//! Dense integer polynomials in `T` and in `T, T′`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Rows `0..=k` of the signed Stirling numbers of the first kind: row `m` holds the
/// coefficients of `T(T-1)⋯(T-m+1)`, from `s(m+1, j) = s(m, j-1) - m·s(m, j)`.
pub fn stirling_first_kind(k: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for m in 0..k {
        let prev = &rows[m];
        let next = (0..=m + 1)
            .map(|j| {
                let shifted = if j > 0 {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                let kept = prev
                    .get(j)
                    .map_or_else(BigInt::zero, |c| c * BigInt::from(m));
                shifted - kept
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// Coefficients in ascending degree, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// `T^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    /// `T(T-1)⋯(T-k+1)`.
    pub fn falling_factorial(k: usize) -> Self {
        Polynomial::new(stirling_first_kind(k).pop().expect("row k exists"))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            (0..len)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &-rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
        {
            let sign = if c < &BigInt::zero() { "-" } else { "+" };
            let mag = if c < &BigInt::zero() { -c } else { c.clone() };
            match (first, sign) {
                (true, "-") => write!(f, "-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{k}")?,
            }
        }
        Ok(())
    }
}

fn parse_integer<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    BigInt::from_str(s).map_err(|_| E::custom(format!("{s:?} is not a decimal integer")))
}

#[derive(Serialize, Deserialize)]
struct RawPolynomial {
    coeffs: Vec<String>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawPolynomial {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawPolynomial::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_integer::<D::Error>(s))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(D::Error::custom("trailing zero coefficient"));
        }
        Ok(Polynomial { coeffs })
    }
}

/// `Σ c_{ij} T^i T′^j`, stored as a rectangle whose last row and last column are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariatePolynomial {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|mut r| {
                r.resize(width, BigInt::zero());
                r
            })
            .collect();
        while rows.last().is_some_and(|r| r.iter().all(Zero::is_zero)) {
            rows.pop();
        }
        let width = (0..width)
            .rev()
            .find(|&j| rows.iter().any(|r| !r[j].is_zero()))
            .map_or(0, |j| j + 1);
        for r in &mut rows {
            r.truncate(width);
        }
        BivariatePolynomial { coeffs: rows }
    }

    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    /// `P(T)·Q(T′)`, the image of `P ⊗ Q`.
    pub fn tensor(p: &Polynomial, q: &Polynomial) -> Self {
        BivariatePolynomial::new(
            p.coeffs
                .iter()
                .map(|a| q.coeffs.iter().map(|b| a * b).collect())
                .collect(),
        )
    }

    /// `P(TT′)`.
    pub fn of_product(p: &Polynomial) -> Self {
        let k = p.coeffs.len();
        BivariatePolynomial::new(
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            if i == j {
                                p.coeffs[i].clone()
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &BigInt, t2: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, row| {
            acc * t + row.iter().rev().fold(BigInt::zero(), |a, c| a * t2 + c)
        })
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let cols = self
            .coeffs
            .first()
            .map_or(0, Vec::len)
            .max(rhs.coeffs.first().map_or(0, Vec::len));
        BivariatePolynomial::new(
            (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| self.coefficient(i, j) + rhs.coefficient(i, j))
                        .collect()
                })
                .collect(),
        )
    }
}

impl Mul<&BigInt> for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, c: &BigInt) -> BivariatePolynomial {
        BivariatePolynomial::new(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawBivariate {
    coeffs: Vec<Vec<String>>,
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawBivariate {
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawBivariate::deserialize(deserializer)?;
        let rows = raw
            .coeffs
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_integer::<D::Error>(s))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(D::Error::custom("rows have different lengths"));
        }
        let p = BivariatePolynomial::new(rows.clone());
        if p.coeffs != rows {
            return Err(D::Error::custom("trailing zero row or column"));
        }
        Ok(p)
    }
}
