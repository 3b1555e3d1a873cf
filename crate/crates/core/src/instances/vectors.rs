use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::limits;

/// Columns `v_1..v_n` of length `dim` with exact rational entries.
///
/// JSON entries are `["num","den"]` pairs of decimal strings, already reduced, with a
/// positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawVectorFamily", into = "RawVectorFamily")]
pub struct VectorFamily {
    dim: usize,
    columns: Vec<Vec<BigRational>>,
}

#[derive(Serialize, Deserialize)]
struct RawVectorFamily {
    dim: usize,
    columns: Vec<Vec<[String; 2]>>,
}

impl TryFrom<RawVectorFamily> for VectorFamily {
    type Error = Error;

    fn try_from(raw: RawVectorFamily) -> Result<Self> {
        let mut columns = Vec::with_capacity(raw.columns.len());
        for (i, col) in raw.columns.iter().enumerate() {
            let mut out = Vec::with_capacity(col.len());
            for [num, den] in col {
                let parse = |s: &str| {
                    BigInt::from_str(s).map_err(|_| {
                        Error::InvalidVectorFamily(format!(
                            "column {}: {s:?} is not a decimal integer",
                            i + 1
                        ))
                    })
                };
                let (num, den) = (parse(num)?, parse(den)?);
                if !den.is_positive() {
                    return Err(Error::InvalidVectorFamily(format!(
                        "column {}: denominator {den} is not positive",
                        i + 1
                    )));
                }
                if !num.gcd(&den).is_one() {
                    return Err(Error::InvalidVectorFamily(format!(
                        "column {}: {num}/{den} is not reduced",
                        i + 1
                    )));
                }
                out.push(BigRational::new_raw(num, den));
            }
            columns.push(out);
        }
        VectorFamily::new(raw.dim, columns)
    }
}

impl From<VectorFamily> for RawVectorFamily {
    fn from(v: VectorFamily) -> Self {
        let columns = v
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|x| [x.numer().to_string(), x.denom().to_string()])
                    .collect()
            })
            .collect();
        RawVectorFamily {
            dim: v.dim,
            columns,
        }
    }
}

impl VectorFamily {
    pub fn new(dim: usize, columns: Vec<Vec<BigRational>>) -> Result<Self> {
        limits::check(columns.len(), limits::ARITHMETIC, "vector families")?;
        if let Some((i, col)) = columns.iter().enumerate().find(|(_, c)| c.len() != dim) {
            return Err(Error::InvalidVectorFamily(format!(
                "column {} has length {}, expected {dim}",
                i + 1,
                col.len()
            )));
        }
        Ok(VectorFamily { dim, columns })
    }

    /// Builds a family from integer columns.
    pub fn from_integers(dim: usize, columns: &[Vec<i64>]) -> Result<Self> {
        let columns = columns
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        VectorFamily::new(dim, columns)
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[Vec<BigRational>] {
        &self.columns
    }
}

/// The field over which ranks are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rationals,
    /// The prime field `GF(p)`, `p < 2^31`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is not below 2^31")));
        }
        if p < 2
            || (2..)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p as u32))
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `q` for the rationals, `gf:<p>` for a prime field.
    fn from_str(s: &str) -> Result<Field> {
        if s == "q" {
            return Ok(Field::Rationals);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidField(format!("expected `q` or `gf:<p>`, got {s:?}")))?;
        Field::prime(p)
    }
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let pivot_row: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

fn modular_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, &q) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - factor * q % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn reduce_mod(x: &BigRational, p: u64) -> Result<u64> {
    let modulus = BigInt::from(p);
    let residue = |v: &BigInt| v.mod_floor(&modulus).to_u64().expect("residue below p");
    let den = residue(x.denom());
    if den == 0 {
        return Err(Error::InvalidField(format!(
            "denominator {} vanishes modulo {p}",
            x.denom()
        )));
    }
    Ok(residue(x.numer()) * pow_mod(den, p - 2, p) % p)
}

/// Rows of the matrix whose columns are `v_y` for `y` in `sub`.
fn submatrix<T: Clone>(columns: &[Vec<T>], dim: usize, sub: Mask) -> Vec<Vec<T>> {
    let picked = bits::positions(sub);
    (0..dim)
        .map(|r| picked.iter().map(|&c| columns[c][r].clone()).collect())
        .collect()
}

/// `rk_V(Y)`, the rank of the columns indexed by `Y`.
pub fn linear_rank(v: &VectorFamily, field: Field) -> Result<BooleanFunction> {
    match field {
        Field::Rationals => BooleanFunction::from_fn(v.n(), |y| {
            rational_rank(submatrix(&v.columns, v.dim, y)) as i64
        }),
        Field::Prime(p) => {
            let p = u64::from(p);
            let reduced: Vec<Vec<u64>> = v
                .columns
                .iter()
                .map(|c| c.iter().map(|x| reduce_mod(x, p)).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            BooleanFunction::from_fn(v.n(), |y| {
                modular_rank(submatrix(&reduced, v.dim, y), p) as i64
            })
        }
    }
}
