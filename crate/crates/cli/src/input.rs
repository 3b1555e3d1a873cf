//! Reading JSON inputs and flag values, and the CLI error type.

use std::io::Read;

use boolfun::{Mask, SetPartition};
use serde::de::DeserializeOwned;

/// An error reported as `{"error": code, "detail": detail}`.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub detail: String,
}

impl CliError {
    pub fn arguments(detail: impl Into<String>) -> Self {
        CliError {
            code: "InvalidArguments",
            detail: detail.into(),
        }
    }

    pub fn serialize(e: serde_json::Error) -> Self {
        CliError {
            code: "Serialization",
            detail: e.to_string(),
        }
    }
}

impl From<boolfun::Error> for CliError {
    fn from(e: boolfun::Error) -> Self {
        CliError {
            code: e.code(),
            detail: e.to_string(),
        }
    }
}

fn load(source: &str) -> Result<String, CliError> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(source.to_owned());
    }
    let io = |e: std::io::Error| CliError {
        code: "Io",
        detail: format!("{source}: {e}"),
    };
    if source == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(source).map_err(io)
    }
}

/// Parses a JSON document. Schema violations that the library rejects on construction
/// keep the library's error code.
pub fn read_json<T: DeserializeOwned>(source: &str) -> Result<T, CliError> {
    let text = load(source)?;
    serde_json::from_str(&text).map_err(|e| {
        let detail = e.to_string();
        CliError {
            code: library_code(&detail).unwrap_or("InvalidJson"),
            detail,
        }
    })
}

/// Recovers the library error code from a message produced inside `try_from`.
fn library_code(detail: &str) -> Option<&'static str> {
    const PREFIXES: &[(&str, &str)] = &[
        ("value table has length", "WrongLength"),
        ("value on the empty set", "NonzeroEmptySet"),
        ("ground set of size", "GroundSetTooLarge"),
        ("invalid restricted-growth string", "InvalidPartition"),
        ("invalid hypergraph", "InvalidHypergraph"),
        ("invalid multigraph", "InvalidGraph"),
        ("invalid vector family", "InvalidVectorFamily"),
        ("invalid polynomial", "InvalidPolynomial"),
        ("subset mask", "SubsetOutOfRange"),
    ];
    PREFIXES
        .iter()
        .find(|(p, _)| detail.starts_with(p))
        .map(|&(_, code)| code)
}

/// A subset given as a decimal mask or as a JSON list of 1-based elements.
pub fn parse_subset(text: &str) -> Result<Mask, CliError> {
    if let Ok(mask) = text.trim().parse::<Mask>() {
        return Ok(mask);
    }
    let items: Vec<usize> = serde_json::from_str(text).map_err(|_| {
        CliError::arguments(format!(
            "subset {text:?} is neither a mask nor a list of elements"
        ))
    })?;
    items.into_iter().try_fold(0, |mask, x| {
        if (1..=Mask::BITS as usize).contains(&x) {
            Ok(mask | 1 << (x - 1))
        } else {
            Err(CliError::arguments(format!(
                "element {x} is outside 1..={}",
                Mask::BITS
            )))
        }
    })
}

/// A partition given as `{"n","rgs"}` or as a bare restricted-growth list.
pub fn parse_partition(text: &str) -> Result<SetPartition, CliError> {
    if text.trim_start().starts_with('[') {
        let rgs: Vec<u8> = serde_json::from_str(text).map_err(|e| CliError {
            code: "InvalidPartition",
            detail: e.to_string(),
        })?;
        return Ok(SetPartition::from_rgs(rgs)?);
    }
    read_json(text)
}

/// The `BOOLFUN_MAX_N` ceiling on input ground sets. It can only tighten the library caps,
/// which apply independently.
#[derive(Clone, Copy)]
pub struct MaxN(Option<usize>);

impl MaxN {
    pub fn from_env() -> Result<MaxN, CliError> {
        match std::env::var("BOOLFUN_MAX_N") {
            Err(std::env::VarError::NotPresent) => Ok(MaxN(None)),
            Err(e) => Err(CliError {
                code: "InvalidEnvironment",
                detail: format!("BOOLFUN_MAX_N: {e}"),
            }),
            Ok(v) => v
                .trim()
                .parse()
                .map(|n| MaxN(Some(n)))
                .map_err(|_| CliError {
                    code: "InvalidEnvironment",
                    detail: format!("BOOLFUN_MAX_N = {v:?} is not a nonnegative integer"),
                }),
        }
    }

    pub fn check(self, n: usize) -> Result<(), CliError> {
        match self.0 {
            Some(cap) if n > cap => Err(boolfun::Error::GroundSetTooLarge {
                n,
                cap,
                what: "BOOLFUN_MAX_N",
            }
            .into()),
            _ => Ok(()),
        }
    }
}
