use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub const SUPPORTED_PRIMES: [u32; 3] = [2, 3, 32003];

    /// Every implemented field: ℚ, GF(2), GF(3), GF(32003).
    pub const MENU: [FieldSpec; 4] = [
        FieldSpec::Rationals,
        FieldSpec::Prime(2),
        FieldSpec::Prime(3),
        FieldSpec::Prime(32003),
    ];

    pub fn prime(p: u32) -> Result<Self> {
        if Self::SUPPORTED_PRIMES.contains(&p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::UnsupportedField(p))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    /// Stable short name used on the command line and in reports.
    pub fn short_name(self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::Prime(p) => format!("gf{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "q" | "qq" | "rationals" | "0" => Ok(FieldSpec::Rationals),
            _ => {
                let digits = lower.strip_prefix("gf").unwrap_or(&lower);
                let p: u32 = digits
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("unknown field `{s}`")))?;
                FieldSpec::prime(p)
            }
        }
    }
}
