//! Enumeration caps.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt::Display;

/// Environment variable overriding every default cap.
pub const BUDGET_ENV: &str = "RANKZETA_BUDGET";

/// Caps on exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub subspaces: u64,
    pub codewords: u64,
    pub subcodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            subspaces: 10_000_000,
            codewords: 1 << 24,
            subcodes: 1_000_000,
        }
    }
}

impl Budget {
    /// Every cap set to `cap`.
    pub fn uniform(cap: u64) -> Self {
        Budget {
            subspaces: cap,
            codewords: cap,
            subcodes: cap,
        }
    }

    /// Defaults, or a uniform cap read from `RANKZETA_BUDGET` when set and valid.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map_or_else(Budget::default, Budget::uniform)
    }
}

/// `Ok(size)` if `size <= cap`, else a budget error naming `what`.
pub fn check(what: &str, size: &BigInt, cap: u64) -> Result<u64> {
    match size.to_u64() {
        Some(s) if s <= cap => Ok(s),
        _ => Err(budget_error(what, size, cap)),
    }
}

pub(crate) fn budget_error(what: &str, size: impl Display, cap: u64) -> Error {
    Error::BudgetExceeded {
        what: what.to_string(),
        size: size.to_string(),
        cap,
    }
}
