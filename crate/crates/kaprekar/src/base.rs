use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The numeric base the transformation operates in.
///
/// A thin validated wrapper around the radix `b >= 2`. Most of the theory
/// lives in even bases; odd bases are still accepted here because the raw
/// transformation is perfectly well defined for them, and the restriction
/// to even `b` is enforced by the layers (classification, counting) that
/// actually depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BaseConfig(u8);

impl BaseConfig {
    /// Validates `b >= 2` and wraps it.
    pub fn new(b: u8) -> Result<Self> {
        if b < 2 {
            return Err(Error::BaseTooSmall(b as u32));
        }
        Ok(BaseConfig(b))
    }

    /// The radix itself.
    pub fn get(self) -> u8 {
        self.0
    }

    /// Largest digit value, `b - 1`.
    pub fn top_digit(self) -> u8 {
        self.0 - 1
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// Number of mirror pairs strictly inside the digit range, `(b - 2) / 2`.
    ///
    /// For even `b` the digits `1..=b-2` split into pairs `(i, b-1-i)`; this
    /// count drives both the cycle machinery and the counting formulas.
    /// `None` for odd bases, where the middle digit would pair with itself.
    pub fn interior_pairs(self) -> Option<u32> {
        if self.is_even() {
            Some((self.0 as u32 - 2) / 2)
        } else {
            None
        }
    }

    /// Errors unless the base is even; `operation` names the caller in the message.
    pub fn require_even(self, operation: &'static str) -> Result<()> {
        if self.is_even() {
            Ok(())
        } else {
            Err(Error::OddBase {
                base: self.0,
                operation,
            })
        }
    }
}

impl std::fmt::Display for BaseConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
