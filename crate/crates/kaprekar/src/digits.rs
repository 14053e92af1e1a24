use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::base::BaseConfig;
use crate::error::{Error, Result};

/// A fixed-width digit sequence, most significant digit first.
///
/// Width is part of the value's identity: leading zeros are retained, so the
/// five-digit `02221` and the four-digit `2221` are different values. All
/// arithmetic in this crate happens digit-wise; strings are never collapsed
/// into machine integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitString {
    base: BaseConfig,
    digits: Vec<u8>,
}

impl DigitString {
    /// Builds a digit string, checking every digit against the base.
    pub fn new(base: BaseConfig, digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyDigitString);
        }
        if let Some(&bad) = digits.iter().find(|&&d| d >= base.get()) {
            return Err(Error::DigitOutOfRange {
                base: base.get(),
                digit: bad,
            });
        }
        Ok(DigitString { base, digits })
    }

    /// Parses text digits: one character per digit for bases up to 10
    /// (`"6174"`), comma-separated decimal values for any base (`"31,5,0"`).
    pub fn parse(base: BaseConfig, text: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::DigitParse {
            base: base.get(),
            text: text.to_string(),
            reason,
        };
        let digits: Vec<u8> = if text.contains(',') {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|e| parse_err(format!("bad component {part:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else if base.get() <= 10 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| parse_err(format!("bad character {c:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            return Err(parse_err(
                "bases above 10 need comma-separated digit values".to_string(),
            ));
        };
        if digits.is_empty() {
            return Err(parse_err("no digits".to_string()));
        }
        DigitString::new(base, digits)
    }

    pub fn base(&self) -> BaseConfig {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of digits, including leading zeros.
    pub fn width(&self) -> usize {
        self.digits.len()
    }

    /// True when every digit is the same (the transformation's dead end).
    pub fn is_repdigit(&self) -> bool {
        self.digits.iter().all(|&d| d == self.digits[0])
    }

    /// The same digits rearranged into non-increasing order.
    pub fn sorted_descending(&self) -> DigitString {
        let mut digits = self.digits.clone();
        digits.sort_unstable_by(|a, b| b.cmp(a));
        DigitString {
            base: self.base,
            digits,
        }
    }

    /// The same digits rearranged into non-decreasing order.
    pub fn sorted_ascending(&self) -> DigitString {
        let mut digits = self.digits.clone();
        digits.sort_unstable();
        DigitString {
            base: self.base,
            digits,
        }
    }
}

impl fmt::Display for DigitString {
    /// Contiguous digit characters for bases up to 10, comma-separated
    /// decimal digit values above that (`"20322"` vs `"31,5,0"`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.get() <= 10 {
            for &d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Compares two equal-width, same-base digit strings by the integers they
/// spell (most significant digit first), leading zeros and all.
pub fn compare_value(left: &DigitString, right: &DigitString) -> Result<Ordering> {
    if left.base != right.base {
        return Err(Error::BaseMismatch {
            left: left.base.get(),
            right: right.base.get(),
        });
    }
    if left.width() != right.width() {
        return Err(Error::WidthMismatch {
            left: left.width(),
            right: right.width(),
        });
    }
    Ok(left.digits.cmp(&right.digits))
}
