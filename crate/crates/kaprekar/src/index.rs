use std::fmt;

use serde::{Deserialize, Serialize};

use crate::base::BaseConfig;
use crate::digits::DigitString;
use crate::error::{Error, Result};

/// Digit-occurrence vector: component `i` counts how many times digit `i`
/// appears.
///
/// The transformation only ever looks at sorted digit arrangements, so this
/// vector — not the number itself — is the natural state. A base-`b` index
/// has exactly `b` components summing to the digit count `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KaprekarIndex {
    base: BaseConfig,
    counts: Vec<u32>,
}

impl KaprekarIndex {
    /// Builds an index, checking shape (`b` components) and that it
    /// describes at least one digit.
    pub fn new(base: BaseConfig, counts: Vec<u32>) -> Result<Self> {
        if counts.len() != base.get() as usize {
            return Err(Error::WrongComponentCount {
                base: base.get(),
                got: counts.len(),
            });
        }
        let total: u64 = counts.iter().map(|&c| c as u64).sum();
        if total == 0 {
            return Err(Error::EmptyIndex);
        }
        if total > u32::MAX as u64 {
            return Err(Error::DigitCountOverflow(total));
        }
        Ok(KaprekarIndex { base, counts })
    }

    /// Tallies the digits of a string into its occurrence vector.
    pub fn from_digits(digits: &DigitString) -> Self {
        let mut counts = vec![0u32; digits.base().get() as usize];
        for &d in digits.digits() {
            counts[d as usize] += 1;
        }
        KaprekarIndex {
            base: digits.base(),
            counts,
        }
    }

    pub fn base(&self) -> BaseConfig {
        self.base
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Occurrence count of one digit value.
    pub fn count(&self, digit: u8) -> u32 {
        self.counts[digit as usize]
    }

    /// Total number of digits described, `n`.
    pub fn digit_count(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// True when a single component carries all `n` digits.
    pub fn is_repdigit(&self) -> bool {
        let n = self.digit_count();
        self.counts.contains(&n)
    }

    /// The unique realization with digits in non-increasing order.
    pub fn realized_descending(&self) -> DigitString {
        let mut digits = Vec::with_capacity(self.digit_count() as usize);
        for digit in (0..self.base.get()).rev() {
            digits.extend(std::iter::repeat_n(digit, self.counts[digit as usize] as usize));
        }
        DigitString::new(self.base, digits).expect("an index always realizes a valid string")
    }

    /// The unique realization with digits in non-decreasing order.
    pub fn realized_ascending(&self) -> DigitString {
        let mut digits = Vec::with_capacity(self.digit_count() as usize);
        for digit in 0..self.base.get() {
            digits.extend(std::iter::repeat_n(digit, self.counts[digit as usize] as usize));
        }
        DigitString::new(self.base, digits).expect("an index always realizes a valid string")
    }
}

/// Sum of all digits, `Σ i·k_i`.
///
/// For any image of the transformation this is divisible by `b - 1`, the
/// base's analogue of casting out nines.
pub fn digit_sum(k: &KaprekarIndex) -> u64 {
    k.counts()
        .iter()
        .enumerate()
        .map(|(i, &c)| i as u64 * c as u64)
        .sum()
}

impl fmt::Display for KaprekarIndex {
    /// Renders the occurrence vector as `(k_0,k_1,...,k_{b-1})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
