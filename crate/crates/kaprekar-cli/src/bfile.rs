//! OEIS-style b-file parsing.
//!
//! A b-file is a plain-text table of `<index> <value>` pairs, one per line,
//! with `#` starting a comment and blank lines ignored. Indices must be
//! strictly increasing; values may be arbitrarily large, so they are kept as
//! big integers. Every diagnostic carries the 1-based line number.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

/// One data line of a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: BigInt,
    /// 1-based line in the source file, for diagnostics downstream.
    pub line: usize,
}

/// A parsed b-file: the data entries in file order.
#[derive(Debug, Clone, Default)]
pub struct BFile {
    pub entries: Vec<BFileEntry>,
}

/// A malformed b-file, pinned to the offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for BFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for BFileError {}

fn err(line: usize, message: impl Into<String>) -> BFileError {
    BFileError {
        line,
        message: message.into(),
    }
}

/// Parses b-file text. Comments (`#` to end of line) and blank lines are
/// skipped; every other line must be exactly `<index> <value>`.
pub fn parse_bfile(text: &str) -> Result<BFile, BFileError> {
    let mut entries = Vec::new();
    let mut previous: Option<i64> = None;
    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let data = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut fields = data.split_whitespace();
        let Some(first) = fields.next() else {
            continue;
        };
        let Some(second) = fields.next() else {
            return Err(err(line, "expected two fields: <index> <value>"));
        };
        if let Some(extra) = fields.next() {
            return Err(err(line, format!("unexpected third field {extra:?}")));
        }
        let index: i64 = first
            .parse()
            .map_err(|e| err(line, format!("bad index {first:?}: {e}")))?;
        let value = BigInt::from_str(second)
            .map_err(|e| err(line, format!("bad value {second:?}: {e}")))?;
        if let Some(prev) = previous {
            if index <= prev {
                return Err(err(
                    line,
                    format!("index {index} does not increase past {prev}"),
                ));
            }
        }
        previous = Some(index);
        entries.push(BFileEntry { index, value, line });
    }
    Ok(BFile { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_with_comments_and_blanks() {
        let text = "# A b-file\n\n1 3\n2 30    # inline note\n3 195\n";
        let bfile = parse_bfile(text).unwrap();
        assert_eq!(bfile.entries.len(), 3);
        assert_eq!(bfile.entries[0].index, 1);
        assert_eq!(bfile.entries[1].value, BigInt::from(30));
        assert_eq!(bfile.entries[2].line, 5);
    }

    #[test]
    fn accepts_values_beyond_machine_integers() {
        let text = "1 340282366920938463463374607431768211456\n";
        let bfile = parse_bfile(text).unwrap();
        let expected = BigInt::from(u128::MAX) + 1;
        assert_eq!(bfile.entries[0].value, expected);
    }

    #[test]
    fn rejects_malformed_lines_with_line_numbers() {
        let missing = parse_bfile("1 3\n2\n").unwrap_err();
        assert_eq!(missing.line, 2);

        let extra = parse_bfile("1 3 9\n").unwrap_err();
        assert_eq!(extra.line, 1);
        assert!(extra.message.contains("third field"));

        let bad_value = parse_bfile("# ok\n1 x\n").unwrap_err();
        assert_eq!(bad_value.line, 2);
        assert!(bad_value.message.contains("bad value"));
    }

    #[test]
    fn rejects_non_increasing_indices() {
        let error = parse_bfile("1 3\n1 4\n").unwrap_err();
        assert_eq!(error.line, 2);
        assert!(error.message.contains("does not increase"));

        let backwards = parse_bfile("5 3\n2 4\n").unwrap_err();
        assert_eq!(backwards.line, 2);
    }

    #[test]
    fn negative_indices_are_allowed_if_increasing() {
        let bfile = parse_bfile("-2 10\n-1 20\n0 30\n").unwrap();
        assert_eq!(bfile.entries.len(), 3);
        assert_eq!(bfile.entries[0].index, -2);
    }
}
