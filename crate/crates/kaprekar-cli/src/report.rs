//! Machine-readable report documents.
//!
//! Every command can emit a JSON envelope with a fixed field order —
//! `schema_version`, `command`, `parameters`, `results` — so downstream
//! tooling can key on the schema before looking at the payload. The survey
//! document is also the CSV payload: both carry exactly the same numbers.

use kaprekar::oracle::SurveyReport;
use kaprekar::{ClassLabel, KaprekarIndex};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// The envelope around every JSON report. Field order is part of the
/// contract: serialization follows declaration order, and `parameters`
/// (a JSON object) keeps its keys sorted.
#[derive(Debug, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: String,
    pub parameters: serde_json::Value,
    pub results: T,
}

/// Serializes an envelope to pretty JSON on stdout.
pub fn print_envelope<T: Serialize>(command: &str, parameters: serde_json::Value, results: &T) {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        parameters,
        results,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&envelope).expect("reports always serialize")
    );
}

/// One attractor of a survey: its cycle (a fixed point has length 1), the
/// taxonomy label, and the basin draining into it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttractorDoc {
    pub length: usize,
    pub class: ClassLabel,
    pub basin_size: u64,
    /// Numerically least realized member, as a digit string.
    pub least_member: String,
    /// Every member's realized digits, in orbit order from the leader.
    pub members: Vec<String>,
    /// The same members as digit-count vectors.
    pub indices: Vec<KaprekarIndex>,
}

/// A full state-space census in serializable form. Round-trips through JSON
/// without loss.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyDoc {
    pub base: u8,
    pub digit_count: u32,
    pub total_states: u64,
    pub unanimous: bool,
    pub attractors: Vec<AttractorDoc>,
}

impl SurveyDoc {
    pub fn from_report(report: &SurveyReport) -> Self {
        let attractors = report
            .cycles
            .iter()
            .map(|census| AttractorDoc {
                length: census.record.len(),
                class: census.label.clone(),
                basin_size: census.basin_size,
                least_member: census.record.least_realized().to_string(),
                members: census
                    .record
                    .realized()
                    .iter()
                    .map(|d| d.to_string())
                    .collect(),
                indices: census.record.members().to_vec(),
            })
            .collect();
        SurveyDoc {
            base: report.base,
            digit_count: report.digit_count,
            total_states: report.total_states,
            unanimous: report.unanimous().is_some(),
            attractors,
        }
    }
}

/// One row of a counting table: the width, the closed-form count, and —
/// when the oracle was consulted — the surveyed count and the difference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountRowDoc {
    pub n: u32,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerateDoc {
    pub base: u8,
    pub family: String,
    pub rows: Vec<CountRowDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SigmaRowDoc {
    pub r: u64,
    pub sigma: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ICyclesDoc {
    pub top: u8,
    pub orbits: Vec<Vec<u32>>,
}

/// Per-width verdict of the `verify` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyWidthDoc {
    pub n: u32,
    pub states: u64,
    pub property_violations: usize,
    pub unclassified: usize,
    pub catalogue_clean: bool,
}

/// Summary of the closed-form succession replay (base 4 only).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplayDoc {
    pub max_width: u32,
    pub states_checked: u64,
    pub clean: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub base: u8,
    pub start: u32,
    pub end: u32,
    pub widths: Vec<VerifyWidthDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<ReplayDoc>,
    pub pass: bool,
}

/// Outcome of a b-file comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<u8>,
    pub entries: usize,
    pub checked: usize,
    pub skipped: usize,
    pub warnings: Vec<String>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// One step of a transformation chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepDoc {
    pub step: u64,
    pub digits: String,
    pub index: KaprekarIndex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepChainDoc {
    pub base: u8,
    pub chain: Vec<StepDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use kaprekar::oracle::survey;
    use kaprekar::BaseConfig;

    fn doc(b: u8, n: u32) -> SurveyDoc {
        let report = survey(BaseConfig::new(b).unwrap(), n, 1_000_000).unwrap();
        SurveyDoc::from_report(&report)
    }

    #[test]
    fn survey_doc_round_trips_through_json() {
        for (b, n) in [(4u8, 7u32), (6, 4), (8, 2), (10, 3)] {
            let original = doc(b, n);
            let text = serde_json::to_string(&original).unwrap();
            let back: SurveyDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(back, original, "base {b}, n {n}");
        }
    }

    #[test]
    fn envelope_round_trips_and_keeps_field_order() {
        let original = doc(6, 4);
        let envelope = Envelope {
            schema_version: SCHEMA_VERSION,
            command: "survey".to_string(),
            parameters: serde_json::json!({"base": 6, "n": 4}),
            results: original.clone(),
        };
        let text = serde_json::to_string_pretty(&envelope).unwrap();
        let back: Envelope<SurveyDoc> = serde_json::from_str(&text).unwrap();
        assert_eq!(back.results, original);
        assert_eq!(back.schema_version, SCHEMA_VERSION);
        assert_eq!(back.command, "survey");

        let positions: Vec<usize> = ["schema_version", "command", "parameters", "results"]
            .iter()
            .map(|key| text.find(&format!("\"{key}\"")).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn survey_doc_reflects_the_census() {
        let two_digit = doc(8, 2);
        assert_eq!(two_digit.attractors.len(), 2);
        assert!(!two_digit.unanimous);
        let basins: u64 = two_digit.attractors.iter().map(|a| a.basin_size).sum();
        assert_eq!(basins, two_digit.total_states);

        let seven_digit = doc(4, 7);
        assert!(seven_digit.unanimous);
        assert_eq!(seven_digit.attractors[0].length, 1);
    }
}
