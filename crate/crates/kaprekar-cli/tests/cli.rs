//! End-to-end tests of the `kaprekar` binary: every subcommand, the output
//! formats, and the exit-code contract (0 success, 1 verification failure,
//! 2 usage or parse error, 3 budget exceeded).

use std::fmt::Write as _;
use std::fs;
use std::process::{Command, Output};

use num_bigint::BigInt;

use kaprekar::oracle::survey;
use kaprekar::{BaseConfig, DigitString};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kaprekar"))
        .env_remove("KAPREKAR_BUDGET")
        .args(args)
        .output()
        .expect("the binary runs")
}

fn run_with_env(args: &[&str], budget: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kaprekar"))
        .env("KAPREKAR_BUDGET", budget)
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("the binary exits normally")
}

#[test]
fn step_prints_the_two_digit_chain() {
    let output = run(&["step", "-b", "4", "-x", "03", "-m", "2"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("03") && lines[0].contains("(1,0,0,1)"));
    assert!(lines[1].contains("21") && lines[1].contains("(0,1,1,0)"));
    assert!(lines[2].contains("03"));
}

#[test]
fn step_keeps_a_fixed_point_fixed() {
    let output = run(&["step", "-b", "8", "-x", "25", "-m", "1"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert_eq!(text.matches("25").count(), 2);
}

#[test]
fn step_accepts_comma_separated_digits_above_base_ten() {
    let output = run(&["step", "-b", "12", "-x", "11,5,0", "-m", "1"]);
    assert_eq!(code(&output), 0);
    assert!(stdout(&output).contains("11,5,0"));
}

#[test]
fn step_rejects_repdigits_and_bad_digits() {
    let repdigit = run(&["step", "-b", "4", "-x", "333"]);
    assert_eq!(code(&repdigit), 2);
    assert!(stderr(&repdigit).contains("repdigit"));

    let bad = run(&["step", "-b", "4", "-x", "91"]);
    assert_eq!(code(&bad), 2);

    let contiguous_above_ten = run(&["step", "-b", "12", "-x", "1150"]);
    assert_eq!(code(&contiguous_above_ten), 2);
    assert!(stderr(&contiguous_above_ten).contains("comma-separated"));
}

#[test]
fn survey_reports_the_unanimous_seven_digit_fixed_point() {
    let output = run(&["survey", "-b", "4", "-n", "7"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("1 attractor"));
    assert!(text.contains("fixed point"));
    assert!(text.contains("unanimous: yes"));
}

#[test]
fn survey_reports_the_four_digit_base_six_cycle() {
    let output = run(&["survey", "-b", "6", "-n", "4"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("cycle of length 6"));
    assert!(text.contains("unanimous: yes"));
}

#[test]
fn survey_reports_both_two_digit_base_eight_attractors() {
    let output = run(&["survey", "-b", "8", "-n", "2"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("2 attractors"));
    assert!(text.contains("cycle of length 3"));
    assert!(text.contains("basin 21"));
    assert!(text.contains("25"));
    assert!(text.contains("basin 7"));
    assert!(text.contains("unanimous: no"));
}

#[test]
fn survey_json_envelope_is_ordered_and_complete() {
    let output = run(&["survey", "-b", "8", "-n", "2", "--json"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["command"], "survey");
    assert_eq!(value["parameters"]["base"], 8);
    assert_eq!(value["parameters"]["n"], 2);
    assert_eq!(value["results"]["total_states"], 28);
    assert_eq!(value["results"]["unanimous"], false);
    assert_eq!(value["results"]["attractors"].as_array().unwrap().len(), 2);

    let positions: Vec<usize> = ["\"schema_version\"", "\"command\"", "\"parameters\"", "\"results\""]
        .iter()
        .map(|key| text.find(key).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));

    // Parsing and re-serializing loses nothing.
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
    assert_eq!(reparsed, value);
}

#[test]
fn survey_csv_carries_the_same_numbers_as_json() {
    let csv_out = run(&["survey", "-b", "8", "-n", "2", "--csv"]);
    assert_eq!(code(&csv_out), 0);
    let csv_text = stdout(&csv_out);
    let mut lines = csv_text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "base,n,attractor,length,class,basin_size,least_member"
    );
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 2);

    let json_out = run(&["survey", "-b", "8", "-n", "2", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let attractors = value["results"]["attractors"].as_array().unwrap();
    for (row, attractor) in rows.iter().zip(attractors) {
        assert_eq!(row[0], "8");
        assert_eq!(row[1], "2");
        assert_eq!(row[3], attractor["length"].to_string());
        assert_eq!(row[5], attractor["basin_size"].to_string());
        assert_eq!(row[6], attractor["least_member"].as_str().unwrap());
    }

    let both = run(&["survey", "-b", "8", "-n", "2", "--csv", "--json"]);
    assert_eq!(code(&both), 2);
}

#[test]
fn enumerate_prints_the_twelve_digit_fixed_point_count() {
    let output = run(&["enumerate", "-b", "4", "--family", "total-fp", "-n", "12"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    let row = text.lines().last().unwrap();
    assert!(row.trim().starts_with("12"));
    assert!(row.trim().ends_with('8'));
}

#[test]
fn enumerate_range_skips_odd_widths_for_closed_forms() {
    let output = run(&["enumerate", "-b", "6", "--family", "sa-fp", "-n", "6..10"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(!text.contains("\n     7"));
    let counts: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(counts.len(), 3); // n = 6, 8, 10

    let single_odd = run(&["enumerate", "-b", "6", "--family", "sa-fp", "-n", "7"]);
    assert_eq!(code(&single_odd), 2);
}

#[test]
fn enumerate_oracle_check_passes_and_shows_columns() {
    let output = run(&[
        "enumerate",
        "-b",
        "6",
        "--family",
        "sac-cycles",
        "-n",
        "2..10",
        "--check-oracle",
    ]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("oracle"));
    assert!(text.contains("diff"));
}

#[test]
fn enumerate_rejects_total_fp_outside_base_four() {
    let output = run(&["enumerate", "-b", "6", "--family", "total-fp", "-n", "12"]);
    assert_eq!(code(&output), 2);
}

#[test]
fn enumerate_csv_has_explicit_width_column() {
    let output = run(&[
        "enumerate", "-b", "4", "--family", "total-fp", "-n", "10..12", "--csv",
    ]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "base,family,n,count");
    assert_eq!(lines.next().unwrap(), "4,total-fp,10,5");
}

#[test]
fn sigma_range_visits_odd_values_only() {
    let output = run(&["sigma", "3..15"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("sigma(9) = 3"));
    assert!(text.contains("sigma(15) = 4"));
    assert!(!text.contains("sigma(4)"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn sigma_rejects_an_explicit_even_value() {
    let output = run(&["sigma", "4"]);
    assert_eq!(code(&output), 2);
    assert!(stderr(&output).contains("odd"));
}

#[test]
fn icycles_lists_the_seven_base_sixty_four_orbits() {
    let output = run(&["icycles", "63"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("7 orbits"));
    assert!(text.contains("(1, 2, 4, 8, 16, 31)"));
    assert!(text.contains("(7, 14, 28)"));
    assert!(text.contains("(21)"));

    let even = run(&["icycles", "64"]);
    assert_eq!(code(&even), 2);
}

#[test]
fn verify_passes_for_the_catalogued_bases() {
    let output = run(&["verify", "-b", "4", "-n", "2..10"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("verdict: PASS"));
    assert!(text.contains("succession-table replay"));

    let wide = run(&["verify", "-b", "6", "-n", "2..8"]);
    assert_eq!(code(&wide), 0);
}

#[test]
fn verify_json_reports_every_width() {
    let output = run(&["verify", "-b", "4", "-n", "2..5", "--json"]);
    assert_eq!(code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["results"]["pass"], true);
    assert_eq!(value["results"]["widths"].as_array().unwrap().len(), 4);
    assert_eq!(value["results"]["replay"]["clean"], true);
}

/// The value a digit string denotes.
fn digit_value(digits: &DigitString) -> BigInt {
    let base = BigInt::from(digits.base().get());
    digits
        .digits()
        .iter()
        .fold(BigInt::from(0u8), |acc, &d| acc * &base + d)
}

/// Regenerates the census b-files (values and lengths) for widths 2..=max.
fn census_fixture(b: u8, max_width: u32) -> (String, String) {
    let base = BaseConfig::new(b).unwrap();
    let mut values = String::from("# attractor values\n");
    let mut lengths = String::from("# cycle lengths\n");
    let mut index = 1u32;
    for n in 2..=max_width {
        let report = survey(base, n, 1_000_000).unwrap();
        let mut block: Vec<(BigInt, usize)> = report
            .cycles
            .iter()
            .map(|c| (digit_value(c.record.least_realized()), c.record.len()))
            .collect();
        block.sort();
        for (value, length) in block {
            writeln!(values, "{index} {value}").unwrap();
            writeln!(lengths, "{index} {length}").unwrap();
            index += 1;
        }
    }
    (values, lengths)
}

#[test]
fn compare_bfile_census_matches_regenerated_files() {
    let dir = tempfile::tempdir().unwrap();
    let values_path = dir.path().join("values.txt");
    let lengths_path = dir.path().join("lengths.txt");
    let (values, lengths) = census_fixture(4, 8);
    fs::write(&values_path, &values).unwrap();
    fs::write(&lengths_path, &lengths).unwrap();

    let output = run(&[
        "compare-bfile",
        "--kind",
        "census",
        "-b",
        "4",
        values_path.to_str().unwrap(),
        lengths_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&output), 0);
    assert!(stdout(&output).contains("verdict: PASS"));
}

#[test]
fn compare_bfile_census_flags_a_corrupted_value() {
    let dir = tempfile::tempdir().unwrap();
    let values_path = dir.path().join("values.txt");
    let (mut values, _) = census_fixture(4, 5);
    values = values.replace("2 30", "2 31");
    fs::write(&values_path, &values).unwrap();

    let output = run(&[
        "compare-bfile",
        "--kind",
        "census",
        "-b",
        "4",
        values_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&output), 1);
    let text = stdout(&output);
    assert!(text.contains("mismatch"));
    assert!(text.contains("verdict: FAIL"));
}

#[test]
fn compare_bfile_reports_parse_errors_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "1 3\n2 x\n").unwrap();

    let output = run(&[
        "compare-bfile",
        "--kind",
        "census",
        "-b",
        "4",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&output), 2);
    assert!(stderr(&output).contains("line 2"));
}

#[test]
fn compare_bfile_sigma_checks_the_binary_orders() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sigma.txt");
    let mut text = String::from("# least m with 2^m = +-1 mod 2n+1\n0 1\n");
    for index in 1..=40u64 {
        let r = 2 * index + 1;
        writeln!(text, "{index} {}", kaprekar::sigma(r).unwrap()).unwrap();
    }
    fs::write(&path, &text).unwrap();

    let output = run(&["compare-bfile", "--kind", "sigma", path.to_str().unwrap()]);
    assert_eq!(code(&output), 0);
    let report = stdout(&output);
    assert!(report.contains("40 checked"));
    assert!(report.contains("1 skipped"));

    let corrupted = text.replace("4 3", "4 7");
    fs::write(&path, &corrupted).unwrap();
    let output = run(&["compare-bfile", "--kind", "sigma", path.to_str().unwrap()]);
    assert_eq!(code(&output), 1);
    assert!(stdout(&output).contains("sigma(9)"));
}

#[test]
fn budget_env_flag_and_exit_code() {
    let blocked = run(&["survey", "-b", "8", "-n", "30", "--budget", "1000"]);
    assert_eq!(code(&blocked), 3);

    let env_blocked = run_with_env(&["survey", "-b", "4", "-n", "7"], "10");
    assert_eq!(code(&env_blocked), 3);

    let flag_wins = run_with_env(&["survey", "-b", "4", "-n", "7", "--budget", "1000"], "10");
    assert_eq!(code(&flag_wins), 0);
}

#[test]
fn usage_errors_exit_with_code_two() {
    let unknown = run(&["frobnicate"]);
    assert_eq!(code(&unknown), 2);

    let bad_range = run(&["verify", "-b", "4", "-n", "16..2"]);
    assert_eq!(code(&bad_range), 2);

    let odd_base = run(&["verify", "-b", "5", "-n", "2..4"]);
    assert_eq!(code(&odd_base), 2);
}
