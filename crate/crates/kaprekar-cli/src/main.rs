//! `kaprekar` — explore and verify Kaprekar's transformation in even bases.
//!
//! Subcommands:
//!
//! - `step`: apply the transformation repeatedly to one digit string.
//! - `survey`: walk a whole `(base, width)` state space and report every
//!   attractor with its class label and basin size.
//! - `enumerate`: evaluate the closed-form counts of an attractor family
//!   over a range of widths, optionally re-counting with the survey oracle.
//! - `sigma`: binary orders `sigma(r)` over a range of odd integers.
//! - `icycles`: the doubling orbits of interior digit pairs for a top digit.
//! - `compare-bfile`: regenerate a published sequence and diff it against a
//!   local OEIS-style b-file.
//! - `verify`: re-check the structural laws, the attractor catalogue, and
//!   (in base 4) the closed-form succession table over a width range.
//!
//! Exit codes are stable: `0` success, `1` verification failure, `2` usage
//! or parse error, `3` state budget exceeded. The budget defaults to
//! 50 million states and can be set with `--budget` or `KAPREKAR_BUDGET`
//! (the flag wins).

mod bfile;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::exit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use kaprekar::base4;
use kaprekar::enumeration;
use kaprekar::oracle::{self, SurveyReport, DEFAULT_STATE_BUDGET};
use kaprekar::sigma::{i_cycles, sigma};
use kaprekar::{
    kaprekar_step_subtraction, BaseConfig, ClassKind, DigitString, Error as LibError,
    KaprekarIndex,
};

use crate::report::{
    print_envelope, CompareDoc, CountRowDoc, EnumerateDoc, ICyclesDoc, ReplayDoc, SigmaRowDoc,
    StepChainDoc, StepDoc, SurveyDoc, VerifyDoc, VerifyWidthDoc,
};

/// Kaprekar's transformation on digit multisets: step it, survey whole
/// state spaces, count attractor families, and verify the catalogue.
#[derive(Parser)]
#[command(name = "kaprekar", version, about)]
struct Cli {
    /// Emit a JSON report envelope instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Cap on how many states an exhaustive walk may visit
    #[arg(long, global = true, env = "KAPREKAR_BUDGET")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the transformation repeatedly to a digit string
    Step(StepArgs),
    /// Walk a whole state space and report every attractor and its basin
    Survey(SurveyArgs),
    /// Evaluate the closed-form count of an attractor family over widths
    Enumerate(EnumerateArgs),
    /// Print binary orders sigma(r) over a range of odd integers
    Sigma(SigmaArgs),
    /// Print the doubling orbits of digit pairs for an odd top digit
    Icycles(IcyclesArgs),
    /// Compare a regenerated sequence against an OEIS-style b-file
    CompareBfile(CompareArgs),
    /// Re-check structural laws, the catalogue, and the succession table
    Verify(VerifyArgs),
}

#[derive(Args)]
struct StepArgs {
    /// Number base
    #[arg(short, long)]
    base: u8,
    /// Starting digits: contiguous up to base 10 ("0332"),
    /// comma-separated decimal values above ("31,5,0")
    #[arg(short = 'x', long)]
    start: String,
    /// How many steps to apply
    #[arg(short = 'm', long, default_value_t = 1)]
    steps: u64,
}

#[derive(Args)]
struct SurveyArgs {
    /// Number base
    #[arg(short, long)]
    base: u8,
    /// Digit count (width) of the state space
    #[arg(short = 'n', long = "width")]
    width: u32,
    /// Emit CSV instead of text
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number base
    #[arg(short, long)]
    base: u8,
    /// Attractor family to count
    #[arg(long, value_enum)]
    family: Family,
    /// Width or inclusive width range ("12" or "6..40")
    #[arg(short = 'n', long = "widths", value_parser = parse_range)]
    widths: RangeArg,
    /// Re-count each width with the exhaustive survey and show the diff
    #[arg(long)]
    check_oracle: bool,
    /// Emit CSV instead of text
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct SigmaArgs {
    /// Value or inclusive range ("9" or "3..15"); ranges visit odd r only
    #[arg(value_parser = parse_range)]
    range: RangeArg,
}

#[derive(Args)]
struct IcyclesArgs {
    /// The top digit B = b - 1; must be odd and at least 3
    top: u8,
}

#[derive(Args)]
struct CompareArgs {
    /// What the file describes
    #[arg(long, value_enum)]
    kind: CompareKind,
    /// Number base of the regenerated census (census kind only)
    #[arg(short, long)]
    base: Option<u8>,
    /// b-file of attractor values (census) or of binary orders (sigma)
    file: PathBuf,
    /// Companion b-file of cycle lengths (census kind only)
    lengths: Option<PathBuf>,
    /// Census: ignore entries with index below OFFSET.
    /// Sigma: check value at index i against sigma(2*(i+OFFSET)+1)
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    offset: i64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number base
    #[arg(short, long)]
    base: u8,
    /// Width or inclusive width range ("7" or "2..16")
    #[arg(short = 'n', long = "widths", value_parser = parse_range)]
    widths: RangeArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Symmetric fixed points
    SFp,
    /// Almost-symmetric fixed points
    AFp,
    /// Symmetric plus almost-symmetric fixed points, closed form
    SaFp,
    /// Symmetric cycles
    SCycles,
    /// Almost-symmetric cycles
    ACycles,
    /// Symmetric plus almost-symmetric cycles, closed form
    SacCycles,
    /// Zero-free fixed points
    ZeroFree,
    /// Non-symmetric cycles driven by the doubling orbits
    NonsymSigma,
    /// All fixed points (base 4 only)
    TotalFp,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::SFp => "s-fp",
            Family::AFp => "a-fp",
            Family::SaFp => "sa-fp",
            Family::SCycles => "s-cycles",
            Family::ACycles => "a-cycles",
            Family::SacCycles => "sac-cycles",
            Family::ZeroFree => "zero-free",
            Family::NonsymSigma => "nonsym-sigma",
            Family::TotalFp => "total-fp",
        }
    }

    /// Families whose closed form is defined at even widths only; range
    /// queries skip the odd widths instead of erroring.
    fn even_widths_only(self) -> bool {
        matches!(self, Family::SaFp | Family::SacCycles)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CompareKind {
    /// Attractor values (and optionally cycle lengths) in width order
    Census,
    /// Binary orders sigma(2i + 1) indexed by i
    Sigma,
}

/// An inclusive range argument: either `a..b` or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct RangeArg {
    start: u64,
    end: u64,
    single: bool,
}

impl RangeArg {
    fn iter(self) -> std::ops::RangeInclusive<u64> {
        self.start..=self.end
    }

    fn widths(self) -> Result<(u32, u32), Failure> {
        let cap = 1_000_000u64;
        if self.end > cap {
            return Err(Failure::usage(format!(
                "width {} is beyond any walkable state space",
                self.end
            )));
        }
        Ok((self.start as u32, self.end as u32))
    }

    fn describe(self) -> String {
        if self.single {
            self.start.to_string()
        } else {
            format!("{}..{}", self.start, self.end)
        }
    }
}

fn parse_range(text: &str) -> Result<RangeArg, String> {
    if let Some((a, b)) = text.split_once("..") {
        let start: u64 = a
            .trim()
            .parse()
            .map_err(|e| format!("bad range start {a:?}: {e}"))?;
        let end: u64 = b
            .trim()
            .parse()
            .map_err(|e| format!("bad range end {b:?}: {e}"))?;
        if end < start {
            return Err(format!("range {text:?} is empty"));
        }
        Ok(RangeArg {
            start,
            end,
            single: false,
        })
    } else {
        let value: u64 = text
            .trim()
            .parse()
            .map_err(|e| format!("bad value {text:?}: {e}"))?;
        Ok(RangeArg {
            start: value,
            end: value,
            single: true,
        })
    }
}

/// A hard error with its process exit code: 2 for bad input, 3 for a state
/// budget overrun. Verification *findings* are not failures — they exit 1
/// through the normal return path.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<LibError> for Failure {
    fn from(error: LibError) -> Self {
        let code = match error {
            LibError::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: error.to_string(),
        }
    }
}

struct Ctx {
    json: bool,
    budget: u64,
}

fn main() {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        budget: cli.budget.unwrap_or(DEFAULT_STATE_BUDGET),
    };
    let code = match run(&ctx, cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    exit(code as i32);
}

fn run(ctx: &Ctx, command: Command) -> Result<u8, Failure> {
    match command {
        Command::Step(args) => cmd_step(ctx, &args),
        Command::Survey(args) => cmd_survey(ctx, &args),
        Command::Enumerate(args) => cmd_enumerate(ctx, &args),
        Command::Sigma(args) => cmd_sigma(ctx, &args),
        Command::Icycles(args) => cmd_icycles(ctx, &args),
        Command::CompareBfile(args) => cmd_compare_bfile(ctx, &args),
        Command::Verify(args) => cmd_verify(ctx, &args),
    }
}

fn cmd_step(ctx: &Ctx, args: &StepArgs) -> Result<u8, Failure> {
    let base = BaseConfig::new(args.base)?;
    let start = DigitString::parse(base, &args.start)?;
    if start.is_repdigit() {
        return Err(LibError::Repdigit.into());
    }
    let mut chain = vec![StepDoc {
        step: 0,
        digits: start.to_string(),
        index: KaprekarIndex::from_digits(&start),
    }];
    let mut current = start;
    for step in 1..=args.steps {
        let next = kaprekar_step_subtraction(&current)?;
        chain.push(StepDoc {
            step,
            digits: next.to_string(),
            index: KaprekarIndex::from_digits(&next),
        });
        current = next;
    }
    if ctx.json {
        let doc = StepChainDoc {
            base: args.base,
            chain,
        };
        print_envelope(
            "step",
            json!({"base": args.base, "start": args.start, "steps": args.steps}),
            &doc,
        );
    } else {
        for entry in &chain {
            println!("{:>4}  {}  index {}", entry.step, entry.digits, entry.index);
        }
    }
    Ok(0)
}

fn cmd_survey(ctx: &Ctx, args: &SurveyArgs) -> Result<u8, Failure> {
    if ctx.json && args.csv {
        return Err(Failure::usage("choose one of --json and --csv"));
    }
    let base = BaseConfig::new(args.base)?;
    let report = oracle::survey(base, args.width, ctx.budget)?;
    let doc = SurveyDoc::from_report(&report);
    if ctx.json {
        print_envelope(
            "survey",
            json!({"base": args.base, "n": args.width, "budget": ctx.budget}),
            &doc,
        );
    } else if args.csv {
        print_survey_csv(&doc)?;
    } else {
        print_survey_text(&doc);
    }
    Ok(0)
}

fn print_survey_text(doc: &SurveyDoc) {
    println!(
        "base {}, {} digits: {} states, {} attractor{}",
        doc.base,
        doc.digit_count,
        doc.total_states,
        doc.attractors.len(),
        if doc.attractors.len() == 1 { "" } else { "s" },
    );
    for (ordinal, attractor) in doc.attractors.iter().enumerate() {
        let shape = if attractor.length == 1 {
            "fixed point".to_string()
        } else {
            format!("cycle of length {}", attractor.length)
        };
        println!(
            "  #{}: {}, class {}, basin {}",
            ordinal + 1,
            shape,
            attractor.class,
            attractor.basin_size,
        );
        println!("      {}", attractor.members.join(" -> "));
    }
    println!("unanimous: {}", if doc.unanimous { "yes" } else { "no" });
}

fn print_survey_csv(doc: &SurveyDoc) -> Result<(), Failure> {
    let mut writer = csv::Writer::from_writer(std::io::stdout());
    let io_failure = |e: csv::Error| Failure::usage(format!("cannot write CSV: {e}"));
    writer
        .write_record([
            "base",
            "n",
            "attractor",
            "length",
            "class",
            "basin_size",
            "least_member",
        ])
        .map_err(io_failure)?;
    for (ordinal, attractor) in doc.attractors.iter().enumerate() {
        writer
            .write_record([
                doc.base.to_string(),
                doc.digit_count.to_string(),
                (ordinal + 1).to_string(),
                attractor.length.to_string(),
                attractor.class.to_string(),
                attractor.basin_size.to_string(),
                attractor.least_member.clone(),
            ])
            .map_err(io_failure)?;
    }
    writer.flush().map_err(|e| Failure::usage(e.to_string()))
}

fn family_count(family: Family, base: BaseConfig, n: u32) -> kaprekar::Result<u64> {
    match family {
        Family::SFp => enumeration::count_symmetric_fp(base, n),
        Family::AFp => enumeration::count_almost_symmetric_fp(base, n),
        Family::SaFp => enumeration::count_sa_fp(base, n),
        Family::SCycles => enumeration::count_symmetric_cycles(base, n),
        Family::ACycles => enumeration::count_almost_symmetric_cycles(base, n),
        Family::SacCycles => enumeration::count_sac_cycles(base, n),
        Family::ZeroFree => enumeration::count_zero_free(base, n),
        Family::NonsymSigma => enumeration::count_nonsym_sigma(base, n),
        Family::TotalFp => Ok(enumeration::count_total_fixed_points_base4(n)),
    }
}

/// Counts the surveyed attractors that belong to `family`. The zero-free
/// arm mirrors the closed form's scope: base 4 counts the triad shape,
/// base 6 all three zero-free shapes, base 8 everything but the triads
/// (those have their own selector there).
fn family_oracle_count(family: Family, report: &SurveyReport) -> u64 {
    let tally = report.class_tally();
    let get = |kind: ClassKind| tally.get(&kind).copied().unwrap_or(0);
    match family {
        Family::SFp => get(ClassKind::SymmetricFp),
        Family::AFp => get(ClassKind::AlmostSymmetricFp),
        Family::SaFp => get(ClassKind::SymmetricFp) + get(ClassKind::AlmostSymmetricFp),
        Family::SCycles => get(ClassKind::SymmetricCycle),
        Family::ACycles => get(ClassKind::AlmostSymmetricCycle),
        Family::SacCycles => get(ClassKind::SymmetricCycle) + get(ClassKind::AlmostSymmetricCycle),
        Family::ZeroFree => match report.base {
            4 => get(ClassKind::TriadFp),
            6 => {
                get(ClassKind::UniformZeroFreeFp)
                    + get(ClassKind::TriadFp)
                    + get(ClassKind::OtherZeroFreeFp)
            }
            _ => get(ClassKind::UniformZeroFreeFp) + get(ClassKind::OtherZeroFreeFp),
        },
        Family::NonsymSigma => get(ClassKind::NonSymmetricSigmaCycle),
        Family::TotalFp => report
            .cycles
            .iter()
            .filter(|c| c.record.is_fixed_point())
            .count() as u64,
    }
}

fn cmd_enumerate(ctx: &Ctx, args: &EnumerateArgs) -> Result<u8, Failure> {
    if ctx.json && args.csv {
        return Err(Failure::usage("choose one of --json and --csv"));
    }
    let base = BaseConfig::new(args.base)?;
    if args.family == Family::TotalFp && base.get() != 4 {
        return Err(Failure::usage(
            "family total-fp has a closed form in base 4 only",
        ));
    }
    let (start, end) = args.widths.widths()?;
    let mut rows = Vec::new();
    let mut clean = true;
    for n in start..=end {
        if !args.widths.single && args.family.even_widths_only() && n % 2 != 0 {
            continue;
        }
        let count = family_count(args.family, base, n)?;
        let (oracle_count, diff) = if args.check_oracle {
            let report = oracle::survey(base, n, ctx.budget)?;
            let observed = family_oracle_count(args.family, &report);
            let diff = observed as i128 - count as i128;
            if diff != 0 {
                clean = false;
            }
            (Some(observed), Some(diff as i64))
        } else {
            (None, None)
        };
        rows.push(CountRowDoc {
            n,
            count,
            oracle: oracle_count,
            diff,
        });
    }
    let doc = EnumerateDoc {
        base: args.base,
        family: args.family.name().to_string(),
        rows,
    };
    if ctx.json {
        print_envelope(
            "enumerate",
            json!({
                "base": args.base,
                "family": args.family.name(),
                "widths": args.widths.describe(),
                "check_oracle": args.check_oracle,
                "budget": ctx.budget,
            }),
            &doc,
        );
    } else if args.csv {
        print_enumerate_csv(&doc, args.check_oracle)?;
    } else {
        print_enumerate_text(&doc, args.check_oracle);
    }
    Ok(if clean { 0 } else { 1 })
}

fn print_enumerate_text(doc: &EnumerateDoc, with_oracle: bool) {
    println!("base {}, family {}", doc.base, doc.family);
    if with_oracle {
        println!("{:>6}  {:>14}  {:>14}  {:>6}", "n", "count", "oracle", "diff");
        for row in &doc.rows {
            println!(
                "{:>6}  {:>14}  {:>14}  {:>6}",
                row.n,
                row.count,
                row.oracle.unwrap_or(0),
                row.diff.unwrap_or(0),
            );
        }
    } else {
        println!("{:>6}  {:>14}", "n", "count");
        for row in &doc.rows {
            println!("{:>6}  {:>14}", row.n, row.count);
        }
    }
}

fn print_enumerate_csv(doc: &EnumerateDoc, with_oracle: bool) -> Result<(), Failure> {
    let mut writer = csv::Writer::from_writer(std::io::stdout());
    let io_failure = |e: csv::Error| Failure::usage(format!("cannot write CSV: {e}"));
    let mut header = vec!["base", "family", "n", "count"];
    if with_oracle {
        header.extend(["oracle", "diff"]);
    }
    writer.write_record(&header).map_err(io_failure)?;
    for row in &doc.rows {
        let mut record = vec![
            doc.base.to_string(),
            doc.family.clone(),
            row.n.to_string(),
            row.count.to_string(),
        ];
        if with_oracle {
            record.push(row.oracle.unwrap_or(0).to_string());
            record.push(row.diff.unwrap_or(0).to_string());
        }
        writer.write_record(&record).map_err(io_failure)?;
    }
    writer.flush().map_err(|e| Failure::usage(e.to_string()))
}

fn cmd_sigma(ctx: &Ctx, args: &SigmaArgs) -> Result<u8, Failure> {
    let mut rows = Vec::new();
    if args.range.single {
        rows.push(SigmaRowDoc {
            r: args.range.start,
            sigma: sigma(args.range.start)?,
        });
    } else {
        for r in args.range.iter() {
            if r >= 3 && r % 2 == 1 {
                rows.push(SigmaRowDoc { r, sigma: sigma(r)? });
            }
        }
        if rows.is_empty() {
            return Err(Failure::usage(format!(
                "range {} contains no odd values of at least 3",
                args.range.describe()
            )));
        }
    }
    if ctx.json {
        print_envelope("sigma", json!({"range": args.range.describe()}), &rows);
    } else {
        for row in &rows {
            println!("sigma({}) = {}", row.r, row.sigma);
        }
    }
    Ok(0)
}

fn cmd_icycles(ctx: &Ctx, args: &IcyclesArgs) -> Result<u8, Failure> {
    let orbits = i_cycles(args.top)?;
    if ctx.json {
        let doc = ICyclesDoc {
            top: args.top,
            orbits,
        };
        print_envelope("icycles", json!({"top": args.top}), &doc);
    } else {
        println!(
            "top digit {}: {} orbit{}",
            args.top,
            orbits.len(),
            if orbits.len() == 1 { "" } else { "s" },
        );
        for orbit in &orbits {
            let parts: Vec<String> = orbit.iter().map(|i| i.to_string()).collect();
            println!("({})", parts.join(", "));
        }
    }
    Ok(0)
}

/// The integer a digit string denotes, as a big integer.
fn digit_value(digits: &DigitString) -> BigInt {
    let base = BigInt::from(digits.base().get());
    digits
        .digits()
        .iter()
        .fold(BigInt::from(0u8), |acc, &d| acc * &base + d)
}

fn read_bfile(path: &PathBuf) -> Result<bfile::BFile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    bfile::parse_bfile(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn cmd_compare_bfile(ctx: &Ctx, args: &CompareArgs) -> Result<u8, Failure> {
    let doc = match args.kind {
        CompareKind::Sigma => compare_sigma(args)?,
        CompareKind::Census => compare_census(ctx, args)?,
    };
    if ctx.json {
        print_envelope(
            "compare-bfile",
            json!({
                "kind": doc.kind,
                "base": doc.base,
                "file": args.file.display().to_string(),
                "lengths": args.lengths.as_ref().map(|p| p.display().to_string()),
                "offset": args.offset,
                "budget": ctx.budget,
            }),
            &doc,
        );
    } else {
        println!(
            "{}: {} entries, {} checked, {} skipped",
            args.file.display(),
            doc.entries,
            doc.checked,
            doc.skipped,
        );
        for warning in &doc.warnings {
            println!("warning: {warning}");
        }
        for failure in &doc.failures {
            println!("mismatch: {failure}");
        }
        println!("verdict: {}", if doc.pass { "PASS" } else { "FAIL" });
    }
    Ok(if doc.pass { 0 } else { 1 })
}

fn compare_sigma(args: &CompareArgs) -> Result<CompareDoc, Failure> {
    if args.lengths.is_some() {
        return Err(Failure::usage("sigma comparison takes a single file"));
    }
    let parsed = read_bfile(&args.file)?;
    let mut checked = 0usize;
    let mut skipped = 0usize;
    let mut failures = Vec::new();
    for entry in &parsed.entries {
        let r = 2 * (entry.index + args.offset) + 1;
        if r < 3 {
            skipped += 1;
            continue;
        }
        let expected = sigma(r as u64)?;
        if entry.value != BigInt::from(expected) {
            failures.push(format!(
                "line {}: sigma({}) = {} but the file has {}",
                entry.line, r, expected, entry.value
            ));
        }
        checked += 1;
    }
    Ok(CompareDoc {
        kind: "sigma".to_string(),
        base: None,
        entries: parsed.entries.len(),
        checked,
        skipped,
        warnings: Vec::new(),
        pass: failures.is_empty(),
        failures,
    })
}

fn compare_census(ctx: &Ctx, args: &CompareArgs) -> Result<CompareDoc, Failure> {
    let base_number = args
        .base
        .ok_or_else(|| Failure::usage("--base is required for a census comparison"))?;
    let base = BaseConfig::new(base_number)?;
    let values_file = read_bfile(&args.file)?;
    let lengths_file = args.lengths.as_ref().map(read_bfile).transpose()?;

    let values: Vec<&bfile::BFileEntry> = values_file
        .entries
        .iter()
        .filter(|e| e.index >= args.offset)
        .collect();
    let lengths: Option<Vec<&bfile::BFileEntry>> = lengths_file.as_ref().map(|f| {
        f.entries
            .iter()
            .filter(|e| e.index >= args.offset)
            .collect()
    });
    let skipped = values_file.entries.len() - values.len();

    let mut warnings = Vec::new();
    let mut failures = Vec::new();
    let mut total = values.len();
    if let Some(lens) = &lengths {
        if lens.len() != values.len() {
            warnings.push(format!(
                "value file has {} entries but length file has {}; comparing the overlap",
                values.len(),
                lens.len()
            ));
            total = total.min(lens.len());
        }
    }

    let mut checked = 0usize;
    let mut n = 2u32;
    while checked < total {
        let report = match oracle::survey(base, n, ctx.budget) {
            Ok(report) => report,
            Err(LibError::BudgetExceeded { .. }) => {
                warnings.push(format!(
                    "stopped before width {n}: state budget reached with {} entries unchecked",
                    total - checked
                ));
                break;
            }
            Err(other) => return Err(other.into()),
        };
        // Attractor values in increasing numeric order, paired with their
        // cycle lengths — the order published sequences use within a width.
        let mut block: Vec<(BigInt, u64)> = report
            .cycles
            .iter()
            .map(|c| (digit_value(c.record.least_realized()), c.record.len() as u64))
            .collect();
        block.sort();
        let take = block.len().min(total - checked);
        let file_pairs: Vec<(BigInt, Option<BigInt>)> = (checked..checked + take)
            .map(|i| {
                let length = lengths.as_ref().map(|lens| lens[i].value.clone());
                (values[i].value.clone(), length)
            })
            .collect();
        let expected_pairs: Vec<(BigInt, Option<BigInt>)> = block
            .iter()
            .map(|(value, length)| {
                let length = lengths.as_ref().map(|_| BigInt::from(*length));
                (value.clone(), length)
            })
            .collect();

        if take == block.len() {
            let mut file_sorted = file_pairs.clone();
            file_sorted.sort();
            if file_sorted == expected_pairs {
                if file_pairs != expected_pairs {
                    warnings.push(format!(
                        "width {n}: same attractors, different order within the width"
                    ));
                }
            } else {
                failures.push(describe_block_mismatch(n, &expected_pairs, &file_pairs));
                checked += take;
                break;
            }
        } else {
            // The file ends inside this width: its tail must at least be a
            // subset of the attractors the survey found.
            warnings.push(format!(
                "file ends inside width {n}: {take} of {} attractors checked",
                block.len()
            ));
            let mut pool = expected_pairs.clone();
            for pair in &file_pairs {
                match pool.iter().position(|p| p == pair) {
                    Some(at) => {
                        pool.remove(at);
                    }
                    None => {
                        failures.push(describe_block_mismatch(n, &expected_pairs, &file_pairs));
                        break;
                    }
                }
            }
        }
        checked += take;
        n += 1;
    }

    Ok(CompareDoc {
        kind: "census".to_string(),
        base: Some(base_number),
        entries: values_file.entries.len(),
        checked,
        skipped,
        warnings,
        pass: failures.is_empty(),
        failures,
    })
}

fn describe_block_mismatch(
    n: u32,
    expected: &[(BigInt, Option<BigInt>)],
    got: &[(BigInt, Option<BigInt>)],
) -> String {
    let render = |pairs: &[(BigInt, Option<BigInt>)]| {
        let parts: Vec<String> = pairs
            .iter()
            .map(|(value, length)| match length {
                Some(length) => format!("{value} (length {length})"),
                None => value.to_string(),
            })
            .collect();
        parts.join(", ")
    };
    format!(
        "width {n}: survey finds [{}] but the file has [{}]",
        render(expected),
        render(got)
    )
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs) -> Result<u8, Failure> {
    let base = BaseConfig::new(args.base)?;
    let (start, end) = args.widths.widths()?;
    let mut widths = Vec::new();
    let mut findings = Vec::new();
    let mut pass = true;
    for n in start..=end {
        let violations = oracle::property_sweep(base, n, ctx.budget)?;
        let diff = oracle::verify_against_catalogue(base, n, ctx.budget)?;
        for violation in &violations {
            findings.push(format!(
                "width {n}: [{}] at {}: {}",
                violation.property, violation.state, violation.detail
            ));
        }
        findings.extend(describe_diff(n, &diff));
        let clean = diff.is_empty();
        if !violations.is_empty() || !clean {
            pass = false;
        }
        widths.push(VerifyWidthDoc {
            n,
            states: oracle::nontrivial_states(base, n) as u64,
            property_violations: violations.len(),
            unclassified: diff.unclassified.len(),
            catalogue_clean: clean,
        });
    }
    let replay = if base.get() == 4 {
        let replayed = base4::replay_exhaustion(end)?;
        if !replayed.is_clean() {
            pass = false;
            findings.push(format!(
                "succession replay: {} guard violations, {} formula mismatches, \
                 {} excluded successors, {} interior gap violations, {} unclassified orbits",
                replayed.guard_violations,
                replayed.formula_mismatches,
                replayed.excluded_successors,
                replayed.interior_gap_violations,
                replayed.unclassified_orbits,
            ));
        }
        Some(ReplayDoc {
            max_width: end,
            states_checked: replayed.states_checked,
            clean: replayed.is_clean(),
        })
    } else {
        None
    };
    let doc = VerifyDoc {
        base: args.base,
        start,
        end,
        widths,
        replay,
        pass,
    };
    if ctx.json {
        print_envelope(
            "verify",
            json!({
                "base": args.base,
                "widths": args.widths.describe(),
                "budget": ctx.budget,
            }),
            &doc,
        );
    } else {
        println!("base {}, widths {}", doc.base, args.widths.describe());
        for width in &doc.widths {
            println!(
                "  n={}: {} states, properties {}, catalogue {}",
                width.n,
                width.states,
                if width.property_violations == 0 {
                    "ok".to_string()
                } else {
                    format!("{} violations", width.property_violations)
                },
                if width.catalogue_clean {
                    "ok".to_string()
                } else {
                    "diff".to_string()
                },
            );
        }
        if let Some(replay) = &doc.replay {
            println!(
                "  succession-table replay to width {}: {} ({} states)",
                replay.max_width,
                if replay.clean { "clean" } else { "dirty" },
                replay.states_checked,
            );
        }
        for finding in &findings {
            println!("finding: {finding}");
        }
        println!("verdict: {}", if doc.pass { "PASS" } else { "FAIL" });
    }
    Ok(if pass { 0 } else { 1 })
}

fn describe_diff(n: u32, diff: &oracle::CatalogueDiff) -> Vec<String> {
    let mut out = Vec::new();
    for record in &diff.missing_from_catalogue {
        out.push(format!(
            "width {n}: attractor not in catalogue: length {} led by {}",
            record.len(),
            record.least_realized(),
        ));
    }
    for record in &diff.not_realized {
        out.push(format!(
            "width {n}: catalogued object not realized: length {} led by {}",
            record.len(),
            record.least_realized(),
        ));
    }
    for mismatch in &diff.label_mismatches {
        out.push(format!(
            "width {n}: label mismatch at {}: observed {}, catalogued {}",
            mismatch.record.least_realized(),
            mismatch.observed,
            mismatch.expected,
        ));
    }
    for mismatch in &diff.count_mismatches {
        out.push(format!(
            "width {n}: count mismatch for {}: formula {}, surveyed {}",
            mismatch.kind, mismatch.expected, mismatch.observed,
        ));
    }
    for record in &diff.unclassified {
        out.push(format!(
            "width {n}: unclassified attractor: length {} led by {}",
            record.len(),
            record.least_realized(),
        ));
    }
    out
}
