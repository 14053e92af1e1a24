//! Exhaustive ground truth: sweep every digit multiset of a given base and
//! width, build the functional graph of the transformation, and extract all
//! fixed points, cycles and basin sizes.
//!
//! The survey is the independent check on everything else in the crate: the
//! catalogue generators, the classifier and the counting formulas are each
//! compared against what the full state space actually does
//! ([`verify_against_catalogue`]), and the structural theorems behind them
//! are re-checked edge by edge ([`property_sweep`]).
//!
//! States are compositions of `n` into `b` nonnegative parts, enumerated in
//! colexicographic order through an exact rank/unrank bijection, which lets
//! the rank space be split into chunks and surveyed in parallel with a
//! deterministic merge.

use std::collections::{BTreeMap, HashMap};

use num_integer::binomial;
use rayon::prelude::*;

use crate::base::BaseConfig;
use crate::catalogue::{generate_cycles, generate_fixed_points};
use crate::classify::{classify_cycle, classify_fixed_point, symmetry_info, ClassKind, ClassLabel};
use crate::enumeration::count_catalogue;
use crate::error::{Error, Result};
use crate::index::{digit_sum, KaprekarIndex};
use crate::orbit::{canonicalize_cycle, successor_total, CycleRecord};
use crate::sigma::{predicted_symmetric_cycle_length, sigma};
use crate::transform::{difference_profile, kaprekar_step};

/// Default cap on the number of states a survey may visit.
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

/// Rank-space chunk processed per worker.
const CHUNK: u64 = 1 << 14;

/// Number of digit multisets of width `n` in the given base:
/// `C(n + b - 1, b - 1)`.
pub fn state_space_size(base: BaseConfig, n: u32) -> u128 {
    let b = base.get() as u128;
    binomial(n as u128 + b - 1, b - 1)
}

/// Number of surveyable states: all multisets except the `b` repdigits.
pub fn nontrivial_states(base: BaseConfig, n: u32) -> u128 {
    if n == 0 {
        return 0;
    }
    state_space_size(base, n) - base.get() as u128
}

/// Every non-repdigit digit multiset of width `n`, in colexicographic
/// order of the component vectors.
pub fn enumerate_indices(
    base: BaseConfig,
    n: u32,
) -> impl Iterator<Item = KaprekarIndex> + Send {
    let total = if n == 0 { 0 } else { state_space_size(base, n) as u64 };
    composition_range(base, n, 0, total).filter(|k| !k.is_repdigit())
}

/// Iterator over the compositions with colex ranks in `lo..hi`.
fn composition_range(base: BaseConfig, n: u32, lo: u64, hi: u64) -> CompositionRange {
    let counts = if lo < hi {
        unrank(base, n, lo)
    } else {
        Vec::new()
    };
    CompositionRange {
        base,
        counts,
        remaining: hi.saturating_sub(lo),
    }
}

struct CompositionRange {
    base: BaseConfig,
    counts: Vec<u32>,
    remaining: u64,
}

impl Iterator for CompositionRange {
    type Item = KaprekarIndex;

    fn next(&mut self) -> Option<KaprekarIndex> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = KaprekarIndex::new(self.base, self.counts.clone())
            .expect("compositions are well-formed indices");
        if self.remaining > 0 {
            // Colex successor: move everything below the first positive
            // interior component onto it, one step up.
            let p = self.counts[1..]
                .iter()
                .position(|&k| k > 0)
                .expect("not at the last composition")
                + 1;
            let carried = self.counts[0] + 1;
            self.counts[0] = 0;
            self.counts[p] -= 1;
            self.counts[p - 1] += carried;
        }
        Some(out)
    }
}

/// Component vector of the composition with the given colex rank.
fn unrank(base: BaseConfig, n: u32, rank: u64) -> Vec<u32> {
    let b = base.get() as usize;
    let mut remaining = rank as u128;
    let mut stops = vec![0u64; b - 1];
    // stops[j] = j + (k_0 + ... + k_j) form a strictly increasing sequence;
    // peel off the largest binomial coefficient fitting the rank, highest
    // coordinate first.
    let mut ceiling = n as u64 + b as u64 - 1;
    for j in (0..b - 1).rev() {
        let m = j as u64 + 1;
        let mut value = m - 1;
        for candidate in (m - 1..ceiling).rev() {
            if binomial(candidate as u128, m as u128) <= remaining {
                value = candidate;
                break;
            }
        }
        stops[j] = value;
        remaining -= binomial(value as u128, m as u128);
        ceiling = value;
    }
    debug_assert_eq!(remaining, 0);
    let mut counts = vec![0u32; b];
    counts[0] = stops[0] as u32;
    for j in 1..b - 1 {
        counts[j] = (stops[j] - stops[j - 1] - 1) as u32;
    }
    counts[b - 1] = (n as u64 + b as u64 - 2 - stops[b - 2]) as u32;
    counts
}

/// Colex rank of an index's component vector.
fn composition_rank(k: &KaprekarIndex) -> u64 {
    let counts = k.counts();
    let mut rank = 0u128;
    let mut prefix = 0u64;
    for (j, &c) in counts.iter().take(counts.len() - 1).enumerate() {
        prefix += c as u64;
        let stop = prefix + j as u64;
        rank += binomial(stop as u128, j as u128 + 1);
    }
    rank as u64
}

/// One terminal object of the functional graph: the cycle (or fixed point),
/// its taxonomy label, and how many states drain into it.
#[derive(Debug, Clone)]
pub struct CycleCensus {
    pub record: CycleRecord,
    pub label: ClassLabel,
    pub basin_size: u64,
}

/// Complete census of a base/width state space.
#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub base: u8,
    pub digit_count: u32,
    /// All terminal objects, ordered by colex rank of their lead member.
    pub cycles: Vec<CycleCensus>,
    /// Number of non-repdigit states surveyed.
    pub total_states: u64,
}

impl SurveyReport {
    /// The single terminal object, when the whole state space drains into
    /// one fixed point or cycle.
    pub fn unanimous(&self) -> Option<&CycleCensus> {
        match self.cycles.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }

    /// How many terminal objects fall outside the known taxonomy.
    pub fn unclassified_count(&self) -> u64 {
        self.cycles
            .iter()
            .filter(|c| c.label == ClassLabel::Unclassified)
            .count() as u64
    }

    /// Number of terminal objects of each class.
    pub fn class_tally(&self) -> BTreeMap<ClassKind, u64> {
        let mut tally = BTreeMap::new();
        for census in &self.cycles {
            *tally.entry(census.label.kind()).or_default() += 1;
        }
        tally
    }
}

fn ensure_budget(base: BaseConfig, n: u32, budget: u64) -> Result<()> {
    let required = nontrivial_states(base, n);
    if required > budget as u128 {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Walks every state of the `(base, n)` space to its terminal cycle and
/// returns the full census. Fails when the state count exceeds `budget`.
pub fn survey(base: BaseConfig, n: u32, budget: u64) -> Result<SurveyReport> {
    if n == 0 {
        return Err(Error::DomainError {
            operation: "state-space survey",
            requirement: "digit count of at least 1",
            got: n.to_string(),
        });
    }
    ensure_budget(base, n, budget)?;
    let total = state_space_size(base, n) as u64;

    let chunks: Vec<(u64, u64)> = (0..total)
        .step_by(CHUNK as usize)
        .map(|lo| (lo, (lo + CHUNK).min(total)))
        .collect();
    let partials: Vec<HashMap<KaprekarIndex, (CycleRecord, u64)>> = chunks
        .into_par_iter()
        .map(|(lo, hi)| survey_chunk(base, n, lo, hi))
        .collect::<Result<_>>()?;

    let mut merged: HashMap<KaprekarIndex, (CycleRecord, u64)> = HashMap::new();
    for partial in partials {
        for (leader, (record, basin)) in partial {
            merged
                .entry(leader)
                .and_modify(|slot| slot.1 += basin)
                .or_insert((record, basin));
        }
    }

    let mut ordered: Vec<(CycleRecord, u64)> = merged.into_values().collect();
    ordered.sort_by_key(|(record, _)| composition_rank(&record.members()[0]));

    let mut cycles = Vec::with_capacity(ordered.len());
    let mut counted = 0u64;
    for (record, basin_size) in ordered {
        let label = label_record(&record);
        counted += basin_size;
        cycles.push(CycleCensus {
            record,
            label,
            basin_size,
        });
    }
    let total_states = nontrivial_states(base, n) as u64;
    debug_assert_eq!(counted, total_states);
    Ok(SurveyReport {
        base: base.get(),
        digit_count: n,
        cycles,
        total_states,
    })
}

/// Labels a terminal object, degrading to `Unclassified` where the
/// classifier does not apply (odd bases, absorbed repdigit sinks).
fn label_record(record: &CycleRecord) -> ClassLabel {
    if record.is_fixed_point() {
        classify_fixed_point(&record.members()[0]).unwrap_or(ClassLabel::Unclassified)
    } else {
        classify_cycle(record).unwrap_or(ClassLabel::Unclassified)
    }
}

fn survey_chunk(
    base: BaseConfig,
    n: u32,
    lo: u64,
    hi: u64,
) -> Result<HashMap<KaprekarIndex, (CycleRecord, u64)>> {
    let mut memo: HashMap<KaprekarIndex, u32> = HashMap::new();
    let mut cycles: Vec<CycleRecord> = Vec::new();
    let mut basins: Vec<u64> = Vec::new();
    for state in composition_range(base, n, lo, hi) {
        if state.is_repdigit() {
            continue;
        }
        let ordinal = resolve(state, &mut memo, &mut cycles)? as usize;
        if basins.len() < cycles.len() {
            basins.resize(cycles.len(), 0);
        }
        basins[ordinal] += 1;
    }
    Ok(cycles
        .into_iter()
        .zip(basins)
        .map(|(record, basin)| (record.members()[0].clone(), (record, basin)))
        .collect())
}

/// Walks from `start` until it hits a memoized state or closes a new cycle,
/// memoizing the whole trail. Returns the cycle's ordinal in `cycles`.
fn resolve(
    start: KaprekarIndex,
    memo: &mut HashMap<KaprekarIndex, u32>,
    cycles: &mut Vec<CycleRecord>,
) -> Result<u32> {
    let mut path: Vec<KaprekarIndex> = Vec::new();
    let mut cursor = start;
    let ordinal = loop {
        if let Some(&known) = memo.get(&cursor) {
            break known;
        }
        if let Some(pos) = path.iter().position(|seen| *seen == cursor) {
            let record = canonicalize_cycle(&path[pos..])?;
            cycles.push(record);
            break (cycles.len() - 1) as u32;
        }
        path.push(cursor.clone());
        cursor = successor_total(&cursor);
    };
    for state in path {
        memo.insert(state, ordinal);
    }
    Ok(ordinal)
}

/// A terminal object whose observed label disagrees with the catalogue's.
#[derive(Debug, Clone)]
pub struct LabelMismatch {
    pub record: CycleRecord,
    pub observed: ClassLabel,
    pub expected: ClassLabel,
}

/// A class whose observed population disagrees with the counting formulas.
#[derive(Debug, Clone)]
pub struct CountMismatch {
    pub kind: ClassKind,
    pub expected: u64,
    pub observed: u64,
}

/// Differences between the surveyed state space and the catalogue plus
/// counting formulas. Discrepancies are findings, not errors.
#[derive(Debug, Clone)]
pub struct CatalogueDiff {
    pub base: u8,
    pub digit_count: u32,
    /// Terminal objects the survey found that no catalogue family produces.
    pub missing_from_catalogue: Vec<CycleRecord>,
    /// Catalogued objects that do not occur in the state space.
    pub not_realized: Vec<CycleRecord>,
    pub label_mismatches: Vec<LabelMismatch>,
    pub count_mismatches: Vec<CountMismatch>,
    /// Surveyed objects the classifier could not place.
    pub unclassified: Vec<CycleRecord>,
}

impl CatalogueDiff {
    pub fn is_empty(&self) -> bool {
        self.missing_from_catalogue.is_empty()
            && self.not_realized.is_empty()
            && self.label_mismatches.is_empty()
            && self.count_mismatches.is_empty()
            && self.unclassified.is_empty()
    }
}

/// Surveys the state space and diffs it against the catalogue generators
/// and counting formulas for the same base and width.
pub fn verify_against_catalogue(base: BaseConfig, n: u32, budget: u64) -> Result<CatalogueDiff> {
    let report = survey(base, n, budget)?;

    let mut expected: HashMap<KaprekarIndex, (CycleRecord, ClassLabel)> = HashMap::new();
    for (fp, label) in generate_fixed_points(base, n)? {
        let record = canonicalize_cycle(std::slice::from_ref(&fp))?;
        expected.insert(fp, (record, label));
    }
    for (record, label) in generate_cycles(base, n)? {
        expected.insert(record.members()[0].clone(), (record, label));
    }

    let mut diff = CatalogueDiff {
        base: base.get(),
        digit_count: n,
        missing_from_catalogue: Vec::new(),
        not_realized: Vec::new(),
        label_mismatches: Vec::new(),
        count_mismatches: Vec::new(),
        unclassified: Vec::new(),
    };

    for census in &report.cycles {
        if census.label == ClassLabel::Unclassified {
            diff.unclassified.push(census.record.clone());
        }
        match expected.remove(&census.record.members()[0]) {
            None => diff.missing_from_catalogue.push(census.record.clone()),
            Some((_, catalogue_label)) => {
                if catalogue_label != census.label {
                    diff.label_mismatches.push(LabelMismatch {
                        record: census.record.clone(),
                        observed: census.label.clone(),
                        expected: catalogue_label,
                    });
                }
            }
        }
    }
    diff.not_realized = expected.into_values().map(|(record, _)| record).collect();
    diff.not_realized
        .sort_by_key(|record| composition_rank(&record.members()[0]));

    let observed_tally = report.class_tally();
    for (kind, expected_count) in count_catalogue(base, n)? {
        let observed = observed_tally.get(&kind).copied().unwrap_or(0);
        if observed != expected_count {
            diff.count_mismatches.push(CountMismatch {
                kind,
                expected: expected_count,
                observed,
            });
        }
    }
    Ok(diff)
}

/// A state (or cycle) that breaks one of the structural theorems.
#[derive(Debug, Clone)]
pub struct PropertyViolation {
    pub property: &'static str,
    pub state: KaprekarIndex,
    pub detail: String,
}

/// Re-checks the structural theorems on every state transition of the
/// `(base, n)` space, and the cycle-level laws on every terminal object.
/// Returns all violations found — an empty list is the expected outcome.
pub fn property_sweep(base: BaseConfig, n: u32, budget: u64) -> Result<Vec<PropertyViolation>> {
    base.require_even("property sweep")?;
    ensure_budget(base, n, budget)?;
    let mut violations = Vec::new();
    for state in enumerate_indices(base, n) {
        check_edge(base, &state, &mut violations)?;
    }
    let report = survey(base, n, budget)?;
    for census in &report.cycles {
        check_cycle(base, &census.record, &mut violations)?;
    }
    Ok(violations)
}

/// Structural checks on a single transition `state -> successor`.
fn check_edge(
    base: BaseConfig,
    state: &KaprekarIndex,
    violations: &mut Vec<PropertyViolation>,
) -> Result<()> {
    let b = base.get() as u32;
    let top = (b - 1) as usize;
    let modulus = (b - 1) as u64;
    let profile = difference_profile(state)?;
    let successor = kaprekar_step(state)?;
    let next = successor.counts();
    let mut report = |property: &'static str, detail: String| {
        violations.push(PropertyViolation {
            property,
            state: state.clone(),
            detail,
        });
    };

    // The successor's digit sum is a multiple of b - 1.
    if !digit_sum(&successor).is_multiple_of(modulus) {
        report("digit-sum-multiple", format!("successor {successor}"));
    }

    // The weighted interior sum of the successor is a multiple of b - 1.
    let weighted: u64 = (1..top).map(|i| i as u64 * next[i] as u64).sum();
    if !weighted.is_multiple_of(modulus) {
        report("weighted-sum-multiple", format!("weighted sum {weighted}"));
    }

    // A balanced difference profile forces an interior-mirrored successor
    // with at least as many top digits as zeros.
    if profile.d_mu() as u32 == b - profile.d0() as u32 {
        let mirrored = (1..top).all(|i| next[i] == next[top - i]);
        if !mirrored || next[top] < next[0] {
            report("balanced-profile-mirror", format!("successor {successor}"));
        }
    }

    // Mirror components differ by at most 3, and by exactly 3 only at the
    // central pair and only when a half-base difference is present.
    for i in 1..top {
        let gap = (next[i] as i64 - next[top - i] as i64).abs();
        if gap > 3 {
            report("mirror-gap-bound", format!("components {i}/{}", top - i));
        } else if gap == 3 {
            let central = i as u32 == b / 2 || i as u32 == b / 2 - 1;
            let half_diff =
                profile.d0() as u32 == b / 2 || profile.d_mu() as u32 == b / 2;
            if !central || !half_diff {
                report(
                    "mirror-gap-three-location",
                    format!("components {i}/{}", top - i),
                );
            }
        }
    }

    // Fewer top digits than zeros can only arise one way, with exactly one
    // zero and no top digit.
    if next[top] < next[0] {
        let n = state.digit_count();
        let boundary = n.is_multiple_of(2)
            && profile.mu() == profile.nu()
            && 2 * (profile.mu() as u32 + 1) == n
            && profile.d_mu() == 1
            && (profile.d0() as u32) < b - 1;
        if !boundary || next[top] != 0 || next[0] != 1 {
            report("top-deficit-shape", format!("successor {successor}"));
        }
    }

    // The zero count never grows, except from 0 to at most 1.
    let zeros_before = state.counts()[0];
    if !(next[0] <= zeros_before || (zeros_before == 0 && next[0] <= 1)) {
        report("zero-count-monotone", format!("successor {successor}"));
    }

    // Base 4 only: the two interior components differ by 0 or 3.
    if b == 4 {
        let gap = next[1] as i64 - next[2] as i64;
        if !matches!(gap, -3 | 0 | 3) {
            report("interior-gap-base4", format!("successor {successor}"));
        }
    }
    Ok(())
}

/// Structural checks on a terminal object as a whole.
fn check_cycle(
    base: BaseConfig,
    record: &CycleRecord,
    violations: &mut Vec<PropertyViolation>,
) -> Result<()> {
    let members = record.members();

    // A member with more than one zero pins the zero count of the whole
    // cycle.
    if members.iter().any(|m| m.counts()[0] > 1) {
        let zeros = members[0].counts()[0];
        if members.iter().any(|m| m.counts()[0] != zeros) {
            violations.push(PropertyViolation {
                property: "cycle-zero-count-constant",
                state: members[0].clone(),
                detail: format!("cycle of length {}", record.len()),
            });
        }
    }

    // A symmetric or almost-symmetric member forces the cycle length
    // predicted by its interior orbit, which divides the binary order of
    // b - 1.
    for member in members {
        let info = symmetry_info(member)?;
        if info.full && (info.symmetric || info.almost_symmetric) {
            let predicted = predicted_symmetric_cycle_length(member)?;
            if predicted != record.len() as u64 {
                violations.push(PropertyViolation {
                    property: "symmetric-cycle-length",
                    state: member.clone(),
                    detail: format!("predicted {predicted}, actual {}", record.len()),
                });
            }
            let order = sigma(base.get() as u64 - 1).map(u64::from).unwrap_or(1);
            if !order.is_multiple_of(record.len() as u64) {
                violations.push(PropertyViolation {
                    property: "symmetric-length-divides-order",
                    state: member.clone(),
                    detail: format!("length {} vs order {order}", record.len()),
                });
            }
        }
    }
    Ok(())
}
