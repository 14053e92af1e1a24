//! Complete case analysis of the base-4 succession map.
//!
//! In base 4 a single application of the transformation can be written in
//! closed form. Indices with `k_0 > k_3 > 0`, or with `k_0 > 1` and
//! `k_3 = 0`, never arise as successors, so they play no role in the
//! long-run dynamics and are excluded up front. Every other non-repdigit
//! index satisfies exactly one of 44 guards, each paired with an explicit
//! formula for the successor components. The guards are grouped by zero
//! pattern:
//!
//! * `A` — all four components positive and `k_0 = k_3`,
//! * `B` — all four components positive and `k_0 < k_3`,
//! * `C`–`F` — exactly one component zero (`k_0`, `k_1`, `k_2`, `k_3`
//!   respectively),
//! * `G` — exactly two components zero (three zeros is a repdigit).
//!
//! Exactly three cases are stationary — `A(ii)`, `B(i)` with `k_1 = k_2`,
//! and `C(iv)` with `k_1 = k_2` — which is how the fixed-point catalogue
//! for base 4 is read off the table. [`replay_exhaustion`] grinds every
//! index up to a chosen width through both the formulas and the digit
//! arithmetic, confirming that the two agree, that the guards partition
//! the non-excluded states, that no successor is ever excluded, and that
//! every orbit lands in the catalogue.

use std::collections::BTreeMap;
use std::fmt;

use crate::base::BaseConfig;
use crate::error::{Error, Result};
use crate::index::KaprekarIndex;
use crate::oracle::{self, DEFAULT_STATE_BUDGET};
use crate::transform::kaprekar_step;

/// Case groups of the succession table, named by zero pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self {
            Group::A => 'A',
            Group::B => 'B',
            Group::C => 'C',
            Group::D => 'D',
            Group::E => 'E',
            Group::F => 'F',
            Group::G => 'G',
        };
        write!(f, "{letter}")
    }
}

const ROMAN: [&str; 15] = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv",
];

/// Identifier of one succession case, displayed as e.g. `B(iv)`.
///
/// `variant` is 1-based and rendered as a roman numeral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseId {
    pub group: Group,
    pub variant: u8,
}

impl CaseId {
    const fn new(group: Group, variant: u8) -> Self {
        CaseId { group, variant }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numeral = ROMAN
            .get(self.variant as usize - 1)
            .expect("case variants stay within the roman table");
        write!(f, "{}({numeral})", self.group)
    }
}

/// One row of the succession table: a guard on `(k_0, k_1, k_2, k_3)` and
/// the closed-form successor used when the guard holds.
pub struct SuccessionCase {
    id: CaseId,
    guard: fn(u32, u32, u32, u32) -> bool,
    formula: fn(u32, u32, u32, u32) -> [u32; 4],
}

impl SuccessionCase {
    pub fn id(&self) -> CaseId {
        self.id
    }

    /// Whether the guard holds for `k`. The guard alone does not decide
    /// succession: excluded indices are rejected before any guard is
    /// consulted, see [`match_case`].
    pub fn matches(&self, k: &KaprekarIndex) -> Result<bool> {
        let [k0, k1, k2, k3] = quad(k)?;
        Ok((self.guard)(k0, k1, k2, k3))
    }

    /// Applies the formula to a matching index.
    pub fn apply(&self, k: &KaprekarIndex) -> Result<KaprekarIndex> {
        let [k0, k1, k2, k3] = quad(k)?;
        if !(self.guard)(k0, k1, k2, k3) {
            return Err(Error::DomainError {
                operation: "succession-case application",
                requirement: "an index satisfying the case guard",
                got: format!("{:?} against case {}", k.counts(), self.id),
            });
        }
        let counts = (self.formula)(k0, k1, k2, k3);
        debug_assert_eq!(
            counts.iter().sum::<u32>(),
            k.digit_count(),
            "succession formulas preserve the digit count"
        );
        KaprekarIndex::new(k.base(), counts.to_vec())
    }
}

/// Outcome of dispatching an index against the succession table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseMatch {
    /// The unique case whose guard holds.
    Case(CaseId),
    /// The index can never occur as a successor (`k_0 > k_3 > 0`, or
    /// `k_0 > 1` with `k_3 = 0`); the table deliberately omits it.
    Excluded,
}

const fn case(
    group: Group,
    variant: u8,
    guard: fn(u32, u32, u32, u32) -> bool,
    formula: fn(u32, u32, u32, u32) -> [u32; 4],
) -> SuccessionCase {
    SuccessionCase {
        id: CaseId::new(group, variant),
        guard,
        formula,
    }
}

#[rustfmt::skip]
static CASES: [SuccessionCase; 44] = [
    // A: all components positive, k0 = k3, split on k1 vs k2.
    case(Group::A, 1,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 == k3 && k1 > k2,
        |_, k1, k2, k3| [k3, k2, k2, k3 + k1 - k2]),
    case(Group::A, 2,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 == k3 && k1 == k2,
        |_, _, k2, k3| [k3, k2, k2, k3]),
    case(Group::A, 3,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 == k3 && k1 < k2,
        |_, k1, k2, k3| [k3, k1, k1, k3 + k2 - k1]),
    // B: all components positive, k0 < k3, split on k0+k1 vs k3, k2+k3.
    case(Group::B, 1,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 < k3
            && k3 < k0 + k1 && k0 + k1 < k2 + k3,
        |k0, k1, k2, k3| [k0, k1, k1, k3 + k2 - k1]),
    case(Group::B, 2,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 < k3
            && k0 + k1 == k2 + k3,
        |k0, k1, _, _| [k0, k1, k1, k0]),
    case(Group::B, 3,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 < k3
            && k0 + k1 > k2 + k3,
        |k0, k1, k2, k3| [k0, k3 + k2 - k0, k3 + k2 - k0, 2 * k0 + k1 - k2 - k3]),
    case(Group::B, 4,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 < k3
            && k0 + k1 == k3,
        |k0, k1, k2, _| [k0 - 1, k1 + 2, k1 - 1, k0 + k2]),
    case(Group::B, 5,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 < k3
            && k0 + k1 < k3 && k3 < k0 + k1 + k2,
        |k0, k1, k2, k3| [k0, k3 - k0, k3 - k0, 2 * k0 + k1 + k2 - k3]),
    case(Group::B, 6,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 < k3
            && k3 == k0 + k1 + k2,
        |k0, k1, k2, _| [k0, k1 + k2, k1 + k2, k0]),
    case(Group::B, 7,
        |k0, k1, k2, k3| k0 >= 1 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k0 < k3
            && k3 > k0 + k1 + k2,
        |k0, k1, k2, k3| [k0, k1 + k2, k1 + k2, k3 - k1 - k2]),
    // C: k0 = 0, the rest positive, split on k1 vs k3, k2+k3 / k1+k2.
    case(Group::C, 1,
        |k0, k1, k2, k3| k0 == 0 && k1 >= 1 && k2 >= 1 && k3 >= 1
            && k3 < k1 && k1 < k2 + k3,
        |_, k1, k2, k3| [1, k1 - 2, k1 + 1, k3 + k2 - k1]),
    case(Group::C, 2,
        |k0, k1, k2, k3| k0 == 0 && k1 >= 1 && k2 >= 1 && k3 >= 1
            && k1 == k2 + k3,
        |_, k1, _, _| [1, k1 - 2, k1 + 1, 0]),
    case(Group::C, 3,
        |k0, k1, k2, k3| k0 == 0 && k1 >= 1 && k2 >= 1 && k3 >= 1
            && k1 > k2 + k3,
        |_, k1, k2, k3| [1, k2 + k3 - 2, k2 + k3 + 1, k1 - k2 - k3]),
    case(Group::C, 4,
        |k0, k1, k2, k3| k0 == 0 && k1 >= 1 && k2 >= 1 && k3 >= 1 && k1 == k3,
        |_, _, k2, k3| [0, k3, k3, k2]),
    case(Group::C, 5,
        |k0, k1, k2, k3| k0 == 0 && k1 >= 1 && k2 >= 1 && k3 >= 1
            && k1 < k3 && k3 < k1 + k2,
        |_, k1, k2, k3| [1, k3 - 2, k3 + 1, k1 + k2 - k3]),
    case(Group::C, 6,
        |k0, k1, k2, k3| k0 == 0 && k1 >= 1 && k2 >= 1 && k3 >= 1
            && k1 + k2 == k3,
        |_, _, _, k3| [1, k3 - 2, k3 + 1, 0]),
    case(Group::C, 7,
        |k0, k1, k2, k3| k0 == 0 && k1 >= 1 && k2 >= 1 && k3 >= 1
            && k1 + k2 < k3,
        |_, k1, k2, k3| [1, k1 + k2 - 2, k1 + k2 + 1, k3 - k2 - k1]),
    // D: k1 = 0, the rest positive (k0 > k3 is excluded before matching).
    case(Group::D, 1,
        |k0, k1, k2, k3| k1 == 0 && k0 >= 1 && k2 >= 1 && k3 >= 1 && k0 == k3,
        |k0, _, k2, _| [k0 - 1, 1, 1, k0 + k2 - 1]),
    case(Group::D, 2,
        |k0, k1, k2, k3| k1 == 0 && k0 >= 1 && k2 >= 1 && k3 >= 1
            && k0 < k3 && k3 < k0 + k2,
        |k0, _, k2, k3| [k0, k3 - k0, k3 - k0, 2 * k0 + k2 - k3]),
    case(Group::D, 3,
        |k0, k1, k2, k3| k1 == 0 && k0 >= 1 && k2 >= 1 && k3 >= 1
            && k0 + k2 == k3,
        |k0, _, k2, _| [k0, k2, k2, k0]),
    case(Group::D, 4,
        |k0, k1, k2, k3| k1 == 0 && k0 >= 1 && k2 >= 1 && k3 >= 1
            && k0 + k2 < k3,
        |k0, _, k2, k3| [k0, k2, k2, k3 - k2]),
    // E: k2 = 0, the rest positive (k0 > k3 is excluded before matching).
    case(Group::E, 1,
        |k0, k1, k2, k3| k2 == 0 && k0 >= 1 && k1 >= 1 && k3 >= 1 && k0 == k3,
        |k0, k1, _, _| [k0 - 1, 1, 1, k0 + k1 - 1]),
    case(Group::E, 2,
        |k0, k1, k2, k3| k2 == 0 && k0 >= 1 && k1 >= 1 && k3 >= 1
            && k0 < k3 && k3 < k0 + k1,
        |k0, k1, _, k3| [k0 - 1, k3 - k0 + 2, k3 - k0 - 1, 2 * k0 + k1 - k3]),
    case(Group::E, 3,
        |k0, k1, k2, k3| k2 == 0 && k0 >= 1 && k1 >= 1 && k3 >= 1
            && k0 + k1 == k3,
        |k0, k1, _, _| [k0 - 1, k1 + 2, k1 - 1, k0]),
    case(Group::E, 4,
        |k0, k1, k2, k3| k2 == 0 && k0 >= 1 && k1 >= 1 && k3 >= 1
            && k0 + k1 < k3,
        |k0, k1, _, k3| [k0 - 1, k1 + 2, k1 - 1, k3 - k1]),
    // F: k3 = 0, the rest positive (k0 > 1 is excluded before matching,
    // so k0 = 1 <= k2 whenever a guard here is consulted).
    case(Group::F, 1,
        |k0, k1, k2, k3| k3 == 0 && k0 >= 1 && k1 >= 1 && k2 >= 1 && k0 == k2,
        |_, k1, k2, _| [0, k2, k2, k1]),
    case(Group::F, 2,
        |k0, k1, k2, k3| k3 == 0 && k0 >= 1 && k1 >= 1 && k2 >= 1
            && k0 < k2 && k2 < k0 + k1,
        |k0, k1, k2, _| [1, k2 - 2, k2 + 1, k0 + k1 - k2]),
    case(Group::F, 3,
        |k0, k1, k2, k3| k3 == 0 && k0 >= 1 && k1 >= 1 && k2 >= 1
            && k0 + k1 == k2,
        |_, _, k2, _| [1, k2 - 2, k2 + 1, 0]),
    case(Group::F, 4,
        |k0, k1, k2, k3| k3 == 0 && k0 >= 1 && k1 >= 1 && k2 >= 1
            && k0 + k1 < k2,
        |k0, k1, k2, _| [1, k0 + k1 - 2, k0 + k1 + 1, k2 - k1 - k0]),
    // G: exactly two zero components; six zero patterns, each split by the
    // order of the two surviving components. The patterns {k1,k2} = 0 with
    // k0 > k3, and {k1,k3} or {k2,k3} = 0 with k0 > 1, are excluded before
    // matching, which is why those orderings have no case here.
    case(Group::G, 1,
        |k0, k1, k2, k3| k0 == 0 && k1 == 0 && 0 < k2 && k2 < k3,
        |_, _, k2, k3| [1, k2 - 1, k2 - 1, k3 - k2 + 1]),
    case(Group::G, 2,
        |k0, k1, k2, k3| k0 == 0 && k1 == 0 && 0 < k2 && k2 == k3,
        |_, _, k2, _| [1, k2 - 1, k2 - 1, 1]),
    case(Group::G, 3,
        |k0, k1, k2, k3| k0 == 0 && k1 == 0 && 0 < k3 && k3 < k2,
        |_, _, k2, k3| [1, k3 - 1, k3 - 1, k2 - k3 + 1]),
    case(Group::G, 4,
        |k0, k1, k2, k3| k0 == 0 && k2 == 0 && 0 < k1 && k1 < k3,
        |_, k1, _, k3| [0, k1, k1, k3 - k1]),
    case(Group::G, 5,
        |k0, k1, k2, k3| k0 == 0 && k2 == 0 && 0 < k1 && k1 == k3,
        |_, k1, _, _| [0, k1, k1, 0]),
    case(Group::G, 6,
        |k0, k1, k2, k3| k0 == 0 && k2 == 0 && 0 < k3 && k3 < k1,
        |_, k1, _, k3| [0, k3, k3, k1 - k3]),
    case(Group::G, 7,
        |k0, k1, k2, k3| k0 == 0 && k3 == 0 && 0 < k1 && k1 < k2,
        |_, k1, k2, _| [1, k1 - 1, k1 - 1, k2 - k1 + 1]),
    case(Group::G, 8,
        |k0, k1, k2, k3| k0 == 0 && k3 == 0 && 0 < k1 && k1 == k2,
        |_, k1, _, _| [1, k1 - 1, k1 - 1, 1]),
    case(Group::G, 9,
        |k0, k1, k2, k3| k0 == 0 && k3 == 0 && 0 < k2 && k2 < k1,
        |_, k1, k2, _| [1, k2 - 1, k2 - 1, k1 - k2 + 1]),
    case(Group::G, 10,
        |k0, k1, k2, k3| k1 == 0 && k2 == 0 && 0 < k0 && k0 < k3,
        |k0, _, _, k3| [k0 - 1, 1, 1, k3 - 1]),
    case(Group::G, 11,
        |k0, k1, k2, k3| k1 == 0 && k2 == 0 && 0 < k0 && k0 == k3,
        |k0, _, _, _| [k0 - 1, 1, 1, k0 - 1]),
    case(Group::G, 12,
        |k0, k1, k2, k3| k1 == 0 && k3 == 0 && 0 < k0 && k0 < k2,
        |k0, _, k2, _| [0, k0, k0, k2 - k0]),
    case(Group::G, 13,
        |k0, k1, k2, k3| k1 == 0 && k3 == 0 && 0 < k0 && k0 == k2,
        |k0, _, _, _| [0, k0, k0, 0]),
    case(Group::G, 14,
        |k0, k1, k2, k3| k2 == 0 && k3 == 0 && 0 < k0 && k0 < k1,
        |k0, k1, _, _| [1, k0 - 1, k0 - 1, k1 - k0 + 1]),
    case(Group::G, 15,
        |k0, k1, k2, k3| k2 == 0 && k3 == 0 && 0 < k0 && k0 == k1,
        |k0, _, _, _| [1, k0 - 1, k0 - 1, 1]),
];

/// The full succession table, in matching order.
pub fn succession_cases() -> &'static [SuccessionCase] {
    &CASES
}

fn quad(k: &KaprekarIndex) -> Result<[u32; 4]> {
    if k.base().get() != 4 {
        return Err(Error::UnsupportedBase {
            base: k.base().get(),
            operation: "the base-4 succession table",
        });
    }
    if k.is_repdigit() {
        return Err(Error::Repdigit);
    }
    Ok([k.count(0), k.count(1), k.count(2), k.count(3)])
}

fn excluded_quad(k0: u32, k3: u32) -> bool {
    (k0 > k3 && k3 > 0) || (k0 > 1 && k3 == 0)
}

/// Dispatches a non-repdigit base-4 index against the table: either the
/// unique matching case, or [`CaseMatch::Excluded`] for configurations that
/// never occur as successors.
pub fn match_case(k: &KaprekarIndex) -> Result<CaseMatch> {
    let [k0, k1, k2, k3] = quad(k)?;
    if excluded_quad(k0, k3) {
        return Ok(CaseMatch::Excluded);
    }
    for c in &CASES {
        if (c.guard)(k0, k1, k2, k3) {
            return Ok(CaseMatch::Case(c.id));
        }
    }
    Err(Error::DomainError {
        operation: "base-4 case dispatch",
        requirement: "every non-excluded index to satisfy one guard",
        got: format!("{:?}", k.counts()),
    })
}

/// Successor of a base-4 index computed purely from the succession table,
/// never touching digit arithmetic. Agrees with [`kaprekar_step`] on every
/// matched index; errors on excluded ones, whose succession the table
/// deliberately leaves out.
pub fn formula_successor(k: &KaprekarIndex) -> Result<KaprekarIndex> {
    let [k0, k1, k2, k3] = quad(k)?;
    if excluded_quad(k0, k3) {
        return Err(Error::DomainError {
            operation: "formula succession",
            requirement: "an index that can occur as a successor",
            got: format!("{:?}", k.counts()),
        });
    }
    for c in &CASES {
        if (c.guard)(k0, k1, k2, k3) {
            return c.apply(k);
        }
    }
    Err(Error::DomainError {
        operation: "formula succession",
        requirement: "every non-excluded index to satisfy one guard",
        got: format!("{:?}", k.counts()),
    })
}

/// One cycle member observed during replay, with the case it matched.
/// Fixed points count as cycles of length one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCaseRecord {
    pub digit_count: u32,
    pub cycle_length: usize,
    pub index: KaprekarIndex,
    pub case: CaseId,
}

impl CycleCaseRecord {
    /// Whether every digit value occurs in the member.
    pub fn is_full(&self) -> bool {
        self.index.counts().iter().all(|&c| c >= 1)
    }
}

/// Outcome of grinding every base-4 index of width `1..=n_max` through the
/// succession table and the digit arithmetic side by side.
///
/// All violation counters are expected to stay zero; they exist so a test
/// failure reports exactly which guarantee broke.
#[derive(Debug, Clone, Default)]
pub struct ExhaustionReport {
    pub max_digit_count: u32,
    /// Non-repdigit states visited.
    pub states_checked: u64,
    /// How often each case matched, over all non-excluded states.
    pub case_histogram: BTreeMap<CaseId, u64>,
    /// States rejected by the exclusion predicate (all of them transient).
    pub excluded_states: u64,
    /// Non-excluded states whose guard-hit count differed from one.
    pub guard_violations: u64,
    /// States where the case formula disagreed with the arithmetic step.
    pub formula_mismatches: u64,
    /// Arithmetic successors that landed on an excluded configuration.
    pub excluded_successors: u64,
    /// Successors with `k'_1 - k'_2` outside `{-3, 0, 3}`.
    pub interior_gap_violations: u64,
    /// Terminal objects that fell outside the catalogue.
    pub unclassified_orbits: u64,
    /// Every cycle member encountered, in census order.
    pub cycle_members: Vec<CycleCaseRecord>,
}

impl ExhaustionReport {
    /// True when every checked guarantee held on every state.
    pub fn is_clean(&self) -> bool {
        self.guard_violations == 0
            && self.formula_mismatches == 0
            && self.excluded_successors == 0
            && self.interior_gap_violations == 0
            && self.unclassified_orbits == 0
    }

    /// Cycle members in which every digit value occurs.
    pub fn full_cycle_members(&self) -> Vec<&CycleCaseRecord> {
        self.cycle_members.iter().filter(|m| m.is_full()).collect()
    }
}

/// Replays the succession analysis exhaustively for every width up to
/// `n_max`: formula versus arithmetic on each state, guard partition,
/// exclusion of successors, the interior gap bound, and catalogue
/// membership of every terminal object.
pub fn replay_exhaustion(n_max: u32) -> Result<ExhaustionReport> {
    let base = BaseConfig::new(4)?;
    let required: u128 = (1..=n_max)
        .map(|n| oracle::state_space_size(base, n))
        .sum();
    if required > u128::from(DEFAULT_STATE_BUDGET) {
        return Err(Error::BudgetExceeded {
            required,
            budget: DEFAULT_STATE_BUDGET,
        });
    }

    let mut report = ExhaustionReport {
        max_digit_count: n_max,
        ..ExhaustionReport::default()
    };

    for n in 1..=n_max {
        for k in oracle::enumerate_indices(base, n) {
            report.states_checked += 1;
            let [k0, k1, k2, k3] = quad(&k)?;

            let successor = kaprekar_step(&k).expect("enumerated states are not repdigits");
            let [s0, _, _, s3] = [
                successor.count(0),
                successor.count(1),
                successor.count(2),
                successor.count(3),
            ];
            if excluded_quad(s0, s3) {
                report.excluded_successors += 1;
            }
            let gap = i64::from(successor.count(1)) - i64::from(successor.count(2));
            if !matches!(gap, -3 | 0 | 3) {
                report.interior_gap_violations += 1;
            }

            if excluded_quad(k0, k3) {
                report.excluded_states += 1;
                continue;
            }

            let hits: Vec<&SuccessionCase> = CASES
                .iter()
                .filter(|c| (c.guard)(k0, k1, k2, k3))
                .collect();
            match hits.as_slice() {
                [only] => {
                    *report.case_histogram.entry(only.id).or_default() += 1;
                    if only.apply(&k)? != successor {
                        report.formula_mismatches += 1;
                    }
                }
                _ => report.guard_violations += 1,
            }
        }

        // The census pins down the cycles; every member must dispatch to a
        // case (a cycle member is its predecessor's successor, so exclusion
        // would contradict the per-edge check above).
        let census = oracle::survey(base, n, DEFAULT_STATE_BUDGET)?;
        report.unclassified_orbits += census.unclassified_count();
        for cycle in &census.cycles {
            for member in cycle.record.members() {
                match match_case(member)? {
                    CaseMatch::Case(id) => report.cycle_members.push(CycleCaseRecord {
                        digit_count: n,
                        cycle_length: cycle.record.len(),
                        index: member.clone(),
                        case: id,
                    }),
                    CaseMatch::Excluded => report.excluded_successors += 1,
                }
            }
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::generate_fixed_points;
    use crate::transform::kaprekar_step_subtraction;

    fn idx(counts: &[u32]) -> KaprekarIndex {
        KaprekarIndex::new(BaseConfig::new(4).unwrap(), counts.to_vec()).unwrap()
    }

    fn id_of(counts: &[u32]) -> CaseId {
        match match_case(&idx(counts)).unwrap() {
            CaseMatch::Case(id) => id,
            CaseMatch::Excluded => panic!("{counts:?} is excluded"),
        }
    }

    #[test]
    fn table_has_the_expected_shape() {
        assert_eq!(CASES.len(), 44);
        let mut per_group: BTreeMap<Group, Vec<u8>> = BTreeMap::new();
        for c in succession_cases() {
            per_group.entry(c.id().group).or_default().push(c.id().variant);
        }
        let sizes: Vec<usize> = per_group.values().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 7, 7, 4, 4, 4, 15]);
        for variants in per_group.values() {
            let expected: Vec<u8> = (1..=variants.len() as u8).collect();
            assert_eq!(variants, &expected, "variants are contiguous and ordered");
        }
    }

    #[test]
    fn case_ids_render_as_roman_numerals() {
        assert_eq!(id_of(&[1, 2, 2, 3]).to_string(), "B(iv)");
        assert_eq!(
            CaseId::new(Group::G, 15).to_string(),
            "G(xv)"
        );
    }

    #[test]
    fn dispatch_matches_worked_examples() {
        assert_eq!(id_of(&[1, 2, 2, 3]), CaseId::new(Group::B, 4));
        assert_eq!(id_of(&[2, 3, 3, 2]), CaseId::new(Group::A, 2));
        assert_eq!(id_of(&[2, 0, 3, 5]), CaseId::new(Group::D, 3));
        assert_eq!(id_of(&[1, 3, 2, 4]), CaseId::new(Group::B, 4));
        assert_eq!(
            match_case(&idx(&[3, 1, 1, 0])).unwrap(),
            CaseMatch::Excluded
        );
        assert_eq!(
            match_case(&idx(&[3, 1, 1, 2])).unwrap(),
            CaseMatch::Excluded
        );
    }

    #[test]
    fn formula_successor_matches_worked_examples() {
        assert_eq!(
            formula_successor(&idx(&[1, 2, 2, 3])).unwrap(),
            idx(&[0, 4, 1, 3])
        );
        assert_eq!(
            formula_successor(&idx(&[2, 0, 3, 5])).unwrap(),
            idx(&[2, 3, 3, 2])
        );
        assert_eq!(
            formula_successor(&idx(&[1, 3, 2, 4])).unwrap(),
            kaprekar_step(&idx(&[1, 3, 2, 4])).unwrap()
        );
        assert_eq!(
            formula_successor(&idx(&[2, 3, 3, 2])).unwrap(),
            idx(&[2, 3, 3, 2]),
            "A(ii) is stationary"
        );
    }

    #[test]
    fn dispatch_rejects_bad_inputs() {
        assert!(matches!(
            formula_successor(&idx(&[3, 1, 1, 0])),
            Err(Error::DomainError { .. })
        ));
        let b6 = KaprekarIndex::new(
            BaseConfig::new(6).unwrap(),
            vec![1, 0, 0, 0, 0, 1],
        )
        .unwrap();
        assert!(matches!(
            match_case(&b6),
            Err(Error::UnsupportedBase { .. })
        ));
        assert_eq!(match_case(&idx(&[0, 4, 0, 0])), Err(Error::Repdigit));
    }

    #[test]
    fn guards_partition_the_nonexcluded_states() {
        let base = BaseConfig::new(4).unwrap();
        for n in 1..=15 {
            for k in oracle::enumerate_indices(base, n) {
                let [k0, k1, k2, k3] = quad(&k).unwrap();
                if excluded_quad(k0, k3) {
                    continue;
                }
                let hits = CASES
                    .iter()
                    .filter(|c| (c.guard)(k0, k1, k2, k3))
                    .count();
                assert_eq!(hits, 1, "guard count for {:?}", k.counts());
            }
        }
    }

    #[test]
    fn formula_agrees_with_arithmetic_at_small_widths() {
        let base = BaseConfig::new(4).unwrap();
        for n in 2..=15 {
            for k in oracle::enumerate_indices(base, n) {
                let [k0, _, _, k3] = quad(&k).unwrap();
                if excluded_quad(k0, k3) {
                    continue;
                }
                assert_eq!(
                    formula_successor(&k).unwrap(),
                    kaprekar_step(&k).unwrap(),
                    "formula vs step at {:?}",
                    k.counts()
                );
            }
        }
    }

    #[test]
    fn successors_are_never_excluded() {
        let base = BaseConfig::new(4).unwrap();
        for n in 2..=12 {
            for k in oracle::enumerate_indices(base, n) {
                let s = kaprekar_step(&k).unwrap();
                assert!(
                    !excluded_quad(s.count(0), s.count(3)),
                    "successor {:?} of {:?} is excluded",
                    s.counts(),
                    k.counts()
                );
            }
        }
    }

    #[test]
    fn fixed_points_sit_in_the_three_stationary_cases() {
        let base = BaseConfig::new(4).unwrap();
        let stationary = [
            CaseId::new(Group::A, 2),
            CaseId::new(Group::B, 1),
            CaseId::new(Group::C, 4),
        ];
        let mut seen = std::collections::BTreeSet::new();
        for n in 2..=24 {
            for (fp, _) in generate_fixed_points(base, n).unwrap() {
                let id = match match_case(&fp).unwrap() {
                    CaseMatch::Case(id) => id,
                    CaseMatch::Excluded => panic!("fixed point {:?} excluded", fp.counts()),
                };
                assert!(stationary.contains(&id), "{:?} matched {id}", fp.counts());
                assert_eq!(formula_successor(&fp).unwrap(), fp);
                seen.insert(id);
            }
        }
        assert_eq!(seen.len(), 3, "all three stationary cases occur");
    }

    /// For case B(i) the schoolbook subtraction output can be written down
    /// digit by digit: reading most-significant first it is
    ///
    /// ```text
    /// 3^{k0} 2^{k3-k0} 1^{k0+k1-k3-1} 0 3^{k3+k2-k1-k0} 2^{k0+k1-k3} 1^{k3-k0} 0^{k0-1} 1
    /// ```
    ///
    /// which is pinned here against the digit-arithmetic route.
    #[test]
    fn case_b1_subtraction_digits_follow_the_golden_template() {
        let mut checked = 0u32;
        for k0 in 1..=3u32 {
            for k3 in k0 + 1..=k0 + 3 {
                for k1 in 1..=6u32 {
                    for k2 in 1..=6u32 {
                        let b1 = k3 < k0 + k1 && k0 + k1 < k2 + k3;
                        if !b1 {
                            continue;
                        }
                        let k = idx(&[k0, k1, k2, k3]);
                        assert_eq!(id_of(&[k0, k1, k2, k3]), CaseId::new(Group::B, 1));

                        let mut expected: Vec<u8> = Vec::new();
                        let rep = |d: &mut Vec<u8>, digit: u8, times: u32| {
                            d.extend(std::iter::repeat_n(digit, times as usize));
                        };
                        rep(&mut expected, 3, k0);
                        rep(&mut expected, 2, k3 - k0);
                        rep(&mut expected, 1, k0 + k1 - k3 - 1);
                        rep(&mut expected, 0, 1);
                        rep(&mut expected, 3, k3 + k2 - k1 - k0);
                        rep(&mut expected, 2, k0 + k1 - k3);
                        rep(&mut expected, 1, k3 - k0);
                        rep(&mut expected, 0, k0 - 1);
                        rep(&mut expected, 1, 1);

                        let diff = kaprekar_step_subtraction(&k.realized_descending()).unwrap();
                        assert_eq!(diff.digits(), &expected[..], "at {:?}", k.counts());
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 50, "the parameter grid exercises the template");
    }

    #[test]
    fn replay_is_clean_and_confirms_the_n8_full_member() {
        let report = replay_exhaustion(10).unwrap();
        assert!(report.is_clean(), "{report:?}");
        assert_eq!(report.max_digit_count, 10);
        assert!(report.excluded_states > 0);
        assert_eq!(
            report.states_checked,
            (1..=10u32)
                .map(|n| oracle::nontrivial_states(BaseConfig::new(4).unwrap(), n) as u64)
                .sum::<u64>()
        );

        let full: Vec<_> = report
            .full_cycle_members()
            .into_iter()
            .filter(|m| m.digit_count == 8 && m.cycle_length >= 2)
            .cloned()
            .collect();
        assert_eq!(full.len(), 1, "one full member of a proper cycle at width 8");
        assert_eq!(full[0].index, idx(&[1, 1, 4, 2]));
        assert_eq!(full[0].case, CaseId::new(Group::B, 4));
        assert_eq!(full[0].index.count(0), 1);

        let at_5: Vec<_> = report
            .cycle_members
            .iter()
            .filter(|m| m.digit_count == 5)
            .map(|m| m.index.counts().to_vec())
            .collect();
        assert_eq!(at_5, vec![vec![1, 0, 3, 1], vec![0, 1, 1, 3]]);
    }

    #[test]
    fn replay_rejects_absurd_widths() {
        assert!(matches!(
            replay_exhaustion(100_000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
