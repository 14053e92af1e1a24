use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::base::BaseConfig;
use crate::digits::{compare_value, DigitString};
use crate::error::{Error, Result};
use crate::index::KaprekarIndex;
use crate::transform::{kaprekar_step, kaprekar_step_subtraction};

/// How the leading member of a canonical cycle is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CycleOrdering {
    /// Lead with the member whose realized digit string spells the smallest
    /// integer. The realized string of a member is the exact subtraction
    /// result produced from its predecessor in the cycle, so this matches
    /// orderings based on the actual numbers a calculator would see.
    #[default]
    RealizedValue,
    /// Lead with the lexicographically smallest occurrence vector instead.
    IndexLex,
}

/// The walk from a starting index into its eventual cycle.
///
/// `path` holds the start, every intermediate state, and exactly one pass
/// around the cycle: `path[preperiod..]` are the cycle members in orbit
/// order, and `path[preperiod + len]` would wrap back to `path[preperiod]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    pub path: Vec<KaprekarIndex>,
    pub preperiod: usize,
}

impl Trajectory {
    pub fn start(&self) -> &KaprekarIndex {
        &self.path[0]
    }

    /// The cycle members in orbit order.
    pub fn cycle_slice(&self) -> &[KaprekarIndex] {
        &self.path[self.preperiod..]
    }
}

/// A cycle in canonical form: members in orbit order, rotated so the chosen
/// leader comes first, together with each member's realized digit string.
///
/// Fixed points are the special case of length 1. Construction always
/// verifies that consecutive members really map to each other, so a value of
/// this type is evidence, not just data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleRecord {
    base: BaseConfig,
    digit_count: u32,
    members: Vec<KaprekarIndex>,
    realized: Vec<DigitString>,
}

impl CycleRecord {
    pub fn base(&self) -> BaseConfig {
        self.base
    }

    pub fn digit_count(&self) -> u32 {
        self.digit_count
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty member lists
    }

    pub fn is_fixed_point(&self) -> bool {
        self.members.len() == 1
    }

    pub fn members(&self) -> &[KaprekarIndex] {
        &self.members
    }

    /// Realized digit strings, aligned with [`members`](Self::members):
    /// `realized[i]` is the subtraction output that lands on `members[i]`.
    pub fn realized(&self) -> &[DigitString] {
        &self.realized
    }

    /// The leader's realized string — for the default ordering, the smallest
    /// integer appearing in the cycle.
    pub fn least_realized(&self) -> &DigitString {
        &self.realized[0]
    }

    /// True if `other` contains the same members in the same cyclic order,
    /// regardless of which member leads.
    pub fn same_cycle(&self, other: &CycleRecord) -> bool {
        cyclically_equal(&self.members, &other.members)
    }
}

/// True when `a` and `b` are equal as cyclic sequences (some rotation of `a`
/// equals `b`).
pub fn cyclically_equal(a: &[KaprekarIndex], b: &[KaprekarIndex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let l = a.len();
    (0..l).any(|shift| (0..l).all(|i| a[(i + shift) % l] == b[i]))
}

/// Successor that never fails: repdigits (reachable mid-orbit only in odd
/// bases) collapse to the all-zeros string of the same width, which is a
/// genuine fixed point of the map on digit strings. In even bases no
/// non-repdigit ever produces a repdigit, so this is exactly
/// [`kaprekar_step`] there.
pub(crate) fn successor_total(k: &KaprekarIndex) -> KaprekarIndex {
    if k.is_repdigit() {
        zero_index(k.base(), k.digit_count())
    } else {
        kaprekar_step(k).expect("non-repdigit always has a successor")
    }
}

/// The index of the all-zeros string of width `n`.
pub(crate) fn zero_index(base: BaseConfig, n: u32) -> KaprekarIndex {
    let mut counts = vec![0u32; base.get() as usize];
    counts[0] = n;
    KaprekarIndex::new(base, counts).expect("zero string is a valid index")
}

/// Follows the orbit of `start` until a state repeats, returning the walk
/// and the canonical form of the cycle it entered.
///
/// The state space for a fixed base and width is finite and the map is a
/// function, so every orbit is a rho shape: a pre-period followed by a
/// cycle. Repdigit starts are rejected; in odd bases an orbit may *reach* a
/// repdigit, in which case it is absorbed by the all-zeros fixed point.
pub fn iterate_to_cycle(start: &KaprekarIndex) -> Result<(Trajectory, CycleRecord)> {
    iterate_to_cycle_with(start, CycleOrdering::default())
}

/// [`iterate_to_cycle`] with an explicit leader ordering for the cycle.
pub fn iterate_to_cycle_with(
    start: &KaprekarIndex,
    ordering: CycleOrdering,
) -> Result<(Trajectory, CycleRecord)> {
    if start.is_repdigit() {
        return Err(Error::Repdigit);
    }
    let mut seen: HashMap<KaprekarIndex, usize> = HashMap::new();
    let mut path: Vec<KaprekarIndex> = Vec::new();
    let mut cur = start.clone();
    let preperiod = loop {
        if let Some(&pos) = seen.get(&cur) {
            break pos;
        }
        seen.insert(cur.clone(), path.len());
        let next = successor_total(&cur);
        path.push(cur);
        cur = next;
    };
    let record = canonicalize_cycle_with(&path[preperiod..], ordering)?;
    let trajectory = Trajectory { path, preperiod };
    Ok((trajectory, record))
}

/// Length of the cycle the orbit of `k` eventually enters (1 for a state
/// that reaches a fixed point).
pub fn cycle_length(k: &KaprekarIndex) -> Result<u64> {
    iterate_to_cycle(k).map(|(_, record)| record.len() as u64)
}

/// Canonicalizes a member list into a [`CycleRecord`] under the default
/// ordering. See [`canonicalize_cycle_with`].
pub fn canonicalize_cycle(members: &[KaprekarIndex]) -> Result<CycleRecord> {
    canonicalize_cycle_with(members, CycleOrdering::default())
}

/// Verifies that `members` (in orbit order, any rotation) form a cycle and
/// rotates them so the leader chosen by `ordering` comes first.
///
/// Each member's realized digit string is reconstructed as the subtraction
/// output of its predecessor, which is the exact integer the cycle visits at
/// that position.
pub fn canonicalize_cycle_with(
    members: &[KaprekarIndex],
    ordering: CycleOrdering,
) -> Result<CycleRecord> {
    if members.is_empty() {
        return Err(Error::NotACycle("no members".to_string()));
    }
    let base = members[0].base();
    let digit_count = members[0].digit_count();
    for m in members {
        if m.base() != base {
            return Err(Error::NotACycle("mixed bases".to_string()));
        }
        if m.digit_count() != digit_count {
            return Err(Error::NotACycle("mixed digit counts".to_string()));
        }
    }
    let l = members.len();
    for i in 0..l {
        for j in (i + 1)..l {
            if members[i] == members[j] {
                return Err(Error::NotACycle(format!(
                    "member {} repeats member {}",
                    j, i
                )));
            }
        }
    }

    // The all-zeros fixed point only arises as the odd-base sink; it is the
    // single repdigit admitted as a cycle.
    let zero = zero_index(base, digit_count);
    if members.iter().any(|m| m.is_repdigit()) && !(l == 1 && members[0] == zero) {
        return Err(Error::NotACycle(
            "a repdigit member cannot recur".to_string(),
        ));
    }

    let mut realized: Vec<DigitString> = Vec::with_capacity(l);
    for i in 0..l {
        let pred = &members[(i + l - 1) % l];
        let image = if pred == &zero {
            zero.realized_descending()
        } else {
            kaprekar_step_subtraction(&pred.realized_descending())?
        };
        if KaprekarIndex::from_digits(&image) != members[i] {
            return Err(Error::NotACycle(format!(
                "member {} does not map to member {}",
                (i + l - 1) % l,
                i
            )));
        }
        realized.push(image);
    }

    let leader = match ordering {
        CycleOrdering::RealizedValue => (0..l)
            .min_by(|&i, &j| {
                compare_value(&realized[i], &realized[j])
                    .expect("realized strings share base and width")
            })
            .expect("non-empty"),
        CycleOrdering::IndexLex => (0..l)
            .min_by(|&i, &j| members[i].counts().cmp(members[j].counts()))
            .expect("non-empty"),
    };

    let mut members = members.to_vec();
    members.rotate_left(leader);
    realized.rotate_left(leader);

    Ok(CycleRecord {
        base,
        digit_count,
        members,
        realized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(b: u8, counts: &[u32]) -> KaprekarIndex {
        KaprekarIndex::new(BaseConfig::new(b).unwrap(), counts.to_vec()).unwrap()
    }

    #[test]
    fn orbit_into_the_two_digit_base4_cycle() {
        // 03 -> 21 -> 03: no pre-period, cycle of length 2.
        let start = idx(4, &[1, 0, 0, 1]);
        let (walk, record) = iterate_to_cycle(&start).unwrap();
        assert_eq!(walk.preperiod, 0);
        assert_eq!(record.len(), 2);
        // 03 realizes the smaller integer, so (1,0,0,1) leads.
        assert_eq!(record.members()[0], idx(4, &[1, 0, 0, 1]));
        assert_eq!(record.least_realized().to_string(), "03");
    }

    #[test]
    fn orbit_with_preperiod_reaches_fixed_point() {
        // Base 10, n=3: everything funnels into 495.
        let b10 = BaseConfig::new(10).unwrap();
        let s = DigitString::parse(b10, "100").unwrap();
        let start = KaprekarIndex::from_digits(&s);
        let (walk, record) = iterate_to_cycle(&start).unwrap();
        assert!(record.is_fixed_point());
        assert_eq!(record.least_realized().to_string(), "495");
        assert!(walk.preperiod > 0);
        assert_eq!(walk.cycle_slice().len(), 1);
        assert_eq!(cycle_length(&start).unwrap(), 1);
    }

    #[test]
    fn five_digit_base4_cycle_leads_with_smallest_realized_integer() {
        let a = idx(4, &[1, 0, 3, 1]);
        let b = idx(4, &[0, 1, 1, 3]);
        let record = canonicalize_cycle(&[b.clone(), a.clone()]).unwrap();
        assert_eq!(record.members(), &[a.clone(), b.clone()]);
        assert_eq!(record.least_realized().to_string(), "20322");
        assert_eq!(record.realized()[1].to_string(), "23331");

        // Index-lexicographic ordering prefers (0,1,1,3) instead.
        let record = canonicalize_cycle_with(&[b.clone(), a.clone()], CycleOrdering::IndexLex)
            .unwrap();
        assert_eq!(record.members()[0], b);
    }

    #[test]
    fn canonicalize_rejects_non_cycles() {
        let a = idx(4, &[1, 0, 0, 1]);
        let b = idx(4, &[0, 1, 1, 0]);
        let c = idx(4, &[2, 0, 0, 0]);
        assert!(matches!(
            canonicalize_cycle(&[a.clone(), a.clone()]),
            Err(Error::NotACycle(_))
        ));
        assert!(matches!(
            canonicalize_cycle(&[a.clone(), c.clone()]),
            Err(Error::NotACycle(_))
        ));
        // Right members, wrong order is fine (rotation), but a stray member is not.
        assert!(canonicalize_cycle(&[b.clone(), a.clone()]).is_ok());
        assert!(matches!(
            canonicalize_cycle(&[a, b, c]),
            Err(Error::NotACycle(_))
        ));
    }

    #[test]
    fn repdigit_start_is_rejected() {
        assert_eq!(
            iterate_to_cycle(&idx(4, &[0, 0, 4, 0])),
            Err(Error::Repdigit)
        );
    }

    #[test]
    fn odd_base_orbit_may_sink_to_zero() {
        // Base 3, digits {0,2}: 20 - 02 = 11, a repdigit, then 11 - 11 = 00.
        let start = idx(3, &[1, 0, 1]);
        let (walk, record) = iterate_to_cycle(&start).unwrap();
        assert!(record.is_fixed_point());
        assert_eq!(record.members()[0], zero_index(start.base(), 2));
        assert_eq!(record.least_realized().to_string(), "00");
        assert_eq!(walk.preperiod, 2);
    }

    #[test]
    fn same_cycle_ignores_rotation() {
        let a = idx(4, &[1, 0, 3, 1]);
        let b = idx(4, &[0, 1, 1, 3]);
        let r1 = canonicalize_cycle(&[a.clone(), b.clone()]).unwrap();
        let r2 = canonicalize_cycle_with(&[b, a], CycleOrdering::IndexLex).unwrap();
        assert!(r1.same_cycle(&r2));
    }
}
