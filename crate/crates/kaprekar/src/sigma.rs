use num_integer::Integer;

use crate::classify::symmetry_info;
use crate::error::{Error, Result};
use crate::index::KaprekarIndex;

/// The multiplicative half-order of 2: the least `m >= 1` with
/// `2^m ≡ ±1 (mod r)`, for odd `r >= 3`.
///
/// Doubling positions modulo `r` returns to the start (up to reflection)
/// after exactly this many steps, which is why it governs the possible cycle
/// lengths of symmetric states: `b = 64` has `sigma(63) = 6`.
pub fn sigma(r: u64) -> Result<u32> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::DomainError {
            operation: "sigma",
            requirement: "an odd modulus of at least 3",
            got: r.to_string(),
        });
    }
    let mut pow = 1u64;
    for m in 1..=u32::MAX {
        pow = (pow * 2) % r;
        if pow == 1 || pow == r - 1 {
            return Ok(m);
        }
    }
    unreachable!("2 has finite multiplicative order modulo every odd r")
}

/// Partitions the positions `1 ..= (top-1)/2` into their doubling orbits.
///
/// `top` is the largest digit `B = b - 1` of an even base. Position `i`
/// advances to `2i` when that stays below `B/2` and to `B - 2i` otherwise;
/// iterating this rule splits the positions into disjoint cycles. Each is
/// emitted starting from its smallest element, and the cycles themselves are
/// listed by those starting elements in increasing order. A cycle through
/// `i` has length `sigma(B / gcd(i, B))`.
pub fn i_cycles(top: u8) -> Result<Vec<Vec<u32>>> {
    if top < 3 || top.is_multiple_of(2) {
        return Err(Error::DomainError {
            operation: "i_cycles",
            requirement: "an odd top digit of at least 3",
            got: top.to_string(),
        });
    }
    let b_top = top as u32;
    let half = (b_top - 1) / 2;
    let mut seen = vec![false; (half + 1) as usize];
    let mut cycles = Vec::new();
    for start in 1..=half {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        loop {
            seen[i as usize] = true;
            cycle.push(i);
            i = if 4 * i < b_top { 2 * i } else { b_top - 2 * i };
            if i == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Doubling rule on positions `1 ..= top-1` used by states *without* mirror
/// symmetry, where the two halves of the digit range no longer identify with
/// each other. The interval splits at the quarter points of `top` (never
/// integral for odd `top`):
///
/// ```text
///        0 < i < B/4   ->  2i
///      B/4 < i < B/2   ->  B - 2i
///      B/2 < i < 3B/4  ->  2B - 2i
///     3B/4 < i < B     ->  2i - B
/// ```
pub fn i_successor_nonsym(i: u32, top: u32) -> Result<u32> {
    if top < 3 || top.is_multiple_of(2) {
        return Err(Error::DomainError {
            operation: "i_successor_nonsym",
            requirement: "an odd top digit of at least 3",
            got: top.to_string(),
        });
    }
    if i == 0 || i >= top {
        return Err(Error::DomainError {
            operation: "i_successor_nonsym",
            requirement: "a position strictly between 0 and the top digit",
            got: format!("{i} (top {top})"),
        });
    }
    Ok(if 4 * i < top {
        2 * i
    } else if 2 * i < top {
        top - 2 * i
    } else if 4 * i < 3 * top {
        2 * top - 2 * i
    } else {
        2 * i - top
    })
}

/// Predicted orbit-cycle length of a symmetric or almost-symmetric index,
/// before actually iterating it.
///
/// One application of the transformation moves the interior component at
/// position `i` to the next position along its doubling orbit, leaving the
/// end components alone. The state recurs after `p` steps exactly when
/// shifting every orbit's component sequence by `p` reproduces it, so the
/// cycle length is the least common multiple of the sequences' minimal
/// rotation periods.
pub fn predicted_symmetric_cycle_length(k: &KaprekarIndex) -> Result<u64> {
    k.base().require_even("cycle length prediction")?;
    let info = symmetry_info(k)?;
    if !(info.symmetric || info.almost_symmetric) {
        return Err(Error::NotSymmetric);
    }
    let top = k.base().top_digit();
    let mut length = 1u64;
    for cycle in i_cycles(top)? {
        let vals: Vec<u32> = cycle.iter().map(|&i| k.count(i as u8)).collect();
        length = length.lcm(&(minimal_rotation_period(&vals) as u64));
    }
    Ok(length)
}

/// Least `p >= 1` such that rotating `vals` by `p` leaves it unchanged
/// (always a divisor of the length).
fn minimal_rotation_period(vals: &[u32]) -> usize {
    let l = vals.len();
    for p in 1..=l {
        if l.is_multiple_of(p) && (0..l).all(|m| vals[(m + p) % l] == vals[m]) {
            return p;
        }
    }
    unreachable!("rotation by the full length is the identity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseConfig;
    use crate::orbit::iterate_to_cycle;

    #[test]
    fn sigma_small_values() {
        assert_eq!(sigma(3).unwrap(), 1);
        assert_eq!(sigma(5).unwrap(), 2);
        assert_eq!(sigma(7).unwrap(), 3);
        assert_eq!(sigma(9).unwrap(), 3);
        assert_eq!(sigma(11).unwrap(), 5);
        assert_eq!(sigma(63).unwrap(), 6);
    }

    #[test]
    fn sigma_rejects_even_or_tiny_moduli() {
        assert!(sigma(4).is_err());
        assert!(sigma(1).is_err());
        assert!(sigma(0).is_err());
    }

    #[test]
    fn sigma_of_divisors_divides_sigma() {
        // Restricting the doubling orbit to a divisor's residues can only
        // shorten the recurrence, never lengthen it.
        for r in (3..200u64).step_by(2) {
            let s = sigma(r).unwrap();
            for d in (3..=r).step_by(2) {
                if r % d == 0 {
                    assert_eq!(
                        s % sigma(d).unwrap(),
                        0,
                        "sigma({d}) should divide sigma({r})"
                    );
                }
            }
        }
    }

    #[test]
    fn icycles_base4_and_base10() {
        assert_eq!(i_cycles(3).unwrap(), vec![vec![1]]);
        assert_eq!(i_cycles(9).unwrap(), vec![vec![1, 2, 4], vec![3]]);
    }

    #[test]
    fn icycles_base64_partition() {
        let cycles = i_cycles(63).unwrap();
        assert_eq!(
            cycles,
            vec![
                vec![1, 2, 4, 8, 16, 31],
                vec![3, 6, 12, 24, 15, 30],
                vec![5, 10, 20, 23, 17, 29],
                vec![7, 14, 28],
                vec![9, 18, 27],
                vec![11, 22, 19, 25, 13, 26],
                vec![21],
            ]
        );
        let covered: usize = cycles.iter().map(Vec::len).sum();
        assert_eq!(covered, 31, "every position appears exactly once");
    }

    #[test]
    fn icycle_lengths_match_sigma_of_reduced_modulus() {
        for top in (3..=63u8).step_by(2) {
            for cycle in i_cycles(top).unwrap() {
                let reduced = top as u64 / (cycle[0] as u64).gcd(&(top as u64));
                let expected = if reduced == 1 {
                    1
                } else {
                    sigma(reduced).unwrap() as usize
                };
                assert_eq!(cycle.len(), expected, "top {top}, cycle {cycle:?}");
            }
        }
    }

    #[test]
    fn nonsym_successor_four_ranges() {
        assert_eq!(i_successor_nonsym(1, 5).unwrap(), 2);
        assert_eq!(i_successor_nonsym(4, 5).unwrap(), 3);
        assert_eq!(i_successor_nonsym(5, 7).unwrap(), 4);
        assert_eq!(i_successor_nonsym(2, 7).unwrap(), 3);
        assert!(i_successor_nonsym(0, 7).is_err());
        assert!(i_successor_nonsym(7, 7).is_err());
        assert!(i_successor_nonsym(2, 8).is_err());
    }

    fn symmetric_index(b: u8, ends: (u32, u32), interior: &[(u32, u32)]) -> KaprekarIndex {
        let base = BaseConfig::new(b).unwrap();
        let top = base.top_digit() as usize;
        let mut counts = vec![0u32; b as usize];
        counts[0] = ends.0;
        counts[top] = ends.1;
        for &(i, v) in interior {
            counts[i as usize] = v;
            counts[top - i as usize] = v;
        }
        KaprekarIndex::new(base, counts).unwrap()
    }

    #[test]
    fn predicted_length_matches_the_actual_orbit_in_base10() {
        // Interior orbit (1,2,4) carrying (4,3,4): period 3; orbit (3): period 1.
        let k = symmetric_index(10, (1, 2), &[(1, 4), (2, 3), (4, 4), (3, 4)]);
        assert_eq!(predicted_symmetric_cycle_length(&k).unwrap(), 3);
        let (_, record) = iterate_to_cycle(&k).unwrap();
        assert_eq!(record.len(), 3);

        // Same components but constant along (1,2,4): a fixed point.
        let fp = symmetric_index(10, (1, 2), &[(1, 4), (2, 4), (4, 4), (3, 3)]);
        assert_eq!(predicted_symmetric_cycle_length(&fp).unwrap(), 1);
        let (_, record) = iterate_to_cycle(&fp).unwrap();
        assert_eq!(record.len(), 1);
    }

    #[test]
    fn predicted_length_base64() {
        // Assign period-3 patterns along two of the six-step orbits and
        // constants elsewhere: the overall period is 3.
        let mut interior = Vec::new();
        for (cycle, vals) in [
            (vec![1u32, 2, 4, 8, 16, 31], vec![3u32, 4, 5, 3, 4, 5]),
            (vec![5, 10, 20, 23, 17, 29], vec![1, 2, 9, 1, 2, 9]),
            (vec![11, 22, 19, 25, 13, 26], vec![7, 7, 7, 7, 7, 7]),
            (vec![3, 6, 12, 24, 15, 30], vec![2, 2, 2, 2, 2, 2]),
            (vec![7, 14, 28], vec![4, 4, 4]),
            (vec![9, 18, 27], vec![1, 1, 1]),
            (vec![21], vec![5]),
        ] {
            for (i, v) in cycle.into_iter().zip(vals) {
                interior.push((i, v));
            }
        }
        let k = symmetric_index(64, (2, 2), &interior);
        assert_eq!(predicted_symmetric_cycle_length(&k).unwrap(), 3);
        let (_, record) = iterate_to_cycle(&k).unwrap();
        assert_eq!(record.len(), 3);
    }

    #[test]
    fn prediction_requires_symmetry() {
        let base = BaseConfig::new(4).unwrap();
        let k = KaprekarIndex::new(base, vec![1, 0, 3, 1]).unwrap();
        assert_eq!(predicted_symmetric_cycle_length(&k), Err(Error::NotSymmetric));
    }
}
