//! Closed-form families of fixed points and cycles in bases 4, 6 and 8.
//!
//! Each family is a template over one or two integer parameters. The
//! generators below enumerate every family member with a requested digit
//! count, attach the matching [`ClassLabel`], and hand cycles through
//! [`canonicalize_cycle`], which re-verifies the succession member by
//! member — so a transcription slip in a template cannot produce a quietly
//! wrong catalogue, it produces an error.

use crate::base::BaseConfig;
use crate::classify::{ClassLabel, ZeroFreeVariant};
use crate::error::{Error, Result};
use crate::index::KaprekarIndex;
use crate::orbit::{canonicalize_cycle, CycleRecord};
use crate::transform::kaprekar_step;

/// Bases with a complete catalogue of families.
pub const CATALOGUED_BASES: [u8; 3] = [4, 6, 8];

fn require_catalogued(base: BaseConfig, operation: &'static str) -> Result<()> {
    if CATALOGUED_BASES.contains(&base.get()) {
        Ok(())
    } else {
        Err(Error::UnsupportedBase {
            base: base.get(),
            operation,
        })
    }
}

/// Builds an index from a template row. Templates only produce well-formed
/// component vectors, so failure here is a programming error.
fn idx(base: BaseConfig, counts: Vec<u32>) -> KaprekarIndex {
    KaprekarIndex::new(base, counts).expect("catalogue templates are well-formed")
}

fn cycle_from_rows(base: BaseConfig, rows: Vec<Vec<u32>>) -> Result<CycleRecord> {
    let members: Vec<KaprekarIndex> = rows.into_iter().map(|row| idx(base, row)).collect();
    canonicalize_cycle(&members)
}

/// All catalogued fixed points with digit count `n`, labelled.
///
/// Supported for bases 4, 6 and 8; the members are verified fixed points of
/// the transformation.
pub fn generate_fixed_points(
    base: BaseConfig,
    n: u32,
) -> Result<Vec<(KaprekarIndex, ClassLabel)>> {
    require_catalogued(base, "fixed-point generation")?;
    let b = base.get() as u32;
    let top = base.top_digit() as usize;
    let mut out: Vec<(KaprekarIndex, ClassLabel)> = Vec::new();

    // Symmetric: (k0, k1, ..., k1, k0) with n = 2*k0 + (b-2)*k1.
    for k1 in 1..=(n / (b - 2)).max(1) {
        let rest = n as i64 - ((b - 2) * k1) as i64;
        if rest >= 2 && rest % 2 == 0 {
            let k0 = (rest / 2) as u32;
            let mut counts = vec![k1; b as usize];
            counts[0] = k0;
            counts[top] = k0;
            out.push((
                idx(base, counts),
                ClassLabel::SymmetricFp { uniform: true },
            ));
        }
    }

    // Almost-symmetric: (k0, k1, ..., k1, kB) with 1 <= k0 < kB < k0 + k1.
    for k1 in 1..=n / (b - 2) {
        let beta = n - (b - 2) * k1; // k0 + kB
        for k0 in 1..beta {
            let kb = beta - k0;
            if k0 < kb && kb < k0 + k1 {
                let mut counts = vec![k1; b as usize];
                counts[0] = k0;
                counts[top] = kb;
                out.push((
                    idx(base, counts),
                    ClassLabel::AlmostSymmetricFp {
                        uniform: true,
                        alpha: kb - k0,
                    },
                ));
            }
        }
    }

    // Uniform zero-free: (0, t, ..., t) with n = (b-1)t. In base 4 this
    // shape *is* the triad shape and is generated there instead.
    if b > 4 && n.is_multiple_of(b - 1) && n >= b - 1 {
        let t = n / (b - 1);
        let mut counts = vec![t; b as usize];
        counts[0] = 0;
        out.push((idx(base, counts), ClassLabel::UniformZeroFreeFp { t }));
    }

    // Triad: t at digits b/2-1, b/2 and b-1, with n = 3t.
    if n.is_multiple_of(3) && n >= 3 {
        let t = n / 3;
        let mut counts = vec![0u32; b as usize];
        counts[(b / 2 - 1) as usize] = t;
        counts[(b / 2) as usize] = t;
        counts[top] = t;
        out.push((idx(base, counts), ClassLabel::TriadFp { t }));
    }

    match b {
        6 => {
            // Interleaved zero-free: (0,u,t,t,u,t) with 1 <= u < t, n = 3t + 2u.
            for u in 1.. {
                if 3 + 2 * u > n {
                    break;
                }
                if (n - 2 * u).is_multiple_of(3) {
                    let t = (n - 2 * u) / 3;
                    if t > u {
                        out.push((
                            idx(base, vec![0, u, t, t, u, t]),
                            ClassLabel::OtherZeroFreeFp {
                                variant: ZeroFreeVariant::Interleaved,
                                t,
                                second: u,
                            },
                        ));
                    }
                }
            }
            // Single-parameter: (1,t-1,t+1,t,t+1,0) with n = 4t + 2, t >= 1.
            if n >= 6 && n % 4 == 2 {
                let t = (n - 2) / 4;
                out.push((
                    idx(base, vec![1, t - 1, t + 1, t, t + 1, 0]),
                    ClassLabel::SingleParameterFp { t },
                ));
            }
        }
        8 => {
            // Interleaved zero-free: (0,t,u,t,t,u,t,t) with 1 <= u < t, n = 5t + 2u.
            for u in 1.. {
                if 5 + 2 * u > n {
                    break;
                }
                if (n - 2 * u).is_multiple_of(5) {
                    let t = (n - 2 * u) / 5;
                    if t > u {
                        out.push((
                            idx(base, vec![0, t, u, t, t, u, t, t]),
                            ClassLabel::OtherZeroFreeFp {
                                variant: ZeroFreeVariant::Interleaved,
                                t,
                                second: u,
                            },
                        ));
                    }
                }
            }
            // Perturbed zero-free: (0,t-e,t+e,t,t,t+e,t-e,t) with 1 <= e < t, n = 7t.
            if n.is_multiple_of(7) && n >= 14 {
                let t = n / 7;
                for eps in 1..t {
                    out.push((
                        idx(
                            base,
                            vec![0, t - eps, t + eps, t, t, t + eps, t - eps, t],
                        ),
                        ClassLabel::OtherZeroFreeFp {
                            variant: ZeroFreeVariant::Perturbed,
                            t,
                            second: eps,
                        },
                    ));
                }
            }
            // Single-parameter: (1,t-1,t,t,t,t-1,t+1,0) with n = 6t, t >= 1.
            if n >= 6 && n.is_multiple_of(6) {
                let t = n / 6;
                out.push((
                    idx(base, vec![1, t - 1, t, t, t, t - 1, t + 1, 0]),
                    ClassLabel::SingleParameterFp { t },
                ));
            }
            // The lone sporadic fixed point: 25 in base 8.
            if n == 2 {
                out.push((
                    idx(base, vec![0, 0, 1, 0, 0, 1, 0, 0]),
                    ClassLabel::SpecialFp,
                ));
            }
        }
        _ => {}
    }

    for (k, _) in &out {
        debug_assert_eq!(kaprekar_step(k).as_ref(), Ok(k));
    }
    Ok(out)
}

/// All catalogued cycles (length >= 2) with digit count `n`, labelled and in
/// canonical rotation.
pub fn generate_cycles(base: BaseConfig, n: u32) -> Result<Vec<(CycleRecord, ClassLabel)>> {
    require_catalogued(base, "cycle generation")?;
    let mut out: Vec<(CycleRecord, ClassLabel)> = Vec::new();
    match base.get() {
        4 => {
            // No symmetric or almost-symmetric cycles exist: the lone
            // interior orbit has length 1, so symmetry forces a fixed point.
            single_param_cycles_into(base, n, &mut out)?;
            special_cycles_into(base, n, &mut out)?;
        }
        6 => {
            // Symmetric: (c,t,u,u,t,c) <-> (c,u,t,t,u,c), c >= 1, t != u.
            if n.is_multiple_of(2) {
                for c in 1.. {
                    if 2 * c + 6 > n {
                        break;
                    }
                    let s = (n - 2 * c) / 2;
                    for t in 1..=(s - 1) / 2 {
                        let u = s - t;
                        if t == u {
                            continue;
                        }
                        let rec = cycle_from_rows(
                            base,
                            vec![vec![c, t, u, u, t, c], vec![c, u, t, t, u, c]],
                        )?;
                        out.push((rec, ClassLabel::SymmetricCycle { length: 2 }));
                    }
                }
            }
            // Almost-symmetric: same interior, ends k0 < k5 < k0 + min(t,u).
            for k0 in 1..n {
                for k5 in (k0 + 1)..n {
                    let used = k0 + k5;
                    if used + 6 > n || !(n - used).is_multiple_of(2) {
                        continue;
                    }
                    let s = (n - used) / 2;
                    for t in 1..=(s - 1) / 2 {
                        let u = s - t;
                        if t == u || k5 - k0 >= t.min(u) {
                            continue;
                        }
                        let rec = cycle_from_rows(
                            base,
                            vec![vec![k0, t, u, u, t, k5], vec![k0, u, t, t, u, k5]],
                        )?;
                        out.push((
                            rec,
                            ClassLabel::AlmostSymmetricCycle {
                                length: 2,
                                alpha: k5 - k0,
                            },
                        ));
                    }
                }
            }
            // Non-symmetric sigma-cycles: pairs (t,u), t >= 0, u >= 1,
            // t + u = (n-4)/2, u != t+1. The two members swap parameters
            // via (t,u) -> (u-1, t+1); keeping u >= t+2 picks one
            // representative per cycle.
            if n.is_multiple_of(2) && n >= 8 {
                let s = (n - 4) / 2;
                for t in 0..s {
                    let u = s - t;
                    if u >= t + 2 {
                        let rec = canonicalize_cycle(&nonsym_sigma_cycle_b6(t, u))?;
                        out.push((rec, ClassLabel::NonSymmetricSigmaCycle { length: 2 }));
                    }
                }
            }
            single_param_cycles_into(base, n, &mut out)?;
            special_cycles_into(base, n, &mut out)?;
        }
        8 => {
            // Symmetric: interiors rotate through (t,u,v) -> (v,t,u); one
            // representative per rotation class.
            if n.is_multiple_of(2) {
                for c in 1.. {
                    if 2 * c + 8 > n {
                        break;
                    }
                    let s = (n - 2 * c) / 2;
                    for (t, u, v) in rotation_least_triples(s) {
                        let rec = cycle_from_rows(
                            base,
                            vec![
                                vec![c, t, u, v, v, u, t, c],
                                vec![c, v, t, u, u, t, v, c],
                                vec![c, u, v, t, t, v, u, c],
                            ],
                        )?;
                        out.push((rec, ClassLabel::SymmetricCycle { length: 3 }));
                    }
                }
            }
            // Almost-symmetric: ends k0 < k7 < k0 + min(t,u,v).
            for k0 in 1..n {
                for k7 in (k0 + 1)..n {
                    let used = k0 + k7;
                    if used + 8 > n || !(n - used).is_multiple_of(2) {
                        continue;
                    }
                    let s = (n - used) / 2;
                    for (t, u, v) in rotation_least_triples(s) {
                        if k7 - k0 >= t.min(u).min(v) {
                            continue;
                        }
                        let rec = cycle_from_rows(
                            base,
                            vec![
                                vec![k0, t, u, v, v, u, t, k7],
                                vec![k0, v, t, u, u, t, v, k7],
                                vec![k0, u, v, t, t, v, u, k7],
                            ],
                        )?;
                        out.push((
                            rec,
                            ClassLabel::AlmostSymmetricCycle {
                                length: 3,
                                alpha: k7 - k0,
                            },
                        ));
                    }
                }
            }
            // Non-symmetric sigma-cycles: triples (t,u,v), t >= 0, u,v >= 1,
            // t + u + v = (n-2)/2, rotating via (t,u,v) -> (v-1, t+1, u);
            // the all-equal orbit (t+1 = u = v) is a fixed point, not a
            // cycle. One representative per orbit.
            if n.is_multiple_of(2) && n >= 8 {
                let w = (n - 2) / 2;
                for t in 0..w {
                    for u in 1..w {
                        if t + u >= w {
                            break;
                        }
                        let v = w - t - u;
                        if t + 1 == u && u == v {
                            continue;
                        }
                        let here = (t, u, v);
                        let second = (v - 1, t + 1, u);
                        let third = (u - 1, v, t + 1);
                        if here <= second && here <= third {
                            let rec = canonicalize_cycle(&nonsym_sigma_cycle_b8(t, u, v))?;
                            out.push((rec, ClassLabel::NonSymmetricSigmaCycle { length: 3 }));
                        }
                    }
                }
            }
            single_param_cycles_into(base, n, &mut out)?;
            special_cycles_into(base, n, &mut out)?;
        }
        _ => unreachable!("guarded by require_catalogued"),
    }
    Ok(out)
}

/// Ordered positive triples summing to `s` that are the lexicographic
/// minimum of their rotation class and not constant: one representative per
/// interior orbit of a base-8 [almost-]symmetric cycle.
fn rotation_least_triples(s: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for t in 1..s {
        for u in 1..s {
            if t + u >= s {
                break;
            }
            let v = s - t - u;
            if t == u && u == v {
                continue;
            }
            let here = (t, u, v);
            if here <= (v, t, u) && here <= (u, v, t) {
                out.push(here);
            }
        }
    }
    out
}

fn single_param_cycles_into(
    base: BaseConfig,
    n: u32,
    out: &mut Vec<(CycleRecord, ClassLabel)>,
) -> Result<()> {
    for (family, t) in single_param_occurrences(base.get(), n) {
        let members =
            single_param_cycle(base.get(), family, t).expect("occurrence implies constructible");
        let rec = canonicalize_cycle(&members)?;
        out.push((rec, ClassLabel::SingleParameterCycle { family, t }));
    }
    Ok(())
}

fn special_cycles_into(
    base: BaseConfig,
    n: u32,
    out: &mut Vec<(CycleRecord, ClassLabel)>,
) -> Result<()> {
    for (i, members) in special_cycles_at(base, n).into_iter().enumerate() {
        let rec = canonicalize_cycle(&members)?;
        out.push((
            rec,
            ClassLabel::SpecialCycle {
                ordinal: i as u8 + 1,
            },
        ));
    }
    Ok(())
}

/// `(family, t)` for every single-parameter cycle with digit count `n`.
pub(crate) fn single_param_occurrences(b: u8, n: u32) -> Vec<(u8, u32)> {
    let mut out = Vec::new();
    match b {
        4 => {
            // n = 3t + 8, length 3.
            if n >= 11 && (n - 8).is_multiple_of(3) {
                out.push((1, (n - 8) / 3));
            }
        }
        6 => {
            // n = 2t + 5, length 2.
            if n >= 7 && n % 2 == 1 {
                out.push((1, (n - 5) / 2));
            }
        }
        8 => {
            if n >= 11 && (n - 4).is_multiple_of(7) {
                out.push((1, (n - 4) / 7)); // length 2
                out.push((6, (n - 4) / 7)); // length 6
            }
            if n >= 12 && (n - 7).is_multiple_of(5) {
                out.push((2, (n - 7) / 5)); // length 2
            }
            if n >= 4 && n.is_multiple_of(2) {
                out.push((3, (n - 2) / 2)); // length 3
            }
            if n >= 13 && (n - 6).is_multiple_of(7) {
                out.push((4, (n - 6) / 7)); // length 5
                out.push((7, (n - 6) / 7)); // length 9
            }
            if n >= 17 && (n - 10).is_multiple_of(7) {
                out.push((5, (n - 10) / 7)); // length 5
            }
            if n >= 15 && (n - 8).is_multiple_of(7) {
                out.push((8, (n - 8) / 7)); // length 12
            }
        }
        _ => {}
    }
    out
}

/// The `(family, t)` pairs that could explain a cycle of the given digit
/// count and length — `single_param_occurrences` filtered by length.
pub(crate) fn single_param_cycle_candidates(b: u8, n: u32, length: u32) -> Vec<(u8, u32)> {
    single_param_occurrences(b, n)
        .into_iter()
        .filter(|&(family, t)| {
            single_param_cycle(b, family, t)
                .map(|m| m.len() as u32 == length)
                .unwrap_or(false)
        })
        .collect()
}

/// Members of a single-parameter cycle family at parameter `t >= 1`, in
/// orbit order. `None` if the base/family pair does not exist or `t == 0`.
pub(crate) fn single_param_cycle(b: u8, family: u8, t: u32) -> Option<Vec<KaprekarIndex>> {
    if t == 0 {
        return None;
    }
    let base = BaseConfig::new(b).ok()?;
    let rows: Vec<Vec<u32>> = match (b, family) {
        (4, 1) => vec![
            vec![1, t + 2, t + 2, t + 3],
            vec![0, t + 4, t + 1, t + 3],
            vec![1, t + 2, t + 5, t],
        ],
        (6, 1) => vec![
            vec![1, t, 1, 0, t + 2, 1],
            vec![0, 2, t, t + 1, 0, 2],
        ],
        (8, 1) => vec![
            vec![1, t, t + 1, t, t, t, t + 2, t],
            vec![0, t + 1, t, t + 1, t + 1, t + 1, t - 1, t + 1],
        ],
        (8, 2) => vec![
            vec![1, 0, 2 * t + 2, 0, 0, 2 * t + 1, 2, t + 1],
            vec![0, 1, t + 1, t + 1, t + 2, t, 0, t + 2],
        ],
        (8, 3) => vec![
            vec![1, t - 1, 0, 1, 0, 1, t, 0],
            vec![0, 1, t, 0, 0, t, 1, 0],
            vec![0, 0, 1, t, t, 1, 0, 0],
        ],
        (8, 4) => vec![
            vec![1, t - 1, t + 2, t + 1, t + 1, t + 1, t + 1, t],
            vec![1, t, t, t + 2, t + 2, t, t, t + 1],
            vec![1, t + 2, t, t, t, t, t + 2, t + 1],
            vec![0, t + 2, t + 1, t, t, t + 2, t, t + 1],
            vec![0, t + 1, t + 1, t + 1, t + 1, t + 1, t + 1, t],
        ],
        (8, 5) => vec![
            vec![1, t + 1, t + 2, t + 1, t + 1, t + 1, t + 3, t],
            vec![1, t, t + 2, t + 2, t + 2, t + 2, t, t + 1],
            vec![1, t + 2, t, t + 2, t + 2, t, t + 2, t + 1],
            vec![1, t + 2, t + 2, t, t, t + 2, t + 2, t + 1],
            vec![0, t + 2, t + 1, t + 2, t + 2, t + 2, t, t + 1],
        ],
        (8, 6) => vec![
            vec![1, t - 1, t + 1, t + 1, t + 1, t, t + 1, t],
            vec![1, t, t, t + 1, t + 1, t, t, t + 1],
            vec![1, t + 1, t, t, t, t, t + 1, t + 1],
            vec![0, t + 2, t, t, t, t + 1, t, t + 1],
            vec![0, t + 1, t + 1, t, t, t + 1, t + 1, t],
            vec![0, t, t + 1, t + 1, t + 1, t + 1, t, t],
        ],
        (8, 7) => vec![
            vec![1, t + 1, t + 1, t, t, t, t + 3, t],
            vec![0, t + 1, t + 1, t + 1, t + 1, t + 2, t - 1, t + 1],
            vec![1, t, t + 1, t + 1, t + 1, t, t + 2, t],
            vec![1, t, t + 1, t + 1, t + 1, t + 1, t, t + 1],
            vec![1, t + 1, t, t + 1, t + 1, t, t + 1, t + 1],
            vec![1, t + 1, t + 1, t, t, t + 1, t + 1, t + 1],
            vec![0, t + 2, t, t + 1, t + 1, t + 1, t, t + 1],
            vec![1, t, t + 2, t, t, t + 1, t + 2, t],
            vec![0, t + 1, t, t + 2, t + 2, t + 1, t - 1, t + 1],
        ],
        (8, 8) => vec![
            vec![1, t + 1, t + 1, t + 1, t + 1, t, t + 3, t],
            vec![1, t, t + 2, t + 1, t + 1, t + 2, t, t + 1],
            vec![1, t + 1, t, t + 2, t + 2, t, t + 1, t + 1],
            vec![1, t + 2, t + 1, t, t, t + 1, t + 2, t + 1],
            vec![0, t + 2, t + 1, t + 1, t + 1, t + 2, t, t + 1],
            vec![1, t, t + 2, t + 1, t + 1, t + 1, t + 2, t],
            vec![1, t, t + 1, t + 2, t + 2, t + 1, t, t + 1],
            vec![1, t + 2, t, t + 1, t + 1, t, t + 2, t + 1],
            vec![1, t + 1, t + 2, t, t, t + 2, t + 1, t + 1],
            vec![0, t + 2, t, t + 2, t + 2, t + 1, t, t + 1],
            vec![1, t + 1, t + 2, t, t, t + 1, t + 3, t],
            vec![0, t + 1, t + 1, t + 2, t + 2, t + 2, t - 1, t + 1],
        ],
        _ => return None,
    };
    Some(rows.into_iter().map(|row| idx(base, row)).collect())
}

/// Members of the base-6 non-symmetric sigma-cycle with parameters `(t, u)`:
/// `(1,t,u+1,u,t+2,0) <-> (1,u-1,t+2,t+1,u+1,0)`. Requires `u >= 1`.
pub(crate) fn nonsym_sigma_cycle_b6(t: u32, u: u32) -> Vec<KaprekarIndex> {
    debug_assert!(u >= 1);
    let base = BaseConfig::new(6).expect("6 is a valid base");
    vec![
        idx(base, vec![1, t, u + 1, u, t + 2, 0]),
        idx(base, vec![1, u - 1, t + 2, t + 1, u + 1, 0]),
    ]
}

/// Members of the base-8 non-symmetric sigma-cycle with parameters
/// `(t, u, v)`, in orbit order. Requires `u >= 1` and `v >= 1`.
pub(crate) fn nonsym_sigma_cycle_b8(t: u32, u: u32, v: u32) -> Vec<KaprekarIndex> {
    debug_assert!(u >= 1 && v >= 1);
    let base = BaseConfig::new(8).expect("8 is a valid base");
    vec![
        idx(base, vec![1, t, u, v, v, u - 1, t + 2, 0]),
        idx(base, vec![1, v - 1, t + 1, u, u, t, v + 1, 0]),
        idx(base, vec![1, u - 1, v, t + 1, t + 1, v - 1, u + 1, 0]),
    ]
}

/// The sporadic cycles with digit count `n`, in a fixed order; the position
/// plus one is the ordinal used in [`ClassLabel::SpecialCycle`].
pub(crate) fn special_cycles_at(base: BaseConfig, n: u32) -> Vec<Vec<KaprekarIndex>> {
    let rows: &[&[&[u32]]] = match (base.get(), n) {
        (4, 2) => &[&[&[1, 0, 0, 1], &[0, 1, 1, 0]]],
        (4, 4) => &[&[&[1, 0, 3, 0], &[0, 1, 1, 2]]],
        (4, 5) => &[&[&[1, 0, 3, 1], &[0, 1, 1, 3]]],
        (4, 8) => &[&[&[1, 1, 4, 2], &[0, 3, 0, 5], &[0, 3, 3, 2]]],
        (6, 2) => &[&[
            &[1, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 1, 1, 0, 0],
        ]],
        (6, 4) => &[&[
            &[0, 1, 0, 0, 1, 2],
            &[1, 0, 1, 0, 2, 0],
            &[0, 1, 1, 1, 1, 0],
            &[1, 0, 0, 2, 1, 0],
            &[0, 0, 1, 1, 0, 2],
            &[0, 1, 0, 3, 0, 0],
        ]],
        (6, 5) => &[&[&[0, 1, 0, 3, 0, 1], &[0, 0, 1, 1, 0, 3]]],
        (6, 6) => &[&[
            &[1, 0, 1, 0, 2, 2],
            &[0, 1, 2, 0, 0, 3],
            &[0, 0, 4, 1, 1, 0],
        ]],
        (6, 8) => &[&[
            &[1, 2, 0, 2, 3, 0],
            &[0, 0, 4, 1, 1, 2],
            &[1, 0, 2, 4, 1, 0],
            &[1, 1, 1, 0, 3, 2],
            &[0, 3, 0, 1, 1, 3],
            &[1, 2, 1, 0, 4, 0],
            &[0, 1, 3, 3, 1, 0],
        ]],
        // Base 8 at two digits mirrors the base-6 entry above: 70 - 07 = 61,
        // 61 - 16 = 43, 43 - 34 = 07.  This three-cycle coexists with the
        // fixed point 25, so neither object is unanimous at this width.
        (8, 2) => &[&[
            &[1, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
        ]],
        (8, 4) => &[&[
            &[0, 1, 0, 0, 0, 0, 1, 2],
            &[1, 0, 1, 0, 0, 0, 2, 0],
            &[0, 0, 1, 2, 0, 0, 1, 0],
            &[0, 0, 0, 1, 1, 0, 0, 2],
            &[0, 0, 1, 0, 3, 0, 0, 0],
        ]],
        (8, 5) => &[
            &[&[0, 0, 1, 0, 3, 0, 0, 1], &[0, 0, 0, 1, 1, 0, 0, 3]],
            &[
                &[0, 1, 0, 1, 0, 2, 0, 1],
                &[0, 1, 1, 0, 0, 1, 1, 1],
                &[0, 0, 1, 2, 0, 0, 1, 1],
                &[0, 0, 1, 1, 1, 1, 0, 1],
            ],
        ],
        (8, 7) => &[
            &[
                &[1, 0, 1, 1, 1, 0, 2, 1],
                &[0, 1, 1, 1, 2, 0, 0, 2],
                &[1, 0, 2, 0, 0, 1, 2, 1],
                &[0, 1, 0, 3, 1, 0, 0, 2],
            ],
            &[
                &[1, 0, 0, 2, 1, 1, 1, 1],
                &[0, 2, 0, 1, 1, 1, 0, 2],
                &[0, 2, 1, 0, 0, 1, 2, 1],
                &[0, 0, 2, 2, 0, 1, 1, 1],
                &[0, 1, 0, 2, 1, 2, 0, 1],
                &[0, 1, 2, 0, 0, 2, 1, 1],
                &[0, 0, 2, 1, 2, 0, 1, 1],
            ],
        ],
        (8, 9) => &[
            &[
                &[1, 1, 2, 0, 0, 1, 3, 1],
                &[0, 1, 1, 3, 1, 1, 0, 2],
                &[1, 0, 3, 0, 0, 2, 2, 1],
                &[0, 1, 1, 2, 3, 0, 0, 2],
            ],
            &[
                &[1, 0, 0, 3, 2, 1, 1, 1],
                &[1, 1, 1, 1, 1, 1, 1, 2],
                &[0, 3, 0, 1, 1, 1, 1, 2],
                &[0, 2, 2, 0, 0, 2, 2, 1],
                &[0, 0, 3, 1, 2, 1, 1, 1],
            ],
            &[
                &[1, 0, 1, 2, 2, 0, 2, 1],
                &[1, 1, 0, 2, 2, 0, 1, 2],
                &[1, 2, 0, 1, 1, 0, 2, 2],
                &[0, 2, 2, 0, 1, 1, 1, 2],
                &[0, 1, 2, 1, 2, 0, 2, 1],
            ],
        ],
        (8, 11) => &[&[
            &[1, 0, 3, 1, 1, 2, 2, 1],
            &[0, 2, 0, 3, 3, 1, 0, 2],
            &[1, 2, 2, 0, 0, 1, 4, 1],
            &[0, 1, 2, 3, 1, 2, 0, 2],
        ]],
        (8, 12) => &[&[
            &[1, 0, 2, 2, 2, 1, 2, 2],
            &[0, 2, 1, 2, 2, 2, 0, 3],
            &[0, 2, 3, 0, 0, 3, 2, 2],
            &[0, 1, 2, 2, 3, 0, 2, 2],
        ]],
        _ => &[],
    };
    rows.iter()
        .map(|cycle| {
            cycle
                .iter()
                .map(|row| idx(base, row.to_vec()))
                .collect()
        })
        .collect()
}
