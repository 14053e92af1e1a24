//! Closed-form counting of every fixed-point and cycle class.
//!
//! The counts come in three layers:
//!
//! 1. **General formulas** valid in every even base: symmetric fixed points,
//!    almost-symmetric fixed points, and — for bases whose interior digit
//!    pairs form a single orbit — symmetric and almost-symmetric cycles via
//!    necklace counting ([`n_gamma`], [`n_k_gamma`]).
//! 2. **Per-base closed forms** for bases 4, 6 and 8 ([`count_sa_fp`],
//!    [`count_sac_cycles`], [`count_zero_free`], [`count_nonsym_sigma`],
//!    [`count_total_fixed_points_base4`]).
//! 3. **Occurrence rules** for the single-parameter and sporadic families,
//!    shared with the catalogue generators.
//!
//! Everything is exact integer arithmetic: formulas with fractional
//! correction terms are evaluated with cleared denominators and a single
//! floor division, never in floating point.

use std::collections::BTreeMap;

use num_integer::{binomial, Integer};

use crate::base::BaseConfig;
use crate::catalogue;
use crate::classify::ClassKind;
use crate::error::{Error, Result};
use crate::sigma::i_cycles;

/// Floor of `numer / denom` in exact integer arithmetic, clamped at zero —
/// the counting formulas are nonnegative wherever they apply.
fn floor_count(numer: i128, denom: i128) -> u64 {
    debug_assert!(denom > 0);
    Integer::div_floor(&numer, &denom).max(0) as u64
}

/// 1 where divisibility-style occurrence rules fire, 0 elsewhere.
fn indicator(condition: bool) -> u64 {
    condition as u64
}

fn require_catalogued(base: BaseConfig, operation: &'static str) -> Result<()> {
    if catalogue::CATALOGUED_BASES.contains(&base.get()) {
        Ok(())
    } else {
        Err(Error::UnsupportedBase {
            base: base.get(),
            operation,
        })
    }
}

/// Errors unless the interior digit pairs of `base` form a single orbit
/// under doubling — the precondition for the necklace-based cycle counts.
fn require_single_interior_orbit(base: BaseConfig, operation: &'static str) -> Result<()> {
    base.require_even(operation)?;
    if i_cycles(base.top_digit())?.len() == 1 {
        Ok(())
    } else {
        Err(Error::UnsupportedBase {
            base: base.get(),
            operation,
        })
    }
}

/// Number of symmetric fixed points with digit count `n` in an even base:
/// `floor((n-2)/(b-2))` for even `n`, none for odd `n`.
pub fn count_symmetric_fp(base: BaseConfig, n: u32) -> Result<u64> {
    base.require_even("symmetric fixed-point counting")?;
    let b = base.get() as i128;
    let n = n as i128;
    if n % 2 != 0 || n < 4 {
        return Ok(0);
    }
    Ok(floor_count(n - 2, b - 2))
}

/// Number of almost-symmetric fixed points with digit count `n` in an even
/// base, summed over the admissible end-imbalance values.
pub fn count_almost_symmetric_fp(base: BaseConfig, n: u32) -> Result<u64> {
    base.require_even("almost-symmetric fixed-point counting")?;
    let b = base.get() as i128;
    let n = n as i128;
    let mut total = 0u64;
    if n % 2 == 1 {
        // Odd digit counts pair with odd imbalances alpha = 2m - 1.
        for m in 1..=Integer::div_floor(&(n - 1), &(2 * (b - 1))) {
            total += floor_count(n - 2 * (b - 1) * m + b - 3, b - 2);
        }
    } else {
        // Even digit counts pair with even imbalances alpha = 2m.
        for m in 1..=Integer::div_floor(&(n - b), &(2 * (b - 1))) {
            total += floor_count(n - 2 * (b - 1) * m - 2, b - 2);
        }
    }
    Ok(total)
}

/// Combined count of symmetric plus almost-symmetric fixed points at even
/// digit count `n`, by the per-base closed forms for bases 4, 6 and 8.
pub fn count_sa_fp(base: BaseConfig, n: u32) -> Result<u64> {
    require_catalogued(base, "combined fixed-point closed form")?;
    if !n.is_multiple_of(2) {
        return Err(Error::DomainError {
            operation: "combined fixed-point closed form",
            requirement: "even digit count",
            got: n.to_string(),
        });
    }
    let n = n as i128;
    Ok(match base.get() {
        4 => floor_count(n * (n + 2), 24),
        6 => floor_count((n + 2) * (n + 2) + 16, 80),
        8 => floor_count(n * (n + 6) + 56, 168),
        _ => unreachable!("guarded by require_catalogued"),
    })
}

/// Number of ordered positive `c`-tuples summing to `omega`: the
/// compositions `binom(omega-1, c-1)`.
pub fn n_gamma_tilde(c: u32, omega: u32) -> u64 {
    if c == 0 || omega == 0 {
        return 0;
    }
    binomial(omega as u64 - 1, c as u64 - 1)
}

/// Number of rotation classes of positive `c`-tuples summing to `omega`,
/// excluding the constant class. Counted over the cyclic group: a class of
/// period `c/d` exists only when `d` divides `omega`, weighted by the
/// totient of `d`; for prime `c` this reduces to
/// `floor(n_gamma_tilde(c, omega) / c)`.
pub fn n_gamma(c: u32, omega: u32) -> u64 {
    if c == 0 || omega == 0 {
        return 0;
    }
    let mut orbit_sum = 0u64;
    for d in divisors(c) {
        if omega.is_multiple_of(d) {
            orbit_sum += euler_phi(d) as u64 * n_gamma_tilde(c / d, omega / d);
        }
    }
    debug_assert_eq!(orbit_sum % c as u64, 0);
    let classes = orbit_sum / c as u64;
    classes - indicator(omega.is_multiple_of(c) && classes > 0)
}

/// Cumulative rotation-class count `sum over omega < eta of n_gamma(c, omega)`.
pub fn n_k_gamma(c: u32, eta: u32) -> u64 {
    (1..eta).map(|omega| n_gamma(c, omega)).sum()
}

/// Number of symmetric cycles with digit count `n`. Valid for even bases
/// whose interior pairs form a single orbit; zero for odd `n`.
pub fn count_symmetric_cycles(base: BaseConfig, n: u32) -> Result<u64> {
    require_single_interior_orbit(base, "symmetric-cycle counting")?;
    if !n.is_multiple_of(2) {
        return Ok(0);
    }
    let c = base.get() as u32 / 2 - 1;
    Ok(n_k_gamma(c, n / 2))
}

/// Number of almost-symmetric cycles with digit count `n`, summed over the
/// admissible end imbalances. Same base requirements as
/// [`count_symmetric_cycles`].
pub fn count_almost_symmetric_cycles(base: BaseConfig, n: u32) -> Result<u64> {
    require_single_interior_orbit(base, "almost-symmetric-cycle counting")?;
    let b = base.get() as i128;
    let c = base.get() as u32 / 2 - 1;
    let n = n as i128;
    let mut total = 0u64;
    if n % 2 == 1 {
        for m in 1..=Integer::div_floor(&(n - 3), &(2 * (b - 1))) {
            let eta = (n - 2 * (b - 1) * m + (b - 1)) / 2;
            total += n_k_gamma(c, eta as u32);
        }
    } else {
        for m in 1..=Integer::div_floor(&(n - b - 2), &(2 * (b - 1))) {
            let eta = (n - 2 * (b - 1) * m) / 2;
            total += n_k_gamma(c, eta as u32);
        }
    }
    Ok(total)
}

/// Combined count of symmetric plus almost-symmetric cycles at even digit
/// count `n`, by the per-base closed forms. Base 4 has none: its single
/// interior orbit has length 1, so symmetry forces a fixed point.
pub fn count_sac_cycles(base: BaseConfig, n: u32) -> Result<u64> {
    require_catalogued(base, "combined cycle closed form")?;
    if !n.is_multiple_of(2) {
        return Err(Error::DomainError {
            operation: "combined cycle closed form",
            requirement: "even digit count",
            got: n.to_string(),
        });
    }
    let n = n as i128;
    Ok(match base.get() {
        4 => 0,
        6 => floor_count(n * (n - 4) * (n + 7) + 96, 480),
        8 => floor_count(n * (n + 6) * (n * n + 6 * n - 104) + 3456, 8064),
        _ => unreachable!("guarded by require_catalogued"),
    })
}

/// Number of zero-free fixed points with digit count `n` (those whose
/// smallest-digit component vanishes), per base:
///
/// - base 4: the triad shape is the only one — 1 exactly when 3 divides `n`;
/// - base 6: triad, uniform and interleaved shapes together,
///   `floor(n/15) + q`;
/// - base 8: uniform, interleaved and perturbed shapes, `floor(n/35) + q`
///   plus `n/7 - 1` when 7 divides `n` — the base-8 triad is counted by its
///   own selector, not here.
pub fn count_zero_free(base: BaseConfig, n: u32) -> Result<u64> {
    require_catalogued(base, "zero-free fixed-point counting")?;
    Ok(match base.get() {
        4 => indicator(n >= 3 && n.is_multiple_of(3)),
        6 => {
            let q = indicator(![1, 2, 4, 7].contains(&(n % 15)));
            (n / 15) as u64 + q
        }
        8 => {
            const ZEROLESS_RESIDUES: [u32; 19] = [
                0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 13, 15, 16, 18, 20, 23, 25, 30,
            ];
            let q = indicator(!ZEROLESS_RESIDUES.contains(&(n % 35)));
            let pairs = (n / 35) as u64 + q;
            let perturbed = if n.is_multiple_of(7) && n >= 14 {
                (n / 7 - 1) as u64
            } else {
                0
            };
            pairs + perturbed
        }
        _ => unreachable!("guarded by require_catalogued"),
    })
}

/// Number of non-symmetric cycles from the interior-orbit family with digit
/// count `n`: rotation classes of the shifted parameter tuples. None exist
/// in base 4.
pub fn count_nonsym_sigma(base: BaseConfig, n: u32) -> Result<u64> {
    require_catalogued(base, "non-symmetric orbit-family counting")?;
    if !n.is_multiple_of(2) {
        return Ok(0);
    }
    Ok(match base.get() {
        4 => 0,
        6 => n_gamma(2, (n - 2) / 2),
        8 => n_gamma(3, n / 2),
        _ => unreachable!("guarded by require_catalogued"),
    })
}

/// Total number of base-4 fixed points with digit count `n >= 2`, by the
/// piecewise closed form over `n mod 6`.
pub fn count_total_fixed_points_base4(n: u32) -> u64 {
    let n = n as i128;
    let value = match n.mod_floor(&6) {
        0 => (n - 2) / 2 + (n - 6) * (n - 4) / 24 + 1,
        1 => (n - 1) * (n - 3) / 24,
        2 => (n - 2) / 2 + (n - 8) * (n - 2) / 24,
        3 => (n - 3) * (n - 1) / 24 + 1,
        4 => (n - 2) / 2 + (n - 4) * (n - 6) / 24,
        _ => (n - 5) * (n + 1) / 24,
    };
    value.max(0) as u64
}

/// Expected number of catalogued objects of every class at digit count `n`,
/// combining the closed-form counts with the occurrence rules of the
/// single-parameter and sporadic families.
pub fn count_catalogue(base: BaseConfig, n: u32) -> Result<BTreeMap<ClassKind, u64>> {
    require_catalogued(base, "catalogue counting")?;
    let b = base.get();
    let mut table = BTreeMap::new();

    let uniform_zero_free = match b {
        6 => indicator(n >= 5 && n.is_multiple_of(5)),
        8 => indicator(n >= 7 && n.is_multiple_of(7)),
        _ => 0, // in base 4 the uniform shape is the triad shape
    };
    let triad = indicator(n >= 3 && n.is_multiple_of(3));
    let other_zero_free = match b {
        4 => 0,
        6 => count_zero_free(base, n)? - uniform_zero_free - triad,
        8 => count_zero_free(base, n)? - uniform_zero_free,
        _ => unreachable!("guarded by require_catalogued"),
    };
    let single_param_fp = match b {
        6 => indicator(n >= 6 && n % 4 == 2),
        8 => indicator(n >= 6 && n.is_multiple_of(6)),
        _ => 0,
    };

    table.insert(ClassKind::SymmetricFp, count_symmetric_fp(base, n)?);
    table.insert(
        ClassKind::AlmostSymmetricFp,
        count_almost_symmetric_fp(base, n)?,
    );
    table.insert(ClassKind::UniformZeroFreeFp, uniform_zero_free);
    table.insert(ClassKind::TriadFp, triad);
    table.insert(ClassKind::OtherZeroFreeFp, other_zero_free);
    table.insert(ClassKind::SingleParameterFp, single_param_fp);
    table.insert(ClassKind::SpecialFp, indicator(b == 8 && n == 2));
    table.insert(
        ClassKind::SymmetricCycle,
        count_symmetric_cycles(base, n)?,
    );
    table.insert(
        ClassKind::AlmostSymmetricCycle,
        count_almost_symmetric_cycles(base, n)?,
    );
    table.insert(
        ClassKind::NonSymmetricSigmaCycle,
        count_nonsym_sigma(base, n)?,
    );
    table.insert(
        ClassKind::SingleParameterCycle,
        catalogue::single_param_occurrences(b, n).len() as u64,
    );
    table.insert(
        ClassKind::SpecialCycle,
        catalogue::special_cycles_at(base, n).len() as u64,
    );
    table.insert(ClassKind::Unclassified, 0);
    Ok(table)
}

fn divisors(c: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=c).filter(|d| c.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|x| x.gcd(&d) == 1).count() as u32
}
