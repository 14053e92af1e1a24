use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalogue;
use crate::error::{Error, Result};
use crate::index::KaprekarIndex;
use crate::orbit::{cyclically_equal, CycleRecord};
use crate::transform::kaprekar_step;

/// Structural symmetry facts about one index.
///
/// `full` means every digit value occurs. A full index is `symmetric` when
/// mirrored components agree (`k_i = k_{B-i}` for all `i`, ends included)
/// and `almost_symmetric` when the interior mirrors but the ends are
/// lopsided within tolerance: `k_0 < k_B < k_0 + min(interior)`. `alpha` and
/// `beta` are the difference and sum of the end components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryInfo {
    pub full: bool,
    pub symmetric: bool,
    pub almost_symmetric: bool,
    /// End-component imbalance `k_B - k_0` (any sign for arbitrary input).
    pub alpha: i64,
    /// End-component mass `k_B + k_0`.
    pub beta: u64,
}

/// Computes the symmetry facts for an even-base index.
pub fn symmetry_info(k: &KaprekarIndex) -> Result<SymmetryInfo> {
    k.base().require_even("symmetry classification")?;
    let counts = k.counts();
    let top = k.base().top_digit() as usize;
    let full = counts.iter().all(|&c| c >= 1);
    let interior_mirrored = (1..top).all(|i| counts[i] == counts[top - i]);
    let symmetric = full && interior_mirrored && counts[0] == counts[top];
    let min_interior = counts[1..top].iter().copied().min().unwrap_or(0);
    let almost_symmetric = full
        && interior_mirrored
        && counts[0] < counts[top]
        && counts[top] < counts[0] + min_interior;
    Ok(SymmetryInfo {
        full,
        symmetric,
        almost_symmetric,
        alpha: counts[top] as i64 - counts[0] as i64,
        beta: counts[top] as u64 + counts[0] as u64,
    })
}

/// The two shapes of zero-free fixed points beyond the uniform and triad
/// ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroFreeVariant {
    /// A second parameter `u` interleaved into the uniform pattern:
    /// base 6 `(0,u,t,t,u,t)`, base 8 `(0,t,u,t,t,u,t,t)`.
    Interleaved,
    /// The uniform pattern perturbed by `±ε`:
    /// base 8 `(0,t-ε,t+ε,t,t,t+ε,t-ε,t)`.
    Perturbed,
}

/// Taxonomy label for a fixed point or cycle, with the parameters that place
/// it inside its family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum ClassLabel {
    /// Full index, mirror-equal including the ends. `uniform` records
    /// whether all interior components agree (always true in bases 4–8).
    SymmetricFp { uniform: bool },
    /// Full index, interior mirror-equal, ends lopsided by `alpha`.
    AlmostSymmetricFp { uniform: bool, alpha: u32 },
    /// `(0, t, t, ..., t)`: every nonzero digit occurs equally often.
    UniformZeroFreeFp { t: u32 },
    /// `t` copies each of the two middle digits and the top digit, nothing
    /// else; in base 4 this coincides with the uniform pattern.
    TriadFp { t: u32 },
    /// Remaining zero-free shapes of bases 6 and 8; `second` is `u` for the
    /// interleaved variant and `ε` for the perturbed one.
    OtherZeroFreeFp {
        variant: ZeroFreeVariant,
        t: u32,
        second: u32,
    },
    /// One-parameter families outside the symmetric world:
    /// base 6 `(1,t-1,t+1,t,t+1,0)`, base 8 `(1,t-1,t,t,t,t-1,t+1,0)`.
    SingleParameterFp { t: u32 },
    /// Sporadic fixed points (base 8's two-digit `25`).
    SpecialFp,
    /// Every member symmetric; interior components shuffle along their
    /// doubling orbits.
    SymmetricCycle { length: u32 },
    /// Every member almost-symmetric with the same end imbalance `alpha`.
    AlmostSymmetricCycle { length: u32, alpha: u32 },
    /// The non-symmetric analogue still driven by position doubling:
    /// base 6 `(1,t,u+1,u,t+2,0)`, base 8 `(1,t,u,v,v,u-1,t+2,0)`.
    NonSymmetricSigmaCycle { length: u32 },
    /// One-parameter cycle families; `family` numbers them per base
    /// (base 4 and 6 have one each, base 8 has eight).
    SingleParameterCycle { family: u8, t: u32 },
    /// Sporadic cycles, listed per base and digit count; `ordinal`
    /// distinguishes coexisting ones at the same digit count.
    SpecialCycle { ordinal: u8 },
    /// A verified fixed point or cycle outside every catalogued family.
    Unclassified,
}

/// The label's family without its parameters — the unit of counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    SymmetricFp,
    AlmostSymmetricFp,
    UniformZeroFreeFp,
    TriadFp,
    OtherZeroFreeFp,
    SingleParameterFp,
    SpecialFp,
    SymmetricCycle,
    AlmostSymmetricCycle,
    NonSymmetricSigmaCycle,
    SingleParameterCycle,
    SpecialCycle,
    Unclassified,
}

impl ClassKind {
    pub const ALL: [ClassKind; 13] = [
        ClassKind::SymmetricFp,
        ClassKind::AlmostSymmetricFp,
        ClassKind::UniformZeroFreeFp,
        ClassKind::TriadFp,
        ClassKind::OtherZeroFreeFp,
        ClassKind::SingleParameterFp,
        ClassKind::SpecialFp,
        ClassKind::SymmetricCycle,
        ClassKind::AlmostSymmetricCycle,
        ClassKind::NonSymmetricSigmaCycle,
        ClassKind::SingleParameterCycle,
        ClassKind::SpecialCycle,
        ClassKind::Unclassified,
    ];

    pub fn is_fixed_point(self) -> bool {
        matches!(
            self,
            ClassKind::SymmetricFp
                | ClassKind::AlmostSymmetricFp
                | ClassKind::UniformZeroFreeFp
                | ClassKind::TriadFp
                | ClassKind::OtherZeroFreeFp
                | ClassKind::SingleParameterFp
                | ClassKind::SpecialFp
        )
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClassKind::SymmetricFp => "symmetric-fp",
            ClassKind::AlmostSymmetricFp => "almost-symmetric-fp",
            ClassKind::UniformZeroFreeFp => "uniform-zero-free-fp",
            ClassKind::TriadFp => "triad-fp",
            ClassKind::OtherZeroFreeFp => "other-zero-free-fp",
            ClassKind::SingleParameterFp => "single-parameter-fp",
            ClassKind::SpecialFp => "special-fp",
            ClassKind::SymmetricCycle => "symmetric-cycle",
            ClassKind::AlmostSymmetricCycle => "almost-symmetric-cycle",
            ClassKind::NonSymmetricSigmaCycle => "non-symmetric-sigma-cycle",
            ClassKind::SingleParameterCycle => "single-parameter-cycle",
            ClassKind::SpecialCycle => "special-cycle",
            ClassKind::Unclassified => "unclassified",
        };
        f.write_str(name)
    }
}

impl ClassLabel {
    pub fn kind(&self) -> ClassKind {
        match self {
            ClassLabel::SymmetricFp { .. } => ClassKind::SymmetricFp,
            ClassLabel::AlmostSymmetricFp { .. } => ClassKind::AlmostSymmetricFp,
            ClassLabel::UniformZeroFreeFp { .. } => ClassKind::UniformZeroFreeFp,
            ClassLabel::TriadFp { .. } => ClassKind::TriadFp,
            ClassLabel::OtherZeroFreeFp { .. } => ClassKind::OtherZeroFreeFp,
            ClassLabel::SingleParameterFp { .. } => ClassKind::SingleParameterFp,
            ClassLabel::SpecialFp => ClassKind::SpecialFp,
            ClassLabel::SymmetricCycle { .. } => ClassKind::SymmetricCycle,
            ClassLabel::AlmostSymmetricCycle { .. } => ClassKind::AlmostSymmetricCycle,
            ClassLabel::NonSymmetricSigmaCycle { .. } => ClassKind::NonSymmetricSigmaCycle,
            ClassLabel::SingleParameterCycle { .. } => ClassKind::SingleParameterCycle,
            ClassLabel::SpecialCycle { .. } => ClassKind::SpecialCycle,
            ClassLabel::Unclassified => ClassKind::Unclassified,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::SymmetricFp { uniform: true } => write!(f, "symmetric-fp"),
            ClassLabel::SymmetricFp { uniform: false } => write!(f, "symmetric-fp(non-uniform)"),
            ClassLabel::AlmostSymmetricFp { uniform, alpha } => {
                if *uniform {
                    write!(f, "almost-symmetric-fp(alpha={alpha})")
                } else {
                    write!(f, "almost-symmetric-fp(non-uniform,alpha={alpha})")
                }
            }
            ClassLabel::UniformZeroFreeFp { t } => write!(f, "uniform-zero-free-fp(t={t})"),
            ClassLabel::TriadFp { t } => write!(f, "triad-fp(t={t})"),
            ClassLabel::OtherZeroFreeFp { variant, t, second } => match variant {
                ZeroFreeVariant::Interleaved => {
                    write!(f, "other-zero-free-fp(t={t},u={second})")
                }
                ZeroFreeVariant::Perturbed => {
                    write!(f, "other-zero-free-fp(t={t},eps={second})")
                }
            },
            ClassLabel::SingleParameterFp { t } => write!(f, "single-parameter-fp(t={t})"),
            ClassLabel::SpecialFp => write!(f, "special-fp"),
            ClassLabel::SymmetricCycle { length } => write!(f, "symmetric-cycle(l={length})"),
            ClassLabel::AlmostSymmetricCycle { length, alpha } => {
                write!(f, "almost-symmetric-cycle(l={length},alpha={alpha})")
            }
            ClassLabel::NonSymmetricSigmaCycle { length } => {
                write!(f, "non-symmetric-sigma-cycle(l={length})")
            }
            ClassLabel::SingleParameterCycle { family, t } => {
                write!(f, "single-parameter-cycle(family={family},t={t})")
            }
            ClassLabel::SpecialCycle { ordinal } => write!(f, "special-cycle(#{ordinal})"),
            ClassLabel::Unclassified => write!(f, "unclassified"),
        }
    }
}

/// True when all interior components of `k` are equal.
fn interior_uniform(k: &KaprekarIndex) -> bool {
    let top = k.base().top_digit() as usize;
    let interior = &k.counts()[1..top];
    interior.windows(2).all(|w| w[0] == w[1])
}

/// Classifies a verified fixed point into the catalogue taxonomy.
///
/// Families are tried most-structured first: symmetric, almost-symmetric,
/// uniform zero-free, triad, the remaining zero-free shapes, the
/// single-parameter family, sporadic fixed points, and finally
/// `Unclassified`. The first four shapes are meaningful in every even base;
/// the rest only exist in the catalogued bases 6 and 8. In base 4 the
/// uniform pattern `(0,t,t,t)` *is* the triad pattern and is labelled triad.
pub fn classify_fixed_point(k: &KaprekarIndex) -> Result<ClassLabel> {
    k.base().require_even("fixed-point classification")?;
    if kaprekar_step(k)? != *k {
        return Err(Error::NotAFixedPoint);
    }
    let b = k.base().get();
    let top = k.base().top_digit() as usize;
    let counts = k.counts();
    let info = symmetry_info(k)?;

    if info.symmetric {
        return Ok(ClassLabel::SymmetricFp {
            uniform: interior_uniform(k),
        });
    }
    if info.almost_symmetric {
        return Ok(ClassLabel::AlmostSymmetricFp {
            uniform: interior_uniform(k),
            alpha: info.alpha as u32,
        });
    }

    // Uniform zero-free (0,t,...,t); in base 4 fall through to triad, the
    // name the catalogue uses for this shape there.
    if b > 4 && counts[0] == 0 && counts[1] >= 1 && counts[1..].iter().all(|&c| c == counts[1]) {
        return Ok(ClassLabel::UniformZeroFreeFp { t: counts[1] });
    }

    // Triad: t at the two middle digits and the top digit, zero elsewhere.
    let mid_lo = (b / 2 - 1) as usize;
    let mid_hi = (b / 2) as usize;
    let t = counts[top];
    if t >= 1
        && counts[mid_lo] == t
        && counts[mid_hi] == t
        && counts
            .iter()
            .enumerate()
            .all(|(i, &c)| [mid_lo, mid_hi, top].contains(&i) || c == 0)
    {
        return Ok(ClassLabel::TriadFp { t });
    }

    match b {
        6 => {
            // (0,u,t,t,u,t) with 1 <= u < t.
            let (t, u) = (counts[2], counts[1]);
            if counts == [0, u, t, t, u, t] && u >= 1 && u < t {
                return Ok(ClassLabel::OtherZeroFreeFp {
                    variant: ZeroFreeVariant::Interleaved,
                    t,
                    second: u,
                });
            }
            // (1,t-1,t+1,t,t+1,0) with t >= 1.
            let t = counts[3];
            if t >= 1 && counts == [1, t - 1, t + 1, t, t + 1, 0] {
                return Ok(ClassLabel::SingleParameterFp { t });
            }
        }
        8 => {
            // (0,t,u,t,t,u,t,t) with 1 <= u < t.
            let (t, u) = (counts[1], counts[2]);
            if counts == [0, t, u, t, t, u, t, t] && u >= 1 && u < t {
                return Ok(ClassLabel::OtherZeroFreeFp {
                    variant: ZeroFreeVariant::Interleaved,
                    t,
                    second: u,
                });
            }
            // (0,t-ε,t+ε,t,t,t+ε,t-ε,t) with 1 <= ε < t.
            let t = counts[3];
            if t >= 1 && counts[1] < t {
                let eps = t - counts[1];
                if eps < t && counts == [0, t - eps, t + eps, t, t, t + eps, t - eps, t] {
                    return Ok(ClassLabel::OtherZeroFreeFp {
                        variant: ZeroFreeVariant::Perturbed,
                        t,
                        second: eps,
                    });
                }
            }
            // (1,t-1,t,t,t,t-1,t+1,0) with t >= 1.
            let t = counts[2];
            if t >= 1 && counts == [1, t - 1, t, t, t, t - 1, t + 1, 0] {
                return Ok(ClassLabel::SingleParameterFp { t });
            }
            if counts == [0, 0, 1, 0, 0, 1, 0, 0] {
                return Ok(ClassLabel::SpecialFp);
            }
        }
        _ => {}
    }

    Ok(ClassLabel::Unclassified)
}

/// Classifies a cycle of length at least 2 into the catalogue taxonomy.
///
/// Symmetric and almost-symmetric cycles are recognized structurally (every
/// member carries the symmetry); the remaining families are recognized by
/// solving for their parameters and comparing the reconstructed cycle
/// member-for-member, so a label is never a fuzzy guess.
pub fn classify_cycle(c: &CycleRecord) -> Result<ClassLabel> {
    c.base().require_even("cycle classification")?;
    if c.len() < 2 {
        return Err(Error::DomainError {
            operation: "classify_cycle",
            requirement: "a cycle of length at least 2 (fixed points have their own classifier)",
            got: format!("length {}", c.len()),
        });
    }
    let b = c.base().get();
    let length = c.len() as u32;
    let members = c.members();

    let infos: Vec<SymmetryInfo> = members
        .iter()
        .map(symmetry_info)
        .collect::<Result<_>>()?;
    if infos.iter().all(|i| i.symmetric) {
        return Ok(ClassLabel::SymmetricCycle { length });
    }
    if infos.iter().all(|i| i.almost_symmetric) {
        // The end components ride along unchanged, so alpha is shared.
        return Ok(ClassLabel::AlmostSymmetricCycle {
            length,
            alpha: infos[0].alpha as u32,
        });
    }

    // Non-symmetric doubling-driven cycles: solve parameters from any member
    // and rebuild.
    for m in members {
        let counts = m.counts();
        if b == 6 && counts[0] == 1 && counts[5] == 0 && counts[3] >= 1 {
            let (t, u) = (counts[1], counts[3]);
            if counts == [1, t, u + 1, u, t + 2, 0] {
                let template = catalogue::nonsym_sigma_cycle_b6(t, u);
                if cyclically_equal(members, &template) {
                    return Ok(ClassLabel::NonSymmetricSigmaCycle { length });
                }
            }
        }
        if b == 8 && counts[0] == 1 && counts[7] == 0 && counts[2] >= 1 && counts[3] >= 1 {
            let (t, u, v) = (counts[1], counts[2], counts[3]);
            if counts == [1, t, u, v, v, u - 1, t + 2, 0] {
                let template = catalogue::nonsym_sigma_cycle_b8(t, u, v);
                if cyclically_equal(members, &template) {
                    return Ok(ClassLabel::NonSymmetricSigmaCycle { length });
                }
            }
        }
    }

    let n = c.digit_count();
    for (family, t) in catalogue::single_param_cycle_candidates(b, n, length) {
        let template = catalogue::single_param_cycle(b, family, t)
            .expect("candidate families are constructible");
        if cyclically_equal(members, &template) {
            return Ok(ClassLabel::SingleParameterCycle { family, t });
        }
    }

    for (ordinal, template) in catalogue::special_cycles_at(c.base(), n).into_iter().enumerate() {
        if template.len() == members.len() && cyclically_equal(members, &template) {
            return Ok(ClassLabel::SpecialCycle {
                ordinal: ordinal as u8 + 1,
            });
        }
    }

    Ok(ClassLabel::Unclassified)
}
