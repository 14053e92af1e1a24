use serde::{Deserialize, Serialize};

use crate::digits::DigitString;
use crate::error::{Error, Result};
use crate::index::KaprekarIndex;

/// Pairwise differences between a value's descending and ascending digit
/// arrangements.
///
/// With the digits sorted ascending as `a_0 <= ... <= a_{n-1}`, the
/// subtraction pairs position `j` of the descending arrangement with
/// position `j` of the ascending one, so only
/// `d_j = a_{n-1-j} - a_j` for `j = 0 ..= n/2 - 1` matter: the differences
/// in the right half mirror the left half negated, and for odd `n` the
/// middle digit cancels. `d` is non-increasing, `d_0 >= 1` for any
/// non-repdigit, and `mu` marks the last strictly positive entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceProfile {
    d: Vec<u8>,
    mu: usize,
}

impl DifferenceProfile {
    /// The differences `d_0 ..= d_nu`.
    pub fn differences(&self) -> &[u8] {
        &self.d
    }

    /// Index of the last positive difference.
    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Largest meaningful pair position, `n/2 - 1`.
    pub fn nu(&self) -> usize {
        self.d.len() - 1
    }

    pub fn d0(&self) -> u8 {
        self.d[0]
    }

    pub fn d_mu(&self) -> u8 {
        self.d[self.mu]
    }
}

/// Computes the difference profile of an index.
///
/// Errors on repdigits: all their differences vanish and the transformation
/// sends them straight to zero, where it stays.
pub fn difference_profile(k: &KaprekarIndex) -> Result<DifferenceProfile> {
    if k.is_repdigit() {
        return Err(Error::Repdigit);
    }
    let asc = k.realized_ascending();
    let a = asc.digits();
    let n = a.len();
    // Non-repdigit implies n >= 2, so nu = n/2 - 1 is well defined.
    let nu = n / 2 - 1;
    let d: Vec<u8> = (0..=nu).map(|j| a[n - 1 - j] - a[j]).collect();
    let mu = d
        .iter()
        .rposition(|&x| x > 0)
        .expect("a non-repdigit has a positive leading difference");
    Ok(DifferenceProfile { d, mu })
}

/// One application of the transformation, computed on the occurrence vector.
///
/// Sorting the digits descending and ascending and subtracting produces a
/// result whose digits can be read off the difference profile directly: the
/// borrow chain of the subtraction turns the profile `d_0, ..., d_mu, 0, ...`
/// into the digit multiset
///
/// ```text
/// d_0, ..., d_{mu-1}, d_mu - 1,  b-1 (n-2mu-2 times),  b-1-d_mu, ..., b-1-d_1,  b-d_0
/// ```
///
/// so the successor index is assembled without materializing the subtraction.
/// [`kaprekar_step_subtraction`] is the independent digit-level route to the
/// same value; the two are cross-checked in tests.
pub fn kaprekar_step(k: &KaprekarIndex) -> Result<KaprekarIndex> {
    let profile = difference_profile(k)?;
    let b = k.base().get();
    let top = b - 1;
    let n = k.digit_count() as usize;
    let d = profile.differences();
    let mu = profile.mu();

    let mut counts = vec![0u32; b as usize];
    for &dj in &d[..mu] {
        counts[dj as usize] += 1;
    }
    counts[(d[mu] - 1) as usize] += 1;
    counts[top as usize] += (n - 2 * mu - 2) as u32;
    for &dj in &d[1..=mu] {
        counts[(top - dj) as usize] += 1;
    }
    counts[(b - d[0]) as usize] += 1;

    KaprekarIndex::new(k.base(), counts)
}

/// One application of the transformation as literal schoolbook subtraction:
/// digits descending minus digits ascending, with borrows, keeping the full
/// width of the input.
pub fn kaprekar_step_subtraction(x: &DigitString) -> Result<DigitString> {
    if x.is_repdigit() {
        return Err(Error::Repdigit);
    }
    let b = x.base().get() as i16;
    let hi = x.sorted_descending();
    let lo = x.sorted_ascending();
    let n = x.width();
    let mut out = vec![0u8; n];
    let mut borrow = 0i16;
    for pos in (0..n).rev() {
        let mut diff = hi.digits()[pos] as i16 - lo.digits()[pos] as i16 - borrow;
        if diff < 0 {
            diff += b;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[pos] = diff as u8;
    }
    debug_assert_eq!(borrow, 0, "descending arrangement is never the smaller");
    DigitString::new(x.base(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseConfig;

    fn idx(b: u8, counts: &[u32]) -> KaprekarIndex {
        KaprekarIndex::new(BaseConfig::new(b).unwrap(), counts.to_vec()).unwrap()
    }

    fn step_via_subtraction(k: &KaprekarIndex) -> KaprekarIndex {
        let s = kaprekar_step_subtraction(&k.realized_descending()).unwrap();
        KaprekarIndex::from_digits(&s)
    }

    #[test]
    fn profile_of_a_two_digit_value() {
        let k = idx(4, &[1, 0, 0, 1]); // digits {0, 3}
        let p = difference_profile(&k).unwrap();
        assert_eq!(p.differences(), &[3]);
        assert_eq!(p.mu(), 0);
        assert_eq!(p.nu(), 0);
        assert_eq!((p.d0(), p.d_mu()), (3, 3));
    }

    #[test]
    fn profile_rejects_repdigits() {
        assert_eq!(
            difference_profile(&idx(4, &[0, 3, 0, 0])),
            Err(Error::Repdigit)
        );
        assert_eq!(
            difference_profile(&idx(10, &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0])),
            Err(Error::Repdigit)
        );
    }

    #[test]
    fn step_matches_hand_subtraction_base10() {
        // 6174: 7641 - 1467 = 6174, the classic four-digit fixed point.
        let b10 = BaseConfig::new(10).unwrap();
        let k = KaprekarIndex::from_digits(&DigitString::parse(b10, "6174").unwrap());
        assert_eq!(kaprekar_step(&k).unwrap(), k);
        let s = kaprekar_step_subtraction(&DigitString::parse(b10, "6174").unwrap()).unwrap();
        assert_eq!(s.to_string(), "6174");
    }

    #[test]
    fn step_on_two_digit_base4_flips_between_the_two_states() {
        let a = idx(4, &[1, 0, 0, 1]); // {0,3}: 30 - 03 = 21
        let b = idx(4, &[0, 1, 1, 0]); // {1,2}: 21 - 12 = 03
        assert_eq!(kaprekar_step(&a).unwrap(), b);
        assert_eq!(kaprekar_step(&b).unwrap(), a);
    }

    #[test]
    fn step_keeps_width_and_agrees_with_subtraction() {
        for (b, counts) in [
            (4u8, vec![1u32, 1, 4, 2]),
            (4, vec![2, 0, 3, 5]),
            (6, vec![1, 0, 0, 0, 0, 1]),
            (6, vec![0, 1, 1, 1, 1, 0]),
            (10, vec![1, 4, 3, 4, 4, 4, 4, 3, 4, 2]),
            (5, vec![1, 0, 0, 0, 1]),
            (3, vec![1, 1, 1]),
        ] {
            let k = idx(b, &counts);
            let next = kaprekar_step(&k).unwrap();
            assert_eq!(next.digit_count(), k.digit_count(), "width preserved");
            assert_eq!(next, step_via_subtraction(&k), "both routes agree");
        }
    }

    #[test]
    fn step_of_a_full_base4_index() {
        // (1,1,4,2) realizes 33222210; 33222210 - 01222233 = 31333311.
        let k = idx(4, &[1, 1, 4, 2]);
        assert_eq!(kaprekar_step(&k).unwrap(), idx(4, &[0, 3, 0, 5]));
        let s = kaprekar_step_subtraction(&k.realized_descending()).unwrap();
        assert_eq!(s.to_string(), "31333311");
    }

    #[test]
    fn step_of_a_symmetric_base10_index() {
        // Interior components hop along the doubling orbit of their position.
        let k = idx(10, &[1, 4, 3, 4, 4, 4, 4, 3, 4, 2]);
        assert_eq!(
            kaprekar_step(&k).unwrap(),
            idx(10, &[1, 4, 4, 4, 3, 3, 4, 4, 4, 2])
        );
    }

    #[test]
    fn subtraction_keeps_leading_zeros() {
        let b6 = BaseConfig::new(6).unwrap();
        let s = kaprekar_step_subtraction(&DigitString::parse(b6, "31533").unwrap()).unwrap();
        assert_eq!(s.to_string(), "35552");
        let b4 = BaseConfig::new(4).unwrap();
        let t = kaprekar_step_subtraction(&DigitString::parse(b4, "10").unwrap()).unwrap();
        assert_eq!(t.to_string(), "03");
        assert_eq!(t.width(), 2);
    }

    #[test]
    fn repdigits_are_terminal() {
        let k = idx(10, &[0, 0, 0, 3, 0, 0, 0, 0, 0, 0]);
        assert_eq!(kaprekar_step(&k), Err(Error::Repdigit));
        let b10 = BaseConfig::new(10).unwrap();
        assert_eq!(
            kaprekar_step_subtraction(&DigitString::parse(b10, "333").unwrap()),
            Err(Error::Repdigit)
        );
    }
}
