//! Exact closed-form counts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{require_order_and_length, EnumerationError};

/// Binomial coefficient `C(n, k)` as an exact arbitrary-width integer;
/// zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 1..=k {
        // Each prefix product C(n-k+i, i) is an integer, so the division is exact.
        result = result * (n - k + i) / i;
    }
    result
}

/// The Catalan number `c_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Total number of (n,m)-lattice paths: `C(2n, n) * C(m - 1, n)`, the
/// product of the height-change and composition solution counts.
pub fn path_space_size(n: usize, m: i64) -> Result<BigUint, EnumerationError> {
    require_order_and_length(n, m)?;
    let (n, m) = (n as u64, m as u64);
    Ok(binomial(2 * n, n) * binomial(m - 1, n))
}

/// Total number of pointed (n,m)-lattice paths: `C(2n, n) * C(m, n + 1)`.
pub fn pointed_space_size(n: usize, m: i64) -> Result<BigUint, EnumerationError> {
    require_order_and_length(n, m)?;
    let (n, m) = (n as u64, m as u64);
    Ok(binomial(2 * n, n) * binomial(m, n + 1))
}

/// The closed-form counts the flat-distribution theorems are checked
/// against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    /// Paths with `NPL(P) = 0` (equivalently `RML(P) = 0`):
    /// `C(m - 1, n) * c_n`.
    NplZero,
    /// Paths with `NPL(P) = 0` and `x_{n+1} = 1`: `C(m - 2, n - 1) * c_n`.
    /// Also the common count of every nonzero level.
    NplZeroTilde,
    /// All pointed paths: `C(2n, n) * C(m, n + 1)`.
    PointedTotal,
    /// Pointed paths per statistic value: `C(2n, n) * C(m, n + 1) / m`.
    PointedPerR,
}

/// Evaluates one of the closed forms exactly. `PointedPerR` checks that the
/// division is exact; a remainder would mean the counting identities are
/// inconsistent.
pub fn count_closed_form(kind: CountKind, n: usize, m: i64) -> Result<BigUint, EnumerationError> {
    require_order_and_length(n, m)?;
    let (nu, mu) = (n as u64, m as u64);
    match kind {
        CountKind::NplZero => Ok(binomial(mu - 1, nu) * catalan(nu)),
        CountKind::NplZeroTilde => Ok(binomial(mu - 2, nu - 1) * catalan(nu)),
        CountKind::PointedTotal => pointed_space_size(n, m),
        CountKind::PointedPerR => {
            let total = pointed_space_size(n, m)?;
            if (&total % mu) != BigUint::zero() {
                return Err(EnumerationError::NonDivisible { total, divisor: mu });
            }
            Ok(total / mu)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(6, 0), big(1));
        assert_eq!(binomial(6, 6), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(24, 12), big(2_704_156));
    }

    #[test]
    fn binomial_arbitrary_width() {
        let b = binomial(100, 49);
        assert_eq!(b.to_string(), "98913082887808032681188722800");
    }

    #[test]
    fn catalan_values() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), big(c));
        }
    }

    #[test]
    fn space_sizes() {
        assert_eq!(path_space_size(3, 5).unwrap(), big(80));
        assert_eq!(pointed_space_size(3, 5).unwrap(), big(100));
        assert_eq!(path_space_size(2, 3).unwrap(), big(6));
        assert!(path_space_size(2, 2).is_err());
    }

    #[test]
    fn closed_forms_match_hand_computation() {
        assert_eq!(count_closed_form(CountKind::NplZero, 2, 3).unwrap(), big(2));
        assert_eq!(
            count_closed_form(CountKind::NplZeroTilde, 2, 3).unwrap(),
            big(2)
        );
        assert_eq!(
            count_closed_form(CountKind::PointedPerR, 3, 5).unwrap(),
            big(20)
        );
        assert_eq!(
            count_closed_form(CountKind::PointedTotal, 3, 5).unwrap(),
            big(100)
        );
    }

    #[test]
    fn total_paths_split_across_levels() {
        // NplZero + (m - 1) * NplZeroTilde accounts for every path.
        for n in 1..=5usize {
            for m in (n as i64 + 1)..=(n as i64 + 5) {
                let zero = count_closed_form(CountKind::NplZero, n, m).unwrap();
                let tilde = count_closed_form(CountKind::NplZeroTilde, n, m).unwrap();
                let total = path_space_size(n, m).unwrap();
                assert_eq!(
                    zero + tilde * BigUint::from((m - 1) as u64),
                    total,
                    "n={n} m={m}"
                );
            }
        }
    }
}
