//! Euler's totient and the two counting inequalities used for large `q`.
//!
//! All comparisons are exact integer comparisons.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumthError {
    #[error("n = {0} is outside the lemma's hypotheses (needs n > 1, 3 ∤ n, 4 ∤ n)")]
    Precondition(u64),
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("3^{0} − 1 does not fit the trial-division budget")]
    Budget(u64),
}

/// Largest exponent accepted by [`snl_check`]; `3^p − 1` stays below 2^63.
pub const MAX_SNL_PRIME: u64 = 37;

/// Prime factorization by trial division, primes in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "φ is defined for n ≥ 1");
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiCheck {
    pub n: u64,
    pub phi: u64,
    /// `8·φ(n)⁴`.
    pub lhs: u128,
    /// `n³`.
    pub rhs: u128,
    pub pass: bool,
}

/// `φ(n) > (n/2)^{3/4}`, decided as `8·φ(n)⁴ > n³`.
pub fn lematec_check(n: u64) -> Result<PhiCheck, NumthError> {
    if n <= 1 || n.is_multiple_of(3) || n.is_multiple_of(4) {
        return Err(NumthError::Precondition(n));
    }
    let phi = euler_phi(n);
    let lhs = 8 * (phi as u128).pow(4);
    let rhs = (n as u128).pow(3);
    Ok(PhiCheck { n, phi, lhs, rhs, pass: lhs > rhs })
}

/// Every `n` in `[from, to]` satisfying the hypotheses, with its check.
pub fn lematec_sweep(from: u64, to: u64) -> Vec<PhiCheck> {
    (from.max(2)..=to).filter_map(|n| lematec_check(n).ok()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnlCheck {
    pub p: u64,
    pub n: u64,
    pub phi: u64,
    /// `p·3^{(p−1)/2}`.
    pub bound: u64,
    pub pass: bool,
}

/// `φ(3^p − 1) > p·3^{(p−1)/2}` for an odd prime `p`.
pub fn snl_check(p: u64) -> Result<SnlCheck, NumthError> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(NumthError::NotOddPrime(p));
    }
    if p > MAX_SNL_PRIME {
        return Err(NumthError::Budget(p));
    }
    let n = 3u64.pow(p as u32) - 1;
    let phi = euler_phi(n);
    let bound = p * 3u64.pow(((p - 1) / 2) as u32);
    Ok(SnlCheck { p, n, phi, bound, pass: phi > bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(10), 4);
        assert_eq!(euler_phi(242), 110);
        assert_eq!(euler_phi(26), 12);
        assert_eq!(factorize(2186), vec![(2, 1), (1093, 1)]);
    }

    #[test]
    fn lematec_examples() {
        let c = lematec_check(10).unwrap();
        assert_eq!((c.phi, c.lhs, c.rhs, c.pass), (4, 2048, 1000, true));
        // boundary: 8 > 8 fails
        assert!(!lematec_check(2).unwrap().pass);
        assert_eq!(lematec_check(12), Err(NumthError::Precondition(12)));
        assert_eq!(lematec_check(9), Err(NumthError::Precondition(9)));
        assert_eq!(lematec_check(1), Err(NumthError::Precondition(1)));
    }

    #[test]
    fn snl_examples() {
        let c = snl_check(3).unwrap();
        assert_eq!((c.phi, c.bound, c.pass), (12, 9, true));
        let c = snl_check(5).unwrap();
        assert_eq!((c.phi, c.bound), (110, 45));
        assert_eq!(snl_check(7).unwrap().bound, 189);
        assert_eq!(snl_check(9), Err(NumthError::NotOddPrime(9)));
        assert_eq!(snl_check(2), Err(NumthError::NotOddPrime(2)));
    }

    proptest! {
        #[test]
        fn phi_matches_coprime_count(n in 1u64..2000) {
            let count = (1..=n).filter(|&m| m.gcd(&n) == 1).count() as u64;
            prop_assert_eq!(euler_phi(n), count);
        }

        #[test]
        fn factorization_multiplies_back(n in 1u64..1_000_000) {
            let f = factorize(n);
            prop_assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
            prop_assert!(f.iter().all(|&(p, _)| is_prime(p)));
        }
    }
}
