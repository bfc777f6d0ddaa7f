//! Brute-force and closed-form routes to `S(n, k)` that share no code with
//! the recurrence tables.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_range, Result};

/// `S(n, k) = (1/k!) Σ_j (-1)^(k-j) C(k, j) j^n`, the k-th forward difference
/// of `t^n` at zero divided by `k!`.
pub fn stirling_second_oracle(n: u32, k: u32) -> Result<BigInt> {
    check_range("n", u64::from(n), 0, 64, "0..=64")?;
    check_range("k", u64::from(k), 0, 64, "0..=64")?;
    // Pascal row k
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    let mut diff = BigInt::zero();
    for (j, c) in row.iter().enumerate() {
        let term = c * num_traits::pow(BigInt::from(j), n as usize);
        if (k as usize - j).is_multiple_of(2) {
            diff += term;
        } else {
            diff -= term;
        }
    }
    let k_fact: BigInt = (1..=k).map(BigInt::from).product();
    debug_assert!((&diff % &k_fact).is_zero());
    Ok(diff / k_fact)
}

/// Counts surjections `{1..n} → {1..k}` by enumerating all `k^n` maps.
pub fn surjection_count_oracle(n: u32, k: u32) -> Result<u64> {
    check_range("n", u64::from(n), 0, 8, "0..=8")?;
    check_range("k", u64::from(k), 0, 8, "0..=8")?;
    if n == 0 {
        return Ok(u64::from(k == 0));
    }
    if k == 0 {
        return Ok(0);
    }
    let (n, k) = (n as usize, k as usize);
    let full: u32 = (1u32 << k) - 1;
    let mut digits = vec![0usize; n];
    let mut count = 0u64;
    loop {
        let hit = digits.iter().fold(0u32, |m, &d| m | (1 << d));
        if hit == full {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_difference_values() {
        assert_eq!(stirling_second_oracle(5, 3).unwrap(), BigInt::from(25));
        for n in 0..20 {
            assert_eq!(stirling_second_oracle(n, n).unwrap(), BigInt::one());
        }
        let row: Vec<BigInt> = (2..5)
            .map(|k| stirling_second_oracle(5, k).unwrap())
            .collect();
        assert_eq!(row, [15, 25, 10].map(BigInt::from));
        assert!(row.iter().all(|s| (s % 5u32).is_zero()));
        assert!(stirling_second_oracle(65, 2).is_err());
    }

    #[test]
    fn surjection_values() {
        assert_eq!(surjection_count_oracle(2, 2).unwrap(), 2);
        assert_eq!(surjection_count_oracle(3, 2).unwrap(), 6);
        assert_eq!(surjection_count_oracle(4, 1).unwrap(), 1);
        assert_eq!(surjection_count_oracle(2, 3).unwrap(), 0);
        assert_eq!(surjection_count_oracle(0, 0).unwrap(), 1);
        assert!(surjection_count_oracle(9, 2).is_err());
    }
}
