//! Stirling numbers against their independent characterizations.

use baxterlab::combinatorics::oracle::{stirling_second_oracle, surjection_count_oracle};
use baxterlab::combinatorics::{
    compositions_of, factorial, falling_factorial, multinomial, stirling_first, stirling_second,
    Composition,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[test]
fn recurrence_matches_finite_differences() {
    for n in 0..=20u32 {
        for k in 0..=n {
            assert_eq!(
                stirling_second(n as usize, k as usize),
                stirling_second_oracle(n, k).unwrap(),
                "S({n},{k})"
            );
        }
    }
}

#[test]
fn recurrence_matches_surjection_counts() {
    for n in 0..=8u32 {
        for k in 0..=8u32 {
            let surj = BigInt::from(surjection_count_oracle(n, k).unwrap());
            let s = stirling_second(n as usize, k as usize);
            assert_eq!(surj, factorial(u64::from(k)) * s, "n={n} k={k}");
        }
    }
}

#[test]
fn duality() {
    for n in 0..=20usize {
        for m in 0..=20usize {
            let delta = if n == m {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            let a: BigInt = (0..=20)
                .map(|k| stirling_first(n, k) * stirling_second(k, m))
                .sum();
            let b: BigInt = (0..=20)
                .map(|k| stirling_second(n, k) * stirling_first(k, m))
                .sum();
            assert_eq!(a, delta, "s*S at ({n},{m})");
            assert_eq!(b, delta, "S*s at ({n},{m})");
        }
    }
}

#[test]
fn powers_in_the_falling_factorial_basis() {
    for n in 0..=20usize {
        let mut acc = vec![BigInt::zero(); n + 1];
        for k in 0..=n {
            let s = stirling_second(n, k);
            for (i, c) in falling_factorial(k).iter().enumerate() {
                acc[i] += &s * c;
            }
        }
        let mut want = vec![BigInt::zero(); n + 1];
        want[n] = BigInt::one();
        assert_eq!(acc, want, "t^{n}");
    }
}

#[test]
fn falling_factorial_expands_the_product() {
    for n in 0..=12usize {
        // multiply out t(t-1)...(t-n+1) directly
        let mut poly = vec![BigInt::one()];
        for j in 0..n {
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * BigInt::from(j);
            }
            poly = next;
        }
        assert_eq!(falling_factorial(n), poly);
    }
}

#[test]
fn multinomial_row_sums() {
    for n in 1..=12u32 {
        let mut by_len = vec![BigInt::zero(); n as usize + 1];
        for c in compositions_of(n).unwrap() {
            by_len[c.length()] += multinomial(u64::from(n), &c).unwrap();
        }
        for (k, sum) in by_len.iter().enumerate().skip(1) {
            assert_eq!(*sum, factorial(k as u64) * stirling_second(n as usize, k));
        }
    }
}

#[test]
fn generalized_pascal() {
    for n in 1..=10u32 {
        for j in compositions_of(n + 1).unwrap() {
            let mut sum = BigInt::zero();
            for t in 0..j.length() {
                let mut parts = j.parts().to_vec();
                parts[t] -= 1;
                parts.retain(|&x| x > 0);
                sum += multinomial(u64::from(n), &Composition::new(parts).unwrap()).unwrap();
            }
            assert_eq!(multinomial(u64::from(n + 1), &j).unwrap(), sum, "J = {j}");
        }
    }
}

#[test]
fn classical_prime_congruence() {
    for p in [2usize, 3, 5, 7, 11, 13] {
        for k in 2..p {
            assert!((stirling_second(p, k) % p).is_zero(), "S({p},{k})");
        }
    }
}
