//! Small-integer number theory: primality, divisors, factorization.
//! Inputs are indices and primes, never trace values, so trial division is
//! all that is needed.

use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::Num;

use crate::Rational;

/// The scalar rings the generic transforms run over.
pub trait Scalar: Num + Clone + Neg<Output = Self> {
    fn from_u64(n: u64) -> Self;
}

impl Scalar for BigInt {
    fn from_u64(n: u64) -> Self {
        BigInt::from(n)
    }
}

impl Scalar for Rational {
    fn from_u64(n: u64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// `(p, k)` with `p^k ‖ n`, primes ascending. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor 0");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= n / p {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Primes `≤ n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(is_prime(4_294_967_291));
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        assert!(divisors(0).is_empty());
        for n in 1..200u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), brute);
        }
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(factorize(2 * 2 * 2 * 9 * 25), vec![(2, 3), (3, 2), (5, 2)]);
    }
}
