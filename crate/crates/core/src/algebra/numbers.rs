//! Small exact integer helpers shared by the coefficient formulas.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(q)_k = q (q-1) ... (q-k+1)`; zero once a factor hits zero.
pub fn falling_factorial(q: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        let f = q - i;
        if f == 0 {
            return BigInt::zero();
        }
        acc *= f;
    }
    acc
}

/// Binomial coefficient with the convention `C(a, b) = 0` unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Returns `e` when `value == base^e`, for `base >= 2`.
pub fn exact_log(value: u64, base: u64) -> Option<u32> {
    if base < 2 || value == 0 {
        return None;
    }
    let (mut v, mut e) = (value, 0);
    while v % base == 0 {
        v /= base;
        e += 1;
    }
    (v == 1).then_some(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(6, 4), BigInt::from(15));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn falling() {
        assert_eq!(falling_factorial(3, 3), BigInt::from(6));
        assert_eq!(falling_factorial(3, 4), BigInt::zero());
        assert_eq!(falling_factorial(5, 0), BigInt::one());
        assert_eq!(falling_factorial(0, 0), BigInt::one());
    }

    #[test]
    fn primes_and_logs() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && !is_prime(9) && !is_prime(1));
        assert_eq!(exact_log(8, 2), Some(3));
        assert_eq!(exact_log(1, 3), Some(0));
        assert_eq!(exact_log(12, 2), None);
    }
}
