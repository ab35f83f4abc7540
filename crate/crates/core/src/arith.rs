//! Small exact integer helpers: binomials, gcd, factorization by trial division.

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` in exact arithmetic. `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) since acc = C(n, i).
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow("binomial"))?
            / u128::from(i + 1);
    }
    Ok(acc)
}

/// `C(n, k)` where a negative `k` yields zero, as in `C(d+k-2, k-2)` for `k < 2`.
pub fn binomial_signed(n: i64, k: i64) -> Result<u128> {
    if k < 0 || n < 0 {
        return Ok(0);
    }
    binomial(n as u64, k as u64)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factors of `n` in increasing order, without multiplicity.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime divisor of `n` congruent to 5 modulo 6, if any.
pub fn smallest_prime_divisor_5_mod_6(n: u64) -> Option<u64> {
    prime_factors(n).into_iter().find(|p| p % 6 == 5)
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `base^exp` with overflow reported as `None`.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(28, 5).unwrap(), 98280);
        assert_eq!(binomial_signed(3, -1).unwrap(), 0);
        assert_eq!(binomial(60, 30).unwrap(), 118264581564861424);
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(99), vec![3, 11]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(smallest_prime_divisor_5_mod_6(99), Some(11));
        assert_eq!(smallest_prime_divisor_5_mod_6(21), None);
        assert_eq!(smallest_prime_divisor_5_mod_6(55), Some(5));
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(gcd(12, 18), 6);
    }
}
