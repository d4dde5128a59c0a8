//! Small integer helpers.

use num_bigint::BigInt;
use num_traits::One;

/// Classical Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n > 0);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let v: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(v, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn mobius_sums_vanish() {
        for n in 2..60 {
            let s: i64 = divisors(n).into_iter().map(mobius).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }
}
