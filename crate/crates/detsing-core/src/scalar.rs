//! Exact scalars and small integer combinatorics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `C(n, k)` with the convention that it vanishes outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Generalized binomial `C(x, k)` for any integer `x` and `k ≥ 0`, as a signed integer.
pub fn binomial_signed(x: i64, k: i64) -> i128 {
    if k < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k {
        num *= (x - i) as i128;
        den *= (i + 1) as i128;
    }
    num / den
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Sign `(-1)^k`.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    if !is_integer(q) {
        return None;
    }
    let n = q.numer();
    if n.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    let (s, digits) = n.to_u64_digits();
    let v = digits.first().copied().unwrap_or(0) as i64;
    Some(if s == num_bigint::Sign::Minus { -v } else { v })
}

pub fn is_zero(q: &Rational) -> bool {
    q.is_zero()
}
