use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

/// `C(n, k)` for any integer `n`, via the multiplicative formula.
///
/// Zero for `k < 0`; negative `n` uses `C(n, k) = (−1)^k C(k − n − 1, k)`.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let c = binom_int(k - n - 1, k);
        return if k % 2 == 0 { c } else { -c };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let base = (n as u64) - k;
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= base + i;
        acc /= i;
    }
    acc
}

/// `C(2n, n)`.
pub fn central_binom(n: i64) -> BigInt {
    binom_int(2 * n, n)
}

/// Generalized binomial `x(x−1)⋯(x−k+1)/k!` for rational `x`.
pub fn binom(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    if x.is_integer() {
        if let Some(n) = x.numer().to_i64() {
            return Rational::from_integer(binom_int(n, k));
        }
    }
    let mut num = Rational::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= x - Rational::from_integer(BigInt::from(i));
        den *= i + 1;
    }
    num / Rational::from_integer(den)
}
