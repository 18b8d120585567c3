use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{clf_p, clf_s};
use crate::error::{Error, Result};
use crate::exact_arith::{binom_int, central_binom, DivisibilityOutcome, Rational};

/// `Σ_k C(n,k) (−1)^k S_k / 8^k = S_n / 8^n`.
pub fn identity_1_12_first(n: usize) -> Result<bool> {
    let mut lhs = Rational::zero();
    for k in 0..=n {
        let term = Rational::new(
            binom_int(n as i64, k as i64) * clf_s(k)?,
            BigInt::one() << (3 * k),
        );
        if k % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    Ok(lhs == Rational::new(clf_s(n)?, BigInt::one() << (3 * n)))
}

/// `Σ_{k=0}^{2n} C(2n,k) C(2n+k,k) (−8)^(2n−k) S_k = (−1)^n C(2n,n)^3`.
pub fn identity_1_12_second(n: usize) -> Result<bool> {
    let m = 2 * n as i64;
    let mut lhs = BigInt::zero();
    for k in 0..=m {
        lhs += binom_int(m, k)
            * binom_int(m + k, k)
            * num_traits::pow(BigInt::from(-8), (m - k) as usize)
            * clf_s(k as usize)?;
    }
    let c = central_binom(n as i64);
    let rhs = &c * &c * &c;
    Ok(lhs == if n.is_multiple_of(2) { rhs } else { -rhs })
}

/// `Σ_k (2k − n) C(n,k) C(2k,k) C(2n−2k,n−k) = 0`.
pub fn identity_2_2(n: usize) -> bool {
    let n = n as i64;
    let total: BigInt = (0..=n)
        .map(|k| {
            BigInt::from(2 * k - n) * binom_int(n, k) * central_binom(k) * central_binom(n - k)
        })
        .sum();
    total.is_zero()
}

/// `C(a−b, c−d) C(b, d) = C(a,c) C(c,d) C(a−c, b−d) / C(a,b)`.
pub fn identity_2_4(a: i64, b: i64, c: i64, d: i64) -> Result<bool> {
    let denom = binom_int(a, b);
    if denom.is_zero() {
        return Err(Error::DivisionByZero(format!("C({a},{b}) = 0")));
    }
    let lhs = Rational::from_integer(binom_int(a - b, c - d) * binom_int(b, d));
    let rhs = Rational::new(
        binom_int(a, c) * binom_int(c, d) * binom_int(a - c, b - d),
        denom,
    );
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConvexity {
    /// `S_m^2 < S_{m+1} S_{m−1}`.
    pub lower_strict: bool,
    /// `S_{m+1} S_{m−1} < (1 + 1/(m(m−1))) S_m^2`.
    pub upper_strict: bool,
}

/// Two-sided log-convexity bound at `m ≥ 2`, in cross-multiplied integer form.
pub fn log_convexity(m: usize) -> Result<LogConvexity> {
    if m < 2 {
        return Err(Error::precondition(format!(
            "log-convexity bound needs m >= 2, got {m}"
        )));
    }
    let sq = clf_s(m)?.pow(2);
    let gap = clf_s(m + 1)? * clf_s(m - 1)? - &sq;
    let mm = BigInt::from(m as u64 * (m as u64 - 1));
    Ok(LogConvexity {
        lower_strict: gap > BigInt::zero(),
        upper_strict: mm * gap < sq,
    })
}

/// `P_{m−1} P_{m+1} ≥ P_m^2` for `m ≥ 1`.
pub fn p_log_convex(m: usize) -> Result<bool> {
    if m < 1 {
        return Err(Error::precondition("P log-convexity needs m >= 1"));
    }
    Ok(clf_p(m - 1)? * clf_p(m + 1)? >= clf_p(m)?.pow(2))
}

/// `S_{mn+1} ≡ 4(mn+1) S_{mn} (mod m²n²)`.
pub fn lemma_3_1(m: usize, n: usize) -> Result<DivisibilityOutcome> {
    if m == 0 || n == 0 {
        return Err(Error::precondition("lemma_3_1 needs m, n >= 1"));
    }
    let mn = m * n;
    let lhs = clf_s(mn + 1)?;
    let rhs = clf_s(mn)? * (4 * (mn as u64 + 1));
    let modulus = BigInt::from(mn as u64 * mn as u64);
    Ok(DivisibilityOutcome::new(
        format!("lemma_3_1(m={m},n={n})"),
        lhs,
        rhs,
        modulus,
    ))
}
