//! Closed-form sums for `S_n`, `P_n` and `f_n`.
//!
//! Binomials are built incrementally along each sum so every form costs
//! O(n) big-integer operations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SForm {
    /// `Σ C(2k,k)^2 C(n,2k) 4^(n−2k)`.
    Zagier,
    /// `Σ C(n,k) C(2k,k) C(2n−2k,n−k)`.
    Jovovic,
    /// `Σ C(2k,k)^2 C(k,n−k) (−4)^(n−k)`.
    SunA,
    /// `(−2)^(−n) Σ C(2k,k) C(2n−2k,n−k) C(k,n−k) (−4)^k`.
    SunB,
    /// `2 Σ_{k≥1} C(n−1,k−1) C(2k,k) C(2n−2k,n−k)`, `n ≥ 1`.
    Halved,
}

impl SForm {
    pub const ALL: [SForm; 5] = [
        SForm::Zagier,
        SForm::Jovovic,
        SForm::SunA,
        SForm::SunB,
        SForm::Halved,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PForm {
    /// `2^n Σ (−4)^k C(2n−2k,n−k)^2 C(n−k,k)`.
    AltSum,
    /// `Σ C(2k,k)^2 C(2n−2k,n−k)^2 / C(n,k)`.
    Convolution,
}

impl PForm {
    pub const ALL: [PForm; 2] = [PForm::AltSum, PForm::Convolution];
}

/// `C(2j, j)` for `j = 0..=n`.
fn central_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for j in 0..n as u64 {
        c = c * (2 * j + 1) * (2 * j + 2) / ((j + 1) * (j + 1));
        row.push(c.clone());
    }
    row
}

/// `C(n, k)` for `k = 0..=n`.
fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n as u64 {
        c = c * (n as u64 - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// `C(k, n−k)` indexed by `k = 0..=n` (zero below `⌈n/2⌉`).
fn shifted_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); n + 1];
    // walk k = n, n−1, … with j = n − k rising: C(k−1, j+1) = C(k,j)(k−j)(k−j−1)/(k(j+1))
    let mut c = BigInt::one();
    let (mut k, mut j) = (n as u64, 0u64);
    loop {
        row[k as usize] = c.clone();
        if k < j + 2 {
            break;
        }
        c = c * (k - j) * (k - j - 1) / (k * (j + 1));
        k -= 1;
        j += 1;
    }
    row
}

fn pow_i(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// Evaluate one of the closed forms of `S_n`.
pub fn clf_s_closed(n: usize, form: SForm) -> Result<BigInt> {
    let central = central_row(n);
    match form {
        SForm::Zagier => {
            let row = pascal_row(n);
            Ok((0..=n / 2)
                .map(|k| (&central[k] * &central[k] * &row[2 * k]) << (2 * (n - 2 * k)))
                .sum())
        }
        SForm::Jovovic => {
            let row = pascal_row(n);
            Ok((0..=n)
                .map(|k| &row[k] * &central[k] * &central[n - k])
                .sum())
        }
        SForm::SunA => {
            let shifted = shifted_row(n);
            Ok((0..=n)
                .map(|k| &central[k] * &central[k] * &shifted[k] * pow_i(-4, n - k))
                .sum())
        }
        SForm::SunB => {
            let shifted = shifted_row(n);
            let total: BigInt = (0..=n)
                .map(|k| &central[k] * &central[n - k] * &shifted[k] * pow_i(-4, k))
                .sum();
            let (q, r) = total.div_rem(&pow_i(-2, n));
            if !r.is_zero() {
                return Err(Error::NonIntegralRecurrenceStep {
                    sequence: "S (SunB)",
                    index: n,
                });
            }
            Ok(q)
        }
        SForm::Halved => {
            if n == 0 {
                return Err(Error::precondition("halved form of S_n needs n >= 1"));
            }
            let row = pascal_row(n - 1);
            let total: BigInt = (1..=n)
                .map(|k| &row[k - 1] * &central[k] * &central[n - k])
                .sum();
            Ok(total * 2)
        }
    }
}

/// Evaluate one of the closed forms of `P_n`.
pub fn clf_p_closed(n: usize, form: PForm) -> Result<BigInt> {
    let central = central_row(n);
    match form {
        PForm::AltSum => {
            let total: BigInt = (0..=n / 2)
                .map(|k| {
                    let c = &central[n - k];
                    c * c * crate::exact_arith::binom_int((n - k) as i64, k as i64) * pow_i(-4, k)
                })
                .sum();
            Ok(total << n)
        }
        PForm::Convolution => {
            let row = pascal_row(n);
            let total: Rational = (0..=n)
                .map(|k| {
                    let num = &central[k] * &central[k] * &central[n - k] * &central[n - k];
                    Rational::new(num, row[k].clone())
                })
                .sum();
            if !total.is_integer() {
                return Err(Error::NonIntegralRecurrenceStep {
                    sequence: "P (convolution)",
                    index: n,
                });
            }
            Ok(total.to_integer())
        }
    }
}

/// `f_n = Σ C(n,k)^3` summed directly.
pub fn franel_sum(n: usize) -> BigInt {
    pascal_row(n).iter().map(|c| c * c * c).sum()
}
