//! Bernoulli numbers and polynomials, Euler numbers and polynomials, and the
//! power-sum formulas built from them.
//!
//! Conventions: `B_1 = −1/2`, `B_j(x) = Σ_i C(j,i) B_i x^(j−i)`,
//! `E_n(x) = 2^(−n) Σ_k C(n,k) (2x−1)^(n−k) E_k`, so that `E_n = 2^n E_n(1/2)`.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact_arith::{binom_int, ord, rat, require_odd_prime, Rational, Valuation};

/// Grow-on-demand tables of `B_n` and `E_n`.
pub struct SpecialCache {
    bernoulli: RwLock<Vec<Rational>>,
    euler: RwLock<Vec<BigInt>>,
}

impl Default for SpecialCache {
    fn default() -> Self {
        Self::new()
    }
}

impl SpecialCache {
    pub fn new() -> Self {
        SpecialCache {
            bernoulli: RwLock::new(vec![Rational::one()]),
            euler: RwLock::new(vec![BigInt::one()]),
        }
    }

    pub fn bernoulli(&self, n: usize) -> Rational {
        if let Some(b) = self.bernoulli.read().unwrap().get(n) {
            return b.clone();
        }
        let mut table = self.bernoulli.write().unwrap();
        while table.len() <= n {
            // Σ_{k=0}^{j} C(j+1, k) B_k = 0
            let j = table.len();
            let s: Rational = table
                .iter()
                .enumerate()
                .map(|(k, b)| b * rat(binom_int(j as i64 + 1, k as i64)))
                .sum();
            table.push(-s / rat(j as i64 + 1));
        }
        table[n].clone()
    }

    pub fn euler_number(&self, n: usize) -> BigInt {
        if let Some(e) = self.euler.read().unwrap().get(n) {
            return e.clone();
        }
        let mut table = self.euler.write().unwrap();
        while table.len() <= n {
            let j = table.len();
            if j % 2 == 1 {
                table.push(BigInt::zero());
                continue;
            }
            // Σ_{k=0}^{j/2} C(j, 2k) E_{2k} = 0
            let s: BigInt = (0..j)
                .step_by(2)
                .map(|k| binom_int(j as i64, k as i64) * &table[k])
                .sum();
            table.push(-s);
        }
        table[n].clone()
    }
}

static CACHE: LazyLock<SpecialCache> = LazyLock::new(SpecialCache::new);

pub fn bernoulli(n: usize) -> Rational {
    CACHE.bernoulli(n)
}

pub fn euler_number(n: usize) -> BigInt {
    CACHE.euler_number(n)
}

fn rpow(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

/// `B_j(x)`.
pub fn bernoulli_poly(j: usize, x: &Rational) -> Rational {
    (0..=j)
        .map(|i| rat(binom_int(j as i64, i as i64)) * bernoulli(i) * rpow(x, j - i))
        .sum()
}

/// `E_n(x)`.
pub fn euler_poly(n: usize, x: &Rational) -> Rational {
    let y = x * rat(2) - rat(1);
    let s: Rational = (0..=n)
        .map(|k| rat(binom_int(n as i64, k as i64) * euler_number(k)) * rpow(&y, n - k))
        .sum();
    s / rat(BigInt::one() << n)
}

fn int_pow(k: usize, m: usize) -> BigInt {
    // 0^0 = 1
    num_traits::pow(BigInt::from(k), m)
}

/// Both sides of `Σ_{k=0}^{n−1} k^m = (B_{m+1}(n) − B_{m+1}) / (m+1)`.
pub fn power_sum_sides(m: usize, n: usize) -> (Rational, Rational) {
    let direct: BigInt = (0..n).map(|k| int_pow(k, m)).sum();
    let x = rat(n as i64);
    let formula = (bernoulli_poly(m + 1, &x) - bernoulli(m + 1)) / rat(m as i64 + 1);
    (rat(direct), formula)
}

pub fn power_sum_check(m: usize, n: usize) -> bool {
    let (a, b) = power_sum_sides(m, n);
    a == b
}

/// Both sides of `Σ_{k=0}^{n−1} (−1)^k k^m = (E_m(0) − (−1)^n E_m(n)) / 2`.
pub fn alt_power_sum_sides(m: usize, n: usize) -> (Rational, Rational) {
    let direct: BigInt = (0..n)
        .map(|k| {
            if k % 2 == 0 {
                int_pow(k, m)
            } else {
                -int_pow(k, m)
            }
        })
        .sum();
    let at_n = euler_poly(m, &rat(n as i64));
    let signed = if n.is_multiple_of(2) { at_n } else { -at_n };
    let formula = (euler_poly(m, &rat(0)) - signed) / rat(2);
    (rat(direct), formula)
}

pub fn alt_power_sum_check(m: usize, n: usize) -> bool {
    let (a, b) = alt_power_sum_sides(m, n);
    a == b
}

/// Von Staudt–Clausen integrality: `B_{2k} ∈ ℤ_p` when `(p−1) ∤ 2k`,
/// otherwise `p B_{2k} ∈ ℤ_p`.
pub fn staudt_clausen_check(k: usize, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    let b = bernoulli(2 * k);
    let target = if (2 * k as u64).is_multiple_of(p - 1) {
        b * rat(p as i64)
    } else {
        b
    };
    Ok(ord(&target, p)? >= Valuation::Finite(0))
}
