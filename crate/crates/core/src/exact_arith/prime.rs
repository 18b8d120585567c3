use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for all `u64`.
///
/// Strong-pseudoprime test to the first twelve prime bases, which has no
/// counterexample below 2^64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p >= 3 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p.to_string()))
    }
}

/// An odd prime `p` together with an exponent `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(u64, u32)", into = "(u64, u32)")]
pub struct PrimePower {
    p: u64,
    k: u32,
}

impl PrimePower {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        require_odd_prime(p)?;
        if k == 0 {
            return Err(Error::precondition(format!(
                "exponent of {p}^k must be at least 1"
            )));
        }
        Ok(PrimePower { p, k })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `p^k` exactly.
    pub fn modulus(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.p), self.k as usize)
    }
}

impl TryFrom<(u64, u32)> for PrimePower {
    type Error = Error;

    fn try_from((p, k): (u64, u32)) -> Result<Self> {
        PrimePower::new(p, k)
    }
}

impl From<PrimePower> for (u64, u32) {
    fn from(pp: PrimePower) -> Self {
        (pp.p, pp.k)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.k)
    }
}
