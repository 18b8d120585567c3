use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::prime::require_odd_prime;
use super::Rational;
use crate::error::Result;

/// A p-adic valuation; `Infinite` is the valuation of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self ≥ required`.
    pub fn at_least(self, required: i64) -> bool {
        self >= Valuation::Finite(required)
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

// Serialized as a decimal string, "inf" for zero.
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            Ok(Valuation::Infinite)
        } else {
            s.parse()
                .map(Valuation::Finite)
                .map_err(serde::de::Error::custom)
        }
    }
}

/// Multiplicity of `p` in a nonzero integer; assumes `p ≥ 2`.
fn multiplicity(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

/// `ord_p(n)` for an integer.
pub fn ord_int(n: &BigInt, p: u64) -> Result<Valuation> {
    require_odd_prime(p)?;
    Ok(if n.is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(multiplicity(n, p))
    })
}

/// `ord_p(x) = ord_p(numerator) − ord_p(denominator)`; `ord_p(0)` is infinite.
pub fn ord(x: &Rational, p: u64) -> Result<Valuation> {
    require_odd_prime(p)?;
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(
        multiplicity(x.numer(), p) - multiplicity(x.denom(), p),
    ))
}
