use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::prime::require_odd_prime;
use super::{PrimePower, Rational};
use crate::error::{Error, Result};

/// `base^exp mod modulus` with the result in `[0, modulus)`.
pub fn mod_pow(base: &BigInt, exp: &BigInt, modulus: &BigInt) -> BigInt {
    base.mod_floor(modulus).modpow(exp, modulus)
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn residue_mod(q: &Rational, modulus: &BigInt, p: u64) -> Result<BigInt> {
    let inv = inverse_mod(q.denom(), modulus).ok_or_else(|| Error::DenominatorNotInvertible {
        denominator: q.denom().to_string(),
        p,
    })?;
    Ok((q.numer() * inv).mod_floor(modulus))
}

/// The residue of a p-integral rational modulo `p^k`, in `[0, p^k)`.
pub fn residue(q: &Rational, pp: &PrimePower) -> Result<BigInt> {
    residue_mod(q, &pp.modulus(), pp.p())
}

/// `⟨a⟩_p ∈ {0, …, p−1}`.
pub fn frac_residue(a: &Rational, p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let r = residue_mod(a, &BigInt::from(p), p)?;
    Ok(u64::try_from(r).expect("residue below p fits in u64"))
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: &Rational, p: u64) -> Result<i8> {
    let r = frac_residue(a, p)?;
    if r == 0 {
        return Ok(0);
    }
    let pb = BigInt::from(p);
    let e = mod_pow(&BigInt::from(r), &BigInt::from((p - 1) / 2), &pb);
    if e.is_one() {
        Ok(1)
    } else {
        debug_assert_eq!(e, &pb - 1u32);
        Ok(-1)
    }
}

pub(crate) fn is_zero_mod(n: &BigInt, m: &BigInt) -> bool {
    n.mod_floor(m).is_zero()
}
