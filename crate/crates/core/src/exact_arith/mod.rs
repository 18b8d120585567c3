//! Exact integer and rational arithmetic shared by every check.
//!
//! Integers are [`num_bigint::BigInt`], rationals are [`num_rational::BigRational`]
//! (always reduced, positive denominator). On top of those this module adds
//! p-adic valuations, residues modulo prime powers, generalized binomial
//! coefficients, the Legendre symbol and the congruence predicate
//! `a ≡ b (mod p^k) ⇔ ord_p(a − b) ≥ k` used for every rational congruence.

mod binom;
mod congruence;
mod prime;
mod residue;
mod valuation;

pub use binom::{binom, binom_int, central_binom};
pub use congruence::{congruent, CongruenceOutcome, DivisibilityOutcome};
pub(crate) use prime::require_odd_prime;
pub use prime::{is_prime, PrimePower};
pub use residue::{frac_residue, legendre, mod_pow, residue};
pub use valuation::{ord, ord_int, Valuation};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Reduced fraction of two [`ExactInt`] with positive denominator.
pub type Rational = BigRational;

pub fn int(v: impl Into<BigInt>) -> ExactInt {
    v.into()
}

pub fn rat(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `num / den`, reduced. Panics when `den == 0`.
pub fn frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}
