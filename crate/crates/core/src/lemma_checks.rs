//! Executable forms of the auxiliary binomial, Bernoulli and Euler
//! congruences that the theorems rest on.
//!
//! Every predicate evaluates both sides from scratch with exact arithmetic
//! and returns a [`CongruenceOutcome`] (or a boolean for exact identities).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::require_odd_prime;
use crate::exact_arith::{
    binom, binom_int, central_binom, congruent, frac, frac_residue, ord, rat, CongruenceOutcome,
    PrimePower, Rational, Valuation,
};
use crate::special_numbers::{bernoulli, euler_poly};

pub(crate) fn upow(p: u64, e: u32) -> i64 {
    (p as i64).checked_pow(e).expect("prime power exceeds i64")
}

fn c(n: i64, k: i64) -> BigInt {
    binom_int(n, k)
}

fn check(lhs: BigInt, rhs: BigInt, p: u64, k: u32, label: String) -> Result<CongruenceOutcome> {
    congruent(&rat(lhs), &rat(rhs), &PrimePower::new(p, k)?, label)
}

/// Base-p digit pairs (most significant first), the digit-wise product
/// mod p, and the verdict `C(a,b) ≡ Π C(a_i,b_i) (mod p)`.
#[derive(Clone, Debug)]
pub struct LucasReduction {
    pub digit_pairs: Vec<(u64, u64)>,
    pub product_residue: u64,
    pub outcome: CongruenceOutcome,
}

pub fn lucas_reduce(a: u64, b: u64, p: u64) -> Result<LucasReduction> {
    require_odd_prime(p)?;
    let mut pairs = Vec::new();
    let (mut x, mut y) = (a, b);
    loop {
        pairs.push((x % p, y % p));
        x /= p;
        y /= p;
        if x == 0 && y == 0 {
            break;
        }
    }
    pairs.reverse();
    let product = pairs.iter().fold(BigInt::one(), |acc, &(ai, bi)| {
        acc * c(ai as i64, bi as i64) % p
    });
    let product_residue = u64::try_from(product).expect("residue fits");
    let outcome = check(
        c(a as i64, b as i64),
        BigInt::from(product_residue),
        p,
        1,
        format!("lucas_reduce(a={a},b={b},p={p})"),
    )?;
    Ok(LucasReduction {
        digit_pairs: pairs,
        product_residue,
        outcome,
    })
}

/// `C(ap + a0, bp + b0) ≡ C(a,b) C(a0,b0) (mod p)`.
pub fn check_lemma_2_2(a: u64, b: u64, a0: u64, b0: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if a == 0 || b == 0 || a0 >= p || b0 >= p {
        return Err(Error::precondition(
            "check_lemma_2_2 needs a, b >= 1 and a0, b0 in [0, p-1]",
        ));
    }
    let (a, b, a0, b0, q) = (a as i64, b as i64, a0 as i64, b0 as i64, p as i64);
    check(
        c(a * q + a0, b * q + b0),
        c(a, b) * c(a0, b0),
        p,
        1,
        format!("check_lemma_2_2(a={a},b={b},a0={a0},b0={b0},p={p})"),
    )
}

/// Kazandzidis: `C(mp, np) ≡ C(m, n) (mod p^3)` for `p ≥ 5`.
pub fn check_kazandzidis(m: u64, n: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if p < 5 {
        return Err(Error::precondition("Kazandzidis' congruence needs p >= 5"));
    }
    if m == 0 || n == 0 {
        return Err(Error::precondition(
            "Kazandzidis' congruence needs m, n >= 1",
        ));
    }
    let (mi, ni, q) = (m as i64, n as i64, p as i64);
    check(
        c(mi * q, ni * q),
        c(mi, ni),
        p,
        3,
        format!("check_kazandzidis(m={m},n={n},p={p})"),
    )
}

/// `C(2k,k) C(2(p−k),p−k) ≡ ∓2p/k (mod p^2)`, minus sign for `k < p/2`.
pub fn check_lemma_2_4(k: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if k == 0 || k >= p {
        return Err(Error::precondition("check_lemma_2_4 needs 1 <= k <= p-1"));
    }
    let lhs = central_binom(k as i64) * central_binom((p - k) as i64);
    let mut rhs = frac(2 * p as i64, k as i64);
    if 2 * k < p {
        rhs = -rhs;
    }
    congruent(
        &rat(lhs),
        &rhs,
        &PrimePower::new(p, 2)?,
        format!("check_lemma_2_4(k={k},p={p})"),
    )
}

/// `Σ_{r=1}^{⟨a⟩_p} (−1)^r / r^k ≡ −(2^(p−k) − 1) B_{p−k}/(p−k)
///   + ½ (−1)^(⟨a⟩_p + k) E_{p−1−k}(−a) (mod p)`.
pub fn check_lemma_2_5(a: &Rational, k: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if k == 0 || k + 2 > p {
        return Err(Error::precondition("check_lemma_2_5 needs 1 <= k <= p-2"));
    }
    let abar = frac_residue(a, p)?;
    if abar == 0 {
        return Err(Error::precondition(
            "check_lemma_2_5 needs a not divisible by p",
        ));
    }
    let lhs: Rational = (1..=abar)
        .map(|r| {
            let t = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(r), k as usize));
            if r % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    let pk = (p - k) as usize;
    let two_pow = (BigInt::one() << pk) - 1;
    let bern_part = -(rat(two_pow) * bernoulli(pk)) / rat(pk as i64);
    let e = euler_poly((p - 1 - k) as usize, &-a.clone());
    let euler_part = if (abar + k).is_multiple_of(2) { e } else { -e } / rat(2);
    congruent(
        &lhs,
        &(bern_part + euler_part),
        &PrimePower::new(p, 1)?,
        format!("check_lemma_2_5(a={a},k={k},p={p})"),
    )
}

/// `C(2mp+2k, mp+k) ≡ (2m+1) C(2m,m) C(2k,k) (mod p^2)` for `p/2 < k < p`.
pub fn check_lemma_2_6(m: u64, k: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if m == 0 || 2 * k <= p || k >= p {
        return Err(Error::precondition(
            "check_lemma_2_6 needs m >= 1 and p/2 < k < p",
        ));
    }
    let (mi, ki, q) = (m as i64, k as i64, p as i64);
    check(
        c(2 * mi * q + 2 * ki, mi * q + ki),
        BigInt::from(2 * mi + 1) * central_binom(mi) * central_binom(ki),
        p,
        2,
        format!("check_lemma_2_6(m={m},k={k},p={p})"),
    )
}

/// `Π_{1≤i≤upto, p∤i} (1 − x/i)`.
fn coprime_product(x: i64, upto: i64, p: i64) -> Rational {
    (1..=upto)
        .filter(|i| i % p != 0)
        .map(|i| Rational::one() - frac(x, i))
        .product()
}

/// The two exact product identities for `C(mp^r − 1, k)` and `C(mp^r, np)`.
///
/// The second is evaluated at `n = ⌊k/p⌋` whenever `n ≥ 1` and `np ≤ mp^r`.
pub fn check_lemma_2_8(m: i64, r: u32, k: u64, p: u64) -> Result<bool> {
    if p < 2 || r == 0 {
        return Err(Error::precondition(
            "check_lemma_2_8 needs p >= 2 and r >= 1",
        ));
    }
    let q = p as i64;
    let k = k as i64;
    let big = m * upow(p, r);
    let small = m * upow(p, r - 1);
    let fl = k / q;

    let lhs = rat(c(big - 1, k));
    let sign = if (k - fl) % 2 == 0 { 1 } else { -1 };
    let rhs = rat(c(small - 1, fl) * sign) * coprime_product(big, k, q);
    if lhs != rhs {
        return Ok(false);
    }

    let n = fl;
    if n >= 1 && n * q <= big {
        let lhs = rat(c(big, n * q));
        let sign = if (n * (q - 1)) % 2 == 0 { 1 } else { -1 };
        let rhs = rat(c(small, n) * sign) * coprime_product(big, n * q - 1, q);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C(3m, 3n) ≡ C(m,n)(1 + 9mn² − 9m²n) (mod 27)`.
pub fn check_lemma_2_9(m: u64, n: u64) -> Result<CongruenceOutcome> {
    if m == 0 || n == 0 {
        return Err(Error::precondition("check_lemma_2_9 needs m, n >= 1"));
    }
    let (mi, ni) = (m as i64, n as i64);
    let factor = BigInt::from(1 + 9 * mi * ni * ni - 9 * mi * mi * ni);
    check(
        c(3 * mi, 3 * ni),
        c(mi, ni) * factor,
        3,
        3,
        format!("check_lemma_2_9(m={m},n={n})"),
    )
}

fn require_mr(m: u64, r: u32) -> Result<()> {
    if m == 0 || r == 0 {
        return Err(Error::precondition("needs m, r >= 1"));
    }
    Ok(())
}

/// `C(mp^r, sp) ≡ C(mp^(r−1), s) (mod p^(2r))` for `0 ≤ s < mp^(r−1)`.
pub fn check_lemma_2_10(m: u64, r: u32, s: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let small = m as i64 * upow(p, r - 1);
    let s = s as i64;
    if s >= small {
        return Err(Error::precondition(
            "check_lemma_2_10 needs s <= mp^(r-1) - 1",
        ));
    }
    check(
        c(small * p as i64, s * p as i64),
        c(small, s),
        p,
        2 * r,
        format!("check_lemma_2_10(m={m},r={r},s={s},p={p})"),
    )
}

/// `C(M,s) C(2sp,sp) C(2(M−s)p,(M−s)p) ≡ C(M,s) C(2s,s) C(2(M−s),M−s) (mod p^(r+2))`
/// with `M = mp^(r−1)`, and an extra factor `1 + 9m` when `r = 1, p = 3`.
pub fn check_lemma_2_11(m: u64, r: u32, s: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let q = p as i64;
    let big_m = m as i64 * upow(p, r - 1);
    let s = s as i64;
    if s == 0 || s > big_m {
        return Err(Error::precondition(
            "check_lemma_2_11 needs 1 <= s <= mp^(r-1)",
        ));
    }
    let lhs = c(big_m, s) * central_binom(s * q) * central_binom((big_m - s) * q);
    let mut rhs = c(big_m, s) * central_binom(s) * central_binom(big_m - s);
    if r == 1 && p == 3 {
        rhs *= 1 + 9 * m as i64;
    }
    check(
        lhs,
        rhs,
        p,
        r + 2,
        format!("check_lemma_2_11(m={m},r={r},s={s},p={p})"),
    )
}

/// `k C(2k,k) C(2(mp^r − k), mp^r − k) ≡ 0 (mod p^r)` for `0 ≤ k ≤ mp^r`.
pub fn check_lemma_2_12(m: u64, r: u32, k: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let big = m as i64 * upow(p, r);
    let k = k as i64;
    if k > big {
        return Err(Error::precondition("check_lemma_2_12 needs k <= mp^r"));
    }
    let lhs = BigInt::from(k) * central_binom(k) * central_binom(big - k);
    check(
        lhs,
        BigInt::zero(),
        p,
        r,
        format!("check_lemma_2_12(m={m},r={r},k={k},p={p})"),
    )
}

/// `C(2sp+p−1, sp+h) C(2(M−s−1)p+p−1, (M−s−1)p+h) ≡ C(2s,s) C(2(M−s−1), M−s−1) (mod p^r)`
/// with `h = (p−1)/2`, `M = mp^(r−1)`.
pub fn check_lemma_2_13(m: u64, r: u32, s: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let q = p as i64;
    let h = (q - 1) / 2;
    let big_m = m as i64 * upow(p, r - 1);
    let s = s as i64;
    if s >= big_m {
        return Err(Error::precondition(
            "check_lemma_2_13 needs s <= mp^(r-1) - 1",
        ));
    }
    let t = big_m - s - 1;
    let lhs = c(2 * s * q + q - 1, s * q + h) * c(2 * t * q + q - 1, t * q + h);
    let rhs = central_binom(s) * central_binom(t);
    check(
        lhs,
        rhs,
        p,
        r,
        format!("check_lemma_2_13(m={m},r={r},s={s},p={p})"),
    )
}

/// `C(mp^r, sp) C(2sp,sp) C(2mp^r−2sp, mp^r−sp) ≡ C(M,s) C(2s,s) C(2M−2s, M−s) (mod p^(2r))`.
pub fn check_lemma_2_14(m: u64, r: u32, s: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let q = p as i64;
    let big_m = m as i64 * upow(p, r - 1);
    let big = big_m * q;
    let s = s as i64;
    if s >= big_m {
        return Err(Error::precondition(
            "check_lemma_2_14 needs s <= mp^(r-1) - 1",
        ));
    }
    let lhs = c(big, s * q) * central_binom(s * q) * central_binom(big - s * q);
    let rhs = c(big_m, s) * central_binom(s) * central_binom(big_m - s);
    check(
        lhs,
        rhs,
        p,
        2 * r,
        format!("check_lemma_2_14(m={m},r={r},s={s},p={p})"),
    )
}

/// `C(n,k) ≡ C(n1,k1) [(1+n1) C(n0,k0) − (n1+k1) C(n0−p,k0) − k1 C(n0−p,k0+p)] (mod p^2)`
/// where `n = n1 p + n0`, `k = k1 p + k0`, `n1, k1 ≥ 1`.
pub fn check_lemma_2_15(n: u64, k: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    let q = p as i64;
    let (n, k) = (n as i64, k as i64);
    let (n1, n0, k1, k0) = (n / q, n % q, k / q, k % q);
    if n1 == 0 || k1 == 0 {
        return Err(Error::precondition("check_lemma_2_15 needs n, k >= p"));
    }
    let bracket = BigInt::from(1 + n1) * c(n0, k0)
        - BigInt::from(n1 + k1) * c(n0 - q, k0)
        - BigInt::from(k1) * c(n0 - q, k0 + q);
    check(
        c(n, k),
        c(n1, k1) * bracket,
        p,
        2,
        format!("check_lemma_2_15(n={n},k={k},p={p})"),
    )
}

/// `Σ_{t=0}^{h} (−1)^t [C(h+t, t) − C(p+h+t, p+t)] C(−1/2, t)^2 ≡ 0 (mod p^2)`, `h = (p−1)/2`.
pub fn check_lemma_2_16(p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    let q = p as i64;
    let h = (q - 1) / 2;
    let half = frac(-1, 2);
    let total: Rational = (0..=h)
        .map(|t| {
            let diff = c(h + t, t) - c(q + h + t, q + t);
            let g = binom(&half, t);
            let term = rat(diff) * &g * &g;
            if t % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    congruent(
        &total,
        &Rational::zero(),
        &PrimePower::new(p, 2)?,
        format!("check_lemma_2_16(p={p})"),
    )
}

/// `Σ_{1≤i≤sp−1, p∤i} 1/i ≡ 0 (mod p^(ord_p(s)+1))`.
pub fn check_harmonic_2_3(s: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if s == 0 {
        return Err(Error::precondition("harmonic congruence needs s >= 1"));
    }
    let q = p as i64;
    let total: Rational = (1..s as i64 * q)
        .filter(|i| i % q != 0)
        .map(|i| frac(1, i))
        .sum();
    let l = match ord(&rat(s as i64), p)? {
        Valuation::Finite(v) => v as u32,
        Valuation::Infinite => unreachable!("s >= 1"),
    };
    congruent(
        &total,
        &Rational::zero(),
        &PrimePower::new(p, l + 1)?,
        format!("check_harmonic_2_3(s={s},p={p})"),
    )
}
