//! Verdicts for the congruences satisfied by `P_n`, `S_n` and `f_n`.
//!
//! Sequence values come from the shared recurrence caches; Euler numbers from
//! [`crate::special_numbers`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{
    binom_int, central_binom, congruent, legendre, ord, ord_int, rat, require_odd_prime, residue,
    CongruenceOutcome, PrimePower, Rational, Valuation,
};
use crate::lemma_checks::upow;
use crate::sequences::{clf_p, clf_s, franel};
use crate::special_numbers::euler_number;

fn pp(p: u64, k: u32) -> Result<PrimePower> {
    PrimePower::new(p, k)
}

fn check(lhs: BigInt, rhs: BigInt, p: u64, k: u32, label: String) -> Result<CongruenceOutcome> {
    congruent(&rat(lhs), &rat(rhs), &pp(p, k)?, label)
}

/// `(−1)^((p−1)/2)`.
fn quad_sign(p: u64) -> i64 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

fn require_mr(m: u64, r: u32) -> Result<()> {
    if m == 0 || r == 0 {
        return Err(Error::precondition("needs m, r >= 1"));
    }
    Ok(())
}

/// `(mp^r, mp^(r−1))` as sequence indices.
fn lifted_indices(m: u64, r: u32, p: u64) -> (usize, usize) {
    let lo = m as i64 * upow(p, r - 1);
    ((lo * p as i64) as usize, lo as usize)
}

/// `P_n ≡ Π P_{a_i} (mod p)` over the base-p digits `a_i` of `n`.
pub fn check_1_8(n: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    let mut rhs = BigInt::one();
    let mut x = n;
    loop {
        rhs *= clf_p((x % p) as usize)?;
        x /= p;
        if x == 0 {
            break;
        }
    }
    check(
        clf_p(n as usize)?,
        rhs,
        p,
        1,
        format!("check_1_8(n={n},p={p})"),
    )
}

/// `P_n ≡ (−1)^((p−1)/2) 128^n P_{p−1−n} (mod p)` for `0 ≤ n ≤ p−1`.
pub fn check_1_9(n: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if n >= p {
        return Err(Error::precondition("check_1_9 needs 0 <= n <= p-1"));
    }
    let rhs = num_traits::pow(BigInt::from(128), n as usize)
        * clf_p((p - 1 - n) as usize)?
        * quad_sign(p);
    check(
        clf_p(n as usize)?,
        rhs,
        p,
        1,
        format!("check_1_9(n={n},p={p})"),
    )
}

/// `P_{mp^r} ≡ P_{mp^(r−1)} (mod p^r)`.
pub fn check_1_10(m: u64, r: u32, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let (hi, lo) = lifted_indices(m, r, p);
    check(
        clf_p(hi)?,
        clf_p(lo)?,
        p,
        r,
        format!("check_1_10(m={m},r={r},p={p})"),
    )
}

/// `S_{mp^r} ≡ S_{mp^(r−1)} (mod p^(2r))`.
pub fn check_1_11(m: u64, r: u32, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let (hi, lo) = lifted_indices(m, r, p);
    check(
        clf_s(hi)?,
        clf_s(lo)?,
        p,
        2 * r,
        format!("check_1_11(m={m},r={r},p={p})"),
    )
}

/// `P_{mp^r} ≡ 2^(m φ(p^r)) P_{mp^(r−1)} (mod p^(2r))`.
pub fn check_p_lift(m: u64, r: u32, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let (hi, lo) = lifted_indices(m, r, p);
    let phi = upow(p, r) - upow(p, r - 1);
    let rhs = clf_p(lo)? << (m as usize * phi as usize);
    check(
        clf_p(hi)?,
        rhs,
        p,
        2 * r,
        format!("check_P_lift(m={m},r={r},p={p})"),
    )
}

/// `Σ_{k<p} C(2k,k) S_k/(n+16)^k ≡ (n(n+16)/p) Σ_{k<p} C(2k,k)^2 C(4k,2k)/n^(2k) (mod p)`.
pub fn check_1_13(n: &Rational, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    let shifted = n + rat(16);
    let nr = residue(n, &pp(p, 1)?)?;
    let sr = residue(&shifted, &pp(p, 1)?)?;
    if nr.is_zero() || sr.is_zero() {
        return Err(Error::precondition(
            "check_1_13 needs n not congruent to 0 or -16 mod p",
        ));
    }
    let mut lhs = Rational::zero();
    let mut sum = Rational::zero();
    for k in 0..p as usize {
        let c = central_binom(k as i64);
        lhs += rat(&c * clf_s(k)?) / num_traits::pow(shifted.clone(), k);
        sum += rat(&c * &c * central_binom(2 * k as i64)) / num_traits::pow(n.clone(), 2 * k);
    }
    let symbol = legendre(&(n * &shifted), p)?;
    congruent(
        &lhs,
        &(sum * rat(symbol)),
        &pp(p, 1)?,
        format!("check_1_13(n={n},p={p})"),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: u64,
    pub r: u32,
    pub index: usize,
    pub ord_s: Valuation,
    pub ord_f: Valuation,
    pub conjecture_holds: bool,
}

/// Valuations of `S` and `f` at `(p^r − 1)/2` for `r = 1..=r_max`, `p ≡ 5, 7 (mod 8)`.
///
/// Observations only: a row with `conjecture_holds = false` is a finding, not an error.
pub fn scan_1_14(p: u64, r_max: u32) -> Result<Vec<ScanRow>> {
    require_odd_prime(p)?;
    if p % 8 != 5 && p % 8 != 7 {
        return Err(Error::precondition(format!(
            "scan_1_14 needs p = 5, 7 mod 8, got {p}"
        )));
    }
    (1..=r_max)
        .map(|r| {
            let index = ((upow(p, r) - 1) / 2) as usize;
            let ord_s = ord_int(&clf_s(index)?, p)?;
            let ord_f = ord_int(&franel(index)?, p)?;
            let need = i64::from(r);
            Ok(ScanRow {
                p,
                r,
                index,
                ord_s,
                ord_f,
                conjecture_holds: ord_s.at_least(need) && ord_f.at_least(need),
            })
        })
        .collect()
}

/// `S_{np} − S_n` modulo `p^3` (or `p^(3 + ord_p n)` when `p | n`).
pub fn check_thm_3_1(n: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if n == 0 {
        return Err(Error::precondition("check_thm_3_1 needs n >= 1"));
    }
    let label = format!("check_thm_3_1(n={n},p={p})");
    let nu = n as usize;
    let lhs = clf_s(nu * p as usize)? - clf_s(nu)?;
    if n.is_multiple_of(p) {
        let l = ord(&rat(n), p)?.finite().expect("n >= 1") as u32;
        return check(lhs, BigInt::zero(), p, 3 + l, label);
    }
    let rhs = if p == 3 {
        BigInt::from(9 * (n as i64 - 1)) * clf_s(nu)?
    } else {
        let ni = BigInt::from(n);
        BigInt::from(8)
            * &ni
            * &ni
            * clf_s(nu - 1)?
            * quad_sign(p)
            * (p * p)
            * euler_number(p as usize - 3)
    };
    check(lhs, rhs, p, 3, label)
}

fn require_p_above_3(p: u64) -> Result<()> {
    require_odd_prime(p)?;
    if p == 3 {
        return Err(Error::precondition("needs p > 3"));
    }
    Ok(())
}

/// `S_p`, `S_{2p}`, `S_{3p}` modulo `p^3`.
pub fn check_cor_3_1(p: u64) -> Result<Vec<CongruenceOutcome>> {
    require_p_above_3(p)?;
    let tail = BigInt::from(quad_sign(p)) * (p * p) * euler_number(p as usize - 3);
    [(1usize, 4, 8), (2, 20, 128), (3, 112, 1440)]
        .into_iter()
        .map(|(j, base, coeff)| {
            let rhs = BigInt::from(base) + &tail * coeff;
            check(
                clf_s(j * p as usize)?,
                rhs,
                p,
                3,
                format!("check_cor_3_1(j={j},p={p})"),
            )
        })
        .collect()
}

/// `S_{mp^r + 1} ≡ 4(mp^r + 1) S_{mp^(r−1)} (mod p^(2r))`.
pub fn check_thm_3_2(m: u64, r: u32, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let (hi, lo) = lifted_indices(m, r, p);
    let rhs = clf_s(lo)? * (4 * (hi as u64 + 1));
    check(
        clf_s(hi + 1)?,
        rhs,
        p,
        2 * r,
        format!("check_thm_3_2(m={m},r={r},p={p})"),
    )
}

/// `S_{mp^r − 1} ≡ (−1)^((p−1)/2) S_{mp^(r−1) − 1} (mod p^r)`.
pub fn check_thm_3_3(m: u64, r: u32, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let (hi, lo) = lifted_indices(m, r, p);
    let rhs = clf_s(lo - 1)? * quad_sign(p);
    check(
        clf_s(hi - 1)?,
        rhs,
        p,
        r,
        format!("check_thm_3_3(m={m},r={r},p={p})"),
    )
}

/// `S_{np+1}` modulo `p^3`.
pub fn check_thm_3_4(n: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    if n == 0 {
        return Err(Error::precondition("check_thm_3_4 needs n >= 1"));
    }
    let nu = n as usize;
    let ni = n as i64;
    let rhs = if p == 3 {
        BigInt::from(4 + 12 * ni - 9 * ni * ni) * clf_s(nu)?
    } else {
        let e = euler_number(p as usize - 3) - 1;
        clf_s(nu)? * (4 * (n * p + 1))
            + BigInt::from(32 * ni * ni) * clf_s(nu - 1)? * quad_sign(p) * e * (p * p)
    };
    check(
        clf_s(nu * p as usize + 1)?,
        rhs,
        p,
        3,
        format!("check_thm_3_4(n={n},p={p})"),
    )
}

/// `S_{p+1} ≡ 16 + 16p + 32(−1)^((p−1)/2)(E_{p−3} − 1)p^2 (mod p^3)`.
pub fn check_cor_3_2(p: u64) -> Result<CongruenceOutcome> {
    require_p_above_3(p)?;
    let e = euler_number(p as usize - 3) - 1;
    let rhs = BigInt::from(16 + 16 * p) + BigInt::from(32 * quad_sign(p)) * e * (p * p);
    check(
        clf_s(p as usize + 1)?,
        rhs,
        p,
        3,
        format!("check_cor_3_2(p={p})"),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm35Outcome {
    pub p: u64,
    pub index: usize,
    pub ord_s: Valuation,
    pub ord_f: Valuation,
    pub holds: bool,
}

/// `S_{(p²−1)/2} ≡ f_{(p²−1)/2} ≡ 0 (mod p^2)` for `p ≡ 5, 7 (mod 8)`.
pub fn check_thm_3_5(p: u64) -> Result<Thm35Outcome> {
    require_odd_prime(p)?;
    if p % 8 != 5 && p % 8 != 7 {
        return Err(Error::precondition(format!(
            "check_thm_3_5 needs p = 5, 7 mod 8, got {p}"
        )));
    }
    let index = ((p * p - 1) / 2) as usize;
    let ord_s = ord_int(&clf_s(index)?, p)?;
    let ord_f = ord_int(&franel(index)?, p)?;
    Ok(Thm35Outcome {
        p,
        index,
        ord_s,
        ord_f,
        holds: ord_s.at_least(2) && ord_f.at_least(2),
    })
}

/// `S_n ≡ (n/3) S_{n−1} (mod 3)` for `3 ∤ n`.
pub fn check_eq_3_1(n: u64) -> Result<CongruenceOutcome> {
    if n.is_multiple_of(3) {
        return Err(Error::precondition("check_eq_3_1 needs 3 not dividing n"));
    }
    let symbol = legendre(&rat(n), 3)?;
    let rhs = clf_s(n as usize - 1)? * symbol;
    check(
        clf_s(n as usize)?,
        rhs,
        3,
        1,
        format!("check_eq_3_1(n={n})"),
    )
}

/// `Σ_{t=0}^{(p−1)/2} C(hp + h, sp + t)^3 ≡ 0 (mod p^2)`, `h = (p−1)/2`.
///
/// True for `p ≡ 5, 7 (mod 8)`; for other primes it fails already at `s = 0`.
pub fn check_eq_3_4(s: u64, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    let q = p as i64;
    let h = (q - 1) / 2;
    let top = h * q + h;
    let total: BigInt = (0..=h)
        .map(|t| binom_int(top, s as i64 * q + t).pow(3))
        .sum();
    check(
        total,
        BigInt::zero(),
        p,
        2,
        format!("check_eq_3_4(s={s},p={p})"),
    )
}

/// `S_{mp^r} − S_{mp^(r−1)}` modulo `p^(r+2)`: the `S_{np} − S_n` congruence
/// applied at `n = mp^(r−1)`.
pub fn check_s_mod_p_r_plus_2(m: u64, r: u32, p: u64) -> Result<CongruenceOutcome> {
    require_odd_prime(p)?;
    require_mr(m, r)?;
    let n = m * upow(p, r - 1) as u64;
    Ok(check_thm_3_1(n, p)?.relabel(format!("check_S_mod_p_r_plus_2(m={m},r={r},p={p})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::frac;

    fn ok(o: Result<CongruenceOutcome>) -> CongruenceOutcome {
        let o = o.unwrap();
        assert!(o.holds, "{o}");
        o
    }

    fn res(o: &CongruenceOutcome) -> (i64, i64) {
        let l = o.lhs_residue.clone().unwrap().try_into().unwrap();
        let r = o.rhs_residue.clone().unwrap().try_into().unwrap();
        (l, r)
    }

    #[test]
    fn eq_1_8_examples() {
        let o = ok(check_1_8(4, 3));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(10816), rat(64)));
        assert_eq!(res(&o), (1, 1));
        let o = ok(check_1_8(7, 5));
        assert_eq!(res(&o), (0, 0));
        ok(check_1_8(2, 7));
    }

    #[test]
    fn eq_1_9_examples() {
        let o = ok(check_1_9(1, 5));
        assert_eq!(res(&o), (3, 3));
        let o = ok(check_1_9(0, 3));
        assert_eq!(o.rhs, rat(-80));
        let o = ok(check_1_9(1, 3));
        assert_eq!(res(&o), (2, 2));
        assert!(check_1_9(5, 5).is_err());
    }

    #[test]
    fn eq_1_10_and_1_11_examples() {
        let o = ok(check_1_10(1, 1, 3));
        assert_eq!(o.lhs.clone() - o.rhs.clone(), rat(888));
        ok(check_1_10(1, 2, 3));
        ok(check_1_10(2, 1, 5));
        let o = ok(check_1_11(1, 1, 3));
        assert_eq!(o.achieved_valuation, Valuation::Finite(3));
        let o = ok(check_1_11(1, 1, 5));
        assert_eq!(o.achieved_valuation, Valuation::Finite(2));
        let o = ok(check_1_11(1, 2, 3));
        assert_eq!(o.lhs.clone() - o.rhs.clone(), rat(9_592_992));
        assert!(o.achieved_valuation.at_least(4));
    }

    #[test]
    fn p_lift_examples() {
        let o = ok(check_p_lift(1, 1, 3));
        assert_eq!(o.lhs.clone() - o.rhs.clone(), rat(864));
        assert_eq!(o.achieved_valuation, Valuation::Finite(3));
        let o = ok(check_p_lift(1, 1, 5));
        assert_eq!(o.lhs.clone() - o.rhs.clone(), rat(137_600));
        assert_eq!(o.achieved_valuation, Valuation::Finite(2));
        let o = ok(check_p_lift(1, 2, 3));
        assert!(o.achieved_valuation.at_least(4));
    }

    #[test]
    fn eq_1_13_examples() {
        let o = ok(check_1_13(&rat(1), 5));
        assert_eq!(res(&o), (0, 0));
        let o = ok(check_1_13(&rat(-17), 5));
        assert_eq!(res(&o), (3, 3));
        let o = ok(check_1_13(&rat(1), 3));
        assert_eq!(res(&o), (2, 2));
        ok(check_1_13(&frac(1, 2), 7));
        assert!(check_1_13(&rat(5), 5).is_err());
        assert!(check_1_13(&rat(4), 5).is_err());
    }

    #[test]
    fn scan_examples() {
        let rows = scan_1_14(5, 2).unwrap();
        assert_eq!(rows[0].index, 2);
        assert!(rows.iter().all(|r| r.conjecture_holds));
        assert_eq!(rows[1].index, 12);
        let rows = scan_1_14(7, 1).unwrap();
        assert_eq!(rows[0].ord_s, Valuation::Finite(1));
        assert!(scan_1_14(3, 1).is_err());
        assert!(scan_1_14(17, 1).is_err());
    }

    #[test]
    fn thm_3_1_examples() {
        let o = ok(check_thm_3_1(1, 5));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(4300), rat(-200)));
        let o = ok(check_thm_3_1(2, 3));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(28476), rat(180)));
        assert_eq!(res(&o), (18, 18));
        let o = ok(check_thm_3_1(3, 3));
        assert_eq!(o.required_valuation, 4);
    }

    #[test]
    fn cor_3_1_examples() {
        let os = check_cor_3_1(5).unwrap();
        assert_eq!(os.len(), 3);
        assert!(os.iter().all(|o| o.holds));
        assert_eq!(os[0].rhs, rat(-196));
        assert_eq!(res(&os[0]), (54, 54));
        assert_eq!(os[1].rhs, rat(20 - 3200));
        let os = check_cor_3_1(7).unwrap();
        assert_eq!(os[0].rhs, rat(4 - 1960));
        assert!(os.iter().all(|o| o.holds));
        assert!(check_cor_3_1(3).is_err());
    }

    #[test]
    fn thm_3_2_examples() {
        let o = ok(check_thm_3_2(1, 1, 3));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(676), rat(64)));
        let o = ok(check_thm_3_2(1, 1, 5));
        assert_eq!(res(&o), (21, 21));
        let o = ok(check_thm_3_2(2, 1, 3));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(194_240), rat(560)));
    }

    #[test]
    fn thm_3_3_examples() {
        let o = ok(check_thm_3_3(1, 1, 3));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(20), rat(-1)));
        let o = ok(check_thm_3_3(1, 1, 5));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(676), rat(1)));
        let o = ok(check_thm_3_3(1, 2, 3));
        assert_eq!((o.lhs.clone(), o.rhs.clone()), (rat(1_353_508), rat(-20)));
        assert_eq!(res(&o), (7, 7));
    }

    #[test]
    fn thm_3_4_examples() {
        let o = ok(check_thm_3_4(1, 3));
        assert_eq!(o.rhs, rat(28));
        let o = ok(check_thm_3_4(1, 5));
        assert_eq!(o.rhs, rat(-1504));
        assert_eq!(res(&o), (121, 121));
        let o = ok(check_thm_3_4(2, 3));
        assert_eq!(o.rhs, rat(-160));
        assert_eq!(res(&o), (2, 2));
    }

    #[test]
    fn cor_3_2_examples() {
        let o = ok(check_cor_3_2(5));
        assert_eq!(o.rhs, rat(-1504));
        let o = ok(check_cor_3_2(7));
        assert_eq!(o.rhs, rat(-6144));
        assert_eq!(res(&o), (30, 30));
        ok(check_cor_3_2(11));
        assert!(check_cor_3_2(3).is_err());
    }

    #[test]
    fn thm_3_5_examples() {
        for (p, index) in [(5, 12), (7, 24), (13, 84)] {
            let o = check_thm_3_5(p).unwrap();
            assert_eq!(o.index, index);
            assert!(o.holds, "{o:?}");
        }
        assert!(check_thm_3_5(11).is_err());
    }

    #[test]
    fn eq_3_1_examples() {
        let o = ok(check_eq_3_1(1));
        assert_eq!(o.rhs, rat(1));
        let o = ok(check_eq_3_1(2));
        assert_eq!(o.rhs, rat(-4));
        let o = ok(check_eq_3_1(4));
        assert_eq!(o.rhs, rat(112));
        assert!(check_eq_3_1(3).is_err());
    }

    #[test]
    fn eq_3_4_examples() {
        let o = ok(check_eq_3_4(0, 5));
        assert_eq!(o.lhs, rat(289_225));
        ok(check_eq_3_4(1, 5));
        ok(check_eq_3_4(0, 7));
    }

    #[test]
    fn s_mod_p_r_plus_2_examples() {
        let o = ok(check_s_mod_p_r_plus_2(1, 2, 3));
        assert_eq!(o.required_valuation, 4);
        let o = ok(check_s_mod_p_r_plus_2(1, 1, 5));
        let t = check_thm_3_1(1, 5).unwrap();
        assert_eq!(
            (o.lhs, o.rhs, o.achieved_valuation),
            (t.lhs, t.rhs, t.achieved_valuation)
        );
        ok(check_s_mod_p_r_plus_2(2, 2, 3));
    }
}
