use clf_core::exact_arith::is_prime;
use clf_core::exact_arith::{frac, rat};
use clf_core::special_numbers::{
    alt_power_sum_check, bernoulli, euler_number, euler_poly, power_sum_check, staudt_clausen_check,
};
use num_traits::Zero;

#[test]
fn euler_numbers_from_polynomials() {
    let half = frac(1, 2);
    for n in 0..=40usize {
        let scaled = euler_poly(n, &half) * rat(num_bigint::BigInt::from(1) << n);
        assert_eq!(scaled, rat(euler_number(n)), "n = {n}");
    }
}

#[test]
fn power_sums() {
    for m in 0..=12 {
        for n in 1..=50 {
            assert!(power_sum_check(m, n), "m={m} n={n}");
            assert!(alt_power_sum_check(m, n), "alt m={m} n={n}");
        }
    }
}

#[test]
fn von_staudt_clausen() {
    for k in 1..=30 {
        for p in (3..=50).filter(|&p| is_prime(p)) {
            assert!(staudt_clausen_check(k, p).unwrap(), "2k={} p={p}", 2 * k);
        }
    }
}

#[test]
fn vanishing_odd_terms() {
    for k in 1..=30 {
        assert!(bernoulli(2 * k + 1).is_zero(), "B_{}", 2 * k + 1);
        assert!(euler_number(2 * k - 1).is_zero(), "E_{}", 2 * k - 1);
    }
}
