use clf_core::exact_arith::{
    binom, binom_int, congruent, frac, legendre, ord, rat, residue, PrimePower, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

const PRIMES: [u64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

fn prime() -> impl Strategy<Value = u64> {
    proptest::sample::select(PRIMES.to_vec())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-5000i64..5000, 1i64..5000)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #[test]
    fn valuation_is_additive(x in nonzero_rational(), y in nonzero_rational(), p in prime()) {
        let lhs = ord(&(&x * &y), p).unwrap().finite().unwrap();
        let rhs = ord(&x, p).unwrap().finite().unwrap() + ord(&y, p).unwrap().finite().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn congruence_matches_residues(
        a in -100_000i64..100_000, da in 1i64..500,
        b in -100_000i64..100_000, db in 1i64..500,
        p in prime(), k in 1u32..5,
    ) {
        prop_assume!(da % p as i64 != 0 && db % p as i64 != 0);
        let (x, y) = (frac(a, da), frac(b, db));
        let pp = PrimePower::new(p, k).unwrap();
        let verdict = congruent(&x, &y, &pp, "prop").unwrap().holds;
        prop_assert_eq!(verdict, residue(&x, &pp).unwrap() == residue(&y, &pp).unwrap());
    }

    #[test]
    fn residues_are_normalized(a in -100_000i64..100_000, d in 1i64..500, p in prime(), k in 1u32..4) {
        prop_assume!(d % p as i64 != 0);
        let pp = PrimePower::new(p, k).unwrap();
        let r = residue(&frac(a, d), &pp).unwrap();
        prop_assert!(r >= BigInt::zero() && r < pp.modulus());
    }

    #[test]
    fn pascal_rule(n in -300i64..300, d in 1i64..40, k in 1i64..25) {
        let x = frac(n, d);
        let one = Rational::one();
        prop_assert_eq!(binom(&x, k), binom(&(&x - &one), k) + binom(&(&x - &one), k - 1));
    }

    #[test]
    fn legendre_is_multiplicative(a in 1i64..10_000, b in 1i64..10_000, p in prime()) {
        let q = p as i64;
        prop_assume!(a % q != 0 && b % q != 0);
        let la = legendre(&rat(a), p).unwrap();
        let lb = legendre(&rat(b), p).unwrap();
        prop_assert_eq!(la * lb, legendre(&rat(a * b), p).unwrap());
    }
}

#[test]
fn integer_binomials_match_factorials() {
    let mut fact = vec![BigInt::one()];
    for i in 1..=200u32 {
        let next = &fact[i as usize - 1] * i;
        fact.push(next);
    }
    for n in 0..=200usize {
        for k in 0..=n {
            let oracle = &fact[n] / (&fact[k] * &fact[n - k]);
            assert_eq!(binom_int(n as i64, k as i64), oracle, "C({n},{k})");
            assert_eq!(
                binom(&rat(n as i64), k as i64),
                Rational::from_integer(oracle)
            );
        }
    }
}
