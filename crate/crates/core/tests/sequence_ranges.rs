use clf_core::sequences::{
    clf_p, clf_p_closed, clf_s, clf_s_closed, franel, franel_sum, identity_1_12_first,
    identity_1_12_second, identity_2_2, log_convexity, PForm, SForm,
};
use num_bigint::BigInt;
use rayon::prelude::*;

#[test]
fn closed_forms_agree_with_recurrences() {
    (0..=200usize).into_par_iter().for_each(|n| {
        for form in SForm::ALL {
            if form == SForm::Halved && n == 0 {
                continue;
            }
            assert_eq!(
                clf_s_closed(n, form).unwrap(),
                clf_s(n).unwrap(),
                "S_{n} via {form:?}"
            );
        }
        for form in PForm::ALL {
            assert_eq!(
                clf_p_closed(n, form).unwrap(),
                clf_p(n).unwrap(),
                "P_{n} via {form:?}"
            );
        }
        assert_eq!(franel_sum(n), franel(n).unwrap(), "f_{n}");
    });
}

#[test]
fn p_is_s_scaled_by_powers_of_two() {
    for n in 0..=1000usize {
        assert_eq!(clf_p(n).unwrap(), clf_s(n).unwrap() << n, "n = {n}");
    }
}

#[test]
fn product_identities() {
    (0..=200usize).into_par_iter().for_each(|n| {
        assert!(identity_1_12_first(n).unwrap(), "first sum identity at {n}");
        assert!(identity_2_2(n), "binomial sum identity at {n}");
    });
    (0..=60usize).into_par_iter().for_each(|n| {
        assert!(
            identity_1_12_second(n).unwrap(),
            "second sum identity at {n}"
        );
    });
}

#[test]
fn strict_log_convexity_bounds() {
    for m in 2..=500 {
        let lc = log_convexity(m).unwrap();
        assert!(lc.lower_strict && lc.upper_strict, "m = {m}: {lc:?}");
    }
}

#[test]
fn franel_opening_terms() {
    let expected = [1u64, 2, 10, 56, 346, 2252, 15184, 104960, 739162];
    for (n, &v) in expected.iter().enumerate() {
        assert_eq!(franel(n).unwrap(), BigInt::from(v));
    }
}
