//! Check names, their parameter grids and their evaluators.

use std::fmt;

use num_bigint::BigInt;

use super::config::CampaignConfig;
use super::report::{ParamValue, Record};
use crate::error::{Error, Result};
use crate::exact_arith::{frac, rat, CongruenceOutcome, Rational, Valuation};
use crate::lemma_checks as lc;
use crate::sequences::{clf_s, franel};
use crate::theorem_checks as tc;

macro_rules! checks {
    ($($variant:ident => $name:literal [$($param:literal),*],)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Check { $($variant,)* }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(Check::$variant => $name,)* }
            }

            /// Names of the grid coordinates, in key order.
            pub fn param_names(self) -> &'static [&'static str] {
                match self { $(Check::$variant => &[$($param),*],)* }
            }
        }
    };
}

checks! {
    LucasReduce => "lucas_reduce" ["a", "b"],
    Lemma22 => "check_lemma_2_2" ["a", "b", "a0", "b0"],
    Kazandzidis => "check_kazandzidis" ["m", "n"],
    Lemma24 => "check_lemma_2_4" ["k"],
    Lemma25 => "check_lemma_2_5" ["a", "k"],
    Lemma26 => "check_lemma_2_6" ["m", "k"],
    Lemma28 => "check_lemma_2_8" ["m", "r", "k"],
    Lemma29 => "check_lemma_2_9" ["m", "n"],
    Lemma210 => "check_lemma_2_10" ["m", "r", "s"],
    Lemma211 => "check_lemma_2_11" ["m", "r", "s"],
    Lemma212 => "check_lemma_2_12" ["m", "r", "k"],
    Lemma213 => "check_lemma_2_13" ["m", "r", "s"],
    Lemma214 => "check_lemma_2_14" ["m", "r", "s"],
    Lemma215 => "check_lemma_2_15" ["n", "k"],
    Lemma216 => "check_lemma_2_16" [],
    Harmonic23 => "check_harmonic_2_3" ["s"],
    Eq18 => "check_1_8" ["n"],
    Eq19 => "check_1_9" ["n"],
    Eq110 => "check_1_10" ["m", "r"],
    Eq111 => "check_1_11" ["m", "r"],
    PLift => "check_P_lift" ["m", "r"],
    Eq113 => "check_1_13" ["n"],
    Thm31 => "check_thm_3_1" ["n"],
    Cor31 => "check_cor_3_1" [],
    Thm32 => "check_thm_3_2" ["m", "r"],
    Thm33 => "check_thm_3_3" ["m", "r"],
    Thm34 => "check_thm_3_4" ["n"],
    Cor32 => "check_cor_3_2" [],
    Thm35 => "check_thm_3_5" [],
    Eq31 => "check_eq_3_1" ["n"],
    Eq34 => "check_eq_3_4" ["s"],
    SModPrPlus2 => "check_S_mod_p_r_plus_2" ["m", "r"],
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One grid cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub check: Check,
    pub p: u64,
    pub args: Vec<ParamValue>,
}

/// Outcome of evaluating a cell.
#[derive(Clone, Debug)]
pub enum CellResult {
    Records(Vec<Record>),
    Skipped,
}

impl Check {
    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.iter().copied().find(|c| c.name() == name)
    }

    /// Checks whose statement does not involve a free prime; run once at `p = 3`.
    fn fixed_prime(self) -> Option<u64> {
        matches!(self, Check::Lemma29 | Check::Eq31).then_some(3)
    }

    /// The grid for this check under `cfg`, in generation order.
    pub fn cases(self, cfg: &CampaignConfig) -> Vec<Case> {
        let primes: Vec<u64> = match self.fixed_prime() {
            Some(p) => vec![p],
            None => cfg.primes.clone(),
        };
        let mut out = Vec::new();
        for p in primes {
            for args in self.grid(p, cfg) {
                out.push(Case {
                    check: self,
                    p,
                    args,
                });
            }
        }
        out
    }

    fn grid(self, p: u64, cfg: &CampaignConfig) -> Vec<Vec<ParamValue>> {
        use Check::*;
        let (mm, rm, nm) = (cfg.m_max, cfg.r_max, cfg.n_max);
        let int = |v: u64| ParamValue::Int(v as i64);
        let mr = || (1..=mm).flat_map(move |m| (1..=rm).map(move |r| (m, r)));
        let mr_inner = |lo: u64, hi_of: &dyn Fn(u64, u32) -> u64| -> Vec<Vec<ParamValue>> {
            mr().flat_map(|(m, r)| {
                (lo..=hi_of(m, r)).map(move |x| vec![int(m), ParamValue::Int(i64::from(r)), int(x)])
            })
            .collect()
        };
        // mp^(r−1), saturating so huge grids are simply large rather than wrapping
        let small = |m: u64, r: u32| m.saturating_mul(p.saturating_pow(r - 1));
        match self {
            LucasReduce => (0..=nm)
                .flat_map(|a| (0..=a).map(move |b| vec![int(a), int(b)]))
                .collect(),
            Lemma22 => {
                let mut v = Vec::new();
                for a in 1..=mm {
                    for b in 1..=mm {
                        for a0 in 0..p {
                            for b0 in 0..p {
                                v.push(vec![int(a), int(b), int(a0), int(b0)]);
                            }
                        }
                    }
                }
                v
            }
            Kazandzidis | Lemma29 => (1..=mm)
                .flat_map(|m| (1..=nm).map(move |n| vec![int(m), int(n)]))
                .collect(),
            Lemma24 => (1..p).map(|k| vec![int(k)]).collect(),
            Lemma25 => {
                let mut values: Vec<Rational> = (1..p as i64).map(rat).collect();
                values.push(frac(-1, 2));
                if p != 3 {
                    values.push(frac(1, 3));
                }
                values.sort();
                values
                    .into_iter()
                    .flat_map(|a| {
                        (1..p.saturating_sub(1))
                            .map(move |k| vec![ParamValue::Rat(a.clone()), int(k)])
                    })
                    .collect()
            }
            Lemma26 => (1..=mm)
                .flat_map(|m| (p / 2 + 1..p).map(move |k| vec![int(m), int(k)]))
                .collect(),
            Lemma28 => mr_inner(0, &|_, _| nm),
            Lemma210 | Lemma213 | Lemma214 => mr_inner(0, &|m, r| small(m, r) - 1),
            Lemma211 => mr_inner(1, &|m, r| small(m, r)),
            Lemma212 => mr_inner(0, &|m, r| small(m, r).saturating_mul(p)),
            Lemma215 => (0..=nm)
                .flat_map(|n| (0..=n).map(move |k| vec![int(n), int(k)]))
                .collect(),
            Lemma216 | Cor31 | Cor32 | Thm35 => vec![vec![]],
            Harmonic23 | Thm31 | Thm34 | Eq31 => (1..=nm).map(|n| vec![int(n)]).collect(),
            Eq18 => (0..=nm).map(|n| vec![int(n)]).collect(),
            Eq19 | Eq113 => (0..p).map(|n| vec![int(n)]).collect(),
            Eq110 | Eq111 | PLift | Thm32 | Thm33 | SModPrPlus2 => mr()
                .map(|(m, r)| vec![int(m), ParamValue::Int(i64::from(r))])
                .collect(),
            Eq34 => (0..=(p - 1) / 2).map(|s| vec![int(s)]).collect(),
        }
    }

    /// Largest `S`/`P` index and largest Franel index touched by this check.
    pub fn max_indices(self, p: u64, cfg: &CampaignConfig) -> (usize, usize) {
        use Check::*;
        let lifted = || {
            cfg.m_max
                .saturating_mul(p.saturating_pow(cfg.r_max))
                .saturating_add(1)
        };
        let s = match self {
            Eq18 => cfg.n_max,
            Eq19 | Eq113 => p,
            Eq110 | Eq111 | PLift | Thm32 | Thm33 | SModPrPlus2 => lifted(),
            Thm31 | Thm34 => cfg.n_max.saturating_mul(p).saturating_add(1),
            Cor31 => 3 * p,
            Cor32 => p + 1,
            Thm35 => (p * p - 1) / 2,
            Eq31 => cfg.n_max,
            _ => 0,
        };
        let f = if self == Thm35 { (p * p - 1) / 2 } else { 0 };
        (s as usize, f as usize)
    }

    /// Evaluate one cell; precondition failures become [`CellResult::Skipped`].
    pub fn evaluate(self, case: &Case) -> Result<CellResult> {
        match self.run(case) {
            Err(Error::PreconditionViolated(_)) => Ok(CellResult::Skipped),
            other => other.map(CellResult::Records),
        }
    }

    fn run(self, case: &Case) -> Result<Vec<Record>> {
        use Check::*;
        let p = case.p;
        let u = |i: usize| case.args[i].as_u64();
        let r = |i: usize| u(i) as u32;
        let one =
            |o: Result<CongruenceOutcome>| o.map(|o| vec![Record::from_outcome(case, &o, &[])]);
        match self {
            LucasReduce => one(lc::lucas_reduce(u(0), u(1), p).map(|l| l.outcome)),
            Lemma22 => one(lc::check_lemma_2_2(u(0), u(1), u(2), u(3), p)),
            Kazandzidis => one(lc::check_kazandzidis(u(0), u(1), p)),
            Lemma24 => one(lc::check_lemma_2_4(u(0), p)),
            Lemma25 => {
                let a = case.args[0].as_rational();
                one(lc::check_lemma_2_5(&a, u(1), p))
            }
            Lemma26 => one(lc::check_lemma_2_6(u(0), u(1), p)),
            Lemma28 => {
                let holds = lc::check_lemma_2_8(u(0) as i64, r(1), u(2), p)?;
                Ok(vec![Record::exact(case, holds)])
            }
            Lemma29 => one(lc::check_lemma_2_9(u(0), u(1))),
            Lemma210 => one(lc::check_lemma_2_10(u(0), r(1), u(2), p)),
            Lemma211 => one(lc::check_lemma_2_11(u(0), r(1), u(2), p)),
            Lemma212 => one(lc::check_lemma_2_12(u(0), r(1), u(2), p)),
            Lemma213 => one(lc::check_lemma_2_13(u(0), r(1), u(2), p)),
            Lemma214 => one(lc::check_lemma_2_14(u(0), r(1), u(2), p)),
            Lemma215 => one(lc::check_lemma_2_15(u(0), u(1), p)),
            Lemma216 => one(lc::check_lemma_2_16(p)),
            Harmonic23 => one(lc::check_harmonic_2_3(u(0), p)),
            Eq18 => one(tc::check_1_8(u(0), p)),
            Eq19 => one(tc::check_1_9(u(0), p)),
            Eq110 => one(tc::check_1_10(u(0), r(1), p)),
            Eq111 => one(tc::check_1_11(u(0), r(1), p)),
            PLift => one(tc::check_p_lift(u(0), r(1), p)),
            Eq113 => one(tc::check_1_13(&rat(u(0) as i64), p)),
            Thm31 => one(tc::check_thm_3_1(u(0), p)),
            Cor31 => Ok(tc::check_cor_3_1(p)?
                .iter()
                .zip(1i64..)
                .map(|(o, j)| Record::from_outcome(case, o, &[("j", ParamValue::Int(j))]))
                .collect()),
            Thm32 => one(tc::check_thm_3_2(u(0), r(1), p)),
            Thm33 => one(tc::check_thm_3_3(u(0), r(1), p)),
            Thm34 => one(tc::check_thm_3_4(u(0), p)),
            Cor32 => one(tc::check_cor_3_2(p)),
            Thm35 => {
                let o = tc::check_thm_3_5(p)?;
                let index = ParamValue::Int(o.index as i64);
                let square = u128::from(p) * u128::from(p);
                let reduce = |v: BigInt| v % square;
                let rows: [(&str, BigInt, Valuation); 2] = [
                    ("S", reduce(clf_s(o.index)?), o.ord_s),
                    ("F", reduce(franel(o.index)?), o.ord_f),
                ];
                Ok(rows
                    .into_iter()
                    .map(|(seq, value, v)| {
                        let extra = [
                            ("index", index.clone()),
                            ("sequence", ParamValue::Text(seq.into())),
                        ];
                        Record::vanishing(case, &extra, 2, value, v)
                    })
                    .collect())
            }
            Eq31 => one(tc::check_eq_3_1(u(0))),
            Eq34 => one(tc::check_eq_3_4(u(0), p)),
            SModPrPlus2 => one(tc::check_s_mod_p_r_plus_2(u(0), r(1), p)),
        }
    }
}
