//! Range runners shared by the per-module suites and the acceptance target.
#![allow(dead_code)]

use std::fmt;

use clf_core::exact_arith::{frac, is_prime, rat, CongruenceOutcome, Rational};
use clf_core::lemma_checks::*;
use clf_core::{Error, Result};
use rayon::prelude::*;

/// Verdict counts over one parameter range.
#[derive(Debug, Default)]
pub struct Tally {
    pub name: String,
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn clean(&self) -> bool {
        self.failures.is_empty() && self.passed > 0
    }

    #[track_caller]
    pub fn assert_clean(&self) {
        assert!(self.clean(), "{self}");
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} passed, {} skipped, {} failed",
            self.name,
            self.passed,
            self.skipped,
            self.failures.len()
        )?;
        for line in self.failures.iter().take(5) {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

/// Evaluate `f` on every cell in parallel. Precondition violations count as skipped.
pub fn tally<T: Sync>(
    name: impl Into<String>,
    cells: &[T],
    f: impl Fn(&T) -> Result<CongruenceOutcome> + Sync,
) -> Tally {
    let verdicts: Vec<std::result::Result<Option<String>, ()>> = cells
        .par_iter()
        .map(|c| match f(c) {
            Ok(o) if o.holds => Ok(None),
            Ok(o) => Ok(Some(o.to_string())),
            Err(Error::PreconditionViolated(_)) => Err(()),
            Err(e) => Ok(Some(format!("error: {e}"))),
        })
        .collect();
    let mut t = Tally {
        name: name.into(),
        ..Tally::default()
    };
    for v in verdicts {
        match v {
            Ok(None) => t.passed += 1,
            Ok(Some(msg)) => t.failures.push(msg),
            Err(()) => t.skipped += 1,
        }
    }
    t
}

pub fn merge(name: &str, parts: Vec<Tally>) -> Tally {
    let mut t = Tally {
        name: name.into(),
        ..Tally::default()
    };
    for part in parts {
        t.passed += part.passed;
        t.skipped += part.skipped;
        t.failures.extend(
            part.failures
                .into_iter()
                .map(|f| format!("[{}] {f}", part.name)),
        );
    }
    t
}

pub fn pairs(a_lo: u64, a_hi: u64, b_lo: u64, b_hi: u64) -> Vec<(u64, u64)> {
    (a_lo..=a_hi)
        .flat_map(|a| (b_lo..=b_hi).map(move |b| (a, b)))
        .collect()
}

/// `(a, b)` with `lo ≤ b ≤ a ≤ hi`.
pub fn triangle(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    (lo..=hi)
        .flat_map(|a| (lo..=a).map(move |b| (a, b)))
        .collect()
}

pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

pub mod lemmas {
    use super::*;

    pub fn lucas() -> Tally {
        let cells = triangle(0, 400);
        let parts = [3, 5, 7, 11, 13].map(|p| {
            tally(format!("p={p}"), &cells, |&(a, b)| {
                lucas_reduce(a, b, p).map(|l| l.outcome)
            })
        });
        merge("lucas_reduce", parts.into())
    }

    pub fn digit_split() -> Tally {
        let parts = [3u64, 5, 7].map(|p| {
            let mut cells = Vec::new();
            for (a, b) in pairs(1, 12, 1, 12) {
                for (a0, b0) in pairs(0, p - 1, 0, p - 1) {
                    cells.push((a, b, a0, b0));
                }
            }
            tally(format!("p={p}"), &cells, |&(a, b, a0, b0)| {
                check_lemma_2_2(a, b, a0, b0, p)
            })
        });
        merge("check_lemma_2_2", parts.into())
    }

    pub fn kazandzidis() -> Tally {
        let cells = pairs(1, 8, 1, 8);
        let parts = [5, 7, 11].map(|p| {
            tally(format!("p={p}"), &cells, |&(m, n)| {
                check_kazandzidis(m, n, p)
            })
        });
        merge("check_kazandzidis", parts.into())
    }

    pub fn lemma_2_4() -> Tally {
        let parts = [5u64, 7, 11, 13].map(|p| {
            let cells: Vec<u64> = (1..p).collect();
            tally(format!("p={p}"), &cells, |&k| check_lemma_2_4(k, p))
        });
        merge("check_lemma_2_4", parts.into())
    }

    pub fn lemma_2_5() -> Tally {
        let parts = [5u64, 7, 11].map(|p| {
            let mut values: Vec<Rational> = (1..p as i64).map(rat).collect();
            values.push(frac(-1, 2));
            values.push(frac(1, 3));
            let cells: Vec<(Rational, u64)> = values
                .iter()
                .flat_map(|a| (1..=p - 2).map(move |k| (a.clone(), k)))
                .collect();
            tally(format!("p={p}"), &cells, |(a, k)| check_lemma_2_5(a, *k, p))
        });
        merge("check_lemma_2_5", parts.into())
    }

    pub fn lemma_2_6() -> Tally {
        let parts = [3u64, 5, 7, 11].map(|p| {
            let cells = pairs(1, 5, p / 2 + 1, p - 1);
            tally(format!("p={p}"), &cells, |&(m, k)| check_lemma_2_6(m, k, p))
        });
        merge("check_lemma_2_6", parts.into())
    }

    /// Exact identities, so each cell is a plain boolean.
    pub fn lemma_2_8() -> Tally {
        let mut t = Tally {
            name: "check_lemma_2_8".into(),
            ..Tally::default()
        };
        for p in [3u64, 5] {
            for m in 1..=4 {
                for r in 1..=3 {
                    for k in 0..=3 * p {
                        match check_lemma_2_8(m, r, k, p) {
                            Ok(true) => t.passed += 1,
                            Ok(false) => t.failures.push(format!("m={m} r={r} k={k} p={p}")),
                            Err(e) => t.failures.push(format!("m={m} r={r} k={k} p={p}: {e}")),
                        }
                    }
                }
            }
        }
        t
    }

    pub fn lemma_2_9() -> Tally {
        tally("check_lemma_2_9", &pairs(1, 30, 1, 30), |&(m, n)| {
            check_lemma_2_9(m, n)
        })
    }

    /// `(m, r, s)` with `m ≤ 3`, `r ≤ 3`, `lo ≤ s ≤ hi(mp^(r−1))`.
    fn lifted(p: u64, lo: u64, hi: impl Fn(u64) -> u64) -> Vec<(u64, u32, u64)> {
        let mut cells = Vec::new();
        for m in 1..=3u64 {
            for r in 1..=3u32 {
                let small = m * p.pow(r - 1);
                cells.extend((lo..=hi(small)).map(|s| (m, r, s)));
            }
        }
        cells
    }

    pub fn lifted_binomials() -> Tally {
        let mut parts = Vec::new();
        for p in [3u64, 5, 7] {
            let below = lifted(p, 0, |small| small - 1);
            parts.push(tally(format!("2.10 p={p}"), &below, |&(m, r, s)| {
                check_lemma_2_10(m, r, s, p)
            }));
            parts.push(tally(format!("2.13 p={p}"), &below, |&(m, r, s)| {
                check_lemma_2_13(m, r, s, p)
            }));
            parts.push(tally(format!("2.14 p={p}"), &below, |&(m, r, s)| {
                check_lemma_2_14(m, r, s, p)
            }));
            let upto = lifted(p, 1, |small| small);
            parts.push(tally(format!("2.11 p={p}"), &upto, |&(m, r, s)| {
                check_lemma_2_11(m, r, s, p)
            }));
            let ks = lifted(p, 0, |small| small * p);
            parts.push(tally(format!("2.12 p={p}"), &ks, |&(m, r, k)| {
                check_lemma_2_12(m, r, k, p)
            }));
        }
        merge("check_lemma_2_10..2_14", parts)
    }

    pub fn lemma_2_15() -> Tally {
        let parts = [3u64, 5, 7].map(|p| {
            let cells = triangle(p, 4 * p * p);
            tally(format!("p={p}"), &cells, |&(n, k)| {
                check_lemma_2_15(n, k, p)
            })
        });
        merge("check_lemma_2_15", parts.into())
    }

    pub fn lemma_2_16() -> Tally {
        tally("check_lemma_2_16", &primes_between(3, 37), |&p| {
            check_lemma_2_16(p)
        })
    }

    pub fn harmonic() -> Tally {
        let cells: Vec<(u64, u64)> = primes_between(3, 37)
            .into_iter()
            .flat_map(|p| (1..=30).map(move |s| (s, p)))
            .collect();
        tally("check_harmonic_2_3", &cells, |&(s, p)| {
            check_harmonic_2_3(s, p)
        })
    }

    pub fn all() -> Vec<Tally> {
        vec![
            lucas(),
            digit_split(),
            kazandzidis(),
            lemma_2_4(),
            lemma_2_5(),
            lemma_2_6(),
            lemma_2_8(),
            lemma_2_9(),
            lifted_binomials(),
            lemma_2_15(),
            lemma_2_16(),
            harmonic(),
        ]
    }
}

/// `(m, r, p)`: `m ≤ 5, r ≤ 3` for `p ∈ {3,5,7}` and `m ≤ 3, r ≤ 2` for `p ∈ {11,13}`.
pub fn lift_grid() -> Vec<(u64, u32, u64)> {
    let mut cells = Vec::new();
    for (primes, m_max, r_max) in [(&[3u64, 5, 7][..], 5, 3), (&[11, 13][..], 3, 2)] {
        for &p in primes {
            for m in 1..=m_max {
                for r in 1..=r_max {
                    cells.push((m, r, p));
                }
            }
        }
    }
    cells
}
