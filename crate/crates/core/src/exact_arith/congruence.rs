use std::fmt;

use num_bigint::BigInt;

use super::residue::{is_zero_mod, residue};
use super::{ord, PrimePower, Rational, Valuation};
use crate::error::{Error, Result};

/// Verdict of one `lhs ≡ rhs (mod p^k)` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceOutcome {
    pub label: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub modulus: PrimePower,
    pub required_valuation: i64,
    /// `ord_p(lhs − rhs)`.
    pub achieved_valuation: Valuation,
    pub holds: bool,
    /// Residues modulo `p^k`; `None` when a side is not p-integral on its own.
    pub lhs_residue: Option<BigInt>,
    pub rhs_residue: Option<BigInt>,
}

impl CongruenceOutcome {
    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl fmt::Display for CongruenceOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: ord_{}(lhs - rhs) = {} (need {}) {}",
            self.label,
            self.modulus.p(),
            self.achieved_valuation,
            self.required_valuation,
            if self.holds { "ok" } else { "FAIL" }
        )
    }
}

/// `a ≡ b (mod p^k)` in the sense `ord_p(a − b) ≥ k`.
pub fn congruent(
    a: &Rational,
    b: &Rational,
    pp: &PrimePower,
    label: impl Into<String>,
) -> Result<CongruenceOutcome> {
    let diff = a - b;
    let achieved = ord(&diff, pp.p())?;
    if achieved < Valuation::Finite(0) {
        return Err(Error::DenominatorNotInvertible {
            denominator: diff.denom().to_string(),
            p: pp.p(),
        });
    }
    let required = i64::from(pp.k());
    Ok(CongruenceOutcome {
        label: label.into(),
        lhs_residue: residue(a, pp).ok(),
        rhs_residue: residue(b, pp).ok(),
        lhs: a.clone(),
        rhs: b.clone(),
        modulus: pp.clone(),
        required_valuation: required,
        achieved_valuation: achieved,
        holds: achieved.at_least(required),
    })
}

/// `lhs ≡ rhs (mod modulus)` for a general positive integer modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityOutcome {
    pub label: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub modulus: BigInt,
    pub holds: bool,
}

impl DivisibilityOutcome {
    pub fn new(label: impl Into<String>, lhs: BigInt, rhs: BigInt, modulus: BigInt) -> Self {
        let holds = is_zero_mod(&(&lhs - &rhs), &modulus);
        DivisibilityOutcome {
            label: label.into(),
            lhs,
            rhs,
            modulus,
            holds,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{frac, rat};

    fn pp(p: u64, k: u32) -> PrimePower {
        PrimePower::new(p, k).unwrap()
    }

    #[test]
    fn spec_examples() {
        let o = congruent(&frac(-575, 32), &rat(0), &pp(5, 2), "sum").unwrap();
        assert!(o.holds);
        assert_eq!(o.achieved_valuation, Valuation::Finite(2));

        let o = congruent(&rat(252), &rat(2), &pp(5, 3), "kaz").unwrap();
        assert!(o.holds);
        assert_eq!(o.achieved_valuation, Valuation::Finite(3));
        assert_eq!(o.lhs_residue, Some(BigInt::from(2)));

        assert!(congruent(&rat(4), &rat(1), &pp(3, 1), "t").unwrap().holds);
    }

    #[test]
    fn equal_sides_have_infinite_valuation() {
        let o = congruent(&frac(2, 3), &frac(2, 3), &pp(3, 5), "eq").unwrap();
        assert!(o.holds);
        assert!(o.achieved_valuation.is_infinite());
        assert_eq!(o.lhs_residue, None);
    }

    #[test]
    fn failing_congruence_records_valuation() {
        let o = congruent(&rat(10), &rat(1), &pp(3, 3), "f").unwrap();
        assert!(!o.holds);
        assert_eq!(o.achieved_valuation, Valuation::Finite(2));
        assert_eq!(o.lhs_residue, Some(BigInt::from(10)));
        assert_eq!(o.rhs_residue, Some(BigInt::from(1)));
    }

    #[test]
    fn non_integral_difference_is_an_error() {
        let err = congruent(&frac(1, 5), &rat(0), &pp(5, 1), "x").unwrap_err();
        assert!(matches!(err, Error::DenominatorNotInvertible { .. }));
    }

    #[test]
    fn divisibility_with_general_modulus() {
        let o = DivisibilityOutcome::new(
            "l31",
            BigInt::from(4304),
            BigInt::from(13520),
            BigInt::from(16),
        );
        assert!(o.holds);
        assert!(
            !DivisibilityOutcome::new("x", BigInt::from(5), BigInt::from(0), BigInt::from(4)).holds
        );
    }
}
